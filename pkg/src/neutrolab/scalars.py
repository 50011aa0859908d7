"""Modular arithmetic for indeterminacy-extended residues a + bI, where I*I = I.

Elements are pairs (a, b) of ints taken mod n, standing for a + bI.  The
indeterminate I is idempotent and absorbs into products: the product rule
comes from expanding (a+bI)(c+dI) with I*I = I, so 0*I collapses to 0.
"""

import re

ZERO = (0, 0)
ONE = (1, 0)
I = (0, 1)

CLASS_ZERO = "Zero"
CLASS_REAL = "Real"
CLASS_PURE = "PureNeutrosophic"
CLASS_MIXED = "Mixed"


def ns_reduce(n, x):
    return (x[0] % n, x[1] % n)


def ns_add(n, x, y):
    return ((x[0] + y[0]) % n, (x[1] + y[1]) % n)


def ns_neg(n, x):
    return (-x[0] % n, -x[1] % n)


def ns_sub(n, x, y):
    return ((x[0] - y[0]) % n, (x[1] - y[1]) % n)


def ns_scale(n, t, x):
    return (t * x[0] % n, t * x[1] % n)


def ns_mul(n, x, y):
    a, b = x
    c, d = y
    return (a * c % n, (a * d + b * c + b * d) % n)


def ns_classify(x):
    a, b = x
    if a == 0 and b == 0:
        return CLASS_ZERO
    if b == 0:
        return CLASS_REAL
    if a == 0:
        return CLASS_PURE
    return CLASS_MIXED


def ns_elements(n):
    """All n*n elements, ordered by real part then I part."""
    return [(a, b) for a in range(n) for b in range(n)]


def ns_format(x):
    a, b = x
    if a == 0 and b == 0:
        return "0"
    if b == 0:
        return str(a)
    ipart = "I" if b == 1 else "%dI" % b
    if a == 0:
        return ipart
    return "%d+%s" % (a, ipart)


_NS_RE = re.compile(r"^(?:(-?\d+)|(-?\d+)?I|(-?\d+)\+(-?\d+)?I)$")


def ns_parse(s, n=None):
    """Parse 'a', 'bI', 'I', 'a+bI', 'a+I' into a pair; reduce mod n if given."""
    t = s.replace(" ", "")
    m = _NS_RE.match(t)
    if m is None:
        raise ValueError("cannot parse scalar %r" % s)
    real, pure_b, mixed_a, mixed_b = m.groups()
    if real is not None:
        x = (int(real), 0)
    elif mixed_a is not None:
        x = (int(mixed_a), int(mixed_b) if mixed_b is not None else 1)
    else:
        x = (0, int(pure_b) if pure_b is not None else 1)
    if n is not None:
        x = ns_reduce(n, x)
    return x


def ns_is_unit(n, x):
    return any(ns_mul(n, x, y) == ONE for y in ns_elements(n))


def ring_axiom_violations(n, triple_limit=None):
    """Exhaustively check the commutative unital ring laws for the a+bI scalars.

    Returns a list of (law, witness) pairs; empty means every law holds.
    triple_limit caps how many triples the three-variable laws sweep (None =
    all (n^2)^3 of them).
    """
    elems = ns_elements(n)
    bad = []
    for x in elems:
        if ns_add(n, ZERO, x) != x:
            bad.append(("add-identity", (x,)))
        if ns_add(n, x, ns_neg(n, x)) != ZERO:
            bad.append(("add-inverse", (x,)))
        if ns_mul(n, ONE, x) != x or ns_mul(n, x, ONE) != x:
            bad.append(("mul-identity", (x,)))
    for x in elems:
        for y in elems:
            if ns_add(n, x, y) != ns_add(n, y, x):
                bad.append(("add-commutative", (x, y)))
            if ns_mul(n, x, y) != ns_mul(n, y, x):
                bad.append(("mul-commutative", (x, y)))
    seen = 0
    for x in elems:
        for y in elems:
            for z in elems:
                if triple_limit is not None and seen >= triple_limit:
                    return bad
                seen += 1
                if ns_add(n, ns_add(n, x, y), z) != ns_add(n, x, ns_add(n, y, z)):
                    bad.append(("add-associative", (x, y, z)))
                if ns_mul(n, ns_mul(n, x, y), z) != ns_mul(n, x, ns_mul(n, y, z)):
                    bad.append(("mul-associative", (x, y, z)))
                lhs = ns_mul(n, x, ns_add(n, y, z))
                rhs = ns_add(n, ns_mul(n, x, y), ns_mul(n, x, z))
                if lhs != rhs:
                    bad.append(("left-distributive", (x, y, z)))
                lhs = ns_mul(n, ns_add(n, x, y), z)
                rhs = ns_add(n, ns_mul(n, x, z), ns_mul(n, y, z))
                if lhs != rhs:
                    bad.append(("right-distributive", (x, y, z)))
    return bad
