"""Subset predicates over finite magmas, rings, and formal-sum rings.

Every predicate returns a Verdict carrying a replayable witness on failure.
Enumeration offers two independent strategies (bitmask scan and closure
completion) so results can be cross-checked.
"""

from dataclasses import dataclass, field

from .groupring import GroupRing
from .structures import (
    FiniteMagma,
    FiniteRing,
    ResourceCap,
    label_is_neutro,
    label_is_zero,
)

LAGRANGE = "Lagrange"
WEAKLY_LAGRANGE = "WeaklyLagrange"
LAGRANGE_FREE = "LagrangeFree"

SCAN_LIMIT = 16
GENERATE_CARRIER_LIMIT = 64
GENERATE_COUNT_LIMIT = 4096


@dataclass
class Verdict:
    ok: bool
    witness: tuple = None
    flags: tuple = ()
    note: str = ""

    def __bool__(self):
        return self.ok


def _resolve(universe, labels):
    idxs = sorted({universe.idx(x) for x in labels})
    return idxs


# ---------------------------------------------------------------------------
# magma predicates


def _magma_closure_gap(magma, idx_set):
    for x in idx_set:
        row = magma.table[x]
        for y in idx_set:
            z = row[y]
            if z not in idx_set:
                return (magma.elements[x], magma.elements[y], magma.elements[z])
    return None


def is_subgroupoid(magma, labels, strict=False):
    """Nonempty subset closed under the operation; strict additionally
    requires at least one indeterminate member."""
    idxs = _resolve(magma, labels)
    if not idxs:
        return Verdict(False, flags=("empty",), note="empty subset")
    gap = _magma_closure_gap(magma, set(idxs))
    if gap is not None:
        return Verdict(False, witness=gap, note="not closed")
    flags = ()
    if len(idxs) == len(magma):
        flags = ("improper",)
    if strict and not any(label_is_neutro(magma.elements[i]) for i in idxs):
        return Verdict(False, flags=flags + ("no-indeterminate",),
                       note="closed but has no indeterminate member")
    return Verdict(True, flags=flags)


def is_strong_subgroupoid(magma, labels):
    """Strict subgroupoid whose members are all indeterminate (zero exempt)."""
    v = is_subgroupoid(magma, labels, strict=True)
    if not v.ok:
        return v
    for x in labels:
        if not label_is_neutro(x) and not label_is_zero(x):
            return Verdict(False, witness=(x,), flags=v.flags,
                           note="member is neither indeterminate nor zero")
    return Verdict(True, flags=v.flags)


def is_ideal(magma, labels, strict=False):
    """Subgroupoid absorbing the whole carrier from both sides."""
    v = is_subgroupoid(magma, labels, strict=strict)
    if not v.ok:
        return Verdict(False, witness=v.witness,
                       flags=v.flags + ("not-substructure",), note=v.note)
    idx_set = set(_resolve(magma, labels))
    for p in sorted(idx_set):
        for s in range(len(magma)):
            z = magma.table[p][s]
            if z not in idx_set:
                return Verdict(False, witness=(magma.elements[p], magma.elements[s],
                                               "right", magma.elements[z]),
                               flags=v.flags, note="not right-absorbing")
            z = magma.table[s][p]
            if z not in idx_set:
                return Verdict(False, witness=(magma.elements[p], magma.elements[s],
                                               "left", magma.elements[z]),
                               flags=v.flags, note="not left-absorbing")
    return Verdict(True, flags=v.flags)


def is_lagrange_sub(magma, labels):
    """Whether a strict subgroupoid's order divides the carrier order."""
    v = is_subgroupoid(magma, labels, strict=True)
    if not v.ok:
        raise ValueError("not a strict subgroupoid: %s" % (v.note,))
    k = len(set(_resolve(magma, labels)))
    if len(magma) % k == 0:
        return Verdict(True, flags=v.flags)
    return Verdict(False, witness=(k, len(magma)), flags=v.flags,
                   note="order %d does not divide %d" % (k, len(magma)))


def closure(magma, labels, cap=None):
    """Smallest closed superset, as a frozenset of labels."""
    cap = cap if cap is not None else len(magma)
    current = set(_resolve(magma, labels))
    frontier = list(current)
    while frontier:
        fresh = []
        for x in frontier:
            for y in list(current):
                for z in (magma.table[x][y], magma.table[y][x]):
                    if z not in current:
                        current.add(z)
                        fresh.append(z)
                        if len(current) > cap:
                            raise ResourceCap("closure exceeds cap %d" % cap)
        frontier = fresh
    return frozenset(magma.elements[i] for i in current)


# ---------------------------------------------------------------------------
# ring predicates


def _ring_gap(ring, idx_set):
    add, mul = ring.add_table, ring.mul_table
    for x in idx_set:
        if ring.neg_map[x] not in idx_set:
            return (ring.elements[x], None, "neg", ring.elements[ring.neg_map[x]])
        for y in idx_set:
            z = add[x][y]
            if z not in idx_set:
                return (ring.elements[x], ring.elements[y], "add", ring.elements[z])
            z = mul[x][y]
            if z not in idx_set:
                return (ring.elements[x], ring.elements[y], "mul", ring.elements[z])
    return None


def is_subring(ring, labels, strict=False):
    """Nonempty subset closed under addition, negation, and multiplication;
    strict additionally requires an indeterminate member."""
    idxs = _resolve(ring, labels)
    if not idxs:
        return Verdict(False, flags=("empty",), note="empty subset")
    gap = _ring_gap(ring, set(idxs))
    if gap is not None:
        return Verdict(False, witness=gap, note="not closed under %s" % gap[2])
    flags = ()
    if len(idxs) == len(ring):
        flags = ("improper",)
    if strict and not any(label_is_neutro(ring.elements[i]) for i in idxs):
        return Verdict(False, flags=flags + ("no-indeterminate",),
                       note="closed but has no indeterminate member")
    return Verdict(True, flags=flags)


def is_pseudo_subring(ring, labels):
    """Subring whose nonzero members are all indeterminate."""
    v = is_subring(ring, labels, strict=True)
    if not v.ok:
        return v
    for x in labels:
        if not label_is_neutro(x) and not label_is_zero(x):
            return Verdict(False, witness=(x,), flags=v.flags,
                           note="member is neither indeterminate nor zero")
    return Verdict(True, flags=v.flags)


def is_ring_ideal(ring, labels, strict=False, pseudo=False):
    """Additive subgroup absorbing ring multiplication from both sides."""
    base = is_pseudo_subring(ring, labels) if pseudo else is_subring(ring, labels, strict=strict)
    if not base.ok:
        return Verdict(False, witness=base.witness,
                       flags=base.flags + ("not-substructure",), note=base.note)
    idx_set = set(_resolve(ring, labels))
    for p in sorted(idx_set):
        for s in range(len(ring)):
            z = ring.mul_table[p][s]
            if z not in idx_set:
                return Verdict(False, witness=(ring.elements[p], ring.elements[s],
                                               "right", ring.elements[z]),
                               flags=base.flags, note="not right-absorbing")
            z = ring.mul_table[s][p]
            if z not in idx_set:
                return Verdict(False, witness=(ring.elements[p], ring.elements[s],
                                               "left", ring.elements[z]),
                               flags=base.flags, note="not left-absorbing")
    return Verdict(True, flags=base.flags)


# ---------------------------------------------------------------------------
# formal-sum predicates (carriers are sets of GroupRing elements)


def gr_is_subring(gr, subset, strict=False):
    """Nonempty set of formal sums closed under subtraction and product;
    strict requires a member supported on an indeterminate basis element."""
    items = sorted(set(subset))
    if not items:
        return Verdict(False, flags=("empty",), note="empty subset")
    pool = set(items)
    for a in items:
        for b in items:
            s = gr.sub(a, b)
            if s not in pool:
                return Verdict(False, witness=(gr.format(a), gr.format(b), "sub", gr.format(s)),
                               note="not closed under sub")
            p = gr.mul(a, b)
            if p not in pool:
                return Verdict(False, witness=(gr.format(a), gr.format(b), "mul", gr.format(p)),
                               note="not closed under mul")
    flags = ()
    if len(pool) == len(gr):
        flags = ("improper",)
    if pool == {gr.zero}:
        flags = flags + ("trivial",)
    if strict and not any(gr.has_neutro_support(a) for a in items):
        return Verdict(False, flags=flags + ("no-indeterminate",),
                       note="closed but has no indeterminate-supported member")
    return Verdict(True, flags=flags)


def gr_is_pseudo_subring(gr, subset):
    """Subring whose nonzero members are supported only on indeterminate
    basis elements."""
    v = gr_is_subring(gr, subset, strict=True)
    if not v.ok:
        return v
    for a in sorted(set(subset)):
        if a and not gr.is_pure_neutro(a):
            return Verdict(False, witness=(gr.format(a),), flags=v.flags,
                           note="nonzero member has a plain basis term")
    return Verdict(True, flags=v.flags)


def gr_is_ideal(gr, subset, strict=False, pseudo=False):
    base = gr_is_pseudo_subring(gr, subset) if pseudo else gr_is_subring(gr, subset, strict=strict)
    if not base.ok:
        return Verdict(False, witness=base.witness,
                       flags=base.flags + ("not-substructure",), note=base.note)
    pool = set(subset)
    monomials = [((i, 1),) for i in range(len(gr.basis))]
    for a in sorted(pool):
        for m in monomials:
            for side, p in (("right", gr.mul(a, m)), ("left", gr.mul(m, a))):
                if p not in pool:
                    return Verdict(False,
                                   witness=(gr.format(a), gr.format(m), side, gr.format(p)),
                                   flags=base.flags, note="not %s-absorbing" % side)
    return Verdict(True, flags=base.flags)


def _unital_subrings_of_zr(r):
    """Subrings dZ_r that contain their own multiplicative identity."""
    out = []
    for d in range(1, r + 1):
        if r % d:
            continue
        members = frozenset(range(0, r, d))
        for e in sorted(members):
            if all((e * x) % r == x for x in members):
                out.append((d, members))
                break
    return out


def gr_subneutro_decompositions(gr, subset):
    """All (coefficient subring, closed basis subset) grids equal to `subset`."""
    pool = frozenset(subset)
    found = []
    basis = gr.basis
    n = len(basis)
    for d, coeffs in _unital_subrings_of_zr(gr.r):
        nonzero = sorted(coeffs - {0})
        for mask in range(1, 1 << n):
            idxs = [i for i in range(n) if mask >> i & 1]
            if _magma_closure_gap(basis, set(idxs)) is not None:
                continue
            if len(coeffs) ** len(idxs) != len(pool):
                continue
            if _grid_equals(gr, pool, nonzero, idxs):
                found.append((d, tuple(basis.elements[i] for i in idxs)))
    return found


def _grid_equals(gr, pool, nonzero_coeffs, idxs):
    allowed = set(nonzero_coeffs) | {0}
    keep = set(idxs)
    for x in pool:
        for i, c in x:
            if i not in keep or c not in allowed:
                return False
    count = (len(nonzero_coeffs) + 1) ** len(idxs)
    return count == len(pool)


def gr_is_subneutro(gr, subset, strict=True):
    """Whether `subset` is a coefficient-grid substructure S^H with S a unital
    subring of Z_r and H a closed basis subset (indeterminate member required
    when strict)."""
    pool = frozenset(subset)
    if not pool:
        return Verdict(False, flags=("empty",), note="empty subset")
    if pool == {gr.zero}:
        return Verdict(True, flags=("trivial",), note="zero subring")
    base = gr_is_subring(gr, pool, strict=False)
    if not base.ok:
        return base
    decomps = gr_subneutro_decompositions(gr, pool)
    if not decomps:
        return Verdict(False, flags=base.flags,
                       note="no coefficient-grid decomposition")
    if strict and not any(a and gr.has_neutro_support(a) for a in pool):
        return Verdict(False, flags=base.flags + ("no-indeterminate",),
                       note="grid but has no indeterminate-supported member")
    d, labels = decomps[0]
    return Verdict(True, witness=(d, labels), flags=base.flags)


# ---------------------------------------------------------------------------
# enumeration


def _scan_closed_masks(table, n):
    if n > SCAN_LIMIT:
        raise ResourceCap("scan strategy handles carriers up to %d" % SCAN_LIMIT)
    flat = [table[x][y] for x in range(n) for y in range(n)]
    closed = []
    for mask in range(1, 1 << n):
        members = [x for x in range(n) if mask >> x & 1]
        ok = True
        for x in members:
            row = x * n
            for y in members:
                if not mask >> flat[row + y] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            closed.append(mask)
    return closed


def _generate_closed_sets(close_fn, n):
    if n > GENERATE_CARRIER_LIMIT:
        raise ResourceCap("generate strategy handles carriers up to %d"
                          % GENERATE_CARRIER_LIMIT)
    seen = set()
    frontier = []
    for x in range(n):
        c = close_fn(frozenset([x]))
        if c not in seen:
            seen.add(c)
            frontier.append(c)
    while frontier:
        nxt = []
        for s in frontier:
            for x in range(n):
                if x in s:
                    continue
                c = close_fn(s | {x})
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
                    if len(seen) > GENERATE_COUNT_LIMIT:
                        raise ResourceCap("more than %d closed sets"
                                          % GENERATE_COUNT_LIMIT)
        frontier = nxt
    return seen


def _magma_close_indices(magma):
    table = magma.table

    def close(seed):
        current = set(seed)
        frontier = list(current)
        while frontier:
            fresh = []
            for x in frontier:
                for y in list(current):
                    for z in (table[x][y], table[y][x]):
                        if z not in current:
                            current.add(z)
                            fresh.append(z)
            frontier = fresh
        return frozenset(current)

    return close


def _ring_close_indices(ring):
    add, mul = ring.add_table, ring.mul_table

    def close(seed):
        current = set(seed)
        frontier = list(current)
        while frontier:
            fresh = []
            for x in frontier:
                for y in list(current):
                    for z in (add[x][y], mul[x][y], mul[y][x]):
                        if z not in current:
                            current.add(z)
                            fresh.append(z)
            frontier = fresh
        return frozenset(current)

    return close


_MAGMA_PREDICATES = {
    "subgroupoid": lambda u, labels: is_subgroupoid(u, labels, strict=True),
    "loose-subgroupoid": lambda u, labels: is_subgroupoid(u, labels, strict=False),
    "strong": is_strong_subgroupoid,
    "ideal": lambda u, labels: is_ideal(u, labels, strict=True),
    "loose-ideal": lambda u, labels: is_ideal(u, labels, strict=False),
    "lagrange": None,  # handled separately
}

_RING_PREDICATES = {
    "subring": lambda u, labels: is_subring(u, labels, strict=True),
    "loose-subring": lambda u, labels: is_subring(u, labels, strict=False),
    "pseudo": is_pseudo_subring,
    "ring-ideal": lambda u, labels: is_ring_ideal(u, labels, strict=True),
    "loose-ring-ideal": lambda u, labels: is_ring_ideal(u, labels, strict=False),
    "pseudo-ideal": lambda u, labels: is_ring_ideal(u, labels, pseudo=True),
}

_GR_PREDICATES = {
    "gr-subring": lambda u, subset: gr_is_subring(u, subset, strict=True),
    "loose-gr-subring": lambda u, subset: gr_is_subring(u, subset, strict=False),
    "gr-pseudo": gr_is_pseudo_subring,
    "gr-ideal": lambda u, subset: gr_is_ideal(u, subset, strict=True),
    "gr-pseudo-ideal": lambda u, subset: gr_is_ideal(u, subset, pseudo=True),
    "gr-subneutro": gr_is_subneutro,
    "loose-gr-subneutro": lambda u, subset: gr_is_subneutro(u, subset, strict=False),
}


def check_predicate(universe, labels, predicate):
    """Run a named predicate against a labelled subset."""
    if isinstance(universe, GroupRing):
        if predicate not in _GR_PREDICATES:
            raise ValueError("unknown formal-sum predicate %r" % predicate)
        subset = [universe.parse(s) if isinstance(s, str) else s for s in labels]
        return _GR_PREDICATES[predicate](universe, subset)
    if isinstance(universe, FiniteRing):
        if predicate not in _RING_PREDICATES:
            raise ValueError("unknown ring predicate %r" % predicate)
        return _RING_PREDICATES[predicate](universe, labels)
    if isinstance(universe, FiniteMagma):
        if predicate == "lagrange":
            return is_lagrange_sub(universe, labels)
        if predicate not in _MAGMA_PREDICATES or _MAGMA_PREDICATES[predicate] is None:
            raise ValueError("unknown magma predicate %r" % predicate)
        return _MAGMA_PREDICATES[predicate](universe, labels)
    raise ValueError("unsupported universe type %r" % type(universe).__name__)


def enumerate_subs(universe, predicate="subgroupoid", strategy="auto"):
    """All subsets satisfying a named predicate, sorted by (size, indices).

    strategy 'scan' walks all bitmask subsets (carrier <= 16); 'generate'
    completes closures of growing seeds; 'auto' picks by carrier size.
    The two agree because every satisfying subset is closed.
    """
    n = len(universe)
    if strategy == "auto":
        strategy = "scan" if n <= SCAN_LIMIT else "generate"
    if isinstance(universe, FiniteRing):
        if strategy == "scan":
            # a ring subset must be closed under both tables: scan add-closed
            # masks, then filter
            masks = _scan_closed_masks(universe.add_table, n)
            candidates = [frozenset(i for i in range(n) if m >> i & 1) for m in masks]
        else:
            candidates = sorted(_generate_closed_sets(_ring_close_indices(universe), n))
    elif isinstance(universe, FiniteMagma):
        if strategy == "scan":
            masks = _scan_closed_masks(universe.table, n)
            candidates = [frozenset(i for i in range(n) if m >> i & 1) for m in masks]
        else:
            candidates = sorted(_generate_closed_sets(_magma_close_indices(universe), n))
    else:
        raise ValueError("unsupported universe type %r" % type(universe).__name__)

    out = []
    for idx_set in candidates:
        if not idx_set:
            continue
        labels = frozenset(universe.elements[i] for i in idx_set)
        if predicate == "lagrange":
            try:
                v = is_lagrange_sub(universe, labels)
            except ValueError:
                continue
        else:
            v = check_predicate(universe, labels, predicate)
        if v.ok:
            out.append(labels)
    out.sort(key=lambda s: (len(s), tuple(sorted(universe.idx(x) for x in s))))
    return out


@dataclass
class LagrangeReport:
    verdict: str
    dividing: list = field(default_factory=list)
    non_dividing: list = field(default_factory=list)


def classify_lagrange(magma):
    """Partition the proper strict subgroupoids by order divisibility."""
    subs = enumerate_subs(magma, predicate="subgroupoid")
    total = len(magma)
    dividing, non_dividing = [], []
    for s in subs:
        if len(s) == total:
            continue
        (dividing if total % len(s) == 0 else non_dividing).append(s)
    if not dividing and not non_dividing:
        return LagrangeReport(LAGRANGE_FREE)
    if not non_dividing:
        return LagrangeReport(LAGRANGE, dividing, non_dividing)
    if not dividing:
        return LagrangeReport(LAGRANGE_FREE, dividing, non_dividing)
    return LagrangeReport(WEAKLY_LAGRANGE, dividing, non_dividing)
