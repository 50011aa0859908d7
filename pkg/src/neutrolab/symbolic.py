"""Symbolic carriers for the infinite cases: named coefficient rings (nZ, Z,
Q, R, C, optionally extended by I), formal-sum rings over a finite basis with
such coefficients, and unions of either kind.

Containment, intersection, and ideal tests are decided from the names; union
carriers are substructures exactly when the union collapses into one member,
and otherwise a cross-sum escape witness is produced (for additive groups A
and B, any a in A\\B plus b in B\\A lands outside both).
"""

from dataclasses import dataclass, field

from .subsets import Verdict, _magma_closure_gap

_RANK = {"Z": 0, "Q": 1, "R": 2, "C": 3}


@dataclass(frozen=True)
class NamedRing:
    base: str = "Z"
    mult: int = 1
    neutro: bool = False

    def __post_init__(self):
        if self.base not in _RANK:
            raise ValueError("base must be one of Z, Q, R, C")
        if self.mult < 1:
            raise ValueError("multiplier must be positive")
        if self.mult != 1 and self.base != "Z":
            raise ValueError("only Z takes a multiplier")

    @property
    def core_name(self):
        return self.base if self.mult == 1 else "%dZ" % self.mult

    @property
    def name(self):
        return "<%s u I>" % self.core_name if self.neutro else self.core_name

    def __str__(self):
        return self.name


def _core_contains(inner, outer):
    if inner.base == "Z" and outer.base == "Z":
        return inner.mult % outer.mult == 0
    if inner.base == "Z":
        return True
    if outer.base == "Z":
        return False
    return _RANK[inner.base] <= _RANK[outer.base]


def sym_contains(inner, outer):
    """Whether every member of `inner` lies in `outer`."""
    if inner.neutro and not outer.neutro:
        return False
    return _core_contains(inner, outer)


def sym_is_field(r):
    return not r.neutro and r.base in ("Q", "R", "C")


def sym_is_neutro_field(r):
    """An indeterminacy extension of a field (the usual I-extended fields)."""
    return r.neutro and r.base in ("Q", "R", "C")


def sym_intersect(a, b):
    neutro = a.neutro and b.neutro
    if a.base == "Z" and b.base == "Z":
        m = a.mult * b.mult // _gcd(a.mult, b.mult)
        return NamedRing("Z", m, neutro)
    if a.base == "Z":
        return NamedRing("Z", a.mult, neutro)
    if b.base == "Z":
        return NamedRing("Z", b.mult, neutro)
    low = a if _RANK[a.base] <= _RANK[b.base] else b
    return NamedRing(low.base, 1, neutro)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def rep_outside(a, b):
    """A canonical member of `a` that is not a member of `b`."""
    if sym_contains(a, b):
        raise ValueError("%s lies inside %s" % (a.name, b.name))
    if a.neutro and not b.neutro:
        mul = a.mult if a.base == "Z" else 1
        return "%dI" % mul if mul != 1 else "I"
    if a.base == "Z" and b.base == "Z":
        return str(a.mult)
    if b.base == "Z":
        return {"Q": "1/2", "R": "1/2", "C": "1/2"}[a.base]
    return {"R": "sqrt(2)", "C": "sqrt(-1)"}[a.base]


def sym_subring_of(inner, outer):
    if sym_contains(inner, outer):
        return Verdict(True)
    if inner.neutro and not outer.neutro:
        return Verdict(False, witness=(rep_outside(inner, outer),),
                       note="indeterminate member escapes %s" % outer.name)
    return Verdict(False, witness=(rep_outside(inner, outer),),
                   note="member of %s outside %s" % (inner.name, outer.name))


def sym_ideal_of(inner, outer):
    """nZ-style ideals: containment plus coefficient absorption."""
    v = sym_subring_of(inner, outer)
    if not v.ok:
        return Verdict(False, witness=v.witness,
                       flags=("not-substructure",), note=v.note)
    if outer.base == "Z" or inner.core_name == outer.core_name:
        return Verdict(True)
    return Verdict(False, witness=(rep_outside(outer, inner), "absorb"),
                   note="%s-multiples leave %s" % (outer.name, inner.name))


# ---------------------------------------------------------------------------
# symbolic formal-sum rings over a finite basis


@dataclass(frozen=True)
class SymGroupRing:
    coeff: NamedRing
    basis: object                       # FiniteMagma
    subset: frozenset = None            # basis labels; None means all

    def __post_init__(self):
        labels = self.subset
        if labels is None:
            labels = frozenset(self.basis.elements)
        else:
            labels = frozenset(labels)
            for x in labels:
                self.basis.idx(x)
            if not labels:
                raise ValueError("basis subset must be nonempty")
        object.__setattr__(self, "subset", labels)

    @property
    def name(self):
        if self.subset == frozenset(self.basis.elements):
            span = self.basis.name
        else:
            span = "{%s}" % ",".join(sorted(self.subset, key=self.basis.idx))
        return "%s<%s>" % (self.coeff.name, span)

    def __str__(self):
        return self.name


def _coeff_monomial(coeff, label):
    c = coeff.mult if coeff.base == "Z" else 1
    return label if c == 1 else "%d%s" % (c, label)


def sym_gr_contains(inner, outer):
    if inner.basis is not outer.basis and inner.basis.elements != outer.basis.elements:
        return False
    return sym_contains(inner.coeff, outer.coeff) and inner.subset <= outer.subset


def sym_gr_subring_of(inner, outer):
    """Span containment plus closure of the inner basis subset."""
    if not sym_gr_contains(inner, outer):
        if inner.subset <= outer.subset:
            return Verdict(False, witness=(rep_outside(inner.coeff, outer.coeff),),
                           note="coefficient escapes")
        lab = sorted(inner.subset - outer.subset, key=inner.basis.idx)[0]
        return Verdict(False, witness=(_coeff_monomial(inner.coeff, lab),),
                       note="basis term escapes")
    idxs = {inner.basis.idx(x) for x in inner.subset}
    gap = _magma_closure_gap(inner.basis, idxs)
    if gap is not None:
        return Verdict(False, witness=gap, note="basis subset not closed")
    return Verdict(True)


def sym_gr_ideal_of(inner, outer):
    v = sym_gr_subring_of(inner, outer)
    if not v.ok:
        return Verdict(False, witness=v.witness,
                       flags=("not-substructure",), note=v.note)
    if outer.coeff.base != "Z" and inner.coeff.core_name != outer.coeff.core_name:
        return Verdict(False, witness=(rep_outside(outer.coeff, inner.coeff), "absorb"),
                       note="coefficient multiples leave the inner span")
    pool = {inner.basis.idx(x) for x in inner.subset}
    for g in sorted(outer.basis.idx(x) for x in outer.subset):
        for h in sorted(pool):
            for z in (inner.basis.table[g][h], inner.basis.table[h][g]):
                if z not in pool:
                    return Verdict(False,
                                   witness=(inner.basis.elements[g],
                                            inner.basis.elements[h],
                                            inner.basis.elements[z]),
                                   note="basis subset not absorbing")
    return Verdict(True)


# ---------------------------------------------------------------------------
# unions


@dataclass(frozen=True)
class SymUnion:
    members: tuple

    @property
    def name(self):
        return " u ".join(m.name for m in self.members)

    def __str__(self):
        return self.name


def _pairwise_collapse(members, contains):
    top = members[0]
    for m in members[1:]:
        if contains(top, m):
            top = m
        elif not contains(m, top):
            return None, (m, top)
    for m in members:
        if not contains(m, top):
            return None, (m, top)
    return top, None


def sym_union_substructure(union):
    """A union of named carriers is a substructure exactly when one member
    swallows the rest; otherwise a cross sum escapes every member."""
    members = union.members
    if not members:
        return Verdict(False, flags=("empty",), note="empty union")
    first = members[0]
    if isinstance(first, SymGroupRing):
        contains = sym_gr_contains
    else:
        contains = sym_contains
    top, clash = _pairwise_collapse(list(members), contains)
    if top is not None:
        return Verdict(True, witness=(top.name,), note="collapses to one member")
    a, b = clash
    ra, rb = _member_rep(a, b), _member_rep(b, a)
    return Verdict(False, witness=(ra, rb, "add", "%s+%s" % (ra, rb)),
                   note="cross sum lies outside every member")


def _member_rep(a, b):
    if isinstance(a, SymGroupRing):
        extra = sorted(a.subset - b.subset, key=a.basis.idx)
        if extra:
            return _coeff_monomial(a.coeff, extra[0])
        return rep_outside(a.coeff, b.coeff)
    return rep_outside(a, b)
