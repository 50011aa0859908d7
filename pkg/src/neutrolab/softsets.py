"""Parameterized families of carrier subsets, and the six standard pairwise
operations on them.

A soft set is a map from parameter names to assignment values over one shared
universe.  Values are frozensets of labels (finite carriers), tuples of
frozensets (collection carriers, one part per component), or symbolic
carriers.  The restricted union follows the worked usage (merge only on the
shared parameters); the literal flag switches to the written-down version,
which coincides with the extended union.
"""

from dataclasses import dataclass, field

from .groupring import GroupRing
from .ncollect import NCollection, is_n_ideal, is_n_sub
from .structures import FiniteMagma, FiniteRing, label_is_neutro
from .subsets import (
    Verdict,
    check_predicate,
    is_lagrange_sub,
    is_subgroupoid,
)
from . import symbolic as sym

LAGRANGE = "Lagrange"
WEAKLY_LAGRANGE = "WeaklyLagrange"
LAGRANGE_FREE = "LagrangeFree"


@dataclass
class SoftSet:
    universe: object
    assign: dict

    def __post_init__(self):
        if not self.assign:
            raise ValueError("a soft set needs at least one parameter")
        self.assign = {p: _freeze_value(v) for p, v in sorted(self.assign.items())}

    @property
    def params(self):
        return tuple(self.assign)

    def value(self, p):
        return self.assign[p]


def _freeze_value(v):
    if isinstance(v, (list, set, frozenset)):
        return frozenset(v)
    if isinstance(v, tuple) and v and isinstance(v[0], (list, set, frozenset)):
        return tuple(frozenset(p) for p in v)
    return v


# ---------------------------------------------------------------------------
# value algebra (dispatch on assignment shape)


def value_is_empty(value):
    if isinstance(value, frozenset):
        return not value
    if isinstance(value, tuple):
        return any(not p for p in value)
    return False


def value_union(value_a, value_b):
    if isinstance(value_a, frozenset) and isinstance(value_b, frozenset):
        return value_a | value_b
    if isinstance(value_a, tuple) and isinstance(value_b, tuple):
        if len(value_a) != len(value_b):
            raise ValueError("part counts differ")
        return tuple(p | q for p, q in zip(value_a, value_b))
    members = []
    for v in (value_a, value_b):
        members.extend(v.members if isinstance(v, sym.SymUnion) else (v,))
    out = []
    for m in members:
        if m not in out:
            out.append(m)
    return sym.SymUnion(tuple(out))


def value_intersect(value_a, value_b):
    if isinstance(value_a, frozenset) and isinstance(value_b, frozenset):
        return value_a & value_b
    if isinstance(value_a, tuple) and isinstance(value_b, tuple):
        if len(value_a) != len(value_b):
            raise ValueError("part counts differ")
        return tuple(p & q for p, q in zip(value_a, value_b))
    if isinstance(value_a, sym.NamedRing) and isinstance(value_b, sym.NamedRing):
        return sym.sym_intersect(value_a, value_b)
    raise ValueError("no intersection for these symbolic values")


def value_contains(small, big):
    if isinstance(small, frozenset) and isinstance(big, frozenset):
        return small <= big
    if isinstance(small, tuple) and isinstance(big, tuple):
        return len(small) == len(big) and all(p <= q for p, q in zip(small, big))
    if isinstance(small, sym.NamedRing) and isinstance(big, sym.NamedRing):
        return sym.sym_contains(small, big)
    if isinstance(small, sym.SymGroupRing) and isinstance(big, sym.SymGroupRing):
        return sym.sym_gr_contains(small, big)
    raise ValueError("no containment for these values")


# ---------------------------------------------------------------------------
# the six operations


def _check_same_universe(f, k):
    if f.universe is not k.universe:
        raise ValueError("soft sets live over different universes")


def restricted_intersection(f, k):
    _check_same_universe(f, k)
    shared = sorted(set(f.params) & set(k.params))
    if not shared:
        raise ValueError("restricted operations need a shared parameter")
    return SoftSet(f.universe, {p: value_intersect(f.value(p), k.value(p))
                                for p in shared})


def extended_intersection(f, k):
    _check_same_universe(f, k)
    out = {}
    for p in sorted(set(f.params) | set(k.params)):
        if p in f.assign and p in k.assign:
            out[p] = value_intersect(f.value(p), k.value(p))
        elif p in f.assign:
            out[p] = f.value(p)
        else:
            out[p] = k.value(p)
    return SoftSet(f.universe, out)


def extended_union(f, k):
    _check_same_universe(f, k)
    out = {}
    for p in sorted(set(f.params) | set(k.params)):
        if p in f.assign and p in k.assign:
            out[p] = value_union(f.value(p), k.value(p))
        elif p in f.assign:
            out[p] = f.value(p)
        else:
            out[p] = k.value(p)
    return SoftSet(f.universe, out)


def restricted_union(f, k, literal=False):
    """Merge on the shared parameters (the usage in the worked cases); with
    literal=True keep every parameter, which makes it the extended union."""
    if literal:
        return extended_union(f, k)
    _check_same_universe(f, k)
    shared = sorted(set(f.params) & set(k.params))
    if not shared:
        raise ValueError("restricted operations need a shared parameter")
    return SoftSet(f.universe, {p: value_union(f.value(p), k.value(p))
                                for p in shared})


def and_op(f, k):
    _check_same_universe(f, k)
    return SoftSet(f.universe, {
        "%s&%s" % (a, b): value_intersect(f.value(a), k.value(b))
        for a in f.params for b in k.params
    })


def or_op(f, k):
    _check_same_universe(f, k)
    return SoftSet(f.universe, {
        "%s|%s" % (a, b): value_union(f.value(a), k.value(b))
        for a in f.params for b in k.params
    })


def same_param_intersection(f, k):
    _check_same_universe(f, k)
    if set(f.params) != set(k.params):
        raise ValueError("same-parameter intersection needs equal parameter sets")
    return restricted_intersection(f, k)


def disjoint_union(f, k):
    _check_same_universe(f, k)
    if set(f.params) & set(k.params):
        raise ValueError("disjoint union needs disjoint parameter sets")
    return extended_union(f, k)


OPS = {
    "restricted-intersection": restricted_intersection,
    "extended-intersection": extended_intersection,
    "restricted-union": restricted_union,
    "extended-union": extended_union,
    "and": and_op,
    "or": or_op,
}


# ---------------------------------------------------------------------------
# per-assignment checks


@dataclass
class SoftReport:
    ok: bool
    failures: tuple = ()
    flags: tuple = ()
    note: str = ""

    def __bool__(self):
        return self.ok


def _value_verdict(universe, value, predicate):
    if value_is_empty(value):
        return Verdict(False, flags=("empty-assignment",), note="empty assignment")
    if callable(predicate):
        return predicate(universe, value)
    if isinstance(universe, NCollection):
        loose = predicate.startswith("loose-")
        core = predicate[6:] if loose else predicate
        try:
            if core == "n-sub":
                return is_n_sub(universe, value, require_neutro=not loose)
            if core == "strong-n-sub":
                return is_n_sub(universe, value, strong=True)
            if core == "n-ideal":
                return is_n_ideal(universe, value, require_neutro=not loose)
        except ValueError:
            return Verdict(False, flags=("empty-part",), note="empty part")
        raise ValueError("unknown collection predicate %r" % predicate)
    if isinstance(value, (sym.NamedRing, sym.SymGroupRing, sym.SymUnion)):
        union = value if isinstance(value, sym.SymUnion) else sym.SymUnion((value,))
        return sym.sym_union_substructure(union)
    return check_predicate(universe, value, predicate)


def soft_is(soft, predicate):
    """Whether every assignment satisfies the named per-value predicate."""
    failures = []
    for p in soft.params:
        v = _value_verdict(soft.universe, soft.value(p), predicate)
        if not v.ok:
            failures.append((p, v))
    if failures:
        return SoftReport(False, tuple(failures),
                          note="%d of %d assignments fail"
                               % (len(failures), len(soft.params)))
    return SoftReport(True)


def value_has_neutro(value):
    if isinstance(value, frozenset):
        return any(label_is_neutro(x) for x in value)
    if isinstance(value, tuple):
        return any(any(label_is_neutro(x) for x in p) for p in value)
    members = value.members if isinstance(value, sym.SymUnion) else (value,)
    return any(getattr(m, "neutro", False) or
               (isinstance(m, sym.SymGroupRing) and
                any(label_is_neutro(x) for x in m.subset))
               for m in members)


def soft_neutro_params(soft):
    """Parameters whose assignment carries an indeterminate member."""
    return tuple(p for p in soft.params if value_has_neutro(soft.value(p)))


def soft_lagrange_class(soft):
    """Lagrange / WeaklyLagrange / LagrangeFree over the assignments."""
    flags = []
    for p in soft.params:
        value = soft.value(p)
        if not isinstance(value, frozenset):
            raise ValueError("Lagrange classes need finite label assignments")
        try:
            v = is_lagrange_sub(soft.universe, value)
        except ValueError:
            raise ValueError("assignment %r is not a strict subgroupoid" % (p,))
        flags.append(v.ok)
    if all(flags):
        return LAGRANGE
    if not any(flags):
        return LAGRANGE_FREE
    return WEAKLY_LAGRANGE


def is_absolute(soft):
    """Every assignment equals the whole carrier."""
    u = soft.universe
    if isinstance(u, NCollection):
        full = tuple(frozenset(c.structure.elements) for c in u.components)
    elif isinstance(u, (FiniteMagma, FiniteRing)):
        full = frozenset(u.elements)
    elif isinstance(u, GroupRing):
        full = frozenset(u.elements())
    else:
        raise ValueError("absolute check needs a finite universe")
    return all(soft.value(p) == full for p in soft.params)


def soft_sub_of(h, f, predicate="loose-subgroupoid"):
    """(H, B) inside (F, A): parameters nest, assignments nest, and each H(b)
    is itself a substructure (closure is inherited by the parent)."""
    _check_same_universe(h, f)
    failures = []
    if not set(h.params) <= set(f.params):
        extra = sorted(set(h.params) - set(f.params))
        return SoftReport(False, ((extra[0], Verdict(False, note="parameter not in parent")),),
                          note="parameters are not a subset")
    for b in h.params:
        if not value_contains(h.value(b), f.value(b)):
            failures.append((b, Verdict(False, note="assignment not inside parent")))
            continue
        v = _value_verdict(h.universe, h.value(b), predicate)
        if not v.ok:
            failures.append((b, v))
    if failures:
        return SoftReport(False, tuple(failures),
                          note="%d of %d assignments fail" % (len(failures), len(h.params)))
    return SoftReport(True)


def _ideal_within(universe, part, parent):
    """Absorption of `part` against `parent` members only, inside `universe`."""
    if isinstance(universe, FiniteRing):
        pool = sorted(part, key=universe.idx)
        for p in pool:
            for q in pool:
                s = universe.add(p, q)
                if s not in part:
                    return Verdict(False, witness=(p, q, "add", s),
                                   note="not additively closed")
        for p in pool:
            for s in sorted(parent, key=universe.idx):
                for side, z in (("right", universe.mul(p, s)), ("left", universe.mul(s, p))):
                    if z not in part:
                        return Verdict(False, witness=(p, s, side, z),
                                       note="not %s-absorbing in parent" % side)
        return Verdict(True)
    if isinstance(universe, FiniteMagma):
        v = is_subgroupoid(universe, part)
        if not v.ok:
            return v
        for p in sorted(part, key=universe.idx):
            for s in sorted(parent, key=universe.idx):
                for side, z in (("right", universe.op(p, s)), ("left", universe.op(s, p))):
                    if z not in part:
                        return Verdict(False, witness=(p, s, side, z),
                                       note="not %s-absorbing in parent" % side)
        return Verdict(True)
    raise ValueError("ideal-of needs a finite magma or ring universe")


def soft_ideal_of(h, f):
    """(H, B) an ideal of (F, A): nested parameters and assignments, each
    H(b) absorbing products with members of F(b)."""
    _check_same_universe(h, f)
    if not set(h.params) <= set(f.params):
        extra = sorted(set(h.params) - set(f.params))
        return SoftReport(False, ((extra[0], Verdict(False, note="parameter not in parent")),),
                          note="parameters are not a subset")
    failures = []
    for b in h.params:
        hv, fv = h.value(b), f.value(b)
        if isinstance(hv, (sym.NamedRing, sym.SymGroupRing)):
            v = (sym.sym_gr_ideal_of(hv, fv) if isinstance(hv, sym.SymGroupRing)
                 else sym.sym_ideal_of(hv, fv))
            if not v.ok:
                failures.append((b, v))
            continue
        if not value_contains(hv, fv):
            failures.append((b, Verdict(False, note="assignment not inside parent")))
            continue
        v = _ideal_within(h.universe, hv, fv)
        if not v.ok:
            failures.append((b, v))
    if failures:
        return SoftReport(False, tuple(failures),
                          note="%d of %d assignments fail" % (len(failures), len(h.params)))
    return SoftReport(True)
