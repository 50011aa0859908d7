"""The registered claim rows: closure propositions, non-closure remark
hunts, worked-example checks, and classification pins, at desk scale.

Every row records the status it is expected to report.  Runners recompute
statuses from scratch each run; rows whose recorded statement disagrees
with its own arithmetic are pre-registered as ExampleContradictsText and
carry the recomputed witness.  Pools used by randomized sweeps are built
from fixed string seeds so a row's outcome never depends on which other
rows ran.
"""

import itertools
import random
from functools import lru_cache

from . import symbolic as sym
from .engine import (
    Claim,
    KIND_CLASSIFICATION,
    KIND_EXAMPLE,
    KIND_PROP,
    KIND_REMARK,
    STATUS_CONTRADICTS,
    STATUS_COUNTEREXAMPLE,
    STATUS_HOLDS,
    STATUS_VERIFIED,
    run_closure_prop,
    run_remark_hunt,
)
from .groupring import GroupRing
from .ncollect import (
    MIXED,
    MIXED_DUAL,
    WEAK_MIXED,
    Component,
    NCollection,
    classify_mixed,
    is_n_sub,
)
from .scalars import ns_format
from .softsets import (
    LAGRANGE,
    LAGRANGE_FREE,
    WEAKLY_LAGRANGE,
    SoftSet,
    extended_union,
    restricted_union,
    soft_ideal_of,
    soft_is,
    soft_lagrange_class,
    soft_neutro_params,
    soft_sub_of,
)
from .structures import (
    alternating_labels,
    build_from_table,
    cyclic_neutro_group,
    label_is_neutro,
    mult_magma,
    neutro_double,
    neutro_ring,
    param_groupoid,
    sym_group,
)
from .subsets import (
    Verdict,
    classify_lagrange,
    closure,
    enumerate_subs,
    is_ideal,
    is_subgroupoid,
    is_subring,
)

# ---------------------------------------------------------------------------
# carriers


@lru_cache(maxsize=None)
def groupoid_10_3_2():
    return param_groupoid(10, 3, 2)


@lru_cache(maxsize=None)
def groupoid_10_2_3():
    return param_groupoid(10, 2, 3)


@lru_cache(maxsize=None)
def groupoid_4_2_1():
    return param_groupoid(4, 2, 1)


@lru_cache(maxsize=None)
def groupoid_12_8_4():
    return param_groupoid(12, 8, 4)


@lru_cache(maxsize=None)
def ring_6():
    return neutro_ring(6)


@lru_cache(maxsize=None)
def ring_10():
    return neutro_ring(10)


@lru_cache(maxsize=None)
def ring_12():
    return neutro_ring(12)


@lru_cache(maxsize=None)
def bi_groupoid():
    return NCollection(
        [
            Component(groupoid_10_2_3(), "groupoid", True),
            Component(groupoid_4_2_1(), "groupoid", True),
        ],
        name="bi(Z10;2,3 | Z4;2,1)+I",
    )


@lru_cache(maxsize=None)
def tri_groupoid():
    return NCollection(
        [
            Component(groupoid_10_3_2(), "groupoid", True),
            Component(groupoid_4_2_1(), "groupoid", True),
            Component(groupoid_12_8_4(), "groupoid", True),
        ],
        name="tri(Z10;3,2 | Z4;2,1 | Z12;8,4)+I",
    )


@lru_cache(maxsize=None)
def gr_z2_c4():
    return GroupRing(2, cyclic_neutro_group(4))


@lru_cache(maxsize=None)
def gr_z6_c4():
    return GroupRing(6, cyclic_neutro_group(4))


@lru_cache(maxsize=None)
def gr_z2_c3s():
    return GroupRing(2, cyclic_neutro_group(3, semigroup=True))


@lru_cache(maxsize=None)
def sym_basis6():
    return cyclic_neutro_group(6)


@lru_cache(maxsize=None)
def mixed_universe():
    """Five tagged components, three indeterminate; total order 68."""
    return NCollection(
        [
            Component(mult_magma(3), "group", True),
            Component(mult_magma(6), "semigroup", True),
            Component(mult_magma(4, pure_union=True), "groupoid", True),
            Component(sym_group(3), "group", False),
            Component(mult_magma(10, neutro=False), "semigroup", False),
        ],
        name="mixed5(order 68)",
    )


@lru_cache(maxsize=None)
def loop_7_4():
    """Order-8 loop: identity e, involutions, i*j = 4j - 3i (mod 7) off
    the diagonal with representatives 1..7."""
    elems = ["e"] + [str(i) for i in range(1, 8)]

    def prod(a, b):
        if a == "e":
            return b
        if b == "e":
            return a
        i, j = int(a), int(b)
        if i == j:
            return "e"
        r = (4 * j - 3 * i) % 7
        return str(r or 7)

    table = [[prod(a, b) for b in elems] for a in elems]
    return build_from_table(elems, table, name="loop7(4)")


@lru_cache(maxsize=None)
def dual_universe():
    """Five plain-tagged kinds plus one indeterminate loop double."""
    l7 = loop_7_4()
    return NCollection(
        [
            Component(l7, "loop", False),
            Component(sym_group(4), "group", False),
            Component(mult_magma(10, neutro=False), "semigroup", False),
            Component(mult_magma(4, neutro=False), "groupoid", False),
            Component(neutro_double(l7), "loop", True),
        ],
        name="dual5",
    )


# ---------------------------------------------------------------------------
# label-set helpers


def _grid(n, reals, ims):
    return frozenset(ns_format((a % n, b % n)) for a in reals for b in ims)


def _reals(n):
    return frozenset(ns_format((a, 0)) for a in range(n))


P_1032 = frozenset({"0", "5", "5I", "5+5I"})
P_421 = frozenset({"0", "2", "2I", "2+2I"})
S_421_3 = frozenset({"0", "2", "2+2I"})
S_421_2 = frozenset({"0", "2+2I"})
S_421_3I = frozenset({"0", "2I", "2+2I"})

A3 = frozenset(alternating_labels(3))
S3_IN_S4 = frozenset({"e", "(12)", "(13)", "(23)", "(123)", "(132)"})
EVENS_10 = frozenset({"0", "2", "4", "6", "8"})


@lru_cache(maxsize=None)
def grid_12_ideal():
    return _grid(12, (0, 6), tuple(range(0, 12, 2)))


@lru_cache(maxsize=None)
def e4_grid():
    return _grid(12, (0, 4, 8), (0, 4, 8))


def _span(gr, basis_labels):
    """All formal sums supported on the given basis labels."""
    idxs = sorted(gr.basis.idx(x) for x in basis_labels)
    out = set()
    for coeffs in itertools.product(range(gr.r), repeat=len(idxs)):
        out.add(tuple((i, c) for i, c in zip(idxs, coeffs) if c))
    return frozenset(out)


# ---------------------------------------------------------------------------
# populations and pools


@lru_cache(maxsize=None)
def subgroupoids_421():
    return tuple(enumerate_subs(groupoid_4_2_1(), "subgroupoid"))


@lru_cache(maxsize=None)
def subrings_6():
    return tuple(enumerate_subs(ring_6(), "subring"))


@lru_cache(maxsize=None)
def ring_ideals_6():
    return tuple(enumerate_subs(ring_6(), "loose-ring-ideal"))


@lru_cache(maxsize=None)
def span_population(which):
    gr = {"z2c4": gr_z2_c4, "z2c3s": gr_z2_c3s}[which]()
    basis_subs = enumerate_subs(gr.basis, "subgroupoid")
    return tuple(_span(gr, s) for s in basis_subs)


@lru_cache(maxsize=None)
def bi_ideal_population():
    big = bi_groupoid()
    return (
        tuple(frozenset(c.structure.elements) for c in big.components),
    )


@lru_cache(maxsize=None)
def tri_ideal_pool():
    """Ideal triples: both small components are improper-only, the third
    admits exactly the supersets of the 3x3 residue grid."""
    tri = tri_groupoid()
    g1, g2, g3 = (c.structure for c in tri.components)
    full1, full2 = frozenset(g1.elements), frozenset(g2.elements)
    e4 = e4_grid()
    rest = sorted(set(g3.elements) - e4, key=g3.idx)
    rng = random.Random("neutrolab:pool:prop-2.3.2")
    thirds = [e4, frozenset(g3.elements)]
    for k in (2, 4, 6, 9, 12, 15, 18, 21):
        thirds.append(e4 | frozenset(rng.sample(rest, k)))
    return tuple((full1, full2, t) for t in thirds)


@lru_cache(maxsize=None)
def mixed_sub_pool():
    """Per-component closed parts combined into whole-collection tuples."""
    m = mixed_universe()
    m2 = m.components[1].structure
    rng = random.Random("neutrolab:pool:prop-6.1.1")

    by_comp = []
    for i, comp in enumerate(m.components):
        s = comp.structure
        if i == 1:
            parts = {frozenset(s.elements)}
            for seed in (("3",), ("2",), ("5",), ("2I",), ("3I",),
                         ("2", "3"), ("4I",), ("1",)):
                parts.add(closure(m2, frozenset(seed)))
        else:
            parts = set(enumerate_subs(s, "loose-subgroupoid"))
        by_comp.append(sorted(parts, key=lambda p: (len(p), sorted(p))))

    pool = [
        tuple(frozenset(x) for x in
              (("1", "I"), ("0", "3", "3I"), ("0", "2", "2I"), A3, EVENS_10)),
        tuple(frozenset(x) for x in
              (("1", "2"), ("0", "3I"), ("0", "2I"), A3, ("0", "5"))),
    ]
    while len(pool) < 26:
        cand = tuple(rng.choice(parts) for parts in by_comp)
        if cand not in pool:
            pool.append(cand)
    return tuple(pool)


def _memo_parts(part_check):
    """Partwise collection predicate with a shared per-part verdict memo."""
    memo = {}

    def verdict(universe, value):
        parts = universe.resolve_parts(value)
        if any(not p for p in parts):
            return Verdict(False, flags=("empty-part",), note="empty part")
        for i, (comp, labels) in enumerate(zip(universe.components, parts)):
            key = (i, labels)
            v = memo.get(key)
            if v is None:
                memo[key] = v = part_check(comp.structure, labels)
            if not v.ok:
                return Verdict(False,
                               witness=(i, comp.name) + tuple(v.witness or ()),
                               flags=v.flags, note="part %d: %s" % (i, v.note))
        return Verdict(True)

    return verdict


# ---------------------------------------------------------------------------
# pinned-gap decorators for the hunts


def _pin_op_gap(x, y):
    def check(universe, value):
        z = universe.op(x, y)
        if x in value and y in value and z not in value:
            return {"pinned-pair": [x, y], "escapes": z}
        return None

    return check


def _pin_add_gap(x, y):
    def check(universe, value):
        z = universe.add(x, y)
        if x in value and y in value and z not in value:
            return {"pinned-pair": [x, y], "escapes": z}
        return None

    return check


def _pin_gr_add_gap(xs, ys):
    def check(universe, value):
        x, y = universe.parse(xs), universe.parse(ys)
        z = universe.add(x, y)
        if x in value and y in value and z not in value:
            return {"pinned-pair": [xs, ys], "escapes": universe.format(z)}
        return None

    return check


def _pin_part_gap(comp_index, x, y):
    def check(universe, value):
        s = universe.components[comp_index].structure
        part = value[comp_index]
        z = s.op(x, y)
        if x in part and y in part and z not in part:
            return {"component": s.name, "pinned-pair": [x, y], "escapes": z}
        return None

    return check


# ---------------------------------------------------------------------------
# runner builders


def _require(condition, what):
    if not condition:
        raise RuntimeError("reconstruction mismatch: %s" % what)


def _verdict_plain(v):
    out = {"note": v.note}
    if v.witness:
        out["witness"] = v.witness
    if v.flags:
        out["flags"] = v.flags
    return out


def _report_failures(rep):
    return {"failures": [{"param": p, **_verdict_plain(v)}
                         for p, v in rep.failures]}


def _positive(ok, witness, trials):
    return (STATUS_VERIFIED if ok else STATUS_CONTRADICTS), witness, trials


def _negative(failed, witness, trials):
    """The recorded statement asserts failure; verifying means failing."""
    if failed:
        return STATUS_VERIFIED, witness, trials
    return STATUS_CONTRADICTS, {"reason": "recorded as failing but computed "
                                          "to hold"}, trials


def _prop_runner(universe_fn, population_fn, predicate, ops=None, spot=None):
    def runner(rng):
        kwargs = {}
        if ops is not None:
            kwargs["ops"] = ops
        if spot is not None:
            kwargs["spot"] = spot
        pred = predicate() if callable(predicate) and getattr(
            predicate, "_factory", False) else predicate
        return run_closure_prop(universe_fn(), population_fn(), pred, rng,
                                **kwargs)

    return runner


def _ideal_checker_factory():
    return _memo_parts(is_ideal)


_ideal_checker_factory._factory = True


def _sub_checker_factory():
    return _memo_parts(is_subgroupoid)


_sub_checker_factory._factory = True


def _hunt_runner(universe_fn, op_name, predicate, pinned_fn, pin_check=None):
    def runner(rng):
        f_assign, k_assign = pinned_fn()
        return run_remark_hunt(universe_fn(), op_name, predicate, rng,
                               pinned=(f_assign, k_assign),
                               pin_check=pin_check)

    return runner


# --- chapter 1 and 2 examples ---------------------------------------------


def _run_example_1_1_3(rng):
    g = groupoid_10_3_2()
    p = _grid(10, (0, 5), (0, 5))
    _require(p == P_1032, "the order-4 indeterminate subgroupoid")
    q = _reals(10)
    vp = is_subgroupoid(g, p, strict=True)
    vq = is_subgroupoid(g, q)
    plain = not any(label_is_neutro(x) for x in q)
    ok = vp.ok and vq.ok and plain
    witness = {"indeterminate-subgroupoid": sorted(p),
               "plain-subgroupoid-size": len(q)}
    return _positive(ok, witness, 2)


def _run_example_2_1_1(rng):
    g = groupoid_10_3_2()
    f = SoftSet(g, {"a1": P_1032, "a2": _reals(10)})
    rep = soft_is(f, "loose-subgroupoid")
    ok = rep.ok and len(soft_neutro_params(f)) >= 1
    witness = None if ok else _report_failures(rep)
    return _positive(ok, witness, len(f.params))


def _soft_421():
    return SoftSet(groupoid_4_2_1(),
                   {"a1": P_421, "a2": S_421_3, "a3": S_421_2})


def _run_example_2_1_2(rng):
    rep = soft_is(_soft_421(), "subgroupoid")
    return _positive(rep.ok, None if rep.ok else _report_failures(rep), 3)


def _run_example_2_1_3(rng):
    f = _soft_421()
    h = SoftSet(groupoid_4_2_1(), {"a1": S_421_2, "a2": S_421_2})
    rep = soft_sub_of(h, f, "subgroupoid")
    return _positive(rep.ok, None if rep.ok else _report_failures(rep), 2)


def _run_example_2_1_4(rng):
    g = groupoid_4_2_1()
    _require(len(g) == 16, "carrier order 16")
    f = SoftSet(g, {"a1": P_421, "a2": S_421_2})
    cls = soft_lagrange_class(f)
    return _positive(cls == LAGRANGE, {"class": cls}, 2)


def _run_example_2_1_5(rng):
    f = _soft_421()
    cls = soft_lagrange_class(f)
    return _positive(cls == WEAKLY_LAGRANGE, {"class": cls}, 3)


def _run_example_2_1_6(rng):
    f = SoftSet(groupoid_4_2_1(), {"a1": S_421_3I, "a2": S_421_3})
    cls = soft_lagrange_class(f)
    return _positive(cls == LAGRANGE_FREE, {"class": cls}, 2)


def _run_example_2_1_7(rng):
    f = SoftSet(groupoid_4_2_1(), {"a1": S_421_3I, "a2": S_421_2})
    rep = soft_is(f, "strong")
    return _positive(rep.ok, None if rep.ok else _report_failures(rep), 2)


def _run_classify_lagrange_2_1(rng):
    rep = classify_lagrange(groupoid_4_2_1())
    ok = (rep.verdict == WEAKLY_LAGRANGE
          and P_421 in rep.dividing
          and S_421_3I in rep.non_dividing)
    witness = {"verdict": rep.verdict,
               "dividing": len(rep.dividing),
               "non-dividing": len(rep.non_dividing),
               "dividing-example": sorted(P_421),
               "non-dividing-example": sorted(S_421_3I)}
    status = STATUS_HOLDS if ok else STATUS_COUNTEREXAMPLE
    return status, witness, len(rep.dividing) + len(rep.non_dividing)


# --- chapter 2 collections --------------------------------------------------


def _run_example_2_2_1(rng):
    big = bi_groupoid()
    f = SoftSet(big, {
        "a1": (P_1032, P_421),
        "a2": (_reals(10), S_421_2),
    })
    rep = soft_is(f, "n-sub")
    return _positive(rep.ok, None if rep.ok else _report_failures(rep), 2)


def _run_example_2_2_3(rng):
    big = bi_groupoid()
    f = SoftSet(big, {
        "a1": (frozenset({"0", "5+5I"}), S_421_2),
        "a2": (frozenset({"0", "5I"}), S_421_2),
    })
    rep = soft_is(f, "strong-n-sub")
    return _positive(rep.ok, None if rep.ok else _report_failures(rep), 2)


def _run_example_2_3_1(rng):
    tri = tri_groupoid()
    f = SoftSet(tri, {
        "a1": (P_1032, P_421, frozenset({"0", "2"})),
        "a2": (_reals(10), S_421_2, frozenset({"0", "2I"})),
    })
    rep = soft_is(f, "n-sub")
    return _positive(rep.ok, _report_failures(rep) if not rep.ok else None,
                     len(f.params))


def _run_example_2_3_3(rng):
    tri = tri_groupoid()
    f = SoftSet(tri, {
        "a1": (frozenset({"0", "5I"}), frozenset({"0", "2I"}),
               frozenset({"0", "2I"})),
        "a2": (frozenset({"0", "5+5I"}), S_421_2, S_421_2),
    })
    rep = soft_is(f, "strong-n-sub")
    return _positive(rep.ok, _report_failures(rep) if not rep.ok else None,
                     len(f.params))


# --- chapter 3 examples -----------------------------------------------------


def _zi(m=1):
    return sym.NamedRing("Z", m, True)


def _run_example_3_1_1(rng):
    outer = _zi()
    rows = {"a%d" % i: _zi(m) for i, m in enumerate((2, 3, 5, 6), start=1)}
    bad = {p: str(v) for p, v in rows.items()
           if not sym.sym_subring_of(v, outer).ok}
    witness = {"rows": sorted(str(v) for v in rows.values())}
    if bad:
        witness["failing"] = bad
    return _positive(not bad, witness, len(rows))


def _run_example_3_1_2(rng):
    outer = sym.NamedRing("C", 1, True)
    rows = {
        "a1": sym.NamedRing("R", 1, True),
        "a2": sym.NamedRing("Q", 1, True),
        "a3": _zi(),
        "a4": _zi(2),
    }
    bad = {p: str(v) for p, v in rows.items()
           if not sym.sym_subring_of(v, outer).ok}
    witness = {"rows": sorted(str(v) for v in rows.values())}
    if bad:
        witness["failing"] = bad
    return _positive(not bad, witness, len(rows))


def _run_example_3_1_3(rng):
    outer = _zi()
    f = SoftSet(outer, {"a1": _zi(2), "a2": _zi(3), "a3": _zi(4)})
    k = SoftSet(outer, {"a1": _zi(5), "a3": _zi(7)})
    h = extended_union(f, k)
    rep = soft_is(h, "loose-subring")
    failing = {p for p, _ in rep.failures}
    ok = failing == {"a1", "a3"}
    witness = _report_failures(rep)
    witness["union-params"] = sorted(h.params)
    return _positive(ok, witness, len(h.params))


def _run_example_3_1_4(rng):
    r12 = ring_12()
    grid = grid_12_ideal()
    literal = frozenset({"0", "6", "2I", "4I", "6I", "8I", "10I",
                         "6+2I", "6+4I", "6+6I", "6+8I", "6+10I"})
    _require(grid == literal, "the 12-member ideal grid")
    f = SoftSet(r12, {"a1": grid, "a2": _grid(12, (0, 6), (0, 6))})
    rep = soft_is(f, "ring-ideal")
    return _positive(rep.ok, None if rep.ok else _report_failures(rep), 2)


def _run_example_3_1_5(rng):
    r10 = ring_10()
    f = SoftSet(r10, {
        "a1": frozenset({"0", "2", "4", "6", "8", "2I", "4I", "6I", "8I"}),
        "a2": frozenset({"0", "2I", "4I", "6I", "8I"}),
    })
    rep = soft_is(f, "ring-ideal")
    return _negative(not rep.ok, _report_failures(rep) if not rep.ok else None,
                     2)


def _run_example_3_1_6(rng):
    outer = sym.NamedRing("C", 1, True)
    qi = sym.NamedRing("Q", 1, True)
    ri = sym.NamedRing("R", 1, True)
    f = SoftSet(outer, {"a1": _zi(), "a2": qi, "a3": ri})
    k = SoftSet(outer, {"a2": _zi(), "a3": qi})
    rep = soft_sub_of(k, f, "loose-subring")
    return _positive(rep.ok, None if rep.ok else _report_failures(rep), 2)


def _run_example_3_1_7(rng):
    r12 = ring_12()
    f = SoftSet(r12, {
        "a1": grid_12_ideal(),
        "a2": frozenset({"0", "2", "4", "6", "8", "2I", "4I", "6I", "8I"}),
    })
    h = SoftSet(r12, {
        "a1": frozenset({"0", "6", "6+6I"}),
        "a2": EVENS_10,
    })
    parent = soft_is(f, "subring")
    rep = soft_ideal_of(h, f)
    ok = parent.ok and rep.ok
    witness = {}
    if not parent.ok:
        witness["parent-defect"] = _report_failures(parent)
    if not rep.ok:
        witness["ideal-defect"] = _report_failures(rep)
    return _positive(ok, witness or None, 4)


def _run_theorem_3_1_3(rng):
    r = ring_6()
    ideals = ring_ideals_6()
    for s in ideals:
        v = is_subring(r, s)
        if not v.ok:
            return STATUS_COUNTEREXAMPLE, {"ideal": sorted(s),
                                           "witness": v.witness}, len(ideals)
    return STATUS_HOLDS, {"ideals-checked": len(ideals)}, len(ideals)


# --- chapter 4 examples -----------------------------------------------------


def _sym_q6(subset=None):
    return sym.SymGroupRing(sym.NamedRing("Q"), sym_basis6(),
                            None if subset is None else frozenset(subset))


def _run_example_4_1_1(rng):
    outer = _sym_q6()
    rows = {
        "a1": _sym_q6({"1", "g^3"}),
        "a2": _sym_q6({"1", "g^3", "I", "g^3I"}),
        "a3": _sym_q6({"1", "g^2", "g^4"}),
        "a4": _sym_q6({"1", "g^2", "g^4", "I", "g^2I", "g^4I"}),
    }
    bad = {p: str(v) for p, v in rows.items()
           if not sym.sym_gr_subring_of(v, outer).ok}
    neutro = [p for p, v in rows.items()
              if any(label_is_neutro(x) for x in v.subset)]
    ok = not bad and bool(neutro)
    witness = {"rows": sorted(str(v) for v in rows.values())}
    if bad:
        witness["failing"] = bad
    return _positive(ok, witness, len(rows))


def _run_example_4_1_2(rng):
    outer = _sym_q6()
    f = SoftSet(outer, {
        "a1": _sym_q6({"1", "g^3"}),
        "a2": _sym_q6({"1", "g^3", "I", "g^3I"}),
    })
    h = SoftSet(outer, {"a1": _sym_q6({"1", "g^2", "g^4", "I", "g^2I",
                                       "g^4I"})})
    k = restricted_union(f, h)
    rep = soft_is(k, "loose-gr-subring")
    failed = {p for p, _ in rep.failures} == {"a1"}
    return _negative(failed, _report_failures(rep) if rep.failures else None,
                     len(k.params))


def _run_example_4_1_6(rng):
    gr = gr_z6_c4()
    f = SoftSet(gr, {
        "a1": frozenset({gr.zero, gr.parse("3I")}),
        "a2": frozenset({gr.zero, gr.parse("2I"), gr.parse("4I")}),
    })
    rep = soft_is(f, "gr-pseudo")
    return _positive(rep.ok, None if rep.ok else _report_failures(rep), 2)


def _gr_witness(gr, witness):
    return [gr.format(t) if isinstance(t, tuple) else t
            for t in (witness or ())]


def _run_example_4_1_8(rng):
    gr = gr_z2_c4()
    f = SoftSet(gr, {
        "a1": frozenset({gr.zero, gr.parse("1+g^2")}),
        "a2": frozenset({gr.zero, gr.parse("1+g"), gr.parse("g+g^3"),
                         gr.parse("1+g^3")}),
    })
    rep = soft_is(f, "loose-gr-subring")
    witness = None
    if not rep.ok:
        witness = {"failures": [{"param": p, "note": v.note,
                                 "witness": _gr_witness(gr, v.witness)}
                                for p, v in rep.failures]}
    return _positive(rep.ok, witness, 2)


def _run_example_4_1_10(rng):
    b6 = sym_basis6()
    outer = sym.SymGroupRing(sym.NamedRing("Z"), b6)
    rows = {"a%d" % i: sym.SymGroupRing(sym.NamedRing("Z", m), b6)
            for i, m in enumerate((2, 4, 6), start=1)}
    bad = {p: str(v) for p, v in rows.items()
           if not sym.sym_gr_ideal_of(v, outer).ok}
    witness = {"rows": sorted(str(v) for v in rows.values())}
    if bad:
        witness["failing"] = bad
    return _positive(not bad, witness, len(rows))


def _run_example_4_1_11(rng):
    gr = gr_z2_c4()
    v = gr.parse("1+g+g^2+g^3")
    w = gr.parse("I+gI+g^2I+g^3I")
    vw = gr.add(v, w)
    gen_v = frozenset(gr.generated_ideal([v]))
    gen_w = frozenset(gr.generated_ideal([w]))
    gen_vw = frozenset(gr.generated_ideal([vw]))
    _require(gen_v == frozenset({gr.zero, v, w, vw}), "the ideal of v")
    _require(gen_w == frozenset({gr.zero, w}), "the ideal of w")
    _require(gen_vw == frozenset({gr.zero, vw}), "the ideal of v+w")
    f = SoftSet(gr, {"a1": gen_v, "a2": gen_w, "a3": gen_vw})
    rep = soft_is(f, "gr-pseudo-ideal")
    witness = {
        "generated": {"a1": sorted(gr.format(x) for x in gen_v),
                      "a2": sorted(gr.format(x) for x in gen_w),
                      "a3": sorted(gr.format(x) for x in gen_vw)},
    }
    if not rep.ok:
        witness["failures"] = [{"param": p, "note": v2.note,
                                "witness": _gr_witness(gr, v2.witness)}
                               for p, v2 in rep.failures]
    return _positive(rep.ok, witness, 3)


def _run_example_4_1_12(rng):
    b6 = sym_basis6()

    def zgr(m):
        return sym.SymGroupRing(sym.NamedRing("Z", m), b6)

    outer = sym.SymGroupRing(sym.NamedRing("Z"), b6)
    f = SoftSet(outer, {"a1": zgr(2), "a2": zgr(4), "a3": zgr(6)})
    h = SoftSet(outer, {"a1": zgr(8), "a2": zgr(12)})
    rep = soft_ideal_of(h, f)
    return _positive(rep.ok, None if rep.ok else _report_failures(rep), 2)


# --- chapter 6 examples -----------------------------------------------------


def _mixed_row_a1():
    return tuple(frozenset(x) for x in
                 (("1", "I"), ("0", "3", "3I"), ("0", "2", "2I"), A3,
                  EVENS_10))


def _mixed_row_k2():
    return tuple(frozenset(x) for x in
                 (("1", "2"), ("0", "3I"), ("0", "2I"), A3, ("0", "5")))


def _run_example_6_1_1(rng):
    m = mixed_universe()
    _require(m.order() == 68, "collection order 68")
    f = SoftSet(m, {
        "a1": _mixed_row_a1(),
        "a2": tuple(frozenset(x) for x in
                    (("2", "I"), ("0", "2", "4", "2I", "4I"),
                     ("0", "2", "2I"), A3, ("0", "5"))),
        "a3": tuple(frozenset(x) for x in
                    (("1", "2"), ("0", "3"), ("0", "2"), A3, EVENS_10)),
    })
    rep = soft_is(f, "n-sub")
    cls = classify_mixed(m)
    ok = rep.ok and cls == MIXED
    witness = {"classification": cls}
    if not rep.ok:
        witness.update(_report_failures(rep))
    return _positive(ok, witness, len(f.params))


def _run_example_6_1_2(rng):
    m = mixed_universe()
    printed = tuple(frozenset(x) for x in
                    (("1", "I", "2"), ("0", "3I"), ("0", "2", "2I"), A3,
                     ("0", "2", "4", "5", "6", "8")))
    union = tuple(p | q for p, q in zip(_mixed_row_a1(), _mixed_row_k2()))
    v = is_n_sub(m, printed, require_neutro=False)
    witness = None
    if not v.ok:
        witness = _verdict_plain(v)
        if union != printed:
            witness["recorded-union-defect"] = [
                {"part": i, "missing": sorted(u - p), "extra": sorted(p - u)}
                for i, (u, p) in enumerate(zip(union, printed)) if u != p]
        closed_fifth = is_subgroupoid(m.components[4].structure, printed[4])
        witness["fifth-part-closed"] = bool(closed_fifth.ok)
    return _negative(not v.ok, witness, 1)


def _run_example_6_1_3(rng):
    d = dual_universe()
    f = SoftSet(d, {
        "a1": (frozenset({"e", "2"}), frozenset(alternating_labels(4)),
               EVENS_10, frozenset({"0", "2"}),
               frozenset({"e", "eI", "2", "2I"})),
        "a2": (frozenset({"e", "3"}), S3_IN_S4, frozenset({"0", "5"}),
               frozenset({"0", "2"}), frozenset({"e", "eI", "3", "3I"})),
    })
    rep = soft_is(f, "n-sub")
    cls = classify_mixed(d)
    ok = rep.ok and cls == MIXED_DUAL
    witness = {"classification": cls}
    if not rep.ok:
        witness.update(_report_failures(rep))
    return _positive(ok, witness, len(f.params))


def _run_classify_mixed_6_1_1(rng):
    cls = classify_mixed(mixed_universe())
    ok = cls == WEAK_MIXED
    return (STATUS_HOLDS if ok else STATUS_COUNTEREXAMPLE,
            {"classification": cls, "order": mixed_universe().order()}, 1)


def _run_classify_mixed_6_1_3(rng):
    cls = classify_mixed(dual_universe())
    ok = cls == MIXED_DUAL
    return (STATUS_HOLDS if ok else STATUS_COUNTEREXAMPLE,
            {"classification": cls}, 1)


# ---------------------------------------------------------------------------
# the registry


def _example(cid, universe, runner, expected=STATUS_VERIFIED, note=""):
    return Claim(cid, KIND_EXAMPLE, universe, "recorded-sets", expected,
                 runner, note)


def _prop(cid, universe, runner, generator="exhaustive-pairs", note=""):
    return Claim(cid, KIND_PROP, universe, generator, STATUS_HOLDS, runner,
                 note)


def _remark(cid, universe, runner, note=""):
    return Claim(cid, KIND_REMARK, universe, "pinned-hunt",
                 STATUS_COUNTEREXAMPLE, runner, note)


def _pin_1032():
    return {"a1": P_1032}, {"a1": _reals(10)}


def _pin_lagrange():
    return {"a1": frozenset({"0", "2I"})}, {"a1": S_421_2}


def _pin_strong_421():
    return {"a1": frozenset({"0", "I", "2I", "3I"})}, {"a1": S_421_2}


def _pin_bi_strong():
    return ({"a1": (frozenset({"0", "2I", "4I", "6I", "8I"}),
                    frozenset({"0", "2I"}))},
            {"a1": (frozenset({"0", "5I"}), S_421_2)})


def _pin_ring12():
    return ({"a1": _grid(12, (0, 2, 4, 6, 8, 10), (0, 2, 4, 6, 8, 10))},
            {"a1": _grid(12, (0, 3, 6, 9), (0, 3, 6, 9))})


def _pin_ring12_ideals():
    return ({"a1": _grid(12, (0, 6), (0, 6))},
            {"a1": _grid(12, (0, 4, 8), (0, 4, 8))})


def _pin_gr_c4():
    gr = gr_z2_c4()
    return ({"a1": _span(gr, ("1", "I"))}, {"a1": _span(gr, ("I", "g^2I"))})


def _pin_gr_c3s():
    gr = gr_z2_c3s()
    return ({"a1": _span(gr, ("1", "I"))},
            {"a1": _span(gr, ("I", "gI", "g^2I"))})


def _pin_mixed():
    return {"a1": _mixed_row_a1()}, {"a1": _mixed_row_k2()}


def _build():
    g1032, g421 = groupoid_10_3_2, groupoid_4_2_1
    u1032 = "groupoid(10;3,2)"
    u421 = "groupoid(4;2,1)"
    ubig = "bi(Z10;2,3 | Z4;2,1)+I"
    utri = "tri(Z10;3,2 | Z4;2,1 | Z12;8,4)+I"
    ur6, ur10, ur12 = "ring(Z6+I)", "ring(Z10+I)", "ring(Z12+I)"
    ugr4 = "Z2<cyclic(4)+I>"
    ugr6 = "Z6<cyclic(4)+I>"
    ugr3 = "Z2<cyclic-semigroup(3)+I>"
    usymq = "Q<cyclic(6)+I>"
    usymz = "Z<cyclic(6)+I>"
    umix = "mixed5(order 68)"
    udual = "dual5"

    rows = [
        _example("example-1.1.3", u1032, _run_example_1_1_3,
                 note="one indeterminate and one purely real subgroupoid"),

        _prop("prop-2.1.1", u421,
              _prop_runner(g421, subgroupoids_421, "loose-subgroupoid",
                           ops=("extended-intersection",)),
              note="extended intersections stay closed"),
        _prop("prop-2.1.2", u421,
              _prop_runner(g421, subgroupoids_421, "loose-subgroupoid",
                           ops=("restricted-intersection",)),
              note="restricted intersections stay closed"),
        _prop("prop-2.1.3", u421,
              _prop_runner(g421, subgroupoids_421, "loose-subgroupoid",
                           ops=("and",)),
              note="AND combinations stay closed"),

        _remark("remark-2.1.1", u1032,
                _hunt_runner(g1032, "extended-union", "loose-subgroupoid",
                             _pin_1032, _pin_op_gap("5I", "3")),
                note="3*(5I)+2*3 escapes the union"),
        _remark("remark-2.1.2", u1032,
                _hunt_runner(g1032, "restricted-union", "loose-subgroupoid",
                             _pin_1032, _pin_op_gap("5I", "3")),
                note="same escape under the shared-parameter union"),
        _remark("remark-2.1.3", u1032,
                _hunt_runner(g1032, "or", "loose-subgroupoid",
                             _pin_1032, _pin_op_gap("5I", "3")),
                note="same escape under OR"),

        _example("example-2.1.1", u1032, _run_example_2_1_1,
                 note="second assignment is purely real; the soft structure "
                      "is read as closed rows with at least one carrying I"),
        _example("example-2.1.2", u421, _run_example_2_1_2),
        _example("example-2.1.3", u421, _run_example_2_1_3),
        _example("example-2.1.4", u421, _run_example_2_1_4),
        _example("example-2.1.5", u421, _run_example_2_1_5),
        _example("example-2.1.6", u421, _run_example_2_1_6,
                 note="three parameter labels declared, two assignments "
                      "recorded"),
        _example("example-2.1.7", u421, _run_example_2_1_7,
                 note="three parameter labels declared, two assignments "
                      "recorded"),
    ]

    lagrange_ops = ("extended-intersection", "restricted-intersection",
                    "and", "extended-union", "restricted-union", "or")
    for i, op in enumerate(lagrange_ops, start=1):
        rows.append(_remark(
            "remark-2.1.4-i%d" % i, u421,
            _hunt_runner(g421, op, "lagrange", _pin_lagrange),
            note="order-2 pieces meet in a bare zero or join into an "
                 "order-3 subgroupoid of a 16-element carrier"))

    rows += [
        Claim("classify-lagrange-2.1", KIND_CLASSIFICATION, u421,
              "exhaustive-subs", STATUS_HOLDS, _run_classify_lagrange_2_1,
              note="both dividing and non-dividing proper subgroupoids "
                   "exist"),

        _remark("remark-2.1.8", u421,
                _hunt_runner(g421, "extended-union", "strong",
                             _pin_strong_421, _pin_op_gap("I", "2+2I")),
                note="the recorded items assert closure for the strong "
                     "unions; the computed counterexample supports the "
                     "negated reading used by the sibling union remarks"),

        _example("example-2.2.1", ubig, _run_example_2_2_1),
        _prop("prop-2.2.2", ubig,
              _prop_runner(bi_groupoid, bi_ideal_population, "loose-n-ideal"),
              generator="exhaustive-pairs(improper-only)",
              note="both components admit only the improper ideal"),
        _example("example-2.2.3", ubig, _run_example_2_2_3),
        _remark("remark-2.2.6", ubig,
                _hunt_runner(bi_groupoid, "extended-union", "strong-n-sub",
                             _pin_bi_strong, _pin_part_gap(0, "2I", "5I")),
                note="2*(2I)+3*(5I) = 9I escapes the first part"),

        _example("example-2.3.1", utri, _run_example_2_3_1,
                 expected=STATUS_CONTRADICTS,
                 note="third parts are not closed: 0*2 = 8 and 0*(2I) = 8I "
                      "under 8a+4b (mod 12)"),
        _prop("prop-2.3.2", utri,
              _prop_runner(tri_groupoid, tri_ideal_pool,
                           _ideal_checker_factory, spot=6200),
              generator="pooled-supersets+randomized-spot",
              note="third-component ideals are exactly the supersets of the "
                   "3x3 residue grid"),
        _example("example-2.3.3", utri, _run_example_2_3_3,
                 expected=STATUS_CONTRADICTS,
                 note="third parts are not closed: 0*(2I) = 8I and "
                      "0*(2+2I) = 8+8I under 8a+4b (mod 12)"),

        _prop("prop-3.1.1", ur6,
              _prop_runner(ring_6, subrings_6, "loose-subring",
                           ops=("extended-intersection",))),
        _prop("prop-3.1.2", ur6,
              _prop_runner(ring_6, subrings_6, "loose-subring",
                           ops=("restricted-intersection",))),
        _prop("prop-3.1.3", ur6,
              _prop_runner(ring_6, subrings_6, "loose-subring",
                           ops=("and",))),
        Claim("theorem-3.1.3", KIND_PROP, ur6, "exhaustive-ideals",
              STATUS_HOLDS, _run_theorem_3_1_3,
              note="every two-sided ideal is in particular a subring"),
        _prop("prop-3.1.4", ur6,
              _prop_runner(ring_6, ring_ideals_6, "loose-ring-ideal")),

        _remark("remark-3.1.1", ur12,
                _hunt_runner(ring_12, "extended-union", "loose-subring",
                             _pin_ring12, _pin_add_gap("2", "3")),
                note="2 + 3 = 5 escapes the union of the even and the "
                     "multiples-of-three grids"),
        _remark("remark-3.1.2", ur12,
                _hunt_runner(ring_12, "restricted-union", "loose-subring",
                             _pin_ring12, _pin_add_gap("2", "3")),
                note="same escape under the shared-parameter union"),
        _remark("remark-3.1.3", ur12,
                _hunt_runner(ring_12, "or", "loose-subring",
                             _pin_ring12, _pin_add_gap("2", "3")),
                note="same escape under OR"),
        _remark("remark-3.1.4", ur12,
                _hunt_runner(ring_12, "extended-union", "loose-ring-ideal",
                             _pin_ring12_ideals, _pin_add_gap("6", "4")),
                note="6 + 4 = 10 escapes the union of the <6> and <4> "
                     "ideal grids"),

        _example("example-3.1.1", "<Z u I>", _run_example_3_1_1),
        _example("example-3.1.2", "<C u I>", _run_example_3_1_2),
        _example("example-3.1.3", "<Z u I>", _run_example_3_1_3,
                 note="the recorded union rows fail exactly where stated: "
                      "a cross sum such as 2 + 5 = 7 lands outside"),
        _example("example-3.1.4", ur12, _run_example_3_1_4),
        _example("example-3.1.5", ur10, _run_example_3_1_5,
                 note="the negative ideal statement verifies; the first "
                      "assignment is not even additively closed, so the "
                      "positive framing already fails"),
        _example("example-3.1.6", "<C u I>", _run_example_3_1_6),
        _example("example-3.1.7", ur12, _run_example_3_1_7,
                 expected=STATUS_CONTRADICTS,
                 note="8+2 = 10 escapes two assignments and 6+(6+6I) = 6I "
                      "escapes the inner row, against the recorded ideal "
                      "statement"),

        _prop("prop-4.1.1", ugr4,
              _prop_runner(gr_z2_c4, lambda: span_population("z2c4"),
                           "loose-gr-subneutro"),
              generator="exhaustive-basis-spans",
              note="spans of closed basis subsets intersect in the span of "
                   "the intersected basis"),
        _remark("remark-4.1.1-i1", ugr4,
                _hunt_runner(gr_z2_c4, "restricted-union",
                             "loose-gr-subneutro", _pin_gr_c4,
                             _pin_gr_add_gap("1", "g^2I")),
                note="1 + g^2I escapes the union of two basis spans"),
        _remark("remark-4.1.1-i2", ugr4,
                _hunt_runner(gr_z2_c4, "extended-union",
                             "loose-gr-subneutro", _pin_gr_c4,
                             _pin_gr_add_gap("1", "g^2I")),
                note="same escape under the extended union"),
        _remark("remark-4.1.1-i3", ugr4,
                _hunt_runner(gr_z2_c4, "or", "loose-gr-subneutro",
                             _pin_gr_c4, _pin_gr_add_gap("1", "g^2I")),
                note="same escape under OR"),

        _example("example-4.1.1", usymq, _run_example_4_1_1,
                 note="two rows are purely real spans; the soft structure "
                      "is read as subring rows with at least one carrying I"),
        _example("example-4.1.2", usymq, _run_example_4_1_2,
                 note="the union row fails as recorded: g^3 + g^2 has "
                      "support in neither span"),
        _example("example-4.1.6", ugr6, _run_example_4_1_6),
        _example("example-4.1.8", ugr4, _run_example_4_1_8,
                 expected=STATUS_CONTRADICTS,
                 note="(1+g)*(1+g) = 1+g^2 escapes the second assignment"),
        _example("example-4.1.10", usymz, _run_example_4_1_10),
        _example("example-4.1.11", ugr4, _run_example_4_1_11,
                 expected=STATUS_CONTRADICTS,
                 note="the ideals of v and v+w contain members with real "
                      "support, so the pseudo reading fails; generated "
                      "ideals are recomputed by brute force"),
        _example("example-4.1.12", usymz, _run_example_4_1_12),

        _prop("prop-5.1.1", ugr3,
              _prop_runner(gr_z2_c3s, lambda: span_population("z2c3s"),
                           "loose-gr-subneutro"),
              generator="exhaustive-basis-spans"),
        _remark("remark-5.1.1", ugr3,
                _hunt_runner(gr_z2_c3s, "restricted-union",
                             "loose-gr-subneutro", _pin_gr_c3s,
                             _pin_gr_add_gap("1", "gI")),
                note="1 + gI escapes the union of two basis spans"),

        _prop("prop-6.1.1", umix,
              _prop_runner(mixed_universe, mixed_sub_pool,
                           _sub_checker_factory, spot=6200),
              generator="pooled-parts+randomized-spot"),
        _remark("remark-6.1.1", umix,
                _hunt_runner(mixed_universe, "restricted-union",
                             "loose-n-sub", _pin_mixed,
                             _pin_part_gap(0, "2", "I")),
                note="2*I = 2I escapes the first part of the union row"),

        _example("example-6.1.1", umix, _run_example_6_1_1,
                 expected=STATUS_CONTRADICTS,
                 note="the computed profile is WeakMixed, one assignment "
                      "has a non-closed first part (2*2 = 1), and another "
                      "carries no indeterminate member"),
        _example("example-6.1.2", umix, _run_example_6_1_2,
                 note="the recorded union row fails closure in its first "
                      "part (2*I escapes), as stated; the row also drops a "
                      "member the recomputed union keeps, its fifth part is "
                      "multiplicatively closed despite the recorded aside, "
                      "and the second parameter set is recorded "
                      "inconsistently"),
        _example("example-6.1.3", udual, _run_example_6_1_3),

        Claim("classify-mixed-6.1.1", KIND_CLASSIFICATION, umix,
              "declared-tags", STATUS_HOLDS, _run_classify_mixed_6_1_1,
              note="three indeterminate kinds without a loop give the weak "
                   "profile"),
        Claim("classify-mixed-6.1.3", KIND_CLASSIFICATION, udual,
              "declared-tags", STATUS_HOLDS, _run_classify_mixed_6_1_3,
              note="all four kinds appear plainly beside one indeterminate "
                   "loop"),
    ]
    return tuple(rows)


_REGISTRY = None


def registry():
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = _build()
    return _REGISTRY


def claim_by_id(cid):
    for c in registry():
        if c.id == cid:
            return c
    raise KeyError(cid)
