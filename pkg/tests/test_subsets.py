"""Subset predicates and brute-force enumeration over small finite carriers."""

import pytest

from neutrolab.structures import ResourceCap, neutro_ring, param_groupoid, sym_group
from neutrolab.subsets import (
    WEAKLY_LAGRANGE,
    check_predicate,
    classify_lagrange,
    closure,
    enumerate_subs,
    is_ideal,
    is_lagrange_sub,
    is_strong_subgroupoid,
    is_subgroupoid,
    is_subring,
)

P4 = frozenset({"0", "2", "2I", "2+2I"})
P3 = frozenset({"0", "2I", "2+2I"})


def test_scan_and_generate_agree_on_groupoid_16():
    g = param_groupoid(4, 2, 1)
    for predicate in ("subgroupoid", "loose-subgroupoid", "ideal"):
        scan = enumerate_subs(g, predicate, strategy="scan")
        gen = enumerate_subs(g, predicate, strategy="generate")
        assert scan == gen, predicate


def test_scan_and_generate_agree_on_ring_16():
    r = neutro_ring(4)
    for predicate in ("subring", "loose-subring", "loose-ring-ideal"):
        scan = enumerate_subs(r, predicate, strategy="scan")
        gen = enumerate_subs(r, predicate, strategy="generate")
        assert scan == gen, predicate


def test_ring6_ideal_count_matches_product_ring_oracle():
    # a+bI <-> (a, a+b) splits the carrier into a product of two Z6 copies,
    # so its ideals are the 4 x 4 products of Z6's ideals: 16 in all.
    ideals = enumerate_subs(neutro_ring(6), "loose-ring-ideal")
    assert len(ideals) == 16
    sizes = sorted(len(s) for s in ideals)
    assert sizes == sorted((a * b) for a in (1, 2, 3, 6) for b in (1, 2, 3, 6))


def test_every_product_lands_in_the_4_grid():
    # x*y = 8x + 4y (mod 12): both halves of every product are multiples of 4,
    # so a subset is an ideal exactly when it contains the whole 3x3 grid.
    g = param_groupoid(12, 8, 4)
    e4 = frozenset({"0", "4", "8", "4I", "8I",
                    "4+4I", "4+8I", "8+4I", "8+8I"})
    assert is_ideal(g, e4).ok
    assert is_ideal(g, e4 | {"1", "7+2I"}, strict=True).ok
    missing_4 = (e4 - {"4"}) | {"1"}
    assert not is_ideal(g, missing_4).ok
    assert not is_ideal(g, frozenset({"0"})).ok     # 1*0 = 8 escapes


def test_unit_translations_force_improper_ideals():
    # x*y = 3x + 2y (mod 10): 3 is a unit, so absorbing any p drags in 3m + 2p
    # for every m, i.e. the whole carrier.
    g = param_groupoid(10, 3, 2)
    full = frozenset(g.elements)
    v = is_ideal(g, full)
    assert v.ok and "improper" in v.flags
    assert not is_ideal(g, closure(g, {"0"})).ok


def test_subgroupoid_verdicts():
    g = param_groupoid(4, 2, 1)
    assert is_subgroupoid(g, P4, strict=True).ok
    v = is_subgroupoid(g, {"0", "2"}, strict=True)
    assert not v.ok and "no-indeterminate" in v.flags
    assert is_subgroupoid(g, {"0", "2"}).ok
    v = is_subgroupoid(g, {"0", "1"})
    assert not v.ok and v.witness is not None
    assert not is_subgroupoid(g, ()).ok


def test_strong_subgroupoid():
    g = param_groupoid(4, 2, 1)
    assert is_strong_subgroupoid(g, {"0", "2I"}).ok
    v = is_strong_subgroupoid(g, P4)
    assert not v.ok and v.witness == ("2",)


def test_lagrange_verdicts_and_classification():
    g = param_groupoid(4, 2, 1)
    assert is_lagrange_sub(g, P4).ok
    assert not is_lagrange_sub(g, P3).ok
    with pytest.raises(ValueError):
        is_lagrange_sub(g, {"0", "2"})      # strict only
    rep = classify_lagrange(g)
    assert rep.verdict == WEAKLY_LAGRANGE
    assert P4 in rep.dividing
    assert P3 in rep.non_dividing


def test_classify_lagrange_group_case():
    rep = classify_lagrange(sym_group(3))
    # plain groups carry no indeterminate member, so no strict subgroupoids
    assert rep.verdict == "LagrangeFree"
    assert not rep.dividing and not rep.non_dividing


def test_closure():
    g = param_groupoid(4, 2, 1)
    assert closure(g, {"1"}) == frozenset({"1", "3"})
    assert closure(g, {"0"}) == frozenset({"0"})
    assert is_subgroupoid(g, closure(g, {"1", "I"})).ok
    with pytest.raises(ResourceCap):
        closure(param_groupoid(10, 3, 2), {"1"}, cap=3)


def test_subring_verdicts():
    r = neutro_ring(4)
    assert is_subring(r, {"0", "2", "2I", "2+2I"}, strict=True).ok
    assert is_subring(r, {"0", "2"}).ok
    v = is_subring(r, {"0", "2"}, strict=True)
    assert not v.ok
    v = is_subring(r, {"0", "1"})
    assert not v.ok and v.witness[2] in ("add", "mul", "neg")


def test_check_predicate_dispatch_and_errors():
    g = param_groupoid(4, 2, 1)
    assert check_predicate(g, P4, "subgroupoid").ok
    assert check_predicate(g, P4, "lagrange").ok
    with pytest.raises(ValueError):
        check_predicate(g, P4, "no-such-predicate")
    with pytest.raises(ValueError):
        check_predicate(neutro_ring(4), {"0"}, "subgroupoid")
    with pytest.raises(ValueError):
        check_predicate("not a universe", {"0"}, "subgroupoid")


def test_every_strong_sub_is_strict():
    g = param_groupoid(4, 2, 1)
    strong = enumerate_subs(g, "strong")
    strict = enumerate_subs(g, "subgroupoid")
    assert strong and set(strong) <= set(strict)
