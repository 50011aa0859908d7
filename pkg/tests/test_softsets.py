"""Parameterised families of subsets and their six binary operations."""

import pytest

from neutrolab.softsets import (
    OPS,
    SoftSet,
    and_op,
    disjoint_union,
    extended_intersection,
    extended_union,
    is_absolute,
    or_op,
    restricted_intersection,
    restricted_union,
    same_param_intersection,
    soft_ideal_of,
    soft_is,
    soft_lagrange_class,
    soft_neutro_params,
    soft_sub_of,
    value_contains,
    value_intersect,
    value_union,
)
from neutrolab.structures import param_groupoid

P4 = frozenset({"0", "2", "2I", "2+2I"})
P3 = frozenset({"0", "2I", "2+2I"})
P2 = frozenset({"0", "2I"})


@pytest.fixture(scope="module")
def g421():
    return param_groupoid(4, 2, 1)


def test_softset_normalises(g421):
    f = SoftSet(g421, {"b": ["0", "2I"], "a": P4})
    assert f.params == ("a", "b")
    assert isinstance(f.value("b"), frozenset)
    with pytest.raises(ValueError):
        SoftSet(g421, {})


def test_ops_table_names():
    assert set(OPS) == {"restricted-intersection", "extended-intersection",
                        "restricted-union", "extended-union", "and", "or"}


def test_restricted_ops_need_shared_params(g421):
    f = SoftSet(g421, {"a1": P4})
    k = SoftSet(g421, {"a2": P3})
    for op in (restricted_intersection, restricted_union):
        with pytest.raises(ValueError):
            op(f, k)


def test_restricted_vs_extended(g421):
    f = SoftSet(g421, {"a1": P4, "a2": P2})
    k = SoftSet(g421, {"a2": P3, "a3": P2})
    ri = restricted_intersection(f, k)
    assert ri.params == ("a2",)
    assert ri.value("a2") == P2 & P3
    ei = extended_intersection(f, k)
    assert ei.params == ("a1", "a2", "a3")
    assert ei.value("a1") == P4 and ei.value("a3") == P2
    ru = restricted_union(f, k)
    assert ru.params == ("a2",)
    assert ru.value("a2") == P2 | P3
    eu = extended_union(f, k)
    assert eu.params == ("a1", "a2", "a3")
    assert eu.value("a2") == P2 | P3


def test_literal_union_keeps_every_parameter(g421):
    f = SoftSet(g421, {"a1": P4, "a2": P2})
    k = SoftSet(g421, {"a2": P3, "a3": P2})
    lit = restricted_union(f, k, literal=True)
    ext = extended_union(f, k)
    assert lit.params == ext.params
    assert all(lit.value(p) == ext.value(p) for p in lit.params)


def test_and_or_cross_products(g421):
    f = SoftSet(g421, {"a1": P4})
    k = SoftSet(g421, {"b1": P3, "b2": P2})
    a = and_op(f, k)
    assert a.params == ("a1&b1", "a1&b2")
    assert a.value("a1&b2") == P4 & P2
    o = or_op(f, k)
    assert o.params == ("a1|b1", "a1|b2")
    assert o.value("a1|b1") == P4 | P3


def test_strict_param_preconditions(g421):
    f = SoftSet(g421, {"a1": P4})
    k = SoftSet(g421, {"a1": P3, "a2": P2})
    with pytest.raises(ValueError):
        same_param_intersection(f, k)
    with pytest.raises(ValueError):
        disjoint_union(f, k)
    assert disjoint_union(f, SoftSet(g421, {"a9": P2})).params == ("a1", "a9")


def test_universe_identity_is_required():
    f = SoftSet(param_groupoid(4, 2, 1), {"a1": P4})
    k = SoftSet(param_groupoid(4, 2, 1), {"a1": P3})
    with pytest.raises(ValueError):
        restricted_intersection(f, k)


def test_soft_is_reports_failures(g421):
    good = SoftSet(g421, {"a1": P4, "a2": P2})
    assert soft_is(good, "subgroupoid").ok
    bad = SoftSet(g421, {"a1": P4, "a2": {"0", "1"}})
    rep = soft_is(bad, "subgroupoid")
    assert not rep.ok
    assert [p for p, _ in rep.failures] == ["a2"]
    empty = soft_is(SoftSet(g421, {"a1": []}), "subgroupoid")
    assert not empty.ok
    assert "empty-assignment" in empty.failures[0][1].flags


def test_soft_lagrange_classes(g421):
    assert soft_lagrange_class(SoftSet(g421, {"a1": P4, "a2": P2})) == "Lagrange"
    assert soft_lagrange_class(SoftSet(g421, {"a1": P4, "a2": P3})) == "WeaklyLagrange"
    assert soft_lagrange_class(SoftSet(g421, {"a1": P3})) == "LagrangeFree"
    with pytest.raises(ValueError):
        soft_lagrange_class(SoftSet(g421, {"a1": {"0", "2"}}))


def test_soft_sub_of(g421):
    f = SoftSet(g421, {"a1": P4, "a2": P3})
    h = SoftSet(g421, {"a1": P2})
    assert soft_sub_of(h, f).ok
    not_inside = SoftSet(g421, {"a1": {"0", "3I"}})
    rep = soft_sub_of(not_inside, f)
    assert not rep.ok and "not inside parent" in rep.failures[0][1].note
    stray = SoftSet(g421, {"zz": P2})
    rep = soft_sub_of(stray, f)
    assert not rep.ok and rep.note == "parameters are not a subset"


def test_soft_ideal_of_absorbs_against_parent():
    g = param_groupoid(12, 8, 4)
    e4 = frozenset({"0", "4", "8", "4I", "8I", "4+4I", "4+8I", "8+4I", "8+8I"})
    full = frozenset(g.elements)
    f = SoftSet(g, {"a1": full, "a2": full})
    h = SoftSet(g, {"a1": e4})
    assert soft_ideal_of(h, f).ok
    rep = soft_ideal_of(SoftSet(g, {"a1": {"0"}}), f)
    assert not rep.ok and "absorbing" in rep.failures[0][1].note


def test_value_algebra():
    assert value_union(frozenset("ab"), frozenset("bc")) == frozenset("abc")
    assert value_intersect(frozenset("ab"), frozenset("bc")) == frozenset("b")
    assert value_contains(frozenset("a"), frozenset("ab"))
    parts_a = (frozenset({"0"}), frozenset({"e"}))
    parts_b = (frozenset({"1"}), frozenset({"e", "x"}))
    assert value_union(parts_a, parts_b) == (frozenset({"0", "1"}),
                                             frozenset({"e", "x"}))
    assert value_intersect(parts_a, parts_b) == (frozenset(), frozenset({"e"}))
    assert value_contains(parts_a, value_union(parts_a, parts_b))


def test_absolute_and_neutro_params(g421):
    full = frozenset(g421.elements)
    assert is_absolute(SoftSet(g421, {"a1": full, "a2": full}))
    assert not is_absolute(SoftSet(g421, {"a1": full, "a2": P4}))
    f = SoftSet(g421, {"a1": P4, "a2": frozenset({"0", "2"})})
    assert soft_neutro_params(f) == ("a1",)
