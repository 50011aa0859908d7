"""Carrier builders: parametric groupoids, neutro doubles, loops, symmetric groups."""

import pytest

from neutrolab.structures import (
    alternating_labels,
    build_from_table,
    cyclic_neutro_group,
    label_is_neutro,
    label_is_zero,
    mult_magma,
    neutro_double,
    neutro_ring,
    param_groupoid,
    sym_group,
    verify_kind,
)


def test_param_groupoid_oracle():
    g = param_groupoid(4, 2, 1)          # x*y = 2x + y (mod 4) over Z4 + Z4 I
    assert g.name == "groupoid(4;2,1)"
    assert len(g) == 16
    assert g.op("1", "1") == "3"
    assert g.op("I", "I") == "3I"
    assert g.op("2I", "2") == "2"            # 4I + 2 = 2 (mod 4)
    assert g.op(g.op("1", "1"), "2") == "0"
    assert g.op("1", g.op("1", "2")) == "2"   # non-associative witness


def test_param_groupoid_kind():
    rep = verify_kind(param_groupoid(4, 2, 1))
    assert rep.best() == "Groupoid"
    assert not rep.semigroup
    assert "not-associative" in rep.witnesses


def test_loop_table_is_a_loop_not_a_semigroup():
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
    l7 = build_from_table(elems, table, name="loop7(4)")
    assert l7.op("1", "2") == "5"
    assert l7.op("2", "1") == "5"            # this member of the family commutes
    assert l7.op("3", "6") == "1"
    rep = verify_kind(l7)
    assert rep.loop and not rep.semigroup
    assert rep.identity == "e"
    assert rep.best() == "Loop"
    # non-associativity: (1*2)*3 = 5*3 = 4 but 1*(2*3) = 1*6 = 7
    assert l7.op(l7.op("1", "2"), "3") == "4"
    assert l7.op("1", l7.op("2", "3")) == "7"


def test_sym_group():
    s3 = sym_group(3)
    assert len(s3) == 6
    rep = verify_kind(s3)
    assert rep.group and rep.best() == "Group"
    assert rep.identity == "e"
    assert s3.op("(12)", "(12)") == "e"
    assert alternating_labels(3) == frozenset({"e", "(123)", "(132)"})
    assert alternating_labels(4) <= frozenset(sym_group(4).elements)
    assert len(alternating_labels(4)) == 12


def test_cyclic_neutro_group_is_semigroup_not_group():
    m = cyclic_neutro_group(4)
    assert len(m) == 8
    assert set(m.elements) == {"1", "g", "g^2", "g^3", "I", "gI", "g^2I", "g^3I"}
    assert m.op("g^3", "g") == "1"
    assert m.op("g", "gI") == "g^2I"
    assert m.op("I", "I") == "I"
    assert m.op("gI", "g^3I") == "I"
    rep = verify_kind(m)
    assert rep.semigroup and not rep.group and not rep.loop
    assert rep.identity == "1"
    assert rep.best() == "Semigroup"


def test_mult_magma_carriers():
    full = mult_magma(3)                     # all of Z3 + Z3 I
    assert len(full) == 9
    assert full.op("2", "2I") == "I"         # 4I = I (mod 3)
    union = mult_magma(4, pure_union=True)   # Z4 u Z4 I, zero shared
    assert len(union) == 7
    assert set(union.elements) == {"0", "1", "2", "3", "I", "2I", "3I"}
    assert union.op("3", "2I") == "2I"       # 6I = 2I (mod 4)
    plain = mult_magma(10, neutro=False)
    assert len(plain) == 10
    assert plain.op("7", "3") == "1"
    assert verify_kind(plain).best() == "Semigroup"


def test_neutro_double():
    s3 = sym_group(3)
    d = neutro_double(s3)
    assert len(d) == 12
    assert "eI" in d.elements and "(123)I" in d.elements
    assert d.op("(12)", "(12)I") == "eI"
    assert d.op("(12)I", "(12)I") == "eI"
    rep = verify_kind(d)
    assert rep.semigroup and not rep.group


def test_neutro_ring_tables():
    r = neutro_ring(4)
    assert r.name == "ring(Z4+I)"
    assert len(r) == 16
    assert r.add("2", "2") == "0"
    assert r.add("3+2I", "1+2I") == "0"
    assert r.mul("2I", "2I") == "0"          # (2I)^2 = 4I = 0 (mod 4)
    assert r.mul("I", "3") == "3I"
    assert r.sub("1", "2I") == "1+2I"
    assert r.axiom_violations() == []


def test_build_from_table_accepts_indices_and_rejects_junk():
    by_index = build_from_table(["a", "b"], [[0, 1], [1, 0]], name="z2")
    assert by_index.op("b", "b") == "a"
    assert by_index.meta["kind"] == "cayley"
    with pytest.raises(ValueError):
        build_from_table(["a", "b"], [["a", "c"], ["b", "a"]])
    with pytest.raises(ValueError):
        build_from_table(["a", "b"], [["a"], ["b", "a"]])


def test_label_predicates():
    assert label_is_neutro("2I") and label_is_neutro("1+3I") and label_is_neutro("I")
    assert not label_is_neutro("2") and not label_is_neutro("0")
    assert label_is_zero("0") and not label_is_zero("2I")
