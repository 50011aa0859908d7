"""The registered claim suite: every row reports its registered status."""

import pytest

from neutrolab.claims import registry
from neutrolab.engine import (
    KIND_CLASSIFICATION,
    KIND_EXAMPLE,
    KIND_PROP,
    KIND_REMARK,
    STATUS_CONTRADICTS,
    STATUS_COUNTEREXAMPLE,
    STATUS_HOLDS,
    STATUS_VERIFIED,
    run_claim,
    run_suite,
)

CONTRADICTING_ROWS = {
    "example-2.3.1", "example-2.3.3", "example-3.1.7",
    "example-4.1.8", "example-4.1.11", "example-6.1.1",
}


@pytest.fixture(scope="module")
def reg():
    return registry()


@pytest.fixture(scope="module")
def reports(reg):
    out, ok = run_suite(reg, None, seed=0)
    return {r.claim_id: r for r in out}


def test_registry_shape(reg):
    ids = [c.id for c in reg]
    assert len(ids) == len(set(ids)) == 65
    kinds = {KIND_PROP, KIND_REMARK, KIND_EXAMPLE, KIND_CLASSIFICATION}
    assert {c.kind for c in reg} <= kinds
    assert all(c.universe and c.generator for c in reg)


def test_every_claim_reports_its_registered_status(reg, reports):
    mismatched = [(c.id, c.expected, reports[c.id].status)
                  for c in reg if reports[c.id].status != c.expected]
    assert mismatched == []


def test_contradiction_rows_are_exactly_the_preregistered_ones(reg):
    ect = {c.id for c in reg if c.expected == STATUS_CONTRADICTS}
    assert ect == CONTRADICTING_ROWS
    noted = [c for c in reg if c.id in CONTRADICTING_ROWS]
    assert all(c.note for c in noted)     # each carries its analysis


def test_remarks_find_counterexamples(reg, reports):
    for c in reg:
        if c.kind == KIND_REMARK and c.expected == STATUS_COUNTEREXAMPLE:
            r = reports[c.id]
            assert r.witness["kind"] == "union-violation", c.id
            assert r.trials <= 10_000, c.id


def test_pinned_escape_witness(reports):
    w = reports["remark-2.1.1"].witness
    assert w["pinned-pair"] == ["5I", "3"]
    assert w["escapes"] == "6+5I"


def test_sampled_props_meet_the_trial_floor(reports):
    assert reports["prop-2.3.2"].trials >= 10_000
    assert reports["prop-6.1.1"].trials >= 10_000


def test_props_hold_without_violations(reg, reports):
    for c in reg:
        if c.kind == KIND_PROP:
            r = reports[c.id]
            assert r.status == STATUS_HOLDS, c.id
            # a holding proposition may carry bookkeeping, never a violation
            assert r.witness is None or "reason" not in r.witness, c.id


def test_example_rows_run_under_a_second(reg, reports):
    for c in reg:
        if c.kind == KIND_EXAMPLE:
            assert reports[c.id].elapsed_ms < 1000, c.id


def test_verified_examples(reg, reports):
    for c in reg:
        if c.kind == KIND_EXAMPLE and c.id not in CONTRADICTING_ROWS:
            assert reports[c.id].status == STATUS_VERIFIED, c.id


def test_classifications(reports):
    assert reports["classify-lagrange-2.1"].status == STATUS_HOLDS
    assert reports["classify-mixed-6.1.1"].status == STATUS_HOLDS
    assert reports["classify-mixed-6.1.3"].status == STATUS_HOLDS
    w = reports["classify-lagrange-2.1"].witness
    assert w["verdict"] == "WeaklyLagrange"


def test_rerun_is_deterministic(reg, reports):
    for cid in ("remark-2.1.1", "prop-2.1.1", "example-2.1.1", "prop-2.3.2"):
        claim = next(c for c in reg if c.id == cid)
        again = run_claim(claim, seed=0)
        before = reports[cid]
        assert (again.status, again.witness, again.trials) == \
               (before.status, before.witness, before.trials)
