from __future__ import annotations

import pytest

from k6minor.errors import HypothesisViolation, InternalAssertionFailed, JumpDetected
from k6minor.generators import complete, cube, cycle, hoffman_singleton, pg_incidence, petersen
from k6minor.minors import verify_model
from k6minor.pipeline import (
    GIRTH5,
    GIRTH6,
    Bridge,
    claim_d_table,
    grow_maximal_H0,
    k6_girth5,
    k6_girth6,
    patches,
    quotient_counts,
)
from k6minor.planarity import planarity


def test_h0_on_k6():
    assert grow_maximal_H0(complete(6), GIRTH6) == {0, 1}


def test_h0_rejects_sparse():
    with pytest.raises(HypothesisViolation):
        grow_maximal_H0(cycle(6), GIRTH6)


def test_h0_on_pg5():
    g = pg_incidence(5)
    h0 = grow_maximal_H0(g, GIRTH6)
    order, size = quotient_counts(g, set(h0))
    assert order >= 6 and GIRTH6.admits(order, size)


def test_girth6_pg5_certificate():
    g = pg_incidence(5)
    assert (g.n, g.m) == (62, 186)
    r = k6_girth6(g)
    assert r.model.target == "k6" and verify_model(g, r.model)
    assert all(c.holds for c in r.claims)


@pytest.mark.parametrize("g", [cycle(6), complete(6)], ids=["C6", "K6"])
def test_girth6_hypotheses(g):
    with pytest.raises(HypothesisViolation):
        k6_girth6(g)


@pytest.mark.parametrize("g", [petersen(), complete(6)], ids=["Petersen", "K6"])
def test_girth5_hypotheses(g):
    with pytest.raises(HypothesisViolation):
        k6_girth5(g)


def test_claim_d_table():
    rows = claim_d_table()
    assert all(r["below_8"] for r in rows)
    assert len(rows) == 10


def test_girth5_cut_claim_fails_on_hoffman_singleton():
    """The cut-maximality claim does not hold here; see the decisions ledger.
    Non-strict runs still end with a verified K6."""
    g = hoffman_singleton()
    with pytest.raises(InternalAssertionFailed) as exc:
        k6_girth5(g)
    assert exc.value.claim == "girth5-main.D"
    assert len(exc.value.dump["cut"]) == 3  # plus the contracted vertex
    r = k6_girth5(g, strict=False)
    assert verify_model(g, r.model)
    failed = r.claims.failed()
    assert {c.claim for c in failed} == {"girth5-main.D"}
    rec = failed[0].values
    assert rec["cut_order"] == 4 and rec["g0"] == {"order": 24, "size": 69}
    assert GIRTH5.admits(24, 69)
    assert not any(GIRTH5.admits(s["order"], s["size"]) for s in rec["sides"])


def test_patches():
    e = planarity(cube())
    assert patches(e, []) == []
    f = e.faces[0]
    inside = Bridge(frozenset({f[0], f[2]}), frozenset(), ((f[0], 0, 0), (f[2], 0, 0)))
    (p,) = patches(e, [inside])
    assert p.clean and set(p.rim) == set(f)
    assert not patches(e, [inside], x=f[1])[0].clean
    a, b = next((a, b) for a in range(8) for b in range(8) if a < b and not e.cofacial(a, b))
    with pytest.raises(JumpDetected):
        patches(e, [Bridge(frozenset({a, b}), frozenset(), ((a, 0, 0), (b, 0, 0)))])
