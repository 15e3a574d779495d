import random
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from auxetica.decision import (DecideOptions, DecisionError, Definiteness, Verdict, certificate,
                               classify_definiteness, decide, simulate_path)
from auxetica.deformation import Condition, build_system, parametrize
from auxetica.framework import EdgeOrbit, PeriodicFramework, SymmetricMatrix3
from auxetica.lab import family_framework, family_matrix, random_regular_framework
from oracles import finite_difference_rates


def test_golden_one_sixth(f16):
    r = decide(f16)
    assert r.verdict is Verdict.AUXETIC and r.mode == "exact"
    assert r.invariants.S == F(-2287, 4000752)
    assert r.invariants.T == F(-2021723, 18525482136)
    assert r.invariants.delta == F(1000000, 22067482534159923)
    assert r.invariants.k == pytest.approx(25.6407, abs=5e-5)
    lo, hi = r.invariants.k_interval
    assert lo <= r.invariants.k <= hi
    assert r.certificate.gram_velocity.scaled(F(1) / r.certificate.gram_velocity.entries[0]) == \
        family_matrix(F(5, 42))
    assert r.certificate.residual == 0


def test_golden_one_third(f13):
    r = decide(f13)
    assert r.verdict is Verdict.NOT_REGULAR
    assert r.invariants.S == F(-1, 11664) and r.invariants.T == F(1, 157464)
    assert r.invariants.delta == 0
    assert "cubic is singular" in r.diagnosis.detail


def test_golden_five_twelfths(f512):
    r = decide(f512)
    assert r.verdict is Verdict.NOT_AUXETIC
    assert r.invariants.S == F(-9973, 25625808)
    assert r.invariants.T == F(-45441143, 760048652376)
    assert r.invariants.delta == F(7353062500, 37144672966729275363)
    assert r.invariants.k == pytest.approx(10.6042, abs=5e-5)
    assert r.certificate is None


def test_float_mode_agrees(f16, f512):
    for fw in (f16, f512):
        e = decide(fw, DecideOptions(exact=True))
        f = decide(fw.to_float(), DecideOptions(exact=False))
        assert e.verdict is f.verdict and f.mode == "float"
        assert f.invariants.k == pytest.approx(e.invariants.k, rel=1e-9)


def test_exact_requires_rational(f16):
    with pytest.raises(ValueError):
        decide(f16.to_float(), DecideOptions(exact=True))


def test_invalid_framework_raises():
    fw = PeriodicFramework(((F(0),) * 3, (F(1, 6),) * 3), (EdgeOrbit(1, 0, (1, 0, 0)),) * 6,
                           SymmetricMatrix3((F(1), F(-1), F(1), F(0), F(0), F(0))))
    with pytest.raises(ValueError, match="positive definite"):
        decide(fw)


def test_count_failure_reported():
    fw = PeriodicFramework(((F(0),) * 3, (F(1, 6),) * 3), (EdgeOrbit(1, 0, (1, 0, 0)),),
                           SymmetricMatrix3.identity())
    r = decide(fw)
    assert r.verdict is Verdict.NOT_REGULAR and r.diagnosis.condition is Condition.COUNT


@pytest.mark.parametrize("entries, expected", [
    ((1, 1, 1, 0, 0, 0), Definiteness.POS_DEF),
    ((-1, -2, -1, 0, 0, 0), Definiteness.NEG_DEF),
    ((1, -1, 1, 0, 0, 0), Definiteness.INDEFINITE),
    ((1, 1, 0, 0, 0, 0), Definiteness.DEGENERATE),
])
def test_classify_definiteness(entries, expected):
    assert classify_definiteness(SymmetricMatrix3(tuple(F(v) for v in entries))) is expected
    assert classify_definiteness(SymmetricMatrix3(tuple(float(v) for v in entries))) is expected


def test_certificate_linearity(f16):
    pencil = parametrize(build_system(f16))
    one = certificate(f16, pencil, (F(1), F(1), F(1)))
    two = certificate(f16, pencil, (F(2), F(2), F(2)))
    zero = certificate(f16, pencil, (F(0), F(0), F(0)))
    assert one.gram_velocity == family_matrix(F(5, 42))
    assert two.gram_velocity == one.gram_velocity.scaled(2)
    assert two.vertex_velocities == tuple(tuple(2 * c for c in q) for q in one.vertex_velocities)
    assert all(v == 0 for v in zero.gram_velocity.entries)
    assert one.residual == 0


def test_certificate_is_a_flex(f16):
    cert = decide(f16).certificate
    q = [float(c) for v in cert.vertex_velocities for c in v]
    rates = finite_difference_rates(f16, q, cert.gram_velocity.to_numpy())
    assert np.allclose(rates, 0, atol=1e-8)


# invariance properties -------------------------------------------------------


lams = st.sampled_from([F(1, 6), F(5, 12), F(-1, 2), F(7, 6), F(2, 7), F(9, 10), F(-3, 10)])


@settings(max_examples=20, deadline=None)
@given(lams, st.integers(1, 9).map(lambda v: F(v, 4)))
def test_verdict_invariant_under_gram_scaling(lam, c):
    fw = family_framework(lam)
    scaled = fw.with_state(fw.vertices, fw.gram.scaled(c))
    a, b = decide(fw), decide(scaled)
    assert a.verdict is b.verdict
    if a.invariants.J is not None:
        assert a.invariants.J == b.invariants.J


@settings(max_examples=20, deadline=None)
@given(lams, st.permutations(range(6)), st.lists(st.integers(-2, 2), min_size=3, max_size=3))
def test_verdict_invariant_under_relabel_reorder_gauge(lam, perm, t):
    fw = family_framework(lam)
    base = decide(fw).verdict
    # reorder edges
    reordered = PeriodicFramework(fw.vertices, tuple(fw.edges[i] for i in perm), fw.gram)
    assert decide(reordered).verdict is base
    # gauge: translate vertex 1 by an integer vector and compensate the shifts
    tv = tuple(F(v) for v in t)
    moved = tuple(a + b for a, b in zip(fw.vertices[1], tv))
    edges = tuple(EdgeOrbit(e.tail, e.head, tuple(s + t[a] * ((e.tail == 1) - (e.head == 1))
                                                   for a, s in enumerate(e.shift)))
                  for e in fw.edges)
    gauged = PeriodicFramework((fw.vertices[0], moved), edges, fw.gram)
    assert decide(gauged).verdict is base
    # relabel: swap the two orbits and re-anchor the new vertex 0 at the origin
    q = fw.vertices[1]
    swapped = PeriodicFramework(
        ((F(0),) * 3, tuple(-v for v in q)),
        tuple(EdgeOrbit(1 - e.tail, 1 - e.head, e.shift) for e in fw.edges), fw.gram)
    assert decide(swapped).verdict is base


def test_random_frameworks_exact_float_agree():
    for seed in range(3):
        fw = random_regular_framework(6, seed=seed)
        e = decide(fw, DecideOptions(exact=True))
        f = decide(fw, DecideOptions(exact=False))
        assert e.verdict is f.verdict is not Verdict.NOT_REGULAR
        if e.certificate is not None:
            assert e.certificate.residual == 0
            assert classify_definiteness(e.certificate.gram_velocity) is Definiteness.POS_DEF


def test_timings_recorded(f16):
    r = decide(f16)
    assert set(r.timings) == {"elimination", "invariants", "hesse", "certificate"}


# simulation -----------------------------------------------------------------


@pytest.fixture(scope="module")
def traj16(f16):
    return simulate_path(f16, step=1e-3, steps=50)


def test_simulation_drift_and_directions(traj16):
    assert len(traj16) == 51 and traj16.stop_reason is None
    assert traj16.max_drift < 1e-8
    for p in traj16.points[1:]:
        assert classify_definiteness(p.gram_velocity) is Definiteness.POS_DEF


def test_gram_eigenvalues_nondecreasing(traj16):
    ev = [np.linalg.eigvalsh(p.framework.gram.to_numpy()) for p in traj16.points]
    for a, b in zip(ev, ev[1:]):
        assert np.all(b - a > -10 * traj16.step**2)


def test_simulation_edge_lengths_preserved(f16, traj16):
    from auxetica.framework import edge_length_sq
    ref = [float(edge_length_sq(f16, e)) for e in f16.edges]
    last = traj16.points[-1].framework
    assert np.allclose([float(edge_length_sq(last, e)) for e in last.edges], ref, atol=1e-9)


def test_zero_steps(f16):
    t = simulate_path(f16, steps=0)
    assert len(t) == 1 and t.points[0].tau == 0


def test_not_auxetic_at_start(f512):
    with pytest.raises(DecisionError) as exc:
        simulate_path(f512, steps=3)
    assert exc.value.code == "NOT_AUXETIC_AT_START"


def test_bad_step(f16):
    with pytest.raises(ValueError):
        simulate_path(f16, step=0)


@pytest.mark.parametrize("lam", [F(1, 6), F(-1, 2), F(5, 12)])
def test_scaling_preserves_definiteness_class(lam):
    fw = family_framework(lam)
    a = decide(fw)
    b = decide(fw.with_state(fw.vertices, fw.gram.scaled(F(7, 3))))
    assert a.definiteness is b.definiteness
    # with the Gram velocity held fixed the vertex velocities scale by 1/c, so the
    # Gram-velocity forms (and every invariant) are unchanged
    assert a.pencil.forms == b.pencil.forms
    assert b.pencil.back_map == tuple(tuple(v * F(3, 7) for v in f) for f in a.pencil.back_map)
    assert (a.invariants.S, a.invariants.T, a.invariants.J) == (b.invariants.S, b.invariants.T, b.invariants.J)
