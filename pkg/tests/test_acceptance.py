"""End-to-end acceptance criteria, one test per criterion.

Each test carries an ``acceptance`` marker; conftest prints a one-line
PASS/FAIL verdict per criterion after the run.  Tolerances and time
budgets are part of the contract and asserted explicitly.
"""

import time

import numpy as np
import pytest
from scipy.optimize import brentq

import _refs as R
from ptwalk import (
    PTClass,
    WalkState,
    apply_disorder,
    bands,
    berry_connection,
    bloch_vector,
    build_floquet,
    bulk_boundary_check,
    classify_pt,
    closed_form_rt,
    edge_state,
    eig_general,
    evolve,
    find_edge_states_numeric,
    global_berry_phase,
    initial_state,
    make_homogeneous,
    make_inhomogeneous,
    make_params,
    pseudo_anti_unitarity_defect,
    site_probabilities,
    theta_angle,
    topo_numbers,
    winding_number_projected,
)


@pytest.mark.acceptance(1, "algebraic identities on random parameter draws")
def test_criterion_1_identities():
    start = time.perf_counter()
    rng = np.random.default_rng(2024)
    worst_hyper = worst_norm = worst_pair = 0.0
    for _ in range(10_000):
        t1, t2 = rng.uniform(-np.pi, np.pi, 2)
        params = make_params(t1, t2, rng.uniform(0.0, 0.95))
        worst_hyper = max(worst_hyper, abs(params.alpha**2 - params.beta**2 - 1.0))
        k = rng.uniform(-np.pi / 2, np.pi / 2)
        vec = bloch_vector(params, np.array([k]))
        total = vec.d0**2 + vec.d1**2 + vec.d2**2 + vec.d3**2
        worst_norm = max(worst_norm, abs(complex(total[0]) - 1.0))
        point = bands(params, k)
        worst_pair = max(worst_pair, abs(point.lambda_plus * point.lambda_minus - 1.0))
    elapsed = time.perf_counter() - start
    assert worst_hyper < 1e-12
    assert worst_norm < 1e-12
    assert worst_pair < 1e-12
    assert elapsed < 5.0


@pytest.mark.acceptance(2, "four reference sets hit all four spectral classes")
def test_criterion_2_classification():
    start = time.perf_counter()
    got = [
        classify_pt(make_params(*thetas, R.P), n_k=1024)
        for thetas in (R.SET_UNBROKEN, R.SET_EXCEPTIONAL, R.SET_PARTIAL, R.SET_BROKEN)
    ]
    elapsed = time.perf_counter() - start
    assert got == [
        PTClass.Unbroken,
        PTClass.ExceptionalPoint,
        PTClass.PartiallyBroken,
        PTClass.CompletelyBroken,
    ]
    assert elapsed < 1.0


@pytest.mark.acceptance(3, "gap invariants at the three pinned anchor points")
def test_criterion_3_invariants():
    start = time.perf_counter()
    results = {
        thetas: topo_numbers(make_params(*thetas, R.P)) for thetas in (R.BULK_A, R.BULK_B, R.BULK_C)
    }
    elapsed = time.perf_counter() - start
    assert (results[R.BULK_A].nu_zero, results[R.BULK_A].nu_pi) == (-1, -1)
    assert (results[R.BULK_B].nu_zero, results[R.BULK_B].nu_pi) == (-1, -1)
    assert (results[R.BULK_C].nu_zero, results[R.BULK_C].nu_pi) == (1, -1)
    assert elapsed < 1.0


@pytest.mark.acceptance(4, "projected winding equals quantized phase on 1000 draws")
def test_criterion_4_winding_vs_phase():
    start = time.perf_counter()
    rng = np.random.default_rng(77)
    mismatches = 0
    for _ in range(1000):
        t1, t2, p = R.off_boundary_draw(rng)
        params = make_params(t1, t2, p)
        nu = winding_number_projected(params)
        phi = global_berry_phase(params)
        if nu != round(phi / (2 * np.pi)):
            mismatches += 1
    elapsed = time.perf_counter() - start
    assert mismatches == 0
    assert elapsed < 30.0


@pytest.mark.acceptance(5, "connection divergence cancels in the band sum at a gap closing")
def test_criterion_5_divergence_cancellation():
    params = make_params(*R.SET_EXCEPTIONAL, R.P)

    def gap(k):
        return float(bloch_vector(params, np.atleast_1d(k)).d0[0] ** 2) - 1.0

    kc = brentq(gap, -np.pi / 2 + 1e-9, -np.pi / 2 + 0.05, xtol=1e-15)
    h = 1e-6
    for k in (kc - 1e-11, kc + 1e-11):
        sample = berry_connection(params, k)
        assert abs(sample.a_plus) > 1e6
        assert abs(sample.a_minus) > 1e6
        independent = (theta_angle(params, k + h) - theta_angle(params, k - h)) / (2 * h)
        total = sample.a_plus + sample.a_minus
        assert abs(total - independent) < 1e-6 * abs(independent)
    phi = global_berry_phase(params)
    assert abs(phi / (2 * np.pi) - round(phi / (2 * np.pi))) < 1e-6


@pytest.mark.acceptance(6, "interface state counts match invariant differences")
def test_criterion_6_state_counting():
    cases = [
        (R.IFACE_GOLDEN, (2, 0), "zero"),
        (R.IFACE_PI, (0, 2), "pi"),
        (R.IFACE_BROKEN, (2, 0), "zero"),
    ]
    for (left, right), (want_zero, want_pi), sector in cases:
        start = time.perf_counter()
        report = bulk_boundary_check(left, right, p=R.P, n_half=50)
        elapsed = time.perf_counter() - start
        assert (report.delta_nu0, report.delta_nu_pi) == (want_zero, want_pi)
        assert report.counted_zero_states_per_boundary == want_zero
        assert report.counted_pi_states_per_boundary == want_pi
        assert report.agreement
        assert all(s == sector for _, _, s in report.states)
        assert elapsed < 10.0


@pytest.mark.acceptance(7, "analytic interface profile: residual, tails, closed form")
def test_criterion_7_analytic_profile():
    sol = edge_state(R.EDGE_L, R.EDGE_R, "zero", "odd", gamma=R.GAMMA, n_half=50)
    assert sol.residual <= 1e-8

    config = make_inhomogeneous(R.EDGE_L, R.EDGE_R, n_half=50, p=R.P)
    spec = eig_general(build_floquet(config))
    sites = config.sites
    odd = sites % 2 != 0
    candidates = np.flatnonzero(np.abs(spec.eigenvalues - R.GAMMA) < 1e-6)
    assert candidates.size >= 1
    vecs = [spec.right_vectors[:, i].reshape(-1, 2) for i in candidates]
    best = max(vecs, key=lambda v: site_probabilities(v)[odd].sum())
    amps = np.sqrt(site_probabilities(best))
    amps /= amps.max()

    def slope(window):
        mask = np.isin(sites, window)
        return np.polyfit(sites[mask], np.log(amps[mask]), 1)[0]

    left_slope = slope(np.arange(-19, -2, 2))
    right_slope = slope(np.arange(1, 10, 2))
    assert abs(left_slope - sol.kappaL) <= 0.01 * sol.kappaL
    assert abs(-right_slope - sol.kappaR) <= 0.01 * sol.kappaR

    lossless = edge_state(R.EDGE_L, R.EDGE_R, "zero", "odd", gamma=1.0, n_half=50)
    r_ref, t_ref = closed_form_rt(R.EDGE_L, R.EDGE_R)
    assert abs(lossless.r_coeff - r_ref) < 1e-10
    assert abs(lossless.t_coeff - t_ref) < 1e-10


@pytest.mark.acceptance(8, "dynamics converge onto the analytic interface profile")
def test_criterion_8_dynamics_convergence():
    n_half = 50
    config = make_inhomogeneous(*R.IFACE_DYNAMICS, n_half=n_half, p=R.P)
    series = evolve(initial_state(0, "plus", n_half), config, t_max=30)
    sol = edge_state(*R.IFACE_DYNAMICS, "zero", "even", gamma=R.GAMMA, n_half=n_half)
    profile = site_probabilities(sol.psi)

    def l1(t):
        return float(np.sum(np.abs(series.normalized[t] - profile)))

    assert l1(30) < l1(7)
    assert l1(30) < 0.05

    pc0 = series.corrected[:, n_half]
    ratios = pc0[21:31] / pc0[20:30]
    assert np.max(np.abs(ratios - R.GAMMA**2)) < 0.05 * R.GAMMA**2


@pytest.mark.acceptance(9, "interface physics survives static angle disorder")
def test_criterion_9_disorder_robustness():
    n_half = 50
    base = make_inhomogeneous(*R.IFACE_DYNAMICS, n_half=n_half, p=R.P)
    for seed in range(10):
        config = apply_disorder(base, amplitude=R.XI / 4, seed=seed)
        assert pseudo_anti_unitarity_defect(config) <= 1e-12
        spec = eig_general(build_floquet(config))
        found = find_edge_states_numeric(spec, gamma=R.GAMMA)
        assert len(found) >= 1
        series = evolve(initial_state(0, "plus", n_half), config, t_max=5)
        pc0 = series.corrected[:, n_half]
        assert np.all(np.diff(pc0[2:6]) > 0)


@pytest.mark.acceptance(10, "lossless limit is exactly unitary")
def test_criterion_10_unitary_limit():
    n_half = 50
    config = make_inhomogeneous(R.EDGE_L, R.EDGE_R, n_half=n_half, p=0.0)
    series = evolve(initial_state(0, "plus", n_half), config, t_max=100)
    sums = series.raw.sum(axis=1)
    assert np.max(np.abs(sums - 1.0)) <= 1e-10
    vals = np.linalg.eigvals(build_floquet(config))
    assert np.max(np.abs(np.abs(vals) - 1.0)) <= 1e-10
