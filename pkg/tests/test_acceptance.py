"""Acceptance criteria, one test each, each printing a single PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
Criterion 4 is experimental: a miss is reported as xfail with its deviation.
"""

import time

import numpy as np
import pytest

from cauchy_well import (
    Parity,
    WeightedPolynomial,
    apply_AD_closed,
    apply_AD_numeric,
    boundary_value,
    eigenvalue_from_series,
    solution_residual,
    solve_state,
)
from cauchy_well.reference import reference_table
from cauchy_well.residual import chebyshev_grid
from cauchy_well.series import sqrt_series
from cauchy_well.solver import assemble, degree_to_n, eigenvalue_ladder, real_solutions, solve_all
from cauchy_well.trial import expand_trial, make_trial, sweep, trial_residual

GRID = 4001


def report(number, checks):
    """checks: list of (label, ok, detail). Prints one line, returns overall status."""
    ok = all(c[1] for c in checks)
    parts = "; ".join(f"{label}: {detail}{'' if good else ' [miss]'}" for label, good, detail in checks)
    print(f"\nCRITERION {number}: {'PASS' if ok else 'FAIL'} | {parts}")
    return ok


def test_criterion_1_exact_small_case():
    t0 = time.perf_counter()
    sol = solve_state("even", 2)
    ms = 1e3 * (time.perf_counter() - t0)
    checks = [
        ("E", abs(sol.E - 1.2) <= 1e-12, f"{float(sol.E)!r}"),
        ("alpha_2", abs(sol.alphas[1] + 0.4) <= 1e-12, f"{float(sol.alphas[1])!r}"),
        ("C", abs(sol.norm_c - np.sqrt(875 / 996)) <= 1e-9, f"{sol.norm_c:.12f}"),
        ("runtime", True, f"{ms:.1f} ms"),
    ]
    assert report(1, checks)


def test_criterion_2_ground_state_table():
    t0 = time.perf_counter()
    rows = {e.degree: e for e in reference_table().select("I")}
    worst_E = worst_a = 0.0
    extended = []
    for d in (2, 4, 6, 8, 10, 12, 14, 16, 18, 20, 30, 40, 50, 60, 70, 80, 90, 100, 150, 200):
        e = rows[d]
        sol = solve_state("even", d)
        dE, da = abs(sol.E - float(e.E)), abs(sol.alphas[1] - float(e.alphas[0]))
        if d >= 150 and max(dE, da) > 1e-5:
            sol = solve_state("even", d, precision_bits=max(64, 8 * degree_to_n("even", d)))
            dE, da = abs(sol.E - float(e.E)), abs(sol.alphas[1] - float(e.alphas[0]))
            extended.append(d)
        worst_E, worst_a = max(worst_E, dE), max(worst_a, da)
    secs = time.perf_counter() - t0
    checks = [
        ("max |dE|", worst_E <= 1e-5, f"{worst_E:.2e}"),
        ("max |d alpha_2|", worst_a <= 1e-5, f"{worst_a:.2e}"),
        ("extended precision used", True, str(extended or "none")),
        ("runtime", secs < 120, f"{secs:.2f} s"),
    ]
    assert report(2, checks)


def test_criterion_3_ladder_table():
    table = reference_table()
    worst, bad_order = 0.0, []
    for n in (7, 10, 20, 50, 100):
        ladder, ordered = eigenvalue_ladder(n)
        if not ordered:
            bad_order.append(n)
        for _, parity, rank, E in ladder:
            ref = table.lookup(parity, 2 * n + parity.offset, rank, "III")
            worst = max(worst, abs(E - float(ref.E)))
    checks = [
        ("max |dE|", worst <= 1e-5, f"{worst:.2e}"),
        ("interleaving E1<...<E5", not bad_order, "all n" if not bad_order else f"broken at {bad_order}"),
    ]
    assert report(3, checks)


def test_criterion_4_degree_500_experimental():
    t0 = time.perf_counter()
    sol = solve_state("even", 500, precision_bits=128)
    secs = time.perf_counter() - t0
    res = solution_residual(sol, GRID)
    dE = abs(sol.E - 1.157776)
    checks = [
        ("E", dE <= 2e-6, f"{sol.E:.10f} (|dE| = {dE:.2e})"),
        ("residual sup", res.sup < 0.01, f"{res.sup:.6f} at x = {res.argsup:.5f}"),
        ("runtime", True, f"{secs:.1f} s at 128 bits"),
    ]
    if not report(4, checks):
        pytest.xfail("experimental criterion missed; deviation logged above")


def test_criterion_5_oracle_equivalence():
    t0 = time.perf_counter()
    rng = np.random.default_rng(20240)
    x = chebyshev_grid(25)
    worst = 0.0
    for i in range(50):
        parity = Parity.EVEN if i % 2 == 0 else Parity.ODD
        top = (20 - parity.offset) // 2
        alphas = rng.uniform(-1, 1, size=int(rng.integers(1, top + 2)))
        psi = WeightedPolynomial(parity, alphas)
        closed = apply_AD_closed(psi)(x)
        numeric = np.array([apply_AD_numeric(psi, xi) for xi in x])
        worst = max(worst, float(np.max(np.abs(closed - numeric))))
    secs = time.perf_counter() - t0
    checks = [
        ("max |closed - PV|", worst <= 1e-7, f"{worst:.2e}"),
        ("runtime", secs < 60, f"{secs:.1f} s"),
    ]
    assert report(5, checks)


def test_criterion_6_trial_ground_state():
    trial = make_trial("ground", 1443)
    series = eigenvalue_from_series(expand_trial(trial, 10), "even").value
    limit = trial_residual(trial, 1.156, GRID).boundary_limit
    best = sweep("ground", 1400, 1550, 1.156, 1001).argmin
    checks = [
        ("series E (10 coeffs)", abs(series - 1.15318) <= 5e-5, f"{series:.6f} vs 1.15318"),
        ("boundary limit", abs(limit - 0.130753) <= 1e-3, f"{limit:.6f}"),
        ("sweep argmin", abs(best - 1501) <= 2, str(best)),
    ]
    assert report(6, checks)


def test_criterion_7_trial_excited_state():
    trial = make_trial("excited", 1760, gamma_terms=15)
    series = eigenvalue_from_series(expand_trial(trial, 10), "odd").value
    sup = trial_residual(trial, 2.75, GRID).sup
    sw = sweep("excited", 1740, 1790, 2.75, 1001)
    checks = [
        ("series E (10 coeffs)", abs(series - 2.72874) <= 5e-5, f"{series:.6f}"),
        ("sup at 1760", abs(sup - 0.1462) <= 2e-3, f"{sup:.5f}"),
        ("sweep argmin", abs(sw.argmin - 1762) <= 2, str(sw.argmin)),
        ("sup at argmin", abs(sw.minimum - 0.1344) <= 2e-3, f"{sw.minimum:.5f}"),
    ]
    assert report(7, checks)


def test_criterion_8_property_suite():
    rng = np.random.default_rng(8)
    parity_ok = degree_ok = linear_ok = True
    for i in range(200):
        parity = Parity.EVEN if i % 2 else Parity.ODD
        a, b = rng.standard_normal((2, int(rng.integers(1, 15))))
        s = rng.standard_normal()
        ia = apply_AD_closed(WeightedPolynomial(parity, a))
        ib = apply_AD_closed(WeightedPolynomial(parity, b))
        isum = apply_AD_closed(WeightedPolynomial(parity, a + s * b))
        parity_ok &= not np.any(ia.coeffs[1 - parity.offset :: 2])
        degree_ok &= ia.degree == WeightedPolynomial(parity, a).degree
        xs = np.linspace(-1, 1, 9)
        linear_ok &= np.allclose(isum(xs), ia(xs) + s * ib(xs), atol=1e-10)

    worst_boundary = 0.0
    for parity, degree in (("even", 20), ("odd", 21), ("even", 100), ("odd", 101), ("even", 200)):
        for _, alphas, _ in real_solutions(solve_all(assemble(parity, degree_to_n(parity, degree)))):
            img = apply_AD_closed(WeightedPolynomial(parity, alphas))
            worst_boundary = max(worst_boundary, abs(boundary_value(img)) / max(1.0, np.abs(img.coeffs).max()))

    degrees = [e.degree for e in reference_table().select("I")]
    energies = [solve_state("even", d).E for d in degrees]
    monotone = all(b <= a + 1e-12 for a, b in zip(energies, energies[1:]))

    sol = solve_state("even", 100)
    taylor = sol.norm_c * np.convolve(sol.alphas, sqrt_series(50))[:51]
    gap = abs(eigenvalue_from_series(taylor, "even").value - sol.E)

    checks = [
        ("parity preserved", bool(parity_ok), "200 samples"),
        ("degree preserved", bool(degree_ok), "200 samples"),
        ("linearity", bool(linear_ok), "200 samples"),
        ("boundary constraint", worst_boundary <= 1e-10, f"{worst_boundary:.1e}"),
        ("E(n) non-increasing", monotone, f"{len(degrees)} degrees"),
        ("series gap at n=50", gap <= 5e-3, f"{gap:.2e}"),
    ]
    assert report(8, checks)
