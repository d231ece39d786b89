import math
from itertools import product

import mpmath
import pytest

from frugal.bounds import (BOUND_NAMES, binomial_cdf, binomial_tail_bound_check, c_beta,
                           erdos_gallai_bound, format_reports, reference_upper, kst_bound,
                           partial_exp_log_gap, randomgraph_k, report, sigma_bound_cycle,
                           tail_preconditions)
from frugal.generators import gnp, pg_incidence
from frugal.graph import is_c2t_free, is_pt_free, max_degree
from frugal.reduction import find_special_pairs, special_degrees
import oracles

TAIL_GRID = [(t, i * 0.05 / t, beta)
             for beta in (1, 2, 3)
             for t in (1000, 2000, 5000, 10000, 20000)
             for i in range(2, 20)]


def test_erdos_gallai_examples():
    assert erdos_gallai_bound(2, 10) == 0
    assert erdos_gallai_bound(4, 10) == 10
    with pytest.raises(ValueError):
        erdos_gallai_bound(1, 5)


def test_erdos_gallai_random_instances():
    for seed in range(30):
        g = gnp(10, 0.2, seed=seed)
        for t in (3, 4, 5, 6):
            if is_pt_free(g, t):
                assert g.m <= erdos_gallai_bound(t, g.n)


def test_erdos_gallai_atlas_with_naive_path_search():
    for g in oracles.all_small_graphs(6):
        for t in (3, 4, 5):
            if not oracles.contains_path(g, t):
                assert g.m <= erdos_gallai_bound(t, g.n)


def test_kst_examples():
    assert kst_bound(2, 2, 2, 2) == pytest.approx(2 + 2 ** 0.5)
    assert kst_bound(5, 4, 2, 2) == pytest.approx(12)
    with pytest.raises(ValueError):
        kst_bound(1, 4, 2, 2)


def _z22_brute(a, b):
    best = 0
    for bits in range(1 << (a * b)):
        rows = [(bits >> (i * b)) & ((1 << b) - 1) for i in range(a)]
        if all(bin(rows[i] & rows[j]).count("1") <= 1
               for i in range(a) for j in range(i + 1, a)):
            best = max(best, bin(bits).count("1"))
    return best


@pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)])
def test_zarankiewicz_search_matches_brute_force(a, b):
    assert oracles.zarankiewicz_22(a, b) == _z22_brute(a, b)


def test_zarankiewicz_known_values():
    assert [oracles.zarankiewicz_22(n, n) for n in (2, 3, 4, 5)] == [3, 6, 9, 12]


def test_kst_against_exhaustive_search():
    for a, b in product(range(2, 6), repeat=2):
        assert oracles.zarankiewicz_22(a, b) <= kst_bound(a, b, 2, 2)


def test_exp_log_gap_examples():
    assert partial_exp_log_gap(0.0, 3) == 0.0
    assert partial_exp_log_gap(1.0, 1) == pytest.approx(1 - 1 / (2 * math.e) - math.log(2))
    assert partial_exp_log_gap(1.0, 1) == pytest.approx(0.1230, abs=1e-4)
    with pytest.raises(ValueError):
        partial_exp_log_gap(1.5, 2)
    with pytest.raises(ValueError):
        partial_exp_log_gap(0.5, 0)


def test_exp_log_gap_matches_high_precision():
    with mpmath.workdps(40):
        for x in (0.1, 0.5, 0.99):
            for n in (1, 3, 6):
                xs = mpmath.mpf(x)
                lhs = mpmath.log(sum(xs ** i / mpmath.factorial(i) for i in range(n + 1)))
                rhs = xs - xs ** (n + 1) / (mpmath.e * mpmath.factorial(n + 1))
                assert partial_exp_log_gap(x, n) == pytest.approx(float(rhs - lhs), abs=1e-14)


def test_exp_log_gap_sweep():
    for i in range(101):
        for n in range(1, 7):
            assert partial_exp_log_gap(i / 100, n) >= -1e-12


def test_binomial_cdf_matches_direct_sum():
    exact = sum(math.comb(50, i) * 0.1 ** i * 0.9 ** (50 - i) for i in range(3))
    assert float(binomial_cdf(50, 0.1, 2)) == pytest.approx(exact, rel=1e-12)


def test_tail_example_outside_preconditions():
    # tp = 2 breaks tp < 1, so the default call refuses; the comparison
    # itself still holds when evaluated anyway
    with pytest.raises(ValueError, match="not below 1"):
        binomial_tail_bound_check(1000, 0.002, 1, 10)
    rep = binomial_tail_bound_check(1000, 0.002, 1, 10, enforce_preconditions=False)
    assert rep.value == pytest.approx(math.exp(-0.5))
    assert rep.detail["exact"] <= rep.value
    assert rep.satisfied and rep.detail["preconditions_met"] is False


def test_tail_refusals():
    assert tail_preconditions(1000, 0.00001, 1, 10)  # tp below 1/d
    with pytest.raises(ValueError):
        binomial_tail_bound_check(100, 0.5, 1, 10)


def test_tail_grid():
    valid = [(t, p, b) for t, p, b in TAIL_GRID if not tail_preconditions(t, p, b, 10)]
    assert len(valid) >= 100
    for t, p, b in valid:
        rep = binomial_tail_bound_check(t, p, b, 10)
        assert rep.satisfied
        assert rep.detail["exact"] <= rep.detail["factored"] <= rep.value


def test_randomgraph_k_examples():
    assert randomgraph_k(math.e, 1) == pytest.approx(math.e ** 2 / 8192)
    for d in (3.0, 10.0, 1e4):
        assert randomgraph_k(d, 1) == pytest.approx(d ** 2 / (8192 * math.log(d)))
    with pytest.raises(ValueError):
        randomgraph_k(1.0, 1)


def test_randomgraph_k_monotone():
    for beta in (1, 2, 3):
        vals = [randomgraph_k(3 + 0.5 * i, beta) for i in range(200)]
        assert all(a < b for a, b in zip(vals, vals[1:]))


def test_c_beta_examples():
    assert c_beta(1) == pytest.approx(1 / 819200)
    assert c_beta(2) == pytest.approx(1 / (100 * 98304 ** 0.5))
    vals = [c_beta(b) for b in range(1, 7)]
    assert all(v > 0 for v in vals)
    # the root (4^(b+5) (b+1)!)^(-1/b) grows with b, so the sequence increases
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_k_and_c_beta_identity():
    for beta in (1, 2, 3, 4):
        for d in (3.0, 20.0, 500.0):
            expected = 100 * c_beta(beta) * d ** (1 + 1 / beta) / math.log(d) ** (1 / beta)
            assert randomgraph_k(d, beta) == pytest.approx(expected, rel=1e-12)


def test_sigma_bound():
    assert sigma_bound_cycle(2, 7) == 7
    assert sigma_bound_cycle(5, 7) == 7
    g = pg_incidence(3, 1)
    assert is_c2t_free(g, 2)
    delta = max_degree(g)
    bound = sigma_bound_cycle(2, delta)
    assert max(special_degrees(g, 4)) < bound
    assert find_special_pairs(g, 4) == []


def test_reference_upper_value():
    assert reference_upper(8, 2) == pytest.approx(math.e ** 3 / 2 * 8 ** 1.5)


def test_reports_and_formatting():
    reps = [report("kst", a=2, b=2, s=2, t=2), report("exp_log_gap", x=0.5, n=2),
            report("erdos_gallai", t=4, n=10)]
    assert reps[1].satisfied is True and reps[0].satisfied is None
    text = format_reports(reps)
    assert text.splitlines()[0].split() == ["name", "inputs", "value", "satisfied"]
    assert "3.41421" in text
    csv_text = format_reports(reps, "csv")
    assert csv_text.splitlines()[1] == "kst,a=2 b=2 s=2 t=2,3.41421,"
    with pytest.raises(ValueError):
        report("nope")
    assert "binomial_tail" in BOUND_NAMES


@pytest.mark.parametrize("name,kw", [
    ("erdos_gallai", dict(t=3, n=5)), ("kst", dict(a=3, b=3, s=2, t=2)),
    ("exp_log_gap", dict(x=0.3, n=2)), ("randomgraph_k", dict(d=10.0, beta=2)),
    ("c_beta", dict(beta=3)), ("sigma_cycle", dict(t=2, delta=5)),
    ("reference_upper", dict(delta=5.0, beta=1)),
    ("binomial_tail", dict(t=20000, p=0.9 / 20000, beta=3, d=10)),
])
def test_report_values_finite_non_negative(name, kw):
    rep = report(name, **kw)
    assert math.isfinite(rep.value) and rep.value >= 0
