from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st
from scipy.stats import wasserstein_distance

from model.errors import DimensionMismatch, DomainError, MassMismatch
from model.moment_engine import density_integral, first_moment, second_moment
from model.simplex_mc import (CdfVector, chunk_rng, estimate_moments, histogram_density_l1, sample_cdf,
                              sample_cdf_batch, transport_oracle, w1, w1_normalized)


@st.composite
def pmfs(draw, n):
    weights = draw(st.lists(st.integers(0, 9), min_size=n, max_size=n).filter(any))
    total = sum(weights)
    return [Fraction(w, total) for w in weights]


@st.composite
def pmf_triples(draw):
    n = draw(st.integers(1, 8))
    return n, draw(pmfs(n)), draw(pmfs(n)), draw(pmfs(n))


def test_w1_examples():
    mu = CdfVector.from_pmf([Fraction(1, 2), Fraction(1, 2), 0])
    nu = CdfVector.from_pmf([0, 0, 1])
    assert mu.values == (Fraction(1, 2), 1, 1)
    assert w1(mu, nu) == Fraction(3, 2)
    assert w1_normalized(mu, nu) == Fraction(3, 4)
    assert w1(CdfVector((1,)), CdfVector((1,))) == 0


def test_cdf_validation():
    with pytest.raises(DomainError):
        CdfVector((Fraction(1, 2), Fraction(1, 3), 1))
    with pytest.raises(DomainError):
        CdfVector((0, Fraction(1, 2)))
    with pytest.raises(DomainError):
        CdfVector(())
    with pytest.raises(DimensionMismatch):
        w1(CdfVector((0, 1)), CdfVector((1,)))


@given(pmf_triples())
def test_metric_axioms(triple):
    n, a, b, c = triple
    mu, nu, rho = CdfVector.from_pmf(a), CdfVector.from_pmf(b), CdfVector.from_pmf(c)
    assert w1(mu, nu) == w1(nu, mu) >= 0
    assert (w1(mu, nu) == 0) == (mu == nu)
    assert w1(mu, rho) <= w1(mu, nu) + w1(nu, rho)
    assert w1(mu, nu) <= n - 1
    assert mu.pmf() == tuple(a)


@given(pmf_triples())
def test_cdf_formula_equals_monotone_coupling(triple):
    _, a, b, _ = triple
    assert w1(CdfVector.from_pmf(a), CdfVector.from_pmf(b)) == transport_oracle(a, b)


@given(pmf_triples())
def test_float_distance_matches_scipy(triple):
    n, a, b, _ = triple
    support = np.arange(1, n + 1)
    expected = wasserstein_distance(support, support, [float(x) for x in a], [float(x) for x in b])
    assert float(w1(CdfVector.from_pmf(a), CdfVector.from_pmf(b))) == pytest.approx(expected, abs=1e-12)


def test_transport_oracle_rejects_bad_mass():
    with pytest.raises(MassMismatch):
        transport_oracle([Fraction(1, 2), Fraction(1, 3)], [0, 1])
    with pytest.raises(DimensionMismatch):
        transport_oracle([1], [0, 1])


def test_sampling_shapes():
    rng = chunk_rng(7, 0)
    point = sample_cdf(5, rng)
    assert point.n == 5
    assert point.values[-1] == 1.0
    batch = sample_cdf_batch(4, 100, chunk_rng(7, 1))
    assert batch.shape == (100, 3)
    assert np.all(np.diff(batch, axis=1) >= 0)
    assert sample_cdf(1, rng).values == (1.0,)


def test_first_coordinate_of_sampled_cdf_has_mean_one_third():
    # the minimum of two uniforms: mean 1/3, variance 1/18
    rng = chunk_rng(13, 0)
    draws = np.array([sample_cdf(3, rng).values[0] for _ in range(20000)])
    assert abs(draws.mean() - 1 / 3) <= 3 * np.sqrt(1 / 18 / len(draws))


def test_chunk_streams_are_independent_of_order():
    first = chunk_rng(42, 3).random(4)
    chunk_rng(42, 0).random(10)
    assert np.array_equal(first, chunk_rng(42, 3).random(4))
    assert not np.array_equal(first, chunk_rng(42, 2).random(4))


def test_estimate_is_deterministic_across_threads(app_config):
    app_config['MC_CHUNK_SIZE'] = 1000
    one = estimate_moments(4, 5500, seed=11, bins=10, threads=1)
    four = estimate_moments(4, 5500, seed=11, bins=10, threads=4)
    assert one == four
    assert sum(frequency for _, _, frequency in one.histogram) == 5500


def test_single_sample():
    estimate = estimate_moments(2, 1, seed=7, bins=10)
    assert sum(frequency for _, _, frequency in estimate.histogram) == 1
    assert estimate.std_error_mean == 0.0


def test_estimate_domain():
    with pytest.raises(DomainError):
        estimate_moments(1, 10, seed=1)
    with pytest.raises(DomainError):
        estimate_moments(3, 0, seed=1)
    with pytest.raises(DomainError):
        estimate_moments(3, 10, seed=-1)


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3, 5, 10])
def test_monte_carlo_agrees_with_exact_moments(n):
    estimate = estimate_moments(n, 10 ** 6, seed=2024 + n, bins=50)
    assert abs(estimate.mean_w1 - float(first_moment(n))) <= 4 * estimate.std_error_mean
    assert abs(estimate.mean_w1_sq - float(second_moment(n))) <= 4 * estimate.std_error_sq


@pytest.mark.slow
def test_histogram_matches_density_of_x2():
    estimate = estimate_moments(2, 10 ** 6, seed=5, bins=50)
    assert histogram_density_l1(estimate, lambda a, b: density_integral(2, a, b)) < 0.02
