""" W1 between distributions on {1,...,n}, a transport-plan oracle, and Monte Carlo on the CDF simplex """
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from __init__ import app
from model.errors import DimensionMismatch, DomainError, MassMismatch


@dataclass(frozen=True)
class CdfVector:
    """
    A point of the CDF simplex: nondecreasing values in [0, 1] whose last entry is 1.

    Values are Fractions for exact work or floats for sampled work.
    """
    values: tuple

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, 'values', values)
        if not values:
            raise DomainError("a CDF vector needs at least one entry")
        if values[-1] != 1:
            raise DomainError(f"last CDF entry must be 1, got {values[-1]}")
        if values[0] < 0:
            raise DomainError(f"CDF entries must be >= 0, got {values[0]}")
        if any(a > b for a, b in zip(values, values[1:])):
            raise DomainError("CDF entries must be nondecreasing")

    @property
    def n(self):
        return len(self.values)

    @classmethod
    def from_pmf(cls, pmf):
        """Partial sums of a probability vector, the map from the probability simplex onto C_n."""
        running, values = 0, []
        for mass in pmf:
            if mass < 0:
                raise DomainError(f"probabilities must be >= 0, got {mass}")
            running += mass
            values.append(running)
        if values and isinstance(values[-1], float) and math.isclose(values[-1], 1.0):
            values[-1] = 1.0
        return cls(tuple(values))

    def pmf(self):
        return tuple(b - a for a, b in zip((0,) + self.values[:-1], self.values))


def w1(mu, nu):
    """
    W1(mu, nu) = sum_i |F_mu(i) - F_nu(i)| for two CDF vectors of the same length.

    The scalar type follows the inputs: Fractions give an exact answer.
    """
    if mu.n != nu.n:
        raise DimensionMismatch(f"distributions live on {mu.n} and {nu.n} points")
    return sum((abs(a - b) for a, b in zip(mu.values, nu.values)), 0)


def w1_normalized(mu, nu):
    """W1 / (n - 1), a metric of diameter one."""
    if mu.n != nu.n:
        raise DimensionMismatch(f"distributions live on {mu.n} and {nu.n} points")
    if mu.n < 2:
        raise DomainError("unit normalization needs n >= 2")
    distance = w1(mu, nu)
    if isinstance(distance, float):
        return distance / (mu.n - 1)
    return Fraction(distance) / (mu.n - 1)


def _check_pmf(pmf):
    if any(m < 0 for m in pmf):
        raise MassMismatch("probabilities must be nonnegative")
    total = sum(pmf)
    exact = all(isinstance(m, (int, Fraction)) for m in pmf)
    if (total != 1) if exact else not math.isclose(total, 1.0, abs_tol=1e-12):
        raise MassMismatch(f"probabilities sum to {total}, not 1")


def transport_oracle(mu_pmf, nu_pmf):
    """
    Optimal transport cost on the line metric by the monotone coupling: the lowest-index
    remaining mass of mu is always matched with the lowest-index remaining mass of nu.

    Parameters:
    - mu_pmf (sequence): probabilities on points 1..n
    - nu_pmf (sequence): probabilities on points 1..n

    Returns:
    - the cost sum mass * |i - j|, exact when the inputs are Fractions
    """
    if len(mu_pmf) != len(nu_pmf):
        raise DimensionMismatch(f"distributions live on {len(mu_pmf)} and {len(nu_pmf)} points")
    _check_pmf(mu_pmf)
    _check_pmf(nu_pmf)
    supply, demand = list(mu_pmf), list(nu_pmf)
    i = j = 0
    cost = 0
    n = len(supply)
    while i < n and j < n:
        if supply[i] == 0:
            i += 1
            continue
        if demand[j] == 0:
            j += 1
            continue
        moved = min(supply[i], demand[j])
        cost += moved * abs(i - j)
        supply[i] -= moved
        demand[j] -= moved
    return cost


def sample_cdf(n, rng):
    """Uniform point of C_n: the sorted order statistics of n-1 uniforms, then 1."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    draws = np.sort(rng.random(n - 1))
    return CdfVector(tuple(float(u) for u in draws) + (1.0,))


def sample_cdf_batch(n, size, rng):
    """`size` uniform points of C_n as rows, the pinned last coordinate left out."""
    return np.sort(rng.random((size, n - 1)), axis=1)


def chunk_rng(seed, chunk_index):
    """Counter-based Philox stream owned by one chunk, independent of scheduling."""
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(chunk_index,))))


@dataclass(frozen=True)
class _ChunkTotals:
    count: int
    sum_w: float
    sum_w2: float
    sum_w4: float
    histogram: np.ndarray


def _simulate_chunk(n, size, seed, chunk_index, bins):
    rng = chunk_rng(seed, chunk_index)
    mu = sample_cdf_batch(n, size, rng)
    nu = sample_cdf_batch(n, size, rng)
    w = np.abs(mu - nu).sum(axis=1)
    w2 = w * w
    counts, _ = np.histogram(w, bins=bins, range=(0.0, float(n - 1)))
    return _ChunkTotals(size, float(w.sum()), float(w2.sum()), float((w2 * w2).sum()), counts)


@dataclass(frozen=True)
class McEstimate:
    n: int
    samples: int
    seed: int
    mean_w1: float
    mean_w1_sq: float
    std_error_mean: float
    std_error_sq: float
    histogram: tuple  # (bin_left, bin_right, frequency)


def _std_error(total, total_sq, count):
    if count < 2:
        return 0.0
    mean = total / count
    variance = max((total_sq - count * mean * mean) / (count - 1), 0.0)
    return math.sqrt(variance / count)


def estimate_moments(n, samples, seed, bins=None, threads=None):
    """
    Monte Carlo estimate of E(X_n) and E(X_n^2) from `samples` independent pairs.

    Work is cut into chunks of MC_CHUNK_SIZE samples; chunk c draws from chunk_rng(seed, c).
    Chunk totals are merged in chunk order with compensated summation, so the estimate
    depends only on (n, samples, seed, bins), never on the thread count.
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    if seed < 0:
        raise DomainError(f"seed must be >= 0, got {seed}")
    bins = bins or app.config['MC_BINS']
    threads = threads or app.config['MC_THREADS']
    chunk_size = app.config['MC_CHUNK_SIZE']
    sizes = [min(chunk_size, samples - start) for start in range(0, samples, chunk_size)]
    app.logger.info("mc n=%d samples=%d seed=%d chunks=%d threads=%d", n, samples, seed, len(sizes), threads)

    with ThreadPoolExecutor(max_workers=threads) as pool:
        chunks = list(pool.map(lambda job: _simulate_chunk(n, job[1], seed, job[0], bins), enumerate(sizes)))

    sum_w = math.fsum(c.sum_w for c in chunks)
    sum_w2 = math.fsum(c.sum_w2 for c in chunks)
    sum_w4 = math.fsum(c.sum_w4 for c in chunks)
    counts = np.sum([c.histogram for c in chunks], axis=0)
    edges = np.linspace(0.0, float(n - 1), bins + 1)
    histogram = tuple((float(edges[b]), float(edges[b + 1]), int(counts[b])) for b in range(bins))
    return McEstimate(
        n=n,
        samples=samples,
        seed=seed,
        mean_w1=sum_w / samples,
        mean_w1_sq=sum_w2 / samples,
        std_error_mean=_std_error(sum_w, sum_w2, samples),
        std_error_sq=_std_error(sum_w2, sum_w4, samples),
        histogram=histogram,
    )


def histogram_density_l1(estimate, density_fn):
    """
    L1 distance between the empirical density of an MC histogram and an exact density.

    Each bin compares its empirical density with the exact average of density_fn over the bin,
    obtained from `density_fn(left, right)` returning the integral over [left, right].
    """
    distance = 0.0
    for left, right, frequency in estimate.histogram:
        width = right - left
        empirical = frequency / (estimate.samples * width)
        exact = float(density_fn(left, right)) / width
        distance += abs(empirical - exact) * width
    return distance
