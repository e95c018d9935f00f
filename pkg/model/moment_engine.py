""" moment polynomials V_n, F_n, G_n, their coefficients, and the moments of W1 on the simplex """
import math
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

import sympy
from scipy.special import gammaln

from __init__ import app
from model.bivariate_poly import X, Y, ZERO, BivarPoly, apply_I
from model.errors import DensityUnavailable, DomainError, PatternViolation
from model.exact_math import factorial


class PolyKind(str, Enum):
    F = 'F'
    G = 'G'


def volume_poly(n):
    """V_n(s, t) = s^{n-1} t^{n-1} / (n-1)!^2, the volume of C_n(s) x C_n(t)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return BivarPoly.monomial(n - 1, n - 1, Fraction(1, factorial(n - 1) ** 2))


class _MomentPolynomials:
    """
    Cache of (F_n, G_n), built bottom-up from F_1 = G_1 = 0.

    Only the lock holder appends; readers index an already built prefix.
    """

    def __init__(self):
        self._rows = [(ZERO, ZERO)]  # index 0 holds n = 1
        self._lock = threading.Lock()

    def get(self, n):
        if n < 1:
            raise DomainError(f"n must be >= 1, got {n}")
        if n <= len(self._rows):
            return self._rows[n - 1]
        with self._lock:
            diff = X - Y
            while len(self._rows) < n:
                m = len(self._rows) + 1
                F_prev, G_prev = self._rows[-1]
                V_prev = volume_poly(m - 1)
                F = apply_I(F_prev + diff * V_prev)
                G = apply_I(G_prev + 2 * diff * F_prev + diff * diff * V_prev)
                self._rows.append((F, G))
            app.logger.debug("moment polynomials built up to n=%d", len(self._rows))
        return self._rows[n - 1]


_polynomials = _MomentPolynomials()


def build_F(n):
    """F_n(s, t) on 0 <= t <= s via F_n = I(F_{n-1} + (x - y) V_{n-1}), F_1 = 0."""
    return _polynomials.get(n)[0]


def build_G(n):
    """G_n(s, t) on 0 <= t <= s via G_n = I(G_{n-1} + 2(x - y) F_{n-1} + (x - y)^2 V_{n-1}), G_1 = 0."""
    return _polynomials.get(n)[1]


def _k_range(kind, n):
    return range(0, n + 1) if kind is PolyKind.F else range(-1, n + 1)


def _exponents(kind, n, k):
    # (deg_s, deg_t) of the k-th coefficient: t^{n+k-1} s^{n-k} for F, t^{n+k} s^{n-k} for G
    if kind is PolyKind.F:
        return n - k, n + k - 1
    return n - k, n + k


@dataclass(frozen=True)
class CoeffTable:
    kind: PolyKind
    n: int
    coeffs: dict = field(default_factory=dict)

    def __getitem__(self, k):
        return self.coeffs[k]

    def to_poly(self):
        return BivarPoly({_exponents(self.kind, self.n, k): c for k, c in self.coeffs.items()})

    def total(self):
        return sum(self.coeffs.values(), Fraction(0))

    def rescaled(self):
        """f~_{n,k} = f_{n,k}(n+k-1)!(n-k)! or g~_{n,k} = g_{n,k}(n-k)!(n+k)!."""
        n = self.n
        if self.kind is PolyKind.F:
            return {k: c * factorial(n + k - 1) * factorial(n - k) for k, c in self.coeffs.items()}
        return {k: c * factorial(n - k) * factorial(n + k) for k, c in self.coeffs.items()}


def extract_coeffs(p, kind, n):
    """
    Reads f_{n,k} (or g_{n,k}) off the monomials of a recursion-built polynomial.

    Raises PatternViolation when a monomial does not fit the exponent pattern.
    """
    kind = PolyKind(kind)
    coeffs = {k: Fraction(0) for k in _k_range(kind, n)}
    by_exponent = {_exponents(kind, n, k): k for k in coeffs}
    for monomial, c in p.terms.items():
        if monomial not in by_exponent:
            raise PatternViolation(f"{kind.value}_{n} has unexpected monomial s^{monomial[0]} t^{monomial[1]}")
        coeffs[by_exponent[monomial]] = c
    return CoeffTable(kind, n, coeffs)


def coeff_closed_form_f(n, k):
    """Closed forms of f_{n,k}: (f1) for k=0, (f2) for k=1, (f7) for 2 <= k <= n."""
    if n < 1 or not 0 <= k <= n:
        raise DomainError(f"f_{{n,k}} needs n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    f_n0 = Fraction(n * (n - 1), 2 * factorial(n - 1) * factorial(n))
    if k == 0:
        return f_n0
    if k == 1:
        return -f_n0
    return Fraction((k - 1) * k, factorial(n + k - 1) * factorial(n - k))


def coeff_closed_form_g(n, k):
    """Closed forms of g_{n,k}: (g1) k=-1, (g2) k=0, (g3) k=1, (g11) for 2 <= k <= n."""
    if n < 2 or not -1 <= k <= n:
        raise DomainError(f"g_{{n,k}} needs n >= 2 and -1 <= k <= n, got n={n}, k={k}")
    if k == -1:
        return Fraction(n * (3 * n - 2), 12 * factorial(n - 2) * factorial(n))
    if k == 0:
        return Fraction(-1, 2 * factorial(n - 2) ** 2)
    if k == 1:
        denom = factorial(n - 1) * factorial(n + 1)
        return (Fraction(2 * (n - 1) * (n - 2), denom)
                + Fraction(n * (n - 1) * (3 * n - 2) * (n + 1), 12 * denom))
    denom = factorial(n + k) * factorial(n - k)
    return (Fraction(k * (2 * k - 1) * (2 * k - 2) * (k - 2) * (4 * k - 1), 15 * denom)
            + Fraction(2 * k * (k - n) * (2 * k * k - k - n + 1), denom))


def first_moment(n):
    """E(X_n) = 2^{2n-3} (n-1) (n-1)!^2 / (2n-1)!."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return Fraction(2) ** (2 * n - 3) * (n - 1) * factorial(n - 1) ** 2 / factorial(2 * n - 1)


def second_moment(n):
    """E(X_n^2) = (n-1)(7n-4) / (30n)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return Fraction((n - 1) * (7 * n - 4), 30 * n)


def first_moment_float(n):
    """E(X_n) in the log domain, usable long after the factorials overflow a float."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    log_value = (2 * n - 3) * math.log(2) + math.log(n - 1) + 2 * gammaln(n) - gammaln(2 * n)
    return float(math.exp(log_value))


def variance_float(n):
    return float(second_moment(n)) - first_moment_float(n) ** 2


def asymptotic_first(n):
    return math.sqrt(math.pi * n) / 4


def asymptotic_variance(n):
    return (7 / 30 - math.pi / 16) * n


def asymptotic_normalized_first(n):
    return math.sqrt(math.pi / n) / 4


def asymptotic_normalized_variance(n):
    return (7 / 30 - math.pi / 16) / n


@dataclass(frozen=True)
class MomentReport:
    n: int
    first_moment: Fraction
    second_moment: Fraction
    variance: Fraction
    normalized_first: Fraction
    normalized_second: Fraction
    normalized_variance: Fraction
    asymptotic_first: float
    asymptotic_variance: float
    asymptotic_normalized_first: float
    asymptotic_normalized_variance: float
    float_first: float


def moment_report(n):
    """Exact moments of X_n and of the unit normalized X_n / (n-1), with their asymptotics."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    first, second = first_moment(n), second_moment(n)
    variance = second - first ** 2
    return MomentReport(
        n=n,
        first_moment=first,
        second_moment=second,
        variance=variance,
        normalized_first=first / (n - 1),
        normalized_second=second / (n - 1) ** 2,
        normalized_variance=variance / (n - 1) ** 2,
        asymptotic_first=asymptotic_first(n),
        asymptotic_variance=asymptotic_variance(n),
        asymptotic_normalized_first=asymptotic_normalized_first(n),
        asymptotic_normalized_variance=asymptotic_normalized_variance(n),
        float_first=first_moment_float(n),
    )


def moment_table(n_min, n_max):
    if not 2 <= n_min <= n_max:
        raise DomainError(f"need 2 <= n_min <= n_max, got {n_min}..{n_max}")
    return [moment_report(n) for n in range(n_min, n_max + 1)]


# Densities of X_2 and X_3 exactly as published, as (lower, upper, coefficients by ascending power).
# The X_3 pieces are kept verbatim even though they do not integrate to one; see density_diagnostics.
_PRINTED_DENSITIES = {
    2: [(Fraction(0), Fraction(1), (2, -2))],
    3: [
        (Fraction(0), Fraction(1), (0, 0, 4, Fraction(-14, 3), Fraction(19, 2))),
        (Fraction(1), Fraction(2), (Fraction(-1, 3), Fraction(8, 3), -2, Fraction(2, 3), Fraction(-1, 12))),
    ],
}


def _density_pieces(n):
    if n not in _PRINTED_DENSITIES:
        raise DensityUnavailable("density unavailable for n>3" if n > 3 else f"density unavailable for n={n}")
    return _PRINTED_DENSITIES[n]


def _piece_value(coeffs, t):
    return sum((Fraction(c) * t ** power for power, c in enumerate(coeffs)), Fraction(0))


def density(n, t):
    """p_{X_n}(t) for n in {2, 3}; each piece covers (lower, upper], the first one also t = 0."""
    pieces = _density_pieces(n)
    t = Fraction(t)
    if t < 0 or t > n - 1:
        raise DomainError(f"t={t} outside the support [0, {n - 1}]")
    for lower, upper, coeffs in pieces:
        if t <= upper:
            return _piece_value(coeffs, t)
    raise DomainError(f"t={t} outside the support [0, {n - 1}]")


def density_integral(n, a, b):
    """Exact integral of the printed p_{X_n} over [a, b] (clipped to the support)."""
    a, b = Fraction(a), Fraction(b)
    total = Fraction(0)
    for lower, upper, coeffs in _density_pieces(n):
        lo, hi = max(a, lower), min(b, upper)
        if lo >= hi:
            continue
        antiderivative = (0,) + tuple(Fraction(c) / (power + 1) for power, c in enumerate(coeffs))
        total += _piece_value(antiderivative, hi) - _piece_value(antiderivative, lo)
    return total


@dataclass(frozen=True)
class DensityDiagnostics:
    n: int
    mass: Fraction
    mean: Fraction
    continuity_gap_at_1: Fraction = None


def density_diagnostics(n):
    """Integrates the printed density symbolically: total mass, first moment, jump at t = 1."""
    pieces = _density_pieces(n)
    t = sympy.symbols('t')

    def as_rational(value):
        value = sympy.Rational(value)
        return Fraction(int(value.p), int(value.q))

    mass = Fraction(0)
    mean = Fraction(0)
    exprs = []
    for lower, upper, coeffs in pieces:
        expr = sum(sympy.Rational(Fraction(c).numerator, Fraction(c).denominator) * t ** power
                   for power, c in enumerate(coeffs))
        bounds = (t, sympy.Rational(lower.numerator, lower.denominator),
                  sympy.Rational(upper.numerator, upper.denominator))
        mass += as_rational(sympy.integrate(expr, bounds))
        mean += as_rational(sympy.integrate(t * expr, bounds))
        exprs.append(expr)
    gap = None
    if len(exprs) > 1:
        gap = as_rational(exprs[0].subs(t, 1) - exprs[1].subs(t, 1))
    return DensityDiagnostics(n=n, mass=mass, mean=mean, continuity_gap_at_1=gap)
