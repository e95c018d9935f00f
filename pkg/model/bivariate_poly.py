""" sparse exact polynomials in two variables and the integral operator I """
from fractions import Fraction
from types import MappingProxyType

import sympy

from model.errors import RegionError


class BivarPoly:
    """
    Sparse polynomial in (s, t) with Fraction coefficients.

    Terms are stored as {(deg_s, deg_t): coefficient} and never hold a zero coefficient.
    When a polynomial is fed to the integral operator its first slot plays the role of the
    integration variable x and its second slot of y; the output is again in (s, t).
    """
    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in monomial {(i, j)}")
            c = Fraction(c)
            if c:
                clean[int(i), int(j)] = c
        self._terms = clean

    @classmethod
    def monomial(cls, deg_s, deg_t, coeff=1):
        return cls({(deg_s, deg_t): coeff})

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def coefficient(self, deg_s, deg_t):
        return self._terms.get((deg_s, deg_t), Fraction(0))

    def total_degree(self):
        """Largest deg_s + deg_t, or -1 for the zero polynomial."""
        return max((i + j for i, j in self._terms), default=-1)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == BivarPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __neg__(self):
        return BivarPoly({m: -c for m, c in self._terms.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        result = dict(self._terms)
        for m, c in other._terms.items():
            result[m] = result.get(m, 0) + c
        return BivarPoly(result)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = BivarPoly.constant(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BivarPoly):
            return NotImplemented
        result = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                result[key] = result.get(key, 0) + c1 * c2
        return BivarPoly(result)

    __rmul__ = __mul__

    def scale(self, c):
        c = Fraction(c)
        return BivarPoly({m: c * v for m, v in self._terms.items()})

    def evaluate(self, s, t):
        s, t = Fraction(s), Fraction(t)
        return sum((c * s ** i * t ** j for (i, j), c in self._terms.items()), Fraction(0))

    def sorted_terms(self):
        """Terms in descending s-degree, the order used for listings."""
        return sorted(self._terms.items(), key=lambda item: (-item[0][0], item[0][1]))

    def to_sympy(self, s, t):
        return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * s ** i * t ** j
                           for (i, j), c in self._terms.items()])

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.sorted_terms():
            factors = [f"t^{j}" if j > 1 else "t"] if j else []
            if i:
                factors.append(f"s^{i}" if i > 1 else "s")
            body = "*".join(factors)
            magnitude = abs(c)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, text))
        first_sign, first_text = parts[0]
        out = ("-" if first_sign == "-" else "") + first_text
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"BivarPoly({str(self)!r})"


# the two coordinate polynomials; x shares the s slot and y the t slot
S = X = BivarPoly.monomial(1, 0)
T = Y = BivarPoly.monomial(0, 1)
ZERO = BivarPoly()
ONE = BivarPoly.constant(1)


def poly_add(a, b):
    return a + b


def poly_mul(a, b):
    return a * b


def poly_scale(a, c):
    return a.scale(c)


def poly_eval(f, s, t):
    return f.evaluate(s, t)


def _apply_I_monomial(i, j):
    # I(x^i y^j) = s^{i+1} t^{j+1}/((i+1)(j+1)) + (i-j) t^{i+j+2}/((i+1)(j+1)(i+j+2))
    terms = {(i + 1, j + 1): Fraction(1, (i + 1) * (j + 1))}
    if i != j:
        terms[0, i + j + 2] = Fraction(i - j, (i + 1) * (j + 1) * (i + j + 2))
    return terms


def apply_I(f):
    """
    Applies the integral operator

        (I f)(s, t) = 2 int_0^t int_y^t f(x, y) dx dy + int_0^t int_t^s f(x, y) dx dy

    termwise through its action on monomials. The result represents a function on 0 <= t <= s.
    """
    result = {}
    for (i, j), c in f.terms.items():
        for m, v in _apply_I_monomial(i, j).items():
            result[m] = result.get(m, 0) + c * v
    return BivarPoly(result)


def apply_I_oracle(f, s, t):
    """
    Evaluates (I f)(s, t) from the defining double integral with sympy, independent of apply_I.

    Raises RegionError unless 0 <= t <= s.
    """
    s, t = Fraction(s), Fraction(t)
    if t < 0 or t > s:
        raise RegionError(f"operator is defined on 0 <= t <= s, got s={s}, t={t}")
    x, y = sympy.symbols('x y')
    s_ = sympy.Rational(s.numerator, s.denominator)
    t_ = sympy.Rational(t.numerator, t.denominator)
    integrand = f.to_sympy(x, y)
    below_diagonal = sympy.integrate(sympy.integrate(integrand, (x, y, t_)), (y, 0, t_))
    right_strip = sympy.integrate(sympy.integrate(integrand, (x, t_, s_)), (y, 0, t_))
    value = sympy.Rational(2 * below_diagonal + right_strip)
    return Fraction(int(value.p), int(value.q))
