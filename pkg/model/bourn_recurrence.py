""" the rational recurrence M_{p,q} whose diagonal is E(X_n), and its integer transform L_{p,q} """
from dataclasses import dataclass, field
from fractions import Fraction

from __init__ import app
from model.errors import DomainError, IntegralityError
from model.exact_math import binomial, factorial


@dataclass(frozen=True)
class RecurrenceGrid:
    """
    M and L on 0..max_p x 0..max_q, boundary row and column included (all zero).

    L_{p,q} = (p+q-1)! / ((p-1)! (q-1)!) * M_{p,q} for p, q >= 1.
    """
    max_p: int
    max_q: int
    M: dict = field(default_factory=dict)
    L: dict = field(default_factory=dict)

    def matrix(self, which='L'):
        table = self.L if which == 'L' else self.M
        return [[table[p, q] for q in range(self.max_q + 1)] for p in range(self.max_p + 1)]

    def diagonal(self, which='M'):
        table = self.L if which == 'L' else self.M
        return [table[n, n] for n in range(min(self.max_p, self.max_q) + 1)]


def build_grid(max_p, max_q):
    """
    Fills M_{p,q} = ((p-1) M_{p-1,q} + (q-1) M_{p,q-1} + |p-q|) / (p+q-1) row by row,
    then derives L by the factorial transform.

    Raises IntegralityError if an L value is not an integer.
    """
    if max_p < 1 or max_q < 1:
        raise DomainError(f"grid needs max_p, max_q >= 1, got {max_p}, {max_q}")
    M = {}
    for p in range(max_p + 1):
        for q in range(max_q + 1):
            if p == 0 or q == 0:
                M[p, q] = Fraction(0)
                continue
            M[p, q] = ((p - 1) * M[p - 1, q] + (q - 1) * M[p, q - 1] + abs(p - q)) / Fraction(p + q - 1)
    L = {}
    for (p, q), m in M.items():
        if p == 0 or q == 0:
            L[p, q] = 0
            continue
        value = Fraction(factorial(p + q - 1), factorial(p - 1) * factorial(q - 1)) * m
        if value.denominator != 1:
            raise IntegralityError(f"L_{{{p},{q}}} = {value} is not an integer")
        L[p, q] = value.numerator
    app.logger.debug("recurrence grid %dx%d built", max_p + 1, max_q + 1)
    return RecurrenceGrid(max_p, max_q, M, L)


def build_L_recurrence(max_p, max_q):
    """L directly on integers: L_{p,q} = L_{p-1,q} + L_{p,q-1} + |p-q| C(p+q-2, p-1)."""
    if max_p < 1 or max_q < 1:
        raise DomainError(f"grid needs max_p, max_q >= 1, got {max_p}, {max_q}")
    L = {}
    for p in range(max_p + 1):
        for q in range(max_q + 1):
            if p == 0 or q == 0:
                L[p, q] = 0
            else:
                L[p, q] = L[p - 1, q] + L[p, q - 1] + abs(p - q) * binomial(p + q - 2, p - 1)
    return L


def L_double_sum(p, q):
    """L_{p+1,q+1} = sum_{i<=p} sum_{j<=q} |i-j| C(i+j, i) C(p+q-i-j, p-i)."""
    if p < 0 or q < 0:
        raise DomainError(f"p, q must be >= 0, got {p}, {q}")
    return sum(abs(i - j) * binomial(i + j, i) * binomial(p + q - i - j, p - i)
               for i in range(p + 1) for j in range(q + 1))


def L_diagonal_closed(p):
    """L_{p+1,p+1} = 2^{2p-1} p."""
    if p < 0:
        raise DomainError(f"p must be >= 0, got {p}")
    if p == 0:
        return 0
    return 2 ** (2 * p - 1) * p


def M_diagonal_closed(p):
    """M_{p+1,p+1} = 2^{2p-1} p p!^2 / (2p+1)!."""
    return Fraction(L_diagonal_closed(p) * factorial(p) ** 2, factorial(2 * p + 1))
