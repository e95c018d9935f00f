""" exact rational arithmetic, factorials, binomials and the binomial sums A_{n,p}, B_{n,p} """
import threading
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from __init__ import app
from model.errors import DomainError

# Every exact scalar in the project is a Fraction: always in lowest terms with a positive
# denominator, hashable, and division by zero raises ZeroDivisionError.
Rational = Fraction


class SumKind(str, Enum):
    A = 'A'
    B = 'B'


# factorial memo, grown under a lock so concurrent readers see a consistent prefix
_factorials = [1]
_factorials_lock = threading.Lock()


def factorial(n):
    """Returns n! from a memo that grows up to the largest n requested so far."""
    if n < 0:
        raise DomainError(f"factorial of negative number {n}")
    if n < len(_factorials):
        return _factorials[n]
    with _factorials_lock:
        start = len(_factorials)
        for k in range(start, n + 1):
            _factorials.append(_factorials[-1] * k)
        if n >= start:
            app.logger.debug("factorial memo extended to %d", n)
    return _factorials[n]


def binomial(n, k):
    """C(n, k), with the convention C(n, k) = 0 unless 0 <= k <= n."""
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def _check_np(n, p, n_min=1):
    if n < n_min:
        raise DomainError(f"n must be >= {n_min}, got {n}")
    if p < 0:
        raise DomainError(f"p must be >= 0, got {p}")


def sum_A_direct(n, p):
    """
    Term-by-term evaluation of A_{n,p} = sum_{k=1}^{n} k^p / ((n+k-1)! (n-k)!).

    Parameters:
    - n (int): upper summation limit, n >= 1
    - p (int): power on k, p >= 0

    Returns:
    - Fraction: the exact sum
    """
    _check_np(n, p)
    return sum((Fraction(k ** p, factorial(n + k - 1) * factorial(n - k)) for k in range(1, n + 1)),
               Fraction(0))


def sum_B_direct(n, p):
    """Term-by-term evaluation of B_{n,p} = sum_{k=1}^{n} k^p / ((n+k)! (n-k)!)."""
    _check_np(n, p)
    return sum((Fraction(k ** p, factorial(n + k) * factorial(n - k)) for k in range(1, n + 1)),
               Fraction(0))


def _base_A(n):
    return Fraction(4 ** (n - 1), factorial(2 * n - 1))


def _base_B(n):
    if n == 0:
        return Fraction(0)
    return Fraction(2 ** (2 * n - 1), factorial(2 * n)) - Fraction(1, 2 * factorial(n) ** 2)


def _recursive_tables(n, p):
    # A[m][q] for m <= n, q <= p and B[m][q] for m <= n, q <= p; B_{0,q} is the empty sum
    A = {}
    B = {(0, q): Fraction(0) for q in range(p + 1)}
    for m in range(1, n + 1):
        A[m, 0] = _base_A(m)
        B[m, 0] = _base_B(m)
        for q in range(1, p + 1):
            A[m, q] = m * A[m, q - 1] - B[m - 1, q - 1]
            B[m, q] = A[m, q - 1] - m * B[m, q - 1]
    return A, B


def sum_A_recursive(n, p):
    """A_{n,p} from the closed-form base cases and A_{n,p} = n A_{n,p-1} - B_{n-1,p-1}."""
    _check_np(n, p)
    A, _ = _recursive_tables(n, p)
    return A[n, p]


def sum_B_recursive(n, p):
    """B_{n,p} from the closed-form base cases and B_{n,p} = A_{n,p-1} - n B_{n,p-1}."""
    _check_np(n, p)
    _, B = _recursive_tables(n, p)
    return B[n, p]


def sum_closed_form(kind, p, n):
    """
    Closed forms of A_{n,p} and B_{n,p} for p <= 3.

    A_{n,3} uses n/(2(n-1)!^2) as its second term: the commonly printed 1/(2 n!(n-1)!)
    disagrees with the defining sum for n >= 2, see printed_closed_form_A3.
    """
    kind = SumKind(kind)
    if p not in (0, 1, 2, 3):
        raise DomainError(f"no closed form for p = {p}, only 0 <= p <= 3")
    _check_np(n, p)
    head = Fraction(2 ** (2 * n - 1), 4 * factorial(2 * n - 1))  # 2^{2n-3}/(2n-1)!
    inv_sq = Fraction(1, factorial(n - 1) ** 2)
    if kind is SumKind.A:
        if p == 0:
            return _base_A(n)
        if p == 1:
            return head + inv_sq / 2
        if p == 2:
            return n * head + inv_sq / 2
        return Fraction(4 ** n * (3 * n - 1), 16 * factorial(2 * n - 1)) + n * inv_sq / 2
    if p == 0:
        return _base_B(n)
    if p == 1:
        return Fraction(1, 2 * factorial(n) * factorial(n - 1))
    if p == 2:
        return head
    return inv_sq / 2


def printed_closed_form_A3(n):
    """The A_{n,3} closed form as usually printed; kept only to report the discrepancy."""
    _check_np(n, 3)
    return (Fraction(4 ** n * (3 * n - 1), 16 * factorial(2 * n - 1))
            + Fraction(1, 2 * factorial(n) * factorial(n - 1)))


@dataclass(frozen=True)
class SumTable:
    kind: SumKind
    p: int
    values: dict = field(default_factory=dict)


def sum_table(kind, p, n_max):
    """SumTable of the direct sums for 1 <= n <= n_max."""
    kind = SumKind(kind)
    direct = sum_A_direct if kind is SumKind.A else sum_B_direct
    return SumTable(kind, p, {n: direct(n, p) for n in range(1, n_max + 1)})


def identity_f_induction(n):
    """Both sides of 2A_{n,3} - 3A_{n,2} + A_{n,1} = 1/((n-1)!(n-2)!), n >= 2."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    lhs = 2 * sum_A_direct(n, 3) - 3 * sum_A_direct(n, 2) + sum_A_direct(n, 1)
    rhs = Fraction(1, factorial(n - 1) * factorial(n - 2))
    return lhs, rhs


def identity_F_at_one(n):
    """Both sides of A_{n,2} - A_{n,1} = 2^{2n-3}(n-1)/(2n-1)!, n >= 2."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    lhs = sum_A_direct(n, 2) - sum_A_direct(n, 1)
    rhs = Fraction(2 ** (2 * n - 3) * (n - 1), factorial(2 * n - 1))
    return lhs, rhs
