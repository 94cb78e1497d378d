"""
Exact Riordan, Catalan and Motzkin numbers.

Every route is integer-only. The Riordan numbers are available from the
closed binomial sum, the three-term recurrence and the alternating Catalan
transform, so the routes can be checked against each other.

>>> [riordan_recurrence(n) for n in range(10)]
[1, 0, 1, 1, 3, 6, 15, 36, 91, 232]
>>> catalan_from_riordan(4)
14
"""

import threading
from math import comb, factorial

from .errors import ConsistencyError

__all__ = [
    "binomial", "riordan_closed", "riordan_recurrence", "catalan",
    "catalan_from_riordan", "riordan_from_catalan", "motzkin",
    "labelled_forest_count", "bush_count_by_internal",
]


def binomial(a: int, b: int) -> int:
    """C(a, b), taken to be 0 when b < 0, a < 0 or a < b."""
    if b < 0 or a < 0 or a < b:
        return 0
    return comb(a, b)


def _exact_div(num: int, den: int, what: str) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"{what}: {den} does not divide {num}")
    return q


def riordan_closed(n: int) -> int:
    """r_n from the binomial sum over the number of internal vertices."""
    if n == 0:
        # empty sum; r_0 = 1 counts the single-vertex bush
        return 1
    total = sum(binomial(n + 1, k) * binomial(n - k - 1, k - 1) for k in range(1, n))
    return _exact_div(total, n + 1, f"riordan_closed({n})")


class _Memo:
    """Grow-only table of a sequence defined by a recurrence.

    Reads of already-computed entries are lock-free; extension is serialized.
    """

    def __init__(self, initial, step):
        self._values = list(initial)
        self._step = step
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise ValueError(f"index must be nonnegative, got {n}")
        values = self._values
        if n < len(values):
            return values[n]
        with self._lock:
            while len(self._values) <= n:
                self._values.append(self._step(len(self._values), self._values))
            return self._values[n]


def _riordan_step(n, r):
    num = (n - 1) * (2 * r[n - 1] + 3 * r[n - 2])
    return _exact_div(num, n + 1, f"riordan_recurrence({n})")


def _motzkin_step(n, m):
    # (n+2) m_n = (2n+1) m_{n-1} + 3(n-1) m_{n-2}
    num = (2 * n + 1) * m[n - 1] + 3 * (n - 1) * m[n - 2]
    return _exact_div(num, n + 2, f"motzkin({n})")


_RIORDAN = _Memo([1, 0, 1], _riordan_step)
_MOTZKIN = _Memo([1, 1], _motzkin_step)


def riordan_recurrence(n: int) -> int:
    """r_n from (n+1) r_n = (n-1)(2 r_{n-1} + 3 r_{n-2}), r_0=1, r_1=0, r_2=1.

    Raises ConsistencyError if a quotient is ever inexact.
    """
    return _RIORDAN[n]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def catalan_from_riordan(n: int) -> int:
    """c_n as the binomial transform sum_k C(n, k) r_k."""
    return sum(comb(n, k) * riordan_recurrence(k) for k in range(n + 1))


def riordan_from_catalan(n: int) -> int:
    """r_n as the inverse binomial transform sum_k (-1)^(n-k) C(n, k) c_k."""
    total = sum((-1) ** (n - k) * comb(n, k) * catalan(k) for k in range(n + 1))
    if total < 0:
        raise ConsistencyError(f"riordan_from_catalan({n}) is negative: {total}")
    return total


def motzkin(n: int) -> int:
    return _MOTZKIN[n]


def labelled_forest_count(n: int, k: int) -> int:
    """Number of labelled short bushes with n edges and k internal vertices.

    C(n+1, k) root choices times C(n-k-1, k-1) n! ways to split the remaining
    labels into k blocks of size at least two.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    return binomial(n + 1, k) * binomial(n - k - 1, k - 1) * factorial(n)


def bush_count_by_internal(n: int, k: int) -> int:
    """Number of short bushes with n edges and k internal vertices."""
    if n == 0:
        return 1 if k == 0 else 0
    num = binomial(n + 1, k) * binomial(n - k - 1, k - 1)
    return _exact_div(num, n + 1, f"bush_count_by_internal({n}, {k})")
