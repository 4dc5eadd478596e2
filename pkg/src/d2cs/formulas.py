"""Exact integer closed forms and recurrences for D2CS counts.

Every function returns a Python ``int``; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .graph import GraphError


class FormulaError(GraphError):
    """Parameters outside the domain where a formula is defined."""


class ConsistencyError(ArithmeticError):
    """An exact division in a formula left a remainder."""


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise FormulaError(msg)


def _exact_div(num: int, den: int, what: str) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ConsistencyError(f"{what}: {num} is not divisible by {den}")
    return q


@lru_cache(maxsize=None)
def _fib_pair(n: int) -> tuple[int, int]:
    # fast doubling: (F_n, F_{n+1})
    if n == 0:
        return 0, 1
    a, b = _fib_pair(n >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    return (d, c + d) if n & 1 else (c, d)


def fib(n: int) -> int:
    """F_0 = 0, F_1 = 1."""
    _check(n >= 0, f"fib needs n >= 0, got {n}")
    return _fib_pair(n)[0]


def lucas(n: int) -> int:
    """L_0 = 2, L_1 = 1."""
    _check(n >= 0, f"lucas needs n >= 0, got {n}")
    f, f1 = _fib_pair(n)
    return 2 * f1 - f


def count_star(n: int) -> int:
    _check(n >= 0, f"star needs n >= 0, got {n}")
    return 2**n + n + 1


def count_complete(n: int) -> int:
    _check(n >= 1, f"complete graph needs n >= 1, got {n}")
    return 2**n


def count_empty(n: int) -> int:
    _check(n >= 1, f"empty graph needs n >= 1, got {n}")
    return n + 1


def count_ladder(n: int) -> int:
    _check(n >= 1, f"ladder needs n >= 1, got {n}")
    return 10 * n - 6


def count_ktree(n: int, k: int) -> int:
    """2^n (1 - 2^{-(k+1)}) + n - k, evaluated in integers.

    The published value is not shape-independent; callers should treat it as
    disputed (see ``DISPUTED``).
    """
    _check(k >= 1 and n >= k + 1, f"k-tree needs n >= k+1 >= 2 (got n={n}, k={k})")
    return 2**n - 2 ** (n - k - 1) + n - k


def _kary_base(k: int) -> int:
    return 2**k + k + 1


def count_kary(k: int, h: int) -> int:
    """Closed form for the complete k-ary tree of height h (k >= 2)."""
    _check(k >= 2, f"k-ary closed form is singular at k={k} (divides by k-1); need k >= 2")
    _check(h >= 1, f"k-ary closed form needs h >= 1, got {h}")
    num = k * (_kary_base(k + 1) - 4) * (k ** (h - 1) - 1)
    return _exact_div(num, k - 1, "k-ary closed form") + _kary_base(k)


def count_kary_recurrence(k: int, h: int) -> int:
    _check(k >= 1 and h >= 1, f"k-ary recurrence needs k >= 1, h >= 1 (got k={k}, h={h})")
    f = _kary_base(k)
    for level in range(2, h + 1):
        f += k ** (level - 1) * (2 ** (k + 1) + k - 2)
    return f


@dataclass(frozen=True)
class KaryBounds:
    lower: int
    upper: int
    fmax: int
    l: int


def kary_bounds(k: int, h: int) -> KaryBounds:
    """Lower/upper bounds for rooted trees of max degree k and height h, plus f_max'."""
    _check(k >= 3, f"bound term l divides by k-2 and is singular for k={k}; need k >= 3")
    _check(h >= 2, f"bound term l uses (k-1)^(h-2); need h >= 2, got {h}")
    l = _exact_div((k - 1) * (k * (k - 1) ** (h - 2) - 2), k - 2, "bound term l")
    lower = 2**k + k + 3 * h - 5
    upper = (2**k + k - 3) * (2 + l) + 4
    fmax = count_kary(k - 1, h) + count_kary(k - 1, h - 1) + 2**k - 2
    return KaryBounds(lower, upper, fmax, l)


def count_fib_tree(n: int) -> int:
    _check(n >= 2, f"Fibonacci-tree count is defined for n >= 2, got {n}")
    return 3 * 2 ** (n - 2) - lucas(n) + 2


def count_fib_tree_recurrence(n: int) -> int:
    _check(n >= 2, f"Fibonacci-tree recurrence is defined for n >= 2, got {n}")
    prev, cur = 2, 4  # g(2), g(3)
    if n == 2:
        return prev
    for i in range(4, n + 1):
        prev, cur = cur, cur + prev + 3 * 2 ** (i - 4) - 2
    return cur


def count_binary_fib_tree(n: int) -> int:
    _check(n >= 3, f"binary Fibonacci-tree count is defined for n >= 3, got {n}")
    return 2 * fib(n) + 3 * fib(n + 2) - 9


def count_binary_fib_tree_recurrence(n: int) -> int:
    _check(n >= 3, f"binary Fibonacci-tree recurrence is defined for n >= 3, got {n}")
    prev, cur = 10, 21  # h(3), h(4)
    if n == 3:
        return prev
    for _ in range(5, n + 1):
        prev, cur = cur, cur + prev + 9
    return cur


def count_binomial_tree(k: int) -> int:
    _check(k >= 0, f"binomial tree order must be >= 0, got {k}")
    return k * 2**k + 2


def count_binomial_tree_recurrence(k: int) -> int:
    _check(k >= 0, f"binomial tree order must be >= 0, got {k}")
    b = 2
    for i in range(1, k + 1):
        b = 2 * b + 2**i - 2
    return b


def count_split(k: int, r: int) -> int:
    _check(k >= 1 and r >= 1, f"split count needs k >= 1, r >= 1 (got k={k}, r={r})")
    return k * 2 ** (k - 1) * (2**r - 1) + 2**k + k * r


# family name -> (formula, disputed?)
FORMULAS = {
    "star": (count_star, False),
    "complete": (count_complete, False),
    "empty": (count_empty, False),
    "ladder": (count_ladder, False),
    "kary": (count_kary, False),
    "fibonacci": (count_fib_tree, False),
    "binary-fibonacci": (count_binary_fib_tree, False),
    "binomial": (count_binomial_tree, False),
    "split": (count_split, False),
    "ktree": (count_ktree, True),
}

DISPUTED = frozenset(name for name, (_, disputed) in FORMULAS.items() if disputed)


def evaluate(family: str, params) -> int:
    if family not in FORMULAS:
        raise FormulaError(f"no closed form for family {family!r}; choose from {', '.join(FORMULAS)}")
    fn, _ = FORMULAS[family]
    try:
        return fn(*params)
    except TypeError as exc:
        raise FormulaError(f"bad parameters for {family}: {exc}") from None
