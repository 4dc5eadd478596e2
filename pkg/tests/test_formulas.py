import pytest

from d2cs import formulas as F


def test_fibonacci_and_lucas():
    assert F.fib(7) == 13
    assert F.lucas(4) == 7
    assert [F.fib(n) for n in range(10)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert [F.lucas(n) for n in range(6)] == [2, 1, 3, 4, 7, 11]
    for n in range(1, 21):
        assert F.lucas(n) == F.fib(n - 1) + F.fib(n + 1)


def test_star():
    assert F.count_star(2) == 7
    assert F.count_star(0) == 2
    assert F.count_star(10) == 1035


def test_kary():
    assert F.count_kary(2, 1) == 7
    assert F.count_kary(2, 2) == 23
    assert F.count_kary(3, 1) == 12
    with pytest.raises(F.FormulaError, match="singular"):
        F.count_kary(1, 3)
    with pytest.raises(F.FormulaError):
        F.count_kary(2, 0)


@pytest.mark.parametrize("k", range(2, 7))
def test_kary_strictly_increasing_in_height(k):
    vals = [F.count_kary(k, h) for h in range(1, 7)]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_kary_bounds():
    b = F.kary_bounds(3, 2)
    assert (b.lower, b.upper, b.fmax) == (12, 36, 36)
    assert b.fmax == 23 + 7 + 2**3 - 2
    assert F.kary_bounds(4, 2).lower == 21
    with pytest.raises(F.FormulaError, match="singular"):
        F.kary_bounds(2, 3)


def test_exact_division_guard():
    with pytest.raises(F.ConsistencyError):
        F._exact_div(7, 2, "probe")


def test_fib_tree():
    assert F.count_fib_tree(2) == 2
    assert F.count_fib_tree(4) == 7
    assert F.count_fib_tree(10) == 768 - 123 + 2 == 647
    with pytest.raises(F.FormulaError):
        F.count_fib_tree(1)


def test_binary_fib_tree():
    assert F.count_binary_fib_tree(3) == 10
    assert F.count_binary_fib_tree(5) == 40
    assert F.count_binary_fib_tree(6) == 16 + 63 - 9 == 70
    assert F.count_binary_fib_tree(3) == 2 * F.lucas(4) + F.fib(5) - 9


def test_binomial_tree():
    assert [F.count_binomial_tree(k) for k in (0, 2, 4)] == [2, 10, 66]
    assert F.count_binomial_tree(64) == 64 * 2**64 + 2
    assert F.count_binomial_tree_recurrence(64) == 64 * 2**64 + 2


def test_split():
    assert F.count_split(1, 3) == 12 == F.count_star(3)
    assert F.count_split(2, 2) == 20
    assert F.count_split(3, 1) == 23
    for r in range(1, 10):
        assert F.count_split(1, r) == F.count_star(r)


def test_small_families():
    assert F.count_complete(3) == 8
    assert F.count_ladder(2) == 14
    assert F.count_empty(3) == 4
    assert F.count_ktree(3, 2) == 8
    assert "ktree" in F.DISPUTED and "star" not in F.DISPUTED
    for k in range(2, 8):
        assert F.count_kary(k, 1) == F.count_star(k)


def test_closed_forms_match_recurrences():
    for k in range(2, 7):
        for h in range(1, 6):
            assert F.count_kary(k, h) == F.count_kary_recurrence(k, h)
    for n in range(2, 31):
        assert F.count_fib_tree(n) == F.count_fib_tree_recurrence(n)
    for n in range(3, 31):
        assert F.count_binary_fib_tree(n) == F.count_binary_fib_tree_recurrence(n)
    for k in range(0, 31):
        assert F.count_binomial_tree(k) == F.count_binomial_tree_recurrence(k)


def test_evaluate_dispatch():
    assert F.evaluate("split", (2, 2)) == 20
    with pytest.raises(F.FormulaError):
        F.evaluate("cycle", (5,))
    with pytest.raises(F.FormulaError):
        F.evaluate("split", (2,))
