import itertools
import math
import random

import pytest

from oracles import lex_sorted_arrays
from permkit import Perm, RankOutOfRange, SizeTooSmall
from permkit.ranking import (
    inversion_vector,
    make_rng,
    random_perm,
    rank_lex,
    rank_mr,
    unrank_lex,
    unrank_mr,
)

q = Perm()(1, 2)


def _swap_loop_rank_zero(n):
    a = list(range(n))
    for k in range(n, 0, -1):
        a[k - 1], a[0] = a[0], a[k - 1]
    return Perm(data=a)


def test_inversion_vector():
    assert inversion_vector(q, 4) == [0, 1, 0, 0]
    assert inversion_vector(Perm(), 5) == [0] * 5
    assert inversion_vector(Perm(data=[3, 2, 1, 0]), 4) == [3, 2, 1, 0]
    with pytest.raises(SizeTooSmall):
        inversion_vector(q, 2)


def test_inversion_vector_bounds():
    for a in itertools.permutations(range(5)):
        vec = inversion_vector(Perm(data=a), 5)
        assert all(0 <= v <= 4 - i for i, v in enumerate(vec))
        assert vec[-1] == 0


def test_rank_lex_session_values():
    assert rank_lex(q, 4) == 2
    assert rank_lex(q, 5) == 6
    assert rank_lex(Perm(), 7) == 0


def test_unrank_lex_session_values():
    assert unrank_lex(4, 20) == Perm()(0, 3, 2)
    assert unrank_lex(5, 20) == Perm()(1, 4, 3)
    assert unrank_lex(6, 0) == Perm()


def test_unrank_lex_out_of_range():
    with pytest.raises(RankOutOfRange, match="size is too small"):
        unrank_lex(3, 6)
    with pytest.raises(RankOutOfRange):
        unrank_lex(3, -1)
    assert unrank_lex(3, 5) == Perm(data=[2, 1, 0])


def test_rank_mr_session_values():
    assert rank_mr(q, 5) == 99
    assert rank_mr(Perm(), 1) == 0
    assert unrank_mr(5, 20) == Perm()(0, 2, 1, 3, 4)
    assert rank_mr(unrank_mr(5, 20), 5) == 20


def test_unrank_mr_rank_zero_is_not_identity():
    for n in range(1, 8):
        assert unrank_mr(n, 0) == _swap_loop_rank_zero(n)
    assert unrank_mr(3, 0) != Perm()


def test_unrank_mr_out_of_range():
    with pytest.raises(RankOutOfRange):
        unrank_mr(4, 24)
    with pytest.raises(RankOutOfRange):
        unrank_mr(4, -3)


@pytest.mark.parametrize("n", range(1, 7))
def test_exhaustive_bijections(n):
    arrays = lex_sorted_arrays(n)
    lex_ranks, mr_ranks = set(), set()
    for r, a in enumerate(arrays):
        p = Perm(data=a)
        assert rank_lex(p, n) == r
        assert unrank_lex(n, r) == p
        assert rank_lex(unrank_lex(n, r), n) == r
        assert rank_mr(unrank_mr(n, r), n) == r
        assert unrank_mr(n, rank_mr(p, n)) == p
        vec = inversion_vector(p, n)
        assert rank_lex(p, n) == sum(v * math.factorial(n - 1 - i) for i, v in enumerate(vec))
        lex_ranks.add(rank_lex(p, n))
        mr_ranks.add(rank_mr(p, n))
    assert lex_ranks == mr_ranks == set(range(math.factorial(n)))


def test_large_sizes_use_big_integers():
    n = 30
    rng = make_rng(7)
    for _ in range(20):
        p = random_perm(n, rng)
        r = rank_lex(p, n)
        assert 0 <= r < math.factorial(n)
        assert unrank_lex(n, r) == p
        assert unrank_mr(n, rank_mr(p, n)) == p
    top = math.factorial(n) - 1
    assert unrank_lex(n, top) == Perm(data=list(range(n - 1, -1, -1)))


def test_rank_mr_deep_sizes():
    p = random_perm(100_000, 3)
    assert unrank_mr(100_000, rank_mr(p, 100_000)) == p


def test_random_perm():
    assert random_perm(1, 5) == Perm()
    assert random_perm(5, 42) == random_perm(5, 42)
    assert random_perm(9, make_rng(1)) == random_perm(9, random.Random(1))
    p = random_perm(10, 11)
    assert p.max() < 10
    rng_a, rng_b = make_rng(99), make_rng(99)
    assert [random_perm(6, rng_a) for _ in range(10)] == [random_perm(6, rng_b) for _ in range(10)]
