from itertools import permutations

import pytest

from lrpuzzle.combinatorics import contains, partitions_in_box, transpose
from lrpuzzle.poly import Poly, v
from lrpuzzle.schur import (
    factorial_schur, lr_oracle, schur_super, ssyt, ssyt_monomial_sum, super_h,
)


def series_coefficient(j, m, n):
    """Independent oracle: expand prod(1+x v)/prod(1-x u) as a truncated series.

    Series are lists of Poly coefficients in the auxiliary variable x.
    """
    order = j + 1
    series = [Poly.const(1)] + [Poly() for _ in range(order - 1)]

    def mul(s, factor):
        out = [Poly() for _ in range(order)]
        for a, ca in enumerate(s):
            for b, cb in enumerate(factor):
                if a + b < order:
                    out[a + b] = out[a + b] + ca * cb
        return out

    for i in range(1, n + 1):
        series = mul(series, [Poly.const(1), v("v", i)])
    for i in range(1, m + 1):
        geom = [v("u", i) ** p for p in range(order)]
        series = mul(series, geom)
    return series[j]


def test_super_h_trivial():
    assert super_h(0, 3, 3).is_one()
    assert super_h(-1, 3, 3).is_zero()
    assert super_h(-5, 0, 0).is_zero()


def test_super_h_series_oracle():
    assert super_h(1, 1, 1) == v("u", 1) + v("v", 1)
    assert super_h(2, 1, 1) == v("u", 1) ** 2 + v("u", 1) * v("v", 1)
    for j in range(5):
        for m, n in [(1, 1), (2, 1), (2, 3), (3, 0), (0, 2)]:
            assert super_h(j, m, n) == series_coefficient(j, m, n)


def test_schur_super_examples():
    assert schur_super((), (), 3, 3).is_one()
    assert schur_super((1,), (), 2, 0) == v("u", 1) + v("u", 2)
    u1, u2 = v("u", 1), v("u", 2)
    assert schur_super((2, 1), (), 2, 0) == u1 ** 2 * u2 + u1 * u2 ** 2
    assert schur_super((1,), (2,), 2, 2).is_zero()


def test_jacobi_trudi_against_tableaux():
    for m in range(1, 4):
        for lam in partitions_in_box(3, 6):
            for mu in partitions_in_box(3, 6):
                if not contains(lam, mu):
                    continue
                assert schur_super(lam, mu, m, 0) == ssyt_monomial_sum(lam, mu, m), (lam, mu, m)


def test_dual_jacobi_trudi_transpose():
    # m=0 specialisation gives the transposed shape in the v alphabet
    for lam in partitions_in_box(2, 4):
        direct = schur_super(lam, (), 0, 3)
        expected = ssyt_monomial_sum(transpose(lam), (), 3, family="v")
        assert direct == expected, lam


def test_factorial_schur_small():
    assert factorial_schur((), 2, 4).is_one()
    x1, x2, y1, y2 = v("x", 1), v("x", 2), v("y", 1), v("y", 2)
    assert factorial_schur((1,), 2, 4) == (x1 - y1) + (x2 - y2)
    with pytest.raises(ValueError):
        factorial_schur((3,), 2, 4)


def test_factorial_schur_y_zero_specialisation():
    zeros = {("y", i): Poly.const(0) for i in range(1, 5)}
    for lam in partitions_in_box(2, 4):
        fs = factorial_schur(lam, 2, 4).substitute(zeros)
        plain = schur_super(lam, (), 2, 0).substitute(
            {("u", i): v("x", i) for i in (1, 2)})
        assert fs == plain, lam


def test_factorial_schur_x_symmetry():
    for lam in partitions_in_box(3, 6):
        p = factorial_schur(lam, 3, 6)
        for perm in permutations((1, 2, 3)):
            q = p.substitute({("x", i): v("x", perm[i - 1]) for i in (1, 2, 3)})
            assert q == p, (lam, perm)


def test_lr_oracle_examples():
    assert lr_oracle((), (), ()) == 1
    assert lr_oracle((2, 1, 1), (1, 1), (1, 1)) == 1
    assert lr_oracle((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_oracle((1,), (1,), (1,)) == 0
    assert lr_oracle((2,), (1,), (1,)) == 1


def test_lr_oracle_pieri():
    # multiplying by a single row: coefficient 1 exactly on horizontal strips
    def horizontal_strip(lam, mu):
        if not contains(lam, mu):
            return False
        mu = tuple(mu) + (0,) * (len(lam) - len(mu))
        return all(lam[i + 1] <= mu[i] for i in range(len(lam) - 1))

    shapes = partitions_in_box(3, 6)
    for lam in shapes:
        for mu in shapes:
            for r in range(1, 4):
                if sum(mu) + r != sum(lam):
                    continue
                expected = 1 if horizontal_strip(lam, mu) else 0
                assert lr_oracle(lam, mu, (r,)) == expected, (lam, mu, r)


def test_lr_oracle_symmetry():
    shapes = partitions_in_box(2, 5)
    for lam in shapes:
        for mu in shapes:
            for nu in shapes:
                assert lr_oracle(lam, mu, nu) == lr_oracle(lam, nu, mu)


def test_ssyt_counts():
    # number of SSYT of shape (2,1) with entries <= 3 is 8
    assert sum(1 for _ in ssyt((2, 1), (), 3)) == 8
    assert sum(1 for _ in ssyt((1,), (1,), 3)) == 1  # empty skew shape
