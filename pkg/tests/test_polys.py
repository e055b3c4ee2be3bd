"""Exact polynomial and linear-algebra kernel tests."""

from fractions import Fraction

import pytest

from pellipse import polys
from pellipse.errors import DomainError

F = Fraction


def test_trim_and_degree():
    assert polys.trim([1, 2, 0, 0]) == [1, 2]
    assert polys.trim([0, 0]) == [0]
    assert polys.degree([0]) == 0
    assert polys.degree([3, 0, 5]) == 2


def test_arithmetic_roundtrip():
    p = [F(1), F(-3), F(2)]  # 2x^2 - 3x + 1 = (2x-1)(x-1)
    q = [F(-1), F(2)]
    quot, rem = polys.pdivmod(p, q)
    assert polys.trim(rem) == [0]
    assert polys.padd(polys.pmul(quot, q), rem) == p
    assert polys.peval(p, F(1, 2)) == 0 and polys.peval(p, 1) == 0


def test_pcompose_and_pderiv():
    # (x^2)' = 2x; T2(T2(x)) = T4(x) = 8x^4 - 8x^2 + 1
    t2 = [-1, 0, 2]
    t4 = polys.trim(polys.pcompose(t2, t2))
    assert t4 == [1, 0, -8, 0, 8]
    assert polys.pderiv([1, 0, -8, 0, 8]) == [0, -16, 0, 32]


def test_poly_sqrt_exact():
    # (1 + 2x + 3x^2)^2, ascending
    p = [F(1), F(2), F(3)]
    sq = polys.pmul(p, p)
    assert polys.poly_sqrt(sq) in (p, polys.pneg(p))


def test_frac_sqrt():
    assert polys.frac_sqrt(F(9, 4)) == F(3, 2)
    with pytest.raises(DomainError):
        polys.frac_sqrt(F(2))


def test_discriminant_quadratic_closed_form():
    # disc(ax^2 + bx + c) = b^2 - 4ac, here ascending [c, b, a]
    a, b, c = F(2), F(-7), F(3)
    assert polys.discriminant([c, b, a]) == b * b - 4 * a * c


def test_resultant_common_root():
    # share the root x=2 -> resultant 0
    p = [F(-2), F(1)]
    q = [F(-6), F(1), F(1)]  # (x-2)(x+3)
    assert polys.resultant(polys.pmul(p, p), q) == 0
    assert polys.resultant([F(-1), F(1)], q) != 0


def test_real_root_isolation_and_refinement():
    # (x-1)(x-2)(x-3), ascending
    p = [F(-6), F(11), F(-6), F(1)]
    chain = polys.sturm_chain(p)
    assert polys.count_real_roots(chain, F(0), F(10)) == 3
    assert polys.count_real_roots(chain, F(3, 2), F(5, 2)) == 1
    roots = polys.real_roots(p)
    assert len(roots) == 3
    for r, want in zip(sorted(roots), (1, 2, 3)):
        assert abs(r - want) < F(1, 10**40)


def test_rationalize_root():
    p = [F(-4), F(0), F(3)]  # 3x^2 = 4 -> irrational
    r = polys.real_roots(p)[1]
    assert polys.rationalize_root(p, r) is None
    q = [F(-2, 3), F(1)]  # x = 2/3
    assert polys.rationalize_root(q, polys.real_roots(q)[0]) == F(2, 3)


def test_det_exact():
    m = [[F(1), F(2)], [F(3), F(4)]]
    assert polys.det(m) == F(-2)
    assert polys.det([[F(2)]]) == F(2)


def test_nullspace_vector_stays_in_field():
    # regression: the returned basis vector must live in the matrix's field,
    # never silently promote to float
    v = polys.nullspace_vector([[F(0)]])
    assert len(v) == 1 and isinstance(v[0], (int, Fraction)) and v[0] != 0

    m = [[F(1), F(2)], [F(2), F(4)]]  # rank 1
    v = polys.nullspace_vector(m)
    assert all(isinstance(c, (int, Fraction)) for c in v)
    assert m[0][0] * v[0] + m[0][1] * v[1] == 0
    assert m[1][0] * v[0] + m[1][1] * v[1] == 0
