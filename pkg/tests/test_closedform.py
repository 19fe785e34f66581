from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import nonzero_rationals
from twocirc.circulant import Circulant, TwoParamCirculant, circ_to_dense
from twocirc.closedform import (DetResult, GenInverseResult, InverseKind, base_drazin_minus,
                                base_drazin_plus, det_closed, drazin_axioms_check, drazin_closed,
                                generalized_inverse, inverse_closed, perm_closed, rho, rho_star)
from twocirc.core import DomainError, NonsingularMatrixError, SingularMatrixError
from twocirc.matrix import DenseMatrix
from twocirc.oracle import (det_oracle, group_inverse_oracle, inverse_oracle, null_contains,
                            perm_oracle, rank_oracle)

two_params = st.integers(2, 9).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, n - 2)).flatmap(
        lambda ns: st.tuples(st.just(ns[0]), st.just(ns[1]), st.integers(ns[1] + 1, ns[0] - 1),
                             nonzero_rationals, nonzero_rationals)
    )
).map(lambda args: TwoParamCirculant(*args))


def circ(*coeffs):
    return Circulant(coeffs)


def test_det_examples():
    r = det_closed(TwoParamCirculant(4, 0, 1, 2, 1))
    assert r.value == 15 and (r.base, r.multiplicity, r.sign_exponent) == (15, 1, 0)
    r = det_closed(TwoParamCirculant(9, 2, 5, 1, 1))
    assert r.value == 8 and r.sign_exponent == 16
    assert det_closed(TwoParamCirculant(12, 1, 4, 2, 1)).value == 15 ** 3 * (-1) ** 11


def test_det_singular_odd_block():
    for n, s in [(5, 1), (9, 3), (12, 4), (10, 2)]:
        r = det_closed(TwoParamCirculant(n, 0, s, 3, -3))
        assert r.value == 0 and r.singular


def test_det_result_identity_and_roundtrip():
    r = det_closed(TwoParamCirculant(9, 1, 4, Fraction(-3, 2), Fraction(5, 7)))
    assert r.value == (-1) ** r.sign_exponent * r.base ** r.multiplicity
    assert DetResult.from_dict(r.to_dict()) == r


def test_perm_examples():
    assert perm_closed(TwoParamCirculant(4, 0, 1, 2, 1)) == 17
    assert perm_closed(TwoParamCirculant(9, 2, 5, 1, 1)) == 8
    a, b = Fraction(3), Fraction(-2)
    assert perm_closed(TwoParamCirculant(4, 0, 2, a, b)) == (a**2 + b**2) ** 2
    assert perm_oracle(TwoParamCirculant(4, 0, 2, a, b).to_dense()) == 169


def test_rho_twelve_three():
    a, b = Fraction(2), Fraction(1)
    t = TwoParamCirculant(12, 1, 4, a, b)
    assert rho(t, 2 + 1) == -b * a**2
    assert rho(t, 11 + 1) == a**3
    assert rho(t, 1 + 1) == 0
    assert rho(t, 0) == a**3


def test_rho_small_and_off_class():
    a, b = Fraction(3), Fraction(5)
    t = TwoParamCirculant(4, 0, 1, a, b)
    assert rho(t, 1) == -b * a**2
    t = TwoParamCirculant(9, 0, 3, a, b)
    assert all(rho(t, i) == 0 for i in range(9) if i % 3)


def test_rho_consistency():
    a, b = Fraction(2, 3), Fraction(-5)
    for n in range(2, 13):
        for s in range(1, n):
            t = TwoParamCirculant(n, 0, s, a, b)
            m = t.m
            base = TwoParamCirculant(m, 0, 1, a, b) if m > 1 else None
            for i in range(m):
                assert rho(base, i) == (-1) ** i * b**i * a ** (m - i - 1)
                assert rho(base, i) == rho(t, i * s)
                assert rho_star(m, 1, i) == m - 2 * i - 1
                assert rho_star(m, 1, i) == rho_star(n, s, i * s)


def test_rho_star_examples():
    # coefficient j of the s1 = 1 example reads rho_star at j + 1
    assert rho_star(12, 3, 8 + 1) == -3
    assert rho_star(12, 3, 2 + 1) == 1
    assert rho_star(12, 3, 1 + 1) == 0
    assert rho_star(12, 3, 0) == 3
    assert rho_star(7, 1, 0) == 6
    assert rho_star(12, 3, 1) == 0


def test_inverse_examples_symbolic_points():
    for a, b in [(2, 1), (3, -2), (Fraction(1, 2), Fraction(1, 3))]:
        a, b = Fraction(a), Fraction(b)
        r = inverse_closed(TwoParamCirculant(4, 0, 1, a, b))
        assert r.circulant() == circ(a**3, -b * a**2, b**2 * a, -b**3).scale(1 / (a**4 - b**4))
        r = inverse_closed(TwoParamCirculant(5, 0, 1, a, b))
        assert r.circulant() == circ(a**4, -b * a**3, b**2 * a**2, -b**3 * a, b**4).scale(
            1 / (a**5 + b**5))
        r = inverse_closed(TwoParamCirculant(12, 1, 4, a, b))
        assert r.kind is InverseKind.INVERSE and r.scale == 1 / (a**4 - b**4)
        assert r.circ == circ(0, 0, -b * a**2, 0, 0, b**2 * a, 0, 0, -b**3, 0, 0, a**3)


def test_inverse_of_singular_raises():
    with pytest.raises(SingularMatrixError, match="singular: use drazin_closed"):
        inverse_closed(TwoParamCirculant(4, 0, 1, 1, -1))


@given(two_params)
@settings(max_examples=80, deadline=None)
def test_inverse_or_drazin_property(t):
    A = t.to_dense()
    r = generalized_inverse(t)
    D = r.to_dense()
    if r.kind is InverseKind.INVERSE:
        assert D @ A == DenseMatrix.identity(t.n)
    else:
        assert drazin_axioms_check(A, D, 1)


def test_drazin_examples():
    for a in [Fraction(1), Fraction(-3), Fraction(5, 7)]:
        r = drazin_closed(TwoParamCirculant(4, 0, 1, a, -a))
        assert (r.kind, r.scale, r.circ) == (InverseKind.DRAZIN_MINUS, 1 / (8 * a), circ(3, 1, -1, -3))
        r = drazin_closed(TwoParamCirculant(5, 0, 1, a, -a))
        assert (r.scale, r.circ) == (1 / (10 * a), circ(4, 2, 0, -2, -4))
        r = drazin_closed(TwoParamCirculant(12, 1, 4, a, -a))
        assert (r.scale, r.circ) == (1 / (8 * a), circ(0, 0, 1, 0, 0, -1, 0, 0, -3, 0, 0, 3))
        r = drazin_closed(TwoParamCirculant(12, 1, 4, a, a))
        assert r.kind is InverseKind.DRAZIN_PLUS
        assert (r.scale, r.circ) == (1 / (8 * a), circ(0, 0, -1, 0, 0, -1, 0, 0, 3, 0, 0, 3))


def test_drazin_of_nonsingular_raises():
    with pytest.raises(NonsingularMatrixError, match="nonsingular: use inverse_closed"):
        drazin_closed(TwoParamCirculant(4, 0, 1, 2, 1))
    # b = a with odd block order is nonsingular
    with pytest.raises(NonsingularMatrixError):
        drazin_closed(TwoParamCirculant(9, 0, 3, 1, 1))


def test_drazin_plus_even_stride_cases():
    # even strides where a parity sign in i + s1 would go wrong
    for n, s1, s2 in [(4, 0, 2), (8, 0, 2), (8, 1, 3), (12, 0, 6), (10, 2, 7)]:
        t = TwoParamCirculant(n, s1, s2, 2, 2)
        A, D = t.to_dense(), drazin_closed(t).to_dense()
        assert drazin_axioms_check(A, D) and D == group_inverse_oracle(A)


def test_base_drazin_minus():
    a = Fraction(-3)
    assert base_drazin_minus(4, a) == circ(3, 1, -1, -3).scale(1 / (8 * a))
    assert base_drazin_minus(2, 1) == circ(Fraction(1, 4), Fraction(-1, 4))
    A = DenseMatrix.from_rows([[1, -1], [-1, 1]])
    assert group_inverse_oracle(A) == circ_to_dense(base_drazin_minus(2, 1))
    for n in range(2, 10):
        c = base_drazin_minus(n, a)
        assert sum(c.coeffs) == 0
        M = TwoParamCirculant(n, 0, 1, a, -a).to_dense()
        D = circ_to_dense(c)
        assert drazin_axioms_check(M, D)
        ones = [1] * n
        assert null_contains(M, ones) and null_contains(D, ones)
    with pytest.raises(DomainError):
        base_drazin_minus(1, 1)


def test_base_drazin_plus():
    a = Fraction(5, 7)
    assert base_drazin_plus(4, a) == circ(3, -1, -1, 3).scale(1 / (8 * a))
    assert base_drazin_plus(2, 1) == circ(Fraction(1, 4), Fraction(1, 4))
    A = DenseMatrix.from_rows([[1, 1], [1, 1]])
    assert group_inverse_oracle(A) == circ_to_dense(base_drazin_plus(2, 1))
    for m in range(2, 13, 2):
        M = TwoParamCirculant(m, 0, 1, a, a).to_dense()
        D = circ_to_dense(base_drazin_plus(m, a))
        assert drazin_axioms_check(M, D)
        alt = [(-1) ** i for i in range(m)]
        assert null_contains(M, alt) and null_contains(D, alt)
    for m in (3, 5, 7):
        with pytest.raises(DomainError):
            base_drazin_plus(m, 1)


def test_axioms_check_examples():
    A = TwoParamCirculant(4, 0, 1, 2, 1).to_dense()
    assert drazin_axioms_check(A, inverse_oracle(A), 1)
    M = TwoParamCirculant(4, 0, 1, 1, -1).to_dense()
    assert drazin_axioms_check(M, circ_to_dense(circ(3, 1, -1, -3).scale(Fraction(1, 8))), 1)
    assert not drazin_axioms_check(M, DenseMatrix.zeros(4), 1)
    with pytest.raises(ValueError):
        drazin_axioms_check(M, DenseMatrix.zeros(3), 1)
    with pytest.raises(ValueError):
        drazin_axioms_check(M, M, 0)


def test_gen_inverse_json_roundtrip():
    for t in [TwoParamCirculant(12, 1, 4, 2, 1), TwoParamCirculant(12, 1, 4, 3, -3),
              TwoParamCirculant(12, 1, 4, Fraction(5, 7), Fraction(5, 7))]:
        r = generalized_inverse(t)
        assert GenInverseResult.from_json(r.to_json()) == r
        assert set(r.to_dict()) == {"kind", "scale", "coeffs"}


def test_support_on_stride_class():
    for t in [TwoParamCirculant(12, 1, 4, 2, 1), TwoParamCirculant(12, 1, 4, 1, -1)]:
        r = generalized_inverse(t)
        support = {j for j, c in enumerate(r.circ.coeffs) if c}
        assert all((j + t.s1) % t.g == 0 for j in support)


def test_index_is_one_on_singular_cases():
    for n in range(2, 11):
        for s in range(1, n):
            for b in (-1, 1):
                t = TwoParamCirculant(n, 0, s, 1, b)
                if det_closed(t).singular:
                    A = t.to_dense()
                    assert rank_oracle(A) == rank_oracle(A @ A)


def test_det_and_perm_agree_with_oracles():
    for t in [TwoParamCirculant(7, 2, 5, Fraction(-3, 2), Fraction(5, 7)),
              TwoParamCirculant(10, 3, 7, 2, 3)]:
        assert det_closed(t).value == det_oracle(t.to_dense())
        assert perm_closed(t) == perm_oracle(t.to_dense())
