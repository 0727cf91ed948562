import pytest
from hypothesis import given, strategies as st

from forestsym.coeffs import QPoly, q_factorial, q_integer
from forestsym.partitions import enumerate_partitions
from forestsym.symfunc import (
    MonomialSym,
    SymFunc,
    basis_unit,
    convert,
    factorial_h_determinant,
    monomial_expand,
    multiply,
    omega,
    rho_determinant,
    rho_n_alt,
    rho_n_via_hall_littlewood,
    rho_to_h,
    specialize_epsilon,
)

q = QPoly((0, 1))
RHO3 = SymFunc(
    3, "h", {(3,): QPoly((1, 1, 1)), (2, 1): QPoly((-2, -1)), (1, 1, 1): QPoly((1,))}
)


def units(n):
    return st.tuples(st.sampled_from(("e", "h", "p")), st.sampled_from(enumerate_partitions(n)))


def test_rho_small():
    assert rho_to_h(basis_unit("rho", (1,))) == basis_unit("h", (1,))
    assert rho_to_h(basis_unit("rho", (2,))) == SymFunc(2, "h", {(2,): q + 1, (1, 1): -1})
    assert rho_to_h(basis_unit("rho", (3,))) == RHO3
    assert rho_n_alt(3) == RHO3
    assert rho_n_via_hall_littlewood(3) == RHO3


@pytest.mark.parametrize("n", range(1, 6))
def test_rho_determinants(n):
    assert rho_to_h(factorial_h_determinant(n)) == basis_unit("h", (n,)) * q_factorial(n)
    # the determinant in the h's is (-1)^(n-1) rho_n
    assert rho_determinant(n) * (-1) ** (n - 1) == rho_to_h(basis_unit("rho", (n,)))


@given(st.integers(1, 5).flatmap(units), st.sampled_from(("e", "h", "p")))
def test_conversion_round_trip(unit, target):
    f = basis_unit(*unit)
    assert convert(convert(f, target), unit[0]) == f
    assert monomial_expand(convert(f, target)) == monomial_expand(f)


@given(st.integers(1, 5).flatmap(units))
def test_omega_swaps_e_and_h(unit):
    basis, lam = unit
    if basis == "e":
        assert omega(basis_unit("e", lam)) == basis_unit("h", lam)
    assert omega(omega(basis_unit(basis, lam))) == basis_unit(basis, lam)


def test_multiply_matches_monomials():
    a = basis_unit("e", (2,))
    b = basis_unit("h", (1, 1))
    assert monomial_expand(multiply(a, convert(b, "e"))) == monomial_expand(a) * monomial_expand(b)


def test_json_round_trip():
    assert SymFunc.from_json(RHO3.to_json()) == RHO3


def test_mixed_basis_equality_refused():
    with pytest.raises(ValueError):
        RHO3 == basis_unit("e", (3,))


def test_e2_monomial():
    assert monomial_expand(basis_unit("e", (2,))) == MonomialSym(2, {(1, 1): QPoly((1,))})


def test_specialization():
    x = specialize_epsilon(convert(basis_unit("e", (2,)) * 2, "p"))
    # 2 e_2 = p_1^2 - p_2 -> x^2 - x
    assert [x.evaluate(k, 1) for k in range(4)] == [0, 0, 2, 6]


def test_newton_q():
    # [n]_q h_n = sum_j h_{n-j} rho_j
    n = 4
    rhs = SymFunc.zero(n, "h")
    for j in range(1, n + 1):
        rhs = rhs + multiply(basis_unit("h", (n - j,) if j < n else ()), rho_n_alt(j))
    assert rhs == basis_unit("h", (n,)) * q_integer(n)
