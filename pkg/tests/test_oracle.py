from fractions import Fraction
from math import factorial

import pytest

from plethyst import (
    MONOMIAL,
    POWERSUM,
    SCHUR,
    BasisMismatchError,
    SizeMismatchError,
    SymFunc,
    centralizer_order,
    character,
    convert,
    count_composite_tableaux,
    finite_variable_expansion,
    monomial_expansion,
    partitions_of,
    plethysm_via_powersums,
    powersum_to_monomial,
    schur_expansion,
    schur_to_powersum,
    stretch_powersum,
)

import brute


def test_centralizer_order_values():
    assert centralizer_order((1, 1, 1)) == 6
    assert centralizer_order((3,)) == 3
    assert centralizer_order((2, 1)) == 2
    assert centralizer_order(()) == 1


def test_centralizer_orders_partition_the_symmetric_group():
    # class sizes n!/z_rho sum to n!
    for n in range(1, 9):
        assert sum(Fraction(factorial(n), centralizer_order(r)) for r in partitions_of(n)) == factorial(n)


def test_character_against_hand_tables():
    for n in (1, 2, 3):
        for (lam, rho), value in brute.brute_character_table(n).items():
            assert character(lam, rho) == value, (lam, rho)


def test_character_at_identity_counts_standard_tableaux():
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert character(lam, (1,) * n) == brute.hook_length_count(lam), lam


def test_character_trivial_and_sign():
    for n in range(1, 7):
        for rho in partitions_of(n):
            assert character((n,), rho) == 1
            assert character((1,) * n, rho) == (-1) ** (n - len(rho))


def test_character_rejects_size_mismatch():
    with pytest.raises(SizeMismatchError):
        character((2, 1), (2, 2))


def test_character_orthogonality():
    for n in range(1, 8):
        parts = partitions_of(n)
        for a in parts:
            for b in parts:
                dot = sum(
                    Fraction(character(a, r) * character(b, r), centralizer_order(r))
                    for r in parts
                )
                assert dot == (1 if a == b else 0), (a, b)


def test_schur_to_powersum_known_values():
    assert schur_to_powersum((1,)).coeffs == {(1,): 1}
    assert schur_to_powersum((2,)).coeffs == {
        (1, 1): Fraction(1, 2),
        (2,): Fraction(1, 2),
    }
    assert schur_to_powersum((1, 1)).coeffs == {
        (1, 1): Fraction(1, 2),
        (2,): Fraction(-1, 2),
    }


def test_schur_powersum_round_trip():
    for n in range(1, 7):
        for lam in partitions_of(n):
            back = convert(schur_to_powersum(lam), SCHUR)
            assert back == SymFunc(SCHUR, n, {lam: 1}), lam


def test_powersum_to_monomial_known_values():
    f = SymFunc(POWERSUM, 3, {(2, 1): 1})
    assert powersum_to_monomial(f).coeffs == {(3,): 1, (2, 1): 1}
    g = SymFunc(POWERSUM, 2, {(1, 1): 1})
    assert powersum_to_monomial(g).coeffs == {(2,): 1, (1, 1): 2}
    with pytest.raises(BasisMismatchError):
        powersum_to_monomial(SymFunc(MONOMIAL, 2, {(2,): 1}))


def test_stretch_powersum_composes_power_sums():
    # p_k applied to p_l is p_{k*l}
    for k in range(1, 5):
        for l in range(1, 5):
            f = SymFunc(POWERSUM, l, {(l,): 1})
            assert stretch_powersum(f, k).coeffs == {(k * l,): 1}
    with pytest.raises(ValueError):
        stretch_powersum(SymFunc(POWERSUM, 1, {(1,): 1}), 0)
    with pytest.raises(BasisMismatchError):
        stretch_powersum(SymFunc(SCHUR, 1, {(1,): 1}), 2)


def test_stretch_powersum_is_linear_on_expansions():
    # p_2[s_2] = (p_{2,2} + p_4)/2, read off by stretching s_2's expansion
    f = stretch_powersum(schur_to_powersum((2,)), 2)
    assert f.coeffs == {(2, 2): Fraction(1, 2), (4,): Fraction(1, 2)}


def test_plethysm_via_powersums_identity_cases():
    assert plethysm_via_powersums((1,), (2, 1)) == SymFunc(SCHUR, 3, {(2, 1): 1})
    assert plethysm_via_powersums((3, 1), (1,)) == SymFunc(SCHUR, 4, {(3, 1): 1})
    assert plethysm_via_powersums((), (2,)) == SymFunc(SCHUR, 0, {(): 1})


def test_plethysm_via_powersums_known_expansions():
    assert plethysm_via_powersums((2,), (2,)).coeffs == {(4,): 1, (2, 2): 1}
    assert plethysm_via_powersums((1, 1), (2,)).coeffs == {(3, 1): 1}
    assert plethysm_via_powersums((2,), (2,)).coefficient((2, 2)) == 1


def test_oracle_agrees_with_tableau_route_on_small_grid():
    for m in range(1, 7):
        for n in range(1, 7):
            if m * n > 6:
                continue
            for lam in partitions_of(m):
                for mu in partitions_of(n):
                    assert plethysm_via_powersums(lam, mu) == schur_expansion(lam, mu)


def test_finite_variable_expansion_two_variables():
    assert finite_variable_expansion((1,), (2,), 2) == {
        (2, 0): 1,
        (1, 1): 1,
        (0, 2): 1,
    }
    assert finite_variable_expansion((1, 1), (2,), 2) == {(3, 1): 1, (2, 2): 1, (1, 3): 1}
    assert finite_variable_expansion((1, 1), (2,), 2)[(3, 1)] == 1


def test_finite_variable_expansion_matches_counts():
    out = finite_variable_expansion((2,), (2,), 4)
    assert out[(2, 1, 1, 0)] == 2
    assert out[(4, 0, 0, 0)] == 1
    for nu in partitions_of(4):
        expo = tuple(nu) + (0,) * (4 - len(nu))
        assert out[expo] == count_composite_tableaux((2,), (2,), nu), nu


def test_finite_variable_expansion_is_symmetric():
    out = finite_variable_expansion((2,), (2,), 4)
    assert out[(1, 2, 0, 1)] == out[(2, 1, 1, 0)]
    assert out[(0, 2, 0, 2)] == out[(2, 2, 0, 0)]


def test_finite_variable_expansion_truncates_gracefully():
    # with one variable only the single-column content survives
    assert finite_variable_expansion((1,), (2,), 1) == {(2,): 1}
    with pytest.raises(ValueError):
        finite_variable_expansion((1,), (2,), 0)


def test_finite_variable_degree_matches_monomial_expansion():
    # the polynomial is the full symmetric function once variables suffice
    mono = monomial_expansion((2, 1), (2,)).coeffs
    out = finite_variable_expansion((2, 1), (2,), 6)
    total_from_poly = sum(out.values())
    # each m_nu contributes one monomial per distinct rearrangement of nu
    from collections import Counter

    def rearrangements(nu, width):
        counts = Counter(nu)
        counts[0] = width - len(nu)
        total = factorial(width)
        for c in counts.values():
            total //= factorial(c)
        return total

    assert total_from_poly == sum(
        c * rearrangements(nu, 6) for nu, c in mono.items()
    )
