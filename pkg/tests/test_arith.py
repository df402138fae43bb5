from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dp4brauer.arith import (
    REAL,
    Place,
    format_rational,
    hilbert_symbol,
    hilbert_symbol_oracle,
    is_prime,
    is_square_local,
    legendre_symbol,
    parse_rational,
    tame_symbol,
    unit_part,
    val_unit,
    valuation,
)

# Pool used by the oracle suite: the 16 integer square-class seeds of Q(sqrt(-1),...)
# plus 12 rationals hitting the same primes through denominators.
POOL = (
    [s * n for n in (1, 2, 3, 5, 6, 10, 15, 30) for s in (1, -1)]
    + [
        s * q
        for q in (
            Fraction(1, 2),
            Fraction(2, 5),
            Fraction(1, 5),
            Fraction(5, 6),
            Fraction(3, 10),
            Fraction(6, 5),
        )
        for s in (1, -1)
    ]
)

PLACES = [Place.finite(p) for p in (2, 3, 5, 7, 17)] + [REAL]


def test_pool_size():
    assert len(POOL) == 28
    assert len(set(map(Fraction, POOL))) == 28


def test_is_prime_small():
    primes = [p for p in range(60) if is_prime(p)]
    assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
    assert is_prime(2**61 - 1)
    assert not is_prime(2**60)
    with pytest.raises(ValueError):
        is_prime(1 << 64)


def test_place_parse():
    assert Place.parse("2").p == 2
    assert Place.parse("real").is_real
    with pytest.raises(ValueError):
        Place.parse("9")


def test_valuation_examples():
    assert valuation(12, 2) == 2
    assert valuation(1, 7) == 0
    assert valuation(Fraction(2, 5), 5) == -1
    with pytest.raises(ValueError):
        valuation(0, 3)


def test_unit_part_reconstructs():
    for x in (Fraction(12), Fraction(2, 5), Fraction(-45, 8)):
        for p in (2, 3, 5):
            v, u = val_unit(x, p)
            assert x == Fraction(p) ** v * u
            assert valuation(u, p) == 0


def test_legendre_examples():
    assert legendre_symbol(1, 7) == 1
    assert legendre_symbol(-1, 17) == 1  # 4^2 = 16 = -1 mod 17
    assert legendre_symbol(3, 7) == -1
    assert legendre_symbol(14, 7) == 0
    with pytest.raises(ValueError):
        legendre_symbol(3, 2)


def test_legendre_brute_force():
    for p in (3, 7, 17):
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            assert legendre_symbol(a, p) == (1 if a in squares else -1)


def test_hilbert_paper_values():
    two = Place.finite(2)
    assert hilbert_symbol(-1, 2, two) == 1
    assert hilbert_symbol(Fraction(2, 5), Fraction(1, 5), two) == -1
    assert hilbert_symbol(3, 3, two) == -1
    assert hilbert_symbol(3, 2, two) == -1
    assert hilbert_symbol(-4, -2, REAL) == -1
    assert hilbert_symbol(1, 999, REAL) == 1


def test_hilbert_trivial_first_argument_square():
    for v in PLACES:
        for b in POOL:
            assert hilbert_symbol(1, b, v) == 1


def test_hilbert_errors():
    with pytest.raises(ValueError):
        hilbert_symbol(0, 1, REAL)


def test_is_square_local():
    assert is_square_local(4, Place.finite(7))
    assert is_square_local(17, Place.finite(2))  # 17 = 1 mod 8
    assert not is_square_local(2, Place.finite(5))
    assert not is_square_local(-4, REAL)
    # oracle for the 2-adic case: search z with z^2 = 17 mod 2**10
    assert any(z * z % 2**10 == 17 for z in range(2**10))


def test_square_iff_symbol_trivial_everywhere():
    # x square in Q_v iff (x, b)_v = 1 for all b in the pool
    for v in PLACES:
        for x in POOL:
            if is_square_local(x, v):
                assert all(hilbert_symbol(x, b, v) == 1 for b in POOL)


def test_bimultiplicative_and_symmetric():
    for v in PLACES:
        for a in POOL[:8]:
            for b in POOL[:8]:
                assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
                for c in (2, -3, 30):
                    lhs = hilbert_symbol(Fraction(a) * c, b, v)
                    rhs = hilbert_symbol(a, b, v) * hilbert_symbol(c, b, v)
                    assert lhs == rhs


def test_special_identities():
    for v in PLACES:
        for a in POOL:
            assert hilbert_symbol(a, -Fraction(a), v) == 1
            if Fraction(a) != 1:
                assert hilbert_symbol(a, 1 - Fraction(a), v) == 1


@given(
    a=st.sampled_from(POOL),
    b=st.sampled_from(POOL),
    c=st.integers(min_value=-40, max_value=40).filter(lambda n: n != 0),
    v=st.sampled_from(PLACES),
)
def test_square_invariance(a, b, c, v):
    assert hilbert_symbol(Fraction(a) * c * c, b, v) == hilbert_symbol(a, b, v)


def test_product_formula():
    for a in POOL:
        for b in POOL:
            num = 4 * Fraction(a).numerator * Fraction(a).denominator
            num *= Fraction(b).numerator * Fraction(b).denominator
            places = [Place.finite(p) for p in {2, 3, 5, 7, 11, 13, 17} if num % p == 0]
            places.append(REAL)
            minus = sum(1 for v in places if hilbert_symbol(a, b, v) == -1)
            assert minus % 2 == 0


@settings(deadline=None)
@given(
    vf=st.integers(min_value=-3, max_value=3),
    vg=st.integers(min_value=-3, max_value=3),
    fu=st.fractions(min_value=-20, max_value=20).filter(lambda x: x != 0),
    gu=st.fractions(min_value=-20, max_value=20).filter(lambda x: x != 0),
)
def test_tame_symbol_antisymmetry(vf, vg, fu, gu):
    assert tame_symbol(vf, vg, fu, gu) * tame_symbol(vg, vf, gu, fu) == 1


def test_tame_symbol_examples():
    u, w = Fraction(5), Fraction(7)
    assert tame_symbol(0, 0, u, w) == 1
    assert tame_symbol(1, 0, u, w) == 1 / w
    assert tame_symbol(1, 1, u, w) == -u / w
    with pytest.raises(ValueError):
        tame_symbol(1, 1, 0, 1)


def test_rational_serialization():
    assert format_rational(Fraction(-3, 7)) == "-3/7"
    assert parse_rational("-3/7") == Fraction(-3, 7)
    assert parse_rational("4") == 4
    assert parse_rational(format_rational(Fraction(12))) == 12


def test_oracle_matches_closed_form_on_pool():
    # criterion 1: closed form == exhaustive-lifting oracle on pool x places.
    cache: dict[tuple, int] = {}
    for v in PLACES:
        for a in POOL:
            for b in POOL:
                key = (Fraction(a), Fraction(b), v.p)
                if key not in cache:
                    cache[key] = hilbert_symbol_oracle(a, b, v)
                assert cache[key] == hilbert_symbol(a, b, v), (a, b, str(v))
