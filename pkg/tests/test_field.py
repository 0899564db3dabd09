import itertools

import pytest

from downset.field import FieldMismatchError, PrimeField, field_arith, field_inverse, is_prime


def test_examples():
    F5 = PrimeField(5)
    assert field_arith(F5(3), F5(4), "add") == F5(2)
    for x in range(5):
        assert field_arith(F5(0), F5(x), "mul") == F5(0)
    F2 = PrimeField(2)
    assert field_arith(F2(1), F2(1), "add") == F2(0)


def test_inverse_examples():
    F5 = PrimeField(5)
    assert field_inverse(F5(1)) == F5(1)
    # 2 * 3 = 6 = 1 mod 5
    assert field_inverse(F5(2)) == F5(3)
    with pytest.raises(ZeroDivisionError):
        field_inverse(PrimeField(7)(0))


def test_mismatched_moduli():
    with pytest.raises(FieldMismatchError):
        PrimeField(5)(1) + PrimeField(7)(1)


@pytest.mark.parametrize("n", [0, 1, 4, 9, 15, 561, 2**61 - 2])
def test_rejects_non_primes(n):
    with pytest.raises(ValueError):
        PrimeField(n)


def test_large_word_sized_prime():
    q = 2**61 - 1
    F = PrimeField(q)
    a = F(123456789123)
    assert (a * a.inverse()).value == 1


def test_is_prime_against_trial_division():
    def slow(n):
        return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))
    assert [n for n in range(3000) if is_prime(n)] == [n for n in range(3000) if slow(n)]


@pytest.mark.parametrize("p", [2, 3, 5, 7, 11, 13])
def test_exhaustive_small_field_laws(p):
    F = PrimeField(p)
    els = [F(a) for a in range(p)]
    for a in els[1:]:
        assert a * a.inverse() == F(1)
        assert a ** (p - 1) == F(1)
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        assert (a - b) + b == a
    for a, b, c in itertools.product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
