import numpy as np
import pytest

from polarblock.gf import GF, arith, field_of_order, is_prime, make_field

SMALL_ORDERS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2)]
BIG_ORDERS = [(2, 4), (5, 2), (3, 3), (2, 5)]


def test_fixed_moduli_pinned():
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(2, 3).modulus == (1, 1, 0, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 4).modulus == (1, 1, 0, 0, 1)
    assert make_field(5, 2).modulus == (1, 1, 1)
    assert make_field(3, 3).modulus == (1, 2, 0, 1)


def test_encoding_of_zero_and_one():
    for p, h in SMALL_ORDERS + BIG_ORDERS:
        f = make_field(p, h)
        assert f.add(0, 0) == 0
        assert f.mul(1, 1) == 1
        for a in f.elements():
            assert f.add(a, 0) == a
            assert f.mul(a, 1) == a
            assert f.mul(a, 0) == 0


@pytest.mark.parametrize("p,h", SMALL_ORDERS)
def test_field_axioms_exhaustive(p, h):
    f = make_field(p, h)
    els = list(f.elements())
    for a in els:
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("p,h", BIG_ORDERS)
def test_field_axioms_randomized(p, h):
    f = make_field(p, h)
    rng = np.random.default_rng(12345)
    trips = rng.integers(0, f.q, size=(100_000, 3))
    for a, b, c in trips:
        a, b, c = int(a), int(b), int(c)
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_inverses():
    for p, h in SMALL_ORDERS + BIG_ORDERS:
        f = make_field(p, h)
        for a in range(1, f.q):
            assert f.mul(a, f.inv(a)) == 1
        with pytest.raises(ZeroDivisionError):
            f.inv(0)
        with pytest.raises(ZeroDivisionError):
            f.div(1, 0)


def test_known_arithmetic_values():
    f2 = make_field(2, 1)
    assert f2.add(1, 1) == 0
    f4 = make_field(2, 2)
    w = 2  # the class of x
    assert f4.mul(w, w) == f4.add(w, 1)  # w^2 = w + 1
    assert f4.mul(w, f4.add(w, 1)) == 1  # w * w^2 = 1
    f9 = make_field(3, 2)
    x = 3  # the class of x
    assert f9.mul(x, x) == 2  # x^2 = -1
    assert f9.pow(x, 8) == 1
    f3 = make_field(3, 1)
    assert f3.add(2, 2) == 1


def test_conjugation():
    f4 = make_field(2, 2)
    assert f4.conjugate(2) == 3  # w -> w^2 = w + 1
    assert f4.conjugate(1) == 1
    f9 = make_field(3, 2)
    for a in f9.elements():
        assert f9.conjugate(f9.conjugate(a)) == a
        for b in f9.elements():
            assert f9.conjugate(f9.mul(a, b)) == \
                f9.mul(f9.conjugate(a), f9.conjugate(b))
        norm = f9.mul(a, f9.conjugate(a))
        assert norm < 3  # norms land in the prime subfield GF(3)
    fixed = [a for a in f9.elements() if f9.conjugate(a) == a]
    assert len(fixed) == 3
    with pytest.raises(ValueError):
        make_field(2, 3).conjugate(1)


def test_arith_dispatch_and_errors():
    f = make_field(2, 2)
    assert arith(f, "add", 2, 3) == 1
    assert arith(f, "sub", 2, 3) == 1
    assert arith(f, "mul", 2, 3) == 1
    assert arith(f, "div", 1, 3) == 2
    assert arith(f, "pow", 3, 8) == f.pow(3, 8)
    with pytest.raises(ValueError):
        arith(f, "xor", 1, 1)
    with pytest.raises(ValueError):
        arith(f, "add", 4, 1)


def test_make_field_errors():
    with pytest.raises(ValueError):
        GF(4, 1)  # non-prime characteristic
    with pytest.raises(ValueError):
        GF(2, 11)  # order over the guard
    with pytest.raises(ValueError):
        GF(2, 0)


def test_field_of_order():
    assert field_of_order(8).q == 8
    assert field_of_order(9).p == 3
    with pytest.raises(ValueError):
        field_of_order(6)
    assert is_prime(7) and not is_prime(9)


def test_deterministic_tables():
    a = GF(3, 2)
    b = GF(3, 2)
    assert np.array_equal(a.mul_table, b.mul_table)
    assert np.array_equal(a.add_table, b.add_table)
    assert a.modulus == b.modulus
