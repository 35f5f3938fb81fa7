"""Exactness and ring behavior of the two polynomial types."""

import random

import pytest

from qspivey import QPoly, XQPoly


def test_constructor_normalizes_trailing_zeros():
    assert QPoly([1, 0, 0]) == QPoly([1])
    assert QPoly([0, 0, 0]) == QPoly.zero()
    assert QPoly([1, 0, 0]).coeffs == (1,)


def test_zero_has_no_degree():
    assert QPoly.zero().degree is None
    assert QPoly([7]).degree == 0
    assert QPoly([0, 0, 3]).degree == 2
    assert XQPoly.zero().degree is None


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        QPoly([1.5])
    with pytest.raises(TypeError):
        XQPoly(["1"])


def test_add_examples():
    # (1 + q) + q = 1 + 2q
    assert QPoly([1, 1]) + QPoly([0, 1]) == QPoly([1, 2])
    p = QPoly([3, 0, 2])
    assert p + QPoly.zero() == p
    # exact cancellation collapses to the canonical zero
    assert QPoly([1, 1, 1]) + QPoly([-1, -1, -1]) == QPoly.zero()


def test_mul_examples():
    # (1 + q + q^2)(1 + q) = 1 + 2q + 2q^2 + q^3, by hand convolution
    assert QPoly([1, 1, 1]) * QPoly([1, 1]) == QPoly([1, 2, 2, 1])
    assert (QPoly([1, 1]) * QPoly([1, 1])).coeffs == (1, 2, 1)
    p = QPoly([5, -3])
    assert p * QPoly.one() == p
    assert p * QPoly.zero() == QPoly.zero()
    assert p * 2 == QPoly([10, -6])
    assert 2 * p == QPoly([10, -6])


def test_pow_conventions():
    assert QPoly.zero() ** 0 == QPoly.one()
    assert QPoly([1, 1]) ** 2 == QPoly([1, 2, 1])
    assert QPoly.monomial(1) ** 3 == QPoly.monomial(3)
    with pytest.raises(ValueError):
        QPoly.one() ** -1


def test_eval_int():
    assert QPoly([1, 1, 1]).eval_int(1) == 3
    assert QPoly([0, 2, 1]).eval_int(1) == 3
    assert QPoly([0, 2, 1]).eval_int(2) == 8
    assert QPoly.zero().eval_int(5) == 0
    assert QPoly([1, -1]).eval_int(-2) == 3


def _rand_qpoly(rng):
    return QPoly([rng.randint(-9, 9) for _ in range(rng.randint(0, 6))])


def test_ring_axioms_random():
    """Commutativity, associativity and distributivity on random inputs."""
    rng = random.Random(20250819)
    for _ in range(200):
        a, b, c = _rand_qpoly(rng), _rand_qpoly(rng), _rand_qpoly(rng)
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + QPoly.zero() == a
        assert a * QPoly.one() == a


def test_eval_is_ring_homomorphism():
    rng = random.Random(77)
    for _ in range(200):
        a, b = _rand_qpoly(rng), _rand_qpoly(rng)
        v = rng.randint(-4, 4)
        assert (a + b).eval_int(v) == a.eval_int(v) + b.eval_int(v)
        assert (a * b).eval_int(v) == a.eval_int(v) * b.eval_int(v)


def test_big_coefficients_stay_exact():
    big = 10**40
    p = QPoly([big, -big])
    assert (p * p).coeffs == (big * big, -2 * big * big, big * big)
    assert QPoly.from_json(p.to_json()) == p


def test_qpoly_json_round_trip():
    for coeffs in [(), (1,), (0, 1), (1, -2, 0, 3)]:
        p = QPoly(coeffs)
        enc = p.to_json()
        assert all(isinstance(s, str) for s in enc)
        assert QPoly.from_json(enc) == p
    assert QPoly.zero().to_json() == []


def test_xqpoly_basics():
    x = XQPoly.monomial(1)
    assert x * x == XQPoly.monomial(2)
    p = XQPoly([QPoly.zero(), QPoly.one(), QPoly.monomial(1)])  # x + q x^2
    assert p.eval_x(1) == QPoly([1, 1])
    assert p.eval_x(0) == QPoly.zero()
    assert p.eval_x(2) == QPoly([2, 4])
    assert (p * QPoly.monomial(1)).coeffs[1] == QPoly.monomial(1)
    with pytest.raises(ValueError):
        p.eval_x(-1)


def test_xqpoly_mul_matches_pointwise_eval():
    rng = random.Random(99)
    for _ in range(100):
        a = XQPoly([_rand_qpoly(rng) for _ in range(rng.randint(0, 4))])
        b = XQPoly([_rand_qpoly(rng) for _ in range(rng.randint(0, 4))])
        s = rng.randint(0, 5)
        assert (a * b).eval_x(s) == a.eval_x(s) * b.eval_x(s)
        assert (a + b).eval_x(s) == a.eval_x(s) + b.eval_x(s)


def test_xqpoly_pow_and_scale():
    x = XQPoly.monomial(1)
    assert x**0 == XQPoly.one()
    assert x**3 == XQPoly.monomial(3)
    assert (x * 3).eval_x(2) == QPoly([6])
    assert (QPoly.monomial(1) * x).coeffs == (QPoly.zero(), QPoly.monomial(1))


def test_xqpoly_json_round_trip():
    p = XQPoly([QPoly([1]), QPoly.zero(), QPoly([0, 2, 1])])
    enc = p.to_json()
    assert enc == [["1"], [], ["0", "2", "1"]]
    assert XQPoly.from_json(enc) == p
    assert XQPoly.zero().to_json() == []


def test_str_forms():
    assert str(QPoly.zero()) == "0"
    assert str(QPoly([1, 2, 1])) == "1 + 2q + q^2"
    assert str(QPoly([0, -1])) == "-q"
    assert str(XQPoly([QPoly([1]), QPoly([1, 1])])) == "(1) + (1 + q)x"
