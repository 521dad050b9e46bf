import math
import random
from fractions import Fraction

import pytest

from pbrlab.scalar import INV_SQRT2, RootTwo, Scalar, SQRT2


def test_field_ops_exact():
    x = RootTwo(1, 1)           # 1 + sqrt2
    y = RootTwo(Fraction(3, 2), Fraction(-1, 4))
    assert x + y == RootTwo(Fraction(5, 2), Fraction(3, 4))
    assert x * y == RootTwo(Fraction(3, 2) - Fraction(1, 2),
                            Fraction(3, 2) - Fraction(1, 4))
    assert SQRT2 * SQRT2 == 2
    assert INV_SQRT2 * SQRT2 == 1


def test_inverse():
    x = RootTwo(1, 1)
    assert x * x.inverse() == 1
    assert (1 / x) * x == 1
    with pytest.raises(ZeroDivisionError):
        RootTwo(0, 0).inverse()


def test_inverse_random_elements():
    rng = random.Random(3)
    for _ in range(50):
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        x = RootTwo(a, b)
        if x:
            assert x * x.inverse() == 1


def test_rationality():
    assert RootTwo(Fraction(3, 4)).is_rational
    assert RootTwo(Fraction(3, 4)).as_fraction() == Fraction(3, 4)
    assert not SQRT2.is_rational
    with pytest.raises(ValueError):
        SQRT2.as_fraction()


def test_float_rejected():
    with pytest.raises(TypeError):
        RootTwo(0.5, 0)


def test_float_roundtrip_small_denominators():
    # denominators below 2**40: float conversion agrees to 1e-12
    rng = random.Random(11)
    for _ in range(200):
        den = rng.randint(1, 2 ** 40 - 1)
        a = Fraction(rng.randint(-den, den), den)
        b = Fraction(rng.randint(-den, den), den)
        x = RootTwo(a, b)
        reference = float(a) + float(b) * math.sqrt(2.0)
        assert math.isclose(float(x), reference, rel_tol=1e-12, abs_tol=1e-12)


def test_complex_layer():
    z = Scalar(RootTwo(1, 0), RootTwo(0, 1))       # 1 + i sqrt2
    w = Scalar(RootTwo(0, 1), RootTwo(-1, 0))      # sqrt2 - i
    # (1 + i sqrt2)(sqrt2 - i) = 2 sqrt2 + i
    assert z * w == Scalar(RootTwo(0, 2), RootTwo(1, 0))
    assert z.conjugate() == Scalar(RootTwo(1, 0), RootTwo(0, -1))
    assert z.abs_sq() == RootTwo(3, 0)
    assert z * z.inverse() == 1
    with pytest.raises(ZeroDivisionError):
        Scalar(0, 0).inverse()


def test_complex_conversion():
    z = Scalar(INV_SQRT2, INV_SQRT2)
    c = complex(z)
    assert abs(c - complex(1 / math.sqrt(2), 1 / math.sqrt(2))) < 1e-12


def test_json_roundtrip():
    z = Scalar(RootTwo(Fraction(1, 3), Fraction(-2, 7)),
               RootTwo(Fraction(0), Fraction(5, 11)))
    assert Scalar.from_json(z.to_json()) == z
    r = RootTwo(Fraction(-4, 9), Fraction(1, 2))
    assert RootTwo.from_json(r.to_json()) == r
