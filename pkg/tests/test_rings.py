import random

import pytest

from lowrank import (
    GF,
    QQ,
    ZZ,
    InputError,
    NotAUnit,
    RingSpec,
    UnsupportedRing,
    bezout,
    exact_div,
    square_class_equal,
    square_class_witness,
)
from fractions import Fraction


def random_element(spec, rng, span=50):
    if spec.kind == "Z":
        return spec.element(rng.randint(-span, span))
    if spec.kind == "Q":
        num = rng.randint(-span, span)
        den = rng.randint(1, span)
        return spec.element(Fraction(num, den))
    return spec.element(rng.randrange(spec.p))


def test_spec_construction_and_equality():
    assert GF(5) == GF(5)
    assert GF(5) != GF(7)
    assert ZZ != QQ
    assert ZZ.characteristic() == 0
    assert GF(7).characteristic() == 7
    assert not ZZ.is_field()
    assert QQ.is_field()
    assert GF(2).is_field()


def test_nonprime_modulus_rejected():
    with pytest.raises(InputError):
        GF(6)
    with pytest.raises(InputError):
        GF(1)
    with pytest.raises(InputError):
        RingSpec("Fp", -5)


def test_canonical_forms():
    # residues reduce into [0, p)
    a = GF(5).element(12)
    assert a.value == 2
    assert GF(5).element(-1).value == 4
    # rationals reduce with positive denominator
    q = QQ.element(Fraction(-4, -6))
    assert q.value == Fraction(2, 3)
    # re-canonicalizing is the identity
    for spec in (ZZ, QQ, GF(5)):
        rng = random.Random(11)
        for _ in range(200):
            x = random_element(spec, rng)
            assert spec.element(x.value) == x


def test_parse_and_str_round_trip():
    assert ZZ.parse("-3").value == -3
    assert QQ.parse("2/7").value == Fraction(2, 7)
    assert GF(5).parse("13").value == 3
    rng = random.Random(23)
    for spec in (ZZ, QQ, GF(13)):
        for _ in range(200):
            x = random_element(spec, rng)
            assert spec.parse(str(x)) == x


def test_parse_rejects_garbage():
    with pytest.raises(InputError):
        ZZ.parse("2/3")
    with pytest.raises(InputError):
        QQ.parse("2/0")
    with pytest.raises(InputError):
        GF(5).parse("x")
    with pytest.raises(InputError):
        ZZ.parse(3)
    # Fraction accepts decimal notation exactly; that leniency is fine
    assert QQ.parse("1.5") == QQ.parse("3/2")


def test_ring_axioms_random():
    """Associativity, commutativity, distributivity on random triples."""
    for spec in (ZZ, QQ, GF(2), GF(5)):
        rng = random.Random(5)
        for _ in range(1000):
            a = random_element(spec, rng)
            b = random_element(spec, rng)
            c = random_element(spec, rng)
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a + b == b + a
            assert a * b == b * a
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c
            assert a + spec.zero == a
            assert a * spec.one == a
            assert a - a == spec.zero


def test_int_coercion_both_sides():
    a = GF(7).element(3)
    assert 2 + a == GF(7).element(5)
    assert a - 1 == GF(7).element(2)
    assert 4 * a == GF(7).element(5)
    assert a**3 == GF(7).element(6)


def test_inverses():
    spec = GF(7)
    for u in spec.units():
        assert u * u.inverse() == spec.one
    with pytest.raises(NotAUnit):
        spec.zero.inverse()
    with pytest.raises(NotAUnit):
        ZZ.element(2).inverse()
    assert ZZ.element(-1).inverse() == ZZ.element(-1)
    rng = random.Random(7)
    for _ in range(100):
        x = random_element(QQ, rng)
        if not x.is_zero():
            assert x * x.inverse() == QQ.one
            assert (x / x) == QQ.one


def test_exact_div():
    rng = random.Random(31)
    for _ in range(300):
        a = ZZ.element(rng.randint(-90, 90))
        b = ZZ.element(rng.randint(1, 30))
        assert exact_div(a * b, b) == a
    with pytest.raises(NotAUnit):
        exact_div(ZZ.element(3), ZZ.element(2))


def test_bezout_identity():
    # frozen small case: a*t - s*b = 1 for (a, b) = (3, 5)
    s, t = bezout(ZZ.element(3), ZZ.element(5))
    assert (s.value, t.value) == (1, 2)
    rng = random.Random(41)
    import math

    found = 0
    while found < 200:
        a = rng.randint(-60, 60)
        b = rng.randint(-60, 60)
        if math.gcd(a, b) != 1:
            continue
        found += 1
        ea, eb = ZZ.element(a), ZZ.element(b)
        s, t = bezout(ea, eb)
        assert ea * t - s * eb == ZZ.one, f"identity fails for ({a}, {b})"
    # field case: everything with a unit coordinate works
    spec = GF(7)
    for a in spec.elements():
        for b in spec.elements():
            if a.is_zero() and b.is_zero():
                continue
            s, t = bezout(a, b)
            assert a * t - s * b == spec.one
    with pytest.raises(NotAUnit):
        bezout(ZZ.element(2), ZZ.element(4))


def test_square_classes_f5():
    spec = GF(5)
    squares = {(u * u).value for u in spec.units()}
    assert squares == {1, 4}
    # the three classes: {0}, {1,4}, {2,3}
    assert square_class_equal(spec.element(1), spec.element(4))
    assert square_class_equal(spec.element(2), spec.element(3))
    assert not square_class_equal(spec.element(1), spec.element(2))
    assert not square_class_equal(spec.element(0), spec.element(1))
    assert square_class_equal(spec.element(0), spec.element(0))
    # witnesses really conjugate one into the other
    u = square_class_witness(spec.element(4), spec.element(1))
    assert u is not None and u * u * spec.element(1) == spec.element(4)


def test_square_class_equivalence_relation():
    for p in (3, 5, 7, 11, 13):
        spec = GF(p)
        rng = random.Random(p)
        pool = list(spec.elements())
        for _ in range(300):
            a, b, c = (rng.choice(pool) for _ in range(3))
            assert square_class_equal(a, a)
            if square_class_equal(a, b):
                assert square_class_equal(b, a)
            if square_class_equal(a, b) and square_class_equal(b, c):
                assert square_class_equal(a, c)


def test_square_classes_q_and_z():
    assert square_class_equal(QQ.element(8), QQ.element(2))
    assert square_class_equal(QQ.element(Fraction(1, 2)), QQ.element(2))
    assert not square_class_equal(QQ.element(2), QQ.element(3))
    assert not square_class_equal(QQ.element(1), QQ.element(-1))
    u = square_class_witness(QQ.element(8), QQ.element(2))
    assert u * u * QQ.element(2) == QQ.element(8)
    # over Z the only units are +-1, so classes are equality up to nothing
    assert square_class_equal(ZZ.element(3), ZZ.element(3))
    assert not square_class_equal(ZZ.element(3), ZZ.element(-3))


def test_enumeration():
    spec = GF(5)
    assert [e.value for e in spec.elements()] == [0, 1, 2, 3, 4]
    assert [u.value for u in spec.units()] == [1, 2, 3, 4]
    with pytest.raises(UnsupportedRing):
        list(ZZ.elements())
    with pytest.raises(UnsupportedRing):
        list(QQ.units())


def test_spec_json_round_trip():
    for spec in (ZZ, QQ, GF(11)):
        assert RingSpec.from_json(spec.to_json()) == spec
    with pytest.raises(InputError):
        RingSpec.from_json({"kind": "R"})
    with pytest.raises(InputError):
        RingSpec.from_json({"kind": "Fp", "p": 9})
    with pytest.raises(InputError):
        RingSpec.from_json({"kind": "Fp"})
    with pytest.raises(InputError):
        RingSpec.from_json("Z")


def test_cross_ring_operations_rejected():
    from lowrank import SpecMismatch

    with pytest.raises(SpecMismatch):
        ZZ.element(1) + GF(5).element(1)
