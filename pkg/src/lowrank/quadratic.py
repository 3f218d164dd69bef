"""Rank-2 algebras R[x]/(x^2 - t x + n) and their classification data.

Over a ring where 2 is a unit everything reduces to the discriminant
t^2 - 4n up to unit squares; over the integers the discriminant and the
parity of t decide; over a field of characteristic 2 the separable
algebras are classified by an additive class of n/t^2 instead.  Each
decision procedure returns an explicit verified map when it answers
yes, never just a boolean.
"""

from __future__ import annotations

from .algebra import AlgebraMap, StructureConstants, direct_product, product_element, rank_one
from .errors import InputError, NotAUnit, SpecMismatch, UnsupportedRing, WrongCase
from .involutions import Involution
from .rings import (
    RingElement,
    RingSpec,
    bezout,
    square_class_equal,
    square_class_witness,
)


class QuadraticAlgebra:
    """The free rank-2 algebra with one generator x, x^2 = t x - n."""

    __slots__ = ("spec", "t", "n", "_structure")

    def __init__(self, spec: RingSpec, t, n):
        self.spec = spec
        self.t = t if isinstance(t, RingElement) else spec.element(t)
        self.n = n if isinstance(n, RingElement) else spec.element(n)
        if self.t.spec != spec or self.n.spec != spec:
            raise SpecMismatch("parameters over the wrong ring")
        self._structure = None

    def structure(self) -> StructureConstants:
        if self._structure is None:
            z, o = self.spec.zero, self.spec.one
            self._structure = StructureConstants(
                self.spec,
                [[[o, z], [z, o]], [[z, o], [-self.n, self.t]]],
            )
        return self._structure

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticAlgebra)
            and self.spec == other.spec
            and self.t == other.t
            and self.n == other.n
        )

    def __hash__(self):
        return hash((self.spec, self.t, self.n))

    def __repr__(self):
        return f"QuadraticAlgebra(t={self.t}, n={self.n} over {self.spec!r})"

    def discriminant(self) -> DiscriminantClass:
        return DiscriminantClass(self.spec, self.t * self.t - 4 * self.n)

    def to_json(self) -> dict:
        return {"ring": self.spec.to_json(), "t": str(self.t), "n": str(self.n)}

    @staticmethod
    def from_json(obj) -> QuadraticAlgebra:
        if not isinstance(obj, dict) or {"ring", "t", "n"} - set(obj):
            raise InputError("quadratic algebra needs keys 'ring', 't', 'n'")
        spec = RingSpec.from_json(obj["ring"])
        return QuadraticAlgebra(spec, spec.parse(obj["t"]), spec.parse(obj["n"]))


class DiscriminantClass:
    """A ring element compared up to multiplication by unit squares."""

    __slots__ = ("spec", "representative")

    def __init__(self, spec: RingSpec, representative):
        self.spec = spec
        rep = representative
        self.representative = (
            rep if isinstance(rep, RingElement) else spec.element(rep)
        )

    def __eq__(self, other):
        if not isinstance(other, DiscriminantClass):
            return NotImplemented
        if other.spec != self.spec:
            raise SpecMismatch("classes over different rings")
        return square_class_equal(self.representative, other.representative)

    def __repr__(self):
        return f"DiscriminantClass({self.representative} over {self.spec!r})"


def complete_square(alg: QuadraticAlgebra):
    """Shift the generator to kill the linear term; needs 2 invertible.

    Returns (d, map) where d = t^2 - 4n and the map is a verified
    isomorphism onto R[y]/(y^2 - d) sending x to y/2 + t/2.
    """
    spec = alg.spec
    two = spec.element(2)
    if not two.is_unit():
        raise NotAUnit("completing the square needs 2 to be a unit")
    d = alg.t * alg.t - 4 * alg.n
    target = QuadraticAlgebra(spec, spec.zero, -d)
    half = two.inverse()
    m = AlgebraMap(
        alg.structure(),
        target.structure(),
        [target.structure().one(), target.structure().element([alg.t * half, half])],
    )
    assert m.verify_isomorphism(), "square-completion map failed verification"
    return d, m


def _affine_map(a: QuadraticAlgebra, b: QuadraticAlgebra, scale, shift) -> AlgebraMap:
    """The map x -> scale*y + shift as an AlgebraMap between structures."""
    return AlgebraMap(
        a.structure(),
        b.structure(),
        [b.structure().one(), b.structure().element([shift, scale])],
    )


def is_isomorphic_2unit(a: QuadraticAlgebra, b: QuadraticAlgebra):
    """Isomorphism test over a field in which 2 is a unit.

    The discriminants decide: the algebras are isomorphic exactly when
    the discriminants differ by a unit square, and a witness square
    root scales the completed-square generator.  Returns (bool, map).
    """
    if a.spec != b.spec:
        raise SpecMismatch("algebras over different rings")
    spec = a.spec
    if not spec.element(2).is_unit():
        raise NotAUnit("this test needs 2 to be a unit")
    if not spec.is_field():
        raise UnsupportedRing("this test runs over fields")
    da = a.t * a.t - 4 * a.n
    db = b.t * b.t - 4 * b.n
    u = square_class_witness(da, db)
    if u is None:
        return False, None
    half = spec.element(2).inverse()
    shift = (a.t - u * b.t) * half
    m = _affine_map(a, b, u, shift)
    assert m.verify_isomorphism(), "discriminant witness map failed verification"
    return True, m


def is_isomorphic_over_z(a: QuadraticAlgebra, b: QuadraticAlgebra):
    """Isomorphism test over the integers.

    Equal discriminants and matching parity of the trace coefficient
    are necessary and sufficient; the witness shifts the generator by
    half the trace difference, an exact integer.  Returns (bool, map).
    """
    if a.spec != b.spec:
        raise SpecMismatch("algebras over different rings")
    if a.spec.kind != "Z":
        raise UnsupportedRing("this test runs over the integers")
    da = a.t * a.t - 4 * a.n
    db = b.t * b.t - 4 * b.n
    if da != db or (a.t.value - b.t.value) % 2 != 0:
        return False, None
    shift = a.spec.element((a.t.value - b.t.value) // 2)
    m = _affine_map(a, b, a.spec.one, shift)
    assert m.verify_isomorphism(), "integer witness map failed verification"
    return True, m


def is_separable(alg: QuadraticAlgebra) -> bool:
    """Over a field of characteristic 2: separable means t is nonzero."""
    if alg.spec.characteristic() != 2:
        raise UnsupportedRing("separability test is for characteristic 2")
    return not alg.t.is_zero()


class ArtinSchreierClass:
    """n/t^2 compared modulo the additive image {r + r^2 : r in F}."""

    __slots__ = ("spec", "representative")

    def __init__(self, spec: RingSpec, representative):
        if spec.characteristic() != 2:
            raise UnsupportedRing("these classes live in characteristic 2")
        rep = representative
        self.spec = spec
        self.representative = (
            rep if isinstance(rep, RingElement) else spec.element(rep)
        )

    def __eq__(self, other):
        if not isinstance(other, ArtinSchreierClass):
            return NotImplemented
        if other.spec != self.spec:
            raise SpecMismatch("classes over different rings")
        diff = self.representative - other.representative
        return diff in _artin_schreier_image(self.spec)

    def __repr__(self):
        return f"ArtinSchreierClass({self.representative} over {self.spec!r})"


def _artin_schreier_image(spec: RingSpec):
    return {r + r * r for r in spec.elements()}


def artin_schreier_class(alg: QuadraticAlgebra) -> ArtinSchreierClass:
    """The invariant n/t^2 of a separable algebra in characteristic 2."""
    if not is_separable(alg):
        raise WrongCase("inseparable algebra has no such invariant")
    rep = alg.n * (alg.t * alg.t).inverse()
    return ArtinSchreierClass(alg.spec, rep)


def _gf4_mul(a: int, b: int) -> int:
    """Multiplication in the four-element field, bits = (1, w), w^2 = w + 1."""
    a0, a1 = a & 1, a >> 1
    b0, b1 = b & 1, b >> 1
    c0 = (a0 * b0 + a1 * b1) & 1
    c1 = (a0 * b1 + a1 * b0 + a1 * b1) & 1
    return c0 | (c1 << 1)


def artin_schreier_class_count(q: int) -> int:
    """Number of additive classes modulo {r + r^2} in the field with q
    elements, for q in {2, 4}, by direct coset enumeration."""
    if q == 2:
        elements = [0, 1]
        mul = lambda a, b: a & b
    elif q == 4:
        elements = [0, 1, 2, 3]
        mul = _gf4_mul
    else:
        raise UnsupportedRing("counts implemented for the fields of size 2 and 4")
    image = {r ^ mul(r, r) for r in elements}
    cosets = {frozenset(v ^ w for w in image) for v in elements}
    return len(cosets)


def standard_involution_quadratic(alg: QuadraticAlgebra) -> Involution:
    """Conjugation x -> t - x, the unique standard involution in rank 2."""
    s = alg.structure()
    return Involution(s, [s.one(), s.element([alg.t, -alg.spec.one])])


def split_idempotent(alg: QuadraticAlgebra):
    """Identify R[x]/(x^2 - x) with R x R via a*x + b -> (a + b, b).

    Only defined for (t, n) = (1, 0), where x is idempotent.  Returns
    the forward and inverse maps, both verified multiplicative and
    mutually inverse on the basis.
    """
    spec = alg.spec
    if alg.t != spec.one or not alg.n.is_zero():
        raise WrongCase("the idempotent identification needs (t, n) = (1, 0)")
    line = rank_one(spec)
    prod = direct_product(line, line)
    fwd = AlgebraMap(
        alg.structure(),
        prod,
        [prod.one(), product_element(prod, line, line, (spec.one,), (spec.zero,))],
    )
    src = alg.structure()
    x = src.basis(1)
    one = src.one()
    back = AlgebraMap(prod, src, [one, one - x])
    assert fwd.verify_isomorphism(), "idempotent splitting failed verification"
    assert back.verify_isomorphism(), "inverse splitting failed verification"
    for i in range(2):
        e = src.basis(i)
        assert back.apply(fwd.apply(e)) == e, "maps are not mutually inverse"
        g = prod.basis(i)
        assert fwd.apply(back.apply(g)) == g, "maps are not mutually inverse"
    return fwd, back


def complete_basis_to_unity(spec: RingSpec, a, b):
    """Extend the row (a, b) to a 2x2 matrix of determinant 1.

    The second row (s, t) comes from a*t - s*b = 1; raises NotAUnit when
    the gcd obstruction is nontrivial.
    """
    from .algebra import SquareMatrix

    a = a if isinstance(a, RingElement) else spec.element(a)
    b = b if isinstance(b, RingElement) else spec.element(b)
    s, t = bezout(a, b)
    m = SquareMatrix(spec, [[a, b], [s, t]])
    assert m.det() == spec.one
    return m


def quadratic_from_tuple(spec: RingSpec, t, n) -> QuadraticAlgebra:
    return QuadraticAlgebra(spec, t, n)
