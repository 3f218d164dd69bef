"""Exhaustive small-field censuses and brute-force isomorphism testing.

Everything here is an oracle-grade computation: isomorphism is decided
by searching every unital linear map between two algebras over a prime
field, censuses enumerate every coefficient tuple in lexicographic
order, and the reports record per-tuple verdicts so they can be
reproduced byte for byte.
"""

from __future__ import annotations

import itertools

from .algebra import (
    AlgebraMap,
    SquareMatrix,
    StructureConstants,
    algebra_degree,
    direct_product,
    matrix_algebra,
    matrix_to_element,
    min_poly,
    product_element,
    rank_one,
)
from .cubic import (
    CubicCase,
    CubicCoefficients,
    build_algebra,
    classify_case,
)
from .errors import GuardExceeded, SpecMismatch, UnsupportedRing, check_guard
from .involutions import (
    find_standard_involution,
    m2_adjoint,
    pair_swap,
    verify_involution,
    verify_standard,
)
from .poly import poly_gcd
from .quadratic import QuadraticAlgebra
from .rings import RingSpec, square_class_equal


# -- brute-force isomorphism --------------------------------------------------


def _int_table(alg: StructureConstants):
    return tuple(
        tuple(tuple(c.value for c in cell) for cell in row) for row in alg.table
    )


def _vec_mul(table, u, v, p):
    k = len(u)
    out = [0] * k
    for i in range(k):
        a = u[i]
        if not a:
            continue
        row = table[i]
        for j in range(k):
            b = v[j]
            if not b:
                continue
            ab = a * b
            cell = row[j]
            for l in range(k):
                if cell[l]:
                    out[l] = (out[l] + ab * cell[l]) % p
    return tuple(out)


def _phi_of(s, u, v, p):
    """Image of a source vector s = (s0, s1, s2) under 1 -> e0, e1 -> u,
    e2 -> v, working on integer coefficient tuples."""
    return (
        (s[0] + s[1] * u[0] + s[2] * v[0]) % p,
        (s[1] * u[1] + s[2] * v[1]) % p,
        (s[1] * u[2] + s[2] * v[2]) % p,
    )


def _search_rank3(ta, tb, p):
    """Find images (u, v) for the generators, or None.

    Any candidate must send e1^2 to phi(e1^2); when that structure row
    has a nonzero e2-coefficient the image v is forced linearly and the
    search is a single loop over u, otherwise u is filtered first and v
    scanned.  Only maps already failing a necessary condition are
    skipped, so the search is exhaustive.
    """
    s11, s12 = ta[1][1], ta[1][2]
    s21, s22 = ta[2][1], ta[2][2]
    vecs = list(itertools.product(range(p), repeat=3))
    gamma = s11[2] % p
    for u in vecs:
        uu = _vec_mul(tb, u, u, p)
        if gamma:
            inv = pow(gamma, -1, p)
            v = tuple(
                ((uu[idx] - (s11[0] if idx == 0 else 0) - s11[1] * u[idx]) * inv) % p
                for idx in range(3)
            )
            candidates = (v,)
        else:
            if uu != _phi_of(s11, u, (0, 0, 0), p):
                continue
            candidates = vecs
        for v in candidates:
            if _vec_mul(tb, u, v, p) != _phi_of(s12, u, v, p):
                continue
            if _vec_mul(tb, v, u, p) != _phi_of(s21, u, v, p):
                continue
            if _vec_mul(tb, v, v, p) != _phi_of(s22, u, v, p):
                continue
            if (u[1] * v[2] - u[2] * v[1]) % p == 0:
                continue
            return u, v
    return None


def _search_rank2(ta, tb, p):
    s11 = ta[1][1]
    for u in itertools.product(range(p), repeat=2):
        if u[1] % p == 0:
            continue  # the map must be invertible: det = u[1]
        uu = _vec_mul(tb, u, u, p)
        want = ((s11[0] + s11[1] * u[0]) % p, (s11[1] * u[1]) % p)
        if uu == want:
            return (u,)
    return None


def is_isomorphic_bruteforce(a: StructureConstants, b: StructureConstants):
    """Decide isomorphism over a prime field by exhaustive search.

    Scans the unital linear maps (first basis element fixed) for one
    that is multiplicative on basis pairs and invertible.  Returns
    (True, map) or (False, None).  Rank at most 3; the map space has
    p^(k(k-1)) candidates and is guarded.
    """
    if a.spec != b.spec:
        raise SpecMismatch("algebras over different rings")
    if a.spec.kind != "Fp":
        raise UnsupportedRing("brute-force search needs a prime field")
    if a.rank != b.rank:
        return False, None
    k = a.rank
    if k > 3:
        raise UnsupportedRing("brute-force search implemented for rank <= 3")
    p = a.spec.p
    check_guard(p ** (k * (k - 1)), 15625, "isomorphism search")
    if k == 1:
        return True, AlgebraMap(a, b, [b.one()])
    ta, tb = _int_table(a), _int_table(b)
    found = _search_rank3(ta, tb, p) if k == 3 else _search_rank2(ta, tb, p)
    if found is None:
        return False, None
    images = [b.one()] + [b.element(list(col)) for col in found]
    phi = AlgebraMap(a, b, images)
    assert phi.verify_isomorphism(), "search returned a bad witness"
    return True, phi


def _partition_by_isomorphism(algebras):
    """Greedy partition: each item joins the first class whose
    representative it is isomorphic to.  Returns a list of index lists."""
    classes = []
    for idx, alg in enumerate(algebras):
        for cls in classes:
            if is_isomorphic_bruteforce(alg, algebras[cls[0]])[0]:
                cls.append(idx)
                break
        else:
            classes.append([idx])
    return classes


# -- cubic census -------------------------------------------------------------


def _relations_hold_int(b, c, m, n, y, z, p):
    return (
        (c * m) % p == 0
        and (c * n) % p == 0
        and (n * y) % p == 0
        and (m * y) % p == 0
        and (b * m - m * n) % p == 0
        and (m * n - n * z) % p == 0
        and (n * n - b * n) % p == 0
        and (m * m - m * z) % p == 0
    )


def enumerate_cubic(spec: RingSpec):
    """All valid six-tuples over a prime field, lexicographically.

    Scans every one of the p^6 candidate tuples (guarded at 10^7) and
    keeps the ones satisfying the coefficient relations; each survivor
    is re-validated on construction.
    """
    if spec.kind != "Fp":
        raise UnsupportedRing("the census runs over prime fields")
    p = spec.p
    check_guard(p**6, 10**7, "cubic census")
    out = []
    for tup in itertools.product(range(p), repeat=6):
        if _relations_hold_int(*tup, p):
            out.append(CubicCoefficients(spec, *tup))
    return out


class CensusReport:
    """Per-tuple verdicts for the structure theorem over one field."""

    def __init__(self, spec, total, rows, intersection, representatives):
        self.spec = spec
        self.total = total
        self.rows = rows  # (coeffs, case, has_involution)
        self.intersection = intersection
        self.representatives = representatives

    @property
    def valid(self):
        return len(self.rows)

    def case_counts(self):
        counts = {case.value: 0 for case in CubicCase}
        for _, case, _ in self.rows:
            counts[case.value] += 1
        return counts

    def theorem_holds(self):
        every = all(
            case is not CubicCase.EXCEPTIONAL or has_inv
            for _, case, has_inv in self.rows
        )
        zero = self.spec.zero
        nil = [zero] * 6
        meet_ok = len(self.intersection) == 1 and list(
            self.intersection[0].as_tuple()
        ) == nil
        return every and meet_ok

    def to_json(self):
        return {
            "ring": self.spec.to_json(),
            "total": self.total,
            "valid": self.valid,
            "cases": self.case_counts(),
            "theorem_holds": self.theorem_holds(),
            "intersection": [
                [str(v) for v in c.as_tuple()] for c in self.intersection
            ],
            "class_representatives": (
                None
                if self.representatives is None
                else [
                    [str(v) for v in rep.as_tuple()]
                    for rep in self.representatives
                ]
            ),
            "rows": [
                {
                    "tuple": [str(v) for v in coeffs.as_tuple()],
                    "case": case.value,
                    "standard_involution": has_inv,
                }
                for coeffs, case, has_inv in self.rows
            ],
        }

    def to_table(self):
        lines = ["tuple (b,c,m,n,y,z)  case         involution"]
        for coeffs, case, has_inv in self.rows:
            tup = ",".join(str(v) for v in coeffs.as_tuple())
            lines.append(
                f"({tup})  {case.value:<12} {'yes' if has_inv else 'no'}"
            )
        counts = self.case_counts()
        lines.append(
            f"total={self.total} valid={self.valid} "
            + " ".join(f"{k}={v}" for k, v in sorted(counts.items()))
            + f" theorem={'holds' if self.theorem_holds() else 'FAILS'}"
        )
        return "\n".join(lines)


def verify_main_theorem(spec: RingSpec) -> CensusReport:
    """Exhaustively confirm the structure split over one prime field.

    Every valid tuple is either commutative or carries a standard
    involution, and exactly the all-zero tuple is both commutative and
    involution-bearing.  The report records each tuple's verdict.
    """
    tuples = enumerate_cubic(spec)
    rows = []
    meet = []
    for coeffs in tuples:
        case = classify_case(coeffs)
        inv = find_standard_involution(build_algebra(coeffs))
        has_inv = inv is not None
        rows.append((coeffs, case, has_inv))
        if case is not CubicCase.EXCEPTIONAL and has_inv:
            meet.append(coeffs)
    try:
        reps = [cls[0] for cls in exceptional_classes(spec)]
    except GuardExceeded:
        reps = None
    return CensusReport(spec, spec.p**6, rows, meet, reps)


def exceptional_classes(spec: RingSpec):
    """Partition the non-commutative tables (plus the zero table) into
    isomorphism classes by brute force.  Returns a list of classes,
    each a list of CubicCoefficients with the representative first."""
    family = [
        coeffs
        for coeffs in enumerate_cubic(spec)
        if classify_case(coeffs) is not CubicCase.COMMUTATIVE
    ]
    algebras = [build_algebra(c) for c in family]
    classes = _partition_by_isomorphism(algebras)
    return [[family[i] for i in cls] for cls in classes]


# -- quadratic census ---------------------------------------------------------


class QuadraticCensusReport:
    def __init__(self, spec, classes, disc_classes, square_class_count):
        self.spec = spec
        self.classes = classes  # lists of (t, n) QuadraticAlgebra
        self.disc_classes = disc_classes
        self.square_class_count = square_class_count

    def partitions_agree(self):
        as_sets = lambda part: {
            frozenset((str(q.t), str(q.n)) for q in cls) for cls in part
        }
        return as_sets(self.classes) == as_sets(self.disc_classes)

    def to_json(self):
        return {
            "ring": self.spec.to_json(),
            "class_count": len(self.classes),
            "square_class_count": self.square_class_count,
            "partitions_agree": self.partitions_agree(),
            "classes": [
                [[str(q.t), str(q.n)] for q in cls] for cls in self.classes
            ],
        }

    def to_table(self):
        lines = ["class  representatives (t,n)"]
        for k, cls in enumerate(self.classes):
            members = " ".join(f"({q.t},{q.n})" for q in cls)
            lines.append(f"{k}      {members}")
        lines.append(
            f"classes={len(self.classes)} "
            f"square_classes={self.square_class_count} "
            f"agree={self.partitions_agree()}"
        )
        return "\n".join(lines)


def quadratic_census(spec: RingSpec) -> QuadraticCensusReport:
    """Classify all p^2 quadratic algebras over an odd prime field.

    The brute-force partition is compared against the discriminant
    partition, and the class count against the number of square
    classes, each computed independently.
    """
    if spec.kind != "Fp" or spec.p == 2:
        raise UnsupportedRing("the quadratic census runs over odd prime fields")
    if spec.p > 13:
        raise UnsupportedRing("the quadratic census is desk-scale: p <= 13")
    algebras = [
        QuadraticAlgebra(spec, t, n)
        for t in spec.elements()
        for n in spec.elements()
    ]
    structures = [q.structure() for q in algebras]
    classes = [
        [algebras[i] for i in cls] for cls in _partition_by_isomorphism(structures)
    ]
    disc_classes = []
    for q in algebras:
        d = q.t * q.t - 4 * q.n
        for cls in disc_classes:
            rep = cls[0]
            if square_class_equal(d, rep.t * rep.t - 4 * rep.n):
                cls.append(q)
                break
        else:
            disc_classes.append([q])
    square_classes = {
        frozenset((d * u * u).value for u in spec.units())
        for d in spec.elements()
    }
    return QuadraticCensusReport(
        spec, classes, disc_classes, len(square_classes)
    )


# -- degree probes ------------------------------------------------------------


class DegreeProductReport:
    def __init__(self, spec, deg_a, deg_b, deg_product, witness, exhausted):
        self.spec = spec
        self.deg_a = deg_a
        self.deg_b = deg_b
        self.deg_product = deg_product
        self.witness = witness  # (x coeffs, y coeffs) or None
        self.exhausted = exhausted

    @property
    def additive(self):
        return self.deg_product == self.deg_a + self.deg_b

    def to_json(self):
        return {
            "ring": self.spec.to_json(),
            "degree_left": self.deg_a,
            "degree_right": self.deg_b,
            "degree_product": self.deg_product,
            "additive": self.additive,
            "witness": (
                None
                if self.witness is None
                else [
                    [str(c) for c in self.witness[0].coeffs],
                    [str(c) for c in self.witness[1].coeffs],
                ]
            ),
            "no_witness_certified": self.exhausted,
        }


def degree_product_check(a: StructureConstants, b: StructureConstants) -> DegreeProductReport:
    """Compare deg(A x B) with deg(A) + deg(B) over a prime field.

    Additivity holds exactly when some pair of maximal-degree elements
    has coprime minimal polynomials; the check finds such a pair or
    certifies by exhaustion that none exists.
    """
    if a.spec != b.spec:
        raise SpecMismatch("factors over different rings")
    deg_a = algebra_degree(a)
    deg_b = algebra_degree(b)
    prod = direct_product(a, b)
    deg_prod = algebra_degree(prod)
    witness = None
    for x in a.elements():
        px = min_poly(x)
        if px.degree() != deg_a:
            continue
        for y in b.elements():
            py = min_poly(y)
            if py.degree() != deg_b:
                continue
            if poly_gcd(px, py).degree() == 0:
                pair = product_element(prod, a, b, x, y)
                assert min_poly(pair).degree() == deg_a + deg_b, (
                    "coprime witness does not reach the degree sum"
                )
                witness = (x, y)
                break
        if witness:
            break
    if deg_prod == deg_a + deg_b:
        assert witness is not None, "additive degree without a coprime pair"
    else:
        assert witness is None, "coprime pair despite non-additive degree"
    return DegreeProductReport(
        a.spec, deg_a, deg_b, deg_prod, witness, witness is None
    )


class ProbeReport:
    def __init__(self, spec, n, checks):
        self.spec = spec
        self.n = n
        self.checks = checks  # (name, passed, detail)

    def all_passed(self):
        return all(ok for _, ok, _ in self.checks)

    def to_json(self):
        return {
            "ring": self.spec.to_json(),
            "n": self.n,
            "all_passed": self.all_passed(),
            "checks": [
                {"name": name, "passed": ok, "detail": detail}
                for name, ok, detail in self.checks
            ],
        }


def mn_degree_probes(spec: RingSpec, n: int) -> ProbeReport:
    """Instance checks tying matrix algebras to the degree bound.

    For n = 2 the adjugate involution is standard and the brute-force
    search finds one on small fields; for n = 3 a diagonal element with
    three distinct eigenvalues has minimal degree 3, which rules out a
    standard involution.  Over F_2, where -1 = 1 starves the diagonal
    of distinct entries, a companion matrix with irreducible cubic
    minimal polynomial serves as the witness instead.  The split
    algebra F x F is probed alongside.
    """
    if spec.kind != "Fp":
        raise UnsupportedRing("probes run over prime fields")
    if n not in (2, 3):
        raise UnsupportedRing("probes implemented for n = 2 and n = 3")
    checks = []
    if n == 2:
        adj = m2_adjoint(spec)
        ok = verify_involution(adj)[0] and verify_standard(adj)[0]
        checks.append(("adjugate_standard", ok, "x * adj(x) = det(x)"))
        deg = algebra_degree(adj.algebra)
        checks.append(("matrix_degree_2", deg == 2, f"degree {deg}"))
        if spec.p <= 3:
            found = find_standard_involution(adj.algebra)
            checks.append(
                (
                    "bruteforce_search_finds",
                    found is not None,
                    "trace-tuple scan over the rank-4 matrix algebra",
                )
            )
    else:
        alg = matrix_algebra(spec, 3)
        if spec.p == 2:
            # -1 = 1, so diag(0,-1,1) has only two distinct eigenvalues;
            # the companion matrix of the irreducible T^3 + T + 1 keeps
            # the degree-3 witness available
            mat = SquareMatrix(spec, [[0, 0, 1], [1, 0, 1], [0, 1, 0]])
            name = "companion_degree_3"
            source = "the companion matrix of T^3 + T + 1"
        else:
            mat = SquareMatrix(spec, [[0, 0, 0], [0, -1, 0], [0, 0, 1]])
            name = "distinct_diagonal_degree_3"
            source = "diag(0,-1,1)"
        x = matrix_to_element(alg, mat)
        deg = min_poly(x).degree()
        checks.append(
            (
                name,
                deg == 3,
                f"min poly degree {deg} for {source}; degree > 2 "
                "is incompatible with a standard involution",
            )
        )
        if spec.p == 2:
            deg_all = algebra_degree(alg)
            checks.append(
                ("exhaustive_degree_3", deg_all == 3, f"degree {deg_all}")
            )
    swap = pair_swap(spec)
    ok = verify_involution(swap)[0] and verify_standard(swap)[0]
    checks.append(("pair_swap_standard", ok, "coordinate swap on F x F"))
    pair_alg = direct_product(rank_one(spec), rank_one(spec))
    deg = algebra_degree(pair_alg)
    checks.append(("pair_degree_2", deg == 2, f"degree {deg}"))
    return ProbeReport(spec, n, checks)
