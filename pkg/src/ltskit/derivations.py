"""Derivation-type operator spaces of a Lie triple system.

Each space is the solution set of a linear identity on End(T), assembled as
an exact homogeneous system over the n^2 entries of the unknown map (or the
k*n^2 entries of a tuple of maps, for the spaces defined by the existence
of witness maps).  Maps are flattened row-major: entry ``D[a][m]`` (the
e_a-coordinate of ``D(e_m)``) sits at index ``a*n + m``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    commutator,
    image,
    jordan,
    kernel,
    mat_vec,
    minimal_polynomial,
    nullspace_rows,
    solve,
    split_linear_roots,
    x2_divides,
)
from .lts import LieTripleSystem, center, derived_subsystem, is_ideal

OUT = 3  # "slot" meaning: the map is applied to the bracket value

# tag -> (number of map blocks, equations); an equation is a list of
# (block, slot, sign) terms whose signed sum must vanish on every basis triple
IDENTITIES: dict[str, tuple[int, list[list[tuple[int, int, int]]]]] = {
    "der": (1, [[(0, 0, 1), (0, 1, 1), (0, 2, 1), (0, OUT, -1)]]),
    "qder": (2, [[(0, 0, 1), (0, 1, 1), (0, 2, 1), (1, OUT, -1)]]),
    "gder": (4, [[(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, OUT, -1)]]),
    "c": (1, [[(0, 0, 1), (0, 1, -1)], [(0, 1, 1), (0, 2, -1)], [(0, 2, 1), (0, OUT, -1)]]),
    "qc": (1, [[(0, 0, 1), (0, 1, -1)], [(0, 1, 1), (0, 2, -1)]]),
    "zder": (1, [[(0, 0, 1)], [(0, OUT, 1)]]),
}

SPACE_TAGS = ("der", "qder", "gder", "c", "qc", "zder")


class MembershipError(ValueError):
    """A map was required to lie in an operator space and does not."""


@dataclass(frozen=True)
class OperatorSpace:
    """A subspace of End(T), stored as a subspace of F^(n^2)."""

    tag: str
    n: int
    space: Subspace

    @property
    def field(self):
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def maps(self) -> list[Matrix]:
        return [Matrix.from_flat(self.field, b, self.n) for b in self.space.basis]

    def contains(self, D: Matrix) -> bool:
        if D.shape != (self.n, self.n):
            raise DimensionError(f"{D.shape} map is not an endomorphism of F^{self.n}")
        return self.space.contains(D.flat())

    __contains__ = contains

    def is_zero(self) -> bool:
        return self.space.is_zero()

    def __le__(self, other: OperatorSpace) -> bool:
        return self.space <= other.space

    def __eq__(self, other):
        if not isinstance(other, OperatorSpace):
            return NotImplemented
        return self.space == other.space

    def __hash__(self):
        return hash(self.space)

    def __add__(self, other: OperatorSpace) -> OperatorSpace:
        return OperatorSpace(f"{self.tag}+{other.tag}", self.n, self.space + other.space)

    def __and__(self, other: OperatorSpace) -> OperatorSpace:
        return OperatorSpace(f"{self.tag}&{other.tag}", self.n, self.space & other.space)


@dataclass(frozen=True)
class JointSpace:
    """Solutions (D, D', ...) of a witness identity; ``projection`` is the D block."""

    tag: str
    n: int
    blocks: int
    joint: Subspace
    projection: OperatorSpace

    @property
    def dim(self) -> int:
        return self.projection.dim

    def split(self, v: Sequence) -> tuple[Matrix, ...]:
        m = self.n * self.n
        return tuple(Matrix.from_flat(self.joint.field, v[b * m:(b + 1) * m], self.n)
                     for b in range(self.blocks))

    def tuples(self) -> list[tuple[Matrix, ...]]:
        """The joint basis as tuples of maps."""
        return [self.split(v) for v in self.joint.basis]

    def witness(self, D: Matrix) -> tuple[Matrix, ...] | None:
        """Some witness tuple for ``D``, or None if D is not in the projection."""
        m = self.n * self.n
        target = D.flat()
        vecs = self.joint.basis
        if not vecs:
            return None if any(target) else self.split((self.joint.field.zero,) * (m * self.blocks))
        # solve sum_r a_r * vecs[r][:m] = target
        A = Matrix.from_columns(self.joint.field, [v[:m] for v in vecs])
        coeffs = solve(A, target)
        if coeffs is None:
            return None
        full = [self.joint.field.zero] * (m * self.blocks)
        for a, v in zip(coeffs, vecs):
            if a:
                for i, x in enumerate(v):
                    if x:
                        full[i] = full[i] + a * x
        return self.split(full)

    def contains(self, maps: Sequence[Matrix]) -> bool:
        return self.joint.contains(tuple(x for M in maps for x in M.flat()))


# ---------------------------------------------------------------------------
# Constraint assembly


def _constraint_rows(T: LieTripleSystem, equations) -> Iterable[dict]:
    n = T.dim
    nn = n * n
    c = T._c
    for eq in equations:
        for i, j, k in product(range(n), repeat=3):
            rows = [dict() for _ in range(n)]
            for block, slot, sign in eq:
                off = block * nn
                if slot == OUT:
                    for m, x in enumerate(c[i][j][k]):
                        if x:
                            for l in range(n):
                                col = off + l * n + m
                                rows[l][col] = rows[l].get(col, 0) + sign * x
                    continue
                arg = (i, j, k)[slot]
                for a in range(n):
                    w = c[a][j][k] if slot == 0 else c[i][a][k] if slot == 1 else c[i][j][a]
                    col = off + a * n + arg
                    for l, x in enumerate(w):
                        if x:
                            rows[l][col] = rows[l].get(col, 0) + sign * x
            for r in rows:
                if r:
                    yield r


def solution_space(T: LieTripleSystem, tag: str) -> Subspace:
    """Joint solution space of the identity named ``tag`` in F^(k*n^2)."""
    blocks, equations = IDENTITIES[tag]
    return nullspace_rows(T.field, _constraint_rows(T, equations), blocks * T.dim * T.dim)


def identity_residuals(T: LieTripleSystem, tag: str, maps: Sequence[Matrix]) -> list:
    """Evaluate the defining identity directly through the bracket.

    Returns ``(equation, (i, j, k), residual)`` for every basis triple where
    the identity fails.  Independent of the constraint-row assembly.
    """
    blocks, equations = IDENTITIES[tag]
    if len(maps) != blocks:
        raise ValueError(f"{tag} takes {blocks} maps, got {len(maps)}")
    n = T.dim
    zero = T.field.zero
    e = [T.basis_vector(i) for i in range(n)]
    cols = [[D.column(i) for i in range(n)] for D in maps]
    bad = []
    for q, eq in enumerate(equations):
        for i, j, k in product(range(n), repeat=3):
            total = [zero] * n
            args = (i, j, k)
            for block, slot, sign in eq:
                if slot == OUT:
                    inner = T.c(i, j, k)
                    if not any(inner):
                        continue
                    term = mat_vec(maps[block], inner)
                else:
                    a = [e[t] for t in args]
                    a[slot] = cols[block][args[slot]]
                    term = T.bracket(*a)
                if any(term):
                    total = [t + sign * x for t, x in zip(total, term)]
            if any(total):
                bad.append((q, (i, j, k), tuple(total)))
    return bad


def satisfies(T: LieTripleSystem, tag: str, maps: Sequence[Matrix]) -> bool:
    return not identity_residuals(T, tag, maps)


@lru_cache(maxsize=256)
def _single(T: LieTripleSystem, tag: str) -> OperatorSpace:
    return OperatorSpace(tag, T.dim, solution_space(T, tag))


@lru_cache(maxsize=256)
def _joint(T: LieTripleSystem, tag: str) -> JointSpace:
    blocks = IDENTITIES[tag][0]
    joint = solution_space(T, tag)
    proj = OperatorSpace(tag, T.dim, joint.project_block(0, T.dim * T.dim))
    return JointSpace(tag, T.dim, blocks, joint, proj)


def compute_der(T: LieTripleSystem) -> OperatorSpace:
    return _single(T, "der")


def compute_qder(T: LieTripleSystem) -> JointSpace:
    return _joint(T, "qder")


def compute_gder(T: LieTripleSystem) -> JointSpace:
    return _joint(T, "gder")


def compute_centroid(T: LieTripleSystem) -> OperatorSpace:
    return _single(T, "c")


def compute_qcentroid(T: LieTripleSystem) -> OperatorSpace:
    return _single(T, "qc")


def compute_zder(T: LieTripleSystem) -> OperatorSpace:
    return _single(T, "zder")


def compute_space(T: LieTripleSystem, tag: str) -> OperatorSpace:
    """Any of the six spaces as an :class:`OperatorSpace` (projections for qder/gder)."""
    if tag in ("qder", "gder"):
        return _joint(T, tag).projection
    if tag not in IDENTITIES:
        raise KeyError(f"unknown space {tag!r}")
    return _single(T, tag)


def end_space(T: LieTripleSystem) -> OperatorSpace:
    return OperatorSpace("end", T.dim, Subspace.full(T.field, T.dim * T.dim))


def span_maps(T_or_n, field, maps: Iterable[Matrix], tag: str = "span") -> OperatorSpace:
    n = T_or_n.dim if isinstance(T_or_n, LieTripleSystem) else T_or_n
    return OperatorSpace(tag, n, Subspace.span(field, n * n, (M.flat() for M in maps)))


def hom_into_center(T: LieTripleSystem) -> OperatorSpace:
    """{D : Im(D) is contained in Z(T)}."""
    n = T.dim
    Z = center(T)
    z = T.field.zero
    vecs = []
    for zb in Z.basis:
        for m in range(n):
            # the map e_m -> zb, other basis vectors -> 0
            vecs.append(tuple(zb[a] if col == m else z for a in range(n) for col in range(n)))
    return OperatorSpace("hom_into_center", n, Subspace.span(T.field, n * n, vecs))


# ---------------------------------------------------------------------------
# Products of operator spaces


def _product_span(S1: OperatorSpace, S2: OperatorSpace, op, tag: str) -> OperatorSpace:
    if S1.n != S2.n:
        raise DimensionError("operator spaces on different systems")
    return span_maps(S1.n, S1.field, (op(A, B) for A in S1.maps() for B in S2.maps()), tag)


def bracket_span(S1: OperatorSpace, S2: OperatorSpace) -> OperatorSpace:
    """span{AB - BA} over basis pairs."""
    return _product_span(S1, S2, commutator, f"[{S1.tag},{S2.tag}]")


def composition_span(S1: OperatorSpace, S2: OperatorSpace) -> OperatorSpace:
    return _product_span(S1, S2, lambda a, b: a @ b, f"{S1.tag}*{S2.tag}")


def jordan_product_span(S1: OperatorSpace, S2: OperatorSpace) -> OperatorSpace:
    """span{AB + BA} over basis pairs."""
    return _product_span(S1, S2, jordan, f"{S1.tag}.{S2.tag}")


def is_lie_subalgebra(S: OperatorSpace) -> bool:
    return bracket_span(S, S) <= S


def is_lie_ideal_in(S1: OperatorSpace, S2: OperatorSpace) -> bool:
    return S1 <= S2 and bracket_span(S1, S2) <= S1


def jordan_identity_holds(x: Matrix, y: Matrix, z: Matrix, w: Matrix) -> bool:
    """Commutativity and the linearised Jordan identity for A.B = AB + BA."""
    if jordan(x, y) != jordan(y, x):
        return False
    j = jordan
    total = (j(j(j(x, y), w), z) - j(j(x, y), j(w, z))
             + j(j(j(y, z), w), x) - j(j(y, z), j(w, x))
             + j(j(j(z, x), w), y) - j(j(z, x), j(w, y)))
    return total.is_zero()


def random_map(T_or_field, n: int | None = None, rng: random.Random | None = None) -> Matrix:
    if isinstance(T_or_field, LieTripleSystem):
        field, n = T_or_field.field, T_or_field.dim
    else:
        field = T_or_field
    rng = rng or random.Random(0)
    return Matrix(field, [[field.random_element(rng) for _ in range(n)] for _ in range(n)], n)


def jordan_identity_check(maps: Sequence[Matrix]) -> bool | None:
    """Check the Jordan axioms on every ordered quadruple drawn cyclically from ``maps``.

    Returns None in characteristic 2, where the product is not a Jordan product.
    """
    if not maps:
        return True
    if maps[0].field.characteristic() == 2:
        return None
    k = len(maps)
    for s in range(k):
        x, y, z, w = (maps[(s + t) % k] for t in range(4))
        if not jordan_identity_holds(x, y, z, w):
            return False
    return True


# ---------------------------------------------------------------------------
# Element analysis: kernels, images, minimal polynomials


def ker_im_split(D: Matrix) -> tuple[Subspace, Subspace] | None:
    """(Ker D, Im D) when x^2 does not divide the minimal polynomial of D.

    In that case the two subspaces are complementary; RuntimeError is
    raised if they are not.
    """
    if x2_divides(minimal_polynomial(D)):
        return None
    K, I = kernel(D), image(D)
    if not (K & I).is_zero() or not (K + I).is_full():
        raise RuntimeError("kernel and image fail to be complementary")
    return K, I


@dataclass
class CentroidAnalysis:
    kernel: Subspace
    image: Subspace
    kernel_is_ideal: bool
    image_is_ideal: bool
    splits: bool
    invertible: bool
    invertibility_required: bool

    @property
    def ok(self) -> bool:
        return (self.kernel_is_ideal and self.image_is_ideal
                and (self.invertible or not self.invertibility_required))


def centroid_element_analysis(T: LieTripleSystem, D: Matrix,
                              indecomposable: bool = False) -> CentroidAnalysis:
    """Kernel and image of a centroid element are ideals.

    With ``indecomposable=True`` a nonzero D whose minimal polynomial is
    not divisible by x^2 must also be invertible.
    """
    if D not in compute_centroid(T):
        raise MembershipError("map is not in the centroid")
    K, I = kernel(D), image(D)
    splits = not x2_divides(minimal_polynomial(D))
    return CentroidAnalysis(
        kernel=K, image=I,
        kernel_is_ideal=is_ideal(T, K), image_is_ideal=is_ideal(T, I),
        splits=splits, invertible=K.is_zero(),
        invertibility_required=indecomposable and splits and not D.is_zero())


def qc_element_split(T: LieTripleSystem, D: Matrix) -> tuple[Subspace, Subspace] | None:
    """(Ker D, Im D) for D in QC(T) when Z(T) = 0 and x^2 does not divide minpoly(D).

    Returns None when a hypothesis fails.  The caller checks that the two
    pieces are ideals forming a direct sum.
    """
    if D not in compute_qcentroid(T):
        raise MembershipError("map is not in the quasicentroid")
    if not center(T).is_zero():
        return None
    return ker_im_split(D)


def centroid_idempotent_test(T: LieTripleSystem) -> bool | None:
    """Sufficient test for indecomposability via the centroid.

    True: C(T) is one-dimensional, so its only idempotents are 0 and id.
    False: some element of C(T) has two distinct eigenvalues in the field,
    so a spectral projector gives a nontrivial idempotent (T decomposes).
    None: undecided.
    """
    C = compute_centroid(T)
    if C.dim <= 1:
        return True
    for D in C.maps():
        roots = split_linear_roots(minimal_polynomial(D))
        if roots is not None and len(set(roots)) > 1:
            return False
    return None


@dataclass
class ScalarCheck:
    status: str
    eigenvalue: object = None
    details: str = ""


def qc_semisimple_scalar_check(T: LieTripleSystem, D: Matrix,
                               indecomposable: bool = False) -> ScalarCheck:
    """A semisimple quasicentroid element of a centerless indecomposable system is scalar.

    Restricted to minimal polynomials that split over the working field.
    """
    if D not in compute_qcentroid(T):
        raise MembershipError("map is not in the quasicentroid")
    f = minimal_polynomial(D)
    roots = split_linear_roots(f)
    if roots is None:
        return ScalarCheck("skipped(field)", details=f"minimal polynomial {f} does not split")
    if len(set(roots)) != len(roots):
        return ScalarCheck("skipped(hypothesis)", details="minimal polynomial is not squarefree")
    if not indecomposable:
        return ScalarCheck("skipped(hypothesis)", details="indecomposability not asserted")
    if not center(T).is_zero():
        return ScalarCheck("skipped(hypothesis)", details="center is nonzero")
    n = T.dim
    lam = roots[0]
    if f.degree != 1 or D != Matrix.identity(T.field, n).scale(lam):
        return ScalarCheck("fail", lam, f"D is not scalar; minimal polynomial {f}")
    comm = bracket_span(span_maps(T, T.field, [D]), compute_gder(T).projection)
    if not comm.is_zero():
        return ScalarCheck("fail", lam, "D does not commute with GDer(T)")
    return ScalarCheck("pass", lam)


def witness_kernel_on_derived(T: LieTripleSystem) -> bool:
    """(0, E) in the QDer joint space forces E = 0 on [T, T, T]."""
    J = compute_qder(T)
    m = T.dim * T.dim
    pure = J.joint & Subspace.span(T.field, 2 * m, (
        tuple(T.field.zero for _ in range(m)) + tuple(
            T.field.one if t == s else T.field.zero for t in range(m))
        for s in range(m)))
    derived = derived_subsystem(T)
    for v in pure.basis:
        E = Matrix.from_flat(T.field, v[m:], T.dim)
        if any(any(mat_vec(E, b)) for b in derived.basis):
            return False
    return True
