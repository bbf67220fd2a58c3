"""Quasiderivations of T as derivations of the enlarged system Tt + Tt^3.

The enlarged system has dimension 2n with ordered basis
``(e_1 t, ..., e_n t, e_1 t^3, ..., e_n t^3)``.  Its only nonzero brackets
are ``[x t, y t, z t] = [x, y, z] t^3``; every product of total t-degree
at least 4 vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .derivations import (
    OperatorSpace,
    compute_der,
    compute_qder,
    compute_zder,
    satisfies,
    span_maps,
)
from .linalg import Matrix, Subspace, block_diag, inverse
from .lts import LieTripleSystem, center, derived_subsystem


class ComplementError(ValueError):
    """U is not a complement of [T, T, T] in T."""


class WitnessError(ValueError):
    """(D, D') does not satisfy the quasiderivation identity."""


@dataclass(frozen=True)
class QDerWitness:
    d: Matrix
    dprime: Matrix


@dataclass(frozen=True)
class BreveLTS:
    base: LieTripleSystem
    system: LieTripleSystem
    complement: Subspace
    derived: Subspace
    projector: Matrix  # onto [T, T, T] along the complement

    @property
    def n(self) -> int:
        return self.base.dim

    def t_block(self) -> Subspace:
        n = self.n
        return Subspace.span(self.base.field, 2 * n,
                             (self.system.basis_vector(i) for i in range(n)))

    def t3_block(self) -> Subspace:
        n = self.n
        return Subspace.span(self.base.field, 2 * n,
                             (self.system.basis_vector(i) for i in range(n, 2 * n)))


def canonical_complement(T: LieTripleSystem) -> Subspace:
    """Unit vectors at the non-pivot positions of the echelon basis of [T, T, T]."""
    return derived_subsystem(T).complement()


def shifted_complement(T: LieTripleSystem) -> Subspace:
    """A second complement: each canonical complement vector plus a fixed derived vector."""
    derived = derived_subsystem(T)
    U = derived.complement()
    if derived.is_zero():
        return U
    b = derived.basis[0]
    return Subspace.span(T.field, T.dim, (tuple(x + y for x, y in zip(u, b)) for u in U.basis))


def _projector(T: LieTripleSystem, U: Subspace, derived: Subspace) -> Matrix:
    n = T.dim
    basis = list(U.basis) + list(derived.basis)
    if not basis:
        return Matrix.identity(T.field, 0)
    Bm = Matrix.from_columns(T.field, basis)
    keep = Matrix.diag(T.field, [0] * U.dim + [1] * derived.dim)
    return Bm @ keep @ inverse(Bm)


def build_breve(T: LieTripleSystem, U: Subspace | None = None) -> BreveLTS:
    n = T.dim
    field = T.field
    derived = derived_subsystem(T)
    if U is None:
        U = derived.complement()
    elif U.ambient_dim != n or not (U & derived).is_zero() or not (U + derived).is_full():
        raise ComplementError("U must be a complement of the derived subsystem")
    z = field.zero
    brackets = {(i, j, k): (z,) * n + tuple(v) for (i, j, k), v in T.brackets().items()}
    system = LieTripleSystem(field, 2 * n, brackets, f"breve({T.name})")
    return BreveLTS(T, system, U, derived, _projector(T, U, derived))


def embed_phi(B: BreveLTS, w: QDerWitness) -> Matrix:
    """The 2n x 2n map a t -> D(a) t, u t^3 -> 0, b t^3 -> D'(b) t^3."""
    if not satisfies(B.base, "qder", [w.d, w.dprime]):
        raise WitnessError("(D, D') is not a quasiderivation pair")
    return block_diag(w.d, w.dprime @ B.projector)


def witnesses(T: LieTripleSystem) -> list[QDerWitness]:
    """The joint (D, D') solution basis."""
    return [QDerWitness(d, dp) for d, dp in compute_qder(T).tuples()]


def phi_image(B: BreveLTS) -> OperatorSpace:
    """phi(QDer(T)) as a subspace of End of the enlarged system."""
    return span_maps(B.system, B.base.field,
                     (embed_phi(B, w) for w in witnesses(B.base)), "phi(qder)")


def welldefined_check(B: BreveLTS, w1: QDerWitness, w2: QDerWitness) -> bool:
    if w1.d != w2.d:
        raise ValueError("witnesses must share the same D")
    return embed_phi(B, w1) == embed_phi(B, w2)


def t_block_of(B: BreveLTS, M: Matrix) -> Matrix:
    n = B.n
    return Matrix(B.base.field, (M.row(i)[:n] for i in range(n)), n)


def injectivity_check(B: BreveLTS) -> bool:
    """phi recovers D from its t block, and no nonzero D maps to 0."""
    qder = compute_qder(B.base).projection
    ws = witnesses(B.base)
    for w in ws:
        if t_block_of(B, embed_phi(B, w)) != w.d:
            return False
    return phi_image(B).dim == qder.dim


@dataclass
class Decomposition:
    status: str
    dims: dict = dc_field(default_factory=dict)
    assertions: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def semidirect_decomposition(T: LieTripleSystem, U: Subspace | None = None) -> Decomposition:
    """Der(T~) = phi(QDer(T)) + ZDer(T~) as a direct sum, when Z(T) = 0."""
    if not center(T).is_zero():
        return Decomposition("skipped(hypothesis)")
    B = build_breve(T, U)
    der = compute_der(B.system)
    zder = compute_zder(B.system)
    phi = phi_image(B)
    qder = compute_qder(T).projection
    checks = {
        "center_is_t3_block": center(B.system) == B.t3_block(),
        "phi_in_der": phi <= der,
        "sum_is_der": (phi + zder) == der,
        "intersection_zero": (phi & zder).is_zero(),
        "dimension_count": der.dim == qder.dim + zder.dim,
    }
    dims = {"der_breve": der.dim, "qder": qder.dim, "zder_breve": zder.dim, "phi_qder": phi.dim}
    return Decomposition("pass" if all(checks.values()) else "fail", dims, checks)
