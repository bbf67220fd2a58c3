"""The bracket as a linear map on T (x) T (x) T.

Tensor coordinates are flattened lexicographically: ``e_i (x) e_j (x) e_k``
is coordinate ``i*n^2 + j*n + k``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .derivations import compute_centroid, compute_der, compute_qder, random_map
from .linalg import (
    Matrix,
    Subspace,
    image,
    kernel,
    kron,
    mat_vec,
    unit_vector,
)
from .lts import LieTripleSystem, center, derived_subsystem, is_ideal


def cube_index(n: int, i: int, j: int, k: int) -> int:
    return (i * n + j) * n + k


def pure_tensor(x, y, z) -> tuple:
    """Coordinates of x (x) y (x) z."""
    return tuple(a * b * c for a in x for b in y for c in z)


def swap12(n: int, v) -> tuple:
    """x (x) y (x) z -> y (x) x (x) z, extended linearly."""
    out = [None] * (n ** 3)
    for i, j, k in product(range(n), repeat=3):
        out[cube_index(n, j, i, k)] = v[cube_index(n, i, j, k)]
    return tuple(out)


@lru_cache(maxsize=64)
def phi_matrix(T: LieTripleSystem) -> Matrix:
    """The n x n^3 matrix of x (x) y (x) z -> [x, y, z]."""
    n = T.dim
    cols = [T.c(i, j, k) for i, j, k in product(range(n), repeat=3)]
    return Matrix.from_columns(T.field, cols, rows=n)


@lru_cache(maxsize=64)
def ker_phi(T: LieTripleSystem) -> Subspace:
    return kernel(phi_matrix(T))


def pm_split(T_or_n, field=None) -> tuple[Subspace, Subspace] | None:
    """The symmetric and antisymmetric parts (in the first two factors).

    Returns None in characteristic 2, where the two parts coincide.
    """
    if isinstance(T_or_n, LieTripleSystem):
        n, field = T_or_n.dim, T_or_n.field
    else:
        n = T_or_n
    if field.characteristic() == 2:
        return None
    N = n ** 3
    plus, minus = [], []
    for i, j, k in product(range(n), repeat=3):
        a, b = cube_index(n, i, j, k), cube_index(n, j, i, k)
        if i <= j:
            v = [field.zero] * N
            v[a] = v[a] + 1
            v[b] = v[b] + 1
            plus.append(v)
        if i < j:
            v = [field.zero] * N
            v[a] = field.one
            v[b] = -field.one
            minus.append(v)
    return Subspace.span(field, N, plus), Subspace.span(field, N, minus)


def dstar(D: Matrix) -> Matrix:
    """D (x) I (x) I + I (x) D (x) I + I (x) I (x) D."""
    n = D.rows
    eye = Matrix.identity(D.field, n)
    return kron(kron(D, eye), eye) + kron(kron(eye, D), eye) + kron(kron(eye, eye), D)


def is_invariant(M: Matrix, S: Subspace) -> bool:
    return all(S.contains(mat_vec(M, b)) for b in S.basis)


@dataclass(frozen=True)
class KernelCriterion:
    is_qder: bool
    invariant: bool

    @property
    def agree(self) -> bool:
        return self.is_qder == self.invariant

    def __iter__(self):
        return iter((self.is_qder, self.invariant, self.agree))


def lemma31_check(T: LieTripleSystem, D: Matrix) -> KernelCriterion:
    """Membership of D in QDer(T) versus invariance of Ker(phi) under D*.

    The two bits come from independent computations: the first from the
    joint (D, D') solution space, the second from the tensor cube.
    """
    is_q = D in compute_qder(T).projection
    M = phi_after_dstar(T, D)
    inv = all(not any(mat_vec(M, b)) for b in ker_phi(T).basis)
    return KernelCriterion(is_q, inv)


def phi_after_dstar(T: LieTripleSystem, D: Matrix) -> Matrix:
    """phi composed with D*, column by column, without forming D*.

    Column (i, j, k) is [D e_i, e_j, e_k] + [e_i, D e_j, e_k] + [e_i, e_j, D e_k].
    """
    n = T.dim
    e = [T.basis_vector(i) for i in range(n)]
    d = [D.column(i) for i in range(n)]
    cols = []
    for i, j, k in product(range(n), repeat=3):
        terms = (T.bracket(d[i], e[j], e[k]), T.bracket(e[i], d[j], e[k]),
                 T.bracket(e[i], e[j], d[k]))
        cols.append(tuple(a + b + c for a, b, c in zip(*terms)))
    return Matrix.from_columns(T.field, cols, rows=n)


def elementary_maps(T_or_field, n: int | None = None) -> list[Matrix]:
    """The matrix units E_ab, a basis of End(T)."""
    if isinstance(T_or_field, LieTripleSystem):
        field, n = T_or_field.field, T_or_field.dim
    else:
        field = T_or_field
    out = []
    for a, b in product(range(n), repeat=2):
        out.append(Matrix(field, [[1 if (r, s) == (a, b) else 0 for s in range(n)]
                                  for r in range(n)], n))
    return out


_ACTION = {}


def _action_matrices(field, n: int) -> list[Matrix]:
    key = (field, n)
    if key not in _ACTION:
        _ACTION[key] = [dstar(E) for E in elementary_maps(field, n)]
    return _ACTION[key]


def module_action_check(T: LieTripleSystem, samples: int = 5,
                        rng: random.Random | None = None) -> str:
    """End(T) acts on both halves of the cube, compatibly with commutators.

    Returns "pass", "fail" or "skipped(char)".
    """
    split = pm_split(T)
    if split is None:
        return "skipped(char)"
    plus, minus = split
    acts = _action_matrices(T.field, T.dim)
    for M in acts:
        if not is_invariant(M, plus) or not is_invariant(M, minus):
            return "fail"
    rng = rng or random.Random(0)
    N = T.dim ** 3
    for _ in range(samples):
        D1, D2 = random_map(T, rng=rng), random_map(T, rng=rng)
        v = tuple(T.field.random_element(rng) for _ in range(N))
        lhs = mat_vec(dstar(D1 @ D2 - D2 @ D1), v)
        S1, S2 = dstar(D1), dstar(D2)
        rhs = tuple(a - b for a, b in zip(mat_vec(S1, mat_vec(S2, v)),
                                          mat_vec(S2, mat_vec(S1, v))))
        if lhs != rhs:
            return "fail"
    return "pass"


def generated_submodule(field, n: int, v) -> Subspace:
    """Smallest D*-invariant subspace of the cube containing ``v``."""
    N = n ** 3
    acts = _action_matrices(field, n)
    S = Subspace.span(field, N, [v])
    for _ in range(N):
        grown = S + Subspace.span(field, N, [mat_vec(M, w) for M in acts for w in S.basis])
        if grown.dim == S.dim:
            break
        S = grown
    return S


def generation_check(T_or_n, v, field=None) -> bool:
    """Does ``v`` generate the whole half of the cube that contains it?

    ``v`` must lie in the symmetric or the antisymmetric part.  The zero
    vector generates {0} and returns False.
    """
    if isinstance(T_or_n, LieTripleSystem):
        n, field = T_or_n.dim, T_or_n.field
    else:
        n = T_or_n
    split = pm_split(n, field)
    if split is None:
        raise ValueError("the cube does not split in characteristic 2")
    plus, minus = split
    if not any(v):
        return False
    if plus.contains(v):
        home = plus
    elif minus.contains(v):
        home = minus
    else:
        raise ValueError("vector lies in neither half of the cube")
    return generated_submodule(field, n, v) == home


def _has_detectable_proper_ideal(T: LieTripleSystem) -> bool:
    n = T.dim
    candidates = [center(T)]
    for D in compute_centroid(T).maps():
        candidates.append(kernel(D))
        candidates.append(image(D))
    return any(0 < S.dim < n and is_ideal(T, S) for S in candidates)


def classify(T: LieTripleSystem) -> str:
    """'abelian', 'dim2-simple' or 'other'."""
    derived = derived_subsystem(T)
    if derived.is_zero():
        return "abelian"
    if T.dim == 2 and derived.is_full() and not _has_detectable_proper_ideal(T):
        return "dim2-simple"
    return "other"


def qder_equals_end(T: LieTripleSystem) -> tuple[bool, str]:
    """(QDer(T) == End(T), structural classification)."""
    verdict = compute_qder(T).dim == T.dim * T.dim
    return verdict, classify(T)


def der_basis_criterion(T: LieTripleSystem) -> list[KernelCriterion]:
    return [lemma31_check(T, D) for D in compute_der(T).maps()]


def unit_cube_vector(field, n: int, i: int, j: int, k: int) -> tuple:
    return unit_vector(field, n ** 3, cube_index(n, i, j, k))
