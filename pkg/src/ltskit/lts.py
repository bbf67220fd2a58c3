"""Lie triple systems given by structure constants.

A system of dimension n over a field F is the tensor ``c`` with
``[e_i, e_j, e_k] = sum_l c[i][j][k][l] e_l``.  Input is accepted only for
triples with ``i < j``; the diagonal is zero and ``i > j`` is filled in by
antisymmetry, so alternation in the first two slots holds by construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Mapping, Sequence

from .linalg import (
    QQ,
    DimensionError,
    FieldSpec,
    Subspace,
    nullspace_rows,
    unit_vector,
)


class LieAlgebraError(ValueError):
    """Structure constants that do not define a Lie algebra."""


class CatalogError(ValueError):
    """Unknown or malformed catalog name."""


@dataclass(frozen=True)
class Violation:
    identity: str
    indices: tuple
    residual: tuple


@dataclass
class ValidationReport:
    violations: list[Violation] = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def by_identity(self, identity: str) -> list[Violation]:
        return [v for v in self.violations if v.identity == identity]


class LieTripleSystem:
    """Structure-constant representation of a Lie triple system.

    ``brackets`` maps ``(i, j, k)`` with ``i < j`` to the coordinate vector
    of ``[e_i, e_j, e_k]``.  Missing triples are zero.  The object is not
    validated on construction; call :func:`validate`.
    """

    def __init__(self, field: FieldSpec, dim: int,
                 brackets: Mapping[tuple[int, int, int], Sequence], name: str = ""):
        if dim < 0:
            raise ValueError("dimension must be non-negative")
        self.field = field
        self.dim = dim
        self.name = name
        z = field.zero
        zero_vec = (z,) * dim
        c = [[[zero_vec] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), vec in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise DimensionError(f"bracket index {(i, j, k)} out of range for dim {dim}")
            if i >= j:
                raise ValueError(f"brackets are given only for i < j, got {(i, j, k)}")
            if len(vec) != dim:
                raise DimensionError(f"bracket value for {(i, j, k)} has {len(vec)} entries")
            v = tuple(field(x) for x in vec)
            c[i][j][k] = v
            c[j][i][k] = tuple(-x for x in v)
        self._c = tuple(tuple(tuple(row) for row in plane) for plane in c)
        # (i, j, k, {l: value}) for nonzero brackets, in lexicographic order
        self._nonzero = tuple(
            (i, j, k, {l: x for l, x in enumerate(self._c[i][j][k]) if x})
            for i, j, k in product(range(dim), repeat=3) if any(self._c[i][j][k]))

    def c(self, i: int, j: int, k: int) -> tuple:
        return self._c[i][j][k]

    @property
    def nonzero_triples(self):
        return self._nonzero

    def brackets(self) -> dict[tuple[int, int, int], tuple]:
        """The defining data: nonzero ``[e_i, e_j, e_k]`` with ``i < j``."""
        return {(i, j, k): self._c[i][j][k] for i, j, k, _ in self._nonzero if i < j}

    def basis_vector(self, i: int) -> tuple:
        return unit_vector(self.field, self.dim, i)

    def bracket(self, x: Sequence, y: Sequence, z: Sequence) -> tuple:
        n = self.dim
        if not len(x) == len(y) == len(z) == n:
            raise DimensionError(f"bracket arguments must lie in F^{n}")
        out = [self.field.zero] * n
        for i, j, k, vec in self._nonzero:
            coef = x[i] * y[j] * z[k]
            if coef:
                for l, v in vec.items():
                    out[l] = out[l] + coef * v
        return tuple(out)

    def is_abelian(self) -> bool:
        return not self._nonzero

    def with_name(self, name: str) -> LieTripleSystem:
        return LieTripleSystem(self.field, self.dim, self.brackets(), name)

    def __eq__(self, other):
        if not isinstance(other, LieTripleSystem):
            return NotImplemented
        return self.field == other.field and self.dim == other.dim and self._c == other._c

    def __hash__(self):
        return hash((self.field, self.dim, self._c))

    def __repr__(self):
        return f"LieTripleSystem({self.name or '?'}, dim={self.dim}, field={self.field})"


def bracket(T: LieTripleSystem, x: Sequence, y: Sequence, z: Sequence) -> tuple:
    return T.bracket(x, y, z)


# ---------------------------------------------------------------------------
# Axioms


def validate(T: LieTripleSystem) -> ValidationReport:
    """Exhaustively check the three defining identities on basis tuples."""
    n = T.dim
    c = T._c
    zero = T.field.zero
    report = ValidationReport()
    add = report.violations.append

    for i, j, k in product(range(n), repeat=3):
        if i == j:
            if any(c[i][i][k]):
                add(Violation("alternating", (i, i, k), c[i][i][k]))
        elif i < j:
            r = tuple(a + b for a, b in zip(c[i][j][k], c[j][i][k]))
            if any(r):
                add(Violation("alternating", (i, j, k), r))

    for i, j, k in product(range(n), repeat=3):
        r = tuple(a + b + d for a, b, d in zip(c[i][j][k], c[j][k][i], c[k][i][j]))
        if any(r):
            add(Violation("cyclic", (i, j, k), r))

    def ins(v: tuple, slot: int, p: int, q: int) -> list:
        # [v, e_p, e_q], [e_p, v, e_q] or [e_p, e_q, v] for a coordinate vector v
        out = [zero] * n
        for m, vm in enumerate(v):
            if vm:
                w = c[m][p][q] if slot == 0 else c[p][m][q] if slot == 1 else c[p][q][m]
                for l, x in enumerate(w):
                    if x:
                        out[l] = out[l] + vm * x
        return out

    for a, b in product(range(n), repeat=2):
        for x, y, z in product(range(n), repeat=3):
            lhs = ins(c[x][y][z], 2, a, b)            # [e_a, e_b, [e_x, e_y, e_z]]
            t1 = ins(c[a][b][x], 0, y, z)             # [[e_a, e_b, e_x], e_y, e_z]
            t2 = ins(c[a][b][y], 1, x, z)             # [e_x, [e_a, e_b, e_y], e_z]
            t3 = ins(c[a][b][z], 2, x, y)             # [e_x, e_y, [e_a, e_b, e_z]]
            r = tuple(p - q - s - t for p, q, s, t in zip(lhs, t1, t2, t3))
            if any(r):
                add(Violation("five_variable", (a, b, x, y, z), r))

    order = {"alternating": 0, "cyclic": 1, "five_variable": 2}
    report.violations.sort(key=lambda v: (order[v.identity], v.indices))
    return report


# ---------------------------------------------------------------------------
# Subspaces of T


def span(T: LieTripleSystem, vectors) -> Subspace:
    return Subspace.span(T.field, T.dim, vectors)


def full_space(T: LieTripleSystem) -> Subspace:
    return Subspace.full(T.field, T.dim)


def zero_space(T: LieTripleSystem) -> Subspace:
    return Subspace.zero(T.field, T.dim)


def derived_subsystem(T: LieTripleSystem) -> Subspace:
    """[T, T, T]."""
    return span(T, (T.c(i, j, k) for i, j, k, _ in T.nonzero_triples))


def triple_span(T: LieTripleSystem, A: Subspace, B: Subspace, C: Subspace) -> Subspace:
    """[A, B, C] spanned over basis triples."""
    return span(T, (T.bracket(a, b, c) for a in A.basis for b in B.basis for c in C.basis))


def center(T: LieTripleSystem) -> Subspace:
    """{x : [x, e_j, e_k] = 0 for all j, k}."""
    n = T.dim
    rows = []
    for j, k, l in product(range(n), repeat=3):
        rows.append({i: T.c(i, j, k)[l] for i in range(n) if T.c(i, j, k)[l]})
    return nullspace_rows(T.field, rows, n)


def centralizer(T: LieTripleSystem, I: Subspace) -> Subspace:
    """{x : [x, a, y] = [y, a, x] = 0 for all a in I, y in T}."""
    n = T.dim
    if I.ambient_dim != n:
        raise DimensionError(f"subspace of F^{I.ambient_dim} is not in a {n}-dim system")
    zero = T.field.zero
    rows = []
    for a in I.basis:
        for y, l in product(range(n), repeat=2):
            first, second = {}, {}
            for i in range(n):
                s1 = s2 = zero
                for m, am in enumerate(a):
                    if am:
                        s1 = s1 + am * T.c(i, m, y)[l]
                        s2 = s2 + am * T.c(y, m, i)[l]
                if s1:
                    first[i] = s1
                if s2:
                    second[i] = s2
            rows.append(first)
            rows.append(second)
    return nullspace_rows(T.field, rows, n)


def is_ideal(T: LieTripleSystem, I: Subspace) -> bool:
    """[I, T, T] is contained in I."""
    n = T.dim
    for b in I.basis:
        for j, k in product(range(n), repeat=2):
            if not I.contains(T.bracket(b, T.basis_vector(j), T.basis_vector(k))):
                return False
    return True


def is_direct_sum(T: LieTripleSystem, A: Subspace, B: Subspace) -> bool:
    return (is_ideal(T, A) and is_ideal(T, B)
            and (A & B).is_zero() and (A + B).is_full())


# ---------------------------------------------------------------------------
# Constructions


def abelian(n: int, field: FieldSpec = QQ) -> LieTripleSystem:
    return LieTripleSystem(field, n, {}, f"abelian({n})")


def simple2(field: FieldSpec = QQ) -> LieTripleSystem:
    """The two-dimensional simple system: [e1,e2,e1] = -e1, [e1,e2,e2] = e2."""
    return LieTripleSystem(field, 2, {(0, 1, 0): (-1, 0), (0, 1, 1): (0, 1)}, "simple2")


def from_lie_algebra(field: FieldSpec, dim: int,
                     brackets: Mapping[tuple[int, int], Sequence],
                     name: str = "") -> LieTripleSystem:
    """The system [x, y, z] := [[x, y], z] induced by a Lie algebra.

    ``brackets`` maps ``(i, j)`` with ``i < j`` to ``[e_i, e_j]``.
    """
    z = field.zero
    lie = [[(z,) * dim for _ in range(dim)] for _ in range(dim)]
    for (i, j), vec in brackets.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise DimensionError(f"Lie bracket index {(i, j)} out of range")
        if i >= j:
            raise LieAlgebraError(f"Lie brackets are given only for i < j, got {(i, j)}")
        if len(vec) != dim:
            raise DimensionError(f"Lie bracket value for {(i, j)} has {len(vec)} entries")
        v = tuple(field(x) for x in vec)
        lie[i][j] = v
        lie[j][i] = tuple(-x for x in v)

    def lb(u, v):
        out = [z] * dim
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    if vj:
                        for l, x in enumerate(lie[i][j]):
                            if x:
                                out[l] = out[l] + ui * vj * x
        return tuple(out)

    e = [unit_vector(field, dim, i) for i in range(dim)]
    for i, j, k in product(range(dim), repeat=3):
        jac = [a + b + c for a, b, c in zip(lb(e[i], lie[j][k]), lb(e[j], lie[k][i]),
                                            lb(e[k], lie[i][j]))]
        if any(jac):
            raise LieAlgebraError(f"Jacobi identity fails on {(i, j, k)}")

    triples = {}
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(dim):
                v = lb(lie[i][j], e[k])
                if any(v):
                    triples[i, j, k] = v
    return LieTripleSystem(field, dim, triples, name)


def sl2lts(field: FieldSpec = QQ) -> LieTripleSystem:
    """sl2 (basis e, h, f) viewed as a triple system via [[x, y], z]."""
    return from_lie_algebra(field, 3, {
        (0, 1): (-2, 0, 0),   # [e, h] = -2e
        (0, 2): (0, 1, 0),    # [e, f] = h
        (1, 2): (0, 0, -2),   # [h, f] = -2f
    }, "sl2lts")


def aff2lts(field: FieldSpec = QQ) -> LieTripleSystem:
    """The non-abelian 2-dim Lie algebra [a, b] = b as a triple system.

    Centerless, but its derived subsystem is the proper ideal span{b}.
    """
    return from_lie_algebra(field, 2, {(0, 1): (0, 1)}, "aff2lts")


def dsum(A: LieTripleSystem, B: LieTripleSystem, name: str | None = None) -> LieTripleSystem:
    """Direct sum on coordinate blocks (A first), zero mixed brackets."""
    if A.field != B.field:
        raise ValueError("summands live over different fields")
    n, m = A.dim, B.dim
    z = A.field.zero
    brackets = {}
    for (i, j, k), v in A.brackets().items():
        brackets[i, j, k] = tuple(v) + (z,) * m
    for (i, j, k), v in B.brackets().items():
        brackets[i + n, j + n, k + n] = (z,) * n + tuple(v)
    return LieTripleSystem(A.field, n + m, brackets, name or f"dsum({A.name},{B.name})")


def summand_blocks(T: LieTripleSystem, sizes: Sequence[int]) -> list[Subspace]:
    """Coordinate-block subspaces of consecutive sizes (for dsum outputs)."""
    out, off = [], 0
    for s in sizes:
        out.append(span(T, (T.basis_vector(i) for i in range(off, off + s))))
        off += s
    if off != T.dim:
        raise DimensionError(f"block sizes {list(sizes)} do not add up to {T.dim}")
    return out


CATALOG_NAMES = ("abelian(n)", "simple2", "sl2lts", "aff2lts", "dsum(a,b)")


def split_args(s: str) -> list[str]:
    depth, cur, out = 0, [], []
    for ch in s:
        if ch == "," and depth == 0:
            out.append("".join(cur).strip())
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        if depth < 0:
            raise CatalogError(f"unbalanced parentheses in {s!r}")
        cur.append(ch)
    if depth:
        raise CatalogError(f"unbalanced parentheses in {s!r}")
    out.append("".join(cur).strip())
    return out


def catalog(name: str, field: FieldSpec = QQ) -> LieTripleSystem:
    """Build a named system: abelian(n), simple2, sl2lts, aff2lts, dsum(a,b)."""
    name = name.replace(" ", "")
    if name == "simple2":
        return simple2(field)
    if name == "sl2lts":
        return sl2lts(field)
    if name == "aff2lts":
        return aff2lts(field)
    m = re.fullmatch(r"abelian\((\d+)\)", name)
    if m:
        return abelian(int(m.group(1)), field)
    m = re.fullmatch(r"dsum\((.*)\)", name)
    if m:
        parts = split_args(m.group(1))
        if len(parts) != 2 or not all(parts):
            raise CatalogError(f"dsum takes two systems, got {name!r}")
        return dsum(catalog(parts[0], field), catalog(parts[1], field), name)
    if name.startswith("abelian"):
        raise CatalogError(f"invalid parameter in {name!r}")
    raise CatalogError(f"unknown catalog system {name!r}")


DEFAULT_CATALOG = ("abelian(1)", "abelian(2)", "abelian(3)", "abelian(4)", "simple2",
                   "sl2lts", "aff2lts", "dsum(simple2,simple2)", "dsum(abelian(1),simple2)")
