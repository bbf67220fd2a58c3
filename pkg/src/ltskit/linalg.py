"""Exact field arithmetic and dense/sparse linear algebra over Q and GF(p).

Everything here is exact.  Rational scalars are :class:`fractions.Fraction`
values; residues mod p are :class:`Mod` values.  Both support the usual
Python operators, so the elimination code below is written once for both
fields.

Vectors are plain tuples of scalars.  Matrices are immutable
:class:`Matrix` objects.  Subspaces of F^m are :class:`Subspace` objects
carrying a canonical reduced row-echelon basis, so two subspaces are equal
exactly when their stored bases are identical.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when operands live in spaces of different dimension."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for d in range(2, math.isqrt(p) + 1):
        if p % d == 0:
            return False
    return True


class Mod:
    """Residue class modulo a prime."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError(f"mixing GF({self.p}) and GF({other.p})")
            return other.v
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(self.v * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def inverse(self) -> Mod:
        if self.v == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Mod(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * Mod(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Mod(o, self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Mod):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return (self.v - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Mod({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: ``FieldSpec("Q")`` or ``FieldSpec("GF", p)``.

    Characteristic 2 and 3 are refused unless ``allow_small_char`` is set,
    because several of the structural results need char != 2, 3.
    """

    kind: str = "Q"
    p: int = 0
    allow_small_char: bool = dc_field(default=False, compare=False)

    def __post_init__(self):
        if self.kind == "Q":
            if self.p != 0:
                raise ValueError("the rationals take no modulus")
        elif self.kind == "GF":
            if not _is_prime(self.p):
                raise ValueError(f"GF modulus must be prime, got {self.p}")
            if self.p in (2, 3) and not self.allow_small_char:
                raise ValueError(
                    f"GF({self.p}) needs allow_small_char=True; "
                    "several checks assume char != 2, 3")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls("Q")

    @classmethod
    def prime(cls, p: int, allow_small_char: bool = False) -> FieldSpec:
        return cls("GF", p, allow_small_char)

    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __call__(self, value):
        """Coerce an int, Fraction, Mod or literal string into this field."""
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "Q":
            if isinstance(value, Mod):
                raise TypeError("cannot coerce a residue into Q")
            return Fraction(value)
        if isinstance(value, Mod):
            if value.p != self.p:
                raise ValueError(f"residue mod {value.p} is not in GF({self.p})")
            return value
        if isinstance(value, Fraction):
            return Mod(value.numerator, self.p) / Mod(value.denominator, self.p)
        return Mod(int(value), self.p)

    def parse(self, text: str):
        text = text.strip()
        try:
            q = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact scalar literal: {text!r}") from exc
        if "." in text or "e" in text.lower():
            raise ValueError(f"decimal literals are not exact scalars: {text!r}")
        return self(q)

    def format(self, x) -> str:
        return str(self(x))

    def random_element(self, rng: random.Random, height: int = 5):
        if self.kind == "Q":
            return Fraction(rng.randint(-height, height))
        return Mod(rng.randrange(self.p), self.p)

    def elements(self):
        """Finite fields only: all elements in residue order."""
        if self.kind != "GF":
            raise ValueError("Q is infinite")
        return [Mod(v, self.p) for v in range(self.p)]

    def to_json(self) -> dict:
        return {"kind": "Q"} if self.kind == "Q" else {"kind": "GF", "p": self.p}

    @classmethod
    def from_json(cls, obj: dict, allow_small_char: bool = False) -> FieldSpec:
        kind = obj.get("kind")
        if kind == "Q":
            return cls.rationals()
        if kind == "GF":
            return cls.prime(int(obj["p"]), allow_small_char)
        raise ValueError(f"unknown field kind {kind!r}")

    def __str__(self):
        return "Q" if self.kind == "Q" else f"GF({self.p})"


QQ = FieldSpec.rationals()


# ---------------------------------------------------------------------------
# Matrices


class Matrix:
    """Immutable dense matrix over a :class:`FieldSpec`.

    ``m[i, j]`` reads an entry, ``m @ v`` applies to a column vector (tuple)
    or multiplies matrices.  A linear map D on F^n is stored so that column
    ``j`` is ``D(e_j)``.
    """

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: FieldSpec, data: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(field(x) for x in row) for row in data)
        if cols is None:
            if not data:
                raise ValueError("cols must be given for a matrix with no rows")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise DimensionError("ragged matrix rows")
        self.field = field
        self.rows = len(data)
        self.cols = cols
        self._data = data

    @classmethod
    def _raw(cls, field, data, cols):
        m = object.__new__(cls)
        m.field, m.rows, m.cols, m._data = field, len(data), cols, data
        return m

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int | None = None) -> Matrix:
        cols = rows if cols is None else cols
        z = field.zero
        return cls._raw(field, tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> Matrix:
        return cls.diag(field, [1] * n)

    @classmethod
    def diag(cls, field: FieldSpec, entries: Sequence) -> Matrix:
        n = len(entries)
        z = field.zero
        return cls._raw(field, tuple(
            tuple(field(entries[i]) if i == j else z for j in range(n))
            for i in range(n)), n)

    @classmethod
    def from_columns(cls, field: FieldSpec, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        if not columns:
            if rows is None:
                raise ValueError("rows must be given when there are no columns")
            return cls._raw(field, tuple(() for _ in range(rows)), 0)
        return cls(field, zip(*columns))

    @classmethod
    def from_flat(cls, field: FieldSpec, flat: Sequence, rows: int, cols: int | None = None) -> Matrix:
        """Row-major reshape; the inverse of :meth:`flat`."""
        cols = rows if cols is None else cols
        if len(flat) != rows * cols:
            raise DimensionError(f"{len(flat)} entries cannot fill {rows}x{cols}")
        return cls(field, (flat[i * cols:(i + 1) * cols] for i in range(rows)), cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def flat(self) -> tuple:
        return tuple(x for r in self._data for x in r)

    @property
    def T(self) -> Matrix:
        if self.rows == 0:
            return Matrix._raw(self.field, tuple(() for _ in range(self.cols)), 0)
        return Matrix._raw(self.field, tuple(zip(*self._data)), self.rows)

    def is_zero(self) -> bool:
        return not any(x for r in self._data for x in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _check_same(self, other: Matrix):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected Matrix, got {type(other).__name__}")
        if self.shape != other.shape:
            raise DimensionError(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix._raw(self.field, tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self.cols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same(other)
        return Matrix._raw(self.field, tuple(
            tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data)), self.cols)

    def __neg__(self) -> Matrix:
        return Matrix._raw(self.field, tuple(tuple(-a for a in r) for r in self._data), self.cols)

    def scale(self, c) -> Matrix:
        c = self.field(c)
        return Matrix._raw(self.field, tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    def __rmul__(self, c) -> Matrix:
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            ocols = other.T._data if other.rows else tuple(() for _ in range(other.cols))
            z = self.field.zero
            return Matrix._raw(self.field, tuple(
                tuple(sum((a * b for a, b in zip(r, c) if a), z) for c in ocols)
                for r in self._data), other.cols)
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionError(f"cannot apply {self.shape} matrix to length-{len(v)} vector")
        return mat_vec(self, v)

    def __pow__(self, e: int) -> Matrix:
        if not self.is_square() or e < 0:
            raise ValueError("only non-negative powers of square matrices")
        out = Matrix.identity(self.field, self.rows)
        base = self
        while e:
            if e & 1:
                out = out @ base
            base = base @ base
            e >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix[{self.field}]({self.rows}x{self.cols}: {body})"


def mat_vec(m: Matrix, v: Sequence) -> tuple:
    z = m.field.zero
    return tuple(sum((a * b for a, b in zip(r, v) if a), z) for r in m._data)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def jordan(a: Matrix, b: Matrix) -> Matrix:
    return a @ b + b @ a


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; index (i*b.rows + k, j*b.cols + l)."""
    data = []
    for ra in a._data:
        for rb in b._data:
            data.append(tuple(x * y for x in ra for y in rb))
    return Matrix._raw(a.field, tuple(data), a.cols * b.cols)


def block_diag(*ms: Matrix) -> Matrix:
    field = ms[0].field
    n = sum(m.cols for m in ms)
    z = field.zero
    data = []
    off = 0
    for m in ms:
        for r in m._data:
            data.append((z,) * off + r + (z,) * (n - off - m.cols))
        off += m.cols
    return Matrix._raw(field, tuple(data), n)


def vec_add(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def unit_vector(field: FieldSpec, n: int, i: int) -> tuple:
    z, o = field.zero, field.one
    return tuple(o if k == i else z for k in range(n))


# ---------------------------------------------------------------------------
# Elimination core.  Rows are sparse dicts {column: nonzero scalar}.


def _eliminate(rows: Iterable[dict], one) -> dict[int, dict]:
    """Fully reduced row echelon form of the span of ``rows``.

    Returns ``{pivot column: row}`` with every row normalised to pivot 1 and
    every pivot column cleared from the other rows.
    """
    pivots: dict[int, dict] = {}
    for r in rows:
        r = {c: v for c, v in r.items() if v}
        while r:
            c = min(r)
            p = pivots.get(c)
            if p is None:
                inv = one / r[c]
                pivots[c] = {cc: vv * inv for cc, vv in r.items()}
                break
            f = r[c]
            for cc, vv in p.items():
                nv = r.get(cc, 0) - f * vv
                if nv:
                    r[cc] = nv
                else:
                    r.pop(cc, None)
    cols = sorted(pivots)
    for idx in range(len(cols) - 1, -1, -1):
        c = cols[idx]
        p = pivots[c]
        for lower in cols[:idx]:
            q = pivots[lower]
            f = q.get(c)
            if f:
                for cc, vv in p.items():
                    nv = q.get(cc, 0) - f * vv
                    if nv:
                        q[cc] = nv
                    else:
                        q.pop(cc, None)
    return pivots


def _dense(row: dict, n: int, zero) -> tuple:
    return tuple(row.get(c, zero) for c in range(n))


def _sparse(v: Sequence) -> dict:
    return {c: x for c, x in enumerate(v) if x}


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """Reduced row-echelon form, pivot columns and rank.

    The returned matrix has the same shape as ``m``, zero rows at the bottom.
    """
    field = m.field
    piv = _eliminate((_sparse(r) for r in m._data), field.one)
    cols = tuple(sorted(piv))
    data = [_dense(piv[c], m.cols, field.zero) for c in cols]
    data += [(field.zero,) * m.cols] * (m.rows - len(cols))
    return Matrix._raw(field, tuple(data), m.cols), cols, len(cols)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def nullspace_rows(field: FieldSpec, rows: Iterable[dict], ncols: int) -> Subspace:
    """Solution space of the homogeneous system given by sparse ``rows``."""
    piv = _eliminate(rows, field.one)
    zero, one = field.zero, field.one
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for c, row in piv.items():
            x = row.get(f)
            if x:
                v[c] = -x
        basis.append(v)
    return Subspace.span(field, ncols, basis)


def kernel(m: Matrix) -> Subspace:
    """{v : m v = 0}."""
    return nullspace_rows(m.field, (_sparse(r) for r in m._data), m.cols)


def image(m: Matrix) -> Subspace:
    """Column space of ``m``."""
    return Subspace.span(m.field, m.rows, [m.column(j) for j in range(m.cols)])


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """One solution x of m x = b, or None if the system is inconsistent."""
    if len(b) != m.rows:
        raise DimensionError("right-hand side length does not match rows")
    field = m.field
    n = m.cols
    rows = []
    for r, bi in zip(m._data, b):
        d = _sparse(r)
        bi = field(bi)
        if bi:
            d[n] = bi
        rows.append(d)
    piv = _eliminate(rows, field.one)
    if n in piv:
        return None
    x = [field.zero] * n
    for c, row in piv.items():
        x[c] = row.get(n, field.zero)
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise DimensionError("only square matrices are invertible")
    n = m.rows
    field = m.field
    cols = []
    for j in range(n):
        x = solve(m, unit_vector(field, n, j))
        if x is None:
            raise ZeroDivisionError("matrix is singular")
        cols.append(x)
    return Matrix.from_columns(field, cols)


# ---------------------------------------------------------------------------
# Subspaces


class Subspace:
    """A subspace of F^m stored by its canonical RREF basis.

    Construct with :meth:`span`; the basis is canonicalised immediately, so
    ``==`` compares canonical bases and ``<=`` is containment.
    """

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field: FieldSpec, ambient_dim: int, pivots: dict[int, dict]):
        self.field = field
        self.ambient_dim = ambient_dim
        cols = sorted(pivots)
        self.pivots = tuple(cols)
        self.basis = tuple(_dense(pivots[c], ambient_dim, field.zero) for c in cols)

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, vectors: Iterable[Sequence]) -> Subspace:
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in F^{ambient_dim}")
            rows.append({c: field(x) for c, x in enumerate(v) if x})
        return cls(field, ambient_dim, _eliminate(rows, field.one))

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> Subspace:
        return cls(field, ambient_dim, {})

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> Subspace:
        return cls.span(field, ambient_dim,
                        (unit_vector(field, ambient_dim, i) for i in range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def basis_matrix(self) -> Matrix:
        """Basis vectors as rows."""
        return Matrix._raw(self.field, self.basis, self.ambient_dim)

    def _check(self, other: Subspace):
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"subspaces of F^{self.ambient_dim} and F^{other.ambient_dim}")

    def reduce(self, v: Sequence) -> tuple:
        """Remainder of ``v`` after clearing every pivot of the basis."""
        if len(v) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in F^{self.ambient_dim}")
        r = [self.field(x) for x in v]
        for c, b in zip(self.pivots, self.basis):
            f = r[c]
            if f:
                for k, x in enumerate(b):
                    if x:
                        r[k] = r[k] - f * x
        return tuple(r)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    __contains__ = contains

    def coordinates(self, v: Sequence) -> tuple | None:
        """Coefficients of ``v`` in the canonical basis, or None if v is outside."""
        if not self.contains(v):
            return None
        return tuple(self.field(v[c]) for c in self.pivots)

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def __ge__(self, other: Subspace) -> bool:
        return other <= self

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim and self.field == other.field
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def __and__(self, other: Subspace) -> Subspace:
        """Intersection by the Zassenhaus construction."""
        self._check(other)
        m = self.ambient_dim
        rows = [_sparse(tuple(a) + tuple(a)) for a in self.basis]
        rows += [_sparse(tuple(b)) for b in other.basis]
        piv = _eliminate(rows, self.field.one)
        vecs = [[row.get(m + k, self.field.zero) for k in range(m)]
                for c, row in piv.items() if c >= m]
        return Subspace.span(self.field, m, vecs)

    def complement(self) -> Subspace:
        """The span of the unit vectors at non-pivot positions."""
        return Subspace.span(self.field, self.ambient_dim,
                             (unit_vector(self.field, self.ambient_dim, i)
                              for i in range(self.ambient_dim) if i not in self.pivots))

    def project_block(self, block: int, size: int) -> Subspace:
        """Image under the projection F^(k*size) -> F^size onto one block.

        Coordinates of the chosen block are ordered first; after elimination
        the rows with a pivot inside that block carry its projection.
        """
        if size <= 0 or self.ambient_dim % size:
            raise DimensionError(f"F^{self.ambient_dim} is not a union of blocks of size {size}")
        k = self.ambient_dim // size
        if not 0 <= block < k:
            raise DimensionError(f"block {block} out of range for {k} blocks")
        lo = block * size
        order = list(range(lo, lo + size)) + [c for c in range(self.ambient_dim)
                                              if not lo <= c < lo + size]
        rows = [{i: b[c] for i, c in enumerate(order) if b[c]} for b in self.basis]
        piv = _eliminate(rows, self.field.one)
        vecs = [[row.get(i, self.field.zero) for i in range(size)]
                for c, row in piv.items() if c < size]
        return Subspace.span(self.field, size, vecs)

    def embed_block(self, block: int, blocks: int) -> Subspace:
        """Place this subspace into block ``block`` of F^(blocks*m)."""
        m = self.ambient_dim
        z = self.field.zero
        return Subspace.span(self.field, m * blocks, (
            (z,) * (block * m) + b + (z,) * ((blocks - block - 1) * m) for b in self.basis))

    def __repr__(self):
        return f"Subspace[{self.field}](dim {self.dim} in F^{self.ambient_dim})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a & b


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    a._check(b)
    return a == b


def contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)


def project_block(s: Subspace, block: int, size: int) -> Subspace:
    return s.project_block(block, size)


def map_subspace(m: Matrix, s: Subspace) -> Subspace:
    """Image m(S)."""
    if m.cols != s.ambient_dim:
        raise DimensionError("map and subspace dimensions differ")
    return Subspace.span(m.field, m.rows, (mat_vec(m, b) for b in s.basis))


# ---------------------------------------------------------------------------
# Polynomials


@dataclass(frozen=True)
class Polynomial:
    """Coefficients lowest degree first; trailing zeros are stripped."""

    field: FieldSpec
    coefficients: tuple

    def __post_init__(self):
        cs = [self.field(c) for c in self.coefficients]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.coefficients[-1] == 1

    def __call__(self, x):
        """Evaluate at a scalar (Horner)."""
        acc = self.field.zero
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def evaluate_matrix(self, m: Matrix) -> Matrix:
        n = m.rows
        acc = Matrix.zeros(m.field, n)
        eye = Matrix.identity(m.field, n)
        for c in reversed(self.coefficients):
            acc = acc @ m + eye.scale(c)
        return acc

    def __mul__(self, other: Polynomial) -> Polynomial:
        if self.is_zero() or other.is_zero():
            return Polynomial(self.field, ())
        out = [self.field.zero] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, tuple(out))

    def divmod_linear(self, root) -> tuple[Polynomial, object]:
        """Divide by (x - root): quotient and remainder (synthetic division)."""
        cs = self.coefficients
        if not cs:
            return self, self.field.zero
        q = [self.field.zero] * (len(cs) - 1)
        acc = self.field.zero
        for i in range(len(cs) - 1, 0, -1):
            acc = acc * root + cs[i]
            q[i - 1] = acc
        rem = acc * root + cs[0]
        return Polynomial(self.field, tuple(q)), rem

    @classmethod
    def from_roots(cls, field: FieldSpec, roots: Iterable) -> Polynomial:
        p = cls(field, (1,))
        for r in roots:
            p = p * cls(field, (-field(r), 1))
        return p

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return " + ".join(reversed(terms)) or "0"


def minimal_polynomial(m: Matrix) -> Polynomial:
    """Monic annihilator of least degree: first dependence among I, m, m^2, ..."""
    if not m.is_square():
        raise DimensionError("minimal polynomial of a non-square matrix")
    field = m.field
    n = m.rows
    powers = [Matrix.identity(field, n).flat()]
    while True:
        cur = Matrix.from_flat(field, powers[-1], n) @ m
        powers.append(cur.flat())
        k = len(powers)
        ker = kernel(Matrix.from_columns(field, powers))
        if ker.dim:
            # First dependence: kernel is 1-dimensional and involves m^(k-1).
            v = ker.basis[-1]
            lead = v[k - 1]
            return Polynomial(field, tuple(c / lead for c in v))
        if k > n + 1:  # pragma: no cover - Cayley-Hamilton forbids this
            raise RuntimeError("no annihilating polynomial found")


def x2_divides(f: Polynomial) -> bool:
    if f.is_zero():
        raise ValueError("zero polynomial")
    cs = f.coefficients + (f.field.zero,) * 2
    return not cs[0] and not cs[1]


def _divisors(k: int) -> list[int]:
    k = abs(k)
    small = [d for d in range(1, math.isqrt(k) + 1) if k % d == 0]
    return sorted(set(small + [k // d for d in small]))


def _candidate_roots(f: Polynomial) -> list:
    field = f.field
    if field.kind == "GF":
        return field.elements()
    den = 1
    for c in f.coefficients:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coefficients]
    lo = next(i for i, c in enumerate(ints) if c)
    cands = {Fraction(0)} if lo else set()
    for p in _divisors(ints[lo]):
        for q in _divisors(ints[-1]):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    return sorted(cands)


def split_linear_roots(f: Polynomial) -> list | None:
    """All roots with multiplicity if f splits into linear factors, else None."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    roots = []
    rest = f
    for r in _candidate_roots(f):
        while rest.degree > 0:
            q, rem = rest.divmod_linear(r)
            if rem:
                break
            roots.append(r)
            rest = q
    if rest.degree > 0:
        return None
    return roots
