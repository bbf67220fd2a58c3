from __future__ import annotations

import random
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from ltskit.linalg import (
    QQ,
    DimensionError,
    FieldSpec,
    Matrix,
    Mod,
    Polynomial,
    Subspace,
    block_diag,
    image,
    inverse,
    kernel,
    kron,
    map_subspace,
    minimal_polynomial,
    rank,
    rref,
    solve,
    split_linear_roots,
    x2_divides,
)

GF5 = FieldSpec.prime(5)
GF7 = FieldSpec.prime(7)


def matrices(max_rows=4, max_cols=4, lo=-3, hi=3):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


def square(max_n=4):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                           min_size=n, max_size=n))


def to_sympy(M: Matrix):
    return sp.Matrix([[sp.Rational(str(x)) for x in row] for row in M.tolist()])


# --- scalars -----------------------------------------------------------------


def test_mod_arithmetic():
    a, b = Mod(3, 7), Mod(5, 7)
    assert a + b == 1
    assert a * b == 1
    assert a - b == 5
    assert a / b == Mod(3 * 3, 7)
    assert a.inverse() * a == 1
    assert -a == 4
    assert a ** 6 == 1
    assert 2 - a == Mod(6, 7)
    assert not Mod(7, 7)
    with pytest.raises(ZeroDivisionError):
        Mod(0, 7).inverse()


def test_mod_mixed_moduli_rejected():
    with pytest.raises(ValueError):
        Mod(1, 5) + Mod(1, 7)


@pytest.mark.parametrize("p", [4, 1, 9])
def test_gf_needs_prime(p):
    with pytest.raises(ValueError):
        FieldSpec.prime(p)


def test_small_char_guard():
    with pytest.raises(ValueError):
        FieldSpec.prime(3)
    assert FieldSpec.prime(3, allow_small_char=True).characteristic() == 3


def test_parse_and_format():
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert QQ.format(Fraction(4, 2)) == "2"
    assert QQ.format(Fraction(-1, 3)) == "-1/3"
    assert GF5.parse("1/2") == 3
    assert GF5.format(-1) == "4"
    for bad in ("0.5", "1e3", "x", "1/0"):
        with pytest.raises(ValueError):
            QQ.parse(bad)


def test_field_json_roundtrip():
    for F in (QQ, GF5, FieldSpec.prime(2, True)):
        assert FieldSpec.from_json(F.to_json(), True) == F


# --- matrices ------------------------------------------------------------------


def test_matrix_shape_errors():
    A = Matrix(QQ, [[1, 2], [3, 4]])
    with pytest.raises(DimensionError):
        A @ Matrix(QQ, [[1, 2, 3]])
    with pytest.raises(DimensionError):
        Matrix(QQ, [[1, 2], [3]])


def test_kron_index_convention():
    A = Matrix(QQ, [[1, 2], [3, 4]])
    B = Matrix(QQ, [[0, 1], [1, 0]])
    K = kron(A, B)
    assert to_sympy(K) == sp.kronecker_product(to_sympy(A), to_sympy(B))


def test_block_diag():
    A = Matrix(QQ, [[2]])
    B = Matrix(QQ, [[0, 1], [1, 0]])
    M = block_diag(A, B)
    assert M.tolist() == [[2, 0, 0], [0, 0, 1], [0, 1, 0]]


@settings(max_examples=60, deadline=None)
@given(matrices(5, 5))
def test_rank_matches_sympy(rows):
    M = Matrix(QQ, rows)
    assert rank(M) == sp.Matrix(rows).rank()


@settings(max_examples=40, deadline=None)
@given(matrices(4, 5))
def test_rref_matches_sympy(rows):
    R, pivots, r = rref(Matrix(QQ, rows))
    Rs, ps = sp.Matrix(rows).rref()
    assert tuple(pivots) == tuple(ps)
    assert to_sympy(R)[:r, :] == Rs[:r, :]


@settings(max_examples=40, deadline=None)
@given(matrices(4, 5, 0, 6))
def test_rank_gf7_matches_sympy(rows):
    from sympy.polys.matrices import DomainMatrix
    M = Matrix(GF7, rows)
    dm = DomainMatrix([[sp.GF(7)(x) for x in r] for r in rows], (len(rows), len(rows[0])),
                      sp.GF(7))
    assert rank(M) == dm.rank()


@settings(max_examples=60, deadline=None)
@given(matrices(4, 5))
def test_rank_nullity(rows):
    M = Matrix(QQ, rows)
    K = kernel(M)
    assert K.dim + rank(M) == M.cols
    for v in K.basis:
        assert not any(M @ v)
    assert image(M).dim == rank(M)


@settings(max_examples=40, deadline=None)
@given(square(4))
def test_inverse_or_singular(rows):
    M = Matrix(QQ, rows)
    if sp.Matrix(rows).det() == 0:
        with pytest.raises(ZeroDivisionError):
            inverse(M)
    else:
        assert M @ inverse(M) == Matrix.identity(QQ, M.rows)


@settings(max_examples=40, deadline=None)
@given(matrices(4, 4), st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_solve(rows, xs):
    M = Matrix(QQ, rows)
    x = xs[: M.cols]
    b = M @ x
    sol = solve(M, b)
    assert sol is not None and M @ sol == b


def test_solve_inconsistent():
    M = Matrix(QQ, [[1, 1], [1, 1]])
    assert solve(M, [1, 2]) is None


# --- subspaces -----------------------------------------------------------------


def vecs(n, k):
    return st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=0, max_size=k)


@settings(max_examples=60, deadline=None)
@given(vecs(4, 3), vecs(4, 3))
def test_sum_and_intersection(a, b):
    A, B = Subspace.span(QQ, 4, a), Subspace.span(QQ, 4, b)
    S, I = A + B, A & B
    assert S.dim + I.dim == A.dim + B.dim
    assert I <= A and I <= B and A <= S and B <= S
    # oracle: dim(A+B) from sympy
    both = a + b
    assert S.dim == (sp.Matrix(both).rank() if both else 0)


@settings(max_examples=40, deadline=None)
@given(vecs(4, 4))
def test_canonical_basis_is_unique(a):
    A = Subspace.span(QQ, 4, a)
    rng = random.Random(1)
    shuffled = list(a)
    rng.shuffle(shuffled)
    mixed = [[x + y for x, y in zip(u, v)] for u, v in zip(shuffled, shuffled[1:])] + shuffled
    B = Subspace.span(QQ, 4, mixed)
    assert A == B
    assert A.basis == B.basis


@settings(max_examples=40, deadline=None)
@given(vecs(4, 3))
def test_complement(a):
    A = Subspace.span(QQ, 4, a)
    U = A.complement()
    assert (A & U).is_zero() and (A + U).is_full()


def test_project_block():
    # joint vectors (x, y) in F^2 x F^2 with y = x: projection onto block 0 is everything
    S = Subspace.span(QQ, 4, [[1, 0, 1, 0], [0, 1, 0, 1]])
    assert S.project_block(0, 2).is_full()
    # {(x, 0)} and {(0, y)} projections
    S = Subspace.span(QQ, 4, [[0, 0, 1, 0]])
    assert S.project_block(0, 2).is_zero()
    assert S.project_block(1, 2).dim == 1


def test_coordinates_and_membership():
    S = Subspace.span(QQ, 3, [[1, 1, 0], [0, 1, 1]])
    v = (2, 5, 3)
    assert v in S
    c = S.coordinates(v)
    rebuilt = [sum(ci * b[j] for ci, b in zip(c, S.basis)) for j in range(3)]
    assert tuple(rebuilt) == v
    assert S.coordinates((1, 0, 0)) is None


def test_map_subspace():
    M = Matrix(QQ, [[0, 1], [0, 0]])
    assert map_subspace(M, Subspace.full(QQ, 2)).dim == 1


# --- polynomials ---------------------------------------------------------------


def _annihilates(f: Polynomial, M: Matrix) -> bool:
    Ms = to_sympy(M)
    acc = sp.zeros(M.rows)
    for c in reversed(f.coefficients):
        acc = acc * Ms + sp.Rational(str(c)) * sp.eye(M.rows)
    return acc == sp.zeros(M.rows)


@settings(max_examples=50, deadline=None)
@given(square(4))
def test_minimal_polynomial_oracle(rows):
    M = Matrix(QQ, rows)
    f = minimal_polynomial(M)
    assert f.is_monic()
    assert _annihilates(f, M)
    # no lower-degree annihilator: I, M, ..., M^(d-1) independent
    Ms = sp.Matrix(rows)
    powers = [list(Ms ** k) for k in range(f.degree)]
    assert sp.Matrix(powers).rank() == f.degree
    # divides the characteristic polynomial
    x = sp.Symbol("x")
    fx = sum(sp.Rational(str(c)) * x ** i for i, c in enumerate(f.coefficients))
    assert sp.rem(Ms.charpoly(x).as_expr(), fx, x) == 0


def test_minimal_polynomial_examples():
    assert minimal_polynomial(Matrix.identity(QQ, 3).scale(2)).coefficients == (-2, 1)
    N = Matrix(QQ, [[0, 1], [0, 0]])
    f = minimal_polynomial(N)
    assert f.coefficients == (0, 0, 1) and x2_divides(f)
    R = Matrix(QQ, [[0, -1], [1, 0]])
    assert split_linear_roots(minimal_polynomial(R)) is None
    # over GF(5), x^2 + 1 = (x - 2)(x - 3)
    assert sorted(int(r) for r in split_linear_roots(minimal_polynomial(Matrix(GF5, R.tolist())))) == [2, 3]


def test_split_roots_multiplicity():
    f = Polynomial.from_roots(QQ, [Fraction(1, 2), Fraction(1, 2), -3])
    assert sorted(split_linear_roots(f)) == [-3, Fraction(1, 2), Fraction(1, 2)]
