from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import FIELDS, random_invertible, transport
from oracle_values import CORPUS, SPACE_DIMS
from ltskit.linalg import QQ, DimensionError, FieldSpec, Subspace
from ltskit.lts import (
    CatalogError,
    LieAlgebraError,
    LieTripleSystem,
    catalog,
    center,
    centralizer,
    derived_subsystem,
    dsum,
    from_lie_algebra,
    full_space,
    is_direct_sum,
    is_ideal,
    simple2,
    summand_blocks,
    validate,
)


@pytest.mark.parametrize("name", CORPUS)
def test_corpus_validates(name, field):
    assert validate(catalog(name, field)).passed


def test_simple2_table():
    # [e1,e2,e1] = -e1, [e1,e2,e2] = e2, and the i > j entries by antisymmetry
    T = simple2()
    assert T.c(0, 1, 0) == (-1, 0)
    assert T.c(0, 1, 1) == (0, 1)
    assert T.c(1, 0, 0) == (1, 0)
    assert T.c(1, 0, 1) == (0, -1)
    assert T.c(0, 0, 1) == (0, 0)


def test_antisymmetry_filled():
    T = catalog("sl2lts")
    n = T.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert T.c(i, j, k) == tuple(-x for x in T.c(j, i, k))


def test_perturbed_simple2_fails():
    T = LieTripleSystem(QQ, 2, {(0, 1, 0): (-2, 0), (0, 1, 1): (0, 1)}, "bad")
    rep = validate(T)
    assert not rep.passed
    assert {v.identity for v in rep.violations} == {"five_variable"}
    v = rep.violations[0]
    assert len(v.indices) == 5 and any(v.residual)


def test_cyclic_violation_detected():
    # [e1,e2,e3] = e1 alone breaks the cyclic identity
    T = LieTripleSystem(QQ, 3, {(0, 1, 2): (1, 0, 0)})
    assert validate(T).by_identity("cyclic")


def test_constructor_errors():
    with pytest.raises(ValueError):
        LieTripleSystem(QQ, 2, {(1, 0, 0): (1, 0)})
    with pytest.raises(ValueError):
        LieTripleSystem(QQ, 2, {(0, 0, 0): (1, 0)})
    with pytest.raises(DimensionError):
        LieTripleSystem(QQ, 2, {(0, 1, 2): (1, 0)})
    with pytest.raises(DimensionError):
        LieTripleSystem(QQ, 2, {(0, 1, 0): (1, 0, 0)})


def test_jacobi_enforced():
    with pytest.raises(LieAlgebraError):
        # [e0,e1]=e2, [e1,e2]=e1, others zero: Jacobi fails
        from_lie_algebra(QQ, 3, {(0, 1): (0, 0, 1), (1, 2): (0, 1, 0)})


@pytest.mark.parametrize("name", CORPUS)
def test_center_and_derived_dims(name, field):
    T = catalog(name, field)
    assert center(T).dim == SPACE_DIMS[name]["center"]
    assert derived_subsystem(T).dim == SPACE_DIMS[name]["derived"]


@pytest.mark.parametrize("name", CORPUS)
def test_center_is_centralizer_of_whole(name):
    T = catalog(name)
    assert center(T) == centralizer(T, full_space(T))


@pytest.mark.parametrize("name", CORPUS)
def test_center_and_derived_are_ideals(name):
    T = catalog(name)
    assert is_ideal(T, center(T))
    assert is_ideal(T, derived_subsystem(T))


def test_aff2_derived_proper():
    T = catalog("aff2lts")
    assert center(T).is_zero()
    assert derived_subsystem(T) == Subspace.span(QQ, 2, [(0, 1)])


def test_dsum_blocks():
    T = dsum(simple2(), catalog("sl2lts"))
    A, B = summand_blocks(T, [2, 3])
    assert is_direct_sum(T, A, B)
    assert T.name == "dsum(simple2,sl2lts)"
    with pytest.raises(DimensionError):
        summand_blocks(T, [2, 2])


def test_dsum_field_mismatch():
    with pytest.raises(ValueError):
        dsum(simple2(), simple2(FieldSpec.prime(5)))


@pytest.mark.parametrize("bad", ["simple3", "abelian(x)", "dsum(simple2)", "dsum(simple2,(", ""])
def test_catalog_errors(bad):
    with pytest.raises(CatalogError):
        catalog(bad)


def test_nested_dsum():
    T = catalog("dsum(dsum(simple2,abelian(1)),simple2)")
    assert T.dim == 5 and validate(T).passed


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["simple2", "sl2lts", "aff2lts", "dsum(abelian(1),simple2)"]),
       st.sampled_from(FIELDS), st.integers(0, 10 ** 6))
def test_validation_invariant_under_basis_change(name, field, seed):
    T = catalog(name, field)
    P = random_invertible(field, T.dim, random.Random(seed))
    S = transport(T, P)
    assert validate(S).passed
    assert center(S).dim == center(T).dim
    assert derived_subsystem(S).dim == derived_subsystem(T).dim


def _sympy_valid(T):
    from itertools import product
    import sympy as sp
    from sympy_oracle import br, structure_tensor
    n = T.dim
    c = structure_tensor(n, {k: [str(x) for x in v] for k, v in T.brackets().items()})
    e = [sp.eye(n)[:, i] for i in range(n)]
    B = lambda x, y, w: br(c, n, x, y, w)
    for x, y, w in product(e, repeat=3):
        if B(x, y, w) + B(y, w, x) + B(w, x, y) != sp.zeros(n, 1):
            return False
    for a, b, x, y, w in product(e, repeat=5):
        if B(a, b, B(x, y, w)) != B(B(a, b, x), y, w) + B(x, B(a, b, y), w) + B(x, y, B(a, b, w)):
            return False
    return True


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["simple2", "aff2lts", "sl2lts"]), st.integers(0, 10 ** 6))
def test_perturbation_verdict_matches_sympy(name, seed):
    rng = random.Random(seed)
    T = catalog(name)
    br = dict(T.brackets())
    i, j = sorted(rng.sample(range(T.dim), 2))
    k = rng.randrange(T.dim)
    v = list(br.get((i, j, k), (0,) * T.dim))
    v[rng.randrange(T.dim)] += rng.choice([1, 2, -1])
    br[i, j, k] = tuple(v)
    S = LieTripleSystem(QQ, T.dim, br)
    assert validate(S).passed == _sympy_valid(S)
