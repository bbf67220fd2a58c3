from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

import sympy_oracle
from conftest import GF5, random_invertible, transport
from oracle_values import CORPUS, SPACE_DIMS
from ltskit import derivations as dv
from ltskit.linalg import QQ, Matrix
from ltskit.lts import catalog, simple2

TAGS = ("der", "qder", "gder", "c", "qc", "zder")


def _oracle_dims(T, p=None):
    br = {k: [str(x) for x in v] for k, v in T.brackets().items()}
    return {tag: sympy_oracle.space_dim(T.dim, br, tag, p) for tag in TAGS}


@pytest.mark.parametrize("name", CORPUS)
def test_dims_match_frozen_oracle(name, field):
    T = catalog(name, field)
    got = {tag: dv.compute_space(T, tag).dim for tag in TAGS}
    assert got == {tag: SPACE_DIMS[name][tag] for tag in TAGS}


@pytest.mark.parametrize("name", ["simple2", "aff2lts", "sl2lts", "dsum(abelian(1),simple2)"])
def test_dims_match_live_oracle(name):
    T = catalog(name)
    assert {tag: dv.compute_space(T, tag).dim for tag in TAGS} == _oracle_dims(T)


@settings(max_examples=8, deadline=None)
@given(st.sampled_from(["simple2", "aff2lts", "dsum(abelian(1),simple2)"]),
       st.sampled_from([None, 5]), st.integers(0, 10 ** 6))
def test_dims_after_basis_change(name, p, seed):
    field = QQ if p is None else GF5
    T = catalog(name, field)
    S = transport(T, random_invertible(field, T.dim, random.Random(seed)))
    got = {tag: dv.compute_space(S, tag).dim for tag in TAGS}
    assert got == {tag: SPACE_DIMS[name][tag] for tag in TAGS}
    assert got == _oracle_dims(S, p)


@pytest.mark.parametrize("name", CORPUS)
def test_basis_elements_satisfy_definitions(name):
    T = catalog(name)
    for tag in ("der", "c", "qc", "zder"):
        for M in dv.compute_space(T, tag).maps():
            assert dv.satisfies(T, tag, [M])
    for tag in ("qder", "gder"):
        for maps in dv._joint(T, tag).tuples():
            assert dv.satisfies(T, tag, list(maps))


@pytest.mark.parametrize("name", CORPUS)
def test_inclusion_chain(name, field):
    T = catalog(name, field)
    chain = [dv.compute_zder(T), dv.compute_der(T), dv.compute_qder(T).projection,
             dv.compute_gder(T).projection, dv.end_space(T)]
    for a, b in zip(chain, chain[1:]):
        assert a <= b
    assert dv.compute_centroid(T) <= dv.compute_qcentroid(T)


def test_der_simple2_basis():
    # one-dimensional, spanned by diag(1, -1)
    D, = dv.compute_der(simple2()).maps()
    assert D == Matrix(QQ, [[1, 0], [0, -1]])


def test_qder_is_end_for_simple2_and_abelian():
    assert dv.compute_qder(simple2()).projection == dv.end_space(simple2())
    for n in range(1, 5):
        T = catalog(f"abelian({n})")
        assert dv.compute_qder(T).dim == n * n


def test_witness_lookup():
    T = catalog("sl2lts")
    J = dv.compute_qder(T)
    for D in J.projection.maps():
        D1, = J.witness(D)[1:]
        assert dv.satisfies(T, "qder", [D, D1])
    assert J.witness(Matrix(QQ, [[1, 0, 0], [0, 0, 0], [0, 0, 0]])) is None


def test_identity_residuals_report_failure():
    T = simple2()
    bad = Matrix(QQ, [[1, 0], [0, 0]])
    res = dv.identity_residuals(T, "der", [bad])
    assert res and all(any(r[2]) for r in res)
    with pytest.raises(ValueError):
        dv.identity_residuals(T, "qder", [bad])


def test_centroid_witness_pair(field):
    # (D, 3D) is a quasiderivation pair for D in C
    for name in CORPUS:
        T = catalog(name, field)
        J = dv.compute_qder(T)
        for D in dv.compute_centroid(T).maps():
            assert J.contains([D, D.scale(3)])


def test_quasicentroid_witness_pair_fails_with_center():
    # D maps the simple2 block onto the center: D is in QC, yet (D, 3D) is not a witness
    T = catalog("dsum(abelian(1),simple2)")
    D = Matrix(QQ, [[0, 1, 0], [0, 0, 0], [0, 0, 0]])
    assert D in dv.compute_qcentroid(T)
    assert not dv.compute_qder(T).contains([D, D.scale(3)])
    assert D in dv.compute_qder(T).projection  # with witness 0 instead
    assert dv.compute_qder(T).contains([D, Matrix.zeros(QQ, 3)])


@pytest.mark.parametrize("name", CORPUS)
def test_product_containments(name, field):
    T = catalog(name, field)
    der, C, QC = dv.compute_der(T), dv.compute_centroid(T), dv.compute_qcentroid(T)
    qder, gder = dv.compute_qder(T).projection, dv.compute_gder(T).projection
    assert dv.bracket_span(der, C) <= C
    assert dv.bracket_span(qder, QC) <= QC
    assert dv.composition_span(C, der) <= der
    assert C <= qder
    assert dv.bracket_span(QC, QC) <= qder
    assert qder + QC <= gder
    for S in (gder, qder, C, der):
        assert dv.is_lie_subalgebra(S)
    assert dv.is_lie_ideal_in(dv.compute_zder(T), der)
    assert dv.jordan_product_span(QC, QC) <= QC
    assert dv.bracket_span(C, QC) <= dv.hom_into_center(T)


def test_hom_into_center_dims():
    assert dv.hom_into_center(catalog("abelian(3)")).dim == 9
    assert dv.hom_into_center(catalog("dsum(abelian(1),simple2)")).dim == 3
    assert dv.hom_into_center(simple2()).is_zero()


def test_jordan_identity_on_random_maps(field):
    rng = random.Random(7)
    for _ in range(10):
        xs = [dv.random_map(field, 3, rng) for _ in range(4)]
        assert dv.jordan_identity_holds(*xs)
    assert dv.jordan_identity_check([dv.random_map(field, 2, rng) for _ in range(5)])


def test_random_map_is_seeded():
    a = dv.random_map(QQ, 3, random.Random(11))
    b = dv.random_map(QQ, 3, random.Random(11))
    assert a == b


def test_ker_im_split():
    D = Matrix(QQ, [[1, 0], [0, 0]])
    K, I = dv.ker_im_split(D)
    assert K.dim == 1 and I.dim == 1
    assert dv.ker_im_split(Matrix(QQ, [[0, 1], [0, 0]])) is None


@pytest.mark.parametrize("name", CORPUS)
def test_centroid_kernel_image_are_ideals(name):
    T = catalog(name)
    for D in dv.compute_centroid(T).maps():
        a = dv.centroid_element_analysis(T, D)
        assert a.kernel_is_ideal and a.image_is_ideal


def test_centroid_membership_enforced():
    with pytest.raises(dv.MembershipError):
        dv.centroid_element_analysis(simple2(), Matrix(QQ, [[1, 0], [0, 0]]))
    with pytest.raises(dv.MembershipError):
        dv.qc_element_split(simple2(), Matrix(QQ, [[0, 1], [0, 0]]))


def test_qc_element_split_simple2(field):
    T = simple2(field)
    K, I = dv.qc_element_split(T, Matrix.identity(field, 2).scale(3))
    assert K.is_zero() and I.is_full()
    assert dv.qc_element_split(T, Matrix.zeros(field, 2)) is not None


def test_qc_element_split_needs_trivial_center():
    T = catalog("dsum(abelian(1),simple2)")
    assert dv.qc_element_split(T, Matrix.identity(QQ, 3)) is None


def test_scalar_check_examples():
    T = simple2()
    r = dv.qc_semisimple_scalar_check(T, Matrix.identity(QQ, 2).scale(3), indecomposable=True)
    assert r.status == "pass" and r.eigenvalue == 3
    A = catalog("abelian(2)")
    rot = Matrix(QQ, [[0, -1], [1, 0]])
    assert dv.qc_semisimple_scalar_check(A, rot).status == "skipped(field)"
    A5 = catalog("abelian(2)", GF5)
    # over GF(5) the rotation splits with distinct roots 2 and 3; abelian(2) has a center
    r5 = dv.qc_semisimple_scalar_check(A5, Matrix(GF5, rot.tolist()), indecomposable=True)
    assert r5.status == "skipped(hypothesis)"
    N = Matrix(QQ, [[0, 1], [0, 0]])
    assert dv.qc_semisimple_scalar_check(A, N).status == "skipped(hypothesis)"


def test_indecomposability_helper():
    assert dv.centroid_idempotent_test(simple2()) is True
    assert dv.centroid_idempotent_test(catalog("dsum(simple2,simple2)")) is False


def test_witness_freedom_vanishes_on_derived():
    for name in CORPUS:
        assert dv.witness_kernel_on_derived(catalog(name))


def test_operator_space_helpers():
    T = simple2()
    der = dv.compute_der(T)
    assert dv.span_maps(T, QQ, der.maps()) == der
    assert (der & dv.compute_centroid(T)).is_zero()
    assert (der + dv.compute_centroid(T)).dim == 2
    with pytest.raises(KeyError):
        dv.compute_space(T, "nope")
