from __future__ import annotations

import random
from itertools import product

import pytest

from ltskit.linalg import QQ, FieldSpec, Matrix, inverse, mat_vec
from ltskit.lts import LieTripleSystem, catalog

GF5 = FieldSpec.prime(5)
FIELDS = [QQ, GF5]


def transport(T: LieTripleSystem, P: Matrix, name: str | None = None) -> LieTripleSystem:
    """Rewrite T in the basis given by the columns of the invertible matrix P."""
    n = T.dim
    Pinv = inverse(P)
    cols = [P.column(i) for i in range(n)]
    brackets = {}
    for i, j, k in product(range(n), repeat=3):
        if i < j:
            v = mat_vec(Pinv, T.bracket(cols[i], cols[j], cols[k]))
            if any(v):
                brackets[i, j, k] = v
    return LieTripleSystem(T.field, n, brackets, name or f"{T.name}~")


def random_invertible(field, n: int, rng: random.Random) -> Matrix:
    while True:
        P = Matrix(field, [[field.random_element(rng, 2) for _ in range(n)] for _ in range(n)])
        try:
            inverse(P)
        except ZeroDivisionError:
            continue
        return P


@pytest.fixture(params=FIELDS, ids=["Q", "GF5"])
def field(request):
    return request.param


@pytest.fixture
def s2():
    return catalog("simple2")
