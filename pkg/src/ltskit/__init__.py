"""Exact computations on Lie triple systems.

Operator spaces (derivations, quasiderivations, generalized derivations,
centroids, quasicentroids, central derivations) are computed as nullspaces
of exact linear systems over Q or GF(p).
"""

from __future__ import annotations

from .checks import Check, run_checks
from .derivations import (
    JointSpace,
    OperatorSpace,
    compute_centroid,
    compute_der,
    compute_gder,
    compute_qcentroid,
    compute_qder,
    compute_space,
    compute_zder,
    end_space,
)
from .extension import build_breve, embed_phi, semidirect_decomposition
from .linalg import QQ, FieldSpec, Matrix, Mod, Subspace
from .lts import (
    DEFAULT_CATALOG,
    LieTripleSystem,
    abelian,
    catalog,
    center,
    derived_subsystem,
    dsum,
    simple2,
    sl2lts,
    validate,
)
from .serialization import dump, dumps, load, loads
from .tensor import ker_phi, lemma31_check, phi_matrix, pm_split, qder_equals_end

__version__ = "0.1.0"

__all__ = [
    "Check", "run_checks",
    "JointSpace", "OperatorSpace", "compute_centroid", "compute_der", "compute_gder",
    "compute_qcentroid", "compute_qder", "compute_space", "compute_zder", "end_space",
    "build_breve", "embed_phi", "semidirect_decomposition",
    "QQ", "FieldSpec", "Matrix", "Mod", "Subspace",
    "DEFAULT_CATALOG", "LieTripleSystem", "abelian", "catalog", "center",
    "derived_subsystem", "dsum", "simple2", "sl2lts", "validate",
    "dump", "dumps", "load", "loads",
    "ker_phi", "lemma31_check", "phi_matrix", "pm_split", "qder_equals_end",
]
