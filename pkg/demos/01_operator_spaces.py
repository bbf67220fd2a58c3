"""Operator spaces of a few small Lie triple systems.

Run: python demos/01_operator_spaces.py
"""

from __future__ import annotations

from ltskit import catalog, compute_der, compute_qder, compute_space, validate
from ltskit.linalg import FieldSpec

TAGS = ("zder", "der", "qder", "gder", "c", "qc")

# the 2-dim simple system: [e1,e2,e1] = -e1, [e1,e2,e2] = e2
T = catalog("simple2")
print(T, "valid:", validate(T).passed)

# one derivation up to scale, but every map is a quasiderivation
(D,) = compute_der(T).maps()
print("Der basis:", [[str(x) for x in r] for r in D.tolist()])
print("dim QDer =", compute_qder(T).dim, "of", T.dim ** 2)

# the joint space keeps the witnesses D'; its first block is QDer
J = compute_qder(T)
for d, dprime in J.tuples()[:2]:
    print("D =", [[str(x) for x in r] for r in d.tolist()], " D' =", [[str(x) for x in r] for r in dprime.tolist()])

print()
print(f"{'system':28}" + "".join(f"{t:>6}" for t in TAGS))
for name in ("abelian(2)", "simple2", "aff2lts", "sl2lts", "dsum(abelian(1),simple2)"):
    S = catalog(name)
    print(f"{name:28}" + "".join(f"{compute_space(S, t).dim:>6}" for t in TAGS))

# same numbers over GF(5)
S = catalog("sl2lts", FieldSpec.prime(5))
print("sl2lts over GF(5):", {t: compute_space(S, t).dim for t in TAGS})
