"""Quasiderivations of T become derivations of Tt + Tt^3.

Run: python demos/03_enlarged_system.py
"""

from __future__ import annotations

from ltskit import build_breve, catalog, compute_der, compute_qder, semidirect_decomposition
from ltskit.derivations import compute_zder
from ltskit.extension import embed_phi, witnesses
from ltskit.lts import validate

for name in ("simple2", "aff2lts", "sl2lts"):
    T = catalog(name)
    B = build_breve(T)
    w = witnesses(T)[0]
    M = embed_phi(B, w)
    print(name, "-> dim", B.system.dim, "valid:", validate(B.system).passed)
    print("  phi(D) for the first witness:", [[str(x) for x in r] for r in M.tolist()])
    d = semidirect_decomposition(T)
    print("  Der(enlarged) =", compute_der(B.system).dim,
          " QDer(T) =", compute_qder(T).dim,
          " ZDer(enlarged) =", compute_zder(B.system).dim,
          " ->", d.status)

# with a center the count fails, which is why the statement needs Z(T) = 0
T = catalog("dsum(abelian(1),simple2)")
B = build_breve(T)
print(T.name, compute_der(B.system).dim, "vs", compute_qder(T).dim + compute_zder(B.system).dim)
