"""The bracket as a map on T (x) T (x) T, and membership in QDer via its kernel.

Run: python demos/02_kernel_criterion.py
"""

from __future__ import annotations

import random

from ltskit import catalog, ker_phi, lemma31_check, pm_split
from ltskit import tensor as tc
from ltskit.derivations import random_map
from ltskit.linalg import QQ

T = catalog("sl2lts")
n = T.dim
print("n^3 =", n ** 3, " dim Ker(phi) =", ker_phi(T).dim)

plus, minus = pm_split(T)
print("plus/minus dims:", plus.dim, minus.dim)

# a random map is almost never a quasiderivation of sl2, and D* then moves Ker(phi)
rng = random.Random(0)
for _ in range(3):
    D = random_map(T, rng=rng)
    print(tuple(lemma31_check(T, D)))

# for simple2 the kernel is exactly the symmetric half
S = catalog("simple2")
print("simple2: Ker(phi) == plus ->", ker_phi(S) == pm_split(S)[0])

# e1(x)e1(x)e1 sits in the plus half but generates only Sym^3
v = tc.unit_cube_vector(QQ, 2, 0, 0, 0)
print("submodule from e1e1e1:", tc.generated_submodule(QQ, 2, v).dim, "of", pm_split(2, QQ)[0].dim)
w = tuple(a + b for a, b in zip(tc.unit_cube_vector(QQ, 2, 0, 1, 0), tc.unit_cube_vector(QQ, 2, 1, 0, 0)))
print("submodule from e1e2e1 + e2e1e1:", tc.generated_submodule(QQ, 2, w).dim)
