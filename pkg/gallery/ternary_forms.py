"""Cactus-rank certificates for ternary forms.

Each certificate is a saturated one-dimensional ideal inside Ann(F); its
degree bounds the cactus rank.  The checks are recomputed on construction,
and exclude_wild searches small coordinate changes for one of four
containment patterns.
"""

import random
from pathlib import Path

from saturable import cactus_via_square, exclude_wild, load_problem, special_case_3, special_case_4
from saturable.apolarity import dual_ring
from saturable.rank3 import apolar_ideal, primal_ring
from saturable.replication import plane, random_ternary

HERE = Path(__file__).parent / "problems"

square = load_problem(HERE / "square.form").form()
S = primal_ring(square)
cert = cactus_via_square(square, S.gen(0))
print(f"F = {square}: Ann(F) = {apolar_ideal(square)[0]}")
print("  square route:", cert.ideal, "r =", cert.r, cert.checks)

sextic = load_problem(HERE / "sextic.form").form()
cert = special_case_3(sextic)
print(f"F = {sextic}")
print("  special case 3:", cert.ideal, "r =", cert.r, cert.notes)
rep = exclude_wild(sextic, assumed_br=9)
print("  exclude_wild:", rep["status"], "via", rep["pattern"], "->", rep["conclusion"])

rng = random.Random(1)
D = dual_ring(plane())
F = random_ternary(rng, D, 6, lambda m: m[0] == 0 or m[2] == 0 or m == (1, 0, 5))
cert = special_case_4(F)
print(f"F = {F}")
print("  special case 4:", cert.ideal, "r =", cert.r, "degree", cert.degree)

F = random_ternary(rng, D, 7, density=1.0)
print("a dense septic in the given coordinates:", exclude_wild(F, 10, search=False)["status"])
