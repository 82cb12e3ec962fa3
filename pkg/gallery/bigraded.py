"""A torus-fixed ideal in a Z^2-graded ring.

With deg a0 = deg a2 = (1,0) and deg a1 = (1,1) only monomials divisible by
a1 are positive in both coordinates, so the irrelevant ideal is (a1).  No
closed formula covers this grading; the obstruction group is computed bidegree
by bidegree through the underived Hom route.
"""

from pathlib import Path

from saturable import hilbert_function, load_problem, obfib_table, saturate
from saturable.obstruction import hom0_table

HERE = Path(__file__).parent / "problems"

P = load_problem(HERE / "bb.ideal")
I = P.ideal()
print("grading rows:", P.ring.grading)
print("I^sat = I : (a1)^inf =", saturate(I))
print("ObFib in bidegrees (0, k):", obfib_table(I))
print("Hom(I, S/I) in bidegrees (0, k):", dict(sorted(hom0_table(I, I).items(), reverse=True)))

# the total degree is the first grading row, so the N-graded count still makes sense
print("H_(S/I^2)(9) in the total degree:", hilbert_function(I * I, 9)[9])
