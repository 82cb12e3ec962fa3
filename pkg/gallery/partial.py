"""A nonsaturated ideal whose obstruction group does not vanish.

Here S/I^sat is not Gorenstein, so neither closed formula applies; the
underived Hom computation still gives the dimension, and an explicit
one-parameter deformation shows that I moves off its saturation's fiber.
"""

from pathlib import Path

from saturable import hilbert_function, ideal, load_problem, obfib_dimension, saturate
from saturable.errors import HypothesesNotMet
from saturable.hilbert import classify_quotient
from saturable.obstruction import restriction_cokernel

HERE = Path(__file__).parent / "problems"

I = load_problem(HERE / "partial.ideal").ideal()
Isat = saturate(I)
print("H_(S/I)     =", hilbert_function(I, 7))
print("I^sat       =", Isat, " H =", hilbert_function(Isat, 7))
print("S/I^sat:   ", classify_quotient(Isat).as_dict())

try:
    obfib_dimension(I)
except HypothesesNotMet as exc:
    print("formulas do not apply:", exc)
print("ObFib via underived Hom:", obfib_dimension(I, method="underived_hom").dimension)
print("coker Hom(I^sat, S/I^sat)_0 -> Hom(I, S/I^sat)_0:", restriction_cokernel(Isat, I, Isat))

# the tangent direction that is not restricted from I^sat, integrated
I1 = ideal(I.ring, "a0*a1^2 + a0^2*a2, a0*a1^3, a0^2*a1^2, a0^3*a1, a0^5, a1^6")
print("deformed member I_1: H =", hilbert_function(I1, 7))
print("its saturation:", saturate(I1), " H =", hilbert_function(saturate(I1), 7))
