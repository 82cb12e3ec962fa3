"""Three points, one sliding into the line through the other two.

The ideals of {[1:0:0], [1:t:1], [0:0:1]} converge degreewise to an ideal that
is not saturated.  We compute that limit, its saturation, and then ask whether
the limit is itself a limit of saturated ideals.
"""

from pathlib import Path

from saturable import decide_saturable, hilbert_function, limit_ideal, load_problem, obfib_dimension, saturate

HERE = Path(__file__).parent / "problems"

P = load_problem(HERE / "three_points.family")
L = limit_ideal(P.points(), 4, P.ring)
print("limit ideal:       ", L.ideal)
print("its Hilbert values:", L.hilbert())

Isat = saturate(L.ideal)
print("saturation:        ", Isat, hilbert_function(Isat, 5))

# the three limit points are collinear, so the saturation is a complete
# intersection and the Gorenstein formula applies
ob = obfib_dimension(L.ideal)
print(f"ObFib dimension {ob.dimension} via {ob.method}, jump degree {ob.jump_degree}")

# a nonzero ObFib does not settle anything; the case analysis for
# H = (1,3,3,...) does
v = decide_saturable(L.ideal)
print("verdict:", v.outcome, "|", v.route)
