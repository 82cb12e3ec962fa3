"""Four points on a line in P^3: one containment decides everything.

Both ideals have H = (1,4,4,...) and the same saturation.  Whether
(I^sat)^2 in degree 2 lies in I separates the saturable one from the one
whose neighbours are all nonsaturated, and the answer survives random
coordinate changes.
"""

import random
from pathlib import Path

from saturable import decide_saturable, load_problem, obfib_dimension, verdict
from saturable.replication import change_ideal, random_gl

HERE = Path(__file__).parent / "problems"
rng = random.Random(0)

for name in ("four_points_saturable.ideal", "four_points_nonsaturable.ideal"):
    I = load_problem(HERE / name).ideal()
    v = decide_saturable(I)
    containment = next(c for c in v.certificates if "holds" in c)
    print(f"{name}: {v.outcome}")
    print(f"  (I^sat)^2_2 in I: {containment['holds']}", end="")
    if not containment["holds"]:
        print(f", e.g. {containment['witness']} is missing", end="")
    print()
    print(f"  ObFib dimension {obfib_dimension(I).dimension}, obstruction verdict {verdict(I).outcome}")
    moved = [decide_saturable(change_ideal(I, random_gl(rng, 4))).outcome for _ in range(5)]
    print("  after five random changes of coordinates:", ", ".join(moved))
