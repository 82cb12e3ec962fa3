"""Saturability of ideals with Hilbert function (1, d, d, ...) for d <= 5, and a
screen for sticky ideals between I and its saturation."""

from .errors import CandidateNotBetween, HypothesesNotMet, UnsupportedHilbertFunction, WrongCharacteristic
from .hilbert import hilbert_function
from .ideal import Ideal, _linear, _spiral, colon, colon_degree_piece, minimal_generators, saturate
from .obstruction import (
    Verdict,
    line_and_points_formula,
    line_pattern,
    obfib_dimension,
    recognized_smooth,
    restriction_cokernel,
)

LINE_SEARCH_BUDGET = 500


def _flat_hilbert(I):
    """d when H_{S/I} = (1, d, d, ...), else None."""
    H = hilbert_function(I, 0)
    if not H.certified or H.dimension != 1:
        return None
    d = H.eventual_value
    if H.stabilization_degree > 1 or H[0] != 1:
        return None
    return d


def _products(A, B):
    return [a * b for a in A for b in B]


def _containment(I, polys, label):
    """Certificate dict for span(polys) inside I; the first failing product is the witness."""
    for p in polys:
        if not I.contains(p):
            return {"containment": label, "holds": False, "witness": str(p)}
    return {"containment": label, "holds": True, "checked": len(polys)}


def line_ideal(Isat, budget=LINE_SEARCH_BUDGET):
    """(J, w): J = I^sat : w defines four points on a line, for the first linear w in spiral order."""
    ring = Isat.ring
    for n, v in enumerate(_spiral(ring.ngens, 2)):
        if n >= budget:
            break
        w = _linear(ring, v)
        if Isat.contains(w):
            continue
        J = colon(Isat, w)
        if line_pattern(Isat, J) == 4:
            return J, w
    return None


def decide_saturable(I):
    """Saturated, Saturable, NotSaturable or Inconclusive for H_{S/I} = (1, d, d, ...) with d = #variables <= 5."""
    ring = I.ring
    if ring.characteristic != 0:
        raise WrongCharacteristic("the case analysis assumes characteristic zero")
    if not ring.is_standard:
        raise UnsupportedHilbertFunction("the ring must be standard graded")
    d = _flat_hilbert(I)
    n = ring.ngens
    if d is None or d != n or d > 5:
        raise UnsupportedHilbertFunction(
            f"needs H_(S/I) = (1,d,d,...) with d equal to the number of variables (at most 5); got {hilbert_function(I, 4)}"
        )
    Isat = saturate(I)
    if Isat.issubset(I):
        return Verdict("Saturated", "saturated", [{"saturation_equals_input": True}])
    Hs = hilbert_function(Isat, 6)
    hs = Hs.as_list(6)
    cert_h = {"hilbert_saturation": hs}
    if d <= 3:
        return Verdict(
            "Saturable",
            "unique point over its saturation",
            [cert_h],
            ["characteristic 0"],
        )
    Isat1 = Isat.degree_piece(1)
    if d == 4:
        if hs[:3] == [1, 3, 4]:
            return Verdict("Saturable", "unique point over its saturation", [cert_h], ["characteristic 0"])
        if hs[:5] != [1, 2, 3, 4, 4]:
            raise UnsupportedHilbertFunction(f"unexpected H_(S/I^sat) = {Hs}")
        c = _containment(I, _products(Isat1, Isat1), "(I^sat)^2_2 in I")
        outcome = "Saturable" if c["holds"] else "NotSaturable"
        certs = [cert_h, c]
        if not c["holds"]:
            certs.append(obfib_dimension(I, Isat=Isat).as_dict())
        return Verdict(outcome, "four points on a line", certs, ["characteristic 0"])
    # d == 5
    if hs[2] == 5:
        return Verdict("Saturable", "unique point over its saturation", [cert_h], ["characteristic 0"])
    if hs[2] == 4:
        found = line_ideal(Isat)
        if found is None:
            return Verdict(
                "Inconclusive",
                "line and a point",
                [cert_h],
                reasons=["no witness w with I^sat : w defining four points on a line was found"],
            )
        J, w = found
        c = _containment(I, _products(Isat1, J.degree_piece(1)), "(I^sat)_1 J_1 in I")
        ob = line_and_points_formula(I, Isat, J, 4)
        certs = [cert_h, {"line_ideal": str(J), "witness": str(w)}, c, {"obfib_dim": ob, "method": "line_and_points_formula"}]
        if c["holds"] != (ob != 0):
            raise HypothesesNotMet("containment and ObFib disagree; the line-and-points pattern is off")
        return Verdict("Saturable" if c["holds"] else "NotSaturable", "line and a point", certs, ["characteristic 0"])
    if hs[2] == 3:
        Isat2 = Isat.degree_piece(2)
        c1 = _containment(I, _products(Isat1, Isat2), "(I^sat)^2_3 in I")
        squares = Ideal(ring, [ring.monomial(m) for m in ring.monomials(2)])
        colon1 = colon_degree_piece(I, squares, 1)
        c2 = _containment(I, _products(colon1, Isat1), "(I : S_+^2)_1 (I^sat)_1 in I")
        certs = [cert_h, c1, c2]
        assumptions = ["characteristic 0"]
        if c1["holds"] and c2["holds"]:
            return Verdict("Saturable", "five points on a line", certs, assumptions)
        if c1["holds"]:
            assumptions.append("component count of the five-points-on-a-line locus taken as known, not recomputed")
        return Verdict("NotSaturable", "five points on a line", certs, assumptions)
    raise UnsupportedHilbertFunction(f"unexpected H_(S/I^sat) = {Hs}")


# -- sticky screen ------------------------------------------------------------------
def _auto_candidates(I, Isat):
    yield Isat
    seen = set()
    for g in minimal_generators(Isat):
        deg = g.multidegree()
        if deg in seen or I.contains(g):
            continue
        seen.add(deg)
        J = Ideal(I.ring, I.generators + (g,))
        if J != Isat:
            yield J


def sticky_screen(I, candidates="auto", assert_smooth=False):
    """Look for J with I < J <= I^sat that sticks with I.

    For J = I^sat the ObFib formulas are tried; for every J the restriction
    Hom(J, S/J)_0 -> Hom(I, S/J)_0 is tested for surjectivity, which together
    with smoothness of [J] (recognized for J = I^sat, or asserted) obstructs.
    Returns a dict with ``outcome`` ('Obstructed' or 'Inconclusive').
    """
    Isat = saturate(I)
    if candidates == "auto":
        candidates = list(_auto_candidates(I, Isat))
    else:
        candidates = list(candidates)
        for J in candidates:
            if not (I.issubset(J) and J.issubset(Isat)) or J.issubset(I):
                raise CandidateNotBetween(f"{J} is not strictly between I and its saturation")
    entries = []
    for J in candidates:
        entry = {"J": str(J)}
        is_sat = J == Isat
        if is_sat:
            try:
                rep = obfib_dimension(I, Isat=Isat)
                entry["obfib"] = rep.as_dict()
                if rep.vanishing:
                    entry["certificate"] = "ObFib(I, J) = 0"
                    entries.append(entry)
                    return {"outcome": "Obstructed", "J": str(J), "route": "obfib_vanishes", "entries": entries}
            except HypothesesNotMet as exc:
                entry["obfib"] = f"not computed: {exc}"
        coker = restriction_cokernel(J, I, J)
        entry["hom_cokernel"] = coker
        smooth = recognized_smooth(J) if is_sat else None
        entry["smooth"] = smooth or ("asserted" if assert_smooth else None)
        entries.append(entry)
        if coker == 0 and (smooth or assert_smooth):
            entry["certificate"] = "Hom(J,S/J)_0 -> Hom(I,S/J)_0 onto and [J] smooth"
            return {"outcome": "Obstructed", "J": str(J), "route": "hom_surjective_smooth", "entries": entries}
    return {"outcome": "Inconclusive", "entries": entries}
