"""Plain-text problem files.

    ring: a0 a1 a2
    grading: standard            # or rows: 1 1 1 / 0 1 0
    char: 0
    ideal: a0*a1, a1^2, ...

Other payload keys: ``form:`` (a dual form in x0..xn), ``family(e):`` (degree-e
elements with the parameter t), ``points:`` ([c0, c1, ...] separated by ``;``,
coordinates may involve t), ``target:`` (a second ideal), ``limit-forms(e):``
and ``exponents(e):`` for limit-form claims, ``semantics:`` and ``label:``.
A line without a key continues the previous one; ``#`` starts a comment.
"""

import hashlib
import re
from pathlib import Path

from .apolarity import CONTRACTION, DIFFERENTIATION, DualPolynomial, dual_ring
from .errors import ParseError
from .ideal import Ideal
from .ring import GradedRing

_KEY = re.compile(r"^\s*([a-z][a-z\-]*)(?:\((\d+)\))?\s*:(.*)$")
_HEADERS = ("ring", "grading", "char")
_PAYLOAD = ("ideal", "form", "family", "points", "target", "limit-forms", "exponents", "semantics", "label")


class Problem:
    def __init__(self, ring, entries, text, path=None):
        self.ring = ring
        self.entries = entries  # key -> (line, value) or key -> {e: (line, value)}
        self.text = text
        self.path = path

    @property
    def input_hash(self):
        return hashlib.sha256(self.text.encode()).hexdigest()

    @property
    def label(self):
        return self.entries.get("label", (0, self.path or ""))[1].strip()

    def has(self, key):
        return key in self.entries

    def _need(self, key):
        if key not in self.entries:
            raise ParseError(f"the problem file has no '{key}:' section")
        return self.entries[key]

    def _polys(self, ring, line, value):
        out = []
        for part in _split_commas(value):
            try:
                out.append(ring.parse(part))
            except ParseError as exc:
                raise ParseError(str(exc), line=line) from None
        return out

    def ideal(self, key="ideal"):
        line, value = self._need(key)
        gens = self._polys(self.ring, line, value)
        try:
            return Ideal(self.ring, gens)
        except ValueError as exc:
            raise ParseError(str(exc), line=line) from None

    def semantics(self):
        s = self.entries.get("semantics", (0, CONTRACTION))[1].strip() or CONTRACTION
        if s not in (CONTRACTION, DIFFERENTIATION):
            raise ParseError(f"unknown semantics {s!r}", line=self.entries["semantics"][0])
        return s

    def form(self):
        line, value = self._need("form")
        D = dual_ring(self.ring, ())
        (F,) = self._polys(D, line, value) or [None]
        if F is None:
            raise ParseError("empty form", line=line)
        if not F.is_homogeneous():
            raise ParseError("the form is not homogeneous", line=line)
        return DualPolynomial(F, self.semantics())

    def family_ring(self):
        return self.ring.with_parameters(("t",))

    def _indexed(self, key, ring):
        out = {}
        for e, (line, value) in sorted(self.entries.get(key, {}).items()):
            out[e] = self._polys(ring, line, value)
        return out

    def family(self):
        fam = self._indexed("family", self.family_ring())
        if not fam:
            raise ParseError("the problem file has no 'family(e):' section")
        return fam

    def limit_forms(self):
        return self._indexed("limit-forms", self.family_ring())

    def exponents(self):
        out = {}
        for e, (line, value) in self.entries.get("exponents", {}).items():
            try:
                out[e] = [int(v) for v in value.replace(",", " ").split()]
            except ValueError:
                raise ParseError("exponents must be integers", line=line) from None
        return out

    def points(self):
        line, value = self._need("points")
        R = dual_ring(self.ring, ("t",))
        pts = []
        for chunk in value.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            if not (chunk.startswith("[") and chunk.endswith("]")):
                raise ParseError(f"a point looks like [c0, c1, ...], got {chunk!r}", line=line)
            coords = self._polys(R, line, chunk[1:-1])
            if len(coords) != self.ring.ngens:
                raise ParseError(f"a point needs {self.ring.ngens} coordinates", line=line)
            if any(sum(e[: R.ngens]) for c in coords for e in c.terms):
                raise ParseError("point coordinates may only involve t", line=line)
            pts.append(coords)
        return pts


def _split_commas(text):
    return [p.strip() for p in text.split(",") if p.strip()]


def _grading(value, line):
    v = value.strip()
    if v in ("", "standard"):
        return None
    try:
        return [[int(x) for x in row.split()] for row in v.split("/")]
    except ValueError:
        raise ParseError(f"grading rows are integers separated by '/', got {v!r}", line=line) from None


def parse_problem(text, path=None):
    """Parse problem-file text; errors carry the offending line."""
    entries = {}
    current = None
    for n, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _KEY.match(line)
        if m:
            key, idx, value = m.group(1), m.group(2), m.group(3)
            if key not in _HEADERS + _PAYLOAD:
                raise ParseError(f"unknown key {key!r}", line=n)
            indexed = key in ("family", "limit-forms", "exponents")
            if indexed != (idx is not None):
                raise ParseError(f"'{key}' {'needs' if indexed else 'takes no'} a degree in parentheses", line=n)
            if indexed:
                slot = entries.setdefault(key, {})
                if int(idx) in slot:
                    raise ParseError(f"duplicate {key}({idx})", line=n)
                slot[int(idx)] = [n, value]
                current = slot[int(idx)]
            else:
                if key in entries:
                    raise ParseError(f"duplicate key {key!r}", line=n)
                entries[key] = [n, value]
                current = entries[key]
        elif current is None:
            raise ParseError("expected 'key: value'", line=n)
        else:
            current[1] += " " + line.strip()
    if "ring" not in entries:
        raise ParseError("missing 'ring:' header", line=1)
    names = entries["ring"][1].split()
    if not names:
        raise ParseError("'ring:' lists no variables", line=entries["ring"][0])
    grading = _grading(entries.get("grading", [0, "standard"])[1], entries.get("grading", [0])[0])
    char_line, char_text = entries.get("char", [0, "0"])
    try:
        char = int(char_text.strip() or 0)
    except ValueError:
        raise ParseError(f"char must be an integer, got {char_text.strip()!r}", line=char_line) from None
    try:
        ring = GradedRing(names, grading, char)
    except (ValueError, TypeError) as exc:
        raise ParseError(str(exc), line=entries["ring"][0]) from None
    frozen = {}
    for k, v in entries.items():
        frozen[k] = {e: tuple(x) for e, x in v.items()} if isinstance(v, dict) else tuple(v)
    return Problem(ring, frozen, text, path)


def load_problem(path):
    p = Path(path)
    return parse_problem(p.read_text(encoding="utf-8"), str(path))
