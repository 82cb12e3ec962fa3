"""Graded polynomial rings, monomial orders, and exact sparse polynomials.

A polynomial is a dict ``{exponent tuple: coefficient}`` wrapped in an immutable
:class:`Polynomial`.  Term order only matters for printing and for Groebner
computations, so rings carry a default :class:`Order` that can be overridden
per call.
"""

import re
from functools import lru_cache

from .errors import DivisionInInput, ParseError, UnknownVariable
from .field import QQ, field_for

MAX_EXPONENT = 2**31 - 1

_IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Order:
    """A monomial order: grevlex, lex, or an elimination block order.

    ``priority`` lists variable indices from most to least significant; it
    defaults to the ring's variable order.  ``split`` is the number of leading
    (after priority) variables forming the eliminated block.
    """

    def __init__(self, kind="grevlex", split=None, priority=None):
        if kind not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "elim" and not split:
            raise ValueError("an elimination order needs a positive split index")
        self.kind = kind
        self.split = split
        self.priority = tuple(priority) if priority is not None else None
        self._key = self._make_key()

    def _make_key(self):
        pr = self.priority

        def grev(e):
            return (sum(e), tuple(-x for x in reversed(e)))

        if self.kind == "grevlex":
            if pr is None:
                return grev
            return lambda e: grev(tuple(e[i] for i in pr))
        if self.kind == "lex":
            if pr is None:
                return tuple
            return lambda e: tuple(e[i] for i in pr)
        k = self.split
        if pr is None:
            return lambda e: (grev(e[:k]), grev(e[k:]))

        def elim(e):
            p = tuple(e[i] for i in pr)
            return (grev(p[:k]), grev(p[k:]))

        return elim

    def key(self, exponents):
        """Sort key: larger key means larger monomial."""
        return self._key(exponents)

    def compare(self, m1, m2):
        k1, k2 = self._key(m1), self._key(m2)
        return (k1 > k2) - (k1 < k2)

    def __eq__(self, other):
        return isinstance(other, Order) and (self.kind, self.split, self.priority) == (
            other.kind,
            other.split,
            other.priority,
        )

    def __hash__(self):
        return hash((self.kind, self.split, self.priority))

    def __repr__(self):
        extra = ""
        if self.split:
            extra += f", split={self.split}"
        if self.priority is not None:
            extra += f", priority={self.priority}"
        return f"Order({self.kind!r}{extra})"


GREVLEX = Order("grevlex")
LEX = Order("lex")


def compare(m1, m2, order=GREVLEX):
    """-1, 0 or 1 as monomial m1 is smaller, equal or larger than m2."""
    return order.compare(tuple(m1), tuple(m2))


class GradedRing:
    """k[variables] graded by the columns of an r x n matrix of naturals.

    ``parameters`` are extra variables of degree zero (the ``t`` of a
    one-parameter family).  They are appended after the graded variables.
    """

    def __init__(self, variables, grading=None, characteristic=0, order=GREVLEX, parameters=()):
        if isinstance(variables, str):
            variables = variables.split()
        variables = tuple(variables)
        parameters = tuple(parameters)
        names = variables + parameters
        if not variables:
            raise ValueError("a ring needs at least one variable")
        for v in names:
            if not _IDENT.match(v):
                raise ValueError(f"bad variable name {v!r}")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        n = len(variables)
        if grading is None or grading == "standard":
            grading = ((1,) * n,)
        grading = tuple(tuple(int(x) for x in row) for row in grading)
        if not grading or any(len(row) != n for row in grading):
            raise ValueError("grading must be an r x n matrix with one column per variable")
        if any(x < 0 for row in grading for x in row):
            raise ValueError("grading entries must be nonnegative")
        for j in range(n):
            if all(row[j] == 0 for row in grading):
                raise ValueError(f"variable {variables[j]} has degree zero")
        self.variables = variables
        self.parameters = parameters
        self.names = names
        self.ngens = n
        self.nvars = len(names)
        self.grading = tuple(row + (0,) * len(parameters) for row in grading)
        self.rank = len(grading)
        self.field = field_for(characteristic)
        self.characteristic = self.field.characteristic
        self.order = order
        self._index = {v: i for i, v in enumerate(names)}
        self._ident = (names, len(parameters), self.grading, self.characteristic)

    # identity ignores the default order: polynomials do not depend on it
    def __eq__(self, other):
        return isinstance(other, GradedRing) and self._ident == other._ident

    def __hash__(self):
        return hash(self._ident)

    def __repr__(self):
        grading = "standard" if self.is_standard else " / ".join(
            " ".join(map(str, row[: self.ngens])) for row in self.grading
        )
        extra = f", parameters={self.parameters}" if self.parameters else ""
        return f"GradedRing({' '.join(self.variables)}; {grading}; char {self.characteristic}{extra})"

    @property
    def is_standard(self):
        return self.rank == 1 and all(x == 1 for x in self.grading[0][: self.ngens])

    def with_order(self, order):
        r = GradedRing(self.variables, [row[: self.ngens] for row in self.grading],
                       self.characteristic, order, self.parameters)
        return r

    def with_parameters(self, parameters):
        return GradedRing(self.variables, [row[: self.ngens] for row in self.grading],
                          self.characteristic, self.order, parameters)

    def base(self):
        """The ring without parameters."""
        if not self.parameters:
            return self
        return self.with_parameters(())

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    def gen(self, i):
        if isinstance(i, str):
            i = self.index(i)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.ngens)]

    def __getitem__(self, name):
        return self.gen(name)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = self.field(c)
        if not c:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def monomial(self, exponents, coeff=1):
        exponents = tuple(exponents)
        if len(exponents) != self.nvars:
            raise ValueError("exponent vector has the wrong length")
        c = self.field(coeff)
        return Polynomial(self, {exponents: c} if c else {})

    def from_dict(self, terms):
        F = self.field
        out = {}
        for e, c in terms.items():
            c = F(c)
            if c:
                out[tuple(e)] = c
        return Polynomial(self, out)

    def degree_of(self, exponents):
        """Multidegree (tuple of length r) of a monomial."""
        return tuple(sum(g * x for g, x in zip(row, exponents)) for row in self.grading)

    def normalize_degree(self, degree):
        if isinstance(degree, int):
            if self.rank != 1:
                raise ValueError("an integer degree needs an N-graded ring")
            return (degree,)
        return tuple(degree)

    def monomials(self, degree):
        """Monomials of the given multidegree (parameters excluded), descending in grevlex."""
        return list(_monomials(self.grading, self.ngens, self.nvars, self.normalize_degree(degree)))

    def dim(self, degree):
        return len(self.monomials(degree))

    def parse(self, text):
        return parse(text, self)


@lru_cache(maxsize=4096)
def _monomials(grading, ngens, nvars, degree):
    if any(d < 0 for d in degree):
        return ()
    out = []
    pad = (0,) * (nvars - ngens)

    def rec(i, remaining, prefix):
        if i == ngens:
            if all(r == 0 for r in remaining):
                out.append(tuple(prefix) + pad)
            return
        col = [row[i] for row in grading]
        k = 0
        rem = list(remaining)
        while all(r >= 0 for r in rem):
            prefix.append(k)
            rec(i + 1, rem, prefix)
            prefix.pop()
            k += 1
            rem = [r - c for r, c in zip(rem, col)]

    rec(0, degree, [])
    out.sort(key=GREVLEX.key, reverse=True)
    return tuple(out)


class Polynomial:
    """An immutable exact polynomial. ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic protocol -------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, int):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _lift(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials from different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        other = self._lift(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s:
                    t[e] = s
                else:
                    del t[e]
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = self.ring.field(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {e: v * c for e, v in self.terms.items()})
        other = self._lift(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = t.get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial(self.ring, {e: c for e, c in t.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            raise TypeError("use divide_by_monomial or normal forms for polynomial division")
        c = self.ring.field(other)
        return self * (self.ring.field.one / c)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        if n and any(x * n > MAX_EXPONENT for e in self.terms for x in e):
            raise OverflowError("exponent exceeds the supported range")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def mul_term(self, exponents, coeff):
        """self * coeff * x^exponents."""
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, exponents)): c * coeff for e, c in self.terms.items()},
        )

    # -- structure ------------------------------------------------------
    def sorted_terms(self, order=None):
        order = order or self.ring.order
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def lead(self, order=None):
        """(exponents, coefficient) of the leading term."""
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        order = order or self.ring.order
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def lm(self, order=None):
        return self.lead(order)[0]

    def lc(self, order=None):
        return self.lead(order)[1]

    def monic(self, order=None):
        if not self.terms:
            return self
        return self / self.lc(order)

    def coefficient(self, exponents):
        return self.terms.get(tuple(exponents), self.ring.field.zero)

    def multidegree(self):
        """The common multidegree of all terms, or the string 'inhomogeneous'.

        The zero polynomial is reported as inhomogeneous since it has no degree.
        """
        degs = {self.ring.degree_of(e) for e in self.terms}
        if len(degs) != 1:
            return "inhomogeneous"
        return degs.pop()

    def is_homogeneous(self):
        return self.multidegree() != "inhomogeneous"

    def degree(self):
        """Degree in the first grading row (total degree for the standard grading)."""
        d = self.multidegree()
        if d == "inhomogeneous":
            raise ValueError("polynomial is not homogeneous")
        return d[0] if self.ring.rank == 1 else d

    def total_degree(self):
        return max((sum(e[: self.ring.ngens]) for e in self.terms), default=-1)

    def parameter_degree(self):
        k = self.ring.ngens
        return max((sum(e[k:]) for e in self.terms), default=-1)

    def variables_used(self):
        used = set()
        for e in self.terms:
            used.update(i for i, x in enumerate(e) if x)
        return used

    # -- calculus and substitution ---------------------------------------
    def derivative(self, i):
        if isinstance(i, str):
            i = self.ring.index(i)
        F = self.ring.field
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                t[tuple(f)] = c * F(e[i])
        return Polynomial(self.ring, {e: c for e, c in t.items() if c})

    def substitute(self, images, ring=None):
        """Replace variable i by images[i] (a Polynomial in ``ring``) for every i in ``images``.

        ``images`` may be a dict or a full list.  Unmentioned variables map to
        themselves, which requires ``ring`` to contain them at the same index.
        """
        ring = ring or self.ring
        if not isinstance(images, dict):
            images = dict(enumerate(images))
        powers = {}

        def pw(i, k):
            key = (i, k)
            if key not in powers:
                if i in images:
                    powers[key] = images[i] ** k
                else:
                    powers[key] = ring.gen(i) ** k
            return powers[key]

        acc = ring.zero()
        for e, c in self.terms.items():
            term = ring.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * pw(i, k)
            acc = acc + term
        return acc

    def linear_change(self, matrix):
        """Apply the substitution x_i -> sum_j matrix[i][j] x_j on the graded variables."""
        ring = self.ring
        images = {}
        for i, row in enumerate(matrix):
            images[i] = ring.from_dict(
                {tuple(1 if k == j else 0 for k in range(ring.nvars)): a for j, a in enumerate(row) if a}
            )
        return self.substitute(images)

    def evaluate(self, values):
        """Evaluate at a point given as a sequence of field elements (one per variable)."""
        F = self.ring.field
        vals = [F(v) for v in values]
        total = F.zero
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v**k
            total = total + term
        return total

    def specialize(self, name, value):
        """Substitute a field value for one variable (typically a parameter), same ring."""
        i = self.ring.index(name) if isinstance(name, str) else name
        v = self.ring.field(value)
        t = {}
        for e, c in self.terms.items():
            f = e[:i] + (0,) + e[i + 1:]
            add = c * v ** e[i] if e[i] else c
            s = t.get(f)
            t[f] = add if s is None else s + add
        return Polynomial(self.ring, {e: c for e, c in t.items() if c})

    def to_ring(self, ring, index_map=None):
        """Re-home the polynomial in another ring, mapping variable positions by ``index_map``."""
        if index_map is None:
            index_map = [ring.index(n) for n in self.ring.names]
        t = {}
        for e, c in self.terms.items():
            f = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    f[index_map[i]] += k
            t[tuple(f)] = ring.field(c)
        return Polynomial(ring, t)

    # -- printing -------------------------------------------------------
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


def format_monomial(names, e):
    parts = []
    for n, k in zip(names, e):
        if k == 1:
            parts.append(n)
        elif k:
            parts.append(f"{n}^{k}")
    return "*".join(parts)


def format_polynomial(p, order=None):
    if not p.terms:
        return "0"
    F = p.ring.field
    names = p.ring.names
    out = []
    for e, c in p.sorted_terms(order):
        s = F.format(c)
        neg = s.startswith("-")
        if neg:
            s = s[1:]
        mono = format_monomial(names, e)
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# -- parser ----------------------------------------------------------------
_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<id>[A-Za-z][A-Za-z0-9_]*)|(?P<op>[-+*^()/]))"
)


def _tokenize(text):
    pos = 0
    toks = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "op" and val == "/":
            raise DivisionInInput("division is only allowed inside a rational literal", text, start)
        toks.append((kind, val, start))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            p = self.unary()
            return -p if tok[1] == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num" or "/" in tok[1]:
                self.fail("exponent must be a nonnegative integer", tok)
            k = int(tok[1])
            if k > MAX_EXPONENT:
                self.fail("exponent too large", tok)
            base = base**k
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                self.fail("chained exponents are ambiguous; use parentheses")
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        ring = self.ring
        if kind == "num":
            if "/" in val:
                a, b = (int(x) for x in val.split("/"))
                if b == 0:
                    raise DivisionInInput("zero denominator", self.text, pos)
                try:
                    return ring.constant(QQ(a) / b)
                except ZeroDivisionError:
                    raise DivisionInInput("denominator vanishes in this field", self.text, pos) from None
            return ring.constant(int(val))
        if kind == "id":
            if val not in ring._index:
                raise UnknownVariable(f"unknown variable {val!r}", self.text, pos)
            return ring.gen(val)
        if kind == "op" and val == "(":
            p = self.expr()
            close = self.take()
            if close[1] != ")":
                self.fail("expected ')'", close)
            return p
        if kind == "end":
            self.fail("unexpected end of input", tok)
        self.fail(f"unexpected token {val!r}", tok)


def parse(text, ring):
    """Parse a polynomial in the ASCII grammar over ``ring``."""
    return _Parser(text, ring).parse()
