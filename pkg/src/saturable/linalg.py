"""Exact sparse linear algebra over a field.

Vectors are dicts ``{column: coefficient}`` with no zero entries.  Columns are
plain integers; smaller columns are treated as "leading", so an echelon form
pivots on the smallest column of each row.
"""


def _axpy(target, a, row):
    """target += a * row, in place."""
    for c, v in row.items():
        s = target.get(c)
        if s is None:
            target[c] = a * v
        else:
            s = s + a * v
            if s:
                target[c] = s
            else:
                del target[c]


def add(u, v, a=1):
    """u + a*v as a new vector."""
    w = dict(u)
    _axpy(w, a, v)
    return w


def scale(u, a):
    if not a:
        return {}
    return {c: a * v for c, v in u.items()}


class Echelon:
    """An incrementally built semi-echelon basis (pivot -> row with pivot coefficient 1)."""

    def __init__(self):
        self.pivots = {}

    def reduce(self, vec):
        """Reduce a copy of vec against the basis; returns the remainder."""
        r = dict(vec)
        piv = self.pivots
        while r:
            # only columns that carry a pivot can be cancelled
            hits = [c for c in r if c in piv]
            if not hits:
                break
            c = min(hits)
            _axpy(r, -r[c], piv[c])
        return r

    def add(self, vec):
        """Insert vec; returns True when it was independent."""
        r = self.reduce(vec)
        if not r:
            return False
        c = min(r)
        inv = 1 / r[c]
        r = {k: v * inv for k, v in r.items()}
        self.pivots[c] = r
        return True

    def __contains__(self, vec):
        return not self.reduce(vec)

    def __len__(self):
        return len(self.pivots)

    def rows(self):
        """The fully reduced basis, sorted by pivot column."""
        cols = sorted(self.pivots)
        out = {}
        for c in reversed(cols):
            r = dict(self.pivots[c])
            for d in [k for k in r if k != c and k in out]:
                _axpy(r, -r[d], out[d])
            out[c] = r
        return [out[c] for c in cols]


def rref(rows):
    """Reduced row echelon form: (list of rows, list of pivot columns)."""
    E = Echelon()
    for r in rows:
        E.add(r)
    out = E.rows()
    return out, [min(r) for r in out]


def rank(rows):
    E = Echelon()
    for r in rows:
        E.add(r)
    return len(E)


def _one(rows, default=1):
    for r in rows:
        for v in r.values():
            return v / v
    return default


def kernel(rows, columns, one=None):
    """Basis of {x : row . x = 0 for every row}, with x supported on ``columns``."""
    basis, pivots = rref(rows)
    if one is None:
        one = _one(basis)
    pivset = set(pivots)
    out = []
    for f in columns:
        if f in pivset:
            continue
        v = {f: one}
        for r, p in zip(basis, pivots):
            a = r.get(f)
            if a:
                v[p] = -a
        out.append(v)
    return out


def left_kernel(rows):
    """Basis of relations: vectors y (indexed by row number) with sum y_i rows[i] = 0."""
    if not rows:
        return []
    width = 1 + max((max(r) for r in rows if r), default=-1)
    one = _one(rows, None)
    if one is None:
        return [{i: 1} for i in range(len(rows))]
    E = Echelon()
    relations = []
    for i, r in enumerate(rows):
        aug = dict(r)
        aug[width + i] = one
        red = E.reduce(aug)
        if min(red) >= width:
            relations.append({c - width: v for c, v in red.items()})
        E.add(aug)
    return relations


def express(rows, target):
    """Coefficients y with sum y_i rows[i] = target, or None if target is not in the span."""
    if not target:
        return {}
    cols = set(target)
    for r in rows:
        cols.update(r)
    width = 1 + max(cols)
    one = next(iter(target.values()))
    one = one / one
    E = Echelon()
    for i, r in enumerate(rows):
        aug = dict(r)
        aug[width + i] = one
        E.add(aug)
    red = E.reduce(target)
    if any(c < width for c in red):
        return None
    # target - sum(y_i row_i) reduces to the tag part -red, so y = -red
    return {c - width: -v for c, v in red.items()}


class Subspace:
    """A subspace of k^N stored as a canonical reduced echelon basis."""

    def __init__(self, vectors=()):
        E = Echelon()
        for v in vectors:
            if v:
                E.add(v)
        self._echelon = E
        self.basis = E.rows()

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __contains__(self, vec):
        return vec in self._echelon

    def contains_all(self, vectors):
        return all(v in self._echelon for v in vectors)

    def __le__(self, other):
        return other.contains_all(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.basis == other.basis

    def __hash__(self):
        return hash(tuple(tuple(sorted(v.items())) for v in self.basis))

    def __add__(self, other):
        return Subspace(self.basis + other.basis)

    def reduce(self, vec):
        return self._echelon.reduce(vec)

    def intersection(self, other):
        """Intersection computed from relations between the two bases."""
        a, b = self.basis, other.basis
        rel = left_kernel(a + b)
        out = []
        for y in rel:
            v = {}
            for i, c in y.items():
                if i < len(a):
                    _axpy(v, c, a[i])
            if v:
                out.append(v)
        return Subspace(out)

    def complement_in(self, columns, one=1):
        """Columns c whose unit vectors complete this subspace to the whole coordinate space."""
        E = Echelon()
        for v in self.basis:
            E.add(v)
        return [c for c in columns if E.add({c: one})]

    def __repr__(self):
        return f"Subspace(dim={self.dim})"
