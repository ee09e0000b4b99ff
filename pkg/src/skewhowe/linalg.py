"""Sparse exact matrices over Q(q) (or any field type with +, *, / and is_zero)."""

from .qarith import RatFuncQ, RZERO, RONE


class LinearMapQ:
    """Sparse matrix stored as a list of row dicts {col: value}.

    ``src`` and ``tgt`` optionally carry the column / row basis labels.
    """

    __slots__ = ("nrows", "ncols", "rows", "src", "tgt")

    def __init__(self, nrows, ncols, rows=None, src=None, tgt=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]
        self.src = src
        self.tgt = tgt

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @classmethod
    def zeros(cls, nrows, ncols, src=None, tgt=None):
        return cls(nrows, ncols, src=src, tgt=tgt)

    @classmethod
    def identity(cls, n, basis=None, scalar=RONE):
        scalar = RatFuncQ.coerce(scalar)
        rows = [{i: scalar} for i in range(n)] if scalar else [dict() for _ in range(n)]
        return cls(n, n, rows, src=basis, tgt=basis)

    @classmethod
    def from_entries(cls, nrows, ncols, entries, src=None, tgt=None):
        """Build from an iterable of (row, col, value); repeated positions are summed."""
        rows = [dict() for _ in range(nrows)]
        for r, c, v in entries:
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError("entry (%d, %d) outside %dx%d" % (r, c, nrows, ncols))
            v = RatFuncQ.coerce(v)
            row = rows[r]
            s = row.get(c)
            s = v if s is None else s + v
            if s:
                row[c] = s
            else:
                row.pop(c, None)
        return cls(nrows, ncols, rows, src, tgt)

    @classmethod
    def from_dense(cls, data):
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        return cls.from_entries(len(data), ncols,
                                ((i, j, v) for i, r in enumerate(data) for j, v in enumerate(r) if v))

    def entries(self):
        for i, row in enumerate(self.rows):
            for j in sorted(row):
                yield i, j, row[j]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, RZERO)

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def is_zero(self):
        return all(not r for r in self.rows)

    def copy(self):
        return LinearMapQ(self.nrows, self.ncols, [dict(r) for r in self.rows], self.src, self.tgt)

    def __eq__(self, other):
        if not isinstance(other, LinearMapQ):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch %s vs %s" % (self.shape, other.shape))
        rows = []
        for a, b in zip(self.rows, other.rows):
            r = dict(a)
            for j, v in b.items():
                s = r.get(j)
                s = v if s is None else s + v
                if s:
                    r[j] = s
                else:
                    del r[j]
            rows.append(r)
        return LinearMapQ(self.nrows, self.ncols, rows, self.src, self.tgt)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = RatFuncQ.coerce(c)
        if not c:
            return LinearMapQ.zeros(self.nrows, self.ncols, self.src, self.tgt)
        rows = [{j: v * c for j, v in r.items()} for r in self.rows]
        return LinearMapQ(self.nrows, self.ncols, rows, self.src, self.tgt)

    def __rmul__(self, c):
        return self.scale(c)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("cannot compose %s with %s" % (self.shape, other.shape))
        orows = other.rows
        rows = []
        for a in self.rows:
            acc = {}
            for k, v in a.items():
                for j, w in orows[k].items():
                    s = acc.get(j)
                    acc[j] = v * w if s is None else s + v * w
            rows.append({j: v for j, v in acc.items() if v})
        return LinearMapQ(self.nrows, other.ncols, rows, other.src, self.tgt)

    def transpose(self):
        rows = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                rows[j][i] = v
        return LinearMapQ(self.ncols, self.nrows, rows, self.tgt, self.src)

    def map_entries(self, f):
        rows = []
        for r in self.rows:
            nr = {}
            for j, v in r.items():
                w = f(v)
                if w:
                    nr[j] = w
            rows.append(nr)
        return LinearMapQ(self.nrows, self.ncols, rows, self.src, self.tgt)

    def to_dense(self):
        return [[r.get(j, RZERO) for j in range(self.ncols)] for r in self.rows]

    def rank(self):
        return len(rref([dict(r) for r in self.rows], self.ncols)[1])

    def nullspace(self):
        """Basis of {x : self @ x = 0} as a list of sparse dicts."""
        red, piv = rref([dict(r) for r in self.rows], self.ncols)
        return _kernel_from_rref(red, piv, self.ncols)

    def inverse(self):
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = [dict(r) for r in self.rows]
        for i in range(n):
            aug[i][n + i] = RONE
        red, piv = rref(aug, 2 * n, ncols_pivot=n)
        if len(piv) < n:
            raise ZeroDivisionError("singular matrix (rank %d < %d)" % (len(piv), n))
        rows = [None] * n
        for r, c in zip(red, piv):
            rows[c] = {j - n: v for j, v in r.items() if j >= n}
        return LinearMapQ(n, n, rows, self.tgt, self.src)

    def kron(self, other):
        """Kronecker product; row (i, k) -> i * other.nrows + k."""
        rows = []
        for a in self.rows:
            for b in other.rows:
                r = {}
                for j, v in a.items():
                    base = j * other.ncols
                    for l, w in b.items():
                        r[base + l] = v * w
                rows.append(r)
        return LinearMapQ(self.nrows * other.nrows, self.ncols * other.ncols, rows)

    def __repr__(self):
        return "LinearMapQ(%dx%d, nnz=%d)" % (self.nrows, self.ncols, self.nnz())


def _cost(v):
    """Pivot preference: units first, then short numerators."""
    if isinstance(v, RatFuncQ):
        size = len(v.num.cs) + len(v.den.cs) - 1
        unit = size == 1 and abs(v.num.cs[0]) == 1
        return (0 if unit else 1, size)
    return (0, 0)


def rref(rows, ncols, ncols_pivot=None):
    """Sparse Gauss-Jordan elimination in place.

    Returns (reduced rows, pivot columns); rows are normalized so the pivot
    entry is 1 and pivot columns are cleared in every other row.
    """
    if ncols_pivot is None:
        ncols_pivot = ncols
    active = [r for r in rows if r]
    done = []
    pivots = []
    # column -> set of active row positions is rebuilt lazily; matrices are small
    while active:
        best = None
        for ri, r in enumerate(active):
            for c, v in r.items():
                if c >= ncols_pivot:
                    continue
                key = (_cost(v), len(r), c)
                if best is None or key < best[0]:
                    best = (key, ri, c)
            if best is not None and best[0][0] == (0, 1) and best[0][1] <= 2:
                break
        if best is None:
            break
        _, ri, c = best
        prow = active.pop(ri)
        inv = RONE / prow[c]
        if inv != RONE:
            prow = {j: v * inv for j, v in prow.items()}
        for group in (active, done):
            for r in group:
                f = r.get(c)
                if f is None:
                    continue
                for j, v in prow.items():
                    s = r.get(j)
                    s = -f * v if s is None else s - f * v
                    if s:
                        r[j] = s
                    else:
                        r.pop(j, None)
        active = [r for r in active if r]
        done.append(prow)
        pivots.append(c)
    return done, pivots


def _kernel_from_rref(red, piv, ncols):
    pivset = set(piv)
    free = [j for j in range(ncols) if j not in pivset]
    basis = []
    for f in free:
        vec = {f: RONE}
        for r, c in zip(red, piv):
            v = r.get(f)
            if v is not None:
                vec[c] = -v
        basis.append(vec)
    return basis


def stack_rows(mats):
    """Vertical concatenation of matrices with equal column counts."""
    ncols = mats[0].ncols
    rows = []
    for m in mats:
        if m.ncols != ncols:
            raise ValueError("column mismatch")
        rows.extend(dict(r) for r in m.rows)
    return LinearMapQ(len(rows), ncols, rows)


def block_diag(mats):
    rows = []
    off_c = 0
    for m in mats:
        for r in m.rows:
            rows.append({off_c + j: v for j, v in r.items()})
        off_c += m.ncols
    return LinearMapQ(len(rows), off_c, rows)
