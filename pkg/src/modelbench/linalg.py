"""Exact linear algebra over the rationals.

Matrices are lists of rows of Fractions; an m x n matrix represents a map
Q^n -> Q^m acting on column vectors.  Everything here is deterministic:
pivots are chosen left to right, candidate rows top to bottom.
"""

from __future__ import annotations

from fractions import Fraction

Vec = list[Fraction]
Mat = list[list[Fraction]]


def frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def zeros(m: int, n: int) -> Mat:
    return [[Fraction(0)] * n for _ in range(m)]


def identity(n: int) -> Mat:
    return [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]


def shape(a: Mat) -> tuple[int, int]:
    return (len(a), len(a[0]) if a else 0)


def mat(rows, width: int | None = None) -> Mat:
    """Normalize entries to Fraction; `width` pins the column count of an
    empty/zero-row matrix."""
    out = [[frac(x) for x in row] for row in rows]
    if width is not None:
        for row in out:
            if len(row) != width:
                raise ValueError("ragged matrix")
    return out


def mat_mul(a: Mat, b: Mat) -> Mat:
    ma, na = shape(a)
    mb, nb = shape(b)
    if ma == 0 or (na == 0 and mb == 0):
        # width information is erased on empty matrices; trust the caller
        return [[Fraction(0)] * nb for _ in range(ma)]
    if na != mb:
        raise ValueError(f"shape mismatch {ma}x{na} * {mb}x{nb}")
    out = zeros(ma, nb)
    for i in range(ma):
        arow = a[i]
        orow = out[i]
        for k in range(na):
            x = arow[k]
            if x:
                brow = b[k]
                for j in range(nb):
                    if brow[j]:
                        orow[j] += x * brow[j]
    return out


def mat_vec(a: Mat, v: Vec) -> Vec:
    m, n = shape(a)
    if m == 0 or (n == 0 and len(v) == 0):
        return [Fraction(0)] * m
    if n != len(v):
        raise ValueError("shape mismatch in mat_vec")
    return [sum((a[i][k] * v[k] for k in range(n) if v[k]), Fraction(0)) for i in range(m)]


def mat_add(a: Mat, b: Mat) -> Mat:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Mat) -> Mat:
    c = frac(c)
    return [[c * x for x in row] for row in a]


def mat_eq(a: Mat, b: Mat) -> bool:
    return shape(a) == shape(b) and all(ra == rb for ra, rb in zip(a, b))


def is_zero_mat(a: Mat) -> bool:
    return all(not x for row in a for x in row)


def transpose(a: Mat) -> Mat:
    m, n = shape(a)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def rref(a: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form; returns (rref, pivot column indices)."""
    m, n = shape(a)
    r = [row[:] for row in a]
    pivots: list[int] = []
    row = 0
    for col in range(n):
        sel = next((i for i in range(row, m) if r[i][col]), None)
        if sel is None:
            continue
        r[row], r[sel] = r[sel], r[row]
        inv = Fraction(1) / r[row][col]
        r[row] = [x * inv for x in r[row]]
        for i in range(m):
            if i != row and r[i][col]:
                c = r[i][col]
                r[i] = [x - c * y for x, y in zip(r[i], r[row])]
        pivots.append(col)
        row += 1
        if row == m:
            break
    return r, pivots


def rank(a: Mat) -> int:
    return len(rref(a)[1])


def nullspace(a: Mat, width: int | None = None) -> list[Vec]:
    """Basis of {v : a v = 0}, one vector per free column, deterministic.
    `width` pins the variable count when `a` has no rows."""
    m, n = shape(a)
    if m == 0:
        n = width if width is not None else n
        return [[Fraction(1 if i == j else 0) for i in range(n)] for j in range(n)]
    r, pivots = rref(a)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for j in free:
        v = [Fraction(0)] * n
        v[j] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -r[i][j]
        basis.append(v)
    return basis


def solve(a: Mat, b: Vec) -> Vec | None:
    """One solution of a x = b, or None."""
    m, n = shape(a)
    if len(b) != m:
        raise ValueError("rhs length mismatch")
    aug = [a[i][:] + [b[i]] for i in range(m)] if m else []
    if m == 0:
        return [Fraction(0)] * n
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, pc in enumerate(pivots):
        x[pc] = r[i][n]
    return x


def solve_affine(a: Mat, b: Vec) -> tuple[Vec, list[Vec]] | None:
    """Full solution set of a x = b as (particular, kernel basis)."""
    x = solve(a, b)
    if x is None:
        return None
    return x, nullspace(a)


def column_space_basis(a: Mat) -> list[Vec]:
    """Columns of `a` forming a basis of its image (original columns)."""
    _, pivots = rref(a)
    cols = transpose(a)
    return [cols[j] for j in pivots]


def hstack(*mats: Mat) -> Mat:
    ms = [m for m in mats if shape(m)[1] > 0 or shape(m)[0] > 0]
    if not ms:
        return []
    rows = shape(ms[0])[0]
    if any(shape(m)[0] != rows for m in ms):
        raise ValueError("hstack row mismatch")
    return [sum((m[i] for m in ms), []) for i in range(rows)]


def vstack(*mats: Mat) -> Mat:
    return [row[:] for m in mats for row in m]


class SpanEchelon:
    """Incremental echelon basis of a subspace, for sparse vectors keyed by
    arbitrary hashable indices.  Key order fixes the pivot order."""

    def __init__(self, key_order=None):
        # pivot key -> reduced vector (dict key->Fraction, pivot coeff 1)
        self.rows: dict = {}
        self._key_rank = {}
        if key_order is not None:
            self._key_rank = {k: i for i, k in enumerate(key_order)}

    def _rank_of(self, k):
        r = self._key_rank.get(k)
        return (0, r) if r is not None else (1, repr(k))

    def reduce(self, vec: dict) -> dict:
        """Reduce vec modulo the current span (vec is not mutated)."""
        v = {k: frac(c) for k, c in vec.items() if c}
        for k in sorted(v, key=self._rank_of):
            if k not in v:
                continue
            row = self.rows.get(k)
            if row is None:
                continue
            c = v[k]
            for kk, cc in row.items():
                nv = v.get(kk, Fraction(0)) - c * cc
                if nv:
                    v[kk] = nv
                else:
                    v.pop(kk, None)
        return v

    def add(self, vec: dict) -> bool:
        """Insert vec into the span; returns True if the span grew."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v, key=self._rank_of)
        inv = Fraction(1) / v[pivot]
        v = {k: c * inv for k, c in v.items()}
        # back-substitute into existing rows
        for pk, row in self.rows.items():
            c = row.get(pivot)
            if c:
                for kk, cc in v.items():
                    nv = row.get(kk, Fraction(0)) - c * cc
                    if nv:
                        row[kk] = nv
                    else:
                        row.pop(kk, None)
        self.rows[pivot] = v
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def pivot_keys(self):
        return set(self.rows)
