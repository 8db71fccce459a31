"""Bounded cochain complexes of finite-dimensional rational vector spaces.

A Complex stores per-degree dimensions and differential matrices inside a
window [lo, hi]; pieces outside the window are zero by convention, so every
rank statement below is exact.  Degrees lo and hi are still flagged on
cohomology output: when the data is a truncation of something larger those
slices are not trustworthy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import (
    Mat,
    Vec,
    column_space_basis,
    frac,
    hstack,
    mat_mul,
    mat_vec,
    nullspace,
    rank,
    rref,
    solve,
    zeros,
)


class Complex:
    def __init__(self, window, dims, d, name=""):
        self.lo, self.hi = int(window[0]), int(window[1])
        if self.lo > self.hi:
            raise ValueError("empty window")
        self.name = name
        self.dims = {int(n): int(k) for n, k in dims.items() if k}
        self.d = {}
        for n, m in d.items():
            n = int(n)
            mat_ = [[frac(x) for x in row] for row in m]
            if mat_ and any(row for row in mat_):
                self.d[n] = mat_

    def dim(self, n: int) -> int:
        return self.dims.get(n, 0)

    def diff(self, n: int) -> Mat:
        """d^n: X^n -> X^{n+1} (zero matrix when absent)."""
        m = self.d.get(n)
        if m is not None:
            return m
        return zeros(self.dim(n + 1), self.dim(n))

    @property
    def window(self):
        return (self.lo, self.hi)

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def interior(self):
        return range(self.lo + 1, self.hi)

    def validate(self):
        failures = []
        for n, m in self.d.items():
            rows, cols = len(m), len(m[0]) if m else 0
            if (rows, cols) != (self.dim(n + 1), self.dim(n)) and m:
                failures.append(f"d^{n} has shape {rows}x{cols}, "
                                f"expected {self.dim(n+1)}x{self.dim(n)}")
        for n in range(self.lo, self.hi - 1):
            prod = mat_mul(self.diff(n + 1), self.diff(n))
            if any(any(x for x in row) for row in prod):
                failures.append(f"d^{n+1} d^{n} != 0")
        return (not failures, failures)

    def total_dim(self):
        return sum(self.dims.values())

    def __repr__(self):
        return f"Complex({self.name!r}, window={self.window}, dims={self.dims})"


def zero_complex(window) -> Complex:
    return Complex(window, {}, {}, name="0")


def stalk(n: int, dim=1, window=None) -> Complex:
    w = window or (n, n)
    return Complex(w, {n: dim}, {}, name=f"K[{n}]")


def contractible_two_term(n: int, window=None) -> Complex:
    """K t + K dt with |t| = n, d(t) = dt."""
    w = window or (n, n + 1)
    return Complex(w, {n: 1, n + 1: 1}, {n: [[1]]}, name=f"V[{n}]")


class ChainMap:
    def __init__(self, source: Complex, target: Complex, components, name=""):
        if source.window != target.window:
            raise ValueError("chain maps require a shared window")
        self.source = source
        self.target = target
        self.name = name
        self.components = {}
        for n, m in components.items():
            n = int(n)
            mat_ = [[frac(x) for x in row] for row in m]
            # all-zero components are regenerated with authoritative shapes
            if mat_ and any(any(row) for row in mat_):
                self.components[n] = mat_

    def component(self, n: int) -> Mat:
        m = self.components.get(n)
        if m is not None:
            return m
        return zeros(self.target.dim(n), self.source.dim(n))

    def validate(self):
        failures = []
        for n, m in self.components.items():
            rows = len(m)
            cols = len(m[0]) if m else 0
            if m and (rows, cols) != (self.target.dim(n), self.source.dim(n)):
                failures.append(f"component {n} has wrong shape")
        lo, hi = self.source.window
        for n in range(lo, hi):
            lhs = mat_mul(self.target.diff(n), self.component(n))
            rhs = mat_mul(self.component(n + 1), self.source.diff(n))
            # zero maps through zero spaces may come back with degenerate
            # widths; all-zero matrices are equal regardless of shape
            zl = all(not x for row in lhs for x in row)
            zr = all(not x for row in rhs for x in row)
            if (zl and zr):
                continue
            if lhs != rhs:
                failures.append(f"does not commute with d at degree {n}")
        return (not failures, failures)

    def apply(self, n: int, v: Vec) -> Vec:
        return mat_vec(self.component(n), v)


def identity_chain_map(X: Complex) -> ChainMap:
    comps = {n: [[Fraction(1 if i == j else 0) for j in range(X.dim(n))]
                 for i in range(X.dim(n))] for n in X.degrees() if X.dim(n)}
    return ChainMap(X, X, comps, name=f"id_{X.name}")


def compose_chain_maps(g: ChainMap, f: ChainMap) -> ChainMap:
    comps = {n: mat_mul(g.component(n), f.component(n))
             for n in f.source.degrees()}
    return ChainMap(f.source, g.target, comps, name=f"{g.name}.{f.name}")


# -- cohomology -----------------------------------------------------------


@dataclass
class CohomologySlice:
    degree: int
    z_dim: int
    b_dim: int
    h_dim: int
    representatives: list      # basis vectors of a complement of B in Z
    boundary_degree: bool      # slice sits at the window boundary


def cocycles(X: Complex, n: int) -> list[Vec]:
    if X.dim(n) == 0:
        return []
    return nullspace(X.diff(n), width=X.dim(n))


def coboundaries(X: Complex, n: int) -> list[Vec]:
    if X.dim(n) == 0 or X.dim(n - 1) == 0:
        return []
    return column_space_basis(X.diff(n - 1))


def _complement_in(space_basis, sub_basis, dim):
    """Representatives extending sub_basis to span(space_basis)."""
    if not space_basis:
        return []
    cols = [list(v) for v in sub_basis]
    reps = []
    for z in space_basis:
        candidate = cols + [list(v) for v in reps] + [list(z)]
        m = [[candidate[j][i] for j in range(len(candidate))] for i in range(dim)]
        if rank(m) > len(cols) + len(reps):
            reps.append(z)
    return reps


def cohomology(X: Complex, n: int) -> CohomologySlice:
    if not (X.lo <= n <= X.hi):
        raise ValueError(f"degree {n} outside window {X.window}")
    z = cocycles(X, n)
    b = coboundaries(X, n)
    reps = _complement_in(z, b, X.dim(n))
    return CohomologySlice(
        degree=n, z_dim=len(z), b_dim=len(b), h_dim=len(z) - len(b),
        representatives=reps, boundary_degree=n in (X.lo, X.hi))


def cohomology_dims(X: Complex) -> dict[int, int]:
    return {n: cohomology(X, n).h_dim for n in X.degrees()}


def is_acyclic(X: Complex, degrees=None) -> bool:
    degs = degrees if degrees is not None else X.degrees()
    return all(cohomology(X, n).h_dim == 0 for n in degs)


def cohomology_map(f: ChainMap, n: int) -> Mat:
    """Matrix of H^n(f) in the representative bases of source and target."""
    sx = cohomology(f.source, n)
    sy = cohomology(f.target, n)
    by = coboundaries(f.target, n)
    basis = [list(v) for v in by] + [list(v) for v in sy.representatives]
    out = []
    for z in sx.representatives:
        img = f.apply(n, z)
        if not basis:
            if any(img):
                raise AssertionError("image of a cocycle escaped the target")
            out.append([])
            continue
        m = [[basis[j][i] for j in range(len(basis))] for i in range(f.target.dim(n))]
        coeffs = solve(m, img)
        if coeffs is None:
            raise AssertionError("cocycle image not a cocycle")
        out.append(coeffs[len(by):])
    # columns index source representatives
    h = zeros(sy.h_dim, sx.h_dim)
    for j, col in enumerate(out):
        for i, x in enumerate(col):
            h[i][j] = x
    return h


# -- suspension and cones ---------------------------------------------------


def suspension(X: Complex) -> Complex:
    """Sigma(X)^n = X^{n+1} with negated differential."""
    dims = {n - 1: k for n, k in X.dims.items()}
    d = {n - 1: [[-x for x in row] for row in m] for n, m in X.d.items()}
    return Complex((X.lo - 1, X.hi - 1), dims, d, name=f"S({X.name})")


def suspension_degree_map(X: Complex):
    """The identification x -> sx as identity matrices X^n -> Sigma(X)^{n-1}."""
    return {n: [[Fraction(1 if i == j else 0) for j in range(X.dim(n))]
                for i in range(X.dim(n))] for n in X.degrees()}


def cone(f: ChainMap) -> tuple[Complex, ChainMap, ChainMap]:
    """Cone(f) = Y + Sigma(X) with differential [[d_Y, f xi^{-1}], [0, -d_X]];
    returns (cone, inclusion of Y, projection to Sigma X)."""
    X, Y = f.source, f.target
    lo, hi = Y.lo - 1, Y.hi
    dims = {}
    for n in range(lo, hi + 1):
        dims[n] = Y.dim(n) + X.dim(n + 1)
    d = {}
    for n in range(lo, hi):
        rows = dims.get(n + 1, 0)
        cols = dims.get(n, 0)
        m = zeros(rows, cols)
        dy = Y.diff(n)
        for i in range(Y.dim(n + 1)):
            for j in range(Y.dim(n)):
                m[i][j] = dy[i][j]
        fc = f.component(n + 1)
        for i in range(Y.dim(n + 1)):
            for j in range(X.dim(n + 1)):
                m[i][Y.dim(n) + j] = fc[i][j]
        dx = X.diff(n + 1)
        for i in range(X.dim(n + 2)):
            for j in range(X.dim(n + 1)):
                m[Y.dim(n + 1) + i][Y.dim(n) + j] = -dx[i][j]
        d[n] = m
    C = Complex((lo, hi), dims, d, name=f"Cone({f.name})")
    ok, failures = C.validate()
    if not ok:
        raise AssertionError(f"cone differential fails d^2 = 0: {failures}")
    # canonical maps use the cone's window
    incl_comps = {}
    proj_comps = {}
    for n in range(lo, hi + 1):
        m = zeros(dims.get(n, 0), Y.dim(n))
        for i in range(Y.dim(n)):
            m[i][i] = Fraction(1)
        incl_comps[n] = m
        p = zeros(X.dim(n + 1), dims.get(n, 0))
        for i in range(X.dim(n + 1)):
            p[i][Y.dim(n) + i] = Fraction(1)
        proj_comps[n] = p
    y_wide = Complex((lo, hi), dict(Y.dims), dict(Y.d), name=Y.name)
    sx = suspension(X)
    sx_wide = Complex((lo, hi), dict(sx.dims), dict(sx.d), name=sx.name)
    inclusion = ChainMap(y_wide, C, incl_comps, name="inc")
    projection = ChainMap(C, sx_wide, proj_comps, name="proj")
    oki, _ = inclusion.validate()
    okp, _ = projection.validate()
    if not (oki and okp):
        raise AssertionError("canonical cone maps fail to be chain maps")
    return C, inclusion, projection


# -- surjective quasi-isomorphism criteria ----------------------------------


def is_surjective(f: ChainMap) -> bool:
    for n in f.source.degrees():
        if rank(f.component(n)) < f.target.dim(n):
            return False
    return True


def is_quasi_iso(f: ChainMap, interior_only=True) -> bool:
    """Quasi-isomorphism via cone acyclicity.  With interior_only the check
    runs on the window interior [lo+1, hi-1] (the reliable range when the
    data is a truncation); otherwise on every degree."""
    C, _, _ = cone(f)
    lo, hi = f.source.window
    degs = range(lo + 1, hi) if interior_only else C.degrees()
    return all(cohomology(C, n).h_dim == 0 for n in degs)


def section_condition(f: ChainMap, n: int) -> tuple[bool, dict]:
    """Degree-n instance: every (x, y) with x in Z^{n+1}(X), f(x) = d(y)
    admits x' with d(x') = x and f(x') = y.  Decided exactly by comparing
    the solution space against the span of (d, f): X^n -> X^{n+1} + Y^n."""
    X, Y = f.source, f.target
    dn1 = X.diff(n + 1)
    fn1 = f.component(n + 1)
    dyn = Y.diff(n)
    # pairs (x, y): d x = 0 and f x - d y = 0
    rows = []
    dimx, dimy = X.dim(n + 1), Y.dim(n)
    for i in range(X.dim(n + 2)):
        rows.append([dn1[i][j] for j in range(dimx)] + [Fraction(0)] * dimy)
    for i in range(Y.dim(n + 1)):
        rows.append([fn1[i][j] for j in range(dimx)]
                    + [-dyn[i][j] for j in range(dimy)])
    if not rows and (dimx + dimy):
        rows = [[Fraction(0)] * (dimx + dimy)]
    pairs = nullspace(rows) if (dimx + dimy) else []
    # image of x' -> (d x', f x')
    span_rows = []
    for i in range(dimx):
        span_rows.append([X.diff(n)[i][j] for j in range(X.dim(n))])
    for i in range(dimy):
        span_rows.append([f.component(n)[i][j] for j in range(X.dim(n))])
    unsolved = []
    for v in pairs:
        if solve(span_rows, v) is None:
            unsolved.append(v)
    return (not unsolved, {"pairs": len(pairs), "unsolved": unsolved})


@dataclass
class SurjQuasReport:
    c1: bool                  # surjective quasi-isomorphism
    c2: bool                  # Z^n surjective and H^n injective, all n
    c3: bool                  # section condition, all n
    details: dict

    def all_equal(self):
        return self.c1 == self.c2 == self.c3


def surj_quas_criteria(f: ChainMap) -> SurjQuasReport:
    """The three equivalent descriptions of a surjective quasi-isomorphism,
    each evaluated independently and exactly (complexes vanish outside the
    window, so all three are global statements)."""
    X, Y = f.source, f.target
    lo, hi = X.window
    c1 = is_surjective(f) and is_quasi_iso(f, interior_only=False)

    c2 = True
    c2_fail = None
    for n in X.degrees():
        zy = cocycles(Y, n)
        zx = cocycles(X, n)
        if zy:
            imgs = [f.apply(n, v) for v in zx]
            m = [[imgs[j][i] for j in range(len(imgs))] for i in range(Y.dim(n))]
            zmat = [[zy[j][i] for j in range(len(zy))] for i in range(Y.dim(n))]
            if rank(m) < rank(zmat):
                c2 = False
                c2_fail = ("Z-surjectivity", n)
                break
        hx = cohomology(X, n).h_dim
        if hx:
            h = cohomology_map(f, n)
            injective = bool(h) and len(h[0]) == hx and not nullspace(h)
            if not injective:
                c2 = False
                c2_fail = ("H-injectivity", n)
                break

    c3 = True
    c3_fail = None
    for n in range(lo - 1, hi + 1):
        ok, info = section_condition(f, n)
        if not ok:
            c3 = False
            c3_fail = ("section", n, info)
            break

    return SurjQuasReport(c1, c2, c3,
                          {"c2_failure": c2_fail, "c3_failure": c3_fail})


def solve_section(f: ChainMap, n: int, x: Vec, y: Vec):
    """x' with d(x') = x and f(x') = y, or None with a rank certificate."""
    X, Y = f.source, f.target
    if len(x) != X.dim(n + 1) or len(y) != Y.dim(n):
        raise ValueError("wrong vector lengths for solve_section")
    if any(mat_vec(X.diff(n + 1), x)):
        raise ValueError("x is not a cocycle")
    if f.apply(n + 1, x) != mat_vec(Y.diff(n), y):
        raise ValueError("f(x) != d(y)")
    rows = []
    for i in range(X.dim(n + 1)):
        rows.append([X.diff(n)[i][j] for j in range(X.dim(n))])
    for i in range(Y.dim(n)):
        rows.append([f.component(n)[i][j] for j in range(X.dim(n))])
    rhs = list(x) + list(y)
    sol = solve(rows, rhs)
    if sol is None:
        aug = [row[:] + [rhs[i]] for i, row in enumerate(rows)]
        return None, {"rank": rank(rows), "rank_augmented": rank(aug)}
    return sol, None
