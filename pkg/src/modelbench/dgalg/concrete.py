"""Concrete dg algebras: a basis per degree inside a window, multiplication
structure constants (with explicit overflow flags where truncation loses
products) and differential matrices.

An algebra is `honest` when it vanishes outside its window, so every rank
statement about it is exact.  Truncations of presentations carry per-degree
completeness flags instead."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..linalg import SpanEchelon, frac, mat_vec, nullspace, zeros
from ..complexes import Complex, ChainMap
from ..words import Poly
from .presentation import DgAlgPresentation, disc, sphere

OVERFLOW = "overflow"


class WindowOverflow(Exception):
    """A product or differential escaped the window / word-length budget."""


class Element:
    """Homogeneous element: a coefficient vector over one degree's basis."""

    __slots__ = ("algebra", "degree", "coeffs")

    def __init__(self, algebra, degree, coeffs=None):
        self.algebra = algebra
        self.degree = int(degree)
        self.coeffs = {}
        if coeffs:
            for i, c in (coeffs.items() if isinstance(coeffs, dict) else enumerate(coeffs)):
                c = frac(c)
                if c:
                    self.coeffs[int(i)] = c

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if other.degree != self.degree:
            raise ValueError("adding elements of different degrees")
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + c
        return Element(self.algebra, self.degree, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = frac(c)
        return Element(self.algebra, self.degree,
                       {i: c * v for i, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        A = self.algebra
        deg = self.degree + other.degree
        out = Element(A, deg)
        for i, ci in self.coeffs.items():
            for j, cj in other.coeffs.items():
                prod = A.mult((self.degree, i), (other.degree, j))
                if prod is OVERFLOW:
                    raise WindowOverflow(
                        f"product at degrees ({self.degree}, {other.degree}) truncated")
                out = out + Element(A, deg, prod).scale(ci * cj)
        return out

    __rmul__ = scale

    def d(self):
        A = self.algebra
        if self.is_zero():
            return Element(A, self.degree + 1)
        m = A.diff_matrix(self.degree)
        vec = [self.coeffs.get(i, Fraction(0)) for i in range(A.dim(self.degree))]
        img = mat_vec(m, vec)
        return Element(A, self.degree + 1, {i: c for i, c in enumerate(img) if c})

    def as_vector(self):
        return [self.coeffs.get(i, Fraction(0))
                for i in range(self.algebra.dim(self.degree))]

    def __eq__(self, other):
        return (isinstance(other, Element) and self.coeffs == other.coeffs
                and (self.degree == other.degree or self.is_zero() and other.is_zero()))

    def __hash__(self):
        return hash((self.degree, frozenset(self.coeffs.items())))

    def pretty(self):
        if not self.coeffs:
            return "0"
        labels = self.algebra.basis.get(self.degree, [])
        bits = []
        for i in sorted(self.coeffs):
            lbl = labels[i] if i < len(labels) else f"e{i}"
            c = self.coeffs[i]
            bits.append(lbl if c == 1 else f"{c}*{lbl}")
        return " + ".join(bits)

    def __repr__(self):
        return f"Element[{self.degree}]({self.pretty()})"


class ConcreteDgAlg:
    def __init__(self, name, window, basis, diff, mult, unit_coeffs,
                 honest=True, complete=None):
        """basis: degree -> list of labels; diff: degree -> matrix into the
        next degree; mult: ((d1,i),(d2,j)) -> coeff dict | OVERFLOW (missing
        in-window keys default to zero; out-of-window products are zero for
        honest algebras and OVERFLOW otherwise); unit_coeffs: dict over the
        degree-0 basis."""
        self.name = name
        self.lo, self.hi = int(window[0]), int(window[1])
        self.basis = {int(n): list(lbls) for n, lbls in basis.items() if lbls}
        self.diffs = {int(n): [[frac(x) for x in row] for row in m]
                      for n, m in diff.items()}
        self._mult = dict(mult)
        self.honest = honest
        self.complete = dict(complete) if complete is not None else \
            {n: honest for n in self.basis}
        self.unit = Element(self, 0, unit_coeffs)

    @property
    def window(self):
        return (self.lo, self.hi)

    def dim(self, n):
        return len(self.basis.get(n, []))

    def basis_degrees(self):
        return sorted(self.basis)

    def basis_element(self, n, i) -> Element:
        return Element(self, n, {i: 1})

    def basis_elements(self, n):
        return [self.basis_element(n, i) for i in range(self.dim(n))]

    def zero(self, n=0) -> Element:
        return Element(self, n)

    def diff_matrix(self, n) -> list:
        m = self.diffs.get(n)
        if m is not None:
            return m
        return zeros(self.dim(n + 1), self.dim(n))

    def mult(self, key1, key2):
        deg = key1[0] + key2[0]
        val = self._mult.get((key1, key2))
        if val is not None:
            return val
        if deg < self.lo or deg > self.hi:
            return {} if self.honest else OVERFLOW
        return {}

    def element(self, n, coeffs) -> Element:
        return Element(self, n, coeffs)

    def underlying_complex(self) -> Complex:
        return Complex(self.window,
                       {n: self.dim(n) for n in self.basis},
                       {n: self.diffs[n] for n in self.diffs},
                       name=self.name)

    # -- validation --------------------------------------------------------

    def validate(self):
        failures = []
        cx = self.underlying_complex()
        ok, fails = cx.validate()
        if not ok:
            failures.extend(f"complex: {f}" for f in fails)
        u = self.unit
        if not u.is_zero():
            for n in self.basis_degrees():
                for e in self.basis_elements(n):
                    try:
                        if (u * e) != e or (e * u) != e:
                            failures.append(f"unit law fails at degree {n}")
                            break
                    except WindowOverflow:
                        continue
        # associativity and Leibniz on triples/pairs staying in-window
        degs = self.basis_degrees()
        for n1 in degs:
            for n2 in degs:
                for n3 in degs:
                    if not (self.lo <= n1 + n2 + n3 <= self.hi):
                        continue
                    for e1 in self.basis_elements(n1):
                        for e2 in self.basis_elements(n2):
                            for e3 in self.basis_elements(n3):
                                try:
                                    if (e1 * e2) * e3 != e1 * (e2 * e3):
                                        failures.append(
                                            f"associativity fails at ({n1},{n2},{n3})")
                                        raise StopIteration
                                except WindowOverflow:
                                    continue
                                except StopIteration:
                                    break
        for n1 in degs:
            for n2 in degs:
                if not (self.lo <= n1 + n2 + 1 <= self.hi):
                    continue
                sign = -1 if n1 % 2 else 1
                for e1 in self.basis_elements(n1):
                    for e2 in self.basis_elements(n2):
                        try:
                            lhs = (e1 * e2).d()
                            rhs = e1.d() * e2 + (e1 * e2.d()).scale(sign)
                            if lhs != rhs:
                                failures.append(f"Leibniz fails at ({n1},{n2})")
                        except WindowOverflow:
                            continue
        return (not failures, failures)

    def __repr__(self):
        dims = {n: self.dim(n) for n in self.basis_degrees()}
        return f"ConcreteDgAlg({self.name!r}, window={self.window}, dims={dims})"


def ground_concrete(window=(0, 0), name="K") -> ConcreteDgAlg:
    return ConcreteDgAlg(name, window, {0: ["1"]}, {},
                         {((0, 0), (0, 0)): {0: 1}}, {0: 1})


def dual_numbers(window=(0, 0), name="K[e]/(e^2)") -> ConcreteDgAlg:
    """K[eps]/(eps^2) with eps in degree 0 and zero differential."""
    mult = {
        ((0, 0), (0, 0)): {0: 1},
        ((0, 0), (0, 1)): {1: 1},
        ((0, 1), (0, 0)): {1: 1},
        ((0, 1), (0, 1)): {},
    }
    return ConcreteDgAlg(name, window, {0: ["1", "e"]}, {}, mult, {0: 1})


# -- truncation of presentations -------------------------------------------


def _word_label(word):
    return "*".join(word) if word else "1"


def completeness_flags(gen_degrees, window, max_word_len):
    """For each window degree: could a word longer than the cap land there?
    Exact for one-signed generator degrees (degrees drift monotonically);
    conservative (everything flagged) when degrees mix signs or contain 0."""
    lo, hi = window
    flags = {n: True for n in range(lo, hi + 1)}
    degrees = sorted(set(int(d) for d in gen_degrees))
    if not degrees:
        return flags
    if max(degrees) < 0:
        reach = {0}
        length = 0
        while reach:
            length += 1
            reach = {d + g for d in reach for g in degrees if d + g >= lo}
            if length > max_word_len:
                for d in reach:
                    if d <= hi:
                        flags[d] = False
        return flags
    if min(degrees) > 0:
        reach = {0}
        length = 0
        while reach:
            length += 1
            reach = {d + g for d in reach for g in degrees if d + g <= hi}
            if length > max_word_len:
                for d in reach:
                    if d >= lo:
                        flags[d] = False
        return flags
    for n in range(lo, hi + 1):
        flags[n] = False
    return flags


def truncate(P: DgAlgPresentation, window, max_word_len) -> ConcreteDgAlg:
    """Windowed concrete model of a presentation: the basis is the set of
    words of length <= max_word_len with degree in the window (modulo the
    windowed span of the relation ideal), products beyond the caps flagged."""
    lo, hi = window
    A = P.alphabet
    words = [()]
    frontier = [()]
    for _ in range(max_word_len):
        nxt = []
        for w in frontier:
            for g in P.gen_names():
                nw = (g,) + w
                nxt.append(nw)
        frontier = nxt
        words.extend(frontier)
    in_window = [w for w in words if lo <= A.word_degree(w) <= hi]
    in_window.sort(key=lambda w: (len(w), w))

    reduce = None
    if P.relations:
        # pivot order prefers eliminating long words, keeping short ones
        key_order = [("o", w) for w in sorted(in_window, key=lambda w: (-len(w), w))]
        span = SpanEchelon(key_order=key_order)
        # two-sided closure of relations by words within the caps
        for rel in P.relations:
            rdeg = rel.degree()
            rlen = rel.max_word_length()
            for u in words:
                for v in words:
                    if len(u) + len(v) + rlen > max_word_len:
                        continue
                    du, dv = A.word_degree(u), A.word_degree(v)
                    if not (lo <= du + dv + rdeg <= hi):
                        continue
                    prod = Poly.word(A, u) * rel * Poly.word(A, v)
                    vec = {k: c for k, c in prod.terms.items()}
                    if vec:
                        span.add(vec)
        pivots = {k[1] for k in span.pivot_keys()}
        quotient_words = [w for w in in_window if w not in pivots]

        def reduce(poly: Poly):
            return span.reduce(poly.terms)
    else:
        quotient_words = in_window

    by_degree: dict[int, list] = {}
    index: dict[tuple, tuple] = {}
    for w in quotient_words:
        n = A.word_degree(w)
        by_degree.setdefault(n, [])
        index[w] = (n, len(by_degree[n]))
        by_degree[n].append(w)

    def poly_to_coeffs(poly: Poly, expect_degree, partial=False):
        """Reduced coordinates; OVERFLOW when support escapes the caps, or
        with partial=True the in-cap part plus an overflow flag."""
        terms = reduce(poly) if reduce else dict(poly.terms)
        out: dict[int, Fraction] = {}
        overflowed = False
        for (v, w), c in terms.items():
            if w not in index:
                if len(w) <= max_word_len and lo <= A.word_degree(w) <= hi:
                    raise AssertionError("reduced word missing from quotient basis")
                if not partial:
                    return OVERFLOW
                overflowed = True
                continue
            n, i = index[w]
            if n != expect_degree:
                raise AssertionError("inhomogeneous product")
            out[i] = out.get(i, Fraction(0)) + c
        return (out, overflowed) if partial else out

    mult = {}
    degs = sorted(by_degree)
    for n1 in degs:
        for i1, w1 in enumerate(by_degree[n1]):
            for n2 in degs:
                n = n1 + n2
                if n < lo or n > hi:
                    continue
                for i2, w2 in enumerate(by_degree[n2]):
                    word = w1 + w2
                    if len(word) > max_word_len:
                        mult[((n1, i1), (n2, i2))] = OVERFLOW
                        continue
                    coeffs = poly_to_coeffs(Poly.word(A, word), n)
                    mult[((n1, i1), (n2, i2))] = coeffs

    diffs = {}
    diff_overflow = set()
    for n in degs:
        rows = len(by_degree.get(n + 1, []))
        cols = len(by_degree[n])
        m = zeros(rows, cols)
        for j, w in enumerate(by_degree[n]):
            dw = Poly.word(A, w).differential(P.diff)
            if dw.is_zero():
                continue
            coeffs, overflowed = poly_to_coeffs(dw, n + 1, partial=True)
            if overflowed:
                diff_overflow.update((n, n + 1))
            for i, c in coeffs.items():
                m[i][j] = c
        diffs[n] = m

    flags = completeness_flags([d for _, d in P.generators], window, max_word_len)
    for n in diff_overflow:
        flags[n] = False
    unit_coeffs = {}
    if () in index:
        unit_coeffs = {index[()][1]: 1}
    out = ConcreteDgAlg(P.name, window, by_degree, diffs, mult, unit_coeffs,
                        honest=False, complete=flags)
    out.word_index = index
    out.max_word_len = max_word_len
    return out


# -- dg algebra maps ---------------------------------------------------------


def evaluate_poly(poly: Poly, images: dict, unit):
    """Evaluate a presentation polynomial under generator images (Element or
    Poly values); `unit` is the target's multiplicative unit."""
    total = None
    for (v, w), c in poly.terms.items():
        piece = unit
        for letter in w:
            piece = piece * images[letter]
        piece = piece.scale(c)
        total = piece if total is None else total + piece
    return total if total is not None else unit.scale(0)


class DgAlgMap:
    """Map out of a presentation, given by generator images in the target
    (a ConcreteDgAlg via Elements, or another presentation via Polys)."""

    def __init__(self, source: DgAlgPresentation, target, images, name=""):
        self.source = source
        self.target = target
        self.images = dict(images)
        self.name = name

    def target_unit(self):
        if isinstance(self.target, ConcreteDgAlg):
            return self.target.unit
        return Poly.unit(self.target.alphabet)

    def __call__(self, poly: Poly):
        return evaluate_poly(poly, self.images, self.target_unit())

    def validate(self):
        failures = []
        for g, dg in self.source.generators:
            img = self.images.get(g)
            if img is None:
                failures.append(f"no image for generator {g}")
                continue
            ideg = img.degree if isinstance(img, Element) else \
                (img.degree() if not img.is_zero() else None)
            if ideg is not None and ideg != dg:
                failures.append(f"image of {g} has degree {ideg}, expected {dg}")
        if failures:
            return (False, failures)
        for g, _ in self.source.generators:
            img = self.images[g]
            d_img = img.d() if isinstance(img, Element) else \
                img.differential(self.target.diff)
            try:
                want = self(self.source.diff[g])
            except WindowOverflow:
                continue
            if not (d_img - want).is_zero():
                failures.append(f"differential not respected at {g}")
        for rel in self.source.relations:
            try:
                img = self(rel)
            except WindowOverflow:
                continue
            if not img.is_zero():
                failures.append("a relation does not map to zero")
        return (not failures, failures)

    def compose_with(self, inner: "DgAlgMap") -> "DgAlgMap":
        """self o inner, where inner's target is self's source presentation."""
        images = {g: self(inner.images[g]) if isinstance(inner.images[g], Poly)
                  else None for g, _ in inner.source.generators}
        if any(v is None for v in images.values()):
            raise ValueError("composition needs presentation-valued images")
        return DgAlgMap(inner.source, self.target, images,
                        name=f"{self.name}.{inner.name}")


def concrete_chain_map(map_: DgAlgMap, source_conc: ConcreteDgAlg) -> ChainMap:
    """Matrix form of a presentation map on a chosen truncation basis."""
    if not isinstance(map_.target, ConcreteDgAlg):
        raise ValueError("concrete chain map needs a concrete target")
    tgt = map_.target
    lo, hi = tgt.lo, tgt.hi
    if (source_conc.lo, source_conc.hi) != (lo, hi):
        raise ValueError("windows must agree")
    comps = {}
    A = map_.source.alphabet
    for n in source_conc.basis_degrees():
        rows, cols = tgt.dim(n), source_conc.dim(n)
        m = zeros(rows, cols)
        for j, w in enumerate(source_conc.basis.get(n, [])):
            word = tuple(w.split("*")) if w != "1" else ()
            try:
                img = map_(Poly.word(A, word))
            except WindowOverflow:
                continue
            for i, c in img.coeffs.items():
                m[i][j] = c
        comps[n] = m
    return ChainMap(source_conc.underlying_complex(), tgt.underlying_complex(),
                    comps, name=map_.name)


# -- sphere/disc parameterizations -------------------------------------------


def cocycle_basis(A: ConcreteDgAlg, n: int):
    """Basis of Z^n(A)."""
    if A.dim(n) == 0:
        return []
    return [Element(A, n, {i: c for i, c in enumerate(vec) if c})
            for vec in nullspace(A.diff_matrix(n), width=A.dim(n))]


def maps_from_sphere(n: int, A: ConcreteDgAlg):
    """DGAlg(S(n), A) ~= Z^{-n}(A): a basis of cocycles, each with its map
    u -> cocycle; the parameterization is linear in the cocycle."""
    S = sphere(n)
    out = []
    for z in cocycle_basis(A, -n):
        f = DgAlgMap(S, A, {"u": z}, name=f"S({n})->{A.name}")
        ok, fails = f.validate()
        if not ok:
            raise AssertionError(f"sphere map failed validation: {fails}")
        out.append((z, f))
    return out


def maps_from_disc(n: int, A: ConcreteDgAlg):
    """DGAlg(D(n), A) ~= A^{-n}: each basis element b gives t -> b,
    dt -> d(b)."""
    D = disc(n)
    out = []
    for b in A.basis_elements(-n):
        f = DgAlgMap(D, A, {"t": b, "dt": b.d()}, name=f"D({n})->{A.name}")
        ok, fails = f.validate()
        if not ok:
            raise AssertionError(f"disc map failed validation: {fails}")
        out.append((b, f))
    return out
