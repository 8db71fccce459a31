"""Path objects for dg algebras and the two homotopy relations.

The cocylinder is the upper-triangular matrix algebra [[B, S^{-1}B], [0, B]]
with its exactly-signed multiplication and differential; elementary homotopy
goes through the free product B * D(t).  Cochain homotopies are witnessed by
(f, g)-derivations found by exact linear solves; elementary homotopies by a
bounded polynomial solve (a semi-decision)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from ..linalg import frac, solve
from ..words import Poly
from .concrete import ConcreteDgAlg, DgAlgMap, Element, WindowOverflow
from .presentation import DgAlgPresentation


# -- the cocylinder Gamma ----------------------------------------------------


@dataclass
class Cocylinder:
    base: ConcreteDgAlg
    gamma: ConcreteDgAlg
    pi0: "LinearDgAlgMap"
    pi1: "LinearDgAlgMap"
    diag: "LinearDgAlgMap"


class LinearDgAlgMap:
    """Map between concrete dg algebras given by matrices per degree."""

    def __init__(self, source: ConcreteDgAlg, target: ConcreteDgAlg,
                 components, name=""):
        self.source = source
        self.target = target
        self.components = {int(n): m for n, m in components.items()}
        self.name = name

    def component(self, n):
        from ..linalg import zeros
        m = self.components.get(n)
        return m if m is not None else zeros(self.target.dim(n), self.source.dim(n))

    def __call__(self, e: Element) -> Element:
        from ..linalg import mat_vec
        vec = mat_vec(self.component(e.degree), e.as_vector())
        return Element(self.target, e.degree, {i: c for i, c in enumerate(vec) if c})

    def validate(self):
        failures = []
        src, tgt = self.source, self.target
        for n in src.basis_degrees():
            for e in src.basis_elements(n):
                lhs = self(e).d()
                rhs = self(e.d())
                if lhs != rhs:
                    failures.append(f"differential not respected at degree {n}")
                    break
        for n1 in src.basis_degrees():
            for n2 in src.basis_degrees():
                for e1 in src.basis_elements(n1):
                    for e2 in src.basis_elements(n2):
                        try:
                            if self(e1 * e2) != self(e1) * self(e2):
                                failures.append(
                                    f"multiplicativity fails at ({n1},{n2})")
                        except WindowOverflow:
                            continue
        if not self.source.unit.is_zero():
            if self(self.source.unit) != self.target.unit:
                failures.append("unit not preserved")
        return (not failures, failures)


def _rewindow(B: ConcreteDgAlg, window) -> ConcreteDgAlg:
    if not B.honest:
        raise ValueError("only honest algebras can be rewindowed")
    out = ConcreteDgAlg(B.name, window, B.basis, B.diffs, B._mult,
                        B.unit.coeffs, honest=True)
    return out


def cocylinder(B: ConcreteDgAlg) -> Cocylinder:
    """Gamma = [[B, S^{-1}B], [0, B]] with
    (b0, s a, b1) (x0, s y, x1) = (b0 x0, s((-1)^{|b0|} b0 y + a x1), b1 x1)
    and d(b0, s a, b1) = (d b0, s(-d a + b0 - b1), d b1)."""
    if not B.honest:
        raise ValueError("cocylinder needs an honest concrete algebra")
    lo, hi = B.lo, B.hi + 1
    basis = {}
    slots = {}        # (slot, B-degree, B-index) -> (gamma degree, index)
    for p in range(lo, hi + 1):
        labels = []
        for i, lbl in enumerate(B.basis.get(p, [])):
            slots[("u0", p, i)] = (p, len(labels))
            labels.append(f"u0:{lbl}")
        for i, lbl in enumerate(B.basis.get(p, [])):
            slots[("u1", p, i)] = (p, len(labels))
            labels.append(f"u1:{lbl}")
        for i, lbl in enumerate(B.basis.get(p - 1, [])):
            slots[("s", p - 1, i)] = (p, len(labels))
            labels.append(f"s:{lbl}")
        if labels:
            basis[p] = labels

    def at(slot, bdeg, i):
        return slots[(slot, bdeg, i)]

    mult = {}

    def add_products(slot1, slot2, out_slot, signed):
        for p1 in B.basis_degrees():
            for p2 in B.basis_degrees():
                for i1 in range(B.dim(p1)):
                    for i2 in range(B.dim(p2)):
                        prod = B.mult((p1, i1), (p2, i2))
                        g1 = at(slot1, p1, i1)
                        g2 = at(slot2, p2, i2)
                        sign = Fraction(-1) if (signed and p1 % 2) else Fraction(1)
                        out = {}
                        for k, c in prod.items():
                            key = (out_slot, p1 + p2, k)
                            if key in slots:
                                gk = slots[key]
                                out[gk[1]] = out.get(gk[1], Fraction(0)) + frac(c) * sign
                        mult[((g1[0], g1[1]), (g2[0], g2[1]))] = out

    add_products("u0", "u0", "u0", False)
    add_products("u1", "u1", "u1", False)
    add_products("u0", "s", "s", True)      # (-1)^{|b0|} b0 y
    add_products("s", "u1", "s", False)     # a x1
    # all other slot pairs multiply to zero; record explicit in-window zeros
    for gdeg1 in slots.values():
        for gdeg2 in slots.values():
            k = ((gdeg1[0], gdeg1[1]), (gdeg2[0], gdeg2[1]))
            if lo <= gdeg1[0] + gdeg2[0] <= hi and k not in mult:
                mult[k] = {}

    from ..linalg import zeros
    diffs = {}
    dims = {p: len(basis.get(p, [])) for p in range(lo, hi + 1)}
    for p in range(lo, hi):
        m = zeros(dims.get(p + 1, 0), dims.get(p, 0))
        dB_p = B.diff_matrix(p)
        for i in range(B.dim(p)):
            for slot, s_sign in (("u0", Fraction(1)), ("u1", Fraction(-1))):
                col = at(slot, p, i)[1]
                for r in range(B.dim(p + 1)):
                    m[at(slot, p + 1, r)[1]][col] = dB_p[r][i]
                m[at("s", p, i)[1]][col] = s_sign      # b0 - b1 into the s slot
        dB_prev = B.diff_matrix(p - 1)
        for i in range(B.dim(p - 1)):
            col = at("s", p - 1, i)[1]
            for r in range(B.dim(p)):
                m[at("s", p, r)[1]][col] = -dB_prev[r][i]
        diffs[p] = m

    unit_coeffs = {}
    if B.dim(0):
        for i, c in B.unit.coeffs.items():
            unit_coeffs[at("u0", 0, i)[1]] = c
            unit_coeffs[at("u1", 0, i)[1]] = c
    gamma = ConcreteDgAlg(f"Gamma({B.name})", (lo, hi), basis, diffs, mult,
                          unit_coeffs, honest=True)
    ok, fails = gamma.validate()
    if not ok:
        raise AssertionError(f"cocylinder failed validation: {fails}")

    wide_B = _rewindow(B, (lo, hi))
    pi = []
    for slot in ("u0", "u1"):
        comps = {}
        for p in range(lo, hi + 1):
            m = zeros(wide_B.dim(p), dims.get(p, 0))
            for i in range(B.dim(p)):
                m[i][at(slot, p, i)[1]] = Fraction(1)
            comps[p] = m
        pi.append(LinearDgAlgMap(gamma, wide_B, comps, name=f"pi{len(pi)}"))
    comps = {}
    for p in range(lo, hi + 1):
        m = zeros(dims.get(p, 0), wide_B.dim(p))
        for i in range(B.dim(p)):
            m[at("u0", p, i)[1]][i] = Fraction(1)
            m[at("u1", p, i)[1]][i] = Fraction(1)
        comps[p] = m
    diag = LinearDgAlgMap(wide_B, gamma, comps, name="diag")
    for f in (*pi, diag):
        ok, fails = f.validate()
        if not ok:
            raise AssertionError(f"{f.name} failed validation: {fails}")
    return Cocylinder(wide_B, gamma, pi[0], pi[1], diag)


# -- the free product B * D(t) -----------------------------------------------


class StarDisc:
    """B * D(t) for an honest concrete B, realized on alternating words.

    A word is a tuple of letters: ("t",), ("dt",) or ("b", degree, index);
    canonical words never have two adjacent b-letters (adjacent factors are
    multiplied out in B).  t has degree 0, dt degree 1.  Elements are dicts
    word -> coefficient; coefficients may be Fractions or sympy symbols."""

    def __init__(self, B: ConcreteDgAlg):
        if not B.honest:
            raise ValueError("free product with a disc needs an honest base")
        self.B = B

    # words -------------------------------------------------------------

    def letter_degree(self, letter):
        if letter == ("t",) or letter[0] == "t":
            return 0
        if letter == ("dt",) or letter[0] == "dt":
            return 1
        return letter[1]

    def word_degree(self, word):
        return sum(self.letter_degree(l) for l in word)

    def words_up_to(self, max_t_letters, degree=None, include_unit=True):
        """Canonical words with at most max_t_letters t/dt letters; B slots
        run over all basis elements."""
        B = self.B
        b_letters = [("b", n, i) for n in B.basis_degrees() for i in range(B.dim(n))]
        x_letters = [("t",), ("dt",)]
        out = []
        frontier = [()]
        if include_unit:
            out.append(())
        while frontier:
            nxt = []
            for w in frontier:
                for l in (b_letters + x_letters):
                    if w and w[-1][0] == "b" and l[0] == "b":
                        continue
                    if sum(1 for a in w if a[0] in ("t", "dt")) + \
                            (1 if l[0] in ("t", "dt") else 0) > max_t_letters:
                        continue
                    nw = w + (l,)
                    nxt.append(nw)
                    out.append(nw)
            frontier = [w for w in nxt
                        if sum(1 for a in w if a[0] in ("t", "dt")) < max_t_letters
                        or w[-1][0] != "b"]
            # frontier pruning: words are extended letter by letter; keep all
            frontier = nxt
        seen = set()
        unique = []
        for w in out:
            if w not in seen:
                seen.add(w)
                unique.append(w)
        if degree is not None:
            unique = [w for w in unique if self.word_degree(w) == degree]
        return unique

    # elements ----------------------------------------------------------

    def zero(self):
        return {}

    def unit(self):
        return {(): Fraction(1)}

    def from_b(self, e: Element):
        out = {}
        for i, c in e.coeffs.items():
            out[(("b", e.degree, i),)] = c
        return out

    def add(self, x, y):
        out = dict(x)
        for w, c in y.items():
            v = out.get(w, 0) + c
            if v == 0 and not hasattr(v, "free_symbols"):
                out.pop(w, None)
            else:
                out[w] = v
        return out

    def scale(self, x, c):
        return {w: c * v for w, v in x.items()}

    def _normalize_word(self, word, coeff):
        """Multiply out adjacent b-letters; returns dict word -> coeff."""
        for k in range(len(word) - 1):
            if word[k][0] == "b" and word[k + 1][0] == "b":
                (_, d1, i1), (_, d2, i2) = word[k], word[k + 1]
                prod = self.B.mult((d1, i1), (d2, i2))
                out = {}
                for i, c in prod.items():
                    sub = word[:k] + (("b", d1 + d2, i),) + word[k + 2:]
                    for w2, c2 in self._normalize_word(sub, coeff * frac(c)).items():
                        out[w2] = out.get(w2, 0) + c2
                return out
        return {word: coeff}

    def mul(self, x, y):
        out = {}
        for w1, c1 in x.items():
            for w2, c2 in y.items():
                for w, c in self._normalize_word(w1 + w2, 1).items():
                    v = out.get(w, 0) + c1 * c2 * c
                    out[w] = v
        return {w: c for w, c in out.items() if c != 0 or hasattr(c, "free_symbols")}

    def d(self, x):
        out = {}
        for w, c in x.items():
            sign = 1
            for k, letter in enumerate(w):
                if letter[0] == "t" and letter == ("t",):
                    piece = {w[:k] + (("dt",),) + w[k + 1:]: c * sign}
                elif letter[0] == "b":
                    e = Element(self.B, letter[1], {letter[2]: 1})
                    de = e.d()
                    piece = {}
                    for i, ci in de.coeffs.items():
                        sub = w[:k] + (("b", letter[1] + 1, i),) + w[k + 1:]
                        for w2, c2 in self._normalize_word(sub, frac(ci)).items():
                            piece[w2] = c * sign * c2
                else:
                    piece = {}
                for w2, c2 in piece.items():
                    v = out.get(w2, 0) + c2
                    out[w2] = v
                sign *= (-1) ** (self.letter_degree(letter) & 1)
        return {w: c for w, c in out.items() if c != 0 or hasattr(c, "free_symbols")}

    def p(self, which: int, x):
        """p_i: B * D(t) -> B with t -> i, dt -> 0, identity on B."""
        B = self.B
        total = {}
        for w, c in x.items():
            # evaluate the word in B
            val = None          # None encodes the unit so far
            dead = False
            for letter in w:
                if letter[0] == "dt":
                    dead = True
                    break
                if letter[0] == "t":
                    if which == 0:
                        dead = True
                        break
                    continue    # t -> 1
                e = Element(B, letter[1], {letter[2]: 1})
                val = e if val is None else val * e
            if dead:
                continue
            if val is None:
                val = B.unit
            key = val.degree
            total[key] = total.get(key, B.zero(key)) + val.scale(c) \
                if isinstance(c, Fraction) or isinstance(c, int) else \
                total.get(key, B.zero(key)) + val.scale(frac(1)).scale(c)
        return total            # dict degree -> Element

    def phi(self, x, coc: Cocylinder):
        """phi: B * D(t) -> Gamma with phi|B = diag and phi(t) the (0, 1)
        idempotent; returns dict degree -> Element of Gamma."""
        gamma = coc.gamma
        # phi(t): the u1-slot unit
        phit = None
        for i, c in coc.base.unit.coeffs.items():
            idx = [k for k, lbl in enumerate(gamma.basis.get(0, []))
                   if lbl == f"u1:{coc.base.basis[0][i]}"]
            e = Element(gamma, 0, {idx[0]: c})
            phit = e if phit is None else phit + e
        total = {}
        for w, c in x.items():
            val = None
            for letter in w:
                if letter[0] == "t":
                    e = phit
                elif letter[0] == "dt":
                    e = phit.d()
                else:
                    e = coc.diag(Element(coc.base, letter[1], {letter[2]: 1}))
                val = e if val is None else val * e
            if val is None:
                val = gamma.unit
            key = val.degree
            cur = total.get(key, Element(gamma, key))
            total[key] = cur + val.scale(c)
        return total


def compare_path_objects(B: ConcreteDgAlg, max_t_letters=4):
    """phi: B * D(t) -> Gamma with phi|B = diag, phi(t) the (0,1)-idempotent;
    checks pi_i o phi = p_i on all words with at most max_t_letters letters
    from the disc.  Returns (cocylinder, report)."""
    coc = cocylinder(B)
    star = StarDisc(B)
    words = star.words_up_to(max_t_letters)
    mismatches = []
    for w in words:
        x = {w: Fraction(1)}
        img = star.phi(x, coc)
        for which, pi in ((0, coc.pi0), (1, coc.pi1)):
            lhs = {}
            for deg, e in img.items():
                pe = pi(e)
                if not pe.is_zero():
                    lhs[deg] = lhs.get(deg, Element(coc.base, deg)) + pe
            rhs = star.p(which, x)
            rhs = {d: e for d, e in rhs.items() if not e.is_zero()}
            lhs = {d: e for d, e in lhs.items() if not e.is_zero()}
            if lhs != rhs:
                mismatches.append((w, which))
    return coc, {"words_checked": len(words), "mismatches": mismatches,
                 "ok": not mismatches}


# -- cochain homotopies -------------------------------------------------------


@dataclass
class DerivationWitness:
    """(f, g)-derivation of degree -1 with f - g = d Delta + Delta d."""

    values: dict                # generator or (degree, index) -> Element
    source_kind: str            # "presentation" | "concrete"
    report: dict = field(default_factory=dict)


def _element_vars(prefix, B: ConcreteDgAlg, degree):
    """A symbolic element of B at `degree`."""
    syms = [sympy.Symbol(f"{prefix}_{k}") for k in range(B.dim(degree))]
    return syms


def _symbolic_to_element(B, degree, syms, solution):
    coeffs = {}
    for k, s in enumerate(syms):
        v = solution.get(s, 0)
        v = sympy.nsimplify(v)
        if v != 0:
            coeffs[k] = Fraction(str(v))
    return Element(B, degree, coeffs)


def cochain_homotopy_presented(f: DgAlgMap, g: DgAlgMap):
    """Delta on a free presentation: solve the linear system for generator
    values, extending by the (f, g)-derivation law."""
    P = f.source
    B = f.target
    if g.source is not P and g.source.generators != P.generators:
        raise ValueError("parallel maps required")

    unknowns = {}
    sym_elements = {}
    for gen, dg in P.generators:
        syms = _element_vars(f"D_{gen}", B, dg - 1)
        unknowns[gen] = (dg - 1, syms)
        sym_elements[gen] = syms

    def delta_of_word(word):
        """Symbolic coefficient dict (degree, index) -> expr for Delta(word)
        via Delta(x1...xk) = sum (-1)^{|prefix|} f(prefix) Delta(xi) g(suffix)."""
        from ..words import Poly
        out = {}
        sign = 1
        for k, letter in enumerate(word):
            deg_letter, syms = unknowns[letter]
            prefix = word[:k]
            suffix = word[k + 1:]
            fpre = f(Poly.word(P.alphabet, prefix)) if prefix else B.unit
            gsuf = g(Poly.word(P.alphabet, suffix)) if suffix else B.unit
            # fpre * Delta(letter) * gsuf with Delta(letter) symbolic
            for idx, s in enumerate(syms):
                mid = Element(B, deg_letter, {idx: 1})
                try:
                    prod = (fpre * mid) * gsuf
                except WindowOverflow:
                    continue
                for i, c in prod.coeffs.items():
                    key = (prod.degree, i)
                    out[key] = out.get(key, 0) + sign * c * s
            sign *= (-1) ** (P.alphabet.degree[letter] & 1)
        return out

    equations = []
    for gen, dg in P.generators:
        lhs = {}
        fg = f(Poly.letter(P.alphabet, gen)) - g(Poly.letter(P.alphabet, gen))
        for i, c in fg.coeffs.items():
            lhs[(dg, i)] = lhs.get((dg, i), 0) + c
        # d(Delta(gen))
        deg_d, syms = unknowns[gen]
        dmat = B.diff_matrix(deg_d)
        rhs = {}
        for idx, s in enumerate(syms):
            for i in range(B.dim(deg_d + 1)):
                if dmat[i][idx]:
                    rhs[(dg, i)] = rhs.get((dg, i), 0) + dmat[i][idx] * s
        # Delta(d(gen))
        for (v, w), c in P.diff[gen].terms.items():
            if not w:
                continue
            for key, expr in delta_of_word(w).items():
                rhs[key] = rhs.get(key, 0) + c * expr
        keys = set(lhs) | set(rhs)
        for key in keys:
            equations.append(sympy.Eq(lhs.get(key, 0) - (rhs.get(key, 0)), 0))
    # relations must be killed by Delta
    for rel in P.relations:
        acc = {}
        for (v, w), c in rel.terms.items():
            if not w:
                continue
            for key, expr in delta_of_word(w).items():
                acc[key] = acc.get(key, 0) + c * expr
        for key, expr in acc.items():
            equations.append(sympy.Eq(expr, 0))

    all_syms = [s for (_, syms) in unknowns.values() for s in syms]
    if not all_syms:
        consistent = all(eq == True or sympy.simplify(eq.lhs) == 0 for eq in equations)  # noqa: E712
        if consistent:
            return DerivationWitness({g_: Element(B, d_ - 1) for g_, d_ in P.generators},
                                     "presentation")
        return None
    sols = sympy.solve(equations, all_syms, dict=True)
    if not sols:
        # distinguish "no solution" from "only the empty assignment"
        if not equations:
            sols = [{}]
        else:
            return None
    sol = sols[0]
    values = {}
    for gen, dg in P.generators:
        deg, syms = unknowns[gen]
        # unsolved symbols are free: set them to zero
        filled = {s: sol.get(s, 0) for s in syms}
        values[gen] = _symbolic_to_element(B, deg, syms, filled)
    witness = DerivationWitness(values, "presentation")
    verify_presented_witness(f, g, witness)
    return witness


def verify_presented_witness(f: DgAlgMap, g: DgAlgMap, witness: DerivationWitness):
    """Re-check f - g = d Delta + Delta d on every generator."""
    P, B = f.source, f.target
    values = witness.values

    def delta_poly(poly: Poly) -> Element:
        total = None
        for (v, w), c in poly.terms.items():
            sign = 1
            for k, letter in enumerate(w):
                prefix, suffix = w[:k], w[k + 1:]
                fpre = f(Poly.word(P.alphabet, prefix)) if prefix else B.unit
                gsuf = g(Poly.word(P.alphabet, suffix)) if suffix else B.unit
                piece = (fpre * values[letter]) * gsuf
                piece = piece.scale(c * sign)
                total = piece if total is None else total + piece
                sign *= (-1) ** (P.alphabet.degree[letter] & 1)
        return total if total is not None else Element(B, 0)

    for gen, dg in P.generators:
        lhs = f(Poly.letter(P.alphabet, gen)) - g(Poly.letter(P.alphabet, gen))
        rhs = values[gen].d() + delta_poly(P.diff[gen])
        if not (lhs - rhs).is_zero():
            raise AssertionError(f"derivation witness fails at generator {gen}")
    return True


def cochain_homotopy_concrete(f: LinearDgAlgMap, g: LinearDgAlgMap):
    """Delta on a concrete source: joint linear solve for the values on the
    basis, with the derivation law imposed on all in-window basis products."""
    A, B = f.source, f.target
    unknowns = {}
    for n in A.basis_degrees():
        for i in range(A.dim(n)):
            unknowns[(n, i)] = (n - 1, _element_vars(f"D_{n}_{i}", B, n - 1))

    def delta_sym(n, i):
        deg, syms = unknowns[(n, i)]
        return deg, syms

    equations = []
    # homotopy equation on each basis element
    for (n, i), (deg, syms) in unknowns.items():
        e = A.basis_element(n, i)
        lhs = f(e) - g(e)
        acc = {}
        dmat = B.diff_matrix(deg)
        for idx, s in enumerate(syms):
            for r in range(B.dim(deg + 1)):
                if dmat[r][idx]:
                    acc[r] = acc.get(r, 0) + dmat[r][idx] * s
        de = e.d()
        for j, c in de.coeffs.items():
            _, syms2 = unknowns[(n + 1, j)]
            for idx, s in enumerate(syms2):
                acc[idx] = acc.get(idx, 0) + c * s
        for r in range(B.dim(n)):
            want = lhs.coeffs.get(r, Fraction(0))
            equations.append(sympy.Eq(acc.get(r, 0) - want, 0))
    # derivation law on basis products
    for n1 in A.basis_degrees():
        for n2 in A.basis_degrees():
            for i1 in range(A.dim(n1)):
                for i2 in range(A.dim(n2)):
                    e1, e2 = A.basis_element(n1, i1), A.basis_element(n2, i2)
                    try:
                        prod = e1 * e2
                    except WindowOverflow:
                        continue
                    # Delta(e1 e2) as a combination of unknowns
                    lhs_acc = {}
                    for j, c in prod.coeffs.items():
                        deg_j, syms_j = unknowns[(n1 + n2, j)]
                        for idx, s in enumerate(syms_j):
                            lhs_acc[idx] = lhs_acc.get(idx, 0) + c * s
                    # Delta(e1) g(e2) + (-1)^{|e1|} f(e1) Delta(e2)
                    rhs_acc = {}
                    deg1, syms1 = unknowns[(n1, i1)]
                    ge2 = g(e2)
                    for idx, s in enumerate(syms1):
                        base = Element(B, deg1, {idx: 1})
                        try:
                            pr = base * ge2
                        except WindowOverflow:
                            continue
                        for r, c in pr.coeffs.items():
                            rhs_acc[r] = rhs_acc.get(r, 0) + c * s
                    sign = -1 if n1 % 2 else 1
                    fe1 = f(e1)
                    deg2, syms2 = unknowns[(n2, i2)]
                    for idx, s in enumerate(syms2):
                        base = Element(B, deg2, {idx: 1})
                        try:
                            pr = fe1 * base
                        except WindowOverflow:
                            continue
                        for r, c in pr.coeffs.items():
                            rhs_acc[r] = rhs_acc.get(r, 0) + sign * c * s
                    dim_out = B.dim(n1 + n2 - 1)
                    for r in range(dim_out):
                        equations.append(
                            sympy.Eq(lhs_acc.get(r, 0) - rhs_acc.get(r, 0), 0))

    all_syms = [s for (_, syms) in unknowns.values() for s in syms]
    if not all_syms:
        ok = all(sympy.simplify(eq.lhs) == 0 for eq in equations if eq is not True)
        return DerivationWitness({}, "concrete") if ok else None
    sols = sympy.solve(equations, all_syms, dict=True)
    if not sols:
        if not equations:
            sols = [{}]
        else:
            return None
    sol = sols[0]
    values = {}
    for key, (deg, syms) in unknowns.items():
        filled = {s: sol.get(s, 0) for s in syms}
        values[key] = _symbolic_to_element(B, deg, syms, filled)
    return DerivationWitness(values, "concrete")


def cochain_homotopy(f, g):
    """Dispatch on the source kind."""
    if isinstance(f, DgAlgMap):
        return cochain_homotopy_presented(f, g)
    return cochain_homotopy_concrete(f, g)


# -- elementary homotopy -------------------------------------------------------


@dataclass
class ElementaryHomotopyResult:
    witness: dict | None       # generator -> element dict of B * D(t)
    status: str                # "found" | "none-within-bound" | "trivial"
    bound: int
    detail: dict = field(default_factory=dict)


def elementary_homotopy(f: DgAlgMap, g: DgAlgMap, max_t_letters=6,
                        guard_unknowns=400) -> ElementaryHomotopyResult:
    """Search for K: A -> B * D(t) with p0 K = f and p1 K = g, with the
    ansatz bounded by the number of disc letters.  The constraint system is
    polynomial; sympy decides it exactly within the ansatz space, so a
    "none" verdict certifies emptiness at this bound (a semi-decision for
    the unbounded question)."""
    P = f.source
    B = f.target
    star = StarDisc(B)

    if all((f(Poly.letter(P.alphabet, gen)) - g(Poly.letter(P.alphabet, gen))).is_zero()
           for gen, _ in P.generators):
        witness = {gen: star.from_b(f(Poly.letter(P.alphabet, gen)))
                   for gen, _ in P.generators}
        return ElementaryHomotopyResult(witness, "trivial", max_t_letters)

    # ansatz: K(gen) = sum of coefficients over words of the right degree
    unknowns = {}
    sym_count = 0
    for gen, dg in P.generators:
        words = star.words_up_to(max_t_letters, degree=dg)
        syms = [sympy.Symbol(f"K_{gen}_{k}") for k in range(len(words))]
        sym_count += len(syms)
        unknowns[gen] = (words, syms)
    if sym_count > guard_unknowns:
        return ElementaryHomotopyResult(None, "none-within-bound", max_t_letters,
                                        {"reason": "guard exceeded",
                                         "unknowns": sym_count})

    def k_image(gen):
        words, syms = unknowns[gen]
        return {w: s for w, s in zip(words, syms)}

    def eval_poly(poly: Poly):
        total = {}
        for (v, w), c in poly.terms.items():
            piece = star.unit()
            for letter in w:
                piece = star.mul(piece, k_image(letter))
            piece = star.scale(piece, c)
            total = star.add(total, piece)
        return total

    equations = []
    for gen, dg in P.generators:
        img = k_image(gen)
        # p0 K = f, p1 K = g
        for which, target_map in ((0, f), (1, g)):
            proj = star.p(which, img)
            want = target_map(Poly.letter(P.alphabet, gen))
            for deg, e in proj.items():
                wvec = want.coeffs if deg == want.degree else {}
                for r in range(B.dim(deg)):
                    lhs = e.coeffs.get(r, 0)
                    rhs = wvec.get(r, Fraction(0))
                    equations.append(sympy.Eq(lhs - rhs, 0))
            if want.degree not in proj and not want.is_zero():
                equations.append(sympy.Eq(sympy.Integer(1), 0))
        # d K(gen) = K(d gen)
        lhs = star.d(img)
        rhs = eval_poly(P.diff[gen])
        for w in set(lhs) | set(rhs):
            equations.append(sympy.Eq(lhs.get(w, 0) - rhs.get(w, 0), 0))
    for rel in P.relations:
        img = eval_poly(rel)
        for w, c in img.items():
            equations.append(sympy.Eq(c, 0))

    all_syms = [s for (_, syms) in unknowns.values() for s in syms]
    equations = [eq for eq in equations if eq is not sympy.true]
    if any(eq is sympy.false for eq in equations):
        return ElementaryHomotopyResult(None, "none-within-bound", max_t_letters)
    try:
        sols = sympy.solve(equations, all_syms, dict=True)
    except NotImplementedError:
        sols = sympy.solve([eq.lhs for eq in equations], all_syms, dict=True)
    if not sols:
        return ElementaryHomotopyResult(None, "none-within-bound", max_t_letters,
                                        {"equations": len(equations)})
    sol = sols[0]
    witness = {}
    leftover = set()
    for gen, (words, syms) in unknowns.items():
        img = {}
        for w, s in zip(words, syms):
            val = sol.get(s, None)
            if val is None:
                val = 0
            if getattr(val, "free_symbols", None):
                leftover |= val.free_symbols
                continue
            v = sympy.nsimplify(val)
            if v != 0:
                img[w] = Fraction(str(v))
        witness[gen] = img
    if leftover:
        # parameterized family: pin all free parameters to zero and re-solve
        pinned = {s: 0 for s in leftover}
        witness = {}
        for gen, (words, syms) in unknowns.items():
            img = {}
            for w, s in zip(words, syms):
                val = sol.get(s, 0)
                val = sympy.nsimplify(sympy.sympify(val).subs(pinned))
                if val != 0:
                    img[w] = Fraction(str(val))
            witness[gen] = img
    report = verify_elementary_witness(f, g, witness, star)
    if not report["ok"]:
        raise AssertionError(f"elementary homotopy witness failed: {report}")
    return ElementaryHomotopyResult(witness, "found", max_t_letters)


def verify_elementary_witness(f: DgAlgMap, g: DgAlgMap, witness, star: StarDisc):
    """Check p0 K = f, p1 K = g and d-compatibility on generators."""
    P, B = f.source, f.target
    problems = []

    def eval_poly(poly: Poly):
        total = {}
        for (v, w), c in poly.terms.items():
            piece = star.unit()
            for letter in w:
                piece = star.mul(piece, witness[letter])
            total = star.add(total, star.scale(piece, c))
        return total

    for gen, dg in P.generators:
        img = witness[gen]
        for which, target_map in ((0, f), (1, g)):
            proj = star.p(which, img)
            want = target_map(Poly.letter(P.alphabet, gen))
            got = proj.get(want.degree, B.zero(want.degree))
            extras = {d: e for d, e in proj.items()
                      if d != want.degree and not e.is_zero()}
            if not (got - want).is_zero() or extras:
                problems.append((gen, f"p{which}"))
        lhs = star.d(img)
        rhs = eval_poly(P.diff[gen])
        if lhs != rhs:
            problems.append((gen, "d-compatibility"))
    for rel in P.relations:
        if eval_poly(rel):
            problems.append(("relation", "nonzero image"))
    return {"ok": not problems, "problems": problems}
