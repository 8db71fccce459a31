"""Differential graded algebras by free presentation: a list of graded
generators, a differential on generators (extended by the Koszul rule) and
optionally two-sided ideal relations.

Spheres and discs are the one- and two-generator cases; cell attachments,
free products and deformed tensor algebras are presentation surgery."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..words import Alphabet, Poly


class DgAlgPresentation:
    def __init__(self, name, generators, diff, relations=None):
        """generators: list of (name, degree); diff: name -> Poly (or dict
        of Polys over this presentation's alphabet); relations: list of
        homogeneous Polys generating a two-sided dg ideal."""
        self.name = name
        self.generators = [(g, int(d)) for (g, d) in generators]
        self.alphabet = Alphabet([(g, d) for (g, d) in self.generators])
        self.diff = {}
        for g, _ in self.generators:
            dx = diff.get(g)
            if dx is None:
                dx = Poly.zero(self.alphabet)
            self.diff[g] = dx
        self.relations = list(relations or [])
        self._check()

    def _check(self):
        degree = dict(self.generators)
        if len(degree) != len(self.generators):
            raise ValueError("duplicate generator names")
        for g, dg in self.generators:
            dx = self.diff[g]
            if dx.is_zero():
                continue
            if not dx.is_homogeneous() or dx.degree() != dg + 1:
                raise ValueError(f"d({g}) must be homogeneous of degree {dg + 1}")
        for rel in self.relations:
            if not rel.is_homogeneous():
                raise ValueError("relations must be homogeneous")
        # d^2 = 0 on generators, expanded symbolically; with relations the
        # residual must lie in the ideal (checked here only when it is
        # literally a combination of relation terms times words -- the
        # windowed span check lives in truncate()).
        for g, _ in self.generators:
            ddg = self.diff[g].differential(self.diff)
            if not ddg.is_zero() and not self.relations:
                raise ValueError(f"d^2({g}) = {ddg.pretty()} != 0")

    def degree_of(self, g):
        return self.alphabet.degree[g]

    def gen_names(self):
        return [g for g, _ in self.generators]

    def poly(self, *letters, coeff=1) -> Poly:
        return Poly.word(self.alphabet, letters, coeff=coeff)

    def unit_poly(self) -> Poly:
        return Poly.unit(self.alphabet)

    def d(self, p: Poly) -> Poly:
        return p.differential(self.diff)

    def __repr__(self):
        gens = ", ".join(f"{g}:{d}" for g, d in self.generators)
        return f"DgAlgPresentation({self.name!r}, [{gens}])"


def ground(name="K") -> DgAlgPresentation:
    """The ground field as the empty presentation."""
    return DgAlgPresentation(name, [], {})


def sphere(n: int, gen="u") -> DgAlgPresentation:
    """S(n) = K[u] with |u| = -n and zero differential."""
    return DgAlgPresentation(f"S({n})", [(gen, -n)], {})


def disc(n: int, gen="t") -> DgAlgPresentation:
    """D(n) = K<t, dt> with |t| = -n, |dt| = 1 - n and d(t) = dt."""
    dgen = f"d{gen}"
    p = DgAlgPresentation(f"D({n})", [(gen, -n), (dgen, 1 - n)], {})
    p.diff[gen] = Poly.letter(p.alphabet, dgen)
    p._check()
    return p


def sphere_to_disc(n: int, sphere_gen="u", disc_gen="t"):
    """The generating cofibration S(n) -> D(n+1), u -> dt, as a generator
    image table."""
    return {sphere_gen: f"d{disc_gen}"}


def _transport(poly: Poly, target: DgAlgPresentation, rename) -> Poly:
    out = Poly.zero(target.alphabet)
    for (v, w), c in poly.terms.items():
        if w:
            out = out + Poly.word(target.alphabet, tuple(rename(x) for x in w), coeff=c)
        else:
            out = out + Poly.unit(target.alphabet).scale(c)
    return out


def free_product(A: DgAlgPresentation, B: DgAlgPresentation,
                 prefixes=("", "")) -> DgAlgPresentation:
    """Coproduct: generators side by side.  Colliding names get the given
    prefixes (or 'left/', 'right/' when left unset and needed)."""
    pa, pb = prefixes
    overlap = set(A.gen_names()) & set(B.gen_names())
    if overlap and not (pa or pb):
        pa, pb = "left/", "right/"
    ra = lambda g: f"{pa}{g}"
    rb = lambda g: f"{pb}{g}"
    gens = [(ra(g), d) for (g, d) in A.generators] + \
           [(rb(g), d) for (g, d) in B.generators]
    out = DgAlgPresentation(f"{A.name}*{B.name}", gens, {})
    for g, _ in A.generators:
        out.diff[ra(g)] = _transport(A.diff[g], out, ra)
    for g, _ in B.generators:
        out.diff[rb(g)] = _transport(B.diff[g], out, rb)
    out.relations = [_transport(r, out, ra) for r in A.relations] + \
                    [_transport(r, out, rb) for r in B.relations]
    out._check()
    return out


def adjoin_variable(A: DgAlgPresentation, x: Poly, tname="t") -> DgAlgPresentation:
    """A<t; x>: freely adjoin t with d(t) = x, |t| = |x| - 1.  The cocycle x
    becomes a coboundary in the extension."""
    if tname in A.alphabet.degree:
        raise ValueError(f"generator {tname} already present")
    if x.is_zero():
        raise ValueError("x = 0 leaves the degree of t undetermined; "
                         "use adjoin_variable_deg")
    if not x.is_homogeneous():
        raise ValueError("attaching cocycle must be homogeneous")
    if not A.d(x).is_zero():
        raise ValueError("attaching element is not a cocycle")
    tdeg = x.degree() - 1
    gens = list(A.generators) + [(tname, tdeg)]
    out = DgAlgPresentation(f"{A.name}<{tname}>", gens, {})
    keep = lambda g: g
    for g, _ in A.generators:
        out.diff[g] = _transport(A.diff[g], out, keep)
    out.diff[tname] = _transport(x, out, keep)
    out.relations = [_transport(r, out, keep) for r in A.relations]
    out._check()
    return out


def adjoin_variable_deg(A: DgAlgPresentation, tdeg: int, x: Poly | None,
                        tname="t") -> DgAlgPresentation:
    """adjoin_variable allowing x = 0 (then tdeg must be given)."""
    if x is not None and not x.is_zero():
        return adjoin_variable(A, x, tname)
    gens = list(A.generators) + [(tname, tdeg)]
    out = DgAlgPresentation(f"{A.name}<{tname}>", gens, {})
    for g, _ in A.generators:
        out.diff[g] = _transport(A.diff[g], out, lambda g_: g_)
    out.relations = [_transport(r, out, lambda g_: g_) for r in A.relations]
    out._check()
    return out


def deformed_tensor(A: DgAlgPresentation, W, alpha: dict,
                    d_w: dict | None = None, name=None) -> DgAlgPresentation:
    """T_A(A (x) W (x) A; alpha): adjoin the graded letters W (list of
    (name, degree)) with d'(w) = d_W(w) + alpha(w), alpha landing in A.

    Compatibility d_A(alpha(w)) = -alpha(d_W(w)) is verified generator by
    generator and violations are rejected."""
    d_w = d_w or {}
    gens = list(A.generators) + [(w, int(d)) for (w, d) in W]
    out = DgAlgPresentation(name or f"T_{A.name}(W;alpha)", gens, {})
    keep = lambda g: g
    for g, _ in A.generators:
        out.diff[g] = _transport(A.diff[g], out, keep)
    w_names = [w for (w, _) in W]
    for w, wd in W:
        aw = alpha.get(w, Poly.zero(A.alphabet))
        if not aw.is_zero():
            if not aw.is_homogeneous() or aw.degree() != wd + 1:
                raise ValueError(f"alpha({w}) must have degree {wd} + 1")
        dw = d_w.get(w)
        dw_t = _transport(dw, out, keep) if dw is not None else Poly.zero(out.alphabet)
        out.diff[w] = dw_t + _transport(aw, out, keep)
    # alpha compatibility: d_A(alpha(w)) = -alpha(d_W(w)) on generators
    for w, wd in W:
        aw = alpha.get(w, Poly.zero(A.alphabet))
        lhs = A.d(aw)
        rhs = Poly.zero(A.alphabet)
        dw = d_w.get(w)
        if dw is not None:
            # d_W(w) is a combination of W letters; apply alpha linearly
            for (v, word), c in dw.terms.items():
                if len(word) != 1 or word[0] not in w_names:
                    raise ValueError("d_W must be a linear combination of W letters")
                rhs = rhs + alpha.get(word[0], Poly.zero(A.alphabet)).scale(c)
        if not (lhs + rhs).is_zero():
            raise ValueError(f"alpha incompatible with d_W at generator {w}")
    out.relations = [_transport(r, out, keep) for r in A.relations]
    out._check()
    return out


@dataclass
class SemiFreenessWitness:
    layers: list          # list of lists of generator names

    def layer_of(self):
        return {g: i for i, layer in enumerate(self.layers) for g in layer}


def is_semi_free(P: DgAlgPresentation):
    """Greedy topological layering of generators by differential support;
    returns a SemiFreenessWitness or (None, cycle-certificate)."""
    if P.relations:
        return None, {"reason": "presentation has relations"}
    deps = {}
    for g, _ in P.generators:
        support = {x for (_, w) in P.diff[g].terms.keys() for x in w}
        deps[g] = support
    placed = {}
    layers = []
    remaining = set(g for g, _ in P.generators)
    while remaining:
        layer = sorted(g for g in remaining if deps[g] <= set(placed))
        if not layer:
            cycle = sorted(remaining)
            return None, {"reason": "cyclic differential dependency",
                          "generators": cycle}
        for g in layer:
            placed[g] = len(layers)
        layers.append(layer)
        remaining -= set(layer)
    witness = SemiFreenessWitness(layers)
    # verify: d(x) lies in the subalgebra on strictly earlier layers
    lvl = witness.layer_of()
    for g, _ in P.generators:
        for (_, w) in P.diff[g].terms.keys():
            if any(lvl[x] >= lvl[g] for x in w):
                return None, {"reason": "layering failed verification"}
    return witness, None


def presentations_isomorphic(P: DgAlgPresentation, Q: DgAlgPresentation,
                             max_generators=8) -> dict | None:
    """A degree-preserving generator bijection matching differentials and
    relations, or None.  Exhaustive over bijections (small presentations)."""
    if len(P.generators) != len(Q.generators):
        return None
    if sorted(d for _, d in P.generators) != sorted(d for _, d in Q.generators):
        return None
    if len(P.generators) > max_generators:
        raise ValueError("presentation too large for exhaustive isomorphism search")
    q_by_degree: dict[int, list] = {}
    for g, d in Q.generators:
        q_by_degree.setdefault(d, []).append(g)
    p_names = [g for g, _ in P.generators]
    p_degs = {g: d for g, d in P.generators}

    def candidates(assignment, i):
        if i == len(p_names):
            yield dict(assignment)
            return
        g = p_names[i]
        for h in q_by_degree.get(p_degs[g], []):
            if h in assignment.values():
                continue
            assignment[g] = h
            yield from candidates(assignment, i + 1)
            del assignment[g]

    def normalized(poly: Poly):
        if not poly.terms:
            return frozenset()
        lead = min(poly.terms)
        c = poly.terms[lead]
        return frozenset((k, v / c) for k, v in poly.terms.items())

    q_relations = {normalized(r) for r in Q.relations}
    for phi in candidates({}, 0):
        rename = lambda g: phi[g]
        ok = True
        for g, _ in P.generators:
            if _transport(P.diff[g], Q, rename) != Q.diff[phi[g]]:
                ok = False
                break
        if ok and {normalized(_transport(r, Q, rename))
                   for r in P.relations} == q_relations:
            return dict(phi)
    return None
