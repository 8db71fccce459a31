"""The two explicit factorizations of a functor through its cylinder and
cocylinder, plus the pushout/pullback descriptions relating them to C x I
and Hom(I, D)."""

from __future__ import annotations

from dataclasses import dataclass

from ..fincat import FinCat, Functor, enumerate_functors
from .classify import FunctorClassification, classify
from .interval import cylinder, hom_from_interval, _pair, _triple


def _dmor(x, y, d):
    return f"{x}>{y}:{d}"


@dataclass
class CylinderFactorization:
    """F = p o j through the functor cylinder D' (objects src/C + tgt/D)."""

    F: Functor
    dprime: FinCat
    j: Functor             # C -> D', an injection
    p: Functor             # D' -> D, an acyclic isofibration
    inc: Functor           # D -> D', the full inclusion of the target copy
    j_class: FunctorClassification
    p_class: FunctorClassification


def functor_cylinder_factorization(F: Functor) -> CylinderFactorization:
    C, D = F.source, F.target
    src = {x: f"src/{x}" for x in C.objects}
    tgt = {y: f"tgt/{y}" for y in D.objects}
    objs = [src[x] for x in C.objects] + [tgt[y] for y in D.objects]

    def lower(o):
        """The D-object underlying a D' object."""
        return F.obj_map[o[4:]] if o.startswith("src/") else o[4:]

    mors = []
    under = {}
    for o1 in objs:
        for o2 in objs:
            for d in D.hom(lower(o1), lower(o2)):
                m = _dmor(o1, o2, d)
                mors.append((m, o1, o2))
                under[m] = d
    ident = {o: _dmor(o, o, D.identity[lower(o)]) for o in objs}
    comp = {}
    for (g, gd, gc) in mors:
        for (f, fd, fc) in mors:
            if fc != gd:
                continue
            comp[(g, f)] = _dmor(fd, gc, D.compose(under[g], under[f]))
    dprime = FinCat(f"cyl({F.name})", objs, mors, ident, comp)

    j = Functor("j", C, dprime,
                {x: src[x] for x in C.objects},
                {m: _dmor(src[C.dom[m]], src[C.cod[m]], F.mor_map[m])
                 for m in C.morphism_ids})
    p = Functor("p", dprime, D, {o: lower(o) for o in objs}, dict(under))
    inc = Functor("inc", D, dprime,
                  {y: tgt[y] for y in D.objects},
                  {m: _dmor(tgt[D.dom[m]], tgt[D.cod[m]], m) for m in D.morphism_ids})
    out = CylinderFactorization(F, dprime, j, p, inc, classify(j), classify(p))
    composite = j.then(p)
    if composite.obj_map != F.obj_map or composite.mor_map != F.mor_map:
        raise AssertionError("cylinder factorization does not recompose to F")
    if not out.j_class.injection:
        raise AssertionError("j is not an injection")
    if not out.p_class.acyclic_isofibration:
        raise AssertionError("p is not an acyclic isofibration")
    return out


@dataclass
class CocylinderFactorization:
    """F = q o iota through the functor cocylinder C' of triples
    (C, alpha, D) with alpha: F(C) -> D an isomorphism."""

    F: Functor
    cprime: FinCat
    iota: Functor          # C -> C', an acyclic injection
    q: Functor             # C' -> D, an isofibration
    pr1: Functor           # C' -> C
    triple_data: dict
    iota_class: FunctorClassification
    q_class: FunctorClassification


def functor_cocylinder_factorization(F: Functor) -> CocylinderFactorization:
    C, D = F.source, F.target
    objs = []
    data = {}
    for c in C.objects:
        fc = F.obj_map[c]
        for a in D.morphism_ids:
            if D.dom[a] == fc and D.is_iso(a):
                t = _triple(c, a, D.cod[a])
                objs.append(t)
                data[t] = (c, a, D.cod[a])
    mors = []
    under = {}
    for t1 in objs:
        for t2 in objs:
            for f in C.hom(data[t1][0], data[t2][0]):
                m = _dmor(t1, t2, f)
                mors.append((m, t1, t2))
                under[m] = f
    ident = {t: _dmor(t, t, C.identity[data[t][0]]) for t in objs}
    comp = {}
    for (g, gd, gc) in mors:
        for (f, fd, fc) in mors:
            if fc != gd:
                continue
            comp[(g, f)] = _dmor(fd, gc, C.compose(under[g], under[f]))
    cprime = FinCat(f"cocyl({F.name})", objs, mors, ident, comp)

    iota = Functor(
        "iota", C, cprime,
        {c: _triple(c, D.identity[F.obj_map[c]], F.obj_map[c]) for c in C.objects},
        {m: _dmor(_triple(C.dom[m], D.identity[F.obj_map[C.dom[m]]], F.obj_map[C.dom[m]]),
                  _triple(C.cod[m], D.identity[F.obj_map[C.cod[m]]], F.obj_map[C.cod[m]]),
                  m)
         for m in C.morphism_ids})
    q_obj = {t: data[t][2] for t in objs}
    q_mor = {}
    for (m, t1, t2) in mors:
        a1, a2 = data[t1][1], data[t2][1]
        q_mor[m] = D.compose(D.compose(a2, F.mor_map[under[m]]), D.inverse_of(a1))
    q = Functor("q", cprime, D, q_obj, q_mor)
    pr1 = Functor("pr1", cprime, C,
                  {t: data[t][0] for t in objs}, dict(under))
    out = CocylinderFactorization(F, cprime, iota, q, pr1, data,
                                  classify(iota), classify(q))
    composite = iota.then(q)
    if composite.obj_map != F.obj_map or composite.mor_map != F.mor_map:
        raise AssertionError("cocylinder factorization does not recompose to F")
    if not out.iota_class.acyclic_injection:
        raise AssertionError("iota is not an acyclic injection")
    if not out.q_class.isofibration:
        raise AssertionError("q is not an isofibration")
    return out


@dataclass
class UniversalCheck:
    ok: bool
    cocones_checked: int
    detail: str = ""


def cylinder_pushout_check(F: Functor, test_categories, guard=2_000_000) -> UniversalCheck:
    """The square  C --F--> D,  iota0 v  v inc,  C x I --H--> D'  is a
    pushout: against each test category, every compatible cocone factors
    uniquely through D'."""
    C, D = F.source, F.target
    fac = functor_cylinder_factorization(F)
    cyl = cylinder(C)
    # H: C x I -> D', constant at F(f) in the interval direction
    h_obj = {}
    for x in C.objects:
        h_obj[_pair(x, "0")] = f"tgt/{F.obj_map[x]}"
        h_obj[_pair(x, "1")] = f"src/{x}"
    h_mor = {}
    for (pm, pd, pc) in cyl.cyl.morphisms:
        # product morphism (f, w): image is represented by F(f)
        f = cyl.pr.mor_map[pm]
        h_mor[pm] = _dmor(h_obj[pd], h_obj[pc], F.mor_map[f])
    H = Functor("H", cyl.cyl, fac.dprime, h_obj, h_mor)
    if not H.validate().ok:
        raise AssertionError("remark homotopy H is not a functor")
    lhs = F.then(fac.inc)
    rhs = cyl.iota0.then(H)
    if lhs.obj_map != rhs.obj_map or lhs.mor_map != rhs.mor_map:
        raise AssertionError("pushout square does not commute")
    # the equational chain recovers F = p o j
    pj = fac.j.then(fac.p)
    h1p = cyl.iota1.then(H).then(fac.p)
    if pj.mor_map != F.mor_map or h1p.mor_map != F.mor_map:
        raise AssertionError("equational chain fails to recover F = p j")

    checked = 0
    for T in test_categories:
        us = enumerate_functors(cyl.cyl, T, guard=guard)
        vs = enumerate_functors(D, T, guard=guard)
        ws = enumerate_functors(fac.dprime, T, guard=guard)
        for u in us:
            u0 = cyl.iota0.then(u)
            for v in vs:
                if F.then(v).obj_map != u0.obj_map or F.then(v).mor_map != u0.mor_map:
                    continue
                checked += 1
                mediating = [w for w in ws
                             if (H.then(w).obj_map == u.obj_map
                                 and H.then(w).mor_map == u.mor_map
                                 and fac.inc.then(w).obj_map == v.obj_map
                                 and fac.inc.then(w).mor_map == v.mor_map)]
                if len(mediating) != 1:
                    return UniversalCheck(False, checked,
                                          f"{len(mediating)} mediating maps")
    return UniversalCheck(True, checked)


def cocylinder_pullback_check(F: Functor, test_categories, guard=2_000_000) -> UniversalCheck:
    """The square  C' --K--> Hom(I, D),  pr1 v  v p0,  C --F--> D  is a
    pullback: cones from each test category factor uniquely through C'."""
    C, D = F.source, F.target
    fac = functor_cocylinder_factorization(F)
    hom_id, hdata = hom_from_interval(D)
    k_obj = {}
    k_mor = {}
    for t in fac.cprime.objects:
        (c, a, d) = fac.triple_data[t]
        k_obj[t] = _triple(F.obj_map[c], a, d)
    for (m, t1, t2) in fac.cprime.morphisms:
        f0 = F.mor_map[fac.pr1.mor_map[m]]
        f1 = fac.q.mor_map[m]
        k_mor[m] = f"{k_obj[t1]}>{k_obj[t2]}:({f0},{f1})"
    K = Functor("K", fac.cprime, hom_id, k_obj, k_mor)
    if not K.validate().ok:
        raise AssertionError("remark homotopy K is not a functor")
    # square p0 o K = F o pr1
    p0 = Functor("p0", hom_id, D,
                 {t: hdata["objects"][t][0] for t in hom_id.objects},
                 {m: hdata["morphisms"][m][0] for m in hom_id.morphism_ids})
    p1 = Functor("p1", hom_id, D,
                 {t: hdata["objects"][t][2] for t in hom_id.objects},
                 {m: hdata["morphisms"][m][1] for m in hom_id.morphism_ids})
    lhs = K.then(p0)
    rhs = fac.pr1.then(F)
    if lhs.obj_map != rhs.obj_map or lhs.mor_map != rhs.mor_map:
        raise AssertionError("pullback square does not commute")
    # equational chain: q = p1 K recovers F = q iota
    p1k = K.then(p1)
    if p1k.obj_map != fac.q.obj_map or p1k.mor_map != fac.q.mor_map:
        raise AssertionError("p1 K differs from q")
    qi = fac.iota.then(fac.q)
    if qi.mor_map != F.mor_map:
        raise AssertionError("equational chain fails to recover F = q iota")

    checked = 0
    for T in test_categories:
        us = enumerate_functors(T, C, guard=guard)
        vs = enumerate_functors(T, hom_id, guard=guard)
        ws = enumerate_functors(T, fac.cprime, guard=guard)
        for u in us:
            uf = u.then(F)
            for v in vs:
                if v.then(p0).obj_map != uf.obj_map or v.then(p0).mor_map != uf.mor_map:
                    continue
                checked += 1
                mediating = [w for w in ws
                             if (w.then(fac.pr1).obj_map == u.obj_map
                                 and w.then(fac.pr1).mor_map == u.mor_map
                                 and w.then(K).obj_map == v.obj_map
                                 and w.then(K).mor_map == v.mor_map)]
                if len(mediating) != 1:
                    return UniversalCheck(False, checked,
                                          f"{len(mediating)} mediating maps")
    return UniversalCheck(True, checked)
