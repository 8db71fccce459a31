"""Homotopy of functors: three independent decision routes (direct natural
isomorphism search, a cylinder homotopy through C x I, a path homotopy into
Hom(I, D)), plus Hom sets of the homotopy category."""

from __future__ import annotations

from dataclasses import dataclass

from ..fincat import Functor, NatTransf, enumerate_functors
from ..fincat.enumfun import are_naturally_isomorphic, natural_isos
from .interval import cylinder, hom_from_interval, path_object, _pair, _triple


@dataclass
class NatIsoDecision:
    found: bool
    eta: NatTransf | None
    H: Functor | None       # cylinder homotopy C x I -> D
    K: Functor | None       # path homotopy C -> Hom(I, D)
    routes: tuple           # the three booleans, in the order above

    @property
    def agree(self):
        return len(set(self.routes)) == 1


def _cylinder_route(F: Functor, G: Functor, guard):
    C, D = F.source, F.target
    cyl = cylinder(C)
    fixed_obj = {}
    fixed_mor = {}
    for x in C.objects:
        fixed_obj[_pair(x, "0")] = F.obj_map[x]
        fixed_obj[_pair(x, "1")] = G.obj_map[x]
    for m in C.morphism_ids:
        fixed_mor[_pair(m, "id_0")] = F.mor_map[m]
        fixed_mor[_pair(m, "id_1")] = G.mor_map[m]
    for H in enumerate_functors(cyl.cyl, D, fixed_obj=fixed_obj,
                                fixed_mor=fixed_mor, guard=guard):
        lhs0 = cyl.iota0.then(H)
        lhs1 = cyl.iota1.then(H)
        if (lhs0.obj_map == F.obj_map and lhs0.mor_map == F.mor_map
                and lhs1.obj_map == G.obj_map and lhs1.mor_map == G.mor_map):
            return H
    return None


def _path_route(F: Functor, G: Functor, guard):
    C, D = F.source, F.target
    path = path_object(D)
    for K in enumerate_functors(C, path.path_cat, guard=guard):
        k0 = K.then(path.p0)
        k1 = K.then(path.p1)
        if (k0.obj_map == F.obj_map and k0.mor_map == F.mor_map
                and k1.obj_map == G.obj_map and k1.mor_map == G.mor_map):
            return K
    return None


def eta_to_cylinder_homotopy(eta: NatTransf) -> Functor:
    """The explicit H with H(., 0) = F, H(., 1) = G and H(f, a) determined
    by the naturality square of eta."""
    F, G = eta.F, eta.G
    C, D = F.source, F.target
    cyl = cylinder(C).cyl
    obj = {}
    for x in C.objects:
        obj[_pair(x, "0")] = F.obj_map[x]
        obj[_pair(x, "1")] = G.obj_map[x]
    mor = {}
    for m in C.morphism_ids:
        y = C.cod[m]
        mor[_pair(m, "id_0")] = F.mor_map[m]
        mor[_pair(m, "id_1")] = G.mor_map[m]
        mor[_pair(m, "a")] = D.compose(eta.at(y), F.mor_map[m])
        mor[_pair(m, "a_inv")] = D.compose(F.mor_map[m], D.inverse_of(eta.at(C.dom[m])))
    H = Functor("H(eta)", cyl, D, obj, mor)
    if not H.validate().ok:
        raise AssertionError("cylinder homotopy built from eta is not a functor")
    return H


def eta_to_path_homotopy(eta: NatTransf) -> Functor:
    """The explicit K sending C to the triple (F(C), eta_C, G(C))."""
    F, G = eta.F, eta.G
    C, D = F.source, F.target
    path_cat, _ = hom_from_interval(D)
    obj = {x: _triple(F.obj_map[x], eta.at(x), G.obj_map[x]) for x in C.objects}
    mor = {m: f"{obj[C.dom[m]]}>{obj[C.cod[m]]}:({F.mor_map[m]},{G.mor_map[m]})"
           for m in C.morphism_ids}
    K = Functor("K(eta)", C, path_cat, obj, mor)
    if not K.validate().ok:
        raise AssertionError("path homotopy built from eta is not a functor")
    return K


def naturally_isomorphic(F: Functor, G: Functor, guard=2_000_000) -> NatIsoDecision:
    """Decide F ~= G three independent ways and insist the answers agree."""
    if F.source != G.source or F.target != G.target:
        raise ValueError("parallel functors required")
    etas = natural_isos(F, G, first_only=True, guard=guard)
    eta = etas[0] if etas else None
    H = _cylinder_route(F, G, guard)
    K = _path_route(F, G, guard)
    routes = (eta is not None, H is not None, K is not None)
    decision = NatIsoDecision(found=all(routes), eta=eta, H=H, K=K, routes=routes)
    if not decision.agree:
        raise AssertionError(
            f"natural-isomorphism routes disagree for {F.name}, {G.name}: {routes}")
    if eta is not None:
        # transport checks: eta induces valid cylinder and path homotopies
        eta_to_cylinder_homotopy(eta)
        eta_to_path_homotopy(eta)
    return decision


def ho_hom(C, D, guard=2_000_000):
    """Hom in the homotopy category: functors C -> D up to natural
    isomorphism, as a deterministic list of classes."""
    fns = enumerate_functors(C, D, guard=guard)
    classes: list[list] = []
    for F in fns:
        for cls in classes:
            if are_naturally_isomorphic(cls[0], F, guard=guard):
                cls.append(F)
                break
        else:
            classes.append([F])
    return classes
