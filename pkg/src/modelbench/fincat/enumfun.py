"""Brute-force enumeration of functors and natural transformations.

These enumerators are the oracle layer for everything else: lifting search,
equivalence checks and homotopy decisions all reduce to them.  Results come
back in a deterministic order (source order x target hom-list order).
"""

from __future__ import annotations

from .core import FinCat, Functor, NatTransf, identity_functor


class GuardExceeded(Exception):
    """Raised when an enumeration would exceed its configured size guard."""


def _composition_buckets(C: FinCat, order_index):
    """For each position p, the composable triples (g, f, h=g∘f) over
    non-identity g, f that become checkable once position p is assigned."""
    idents = set(C.identity.values())
    buckets: dict[int, list] = {}
    for (g, f), h in C.compose_table.items():
        if g in idents or f in idents:
            continue
        ready = max(order_index[g], order_index[f],
                    order_index[h] if h not in idents else -1)
        buckets.setdefault(ready, []).append((g, f, h))
    return buckets


def enumerate_functors(C: FinCat, D: FinCat, fixed_obj=None, fixed_mor=None,
                       guard=2_000_000, first_only=False, mor_injective=False):
    """All functors C -> D, via backtracking over object and morphism images.

    fixed_obj / fixed_mor pre-pin images (used to enumerate under
    constraints, e.g. liftings).  `guard` bounds the number of search nodes.
    """
    idents = set(C.identity.values())
    free_mors = [m for m in C.morphism_ids if m not in idents]
    order_index = {m: i for i, m in enumerate(free_mors)}
    buckets = _composition_buckets(C, order_index)
    fixed_obj = dict(fixed_obj or {})
    fixed_mor = dict(fixed_mor or {})

    results = []
    nodes = 0
    obj_list = list(C.objects)

    def check_bucket(p, obj_map, mor_map):
        for (g, f, h) in buckets.get(p, ()):
            expected = (D.identity[obj_map[C.dom[h]]] if h in idents
                        else mor_map[h])
            if D.compose(mor_map[g], mor_map[f]) != expected:
                return False
        return True

    def assign_mors(p, obj_map, mor_map):
        nonlocal nodes
        if p == len(free_mors):
            full_mor = dict(mor_map)
            for x in C.objects:
                full_mor[C.identity[x]] = D.identity[obj_map[x]]
            results.append(Functor(f"F{len(results)}", C, D, obj_map, full_mor))
            return not first_only
        m = free_mors[p]
        candidates = ([fixed_mor[m]] if m in fixed_mor
                      else D.hom(obj_map[C.dom[m]], obj_map[C.cod[m]]))
        used = set(mor_map.values()) if mor_injective else ()
        for c in candidates:
            if mor_injective and c in used:
                continue
            nodes += 1
            if nodes > guard:
                raise GuardExceeded(f"functor enumeration guard {guard} exceeded")
            mor_map[m] = c
            ok = check_bucket(p, obj_map, mor_map)
            if ok and not assign_mors(p + 1, obj_map, dict(mor_map)):
                return False
            del mor_map[m]
        return True

    def assign_objs(k, obj_map):
        nonlocal nodes
        if k == len(obj_list):
            # fixed morphisms must sit in the right hom sets
            for m, v in fixed_mor.items():
                if m in idents:
                    if v != D.identity[obj_map[C.dom[m]]]:
                        return True
                elif v not in D.hom(obj_map[C.dom[m]], obj_map[C.cod[m]]):
                    return True
            mor_seed = {}
            return assign_mors(0, dict(obj_map), mor_seed)
        x = obj_list[k]
        candidates = [fixed_obj[x]] if x in fixed_obj else D.objects
        for y in candidates:
            nodes += 1
            if nodes > guard:
                raise GuardExceeded(f"functor enumeration guard {guard} exceeded")
            obj_map[x] = y
            if not assign_objs(k + 1, obj_map):
                return False
            del obj_map[x]
        return True

    assign_objs(0, {})
    return results


def enumerate_nat_transfs(F: Functor, G: Functor, iso_only=False, guard=2_000_000,
                          first_only=False):
    """Natural transformations F => G by backtracking over components."""
    C, D = F.source, F.target
    objs = list(C.objects)
    results = []
    nodes = 0

    mors_between: dict[tuple[int, int], list] = {}
    pos = {x: i for i, x in enumerate(objs)}
    for (f, x, y) in C.morphisms:
        mors_between.setdefault((max(pos[x], pos[y]), 0), []).append((f, x, y))

    def naturality_ok(k, comp):
        for (f, x, y) in mors_between.get((k, 0), ()):
            lhs = D.compose(comp[y], F.mor_map[f])
            rhs = D.compose(G.mor_map[f], comp[x])
            if lhs != rhs:
                return False
        return True

    def assign(k, comp):
        nonlocal nodes
        if k == len(objs):
            results.append(NatTransf(F, G, dict(comp)))
            return not first_only
        x = objs[k]
        for c in D.hom(F.obj_map[x], G.obj_map[x]):
            if iso_only and not D.is_iso(c):
                continue
            nodes += 1
            if nodes > guard:
                raise GuardExceeded(f"nat transf enumeration guard {guard} exceeded")
            comp[x] = c
            if naturality_ok(k, comp) and not assign(k + 1, comp):
                return False
            del comp[x]
        return True

    assign(0, {})
    return results


def natural_isos(F: Functor, G: Functor, first_only=True, guard=2_000_000):
    return enumerate_nat_transfs(F, G, iso_only=True, guard=guard, first_only=first_only)


def are_naturally_isomorphic(F: Functor, G: Functor, guard=2_000_000) -> bool:
    return bool(natural_isos(F, G, first_only=True, guard=guard))


def find_category_isomorphism(C: FinCat, D: FinCat, guard=2_000_000):
    """An isomorphism of categories C ~= D (bijective on objects and
    morphisms), or None."""
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None
    homprofile = lambda E: sorted(
        len(E.hom(x, y)) for x in E.objects for y in E.objects)
    if homprofile(C) != homprofile(D):
        return None
    for F in enumerate_functors(C, D, guard=guard, mor_injective=True, first_only=False):
        if (F.is_injective_on_objects() and F.is_surjective_on_objects()
                and len(set(F.mor_map.values())) == len(D.morphisms)):
            return F
    return None


def is_equivalence_structural(F: Functor) -> bool:
    """Equivalence via fully faithful + dense; the fast route used in bulk
    checks, cross-validated against quasi-inverse search in the test suite."""
    return F.is_full() and F.is_faithful() and F.is_dense()


def find_quasi_inverse(F: Functor, guard=2_000_000):
    """A quasi-inverse (G, eta: GF => Id_C iso, eps: FG => Id_D iso), by
    brute force.  Returns None when no candidate works."""
    C, D = F.source, F.target
    for G in enumerate_functors(D, C, guard=guard):
        etas = natural_isos(G.then(F), identity_functor(D), first_only=True, guard=guard)
        if not etas:
            continue
        eps = natural_isos(F.then(G), identity_functor(C), first_only=True, guard=guard)
        if eps:
            return G, eps[0], etas[0]
    return None
