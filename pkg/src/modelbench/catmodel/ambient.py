"""The finite-category instance of the generic lifting interface."""

from __future__ import annotations

from ..fincat import FinCat, Functor, enumerate_functors
from ..fincat.core import identity_functor
from ..fincat.diagrams import CatDiagram, colimit
from ..fincat.build import unit_category
from ..lifting.core import Ambient


class CatAmbient(Ambient):
    """Morphisms are functors between finite categories; everything is
    enumerable, and functor sets are cached per (source, target) pair."""

    name = "Cat"
    enumerative = True
    constructive = False

    def __init__(self, guard=2_000_000):
        self.guard = guard
        self._fun_cache: dict = {}

    def equal(self, f: Functor, g: Functor) -> bool:
        return (f.source == g.source and f.target == g.target
                and f.obj_map == g.obj_map and f.mor_map == g.mor_map)

    def compose(self, g: Functor, f: Functor) -> Functor:
        return f.then(g)

    def identity(self, obj: FinCat) -> Functor:
        return identity_functor(obj)

    def dom(self, f: Functor) -> FinCat:
        return f.source

    def cod(self, f: Functor) -> FinCat:
        return f.target

    def is_iso(self, f: Functor) -> bool:
        images = set(f.mor_map.values())
        return (f.is_injective_on_objects() and f.is_surjective_on_objects()
                and len(images) == len(f.source.morphisms)
                and len(images) == len(f.target.morphisms))

    def morphisms_between(self, x: FinCat, y: FinCat, guard=None):
        key = (x, y)
        if key not in self._fun_cache:
            self._fun_cache[key] = enumerate_functors(x, y, guard=guard or self.guard)
        return self._fun_cache[key]

    def lift_candidates(self, square, guard=None):
        """Functors h: cod(left) -> dom(right) with h o left = top, found by
        pinning the images forced on the left leg's image."""
        f, top = square.left, square.top
        Y, A = f.target, square.right.source
        fixed_obj = {}
        for x in f.source.objects:
            y = f.obj_map[x]
            want = top.obj_map[x]
            if fixed_obj.get(y, want) != want:
                return []
            fixed_obj[y] = want
        fixed_mor = {}
        for m in f.source.morphism_ids:
            n = f.mor_map[m]
            want = top.mor_map[m]
            if fixed_mor.get(n, want) != want:
                return []
            fixed_mor[n] = want
        return enumerate_functors(Y, A, fixed_obj=fixed_obj, fixed_mor=fixed_mor,
                                  guard=guard or self.guard)

    # -- bounded colimits -------------------------------------------------

    def attach_cells(self, obj: FinCat, attachments):
        """Pushout of the coproduct of generating functors along their
        attaching maps, computed by saturating the colimit presentation."""
        shape_objs = ["c"] + [f"d{k}" for k in range(len(attachments))] + \
                     [f"e{k}" for k in range(len(attachments))]
        mors = [(f"id_{o}", o, o) for o in shape_objs]
        for k in range(len(attachments)):
            mors.append((f"att{k}", f"d{k}", "c"))
            mors.append((f"gen{k}", f"d{k}", f"e{k}"))
        comp = {}
        for (m, d, c) in mors:
            comp[(m, f"id_{d}")] = m
            comp[(f"id_{c}", m)] = m
        shape = FinCat("cells", shape_objs, mors, {o: f"id_{o}" for o in shape_objs}, comp)
        nodes = {"c": obj}
        edges = {}
        for k, (gen, att) in enumerate(attachments):
            nodes[f"d{k}"] = gen.source
            nodes[f"e{k}"] = gen.target
            edges[f"att{k}"] = att
            edges[f"gen{k}"] = gen
        diagram = CatDiagram("cell-stage", shape, nodes, edges)
        pres, result, injections = colimit(diagram)
        if not result.total:
            raise ValueError("cell pushout did not saturate to a finite category")
        inclusion = injections["c"]
        cell_maps = [injections[f"e{k}"] for k in range(len(attachments))]
        return result.category, inclusion, cell_maps

    def attachment_squares(self, generators, f: Functor):
        """All commuting squares from the generators into f (the bounded
        index set of the small object argument)."""
        from ..lifting.search import enumerate_squares, find_lifting
        from ..lifting.core import Square
        out = []
        for gen in generators:
            for sq in enumerate_squares(self, gen, f, guard=self.guard):
                if find_lifting(sq, guard=self.guard) is None:
                    out.append((gen, sq.top, sq.bottom))
        return out

    def induced_from_cells(self, stage, f: Functor, bottoms):
        """The unique map out of the pushout agreeing with f on the old part
        and with the chosen bottoms on the new cells."""
        target = f.target
        obj_map = {}
        mor_map = {}
        pieces = [(stage.inclusion, f)] + list(zip(stage.cell_maps, bottoms))
        for (into, down) in pieces:
            for x, y in into.obj_map.items():
                want = down.obj_map[x]
                if obj_map.get(y, want) != want:
                    raise ValueError("incompatible cell bottoms on objects")
                obj_map[y] = want
            for m, n in into.mor_map.items():
                want = down.mor_map[m]
                if mor_map.get(n, want) != want:
                    raise ValueError("incompatible cell bottoms on morphisms")
                mor_map[n] = want
        P = stage.result
        # generated colimit: remaining morphisms are composites of images;
        # fill by composing representative decompositions
        missing_obj = [x for x in P.objects if x not in obj_map]
        if missing_obj:
            raise ValueError(f"pushout object not covered by legs: {missing_obj}")
        changed = True
        while changed and len(mor_map) < len(P.morphisms):
            changed = False
            for (g, f1), h in P.compose_table.items():
                if h not in mor_map and g in mor_map and f1 in mor_map:
                    mor_map[h] = target.compose(mor_map[g], mor_map[f1])
                    changed = True
        if len(mor_map) < len(P.morphisms):
            raise ValueError("pushout morphism not generated by the legs")
        return Functor(f"{f.name}'", P, target, obj_map, mor_map)
