"""Finite categories by total composition table.

A FinCat stores every morphism explicitly, so all predicates downstream are
decidable by enumeration.  Object and morphism ids are strings and equality
is literal.  Values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class ValidationReport:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


class FinCat:
    """Finite category: objects, morphisms (id, dom, cod), identity table and
    a total composition table on composable pairs."""

    def __init__(self, name, objects, morphisms, identity, compose):
        self.name = name
        self.objects = list(objects)
        # morphisms: list of (mor_id, dom, cod) in a fixed, deterministic order
        self.morphisms = [(m, d, c) for (m, d, c) in morphisms]
        self.dom = {m: d for (m, d, c) in self.morphisms}
        self.cod = {m: c for (m, d, c) in self.morphisms}
        self.identity = dict(identity)
        self.compose_table = dict(compose)
        self._hom: dict[tuple[str, str], list[str]] = {}
        for (m, d, c) in self.morphisms:
            self._hom.setdefault((d, c), []).append(m)
        self._iso_cache: dict[str, str] | None = None

    # -- basic access ---------------------------------------------------

    @property
    def morphism_ids(self):
        return [m for (m, _, _) in self.morphisms]

    def hom(self, x, y):
        return self._hom.get((x, y), [])

    def id_of(self, x):
        return self.identity[x]

    def compose(self, g, f):
        """g after f; raises KeyError when not composable."""
        if self.cod[f] != self.dom[g]:
            raise KeyError(f"not composable: {g} o {f}")
        return self.compose_table[(g, f)]

    def compose_path(self, mors):
        """Compose a list given in composition order: [g, f] means g o f."""
        out = mors[0]
        for f in mors[1:]:
            out = self.compose(out, f)
        return out

    def __repr__(self):
        return f"FinCat({self.name!r}, {len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (self.objects == other.objects
                and self.morphisms == other.morphisms
                and self.identity == other.identity
                and self.compose_table == other.compose_table)

    def __hash__(self):
        return hash((tuple(self.objects), tuple(self.morphisms)))

    # -- structure ------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Check identity laws and associativity on all composable triples;
        reports the first failing instance of each kind."""
        failures = []
        for x in self.objects:
            i = self.identity.get(x)
            if i is None or self.dom.get(i) != x or self.cod.get(i) != x:
                failures.append(f"identity of {x} missing or has wrong endpoints")
        for (m, d, c) in self.morphisms:
            left = self.compose_table.get((m, self.identity[d]))
            right = self.compose_table.get((self.identity[c], m))
            if left != m or right != m:
                failures.append(f"identity law fails at {m}")
                break
        for (f, fd, fc) in self.morphisms:
            for (g, gd, gc) in self.morphisms:
                if gd != fc:
                    continue
                if (g, f) not in self.compose_table:
                    failures.append(f"composition table misses ({g}, {f})")
                    return ValidationReport(False, failures)
                gf = self.compose_table[(g, f)]
                if self.dom.get(gf) != fd or self.cod.get(gf) != gc:
                    failures.append(f"composite {g} o {f} = {gf} has wrong endpoints")
                    return ValidationReport(False, failures)
        if failures:
            return ValidationReport(False, failures)
        for (f, fd, fc) in self.morphisms:
            for (g, gd, gc) in self.morphisms:
                if gd != fc:
                    continue
                for (h, hd, hc) in self.morphisms:
                    if hd != gc:
                        continue
                    if self.compose(h, self.compose(g, f)) != self.compose(self.compose(h, g), f):
                        failures.append(f"associativity fails at triple ({h}, {g}, {f})")
                        return ValidationReport(False, failures)
        return ValidationReport(not failures, failures)

    def inverse_of(self, f):
        """Two-sided inverse of f, or None."""
        if self._iso_cache is None:
            self._iso_cache = {}
            for (f_, d, c) in self.morphisms:
                for g in self.hom(c, d):
                    if (self.compose(g, f_) == self.identity[d]
                            and self.compose(f_, g) == self.identity[c]):
                        self._iso_cache[f_] = g
                        break
        return self._iso_cache.get(f)

    def is_iso(self, f) -> bool:
        return self.inverse_of(f) is not None

    def isos(self):
        return [m for m in self.morphism_ids if self.is_iso(m)]

    def isomorphic_objects(self, x, y) -> bool:
        return any(self.is_iso(f) for f in self.hom(x, y))

    def iso_classes_of_objects(self):
        classes = []
        seen = set()
        for x in self.objects:
            if x in seen:
                continue
            cls = [y for y in self.objects if self.isomorphic_objects(x, y) and self.isomorphic_objects(y, x)]
            seen.update(cls)
            classes.append(cls)
        return classes

    def full_subcategory(self, objs, name=None):
        objs = [x for x in self.objects if x in set(objs)]
        mors = [(m, d, c) for (m, d, c) in self.morphisms if d in objs and c in objs]
        keep = {m for (m, _, _) in mors}
        comp = {k: v for k, v in self.compose_table.items() if k[0] in keep and k[1] in keep}
        ident = {x: self.identity[x] for x in objs}
        return FinCat(name or f"{self.name}|full", objs, mors, ident, comp)


class Functor:
    def __init__(self, name, source: FinCat, target: FinCat, obj_map, mor_map):
        self.name = name
        self.source = source
        self.target = target
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)

    def on_obj(self, x):
        return self.obj_map[x]

    def on_mor(self, f):
        return self.mor_map[f]

    def __call__(self, f):
        return self.mor_map[f] if f in self.mor_map else self.obj_map[f]

    def __repr__(self):
        return f"Functor({self.name!r}: {self.source.name} -> {self.target.name})"

    def __eq__(self, other):
        if not isinstance(other, Functor):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.obj_map == other.obj_map and self.mor_map == other.mor_map)

    def __hash__(self):
        return hash((tuple(sorted(self.obj_map.items())), tuple(sorted(self.mor_map.items()))))

    def validate(self) -> ValidationReport:
        failures = []
        C, D = self.source, self.target
        for x in C.objects:
            if self.obj_map.get(x) not in D.objects:
                failures.append(f"object {x} has no valid image")
                return ValidationReport(False, failures)
        for (m, d, c) in C.morphisms:
            fm = self.mor_map.get(m)
            if fm is None or D.dom.get(fm) != self.obj_map[d] or D.cod.get(fm) != self.obj_map[c]:
                failures.append(f"morphism {m} image breaks dom/cod")
                return ValidationReport(False, failures)
        for x in C.objects:
            if self.mor_map[C.identity[x]] != D.identity[self.obj_map[x]]:
                failures.append(f"identity of {x} not preserved")
        for (f, fd, fc) in C.morphisms:
            for (g, gd, gc) in C.morphisms:
                if gd != fc:
                    continue
                if self.mor_map[C.compose(g, f)] != D.compose(self.mor_map[g], self.mor_map[f]):
                    failures.append(f"composition not preserved at ({g}, {f})")
                    return ValidationReport(False, failures)
        return ValidationReport(not failures, failures)

    def then(self, other: "Functor") -> "Functor":
        """other o self (self applied first)."""
        if self.target != other.source:
            raise ValueError("functors not composable")
        return Functor(
            f"{other.name}.{self.name}", self.source, other.target,
            {x: other.obj_map[y] for x, y in self.obj_map.items()},
            {m: other.mor_map[n] for m, n in self.mor_map.items()},
        )

    # structural predicates (used everywhere downstream)

    def is_injective_on_objects(self) -> bool:
        vals = [self.obj_map[x] for x in self.source.objects]
        return len(vals) == len(set(vals))

    def is_surjective_on_objects(self) -> bool:
        return set(self.obj_map[x] for x in self.source.objects) == set(self.target.objects)

    def is_full(self) -> bool:
        C, D = self.source, self.target
        for x in C.objects:
            for y in C.objects:
                image = {self.mor_map[f] for f in C.hom(x, y)}
                if not set(D.hom(self.obj_map[x], self.obj_map[y])) <= image:
                    return False
        return True

    def is_faithful(self) -> bool:
        C = self.source
        for x in C.objects:
            for y in C.objects:
                fs = C.hom(x, y)
                if len({self.mor_map[f] for f in fs}) != len(fs):
                    return False
        return True

    def is_dense(self) -> bool:
        """Essentially surjective: every target object isomorphic to an image."""
        D = self.target
        image = [self.obj_map[x] for x in self.source.objects]
        return all(any(D.isomorphic_objects(i, y) and D.isomorphic_objects(y, i)
                       for i in image) for y in D.objects)

    def essential_image(self) -> FinCat:
        D = self.target
        image = {self.obj_map[x] for x in self.source.objects}
        objs = [y for y in D.objects
                if any(D.isomorphic_objects(i, y) and D.isomorphic_objects(y, i) for i in image)]
        return D.full_subcategory(objs, name=f"Im({self.name})")


def identity_functor(C: FinCat) -> Functor:
    return Functor(f"Id_{C.name}", C, C,
                   {x: x for x in C.objects},
                   {m: m for m in C.morphism_ids})


class NatTransf:
    """Natural transformation F => G given by a component at every source
    object; naturality is checked by validate()."""

    def __init__(self, F: Functor, G: Functor, components):
        if F.source != G.source or F.target != G.target:
            raise ValueError("parallel functors required")
        self.F = F
        self.G = G
        self.components = dict(components)

    def at(self, x):
        return self.components[x]

    def validate(self) -> ValidationReport:
        failures = []
        C, D = self.F.source, self.F.target
        for x in C.objects:
            cx = self.components.get(x)
            if cx is None or D.dom.get(cx) != self.F.obj_map[x] or D.cod.get(cx) != self.G.obj_map[x]:
                failures.append(f"component at {x} has wrong endpoints")
                return ValidationReport(False, failures)
        for (f, x, y) in C.morphisms:
            lhs = D.compose(self.components[y], self.F.mor_map[f])
            rhs = D.compose(self.G.mor_map[f], self.components[x])
            if lhs != rhs:
                failures.append(f"naturality fails at {f}")
                return ValidationReport(False, failures)
        return ValidationReport(True, [])

    def is_iso(self) -> bool:
        D = self.F.target
        return all(D.is_iso(c) for c in self.components.values())
