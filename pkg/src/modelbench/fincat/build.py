"""Standard finite categories and binary (co)products.

Naming: product cells are "(x,y)"; disjoint unions rename through "left/"
and "right/" prefixes so textual collisions are impossible.
"""

from __future__ import annotations

from .core import FinCat


def empty_category() -> FinCat:
    return FinCat("0", [], [], {}, {})


def unit_category(obj="*") -> FinCat:
    i = f"id_{obj}"
    return FinCat("1", [obj], [(i, obj, obj)], {obj: i}, {(i, i): i})


def discrete_category(objs, name=None) -> FinCat:
    objs = list(objs)
    mors = [(f"id_{x}", x, x) for x in objs]
    comp = {(m, m): m for (m, _, _) in mors}
    return FinCat(name or f"disc{len(objs)}", objs, mors,
                  {x: f"id_{x}" for x in objs}, comp)


def k_category(n: int) -> FinCat:
    """K_n: objects 0 and 1 with n parallel morphisms a1..an from 1 to 0.
    K_0 is the discrete category on two objects."""
    if n == 0:
        return discrete_category(["0", "1"], name="K0")
    objs = ["0", "1"]
    mors = [("id_0", "0", "0"), ("id_1", "1", "1")]
    mors += [(f"a{i}", "1", "0") for i in range(1, n + 1)]
    comp = {}
    for (m, d, c) in mors:
        comp[(m, f"id_{d}")] = m
        comp[(f"id_{c}", m)] = m
    return FinCat(f"K{n}", objs, mors, {"0": "id_0", "1": "id_1"}, comp)


def interval_category() -> FinCat:
    """The interval I: two objects joined by an isomorphism a with inverse."""
    objs = ["0", "1"]
    mors = [("id_0", "0", "0"), ("id_1", "1", "1"), ("a", "0", "1"), ("a_inv", "1", "0")]
    comp = {
        ("id_0", "id_0"): "id_0", ("id_1", "id_1"): "id_1",
        ("a", "id_0"): "a", ("id_1", "a"): "a",
        ("a_inv", "id_1"): "a_inv", ("id_0", "a_inv"): "a_inv",
        ("a_inv", "a"): "id_0", ("a", "a_inv"): "id_1",
    }
    return FinCat("I", objs, mors, {"0": "id_0", "1": "id_1"}, comp)


def _pair(x, y):
    return f"({x},{y})"


def product(C: FinCat, D: FinCat, name=None) -> FinCat:
    objs = [_pair(x, y) for x in C.objects for y in D.objects]
    mors = []
    for (f, fd, fc) in C.morphisms:
        for (g, gd, gc) in D.morphisms:
            mors.append((_pair(f, g), _pair(fd, gd), _pair(fc, gc)))
    ident = {_pair(x, y): _pair(C.identity[x], D.identity[y])
             for x in C.objects for y in D.objects}
    comp = {}
    for (f1, _, f1c) in C.morphisms:
        for (f2, f2d, _) in C.morphisms:
            if f2d != f1c:
                continue
            fc = C.compose(f2, f1)
            for (g1, _, g1c) in D.morphisms:
                for (g2, g2d, _) in D.morphisms:
                    if g2d != g1c:
                        continue
                    comp[(_pair(f2, g2), _pair(f1, g1))] = _pair(fc, D.compose(g2, g1))
    return FinCat(name or f"{C.name}x{D.name}", objs, mors, ident, comp)


def coproduct(C: FinCat, D: FinCat, name=None) -> FinCat:
    lo = {x: f"left/{x}" for x in C.objects}
    lm = {m: f"left/{m}" for m in C.morphism_ids}
    ro = {x: f"right/{x}" for x in D.objects}
    rm = {m: f"right/{m}" for m in D.morphism_ids}
    objs = [lo[x] for x in C.objects] + [ro[x] for x in D.objects]
    mors = ([(lm[m], lo[d], lo[c]) for (m, d, c) in C.morphisms]
            + [(rm[m], ro[d], ro[c]) for (m, d, c) in D.morphisms])
    ident = {lo[x]: lm[C.identity[x]] for x in C.objects}
    ident.update({ro[x]: rm[D.identity[x]] for x in D.objects})
    comp = {(lm[g], lm[f]): lm[h] for (g, f), h in C.compose_table.items()}
    comp.update({(rm[g], rm[f]): rm[h] for (g, f), h in D.compose_table.items()})
    return FinCat(name or f"{C.name}+{D.name}", objs, mors, ident, comp)


def opposite(C: FinCat, name=None) -> FinCat:
    mors = [(m, c, d) for (m, d, c) in C.morphisms]
    comp = {(f, g): h for (g, f), h in C.compose_table.items()}
    return FinCat(name or f"{C.name}^op", list(C.objects), mors, dict(C.identity), comp)
