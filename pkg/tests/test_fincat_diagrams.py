import pytest

from modelbench.fincat import (
    CatDiagram,
    Functor,
    Quiver,
    adjunction_check,
    coproduct,
    empty_category,
    enumerate_functors,
    interval_category,
    k_category,
    limit,
    path_category,
    product,
    saturate,
    unit_category,
)
from modelbench.fincat.core import identity_functor
from modelbench.fincat.corpus import a2_path_category, a2_quiver, jordan_quiver
from modelbench.fincat.diagrams import (
    coequalizer_diagram,
    colimit,
    colimit_presentation,
    discrete_shape,
    limit as limit_op,
    pushout_diagram,
)

# limit is re-exported; keep one name locally
del limit


def unit_into(C, obj, name=None):
    one = unit_category()
    return Functor(name or f"pick_{obj}", one, C,
                   {"*": obj}, {"id_*": C.identity[obj]})


# -- path categories -----------------------------------------------------


def test_a2_path_category():
    pc = path_category(a2_quiver(), 2)
    assert pc.total
    assert sorted(pc.morphism_names) == ["alpha", "e_1", "e_2"]
    assert pc.category.validate().ok


def test_jordan_path_category_not_total():
    pc = path_category(jordan_quiver(), 3)
    assert not pc.total
    assert len(pc.morphism_names) == 4   # e, alpha, alpha^2, alpha^3
    assert pc.overflow


def test_jordan_cap_count_property():
    for n in range(5):
        pc = path_category(jordan_quiver(), n)
        assert len(pc.morphism_names) == n + 1


def test_empty_quiver_path_category():
    pc = path_category(Quiver("E", [], []), 3)
    assert pc.total
    assert pc.category.objects == [] and pc.category.morphisms == []


# -- adjunction ----------------------------------------------------------


def test_adjunction_a2_interval():
    w = adjunction_check(a2_quiver(), interval_category())
    assert w.bijection_ok
    assert w.functor_count == w.quiver_map_count > 0


def test_adjunction_empty_quiver():
    w = adjunction_check(Quiver("E", [], []), k_category(2))
    assert w.bijection_ok and w.functor_count == 1


def test_adjunction_a2_unit():
    w = adjunction_check(a2_quiver(), unit_category())
    assert w.bijection_ok and w.functor_count == 1


def test_adjunction_rejects_cyclic():
    with pytest.raises(ValueError):
        adjunction_check(jordan_quiver(), unit_category())


# -- limits --------------------------------------------------------------


def test_empty_diagram_limit_is_terminal():
    D = CatDiagram("empty", empty_category(), {}, {})
    L, _ = limit_op(D)
    assert len(L.objects) == 1 and len(L.morphisms) == 1


def test_product_via_limit_matches_direct_product():
    C, I = k_category(2), interval_category()
    D = CatDiagram("prod", discrete_shape(["a", "b"]), {"a": C, "b": I}, {})
    L, projections = limit_op(D)
    assert len(L.objects) == len(C.objects) * 2
    assert L.validate().ok
    direct = product(C, I)
    assert len(L.morphisms) == len(direct.morphisms)
    for name, pr in projections.items():
        assert pr.validate().ok


def test_equalizer_of_two_points_is_empty():
    PA2 = a2_path_category()
    i1, i2 = unit_into(PA2, "1"), unit_into(PA2, "2")
    D = coequalizer_diagram(i1, i2)   # same shape works for the limit
    L, _ = limit_op(D)
    assert L.objects == [] and L.morphisms == []


def test_limit_universal_property_sampled():
    # cones over the discrete two-point diagram from a small test category
    C, I = k_category(1), interval_category()
    D = CatDiagram("prod", discrete_shape(["a", "b"]), {"a": C, "b": I}, {})
    L, projections = limit_op(D)
    T = k_category(0)
    cones = [(f, g) for f in enumerate_functors(T, C) for g in enumerate_functors(T, I)]
    for f, g in cones:
        mediating = [
            h for h in enumerate_functors(T, L)
            if h.then(projections["a"]) == f and h.then(projections["b"]) == g
        ]
        assert len(mediating) == 1


# -- colimits ------------------------------------------------------------


def test_coproduct_colimit_total_and_matches_disjoint_union():
    C, I = k_category(2), interval_category()
    D = CatDiagram("copr", discrete_shape(["a", "b"]), {"a": C, "b": I}, {})
    pres, result, injections = colimit(D)
    assert result.total
    direct = coproduct(C, I)
    assert len(result.category.objects) == len(direct.objects)
    assert len(result.category.morphisms) == len(direct.morphisms)
    for i, inj in injections.items():
        assert inj.validate().ok


def test_jordan_coequalizer_presentation():
    PA2 = a2_path_category()
    i1, i2 = unit_into(PA2, "1"), unit_into(PA2, "2")
    D = coequalizer_diagram(i1, i2)
    pres, result, _ = colimit(D, max_len=6)
    assert len(pres.quiver.vertices) == 1
    assert result.status == "possibly_infinite"
    # census at cap k: exactly k+1 classes
    for k in range(2, 7):
        census = saturate(pres, fixed_len=k)
        assert census.class_count == k + 1, k


def test_pushout_over_empty_is_coproduct():
    C = k_category(2)
    one = unit_category()
    e = empty_category()
    f = Functor("e1", e, C, {}, {})
    g = Functor("e2", e, one, {}, {})
    pres, result, injections = colimit(pushout_diagram(f, g))
    assert result.total
    assert len(result.category.objects) == len(C.objects) + 1
    assert len(result.category.morphisms) == len(C.morphisms) + 1


def test_objects_commute_with_colimits():
    # object classes of the presentation match the colimit of object sets
    PA2 = a2_path_category()
    i1, i2 = unit_into(PA2, "1"), unit_into(PA2, "2")
    pres = colimit_presentation(coequalizer_diagram(i1, i2))
    assert len(pres.quiver.vertices) == 1   # both endpoints glued to the point


def test_diagram_validation():
    C = k_category(1)
    D = CatDiagram("d", discrete_shape(["a"]), {"a": C}, {})
    assert D.validate().ok
