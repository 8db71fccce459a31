from .presentation import (
    DgAlgPresentation,
    SemiFreenessWitness,
    adjoin_variable,
    deformed_tensor,
    disc,
    free_product,
    ground,
    is_semi_free,
    presentations_isomorphic,
    sphere,
)
from .concrete import (
    ConcreteDgAlg,
    DgAlgMap,
    Element,
    ground_concrete,
    maps_from_disc,
    maps_from_sphere,
    truncate,
)
from .homotopy import (
    Cocylinder,
    DerivationWitness,
    cocylinder,
    compare_path_objects,
    cochain_homotopy,
    elementary_homotopy,
)
from .replacement import DgAlgAmbient, cofibrant_replacement

__all__ = [
    "DgAlgPresentation", "SemiFreenessWitness", "adjoin_variable",
    "deformed_tensor", "disc", "free_product", "ground", "is_semi_free",
    "presentations_isomorphic", "sphere",
    "ConcreteDgAlg", "DgAlgMap", "Element", "ground_concrete",
    "maps_from_disc", "maps_from_sphere", "truncate",
    "Cocylinder", "DerivationWitness", "cocylinder", "compare_path_objects",
    "cochain_homotopy", "elementary_homotopy",
    "DgAlgAmbient", "cofibrant_replacement",
]
