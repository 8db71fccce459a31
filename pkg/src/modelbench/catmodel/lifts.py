"""Constructive liftings for the natural model structure.

Both constructions mirror the existence proofs: the first normalizes the
choices on image objects (H(X) = i(C) and identity comparison isos whenever
X = F(C)), the second uses unique preimages under a fully faithful functor.
The produced functor is always validated and the two triangles re-checked.
"""

from __future__ import annotations

from ..fincat import Functor
from ..lifting.core import LiftWitness, Square
from .classify import classify


class LiftPreconditionError(ValueError):
    pass


def _verify(square: Square, H: Functor) -> LiftWitness:
    if not H.validate().ok:
        raise AssertionError("constructed lift is not a functor")
    w = LiftWitness(square, H)
    if not w.verify():
        raise AssertionError("constructed lift does not close the triangles")
    return w


def lift_acyclic_injection_vs_isofibration(square: Square) -> LiftWitness:
    """Diagonal for (acyclic injection F) vs (isofibration G).

    For X outside the image, pick C_X and an iso u_X: X -> F(C_X), transport
    j(u_X) through the isofibration to a comparison iso h_X, and send
    f: X -> Y to h_Y^{-1} o i(C_f) o h_X with C_f the unique morphism whose
    F-image is u_Y o f o u_X^{-1}."""
    F, G, i, j = square.left, square.right, square.top, square.bottom
    if not classify(F).acyclic_injection:
        raise LiftPreconditionError("left leg is not an acyclic injection")
    if not classify(G).isofibration:
        raise LiftPreconditionError("right leg is not an isofibration")
    C, D = F.source, F.target
    M = G.source

    f_obj_inverse = {F.obj_map[c]: c for c in C.objects}
    cx = {}          # X -> C_X
    ux = {}          # X -> iso u_X: X -> F(C_X)
    hx = {}          # X -> iso h_X: H(X) -> i(C_X)
    h_obj = {}
    for X in D.objects:
        if X in f_obj_inverse:
            Cc = f_obj_inverse[X]
            cx[X] = Cc
            ux[X] = D.identity[X]
            h_obj[X] = i.obj_map[Cc]
            hx[X] = M.identity[i.obj_map[Cc]]
            continue
        found = False
        for Cc in C.objects:
            for u in D.hom(X, F.obj_map[Cc]):
                if D.is_iso(u):
                    cx[X], ux[X] = Cc, u
                    found = True
                    break
            if found:
                break
        if not found:
            raise LiftPreconditionError(f"no image object isomorphic to {X}")
        # j(u_X)^{-1} starts at an image object of G; lift it and invert
        ju = j.mor_map[ux[X]]
        ju_inv = j.target.inverse_of(ju)
        anchor = i.obj_map[cx[X]]
        lifted = None
        for m2 in M.objects:
            for h in M.hom(anchor, m2):
                if M.is_iso(h) and G.mor_map[h] == ju_inv:
                    lifted = h
                    break
            if lifted:
                break
        if lifted is None:
            raise LiftPreconditionError("isofibration failed to lift a comparison iso")
        h_obj[X] = M.cod[lifted]
        hx[X] = M.inverse_of(lifted)

    h_mor = {}
    for (f, X, Y) in D.morphisms:
        # unique C_f with F(C_f) = u_Y o f o u_X^{-1}
        target_img = D.compose(D.compose(ux[Y], f), D.inverse_of(ux[X]))
        cf = None
        for m in C.hom(cx[X], cx[Y]):
            if F.mor_map[m] == target_img:
                cf = m
                break
        if cf is None:
            raise LiftPreconditionError("fully-faithfulness failed to provide C_f")
        h_mor[f] = M.compose(M.inverse_of(hx[Y]),
                             M.compose(i.mor_map[cf], hx[X]))
    H = Functor("H", D, M, h_obj, h_mor)
    return _verify(square, H)


def lift_injection_vs_acyclic_isofibration(square: Square) -> LiftWitness:
    """Diagonal for (injection F) vs (acyclic isofibration G): objects lift
    through surjectivity (normalized to i(C) on the image of F), morphisms
    through unique G-preimages."""
    F, G, i, j = square.left, square.right, square.top, square.bottom
    if not classify(F).injection:
        raise LiftPreconditionError("left leg is not an injection")
    if not classify(G).acyclic_isofibration:
        raise LiftPreconditionError("right leg is not an acyclic isofibration")
    C, D = F.source, F.target
    M = G.source

    f_obj_inverse = {F.obj_map[c]: c for c in C.objects}
    h_obj = {}
    for X in D.objects:
        if X in f_obj_inverse:
            h_obj[X] = i.obj_map[f_obj_inverse[X]]
        else:
            jX = j.obj_map[X]
            pre = next((m for m in M.objects if G.obj_map[m] == jX), None)
            if pre is None:
                raise LiftPreconditionError("acyclic isofibration not surjective on objects")
            h_obj[X] = pre
    h_mor = {}
    for (f, X, Y) in D.morphisms:
        want = j.mor_map[f]
        pre = [m for m in M.hom(h_obj[X], h_obj[Y]) if G.mor_map[m] == want]
        if len(pre) != 1:
            raise LiftPreconditionError(
                f"G is not fully faithful on hom({h_obj[X]}, {h_obj[Y]})")
        h_mor[f] = pre[0]
    H = Functor("H", D, M, h_obj, h_mor)
    return _verify(square, H)
