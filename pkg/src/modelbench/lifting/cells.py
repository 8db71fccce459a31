"""Bounded cell complexes and the staged small-object factorization.

Transfinite composition is truncated at finitely many stages; each stage is
a pushout of a coproduct of generating morphisms supplied by the ambient.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Ambient, CellComplexWitness, CellStage


def cell_step(a: Ambient, obj, attachments) -> CellStage:
    """One pushout stage.  `attachments` is a list of (generator, attach)
    with attach: dom(generator) -> obj.  The returned stage carries the
    inclusion obj -> result and the pushed-forward cell maps, and the
    defining squares are re-checked to commute."""
    result, inclusion, cell_maps = a.attach_cells(obj, attachments)
    for (gen, att), cmap in zip(attachments, cell_maps):
        lhs = a.compose(cmap, gen)
        rhs = a.compose(inclusion, att)
        if not a.equal(lhs, rhs):
            raise AssertionError("pushout square of a cell stage does not commute")
    return CellStage(generators=[g for (g, _) in attachments],
                     attachments=[t for (_, t) in attachments],
                     result=result, inclusion=inclusion, cell_maps=cell_maps)


@dataclass
class FactorizationResult:
    """Outcome of the staged factorization f = p o i."""

    witness: CellComplexWitness
    p: object
    status: str               # "factored" | "partial" | "stuck"
    stages_used: int
    perp_report: object = None

    @property
    def i(self):
        return self.witness.composite()


def small_object_factorization(a: Ambient, generators, f, max_stages=8) -> FactorizationResult:
    """Stagewise factorization of f through pushouts of generator cells.

    The ambient supplies `attachment_squares(generators, g)` (the bounded
    stand-in for the index set of all commuting squares at a stage),
    `induced_from_cells(stage, g, bottoms)` and `in_generators_perp`.
    Stops early once the right leg tests orthogonal to the generators;
    `partial` or `stuck` otherwise.
    """
    source = a.dom(f)
    stages = []
    current = f
    status = "partial"
    used = 0
    report = a.in_generators_perp(generators, current)
    if report.orthogonal:
        status = "factored"
    else:
        for _ in range(max_stages):
            squares = a.attachment_squares(generators, current)
            if not squares:
                status = "stuck"
                break
            stage_obj = a.dom(current)
            stage = cell_step(a, stage_obj, [(g, att) for (g, att, _b) in squares])
            nxt = a.induced_from_cells(stage, current, [b for (_g, _a, b) in squares])
            if not a.equal(a.compose(nxt, stage.inclusion), current):
                raise AssertionError("stage-induced map does not restrict to f_i")
            stages.append(stage)
            current = nxt
            used += 1
            report = a.in_generators_perp(generators, current)
            if report.orthogonal:
                status = "factored"
                break
    witness = CellComplexWitness(a, source, stages)
    result = FactorizationResult(witness=witness, p=current, status=status,
                                 stages_used=used, perp_report=report)
    # composite of the tower followed by p must give back f
    if not a.equal(a.compose(result.p, result.i), f):
        raise AssertionError("factorization does not recompose to f")
    return result
