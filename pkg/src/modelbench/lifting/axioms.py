"""Finite-corpus verification of the model axioms MC1-MC5.

A corpus is a finite list of morphisms of the ambient.  MC1-MC4 are checked
exhaustively over the corpus; MC5 through the ambient's factorization
constructors with class membership re-verified.  The orthogonality
description of cofibrations is sampled against the corpus (a finite corpus
can confirm failures of Cof membership only when it happens to separate)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Ambient, ModelTriple
from .search import find_retract, is_orthogonal


@dataclass
class AxiomReport:
    axiom: str
    status: str                  # "ok" | "fail" | "sampled"
    detail: str = ""
    counterexample: object = None

    @property
    def ok(self):
        return self.status in ("ok", "sampled")


@dataclass
class ModelAxiomReport:
    entries: list = field(default_factory=list)

    def add(self, *args, **kwargs):
        self.entries.append(AxiomReport(*args, **kwargs))

    @property
    def ok(self):
        return all(e.ok for e in self.entries)

    def failures(self):
        return [e for e in self.entries if not e.ok]


def _classes(triple: ModelTriple):
    return [("Cof", triple.cof), ("We", triple.we), ("Fib", triple.fib)]


def check_model_axioms(a: Ambient, triple: ModelTriple, corpus,
                       guard=None, check_retracts=True,
                       factorizations=None) -> ModelAxiomReport:
    """corpus: finite list of morphisms.  `factorizations(f)` returns
    ((i, p), (j, q)) realizing MC5 for f, or None to skip MC5 for f."""
    report = ModelAxiomReport()

    # MC1: identities and closure under composition
    objs = []
    for f in corpus:
        for ob in (a.dom(f), a.cod(f)):
            if all(ob is not o for o in objs):
                objs.append(ob)
    bad = None
    for ob in objs:
        idm = a.identity(ob)
        for cname, ctest in _classes(triple):
            if not ctest(idm):
                bad = (cname, ob)
                break
        if bad:
            break
    if bad:
        report.add("MC1-identities", "fail",
                   f"identity not in {bad[0]}", bad[1])
    else:
        report.add("MC1-identities", "ok", f"{len(objs)} objects")

    comp_fail = None
    pairs = 0
    for f in corpus:
        for g in corpus:
            if a.cod(f) is not a.dom(g) and a.cod(f) != a.dom(g):
                continue
            gf = a.compose(g, f)
            pairs += 1
            for cname, ctest in _classes(triple):
                if ctest(f) and ctest(g) and not ctest(gf):
                    comp_fail = (cname, f, g)
                    break
            if comp_fail:
                break
        if comp_fail:
            break
    if comp_fail:
        report.add("MC1-composition", "fail",
                   f"{comp_fail[0]} not closed under composition",
                   (comp_fail[1], comp_fail[2]))
    else:
        report.add("MC1-composition", "ok", f"{pairs} composable pairs")

    # MC2: closure under retracts
    if check_retracts and a.enumerative:
        fail = None
        checked = 0
        for f in corpus:
            for f2 in corpus:
                if f is f2:
                    continue
                needed = [
                    (cname, ctest) for cname, ctest in _classes(triple)
                    if ctest(f2) and not ctest(f)
                ]
                if not needed:
                    continue
                w = find_retract(a, f, f2, guard=guard)
                checked += 1
                if w is not None:
                    fail = (needed[0][0], f, f2, w)
                    break
            if fail:
                break
        if fail:
            report.add("MC2-retracts", "fail",
                       f"{fail[0]} not closed under retracts", (fail[1], fail[2]))
        else:
            report.add("MC2-retracts", "ok", f"{checked} candidate pairs searched")
    else:
        report.add("MC2-retracts", "sampled", "retract search skipped (non-enumerative ambient)")

    # MC3: two out of three for weak equivalences
    fail = None
    for f in corpus:
        for g in corpus:
            if a.cod(f) is not a.dom(g) and a.cod(f) != a.dom(g):
                continue
            gf = a.compose(g, f)
            flags = (triple.we(f), triple.we(g), triple.we(gf))
            if sum(flags) == 2:
                fail = (f, g)
                break
        if fail:
            break
    if fail:
        report.add("MC3-two-of-three", "fail", "exactly two of three in We", fail)
    else:
        report.add("MC3-two-of-three", "ok")

    # MC4: lifting axiom on corpus pairs
    fail = None
    tested = 0
    for f in corpus:
        for g in corpus:
            left_acyclic = triple.acyclic_cof(f) and triple.fib(g)
            right_acyclic = triple.cof(f) and triple.acyclic_fib(g)
            if not (left_acyclic or right_acyclic):
                continue
            res = a.orthogonal(f, g, guard=guard)
            tested += 1
            if not res.orthogonal:
                fail = (f, g, res.counterexample)
                break
        if fail:
            break
    if fail:
        report.add("MC4-lifting", "fail", "square without lift", fail)
    else:
        report.add("MC4-lifting", "ok", f"{tested} orthogonal pairs verified")

    # MC5: factorizations with class re-checks
    if factorizations is not None:
        fail = None
        done = 0
        for f in corpus:
            facts = factorizations(f)
            if facts is None:
                continue
            (i, p), (j, q) = facts
            done += 1
            if not a.equal(a.compose(p, i), f) or not a.equal(a.compose(q, j), f):
                fail = (f, "composite mismatch")
                break
            if not (triple.cof(i) and triple.acyclic_fib(p)):
                fail = (f, "first factorization classes")
                break
            if not (triple.acyclic_cof(j) and triple.fib(q)):
                fail = (f, "second factorization classes")
                break
        if fail:
            report.add("MC5-factorization", "fail", fail[1], fail[0])
        else:
            report.add("MC5-factorization", "ok", f"{done} morphisms factored")
    else:
        report.add("MC5-factorization", "sampled", "no factorization constructor supplied")

    # Cof = perp(We cap Fib), sampled against the corpus
    acyclic_fibs = [g for g in corpus if triple.acyclic_fib(g)]
    fail = None
    unseparated = 0
    for f in corpus:
        ortho_all = all(a.orthogonal(f, g, guard=guard).orthogonal for g in acyclic_fibs)
        if triple.cof(f) and not ortho_all:
            fail = f
            break
        if ortho_all and not triple.cof(f):
            unseparated += 1
    if fail is not None:
        report.add("Cof-orthogonality", "fail", "cofibration fails lifting", fail)
    else:
        status = "sampled" if unseparated else "ok"
        report.add("Cof-orthogonality", status,
                   f"{unseparated} non-cofibrations not separated by the corpus")
    return report
