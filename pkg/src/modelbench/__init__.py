"""Desk-scale workbench for three executable model structures.

Subpackages:
    fincat    -- finite categories, functors, quivers, (co)limits
    lifting   -- generic orthogonality / retract / cell / model-axiom checkers
    catmodel  -- the natural model structure on Cat
    complexes -- bounded rational cochain complexes
    dgalg     -- differential graded algebras
    dgcat     -- small dg categories
    cli       -- DSL parser/printer and command dispatch

Every decision procedure returns witnesses that can be re-verified by an
independent brute-force or linear-algebra oracle.
"""

__version__ = "0.1.0"
