"""Exact recurrences of Laurent polynomials and their Newton polytopes.

Values are plain dicts and lists in the same JSON layout the ``polyrec`` CLI
reads and writes; ``poly`` and ``fractions`` convert to and from Python numbers.
"""

from fractions import Fraction

from ._core import (
    PreconditionError,
    SchemaError,
    commands,
    dehn_resultant,
    generate,
    lattice_count,
    multiply,
    newton,
    run,
    valuations,
)

__all__ = [
    "PreconditionError",
    "SchemaError",
    "commands",
    "dehn_resultant",
    "fractions",
    "generate",
    "lattice_count",
    "multiply",
    "newton",
    "poly",
    "run",
    "valuations",
]


def poly(terms, nvars=None):
    """Build a polynomial from ``{exponent_tuple: coefficient}``."""
    items = [(tuple(e), Fraction(c)) for e, c in terms.items()]
    if nvars is None:
        if not items:
            raise ValueError("nvars is required for the zero polynomial")
        nvars = len(items[0][0])
    out = []
    for e, c in items:
        if len(e) != nvars:
            raise ValueError(f"exponent {e} has the wrong length")
        out.append([str(c.numerator), str(c.denominator), list(e)])
    return {"vars": nvars, "terms": out}


def fractions(p):
    """Inverse of ``poly``: ``{exponent_tuple: Fraction}``."""
    return {tuple(e): Fraction(int(n), int(d)) for n, d, e in p["terms"]}
