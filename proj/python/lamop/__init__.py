"""Exact lambda-deformed grafting of weighted rooted trees.

Results of the linear operations are lists of ``(term, Poly)`` pairs in the
library's canonical order. ``Poly`` maps exponents of L to ``Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ParseError, butcher, canonical, enumerate_trees, height, nap, weight

__all__ = [
    "ParseError",
    "Poly",
    "arrow",
    "butcher",
    "canonical",
    "check",
    "circ_sum",
    "compose",
    "enumerate_trees",
    "height",
    "nap",
    "phi",
    "psi",
    "relation",
    "weight",
]


class Poly(dict):
    """Polynomial in L with rational coefficients, ``{exponent: Fraction}``."""

    def __call__(self, at):
        at = Fraction(at)
        return sum((c * at**k for k, c in self.items()), Fraction(0))

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for k, c in sorted(self.items()):
            mono = "" if k == 0 else ("L" if k == 1 else f"L^{k}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def _wrap(terms):
    return [(t, Poly({k: Fraction(int(n), int(d)) for k, n, d in c})) for t, c in terms]


def compose(s, v, t, fault="none"):
    return _wrap(_core.compose(s, v, t, fault))


def arrow(t, s):
    return _wrap(_core.arrow(t, s))


def circ_sum(t, s):
    return _wrap(_core.circ_sum(t, s))


def psi(t):
    return _wrap(_core.psi(t))


def phi(expr):
    return _wrap(_core.phi(expr))


def relation(k, l, m):
    return _wrap(_core.relation(k, l, m))


def check(suite, n_max=0, w_max=0, fault="none"):
    """Run a verification suite; returns one report dict per check."""
    return [json.loads(r) for r in _core.check(suite, n_max, w_max, fault)]
