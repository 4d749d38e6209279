"""Exact sparse linear algebra over the rationals.

Rank computations use fraction-free (cross-multiplication) elimination on
integer rows; incoming rows with rational entries are cleared of
denominators first.  Everything is exact; no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable


def _to_int_row(vec: dict) -> dict:
    """Clear denominators and divide out the content; keys must be sortable."""
    row = {}
    denoms = 1
    for c in vec.values():
        c = Fraction(c)
        denoms = denoms * c.denominator // gcd(denoms, c.denominator)
    for k, c in vec.items():
        c = Fraction(c)
        n = c.numerator * (denoms // c.denominator)
        if n:
            row[k] = n
    if not row:
        return row
    g = 0
    for n in row.values():
        g = gcd(g, n)
    if g > 1:
        row = {k: n // g for k, n in row.items()}
    return row


class SparseRowBasis:
    """Incrementally row-reduced basis of sparse vectors with sortable keys."""

    def __init__(self):
        self.pivots: dict = {}  # pivot key -> integer row (dict key -> int)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def residual(self, vec: dict) -> dict:
        """Reduce vec against the stored pivots; returns an integer row."""
        row = _to_int_row(vec)
        while row:
            lead = min(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            a, b = piv[lead], row[lead]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {}
            for k in set(row) | set(piv):
                v = fa * row.get(k, 0) - fb * piv.get(k, 0)
                if v:
                    new[k] = v
            g = 0
            for v in new.values():
                g = gcd(g, v)
            if g > 1:
                new = {k: v // g for k, v in new.items()}
            row = new
        return row

    def contains(self, vec: dict) -> bool:
        return not self.residual(vec)

    def add(self, vec: dict) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        row = self.residual(vec)
        if not row:
            return False
        lead = min(row)
        if row[lead] < 0:
            row = {k: -v for k, v in row.items()}
        self.pivots[lead] = row
        return True


def exact_rank(vectors: Iterable[dict]) -> int:
    basis = SparseRowBasis()
    for v in vectors:
        basis.add(v)
    return basis.rank
