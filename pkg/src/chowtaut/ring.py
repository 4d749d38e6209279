"""Exact graded algebra of powers of a degree-d Fano threefold.

The ring R*(Y^m) is presented by generators h_i (codim 1), o_i (codim 3)
and tau_{i,j} (codim 3, i != j), modulo the rewrite rules

    o_i*o_i -> 0          h_i*o_i -> 0        h_i^3 -> d*o_i
    tau_{i,j}*o_i -> 0    tau_{i,j}*h_i -> 0
    tau_{i,j}*tau_{i,j} -> eps2 * 2b * o_i*o_j
    tau_{i,j}*tau_{i,k} -> eps3 * tau_{j,k}*o_i     (j != k)

plus, whenever m >= 2b+2, the vanishing of the symmetrized tau products
(see :meth:`TautRing.sym_relator`).  All coefficients are exact rationals;
there is no floating point anywhere in this module.

Default signs (eps2 = -1, eps3 = +1, plain unsigned symmetrization) are the
ones adjudicated by the cohomology tensor model in :mod:`chowtaut.oracle`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .linalg import SparseRowBasis

Rational = Fraction | int

# A raw generator is one of ('h', i), ('o', i), ('tau', i, j).
Gen = tuple


@dataclass(frozen=True)
class RingParams:
    """Numerical data fixing the ring R*(Y^m).

    d is the degree (integral of h^3 over Y), b is half the dimension of
    the odd cohomology, m the power of Y.  eps2/eps3 are the signs in the
    tau^2 and shared-index relations; eps4_mode selects the signed form of
    the symmetrization relator ("plain-sum" is the adjudicated form,
    "oracle" is an alias for it).
    """

    d: int
    b: int
    m: int
    eps2: int = -1
    eps3: int = 1
    eps4_mode: str = "plain-sum"

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be a positive integer")
        if self.b < 0:
            raise ValueError("b must be non-negative")
        if self.m < 1:
            raise ValueError("m must be a positive integer")
        if self.eps2 not in (1, -1) or self.eps3 not in (1, -1):
            raise ValueError("eps2 and eps3 must be +1 or -1")
        if self.eps4_mode not in ("plain-sum", "oracle"):
            raise ValueError("eps4_mode must be 'plain-sum' or 'oracle'")

    @classmethod
    def paper_signs(cls, d: int, b: int, m: int) -> "RingParams":
        """Signs as literally printed in the source presentation (tau^2 = +2b o o)."""
        return cls(d, b, m, eps2=1, eps3=1)

    def sign_tag(self) -> str:
        return f"eps2={self.eps2:+d},eps3={self.eps3:+d},{self.eps4_mode}"


@dataclass(frozen=True)
class Monomial:
    """A normal-form monomial.

    h: sorted tuple of (index, exponent) with exponent in {1, 2};
    o: sorted tuple of indices carrying the point class;
    tau: sorted tuple of (i, j) pairs with i < j, forming a partial matching.
    An index appearing in tau carries no h power and no o flag.
    """

    h: tuple[tuple[int, int], ...] = ()
    o: tuple[int, ...] = ()
    tau: tuple[tuple[int, int], ...] = ()

    @property
    def codim(self) -> int:
        return sum(e for _, e in self.h) + 3 * len(self.o) + 3 * len(self.tau)

    def key(self):
        """Canonical sort key: tau pairs, then o indices, then h exponents."""
        return (self.tau, self.o, self.h)

    def max_index(self) -> int:
        idx = [i for i, _ in self.h] + list(self.o)
        idx += [j for p in self.tau for j in p]
        return max(idx, default=0)

    def generators(self) -> list[Gen]:
        """Expand back into a raw generator list (h repeated per exponent)."""
        raw: list[Gen] = []
        for i, e in self.h:
            raw.extend(("h", i) for _ in range(e))
        raw.extend(("o", i) for i in self.o)
        raw.extend(("tau", i, j) for i, j in self.tau)
        return raw

    def __str__(self) -> str:
        if not (self.h or self.o or self.tau):
            return "1"
        parts = []
        for i, e in self.h:
            parts.append(f"h_{i}" if e == 1 else f"h_{i}^{e}")
        parts.extend(f"o_{i}" for i in self.o)
        parts.extend(f"t_{{{i},{j}}}" for i, j in self.tau)
        return "*".join(parts)


ONE = Monomial()


class CycleClass:
    """A formal rational combination of normal-form monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction] | None = None):
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for mon, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[mon] = c

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def codim(self):
        """Common codimension, None for the zero class, 'inhomogeneous' for mixed sums."""
        cods = {mon.codim for mon in self.terms}
        if not cods:
            return None
        if len(cods) > 1:
            return "inhomogeneous"
        return cods.pop()

    def is_homogeneous(self) -> bool:
        return self.codim != "inhomogeneous"

    def coefficient(self, mon: Monomial) -> Fraction:
        return self.terms.get(mon, Fraction(0))

    def __add__(self, other: "CycleClass") -> "CycleClass":
        out = dict(self.terms)
        for mon, c in other.terms.items():
            s = out.get(mon, Fraction(0)) + c
            if s:
                out[mon] = s
            else:
                out.pop(mon, None)
        return CycleClass(out)

    def __sub__(self, other: "CycleClass") -> "CycleClass":
        return self + other.scale(-1)

    def __neg__(self) -> "CycleClass":
        return self.scale(-1)

    def scale(self, q: Rational) -> "CycleClass":
        q = Fraction(q)
        if not q:
            return CycleClass()
        return CycleClass({mon: c * q for mon, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, CycleClass) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: t[0].key())

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks = []
        for n, (mon, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            if mon is ONE or mon == ONE:
                body = str(a)
            elif a == 1:
                body = str(mon)
            else:
                body = f"{a}*{mon}"
            if n == 0:
                chunks.append(("-" if neg else "") + body)
            else:
                chunks.append(("- " if neg else "+ ") + body)
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"CycleClass({self})"


def _pair(i: int, j: int) -> tuple[int, int]:
    if i == j:
        raise ValueError(f"tau requires two distinct indices, got ({i},{j})")
    return (i, j) if i < j else (j, i)


class TautRing:
    """The ring R*(Y^m) for fixed parameters, with all core operations."""

    def __init__(self, p: RingParams):
        self.p = p

    # -- constructors -------------------------------------------------

    def zero(self) -> CycleClass:
        return CycleClass()

    def one(self) -> CycleClass:
        return CycleClass({ONE: Fraction(1)})

    def scalar(self, q: Rational) -> CycleClass:
        return CycleClass({ONE: Fraction(q)})

    def h(self, i: int) -> CycleClass:
        self._check_index(i)
        return CycleClass({Monomial(h=((i, 1),)): Fraction(1)})

    def o(self, i: int) -> CycleClass:
        self._check_index(i)
        return CycleClass({Monomial(o=(i,)): Fraction(1)})

    def tau(self, i: int, j: int) -> CycleClass:
        self._check_index(i)
        self._check_index(j)
        return CycleClass({Monomial(tau=(_pair(i, j),)): Fraction(1)})

    def with_m(self, m: int) -> "TautRing":
        return TautRing(replace(self.p, m=m))

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.p.m:
            raise ValueError(f"factor index {i} out of range 1..{self.p.m}")

    # -- normal form ---------------------------------------------------

    def _reduce(self, hc: dict[int, int], oc: dict[int, int],
                taus: list[tuple[int, int]]) -> tuple[Fraction, Monomial | None]:
        """Exhaustively rewrite a commutative word; returns (coefficient factor, monomial)."""
        p = self.p
        coeff = Fraction(1)
        taus = sorted(taus)
        # tau*tau rewrites strictly decrease the number of tau factors.
        changed = True
        while changed:
            changed = False
            for a in range(len(taus)):
                for c in range(a + 1, len(taus)):
                    pa, pc = taus[a], taus[c]
                    if pa == pc:
                        coeff *= p.eps2 * 2 * p.b
                        oc[pa[0]] = oc.get(pa[0], 0) + 1
                        oc[pa[1]] = oc.get(pa[1], 0) + 1
                    else:
                        shared = set(pa) & set(pc)
                        if not shared:
                            continue
                        i = shared.pop()
                        j = (set(pa) - {i}).pop()
                        k = (set(pc) - {i}).pop()
                        coeff *= p.eps3
                        taus.append(_pair(j, k))
                        oc[i] = oc.get(i, 0) + 1
                    del taus[c], taus[a]
                    taus.sort()
                    changed = True
                    break
                if changed:
                    break
            if not coeff:
                return Fraction(0), None
        for i in list(hc):
            while hc[i] >= 3:
                hc[i] -= 3
                oc[i] = oc.get(i, 0) + 1
                coeff *= p.d
        tau_idx = {x for pr in taus for x in pr}
        for i, n in oc.items():
            if n >= 2 or (n and hc.get(i, 0)) or (n and i in tau_idx):
                return Fraction(0), None
        for i, n in hc.items():
            if n and i in tau_idx:
                return Fraction(0), None
        mon = Monomial(
            h=tuple(sorted((i, e) for i, e in hc.items() if e)),
            o=tuple(sorted(i for i, n in oc.items() if n)),
            tau=tuple(sorted(taus)),
        )
        return coeff, mon

    def normal_form(self, raw: Iterable[Gen], coeff: Rational = 1) -> CycleClass:
        """Normal form of a single product of generators times a coefficient."""
        hc: dict[int, int] = {}
        oc: dict[int, int] = {}
        taus: list[tuple[int, int]] = []
        for g in raw:
            kind = g[0]
            if kind == "h":
                self._check_index(g[1])
                hc[g[1]] = hc.get(g[1], 0) + 1
            elif kind == "o":
                self._check_index(g[1])
                oc[g[1]] = oc.get(g[1], 0) + 1
            elif kind == "tau":
                self._check_index(g[1])
                self._check_index(g[2])
                taus.append(_pair(g[1], g[2]))
            else:
                raise ValueError(f"unknown generator kind {g!r}")
        factor, mon = self._reduce(hc, oc, taus)
        c = Fraction(coeff) * factor
        if mon is None or not c:
            return CycleClass()
        return CycleClass({mon: c})

    # -- ring operations -----------------------------------------------

    def multiply(self, a: CycleClass, b: CycleClass) -> CycleClass:
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                hc: dict[int, int] = {i: e for i, e in m1.h}
                for i, e in m2.h:
                    hc[i] = hc.get(i, 0) + e
                oc: dict[int, int] = {i: 1 for i in m1.o}
                for i in m2.o:
                    oc[i] = oc.get(i, 0) + 1
                taus = list(m1.tau) + list(m2.tau)
                factor, mon = self._reduce(hc, oc, taus)
                c = c1 * c2 * factor
                if mon is None or not c:
                    continue
                s = out.get(mon, Fraction(0)) + c
                if s:
                    out[mon] = s
                else:
                    del out[mon]
        return CycleClass(out)

    def product(self, classes: Sequence[CycleClass]) -> CycleClass:
        acc = self.one()
        for x in classes:
            acc = self.multiply(acc, x)
        return acc

    def power(self, a: CycleClass, n: int) -> CycleClass:
        if n < 0:
            raise ValueError("negative powers are not defined")
        acc = self.one()
        for _ in range(n):
            acc = self.multiply(acc, a)
        return acc

    def integrate(self, a: CycleClass) -> Fraction:
        """Degree map: coefficient of o_1*...*o_m in top codimension, else 0."""
        if not a.is_homogeneous():
            raise ValueError("integrate requires a homogeneous class")
        if a.is_zero() or a.codim != 3 * self.p.m:
            return Fraction(0)
        point = Monomial(o=tuple(range(1, self.p.m + 1)))
        return a.coefficient(point)

    # -- symmetrization relators ----------------------------------------

    def sym_relator(self, indices: Sequence[int]) -> CycleClass:
        """The symmetrized tau product over a set of 2b+2 distinct indices.

        Equals the sum over all permutations sigma in S_{2b+2} of
        prod_i tau_{sigma(2i-1),sigma(2i)}, i.e. 2^(b+1) (b+1)! times the
        sum over perfect matchings.  This class is declared to vanish in
        the quotient.
        """
        n = 2 * self.p.b + 2
        S = sorted(set(indices))
        if len(S) != n or len(S) != len(list(indices)):
            raise ValueError(f"need {n} distinct indices, got {list(indices)}")
        if self.p.m < n:
            raise ValueError(f"m={self.p.m} too small for a relator on {n} indices")
        for i in S:
            self._check_index(i)
        mult = Fraction(2 ** (self.p.b + 1) * math.factorial(self.p.b + 1))
        out = CycleClass()
        for matching in perfect_matchings(S):
            mon = Monomial(tau=tuple(sorted(_pair(i, j) for i, j in matching)))
            out = out + CycleClass({mon: mult})
        return out

    def relator_index_sets(self) -> Iterator[tuple[int, ...]]:
        n = 2 * self.p.b + 2
        if self.p.m < n:
            return iter(())
        return itertools.combinations(range(1, self.p.m + 1), n)

    # -- graded pieces ---------------------------------------------------

    def graded_basis(self, c: int) -> list[Monomial]:
        """All normal-form monomials of codimension c, in canonical key order."""
        if not 0 <= c <= 3 * self.p.m:
            raise ValueError(f"codimension {c} out of range 0..{3 * self.p.m}")
        out: list[Monomial] = []
        indices = list(range(1, self.p.m + 1))
        for matching in partial_matchings(indices):
            rest = sorted(set(indices) - {x for pr in matching for x in pr})
            need = c - 3 * len(matching)
            if need < 0 or need > 3 * len(rest):
                continue
            taus = tuple(sorted(matching))
            for weights in _weight_assignments(len(rest), need):
                h = tuple((i, w) for i, w in zip(rest, weights) if w in (1, 2))
                o = tuple(i for i, w in zip(rest, weights) if w == 3)
                out.append(Monomial(h=h, o=o, tau=taus))
        out.sort(key=Monomial.key)
        return out

    def relator_vectors(self, c: int) -> list[dict[Monomial, Fraction]]:
        """All nf(relator * monomial) of codimension c, as coefficient dicts."""
        rc = 3 * (self.p.b + 1)
        if c < rc:
            return []
        vecs = []
        lower = self.graded_basis(c - rc)
        for S in self.relator_index_sets():
            rel = self.sym_relator(S)
            for mu in lower:
                v = self.multiply(rel, CycleClass({mu: Fraction(1)}))
                if not v.is_zero():
                    vecs.append(v.terms)
        return vecs

    def graded_dimension(self, c: int) -> int:
        """Dimension of the codim-c piece of the quotient by the relator ideal."""
        basis = self.graded_basis(c)
        vecs = self.relator_vectors(c)
        if not vecs:
            return len(basis)
        rows = SparseRowBasis()
        for v in vecs:
            rows.add({mon.key(): coef for mon, coef in v.items()})
        return len(basis) - rows.rank

    def graded_dimensions(self) -> list[int]:
        return [self.graded_dimension(c) for c in range(3 * self.p.m + 1)]


# -- raw-product reduction with an arbitrary rule order -------------------


def reduce_with_order(ring: TautRing, raw: Iterable[Gen], rng,
                      coeff: Rational = 1) -> CycleClass:
    """Apply the rewrite rules one at a time in an order chosen by rng.

    Semantically identical to :meth:`TautRing.normal_form`; used to test
    confluence of the rewriting system.
    """
    p = ring.p
    hc: dict[int, int] = {}
    oc: dict[int, int] = {}
    taus: list[tuple[int, int]] = []
    for g in raw:
        if g[0] == "h":
            hc[g[1]] = hc.get(g[1], 0) + 1
        elif g[0] == "o":
            oc[g[1]] = oc.get(g[1], 0) + 1
        else:
            taus.append(_pair(g[1], g[2]))
    coeff = Fraction(coeff)
    while True:
        moves = []
        for a in range(len(taus)):
            for c in range(a + 1, len(taus)):
                if taus[a] == taus[c]:
                    moves.append(("tau_dup", a, c))
                elif set(taus[a]) & set(taus[c]):
                    moves.append(("tau_shared", a, c))
        for i, n in hc.items():
            if n >= 3:
                moves.append(("h_cube", i))
            if n and oc.get(i, 0):
                moves.append(("kill_ho", i))
        for i, n in oc.items():
            if n >= 2:
                moves.append(("kill_oo", i))
        tau_idx = {x for pr in taus for x in pr}
        for i in tau_idx:
            if hc.get(i, 0):
                moves.append(("kill_tau_h", i))
            if oc.get(i, 0):
                moves.append(("kill_tau_o", i))
        if not moves:
            break
        move = moves[rng.randrange(len(moves))]
        kind = move[0]
        if kind == "tau_dup":
            _, a, c = move
            i, j = taus[a]
            del taus[c], taus[a]
            coeff *= p.eps2 * 2 * p.b
            oc[i] = oc.get(i, 0) + 1
            oc[j] = oc.get(j, 0) + 1
        elif kind == "tau_shared":
            _, a, c = move
            i = (set(taus[a]) & set(taus[c])).pop()
            j = (set(taus[a]) - {i}).pop()
            k = (set(taus[c]) - {i}).pop()
            del taus[c], taus[a]
            coeff *= p.eps3
            taus.append(_pair(j, k))
            oc[i] = oc.get(i, 0) + 1
        elif kind == "h_cube":
            i = move[1]
            hc[i] -= 3
            oc[i] = oc.get(i, 0) + 1
            coeff *= p.d
        else:
            return CycleClass()
        if not coeff:
            return CycleClass()
    mon = Monomial(
        h=tuple(sorted((i, e) for i, e in hc.items() if e)),
        o=tuple(sorted(i for i, n in oc.items() if n)),
        tau=tuple(sorted(taus)),
    )
    return CycleClass({mon: coeff})


# -- relabeling across powers of Y ----------------------------------------


def relabel(a: CycleClass, mapping: dict[int, int], target: TautRing) -> CycleClass:
    """Rename factor indices; mapping must be injective on the indices used."""
    out = CycleClass()
    for mon, c in a.terms.items():
        h = tuple(sorted((mapping.get(i, i), e) for i, e in mon.h))
        o = tuple(sorted(mapping.get(i, i) for i in mon.o))
        tau = tuple(sorted(_pair(mapping.get(i, i), mapping.get(j, j))
                           for i, j in mon.tau))
        idx = [i for i, _ in h] + list(o) + [x for pr in tau for x in pr]
        if len(set(o)) != len(o) or len({x for pr in tau for x in pr}) != 2 * len(tau):
            raise ValueError("relabeling is not injective on the used indices")
        for i in idx:
            target._check_index(i)
        out = out + CycleClass({Monomial(h=h, o=o, tau=tau): c})
    return out


# -- combinatorial helpers -------------------------------------------------


def perfect_matchings(items: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """All perfect matchings of an even-sized sequence of distinct items."""
    items = list(items)
    if not items:
        yield []
        return
    if len(items) % 2:
        raise ValueError("perfect matchings need an even number of items")
    first, rest = items[0], items[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for sub in perfect_matchings(remaining):
            yield [(first, partner)] + sub


def partial_matchings(items: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    """All partial matchings (sets of disjoint pairs), including the empty one."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in partial_matchings(rest):
        yield sub
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1:]
        for sub in partial_matchings(remaining):
            yield [(first, partner)] + sub


def _weight_assignments(n: int, total: int) -> Iterator[tuple[int, ...]]:
    """Tuples in {0,1,2,3}^n summing to total (3 encodes the o flag)."""
    if n == 0:
        if total == 0:
            yield ()
        return
    for w in range(min(3, total) + 1):
        if total - w <= 3 * (n - 1):
            for rest in _weight_assignments(n - 1, total - w):
                yield (w,) + rest
