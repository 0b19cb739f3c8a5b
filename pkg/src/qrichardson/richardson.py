"""Quantum Richardson quotients of quantum Grassmannians.

The quotient by the minors outside an interval [alpha, beta] of Pi_{m,n} has
the standard monomials on the interval as a basis.  Products are computed by
straightening in the full algebra and dropping every term that involves an
element outside the interval.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

import numpy as np

from .degeneration import _Echelon
from .errors import BadShape, InvariantViolation, NotComparable, ReconstructionFailed
from .grassmann import (
    StdExpansion, StraighteningTable, _algebra, _product_pbw, multichains, plucker_poset,
    straighten_word, straightening_table,
)
from .scalars import QScalar
from .lattice import interval_and_complement, join_irreducibles, product_le

__all__ = [
    "RichardsonAlgebra", "richardson", "gk_dim", "coset_length", "HilbertData", "hilbert",
    "gorenstein_indicator", "multichain_counts", "reconstruct_numerator", "hibi_gorenstein",
    "quotient_dimension",
]


@dataclass
class RichardsonAlgebra:
    m: int
    n: int
    alpha: tuple
    beta: tuple
    interval: list
    complement: list
    lattice: object
    table: StraighteningTable
    restricted: StraighteningTable = None

    def basis(self, degree):
        return multichains(self.interval, product_le, degree)

    def multiply(self, x, y):
        """Product of two StdExpansions in the quotient."""
        keep = set(self.interval)
        out = StdExpansion()
        for k1, c1 in x.terms.items():
            for k2, c2 in y.terms.items():
                out = out + straighten_word(k1 + k2, self.table, keep).scale(c1 * c2)
        return out

    def generator(self, I):
        I = tuple(I)
        if I not in self.interval:
            raise BadShape(f"{I} is not in the interval")
        return StdExpansion({(I,): QScalar(1) if self.table.q is None else Fraction(1)})


def _parse_index(x, m, n):
    x = tuple(int(v) for v in x)
    if len(x) != m or any(not 1 <= v <= n for v in x) or any(a >= b for a, b in zip(x, x[1:])):
        raise BadShape(f"{x} is not a Plücker index for ({m},{n})")
    return x


def richardson(m, n, alpha, beta, q=None):
    alpha, beta = _parse_index(alpha, m, n), _parse_index(beta, m, n)
    L, _ = plucker_poset(m, n)
    if not L.le(alpha, beta):
        raise NotComparable(f"{alpha} is not <= {beta}")
    interval, complement = interval_and_complement(L, alpha, beta)
    sub = L.sublattice(interval)
    table = straightening_table(m, n, q)
    keep = set(interval)

    def restrict(exp):
        return StdExpansion({k: v for k, v in exp.terms.items() if all(x in keep for x in k)})

    restricted = StraighteningTable(
        m, n, table.q,
        {k: restrict(v) for k, v in table.straightening.items() if k[0] in keep and k[1] in keep},
        {k: (p, restrict(t)) for k, (p, t) in table.commutation.items() if k[0] in keep and k[1] in keep},
    )
    return RichardsonAlgebra(m, n, alpha, beta, interval, complement, sub, table, restricted)


def coset_length(I):
    m = len(I)
    return sum(I) - m * (m + 1) // 2


def gk_dim(R):
    """GK dimension by the closed formula, certified against two other counts."""
    formula = sum(b - a for a, b in zip(R.alpha, R.beta)) + 1
    by_rank = R.lattice.rank() + 1
    by_length = coset_length(R.beta) - coset_length(R.alpha) + 1
    if not formula == by_rank == by_length:
        raise InvariantViolation(
            f"GK dimension formulas disagree: {formula}, {by_rank}, {by_length}")
    return formula


# -- Hilbert series -------------------------------------------------------------------

def multichain_counts(lattice, elements, D):
    """h_0..h_D: weakly increasing chains of each length, by transfer matrix."""
    elements = list(elements)
    A = np.array([[1 if lattice.le(x, y) else 0 for y in elements] for x in elements], dtype=object)
    h = [1]
    v = np.ones(len(elements), dtype=object)
    for _ in range(1, D + 1):
        h.append(int(v.sum()))
        v = v.dot(A)
    return h


def reconstruct_numerator(h, krull):
    """Numerator P of sum h_d t^d = P / (1 - t)^krull, certified by trailing zeros."""
    D = len(h) - 1
    coeffs = []
    for d in range(D + 1):
        coeffs.append(sum((-1) ** j * comb(krull, j) * h[d - j] for j in range(min(krull, d) + 1)))
    tail = coeffs[max(0, D - krull + 1):]
    if D < krull or any(tail):
        raise ReconstructionFailed(
            f"numerator does not terminate within degree {D}; retry with a larger bound")
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass
class HilbertData:
    h: list
    krull: int
    numerator: list = field(default_factory=list)
    palindromic: bool = False


def hilbert(R, D=None):
    krull = R.lattice.rank() + 1
    if D is None:
        D = R.lattice.rank() + len(R.interval) + 2
    h = multichain_counts(R.lattice, R.interval, D)
    P = reconstruct_numerator(h, krull)
    return HilbertData(h, krull, P, P == P[::-1])


def gorenstein_indicator(R, D=None):
    """Palindromy of the Hilbert numerator (a Hilbert-series criterion, not a proof)."""
    return hilbert(R, D).palindromic


def hibi_gorenstein(L):
    """Purity of the poset of join-irreducibles: all maximal chains have equal length."""
    irr, _ = join_irreducibles(L)
    if not irr:
        return True
    P = L.subposet(irr)
    lengths = set()

    def walk(x, length):
        ups = [y for y in irr if P.lt(x, y) and not any(P.lt(x, z) and P.lt(z, y) for z in irr)]
        if not ups:
            lengths.add(length)
        for y in ups:
            walk(y, length + 1)

    for x in P.minimal_elements():
        walk(x, 0)
    return len(lengths) == 1


def quotient_dimension(R, degree, q=None):
    """dim of the degree piece of the quotient, from PBW ranks alone.

    All degree-``degree`` words span A_d; those using an element outside the
    interval span the degree piece of the ideal.
    """
    alg = _algebra(R.m, R.n, q)
    L = plucker_poset(R.m, R.n)[0]
    keep = set(R.interval)
    whole, ideal = _Echelon(), _Echelon()
    for w in itertools.product(L.elements, repeat=degree):
        vec = _product_pbw(alg, w).terms
        whole.add(vec)
        if any(x not in keep for x in w):
            ideal.add(vec)
    return len(whole) - len(ideal)
