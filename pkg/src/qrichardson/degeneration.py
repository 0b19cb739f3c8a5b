"""Weight filtration on quantum Grassmannians and its associated graded algebra.

Each Plücker coordinate gets the weight ``M + 1 - omega(I)``; a product of
generators sits in filtration degree equal to its total weight.  The leading
parts of the straightening and commutation relations define a quantum toric
presentation on the same lattice.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

from .errors import InvariantViolation, WeightViolation
from .grassmann import (
    _algebra, _product_pbw, expand_in_std, multichains, plucker_poset, straightening_table,
)
from .lattice import max_omega, product_le, tuple_join, tuple_meet, weight
from .toric import ToricPresentation, confluence_certify

__all__ = [
    "WeightFiltration", "weight_filtration", "GradedExtraction", "extract_graded",
    "DegenerationReport", "verify_degeneration", "filtered_dimensions", "weight_census",
]


@dataclass
class WeightFiltration:
    realization: object
    M: int
    weights: dict

    def of(self, mono):
        return sum(self.weights[x] for x in mono)


def weight_filtration(L, R):
    M = max_omega(R, L.elements)
    weights = {x: weight(R, M, x) for x in L.elements}
    for x in L.elements:
        if weights[x] < 1:
            raise InvariantViolation(f"weight of {x!r} is not positive")
        for y in L.elements:
            if L.lt(x, y) and not weights[x] > weights[y]:
                raise InvariantViolation("weights are not strictly order reversing")
    return WeightFiltration(R, M, weights)


@dataclass
class GradedExtraction:
    presentation: ToricPresentation
    filtration: WeightFiltration
    margins: dict = field(default_factory=dict)

    @property
    def qmap(self):
        return self.presentation.qmap

    @property
    def cmap(self):
        return self.presentation.cmap


def extract_graded(table, realization=None):
    """Leading parts of all relations of ``table`` as a toric presentation.

    ``margins[(kind, I, J)]`` records wt(I) + wt(J) minus the largest weight of
    a lower-order term (None when there is none).
    """
    L, R0 = plucker_poset(table.m, table.n)
    R = realization if realization is not None else R0
    F = weight_filtration(L, R)
    top = lambda I, J: F.weights[I] + F.weights[J]
    margins = {}
    cmap = {}
    for (I, J), exp in sorted(table.straightening.items()):
        lead_key = (tuple_meet(I, J), tuple_join(I, J))
        c = exp[lead_key]
        if not c:
            raise WeightViolation(f"straightening of {I},{J} has no meet-join term")
        cmap[(I, J)] = c
        if F.of(lead_key) != top(I, J):
            raise WeightViolation(f"meet-join term of {I},{J} changes weight")
        lower = [F.of(k) for k in exp.terms if k != lead_key]
        for k in exp.terms:
            if k != lead_key and F.of(k) >= top(I, J):
                raise WeightViolation(f"straightening term {k} of {I},{J} is not of lower weight")
        margins[("straightening", I, J)] = top(I, J) - max(lower) if lower else None
    qmap = {}
    for (I, J), (p, tail) in sorted(table.commutation.items()):
        qmap[(I, J)] = p
        for k in tail.terms:
            if F.of(k) >= top(I, J):
                raise WeightViolation(f"commutation term {k} of {I},{J} is not of lower weight")
        margins[("commutation", I, J)] = top(I, J) - max(F.of(k) for k in tail.terms) if tail.terms else None
    P = ToricPresentation(L, R, qmap, cmap)
    P.validate()
    return GradedExtraction(P, F, margins)


# -- filtered dimensions ------------------------------------------------------------

def weight_census(m, n, degree):
    """Number of standard monomials of each exact weight."""
    L, R = plucker_poset(m, n)
    F = weight_filtration(L, R)
    return dict(sorted(Counter(F.of(mono) for mono in multichains(L.elements, product_le, degree)).items()))


class _Echelon:
    """Incremental exact row reduction of sparse vectors."""

    def __init__(self):
        self.rows = {}  # pivot key -> row with 1 at the pivot

    def add(self, vec):
        vec = dict(vec)
        for piv in sorted(self.rows):
            c = vec.get(piv)
            if c:
                for k, v in self.rows[piv].items():
                    val = vec.get(k, 0) - c * v
                    if val:
                        vec[k] = val
                    else:
                        vec.pop(k, None)
        if not vec:
            return False
        piv = min(vec)
        inv = 1 / vec[piv]
        row = {k: v * inv for k, v in vec.items()}
        for p, r in self.rows.items():
            c = r.get(piv)
            if c:
                for k, v in row.items():
                    val = r.get(k, 0) - c * v
                    if val:
                        r[k] = val
                    else:
                        r.pop(k, None)
        self.rows[piv] = row
        return True

    def __len__(self):
        return len(self.rows)


def filtered_dimensions(m, n, degree, q=None):
    """Graded pieces of the filtration on degree-``degree`` products of minors.

    For each weight w, ``dim F_w - dim F_{w-1}`` where F_w is spanned by all
    products of ``degree`` minors (in any order) of total weight <= w.
    """
    L, R = plucker_poset(m, n)
    F = weight_filtration(L, R)
    alg = _algebra(m, n, q)
    words = sorted(itertools.product(L.elements, repeat=degree), key=lambda w: (F.of(w), w))
    ech = _Echelon()
    dims = {}
    for w in words:
        before = len(ech)
        ech.add(_product_pbw(alg, w).terms)
        wt = F.of(w)
        dims[wt] = dims.get(wt, 0) + len(ech) - before
    return {w: d for w, d in sorted(dims.items()) if d}


@dataclass
class DegenerationReport:
    m: int
    n: int
    degree: int
    words_checked: int = 0
    dimension_tables: dict = field(default_factory=dict)
    census_tables: dict = field(default_factory=dict)
    confluent: bool = False
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def verify_degeneration(m, n, degree=2, q=None):
    report = DegenerationReport(m, n, degree)
    L, R = plucker_poset(m, n)
    F = weight_filtration(L, R)
    for d in range(1, degree + 1):
        for w in itertools.product(L.elements, repeat=d):
            report.words_checked += 1
            exp = expand_in_std(w, m, n, q)
            bad = [k for k in exp.terms if F.of(k) > F.of(w)]
            if bad:
                report.violations.append(f"word {w} has standard term {bad[0]} of higher weight")
        dims = filtered_dimensions(m, n, d, q)
        census = weight_census(m, n, d)
        report.dimension_tables[d] = dims
        report.census_tables[d] = census
        if dims != census:
            report.violations.append(f"degree {d}: filtered dimensions differ from the census")
    try:
        ext = extract_graded(straightening_table(m, n, q))
        conf = confluence_certify(ext.presentation)
        report.confluent = conf.ok
        if not conf.ok:
            report.violations.append(f"extracted presentation not confluent at {conf.failures[0][0]}")
    except InvariantViolation as exc:
        report.violations.append(str(exc))
    return report
