"""Quantum Grassmannians inside quantum matrices.

O_q(G_{m,n}) is the subalgebra of O_q(M_{n,m}) (n rows, m columns) generated
by the maximal minors ``[I] = [I | 1..m]``.  Products of minors are expanded
in the standard-monomial basis by solving exact linear systems on PBW
coordinates; the straightening and commutation tables are read off those
expansions.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .errors import BadShape, InvariantViolation, NotConfluent, RankDeficient
from .lattice import (
    chain_product, identity_realization, product_le,
    tuple_join, tuple_meet,
)
from .qmatrix import qmatrix_algebra, quantum_minor
from .scalars import QScalar, as_pure_q_power, specialize as _specialize

__all__ = [
    "plucker_poset", "plucker_indices", "multichains", "StdExpansion", "expand_in_std",
    "StraighteningTable", "straightening_table", "verify_symmetric_asl", "AslReport",
    "complement_order", "disjoint_union_order", "muir_consistency", "straighten_word",
    "minor_pbw", "std_pbw",
]


def _check_shape(m, n):
    if not (isinstance(m, int) and isinstance(n, int)) or not 1 <= m <= n:
        raise BadShape(f"need 1 <= m <= n, got m={m}, n={n}")


def plucker_indices(m, n):
    _check_shape(m, n)
    return list(itertools.combinations(range(1, n + 1), m))


@lru_cache(maxsize=None)
def plucker_poset(m, n):
    """Return ``(lattice, realization)`` for Pi_{m,n} inside C_n^m."""
    L = chain_product((n,) * m, plucker_indices(m, n))
    return L, identity_realization(L, (n,) * m)


def multichains(elements, le, length):
    """Weakly increasing sequences of the given length, in lexicographic order."""
    elements = sorted(elements)
    out = []

    def grow(prefix):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for x in elements:
            if not prefix or le(prefix[-1], x):
                prefix.append(x)
                grow(prefix)
                prefix.pop()

    grow([])
    return out


def _row_content(mono):
    return tuple(sorted(itertools.chain.from_iterable(mono)))


# -- PBW images of minors and standard monomials --------------------------------

def _algebra(m, n, q):
    return qmatrix_algebra(n, m, None if q is None else Fraction(q))


def minor_pbw(I, m, n, q=None):
    alg = _algebra(m, n, q)
    return quantum_minor(tuple(I), tuple(range(1, m + 1)), None, algebra=alg)


@lru_cache(maxsize=None)
def _product_pbw(alg, mono):
    m = alg.v
    if not mono:
        return alg.scalar(1)
    head = _product_pbw(alg, mono[:-1])
    return head * quantum_minor(mono[-1], tuple(range(1, m + 1)), None, algebra=alg)


def std_pbw(mono, m, n, q=None):
    """PBW image of the product ``[I_1]...[I_s]``."""
    return _product_pbw(_algebra(m, n, q), tuple(map(tuple, mono)))


# -- standard expansions ---------------------------------------------------------

class StdExpansion:
    """Linear combination of standard monomials (tuples of Plücker indices)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __getitem__(self, mono):
        return self.terms.get(mono, 0)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms))

    def items(self):
        return sorted(self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, StdExpansion):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return StdExpansion(out)

    def scale(self, c):
        return StdExpansion({k: c * v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    @property
    def degree(self):
        lens = {len(k) for k in self.terms}
        return lens.pop() if len(lens) == 1 else None

    def contents(self):
        return {_row_content(k) for k in self.terms}

    def specialize(self, t):
        return StdExpansion({k: _specialize(v, t) if isinstance(v, QScalar) else v
                             for k, v in self.terms.items()})

    def __repr__(self):
        inner = ", ".join(f"{_mono_str(k)}: {v}" for k, v in self.items())
        return "StdExpansion({" + inner + "})"


def _mono_str(mono):
    return "".join("[" + ",".join(map(str, x)) + "]" for x in mono)


def expand_in_std(product, m, n, q=None, blocked=True):
    """Expand ``[I_1]...[I_s]`` in standard monomials by exact linear solving.

    ``blocked=False`` solves against every standard monomial of the same
    length instead of only those with the same row content, so that the
    content law becomes a checkable output rather than an assumption.
    """
    _check_shape(m, n)
    product = tuple(tuple(I) for I in product)
    valid = set(plucker_indices(m, n))
    for I in product:
        if I not in valid:
            raise BadShape(f"{I} is not a Plücker index for ({m},{n})")
    return _expand_cached(m, n, None if q is None else Fraction(q), product, blocked)


@lru_cache(maxsize=None)
def _expand_cached(m, n, q, product, blocked):
    s = len(product)
    if s == 0:
        return StdExpansion({(): QScalar(1) if q is None else Fraction(1)})
    L, _ = plucker_poset(m, n)
    alg = _algebra(m, n, q)
    basis = multichains(L.elements, product_le, s)
    if blocked:
        target = _row_content(product)
        basis = [b for b in basis if _row_content(b) == target]
    if product in basis:
        return StdExpansion({product: alg.one})
    images = [_product_pbw(alg, b).terms for b in basis]
    rhs = _product_pbw(alg, product).terms
    keys = sorted(set(rhs).union(*images))
    matrix = [[img.get(k, alg.zero) for img in images] for k in keys]
    vector = [rhs.get(k, alg.zero) for k in keys]
    coeffs = linalg.solve_unique(matrix, vector)
    if q is None:
        coeffs = [c if isinstance(c, QScalar) else QScalar(c) for c in coeffs]
    return StdExpansion(dict(zip(basis, coeffs)))


# -- tables -------------------------------------------------------------------------

@dataclass
class StraighteningTable:
    """Straightening entries for incomparable pairs, commutation entries for all pairs.

    ``commutation[(I, J)] = (p, tail)`` encodes ``[I][J] - p [J][I] = tail``.
    """

    m: int
    n: int
    q: object
    straightening: dict = field(default_factory=dict)
    commutation: dict = field(default_factory=dict)

    @property
    def lattice(self):
        return plucker_poset(self.m, self.n)[0]

    def leading(self, I, J):
        return self.straightening[(I, J)][(tuple_meet(I, J), tuple_join(I, J))]

    def specialize(self, t):
        return StraighteningTable(
            self.m, self.n, Fraction(t),
            {k: v.specialize(t) for k, v in self.straightening.items()},
            {k: (_specialize(p, t) if isinstance(p, QScalar) else p, tail.specialize(t))
             for k, (p, tail) in self.commutation.items()},
        )

    def pair_expansion(self, J, I):
        """Standard expansion of ``[J][I]`` read from the table."""
        if product_le(J, I):
            return StdExpansion({(J, I): _one_like(self.q)})
        if product_le(I, J):
            p, tail = self.commutation[(J, I)]
            return StdExpansion({(I, J): p}) + tail
        return self.straightening[(J, I)]

    def check_invariants(self):
        """Support law, content law, leading pure +q-power, vanishing meet-join tails."""
        L = self.lattice
        for (I, J), exp in self.straightening.items():
            _check_support(I, J, exp, what="straightening")
            lead = exp[(tuple_meet(I, J), tuple_join(I, J))]
            pp = _pure_power(lead, self.q)
            if pp is None or pp[0] != 1:
                raise InvariantViolation(
                    f"leading coefficient of [{I}][{J}] is {lead}, not +q^e")
        for (I, J), (p, tail) in self.commutation.items():
            if _pure_power(p, self.q) is None:
                raise InvariantViolation(f"commutation factor for {I},{J} is not a pure power")
            _check_support(I, J, tail, what="commutation", strict=I != J)
            if not L.comparable(I, J) and tail[(tuple_meet(I, J), tuple_join(I, J))]:
                raise InvariantViolation(f"commutation tail of {I},{J} has a meet-join term")
        return True


def _one_like(q):
    return QScalar(1) if q is None else Fraction(1)


def _pure_power(x, q):
    if q is None:
        return as_pure_q_power(x)
    # after specialising only the sign survives meaningfully
    return (1 if x > 0 else -1, None) if x else None


def _check_support(I, J, exp, what, strict=True):
    target = Counter(I) + Counter(J)
    for K, Lm in exp.terms:
        if Counter(K) + Counter(Lm) != target:
            raise InvariantViolation(f"{what} term {K},{Lm} of {I},{J} breaks the content law")
        if strict:
            ok = all(product_le(K, X) and K != X and product_le(X, Lm) and X != Lm for X in (I, J))
            if not ok:
                raise InvariantViolation(f"{what} term {K},{Lm} of {I},{J} breaks the support law")


def straightening_table(m, n, q=None, check=True):
    """Compute and certify the full table for O_q(G_{m,n})."""
    return _table_cached(m, n, None if q is None else Fraction(q), check)


@lru_cache(maxsize=None)
def _table_cached(m, n, q, check):
    L, _ = plucker_poset(m, n)
    table = StraighteningTable(m, n, q)
    one = _one_like(q)
    elems = L.elements
    for I, J in itertools.product(elems, repeat=2):
        if not L.comparable(I, J):
            table.straightening[(I, J)] = expand_in_std((I, J), m, n, q)
    for I in elems:
        table.commutation[(I, I)] = (one, StdExpansion())
    for I, J in itertools.product(elems, repeat=2):
        if I == J or not L.le(I, J):
            continue
        # [J][I] = a [I][J] + T
        exp = expand_in_std((J, I), m, n, q)
        a = exp[(I, J)]
        if not a:
            raise InvariantViolation(f"[{J}][{I}] has no [{I}][{J}] component")
        T = StdExpansion({k: v for k, v in exp.terms.items() if k != (I, J)})
        table.commutation[(J, I)] = (a, T)
        table.commutation[(I, J)] = (one / a, T.scale(-(one / a)))
    for I, J in itertools.product(elems, repeat=2):
        if L.comparable(I, J):
            continue
        key = (tuple_meet(I, J), tuple_join(I, J))
        sij, sji = table.straightening[(I, J)], table.straightening[(J, I)]
        p = sij[key] / sji[key]
        table.commutation[(I, J)] = (p, sij - sji.scale(p))
    if check:
        table.check_invariants()
    return table


# -- table-driven straightening ----------------------------------------------------

def straighten_word(word, table, keep=None, max_steps=100000):
    """Rewrite a product of minors to standard form using the table.

    Terms containing an element outside ``keep`` are dropped as soon as they
    appear (used for quotients by the ideal generated by those elements).
    """
    one = _one_like(table.q)
    word = tuple(tuple(x) for x in word)
    if keep is not None and any(x not in keep for x in word):
        return StdExpansion()
    todo = {word: one}
    done = {}
    steps = 0
    while todo:
        w, c = todo.popitem()
        pos = next((p for p in range(len(w) - 1) if not product_le(w[p], w[p + 1])), None)
        if pos is None:
            done[w] = done.get(w, 0) + c
            continue
        steps += 1
        if steps > max_steps:
            raise NotConfluent("table straightening did not terminate")
        for (K, Lm), d in table.pair_expansion(w[pos], w[pos + 1]).items():
            if keep is not None and (K not in keep or Lm not in keep):
                continue
            nw = w[:pos] + (K, Lm) + w[pos + 2:]
            val = todo.get(nw, 0) + c * d
            if val:
                todo[nw] = val
            else:
                todo.pop(nw, None)
    return StdExpansion(done)


# -- verification -------------------------------------------------------------------

@dataclass
class AslReport:
    m: int
    n: int
    degree_counts: dict = field(default_factory=dict)
    degree_ranks: dict = field(default_factory=dict)
    incomparable_pairs: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def pbw_rank_of_standard_monomials(m, n, degree, q=None, blocked=True):
    """Rank of the PBW coordinate vectors of all standard monomials of a degree."""
    L, _ = plucker_poset(m, n)
    alg = _algebra(m, n, q)
    monos = multichains(L.elements, product_le, degree)
    groups = {}
    for mono in monos:
        key = _row_content(mono) if blocked else None
        groups.setdefault(key, []).append(mono)
    total = 0
    for block in groups.values():
        images = [_product_pbw(alg, b).terms for b in block]
        keys = sorted(set().union(*images))
        rows = [[img.get(k, alg.zero) for k in keys] for img in images]
        total += linalg.rank(rows, len(keys))
    return len(monos), total


def verify_symmetric_asl(m, n, up_to_degree=2, q=None):
    report = AslReport(m, n)
    L, R = plucker_poset(m, n)
    try:
        R.validate(L)
        if not R.increasing_images:
            report.violations.append("realisation images are not increasing")
        L.require_distributive()
    except InvariantViolation as exc:
        report.violations.append(str(exc))
    for d in range(1, up_to_degree + 1):
        count, rk = pbw_rank_of_standard_monomials(m, n, d, q)
        report.degree_counts[d] = count
        report.degree_ranks[d] = rk
        if rk != count:
            report.violations.append(f"degree {d}: rank {rk} < {count} standard monomials")
    report.incomparable_pairs = len(L.incomparable_pairs())
    try:
        straightening_table(m, n, q)
    except (InvariantViolation, RankDeficient) as exc:
        report.violations.append(str(exc))
    return report


def complement_order(I, J, m):
    """For I <= J in Pi_{m,2m}: the complements satisfy I^c >= J^c."""
    full = set(range(1, 2 * m + 1))
    for X in (I, J):
        if len(X) != m or not set(X) <= full or not all(a < b for a, b in zip(X, X[1:])):
            raise BadShape(f"{X} is not in Pi_({m},{2 * m})")
    Ic = tuple(sorted(full - set(I)))
    Jc = tuple(sorted(full - set(J)))
    return (not product_le(I, J)) or product_le(Jc, Ic)


def disjoint_union_order(I, K, S, n):
    """For I <= K in Pi_{h,n} and S disjoint from both: I ⊔ S <= K ⊔ S."""
    S = tuple(sorted(S))
    if set(S) & (set(I) | set(K)) or len(I) != len(K):
        raise BadShape("S must be disjoint from I and K, and |I| = |K|")
    if any(not 1 <= x <= n for x in I + K + S):
        raise BadShape("entries out of range")
    return (not product_le(I, K)) or product_le(tuple(sorted(I + S)), tuple(sorted(K + S)))


def muir_consistency(h, m, n, q=None):
    """Compare expansions of (I0 ⊔ S, J0 ⊔ S) with those of (I0, J0) in Pi_{h,n}.

    Returns the list of mismatches (empty when consistent).  Products are
    taken in both orders, so this covers straightening and commutation data.
    """
    if not 1 <= h < m <= n:
        raise BadShape("need 1 <= h < m <= n")
    failures = []
    checked = 0
    small = plucker_indices(h, n)
    for I0, J0 in itertools.permutations(small, 2):
        rest = [x for x in range(1, n + 1) if x not in I0 and x not in J0]
        for S in itertools.combinations(rest, m - h):
            lift = lambda X: tuple(sorted(X + S))
            small_exp = expand_in_std((I0, J0), h, n, q)
            big_exp = expand_in_std((lift(I0), lift(J0)), m, n, q)
            predicted = StdExpansion({(lift(K), lift(Lm)): c for (K, Lm), c in small_exp.terms.items()})
            checked += 1
            if predicted != big_exp:
                failures.append((I0, J0, S))
    return checked, failures
