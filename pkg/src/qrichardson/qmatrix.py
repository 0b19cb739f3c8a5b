"""Quantum matrices O_q(M_{u,v}) in PBW normal form.

Generators X_ij are numbered row-major, ``g = (i-1)*v + (j-1)``, and a PBW
monomial is a weakly increasing tuple of generator numbers.  For i < k and
j < l the defining relations used are

    X_ij X_il = q X_il X_ij,        X_ij X_kj = q X_kj X_ij,
    X_il X_kj = X_kj X_il,          X_ij X_kl - X_kl X_ij = (q - q^-1) X_il X_kj.

Coefficients are QScalar when ``q`` is symbolic, Fraction after specialising.
``mirror=True`` swaps q and q^-1 in every relation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .errors import BadShape, IndexOutOfBounds, NotSquare
from .scalars import QScalar, q as Q_SYMBOL

__all__ = [
    "QuantumMatrixAlgebra", "PbwElement", "RowDegree", "qmatrix_algebra",
    "normal_form", "quantum_minor", "transpose", "row_degree", "confluence_check",
]


def _inversions(perm):
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


class QuantumMatrixAlgebra:
    def __init__(self, u, v, q=None, mirror=False):
        if u < 1 or v < 1:
            raise BadShape(f"bad matrix shape {u}x{v}")
        self.u, self.v = u, v
        self.mirror = mirror
        self.q = None if q is None else Fraction(q)
        if self.q == 0:
            raise BadShape("q must be nonzero")
        if self.q is None:
            qq = Q_SYMBOL
            self.one, self.zero = QScalar(1), QScalar(0)
        else:
            qq = self.q
            self.one, self.zero = Fraction(1), Fraction(0)
        if mirror:
            qq = 1 / qq
        self.qpar = qq
        self.qinv = 1 / qq
        self.qdiff = qq - self.qinv
        self._mul_gen = lru_cache(maxsize=None)(self._mul_gen_impl)

    @property
    def ngens(self):
        return self.u * self.v

    def gen_index(self, i, j):
        if not (1 <= i <= self.u and 1 <= j <= self.v):
            raise IndexOutOfBounds(f"X_{i},{j} outside a {self.u}x{self.v} matrix")
        return (i - 1) * self.v + (j - 1)

    def gen_pos(self, g):
        return divmod(g, self.v)[0] + 1, g % self.v + 1

    def gen_name(self, g):
        i, j = self.gen_pos(g)
        return f"X{i}{j}" if self.u < 10 and self.v < 10 else f"X{i},{j}"

    def swap_rule(self, b, a):
        """Rewrite X_b X_a for b > a as a list of (coeff, (x, y)) with x <= y."""
        i, j = self.gen_pos(a)
        k, l = self.gen_pos(b)
        if i == k or j == l:
            return [(self.qinv, (a, b))]
        if l < j:
            return [(self.one, (a, b))]
        return [(self.one, (a, b)), (-self.qdiff, (self.gen_index(i, l), self.gen_index(k, j)))]

    # -- multiplication ------------------------------------------------------
    def _mul_gen_impl(self, mono, g):
        if not mono or mono[-1] <= g:
            return {mono + (g,): self.one}
        prefix, b = mono[:-1], mono[-1]
        out = {}
        for c, (x, y) in self.swap_rule(b, g):
            for m1, c1 in self._mul_gen(prefix, x).items():
                for m2, c2 in self._mul_gen(m1, y).items():
                    val = out.get(m2, self.zero) + c * c1 * c2
                    if val:
                        out[m2] = val
                    else:
                        out.pop(m2, None)
        return out

    def mul_terms(self, left, right):
        out = {}
        for m1, c1 in left.items():
            for m2, c2 in right.items():
                partial = {m1: c1 * c2}
                for g in m2:
                    nxt = {}
                    for m, c in partial.items():
                        for mm, cc in self._mul_gen(m, g).items():
                            val = nxt.get(mm, self.zero) + c * cc
                            if val:
                                nxt[mm] = val
                            else:
                                nxt.pop(mm, None)
                    partial = nxt
                for m, c in partial.items():
                    val = out.get(m, self.zero) + c
                    if val:
                        out[m] = val
                    else:
                        out.pop(m, None)
        return out

    # -- constructors ----------------------------------------------------------
    def element(self, terms):
        return PbwElement(self, {k: v for k, v in terms.items() if v})

    def scalar(self, c):
        return self.element({(): self._coeff(c)})

    def gen(self, i, j):
        return self.element({(self.gen_index(i, j),): self.one})

    def _coeff(self, c):
        if self.q is None:
            return c if isinstance(c, QScalar) else QScalar(c)
        return Fraction(c)

    def word_to_indices(self, word):
        out = []
        for w in word:
            if isinstance(w, int):
                if not 0 <= w < self.ngens:
                    raise IndexOutOfBounds(f"generator {w} out of range")
                out.append(w)
            else:
                out.append(self.gen_index(*w))
        return tuple(out)

    def normal_form(self, word, strategy="insert", rng=None):
        word = self.word_to_indices(word)
        if strategy == "insert":
            terms = {(): self.one}
            for g in word:
                terms = self.mul_terms(terms, {(g,): self.one})
            return self.element(terms)
        return self.element(self.rewrite({word: self.one}, strategy, rng))

    # -- plain term rewriting, used to cross-check the memoised product ---------
    def rewrite_step(self, terms, word, pos):
        coef = terms.pop(word)
        b, a = word[pos], word[pos + 1]
        for c, (x, y) in self.swap_rule(b, a):
            new = word[:pos] + (x, y) + word[pos + 2:]
            val = terms.get(new, self.zero) + coef * c
            if val:
                terms[new] = val
            else:
                terms.pop(new, None)
        return terms

    def rewrite(self, terms, strategy="leftmost", rng=None):
        terms = dict(terms)
        if strategy == "random" and rng is None:
            rng = random.Random(0)
        while True:
            todo = [w for w in terms if any(w[p] > w[p + 1] for p in range(len(w) - 1))]
            if not todo:
                return terms
            if strategy == "random":
                word = rng.choice(sorted(todo))
                pos = rng.choice([p for p in range(len(word) - 1) if word[p] > word[p + 1]])
            else:
                word = min(todo)
                descents = [p for p in range(len(word) - 1) if word[p] > word[p + 1]]
                pos = descents[0] if strategy == "leftmost" else descents[-1]
            self.rewrite_step(terms, word, pos)

    def specialized(self, t):
        return qmatrix_algebra(self.u, self.v, t, self.mirror)

    def __repr__(self):
        qs = "q" if self.q is None else str(self.q)
        return f"O_{qs}(M_{self.u},{self.v})"


@lru_cache(maxsize=None)
def qmatrix_algebra(u, v, q=None, mirror=False):
    return QuantumMatrixAlgebra(u, v, q, mirror)


class PbwElement:
    """Immutable normal-form element: sorted generator tuples -> coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    @property
    def sizes(self):
        return self.algebra.u, self.algebra.v

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _combine(self, other, sign):
        out = dict(self.terms)
        z = self.algebra.zero
        for m, c in other.terms.items():
            val = out.get(m, z) + (c if sign > 0 else -c)
            if val:
                out[m] = val
            else:
                out.pop(m, None)
        return PbwElement(self.algebra, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return PbwElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def scale(self, c):
        c = self.algebra._coeff(c)
        if not c:
            return PbwElement(self.algebra, {})
        return PbwElement(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PbwElement):
            return PbwElement(self.algebra, self.algebra.mul_terms(self.terms, other.terms))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, PbwElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def specialize(self, t):
        from .scalars import specialize as _sp
        alg = self.algebra.specialized(t)
        return alg.element({m: _sp(c, t) for m, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            name = "*".join(self.algebra.gen_name(g) for g in m) or "1"
            parts.append(f"({self.terms[m]})*{name}")
        return " + ".join(parts)


@dataclass(frozen=True)
class RowDegree:
    """N^u multidegree; ``zero=True`` flags the zero element (homogeneous of every degree)."""

    vector: tuple | None
    zero: bool = False

    def __add__(self, other):
        if self.zero or other.zero:
            return RowDegree(None, True)
        return RowDegree(tuple(a + b for a, b in zip(self.vector, other.vector)))


def normal_form(word, sizes, q=None, strategy="insert", rng=None):
    u, v = sizes
    return qmatrix_algebra(u, v, q).normal_form(word, strategy, rng)


def quantum_minor(I, J, sizes, q=None, algebra=None):
    """[I|J] = sum over permutations s of (-q)^len(s) X_{i_s(1) j_1} ... X_{i_s(t) j_t}."""
    alg = algebra if algebra is not None else qmatrix_algebra(sizes[0], sizes[1], q)
    I, J = tuple(I), tuple(J)
    if len(I) != len(J) or not I or len(I) > min(alg.u, alg.v):
        raise BadShape(f"minor needs |I| = |J| <= min(u, v); got {I}, {J}")
    if any(a >= b for a, b in zip(I, I[1:])) or any(a >= b for a, b in zip(J, J[1:])):
        raise BadShape("row and column sets must be strictly increasing")
    return _minor_cached(alg, I, J)


@lru_cache(maxsize=None)
def _minor_cached(alg, I, J):
    total = {}
    mq = -alg.qpar
    for perm in itertools.permutations(range(len(I))):
        word = [(I[perm[k]], J[k]) for k in range(len(J))]
        coef = mq ** _inversions(perm)
        for m, c in alg.normal_form(word).terms.items():
            val = total.get(m, alg.zero) + coef * c
            if val:
                total[m] = val
            else:
                total.pop(m, None)
    return alg.element(total)


def transpose(x):
    """The automorphism X_ij -> X_ji of square quantum matrices."""
    alg = x.algebra
    if alg.u != alg.v:
        raise NotSquare(f"transpose needs a square algebra, got {alg.u}x{alg.v}")
    out = alg.element({})
    for m, c in x.terms.items():
        word = [alg.gen_pos(g)[::-1] for g in m]
        out = out + alg.normal_form(word).scale(c)
    return out


def row_degree(x):
    """Common N^u row multidegree of a homogeneous element, else None."""
    if not x.terms:
        return RowDegree(None, zero=True)
    alg = x.algebra
    degs = set()
    for m in x.terms:
        vec = [0] * alg.u
        for g in m:
            vec[alg.gen_pos(g)[0] - 1] += 1
        degs.add(tuple(vec))
    if len(degs) != 1:
        return None
    return RowDegree(degs.pop())


@dataclass
class ConfluenceReport:
    sizes: tuple
    words_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def confluence_check(sizes, max_word_len=3, q=None):
    """Every word up to ``max_word_len``: each first rewrite, then leftmost or
    rightmost completion, must land on the memoised normal form."""
    alg = qmatrix_algebra(sizes[0], sizes[1], q)
    report = ConfluenceReport(tuple(sizes))
    for length in range(max_word_len + 1):
        for word in itertools.product(range(alg.ngens), repeat=length):
            report.words_checked += 1
            reference = alg.normal_form(word).terms
            descents = [p for p in range(length - 1) if word[p] > word[p + 1]]
            for pos in descents:
                first = alg.rewrite_step({word: alg.one}, word, pos)
                for strategy in ("leftmost", "rightmost"):
                    if alg.rewrite(first, strategy) != reference:
                        report.failures.append((word, pos, strategy))
    return report
