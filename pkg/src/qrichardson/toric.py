"""Quantum toric algebras on a distributive lattice.

A presentation fixes units q(a, b) for all pairs and c(a, b) for incomparable
pairs.  Words in the generators X_a are rewritten to standard monomials with

    X_a X_b -> q(a, b) X_b X_a             (b < a)
    X_a X_b -> c(a, b) X_{a^b} X_{avb}     (a, b incomparable)

Scalars are either exact field elements (numeric mode) or ScalarMonomials in
the formal symbols Q(a, b), C(a, b) (symbolic mode).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InconsistentParameters, InvariantViolation, NotConfluent
from .lattice import canonical_realization, join_irreducibles, omega

__all__ = [
    "ScalarMonomial", "ToricPresentation", "ToricNF", "symbolic_presentation",
    "commutative_presentation", "toric_nf", "confluence_certify", "ConfluenceReport",
    "QuantumTorusMonomial", "torus_embedding", "verify_torus_relations", "gkdim_toric",
    "regularity_map", "regularity_check",
]


class ScalarMonomial:
    """Element of the free abelian group on the symbols Q(a,b) and C(a,b)."""

    __slots__ = ("exps",)

    def __init__(self, exps=None):
        self.exps = {k: v for k, v in (exps or {}).items() if v}

    @classmethod
    def symbol(cls, kind, a, b):
        return cls({(kind, a, b): 1})

    def __mul__(self, other):
        if isinstance(other, int) and other == 1:
            return self
        out = dict(self.exps)
        for k, v in other.exps.items():
            out[k] = out.get(k, 0) + v
        return ScalarMonomial(out)

    __rmul__ = __mul__

    def inverse(self):
        return ScalarMonomial({k: -v for k, v in self.exps.items()})

    def __truediv__(self, other):
        return self * other.inverse()

    def __rtruediv__(self, other):
        if other == 1:
            return self.inverse()
        return NotImplemented

    def __pow__(self, e):
        return ScalarMonomial({k: v * e for k, v in self.exps.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 1:
            return not self.exps
        if not isinstance(other, ScalarMonomial):
            return NotImplemented
        return self.exps == other.exps

    def __hash__(self):
        return hash(frozenset(self.exps.items()))

    def __bool__(self):
        return True

    def is_one(self):
        return not self.exps

    def canonical(self, position):
        """Reduce modulo Q(a,a)=1, Q(b,a)=Q(a,b)^-1 and C(b,a)=Q(b,a)C(a,b)."""
        out = {}

        def bump(k, v):
            out[k] = out.get(k, 0) + v

        for (kind, a, b), e in self.exps.items():
            if kind == "Q":
                if a == b:
                    continue
                if position[a] < position[b]:
                    bump(("Q", a, b), e)
                else:
                    bump(("Q", b, a), -e)
            else:
                if position[a] < position[b]:
                    bump(("C", a, b), e)
                else:
                    bump(("C", b, a), e)
                    bump(("Q", b, a), -e)
        return ScalarMonomial(out)

    def __str__(self):
        if not self.exps:
            return "1"
        parts = []
        for (kind, a, b), e in sorted(self.exps.items(), key=lambda kv: repr(kv[0])):
            s = f"{kind}[{_elt_str(a)};{_elt_str(b)}]"
            parts.append(s if e == 1 else f"{s}^{e}")
        return "*".join(parts)

    __repr__ = __str__


def _elt_str(x):
    if isinstance(x, tuple):
        return ",".join(map(str, x))
    return str(x)


@dataclass
class ToricPresentation:
    lattice: object
    realization: object
    qmap: dict
    cmap: dict
    symbolic: bool = False

    def __post_init__(self):
        self.lattice.require_distributive()
        self.position = {x: i for i, x in enumerate(self.lattice.elements)}

    def one(self):
        if self.symbolic:
            return ScalarMonomial()
        for v in self.qmap.values():
            return v / v
        return Fraction(1)

    def equal_scalars(self, x, y):
        if self.symbolic:
            return x.canonical(self.position) == y.canonical(self.position)
        return x == y

    def validate(self):
        """Check q(a,a)=1, q(a,b)q(b,a)=1 and c(a,b)=q(a,b)c(b,a)."""
        L = self.lattice
        one = self.one()
        for a in L.elements:
            for b in L.elements:
                if (a, b) not in self.qmap:
                    raise InconsistentParameters(f"q is missing the pair {a!r}, {b!r}")
                if not L.comparable(a, b) and (a, b) not in self.cmap:
                    raise InconsistentParameters(f"c is missing the pair {a!r}, {b!r}")
        for (a, b), v in self.qmap.items():
            if not v:
                raise InconsistentParameters(f"q({a!r},{b!r}) is zero")
            if a == b and not self.equal_scalars(v, one):
                raise InconsistentParameters(f"q({a!r},{a!r}) != 1")
            if not self.equal_scalars(v * self.qmap[(b, a)], one):
                raise InconsistentParameters(f"q({a!r},{b!r}) q({b!r},{a!r}) != 1")
        for (a, b), v in self.cmap.items():
            if L.comparable(a, b):
                raise InconsistentParameters(f"c given on the comparable pair {a!r}, {b!r}")
            if not v:
                raise InconsistentParameters(f"c({a!r},{b!r}) is zero")
            if not self.equal_scalars(v, self.qmap[(a, b)] * self.cmap[(b, a)]):
                raise InconsistentParameters(f"c({a!r},{b!r}) != q({a!r},{b!r}) c({b!r},{a!r})")
        return True

    def map_scalars(self, fn):
        return ToricPresentation(
            self.lattice, self.realization,
            {k: fn(v) for k, v in self.qmap.items()},
            {k: fn(v) for k, v in self.cmap.items()},
            self.symbolic,
        )


def symbolic_presentation(L, realization=None):
    """The universal presentation: every q and c is its own formal symbol."""
    R = realization if realization is not None else canonical_realization(L)
    qmap = {}
    cmap = {}
    for a in L.elements:
        for b in L.elements:
            qmap[(a, b)] = ScalarMonomial() if a == b else ScalarMonomial.symbol("Q", a, b)
            if not L.comparable(a, b):
                cmap[(a, b)] = ScalarMonomial.symbol("C", a, b)
    return ToricPresentation(L, R, qmap, cmap, symbolic=True)


def commutative_presentation(L, realization=None, one=None):
    one = Fraction(1) if one is None else one
    R = realization if realization is not None else canonical_realization(L)
    qmap = {(a, b): one for a in L.elements for b in L.elements}
    cmap = {(a, b): one for a in L.elements for b in L.elements if not L.comparable(a, b)}
    return ToricPresentation(L, R, qmap, cmap)


@dataclass(frozen=True)
class ToricNF:
    scalar: object
    monomial: tuple


# -- rewriting --------------------------------------------------------------------

def _descents(P, word):
    L = P.lattice
    return [p for p in range(len(word) - 1) if not L.le(word[p], word[p + 1])]


def _apply(P, word, pos, check=True):
    """Apply the rule at ``pos``; return ``(factor, new_word)``."""
    L = P.lattice
    a, b = word[pos], word[pos + 1]
    if L.comparable(a, b):
        factor, new = P.qmap[(a, b)], (b, a)
    else:
        factor, new = P.cmap[(a, b)], (L.meet(a, b), L.join(a, b))
    out = word[:pos] + new + word[pos + 2:]
    if check:
        _check_measure(P, word, out, comparable=L.comparable(a, b))
    return factor, out


def _check_measure(P, before, after, comparable):
    R = P.realization
    w0 = [omega(R, x) for x in before]
    w1 = [omega(R, x) for x in after]
    if sum(w0) != sum(w1):
        raise InvariantViolation("rewriting changed the total omega")
    if comparable:
        inv = lambda w: sum(1 for i, j in itertools.combinations(range(len(w)), 2) if w[i] > w[j])
        if inv(w1) != inv(w0) - 1:
            raise InvariantViolation("a swap did not remove exactly one inversion")
    elif sum(x * x for x in w1) <= sum(x * x for x in w0):
        raise InvariantViolation("a meet-join split did not increase the sum of squared omegas")


def _choose(P, word):
    ds = _descents(P, word)
    if not ds:
        return None
    p = ds[0]
    # prefer a comparable swap at an overlapping position
    L = P.lattice
    if not L.comparable(word[p], word[p + 1]) and p + 1 in ds and L.comparable(word[p + 1], word[p + 2]):
        return p + 1
    return p


def toric_nf(P, word, check=True):
    """Normal form ``xi * m`` of the product of generators along ``word``."""
    word = tuple(word)
    for x in word:
        if x not in P.position:
            raise InvariantViolation(f"{x!r} is not an element of the lattice")
    scalar = P.one()
    steps = 0
    limit = 10 * len(word) ** 2 * max(1, len(P.lattice)) ** 2 + 10
    while True:
        pos = _choose(P, word)
        if pos is None:
            return ToricNF(scalar, word)
        factor, word = _apply(P, word, pos, check)
        scalar = scalar * factor
        steps += 1
        if steps > limit:
            raise NotConfluent("rewriting did not terminate")


def _all_normal_forms(P, word, memo):
    """Every normal form reachable from ``word`` along any rewrite path."""
    if word in memo:
        return memo[word]
    ds = _descents(P, word)
    if not ds:
        res = [(P.one(), word)]
    else:
        res = []
        for p in ds:
            factor, new = _apply(P, word, p)
            for s, mono in _all_normal_forms(P, new, memo):
                res.append((factor * s, mono))
    memo[word] = res
    return res


@dataclass
class ConfluenceReport:
    words_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def confluence_certify(P, length=3, validate=True):
    """Explore all rewrite paths of all words of ``length``; every path must agree."""
    if validate:
        P.validate()
    report = ConfluenceReport()
    memo = {}
    for word in itertools.product(P.lattice.elements, repeat=length):
        report.words_checked += 1
        forms = _all_normal_forms(P, word, memo)
        s0, m0 = forms[0]
        for s, mono in forms[1:]:
            if mono != m0 or not P.equal_scalars(s, s0):
                report.failures.append((word, (s0, m0), (s, mono)))
                break
    return report


# -- quantum torus -------------------------------------------------------------------

@dataclass(frozen=True)
class QuantumTorusMonomial:
    """``scalar * X_{g_1}^{e_1} ... X_{g_k}^{e_k}`` over a fixed generator order."""

    scalar: object
    exps: tuple


class _Torus:
    def __init__(self, P, gens):
        self.P = P
        self.gens = list(gens)

    def unit(self):
        return QuantumTorusMonomial(self.P.one(), (0,) * len(self.gens))

    def gen(self, g):
        e = [0] * len(self.gens)
        e[self.gens.index(g)] = 1
        return QuantumTorusMonomial(self.P.one(), tuple(e))

    def _twist(self, a, b):
        # X^a X^b = prod_{i>j} q(g_i, g_j)^{a_i b_j} X^{a+b}
        s = self.P.one()
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(i):
                if b[j]:
                    s = s * self.P.qmap[(self.gens[i], self.gens[j])] ** (ai * b[j])
        return s

    def mul(self, x, y):
        s = x.scalar * y.scalar * self._twist(x.exps, y.exps)
        return QuantumTorusMonomial(s, tuple(a + b for a, b in zip(x.exps, y.exps)))

    def inverse(self, x):
        neg = tuple(-a for a in x.exps)
        mu = self._twist(x.exps, neg)
        return QuantumTorusMonomial(self.P.one() / (x.scalar * mu), neg)

    def scale(self, c, x):
        return QuantumTorusMonomial(c * x.scalar, x.exps)

    def equal(self, x, y):
        return x.exps == y.exps and self.P.equal_scalars(x.scalar, y.scalar)


def torus_embedding(P, certify=True):
    """Images of every generator in the quantum torus on irr_plus.

    Returns ``(torus, images)`` where ``images[x]`` is a QuantumTorusMonomial.
    """
    if certify:
        rep = confluence_certify(P, validate=not P.symbolic)
        if not rep.ok:
            raise NotConfluent(f"presentation is not confluent at {rep.failures[0][0]!r}")
    L = P.lattice
    _, irr_plus = join_irreducibles(L)
    torus = _Torus(P, irr_plus)
    images = {g: torus.gen(g) for g in irr_plus}
    order = sorted(L.elements, key=lambda x: (L.rank_of(x), P.position[x]))
    for g in order:
        if g in images:
            continue
        pair = next(
            (a, b) for a in L.elements for b in L.elements
            if not L.comparable(a, b) and L.join(a, b) == g
        )
        a, b = pair
        low = L.meet(a, b)
        img = torus.mul(torus.inverse(images[low]), torus.mul(images[a], images[b]))
        images[g] = torus.scale(P.one() / P.cmap[(a, b)], img)
    return torus, images


def verify_torus_relations(P, torus=None, images=None):
    """Substitute the images into every defining relation; return failures."""
    if torus is None:
        torus, images = torus_embedding(P)
    L = P.lattice
    failures = []
    checked = 0
    for a in L.elements:
        for b in L.elements:
            lhs = torus.mul(images[a], images[b])
            rhs = torus.scale(P.qmap[(a, b)], torus.mul(images[b], images[a]))
            checked += 1
            if not torus.equal(lhs, rhs):
                failures.append(("q", a, b))
            if not L.comparable(a, b):
                rhs = torus.scale(P.cmap[(a, b)], torus.mul(images[L.meet(a, b)], images[L.join(a, b)]))
                checked += 1
                if not torus.equal(lhs, rhs):
                    failures.append(("c", a, b))
    return checked, failures


def gkdim_toric(P_or_lattice):
    L = getattr(P_or_lattice, "lattice", P_or_lattice)
    L.require_distributive()
    irr, _ = join_irreducibles(L)
    rk = L.rank()
    if rk != len(irr):
        raise InvariantViolation(f"rank {rk} differs from |irr| = {len(irr)}")
    return rk + 1


# -- regularity surrogate ------------------------------------------------------------

def _standard_monomials(L, max_len):
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for mono in frontier:
            for x in L.elements:
                if not mono or L.le(mono[-1], x):
                    nxt.append(mono + (x,))
        out.extend(nxt)
        frontier = nxt
    return out


def regularity_map(P, gamma, max_len=4):
    """The map m -> standard part of X_gamma * m on standard monomials of length <= max_len."""
    return {m: toric_nf(P, (gamma,) + m).monomial for m in _standard_monomials(P.lattice, max_len)}


def regularity_check(P, max_len=4):
    """Return ``{gamma: injective?}`` for every element of the lattice."""
    out = {}
    for g in P.lattice.elements:
        images = regularity_map(P, g, max_len)
        out[g] = len(set(images.values())) == len(images)
    return out
