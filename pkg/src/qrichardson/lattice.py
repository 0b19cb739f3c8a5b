"""Finite posets, distributive lattices and chain-product realisations.

Elements are arbitrary hashable ids (ints, strings, integer tuples).  All
lattices handled here are tiny, so relations are stored as dense boolean
tables and meet/join as index tables.
"""

from __future__ import annotations

import heapq
import itertools
from collections import Counter
from dataclasses import dataclass, field

from .errors import BadShape, NotALattice, NotComparable, NotDistributive, InvariantViolation


class FinitePoset:
    """A finite partially ordered set given by its full relation table."""

    def __init__(self, elements, leq):
        self.elements = tuple(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise BadShape("duplicate poset elements")
        self._leq = [list(map(bool, row)) for row in leq]
        self._rank = None

    @classmethod
    def from_relation(cls, elements, le):
        elements = tuple(elements)
        return cls(elements, [[le(x, y) for y in elements] for x in elements])

    @classmethod
    def from_covers(cls, elements, covers):
        """Build from cover pairs ``(a, b)`` meaning ``a < b``; closes transitively."""
        elements = tuple(elements)
        idx = {x: i for i, x in enumerate(elements)}
        n = len(elements)
        leq = [[i == j for j in range(n)] for i in range(n)]
        for a, b in covers:
            if a not in idx or b not in idx:
                raise BadShape(f"cover ({a!r}, {b!r}) uses an unknown element")
            leq[idx[a]][idx[b]] = True
        for k in range(n):
            for i in range(n):
                if leq[i][k]:
                    row_k = leq[k]
                    row_i = leq[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
        return cls(elements, leq)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def le(self, x, y):
        return self._leq[self.index[x]][self.index[y]]

    def lt(self, x, y):
        return x != y and self.le(x, y)

    def comparable(self, x, y):
        return self.le(x, y) or self.le(y, x)

    def validate(self):
        """Exhaustive check of reflexivity, antisymmetry and transitivity."""
        n = len(self.elements)
        L = self._leq
        for i in range(n):
            if not L[i][i]:
                raise InvariantViolation(f"not reflexive at {self.elements[i]!r}")
            for j in range(n):
                if i != j and L[i][j] and L[j][i]:
                    raise InvariantViolation(f"not antisymmetric at {self.elements[i]!r}, {self.elements[j]!r}")
                if L[i][j]:
                    for k in range(n):
                        if L[j][k] and not L[i][k]:
                            raise InvariantViolation("not transitive")
        return True

    def covers(self):
        out = []
        for x in self.elements:
            for y in self.elements:
                if self.lt(x, y) and not any(self.lt(x, z) and self.lt(z, y) for z in self.elements):
                    out.append((x, y))
        return out

    def minimal_elements(self):
        return [x for x in self.elements if not any(self.lt(y, x) for y in self.elements)]

    def linear_extension(self):
        """Topological order; ties broken by position in ``elements``."""
        n = len(self.elements)
        indeg = [sum(1 for j in range(n) if j != i and self._leq[j][i]) for i in range(n)]
        heap = [i for i in range(n) if indeg[i] == 0]
        heapq.heapify(heap)
        order = []
        while heap:
            i = heapq.heappop(heap)
            order.append(self.elements[i])
            for j in range(n):
                if j != i and self._leq[i][j]:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        heapq.heappush(heap, j)
        return order

    def rank_of(self, x):
        """Length of the longest strictly increasing chain ending at ``x``."""
        if self._rank is None:
            rk = {}
            for y in self.linear_extension():
                below = [rk[z] for z in rk if self.lt(z, y)]
                rk[y] = 1 + max(below) if below else 0
            self._rank = rk
        return self._rank[x]

    def rank(self):
        return max((self.rank_of(x) for x in self.elements), default=0)

    def down_sets(self):
        """All order ideals, as frozensets (exponential, fine at desk scale)."""
        order = self.linear_extension()
        result = [frozenset()]
        for x in order:
            # x can join any ideal that already contains everything below x
            below = {y for y in self.elements if self.lt(y, x)}
            result += [s | {x} for s in result if below <= s]
        return result

    def subposet(self, subset):
        subset = [x for x in self.elements if x in set(subset)]
        return FinitePoset.from_relation(subset, self.le)


class FiniteLattice(FinitePoset):
    """A finite lattice with meet and join tables computed on construction."""

    def __init__(self, elements, leq, meet=None, join=None):
        super().__init__(elements, leq)
        n = len(self.elements)
        if n == 0:
            raise NotALattice("empty lattice")
        els = self.elements
        idx = self.index
        if meet is None:
            self._meet = [[self._bound(i, j, lower=True) for j in range(n)] for i in range(n)]
        else:
            self._meet = [[idx[meet(x, y)] for y in els] for x in els]
        if join is None:
            self._join = [[self._bound(i, j, lower=False) for j in range(n)] for i in range(n)]
        else:
            self._join = [[idx[join(x, y)] for y in els] for x in els]

    def _bound(self, i, j, lower):
        L = self._leq
        n = len(self.elements)
        if lower:
            cands = [k for k in range(n) if L[k][i] and L[k][j]]
            best = [k for k in cands if all(L[c][k] for c in cands)]
        else:
            cands = [k for k in range(n) if L[i][k] and L[j][k]]
            best = [k for k in cands if all(L[k][c] for c in cands)]
        if len(best) != 1:
            kind = "meet" if lower else "join"
            raise NotALattice(f"no {kind} for {self.elements[i]!r}, {self.elements[j]!r}")
        return best[0]

    @classmethod
    def from_poset(cls, poset):
        return cls(poset.elements, poset._leq)

    @classmethod
    def from_covers(cls, elements, covers):
        return cls.from_poset(FinitePoset.from_covers(elements, covers))

    @classmethod
    def from_relation(cls, elements, le):
        return cls.from_poset(FinitePoset.from_relation(elements, le))

    def meet(self, x, y):
        return self.elements[self._meet[self.index[x]][self.index[y]]]

    def join(self, x, y):
        return self.elements[self._join[self.index[x]][self.index[y]]]

    @property
    def bottom(self):
        return self.minimal_elements()[0]

    @property
    def top(self):
        return next(x for x in self.elements if all(self.le(y, x) for y in self.elements))

    def check_bounds(self):
        """Exhaustively certify that the tables are greatest lower / least upper bounds."""
        for x in self.elements:
            for y in self.elements:
                m, j = self.meet(x, y), self.join(x, y)
                if not (self.le(m, x) and self.le(m, y) and self.le(x, j) and self.le(y, j)):
                    raise InvariantViolation(f"bad bounds for {x!r}, {y!r}")
                for z in self.elements:
                    if self.le(z, x) and self.le(z, y) and not self.le(z, m):
                        raise InvariantViolation(f"meet of {x!r}, {y!r} is not greatest")
                    if self.le(x, z) and self.le(y, z) and not self.le(j, z):
                        raise InvariantViolation(f"join of {x!r}, {y!r} is not least")
        return True

    def distributivity_failure(self):
        n = len(self.elements)
        M, J = self._meet, self._join
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if M[a][J[b][c]] != J[M[a][b]][M[a][c]]:
                        return tuple(self.elements[k] for k in (a, b, c))
        return None

    def is_distributive(self):
        return self.distributivity_failure() is None

    def require_distributive(self):
        bad = self.distributivity_failure()
        if bad is not None:
            raise NotDistributive(f"x ∧ (y ∨ z) != (x ∧ y) ∨ (x ∧ z) at {bad!r}")

    def incomparable_pairs(self):
        return [(x, y) for x in self.elements for y in self.elements if not self.comparable(x, y)]

    def sublattice(self, subset):
        keep = set(subset)
        for x in keep:
            for y in keep:
                if self.meet(x, y) not in keep or self.join(x, y) not in keep:
                    raise InvariantViolation("subset is not closed under meet and join")
        els = [x for x in self.elements if x in keep]
        return FiniteLattice(els, [[self.le(x, y) for y in els] for x in els], self.meet, self.join)

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return set(self.elements) == set(other.elements) and all(
            self.le(x, y) == other.le(x, y) for x in self.elements for y in self.elements
        )

    __hash__ = None


# -- standard examples ---------------------------------------------------------

def chain(p):
    """The chain 1 < 2 < ... < p."""
    return FiniteLattice.from_relation(range(1, p + 1), lambda x, y: x <= y)


def product_le(x, y):
    return all(a <= b for a, b in zip(x, y))


def tuple_meet(x, y):
    return tuple(map(min, x, y))


def tuple_join(x, y):
    return tuple(map(max, x, y))


def chain_product(sizes, members=None):
    """A sub-lattice of C_{n_1} x ... x C_{n_d} (the whole product by default)."""
    sizes = tuple(sizes)
    if members is None:
        members = itertools.product(*(range(1, n + 1) for n in sizes))
    members = sorted(set(map(tuple, members)))
    for x in members:
        if len(x) != len(sizes) or any(not 1 <= v <= n for v, n in zip(x, sizes)):
            raise BadShape(f"{x!r} is not in the chain product {sizes}")
    keep = set(members)
    for x in members:
        for y in members:
            if tuple_meet(x, y) not in keep or tuple_join(x, y) not in keep:
                raise NotALattice("members are not closed under componentwise min/max")
    leq = [[product_le(x, y) for y in members] for x in members]
    return FiniteLattice(members, leq, tuple_meet, tuple_join)


def diamond():
    return FiniteLattice.from_covers("abcd", [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")])


def m3():
    """The five element modular, non-distributive lattice."""
    return FiniteLattice.from_covers(
        ["0", "x", "y", "z", "1"],
        [("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")],
    )


# -- realisations --------------------------------------------------------------

@dataclass
class ChainProductRealization:
    sizes: tuple
    iota: dict
    d: int = field(init=False)
    N: int = field(init=False)
    increasing_images: bool = field(init=False)

    def __post_init__(self):
        self.sizes = tuple(self.sizes)
        self.d = len(self.sizes)
        self.N = 2 * max(self.sizes) + 1
        self.increasing_images = all(
            all(a <= b for a, b in zip(v, v[1:])) for v in self.iota.values()
        )

    def __call__(self, x):
        return self.iota[x]

    def validate(self, lattice):
        """Certify injectivity, bounds and the lattice-morphism property."""
        if self.d < 1 or any(n < 2 for n in self.sizes):
            raise InvariantViolation("chain sizes must be >= 2")
        images = [self.iota[x] for x in lattice.elements]
        if len(set(images)) != len(images):
            raise InvariantViolation("realisation is not injective")
        for v in images:
            if len(v) != self.d or any(not 1 <= a <= n for a, n in zip(v, self.sizes)):
                raise InvariantViolation(f"image {v!r} outside the chain product")
        for x in lattice.elements:
            for y in lattice.elements:
                if self.iota[lattice.meet(x, y)] != tuple_meet(self.iota[x], self.iota[y]):
                    raise InvariantViolation(f"iota does not preserve the meet of {x!r}, {y!r}")
                if self.iota[lattice.join(x, y)] != tuple_join(self.iota[x], self.iota[y]):
                    raise InvariantViolation(f"iota does not preserve the join of {x!r}, {y!r}")
        return True


def identity_realization(lattice, sizes):
    """Realisation of a chain-product sub-lattice by its own coordinates."""
    return ChainProductRealization(tuple(sizes), {x: tuple(x) for x in lattice.elements})


def join_irreducibles(L):
    """Return ``(irr, irr_plus)`` as lists in the order of ``L.elements``."""
    bottom = L.bottom
    irr = []
    for z in L.elements:
        if z == bottom:
            continue
        # z is join-irreducible iff it covers exactly one element
        lower = [x for x in L.elements if L.lt(x, z)]
        maximal_lower = [x for x in lower if not any(L.lt(x, y) for y in lower)]
        if len(maximal_lower) == 1:
            irr.append(z)
    irr_plus = [x for x in L.elements if x == bottom or x in irr]
    return irr, irr_plus


def join_irreducibles_bruteforce(L):
    """Definition-level scan: z non-minimal with z = x v y implying z in {x, y}."""
    bottom = L.bottom
    return [
        z for z in L.elements
        if z != bottom and all(z in (x, y) for x in L.elements for y in L.elements if L.join(x, y) == z)
    ]


@dataclass
class BirkhoffCertificate:
    irreducibles: list
    mapping: dict
    rank: int

    def __len__(self):
        return len(self.mapping)


def birkhoff_check(L):
    """Certify ``x -> {p in irr : p <= x}`` is an isomorphism onto the down-sets of irr."""
    L.require_distributive()
    irr, _ = join_irreducibles(L)
    mapping = {x: frozenset(p for p in irr if L.le(p, x)) for x in L.elements}
    irr_poset = L.subposet(irr)
    ideals = set(irr_poset.down_sets())
    images = set(mapping.values())
    if len(images) != len(L) or images != ideals:
        raise InvariantViolation("Birkhoff map is not a bijection onto down-sets")
    for x in L.elements:
        for y in L.elements:
            if mapping[L.meet(x, y)] != mapping[x] & mapping[y]:
                raise InvariantViolation("Birkhoff map does not preserve meets")
            if mapping[L.join(x, y)] != mapping[x] | mapping[y]:
                raise InvariantViolation("Birkhoff map does not preserve joins")
            if L.le(x, y) != (mapping[x] <= mapping[y]):
                raise InvariantViolation("Birkhoff map is not an order embedding")
    rk = L.rank()
    if rk != len(irr):
        raise InvariantViolation(f"rank {rk} differs from |irr| = {len(irr)}")
    return BirkhoffCertificate(irr, mapping, rk)


def canonical_realization(L):
    """Embed ``L`` in C_2^|irr| through Birkhoff indicator vectors."""
    L.require_distributive()
    irr, _ = join_irreducibles(L)
    if not irr:
        # one-element lattice: the constant embedding in C_2
        return ChainProductRealization((2,), {x: (1,) for x in L.elements})
    pos = {x: i for i, x in enumerate(L.linear_extension())}
    irr = sorted(irr, key=pos.__getitem__)
    iota = {x: tuple(2 if L.le(p, x) else 1 for p in irr) for x in L.elements}
    return ChainProductRealization((2,) * len(irr), iota)


def omega(R, x):
    """N-adic encoding of the realised coordinates of ``x``."""
    v = R.iota[x]
    out = 0
    for a in v:
        out = out * R.N + a
    return out


def omega_tuple(v, N):
    out = 0
    for a in v:
        out = out * N + a
    return out


def max_omega(R, elements):
    return max(omega(R, x) for x in elements)


def weight(R, M, x):
    return M + 1 - omega(R, x)


def monomial_weight(R, M, monomial):
    return sum(weight(R, M, x) for x in monomial)


def content(t):
    return Counter(t)


def content_union(a, b):
    if not isinstance(a, Counter):
        a = Counter(a)
    if not isinstance(b, Counter):
        b = Counter(b)
    return a + b


def interval_and_complement(L, alpha, beta):
    """Return ``(interval, complement)`` with complement = Pi_alpha ∪ Pi^beta."""
    if not L.le(alpha, beta):
        raise NotComparable(f"{alpha!r} is not <= {beta!r}")
    interval = [g for g in L.elements if L.le(alpha, g) and L.le(g, beta)]
    lower_part = [g for g in L.elements if not L.le(alpha, g)]
    upper_part = [g for g in L.elements if not L.le(g, beta)]
    low, up = set(lower_part), set(upper_part)
    for w in lower_part:
        for p in L.elements:
            if L.le(p, w) and p not in low:
                raise InvariantViolation("Pi_alpha is not a Pi-ideal")
    for w in upper_part:
        for p in L.elements:
            if L.le(w, p) and p not in up:
                raise InvariantViolation("Pi^beta is not a Pi^opp-ideal")
    complement = [g for g in L.elements if g in low or g in up]
    if set(interval) | set(complement) != set(L.elements) or set(interval) & set(complement):
        raise InvariantViolation("interval and complement do not partition the lattice")
    L.sublattice(interval)
    return interval, complement


# -- the omega lemmas ----------------------------------------------------------

def is_increasing(v):
    return all(a <= b for a, b in zip(v, v[1:]))


def prefix_lemma_holds(K, I, J, L):
    """For every s: j_t = l_t for t < s implies i_t = k_t for t <= s."""
    d = len(I)
    for s in range(1, d + 1):
        if all(J[t] == L[t] for t in range(s - 1)):
            if not all(I[t] == K[t] for t in range(s)):
                return False
    return True


def omega_lemma_holds(K, I, J, L, N):
    lhs = omega_tuple(I, N) + omega_tuple(J, N)
    rhs = omega_tuple(K, N) + omega_tuple(L, N)
    if lhs > rhs:
        return False
    extremal = K == tuple_meet(I, J) and L == tuple_join(I, J)
    return (lhs == rhs) == extremal


def splits(I, J):
    """All pairs (K, L) of increasing tuples with K ⊔ L = I ⊔ J and K <= L."""
    d = len(I)
    pool = sorted(I + J)
    seen = set()
    for pick in itertools.combinations(range(2 * d), d):
        K = tuple(pool[i] for i in pick)
        rest = list(pool)
        for i in reversed(pick):
            del rest[i]
        L = tuple(rest)
        if (K, L) not in seen and product_le(K, L):
            seen.add((K, L))
            yield K, L


def prefix_lemma_quadruples(I, J):
    """Quadruples satisfying the hypotheses of the prefix lemma for the pair (I, J)."""
    if not (is_increasing(I) and is_increasing(J) and product_le(I, J)):
        return []
    return [(K, I, J, L) for K, L in splits(I, J) if product_le(K, I) and product_le(J, L)]


def omega_lemma_quadruples(I, J):
    """Quadruples with K < I, J < L and K ⊔ L = I ⊔ J."""
    if not (is_increasing(I) and is_increasing(J)):
        return []
    out = []
    for K, L in splits(I, J):
        if K != I and K != J and L != I and L != J and all(
            product_le(K, X) and product_le(X, L) for X in (I, J)
        ):
            out.append((K, I, J, L))
    return out
