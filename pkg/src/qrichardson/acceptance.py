"""The eight acceptance criteria as callable checks.

Each ``criterion_k()`` returns a CriterionResult; ``run_all`` runs them in
order.  Used by the test suite and by ``qrichardson selftest``.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from . import grassmann, lattice, qmatrix, richardson, toric
from .degeneration import extract_graded, filtered_dimensions, weight_census


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    limit: float | None = None

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number}: {self.title} ({self.detail}; {self.seconds:.2f}s)"


def _timed(number, title, limit=None):
    def wrap(fn):
        def run(*args, **kwargs):
            t0 = time.perf_counter()
            try:
                ok, detail = fn(*args, **kwargs)
            except Exception as exc:  # report, never hide
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            dt = time.perf_counter() - t0
            if limit is not None and dt > limit:
                ok, detail = False, f"{detail}; exceeded {limit}s"
            return CriterionResult(number, title, ok, detail, dt, limit)
        run.__name__ = fn.__name__
        return run
    return wrap


# -- 1 ---------------------------------------------------------------------------------

def _shuffle_commuting(alg, word, rng, steps=6):
    """Swap adjacent pairs X_il X_kj (i < k, l > j) that commute by the relations."""
    word = list(word)
    for _ in range(steps):
        spots = []
        for p in range(len(word) - 1):
            (i, l), (k, j) = alg.gen_pos(word[p]), alg.gen_pos(word[p + 1])
            if (i < k and l > j) or (i > k and l < j):
                spots.append(p)
        if not spots:
            break
        p = rng.choice(spots)
        word[p], word[p + 1] = word[p + 1], word[p]
    return tuple(word)


@_timed(1, "quantum matrix engine", limit=30)
def criterion_1(seed=0, pairs=1000):
    from .oracles import commutative_minor_product
    rep = qmatrix.confluence_check((2, 2), 3)
    if not rep.ok or rep.words_checked != 1 + 4 + 16 + 64:
        return False, f"O_q(M_2) confluence failures: {rep.failures[:3]}"
    rng = random.Random(seed)
    alg = qmatrix.qmatrix_algebra(3, 2)
    for _ in range(pairs):
        w1 = tuple(rng.randrange(6) for _ in range(rng.randint(2, 5)))
        w2 = _shuffle_commuting(alg, w1, rng)
        a = alg.normal_form(w1)
        if a != alg.normal_form(w2) or a != alg.normal_form(w1, "random", rng):
            return False, f"normal forms of {w1} and {w2} differ"
        sp = a.specialize(1)
        if sp.terms != {tuple(sorted(w1)): Fraction(1)}:
            return False, f"q=1 normal form of {w1} is not the sorted word"
    # products of minors at q=1 against sympy determinants
    for word in [((1, 2), (3, 4)), ((1, 4), (2, 3)), ((2, 4), (1, 3))]:
        got = grassmann.std_pbw(word, 2, 4).specialize(1).terms
        want = commutative_minor_product(word, 2, 4)
        if got != {k: Fraction(v) for k, v in want.items()}:
            return False, f"q=1 product of minors {word} differs from the commutative oracle"
    return True, f"{rep.words_checked} words in M_2 confluent, {pairs} random pairs in M_(3,2) agree"


# -- 2 ---------------------------------------------------------------------------------

@_timed(2, "straightening tables")
def criterion_2():
    from .oracles import classical_straightening
    sizes = {}
    for m, n in [(2, 4), (2, 5), (3, 6)]:
        table = grassmann.straightening_table(m, n)
        table.check_invariants()
        sizes[(m, n)] = len(table.straightening)
    for m, n in [(2, 4), (2, 5)]:
        table = grassmann.straightening_table(m, n)
        for (I, J), exp in table.straightening.items():
            if grassmann.expand_in_std((I, J), m, n, blocked=False) != exp:
                return False, f"unblocked solve of {I},{J} disagrees (content law)"
    table1 = grassmann.straightening_table(2, 4).specialize(1)
    for (I, J), exp in table1.straightening.items():
        if exp.terms != classical_straightening((I, J), 2, 4):
            return False, f"q=1 straightening of {I},{J} differs from the classical one"
    counts = ", ".join(f"{k}: {v}" for k, v in sizes.items())
    return True, f"incomparable ordered pairs {counts}; support, content, +q^e laws hold"


# -- 3 ---------------------------------------------------------------------------------

@_timed(3, "ASL-1 degree-2 dimension")
def criterion_3():
    L, _ = grassmann.plucker_poset(2, 4)
    census = sum(1 for a in L.elements for b in L.elements if L.le(a, b))
    count, rk = grassmann.pbw_rank_of_standard_monomials(2, 4, 2, blocked=False)
    if not count == rk == census == 20:
        return False, f"(2,4): count {count}, rank {rk}, census {census}"
    for m, n in [(2, 5), (3, 6)]:
        count, rk = grassmann.pbw_rank_of_standard_monomials(m, n, 2)
        if count != rk:
            return False, f"({m},{n}): count {count}, rank {rk}"
    return True, "(2,4): 20 = rank = census; (2,5), (3,6) full rank"


# -- 4 ---------------------------------------------------------------------------------

def _increasing(sizes):
    return [v for v in itertools.product(*(range(1, s + 1) for s in sizes)) if lattice.is_increasing(v)]


def random_quadruples(sizes, count, seed=0):
    """Random (K, I, J, L) satisfying the omega-lemma hypotheses."""
    rng = random.Random(seed)
    pool = _increasing(sizes)
    out = []
    while len(out) < count:
        I, J = rng.choice(pool), rng.choice(pool)
        quads = lattice.omega_lemma_quadruples(I, J)
        if quads:
            out.append(rng.choice(quads))
    return out


@_timed(4, "lattice lemmas", limit=10)
def criterion_4(seed=0, samples=10_000):
    pool = _increasing((4, 4))
    N = 2 * 4 + 1
    n_prefix = n_omega = 0
    for I, J in itertools.product(pool, repeat=2):
        for quad in lattice.prefix_lemma_quadruples(I, J):
            n_prefix += 1
            if not lattice.prefix_lemma_holds(*quad):
                return False, f"prefix lemma fails at {quad}"
        for quad in lattice.omega_lemma_quadruples(I, J):
            n_omega += 1
            if not lattice.omega_lemma_holds(*quad, N):
                return False, f"omega lemma fails at {quad}"
    for K, I, J, L in random_quadruples((5, 5, 5), samples, seed):
        if not lattice.omega_lemma_holds(K, I, J, L, 11):
            return False, f"omega lemma fails at {(K, I, J, L)}"
        if lattice.product_le(I, J) and not lattice.prefix_lemma_holds(K, I, J, L):
            return False, f"prefix lemma fails at {(K, I, J, L)}"
    ranks = {}
    for (m, n), want in {(2, 4): 4, (2, 5): 6, (3, 6): 9}.items():
        cert = lattice.birkhoff_check(grassmann.plucker_poset(m, n)[0])
        ranks[(m, n)] = cert.rank
        if cert.rank != want or len(cert.irreducibles) != want:
            return False, f"Birkhoff rank of ({m},{n}) is {cert.rank}"
    return True, f"{n_prefix} + {n_omega} exhaustive quadruples, {samples} random; ranks {list(ranks.values())}"


# -- 5 ---------------------------------------------------------------------------------

@_timed(5, "degeneration", limit=120)
def criterion_5():
    for m, n in [(2, 4), (2, 5)]:
        ext = extract_graded(grassmann.straightening_table(m, n))
        rep = toric.confluence_certify(ext.presentation)
        if not rep.ok:
            return False, f"({m},{n}) presentation not confluent at {rep.failures[0][0]}"
        for d in (1, 2):
            if filtered_dimensions(m, n, d) != weight_census(m, n, d):
                return False, f"({m},{n}) degree {d}: filtered dimensions differ from census"
    return True, "(2,4), (2,5): consistent, confluent, lower-weight tails, dimension tables match"


# -- 6 ---------------------------------------------------------------------------------

@_timed(6, "quantum torus")
def criterion_6():
    P = extract_graded(grassmann.straightening_table(2, 4)).presentation
    checked, failures = toric.verify_torus_relations(P)
    if failures:
        return False, f"torus relations fail: {failures[:3]}"
    gk = toric.gkdim_toric(P)
    if gk != 5:
        return False, f"GK dimension {gk}"
    return True, f"{checked} relations hold in the torus; GKdim 5"


# -- 7 ---------------------------------------------------------------------------------

@_timed(7, "Richardson quotients", limit=60)
def criterion_7():
    L, _ = grassmann.plucker_poset(2, 4)
    pairs = [(a, b) for a in L.elements for b in L.elements if L.le(a, b)]
    if len(pairs) != 20:
        return False, f"{len(pairs)} comparable pairs"
    for a, b in pairs:
        richardson.gk_dim(richardson.richardson(2, 4, a, b))
    R = richardson.richardson(2, 4, (1, 3), (2, 4))
    data = richardson.hilbert(R, 6)
    if data.h != [(d + 1) ** 2 for d in range(7)] or data.numerator != [1, 1]:
        return False, f"diamond Hilbert data {data}"
    if not richardson.gorenstein_indicator(R, 6):
        return False, "diamond not flagged Gorenstein"
    for q in (None, 1, 2):
        dims = [richardson.quotient_dimension(R, d, q) for d in (1, 2, 3)]
        if dims != data.h[1:4]:
            return False, f"quotient dimensions at q={q}: {dims}"
    return True, "20 pairs agree on GKdim; diamond h_d=(d+1)^2, P=1+t, Gorenstein; q-independent"


# -- 8 ---------------------------------------------------------------------------------

@_timed(8, "toric regularity surrogate")
def criterion_8():
    P = extract_graded(grassmann.straightening_table(2, 4)).presentation
    result = toric.regularity_check(P, 4)
    bad = [g for g, ok in result.items() if not ok]
    if bad:
        return False, f"phi not injective for {bad}"
    return True, f"phi_gamma injective for all {len(result)} elements up to length 4"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


def run_all(seed=0):
    out = []
    for fn in CRITERIA:
        out.append(fn(seed=seed) if fn in (criterion_1, criterion_4) else fn())
    return out
