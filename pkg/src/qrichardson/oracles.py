"""Commutative reference computations, independent of the quantum engines.

These use sympy determinants and linear solves on a generic matrix, and plain
coordinate sorting for Hibi normal forms.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from .lattice import product_le


def generic_matrix(rows, cols):
    return sympy.Matrix(rows, cols, lambda i, j: sympy.Symbol(f"x_{i + 1}_{j + 1}"))


def plucker_coordinate(X, I):
    return X.extract([i - 1 for i in I], list(range(X.cols))).det(method="berkowitz")


def classical_straightening(product, m, n):
    """Coefficients of p_{I_1}...p_{I_s} on the standard monomials with the same content."""
    X = generic_matrix(n, m)
    elements = list(itertools.combinations(range(1, n + 1), m))
    s = len(product)
    target = sorted(itertools.chain.from_iterable(product))
    basis = [
        mono for mono in itertools.product(elements, repeat=s)
        if all(product_le(a, b) for a, b in zip(mono, mono[1:]))
        and sorted(itertools.chain.from_iterable(mono)) == target
    ]
    coords = {I: plucker_coordinate(X, I) for I in elements}

    def value(mono):
        out = sympy.Integer(1)
        for I in mono:
            out *= coords[I]
        return sympy.expand(out)

    unknowns = sympy.symbols(f"a0:{len(basis)}")
    expr = sympy.expand(sum(a * value(b) for a, b in zip(unknowns, basis)) - value(product))
    gens = list(X)
    eqs = sympy.Poly(expr, *gens).coeffs() if expr != 0 else []
    sol = sympy.solve(eqs, unknowns, dict=True)
    if len(sol) != 1 or len(sol[0]) != len(unknowns):
        raise ValueError("classical straightening is not unique")
    out = {}
    for a, b in zip(unknowns, basis):
        c = Fraction(int(sympy.numer(sol[0][a])), int(sympy.denom(sol[0][a])))
        if c:
            out[b] = c
    return out


def commutative_minor_product(words_of_minors, m, n):
    """Expanded commutative polynomial of a product of maximal minors, as a dict
    from sorted generator-index tuples (row-major, 0-based) to integers."""
    X = generic_matrix(n, m)
    expr = sympy.Integer(1)
    for I in words_of_minors:
        expr *= plucker_coordinate(X, I)
    poly = sympy.Poly(sympy.expand(expr), *list(X))
    out = {}
    for exps, c in poly.terms():
        mono = tuple(g for g, e in enumerate(exps) for _ in range(e))
        out[mono] = int(c)
    return out


def hibi_normal_form(realization, elements, word):
    """Standard monomial of a commutative Hibi-ring product: sort each coordinate."""
    coords = [realization(x) for x in word]
    columns = [sorted(col) for col in zip(*coords)] if coords else []
    inverse = {realization(x): x for x in elements}
    return tuple(inverse[tuple(col[k] for col in columns)] for k in range(len(word)))
