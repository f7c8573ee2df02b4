"""Reference computations that share no code with the package's own paths.

Rank comes from fraction-free (Bareiss) elimination on integers, expansion
and differentiation from sympy, and powers of linear forms from the
multinomial formula.
"""
from fractions import Fraction
from math import factorial, lcm

import sympy


def bareiss_rank(rows):
    """Rank of a rational matrix, by clearing denominators and eliminating over Z."""
    rows = [list(map(Fraction, r)) for r in rows]
    if not rows or not rows[0]:
        return 0
    a = []
    for r in rows:
        den = lcm(*(x.denominator for x in r))
        a.append([int(x * den) for x in r])
    m, n = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(n):
        piv = next((i for i in range(rank, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        for i in range(rank + 1, m):
            for k in range(c + 1, n):
                num = a[i][k] * a[rank][c] - a[rank][k] * a[i][c]
                assert num % prev == 0
                a[i][k] = num // prev
            a[i][c] = 0
        prev = a[rank][c]
        rank += 1
        if rank == m:
            break
    return rank


def symbols(letter, n):
    return sympy.symbols([f"{letter}{i}" for i in range(n + 1)])


def to_sympy(f):
    """GradedPoly -> sympy expression (reads only the public coefficient data)."""
    from invsys.polyring import monomial_basis

    gens = symbols("x" if f.side == "R" else "y", f.n)
    expr = sympy.Integer(0)
    for mono, c in zip(monomial_basis(f.n, f.degree), f.coeffs):
        term = sympy.Rational(c.numerator, c.denominator)
        for g, e in zip(gens, mono):
            term *= g ** e
        expr += term
    return expr


def sympy_coeffs(expr, letter, n, degree):
    """Coefficient vector of a sympy form in graded-lex order, built by explicit enumeration."""
    from itertools import product

    gens = symbols(letter, n)
    poly = sympy.Poly(sympy.expand(expr), *gens, domain="QQ")
    exps = [e for e in product(range(degree, -1, -1), repeat=n + 1) if sum(e) == degree]
    exps.sort(reverse=True)
    return [Fraction(int(poly.coeff_monomial(e).p), int(poly.coeff_monomial(e).q)) for e in exps]


def sympy_contract(f, G):
    """x^a o G as literal iterated sympy differentiation."""
    xs = symbols("x", f.n)
    ys = symbols("y", G.n)
    fe = sympy.Poly(to_sympy(f), *xs)
    Ge = to_sympy(G)
    out = sympy.Integer(0)
    for mono, c in fe.terms():
        term = Ge
        for y, e in zip(ys, mono):
            if e:
                term = sympy.diff(term, y, e)
        out += c * term
    return sympy.expand(out)


def multinomial_power(coeffs, k):
    """dict exponent-tuple -> coefficient of (sum a_i y_i)^k via the multinomial formula."""
    from itertools import product

    n1 = len(coeffs)
    out = {}
    for e in product(range(k + 1), repeat=n1):
        if sum(e) != k:
            continue
        w = Fraction(factorial(k))
        for ai, ei in zip(coeffs, e):
            w = w / factorial(ei) * Fraction(ai) ** ei
        out[e] = w
    return out
