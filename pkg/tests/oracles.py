"""Brute-force symmetric polynomials in explicit variables, built with sympy.

Nothing here goes through the library's transition matrices, so these serve
as independent references for basis changes, products and plethysm.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import sympy as sp

from bimac.coeffs import RatFunc

Q, T, A, U = sp.symbols("q t a u")


def to_sympy(c: RatFunc):
    return sp.sympify(str(c).replace("^", "**"), locals={"q": Q, "t": T, "a": A, "u": U})


def variables(name: str, k: int):
    return sp.symbols(f"{name}1:{k + 1}")


def mono(lam, xs):
    lam = tuple(lam) + (0,) * (len(xs) - len(lam))
    if len(lam) > len(xs):
        return sp.Integer(0)
    out = sp.Integer(0)
    for perm in set(permutations(lam)):
        term = sp.Integer(1)
        for x, e in zip(xs, perm):
            term *= x**e
        out += term
    return out


def power(r: int, xs):
    return sum(x**r for x in xs)


def elementary(r: int, xs):
    return mono((1,) * r, xs) if r <= len(xs) else sp.Integer(0)


def complete(r: int, xs):
    from bimac.partitions import partitions
    return sum((mono(p, xs) for p in partitions(r) if len(p) <= len(xs)), sp.Integer(0))


def schur(lam, xs):
    """Jacobi-Trudi determinant det(h_{λ_i - i + j})."""
    lam = tuple(lam)
    if not lam:
        return sp.Integer(1)
    n = len(lam)

    def h(r):
        if r < 0:
            return sp.Integer(0)
        return sp.Integer(1) if r == 0 else complete(r, xs)
    M = sp.Matrix(n, n, lambda i, j: h(lam[i] - i + j))
    return sp.expand(M.det())


def one_alphabet(basis: str, lam, xs):
    if basis == "m":
        return mono(lam, xs)
    if basis == "s":
        return schur(lam, xs)
    f = {"p": power, "e": elementary, "h": complete}[basis]
    out = sp.Integer(1)
    for r in lam:
        out *= f(r, xs)
    return sp.expand(out)


def symfunc_poly(f, xs):
    return sp.expand(sum(to_sympy(c) * one_alphabet(f.basis, lam, xs)
                         for lam, c in f.coeffs.items()))


def m_coefficients(poly, xs, n):
    """Read the m-expansion off the dominant monomials of a degree-n polynomial."""
    from bimac.partitions import partitions
    P = sp.Poly(poly, *xs)
    out = {}
    for lam in partitions(n):
        if len(lam) > len(xs):
            continue
        exps = tuple(lam) + (0,) * (len(xs) - len(lam))
        c = P.coeff_monomial(exps)
        if c != 0:
            out[lam] = sp.simplify(c)
    return out


def bisym_element(basis: str, lam, mu, xs, ys):
    if basis == "PP":
        return sp.expand(one_alphabet("p", lam, xs) * one_alphabet("p", mu, ys))
    if basis == "SM":
        return sp.expand(schur(lam, xs) * mono(mu, ys))
    if basis == "SS":
        return sp.expand(schur(lam, xs) * schur(mu, ys))
    if basis == "SP":
        return sp.expand(schur(lam, xs) * one_alphabet("p", mu, xs + ys))
    if basis == "PM":
        out = sp.Integer(1)
        for r in lam:
            out *= power(r, xs) + power(r, ys)
        for r in mu:
            out *= power(r, xs) - power(r, ys)
        return sp.expand(out)
    raise ValueError(basis)


def bisym_poly(f, xs, ys):
    return sp.expand(sum(to_sympy(c) * bisym_element(f.basis, k[0], k[1], xs, ys)
                         for k, c in f.coeffs.items()))


@lru_cache(maxsize=None)
def lr_brute(a, b):
    """c^ν_{ab} by counting LR tableaux of shape ν/a and content b."""
    from bimac.partitions import partitions
    a, b = tuple(a), tuple(b)
    out = {}
    for nu in partitions(sum(a) + sum(b)):
        if len(nu) < len(a) or any(x < y for x, y in zip(nu, a)):
            continue
        inner = a + (0,) * (len(nu) - len(a))
        count = 0

        def rows_from(i, above, seen):
            # above: entries of row i-1 keyed by column; seen: letters read so far
            nonlocal count
            if i == len(nu):
                count += tuple(seen) == b
                return
            lo, hi = inner[i], nu[i]

            def extend(j, prev, cells):
                if j == hi:
                    yield cells
                    return
                floor = max(prev, above[j] + 1 if j in above else 0)
                for v in range(floor, len(b)):
                    yield from extend(j + 1, v, {**cells, j: v})

            for cells in extend(lo, 0, {}):
                cnt = list(seen)
                ok = True
                for j in range(hi - 1, lo - 1, -1):       # reverse reading word
                    v = cells[j]
                    cnt[v] += 1
                    if cnt[v] > b[v] or (v and cnt[v] > cnt[v - 1]):
                        ok = False
                        break
                if ok:
                    rows_from(i + 1, cells, cnt)

        rows_from(0, {}, [0] * len(b))
        if count:
            out[nu] = count
    return out
