"""B-type Nabla operators, diagonal on the modified basis H̃_{λ,μ}."""

from __future__ import annotations

from math import comb

from .bialgebra import BiSymPoly
from .bisym import b_hall_scalar, double_H
from .coeffs import ONE, ZERO, RatFunc, q, t
from .macdonald import CACHE
from .partitions import PairLabel, conjugate, n_stat, pairs, size
from .plethysm import pleth_evaluate
from .symfunc import SymPoly, solve_linear

WHICH = ("B", "barB", "sqrtB")


def h_tilde(p: PairLabel) -> BiSymPoly:
    """q^{-n(λ')-n(μ')} t^{|μ|+n(μ')} H_{λ,μ}(q, 1/t), in the SS basis."""
    lam, mu = tuple(p[0]), tuple(p[1])

    def build():
        pref = q ** (-n_stat(conjugate(lam)) - n_stat(conjugate(mu))) \
            * t ** (size(mu) + n_stat(conjugate(mu)))
        return double_H((lam, mu)).substitute({"t": 1 / t}).scale(pref)
    return CACHE.get(("Htilde", lam, mu), build)


def _nhat(lam, mu) -> int:
    return n_stat(conjugate(mu)) - n_stat(lam) - n_stat(mu)


def eigenvalue(p: PairLabel, which: str = "B") -> RatFunc:
    lam, mu = tuple(p[0]), tuple(p[1])
    a, b = size(lam), size(mu)
    if which == "B":
        return q ** (a + _nhat(conjugate(mu), conjugate(lam))) * t ** (b + _nhat(lam, mu))
    if which == "barB":
        return q ** (a - _nhat(conjugate(mu), conjugate(lam))) * t ** (b - _nhat(lam, mu))
    if which == "sqrtB":
        return q**a * t**b
    raise ValueError(f"unknown operator {which!r}")


class NablaBasis:
    """H̃ basis of degree n with an exact solver from the SS basis."""

    def __init__(self, n: int):
        self.n = n
        self.labels = list(pairs(n))
        self.elements = {p: h_tilde(p) for p in self.labels}
        self._rows = [self.elements[p].coeffs for p in self.labels]

    def expand(self, f: BiSymPoly) -> dict:
        f = f.to("SS")
        sol = solve_linear(self._rows, self.labels, f.coeffs)
        return {self.labels[i]: c for i, c in sol.items() if c}


def nabla_basis(n: int) -> NablaBasis:
    return CACHE.get(("nabla-basis", n), lambda: NablaBasis(n))


def nabla_apply(f: BiSymPoly, which: str = "B") -> BiSymPoly:
    if which not in WHICH:
        raise ValueError(f"unknown operator {which!r}")
    if f.is_zero():
        return BiSymPoly("SS")
    n = f.homogeneous_degree()
    basis = nabla_basis(n)
    out = BiSymPoly("SS")
    for p, c in basis.expand(f).items():
        out = out + basis.elements[p].scale(c * eigenvalue(p, which))
    return out


def qt_integer(k: int) -> RatFunc:
    """[k]_{q,t} = (q^k - t^k)/(q - t)."""
    return sum((q ** (k - 1 - i) * t**i for i in range(k)), ZERO)


def qt_binomial(n: int, k: int) -> RatFunc:
    num, den = ONE, ONE
    for i in range(1, k + 1):
        num = num * qt_integer(n - k + i)
        den = den * qt_integer(i)
    return num / den


def nabla_on_s_empty_n(n: int) -> BiSymPoly:
    """(qt)^{-C(n,2)} Σ s_λ[[n]_{q,t}] s_μ[[n+1]_{q,t}] s_{λ,μ}."""
    a, b = qt_integer(n), qt_integer(n + 1)
    pref = (q * t) ** (-comb(n, 2))
    out = {}
    for lam, mu in pairs(n):
        v = pleth_evaluate(SymPoly("s", {lam: ONE}), a) * pleth_evaluate(SymPoly("s", {mu: ONE}), b)
        if v:
            out[(lam, mu)] = pref * v
    return BiSymPoly("SS", out)


def s_empty_n(n: int) -> BiSymPoly:
    return BiSymPoly.basis_element("SS", (), (n,))


def catalan_B(n: int) -> RatFunc:
    """(qt)^{-C(n,2)} [2n choose n]_{q,t}."""
    return (q * t) ** (-comb(n, 2)) * qt_binomial(2 * n, n)


def catalan_pairing(n: int) -> RatFunc:
    return b_hall_scalar(nabla_apply(s_empty_n(n)), s_empty_n(n))


def dim_pairing(n: int) -> RatFunc:
    """(([n+1]+[n]) / (qt)^{(n-1)/2})^n; the exponent n(n-1)/2 is integral."""
    return (qt_integer(n + 1) + qt_integer(n)) ** n * (q * t) ** (-comb(n, 2))


def dim_pairing_operator(n: int) -> RatFunc:
    p1n = BiSymPoly.basis_element("PM", tuple([1] * n), ())     # p_1[X+Y]^n
    return b_hall_scalar(nabla_apply(s_empty_n(n)), p1n)


def column_pairing(n: int) -> RatFunc:
    """⟨∇^B s_{∅,(n)}, s_{(1^n),∅}⟩_B."""
    return b_hall_scalar(nabla_apply(s_empty_n(n)),
                         BiSymPoly.basis_element("SS", tuple([1] * n), ()))


def sign_pattern(f: BiSymPoly) -> str:
    """'positive', 'negative' (up to a global sign), 'mixed' or 'non-laurent'."""
    signs = set()
    for c in f.to("SS").coeffs.values():
        if not c.is_laurent():
            return "non-laurent"
        signs.update(1 if v > 0 else -1 for v in c.laurent_terms().values())
    if signs <= {1}:
        return "positive"
    if signs <= {-1}:
        return "negative"
    return "mixed"


def positivity_survey(max_n: int, which: str, power: int = 1) -> list:
    """Sign pattern of which^power applied to every s_{λ,μ} of degree ≤ max_n."""
    out = []
    for n in range(1, max_n + 1):
        for p in pairs(n):
            f = BiSymPoly.basis_element("SS", *p)
            for _ in range(power):
                f = nabla_apply(f, which)
            out.append({"pair": p, "pattern": sign_pattern(f)})
    return out
