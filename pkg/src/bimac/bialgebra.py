"""The bisymmetric algebra: polynomials in p_r[X] and p_r[Y] with RatFunc coefficients.

Bases, all indexed by pairs (λ, μ):
  PP  p_λ[X] p_μ[Y]          (canonical, multiplicative)
  SM  s_λ[X] m_μ[Y]
  SP  s_λ[X] p_μ[X+Y]
  SS  s_λ[X] s_μ[Y]
  PM  p_λ[X+Y] p_μ[X-Y]
Every basis change is a rational matrix per degree, routed through PP.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Callable, Mapping

import flint

from .coeffs import ONE, ZERO, RatFunc, as_ratfunc
from .partitions import PairLabel, pair_size, pairs, partition, size, z_factor
from .symfunc import _to_p, sum_ratfuncs, z_qt

BASES = ("PP", "SM", "SP", "SS", "PM")
UNIT: PairLabel = ((), ())


class BiSymPoly:
    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: Mapping | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        out: dict = {}
        for (lam, mu), c in (coeffs or {}).items():
            key = (partition(lam), partition(mu))
            c = as_ratfunc(c)
            out[key] = out[key] + c if key in out else c
        self.coeffs: dict[PairLabel, RatFunc] = {k: v for k, v in out.items() if v}

    @staticmethod
    def basis_element(basis: str, lam=(), mu=()) -> "BiSymPoly":
        return BiSymPoly(basis, {(tuple(lam), tuple(mu)): ONE})

    @staticmethod
    def one() -> "BiSymPoly":
        return BiSymPoly("PP", {UNIT: ONE})

    def to(self, basis: str) -> "BiSymPoly":
        return convert(self, basis)

    def __add__(self, other: "BiSymPoly") -> "BiSymPoly":
        other = other.to(self.basis)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return BiSymPoly(self.basis, out)

    def __neg__(self):
        return BiSymPoly(self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "BiSymPoly":
        c = as_ratfunc(c)
        return BiSymPoly(self.basis, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, BiSymPoly):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, BiSymPoly):
            return NotImplemented
        return self.to("PP").coeffs == other.to("PP").coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, lam=(), mu=()) -> RatFunc:
        return self.coeffs.get((tuple(lam), tuple(mu)), ZERO)

    def map_coeffs(self, fn: Callable[[RatFunc], RatFunc]) -> "BiSymPoly":
        return BiSymPoly(self.basis, {k: fn(v) for k, v in self.coeffs.items()})

    def substitute(self, bindings: dict) -> "BiSymPoly":
        return self.map_coeffs(lambda c: c.substitute(bindings))

    def degrees(self) -> set[int]:
        return {pair_size(k) for k in self.coeffs}

    def homogeneous_degree(self) -> int:
        ds = self.degrees()
        if len(ds) > 1:
            raise ValueError(f"inhomogeneous element (degrees {sorted(ds)})")
        return ds.pop() if ds else 0

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v})*{self.basis}{list(k[0])},{list(k[1])}"
                          for k, v in self.coeffs.items())


# transition matrices (rational) between each basis and PP

def _expand_linear(parts_x, parts_y, img_x, img_y) -> dict:
    """Expand Π_{r∈parts_x} img_x(r) · Π_{r∈parts_y} img_y(r).

    img(r) is (cX, cY): the factor equals cX·p_r[X] + cY·p_r[Y].
    Returns {(λ, μ): coefficient} in PP; coefficients multiply with '*'.
    """
    factors = [(r, img_x(r)) for r in parts_x] + [(r, img_y(r)) for r in parts_y]
    out: dict = {}
    for choice in iproduct((0, 1), repeat=len(factors)):
        c = None
        xs, ys = [], []
        for (r, (cx, cy)), side in zip(factors, choice):
            f = cx if side == 0 else cy
            if not f:
                c = 0
                break
            c = f if c is None else c * f
            (xs if side == 0 else ys).append(r)
        if c is None:
            c = 1
        if not c:
            continue
        key = (partition(xs), partition(ys))
        out[key] = out[key] + c if key in out else c
    return {k: v for k, v in out.items() if v}


def _tensor(row_x: Mapping, row_y: Mapping) -> dict:
    return {(a, b): u * v for a, u in row_x.items() for b, v in row_y.items()}


@lru_cache(maxsize=None)
def _to_pp(basis: str, n: int) -> dict:
    out = {}
    for lam, mu in pairs(n):
        if basis == "PP":
            out[(lam, mu)] = {(lam, mu): Fraction(1)}
        elif basis in ("SM", "SS"):
            out[(lam, mu)] = _tensor(_to_p("s", size(lam))[lam],
                                     _to_p("m" if basis == "SM" else "s", size(mu))[mu])
        elif basis == "SP":
            acc: dict = defaultdict(Fraction)
            for rho, c in _to_p("s", size(lam))[lam].items():
                for (a, b), d in _expand_linear(
                        (), mu, None, lambda r: (Fraction(1), Fraction(1))).items():
                    acc[(partition(rho + a), b)] += c * d
            out[(lam, mu)] = {k: v for k, v in acc.items() if v}
        elif basis == "PM":
            out[(lam, mu)] = _expand_linear(
                lam, mu, lambda r: (Fraction(1), Fraction(1)),
                lambda r: (Fraction(1), Fraction(-1)))
        else:
            raise ValueError(basis)
    return out


def _invert_pairs(mat: dict, n: int) -> dict:
    labels = pairs(n)
    k = len(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    M = flint.fmpq_mat(k, k)
    for a, row in mat.items():
        for b, v in row.items():
            M[idx[a], idx[b]] = flint.fmpq(v.numerator, v.denominator)
    inv = M.inv()
    out = {}
    for i, a in enumerate(labels):
        row = {}
        for j, b in enumerate(labels):
            v = inv[i, j]
            if v != 0:
                row[b] = Fraction(int(v.p), int(v.q))
        out[a] = row
    return out


@lru_cache(maxsize=None)
def _from_pp(basis: str, n: int) -> dict:
    if basis == "PP":
        return _to_pp("PP", n)
    return _invert_pairs(_to_pp(basis, n), n)


@lru_cache(maxsize=None)
def transition(src: str, dst: str, n: int) -> dict:
    """Rational matrix expressing src basis elements of degree n in dst."""
    a = _to_pp(src, n)
    b = _from_pp(dst, n)
    out = {}
    for lab, row in a.items():
        acc: dict = defaultdict(Fraction)
        for mid, c in row.items():
            for tgt, d in b[mid].items():
                acc[tgt] += c * d
        out[lab] = {k: v for k, v in acc.items() if v}
    return out


_RF_CACHE: dict = {}


def _rf(f: Fraction) -> RatFunc:
    r = _RF_CACHE.get(f)
    if r is None:
        r = _RF_CACHE[f] = RatFunc(f)
    return r


def apply_rational(coeffs: Mapping, row_for: Callable) -> dict:
    buckets: dict = defaultdict(list)
    for lab, c in coeffs.items():
        for out, f in row_for(lab).items():
            buckets[out].append(c * _rf(f))
    res = {}
    for k, v in buckets.items():
        s = sum_ratfuncs(v)
        if s:
            res[k] = s
    return res


def convert(f: BiSymPoly, target: str) -> BiSymPoly:
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    return BiSymPoly(target, apply_rational(
        f.coeffs, lambda lab: transition(f.basis, target, pair_size(lab))[lab]))


def multiply(f: BiSymPoly, g: BiSymPoly) -> BiSymPoly:
    a, b = f.to("PP").coeffs, g.to("PP").coeffs
    buckets: dict = defaultdict(list)
    for (l1, m1), v1 in a.items():
        for (l2, m2), v2 in b.items():
            buckets[(partition(l1 + l2), partition(m1 + m2))].append(v1 * v2)
    return BiSymPoly("PP", {k: sum_ratfuncs(v) for k, v in buckets.items()}).to(f.basis)


def linear_substitution(f: BiSymPoly, img_x: Callable, img_y: Callable) -> dict:
    """Rewrite PP coefficients under p_r[X] -> img_x(r), p_r[Y] -> img_y(r).

    Each image is a pair (coefficient on p_r[X'], coefficient on p_r[Y'])
    in a new pair of alphabets X', Y'.  Returns the coefficient dict in the
    new PP-type basis.
    """
    buckets: dict = defaultdict(list)
    for (lam, mu), c in f.to("PP").coeffs.items():
        for key, d in _expand_linear(lam, mu, img_x, img_y).items():
            buckets[key].append(c * as_ratfunc(d))
    out = {}
    for k, v in buckets.items():
        s = sum_ratfuncs(v)
        if s:
            out[k] = s
    return out


# scalar products

def diagonal_scalar(f: BiSymPoly, g: BiSymPoly, basis: str, weight: Callable) -> RatFunc:
    a, b = f.to(basis).coeffs, g.to(basis).coeffs
    return sum_ratfuncs(v * b[k] * weight(k) for k, v in a.items() if k in b)


def sp_weight(Q, T) -> Callable:
    """q^{|λ|} z_μ(q,t) on s_λ[X] p_μ[X+Y]."""
    Q, T = as_ratfunc(Q), as_ratfunc(T)
    return lambda lab: Q ** size(lab[0]) * z_qt(lab[1], Q, T)


def pm_weight(lab: PairLabel) -> RatFunc:
    lam, mu = lab
    return RatFunc(z_factor(lam) * z_factor(mu) * 2 ** (len(lam) + len(mu)))
