"""Plethystic substitution into affine two-alphabet expressions a·X + b·Y + c."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .bialgebra import UNIT, BiSymPoly, _expand_linear
from .coeffs import ONE, ZERO, PoleError, RatFunc, as_ratfunc
from .partitions import partition
from .symfunc import SymPoly, sum_ratfuncs


@dataclass(frozen=True)
class AlphabetExpr:
    xcoef: RatFunc = ZERO
    ycoef: RatFunc = ZERO
    scalar: RatFunc = ZERO

    def __post_init__(self):
        for name in ("xcoef", "ycoef", "scalar"):
            object.__setattr__(self, name, as_ratfunc(getattr(self, name)))

    def image(self, r: int) -> tuple[RatFunc, RatFunc, RatFunc]:
        """Coefficients of p_r[X], p_r[Y] and the constant in p_r[A]."""
        return self.xcoef.adams(r), self.ycoef.adams(r), self.scalar.adams(r)

    def key(self):
        return (self.xcoef.key(), self.ycoef.key(), self.scalar.key())


X = AlphabetExpr(ONE, ZERO)
Y = AlphabetExpr(ZERO, ONE)
X_PLUS_Y = AlphabetExpr(ONE, ONE)


def pleth_powersum(r: int, A: AlphabetExpr) -> BiSymPoly:
    if r < 1:
        raise ValueError("r must be positive")
    a, b, c = A.image(r)
    return BiSymPoly("PP", {((r,), ()): a, ((), (r,)): b, UNIT: c})


_PROD_CACHE: dict = {}


def _pleth_monomial(rho, A: AlphabetExpr) -> dict:
    """p_ρ[A] as a PP coefficient dict (constant parts absorbed)."""
    key = (rho, A.key())
    hit = _PROD_CACHE.get(key)
    if hit is not None:
        return hit
    if A.scalar.is_zero():
        out = _expand_linear(rho, (), lambda r: A.image(r)[:2], None)
    else:
        # fold the constant into a third factor by expanding one part at a time
        out = {UNIT: ONE}
        for r in rho:
            a, b, c = A.image(r)
            nxt: dict = defaultdict(list)
            for (lam, mu), v in out.items():
                if a:
                    nxt[(partition(lam + (r,)), mu)].append(v * a)
                if b:
                    nxt[(lam, partition(mu + (r,)))].append(v * b)
                if c:
                    nxt[(lam, mu)].append(v * c)
            out = {k: s for k, s in ((k, sum_ratfuncs(w)) for k, w in nxt.items()) if s}
    out = {k: as_ratfunc(v) for k, v in out.items()}
    _PROD_CACHE[key] = out
    return out


def pleth_symfunc(f: SymPoly, A: AlphabetExpr) -> BiSymPoly:
    """f[A] in the PP basis; coefficients of f are not raised."""
    buckets: dict = defaultdict(list)
    for rho, c in f.to("p").coeffs.items():
        for lab, d in _pleth_monomial(rho, A).items():
            buckets[lab].append(c * d)
    return BiSymPoly("PP", {k: sum_ratfuncs(v) for k, v in buckets.items()})


def pleth_scale(f: SymPoly, a) -> SymPoly:
    """One-alphabet plethysm f[a·X]."""
    a = as_ratfunc(a)
    out = {}
    for rho, c in f.to("p").coeffs.items():
        w = c
        for r in rho:
            w = w * a.adams(r)
        out[rho] = w
    return SymPoly("p", out)


def pleth_evaluate(f: SymPoly, A) -> RatFunc:
    """Scalar value f[c] for a constant alphabet c."""
    if isinstance(A, AlphabetExpr):
        if A.xcoef or A.ycoef:
            raise ValueError("evaluation needs an alphabet without X and Y")
        A = A.scalar
    c = as_ratfunc(A)
    vals = []
    for rho, k in f.to("p").coeffs.items():
        w = k
        for r in rho:
            w = w * c.adams(r)
        vals.append(w)
    return sum_ratfuncs(vals)


def phi_modify(f: BiSymPoly, tpar=None) -> BiSymPoly:
    """φ: p_n[X] -> p_n[X], p_n[X+Y] -> p_n[X+Y]/(1-t^n)."""
    from .coeffs import t
    T = t if tpar is None else as_ratfunc(tpar)
    out = {}
    for (lam, mu), c in f.to("SP").coeffs.items():
        d = ONE
        for r in mu:
            den = 1 - T**r
            if not den:
                raise PoleError("1 - t^n vanishes")
            d = d * den
        out[(lam, mu)] = c / d
    return BiSymPoly("SP", out)
