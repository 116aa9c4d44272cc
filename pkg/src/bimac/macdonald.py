"""Classical Macdonald polynomials P, Q, J, H and Jack polynomials."""

from __future__ import annotations

import threading

from .coeffs import ONE, RatFunc, as_ratfunc, q, t
from .partitions import Partition, cells, conjugate, partitions, size
from .plethysm import pleth_scale
from .symfunc import (SymPoly, _to_p, gram_schmidt_matrix, sum_ratfuncs, z_jack,
                      z_qt)


class MacdonaldCache:
    """Memo of per-degree families keyed by (kind, n, parameter keys)."""

    def __init__(self):
        self._lock = threading.Lock()
        self._data: dict = {}

    def get(self, key, build):
        hit = self._data.get(key)
        if hit is not None:
            return hit
        value = build()
        with self._lock:
            return self._data.setdefault(key, value)

    def clear(self):
        with self._lock:
            self._data.clear()


CACHE = MacdonaldCache()


def _params(params):
    if params is None:
        return q, t
    Q, T = params
    return as_ratfunc(Q), as_ratfunc(T)


def _m_family(n: int, weight, tag) -> dict:
    """Gram-Schmidt on the monomial basis of degree n for a diagonal p-weight."""
    def build():
        labels = list(reversed(partitions(n)))      # lex increasing, bottom first
        rows = _to_p("m", n)
        w = {rho: weight(rho) for rho in partitions(n)}

        def gram(a, b):
            ra, rb = rows[a], rows[b]
            return sum_ratfuncs(RatFunc(c * rb[k]) * w[k] for k, c in ra.items() if k in rb)

        return gram_schmidt_matrix(labels, gram)
    return CACHE.get(("m-family", n, tag), build)


def macdonald_P(lam: Partition, params=None) -> SymPoly:
    Q, T = _params(params)
    lam = tuple(lam)
    fam = _m_family(size(lam), lambda rho: z_qt(rho, Q, T), ("qt", Q.key(), T.key()))
    return SymPoly("m", fam[lam])


def b_norm(lam: Partition, params=None) -> RatFunc:
    """b_λ = Π (1 - Q^a T^{l+1}) / (1 - Q^{a+1} T^l) = 1/⟨P_λ,P_λ⟩."""
    Q, T = _params(params)
    lc = conjugate(tuple(lam))
    out = ONE
    for i, j in cells(tuple(lam)):
        a, l = lam[i - 1] - j, lc[j - 1] - i
        out = out * (1 - Q**a * T**(l + 1)) / (1 - Q**(a + 1) * T**l)
    return out


def c_factor(lam: Partition, params=None) -> RatFunc:
    """c_λ = Π (1 - Q^a T^{l+1})."""
    Q, T = _params(params)
    lc = conjugate(tuple(lam))
    out = ONE
    for i, j in cells(tuple(lam)):
        a, l = lam[i - 1] - j, lc[j - 1] - i
        out = out * (1 - Q**a * T**(l + 1))
    return out


def macdonald_Q(lam: Partition, params=None) -> SymPoly:
    return macdonald_P(lam, params).scale(b_norm(lam, params))


def macdonald_J(lam: Partition, params=None) -> SymPoly:
    return macdonald_P(lam, params).scale(c_factor(lam, params))


def macdonald_H(lam: Partition, params=None) -> SymPoly:
    """H_λ = J_λ[X/(1-T)], in the Schur basis."""
    Q, T = _params(params)
    key = ("H", tuple(lam), Q.key(), T.key())
    return CACHE.get(key, lambda: pleth_scale(macdonald_J(lam, (Q, T)), 1 / (1 - T)).to("s"))


def kostka_qt(mu: Partition, lam: Partition, params=None) -> RatFunc:
    if size(mu) != size(lam):
        raise ValueError("degree mismatch")
    return macdonald_H(lam, params).coeffs.get(tuple(mu), RatFunc())


def evaluation_w(lam: Partition, u, params=None) -> RatFunc:
    """w_λ(u) = Π (T^{l'} - Q^{a'} u) / (1 - Q^a T^{l+1})."""
    Q, T = _params(params)
    u = as_ratfunc(u)
    lc = conjugate(tuple(lam))
    out = ONE
    for i, j in cells(tuple(lam)):
        a, l = lam[i - 1] - j, lc[j - 1] - i
        out = out * (T**(i - 1) - Q**(j - 1) * u) / (1 - Q**a * T**(l + 1))
    return out


def jack_P(lam: Partition, alpha=None) -> SymPoly:
    """Jack P^{(α)} by Gram-Schmidt for ⟨p_λ,p_μ⟩ = δ α^{ℓ(λ)} z_λ."""
    from .coeffs import alpha as _a
    A = _a if alpha is None else as_ratfunc(alpha)
    lam = tuple(lam)
    fam = _m_family(size(lam), lambda rho: z_jack(rho, A), ("jack", A.key()))
    return SymPoly("m", fam[lam])
