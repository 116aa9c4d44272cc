"""One-alphabet symmetric functions over RatFunc coefficients.

All bases go through the power sums: per degree we keep exact rational
transition matrices p <-> {m, e, h, s}.  Products are concatenation of
power-sum labels.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

import flint

from .coeffs import ONE, ZERO, RatFunc, as_ratfunc
from .partitions import Partition, partition, partitions, size, z_factor

BASES = ("m", "e", "h", "p", "s")


class SingularGramError(ArithmeticError):
    """Gram-Schmidt met an isotropic vector."""


class SymPoly:
    __slots__ = ("basis", "coeffs")

    def __init__(self, basis: str, coeffs: Mapping | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.coeffs: dict[Partition, RatFunc] = {}
        for lab, c in (coeffs or {}).items():
            c = as_ratfunc(c)
            if c:
                self.coeffs[partition(lab)] = self.coeffs.get(partition(lab), ZERO) + c
        self.coeffs = {k: v for k, v in self.coeffs.items() if v}

    @staticmethod
    def basis_element(basis: str, lab: Partition) -> "SymPoly":
        return SymPoly(basis, {tuple(lab): ONE})

    def to(self, basis: str) -> "SymPoly":
        return change_basis(self, basis)

    def __add__(self, other: "SymPoly") -> "SymPoly":
        other = other.to(self.basis)
        return SymPoly(self.basis, _addmaps(self.coeffs, other.coeffs))

    def __neg__(self):
        return SymPoly(self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SymPoly":
        c = as_ratfunc(c)
        return SymPoly(self.basis, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return multiply(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.to("p").coeffs == other.to("p").coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def map_coeffs(self, fn: Callable[[RatFunc], RatFunc]) -> "SymPoly":
        return SymPoly(self.basis, {k: fn(v) for k, v in self.coeffs.items()})

    def degrees(self) -> set[int]:
        return {size(k) for k in self.coeffs}

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v})*{self.basis}{list(k)}" for k, v in self.coeffs.items())


def _addmaps(a: Mapping, b: Mapping) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] + v if k in out else v
    return {k: v for k, v in out.items() if v}


# character values and transition matrices

@lru_cache(maxsize=None)
def character(lam: Partition, rho: Partition) -> int:
    """χ^λ(ρ) by Murnaghan-Nakayama on beta-numbers."""
    if size(lam) != size(rho):
        raise ValueError("degree mismatch")
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    bset = set(beta)
    total = 0
    for b in beta:
        if b - r >= 0 and b - r not in bset:
            sign = (-1) ** sum(1 for c in beta if b - r < c < b)
            nb = sorted((c if c != b else b - r for c in beta), reverse=True)
            k = len(nb)
            new = partition(nb[i] - (k - 1 - i) for i in range(k))
            total += sign * character(new, rest)
    return total


def _p_count(rho: Partition, lam: Partition) -> int:
    """Coefficient of m_λ in p_ρ: fillings of the rows of λ by parts of ρ."""
    states = {tuple(0 for _ in lam): 1}
    for r in rho:
        nxt: dict = defaultdict(int)
        for st, c in states.items():
            for i in range(len(lam)):
                if st[i] + r <= lam[i]:
                    s2 = list(st)
                    s2[i] += r
                    nxt[tuple(s2)] += c
        states = nxt
    return states.get(tuple(lam), 0)


def _signature(rho: Partition) -> int:
    return (-1) ** (size(rho) - len(rho))


@lru_cache(maxsize=None)
def _to_p(basis: str, n: int) -> dict:
    """basis element λ -> {ρ: Fraction} in the power sums."""
    parts = partitions(n)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in parts}
    if basis == "s":
        return {lam: {rho: Fraction(character(lam, rho), z_factor(rho))
                      for rho in parts if character(lam, rho)} for lam in parts}
    if basis in ("h", "e"):
        out = {}
        for lam in parts:
            vec = {(): Fraction(1)}
            for r in lam:
                gen = _one_row(basis, r)
                vec = _mul_pvec(vec, gen)
            out[lam] = vec
        return out
    if basis == "m":
        return _from_p_matrix("m", n)
    raise ValueError(basis)


@lru_cache(maxsize=None)
def _one_row(basis: str, r: int) -> dict:
    sign = (lambda rho: 1) if basis == "h" else _signature
    return {rho: Fraction(sign(rho), z_factor(rho)) for rho in partitions(r)}


def _mul_pvec(a: Mapping, b: Mapping) -> dict:
    out: dict = defaultdict(Fraction)
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            out[partition(k1 + k2)] += v1 * v2
    return {k: v for k, v in out.items() if v}


def _invert(mat: dict, labels: tuple) -> dict:
    n = len(labels)
    idx = {lab: i for i, lab in enumerate(labels)}
    M = flint.fmpq_mat(n, n)
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
def _from_p_matrix(basis: str, n: int) -> dict:
    """For basis m this is m -> p (inverse of p -> m); otherwise p -> basis."""
    parts = partitions(n)
    if basis == "m":
        p_to_m = {rho: {lam: Fraction(_p_count(rho, lam)) for lam in parts
                        if _p_count(rho, lam)} for rho in parts}
        return _invert(p_to_m, parts)
    return _invert(_to_p(basis, n), parts)


@lru_cache(maxsize=None)
def _p_to(basis: str, n: int) -> dict:
    """ρ -> {λ: Fraction} expressing p_ρ in the target basis."""
    parts = partitions(n)
    if basis == "p":
        return {lam: {lam: Fraction(1)} for lam in parts}
    return _invert(_to_p(basis, n), parts)


def transition(src: str, dst: str, n: int) -> dict:
    """Rational matrix src_λ -> {dst_μ: c} in degree n."""
    if src == dst:
        return {lam: {lam: Fraction(1)} for lam in partitions(n)}
    a, b = _to_p(src, n), _p_to(dst, n)
    out = {}
    for lam, row in a.items():
        acc: dict = defaultdict(Fraction)
        for rho, c in row.items():
            for mu, d in b[rho].items():
                acc[mu] += c * d
        out[lam] = {k: v for k, v in acc.items() if v}
    return out


_transition = lru_cache(maxsize=None)(transition)


def apply_matrix(coeffs: Mapping, mat_for: Callable[[Partition], Mapping]) -> dict:
    """Linear map on coefficient dicts given row lookup by label."""
    buckets: dict = defaultdict(list)
    for lab, c in coeffs.items():
        for out, f in mat_for(lab).items():
            buckets[out].append(c * RatFunc(f))
    return {k: s for k, s in ((k, sum_ratfuncs(v)) for k, v in buckets.items()) if s}


def sum_ratfuncs(vals: Iterable[RatFunc]) -> RatFunc:
    """Sum grouped by denominator, then combined."""
    by_den: dict = {}
    for v in vals:
        k = v.den
        key = str(k)
        if key in by_den:
            by_den[key] = (by_den[key][0] + v.num, k)
        else:
            by_den[key] = (v.num, k)
    total = ZERO
    for num, den in by_den.values():
        total = total + RatFunc(num, den)
    return total


def change_basis(f: SymPoly, target: str) -> SymPoly:
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    return SymPoly(target, apply_matrix(
        f.coeffs, lambda lab: _transition(f.basis, target, size(lab))[lab]))


def multiply(f: SymPoly, g: SymPoly) -> SymPoly:
    a, b = f.to("p").coeffs, g.to("p").coeffs
    buckets: dict = defaultdict(list)
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            buckets[partition(k1 + k2)].append(v1 * v2)
    prod_ = SymPoly("p", {k: sum_ratfuncs(v) for k, v in buckets.items()})
    return prod_.to(f.basis)


@lru_cache(maxsize=None)
def littlewood_richardson(a: Partition, b: Partition) -> dict:
    """c^λ_{a,b} for all λ, from s_a·s_b in the power sums."""
    pa = _to_p("s", size(a))[tuple(a)]
    pb = _to_p("s", size(b))[tuple(b)]
    prod_ = _mul_pvec(pa, pb)
    n = size(a) + size(b)
    back = _p_to("s", n)
    acc: dict = defaultdict(Fraction)
    for rho, c in prod_.items():
        for lam, d in back[rho].items():
            acc[lam] += c * d
    out = {}
    for lam, v in acc.items():
        if v:
            if v.denominator != 1 or v < 0:
                raise ArithmeticError(f"non-integral LR coefficient {v}")
            out[lam] = int(v)
    return out


def lr_coeff(lam: Partition, a: Partition, b: Partition) -> int:
    if size(lam) != size(a) + size(b):
        return 0
    return littlewood_richardson(tuple(a), tuple(b)).get(tuple(lam), 0)


# scalar products

def z_qt(rho: Partition, Q, T) -> RatFunc:
    """z_ρ(Q,T) = z_ρ Π (1-Q^{ρ_i})/(1-T^{ρ_i})."""
    Q, T = as_ratfunc(Q), as_ratfunc(T)
    out = RatFunc(z_factor(rho))
    for r in rho:
        out = out * (1 - Q**r) / (1 - T**r)
    return out


def z_jack(rho: Partition, alpha) -> RatFunc:
    return RatFunc(z_factor(rho)) * as_ratfunc(alpha) ** len(rho)


def power_scalar(f: SymPoly, g: SymPoly, weight: Callable[[Partition], RatFunc]) -> RatFunc:
    a, b = f.to("p").coeffs, g.to("p").coeffs
    return sum_ratfuncs(v * b[k] * weight(k) for k, v in a.items() if k in b)


def qt_scalar(f: SymPoly, g: SymPoly, params=None) -> RatFunc:
    from .coeffs import q, t
    Q, T = params if params is not None else (q, t)
    return power_scalar(f, g, lambda rho: z_qt(rho, Q, T))


def hall_scalar(f: SymPoly, g: SymPoly) -> RatFunc:
    return power_scalar(f, g, lambda rho: RatFunc(z_factor(rho)))


def jack_scalar(f: SymPoly, g: SymPoly, alpha) -> RatFunc:
    return power_scalar(f, g, lambda rho: z_jack(rho, alpha))


# Gram-Schmidt

def gram_schmidt_matrix(labels: list, gram: Callable) -> dict:
    """Triangular orthogonalization against a Gram function.

    labels must be a linear extension, bottom first.  Returns L -> {K: c}
    with c_L = 1 and the combination Σ c_K b_K orthogonal to every earlier
    label.  gram(L, K) is the scalar product of the leading vectors.
    """
    G: dict = {}

    def g(a, b):
        key = (a, b)
        if key not in G:
            G[key] = G[(b, a)] = gram(a, b)
        return G[key]

    result: dict = {}
    norms: dict = {}
    for L in labels:
        vec = {L: ONE}
        for K in result:
            proj = sum_ratfuncs(c * g(L, J) for J, c in result[K].items())
            if proj:
                coef = proj / norms[K]
                for J, c in result[K].items():
                    vec[J] = vec.get(J, ZERO) - coef * c
        vec = {k: v for k, v in vec.items() if v}
        nrm = sum_ratfuncs(c * g(L, J) for J, c in vec.items())
        if not nrm:
            raise SingularGramError(f"isotropic vector at label {L}")
        result[L] = vec
        norms[L] = nrm
    return result


def gram_schmidt(labels: list, leading: Callable[[object], SymPoly],
                 inner: Callable[[SymPoly, SymPoly], RatFunc]) -> dict:
    """Orthogonal family P_L = leading(L) + lower terms, as SymPolys."""
    lead = {L: leading(L) for L in labels}
    mat = gram_schmidt_matrix(labels, lambda a, b: inner(lead[a], lead[b]))
    out = {}
    for L, vec in mat.items():
        acc = None
        for K, c in vec.items():
            term = lead[K].scale(c)
            acc = term if acc is None else acc + term
        out[L] = acc
    return out


def solve_linear(rows: list, labels: list, rhs: dict) -> dict:
    """Solve Σ_L c_L rows[L] = rhs for c, by Gauss-Jordan over RatFunc.

    rows[i] is a dict over labels (the columns).
    """
    n = len(rows)
    col = {lab: j for j, lab in enumerate(labels)}
    # augmented matrix: transpose so unknowns are columns
    A = [[ZERO] * (n + 1) for _ in labels]
    for i, row in enumerate(rows):
        for lab, v in row.items():
            A[col[lab]][i] = v
    for lab, v in rhs.items():
        A[col[lab]][n] = v
    m = len(labels)
    r = 0
    for c in range(n):
        piv = next((k for k in range(r, m) if A[k][c]), None)
        if piv is None:
            raise ArithmeticError("singular system")
        A[r], A[piv] = A[piv], A[r]
        inv = A[r][c].inverse()
        A[r] = [x * inv if x else x for x in A[r]]
        for k in range(m):
            if k != r and A[k][c]:
                f = A[k][c]
                A[k] = [x - f * y if y else x for x, y in zip(A[k], A[r])]
        r += 1
    for k in range(r, m):
        if A[k][n]:
            raise ArithmeticError("right-hand side outside the span")
    return {i: A[i][n] for i in range(n)}
