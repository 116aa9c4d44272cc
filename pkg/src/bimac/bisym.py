"""Double (bisymmetric) Macdonald polynomials and their companions.

P_{λ,μ} = P_λ^{(q,qt)}[X + q(1-t)/(1-qt) Y] · P_μ^{(qt,t)}[Y]; the same
family is also obtained by orthogonalizing s_λ[X] m_μ[Y] for the scalar
product ⟨⟨s_λ[X]p_μ[X+Y], s_ω[X]p_η[X+Y]⟩⟩ = δ δ q^{|λ|} z_μ(q,t).
"""

from __future__ import annotations

from itertools import permutations
from math import factorial

from .bialgebra import (BASES, BiSymPoly, convert, diagonal_scalar,
                        linear_substitution, pm_weight, sp_weight, transition)
from .coeffs import ONE, ZERO, RatFunc, as_ratfunc, q, t
from .macdonald import (CACHE, b_norm, c_factor, evaluation_w, jack_P, macdonald_H,
                        macdonald_P)
from .partitions import (PairLabel, Partition, conjugate, conjugate_pair,
                         linear_extension, n_stat, pair_dominance_leq, pair_size,
                         pairs, partitions, size, super_from_pair, z_factor)
from .plethysm import AlphabetExpr, phi_modify, pleth_symfunc
from .symfunc import (SymPoly, gram_schmidt_matrix, littlewood_richardson,
                      sum_ratfuncs, transition as sym_transition, z_qt)

__all__ = [
    "BiSymPoly", "BASES", "convert", "biscalar_qt", "biscalar_primed", "b_hall_scalar",
    "double_P_factorized", "double_P_oracle", "double_P", "double_norm", "double_b",
    "double_Q", "omega_B", "omega_B_inverse", "lr4_identity", "double_J", "double_H",
    "double_H_product", "double_kostka", "double_kostka_sum", "kostka_table",
    "kostka_specials", "kostka_symmetries_check", "evaluate_E", "kernel_check",
    "specialize", "specialization_target", "double_jack", "pair_order",
]

C_QT = q * (1 - t) / (1 - q * t)


def _subst(f: BiSymPoly, params) -> BiSymPoly:
    if params is None:
        return f
    Q, T = (as_ratfunc(x) for x in params)
    return f.substitute({"q": Q, "t": T})


def _subst_rf(c: RatFunc, params) -> RatFunc:
    if params is None:
        return c
    Q, T = (as_ratfunc(x) for x in params)
    return c.substitute({"q": Q, "t": T})


# scalar products

def biscalar_qt(f: BiSymPoly, g: BiSymPoly, params=None) -> RatFunc:
    Q, T = (q, t) if params is None else params
    return diagonal_scalar(f, g, "SP", sp_weight(Q, T))


def _uv_coeffs(f: BiSymPoly) -> dict:
    """Coefficients on u_λ v_μ, u_r = p_r[X + q(1-t)/(1-qt) Y], v_r = p_r[Y]."""
    return linear_substitution(f, lambda r: (ONE, -C_QT.adams(r)),
                               lambda r: (ZERO, ONE))


def uv_element(lam: Partition, mu: Partition) -> BiSymPoly:
    """u_λ v_μ expressed in PP."""
    return pleth_symfunc(SymPoly("p", {lam: ONE}), AlphabetExpr(ONE, C_QT)) * \
        BiSymPoly.basis_element("PP", (), mu)


def biscalar_primed(f: BiSymPoly, g: BiSymPoly) -> RatFunc:
    a, b = _uv_coeffs(f), _uv_coeffs(g)
    qt = q * t
    return sum_ratfuncs(v * b[k] * q ** size(k[0]) * z_qt(k[0], q, qt) * z_qt(k[1], qt, t)
                        for k, v in a.items() if k in b)


def b_hall_scalar(f: BiSymPoly, g: BiSymPoly) -> RatFunc:
    return diagonal_scalar(f, g, "PM", pm_weight)


# the double Macdonald family

def table_key(p: PairLabel):
    """Lex order of (Λ*, Λ⊛) for the stable superpartition at m = n.

    This refines pair dominance and reproduces the row order of the
    published Kostka tables.
    """
    L = super_from_pair(p, pair_size(p))
    return (L.star, L.circ)


def pair_order(n: int) -> list:
    """Bottom-first linear extension of the pair dominance order."""
    return CACHE.get(("pair-order", n), lambda: linear_extension(
        pairs(n), pair_dominance_leq, key=table_key))


def double_P_factorized(p: PairLabel, params=None) -> BiSymPoly:
    lam, mu = tuple(p[0]), tuple(p[1])

    def build():
        qt = q * t
        left = pleth_symfunc(macdonald_P(lam, (q, qt)), AlphabetExpr(ONE, C_QT))
        right = pleth_symfunc(macdonald_P(mu, (qt, t)), AlphabetExpr(ZERO, ONE))
        return (left * right).to("SM")
    return _subst(CACHE.get(("dP", lam, mu), build), params)


def sm_family(labels: list, weight, truncate: int | None = None) -> dict:
    """Orthogonalize s_λ[X]m_μ[Y] (labels bottom first) for a diagonal SP weight.

    With truncate=m, SP components s_κ[X]... with ℓ(κ) > m are discarded,
    which is the passage to m variables in X.
    """
    rows = {}
    for lab in labels:
        row = transition("SM", "SP", pair_size(lab))[lab]
        if truncate is not None:
            row = {k: v for k, v in row.items() if len(k[0]) <= truncate}
        rows[lab] = row
    wcache: dict = {}

    def w(k):
        if k not in wcache:
            wcache[k] = weight(k)
        return wcache[k]

    def gram(a, b):
        ra, rb = rows[a], rows[b]
        return sum_ratfuncs(RatFunc(c * rb[k]) * w(k) for k, c in ra.items() if k in rb)

    return gram_schmidt_matrix(labels, gram)


def double_P_oracle(p: PairLabel) -> BiSymPoly:
    n = pair_size(p)
    fam = CACHE.get(("dP-oracle", n), lambda: sm_family(pair_order(n), sp_weight(q, t)))
    return BiSymPoly("SM", fam[(tuple(p[0]), tuple(p[1]))])


double_P = double_P_factorized


def double_b(p: PairLabel, params=None) -> RatFunc:
    """b_{λ,μ} = q^{-|λ|} b_λ(q,qt) b_μ(qt,t)."""
    lam, mu = p
    qt = q * t
    val = q ** (-size(lam)) * b_norm(lam, (q, qt)) * b_norm(mu, (qt, t))
    return _subst_rf(val, params)


def double_norm(p: PairLabel, params=None) -> RatFunc:
    """⟨⟨P_{λ,μ}, P_{λ,μ}⟩⟩ = 1/b_{λ,μ}."""
    return double_b(p, params).inverse()


def double_Q(p: PairLabel, params=None) -> BiSymPoly:
    return double_P(p, params).scale(double_b(p, params))


def _omega_images(Q, T):
    Q, T = as_ratfunc(Q), as_ratfunc(T)

    def wbar(r):
        return (-1) ** (r - 1) * (1 - Q ** (-r)) / (1 - T ** (-r))

    def wx(r):
        return (-1) ** r * T**r

    return (lambda r: (wx(r), ZERO)), (lambda r: (wbar(r) - wx(r), wbar(r)))


def omega_B(f: BiSymPoly, params=None) -> BiSymPoly:
    """ω^B_{q,t}: p_r[X] -> (-1)^r t^r p_r[X],
    p_r[X+Y] -> (-1)^{r-1} (1-q^{-r})/(1-t^{-r}) p_r[X+Y]."""
    Q, T = (q, t) if params is None else params
    ix, iy = _omega_images(Q, T)
    return BiSymPoly("PP", linear_substitution(f, ix, iy)).to(f.basis)


def omega_B_inverse(f: BiSymPoly, params=None) -> BiSymPoly:
    """(q/t)^n ω^B_{1/t,1/q} on homogeneous degree n."""
    Q, T = (q, t) if params is None else (as_ratfunc(x) for x in params)
    n = f.homogeneous_degree()
    return omega_B(f, (1 / T, 1 / Q)).scale((Q / T) ** n)


def lr4_identity(lam, mu, nu, om) -> int:
    """Σ (-1)^{|τ|} c^γ_{τ'ν} c^λ_{γη} c^σ_{ημ} c^ω_{στ}."""
    lam, mu, nu, om = (tuple(x) for x in (lam, mu, nu, om))
    d = size(lam) - size(nu)
    if d < 0 or size(lam) + size(mu) != size(nu) + size(om):
        return 0
    total = 0
    for k in range(d + 1):
        for tau in partitions(k):
            for eta in partitions(d - k):
                cl = littlewood_richardson(conjugate(tau), nu)
                cs = littlewood_richardson(eta, mu)
                a = sum(c * littlewood_richardson(g, eta).get(lam, 0) for g, c in cl.items())
                if not a:
                    continue
                b = sum(c * littlewood_richardson(s, tau).get(om, 0) for s, c in cs.items())
                total += (-1) ** k * a * b
    return total


def double_J(p: PairLabel) -> BiSymPoly:
    lam, mu = p
    qt = q * t
    return double_P(p).scale(c_factor(lam, (q, qt)) * c_factor(mu, (qt, t)))


def double_H(p: PairLabel) -> BiSymPoly:
    """H = φ(J), in the SS basis."""
    key = ("dH", tuple(p[0]), tuple(p[1]))
    return CACHE.get(key, lambda: phi_modify(double_J(p)).to("SS"))


def double_H_product(p: PairLabel) -> BiSymPoly:
    """H_λ^{(q,qt)}[X+qY] · H_μ^{(qt,t)}[tX+Y], in the SS basis."""
    lam, mu = p
    qt = q * t
    left = pleth_symfunc(macdonald_H(lam, (q, qt)), AlphabetExpr(ONE, q))
    right = pleth_symfunc(macdonald_H(mu, (qt, t)), AlphabetExpr(t, ONE))
    return (left * right).to("SS")


def double_kostka(kap, gam, lam, mu) -> RatFunc:
    if size(kap) + size(gam) != size(lam) + size(mu):
        raise ValueError("degree mismatch")
    return double_H((tuple(lam), tuple(mu))).coeff(kap, gam)


def double_kostka_sum(kap, gam, lam, mu) -> RatFunc:
    """Six-fold LR/Kostka sum for K_{κ,γ;λ,μ}."""
    from .macdonald import kostka_qt
    kap, gam, lam, mu = (tuple(x) for x in (kap, gam, lam, mu))
    qt = q * t
    vals = []
    for nu in partitions(size(lam)):
        k1 = kostka_qt(nu, lam, (q, qt))
        if not k1:
            continue
        for omg in partitions(size(mu)):
            k2 = kostka_qt(omg, mu, (qt, t))
            if not k2:
                continue
            # ν splits as (α, β), ω splits as (ρ, σ); κ ⊂ α·ρ, γ ⊂ β·σ
            for da in range(size(nu) + 1):
                for al in partitions(da):
                    for be in partitions(size(nu) - da):
                        c1 = littlewood_richardson(al, be).get(nu, 0)
                        if not c1:
                            continue
                        for rho in partitions(size(kap) - da) if size(kap) >= da else ():
                            sg = size(omg) - size(rho)
                            if sg < 0:
                                continue
                            c3 = littlewood_richardson(al, rho).get(kap, 0)
                            if not c3:
                                continue
                            for sig in partitions(sg):
                                c2 = littlewood_richardson(rho, sig).get(omg, 0)
                                c4 = littlewood_richardson(be, sig).get(gam, 0)
                                if c2 and c4:
                                    vals.append(k1 * k2 * (c1 * c2 * c3 * c4)
                                                * q ** size(be) * t ** size(rho))
    return sum_ratfuncs(vals)


def kostka_table(n: int) -> tuple[list, list, list]:
    """(row labels, column labels, matrix) with rows = Macdonald labels."""
    labels = list(reversed(pair_order(n)))
    mat = [[double_kostka(c[0], c[1], r[0], r[1]) for c in labels] for r in labels]
    return labels, labels, mat


def _nbar(lam, mu) -> int:
    return n_stat(lam) + size(mu) + n_stat(conjugate(mu)) + n_stat(mu)


def kostka_specials(lam, mu) -> dict:
    """Closed forms of K_{(n),∅}, K_{∅,(n)}, K_{∅,(1^n)}, K_{(1^n),∅} at (λ,μ)."""
    lam, mu = tuple(lam), tuple(mu)
    nl, nm = n_stat(lam), n_stat(mu)
    nlc, nmc = n_stat(conjugate(lam)), n_stat(conjugate(mu))
    a, b = size(lam), size(mu)
    return {
        "row_empty": q**nl * t**(b + nl + nm),
        "empty_row": q**(a + nl) * t**(nl + nm),
        "empty_col": q**(a + nlc + nmc) * t**nmc,
        "col_empty": q**(nlc + nmc) * t**(b + nmc),
    }


def special_labels(n: int) -> dict:
    row, col = ((n,) if n else ()), tuple([1] * n)
    return {"row_empty": (row, ()), "empty_row": ((), row),
            "empty_col": ((), col), "col_empty": (col, ())}


def kostka_symmetries_check(n: int) -> dict:
    failures = []
    checked = 0
    inv = {"q": 1 / q, "t": 1 / t}
    swap = {"q": t, "t": q}
    for lam, mu in pairs(n):
        H = double_H((lam, mu))
        Hc = double_H(conjugate_pair((lam, mu)))
        pref = q ** _nbar(conjugate(mu), conjugate(lam)) * t ** _nbar(lam, mu)
        for kap, gam in pairs(n):
            checked += 1
            k = H.coeff(kap, gam)
            kc = H.coeff(conjugate(gam), conjugate(kap))
            if k != pref * kc.substitute(inv):
                failures.append({"relation": "inversion", "K": [kap, gam, lam, mu]})
            if k != Hc.coeff(conjugate(gam), conjugate(kap)).substitute(swap):
                failures.append({"relation": "conjugation", "K": [kap, gam, lam, mu]})
    return {"n": n, "checked": checked, "failures": failures, "ok": not failures}


# evaluation

def _eval_monomial(nu: Partition, pts: list) -> RatFunc:
    """m_ν(x_1..x_k) by summing over distinct permutations of exponents."""
    k = len(pts)
    if len(nu) > k:
        return ZERO
    exps = list(nu) + [0] * (k - len(nu))
    vals = []
    for perm in set(permutations(exps)):
        v = ONE
        for x, e in zip(pts, perm):
            if e:
                v = v * x**e
        vals.append(v)
    return sum_ratfuncs(vals)


def _eval_schur(lam: Partition, pts: list) -> RatFunc:
    if not lam:
        return ONE
    row = sym_transition("s", "m", size(lam))[lam]
    return sum_ratfuncs(RatFunc(c) * _eval_monomial(nu, pts) for nu, c in row.items())


def _eval_sm(f: BiSymPoly, xs: list, ys: list) -> RatFunc:
    vals = []
    for (lam, mu), c in f.to("SM").coeffs.items():
        a = _eval_schur(lam, xs)
        if a:
            b = _eval_monomial(mu, ys) if mu else ONE
            if b:
                vals.append(c * a * b)
    return sum_ratfuncs(vals)


def evaluation_points(N: int, m: int) -> tuple[list, list]:
    """x_i = t^{i-1}/q^{m-i} (i ≤ m), y_i = t^{m+i-1} (i ≤ N-m)."""
    xs = [t ** (i - 1) * q ** (-(m - i)) for i in range(1, m + 1)]
    ys = [t ** (m + i - 1) for i in range(1, N - m + 1)]
    return xs, ys


def evaluate_E(p: PairLabel, N: int, m: int, route: str = "closed") -> RatFunc:
    lam, mu = tuple(p[0]), tuple(p[1])
    n = pair_size(p)
    if route == "closed":
        if m < n or N - m < n:
            raise ValueError(f"closed form needs m ≥ n and N-m ≥ n (n={n}, m={m}, N={N})")
        qt = q * t
        return (t ** (m * size(mu)) * q ** (-(m - 1) * size(lam))
                * evaluation_w(lam, q**m * t**N, (q, qt))
                * evaluation_w(mu, t ** (N - m), (qt, t)))
    if route == "explicit":
        if N < m or m < 0:
            raise ValueError(f"insufficient variables: N={N}, m={m}")
        xs, ys = evaluation_points(N, m)
        return _eval_sm(double_P(p), xs, ys)
    raise ValueError(f"unknown route {route!r}")


# kernel

def kernel_check(max_degree: int) -> dict:
    """Σ p_{λ,μ}⊗p_{λ,μ}/z_{λ,μ} = Σ P_{λ,μ}⊗Q_{λ,μ}, in SP⊗SP coordinates."""
    w = sp_weight(q, t)
    report = {}
    for n in range(max_degree + 1):
        labels = pairs(n)
        P = {L: double_P(L).to("SP").coeffs for L in labels}
        Qv = {L: double_Q(L).to("SP").coeffs for L in labels}
        ok = True
        for i in labels:
            for j in labels:
                rhs = sum_ratfuncs(P[L][i] * Qv[L][j] for L in labels
                                   if i in P[L] and j in Qv[L])
                lhs = w(i).inverse() if i == j else ZERO
                if lhs != rhs:
                    ok = False
        report[n] = {"pairs": len(labels), "ok": ok}
    return report


# specializations

def _limit_inf(f: BiSymPoly, var: str) -> BiSymPoly:
    return f.substitute({var: 1 / RatFunc.var(var)}).substitute({var: 0})


def specialize(p: PairLabel, which: str) -> BiSymPoly:
    P = double_P(p)
    if which == "HL0":
        return P.substitute({"q": 0})
    if which == "HLinf":
        return _limit_inf(P, "q")
    if which == "Schur":
        return P.substitute({"q": 0}).substitute({"t": 0})
    if which == "barSchur":
        return _limit_inf(_limit_inf(P, "q"), "t")
    if which == "q1":
        return P.substitute({"q": 1})
    if which == "t1":
        return P.substitute({"t": 1})
    if which == "jackSchur":
        return double_jack(p).substitute({"a": 1})
    raise ValueError(f"unknown specialization {which!r}")


def specialization_target(p: PairLabel, which: str) -> BiSymPoly:
    """The classical functions the specializations are expected to produce."""
    lam, mu = tuple(p[0]), tuple(p[1])
    sX = pleth_symfunc(SymPoly("s", {lam: ONE}), AlphabetExpr(ONE, ZERO))
    sY = pleth_symfunc(SymPoly("s", {mu: ONE}), AlphabetExpr(ZERO, ONE))
    if which == "HL0":
        return (sX * pleth_symfunc(macdonald_P(mu, (0, t)), AlphabetExpr(ZERO, ONE))).to("SM")
    if which == "HLinf":
        left = pleth_symfunc(SymPoly("s", {lam: ONE}), AlphabetExpr(ONE, 1 - 1 / t))
        right = pleth_symfunc(macdonald_P(mu, (0, 1 / t)), AlphabetExpr(ZERO, ONE))
        return (left * right).to("SM")
    if which == "Schur":
        return (sX * sY).to("SM")
    if which == "barSchur":
        return (pleth_symfunc(SymPoly("s", {lam: ONE}), AlphabetExpr(ONE, ONE)) * sY).to("SM")
    if which == "q1":
        e = pleth_symfunc(SymPoly("e", {conjugate(lam): ONE}), AlphabetExpr(ONE, ONE))
        return (e * sY).to("SM")
    if which == "t1":
        return BiSymPoly("SM", {(lam, mu): ONE})
    if which == "jackSchur":
        half = RatFunc(1) / 2
        left = pleth_symfunc(jack_P(lam, half), AlphabetExpr(ONE, half))
        right = pleth_symfunc(jack_P(mu, 2), AlphabetExpr(ZERO, ONE))
        return (left * right).to("SM")
    raise ValueError(f"unknown specialization {which!r}")


# Jack limit

def double_jack(p: PairLabel, route: str = "factorized") -> BiSymPoly:
    from .coeffs import alpha
    lam, mu = tuple(p[0]), tuple(p[1])
    if route == "factorized":
        def build():
            left = pleth_symfunc(jack_P(lam, alpha / (alpha + 1)),
                                 AlphabetExpr(ONE, 1 / (alpha + 1)))
            right = pleth_symfunc(jack_P(mu, alpha + 1), AlphabetExpr(ZERO, ONE))
            return (left * right).to("SM")
        return CACHE.get(("djack", lam, mu), build)
    if route == "oracle":
        n = pair_size(p)
        fam = CACHE.get(("djack-oracle", n), lambda: sm_family(
            pair_order(n), lambda k: RatFunc(z_factor(k[1])) * alpha ** len(k[1])))
        return BiSymPoly("SM", fam[(lam, mu)])
    raise ValueError(f"unknown route {route!r}")


def dimension_check(p: PairLabel) -> int:
    """Σ_{κ,γ} K_{κ,γ;λ,μ}(1,1)^2."""
    H = double_H(p)
    tot = 0
    for c in H.coeffs.values():
        v = c.substitute({"q": 1, "t": 1}).to_fraction()
        tot += int(v) ** 2
    return tot


def bn_order(n: int) -> int:
    return 2**n * factorial(n)
