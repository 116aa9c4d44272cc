"""Macdonald superpolynomials through their bisymmetric images.

A superpolynomial of fermionic degree m in N variables is represented by
the bisymmetric polynomial obtained from the coefficient of θ_1⋯θ_m divided
by the Vandermonde in x_1..x_m.  The X-alphabet then has m letters, so we
work modulo s_κ[X] with ℓ(κ) > m; in every basis used here (SM, SP, SS)
that quotient simply drops the labels with ℓ(λ) > m.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .bialgebra import BiSymPoly, sp_weight
from .bisym import _eval_sm, double_kostka, evaluate_E, evaluation_points, sm_family
from .coeffs import ONE, ZERO, RatFunc, q, t
from .macdonald import CACHE
from .partitions import (PairLabel, SuperPartition, conjugate, format_pair, linear_extension,
                         n_stat, pair_size, partition, super_dominance_leq,
                         super_from_pair, super_stats, superpartitions)
from .symfunc import solve_linear, sum_ratfuncs


@dataclass(frozen=True)
class SuperMacdonald:
    label: SuperPartition
    poly: BiSymPoly
    m: int


def truncate(f: BiSymPoly, m: int, basis: str = "SM") -> BiSymPoly:
    """Image of f with m letters in X, in one of the Schur-in-X bases."""
    g = f.to(basis)
    return BiSymPoly(basis, {k: v for k, v in g.coeffs.items() if len(k[0]) <= m})


def super_order(d: int, m: int) -> list:
    """Bottom-first linear extension of super-dominance at bidegree (d|m)."""
    return CACHE.get(("super-order", d, m), lambda: linear_extension(
        superpartitions(d, m), super_dominance_leq, key=lambda L: (L.star, L.circ)))


def _family(d: int, m: int, order: list | None = None) -> dict:
    def build():
        labels = order if order is not None else super_order(d, m)
        pl = [L.to_pair() for L in labels]
        return sm_family(pl, sp_weight(q, t), truncate=m)
    if order is not None:
        return build()
    return CACHE.get(("super-family", d, m), build)


def super_P(L: SuperPartition, order: list | None = None) -> SuperMacdonald:
    """P_Λ: unitriangular in m_Ω, orthogonal for lower Ω in super-dominance."""
    fam = _family(L.degree, L.m, order)
    return SuperMacdonald(L, BiSymPoly("SM", fam[L.to_pair()]), L.m)


def super_scalar(f: BiSymPoly, g: BiSymPoly, m: int) -> RatFunc:
    """(-q)^{C(m,2)} ⟨⟨f, g⟩⟩_{q,t} on the m-letter quotient."""
    a, b = truncate(f, m, "SP").coeffs, truncate(g, m, "SP").coeffs
    w = sp_weight(q, t)
    val = sum_ratfuncs(v * b[k] * w(k) for k, v in a.items() if k in b)
    return (-q) ** comb(m, 2) * val


def super_norm(L: SuperPartition) -> RatFunc:
    P = super_P(L).poly
    return super_scalar(P, P, L.m)


def _diagram(L: SuperPartition):
    rows = L.rows()
    star = [r for r, _ in rows]
    circ = [r + int(f) for r, f in rows]
    return rows, star, circ


def _hook_product(L: SuperPartition, boxes) -> RatFunc:
    _, star, circ = _diagram(L)
    sc = conjugate(partition(star))
    out = ONE
    for i, j in boxes:
        a = circ[i - 1] - j
        l = sc[j - 1] - i
        out = out * (1 - q**a * t ** (l + 1))
    return out


def h_factors(L: SuperPartition) -> dict:
    """h↓ over bosonic boxes (arms in Λ⊛, legs in Λ*) and h↑_Λ(q,t) = h↓_{Λ'}(t,q)."""
    down = _hook_product(L, super_stats(L)["bosonic_boxes"])
    Lc = L.conjugate()
    up = _hook_product(Lc, super_stats(Lc)["bosonic_boxes"]).substitute({"q": t, "t": q})
    return {"h_down": down, "h_up": up}


def v_factor(L: SuperPartition) -> RatFunc:
    """v_Λ: the same hook product over the fermionic boxes."""
    return _hook_product(L, super_stats(L)["fermionic_boxes"])


def super_J(L: SuperPartition) -> BiSymPoly:
    return super_P(L).poly.scale(h_factors(L)["h_down"])


def super_H(L: SuperPartition) -> BiSymPoly:
    """φ(J_Λ) in the m-letter SS basis."""
    def build():
        J = truncate(super_J(L), L.m, "SP")
        out = {}
        for (lam, mu), c in J.coeffs.items():
            d = ONE
            for r in mu:
                d = d * (1 - t**r)
            out[(lam, mu)] = c / d
        return truncate(BiSymPoly("SP", out), L.m, "SS")
    return CACHE.get(("super-H", L), build)


def super_schur(L: SuperPartition) -> BiSymPoly:
    """s_Λ = P_Λ(q=0, t=0), in SM."""
    return CACHE.get(("super-s", L), lambda: super_P(L).poly
                     .substitute({"q": 0}).substitute({"t": 0}))


def super_schur_basis(d: int, m: int) -> tuple[list, list]:
    labels = list(superpartitions(d, m))
    rows = [truncate(super_schur(L), m, "SS").coeffs for L in labels]
    return labels, rows


def expand_super_schur(f: BiSymPoly, d: int, m: int) -> dict:
    """Coefficients of f in the s_Ω basis of bidegree (d|m)."""
    labels, rows = CACHE.get(("super-s-basis", d, m), lambda: super_schur_basis(d, m))
    cols = [L.to_pair() for L in labels]
    sol = solve_linear(rows, cols, truncate(f, m, "SS").coeffs)
    return {labels[i]: c for i, c in sol.items() if c}


def super_H_schur(L: SuperPartition) -> dict:
    return CACHE.get(("super-K", L), lambda: expand_super_schur(super_H(L), L.degree, L.m))


def super_kostka(Om: SuperPartition, L: SuperPartition) -> RatFunc:
    if Om.bidegree() != L.bidegree():
        raise ValueError(f"bidegree mismatch: {Om} vs {L}")
    return super_H_schur(L).get(Om, ZERO)


# the ψ map

def circle_to_box(L: SuperPartition) -> list[tuple[SuperPartition, int]]:
    """All Ω = Λ^⊠ with the sign (-1)^{#circles in rows above}."""
    out = []
    above = 0
    for r, ferm in L.rows():
        if ferm:
            anti = tuple(a for a in L.anti if a != r)
            out.append((SuperPartition(anti, L.sym + (r + 1,)), (-1) ** above))
            above += 1
    return out


def psi_map(f: dict, mode: str = "general") -> dict:
    """ψ on expansions {Ω: coeff} in the super Schur basis."""
    out: dict = {}
    for Om, c in f.items():
        if mode == "m1":
            if Om.m != 1:
                raise ValueError("m1 mode needs fermionic degree 1")
            images = [(SuperPartition((), Om.circ), 1)]
        elif mode == "general":
            images = circle_to_box(Om)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        for Ga, s in images:
            out[Ga] = out.get(Ga, ZERO) + c * s
    return {k: v for k, v in out.items() if v}


def kdiffm_sides(L: SuperPartition, Delta: SuperPartition) -> tuple[RatFunc, RatFunc]:
    """Both sides of the v-weighted relation between Kostkas of degrees m and m-1."""
    if Delta.m != L.m - 1 or Delta.degree != L.degree + 1:
        raise ValueError("Δ must have bidegree (d+1 | m-1)")
    lhs_terms = []
    for Om in superpartitions(L.degree, L.m):
        for Ga, s in circle_to_box(Om):
            if Ga == Delta:
                lhs_terms.append(s * super_kostka(Om, L))
    lhs = v_factor(L) * sum_ratfuncs(lhs_terms)
    rhs = sum_ratfuncs(s * v_factor(Ga) * super_kostka(Delta, Ga)
                       for Ga, s in circle_to_box(L))
    return lhs, rhs


def kdiffm_check(L: SuperPartition, Delta: SuperPartition) -> dict:
    lhs, rhs = kdiffm_sides(L, Delta)
    return _report("Kdiffm", f"{L} -> {Delta}", lhs == rhs, {"lhs": str(lhs), "rhs": str(rhs)})


# evaluation

def super_evaluation(L: SuperPartition, N: int, route: str = "closed") -> RatFunc:
    m = L.m
    if N < len(L.circ):
        raise ValueError(f"insufficient variables: N={N} < ℓ(Λ⊛)={len(L.circ)}")
    if route == "explicit":
        xs, ys = evaluation_points(N, m)
        return _eval_sm(super_P(L).poly, xs, ys)
    if route != "closed":
        raise ValueError(f"unknown route {route!r}")
    st = super_stats(L)
    anti_n = n_stat(L.anti) - n_stat(tuple(range(m - 1, -1, -1)))
    anti_size = sum(L.anti) - comb(m, 2)
    circ = L.circ
    stair = [m - i for i in range(m)]         # δ^{m+1} = (m, ..., 1)
    prod = ONE
    for i, row in enumerate(circ, start=1):
        start = stair[i - 1] if i <= m else 0
        for j in range(start + 1, row + 1):
            prod = prod * (1 - q ** (j - 1) * t ** (N - (i - 1)))
    num = t ** (st["n_skew"] + st["d_F"]) * prod
    den = q ** ((m - 1) * anti_size - anti_n) * h_factors(L)["h_down"]
    return num / den


# stability and the bridge to the bisymmetric bases

def stability_sweep(p: PairLabel, m_list) -> dict:
    n = pair_size(p)
    rows = {}
    for m in m_list:
        if len(p[0]) > m:
            rows[m] = None
            continue
        rows[m] = super_P(super_from_pair(p, m)).poly.coeffs
    stable = [m for m in m_list if m >= n and rows[m] is not None]
    ref = rows[stable[0]] if stable else None
    report = {}
    for m in m_list:
        if rows[m] is None:
            report[m] = {"status": "undefined"}
        else:
            report[m] = {"status": "stable" if rows[m] == ref else "differs",
                         "expansion": {format_pair(k): str(v) for k, v in rows[m].items()}}
    ok = all(report[m]["status"] == "stable" for m in stable)
    return {"pair": p, "ok": ok, "by_m": report}


def super_basis_images(L: SuperPartition, kind: str = "monomial") -> BiSymPoly:
    if kind == "monomial":
        return BiSymPoly("SM", {L.to_pair(): ONE})
    if kind == "powersum":
        return BiSymPoly("SP", {L.to_pair(): ONE})
    raise ValueError(f"unknown kind {kind!r}")


# conjecture checks

def nbar(L: SuperPartition) -> int:
    st = super_stats(L)
    return st["n_skew"] - st["d_B"]


def _report(name, inst, ok, witness=None):
    return {"conjecture": name, "instance": inst,
            "status": "verified" if ok else "counterexample",
            "witness": None if ok else witness}


def check_norm(L: SuperPartition) -> dict:
    h = h_factors(L)
    expect = (-1) ** comb(L.m, 2) * q ** sum(L.anti) * h["h_up"] / h["h_down"]
    got = super_norm(L)
    return _report("con1", str(L), got == expect, {"computed": str(got), "formula": str(expect)})


def check_integrality(L: SuperPartition) -> dict:
    J = super_J(L)
    bad = {str(k): str(v) for k, v in J.coeffs.items() if not v.is_polynomial()}
    return _report("con2", str(L), not bad, bad)


def check_positivity(L: SuperPartition) -> dict:
    K = super_H_schur(L)
    bad = {str(k): str(v) for k, v in K.items() if not v.has_nonneg_coeffs()}
    return _report("con3", str(L), not bad, bad)


def check_symmetries(L: SuperPartition) -> dict:
    Lc = L.conjugate()
    K, Kc = super_H_schur(L), super_H_schur(Lc)
    pref = q ** nbar(Lc) * t ** nbar(L)
    bad = []
    for Om in superpartitions(L.degree, L.m):
        k = K.get(Om, ZERO)
        if k != Kc.get(Om.conjugate(), ZERO).substitute({"q": t, "t": q}):
            bad.append(["conjugation", str(Om)])
        if k != pref * K.get(Om.conjugate(), ZERO).substitute({"q": 1 / q, "t": 1 / t}):
            bad.append(["inversion", str(Om)])
    return _report("sym1", str(L), not bad, bad)


def check_evaluation(L: SuperPartition, N: int) -> dict:
    a = super_evaluation(L, N)
    b = super_evaluation(L, N, "explicit")
    return _report("conjsurEval", f"{L} N={N}", a == b, {"closed": str(a), "explicit": str(b)})


def check_kos1(L: SuperPartition) -> dict:
    """For m=1: ψ(H_Λ) equals the ordinary H_{Λ⊛}."""
    from .macdonald import macdonald_H
    if L.m != 1:
        raise ValueError("kos1 is stated for fermionic degree 1")
    img = psi_map(super_H_schur(L), "m1")
    target = macdonald_H(L.circ).coeffs
    got = {k.sym: v for k, v in img.items()}
    return _report("kos1", str(L), got == target,
                   {"psi": {str(k): str(v) for k, v in got.items()},
                    "H": {str(k): str(v) for k, v in target.items()}})


def check_stable_kostka(L: SuperPartition) -> dict:
    lam, mu = L.to_pair()
    bad = []
    for Om in superpartitions(L.degree, L.m):
        kap, gam = Om.to_pair()
        if super_kostka(Om, L) != double_kostka(kap, gam, lam, mu):
            bad.append(str(Om))
    return _report("stable-kostka", str(L), not bad, bad)


def check_stable_evaluation(L: SuperPartition, N: int) -> dict:
    a = super_evaluation(L, N)
    b = evaluate_E(L.to_pair(), N, L.m)
    return _report("stable-eval", f"{L} N={N}", a == b, {"super": str(a), "double": str(b)})


def is_stable(L: SuperPartition) -> bool:
    return L.m >= pair_size(L.to_pair())


def ordering_equivalence(n: int, m: int) -> dict:
    """Pair dominance against super-dominance of the images, over all pairs of degree n."""
    from .partitions import pair_dominance_leq, pairs
    labels = pairs(n)
    bad = []
    for a in labels:
        for b in labels:
            if pair_dominance_leq(a, b) != super_dominance_leq(super_from_pair(a, m),
                                                               super_from_pair(b, m)):
                bad.append([str(a), str(b)])
    return _report("ordering", f"n={n} m={m}", not bad, bad)


def statistic_identity(p: PairLabel, m: int) -> dict:
    """n(λ) + |μ| + n(μ) + n(μ') = n(SΛ) - d^B(Λ) in the stable sector."""
    lam, mu = tuple(p[0]), tuple(p[1])
    lhs = n_stat(lam) + sum(mu) + n_stat(mu) + n_stat(conjugate(mu))
    rhs = nbar(super_from_pair(p, m))
    return _report("statistics", f"{p} m={m}", lhs == rhs, {"lhs": lhs, "rhs": rhs})
