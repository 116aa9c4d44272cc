"""Named verification suites; each yields uniform report records."""

from __future__ import annotations

import json
import random
from importlib import resources
from itertools import product

from . import bisym, nabla, superspace
from .bialgebra import BiSymPoly
from .coeffs import ONE, RatFunc, parse, q, t
from .macdonald import c_factor, kostka_qt
from .partitions import (conjugate_pair, format_pair, pairs, parse_super, partitions,
                         super_from_pair, superpartitions)


def report(name: str, instance, ok: bool, witness=None) -> dict:
    return {"conjecture": name, "instance": str(instance),
            "status": "verified" if ok else "counterexample",
            "witness": None if ok else witness}


def appendix_tables() -> dict:
    text = resources.files("bimac").joinpath("data/appendix_d.json").read_text("utf-8")
    return {int(k): v for k, v in json.loads(text).items()}


def appendix_d(max_n: int = 3, seed: int = 0) -> list:
    out = []
    for n, tab in sorted(appendix_tables().items()):
        if n > max_n:
            continue
        rows, _, mat = bisym.kostka_table(n)
        got = [format_pair(p) for p in rows]
        if got != tab["labels"]:
            out.append(report("appendixD", f"n={n} labels", False, got))
            continue
        for i, r in enumerate(tab["rows"]):
            for j, e in enumerate(r):
                want = parse(e, implicit_mul=True)
                out.append(report("appendixD", f"n={n} [{tab['labels'][i]}; {tab['labels'][j]}]",
                                  mat[i][j] == want,
                                  {"computed": str(mat[i][j]), "table": e}))
    return out


def factorization(max_n: int = 4, seed: int = 0) -> list:
    return [report("factorization", format_pair(p),
                   bisym.double_P_factorized(p) == bisym.double_P_oracle(p))
            for n in range(max_n + 1) for p in pairs(n)]


STABILITY_DISPLAYS = {
    "0;2": {((), (2,)): "1", ((), (1, 1)): "(1-t)*(1+q)/(1-q*t)", ((1,), (1,)): "(1-t)/(1-q*t)"},
    "1,0;2": {((), (2,)): "1", ((), (1, 1)): "(1-t)*(1+q*t)/(1-q*t^2)"},
    "2,1,0;2": {((), (2,)): "1", ((), (1, 1)): "(1-t)*(1+q*t)/(1-q*t^2)"},
    "3,2,1,0;2": {((), (2,)): "1", ((), (1, 1)): "(1-t)*(1+q*t)/(1-q*t^2)"},
}


def stability(max_n: int = 4, seed: int = 0) -> list:
    out = []
    for s, want in STABILITY_DISPLAYS.items():
        got = superspace.super_P(parse_super(s)).poly.coeffs
        out.append(report("stability", s, got == {k: parse(v) for k, v in want.items()},
                          {str(k): str(v) for k, v in got.items()}))
    for n in range(1, max_n + 1):
        for p in pairs(n):
            sw = superspace.stability_sweep(p, range(max(len(p[0]), 1), n + 2))
            out.append(report("stability-sweep", format_pair(p), sw["ok"]))
    return out


def scalar(max_n: int = 3, seed: int = 0) -> list:
    out = []
    for n in range(max_n + 1):
        basis = [BiSymPoly.basis_element("SM", *p) for p in pairs(n)]
        for (i, f), (j, g) in product(enumerate(basis), repeat=2):
            a, b = bisym.biscalar_qt(f, g), bisym.biscalar_primed(f, g)
            out.append(report("scalar", f"n={n} ({i},{j})", a == b,
                              {"qt": str(a), "primed": str(b)}))
    return out


def norm(max_n: int = 3, seed: int = 0) -> list:
    out = []
    for n in range(max_n + 1):
        for p in pairs(n):
            P = bisym.double_P(p)
            v = bisym.biscalar_qt(P, P) * bisym.double_b(p)
            out.append(report("norm", format_pair(p), v == ONE, str(v)))
    return out


def duality(max_n: int = 3, seed: int = 0) -> list:
    out = []
    for n in range(1, max_n + 1):
        for p in pairs(n):
            lhs = bisym.omega_B(bisym.double_P(p))
            rhs = bisym.double_Q(conjugate_pair(p), (1 / t, 1 / q))
            out.append(report("duality", format_pair(p), lhs == rhs))
    return out


def lr4(max_n: int = 3, seed: int = 0) -> list:
    out = []
    parts = [p for k in range(max_n + 1) for p in partitions(k)]
    for lam, mu, nu, om in product(parts, repeat=4):
        if sum(lam) + sum(mu) != sum(nu) + sum(om):
            continue
        v = bisym.lr4_identity(lam, mu, nu, om)
        want = int(lam == nu and mu == om)
        out.append(report("lr4", (lam, mu, nu, om), v == want, v))
    return out


def evaluation(max_n: int = 2, seed: int = 0) -> list:
    out = []
    for n in range(max_n + 1):
        for p in pairs(n):
            for m, N in ((2, 5), (3, 7)):
                a = bisym.evaluate_E(p, N, m)
                b = bisym.evaluate_E(p, N, m, route="explicit")
                out.append(report("evaluation", f"{format_pair(p)} m={m} N={N}", a == b,
                                  {"closed": str(a), "explicit": str(b)}))
    return out


def kostka(max_n: int = 3, seed: int = 0) -> list:
    out = []
    for n in range(1, max_n + 1):
        labels = pairs(n)
        for p in labels:
            H = bisym.double_H(p)
            bad = [str(k) for k, v in H.coeffs.items() if not v.has_nonneg_coeffs()]
            out.append(report("positivity", format_pair(p), not bad, bad))
            closed = bisym.kostka_specials(*p)
            for key, lab in bisym.special_labels(n).items():
                got = H.coeff(*lab)
                out.append(report("special-" + key, format_pair(p), got == closed[key],
                                  {"computed": str(got), "formula": str(closed[key])}))
            d = bisym.dimension_check(p)
            out.append(report("dimension", format_pair(p), d == bisym.bn_order(n), d))
        sym = bisym.kostka_symmetries_check(n)
        out.append(report("symmetries", f"n={n}", sym["ok"], sym["failures"]))
    if max_n >= 3:
        for p in pairs(4):
            v = bisym.double_kostka((2, 1), (1,), *p).substitute({"q": 1, "t": 1})
            out.append(report("irrep-dimension", f"K[(2,1),(1); {format_pair(p)}](1,1)",
                              v == RatFunc(8), str(v)))
    return out


def nabla_suite(max_n: int = 3, seed: int = 0) -> list:
    out = []
    one = {"q": 1, "t": 1}
    for n in range(1, max_n + 1):
        a = nabla.nabla_apply(nabla.s_empty_n(n))
        out.append(report("nabla-closed", f"n={n}", a == nabla.nabla_on_s_empty_n(n)))
        c = nabla.catalan_pairing(n)
        out.append(report("catalan", f"n={n}", c == nabla.catalan_B(n), str(c)))
        d = nabla.dim_pairing_operator(n)
        out.append(report("dim-pairing", f"n={n}", d == nabla.dim_pairing(n)
                          and d.substitute(one) == RatFunc((2 * n + 1) ** n), str(d)))
    for n in range(1, max_n + 2):
        v = nabla.column_pairing(n)
        out.append(report("column-pairing", f"n={n}", v == ONE, str(v)))
    for power in (1, 2):
        for r in nabla.positivity_survey(min(max_n, 3), "sqrtB", power):
            out.append(report(f"sqrtB^{power}-sign", format_pair(r["pair"]),
                              r["pattern"] in ("positive", "negative"), r["pattern"]))
    mixed = [r for r in nabla.positivity_survey(min(max_n, 3), "barB") if r["pattern"] == "mixed"]
    out.append(report("barB-mixed", f"n<={min(max_n, 3)}", bool(mixed), "no mixed signs"))
    return out


def kernel(max_n: int = 3, seed: int = 0) -> list:
    return [report("kernel", f"degree {n}", r["ok"])
            for n, r in bisym.kernel_check(max_n).items()]


def ordering(max_n: int = 4, seed: int = 0) -> list:
    return [superspace.ordering_equivalence(n, m)
            for n in range(max_n + 1) for m in (n, n + 1)]


def superspace_suite(max_n: int = 4, seed: int = 0) -> list:
    """Norm, integrality, positivity, symmetries and evaluation for |Λ*| ≤ max_n."""
    out = []
    for d in range(max_n + 1):
        m = 0
        while m * (m - 1) // 2 <= d:
            for L in superpartitions(d, m):
                out += [superspace.check_norm(L), superspace.check_integrality(L),
                        superspace.check_positivity(L), superspace.check_symmetries(L)]
                for N in range(max(len(L.circ), 1), 7):
                    out.append(superspace.check_evaluation(L, N))
            m += 1
    return out


def kos1(max_n: int = 4, seed: int = 0) -> list:
    out = []
    for k in range(1, max_n + 1):
        for L in superpartitions(k - 1, 1):
            out.append(superspace.check_kos1(L))
            out.append(report("relatekostka", str(L), classical_relation(L)))
    return out


KDIFFM_EXAMPLES = [("2,0;2", "3;2"), ("3,1,0;", "3,2;")]


def kdiffm(max_n: int = 4, seed: int = 0) -> list:
    out = [superspace.kdiffm_check(parse_super(a), parse_super(b)) for a, b in KDIFFM_EXAMPLES]
    for d in range(1, max_n + 1):
        for m in (1, 2):
            for L in superpartitions(d, m):
                for Delta in superpartitions(d + 1, m - 1):
                    out.append(superspace.kdiffm_check(L, Delta))
    return out


def psi_square(max_n: int = 3, seed: int = 0) -> list:
    """ψ∘ψ = 0 on seeded random integer combinations of super Schur labels."""
    rng = random.Random(seed)
    out = []
    for d in range(1, max_n + 1):
        for m in (2, 3):
            labels = superpartitions(d, m)
            if not labels:
                continue
            for trial in range(5):
                f = {L: RatFunc(rng.randint(-5, 5)) for L in labels}
                f = {k: v for k, v in f.items() if v}
                g = superspace.psi_map(superspace.psi_map(f))
                out.append(report("psi-square", f"d={d} m={m} #{trial}", not g,
                                  {str(k): str(v) for k, v in g.items()}))
    return out


def jack(max_n: int = 3, seed: int = 0) -> list:
    return [report("jack", format_pair(p),
                   bisym.double_jack(p) == bisym.double_jack(p, route="oracle"))
            for n in range(max_n + 1) for p in pairs(n)]


def cross(max_n: int = 4, seed: int = 0) -> list:
    out = []
    for n in range(max_n + 1):
        for p in pairs(n):
            for m in (n, n + 1):
                if m == 0:
                    continue
                L = super_from_pair(p, m)
                if n <= 3:
                    out.append(superspace.check_stable_kostka(L))
                h = superspace.h_factors(L)["h_down"]
                want = c_factor(p[0], (q, q * t)) * c_factor(p[1], (q * t, t))
                out.append(report("hcc", str(L), h == want, {"h_down": str(h), "cc": str(want)}))
                out.append(superspace.statistic_identity(p, m))
    return out


SUITES = {
    "appendixD": appendix_d,
    "factorization": factorization,
    "stability": stability,
    "scalar": scalar,
    "norm": norm,
    "duality": duality,
    "lr4": lr4,
    "evaluation": evaluation,
    "kostka": kostka,
    "nabla": nabla_suite,
    "kernel": kernel,
    "ordering": ordering,
    "superspace": superspace_suite,
    "kos1": kos1,
    "kdiffm": kdiffm,
    "psi": psi_square,
    "jack": jack,
    "cross": cross,
}


def run_suite(name: str, max_n: int | None = None, seed: int = 0) -> list:
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    return fn(seed=seed) if max_n is None else fn(max_n, seed=seed)


def classical_relation(L) -> bool:
    """K_{μλ} = Σ_{Ω⊛ = μ} K_{ΩΛ} for every μ, with λ = Λ⊛."""
    lam = L.circ
    rows = {}
    for Om in superpartitions(L.degree, 1):
        rows.setdefault(Om.circ, []).append(superspace.super_kostka(Om, L))
    return all(kostka_qt(mu, lam) == sum(rows.get(mu, []), RatFunc())
               for mu in partitions(sum(lam)))

