import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from bimac.bialgebra import BiSymPoly
from bimac.bisym import double_kostka, evaluate_E
from bimac.coeffs import ONE, RatFunc, parse, q, t
from bimac.macdonald import c_factor, macdonald_H
from bimac.partitions import (SuperPartition, linear_extension, pairs, parse_super,
                              super_dominance_leq, super_from_pair, superpartitions)
from bimac.superspace import (check_integrality, check_kos1, check_norm, check_positivity,
                              check_stable_kostka, check_symmetries, circle_to_box,
                              h_factors, kdiffm_check, kdiffm_sides, psi_map,
                              stability_sweep, super_basis_images, super_evaluation,
                              super_H_schur, super_kostka, super_norm, super_P, truncate)
from oracles import bisym_poly, variables

L = parse_super


def sm(d):
    return {k: parse(v) if isinstance(v, str) else v for k, v in d.items()}


def test_stability_displays():
    assert super_P(L("0;2")).poly.coeffs == sm({
        ((), (2,)): ONE, ((), (1, 1)): "(1-t)*(1+q)/(1-q*t)", ((1,), (1,)): "(1-t)/(1-q*t)"})
    stable = sm({((), (2,)): ONE, ((), (1, 1)): "(1-t)*(1+q*t)/(1-q*t^2)"})
    assert super_P(L("1,0;2")).poly.coeffs == stable
    assert super_P(L("2,1,0;2")).poly.coeffs == stable
    assert super_P(L("3,2,1,0;2")).poly.coeffs == stable


def test_sweeps():
    rep = stability_sweep(((), (2,)), [1, 2, 3, 4])
    assert rep["ok"]
    assert [rep["by_m"][m]["status"] for m in (1, 2, 3, 4)] == ["differs", "stable", "stable", "stable"]
    rep = stability_sweep(((), (1,)), [1, 2])
    assert all(v["status"] == "stable" for v in rep["by_m"].values())
    assert stability_sweep(((1,), (1,)), [2, 3])["ok"]
    assert stability_sweep(((1, 1), ()), [1, 2])["by_m"][1] == {"status": "undefined"}


def test_super_P_independent_of_extension():
    for d, m in ((3, 1), (3, 2), (4, 2)):
        labels = superpartitions(d, m)
        alt = linear_extension(labels, super_dominance_leq,
                               key=lambda S: (tuple(-x for x in S.circ), S.anti))
        for S in labels:
            assert super_P(S, alt).poly == super_P(S).poly


def test_unitriangular():
    for S in superpartitions(3, 2):
        c = super_P(S).poly.coeffs
        assert c[S.to_pair()] == ONE
        for k in c:
            assert super_dominance_leq(super_from_pair(k, 2), S)


def test_h_factors():
    assert h_factors(L("0;")) == {"h_down": ONE, "h_up": ONE}
    assert h_factors(L("0;1"))["h_down"] == 1 - t
    for n in range(4):
        for lam, mu in pairs(n):
            for m in (max(n, 1), n + 1):
                S = super_from_pair((lam, mu), m)
                assert h_factors(S)["h_down"] == c_factor(lam, (q, q * t)) * c_factor(mu, (q * t, t))


H21 = {"3;": "t", "0;3": "q^2*t", "2;1": "1+q*t", "1;2": "q+q^2*t",
       "0;2,1": "q^2+q^3*t", "1;1,1": "q", "0;1,1,1": "q^3"}


def test_H21_expansion():
    assert super_H_schur(L("2;1")) == {L(k): parse(v) for k, v in H21.items()}


def test_H_degree_zero():
    assert super_H_schur(L("0;")) == {L("0;"): ONE}


def test_kostka_values():
    assert super_kostka(L("3,1;"), L("2,0;2")) == t + q * t**2
    assert super_kostka(L("3,2;"), L("1,0;4")) == q**2 * t**2 * (1 + q**2 * t)
    assert super_kostka(L("3,2;"), L("3,0;2")) == t * (1 + q**2 * t)
    assert super_kostka(L("3,2;"), L("3,1;1")) == t * (1 + q**2 * t)
    with pytest.raises(ValueError):
        super_kostka(L("3;"), L("2,0;2"))


def test_kdiffm_examples():
    assert kdiffm_check(L("2,0;2"), L("3;2"))["status"] == "verified"
    lhs, rhs = kdiffm_sides(L("2,0;2"), L("3;2"))
    assert lhs == -(1 - q**2 * t**2) * (t + q * t**2) == rhs
    # the two m=1 Kostkas in the relation, as an unordered pair
    got = {super_kostka(L("3;2"), L("0;3,2")), super_kostka(L("3;2"), L("2;2,1"))}
    assert got == {t + t**2 + q * t**2 + q * t**3 + q**2 * t**4,
                   t**2 * (1 + q * t + q**2 * t + q**2 * t**2 + q**3 * t**2)}
    lhs, rhs = kdiffm_sides(L("3,1,0;"), L("3,2;"))
    assert lhs.is_zero() and rhs.is_zero()
    with pytest.raises(ValueError):
        kdiffm_sides(L("3,1,0;"), L("3;2"))


@pytest.mark.parametrize("d", range(0, 3))
def test_kdiffm_small(d):
    for m in (1, 2):
        for S in superpartitions(d, m):
            for D in superpartitions(d + 1, m - 1):
                assert kdiffm_check(S, D)["status"] == "verified", (S, D)


def test_circle_to_box():
    assert circle_to_box(L("2,0;2")) == [(L("0;3,2"), 1), (L("2;2,1"), -1)]
    assert circle_to_box(L("2;1")) == [(SuperPartition((), (3, 1)), 1)]


def test_psi_on_H21_is_classical_H31():
    img = psi_map(super_H_schur(L("2;1")), "m1")
    assert {k.sym: v for k, v in img.items()} == macdonald_H((3, 1)).coeffs
    with pytest.raises(ValueError):
        psi_map({L("1,0;"): ONE}, "m1")


@pytest.mark.parametrize("d", range(0, 4))
def test_kos1(d):
    for S in superpartitions(d, 1):
        assert check_kos1(S)["status"] == "verified"


SECTORS = [(d, m) for d in range(1, 5) for m in (2, 3) if superpartitions(d, m)]
super_st = st.sampled_from(SECTORS).flatmap(lambda dm: st.dictionaries(
    st.sampled_from(superpartitions(*dm)), st.integers(-3, 3).filter(bool).map(RatFunc),
    min_size=1, max_size=5))


@settings(max_examples=60, deadline=None)
@given(super_st)
def test_psi_squared_vanishes(f):
    assert psi_map(psi_map(f)) == {}


def test_evaluation_examples():
    for N in range(1, 5):
        assert super_evaluation(L("0;"), N) == ONE
    S = L("0;1")
    assert super_evaluation(S, 3) == super_evaluation(S, 3, "explicit")
    for N in (2, 3, 4):
        want = t * (1 - t ** (N - 1)) / (1 - t)
        assert super_evaluation(S, N) == want == evaluate_E(((), (1,)), N, 1)
    with pytest.raises(ValueError):
        super_evaluation(L("0;1,1,1"), 2)


def test_basis_images():
    S = L("3,1;1")
    mono, psum = super_basis_images(S), super_basis_images(S, "powersum")
    assert mono == BiSymPoly.basis_element("SM", (2, 1), (1,))
    assert psum == BiSymPoly.basis_element("SP", (2, 1), (1,))
    x1, x2, x3 = variables("x", 3)
    assert sp.expand(bisym_poly(mono, (x1, x2), (x3,)) - (x1**2 * x2 + x1 * x2**2) * x3) == 0
    got = bisym_poly(psum, (x1, x2), (x3,))
    assert sp.expand(got - (x1**2 * x2 + x1 * x2**2) * (x1 + x2 + x3)) == 0
    assert super_basis_images(L("0;")) == BiSymPoly.one()


def test_truncate():
    f = BiSymPoly.basis_element("SS", (1, 1), ()) + BiSymPoly.basis_element("SS", (1,), (1,))
    assert truncate(f, 1, "SS").coeffs == {((1,), (1,)): ONE}


def test_norm_sign_factor():
    # (-q)^{C(m,2)} makes the m = 2 empty-sector norm -q^{|Λ^a|}
    assert super_norm(L("1,0;")) == -q
    assert check_norm(L("1,0;"))["status"] == "verified"


@pytest.mark.parametrize("d", range(0, 4))
def test_conjecture_checks(d):
    m = 0
    while m * (m - 1) // 2 <= d:
        for S in superpartitions(d, m):
            for check in (check_norm, check_integrality, check_positivity, check_symmetries):
                rep = check(S)
                assert rep["status"] == "verified", rep
                assert rep["witness"] is None
        m += 1


@pytest.mark.parametrize("n", range(1, 3))
def test_stable_kostka(n):
    for p in pairs(n):
        assert check_stable_kostka(super_from_pair(p, n))["status"] == "verified"
        S = super_from_pair(p, n + 1)
        for Om in superpartitions(S.degree, S.m):
            assert super_kostka(Om, S) == double_kostka(*Om.to_pair(), *p)
