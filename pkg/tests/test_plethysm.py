import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from bimac.bialgebra import BiSymPoly
from bimac.coeffs import ONE, RatFunc, q, t, u
from bimac.macdonald import evaluation_w, macdonald_P
from bimac.partitions import partitions
from bimac.plethysm import (X, X_PLUS_Y, Y, AlphabetExpr, phi_modify, pleth_evaluate,
                            pleth_powersum, pleth_symfunc)
from bimac.symfunc import SymPoly, littlewood_richardson
from oracles import Q, bisym_poly, one_alphabet, schur, to_sympy, variables


def S(basis, lam):
    return SymPoly(basis, {tuple(lam): ONE})


def PP(lam, mu, c=1):
    return BiSymPoly("PP", {(tuple(lam), tuple(mu)): RatFunc(c) if not isinstance(c, RatFunc) else c})


def test_powersum_images():
    A = AlphabetExpr(ONE, q * (1 - t) / (1 - q * t))
    got = pleth_powersum(2, A)
    assert got.coeffs == {((2,), ()): ONE, ((), (2,)): q**2 * (1 - t**2) / (1 - q**2 * t**2)}
    assert pleth_powersum(3, AlphabetExpr(-ONE + 1, ONE)) == PP((), (3,))
    assert pleth_powersum(1, X) == PP((1,), ())
    with pytest.raises(ValueError):
        pleth_powersum(0, X)


def test_negated_x_plus_sum():
    # -X + (X+Y) collapses to Y
    A = AlphabetExpr(-ONE + ONE, ONE)
    for r in range(1, 4):
        assert pleth_powersum(r, A) == pleth_powersum(r, Y)


def test_degree_one_and_two():
    A = AlphabetExpr(ONE, q)
    assert pleth_symfunc(S("s", (1,)), A) == PP((1,), ()) + PP((), (1,), q)
    assert pleth_symfunc(S("s", (2,)), A).to("SS").coeff((1,), (1,)) == q


@pytest.mark.parametrize("n", range(1, 5))
def test_complete_splitting(n):
    lhs = pleth_symfunc(S("h", (n,)), X_PLUS_Y)
    rhs = BiSymPoly("PP")
    for l in range(n + 1):
        rhs = rhs + pleth_symfunc(S("h", (n - l,)) if n - l else SymPoly("p", {(): ONE}), X) * \
            pleth_symfunc(S("h", (l,)) if l else SymPoly("p", {(): ONE}), Y)
    assert lhs == rhs


@pytest.mark.parametrize("n", range(1, 5))
def test_schur_of_sum_matches_lr(n):
    for nu in partitions(n):
        got = pleth_symfunc(S("s", nu), X_PLUS_Y).to("SS").coeffs
        want = {}
        for k in range(n + 1):
            for rho in partitions(k):
                for sig in partitions(n - k):
                    c = littlewood_richardson(rho, sig).get(nu, 0)
                    if c:
                        want[(rho, sig)] = RatFunc(c)
        assert got == want


@pytest.mark.parametrize("nu", [(2,), (1, 1), (2, 1), (3,)])
def test_scaled_alphabet_in_variables(nu):
    # s_ν[X + qY] equals s_ν(x1, x2, q y1, q y2)
    xs, ys = variables("x", 2), variables("y", 2)
    got = bisym_poly(pleth_symfunc(S("s", nu), AlphabetExpr(ONE, q)), xs, ys)
    want = schur(nu, list(xs) + [Q * y for y in ys])
    assert sp.expand(got - want) == 0


lab_st = st.sampled_from([p for k in range(1, 3) for p in partitions(k)])
sym_st = st.builds(lambda b, lam, c: SymPoly(b, {lam: RatFunc(c)}),
                   st.sampled_from("mehps"), lab_st, st.integers(1, 3))
alpha_st = st.sampled_from([X, Y, X_PLUS_Y, AlphabetExpr(ONE, q * (1 - t) / (1 - q * t)),
                            AlphabetExpr(ONE - t, ONE, u)])


@settings(max_examples=40, deadline=None)
@given(sym_st, sym_st, alpha_st)
def test_multiplicative(f, g, A):
    assert pleth_symfunc(f * g, A) == pleth_symfunc(f, A) * pleth_symfunc(g, A)
    assert pleth_symfunc(f + g, A) == pleth_symfunc(f, A) + pleth_symfunc(g, A)


def test_evaluate_examples():
    assert pleth_evaluate(macdonald_P((1,)), (1 - u) / (1 - t)) == (1 - u) / (1 - t)
    assert evaluation_w((), u) == ONE
    with pytest.raises(ValueError):
        pleth_evaluate(S("p", (1,)), X)


@pytest.mark.parametrize("n", range(1, 4))
def test_evaluation_formula(n):
    for lam in partitions(n):
        assert pleth_evaluate(macdonald_P(lam), (1 - u) / (1 - t)) == evaluation_w(lam, u)


@pytest.mark.parametrize("N", [2, 3])
def test_principal_specialization(N):
    # u = t^N turns the alphabet into 1 + t + ... + t^{N-1}
    T = sp.Symbol("t")
    pts = [T**i for i in range(N)]
    for lam in partitions(3):
        f = S("s", lam)
        got = to_sympy(pleth_evaluate(f, (1 - t**N) / (1 - t)))
        assert sp.simplify(got - one_alphabet("s", lam, pts)) == 0


def SP(lam, mu):
    return BiSymPoly.basis_element("SP", lam, mu)


def test_phi_examples():
    assert phi_modify(SP((), (1,))) == SP((), (1,)).scale(1 / (1 - t))
    assert phi_modify(SP((1,), ())) == SP((1,), ())
    assert phi_modify(SP((), (2, 1))) == SP((), (2, 1)).scale(1 / ((1 - t**2) * (1 - t)))


sp_lab = st.sampled_from([(l, m) for a in range(3) for l in partitions(a)
                          for b in range(3) for m in partitions(b)])


@settings(max_examples=30, deadline=None)
@given(sp_lab, sp_lab)
def test_phi_is_multiplicative(a, b):
    f, g = SP(*a), SP(*b)
    assert phi_modify(f * g) == phi_modify(f) * phi_modify(g)
