"""Exact rational functions in the parameters q, t, a (Jack alpha) and u.

Numerators and denominators are integer polynomials from python-flint.
Every value is kept reduced, with the denominator's leading coefficient
positive under graded-lex order (q > t > a > u).
"""

from __future__ import annotations

import ast
import re
from fractions import Fraction
from functools import lru_cache

import flint

PARAMS = ("q", "t", "a", "u")
# parameters raised by the Adams operation p_r (alpha stays inert)
PLETHYSTIC = ("q", "t", "u")

_CTX = flint.fmpz_mpoly_ctx.get(PARAMS, "deglex")
_GENS = _CTX.gens()
_ONE = _CTX.constant(1)
_ZERO = _CTX.constant(0)


class PoleError(ZeroDivisionError):
    """A denominator vanished under substitution."""


def _poly(c) -> flint.fmpz_mpoly:
    if isinstance(c, flint.fmpz_mpoly):
        return c
    return _CTX.constant(int(c))


class RatFunc:
    __slots__ = ("num", "den", "_key")

    def __init__(self, num=0, den=1, _reduced=False):
        if isinstance(num, RatFunc):
            if den == 1:
                self.num, self.den, self._key = num.num, num.den, None
                return
            num = num / RatFunc(den)
            self.num, self.den, self._key = num.num, num.den, None
            return
        if isinstance(num, Fraction):
            num, den = num.numerator, num.denominator * (den if isinstance(den, int) else 1)
        n, d = _poly(num), _poly(den)
        if d.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            if n.is_zero():
                d = _ONE
            elif not d.is_one():
                g = n.gcd(d)
                if not g.is_one():
                    n, d = n / g, d / g
            if d.leading_coefficient() < 0:
                n, d = -n, -d
        self.num, self.den, self._key = n, d, None

    # construction helpers
    @staticmethod
    def var(name: str) -> "RatFunc":
        return RatFunc(_GENS[PARAMS.index(name)], _reduced=True)

    @staticmethod
    def monomial(**exps: int) -> "RatFunc":
        num, den = _ONE, _ONE
        for name, e in exps.items():
            g = _GENS[PARAMS.index(name)]
            if e >= 0:
                num = num * g**e
            else:
                den = den * g**(-e)
        return RatFunc(num, den, _reduced=True)

    # predicates
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def is_laurent(self) -> bool:
        """True when the denominator is a single monomial with coefficient 1."""
        terms = list(self.den.terms())
        return len(terms) == 1 and terms[0][1] == 1

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def laurent_terms(self) -> dict[tuple[int, ...], int]:
        """Exponent vector -> integer coefficient; requires is_laurent()."""
        if not self.is_laurent():
            raise ValueError(f"not a Laurent polynomial: {self}")
        shift = next(iter(self.den.terms()))[0]
        return {tuple(e - s for e, s in zip(m, shift)): int(c)
                for m, c in self.num.terms()}

    def has_nonneg_coeffs(self, laurent: bool = False) -> bool:
        """Membership in N[q,t,...] (or N[q^{±1},...] when laurent)."""
        if laurent:
            if not self.is_laurent():
                return False
        elif not self.is_polynomial():
            return False
        return all(c > 0 for _, c in self.num.terms())

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return Fraction(int(self.num.leading_coefficient()) if not self.num.is_zero() else 0,
                        int(self.den.leading_coefficient()))

    def degrees(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(self.num.degrees()), tuple(self.den.degrees())

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den == other.den:
            if self.den.is_one():
                return RatFunc(self.num + other.num, _ONE, _reduced=True)
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self + (-other)

    def __rsub__(self, other):
        return RatFunc(other) - self

    def __mul__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, int):
                if other == 0:
                    return RatFunc()
                if self.den.is_one():
                    return RatFunc(self.num * other, _ONE, _reduced=True)
            other = RatFunc(other)
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc()
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, _ONE, _reduced=True)
        # cross-cancel to keep the products small
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n = (self.num / g1) * (other.num / g2)
        d = (self.den / g2) * (other.den / g1)
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatFunc(n, d, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero RatFunc")
        n, d = self.den, self.num
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        return RatFunc(n, d, _reduced=True)

    def __truediv__(self, other):
        if not isinstance(other, RatFunc):
            other = RatFunc(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return RatFunc(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num**e, self.den**e, _reduced=True)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            if isinstance(other, (int, Fraction)):
                other = RatFunc(other)
            else:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash(self.key())

    def key(self):
        if self._key is None:
            self._key = (tuple(self.num.terms()), tuple(self.den.terms()))
        return self._key

    # substitutions
    def adams(self, r: int) -> "RatFunc":
        """Raise q, t, u to the r-th power (the action of p_r on scalars)."""
        if r == 1 or self.is_constant():
            return self
        imgs = [g**r if name in PLETHYSTIC else g for name, g in zip(PARAMS, _GENS)]
        return RatFunc(self.num.compose(*imgs), self.den.compose(*imgs))

    def substitute(self, bindings: dict) -> "RatFunc":
        """Exact substitution; unbound parameters are kept."""
        imgs = []
        for name in bindings:
            if name not in PARAMS:
                raise KeyError(f"unknown parameter {name!r}")
        for name, g in zip(PARAMS, _GENS):
            v = bindings.get(name)
            imgs.append(RatFunc(g, _reduced=True) if v is None else
                        (v if isinstance(v, RatFunc) else RatFunc(v)))
        num_n, num_d = _compose(self.num, imgs)
        den_n, den_d = _compose(self.den, imgs)
        if den_n.is_zero():
            raise PoleError(f"pole: denominator of {self} vanishes at {bindings}")
        return RatFunc(num_n, num_d) / RatFunc(den_n, den_d)

    def __call__(self, **bindings) -> "RatFunc":
        return self.substitute(bindings)

    # text
    def __str__(self):
        if self.den.is_one():
            return _fmt_poly(self.num)
        n = _fmt_poly(self.num)
        if len(self.num) > 1:
            n = f"({n})"
        d = _fmt_poly(self.den)
        if len(self.den) > 1 or "*" in d:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"

    def __bool__(self):
        return not self.num.is_zero()


def _compose(p, imgs: list[RatFunc]):
    """Substitute rational images into a polynomial; returns (num, den) polys."""
    if all(im.den.is_one() for im in imgs):
        return p.compose(*[im.num for im in imgs]), _ONE
    degs = p.degrees()
    total = _ONE
    for im, d in zip(imgs, degs):
        if d:
            total = total * im.den**d
    acc = _ZERO
    pw: dict = {}

    def power(i, kind, e):
        key = (i, kind, e)
        if key not in pw:
            base = imgs[i].num if kind == 0 else imgs[i].den
            pw[key] = base**e
        return pw[key]

    for mono, c in p.terms():
        term = _CTX.constant(int(c))
        for i, e in enumerate(mono):
            if degs[i]:
                if e:
                    term = term * power(i, 0, e)
                if degs[i] - e:
                    term = term * power(i, 1, degs[i] - e)
        acc = acc + term
    return acc, total


def _fmt_poly(p) -> str:
    if p.is_zero():
        return "0"
    out = []
    for k, (mono, c) in enumerate(p.terms()):
        c = int(c)
        factors = []
        for name, e in zip(PARAMS, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        mag = abs(c)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}*{body}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


_IMPLICIT = re.compile(r"(?<=[0-9a-z)])\s*(?=[a-z(])")


def parse(text: str, implicit_mul: bool = False) -> RatFunc:
    """Parse an arithmetic expression in q, t, a, u ('alpha' is an alias of a).

    With implicit_mul, juxtaposition such as '2qt^2' is accepted.
    """
    s = text.strip().replace("alpha", "a").replace("α", "a")
    s = s.replace("−", "-").replace("·", "*")
    if implicit_mul:
        # keep exponents intact: "q^2t" -> "q^2*t"
        s = _IMPLICIT.sub("*", s)
    s = s.replace("^", "**")
    try:
        tree = ast.parse(s, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}") from exc
    return _eval(tree.body, text)


def _eval(node, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return RatFunc(node.value)
    if isinstance(node, ast.Name) and node.id in PARAMS:
        return RatFunc.var(node.id)
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            e = node.right
            sign = 1
            if isinstance(e, ast.UnaryOp) and isinstance(e.op, ast.USub):
                sign, e = -1, e.operand
            if not (isinstance(e, ast.Constant) and isinstance(e.value, int)):
                raise ValueError(f"non-integer exponent in {text!r}")
            return _eval(node.left, text) ** (sign * e.value)
        a, b = _eval(node.left, text), _eval(node.right, text)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            return a / b
    raise ValueError(f"unsupported syntax in {text!r}")


def as_ratfunc(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, str):
        return parse(x)
    return RatFunc(x)


ZERO = RatFunc()
ONE = RatFunc(1)
q = RatFunc.var("q")
t = RatFunc.var("t")
alpha = RatFunc.var("a")
u = RatFunc.var("u")


@lru_cache(maxsize=None)
def qt_monomial(i: int, j: int) -> RatFunc:
    return RatFunc.monomial(q=i, t=j)


def ratfunc_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    a, b = as_ratfunc(a), as_ratfunc(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def ratfunc_substitute(f: RatFunc, bindings: dict) -> RatFunc:
    return as_ratfunc(f).substitute({k: as_ratfunc(v) for k, v in bindings.items()})
