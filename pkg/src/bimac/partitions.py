"""Partitions, pairs of partitions, superpartitions and their orders."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import factorial, prod
from typing import Callable, Iterable, Sequence, Tuple

Partition = Tuple[int, ...]
PairLabel = Tuple[Partition, Partition]

EMPTY: Partition = ()


def partition(parts: Iterable[int]) -> Partition:
    """Normalize: sort decreasingly and drop zeros."""
    return tuple(sorted((int(p) for p in parts if p), reverse=True))


@lru_cache(maxsize=None)
def partitions(n: int, maxpart: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in reverse lexicographic order."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def size(p: Partition) -> int:
    return sum(p)


@lru_cache(maxsize=None)
def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def cells(p: Partition) -> list[tuple[int, int]]:
    """Cells (row, col), 1-based, row by row."""
    return [(i + 1, j + 1) for i, r in enumerate(p) for j in range(r)]


def partition_stats(p: Partition, cell: tuple[int, int]) -> dict[str, int]:
    i, j = cell
    if not (1 <= i <= len(p) and 1 <= j <= p[i - 1]):
        raise ValueError(f"cell {cell} outside diagram of {p}")
    pc = conjugate(p)
    return {"arm": p[i - 1] - j, "leg": pc[j - 1] - i, "coarm": j - 1, "coleg": i - 1}


def arm(p: Partition, i: int, j: int) -> int:
    return p[i - 1] - j


def leg(p: Partition, i: int, j: int) -> int:
    return conjugate(p)[j - 1] - i


def n_stat(p: Partition) -> int:
    return sum(i * x for i, x in enumerate(p))


def length(p: Partition) -> int:
    return len(p)


@lru_cache(maxsize=None)
def z_factor(p: Partition) -> int:
    """z_λ = Π i^{m_i} m_i!."""
    out = 1
    for r in set(p):
        k = p.count(r)
        out *= r**k * factorial(k)
    return out


def hook_count(p: Partition) -> int:
    """Number of standard tableaux of shape p."""
    pc = conjugate(p)
    hooks = prod(p[i - 1] - j + pc[j - 1] - i + 1 for i, j in cells(p))
    return factorial(size(p)) // hooks


def _psums(p: Sequence[int], n: int) -> list[int]:
    return list(accumulate(list(p) + [0] * (n - len(p))))


def dominance_leq(a: Partition, b: Partition, relaxed: bool = False) -> bool:
    """a ≤ b in dominance; unequal degrees are incomparable unless relaxed."""
    if not relaxed and size(a) != size(b):
        return False
    n = max(len(a), len(b))
    return all(x <= y for x, y in zip(_psums(a, n), _psums(b, n)))


def pair_size(p: PairLabel) -> int:
    return size(p[0]) + size(p[1])


def pair_dominance_leq(a: PairLabel, b: PairLabel) -> bool:
    """(λ,μ) ≤ (ω,η): λ ≤ ω and |λ|+μ ≤ |ω|+η on partial sums."""
    if pair_size(a) != pair_size(b):
        raise ValueError(f"pairs {a} and {b} have different total degree")
    (lam, mu), (om, eta) = a, b
    n = max(len(lam), len(om))
    if not all(x <= y for x, y in zip(_psums(lam, n), _psums(om, n))):
        return False
    k = max(len(mu), len(eta))
    return all(size(lam) + x <= size(om) + y
               for x, y in zip(_psums(mu, k), _psums(eta, k)))


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[PairLabel, ...]:
    out = []
    for k in range(n, -1, -1):
        for lam in partitions(k):
            for mu in partitions(n - k):
                out.append((lam, mu))
    return tuple(out)


def conjugate_pair(p: PairLabel) -> PairLabel:
    """(λ,μ) -> (μ',λ'), the stable image of superpartition conjugation."""
    return (conjugate(p[1]), conjugate(p[0]))


def linear_extension(labels: Iterable, leq: Callable, key: Callable = repr) -> list:
    """Sort a finite poset bottom-up, breaking ties with key."""
    rest = sorted(set(labels), key=key)
    out = []
    while rest:
        for x in rest:
            if not any(y != x and leq(y, x) for y in rest):
                out.append(x)
                rest.remove(x)
                break
        else:
            raise ValueError("relation is not a partial order")
    return out


def staircase(m: int) -> Partition:
    """δ^m = (m-1, ..., 1, 0) without the zero."""
    return tuple(range(m - 1, 0, -1))


# superpartitions

@dataclass(frozen=True, order=True)
class SuperPartition:
    anti: Tuple[int, ...]
    sym: Partition

    def __post_init__(self):
        a = tuple(self.anti)
        if any(x < 0 for x in a) or any(x <= y for x, y in zip(a, a[1:])):
            raise ValueError(f"fermionic part {a} is not strictly decreasing")
        object.__setattr__(self, "anti", a)
        object.__setattr__(self, "sym", partition(self.sym))

    @property
    def m(self) -> int:
        return len(self.anti)

    @property
    def star(self) -> Partition:
        return partition(self.anti + self.sym)

    @property
    def circ(self) -> Partition:
        return partition(tuple(x + 1 for x in self.anti) + self.sym)

    @property
    def degree(self) -> int:
        return sum(self.anti) + sum(self.sym)

    def bidegree(self) -> tuple[int, int]:
        return self.degree, self.m

    def rows(self) -> list[tuple[int, bool]]:
        """Diagram rows top to bottom as (boxes, ends_in_circle)."""
        rs = [(x, True) for x in self.anti] + [(x, False) for x in self.sym]
        rs.sort(key=lambda r: (r[0] + r[1], r[0]), reverse=True)
        return rs

    def to_pair(self) -> PairLabel:
        m = self.m
        lam = partition(a - (m - 1 - i) for i, a in enumerate(self.anti))
        return (lam, self.sym)

    @staticmethod
    def from_pair(p: PairLabel, m: int) -> "SuperPartition":
        lam, mu = p
        if len(lam) > m:
            raise ValueError(f"ℓ({lam}) > m = {m}")
        padded = list(lam) + [0] * (m - len(lam))
        return SuperPartition(tuple(x + m - 1 - i for i, x in enumerate(padded)), mu)

    @staticmethod
    def from_star_circ(star: Partition, circ: Partition) -> "SuperPartition":
        k = max(len(star), len(circ))
        s = list(star) + [0] * (k - len(star))
        c = list(circ) + [0] * (k - len(circ))
        anti, sym = [], []
        for x, y in zip(s, c):
            if y == x + 1:
                anti.append(x)
            elif y == x:
                if x:
                    sym.append(x)
            else:
                raise ValueError(f"{circ}/{star} is not a valid circle strip")
        return SuperPartition(tuple(sorted(anti, reverse=True)), tuple(sym))

    def conjugate(self) -> "SuperPartition":
        return SuperPartition.from_star_circ(conjugate(self.star), conjugate(self.circ))

    def __str__(self):
        return format_super(self)


def super_from_pair(p: PairLabel, m: int) -> SuperPartition:
    return SuperPartition.from_pair(p, m)


def conjugate_super(L: SuperPartition) -> SuperPartition:
    return L.conjugate()


def super_dominance_leq(L: SuperPartition, O: SuperPartition) -> bool:
    """L ≤ O iff L* ≤ O* and L⊛ ≤ O⊛."""
    if L.m != O.m or L.degree != O.degree:
        raise ValueError(f"{L} and {O} have different bidegrees")
    return dominance_leq(L.star, O.star) and dominance_leq(L.circ, O.circ)


@lru_cache(maxsize=None)
def superpartitions(d: int, m: int) -> tuple[SuperPartition, ...]:
    """All superpartitions with |Λ*| = d and fermionic degree m."""
    n = d - m * (m - 1) // 2
    if n < 0:
        return ()
    return tuple(SuperPartition.from_pair(p, m) for p in pairs(n) if len(p[0]) <= m)


def super_stats(L: SuperPartition) -> dict:
    rows = L.rows()
    star = tuple(r for r, _ in rows)
    circ_rows = {i + 1 for i, (_, f) in enumerate(rows) if f}
    sc, cc = conjugate(partition(star)), conjugate(L.circ)
    circ_cols = {j + 1 for j in range(len(cc)) if cc[j] > (sc[j] if j < len(sc) else 0)}
    boxes = [(i + 1, j + 1) for i, r in enumerate(star) for j in range(r)]
    ferm = {c for c in boxes if c[0] in circ_rows and c[1] in circ_cols}
    bos = [c for c in boxes if c not in ferm]
    bos_set = set(bos)
    d_b = sum(1 for (i, j) in bos for k in range(1, i) if (k, j) not in bos_set)
    d_f = sum(1 for (i, j) in ferm for k in range(1, i) if (k, j) not in ferm)
    m = L.m
    n_skew = n_stat(L.circ) - n_stat(tuple(range(m, 0, -1)))
    return {"bosonic_boxes": sorted(bos), "fermionic_boxes": sorted(ferm),
            "d_B": d_b, "d_F": d_f, "n_skew": n_skew}


# text forms

def format_partition(p: Partition) -> str:
    return ",".join(map(str, p)) if p else "∅"


def format_pair(p: PairLabel) -> str:
    return f"{format_partition(p[0])}|{format_partition(p[1])}"


def format_super(L: SuperPartition) -> str:
    return ",".join(map(str, L.anti)) + ";" + ",".join(map(str, L.sym))


def parse_partition(text: str) -> Partition:
    s = text.strip().strip("()")
    if s in ("", "∅", "-", "0"):
        return ()
    try:
        parts = [int(x) for x in s.split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}") from exc
    if any(x < 0 for x in parts) or any(x < y for x, y in zip(parts, parts[1:])):
        raise ValueError(f"bad partition {text!r}")
    return partition(parts)


def parse_pair(text: str) -> PairLabel:
    if text.count("|") != 1:
        raise ValueError(f"bad pair {text!r}; expected 'λ|μ'")
    a, b = text.split("|")
    return (parse_partition(a), parse_partition(b))


def parse_super(text: str) -> SuperPartition:
    if text.count(";") != 1:
        raise ValueError(f"bad superpartition {text!r}; expected 'a1,..;s1,..'")
    a, b = text.strip().strip("()").split(";")
    try:
        anti = tuple(int(x) for x in a.split(",") if x.strip())
    except ValueError as exc:
        raise ValueError(f"bad superpartition {text!r}") from exc
    return SuperPartition(anti, parse_partition(b))
