"""Weyl dimension polynomials for the classical series and G2, over exact rationals.

Label orderings (fixed; everything downstream depends on them):
  A_n  natural chain ordering,
  B_n  short simple root last,
  C_n  long simple root last,
  D_n  the two fork labels last (chain label, then fork-sum label),
  G2   (long, short).

Labels may be arbitrary rationals: the product formula is evaluated formally,
which is exactly what the shifted-weight machinery needs (labels like -1/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

_SERIES = ("A", "B", "C", "D", "G2")


@dataclass(frozen=True)
class SimpleFactor:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _SERIES:
            raise ValueError(f"unknown series {self.series!r}")
        if self.series == "G2" and self.rank != 2:
            raise ValueError("G2 has rank 2")
        if self.series == "D" and self.rank < 2:
            raise ValueError("D series needs rank >= 2")
        if self.rank < 1:
            raise ValueError("rank must be positive")

    def __str__(self):
        return "G2" if self.series == "G2" else f"{self.series}{self.rank}"


def parse_factor(text: str) -> SimpleFactor:
    t = text.strip().upper()
    if t == "G2":
        return SimpleFactor("G2", 2)
    if len(t) >= 2 and t[0] in "ABCD" and t[1:].isdigit():
        return SimpleFactor(t[0], int(t[1:]))
    raise ValueError(f"cannot parse simple factor {text!r}")


# G2 in coordinates (x2, x3) on the plane e1+e2+e3 = 0, Gram [[2,-1],[-1,2]];
# simple roots: long = e3-e2 -> (-1,1), short = e2 -> (1,0).
_G2_POS = ((1, 0), (0, 1), (-1, 1), (1, 1), (2, 1), (1, 2))


def _g2_pair(root, w):
    p, q = root
    y2, y3 = w
    return 2 * p * y2 + 2 * q * y3 - p * y3 - q * y2


def _pairs_product(y, rho):
    num = Fraction(1)
    den = Fraction(1)
    n = len(y)
    for i in range(n):
        for j in range(i + 1, n):
            num *= y[i] * y[i] - y[j] * y[j]
            den *= rho[i] * rho[i] - rho[j] * rho[j]
    return num / den


@lru_cache(maxsize=None)
def _weyl_dim(series: str, rank: int, labels: tuple) -> Fraction:
    n = rank
    if series == "A":
        # gl-style coordinates x_i = l_i + ... + l_n, x_{n+1} = 0; rho_i = n+1-i
        x = [Fraction(0)] * (n + 1)
        for i in range(n - 1, -1, -1):
            x[i] = x[i + 1] + labels[i]
        y = [x[i] + (n - i) for i in range(n + 1)]
        num = Fraction(1)
        den = 1
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                num *= y[i] - y[j]
                den *= j - i
        return num / den
    if series == "B":
        x = [sum(labels[i:n - 1], Fraction(0)) + Fraction(labels[n - 1], 2) for i in range(n)]
        rho = [Fraction(2 * (n - i) - 1, 2) for i in range(n)]
        y = [a + b for a, b in zip(x, rho)]
        short = Fraction(1)
        for yi, ri in zip(y, rho):
            short *= yi / ri
        return (_pairs_product(y, rho) if n > 1 else Fraction(1)) * short
    if series == "C":
        x = [sum(labels[i:], Fraction(0)) for i in range(n)]
        rho = [Fraction(n - i) for i in range(n)]
        y = [a + b for a, b in zip(x, rho)]
        long_ = Fraction(1)
        for yi, ri in zip(y, rho):
            long_ *= yi / ri
        return (_pairs_product(y, rho) if n > 1 else Fraction(1)) * long_
    if series == "D":
        half = Fraction(labels[n - 2] + labels[n - 1], 2)
        x = [sum(labels[i:n - 2], Fraction(0)) + half for i in range(n - 1)]
        x.append(Fraction(labels[n - 1] - labels[n - 2], 2))
        rho = [Fraction(n - 1 - i) for i in range(n)]
        y = [a + b for a, b in zip(x, rho)]
        return _pairs_product(y, rho)
    # G2, labels (long, short)
    a, b = labels
    w = (a + b, 2 * a + b)          # weight coords (x2, x3)
    rho = (Fraction(2), Fraction(3))
    y = (w[0] + rho[0], w[1] + rho[1])
    dim = Fraction(1)
    for root in _G2_POS:
        dim *= _g2_pair(root, y) / Fraction(_g2_pair(root, rho))
    return dim


def weyl_dim(factor: SimpleFactor, labels) -> Fraction:
    """Dimension polynomial of `factor` at an arbitrary rational label vector."""
    labels = tuple(Fraction(v) for v in labels)
    if len(labels) != factor.rank:
        raise ValueError(f"{factor} expects {factor.rank} labels, got {len(labels)}")
    return _weyl_dim(factor.series, factor.rank, labels)


def semisimple_dim(factors, label_vectors) -> Fraction:
    """Product of weyl_dim over aligned factor/label lists; empty product is 1."""
    factors = list(factors)
    label_vectors = list(label_vectors)
    if len(factors) != len(label_vectors):
        raise ValueError("factor and label lists are misaligned")
    dim = Fraction(1)
    for factor, labels in zip(factors, label_vectors):
        dim *= weyl_dim(factor, labels)
    return dim


def enumerate_labels(factor: SimpleFactor, target: int) -> list[tuple[int, ...]]:
    """All dominant integer label vectors of `factor` with weyl_dim == target.

    Box search relying on strict monotonicity of the dimension in every
    label over the dominant cone.
    """
    return [v for v, d in enumerate_bounded(factor, target) if d == target]


def enumerate_bounded(factor: SimpleFactor, bound: int) -> list[tuple[tuple[int, ...], Fraction]]:
    """All dominant integer label vectors with weyl_dim <= bound, with their dims."""
    out = []
    labels = [0] * factor.rank

    def rec(pos):
        if pos == factor.rank:
            out.append((tuple(labels), weyl_dim(factor, labels)))
            return
        v = 0
        while True:
            labels[pos] = v
            # remaining slots are 0 here, so this is the minimal completion
            if weyl_dim(factor, labels) > bound:
                labels[pos] = 0
                return
            rec(pos + 1)
            v += 1

    rec(0)
    return out
