"""Catalog of basic classical Lie superalgebras and their distinguished root data.

Conventions (fixed here, validated by the test suite against independent
anchors: odd-root counts, shifts, hidden-label relations, enumeration output):

  sl(p|q)      basis e1..ep, d1..dq; form diag(+1 x p, -1 x q);
               simple e1-e2, ..., e(p-1)-ep, ep-d1, d1-d2, ..., d(q-1)-dq.
  osp(2m+1|2n) basis d1..dn, e1..em; form diag(+1 x n, -1 x m);
               simple d-chain, dn-e1, e-chain, em; for m = 0 the tail is dn
               itself (the one non-isotropic odd simple root); hidden 2*dn.
  osp(2m|2n)   as above with fork tail e(m-1)-em, e(m-1)+em; hidden 2*dn.
  osp(2|2n)    basis d1..dn, e1; simple e1-d1, d-chain, 2*dn.
  osp(4|2;a)   basis e1,e2,e3; form diag(-(1+a)/2, 1/2, a/2);
               simple e1-e2-e3, 2*e2, 2*e3; hidden 2*e1.
  F(4)         basis d, e1,e2,e3; form diag(-3, +1,+1,+1);
               simple (d-e1-e2-e3)/2, e3, e2-e3, e1-e2; hidden d.
  G(3)         basis d, e2, e3 (with e1 = -e2-e3 eliminated);
               form (d,d) = -1, (ei,ei) = 1, (e2,e3) = -1/2;
               simple d-e2-e3, e2, e3-e2; hidden 2*d.

The odd Dynkin label is normalized by pair(a_s, a_{s+1}) when the odd simple
root is not last, and by -pair(a_s, a_{s-1}) when it is (sl(p|1) only); this
is the unique choice reproducing the typicality conditions of the golden
tables for every family at once.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linsolve import solve_linear
from .scalar import ALPHA, AffineScalar, ratio, scal, sym
from .weyldim import SimpleFactor


class ParseError(ValueError):
    """Algebra name does not match the grammar."""


class ValidationError(ValueError):
    """Well-formed name denoting an excluded or non-existent algebra."""


class NotTypeII(ValueError):
    """Operation requires a type II algebra."""


@dataclass(frozen=True)
class AlgebraId:
    """Validated identifier: sl(p|q), osp(M|2n), osp(4|2;a), F(4) or G(3)."""

    family: str                      # 'sl' | 'osp' | 'D21A' | 'F4' | 'G3'
    a: int = 0                       # sl: p,  osp: M
    b: int = 0                       # sl: q,  osp: n
    alpha: Fraction | None = None    # D21A only; None means symbolic

    @property
    def text(self) -> str:
        if self.family == "sl":
            return f"sl({self.a}|{self.b})"
        if self.family == "osp":
            return f"osp({self.a}|{2 * self.b})"
        if self.family == "D21A":
            return f"osp(4|2;{'a' if self.alpha is None else self.alpha})"
        return "F(4)" if self.family == "F4" else "G(3)"

    def __str__(self):
        return self.text


def sl(p: int, q: int) -> AlgebraId:
    if not (p >= q >= 1):
        raise ValidationError(f"sl({p}|{q}): need p >= q >= 1")
    if p == q == 1:
        raise ValidationError("sl(1|1) is excluded (not simple)")
    return AlgebraId("sl", p, q)


def osp(M: int, N: int) -> AlgebraId:
    """osp(M|N) with N = 2n even; osp(4|2) is normalized to osp(4|2;1)."""
    if N < 2 or N % 2:
        raise ValidationError(f"osp({M}|{N}): second argument must be even and positive")
    n = N // 2
    if M < 1:
        raise ValidationError(f"osp({M}|{N}): first argument must be positive")
    if M == 2 and n < 2:
        raise ValidationError("osp(2|2) is excluded (isomorphic to a lower sl)")
    if M == 4 and n == 1:
        return d21a(Fraction(1))
    return AlgebraId("osp", M, n)


def d21a(alpha: Fraction | None) -> AlgebraId:
    if alpha is not None:
        alpha = Fraction(alpha)
        if alpha in (0, -1):
            raise ValidationError(f"osp(4|2;{alpha}): parameter must avoid 0 and -1")
    return AlgebraId("D21A", 4, 1, alpha)


def f4() -> AlgebraId:
    return AlgebraId("F4")


def g3() -> AlgebraId:
    return AlgebraId("G3")


_RAT = r"-?\d+(?:/\d+)?"
_GRAMMAR = [
    (re.compile(r"sl\((\d+)\|(\d+)\)\Z"), lambda m: sl(int(m[1]), int(m[2]))),
    (re.compile(rf"osp\(4\|2;({_RAT})\)\Z"), lambda m: d21a(Fraction(m[1]))),
    (re.compile(r"osp\((\d+)\|(\d+)\)\Z"), lambda m: osp(int(m[1]), int(m[2]))),
    (re.compile(r"f\(4\)\Z"), lambda m: f4()),
    (re.compile(r"g\(3\)\Z"), lambda m: g3()),
]


def parse_algebra(text: str) -> AlgebraId:
    """Parse an algebra name: sl(INT|INT), osp(INT|INT), osp(4|2;RATIONAL), F(4), G(3)."""
    if any(c.isspace() for c in text):
        raise ParseError(f"whitespace not allowed in algebra name: {text!r}")
    low = text.lower()
    for pattern, build_id in _GRAMMAR:
        m = pattern.match(low)
        if m:
            return build_id(m)
    raise ParseError(f"cannot parse algebra name: {text!r}")


# --------------------------------------------------------------------------
# root system construction
# --------------------------------------------------------------------------

Weight = tuple  # tuple of AffineScalar, one entry per basis vector


@dataclass(frozen=True)
class Root:
    coords: Weight
    parity: str      # 'even' | 'odd'
    grade: int       # coefficient of the odd simple root in the expansion

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class EvenFactor:
    """One simple factor of the even part with its label bookkeeping.

    positions maps factor slots to g-label indices (0-based); None marks the
    hidden slot, whose label is the hidden Dynkin label rather than a label
    of the superalgebra's own diagram.  roots are the factor's simple roots
    in slot order.
    """

    factor: SimpleFactor
    positions: tuple
    roots: tuple


@dataclass(frozen=True, eq=False)
class RootSystem:
    algebra: AlgebraId
    basis: tuple                 # names, for printing
    gram: tuple                  # symmetric matrix of AffineScalar
    pos_even: tuple              # Root
    pos_odd: tuple               # Root
    simple: tuple                # Root, diagram order
    s: int                       # index of the odd simple root (0-based)
    hidden: Root | None
    rho0: Weight
    rho1: Weight
    odd_norm: AffineScalar | None   # None: odd simple root is non-isotropic
    factors: tuple               # EvenFactor
    has_center: bool
    kind: str                    # 'I0' | 'I1' | 'II'
    gauge: int | None            # coordinate fixed to 0 for sl (else None)

    @property
    def r(self) -> int:
        return len(self.simple)

    @property
    def N0(self) -> int:
        return len(self.pos_even)

    @property
    def N1(self) -> int:
        return len(self.pos_odd)

    @property
    def rho(self) -> Weight:
        return wsub(self.rho0, self.rho1)

    def pair(self, u: Weight, v: Weight) -> AffineScalar:
        return _pair(self.gram, u, v)

    def find_odd(self, coords: Weight) -> Root:
        coords = tuple(scal(c) for c in coords)
        for root in self.pos_odd:
            if root.coords == coords:
                return root
        raise KeyError(f"not a positive odd root: {coords}")


def _w(dim: int, entries: dict) -> Weight:
    v = [scal(0)] * dim
    for i, val in entries.items():
        v[i] = scal(val) if not isinstance(val, AffineScalar) else val
    return tuple(v)


def wadd(u: Weight, v: Weight) -> Weight:
    return tuple(a + b for a, b in zip(u, v))


def wsub(u: Weight, v: Weight) -> Weight:
    return tuple(a - b for a, b in zip(u, v))


def wscale(u: Weight, c) -> Weight:
    return tuple(a * scal(c) for a in u)


def _half_sum(roots, dim: int) -> Weight:
    total = tuple([scal(0)] * dim)
    for r in roots:
        total = wadd(total, r.coords)
    return wscale(total, Fraction(1, 2))


def _expand_in_simple(simple_coords, root_coords) -> list[Fraction]:
    cols = len(simple_coords)
    rows = len(root_coords)
    matrix = [[simple_coords[k][j].as_fraction() for k in range(cols)] for j in range(rows)]
    sol = solve_linear(matrix, [scal(c) for c in root_coords])
    return [x.as_fraction() for x in sol]


def _diag_gram(dim: int, values) -> tuple:
    return tuple(
        tuple(scal(values[i]) if i == j else scal(0) for j in range(dim))
        for i in range(dim)
    )


def _build_sl(p: int, q: int) -> dict:
    dim = p + q
    e = lambda i: i            # 0-based index of e_{i+1}
    d = lambda j: p + j
    gram = _diag_gram(dim, [1] * p + [-1] * q)
    pos_even = [_w(dim, {e(i): 1, e(j): -1}) for i in range(p) for j in range(i + 1, p)]
    pos_even += [_w(dim, {d(i): 1, d(j): -1}) for i in range(q) for j in range(i + 1, q)]
    pos_odd = [_w(dim, {e(i): 1, d(j): -1}) for i in range(p) for j in range(q)]
    simple = [_w(dim, {e(i): 1, e(i + 1): -1}) for i in range(p - 1)]
    simple.append(_w(dim, {e(p - 1): 1, d(0): -1}))
    simple += [_w(dim, {d(j): 1, d(j + 1): -1}) for j in range(q - 1)]
    factors = []
    if p >= 2:
        factors.append((SimpleFactor("A", p - 1), tuple(range(p - 1)), tuple(simple[: p - 1])))
    if q >= 2:
        factors.append((SimpleFactor("A", q - 1), tuple(range(p, p + q - 1)), tuple(simple[p:])))
    return dict(
        basis=tuple(f"e{i+1}" for i in range(p)) + tuple(f"d{j+1}" for j in range(q)),
        gram=gram, pos_even=pos_even, pos_odd=pos_odd, simple=simple,
        s=p - 1, hidden=None, factors=factors, has_center=True,
        kind="I0" if p == q else "I1", gauge=dim - 1,
    )


def _sp_block(dim, d, n):
    """Positive roots of the sp(2n) block on basis vectors d(0..n-1)."""
    roots = [_w(dim, {d(i): 1, d(j): -1}) for i in range(n) for j in range(i + 1, n)]
    roots += [_w(dim, {d(i): 1, d(j): 1}) for i in range(n) for j in range(i + 1, n)]
    roots += [_w(dim, {d(i): 2}) for i in range(n)]
    return roots


def _build_osp_B(m: int, n: int) -> dict:
    dim = n + m
    d = lambda i: i
    e = lambda j: n + j
    gram = _diag_gram(dim, [1] * n + [-1] * m)
    pos_even = _sp_block(dim, d, n)
    pos_even += [_w(dim, {e(i): 1, e(j): -1}) for i in range(m) for j in range(i + 1, m)]
    pos_even += [_w(dim, {e(i): 1, e(j): 1}) for i in range(m) for j in range(i + 1, m)]
    pos_even += [_w(dim, {e(i): 1}) for i in range(m)]
    pos_odd = [_w(dim, {d(i): 1}) for i in range(n)]
    pos_odd += [_w(dim, {d(i): 1, e(j): sgn}) for i in range(n) for j in range(m) for sgn in (1, -1)]
    simple = [_w(dim, {d(i): 1, d(i + 1): -1}) for i in range(n - 1)]
    if m >= 1:
        simple.append(_w(dim, {d(n - 1): 1, e(0): -1}))
        simple += [_w(dim, {e(j): 1, e(j + 1): -1}) for j in range(m - 1)]
        simple.append(_w(dim, {e(m - 1): 1}))
    else:
        simple.append(_w(dim, {d(n - 1): 1}))
    hidden = _w(dim, {d(n - 1): 2})
    sp_roots = tuple(simple[: n - 1]) + (hidden,)
    factors = [(SimpleFactor("C", n), tuple(range(n - 1)) + (None,), sp_roots)]
    if m >= 1:
        factors.append((SimpleFactor("B", m), tuple(range(n, n + m)), tuple(simple[n:])))
    return dict(
        basis=tuple(f"d{i+1}" for i in range(n)) + tuple(f"e{j+1}" for j in range(m)),
        gram=gram, pos_even=pos_even, pos_odd=pos_odd, simple=simple,
        s=n - 1, hidden=hidden, factors=factors, has_center=False, kind="II", gauge=None,
    )


def _build_osp_D(m: int, n: int) -> dict:
    dim = n + m
    d = lambda i: i
    e = lambda j: n + j
    gram = _diag_gram(dim, [1] * n + [-1] * m)
    pos_even = _sp_block(dim, d, n)
    pos_even += [_w(dim, {e(i): 1, e(j): -1}) for i in range(m) for j in range(i + 1, m)]
    pos_even += [_w(dim, {e(i): 1, e(j): 1}) for i in range(m) for j in range(i + 1, m)]
    pos_odd = [_w(dim, {d(i): 1, e(j): sgn}) for i in range(n) for j in range(m) for sgn in (1, -1)]
    simple = [_w(dim, {d(i): 1, d(i + 1): -1}) for i in range(n - 1)]
    simple.append(_w(dim, {d(n - 1): 1, e(0): -1}))
    simple += [_w(dim, {e(j): 1, e(j + 1): -1}) for j in range(m - 1)]
    simple.append(_w(dim, {e(m - 2): 1, e(m - 1): 1}))
    hidden = _w(dim, {d(n - 1): 2})
    sp_roots = tuple(simple[: n - 1]) + (hidden,)
    factors = [
        (SimpleFactor("C", n), tuple(range(n - 1)) + (None,), sp_roots),
        (SimpleFactor("D", m), tuple(range(n, n + m)), tuple(simple[n:])),
    ]
    return dict(
        basis=tuple(f"d{i+1}" for i in range(n)) + tuple(f"e{j+1}" for j in range(m)),
        gram=gram, pos_even=pos_even, pos_odd=pos_odd, simple=simple,
        s=n - 1, hidden=hidden, factors=factors, has_center=False, kind="II", gauge=None,
    )


def _build_osp_C(n: int) -> dict:
    dim = n + 1
    d = lambda i: i
    e0 = n
    gram = _diag_gram(dim, [1] * n + [-1])
    pos_even = _sp_block(dim, d, n)
    pos_odd = [_w(dim, {e0: 1, d(i): sgn}) for i in range(n) for sgn in (-1, 1)]
    simple = [_w(dim, {e0: 1, d(0): -1})]
    simple += [_w(dim, {d(i): 1, d(i + 1): -1}) for i in range(n - 1)]
    simple.append(_w(dim, {d(n - 1): 2}))
    factors = [(SimpleFactor("C", n), tuple(range(1, n + 1)), tuple(simple[1:]))]
    return dict(
        basis=tuple(f"d{i+1}" for i in range(n)) + ("e1",),
        gram=gram, pos_even=pos_even, pos_odd=pos_odd, simple=simple,
        s=0, hidden=None, factors=factors, has_center=True, kind="I1", gauge=None,
    )


def _build_d21a(alpha: Fraction | None) -> dict:
    a = sym(ALPHA) if alpha is None else scal(alpha)
    half = Fraction(1, 2)
    gram = _diag_gram(3, [-(a + 1) * half, scal(half), a * half])
    pos_even = [_w(3, {i: 2}) for i in range(3)]
    pos_odd = [_w(3, {0: 1, 1: s2, 2: s3}) for s2 in (1, -1) for s3 in (1, -1)]
    simple = [_w(3, {0: 1, 1: -1, 2: -1}), _w(3, {1: 2}), _w(3, {2: 2})]
    hidden = _w(3, {0: 2})
    factors = [
        (SimpleFactor("A", 1), (None,), (hidden,)),
        (SimpleFactor("A", 1), (1,), (simple[1],)),
        (SimpleFactor("A", 1), (2,), (simple[2],)),
    ]
    return dict(
        basis=("e1", "e2", "e3"), gram=gram, pos_even=pos_even, pos_odd=pos_odd,
        simple=simple, s=0, hidden=hidden, factors=factors, has_center=False,
        kind="II", gauge=None,
    )


def _build_f4() -> dict:
    dim = 4
    gram = _diag_gram(dim, [-3, 1, 1, 1])
    half = Fraction(1, 2)
    pos_even = [_w(dim, {0: 1})]
    pos_even += [_w(dim, {i: 1, j: -1}) for i in (1, 2) for j in range(i + 1, 4)]
    pos_even += [_w(dim, {i: 1, j: 1}) for i in (1, 2) for j in range(i + 1, 4)]
    pos_even += [_w(dim, {i: 1}) for i in (1, 2, 3)]
    pos_odd = [
        _w(dim, {0: half, 1: s1 * half, 2: s2 * half, 3: s3 * half})
        for s1 in (1, -1) for s2 in (1, -1) for s3 in (1, -1)
    ]
    simple = [
        _w(dim, {0: half, 1: -half, 2: -half, 3: -half}),
        _w(dim, {3: 1}),
        _w(dim, {2: 1, 3: -1}),
        _w(dim, {1: 1, 2: -1}),
    ]
    hidden = _w(dim, {0: 1})
    so7_roots = (_w(dim, {1: 1, 2: -1}), _w(dim, {2: 1, 3: -1}), _w(dim, {3: 1}))
    factors = [
        (SimpleFactor("A", 1), (None,), (hidden,)),
        (SimpleFactor("B", 3), (3, 2, 1), so7_roots),
    ]
    return dict(
        basis=("d", "e1", "e2", "e3"), gram=gram, pos_even=pos_even, pos_odd=pos_odd,
        simple=simple, s=0, hidden=hidden, factors=factors, has_center=False,
        kind="II", gauge=None,
    )


def _build_g3() -> dict:
    # basis (d, e2, e3); e1 = -e2-e3 is eliminated
    dim = 3
    half = Fraction(1, 2)
    gram = (
        (scal(-1), scal(0), scal(0)),
        (scal(0), scal(1), scal(-half)),
        (scal(0), scal(-half), scal(1)),
    )
    g2_pos = [(1, 0), (0, 1), (-1, 1), (1, 1), (2, 1), (1, 2)]  # coords on (e2, e3)
    pos_even = [_w(dim, {0: 2})] + [_w(dim, {1: p, 2: q}) for p, q in g2_pos]
    # odd roots d + x with x in {0, +-e1, +-e2, +-e3}; e1 = -(e2+e3)
    odd_eps = [(0, 0), (-1, -1), (1, 1), (1, 0), (-1, 0), (0, 1), (0, -1)]
    pos_odd = [_w(dim, {0: 1, 1: p, 2: q}) for p, q in odd_eps]
    simple = [_w(dim, {0: 1, 1: -1, 2: -1}), _w(dim, {1: 1}), _w(dim, {1: -1, 2: 1})]
    hidden = _w(dim, {0: 2})
    factors = [
        (SimpleFactor("A", 1), (None,), (hidden,)),
        (SimpleFactor("G2", 2), (2, 1), (simple[2], simple[1])),
    ]
    return dict(
        basis=("d", "e2", "e3"), gram=gram, pos_even=pos_even, pos_odd=pos_odd,
        simple=simple, s=0, hidden=hidden, factors=factors, has_center=False,
        kind="II", gauge=None,
    )


def _builder(aid: AlgebraId) -> dict:
    if aid.family == "sl":
        return _build_sl(aid.a, aid.b)
    if aid.family == "osp":
        M, n = aid.a, aid.b
        if M % 2:
            return _build_osp_B((M - 1) // 2, n)
        if M == 2:
            return _build_osp_C(n)
        return _build_osp_D(M // 2, n)
    if aid.family == "D21A":
        return _build_d21a(aid.alpha)
    if aid.family == "F4":
        return _build_f4()
    return _build_g3()


def _pair(gram, u: Weight, v: Weight) -> AffineScalar:
    total = scal(0)
    for i, ui in enumerate(u):
        ui = scal(ui)
        if ui.is_zero:
            continue
        row = gram[i]
        for j, vj in enumerate(v):
            vj = scal(vj)
            if not vj.is_zero:
                total = total + ui * row[j] * vj
    return total


@lru_cache(maxsize=None)
def build(aid: AlgebraId) -> RootSystem:
    """Construct the full distinguished root system for a valid AlgebraId."""
    data = _builder(aid)
    simple = data["simple"]
    s = data["s"]
    gram = data["gram"]
    dim = len(data["basis"])
    r = len(simple)

    def mk_root(coords, parity):
        coeffs = _expand_in_simple(simple, coords)
        for c in coeffs:
            if c.denominator != 1 or c < 0:
                raise AssertionError(f"root {coords} is not a nonneg integer combination")
        return Root(coords, parity, int(coeffs[s]))

    pos_even = tuple(mk_root(w, "even") for w in data["pos_even"])
    pos_odd = tuple(mk_root(w, "odd") for w in data["pos_odd"])
    simple_roots = tuple(
        Root(w, "odd" if i == s else "even", 1 if i == s else 0)
        for i, w in enumerate(simple)
    )
    hidden = mk_root(data["hidden"], "even") if data["hidden"] is not None else None

    a_s = simple[s]
    odd_norm = None
    if _pair(gram, a_s, a_s).is_zero:
        if s < r - 1:
            norm = _pair(gram, a_s, simple[s + 1])
        else:
            norm = -_pair(gram, a_s, simple[s - 1])
        odd_norm = scal(norm.as_fraction())

    return RootSystem(
        algebra=aid, basis=data["basis"], gram=gram,
        pos_even=pos_even, pos_odd=pos_odd, simple=simple_roots, s=s,
        hidden=hidden, rho0=_half_sum(pos_even, dim), rho1=_half_sum(pos_odd, dim),
        odd_norm=odd_norm,
        factors=tuple(
            EvenFactor(f, p, tuple(mk_root(c, "even") for c in rts))
            for f, p, rts in data["factors"]
        ),
        has_center=data["has_center"], kind=data["kind"], gauge=data["gauge"],
    )


def classify(aid: AlgebraId) -> str:
    """'I0', 'I1' or 'II' per the structure of the even part's action."""
    return build(aid).kind


def shift(rs: RootSystem) -> tuple[Fraction, int]:
    """Hidden-label shift 2(rho1, a_s0)/(a_s0, a_s0) and its integer part."""
    if rs.hidden is None:
        raise NotTypeII(f"{rs.algebra} is type I: no hidden simple root")
    h = rs.hidden.coords
    value = ratio(rs.pair(rs.rho1, h) * 2, rs.pair(h, h))
    return value, math.floor(value)


def even_part(rs: RootSystem) -> tuple[tuple[EvenFactor, ...], bool]:
    """Simple factors of the even part (with label positions) and a center flag."""
    return rs.factors, rs.has_center


def cartan_matrix(rs: RootSystem):
    """Cartan matrix in the distinguished basis; entries may carry the parameter."""
    r = rs.r
    rows = []
    for i in range(r):
        ai = rs.simple[i].coords
        aii = rs.pair(ai, ai)
        row = []
        if not aii.is_zero:
            for j in range(r):
                row.append(scal(ratio(rs.pair(ai, rs.simple[j].coords) * 2, aii)))
        else:
            ip = i + 1 if i < r - 1 else i - 1
            norm = rs.pair(ai, rs.simple[ip].coords)
            for j in range(r):
                row.append(rs.pair(ai, rs.simple[j].coords) / norm.as_fraction())
        rows.append(tuple(row))
    return tuple(rows)


def _blob(rs: RootSystem, i: int) -> str:
    root = rs.simple[i]
    if root.parity == "even":
        return "O"
    return "X" if rs.pair(root.coords, root.coords).is_zero else "B"


def _bond(rs: RootSystem, cartan, i: int, j: int) -> str:
    """Bond between adjacent simple roots: lines plus an arrow towards the shorter."""
    if rs.algebra.family == "D21A":
        return "--"
    aij, aji = cartan[i][j], cartan[j][i]
    lines = max(abs(aij.as_fraction()), abs(aji.as_fraction()))
    if lines == 0:
        return "  "
    if lines == 1:
        return "--"
    li = rs.pair(rs.simple[i].coords, rs.simple[i].coords).as_fraction()
    lj = rs.pair(rs.simple[j].coords, rs.simple[j].coords).as_fraction()
    arrow = ">" if abs(li) > abs(lj) else "<"
    mark = "=" if lines == 2 else "#"
    return mark + arrow + mark


def diagram(rs: RootSystem) -> str:
    """ASCII Kac-Dynkin diagram: O even, X isotropic odd, B non-isotropic odd."""
    cartan = cartan_matrix(rs)
    r = rs.r
    forked = rs.algebra.family == "D21A" or (
        rs.algebra.family == "osp" and rs.algebra.a % 2 == 0 and rs.algebra.a >= 4
    )
    if not forked:
        line = _blob(rs, 0)
        for i in range(1, r):
            line += _bond(rs, cartan, i - 1, i) + _blob(rs, i)
        return line
    # fork: chain 0..r-3, then two single-bond end nodes r-2 and r-1
    line = _blob(rs, 0)
    for i in range(1, r - 2):
        line += _bond(rs, cartan, i - 1, i) + _blob(rs, i)
    pad = len(line) - 1
    top = " " * (pad + 2) + _blob(rs, r - 2)
    up = " " * (pad + 1) + "/"
    down = " " * (pad + 1) + "\\"
    bottom = " " * (pad + 2) + _blob(rs, r - 1)
    return "\n".join([top, up, line, down, bottom])


def expand_in_simple(rs: RootSystem, root: Root) -> tuple[Fraction, ...]:
    """Coefficients of a positive root over the simple roots (nonneg integers)."""
    return tuple(_expand_in_simple([x.coords for x in rs.simple], root.coords))
