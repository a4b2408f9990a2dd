"""Highest-weight bookkeeping, the typicality test and the typical dimension formula.

A highest weight is stored both as Dynkin labels and as coordinates over the
root system's basis; the two are related by an exact linear system whose
pivots are parameter-free, so coordinates may carry the free odd label of a
type I algebra while the osp(4|2;a) form carries the parameter instead
(never both -- products of two parameter-dependent scalars cannot occur).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import rootdata
from .linsolve import solve_linear
from .rootdata import Root, RootSystem, Weight, wadd
from .scalar import (ALPHA, ODD_LABEL, AffineScalar, NonProportional, ratio,
                     scal, sym)
from .weyldim import SimpleFactor, semisimple_dim


class NonDominant(ValueError):
    """An even Dynkin label is negative or not an integer."""


class NonIntegralHidden(ValueError):
    """The hidden Dynkin label is not a nonnegative integer."""


class ParamMisuse(ValueError):
    """A free parameter appears in a label where the context forbids it."""


class OutOfRange(ValueError):
    """supplementary_check called above the shift's integer part."""


@dataclass(frozen=True, eq=False)
class HighestWeight:
    rs: RootSystem
    g_labels: tuple          # AffineScalar, one per simple root
    coords: Weight
    ls0: AffineScalar | None  # hidden label (type II), None for type I

    @property
    def param(self) -> str | None:
        for v in self.g_labels:
            if v.param is not None:
                return v.param
        return None


@dataclass(frozen=True)
class ShiftedWeight:
    factors: tuple           # SimpleFactor per even-part factor
    labels: tuple            # per-factor tuples of Fraction


@dataclass(frozen=True)
class TypicalityReport:
    verdict: str             # 'typical' | 'atypical' | 'conditional'
    vanishing: tuple         # Roots with (L+rho, root) identically zero
    excluded: tuple          # sorted Fractions: parameter values to exclude
    param: str | None
    domain_excluded: tuple   # parameter values outside the algebra's domain


def _is_symbolic_d21a(rs: RootSystem) -> bool:
    return rs.algebra.family == "D21A" and rs.algebra.alpha is None


def _label_of_root(rs: RootSystem, lam: Weight, root: Weight) -> AffineScalar:
    """2(lam, root)/(root, root), exact even when the form carries the parameter."""
    norm = rs.pair(root, root)
    num = rs.pair(lam, root) * 2
    if norm.is_rational:
        return num / norm.as_fraction()
    return scal(ratio(num, norm))


def labels_from_coords(rs: RootSystem, coords: Weight) -> tuple:
    out = []
    for i, root in enumerate(rs.simple):
        if i == rs.s and rs.odd_norm is not None:
            out.append(rs.pair(coords, root.coords) / rs.odd_norm.as_fraction())
        else:
            out.append(_label_of_root(rs, coords, root.coords))
    return tuple(out)


def _coord_rows(rs: RootSystem, equations) -> list:
    """Coefficient rows of the linear system mapping coords to label values.

    equations: list of ('even', root) | ('odd', root) | ('gauge', index).
    """
    dim = len(rs.basis)
    basis_vecs = [tuple(scal(1 if k == j else 0) for k in range(dim)) for j in range(dim)]
    rows = []
    for kind, data in equations:
        if kind == "gauge":
            rows.append([Fraction(1 if j == data else 0) for j in range(dim)])
            continue
        root = data
        if kind == "even":
            norm = rs.pair(root, root)
            coeffs = []
            for e in basis_vecs:
                num = rs.pair(e, root) * 2
                if norm.is_rational:
                    coeffs.append(num.as_fraction() / norm.as_fraction())
                else:
                    coeffs.append(ratio(num, norm))
            rows.append(coeffs)
        else:  # odd isotropic, normalized by odd_norm
            k = rs.odd_norm.as_fraction()
            rows.append([(rs.pair(e, root) / k).as_fraction() for e in basis_vecs])
    return rows


def _finish(rs: RootSystem, coords: Weight, check: bool = True) -> HighestWeight:
    g_labels = labels_from_coords(rs, coords)
    ls0 = None
    if rs.hidden is not None:
        ls0 = _label_of_root(rs, coords, rs.hidden.coords)
    hw = HighestWeight(rs, g_labels, tuple(coords), ls0)
    if check:
        _validate(hw)
    return hw


def _validate(hw: HighestWeight):
    rs = hw.rs
    params = {v.param for v in hw.g_labels if v.param is not None}
    if len(params) > 1:
        raise ParamMisuse(f"labels mix parameters {sorted(params)}")
    for i, v in enumerate(hw.g_labels):
        if i == rs.s:
            continue
        if v.param is not None:
            raise ParamMisuse(f"even label {i + 1} carries parameter {v.param!r}")
        if not v.is_nonneg_integer():
            raise NonDominant(f"even label {i + 1} = {v} is not a nonnegative integer")
    odd = hw.g_labels[rs.s]
    if odd.param == ODD_LABEL and rs.kind == "II":
        raise ParamMisuse("free odd label is only available for type I algebras")
    if odd.param == ALPHA and not _is_symbolic_d21a(rs):
        raise ParamMisuse("parameter 'a' is reserved for symbolic osp(4|2;a)")
    if hw.ls0 is not None and not hw.ls0.is_nonneg_integer():
        raise NonIntegralHidden(f"hidden label {hw.ls0} is not a nonnegative integer")


def hw_from_coords(rs: RootSystem, coords, check: bool = False) -> HighestWeight:
    """Direct constructor from coordinates; check=False admits formal weights."""
    return _finish(rs, tuple(scal(c) for c in coords), check=check)


def from_g_labels(rs: RootSystem, labels) -> HighestWeight:
    """Highest weight from the Dynkin labels attached to the diagram's nodes."""
    labels = tuple(scal(v) for v in labels)
    if len(labels) != rs.r:
        raise ValueError(f"{rs.algebra} has {rs.r} labels, got {len(labels)}")
    if _is_symbolic_d21a(rs):
        return _finish(rs, _d21a_coords(labels))
    equations = []
    for i, root in enumerate(rs.simple):
        if i == rs.s and rs.odd_norm is not None:
            equations.append(("odd", root.coords))
        else:
            equations.append(("even", root.coords))
    if rs.gauge is not None:
        equations.append(("gauge", rs.gauge))
        labels = labels + (scal(0),)
    coords = solve_linear(_coord_rows(rs, equations), list(labels))
    return _finish(rs, tuple(coords))


def _d21a_coords(labels) -> Weight:
    """Closed-form label inversion for symbolic osp(4|2;a).

    The odd label is (a1*(1+a) + a2 + a3*a)/2 for even-part labels
    (a1, a2, a3), so its constant and slope parts each determine a1;
    they must agree.
    """
    l1, l2, l3 = labels
    if l2.param is not None or l3.param is not None:
        raise ParamMisuse("osp(4|2;a) even labels must be parameter-free")
    a1_const = 2 * l1.const - l2.const
    a1_slope = 2 * l1.slope - l3.const
    if a1_const != a1_slope:
        raise NonDominant(
            f"odd label {l1} is not of the form (a1*(1+a) + l2 + l3*a)/2 "
            f"for an integral hidden label"
        )
    return tuple(scal(v) for v in (a1_const, l2.const, l3.const))


def from_even_labels(rs: RootSystem, even, ls0=None) -> HighestWeight:
    """Highest weight from even-part factor labels (hidden slot included).

    For type I the odd label becomes the free parameter t; for type II the
    hidden slot of the relevant factor carries the hidden label (ls0, if
    given, must agree with it).
    """
    even = [tuple(scal(v) for v in vec) for vec in even]
    if len(even) != len(rs.factors):
        raise ValueError(f"{rs.algebra} has {len(rs.factors)} even factors, got {len(even)}")
    equations, rhs = [], []
    for fac, vec in zip(rs.factors, even):
        if len(vec) != fac.factor.rank:
            raise ValueError(f"factor {fac.factor} expects {fac.factor.rank} labels")
        for pos, root, value in zip(fac.positions, fac.roots, vec):
            equations.append(("even", root.coords))
            rhs.append(value)
            if pos is None and ls0 is not None and scal(ls0) != value:
                raise ValueError(f"hidden slot {value} conflicts with ls0={ls0}")
    if rs.kind != "II":
        equations.append(("odd", rs.simple[rs.s].coords))
        rhs.append(sym(ODD_LABEL))
        if rs.gauge is not None:
            equations.append(("gauge", rs.gauge))
            rhs.append(scal(0))
    if rs.algebra.family == "D21A":
        coords = tuple(v.as_fraction() for vec in even for v in vec)
        return _finish(rs, tuple(scal(c) for c in coords))
    coords = solve_linear(_coord_rows(rs, equations), rhs)
    return _finish(rs, tuple(coords))


def even_labels_unshifted(hw: HighestWeight) -> tuple:
    """Per-factor label tuples with the hidden slot carrying ls0 itself."""
    out = []
    for fac in hw.rs.factors:
        vec = []
        for pos in fac.positions:
            value = hw.ls0 if pos is None else hw.g_labels[pos]
            vec.append(value.as_fraction())
        out.append(tuple(vec))
    return tuple(out)


def shifted(hw: HighestWeight) -> ShiftedWeight:
    """Even-part labels with the hidden label reduced by the shift (type II)."""
    labels = [list(vec) for vec in even_labels_unshifted(hw)]
    if hw.rs.kind == "II":
        value, _ = rootdata.shift(hw.rs)
        for fac, vec in zip(hw.rs.factors, labels):
            for k, pos in enumerate(fac.positions):
                if pos is None:
                    vec[k] -= value
    return ShiftedWeight(
        tuple(f.factor for f in hw.rs.factors),
        tuple(tuple(vec) for vec in labels),
    )


def typical_dim(hw: HighestWeight) -> Fraction:
    """2^N1 times the even-part Weyl dimension at the shifted highest weight."""
    sw = shifted(hw)
    return Fraction(2) ** hw.rs.N1 * semisimple_dim(sw.factors, sw.labels)


def dim_via_root_product(hw: HighestWeight) -> Fraction:
    """Independent route: 2^N1 * prod over positive even roots of (L+rho,a)/(rho0,a)."""
    rs = hw.rs
    lam_rho = wadd(hw.coords, rs.rho)
    dim = Fraction(2) ** rs.N1
    for root in rs.pos_even:
        num = rs.pair(lam_rho, root.coords)
        den = rs.pair(rs.rho0, root.coords)
        if num.is_rational and den.is_rational:
            dim *= num.as_fraction() / den.as_fraction()
        else:
            dim *= ratio(num, den)
    return dim


def is_typical(hw: HighestWeight) -> TypicalityReport:
    """Test (L+rho, a) != 0 over positive odd roots whose double is not even."""
    rs = hw.rs
    lam_rho = wadd(hw.coords, rs.rho)
    even_coords = {r.coords for r in rs.pos_even}
    vanishing, excluded = [], set()
    param = None
    symbolic_d21a = _is_symbolic_d21a(rs)
    domain = (Fraction(-1), Fraction(0)) if symbolic_d21a else ()
    for root in rs.pos_odd:
        if tuple(c * 2 for c in root.coords) in even_coords:
            continue
        p = rs.pair(lam_rho, root.coords)
        if p.is_rational:
            if p.const == 0:
                vanishing.append(root)
        else:
            param = p.param
            zero = p.solve_zero()
            if not (symbolic_d21a and zero in domain):
                excluded.add(zero)
    if vanishing:
        verdict = "atypical"
    elif param is not None:
        verdict = "conditional"
    else:
        verdict = "typical"
    return TypicalityReport(
        verdict, tuple(vanishing), tuple(sorted(excluded)), param, domain
    )


def supplementary_check(hw: HighestWeight) -> Root | None:
    """Odd root forced orthogonal to L+rho by the low-hidden-label conditions.

    Returns None when the conditions do not apply; for hidden labels below
    the shift's integer part, a None result means the labels are not those
    of a finite-dimensional highest weight at all.
    """
    rs = hw.rs
    if rs.kind != "II":
        raise rootdata.NotTypeII(f"{rs.algebra} is type I")
    _, b = rootdata.shift(rs)
    ls0 = int(hw.ls0.as_fraction())
    if ls0 > b:
        raise OutOfRange(f"hidden label {ls0} exceeds the shift's integer part {b}")
    lab = [v for v in hw.g_labels]
    fam = rs.algebra.family

    def frac(i):
        return lab[i].as_fraction()

    if fam == "osp":
        M, n = rs.algebra.a, rs.algebra.b
        dim = len(rs.basis)
        if M % 2:  # B(m|n)
            m = (M - 1) // 2
            if m == 0:
                return None
            if ls0 < m:
                k = ls0 + 1
                if all(frac(i) == 0 for i in range(n + k - 1, n + m)):
                    return rs.find_odd(rootdata._w(dim, {n - 1: 1, n + k - 1: -1}))
                return None
            if frac(n + m - 1) == 0:
                return rs.find_odd(rootdata._w(dim, {n - 1: 1, n + m - 1: 1}))
            return None
        m = M // 2  # D(m|n)
        if ls0 < m - 1:
            k = ls0 + 1
            if all(frac(i) == 0 for i in range(n + k - 1, n + m)):
                return rs.find_odd(rootdata._w(dim, {n - 1: 1, n + k - 1: -1}))
            return None
        if ls0 == m - 1:
            if frac(n + m - 2) == frac(n + m - 1):
                return rs.find_odd(rootdata._w(dim, {n - 1: 1, n + m - 1: -1}))
            return None
        if frac(n + m - 2) == 0 and frac(n + m - 1) == 0:
            return rs.find_odd(rootdata._w(dim, {n - 1: 1, n + m - 2: 1}))
        return None

    simple = [r.coords for r in rs.simple]

    def root_sum(*idx):
        total = simple[idx[0]]
        for i in idx[1:]:
            total = wadd(total, simple[i])
        return rs.find_odd(total)

    if fam == "D21A":
        l2, l3 = frac(1), frac(2)
        if ls0 == 0:
            return root_sum(0) if l2 == 0 and l3 == 0 else None
        if ls0 == 1:
            want = (l2 + 1) / (l3 + 1)
            alpha = rs.algebra.alpha
            if alpha is None or alpha == want:
                return root_sum(0, 1)
            return None
        return None
    if fam == "F4":
        l2, l3, l4 = frac(1), frac(2), frac(3)
        if ls0 == 0:
            return root_sum(0) if l2 == l3 == l4 == 0 else None
        if ls0 == 2:
            return root_sum(0, 1, 2) if l2 == 0 and l4 == 0 else None
        if ls0 == 3:
            return root_sum(0, 1, 2, 3) if l2 == 2 * l4 + 1 else None
        return None
    if fam == "G3":
        l2, l3 = frac(1), frac(2)
        if ls0 == 0:
            return root_sum(0) if l2 == 0 and l3 == 0 else None
        if ls0 == 2:
            return root_sum(0, 1, 2) if l2 == 0 else None
        if ls0 == 3:
            return root_sum(0, 1, 1, 1, 2) if l2 == 0 and l3 == 0 else None
        return None
    raise AssertionError(f"unhandled family {fam}")


def strip_valid(hw: HighestWeight) -> bool:
    """Whether a weight with hidden label below the shift bound is a genuine
    finite-dimensional highest weight (the consistency conditions hold)."""
    rs = hw.rs
    _, b = rootdata.shift(rs)
    ls0 = int(hw.ls0.as_fraction())
    if ls0 >= b:
        return True
    if rs.algebra.family in ("F4", "G3") and ls0 == 1:
        return False
    return supplementary_check(hw) is not None
