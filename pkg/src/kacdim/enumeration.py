"""Exhaustive search for typical irreducible representations of a given dimension.

The search region for type II algebras is the cone where the shifted hidden
label is >= -1/2: there the even-part dimension polynomial is positive and
strictly increasing in every label, so a partial assignment whose minimal
completion already exceeds the target can be pruned.  Hidden labels below
the shift's integer part are scanned separately: weights there are
finite-dimensional highest weights only under per-family consistency
conditions, and then provably not typical -- the scan verifies this rather
than assuming it.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from . import rootdata, typicality
from .rootdata import AlgebraId, RootSystem, build, d21a, f4, g3, osp, sl, wadd
from .typicality import (HighestWeight, from_even_labels, is_typical,
                         strip_valid, typical_dim)
from .weyldim import SimpleFactor, enumerate_bounded, enumerate_labels, weyl_dim


@dataclass(frozen=True)
class TypicalRep:
    algebra: AlgebraId
    g_labels: tuple          # AffineScalar
    even_labels: tuple       # per-factor Fractions, hidden slot = hidden label
    ls0: Fraction | None
    dim: int
    param: str | None
    excluded: tuple          # Fractions: parameter values breaking typicality
    domain_excluded: tuple   # parameter values outside the family's domain

    def sort_key(self):
        return (self.algebra.text, tuple((v.const, v.slope) for v in self.g_labels))


@dataclass(frozen=True)
class SearchReport:
    target: int
    reps: tuple
    candidates_considered: int
    bound_log: tuple         # (algebra text, lower bound) pairs
    classes: tuple | None    # index groups after conjugate merging (optional)
    merged_pairs: tuple      # the pairs of rep indices that were identified


@dataclass(frozen=True)
class B0nReport:
    n: int
    target: int
    osp_weights: tuple       # so(2n+1)-style label tuples found on the osp side
    so_weights: tuple        # target-dim so(2n+1) weights with even last label
    match: bool
    box: int
    box_agrees: bool         # dim equality over the whole comparison box


class SearchInvariantError(AssertionError):
    """A scan contradicted a structural claim the search relies on."""


def _rep_from_hw(hw: HighestWeight, report, dim: int) -> TypicalRep:
    ls0 = hw.ls0.as_fraction() if hw.ls0 is not None else None
    return TypicalRep(
        algebra=hw.rs.algebra,
        g_labels=hw.g_labels,
        even_labels=typicality.even_labels_unshifted(hw),
        ls0=ls0,
        dim=dim,
        param=report.param,
        excluded=report.excluded if report.param else (),
        domain_excluded=report.domain_excluded,
    )


# --------------------------------------------------------------------------
# lower bounds
# --------------------------------------------------------------------------

def _dim_at(aid: AlgebraId, even) -> Fraction:
    return typical_dim(from_even_labels(build(aid), even))


def min_typical_dim_bound(aid: AlgebraId) -> int:
    """Proven lower bound for the dimension of any typical representation.

    Evaluated from corner weights of the search cone and asserted against
    the closed forms.  For osp(1|2n) the value 2^n is the infimum of the
    dimension formula over the cone only; it serves as the rank cut in
    algebra_candidates, while completeness of a dimension search rests on
    the correspondence checked by b0n_cross_check.
    """
    rs = build(aid)
    if rs.kind != "II":
        zeros = tuple(tuple([0] * f.factor.rank) for f in rs.factors)
        bound = 2 ** rs.N1
        assert _dim_at(aid, zeros) == bound
        return bound
    if aid.family == "osp":
        M, n = aid.a, aid.b
        sp = [0] * (n - 1)
        if M % 2 == 0:  # D(m|n)
            m = M // 2
            c1 = _dim_at(aid, (sp + [m + 1], [0] * m))
            assert c1 == Fraction(2) ** (2 * m * n + 1) * math.comb(2 * n + 1, n - 1) / n
            spin1 = [0] * (m - 2) + [1, 0]
            spin2 = [0] * (m - 2) + [0, 1]
            c2 = _dim_at(aid, (sp + [m], spin1))
            assert c2 == _dim_at(aid, (sp + [m], spin2)) == 2 ** (m * (2 * n + 1) - 1)
            return int(min(c1, c2))
        m = (M - 1) // 2
        if m == 0:  # B(0|n): formal corner of the cone, see docstring
            bound = 2 ** n
            assert bound == 2 ** rs.N1 * weyl_dim(SimpleFactor("C", n), [0] * n)
            return bound
        c1 = _dim_at(aid, (sp + [m + 1], [0] * m))
        assert c1 == 2 ** (2 * m * n) * math.comb(2 * n + 1, n)
        c2 = _dim_at(aid, (sp + [m], [0] * (m - 1) + [1]))
        assert c2 == 2 ** (m * (2 * n + 1))
        return int(min(c1, c2))
    if aid.family == "D21A":
        bound = 16
        assert _dim_at(aid, ((2,), (0,), (0,))) == bound
        return bound
    if aid.family == "F4":
        bound = 256
        assert _dim_at(aid, ((4,), (0, 0, 0))) == bound
        return bound
    bound = 64  # G(3)
    assert _dim_at(aid, ((3,), (0, 0))) == bound
    return bound


def algebra_candidates(target: int) -> list[AlgebraId]:
    """All family instances whose lower bound does not exceed the target.

    Families are scanned in increasing rank; the bound is asserted to be
    nondecreasing along each rank direction, which certifies the cut.
    """
    if target < 1:
        raise ValueError("target must be positive")
    out = []
    q = 1
    while 2 ** (q * (2 if q == 1 else q)) <= target:   # sl(p|q), p >= q
        p = 2 if q == 1 else q
        while 2 ** (p * q) <= target:
            out.append(sl(p, q))
            p += 1
        q += 1
    out.extend(_scan_rank(lambda n: osp(2, 2 * n), 2, target))    # C(n+1)
    out.extend(_scan_rank(lambda n: osp(1, 2 * n), 1, target))    # B(0|n)
    m = 1
    while True:                                                    # B(m|n)
        row = _scan_rank(lambda n, m=m: osp(2 * m + 1, 2 * n), 1, target)
        if not row:
            break
        out.extend(row)
        m += 1
    m = 2
    while True:                                                    # D(m|n)
        row = _scan_rank(lambda n, m=m: osp(2 * m, 2 * n), 1, target)
        if not row:
            break
        out.extend(row)
        m += 1
    if 16 <= target:
        out.append(d21a(None))
    if 256 <= target:
        out.append(f4())
    if 64 <= target:
        out.append(g3())
    return out


def _scan_rank(make, start, target):
    found = []
    n = start
    prev = 0
    while True:
        aid = make(n)
        if aid.family == "D21A":   # osp(4|2) redirects; that family scans separately
            n += 1
            continue
        bound = min_typical_dim_bound(aid)
        if bound < prev:
            raise SearchInvariantError(f"bound not monotone at {aid}")
        if bound > target:
            return found
        found.append(aid)
        prev = bound
        n += 1


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------

def _run_partitions(search, top_values, workers: int):
    parts = [top_values[i::workers] for i in range(workers)]
    if workers == 1:
        results = [search(parts[0])]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(search, parts))
    reps = [r for chunk, _ in results for r in chunk]
    seen = sum(c for _, c in results)
    reps.sort(key=TypicalRep.sort_key)
    return reps, seen


def _enumerate_type_I(rs: RootSystem, target: int, workers: int = 1):
    needed = Fraction(target, 2 ** rs.N1)
    if needed.denominator != 1 or needed < 1:
        return [], 0
    needed = int(needed)
    first = rs.factors[0].factor
    rest = [f.factor for f in rs.factors[1:]]

    def search(head_candidates):
        reps, seen = [], 0
        for head, head_dim in head_candidates:
            combos = [((head,), head_dim)]
            for fac in rest:
                expanded = []
                for vecs, d in combos:
                    for labels, dim in enumerate_bounded(fac, int(needed // d)):
                        expanded.append((vecs + (labels,), d * dim))
                combos = expanded
            for vecs, dim in combos:
                seen += 1
                if dim != needed:
                    continue
                hw = from_even_labels(rs, vecs)
                report = is_typical(hw)
                if report.verdict == "atypical":
                    continue
                reps.append(_rep_from_hw(hw, report, target))
        return reps, seen

    return _run_partitions(search, enumerate_bounded(first, needed), workers)


def _type_II_slots(rs: RootSystem):
    """Slot order: hidden label first, then the remaining factor slots."""
    slots = []
    for fi, fac in enumerate(rs.factors):
        for si, pos in enumerate(fac.positions):
            slots.append((fi, si, pos is None))
    slots.sort(key=lambda t: not t[2])
    return slots


def _type_II_dim(rs: RootSystem, shift_value: Fraction, values) -> Fraction:
    dim = Fraction(2) ** rs.N1
    for fi, fac in enumerate(rs.factors):
        labels = [
            values[(fi, si)] - (shift_value if fac.positions[si] is None else 0)
            for si in range(fac.factor.rank)
        ]
        dim *= weyl_dim(fac.factor, labels)
    return dim


def _slot_vectors(rs: RootSystem, values):
    return tuple(
        tuple(values[(fi, si)] for si in range(fac.factor.rank))
        for fi, fac in enumerate(rs.factors)
    )


def _enumerate_type_II(rs: RootSystem, target: int, workers: int = 1):
    shift_value, b = rootdata.shift(rs)
    slots = _type_II_slots(rs)
    mins = {(fi, si): (b if hidden else 0) for fi, si, hidden in slots}

    def min_dim_with(assigned):
        values = dict(mins)
        values.update(assigned)
        return _type_II_dim(rs, shift_value, values)

    def search(top_values):
        reps, counter = [], [0]

        def rec(idx, assigned):
            if idx == len(slots):
                counter[0] += 1
                if _type_II_dim(rs, shift_value, assigned) != target:
                    return
                hw = from_even_labels(rs, _slot_vectors(rs, assigned))
                report = is_typical(hw)
                if report.verdict != "atypical":
                    reps.append(_rep_from_hw(hw, report, target))
                return
            key = slots[idx][:2]
            v = mins[key]
            while True:
                trial = dict(assigned)
                trial[key] = v
                if min_dim_with(trial) > target:
                    return
                rec(idx + 1, trial)
                v += 1

        for v in top_values:
            trial = {slots[0][:2]: v}
            if min_dim_with(trial) <= target:
                rec(1, trial)
        return reps, counter[0]

    top_key = slots[0][:2]
    cap = mins[top_key]
    while min_dim_with({top_key: cap + 1}) <= target:
        cap += 1
    reps, seen = _run_partitions(search, list(range(mins[top_key], cap + 1)), workers)
    seen += _scan_strip(rs, target, shift_value, b, slots, mins)
    return reps, seen


def _scan_strip(rs: RootSystem, target, shift_value, b, slots, mins) -> int:
    """Scan hidden labels below the shift bound and verify no typical weight.

    Only label vectors satisfying the per-family consistency conditions are
    genuine highest weights there; each of those must test atypical (or, for
    symbolic osp(4|2;a) with hidden label 1, be excluded exactly at the one
    parameter value where the weight exists).
    """
    if b == 0:
        return 0
    other = [(fi, si) for fi, si, hidden in slots if not hidden]
    hidden_slot = next((fi, si) for fi, si, hidden in slots if hidden)
    caps = {}
    for key in other:
        cap = 0
        while True:
            trial = dict(mins)
            trial[key] = cap + 1
            if _type_II_dim(rs, shift_value, trial) > target:
                break
            cap += 1
        caps[key] = cap
    seen = 0
    for ls0 in range(b):
        for combo in product(*[range(caps[k] + 1) for k in other]):
            seen += 1
            values = dict(zip(other, combo))
            values[hidden_slot] = ls0
            hw = from_even_labels(rs, _slot_vectors(rs, values))
            if not strip_valid(hw):
                continue
            report = is_typical(hw)
            if report.verdict == "typical":
                raise SearchInvariantError(
                    f"{rs.algebra}: weight {tuple(map(str, hw.g_labels))} with hidden "
                    f"label {ls0} below the bound {b} tested typical"
                )
            if report.verdict == "conditional":
                root = typicality.supplementary_check(hw)
                if root is None:
                    raise SearchInvariantError(
                        f"{rs.algebra}: conditional strip weight lacks a "
                        f"forced-orthogonality case"
                    )
                lam_rho = wadd(hw.coords, rs.rho)
                critical = rs.pair(lam_rho, root.coords).solve_zero()
                if critical not in report.excluded:
                    raise SearchInvariantError(
                        f"{rs.algebra}: strip weight's own parameter value "
                        f"{critical} missing from exclusions {report.excluded}"
                    )
    return seen


def enumerate_typical(aid: AlgebraId, target: int, workers: int = 1) -> list[TypicalRep]:
    """All typical representations of dimension exactly `target`."""
    rs = build(aid)
    if rs.kind == "II":
        reps, _ = _enumerate_type_II(rs, target, workers)
    else:
        reps, _ = _enumerate_type_I(rs, target, workers)
    return reps


def enumerate_brute(aid: AlgebraId, target: int, box: int) -> list[TypicalRep]:
    """Un-pruned oracle: raw scan of every label vector in [0, box] per slot."""
    rs = build(aid)
    reps = []
    if rs.kind == "II":
        _, b = rootdata.shift(rs)
        slots = _type_II_slots(rs)
        for combo in product(range(box + 1), repeat=len(slots)):
            values = {(fi, si): v for (fi, si, _), v in zip(slots, combo)}
            hw = from_even_labels(rs, _slot_vectors(rs, values))
            if int(hw.ls0.as_fraction()) < b and not strip_valid(hw):
                continue
            if typical_dim(hw) != target:
                continue
            report = is_typical(hw)
            if report.verdict != "atypical":
                reps.append(_rep_from_hw(hw, report, target))
    else:
        shapes = [f.factor.rank for f in rs.factors]
        for flat in product(range(box + 1), repeat=sum(shapes)):
            vecs, i = [], 0
            for rank in shapes:
                vecs.append(tuple(flat[i:i + rank]))
                i += rank
            hw = from_even_labels(rs, vecs)
            if typical_dim(hw) != target:
                continue
            report = is_typical(hw)
            if report.verdict != "atypical":
                reps.append(_rep_from_hw(hw, report, target))
    reps.sort(key=TypicalRep.sort_key)
    return reps


def conjugate_even_labels(rep: TypicalRep) -> tuple:
    """Even-label pattern of the diagram-flipped (dual) representation."""
    aid = rep.algebra
    if aid.family == "sl":
        vecs = [tuple(reversed(v)) for v in rep.even_labels]
        if aid.a == aid.b and len(vecs) == 2:
            vecs.reverse()
        return tuple(vecs)
    return rep.even_labels


def conjugate_classes(reps) -> tuple:
    """Group representations with their conjugates; returns (classes, merged_pairs)."""
    groups = {}
    for i, rep in enumerate(reps):
        flip = conjugate_even_labels(rep)
        key = (rep.algebra.text, min(rep.even_labels, flip))
        groups.setdefault(key, []).append(i)
    classes = tuple(tuple(g) for g in groups.values())
    merged = tuple(tuple(g) for g in groups.values() if len(g) > 1)
    return classes, merged


def enumerate_all(target: int, workers: int = 1, merge_conjugates: bool = False) -> SearchReport:
    """Search every candidate algebra and report canonically ordered results."""
    reps = []
    considered = 0
    bound_log = []
    for aid in algebra_candidates(target):
        rs = build(aid)
        bound_log.append((aid.text, min_typical_dim_bound(aid)))
        if rs.kind == "II":
            found, seen = _enumerate_type_II(rs, target, workers)
        else:
            found, seen = _enumerate_type_I(rs, target, workers)
        reps.extend(found)
        considered += seen
    reps.sort(key=TypicalRep.sort_key)
    classes = merged = None
    if merge_conjugates:
        classes, merged = conjugate_classes(reps)
    return SearchReport(
        target=target,
        reps=tuple(reps),
        candidates_considered=considered,
        bound_log=tuple(bound_log),
        classes=classes,
        merged_pairs=merged or (),
    )


def b0n_cross_check(n: int, target: int, box: int = 12) -> B0nReport:
    """Check the osp(1|2n) <-> so(2n+1) correspondence two independent ways.

    The target search is compared against the ordinary Weyl enumeration
    restricted to even last label, and the two dimension functions are
    compared pointwise over a label box.
    """
    aid = osp(1, 2 * n)
    rs = build(aid)
    hits = []
    for rep in enumerate_typical(aid, target):
        labels = [int(v.as_fraction()) for v in rep.g_labels[:-1]]
        labels.append(int(2 * rep.ls0))
        hits.append(tuple(labels))
    bn = SimpleFactor("B", n)
    so_hits = [v for v in enumerate_labels(bn, target) if v[-1] % 2 == 0]
    agrees = True
    for flat in product(range(box + 1), repeat=n):
        if flat[-1] % 2:
            continue
        vec = list(flat[:-1]) + [flat[-1] // 2]
        hw = from_even_labels(rs, (tuple(vec),))
        if typical_dim(hw) != weyl_dim(bn, flat):
            agrees = False
            break
    return B0nReport(
        n=n, target=target,
        osp_weights=tuple(sorted(hits)),
        so_weights=tuple(sorted(so_hits)),
        match=sorted(hits) == sorted(so_hits),
        box=box, box_agrees=agrees,
    )
