"""Box decomposition of a generating set and assembly of the pure gap set.

The plane is tiled with period-sized boxes.  Only the row-zero boxes
``rows[k]`` (points whose second coordinate is below the period) are
stored: box ``(i, j)`` is the translate of ``rows[i+j]`` by
``w_j = (-j*period, j*period)``.  The pure gaps of box ``(k, 0)`` split
into four components, computed here straight from their defining
formulas, and the full pure gap set is the disjoint union of the
translates ``(G_{k,0} + w_j)`` over ``0 <= j <= k``.

Bulk results are plain ``(a, b)`` tuples (they compare equal to
:class:`~puregaps.lattice.LatticePoint`); every result list is sorted
lexicographically.  Cardinalities and bounds are guarded against the
128-bit range.
"""

from __future__ import annotations

from collections import namedtuple
from dataclasses import dataclass
from typing import Mapping

from .errors import (
    CardinalityMismatchError,
    DiagonalReflectionMismatchError,
    DisjointnessViolationError,
    GenusIdentityViolationError,
    InvalidParamsError,
)
from .lattice import GeneratingSet, LatticePoint

#: Cardinalities and bounds must stay within 128-bit signed range.
INT128_MAX = 2**127 - 1

Bounds = namedtuple("Bounds", ("lower", "upper", "homma_kim"))


def check_int128(value: int) -> int:
    """Raise OverflowError when a result leaves the 128-bit signed range."""
    if value > INT128_MAX or value < -INT128_MAX - 1:
        raise OverflowError(
            f"value {value} exceeds the supported 128-bit range")
    return value


def w_vector(j: int, period: int) -> tuple:
    """Translation vector w_j = (-j*period, j*period)."""
    return (-j * period, j * period)


def translate(points, j: int, period: int) -> list:
    """Translate points by w_j, preserving lexicographic order."""
    shift = j * period
    if shift == 0:
        return list(points)
    return [(a - shift, b + shift) for a, b in points]


@dataclass(frozen=True)
class BoxedGamma:
    """Row-zero boxes of a generating set.

    ``rows`` maps a box index ``k`` to the sorted points of the set with
    ``k*period < a < (k+1)*period`` and ``0 < b < period``; empty rows are
    omitted.  ``kmax`` is the first index from which all boxes are empty,
    ``ceil((2g-1)/period)``.  ``diagonal`` records whether every
    generating point satisfies ``a == b (mod period)``, which enables the
    reflected fast path for the fourth pure gap component.
    """

    rows: Mapping[int, tuple]
    period: int
    genus: int
    kmax: int
    diagonal: bool

    def row(self, k: int) -> tuple:
        return self.rows.get(k, ())

    def row_sizes(self) -> list:
        """|rows[k]| for k = 0 .. kmax-1."""
        return [len(self.row(k)) for k in range(self.kmax)]


def decompose(gamma: GeneratingSet) -> BoxedGamma:
    """Collect the row-zero boxes of a validated generating set.

    Asserts the genus identity sum((k+1) * |rows[k]|) == genus and that no
    row sits at or beyond kmax; either failure means the input was
    malformed in a way validation cannot produce.
    """
    period = gamma.period
    g = gamma.genus
    kmax = max(0, -(-(2 * g - 1) // period))
    rows: dict = {}
    for a, b in gamma.points:
        if b < period:
            rows.setdefault(a // period, []).append((a, b))

    frozen = {k: tuple(sorted(v)) for k, v in sorted(rows.items())}
    if frozen and max(frozen) >= kmax:
        raise GenusIdentityViolationError(
            f"nonempty box at k={max(frozen)} >= kmax={kmax}")
    total = sum((k + 1) * len(v) for k, v in frozen.items())
    if total != g:
        raise GenusIdentityViolationError(
            f"sum (k+1)|rows[k]| = {total} does not equal genus {g}")

    diagonal = all(a - k * period == b
                   for k, row in frozen.items() for a, b in row)
    return BoxedGamma(rows=frozen, period=period, genus=g, kmax=kmax,
                      diagonal=diagonal)


def reconstruct_box(boxed: BoxedGamma, i: int, j: int) -> list:
    """Box (i, j) of the generating set: rows[i+j] translated by w_j."""
    if i < 0 or j < 0:
        raise InvalidParamsError(f"box indices must be nonnegative, got ({i}, {j})")
    return [LatticePoint(a - j * boxed.period, b + j * boxed.period)
            for a, b in boxed.row(i + j)]


def _tail_points(boxed: BoxedGamma, k: int) -> list:
    """All points of rows strictly above k, in row order."""
    out = []
    for k1 in range(k + 1, boxed.kmax):
        out.extend(boxed.row(k1))
    return out


def compute_g1(boxed: BoxedGamma, k: int) -> list:
    """First component of box (k, 0).

    glb(u + w_{k2-k}, v) over u in rows[k2], v in rows[k1] with k1, k2 > k.
    The size must equal the square of the number of points above row k.
    """
    period = boxed.period
    tail = _tail_points(boxed, k)
    out = set()
    for k2 in range(k + 1, boxed.kmax):
        shift = (k2 - k) * period
        for ua, ub in boxed.row(k2):
            ua -= shift
            ub += shift
            for va, vb in tail:
                out.add((ua if ua < va else va, vb if vb < ub else vb))
    expected = len(tail) * len(tail)
    if len(out) != expected:
        raise CardinalityMismatchError(
            f"|G1_({k},0)| = {len(out)}, formula gives {expected}")
    return sorted(out)


def compute_g2(boxed: BoxedGamma, k: int) -> list:
    """Second component: glb over incomparable pairs inside rows[k].

    Empty whenever the diagonal condition holds, since points of one row
    are then totally ordered.
    """
    row = boxed.row(k)
    out = set()
    for i, (ua, ub) in enumerate(row):
        for va, vb in row[i + 1:]:
            if (ua > va and ub < vb) or (ua < va and ub > vb):
                out.add((ua if ua < va else va, ub if ub < vb else vb))
    return sorted(out)


def compute_g3(boxed: BoxedGamma, k: int) -> list:
    """Third component: glb(u, v) for u in rows[k], v in a higher row,
    restricted to pairs with u not below v."""
    us = boxed.row(k)
    out = set()
    for k1 in range(k + 1, boxed.kmax):
        for va, vb in boxed.row(k1):
            for ua, ub in us:
                if ua > va or ub > vb:
                    out.add((ua if ua < va else va, ub if ub < vb else vb))
    return sorted(out)


def _g4_general(boxed: BoxedGamma, k: int) -> list:
    period = boxed.period
    vs = boxed.row(k)
    out = set()
    for k2 in range(k + 1, boxed.kmax):
        shift = (k2 - k) * period
        for ua, ub in boxed.row(k2):
            ua -= shift
            ub += shift
            for va, vb in vs:
                if va > ua or vb > ub:
                    out.add((ua if ua < va else va, ub if ub < vb else vb))
    return sorted(out)


def compute_g4(boxed: BoxedGamma, k: int, verify: bool = False) -> list:
    """Fourth component of box (k, 0).

    General form: glb(u + w_{k2-k}, v) for u in rows[k2] (k2 > k) and v in
    rows[k], restricted to pairs with v not below the shifted u.  Under
    the diagonal condition this equals the coordinate swap of the third
    component translated by -w_k; that fast path is used on its own in
    release mode, while ``verify=True`` computes both and insists they
    agree.
    """
    if not boxed.diagonal:
        return _g4_general(boxed, k)
    shift = k * boxed.period
    reflected = sorted((b + shift, a - shift)
                       for a, b in compute_g3(boxed, k))
    if verify:
        general = _g4_general(boxed, k)
        if general != reflected:
            raise DiagonalReflectionMismatchError(
                f"box k={k}: general G4 has {len(general)} points, "
                f"reflected G3 gives {len(reflected)}")
    return reflected


def bounds_from_row_sizes(sizes, genus: int) -> Bounds:
    """Lower/upper bounds on the pure gap count from row sizes alone,
    plus the generic g(g-1)/2 bound."""
    lower = 0
    upper = 0
    tail = sum(sizes)
    for k, size in enumerate(sizes):
        upper += (k + 1) * tail * tail
        tail -= size
        lower += (k + 1) * tail * tail
    upper -= genus
    homma_kim = genus * (genus - 1) // 2
    for value in (lower, upper, homma_kim):
        check_int128(value)
    return Bounds(lower, upper, homma_kim)


def bounds(boxed: BoxedGamma) -> Bounds:
    """(lower, upper, Homma-Kim) bounds for the pure gap cardinality."""
    return bounds_from_row_sizes(boxed.row_sizes(), boxed.genus)


@dataclass(frozen=True)
class PureGapResult:
    """The assembled pure gap set.

    ``g0`` is the full set as a lexicographically sorted list of pairs;
    ``per_box`` maps each box index k to its four sorted components;
    ``cardinality`` equals ``len(g0)`` and the weighted per-box sum.
    """

    g0: list
    per_box: dict
    cardinality: int
    lower_bound: int
    upper_bound: int
    homma_kim_bound: int


def union_of_translates(per_box_union: dict, period: int) -> tuple:
    """Union over 0 <= j <= k of (G_{k,0} + w_j); checks disjointness.

    Returns (sorted list, weighted size).  The translates are provably
    pairwise disjoint, so any duplicate in the concatenation is an
    internal error.
    """
    expected = 0
    alls = []
    for k, box in per_box_union.items():
        expected += (k + 1) * len(box)
        alls.extend(box)
        for j in range(1, k + 1):
            shift = j * period
            alls.extend((a - shift, b + shift) for a, b in box)
    alls.sort()
    prev = None
    for p in alls:
        if p == prev:
            raise DisjointnessViolationError(
                f"translates of the per-box pure gap sets overlap at {p}")
        prev = p
    if len(alls) != expected:
        raise CardinalityMismatchError(
            f"|G0| = {len(alls)} but weighted per-box sum is {expected}")
    return alls, expected


def assemble_pure_gaps(boxed: BoxedGamma, verify: bool = False) -> PureGapResult:
    """Assemble the full pure gap set from the row-zero boxes.

    Computes the four components of every box ``(k, 0)``, checks that they
    are pairwise disjoint, forms the union of all translates and checks
    both the translate disjointness and the cardinality identity
    ``|G0| = sum (k+1)|G_{k,0}|``.  ``verify=True`` additionally runs the
    general fourth-component formula against its fast path.
    """
    per_box = {}
    union_by_box = {}
    for k in range(boxed.kmax):
        g1 = compute_g1(boxed, k)
        g2 = compute_g2(boxed, k)
        g3 = compute_g3(boxed, k)
        g4 = compute_g4(boxed, k, verify=verify)
        per_box[k] = (g1, g2, g3, g4)
        merged = set(g1)
        merged.update(g2)
        merged.update(g3)
        merged.update(g4)
        if len(merged) != len(g1) + len(g2) + len(g3) + len(g4):
            raise DisjointnessViolationError(
                f"components of box k={k} are not pairwise disjoint")
        union_by_box[k] = sorted(merged)

    g0, cardinality = union_of_translates(union_by_box, boxed.period)
    check_int128(cardinality)
    bnd = bounds(boxed)
    return PureGapResult(g0=g0, per_box=per_box, cardinality=cardinality,
                         lower_bound=bnd.lower, upper_bound=bnd.upper,
                         homma_kim_bound=bnd.homma_kim)
