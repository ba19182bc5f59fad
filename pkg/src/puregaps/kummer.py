"""Closed forms for Kummer extensions at two totally ramified places.

Parameters are the extension degree m >= 2 and the polynomial degree
r >= 2 with gcd(m, r) = 1; the gap structure depends on nothing else, so
the remaining curve data (exponent, characteristic, roots) is deliberately
not modeled.  Genus is (m-1)(r-1)/2 and the period is m.  All ceiling and
floor arithmetic is exact integer division.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .engine import (
    PureGapResult,
    bounds_from_row_sizes,
    check_int128,
    decompose,
    compute_g1,
    compute_g2,
    compute_g3,
    compute_g4,
    union_of_translates,
)
from .errors import (
    ClosedFormMismatchError,
    DisjointnessViolationError,
    DivisibilityViolationError,
    GenericMismatchError,
    InvalidParamsError,
)
from .lattice import GeneratingSet, LatticePoint, validate_generating_set


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class KummerParams:
    """Degrees (m, r) with the derived genus and period."""

    m: int
    r: int

    def __post_init__(self):
        if self.m < 2 or self.r < 2:
            raise InvalidParamsError(
                f"m and r must be >= 2, got m={self.m}, r={self.r}")
        if gcd(self.m, self.r) != 1:
            raise InvalidParamsError(
                f"m={self.m} and r={self.r} must be coprime")

    @property
    def genus(self) -> int:
        return (self.m - 1) * (self.r - 1) // 2

    @property
    def period(self) -> int:
        return self.m

    @property
    def top_box(self) -> int:
        """Largest k with a nonempty row-zero box: r - 2 - floor(r/m)."""
        return self.r - 2 - self.r // self.m


def kummer_generating_set(m: int, r: int) -> GeneratingSet:
    """Enumerate the generating set (m*k1 + j, m*k2 + j) with
    k1 + k2 = r - 2 - floor(r*j/m) over 1 <= j <= m - 1 - floor(m/r)."""
    params = KummerParams(m, r)
    pts = []
    for j in range(1, m - m // r):
        s = r - 2 - (r * j) // m
        for k1 in range(s + 1):
            pts.append((m * k1 + j, m * (s - k1) + j))
    gamma = validate_generating_set(pts, m)
    if gamma.genus != params.genus:
        raise ClosedFormMismatchError(
            f"enumeration produced {gamma.genus} points, genus formula "
            f"gives {params.genus}")
    return gamma


def kummer_card_gamma_k0(m: int, r: int, k: int) -> int:
    """|Gamma_{k,0}| = ceil(m(k+2)/r) - ceil(m(k+1)/r) for k up to the top
    box index, zero beyond it."""
    params = KummerParams(m, r)
    if k < 0:
        raise InvalidParamsError(f"box index must be nonnegative, got {k}")
    if k > params.top_box:
        return 0
    return _ceil_div(m * (k + 2), r) - _ceil_div(m * (k + 1), r)


def kummer_gamma_k0(m: int, r: int, k: int) -> list:
    """Row-zero box k: points (m*k + j, j) with
    max(1, m - floor(m(k+2)/r)) <= j <= m - 1 - floor(m(k+1)/r)."""
    params = KummerParams(m, r)
    if k < 0:
        raise InvalidParamsError(f"box index must be nonnegative, got {k}")
    if k > params.top_box:
        return []
    lo = max(1, m - (m * (k + 2)) // r)
    hi = m - 1 - (m * (k + 1)) // r
    return [LatticePoint(m * k + j, j) for j in range(lo, hi + 1)]


def kummer_g1(m: int, r: int, k: int) -> list:
    """First component of box (k, 0): the square of side
    m - 1 - floor(m(k+2)/r) anchored at (m*k + 1, 1)."""
    KummerParams(m, r)
    if k < 0:
        raise InvalidParamsError(f"box index must be nonnegative, got {k}")
    hi = m - 1 - (m * (k + 2)) // r
    return sorted((m * k + j2, j1)
                  for j2 in range(1, hi + 1) for j1 in range(1, hi + 1))


def kummer_g2(m: int, r: int, k: int) -> list:
    """Second component: always empty for this family (diagonal condition)."""
    KummerParams(m, r)
    if k < 0:
        raise InvalidParamsError(f"box index must be nonnegative, got {k}")
    return []


def kummer_g3(m: int, r: int, k: int) -> list:
    """Third component: (m*k + j, j1) with j in the row's own j-range and
    1 <= j1 <= m - 1 - floor(m(k+2)/r)."""
    KummerParams(m, r)
    if k < 0:
        raise InvalidParamsError(f"box index must be nonnegative, got {k}")
    jlo = m - (m * (k + 2)) // r
    jhi = m - 1 - (m * (k + 1)) // r
    j1hi = m - 1 - (m * (k + 2)) // r
    return sorted((m * k + j, j1)
                  for j in range(jlo, jhi + 1) for j1 in range(1, j1hi + 1))


def kummer_g4(m: int, r: int, k: int) -> list:
    """Fourth component: the coordinate swap of the third, shifted by -w_k."""
    shift = k * m
    return sorted((b + shift, a - shift) for a, b in kummer_g3(m, r, k))


def kummer_card_g0(m: int, r: int) -> int:
    """Pure gap cardinality: sum over k of
    k * [(m - ceil(mk/r))^2 - (ceil(m(k+1)/r) - ceil(mk/r))^2]."""
    params = KummerParams(m, r)
    total = 0
    for k in range(1, params.top_box + 1):
        c1 = _ceil_div(m * k, r)
        c2 = _ceil_div(m * (k + 1), r)
        total += k * ((m - c1) ** 2 - (c2 - c1) ** 2)
    return check_int128(total)


def kummer_card_special_ur1(u: int, r: int) -> int:
    """Closed form u^2 (r-1)(r-2) r (r+3) / 12 for the case m = u*r + 1.

    Evaluated exactly and compared against the general cardinality sum;
    disagreement raises.
    """
    if u < 1 or r < 2:
        raise InvalidParamsError(f"need u >= 1 and r >= 2, got u={u}, r={r}")
    num = u * u * (r - 1) * (r - 2) * r * (r + 3)
    if num % 12 != 0:
        raise DivisibilityViolationError(
            f"special-case numerator {num} not divisible by 12")
    value = check_int128(num // 12)
    general = kummer_card_g0(u * r + 1, r)
    if value != general:
        raise ClosedFormMismatchError(
            f"m=ur+1 closed form gives {value}, cardinality sum gives "
            f"{general} at (u, r)=({u}, {r})")
    return value


def kummer_card_special_qN(q: int, N: int) -> int:
    """Closed form for m = (q+1)/N, r = q, where N divides q+1 and
    q - 2 - N >= 0:  (q+1)(m-1)/12 * ((q+1)(m-1) - 2m + N + 7) - q(m-1).

    Evaluated exactly and compared against the general cardinality sum.
    """
    if N < 1 or q < 2:
        raise InvalidParamsError(f"need q >= 2 and N >= 1, got q={q}, N={N}")
    if (q + 1) % N != 0:
        raise InvalidParamsError(f"N={N} does not divide q+1={q + 1}")
    if q - 2 - N < 0:
        raise InvalidParamsError(f"need q - 2 - N >= 0, got {q - 2 - N}")
    m = (q + 1) // N
    num = (q + 1) * (m - 1) * ((q + 1) * (m - 1) - 2 * m + N + 7)
    if num % 12 != 0:
        raise DivisibilityViolationError(
            f"special-case numerator {num} not divisible by 12")
    value = check_int128(num // 12 - q * (m - 1))
    general = kummer_card_g0(m, q)
    if value != general:
        raise ClosedFormMismatchError(
            f"m=(q+1)/N closed form gives {value}, cardinality sum gives "
            f"{general} at (q, N)=({q}, {N})")
    return value


def kummer_pure_gaps(m: int, r: int) -> PureGapResult:
    """Assemble the full pure gap set from the explicit components.

    The cardinality must match the closed-form sum; disagreement raises.
    """
    params = KummerParams(m, r)
    per_box = {}
    union_by_box = {}
    for k in range(params.top_box + 1):
        g1 = kummer_g1(m, r, k)
        g2 = kummer_g2(m, r, k)
        g3 = kummer_g3(m, r, k)
        g4 = kummer_g4(m, r, k)
        per_box[k] = (g1, g2, g3, g4)
        merged = set(g1)
        merged.update(g2)
        merged.update(g3)
        merged.update(g4)
        if len(merged) != len(g1) + len(g2) + len(g3) + len(g4):
            raise DisjointnessViolationError(
                f"explicit components of box k={k} overlap at (m, r)=({m}, {r})")
        union_by_box[k] = sorted(merged)

    g0, cardinality = union_of_translates(union_by_box, m)
    expected = kummer_card_g0(m, r)
    if cardinality != expected:
        raise ClosedFormMismatchError(
            f"assembled |G0| = {cardinality}, cardinality sum gives "
            f"{expected} at (m, r)=({m}, {r})")

    sizes = [kummer_card_gamma_k0(m, r, k) for k in range(params.top_box + 1)]
    bnd = bounds_from_row_sizes(sizes, params.genus)
    return PureGapResult(g0=g0, per_box=per_box, cardinality=cardinality,
                         lower_bound=bnd.lower, upper_bound=bnd.upper,
                         homma_kim_bound=bnd.homma_kim)


def verify_against_engine(m: int, r: int) -> None:
    """Compare every explicit closed-form set with the generic engine.

    Checks the row boxes and all four components of every box; any
    disagreement raises GenericMismatchError naming the first offender.
    """
    boxed = decompose(kummer_generating_set(m, r))
    for k in range(boxed.kmax):
        pairs = (
            ("Gamma_k0", kummer_gamma_k0(m, r, k), list(boxed.row(k))),
            ("G1", kummer_g1(m, r, k), compute_g1(boxed, k)),
            ("G2", kummer_g2(m, r, k), compute_g2(boxed, k)),
            ("G3", kummer_g3(m, r, k), compute_g3(boxed, k)),
            ("G4", kummer_g4(m, r, k), compute_g4(boxed, k, verify=True)),
        )
        for name, explicit, generic in pairs:
            if list(explicit) != list(generic):
                raise GenericMismatchError(
                    f"(m, r)=({m}, {r}) k={k}: explicit {name} has "
                    f"{len(explicit)} points, engine has {len(generic)}")
