"""Closed forms for the Giulietti-Korchmaros family at its distinguished
pair of places.

All formulas depend on the single integer parameter q: the genus is
(q^3+1)(q^2-2)/2 + 1, the period is q^3+1, and the generating set is
enumerated by index triples (i, j, k).  The explicit per-box pure gap
components and the cardinality polynomial are implemented independently of
the generic engine so the two routes can be compared.

The combinatorics is meaningful for any integer q >= 2; a warning is
emitted when q is not a prime power, since the function-field
interpretation then fails.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

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
    IndexOutOfRangeError,
    InvalidParamsError,
    PiecewiseMismatchError,
)
from .lattice import GeneratingSet, LatticePoint, validate_generating_set


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


@dataclass(frozen=True)
class GKParams:
    """Family parameter q with its derived genus and period."""

    q: int

    def __post_init__(self):
        if self.q < 2:
            raise InvalidParamsError(f"q must be an integer >= 2, got {self.q}")
        if not _is_prime_power(self.q):
            warnings.warn(
                f"q={self.q} is not a prime power; the combinatorics is still "
                "well defined but no function field realizes it",
                stacklevel=3)

    @property
    def genus(self) -> int:
        return (self.q**3 + 1) * (self.q**2 - 2) // 2 + 1

    @property
    def period(self) -> int:
        return self.q**3 + 1


def gk_gamma_point(i: int, j: int, k: int, q: int) -> LatticePoint:
    """The generating point with index triple (i, j, k).

    Coordinates: ((k-1)(q^3+1) + (q+1-i)(q^2-q+1) - j,
    (i+j-k-1)(q^3+1) + (q+1-i)(q^2-q+1) - j).  The triple must lie in the
    unified index ranges.
    """
    GKParams(q)
    if not 1 <= k <= q * q - 1:
        raise IndexOutOfRangeError(f"k={k} outside [1, {q * q - 1}]")
    if not max(0, k - q * q + q + 1) <= i <= q:
        raise IndexOutOfRangeError(
            f"i={i} outside [{max(0, k - q * q + q + 1)}, {q}] for k={k}")
    if not max(0, k - i + 1) <= j <= q * q - q:
        raise IndexOutOfRangeError(
            f"j={j} outside [{max(0, k - i + 1)}, {q * q - q}] for (i, k)=({i}, {k})")
    period = q**3 + 1
    c = q * q - q + 1
    return LatticePoint((k - 1) * period + (q + 1 - i) * c - j,
                        (i + j - k - 1) * period + (q + 1 - i) * c - j)


def gk_generating_set(q: int) -> GeneratingSet:
    """Enumerate the full generating set from the unified index ranges."""
    params = GKParams(q)
    period = params.period
    c = q * q - q + 1
    pts = []
    for k in range(1, q * q):
        for i in range(max(0, k - q * q + q + 1), q + 1):
            for j in range(max(0, k - i + 1), q * q - q + 1):
                base = (q + 1 - i) * c - j
                pts.append(((k - 1) * period + base,
                            (i + j - k - 1) * period + base))
    gamma = validate_generating_set(pts, period)
    if gamma.genus != params.genus:
        raise ClosedFormMismatchError(
            f"enumeration produced {gamma.genus} points, genus formula "
            f"gives {params.genus}")
    return gamma


def gk_card_gamma_k0(q: int, k: int) -> int:
    """|Gamma_{k,0}| from the explicit index endpoints.

    Cross-checked against every applicable branch of the published
    three-branch piecewise formula (branches overlap for small q).
    """
    GKParams(q)
    if k < 0:
        raise InvalidParamsError(f"box index must be nonnegative, got {k}")
    if k > q * q - 2:
        return 0
    lo = max(0, k - q * q + q + 2)
    hi = min(q, k + 2)
    n = hi - lo + 1
    if 0 <= k <= q - 2 and n != k + 3:
        raise PiecewiseMismatchError(
            f"q={q} k={k}: endpoints give {n}, branch k+3 gives {k + 3}")
    if q - 1 <= k <= q * q - q - 3 and n != q + 1:
        raise PiecewiseMismatchError(
            f"q={q} k={k}: endpoints give {n}, branch q+1 gives {q + 1}")
    if q * q - q - 2 <= k <= q * q - 2 and n != q * q - 1 - k:
        raise PiecewiseMismatchError(
            f"q={q} k={k}: endpoints give {n}, branch q^2-1-k gives "
            f"{q * q - 1 - k}")
    return n


def gk_gamma_k0(q: int, k: int) -> list:
    """Row-zero box k: the points with index (i, k-i+2, k+1)."""
    count = gk_card_gamma_k0(q, k)
    if count == 0:
        return []
    period = q**3 + 1
    c = q * q - q + 1
    out = []
    for i in range(max(0, k - q * q + q + 2), min(q, k + 2) + 1):
        base = (q + 1 - i) * c - (k - i + 2)
        out.append(LatticePoint(k * period + base, base))
    out.sort()
    if len(out) != count:
        raise PiecewiseMismatchError(
            f"q={q} k={k}: explicit row has {len(out)} points, count says {count}")
    return out


def _index_range(q: int, ks: int):
    return range(max(0, ks - q * q + q + 2), min(q, ks + 2) + 1)


def gk_g1(q: int, k: int) -> list:
    """First component of box (k, 0), via the explicit double index set.

    A cartesian product: first coordinates k(q^3+1)+(q+1-i2)(q^2-q+1)-(k2-i2+2)
    over all rows k2 > k, second coordinates (q+1-i1)(q^2-q+1)-(k1-i1+2)
    over all rows k1 > k.
    """
    GKParams(q)
    if k < 0:
        raise InvalidParamsError(f"box index must be nonnegative, got {k}")
    period = q**3 + 1
    c = q * q - q + 1
    avals = []
    bvals = []
    for ks in range(k + 1, q * q - 1):
        for i in _index_range(q, ks):
            base = (q + 1 - i) * c - (ks - i + 2)
            avals.append(k * period + base)
            bvals.append(base)
    return sorted({(a, b) for a in avals for b in bvals})


def gk_g2(q: int, k: int) -> list:
    """Second component: always empty for this family (diagonal condition)."""
    GKParams(q)
    if k < 0:
        raise InvalidParamsError(f"box index must be nonnegative, got {k}")
    return []


def gk_g3(q: int, k: int) -> list:
    """Third component, via the explicit index set with the i2 <= i1 cut."""
    GKParams(q)
    if k < 0:
        raise InvalidParamsError(f"box index must be nonnegative, got {k}")
    period = q**3 + 1
    c = q * q - q + 1
    out = set()
    for i2 in _index_range(q, k):
        a = k * period + (q + 1 - i2) * c - (k - i2 + 2)
        for k1 in range(k + 1, q * q - 1):
            for i1 in _index_range(q, k1):
                if i1 < i2:
                    continue
                out.add((a, (q + 1 - i1) * c - (k1 - i1 + 2)))
    return sorted(out)


def gk_g4(q: int, k: int) -> list:
    """Fourth component: the coordinate swap of the third, shifted by -w_k."""
    shift = k * (q**3 + 1)
    return sorted((b + shift, a - shift) for a, b in gk_g3(q, k))


def gk_card_g0(q: int) -> int:
    """Pure gap cardinality polynomial
    q(q-1)(10q^8+10q^7-25q^6-9q^5+71q^4-111q^3-86q^2+128q-12)/120."""
    GKParams(q)
    num = q * (q - 1) * (10 * q**8 + 10 * q**7 - 25 * q**6 - 9 * q**5
                         + 71 * q**4 - 111 * q**3 - 86 * q**2 + 128 * q - 12)
    if num % 120 != 0:
        raise DivisibilityViolationError(
            f"cardinality polynomial numerator {num} not divisible by 120")
    return check_int128(num // 120)


def gk_upper_bound(q: int) -> int:
    """Family upper bound polynomial
    (10q^10-15q^8-4q^7+20q^6-56q^5-35q^4+124q^3-40q^2-4q)/120."""
    GKParams(q)
    num = (10 * q**10 - 15 * q**8 - 4 * q**7 + 20 * q**6 - 56 * q**5
           - 35 * q**4 + 124 * q**3 - 40 * q**2 - 4 * q)
    if num % 120 != 0:
        raise DivisibilityViolationError(
            f"upper bound polynomial numerator {num} not divisible by 120")
    return check_int128(num // 120)


def gk_pure_gaps(q: int) -> PureGapResult:
    """Assemble the full pure gap set from the explicit components.

    The result's cardinality must match the closed-form polynomial and the
    row-size bound must match the bound polynomial; disagreement raises.
    """
    params = GKParams(q)
    per_box = {}
    union_by_box = {}
    for k in range(q * q - 1):
        g1 = gk_g1(q, k)
        g2 = gk_g2(q, k)
        g3 = gk_g3(q, k)
        g4 = gk_g4(q, k)
        per_box[k] = (g1, g2, g3, g4)
        merged = set(g1)
        merged.update(g2)
        merged.update(g3)
        merged.update(g4)
        if len(merged) != len(g1) + len(g2) + len(g3) + len(g4):
            raise DisjointnessViolationError(
                f"explicit components of box k={k} overlap at q={q}")
        union_by_box[k] = sorted(merged)

    g0, cardinality = union_of_translates(union_by_box, params.period)
    expected = gk_card_g0(q)
    if cardinality != expected:
        raise ClosedFormMismatchError(
            f"assembled |G0| = {cardinality}, polynomial gives {expected} at q={q}")

    sizes = [gk_card_gamma_k0(q, k) for k in range(q * q - 1)]
    bnd = bounds_from_row_sizes(sizes, params.genus)
    if bnd.upper != gk_upper_bound(q):
        raise ClosedFormMismatchError(
            f"row-size upper bound {bnd.upper} differs from polynomial "
            f"{gk_upper_bound(q)} at q={q}")
    return PureGapResult(g0=g0, per_box=per_box, cardinality=cardinality,
                         lower_bound=bnd.lower, upper_bound=bnd.upper,
                         homma_kim_bound=bnd.homma_kim)


def verify_against_engine(q: int) -> None:
    """Compare every explicit closed-form set with the generic engine.

    Checks the row boxes and all four components of every box; any
    disagreement raises GenericMismatchError naming the first offender.
    """
    boxed = decompose(gk_generating_set(q))
    for k in range(boxed.kmax):
        pairs = (
            ("Gamma_k0", gk_gamma_k0(q, k), list(boxed.row(k))),
            ("G1", gk_g1(q, k), compute_g1(boxed, k)),
            ("G2", gk_g2(q, k), compute_g2(boxed, k)),
            ("G3", gk_g3(q, k), compute_g3(boxed, k)),
            ("G4", gk_g4(q, k), compute_g4(boxed, k, verify=True)),
        )
        for name, explicit, generic in pairs:
            if list(explicit) != list(generic):
                raise GenericMismatchError(
                    f"q={q} k={k}: explicit {name} has {len(explicit)} points, "
                    f"engine has {len(generic)}")
