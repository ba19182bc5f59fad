"""Cross-checking and benchmarking harness behind the CLI.

Each parameter point yields a :class:`RunReport`; verification points run
every route to the pure gap set (generic engine, explicit family forms,
direct oracle scan) and record a verdict per cross-check.  Grids may run
points in parallel processes when the ``PUREGAPS_THREADS`` environment
variable asks for more than one worker; results are always emitted in
deterministic parameter order.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from . import gk as gk_mod
from . import kummer as kummer_mod
from .engine import assemble_pure_gaps, compute_g2, decompose
from .errors import ConsistencyError
from .lattice import GeneratingSet
from .oracle import check_period_property, pure_gaps_direct

#: Default parameter sweep for the m=(q+1)/N special case.
DEFAULT_QN_PAIRS = ((7, 2), (8, 3), (11, 2), (11, 3))

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

VERDICT_KEYS = (
    "engine_vs_oracle",
    "closed_form_vs_enumeration",
    "components_vs_generic",
    "genus_identity",
    "bound_sandwich",
    "diagonal_reflection",
    "period_property",
)


@dataclass
class RunReport:
    """One parameter point: inputs, results, verdicts and timings."""

    family: str
    params: dict
    genus: int
    period: int
    row_sizes: list
    cardinality: int
    lower_bound: int
    upper_bound: int
    homma_kim_bound: int
    verdicts: dict
    timings: dict = field(default_factory=dict)
    detail: str = ""

    @property
    def ok(self) -> bool:
        return all(v != FAIL for v in self.verdicts.values())

    def label(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.family}({inner})"


def _diff_sets(name, got, want, limit=5):
    got_set, want_set = set(got), set(want)
    extra = sorted(got_set - want_set)[:limit]
    missing = sorted(want_set - got_set)[:limit]
    return (f"{name}: {len(got_set)} vs {len(want_set)} points; "
            f"unexpected {extra}, missing {missing}")


class _Checks:
    """Accumulates verdicts and the first counterexample text."""

    def __init__(self):
        self.verdicts = {}
        self.details = []

    def record(self, name, ok, detail=""):
        self.verdicts[name] = PASS if ok else FAIL
        if not ok and detail:
            self.details.append(f"{name}: {detail}")

    def skip(self, name):
        self.verdicts[name] = SKIPPED

    def detail(self):
        return "; ".join(self.details)


def _base_report(family, params, gamma, boxed, result, checks, timings):
    return RunReport(
        family=family, params=dict(params), genus=gamma.genus,
        period=gamma.period, row_sizes=boxed.row_sizes(),
        cardinality=result.cardinality, lower_bound=result.lower_bound,
        upper_bound=result.upper_bound,
        homma_kim_bound=result.homma_kim_bound,
        verdicts=checks.verdicts, timings=timings, detail=checks.detail())


def _failed_report(family, params, exc):
    verdicts = {key: SKIPPED for key in VERDICT_KEYS}
    verdicts["internal_consistency"] = FAIL
    return RunReport(
        family=family, params=dict(params), genus=-1, period=-1,
        row_sizes=[], cardinality=-1, lower_bound=-1, upper_bound=-1,
        homma_kim_bound=-1, verdicts=verdicts,
        detail=f"{type(exc).__name__}: {exc}")


def _check_bounds(checks, result):
    card = result.cardinality
    ok = (result.lower_bound <= card <= result.upper_bound
          and card <= result.homma_kim_bound)
    checks.record("bound_sandwich", ok,
                  f"lower={result.lower_bound} card={card} "
                  f"upper={result.upper_bound} hk={result.homma_kim_bound}")


def _check_genus(checks, boxed):
    total = sum((k + 1) * n for k, n in enumerate(boxed.row_sizes()))
    checks.record("genus_identity", total == boxed.genus,
                  f"sum={total} genus={boxed.genus}")


def summarize_family(family: str, params: dict):
    """Summary-mode report for a closed-form family (no timings, oracle
    skipped; the verify command owns the expensive cross-checks)."""
    gamma, result, closed_card, fam_result = _family_routes(family, params)
    boxed = decompose(gamma)
    checks = _Checks()
    checks.skip("engine_vs_oracle")
    same = (closed_card == result.cardinality
            and fam_result.g0 == result.g0)
    checks.record("closed_form_vs_enumeration", same,
                  f"closed={closed_card} engine={result.cardinality}")
    checks.skip("components_vs_generic")
    _check_genus(checks, boxed)
    _check_bounds(checks, result)
    checks.skip("diagonal_reflection")
    checks.skip("period_property")
    report = _base_report(family, params, gamma, boxed, result, checks, {})
    return report, gamma, result


def summarize_generic(gamma: GeneratingSet, label: str):
    """Summary-mode report for a file-loaded generating set.

    There is no closed form to compare, so the direct oracle scan is run
    instead; family verdicts are marked skipped.
    """
    boxed = decompose(gamma)
    result = assemble_pure_gaps(boxed, verify=True)
    checks = _Checks()
    direct = pure_gaps_direct(gamma)
    checks.record("engine_vs_oracle", result.g0 == direct,
                  _diff_sets("G0", result.g0, direct))
    checks.skip("closed_form_vs_enumeration")
    checks.skip("components_vs_generic")
    _check_genus(checks, boxed)
    _check_bounds(checks, result)
    if boxed.diagonal:
        checks.record("diagonal_reflection",
                      all(not compute_g2(boxed, k) for k in range(boxed.kmax)),
                      "G2 not empty under the diagonal condition")
    else:
        checks.skip("diagonal_reflection")
    checks.record("period_property", check_period_property(gamma).ok,
                  "period displacement law violated")
    report = _base_report("generic", {"input": label}, gamma, boxed, result,
                          checks, {})
    return report, gamma, result


def _family_routes(family: str, params: dict):
    """(gamma, engine result, closed-form cardinality, explicit result)."""
    if family == "gk":
        q = params["q"]
        gamma = gk_mod.gk_generating_set(q)
        result = assemble_pure_gaps(decompose(gamma))
        return gamma, result, gk_mod.gk_card_g0(q), gk_mod.gk_pure_gaps(q)
    if family == "kummer":
        m, r = params["m"], params["r"]
        gamma = kummer_mod.kummer_generating_set(m, r)
        result = assemble_pure_gaps(decompose(gamma))
        return (gamma, result, kummer_mod.kummer_card_g0(m, r),
                kummer_mod.kummer_pure_gaps(m, r))
    raise ValueError(f"unknown family {family!r}")


def verify_point(family: str, params: dict) -> RunReport:
    """Run every cross-check for one family parameter point."""
    try:
        return _verify_point_checked(family, params)
    except ConsistencyError as exc:
        return _failed_report(family, params, exc)


def _verify_point_checked(family: str, params: dict) -> RunReport:
    timings = {}
    if family == "gk":
        q = params["q"]
        gamma = gk_mod.gk_generating_set(q)
    else:
        m, r = params["m"], params["r"]
        gamma = kummer_mod.kummer_generating_set(m, r)

    start = time.perf_counter()
    boxed = decompose(gamma)
    result = assemble_pure_gaps(boxed, verify=True)
    timings["decomposition_s"] = time.perf_counter() - start

    start = time.perf_counter()
    direct = pure_gaps_direct(gamma)
    timings["direct_oracle_s"] = time.perf_counter() - start

    start = time.perf_counter()
    if family == "gk":
        closed_card = gk_mod.gk_card_g0(q)
        fam_result = gk_mod.gk_pure_gaps(q)
    else:
        closed_card = kummer_mod.kummer_card_g0(m, r)
        fam_result = kummer_mod.kummer_pure_gaps(m, r)
    timings["closed_form_s"] = time.perf_counter() - start

    checks = _Checks()
    checks.record("engine_vs_oracle", result.g0 == direct,
                  _diff_sets("G0", result.g0, direct))
    same = (closed_card == result.cardinality == fam_result.cardinality
            and fam_result.g0 == result.g0)
    checks.record("closed_form_vs_enumeration", same,
                  f"closed={closed_card} engine={result.cardinality} "
                  f"explicit={fam_result.cardinality}")
    try:
        if family == "gk":
            gk_mod.verify_against_engine(q)
        else:
            kummer_mod.verify_against_engine(m, r)
        checks.record("components_vs_generic", True)
    except ConsistencyError as exc:
        checks.record("components_vs_generic", False, str(exc))
    _check_genus(checks, boxed)
    _check_bounds(checks, result)
    diagonal_ok = boxed.diagonal and all(
        not compute_g2(boxed, k) for k in range(boxed.kmax))
    checks.record("diagonal_reflection", diagonal_ok,
                  "diagonal condition or empty-G2 consequence failed")
    checks.record("period_property", check_period_property(gamma).ok,
                  "period displacement law violated")
    return _base_report(family, params, gamma, boxed, result, checks, timings)


def verify_special_ur1(u: int, r: int) -> RunReport:
    """Check the m = u*r + 1 closed form against real enumeration."""
    m = u * r + 1
    params = {"u": u, "r": r, "m": m}
    try:
        gamma = kummer_mod.kummer_generating_set(m, r)
        boxed = decompose(gamma)
        result = assemble_pure_gaps(boxed, verify=True)
        start = time.perf_counter()
        closed = kummer_mod.kummer_card_special_ur1(u, r)
        timing = {"closed_form_s": time.perf_counter() - start}
        direct = pure_gaps_direct(gamma)
    except ConsistencyError as exc:
        return _failed_report("kummer-ur1", params, exc)
    checks = _Checks()
    checks.record("special_vs_enumeration",
                  closed == result.cardinality == len(direct),
                  f"closed={closed} engine={result.cardinality} "
                  f"oracle={len(direct)}")
    if u == 1:
        checks.record("upper_bound_sharp", closed == result.upper_bound,
                      f"closed={closed} upper={result.upper_bound}")
    return _base_report("kummer-ur1", params, gamma, boxed, result, checks,
                        timing)


def verify_special_qn(q: int, N: int) -> RunReport:
    """Check the m = (q+1)/N closed form against real enumeration."""
    m = (q + 1) // N if N and (q + 1) % N == 0 else 0
    params = {"q": q, "N": N, "m": m}
    try:
        closed = kummer_mod.kummer_card_special_qN(q, N)
        gamma = kummer_mod.kummer_generating_set(m, q)
        boxed = decompose(gamma)
        result = assemble_pure_gaps(boxed, verify=True)
        direct = pure_gaps_direct(gamma)
    except ConsistencyError as exc:
        return _failed_report("kummer-qn", params, exc)
    checks = _Checks()
    checks.record("special_vs_enumeration",
                  closed == result.cardinality == len(direct),
                  f"closed={closed} engine={result.cardinality} "
                  f"oracle={len(direct)}")
    return _base_report("kummer-qn", params, gamma, boxed, result, checks, {})


def _dispatch(point):
    kind, params = point
    if kind == "gk":
        return verify_point("gk", params)
    if kind == "kummer":
        return verify_point("kummer", params)
    if kind == "ur1":
        return verify_special_ur1(params["u"], params["r"])
    if kind == "qn":
        return verify_special_qn(params["q"], params["N"])
    raise ValueError(f"unknown point kind {kind!r}")


def _max_workers() -> int:
    raw = os.environ.get("PUREGAPS_THREADS", "").strip()
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def map_points(points):
    """Run verification points, optionally in parallel, in stable order."""
    workers = min(_max_workers(), max(1, len(points)))
    if workers <= 1:
        return [_dispatch(p) for p in points]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_dispatch, points))


def build_verify_points(family: str, q_max: int = 4, mr_max: int = 15,
                        special: str | None = None, u_max: int = 3,
                        r_max: int = 10, qn_pairs=DEFAULT_QN_PAIRS):
    """The deterministic list of verification points for a grid request."""
    points = []
    if special == "ur1":
        points.extend(("ur1", {"u": u, "r": r})
                      for u in range(1, u_max + 1)
                      for r in range(2, r_max + 1))
        return points
    if special == "qn":
        points.extend(("qn", {"q": q, "N": N}) for q, N in qn_pairs)
        return points
    if family in ("gk", "all"):
        points.extend(("gk", {"q": q}) for q in range(2, q_max + 1))
    if family in ("kummer", "all"):
        points.extend(("kummer", {"m": m, "r": r})
                      for m in range(2, mr_max + 1)
                      for r in range(2, mr_max + 1) if gcd(m, r) == 1)
        points.extend(("ur1", {"u": u, "r": r})
                      for u in range(1, u_max + 1)
                      for r in range(2, r_max + 1))
        points.extend(("qn", {"q": q, "N": N}) for q, N in qn_pairs)
    return points


@dataclass
class BenchRow:
    """One (parameter point, method) timing with the equality gate."""

    family: str
    params: dict
    genus: int
    method: str
    seconds: float
    cardinality: int
    outputs_equal: bool


def bench_family(family: str, params: dict) -> list:
    """Time the box-decomposition route against the direct glb scan.

    Outputs are compared for exact equality before timings are returned;
    a mismatch raises ConsistencyError.
    """
    if family == "gk":
        gamma = gk_mod.gk_generating_set(params["q"])
    else:
        gamma = kummer_mod.kummer_generating_set(params["m"], params["r"])

    start = time.perf_counter()
    direct = pure_gaps_direct(gamma)
    t_direct = time.perf_counter() - start

    start = time.perf_counter()
    result = assemble_pure_gaps(decompose(gamma))
    t_box = time.perf_counter() - start

    equal = result.g0 == direct
    if not equal:
        raise ConsistencyError(
            _diff_sets(f"bench {family} {params}", result.g0, direct))
    return [
        BenchRow(family, dict(params), gamma.genus, "box-decomposition",
                 t_box, result.cardinality, equal),
        BenchRow(family, dict(params), gamma.genus, "direct-glb",
                 t_direct, len(direct), equal),
    ]
