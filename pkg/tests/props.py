"""Seeded randomized property runners shared by the property and
acceptance suites.

Each runner draws its cases from a fixed-seed RNG, asserts the property on
every case and returns the number of cases exercised.  Family computations
are memoized so repeated draws of the same parameters stay cheap.
"""

from math import gcd
import random

from puregaps.engine import (
    _g4_general,
    assemble_pure_gaps,
    compute_g2,
    compute_g4,
    decompose,
)
from puregaps.gk import gk_generating_set
from puregaps.kummer import kummer_generating_set
from puregaps.lattice import glb, incomparable, lub
from puregaps.oracle import check_period_property

GK_QS = (2, 3, 4)
KUMMER_PAIRS = tuple((m, r) for m in range(2, 16) for r in range(2, 16)
                     if gcd(m, r) == 1)
FAMILY_POOL = tuple([("gk", (q,)) for q in GK_QS]
                    + [("kummer", pair) for pair in KUMMER_PAIRS])

_gammas = {}
_boxes = {}
_results = {}


def get_gamma(point):
    if point not in _gammas:
        kind, params = point
        if kind == "gk":
            _gammas[point] = gk_generating_set(*params)
        else:
            _gammas[point] = kummer_generating_set(*params)
    return _gammas[point]


def get_boxed(point):
    if point not in _boxes:
        _boxes[point] = decompose(get_gamma(point))
    return _boxes[point]


def get_result(point):
    if point not in _results:
        _results[point] = assemble_pure_gaps(get_boxed(point), verify=True)
    return _results[point]


def _le(p, q):
    return p[0] <= q[0] and p[1] <= q[1]


def run_lattice_laws(n, seed=0x1A77):
    """Commutativity, idempotence, the order laws and the incomparability
    characterizations of lub/glb on random points."""
    rng = random.Random(seed)
    for _ in range(n):
        p = (rng.randrange(0, 2**50), rng.randrange(0, 2**50))
        q = (rng.randrange(0, 2**50), rng.randrange(0, 2**50))
        up, dn = lub(p, q), glb(p, q)
        assert up == lub(q, p) and dn == glb(q, p)
        assert lub(p, p) == p and glb(p, p) == p
        assert _le(dn, p) and _le(dn, q)
        assert _le(p, up) and _le(q, up)
        assert (dn == p) == _le(p, q)
        assert incomparable(p, q) == (dn not in (p, q)) == (up not in (p, q))
    return n


def run_genus_identity(n, seed=0x6E05):
    """sum (k+1)|rows[k]| equals the genus on random family sets."""
    rng = random.Random(seed)
    for _ in range(n):
        boxed = get_boxed(rng.choice(FAMILY_POOL))
        total = sum((k + 1) * size for k, size in enumerate(boxed.row_sizes()))
        assert total == boxed.genus
    return n


def run_period_checker(n, seed=0x9E21):
    """The displacement-law checker passes on family sets and flags a
    single tampered image."""
    rng = random.Random(seed)
    for _ in range(n):
        gamma = get_gamma(rng.choice(FAMILY_POOL))
        assert check_period_property(gamma).ok
        pts = list(gamma.points)
        idx = rng.randrange(len(pts))
        a, b = pts[idx]
        pts[idx] = (a, b + gamma.period)
        assert not check_period_property(pts, gamma.period).ok
    return n


def run_swap_symmetry(n, seed=0x51AB):
    """Coordinate-swap symmetry of the generating set carries over to the
    pure gap set."""
    rng = random.Random(seed)
    for _ in range(n):
        point = rng.choice(FAMILY_POOL)
        gamma = get_gamma(point)
        pset = set(map(tuple, gamma.points))
        assert {(b, a) for a, b in pset} == pset
        g0 = set(get_result(point).g0)
        assert {(b, a) for a, b in g0} == g0
    return n


def run_translate_disjointness(n, seed=0x7D15):
    """The (k, j) translates of the per-box pure gap sets are pairwise
    disjoint, so the union size is the weighted per-box sum."""
    rng = random.Random(seed)
    for _ in range(n):
        point = rng.choice(FAMILY_POOL)
        result = get_result(point)
        period = get_gamma(point).period
        union = set()
        expected = 0
        for k, comps in result.per_box.items():
            box = set()
            for comp in comps:
                box.update(comp)
            expected += (k + 1) * len(box)
            for j in range(k + 1):
                union.update((a - j * period, b + j * period) for a, b in box)
        assert len(union) == expected == result.cardinality
    return n


def run_diagonal_agreement(n, seed=0xD1A6):
    """When every generating point has equal residues, the second
    component is empty and the reflected fast path equals the general
    fourth-component formula, box by box."""
    rng = random.Random(seed)
    checked = 0
    for _ in range(n):
        boxed = get_boxed(rng.choice(FAMILY_POOL))
        assert boxed.diagonal
        k = rng.randrange(max(1, boxed.kmax))
        assert compute_g2(boxed, k) == []
        assert compute_g4(boxed, k) == _g4_general(boxed, k)
        checked += 1
    return checked


def run_kummer_empty_boxes(n, seed=0xE3B0):
    """For m much larger than r the top box index stays r-2: no row may
    appear beyond it."""
    rng = random.Random(seed)
    for _ in range(n):
        r = rng.randrange(2, 7)
        m = rng.randrange(r * r + 1, r * r + 60)
        while gcd(m, r) != 1:
            m += 1
        boxed = get_boxed(("kummer", (m, r)))
        assert all(k <= r - 2 for k in boxed.rows)
        assert boxed.kmax <= r - 1
    return n


ALL_RUNNERS = (
    ("lattice_laws", run_lattice_laws),
    ("genus_identity", run_genus_identity),
    ("period_checker", run_period_checker),
    ("swap_symmetry", run_swap_symmetry),
    ("translate_disjointness", run_translate_disjointness),
    ("diagonal_agreement", run_diagonal_agreement),
    ("kummer_empty_boxes", run_kummer_empty_boxes),
)
