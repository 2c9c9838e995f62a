"""Average kernel sizes, zeta-series coefficients, rank distributions,
and the numerical constant-rank / orbital-equivalence certifiers.

The average kernel size ("ask") of a module M of matrices is
(1/|M|) sum_{m in M} |Ker m|, kernels taken for the left row-vector
action.  It is computed two independent ways: directly, by enumerating
module elements, and through the orbit matrix C(x), using the identity
ask = sum over x in R^I of 1/|image of C(x)|.
"""
from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .linalg import Mat, divisor_profile, image_size, kernel_size
from .modrep import ModuleRep, ShapeMismatch
from .predictions import Prediction
from .rings import ExtField, PadicQuotient, Ring

DEFAULT_BUDGET = 10**7


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class AskResult:
    value: Fraction
    module_size: int
    method: str


def _profile_kernel_size(profile: Sequence[int], ring: Ring, rows: int) -> int:
    img = 1
    for v in profile:
        img *= ring.p ** (ring.residue_log * (ring.cap - v))
    return ring.cardinality() ** rows // img


def _profile_image_size(profile: Sequence[int], ring: Ring) -> int:
    img = 1
    for v in profile:
        img *= ring.p ** (ring.residue_log * (ring.cap - v))
    return img


def direct_profile_counts(rep: ModuleRep, ring: Ring,
                          budget: int = DEFAULT_BUDGET,
                          use_fast: bool = True) -> Counter:
    """Divisor-profile census over all coefficient tuples of the generators."""
    k = rep.rank
    size = ring.cardinality() ** k
    if size > budget:
        raise BudgetExceeded(f"{size} module elements exceed budget {budget}")
    if k == 0:
        zero = Mat.zero(ring, len(rep.I), len(rep.J))
        return Counter({divisor_profile(zero): 1})
    if use_fast and not isinstance(ring, ExtField) and size > 20000:
        from .fastcount import profile_counts
        n = ring.cap if isinstance(ring, PadicQuotient) else 1
        return Counter(profile_counts(rep.gens, ring.p, n))
    counts: Counter = Counter()
    for coeffs in itertools.product(list(ring.elements()), repeat=k):
        counts[divisor_profile(rep.element(ring, coeffs))] += 1
    return counts


def ask_direct(rep: ModuleRep, ring: Ring, budget: int = DEFAULT_BUDGET,
               use_fast: bool = True) -> AskResult:
    """Brute-force ask by enumerating every module element."""
    counts = direct_profile_counts(rep, ring, budget, use_fast)
    total = sum(n for n in counts.values())
    ker_sum = sum(n * _profile_kernel_size(prof, ring, len(rep.I))
                  for prof, n in counts.items())
    return AskResult(Fraction(ker_sum, total), total, "direct")


def ask_orbit(rep: ModuleRep, ring: Ring, budget: int = DEFAULT_BUDGET) -> AskResult:
    """ask via the orbit matrix: sum over x in R^I of 1/|image C(x)|."""
    dI = len(rep.I)
    size = ring.cardinality() ** dI
    if size > budget:
        raise BudgetExceeded(f"{size} orbit points exceed budget {budget}")
    value = Fraction(0)
    for x in itertools.product(list(ring.elements()), repeat=dI):
        value += Fraction(1, image_size(rep.orbit_matrix_at(ring, x)))
    return AskResult(value, ring.cardinality() ** rep.rank, "orbit")


def ask(rep: ModuleRep, ring: Ring, method: str = "orbit",
        budget: int = DEFAULT_BUDGET) -> AskResult:
    if method == "direct":
        return ask_direct(rep, ring, budget)
    if method == "orbit":
        return ask_orbit(rep, ring, budget)
    raise ValueError(f"unknown method {method!r}")


def zeta_coefficients(rep: ModuleRep, p: int, n_max: int, method: str = "orbit",
                      budget: int = DEFAULT_BUDGET) -> list[Fraction]:
    """[c_0, ..., c_{n_max}] with c_k = ask over Z/p^k (c_0 = 1)."""
    out = [Fraction(1)]
    for k in range(1, n_max + 1):
        out.append(ask(rep, PadicQuotient(p, k), method, budget).value)
    return out


@dataclass(frozen=True)
class CoefficientCheck:
    n: int
    brute: Fraction
    predicted: Fraction
    match: bool


@dataclass(frozen=True)
class VerifyReport:
    prediction: str
    q: int
    coefficients: tuple[CoefficientCheck, ...]
    passed: bool


def verify_prediction(rep: ModuleRep, prediction: Prediction, p: int, n_max: int,
                      method: str = "orbit", budget: int = DEFAULT_BUDGET,
                      residue_log: int = 1) -> VerifyReport:
    """Compare brute-force zeta coefficients against the closed form at q = p^residue_log."""
    q = p**residue_log
    predicted = prediction.series(q, n_max)
    brute = zeta_coefficients(rep, p, n_max, method, budget)
    checks = tuple(CoefficientCheck(n, brute[n], predicted[n], brute[n] == predicted[n])
                   for n in range(n_max + 1))
    return VerifyReport(prediction.name, q, checks, all(c.match for c in checks))


@dataclass(frozen=True)
class RankDistribution:
    counts: dict[int, int]
    q: int

    def ask_value(self, rows: int, dim: int) -> Fraction:
        """Recover ask from the census: sum_r count(r) q^{rows-r} / q^dim."""
        total = sum(self.counts.values())
        acc = sum(n * self.q ** (rows - r) for r, n in self.counts.items())
        return Fraction(acc, total)


def rank_distribution(rep: ModuleRep, field: Ring,
                      budget: int = DEFAULT_BUDGET) -> RankDistribution:
    if field.cap != 1:
        raise ValueError("rank distributions require a field")
    counts = direct_profile_counts(rep, field, budget)
    by_rank: dict[int, int] = {}
    for prof, n in counts.items():
        r = sum(1 for v in prof if v == 0)
        by_rank[r] = by_rank.get(r, 0) + n
    return RankDistribution(by_rank, field.cardinality())


# ---------------------------------------------------------------------------
# Constant-rank and orbital-equivalence certifiers.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointReport:
    checked: int
    violations: tuple = ()
    mode: str = "exhaustive"
    passed: bool = True


def _coker_is_free_of_rank(profile: Sequence[int], cap: int, cols: int, l: int) -> bool:
    """Cokernel of the matrix is ring^l  <=>  no valuation strictly between
    0 and cap, and cols - #zeros = l."""
    zeros = sum(1 for v in profile if v == 0)
    middles = sum(1 for v in profile if 0 < v < cap)
    return middles == 0 and cols - zeros == l


def _unit_coordinate_points(ring: Ring, dim: int, mode: str, samples: int,
                            seed: int, all_units: bool):
    """Points x in ring^dim: exhaustive over fields, sampled over Z/p^n.

    all_units=True restricts every coordinate to units (non-degenerate
    points); otherwise at least one coordinate must be a unit.
    """
    if ring.cap == 1 and mode == "exhaustive":
        for x in itertools.product(list(ring.elements()), repeat=dim):
            units = [ring.is_unit(c) for c in x]
            if all_units and all(units) or (not all_units and any(units)):
                yield x
    else:
        rng = random.Random(seed)
        units = [u for u in ring.units()]
        elems = [e for e in ring.elements()]
        for _ in range(samples):
            if all_units:
                yield tuple(rng.choice(units) for _ in range(dim))
            else:
                x = tuple(rng.choice(elems) for _ in range(dim))
                while not any(ring.is_unit(c) for c in x):
                    x = tuple(rng.choice(elems) for _ in range(dim))
                yield x


def constant_rank_check(rep: ModuleRep, ring: Ring, l: int,
                        mode: str = "exhaustive", samples: int = 10**4,
                        seed: int = 0, budget: int = DEFAULT_BUDGET) -> PointReport:
    """Check coker C(x) = ring^l at every point with a unit coordinate
    (exhaustive over fields, seeded unit-coordinate samples over Z/p^n)."""
    dim = len(rep.I)
    if ring.cap == 1 and mode == "exhaustive" and ring.cardinality() ** dim > budget:
        raise BudgetExceeded("point space too large; use mode='sample'")
    effective_mode = mode if ring.cap == 1 else "sample"
    violations = []
    checked = 0
    for x in _unit_coordinate_points(ring, dim, mode, samples, seed, all_units=False):
        checked += 1
        prof = divisor_profile(rep.orbit_matrix_at(ring, x))
        if not _coker_is_free_of_rank(prof, ring.cap, len(rep.J), l):
            if len(violations) < 10:
                violations.append((x, prof))
    return PointReport(checked, tuple(violations), effective_mode, not violations)


def orbital_equivalence_check(rep_big: ModuleRep, rep_sub: ModuleRep, ring: Ring,
                              mode: str = "exhaustive", samples: int = 10**4,
                              seed: int = 0, budget: int = DEFAULT_BUDGET) -> PointReport:
    """Equal divisor profiles of the two orbit matrices at every
    non-degenerate point (all coordinates non-zero over a field; all
    coordinates units over Z/p^n, sampled)."""
    if rep_big.I != rep_sub.I or rep_big.J != rep_sub.J:
        raise ShapeMismatch("representations must share index sets")
    dim = len(rep_big.I)
    if ring.cap == 1 and mode == "exhaustive" and ring.cardinality() ** dim > budget:
        raise BudgetExceeded("point space too large; use mode='sample'")
    effective_mode = mode if ring.cap == 1 else "sample"
    violations = []
    checked = 0
    for x in _unit_coordinate_points(ring, dim, mode, samples, seed, all_units=True):
        checked += 1
        pb = divisor_profile(rep_big.orbit_matrix_at(ring, x))
        ps = divisor_profile(rep_sub.orbit_matrix_at(ring, x))
        if pb != ps:
            if len(violations) < 10:
                violations.append((x, pb, ps))
    return PointReport(checked, tuple(violations), effective_mode, not violations)


# ---------------------------------------------------------------------------
# Seeded helpers.
# ---------------------------------------------------------------------------

def random_unit_assignment(d: int, e: int, q: int, rng: random.Random):
    """Random unit matrix for F_q checks: entries uniform in 1..q-1."""
    from .colouring import UnitAssignment
    u = {(i, j): rng.randrange(1, q)
         for i in range(1, d + 1) for j in range(1, e + 1)}
    return UnitAssignment(d, e, u)
