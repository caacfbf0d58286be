"""Residual matching spectra.

For a maximum matching F of G, deleting the edges of F (keeping all
vertices) leaves a residual graph G - F.  The spectrum of G is the set of
residual matching numbers nu(G - F) over every maximum matching F; its
minimum and maximum are written ell(G) and L(G).  Everything here
enumerates maximum matchings by branch and bound, so results are exact
whenever the enumeration finishes under its cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, delete_edges
from .matching import Matching, max_matching, nu

TOLERANCE_KINDS = ("constant", "linear", "log", "sqrt", "identity")


class TruncatedSpectrumError(RuntimeError):
    """An exact answer was required but enumeration hit its cap."""


@dataclass(frozen=True)
class ToleranceFunction:
    """Non-negative rational-valued tolerance f(x) for the decision problem.

    kind 'log' means coefficient * floor(log2 x) (0 at x = 0) and 'sqrt'
    means coefficient * isqrt(x); both stay rational-valued on integers.
    'identity' is exactly f(x) = x and admits no coefficient.
    """

    kind: str
    coefficient: Fraction = Fraction(1)

    def __post_init__(self):
        if self.kind not in TOLERANCE_KINDS:
            raise ValueError(f"unknown tolerance kind {self.kind!r}")
        if self.coefficient < 0:
            raise ValueError("tolerance coefficient must be non-negative")
        if self.kind == "identity" and self.coefficient != 1:
            raise ValueError("identity tolerance admits no coefficient")

    def evaluate(self, x: int) -> Fraction:
        if x < 0:
            raise ValueError("tolerance functions take non-negative arguments")
        if self.kind == "constant":
            return self.coefficient
        if self.kind == "linear":
            return self.coefficient * x
        if self.kind == "log":
            return self.coefficient * (x.bit_length() - 1 if x >= 1 else 0)
        if self.kind == "sqrt":
            return self.coefficient * math.isqrt(x)
        return Fraction(x)


def parse_tolerance(spec: str) -> ToleranceFunction:
    """Parse 'identity', 'const:C', 'linear:p/q', 'log[:c]', 'sqrt[:c]'."""
    name, _, coeff = spec.partition(":")
    kind = {"const": "constant"}.get(name, name)
    if coeff:
        return ToleranceFunction(kind, Fraction(coeff))
    return ToleranceFunction(kind)


@dataclass(frozen=True)
class EnumerationResult:
    matchings: tuple[Matching, ...]
    truncated: bool


def _iter_maximum_matchings(g: Graph):
    """Yield every maximum matching of g exactly once, in the deterministic
    order induced by branching lowest edge in/out."""
    target = nu(g)
    n = g.vertex_count
    edges = g.sorted_edges()
    chosen: list[tuple[int, int]] = []

    def rec(avail: list[tuple[int, int]]):
        if len(chosen) == target:
            yield Matching(frozenset(chosen), n)
            return
        if len(chosen) + len(avail) < target:
            return
        if len(chosen) + nu(Graph(n, frozenset(avail))) < target:
            return
        e = avail[0]
        u, v = e
        chosen.append(e)
        yield from rec([f for f in avail[1:] if u not in f and v not in f])
        chosen.pop()
        yield from rec(avail[1:])

    yield from rec(edges)


def enumerate_maximum_matchings(g: Graph, cap: int = 10**6) -> EnumerationResult:
    """All maximum matchings of g, stopping (and flagging) after cap of them."""
    if cap < 1:
        raise ValueError("cap must be positive")
    out: list[Matching] = []
    truncated = False
    for m in _iter_maximum_matchings(g):
        if len(out) == cap:
            truncated = True
            break
        out.append(m)
    return EnumerationResult(tuple(out), truncated)


@dataclass(frozen=True)
class SpectrumReport:
    nu: int
    ell: int
    big_l: int
    achieved: frozenset[int]
    witness_min: Matching
    witness_max: Matching
    enumerated: int
    truncated: bool

    def to_json_dict(self) -> dict:
        return {
            "nu": self.nu,
            "ell": self.ell,
            "L": self.big_l,
            "achieved": sorted(self.achieved),
            "witness_min": [list(e) for e in self.witness_min.sorted_edges()],
            "witness_max": [list(e) for e in self.witness_max.sorted_edges()],
            "enumerated": self.enumerated,
            "truncated": self.truncated,
        }


def spectrum(g: Graph, cap: int = 10**6) -> SpectrumReport:
    """Residual matching numbers over all maximum matchings of g.

    When truncated, the reported values cover only the enumerated prefix and
    are upper/lower estimates rather than exact extremes.
    """
    result = enumerate_maximum_matchings(g, cap)
    best_min: tuple[int, Matching] | None = None
    best_max: tuple[int, Matching] | None = None
    achieved: set[int] = set()
    for m in result.matchings:
        r = nu(delete_edges(g, m.edges))
        achieved.add(r)
        if best_min is None or r < best_min[0]:
            best_min = (r, m)
        if best_max is None or r > best_max[0]:
            best_max = (r, m)
    assert best_min is not None and best_max is not None
    return SpectrumReport(
        nu=nu(g),
        ell=best_min[0],
        big_l=best_max[0],
        achieved=frozenset(achieved),
        witness_min=best_min[1],
        witness_max=best_max[1],
        enumerated=len(result.matchings),
        truncated=result.truncated,
    )


@dataclass(frozen=True)
class Problem1Result:
    answer: str  # yes / no / unknown
    witness: Matching | None
    enumerated: int
    truncated: bool


def decide_problem1(
    g: Graph, k: int, f: ToleranceFunction, cap: int = 10**6
) -> Problem1Result:
    """Does some maximum matching F of g satisfy |nu(g - F) - k| <= f(|V|)?

    'unknown' is only returned when the enumeration was truncated before a
    witness appeared.  f(x) = x short-circuits to yes: nu(g - F) and k both
    lie in [0, |V|/2], so the bound always holds.
    """
    if not 0 <= k <= g.vertex_count // 2:
        raise ValueError(f"k must lie in 0..{g.vertex_count // 2}, got {k}")
    if f.kind == "identity":
        return Problem1Result("yes", max_matching(g), 0, False)
    bound = f.evaluate(g.vertex_count)
    count = 0
    truncated = False
    for m in _iter_maximum_matchings(g):
        if count == cap:
            truncated = True
            break
        count += 1
        r = nu(delete_edges(g, m.edges))
        if abs(r - k) <= bound:
            return Problem1Result("yes", m, count, False)
    return Problem1Result("unknown" if truncated else "no", None, count, truncated)


@dataclass(frozen=True)
class BoundsReport:
    nu: int
    ell: int
    big_l: int
    has_perfect_matching: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_bounds(g: Graph, cap: int = 10**6) -> BoundsReport:
    """Verify ell <= L <= 2*ell, and 2L <= 3*ell when g has a perfect matching.

    These inequalities hold for every graph, so any violation signals an
    implementation bug; the check refuses to run on a truncated spectrum.
    """
    report = spectrum(g, cap)
    if report.truncated:
        raise TruncatedSpectrumError("spectrum truncated; bounds need exact values")
    ell, big_l = report.ell, report.big_l
    perfect = 2 * report.nu == g.vertex_count
    violations = []
    if not ell <= big_l:
        violations.append(f"ell <= L failed: {ell} > {big_l}")
    if not big_l <= 2 * ell:
        violations.append(f"L <= 2*ell failed: {big_l} > {2 * ell}")
    if perfect and not 2 * big_l <= 3 * ell:
        violations.append(f"2L <= 3*ell failed with perfect matching: {2 * big_l} > {3 * ell}")
    return BoundsReport(report.nu, ell, big_l, perfect, tuple(violations))


@dataclass(frozen=True)
class ApproxTrialRow:
    seed: int
    residual: int
    ratio_to_ell: Fraction | None
    ratio_to_big_l: Fraction | None


@dataclass(frozen=True)
class ApproxTrialReport:
    ell: int
    big_l: int
    rows: tuple[ApproxTrialRow, ...]
    ratios_defined: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def approx_trial(g: Graph, seeds, cap: int = 10**6) -> ApproxTrialReport:
    """Residuals of seeded maximum matchings against the exact spectrum.

    Every seeded residual must land in [ell, L]; the ratios r/ell in [1, 2]
    and r/L in [1/2, 1] whenever ell >= 1 (otherwise ratios are reported as
    undefined rather than computed).
    """
    report = spectrum(g, cap)
    if report.truncated:
        raise TruncatedSpectrumError("spectrum truncated; trial needs exact extremes")
    ell, big_l = report.ell, report.big_l
    defined = ell >= 1
    rows = []
    violations = []
    for seed in seeds:
        f = max_matching(g, seed)
        r = nu(delete_edges(g, f.edges))
        if not ell <= r <= big_l:
            violations.append(f"seed {seed}: residual {r} outside [{ell}, {big_l}]")
        r_ell = Fraction(r, ell) if defined else None
        r_big_l = Fraction(r, big_l) if defined else None
        if r_ell is not None and not 1 <= r_ell <= 2:
            violations.append(f"seed {seed}: r/ell = {r_ell} outside [1, 2]")
        if r_big_l is not None and not Fraction(1, 2) <= r_big_l <= 1:
            violations.append(f"seed {seed}: r/L = {r_big_l} outside [1/2, 1]")
        rows.append(ApproxTrialRow(seed, r, r_ell, r_big_l))
    return ApproxTrialReport(ell, big_l, tuple(rows), defined, tuple(violations))
