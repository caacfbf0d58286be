"""Compile exact-3-SAT instances into residual-spectrum hardness artifacts.

The compiler lays gadgets out on an integer lattice.  Every clause owns a
band of four rows; every variable owns four columns.  An occurrence of a
variable in a clause places a *port square* (corners v11/v12 on top,
v21/v22 below) in the shared cells, plus an *anchor square* (u11/u12/u21/u22)
whose position encodes the polarity: below the port square for a plain
occurrence, to its left for a negated one.  Port squares of the same
variable are joined into one even cycle; a spine path with one anchor edge
per clause keeps everything connected.  The two perfect matchings of each
variable cycle (all vertical edges / all horizontal edges) encode the truth
value of that variable, and deleting an encoded perfect matching leaves a
residual matching number that counts satisfied clauses exactly.

Two dials of the construction exist: the "L" variant (clause rails in
column 0, residual 10m-1+sat, maximum degree four) drives the upper end of
the spectrum, the "ell" variant (in-clause port links, residual 11m-1-sat,
maximum degree three) the lower end.

All coordinates are metadata; adjacency is purely combinatorial.  Vertex
ids are assigned by sorting lattice points, so rebuilding an artifact from
the same input is byte-reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import Graph, build_graph, bipartition, degree_profile, delete_edges, is_connected
from .matching import Matching, matching_from_pairs, max_matching, nu, validate_matching
from .spectrum import enumerate_maximum_matchings

VARIANTS = ("L", "ell")

Point = tuple[int, int]


class DimacsError(ValueError):
    """Raised for CNF input that is not in the exact-3 DIMACS fragment."""


class ConstructionError(RuntimeError):
    """Internal layout invariant failed while building an artifact."""


class StructuralDecodeError(ValueError):
    """A perfect matching does not decompose into pure cycle orientations."""


@dataclass(frozen=True)
class CnfInstance:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


@dataclass(frozen=True)
class Assignment:
    values: tuple[bool, ...]

    def of(self, var: int) -> bool:
        return self.values[var - 1]

    def bits(self) -> str:
        return "".join("T" if v else "F" for v in self.values)


def all_assignments(num_vars: int):
    for bits in itertools.product((False, True), repeat=num_vars):
        yield Assignment(bits)


def literal_satisfied(lit: int, alpha: Assignment) -> bool:
    value = alpha.of(abs(lit))
    return value if lit > 0 else not value


def sat_count(cnf: CnfInstance, alpha: Assignment) -> int:
    """Number of clauses with at least one satisfied literal."""
    return sum(
        1 for cl in cnf.clauses if any(literal_satisfied(lit, alpha) for lit in cl)
    )


def parse_dimacs(text: str) -> CnfInstance:
    """Parse DIMACS CNF restricted to exactly three distinct variables per
    clause, with every declared variable used at least once."""
    num_vars: int | None = None
    num_clauses: int | None = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if num_vars is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                num_vars, num_clauses = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            if num_vars < 1 or num_clauses < 1:
                raise DimacsError(f"line {lineno}: header counts must be positive")
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause data before header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad token {tok!r}") from None
            if lit == 0:
                clauses.append(tuple(current))
                current.clear()
            else:
                current.append(lit)
    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    if current:
        raise DimacsError("unterminated clause (missing trailing 0)")
    if len(clauses) != num_clauses:
        raise DimacsError(
            f"header declares {num_clauses} clauses but {len(clauses)} found"
        )
    for idx, cl in enumerate(clauses, start=1):
        if len(cl) != 3:
            raise DimacsError(f"clause {idx}: expected exactly 3 literals, got {len(cl)}")
        variables = [abs(lit) for lit in cl]
        for v in variables:
            if not 1 <= v <= num_vars:
                raise DimacsError(f"clause {idx}: variable {v} out of range 1..{num_vars}")
        if len(set(variables)) != 3:
            raise DimacsError(f"clause {idx}: repeated variable")
    used = {abs(lit) for cl in clauses for lit in cl}
    missing = sorted(set(range(1, num_vars + 1)) - used)
    if missing:
        raise DimacsError(f"declared variable(s) never used: {missing}")
    return CnfInstance(num_vars, tuple(clauses))  # type: ignore[arg-type]


GADGET_ROLES = ("u11", "u12", "u21", "u22", "v11", "v12", "v21", "v22")

# Anchor square below the ports: its feed edges run vertically into the
# bottom port corners.
_POSITIVE_EDGES = (
    ("u11", "u12"),
    ("u21", "u22"),
    ("u12", "v21"),
    ("u22", "v22"),
    ("v21", "v22"),
    ("v22", "v12"),
    ("v11", "v12"),
)
# Anchor square left of the ports: feed edges run horizontally into the
# left port corners.
_NEGATIVE_EDGES = (
    ("u11", "u12"),
    ("u21", "u22"),
    ("u12", "v21"),
    ("u22", "v11"),
    ("v21", "v22"),
    ("v22", "v12"),
    ("v11", "v12"),
)


def _gadget_cells(i: int, j: int, positive: bool) -> dict[str, Point]:
    left, right = 4 * i - 1, 4 * i
    cells = {
        "v21": (left, 4 * j - 1),
        "v22": (right, 4 * j - 1),
        "v11": (left, 4 * j),
        "v12": (right, 4 * j),
    }
    if positive:
        cells.update(
            u11=(left, 4 * j - 3),
            u21=(right, 4 * j - 3),
            u12=(left, 4 * j - 2),
            u22=(right, 4 * j - 2),
        )
    else:
        cells.update(
            u11=(4 * i - 3, 4 * j - 1),
            u12=(4 * i - 2, 4 * j - 1),
            u21=(4 * i - 3, 4 * j),
            u22=(4 * i - 2, 4 * j),
        )
    return cells


@dataclass(frozen=True)
class ReductionArtifact:
    graph: Graph
    cnf: CnfInstance
    variant: str
    gadget_index: dict[tuple[int, int], dict[str, int]]
    cycle_index: dict[int, tuple[tuple[tuple[int, int], str], ...]]
    path_vertices: tuple[int, ...]
    path_pairs: tuple[tuple[int, int], ...]
    u_edges: tuple[tuple[int, int], ...]
    column_edges: tuple[tuple[int, int], ...]
    anchor_edges: tuple[tuple[int, int], ...]
    link_edges: tuple[tuple[int, int], ...]
    expected: dict = field(default_factory=dict)


def expected_counts(m: int, variant: str) -> dict:
    if variant == "L":
        return {
            "vertices": 32 * m,
            "edges": 37 * m - 1,
            "nu": 16 * m,
            "max_degree": 4,
            "k_param": 11 * m - 1,
        }
    return {
        "vertices": 28 * m,
        "edges": 31 * m - 1,
        "nu": 14 * m,
        "max_degree": 3,
        "k_param": None,
    }


def build_artifact(cnf: CnfInstance, variant: str) -> ReductionArtifact:
    """Lay out the artifact graph for cnf in the requested variant."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    m = cnf.num_clauses
    n = cnf.num_vars

    points: set[Point] = set()
    edge_pts: set[tuple[Point, Point]] = set()

    def add_point(p: Point):
        if p in points:
            raise ConstructionError(f"lattice collision at {p}")
        points.add(p)

    def add_edge(a: Point, b: Point):
        e = (a, b) if a < b else (b, a)
        if e in edge_pts:
            raise ConstructionError(f"duplicate edge {e}")
        if ((a[0] + a[1]) - (b[0] + b[1])) % 2 == 0:
            raise ConstructionError(f"edge {e} does not cross the parity classes")
        edge_pts.add(e)

    # spine path in column -1
    spine = [(-1, y) for y in range(1, 4 * m + 1)]
    for p in spine:
        add_point(p)
    for a, b in zip(spine, spine[1:]):
        add_edge(a, b)

    gadget_cells: dict[tuple[int, int], dict[str, Point]] = {}
    occurrences: dict[int, list[tuple[int, int]]] = {i: [] for i in range(1, n + 1)}
    column_cells: dict[int, dict[str, Point]] = {}

    for j, clause in enumerate(cnf.clauses, start=1):
        for t, lit in enumerate(clause, start=1):
            i = abs(lit)
            cells = _gadget_cells(i, j, lit > 0)
            for p in cells.values():
                add_point(p)
            for a, b in _POSITIVE_EDGES if lit > 0 else _NEGATIVE_EDGES:
                add_edge(cells[a], cells[b])
            gadget_cells[(j, t)] = cells
            occurrences[i].append((j, t))
        if variant == "L":
            rail = {
                "low0": (0, 4 * j - 3),
                "low1": (0, 4 * j - 2),
                "high0": (0, 4 * j - 1),
                "high1": (0, 4 * j),
            }
            for p in rail.values():
                add_point(p)
            add_edge(rail["low0"], rail["low1"])
            add_edge(rail["high0"], rail["high1"])
            for t in (1, 2, 3):
                add_edge(rail["low0"], gadget_cells[(j, t)]["v12"])
                add_edge(rail["high0"], gadget_cells[(j, t)]["v12"])
            column_cells[j] = rail
        else:
            # Port links chain the three port squares.  The in-corner must be
            # one the satisfied-side residual leaves free, which depends on
            # where the anchor square sits: v11 for plain occurrences, v22
            # for negated ones.
            for t in (1, 2):
                dst_role = "v11" if clause[t] > 0 else "v22"
                add_edge(gadget_cells[(j, t)]["v12"], gadget_cells[(j, t + 1)][dst_role])

    # one anchor edge per clause keeps the artifact connected; the spine end
    # it uses, (-1, 4j-2), is matched by a spine edge in every residual, so
    # anchors never enlarge a residual matching
    for j in range(1, m + 1):
        add_edge((-1, 4 * j - 2), gadget_cells[(j, 1)]["u11"])

    # variable cycles: each port square contributes its three drawn edges;
    # consecutive occurrences (clause order, wrapping) are joined v11 -> v21
    # along the square's left column
    cycle_pts: dict[int, list[tuple[Point, Point, str]]] = {}
    for i in range(1, n + 1):
        occs = occurrences[i]
        if not occs:
            raise ConstructionError(f"variable {i} has no occurrences")
        walk: list[tuple[Point, Point, str]] = []
        for idx, key in enumerate(occs):
            cells = gadget_cells[key]
            nxt = gadget_cells[occs[(idx + 1) % len(occs)]]
            walk.append((cells["v21"], cells["v22"], "horizontal"))
            walk.append((cells["v22"], cells["v12"], "vertical"))
            walk.append((cells["v12"], cells["v11"], "horizontal"))
            walk.append((cells["v11"], nxt["v21"], "vertical"))
            add_edge(cells["v11"], nxt["v21"])
        cycle_pts[i] = walk

    expected = expected_counts(m, variant)
    if len(points) != expected["vertices"]:
        raise ConstructionError(
            f"{len(points)} lattice points, expected {expected['vertices']}"
        )
    if len(edge_pts) != expected["edges"]:
        raise ConstructionError(f"{len(edge_pts)} edges, expected {expected['edges']}")

    ids = {p: k for k, p in enumerate(sorted(points), start=1)}
    coords = {k: p for p, k in ids.items()}
    edges = [(ids[a], ids[b]) for a, b in sorted(edge_pts)]
    graph = build_graph(len(points), edges, coords)

    def pair(a: Point, b: Point) -> tuple[int, int]:
        x, y = ids[a], ids[b]
        return (x, y) if x < y else (y, x)

    gadget_index = {
        key: {role: ids[p] for role, p in cells.items()}
        for key, cells in gadget_cells.items()
    }
    cycle_index = {
        i: tuple((pair(a, b), lab) for a, b, lab in walk)
        for i, walk in cycle_pts.items()
    }
    path_vertices = tuple(ids[p] for p in spine)
    path_pairs = tuple(pair(spine[2 * k], spine[2 * k + 1]) for k in range(2 * m))
    u_edges = tuple(
        pair(cells[a], cells[b])
        for key, cells in sorted(gadget_cells.items())
        for a, b in (("u11", "u12"), ("u21", "u22"))
    )
    column_edges = tuple(
        pair(rail[a], rail[b])
        for j, rail in sorted(column_cells.items())
        for a, b in (("low0", "low1"), ("high0", "high1"))
    )
    anchor_edges = tuple(
        pair((-1, 4 * j - 2), gadget_cells[(j, 1)]["u11"]) for j in range(1, m + 1)
    )
    link_edges = tuple(
        pair(gadget_cells[(j, t)]["v12"], gadget_cells[(j, t + 1)]["v11" if cl[t] > 0 else "v22"])
        for j, cl in enumerate(cnf.clauses, start=1)
        for t in (1, 2)
        if variant == "ell"
    )
    return ReductionArtifact(
        graph=graph,
        cnf=cnf,
        variant=variant,
        gadget_index=gadget_index,
        cycle_index=cycle_index,
        path_vertices=path_vertices,
        path_pairs=path_pairs,
        u_edges=u_edges,
        column_edges=column_edges,
        anchor_edges=anchor_edges,
        link_edges=link_edges,
        expected=expected,
    )


def _orientation_for(variant: str, value: bool) -> str:
    # L encodes TRUE as the vertical cycle matching, ell as the horizontal
    # one; the two variants reward opposite orientations in the residual.
    if variant == "L":
        return "vertical" if value else "horizontal"
    return "horizontal" if value else "vertical"


def encode_assignment(art: ReductionArtifact, alpha: Assignment) -> Matching:
    """Perfect matching of the artifact realizing the assignment."""
    if len(alpha.values) != art.cnf.num_vars:
        raise ValueError(
            f"assignment covers {len(alpha.values)} variables, need {art.cnf.num_vars}"
        )
    pairs: list[tuple[int, int]] = []
    pairs.extend(art.path_pairs)
    pairs.extend(art.u_edges)
    pairs.extend(art.column_edges)
    for i in range(1, art.cnf.num_vars + 1):
        want = _orientation_for(art.variant, alpha.of(i))
        pairs.extend(e for e, lab in art.cycle_index[i] if lab == want)
    return matching_from_pairs(pairs, art.graph.vertex_count)


def decode_matching(art: ReductionArtifact, f: Matching) -> Assignment:
    """Read the assignment back out of a perfect matching.

    Raises StructuralDecodeError when some variable cycle carries neither a
    pure vertical nor a pure horizontal orientation.
    """
    flags = validate_matching(art.graph, f)
    if not flags.valid or not flags.perfect:
        raise ValueError("decode requires a valid perfect matching of the artifact")
    values: list[bool] = []
    for i in range(1, art.cnf.num_vars + 1):
        vertical = frozenset(e for e, lab in art.cycle_index[i] if lab == "vertical")
        horizontal = frozenset(e for e, lab in art.cycle_index[i] if lab == "horizontal")
        hit = f.edges & (vertical | horizontal)
        if hit == vertical:
            orient = "vertical"
        elif hit == horizontal:
            orient = "horizontal"
        else:
            raise StructuralDecodeError(
                f"cycle of variable {i} is not purely oriented in this matching"
            )
        values.append(orient == _orientation_for(art.variant, True))
    return Assignment(tuple(values))


def expected_residual(art: ReductionArtifact, alpha: Assignment) -> int:
    """Residual matching number after deleting the encoded matching."""
    m = art.cnf.num_clauses
    s = sat_count(art.cnf, alpha)
    if art.variant == "L":
        return 10 * m - 1 + s
    return 11 * m - 1 - s


@dataclass(frozen=True)
class ResidualCheck:
    assignment: str
    sat: int
    expected: int
    actual: int
    decode_ok: bool

    @property
    def ok(self) -> bool:
        return self.expected == self.actual and self.decode_ok


@dataclass(frozen=True)
class MatchingCensus:
    """Census of all maximum matchings of an artifact.

    Encodings are exactly the matchings that decode (pure cycle
    orientations), so pure_count must equal 2^n in both variants.  The L
    variant admits no other maximum matchings at all.  The ell variant may
    carry extra hybrid matchings that route through port links, but those
    must never push the residual minimum below the encoded minimum, or the
    artifact would stop witnessing the spectrum floor.
    """

    pure_expected: int
    count: int
    truncated: bool
    pure_count: int
    hybrid_count: int
    residual_min: int
    residual_max: int
    encoded_min: int
    encoded_max: int
    residuals_ok: bool


@dataclass(frozen=True)
class Certificate:
    variant: str
    m: int
    vertices: int
    edges: int
    expected_vertices: int
    expected_edges: int
    max_degree: int
    expected_max_degree: int
    bipartite: bool
    connected: bool
    nu_value: int
    expected_nu: int
    k_param: int | None
    residual_checks: tuple[ResidualCheck, ...]
    census: MatchingCensus | None
    discrepancies: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_json_dict(self) -> dict:
        return {
            "variant": self.variant,
            "m": self.m,
            "V": self.vertices,
            "expectedV": self.expected_vertices,
            "E": self.edges,
            "expectedE": self.expected_edges,
            "maxDeg": self.max_degree,
            "expectedMaxDeg": self.expected_max_degree,
            "bipartite": self.bipartite,
            "connected": self.connected,
            "nu": self.nu_value,
            "expectedNu": self.expected_nu,
            "kParam": self.k_param,
            "edgeRule": "per-clause spine anchor at (-1, 4j-2)",
            "residualChecks": [
                {
                    "assignment": rc.assignment,
                    "sat": rc.sat,
                    "expected": rc.expected,
                    "actual": rc.actual,
                    "decodeOk": rc.decode_ok,
                    "ok": rc.ok,
                }
                for rc in self.residual_checks
            ],
            "census": None
            if self.census is None
            else {
                "pureExpected": self.census.pure_expected,
                "count": self.census.count,
                "truncated": self.census.truncated,
                "pureCount": self.census.pure_count,
                "hybridCount": self.census.hybrid_count,
                "residualMin": self.census.residual_min,
                "residualMax": self.census.residual_max,
                "encodedMin": self.census.encoded_min,
                "encodedMax": self.census.encoded_max,
                "residualsOk": self.census.residuals_ok,
            },
            "discrepancies": list(self.discrepancies),
            "ok": self.ok,
        }


def verify_artifact(
    art: ReductionArtifact, exhaustive: bool = False, limit: int = 6
) -> Certificate:
    """Structural certificate, optionally with exhaustive semantic checks.

    Structural: vertex/edge census against the closed-form expectations,
    parity bipartiteness, connectivity, maximum degree, and nu = |V|/2 via
    the matching engine.  Exhaustive (when the variable count is within
    limit): encodes every assignment, checks the residual identity and
    decode round-trip, and takes a full census of maximum matchings (there
    must be exactly one per assignment).
    """
    g = art.graph
    exp = art.expected
    discrepancies: list[str] = []

    def check(name: str, expected_value, actual_value):
        if expected_value != actual_value:
            discrepancies.append(f"{name}: expected {expected_value}, got {actual_value}")

    check("vertices", exp["vertices"], g.vertex_count)
    check("edges", exp["edges"], g.edge_count)
    prof = degree_profile(g)
    check("max_degree", exp["max_degree"], prof["max_degree"])
    b = bipartition(g)
    parity_ok = b is not None and b.side0 == frozenset(
        v for v, (x, y) in g.coords.items() if (x + y) % 2 == 0
    )
    if not parity_ok:
        discrepancies.append("bipartite: parity classes do not two-color the artifact")
    connected = is_connected(g)
    if not connected:
        discrepancies.append("connected: artifact is disconnected")
    nu_value = nu(g)
    check("nu", exp["nu"], nu_value)
    if 2 * exp["nu"] != exp["vertices"]:
        discrepancies.append("nu: expectation is not |V|/2")

    residual_checks: list[ResidualCheck] = []
    census: MatchingCensus | None = None
    if exhaustive and art.cnf.num_vars <= limit:
        for alpha in all_assignments(art.cnf.num_vars):
            f = encode_assignment(art, alpha)
            flags = validate_matching(g, f)
            if not (flags.valid and flags.perfect):
                discrepancies.append(f"encode({alpha.bits()}): not a perfect matching")
                continue
            actual = nu(delete_edges(g, f.edges))
            want = expected_residual(art, alpha)
            try:
                decode_ok = decode_matching(art, f) == alpha
            except (StructuralDecodeError, ValueError):
                decode_ok = False
            rc = ResidualCheck(alpha.bits(), sat_count(art.cnf, alpha), want, actual, decode_ok)
            residual_checks.append(rc)
            if not rc.ok:
                discrepancies.append(
                    f"residual({alpha.bits()}): expected {want}, got {actual},"
                    f" decode_ok={decode_ok}"
                )
        pure_expected = 2**art.cnf.num_vars
        enum = enumerate_maximum_matchings(g, cap=max(256, 8 * pure_expected))
        pure = 0
        hybrid = 0
        residuals_ok = True
        residuals: list[int] = []
        for f in enum.matchings:
            r = nu(delete_edges(g, f.edges))
            residuals.append(r)
            try:
                alpha = decode_matching(art, f)
            except StructuralDecodeError:
                hybrid += 1
                continue
            pure += 1
            if r != expected_residual(art, alpha):
                residuals_ok = False
        encoded = [rc.actual for rc in residual_checks]
        census = MatchingCensus(
            pure_expected=pure_expected,
            count=len(enum.matchings),
            truncated=enum.truncated,
            pure_count=pure,
            hybrid_count=hybrid,
            residual_min=min(residuals),
            residual_max=max(residuals),
            encoded_min=min(encoded),
            encoded_max=max(encoded),
            residuals_ok=residuals_ok,
        )
        if census.truncated:
            discrepancies.append("census: enumeration truncated, cannot certify")
        if census.pure_count != pure_expected:
            discrepancies.append(
                f"census: {census.pure_count} decodable maximum matchings,"
                f" expected {pure_expected}"
            )
        if art.variant == "L" and census.hybrid_count:
            discrepancies.append(
                f"census: {census.hybrid_count} non-encoding maximum matchings"
                " in a variant that forbids them"
            )
        if census.residual_min != census.encoded_min:
            discrepancies.append(
                f"census: residual minimum {census.residual_min} differs from"
                f" encoded minimum {census.encoded_min}"
            )
        if not census.residuals_ok:
            discrepancies.append("census: a decodable matching misses its residual value")

    return Certificate(
        variant=art.variant,
        m=art.cnf.num_clauses,
        vertices=g.vertex_count,
        edges=g.edge_count,
        expected_vertices=exp["vertices"],
        expected_edges=exp["edges"],
        max_degree=prof["max_degree"],
        expected_max_degree=exp["max_degree"],
        bipartite=parity_ok,
        connected=connected,
        nu_value=nu_value,
        expected_nu=exp["nu"],
        k_param=exp["k_param"],
        residual_checks=tuple(residual_checks),
        census=census,
        discrepancies=tuple(discrepancies),
    )


def calibration(variant: str, eps: Fraction) -> Fraction:
    """Inapproximability gap delta for the chosen variant.

    L: requires 0 < eps < 1/88, delta = 11(1-eps) - 10 - 7/8.
    ell: requires 0 < eps < 1/80, delta = 11 - 7/8 - 10(1+eps).
    Both deltas land in the open interval (0, 1/8).
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    eps = Fraction(eps)
    if variant == "L":
        if not 0 < eps < Fraction(1, 88):
            raise ValueError(f"eps must lie in (0, 1/88), got {eps}")
        delta = 11 * (1 - eps) - 10 - Fraction(7, 8)
    else:
        if not 0 < eps < Fraction(1, 80):
            raise ValueError(f"eps must lie in (0, 1/80), got {eps}")
        delta = 11 - Fraction(7, 8) - 10 * (1 + eps)
    assert 0 < delta < Fraction(1, 8)
    return delta


def additive_threshold(c: Fraction, eps: Fraction) -> bool:
    """Whether the additive coefficient c is small enough for hardness at
    inapproximability strength eps: c < 1/256 - eps/32, exactly."""
    c = Fraction(c)
    eps = Fraction(eps)
    if c <= 0:
        raise ValueError(f"c must be positive, got {c}")
    if not 0 < eps < Fraction(1, 8):
        raise ValueError(f"eps must lie in (0, 1/8), got {eps}")
    return c < Fraction(1, 256) - eps / 32
