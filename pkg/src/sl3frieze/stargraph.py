"""The star graph of a family at a point x and its structural classification.

For a family F and a point x, the graph has one vertex per point co-occurring
with x and one edge {a,b} per triangle {x,a,b}. For maximal weakly separated
families the vertices of degree >= 2 (triangulation points) induce a polygon
triangulation, everything else is a leaf hanging off a triangulation point, and
the graph can be realized back into a maximal family.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cyclic import GroundSet, position_from, sorted_from
from .errors import (
    ConditionViolationError,
    InternalConsistencyError,
    InvalidInputError,
    MalformedFileError,
)
from .family import Family, greedy_complete, is_maximal_family, make_family

STAR_GRAPH_SCHEMA_VERSION = 1

STRUCTURE_RULES = {
    "polygon.boundary": "consecutive triangulation points must be adjacent",
    "polygon.noncrossing": "chords between triangulation points must not cross",
    "polygon.faces": "inner faces of the triangulation must all be triangles",
    "leaf.attachment": "non-triangulation vertices must have degree 1 into a triangulation point",
    "leaf.location": "a leaf must lie between the neighbours of its triangulation point",
}


@dataclass(frozen=True)
class StarGraph:
    x: int
    ground: GroundSet
    vertices: frozenset
    edges: frozenset  # of ascending 2-tuples
    triangulation_points: tuple  # ordered by <_x
    leaves: dict = field(compare=False)  # leaf -> its sole neighbour

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbours(self, v: int) -> list:
        out = [b if a == v else a for a, b in self.edges if v in (a, b)]
        return sorted_from(self.x, out, self.ground.n)

    def leaves_at(self, p: int) -> list:
        """Leaves attached to p, in <_x order."""
        ls = [l for l, att in self.leaves.items() if att == p]
        return sorted_from(self.x, ls, self.ground.n)

    def same_edges(self, other: "StarGraph") -> bool:
        return self.x == other.x and self.ground == other.ground and self.edges == other.edges


@dataclass
class StructureReport:
    ok: bool
    violations: list  # of (rule_id, witness string)


def star_subfamily(fam: Family, x: int) -> Family:
    """The triangles of the family containing x."""
    if not fam.ground.contains(x):
        raise InvalidInputError(f"point {x!r} outside 1..{fam.ground.n}")
    ts = frozenset(t for t in fam.triangles if x in t)
    return Family(fam.ground, ts, validated=fam.validated)


def star_graph_from_edges(x: int, ground: GroundSet, edges) -> StarGraph:
    """Classify an explicit edge list; tolerant of graphs that violate the
    structure theorem (verification is a separate step)."""
    if not ground.contains(x):
        raise InvalidInputError(f"point {x!r} outside 1..{ground.n}")
    edge_set = set()
    for e in edges:
        a, b = e
        if a == b or not ground.contains(a) or not ground.contains(b) or x in (a, b):
            raise InvalidInputError(f"bad star-graph edge {e!r}")
        edge_set.add((min(a, b), max(a, b)))
    degree = {}
    for a, b in edge_set:
        degree[a] = degree.get(a, 0) + 1
        degree[b] = degree.get(b, 0) + 1
    vertices = frozenset(degree)
    tpoints = tuple(sorted_from(x, [v for v, d in degree.items() if d >= 2], ground.n))
    leaves = {}
    for v, d in degree.items():
        if d == 1:
            (nb,) = [b if a == v else a for a, b in edge_set if v in (a, b)]
            leaves[v] = nb
    return StarGraph(x, ground, vertices, frozenset(edge_set), tpoints, leaves)


def build_star_graph(fam: Family, x: int) -> StarGraph:
    """Star graph of a maximal weakly separated family at x."""
    if not is_maximal_family(fam):
        raise InvalidInputError("family is not maximal; star-graph classification needs maximality")
    sub = star_subfamily(fam, x)
    edges = [tuple(p for p in t if p != x) for t in sub.sorted_triangles()]
    g = star_graph_from_edges(x, fam.ground, edges)
    n = fam.ground.n
    tp = g.triangulation_points
    if not tp or tp[0] != fam.ground.wrap(x + 1) or tp[-1] != fam.ground.wrap(x - 1):
        raise InternalConsistencyError(
            f"triangulation points of a maximal family must run from x+1 to x-1, got {tp} at x={x}, n={n}")
    return g


def _chords_cross(e1, e2) -> bool:
    """Two chords with endpoints on a circle cross iff their endpoint pairs
    interleave; chords sharing an endpoint never cross."""
    a, b = e1
    c, d = e2
    if len({a, b, c, d}) < 4:
        return False
    c_in = (a < c < b)
    d_in = (a < d < b)
    return c_in != d_in


def verify_structure_theorem(g: StarGraph) -> StructureReport:
    """Check the classification claims on a star graph, reporting violations
    instead of raising."""
    violations = []
    tp = g.triangulation_points
    tset = set(tp)
    r = len(tp)

    if r < 2:
        violations.append(("polygon.faces", f"only {r} triangulation points"))
    else:
        t_edges = [e for e in g.edges if e[0] in tset and e[1] in tset]
        boundary = {tuple(sorted((tp[i], tp[(i + 1) % r]))) for i in range(r)}
        for e in sorted(boundary):
            if e not in g.edges:
                violations.append(("polygon.boundary", f"missing edge {e}"))
        te = sorted(t_edges)
        for i, e1 in enumerate(te):
            for e2 in te[i + 1:]:
                if _chords_cross(e1, e2):
                    violations.append(("polygon.noncrossing", f"edges {e1} and {e2} cross"))
        if len(t_edges) != 2 * r - 3:
            # Euler: inner faces = E - V + 1; all triangular iff E = 2V - 3.
            violations.append(("polygon.faces",
                               f"{len(t_edges)} edges on {r} points, expected {2 * r - 3}"))

    for v in sorted(g.vertices):
        if v in tset:
            continue
        nbs = g.neighbours(v)
        if len(nbs) != 1 or nbs[0] not in tset:
            violations.append(("leaf.attachment", f"vertex {v} has neighbours {nbs}"))

    n = g.ground.n
    x = g.x
    for leaf in sorted(g.leaves):
        att = g.leaves[leaf]
        if att not in tset:
            continue  # already reported under leaf.attachment
        i = tp.index(att)
        if i == 0:
            lo, hi = tp[0], tp[1] if r > 1 else tp[0]
        elif i == r - 1:
            lo, hi = tp[r - 2], tp[r - 1]
        else:
            lo, hi = tp[i - 1], tp[i + 1]
        pos = position_from(x, leaf, n)
        if not (position_from(x, lo, n) < pos < position_from(x, hi, n)):
            violations.append(("leaf.location",
                               f"leaf {leaf} at {att} outside interval ({lo},{hi})"))

    return StructureReport(ok=not violations, violations=violations)


def _incident_sequence(g: StarGraph, i: int) -> list:
    """Points incident to triangulation point tp[i], ordered: previous
    triangulation point, its leaves in <_x order, next triangulation point
    (cyclic conventions at the ends)."""
    tp = g.triangulation_points
    r = len(tp)
    prev_t = tp[(i - 1) % r]
    next_t = tp[(i + 1) % r]
    return [prev_t] + g.leaves_at(tp[i]) + [next_t]


def _border_candidates(g: StarGraph) -> list:
    """The border triangles {B, P_j, P_j+1} read off the graph, skipping the
    two wrap-around slots at the first and last triangulation point."""
    out = []
    tp = g.triangulation_points
    r = len(tp)
    for i, b in enumerate(tp):
        seq = _incident_sequence(g, i)
        for j in range(len(seq) - 1):
            if i == 0 and j == 0:
                continue
            if i == r - 1 and j == len(seq) - 2:
                continue
            tri = (b, seq[j], seq[j + 1])
            if len(set(tri)) != 3:
                raise InternalConsistencyError(f"degenerate border triangle {tri}")
            out.append(tuple(sorted(tri)))
    return out


def border_triangles(fam: Family, x: int) -> list:
    """Border triangles of the family at x; each is guaranteed to already lie
    in the family, so a miss signals an upstream bug."""
    g = build_star_graph(fam, x)
    tris = _border_candidates(g)
    for t in tris:
        if t not in fam.triangles:
            raise InternalConsistencyError(f"border triangle {t} missing from family at x={x}")
    return tris


# -- the order on triangles through x, used by the property-test suite --------

def star_precedes(A, B, x: int, n: int) -> bool:
    """A <= B in the nesting order on triangles through x: writing A={x,a,b},
    B={x,c,d} with a <_x b and c <_x d, this is a <=_x c and d <=_x b."""
    if x not in A or x not in B:
        raise InvalidInputError("both triangles must contain x")
    a, b = sorted((p for p in A if p != x), key=lambda p: position_from(x, p, n))
    c, d = sorted((p for p in B if p != x), key=lambda p: position_from(x, p, n))
    return (position_from(x, a, n) <= position_from(x, c, n)
            and position_from(x, d, n) <= position_from(x, b, n))


def star_open_interval(fam: Family, A, B, x: int) -> list:
    """Triangles of the family strictly between A and B in the nesting order."""
    n = fam.ground.n
    out = []
    for C in star_subfamily(fam, x).sorted_triangles():
        if C in (A, B):
            continue
        if star_precedes(A, C, x, n) and star_precedes(C, B, x, n):
            out.append(C)
    return out


# -- realization of admissible graphs ------------------------------------------

def _check_realizable(g: StarGraph):
    """Conditions (i)-(v) for a candidate star graph to come from a maximal
    family; raises ConditionViolationError naming the first failed condition."""
    x, n = g.x, g.ground.n
    wrap = g.ground.wrap
    tp = g.triangulation_points
    tset = set(tp)
    r = len(tp)

    xp, xm = wrap(x + 1), wrap(x - 1)
    if xp not in tset or xm not in tset:
        raise ConditionViolationError("i", f"x+1={xp} and x-1={xm} must be triangulation points")
    if tp[0] != xp or tp[-1] != xm:
        raise ConditionViolationError("i", f"triangulation points must run from {xp} to {xm}, got {tp}")
    t_edges = sorted(e for e in g.edges if e[0] in tset and e[1] in tset)
    boundary = {tuple(sorted((tp[i], tp[(i + 1) % r]))) for i in range(r)}
    for e in sorted(boundary):
        if e not in g.edges:
            raise ConditionViolationError("i", f"polygon boundary edge {e} missing")
    for i, e1 in enumerate(t_edges):
        for e2 in t_edges[i + 1:]:
            if _chords_cross(e1, e2):
                raise ConditionViolationError("i", f"edges {e1} and {e2} cross")
    if len(t_edges) != 2 * r - 3:
        raise ConditionViolationError("i", f"not a full triangulation: {len(t_edges)} edges on {r} points")

    # (ii) holds by construction: triangulation points are the degree->=2 vertices.

    for leaf in sorted(g.leaves):
        att = g.leaves[leaf]
        if att not in tset:
            raise ConditionViolationError("iii", f"leaf {leaf} attaches to non-triangulation vertex {att}")
        pos = position_from(x, leaf, n)
        below = max((t for t in tp if position_from(x, t, n) < pos),
                    key=lambda t: position_from(x, t, n))
        above = min((t for t in tp if position_from(x, t, n) > pos),
                    key=lambda t: position_from(x, t, n))
        if att not in (below, above):
            raise ConditionViolationError(
                "iii", f"leaf {leaf} attaches to {att}, not a nearest triangulation point {below}/{above}")

    pairs = sorted(g.leaves.items())
    for l1, t1 in pairs:
        for l2, t2 in pairs:
            p1, p2 = position_from(x, t1, n), position_from(x, t2, n)
            if p1 < p2 and position_from(x, l1, n) >= position_from(x, l2, n):
                raise ConditionViolationError("iv", f"leaves {l1} (at {t1}) and {l2} (at {t2}) out of order")

    xp2, xm2 = wrap(x + 2), wrap(x - 2)
    if xp2 not in g.vertices or xm2 not in g.vertices:
        raise ConditionViolationError("v", f"x+2={xp2} and x-2={xm2} must be vertices")
    if tuple(sorted((xp, xp2))) not in g.edges or tuple(sorted((xm, xm2))) not in g.edges:
        raise ConditionViolationError("v", f"frozen edges {{{xp},{xp2}}} and {{{xm2},{xm}}} must be present")


# -- JSON format ---------------------------------------------------------------
#
# {"x": 1, "n": 8, "edges": [[2,3], [3,4], ...]}  (optional "schema_version")

def star_graph_to_dict(g: StarGraph) -> dict:
    return {
        "schema_version": STAR_GRAPH_SCHEMA_VERSION,
        "x": g.x,
        "n": g.ground.n,
        "edges": sorted([list(e) for e in g.edges]),
    }


def star_graph_from_dict(data) -> StarGraph:
    if not isinstance(data, dict):
        raise MalformedFileError("star-graph file must be a JSON object")
    unknown = set(data) - {"x", "n", "edges", "schema_version"}
    if unknown:
        raise MalformedFileError(f"unknown keys in star-graph file: {sorted(unknown)}")
    for key in ("x", "n", "edges"):
        if key not in data:
            raise MalformedFileError(f'star-graph file needs key "{key}"')
    try:
        ground = GroundSet(data["n"])
    except InvalidInputError as e:
        raise MalformedFileError(str(e)) from e
    edges = data["edges"]
    if not isinstance(edges, list) or not all(isinstance(e, list) and len(e) == 2 for e in edges):
        raise MalformedFileError('"edges" must be a list of point pairs')
    try:
        return star_graph_from_edges(data["x"], ground, [tuple(e) for e in edges])
    except InvalidInputError as e:
        raise MalformedFileError(str(e)) from e


def realize_star_graph(g: StarGraph) -> Family:
    """Construct a maximal weakly separated family whose star graph at g.x is
    exactly g, following the two-phase construction: star triangles plus the
    border family, then greedy completion."""
    _check_realizable(g)
    x = g.x
    star_triangles = [tuple(sorted((x, a, b))) for a, b in g.edges]
    base = star_triangles + _border_candidates(g)
    try:
        fam = make_family(g.ground, sorted(set(base)), validate=True)
    except InvalidInputError as e:
        raise InternalConsistencyError(f"realization base family not weakly separated: {e}") from e
    full = greedy_complete(fam)
    rebuilt = build_star_graph(full, x)
    if not rebuilt.same_edges(g):
        raise InternalConsistencyError("realized family does not reproduce the candidate star graph")
    return full
