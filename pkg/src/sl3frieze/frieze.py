"""Friezes from unit-specialized families: quiddity rows, row recursions,
diamond validation and rendering.

Row/position conventions used throughout: the grid stores D_k(i), the value of
the triangle {i, i+1, i+k+2} (indices mod n), for k = 1..w and i = 1..n, with
w = n - 4. Row 1 is printed first; each later row shifts half a cell to the
right, and three border rows (1, 0, 0) frame the grid above and below. The top
recursion works with U_k(i), the value of {i, i+k+1, i+k+2}; the two are two
namings of one array: U_k(i) = D_{n-3-k}(i+k+1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InconsistentRowsError,
    InternalConsistencyError,
    InvalidInputError,
    MalformedFileError,
    PreconditionError,
)
from .family import Triangle
from .mutation import ValuedFamily
from .stargraph import build_star_graph

FRIEZE_SCHEMA_VERSION = 1

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class QuiddityRows:
    """The two directly computed rows: delta_low[i-1] = v({i,i+1,i+3}) and
    delta_high[i-1] = v({i,i+2,i+3})."""

    n: int
    delta_low: tuple
    delta_high: tuple

    def __post_init__(self):
        if len(self.delta_low) != self.n or len(self.delta_high) != self.n:
            raise InvalidInputError("quiddity rows must have one entry per point")
        if any(v == 0 for v in self.delta_low + self.delta_high):
            raise InvalidInputError("quiddity entries must be nonzero")

    def low(self, i: int) -> Fraction:
        return self.delta_low[(i - 1) % self.n]

    def high(self, i: int) -> Fraction:
        return self.delta_high[(i - 1) % self.n]


@dataclass(frozen=True)
class FriezeGrid:
    """Fundamental region of a frieze: rows[k-1][i-1] = D_k(i), horizontal
    period n, width w = n - 4 >= 1."""

    n: int
    rows: tuple  # of n-tuples of Fraction

    def __post_init__(self):
        if len(self.rows) < 1 or self.n != len(self.rows) + 4:
            raise InvalidInputError(
                f"period must exceed width by 4: n={self.n}, width={len(self.rows)}")
        for row in self.rows:
            if len(row) != self.n:
                raise InvalidInputError("every row must have one entry per point")

    @property
    def width(self) -> int:
        return len(self.rows)

    def entry(self, k: int, i: int) -> Fraction:
        return self.rows[k - 1][(i - 1) % self.n]

    def extended_row_count(self) -> int:
        return self.width + 6

    def ext_value(self, r: int, t: int) -> Fraction:
        """Row r of the bordered array (0,0,1,rows...,1,0,0) at period index t."""
        w = self.width
        if r in (0, 1, w + 4, w + 5):
            return ZERO
        if r in (2, w + 3):
            return ONE
        return self.rows[r - 3][t % self.n]


# -- Algorithm: almost continuous values at x ----------------------------------

def _star_value(vf: ValuedFamily, a: int, b: int, c: int) -> Fraction:
    t = tuple(sorted((a, b, c)))
    if t not in vf.values:
        raise InternalConsistencyError(f"border triangle {t} unexpectedly missing from family")
    return vf.values[t]


def almost_continuous_at(vf: ValuedFamily, x: int):
    """(v({x-2,x-1,x+1}), v({x-1,x+1,x+2})) for a family whose triangles
    through x all have value 1.

    Runs entirely on a working copy of the star graph at x: initialize each
    interior triangulation point's label with the sum of its border values
    (removing its leaves), handle x+2/x-2 specially since their edges to x+1 /
    x-1 are frozen, then repeatedly contract degree-2 points, adding labels,
    until only the three frozen edges remain.
    """
    ground = vf.family.ground
    wrap = ground.wrap
    for t in vf.family.triangles:
        if x in t and vf.values[t] != 1:
            raise PreconditionError(f"triangles through x={x} must all have value 1, {t} has {vf.values[t]}")
    g = build_star_graph(vf.family, x)
    xp, xm = wrap(x + 1), wrap(x - 1)
    xp2, xm2 = wrap(x + 2), wrap(x - 2)

    adj = {v: set(g.neighbours(v)) for v in g.vertices}
    tp = list(g.triangulation_points)
    labels = {}

    def drop_leaf(leaf, at):
        adj[at].discard(leaf)
        del adj[leaf]

    for idx in range(1, len(tp) - 1):
        p = tp[idx]
        seq = [tp[idx - 1]] + g.leaves_at(p) + [tp[idx + 1]]
        labels[p] = sum((_star_value(vf, p, seq[j], seq[j + 1]) for j in range(len(seq) - 1)),
                        start=ZERO)
        for leaf in g.leaves_at(p):
            drop_leaf(leaf, p)

    if xp2 in g.leaves:
        seq = g.leaves_at(xp) + [tp[1]]  # first leaf is x+2
        labels[xp] = sum((_star_value(vf, xp, seq[j], seq[j + 1]) for j in range(len(seq) - 1)),
                         start=ZERO)
        for leaf in g.leaves_at(xp):
            if leaf != xp2:
                drop_leaf(leaf, xp)

    if xm2 in g.leaves:
        seq = [tp[-2]] + g.leaves_at(xm)  # last leaf is x-2
        labels[xm] = sum((_star_value(vf, xm, seq[j], seq[j + 1]) for j in range(len(seq) - 1)),
                         start=ZERO)
        for leaf in g.leaves_at(xm):
            if leaf != xm2:
                drop_leaf(leaf, xm)

    current = [p for p in tp if p in adj and len(adj[p]) >= 2]
    edge_count = sum(len(nb) for nb in adj.values()) // 2

    def bump(point, delta):
        if point not in labels:
            raise InternalConsistencyError(f"missing label at {point} during contraction at x={x}")
        labels[point] += delta

    while edge_count > 3:
        p = next((q for q in current if q not in (xp, xm) and len(adj[q]) == 2), None)
        if p is None:
            raise InternalConsistencyError(
                f"no contractible degree-2 point left with {edge_count} edges at x={x}")
        if p in (xp2, xm2):
            # The frozen edge to x+1 (resp. x-1) stays; p becomes that point's
            # pinned leaf and hands its label over.
            anchor = xp if p == xp2 else xm
            (other,) = adj[p] - {anchor}
            labels[anchor] = labels[p]
            bump(other, labels[p])
            del labels[p]
            adj[p].discard(other)
            adj[other].discard(p)
            edge_count -= 1
            current.remove(p)
        else:
            u, v = adj[p]
            bump(u, labels[p])
            bump(v, labels[p])
            del labels[p]
            adj[u].discard(p)
            adj[v].discard(p)
            del adj[p]
            edge_count -= 2
            current.remove(p)

    if xm not in labels or xp not in labels:
        raise InternalConsistencyError(f"contraction finished without labels at x+-1 (x={x})")
    return labels[xm], labels[xp]


def quiddity_rows(vf: ValuedFamily) -> QuiddityRows:
    """Run the contraction at every x of a family specialized to 1; the value
    of {i,i+1,i+3} lands at delta_low[i], the value of {i,i+2,i+3} at
    delta_high[i]."""
    if any(v != 1 for v in vf.values.values()):
        raise PreconditionError("quiddity rows need the all-ones specialization")
    n = vf.family.ground.n
    wrap = vf.family.ground.wrap
    low = {}
    high = {}
    for x in vf.family.ground.points():
        lo, hi = almost_continuous_at(vf, x)
        low[wrap(x - 2)] = lo
        high[wrap(x - 1)] = hi
    return QuiddityRows(n,
                        tuple(low[i] for i in range(1, n + 1)),
                        tuple(high[i] for i in range(1, n + 1)))


# -- row recursions -------------------------------------------------------------

def extend_rows(q: QuiddityRows) -> FriezeGrid:
    """Fill the whole fundamental region from the two computed rows.

    The lower recursion builds D_2..D_w from D_1 and U_1; the upper recursion
    independently builds U_2..U_w, and the two fillings must agree under
    U_k(i) = D_{n-3-k}(i+k+1), else the input rows were inconsistent.
    """
    n = q.n
    w = n - 4
    if w < 2:
        raise InvalidInputError(f"need n >= 6, got n={n}")

    low = {1: tuple(q.delta_low)}

    def d(k, i):
        if k == 0:
            return ONE
        return low[k][(i - 1) % n]

    for k in range(2, w + 1):
        if k == 2:
            row = tuple(d(1, i) * d(1, i + 1) - q.high(i + 1) for i in range(1, n + 1))
        else:
            row = tuple(d(1, i) * d(k - 1, i + 1) - q.high(i + 1) * d(k - 2, i + 2) + d(k - 3, i + 3)
                        for i in range(1, n + 1))
        low[k] = row

    high = {1: tuple(q.delta_high)}

    def u(k, i):
        if k == 0:
            return ONE
        return high[k][(i - 1) % n]

    for k in range(2, w + 1):
        if k == 2:
            row = tuple(u(1, i + 1) * u(1, i) - q.low(i) for i in range(1, n + 1))
        else:
            row = tuple(u(1, i + k - 1) * u(k - 1, i) - q.low(i + k - 2) * u(k - 2, i) + u(k - 3, i)
                        for i in range(1, n + 1))
        high[k] = row

    for k in range(1, w + 1):
        for i in range(1, n + 1):
            if u(k, i) != d(n - 3 - k, i + k + 1):
                raise InconsistentRowsError(
                    f"row recursions disagree at U_{k}({i}): {u(k, i)} vs {d(n - 3 - k, i + k + 1)}")

    return FriezeGrid(n, tuple(low[k] for k in range(1, w + 1)))


def dual_row_offset(n: int, k: int):
    """(m, shift) such that U_k(i) = D_m(i + shift): both sides name the
    triangle {i, i+k+1, i+k+2}."""
    return n - 3 - k, k + 1


# -- Pluecker triple layout -------------------------------------------------------

def plucker_triple(n: int, k: int, i: int) -> Triangle:
    """Index triple occupying grid row k at position i: {i, i+1, i+k+2} mod n,
    sorted, possibly with a repeat for the zero border rows (k in {-2,-1} and
    {w+2, w+3} give repeated indices, k=0 and k=w+1 the continuous triples)."""
    pts = sorted(((i - 1) % n + 1, i % n + 1, (i + k + 1) % n + 1))
    return tuple(pts)


def build_plucker_frieze_map(n: int) -> dict:
    """(k, i) -> triple for the bordered grid, k = -2 .. w+3."""
    if n < 6:
        raise InvalidInputError(f"need n >= 6, got n={n}")
    w = n - 4
    return {(k, i): plucker_triple(n, k, i)
            for k in range(-2, w + 4) for i in range(1, n + 1)}


# -- diamond validation -----------------------------------------------------------

def diamond_matrix(grid: FriezeGrid, r: int, t: int, k: int, mirrored: bool = False) -> list:
    """k x k diamond anchored at its left corner, row r / period index t:
    entry [i][j] sits at bordered row r+i-j, period index t+j. The mirrored
    reading (columns reversed) is kept only for the orientation self-test."""
    mat = [[grid.ext_value(r + i - j, t + j) for j in range(k)] for i in range(k)]
    if mirrored:
        mat = [row[::-1] for row in mat]
    return mat


def _det(mat) -> Fraction:
    m = [row[:] for row in mat]
    size = len(m)
    det = ONE
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] / m[col][col]
            if factor:
                m[r] = [m[r][j] - factor * m[col][j] for j in range(size)]
    return det


@dataclass
class FriezeReport:
    n: int
    width: int
    is_sl3: bool
    is_tame: bool
    integral: bool
    positive: bool
    sl3_failures: list  # (row, period index, determinant)
    tame_failures: list

    @property
    def ok(self) -> bool:
        return self.is_sl3 and self.is_tame


def validate_frieze(grid: FriezeGrid) -> FriezeReport:
    """Check determinant 1 on every 3x3 diamond and determinant 0 on every 4x4
    diamond of the bordered array over one period; diamonds crossing the
    period seam are included, which is what ties the rows together mod n."""
    w = grid.width
    n = grid.n
    sl3_failures = []
    for r in range(2, w + 4):
        for t in range(n):
            det = _det(diamond_matrix(grid, r, t, 3))
            if det != 1:
                sl3_failures.append((r, t, det))
    tame_failures = []
    for r in range(3, w + 3):
        for t in range(n):
            det = _det(diamond_matrix(grid, r, t, 4))
            if det != 0:
                tame_failures.append((r, t, det))
    entries = [e for row in grid.rows for e in row]
    return FriezeReport(
        n=n,
        width=w,
        is_sl3=not sl3_failures,
        is_tame=not tame_failures,
        integral=all(e.denominator == 1 for e in entries),
        positive=all(e > 0 for e in entries),
        sl3_failures=sl3_failures,
        tame_failures=tame_failures,
    )


# -- rendering and files ------------------------------------------------------------

def format_rational(v: Fraction) -> str:
    if v.denominator == 1:
        return str(v.numerator)
    return f"{v.numerator}/{v.denominator}"


def render_frieze(grid: FriezeGrid) -> str:
    """Staircase text layout: border rows included, each row indented half a
    cell further than the one above."""
    w = grid.width
    rows = [[grid.ext_value(r, t) for t in range(grid.n)] for r in range(w + 6)]
    cell = max(len(format_rational(v)) for row in rows for v in row)
    lines = []
    for r, row in enumerate(rows):
        pad = " " * (cell * r)
        body = (" " * cell).join(format_rational(v).ljust(cell) for v in row)
        lines.append((pad + body).rstrip())
    return "\n".join(lines) + "\n"


def parse_rendered_frieze(text: str) -> FriezeGrid:
    """Inverse of render_frieze (whitespace insensitive)."""
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if len(rows) < 7:
        raise MalformedFileError("rendered frieze needs at least 7 rows")
    w = len(rows) - 6
    n = w + 4
    for r in (0, 1, w + 4, w + 5):
        if rows[r] != ["0"] * n:
            raise MalformedFileError(f"row {r} must be {n} zeros")
    for r in (2, w + 3):
        if rows[r] != ["1"] * n:
            raise MalformedFileError(f"row {r} must be {n} ones")
    try:
        body = tuple(tuple(Fraction(tok) for tok in rows[r]) for r in range(3, w + 3))
    except (ValueError, ZeroDivisionError) as e:
        raise MalformedFileError(f"bad frieze entry: {e}") from e
    for row in body:
        if len(row) != n:
            raise MalformedFileError("inner rows must all have the same length")
    return FriezeGrid(n, body)


def frieze_to_dict(grid: FriezeGrid) -> dict:
    return {
        "schema_version": FRIEZE_SCHEMA_VERSION,
        "n": grid.n,
        "rows": [[format_rational(v) for v in row] for row in grid.rows],
    }


def frieze_from_dict(data) -> FriezeGrid:
    if not isinstance(data, dict):
        raise MalformedFileError("frieze file must be a JSON object")
    # "validation" is the summary block the CLI attaches on output; readers
    # recompute it, so its content is ignored here.
    unknown = set(data) - {"n", "rows", "schema_version", "validation"}
    if unknown:
        raise MalformedFileError(f"unknown keys in frieze file: {sorted(unknown)}")
    if "n" not in data or "rows" not in data:
        raise MalformedFileError('frieze file needs keys "n" and "rows"')
    n = data["n"]
    rows = data["rows"]
    if not isinstance(n, int) or not isinstance(rows, list) or not rows:
        raise MalformedFileError('"n" must be an integer and "rows" a nonempty list')
    def parse_entry(e):
        if isinstance(e, bool) or not isinstance(e, (int, str)):
            raise MalformedFileError(f"bad frieze entry {e!r}")
        try:
            return Fraction(e)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedFileError(f"bad frieze entry {e!r}: {exc}") from exc

    parsed = []
    for row in rows:
        if not isinstance(row, list):
            raise MalformedFileError("each row must be a list")
        parsed.append(tuple(parse_entry(e) for e in row))
    try:
        return FriezeGrid(n, tuple(parsed))
    except InvalidInputError as e:
        raise MalformedFileError(str(e)) from e


def dump_frieze(grid: FriezeGrid) -> str:
    return json.dumps(frieze_to_dict(grid), indent=2) + "\n"


def load_frieze(text: str) -> FriezeGrid:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedFileError(f"invalid JSON: {e}") from e
    return frieze_from_dict(data)
