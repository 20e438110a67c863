"""Mutations of maximal weakly separated families and exact value propagation.

A move is determined by a point z and a cyclically ordered quadruple
(a, b, c, d) such that the five triangles {z,a,b}, {z,b,c}, {z,c,d}, {z,d,a},
{z,a,c} all lie in the family; applying it exchanges {z,a,c} for {z,b,d} and
the three-term relation

    v(zac) * v(zbd) = v(zab) * v(zcd) + v(zad) * v(zbc)

forces the value of the new triangle. The oracle at the bottom of the module
evaluates arbitrary Pluecker coordinates by breadth-first search over moves.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction

from .cyclic import GroundSet, is_cyclic
from .errors import (
    BudgetExceededError,
    FrozenLeafError,
    InternalConsistencyError,
    InvalidInputError,
    InvalidMoveError,
    PreconditionError,
    ZeroPivotError,
)
from .family import (
    Family,
    Triangle,
    frozen_triangles,
    greedy_complete,
    is_maximal_family,
    is_weakly_separated_family,
)
from .stargraph import _incident_sequence, build_star_graph

DEFAULT_ORACLE_BUDGET = 100_000


@dataclass(frozen=True)
class MutationMove:
    z: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        pts = (self.z, self.a, self.b, self.c, self.d)
        if len(set(pts)) != 5:
            raise InvalidInputError(f"move points must be pairwise distinct: {pts}")
        if not is_cyclic((self.a, self.b, self.c, self.d)):
            raise InvalidInputError(f"(a,b,c,d)={(self.a, self.b, self.c, self.d)} is not cyclically ordered")

    @property
    def removed(self) -> Triangle:
        return tuple(sorted((self.z, self.a, self.c)))

    @property
    def added(self) -> Triangle:
        return tuple(sorted((self.z, self.b, self.d)))

    def required(self) -> tuple:
        """The five triangles that must be present: zab, zbc, zcd, zda, zac."""
        z, a, b, c, d = self.z, self.a, self.b, self.c, self.d
        return tuple(tuple(sorted(t)) for t in ((z, a, b), (z, b, c), (z, c, d), (z, d, a), (z, a, c)))

    def inverse(self) -> "MutationMove":
        """The move undoing this one: rotating the quadruple swaps the roles of
        {z,a,c} and {z,b,d}."""
        return MutationMove(self.z, self.b, self.c, self.d, self.a)

    def key(self) -> tuple:
        return (self.z, self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class ValuedFamily:
    """A maximal family together with a nonzero exact value per triangle."""

    family: Family
    values: dict  # Triangle -> Fraction

    def __post_init__(self):
        object.__setattr__(self, "values", dict(self.values))  # detach from caller
        if set(self.values) != self.family.triangles:
            raise InvalidInputError("values must be given for exactly the family's triangles")
        for t, v in self.values.items():
            if v == 0:
                raise InvalidInputError(f"value of {t} must be nonzero")
        if not frozen_triangles(self.family.ground).triangles <= self.family.triangles:
            raise InvalidInputError("family must contain all continuous triangles")
        if not is_maximal_family(self.family):
            raise InvalidInputError("valued families must be maximal")

    def value(self, t: Triangle) -> Fraction:
        return self.values[t]


def unit_specialization(fam: Family) -> ValuedFamily:
    """All triangle values set to 1."""
    return ValuedFamily(fam, {t: Fraction(1) for t in fam.triangles})


def unitary_value_at(vf: ValuedFamily, x: int):
    """The common value of all triangles through x, or None if they differ."""
    vals = {vf.values[t] for t in vf.family.triangles if x in t}
    if len(vals) == 1:
        return vals.pop()
    return None


def exchange_value(v_zac: Fraction, v_zab: Fraction, v_zcd: Fraction,
                   v_zad: Fraction, v_zbc: Fraction) -> Fraction:
    """Value of the incoming triangle forced by the three-term relation."""
    if v_zac == 0:
        raise ZeroPivotError("cannot exchange across a zero value")
    return (Fraction(v_zab) * Fraction(v_zcd) + Fraction(v_zad) * Fraction(v_zbc)) / Fraction(v_zac)


def mutate(vf: ValuedFamily, move: MutationMove, validate: bool = False) -> ValuedFamily:
    """Apply one move, propagating the exchanged value.

    validate=True re-checks weak separation and maximality of the result; the
    production path trusts the exchange guarantee instead.
    """
    ground = vf.family.ground
    for p in (move.z, move.a, move.b, move.c, move.d):
        if not ground.contains(p):
            raise InvalidInputError(f"move point {p!r} outside 1..{ground.n}")
    req = move.required()
    for t in req:
        if t not in vf.family.triangles:
            raise InvalidMoveError(f"required triangle {t} missing from family")
    added = move.added
    if added in vf.family.triangles:
        raise InvalidMoveError(f"{added} already present; family cannot be maximal weakly separated")
    zab, zbc, zcd, zda, zac = req
    new_value = exchange_value(vf.values[zac], vf.values[zab], vf.values[zcd],
                               vf.values[zda], vf.values[zbc])
    fam2 = vf.family.with_exchange(move.removed, added)
    values2 = dict(vf.values)
    del values2[move.removed]
    values2[added] = new_value
    if validate:
        ok, pair = is_weakly_separated_family(fam2)
        if not ok:
            raise InternalConsistencyError(f"mutation broke weak separation: {pair}")
        if not is_maximal_family(fam2):
            raise InternalConsistencyError("mutation broke maximality")
    return ValuedFamily(fam2, values2)


def _moves_of_triangles(triangles) -> list:
    """All applicable moves of a triangle set, as (z,a,b,c,d) tuples sorted
    lexicographically. For each point z and each internal chord {a,c} of the
    star graph at z, any common neighbours b in (a,c) and d in (c,a) give a
    move."""
    adjacency = {}
    for t in triangles:
        p, q, r = t
        adjacency.setdefault(p, {}).setdefault(q, set()).add(r)
        adjacency.setdefault(p, {}).setdefault(r, set()).add(q)
        adjacency.setdefault(q, {}).setdefault(p, set()).add(r)
        adjacency.setdefault(q, {}).setdefault(r, set()).add(p)
        adjacency.setdefault(r, {}).setdefault(p, set()).add(q)
        adjacency.setdefault(r, {}).setdefault(q, set()).add(p)
    moves = []
    for z in sorted(adjacency):
        star = adjacency[z]
        for a in sorted(star):
            for c in sorted(star[a]):
                if c < a:
                    continue
                shared = [p for p in star if p != a and p != c
                          and c in star.get(p, ()) and a in star.get(p, ())]
                inner = [b for b in shared if is_cyclic((a, b, c))]
                outer = [d for d in shared if is_cyclic((c, d, a))]
                for b in inner:
                    for d in outer:
                        moves.append((z, a, b, c, d))
    moves.sort()
    return moves


def family_moves(fam: Family) -> list:
    """All valid moves of a family, lexicographically ordered by (z,a,b,c,d)."""
    return [MutationMove(*m) for m in _moves_of_triangles(fam.triangles)]


def random_maximal_family(ground: GroundSet, steps: int, seed: int) -> Family:
    """A maximal family obtained from the canonical greedy completion of the
    continuous triangles by `steps` uniformly chosen moves; deterministic per
    seed."""
    if steps < 0:
        raise InvalidInputError("steps must be >= 0")
    fam = greedy_complete(frozen_triangles(ground))
    rng = random.Random(seed)
    for _ in range(steps):
        moves = family_moves(fam)
        move = rng.choice(moves)
        fam = fam.with_exchange(move.removed, move.added)
    return fam


# -- guided moves on the star graph at x ---------------------------------------

def remove_leaf(vf: ValuedFamily, x: int, p: int, q1: int, q2: int, q3: int) -> ValuedFamily:
    """Remove the leaf q2 of triangulation point p, replacing {x,p,q2} by
    {p,q1,q3}; under unitarity at x the new border value is the sum of the two
    it straddles."""
    wrap = vf.family.ground.wrap
    if q2 in (wrap(x + 2), wrap(x - 2)):
        raise FrozenLeafError(f"leaf {q2} corresponds to a frozen triangle and cannot be removed")
    if unitary_value_at(vf, x) is None:
        raise PreconditionError(f"family is not unitary at x={x}")
    g = build_star_graph(vf.family, x)
    if q2 not in g.leaves or g.leaves[q2] != p:
        raise InvalidMoveError(f"{q2} is not a leaf at {p} in the star graph at x={x}")
    i = g.triangulation_points.index(p)
    seq = _incident_sequence(g, i)
    j = seq.index(q2)
    if seq[j - 1] != q1 or seq[j + 1] != q3:
        raise InvalidMoveError(f"{q1},{q3} are not the points flanking {q2} at {p}")
    return mutate(vf, MutationMove(p, x, q1, q2, q3))


def contract_degree2(vf: ValuedFamily, x: int, p: int, side: str) -> ValuedFamily:
    """Contract a degree-2 triangulation point p away from x: side="left"
    removes {x, prev, p}, side="right" removes {x, p, next}; the replacement
    border value is again a two-term sum under unitarity at x."""
    if side not in ("left", "right"):
        raise InvalidInputError(f'side must be "left" or "right", got {side!r}')
    ground = vf.family.ground
    wrap = ground.wrap
    if unitary_value_at(vf, x) is None:
        raise PreconditionError(f"family is not unitary at x={x}")
    g = build_star_graph(vf.family, x)
    tp = g.triangulation_points
    if p not in tp or p in (wrap(x + 1), wrap(x - 1)):
        raise InvalidMoveError(f"{p} is not an interior triangulation point at x={x}")
    if g.degree(p) != 2:
        raise InvalidMoveError(f"{p} has degree {g.degree(p)}, need 2")
    if side == "left" and p == wrap(x + 2):
        raise InvalidMoveError(f"left contraction at {p}=x+2 would remove a frozen triangle")
    if side == "right" and p == wrap(x - 2):
        raise InvalidMoveError(f"right contraction at {p}=x-2 would remove a frozen triangle")
    i = tp.index(p)
    prev_t, next_t = tp[i - 1], tp[i + 1]
    if side == "left":
        behind = g.leaves_at(prev_t)
        q1 = behind[-1] if behind else (tp[i - 2] if i >= 2 else None)
        if q1 is None:
            raise InvalidMoveError(f"no flank point behind {prev_t}")
        move = MutationMove(prev_t, x, q1, p, next_t)
    else:
        ahead = g.leaves_at(next_t)
        q2 = ahead[0] if ahead else (tp[i + 2] if i + 2 < len(tp) else None)
        if q2 is None:
            raise InvalidMoveError(f"no flank point beyond {next_t}")
        move = MutationMove(next_t, p, q2, x, prev_t)
    return mutate(vf, move)


# -- breadth-first oracle -------------------------------------------------------

def _apply_raw(values: dict, m: tuple) -> dict:
    z, a, b, c, d = m
    zac = tuple(sorted((z, a, c)))
    zbd = tuple(sorted((z, b, d)))
    zab = tuple(sorted((z, a, b)))
    zcd = tuple(sorted((z, c, d)))
    zda = tuple(sorted((z, d, a)))
    zbc = tuple(sorted((z, b, c)))
    new = dict(values)
    new[zbd] = (values[zab] * values[zcd] + values[zda] * values[zbc]) / values[zac]
    del new[zac]
    return new


def oracle_values(vf: ValuedFamily, targets, budget: int = DEFAULT_ORACLE_BUDGET,
                  tie_break: str = "lex") -> dict:
    """Values of the given triangles under the specialization pinned by vf.

    Breadth-first search over moves, propagating values exchange by exchange
    until every target has been seen in some reached family. Path independence
    is asserted: a family reached twice must carry the same values, and a
    target found in two families must get the same number.
    """
    if tie_break not in ("lex", "revlex"):
        raise InvalidInputError(f"unknown tie break {tie_break!r}")
    reverse = tie_break == "revlex"
    ground = vf.family.ground
    wanted = set()
    for t in targets:
        tt = tuple(sorted(t))
        if len(set(tt)) != 3 or any(not ground.contains(p) for p in tt):
            raise InvalidInputError(f"bad target triangle {t!r}")
        wanted.add(tt)

    found = {}

    def scan(vals):
        for t in wanted:
            if t in vals:
                if t in found:
                    if found[t] != vals[t]:
                        raise InternalConsistencyError(
                            f"path-dependent value for {t}: {found[t]} vs {vals[t]}")
                else:
                    found[t] = vals[t]

    start = dict(vf.values)
    scan(start)
    if len(found) == len(wanted):
        return found

    visited = {frozenset(start): start}
    queue = [start]
    expanded = 0
    while queue:
        next_queue = []
        for vals in queue:
            expanded += 1
            if expanded > budget:
                missing = sorted(wanted - set(found))
                raise BudgetExceededError(budget, expanded - 1,
                                          f"targets not reached: {missing}")
            moves = _moves_of_triangles(vals)
            if reverse:
                moves.reverse()
            for m in moves:
                child = _apply_raw(vals, m)
                key = frozenset(child)
                seen = visited.get(key)
                if seen is not None:
                    if seen != child:
                        raise InternalConsistencyError(
                            f"path-dependent family values after move {m}")
                    continue
                visited[key] = child
                scan(child)
                if len(found) == len(wanted):
                    return found
                next_queue.append(child)
        queue = next_queue
    missing = sorted(wanted - set(found))
    raise BudgetExceededError(budget, expanded, f"search space exhausted, targets not reached: {missing}")


def oracle_value(vf: ValuedFamily, target, budget: int = DEFAULT_ORACLE_BUDGET,
                 tie_break: str = "lex") -> Fraction:
    """Value of a single Pluecker coordinate; see oracle_values."""
    tt = tuple(sorted(target))
    return oracle_values(vf, [tt], budget=budget, tie_break=tie_break)[tt]


# -- trace format ----------------------------------------------------------------
#
# One line per move:  z:(a,b,c,d) removed={z,a,c} added={z,b,d} value=p/q

_TRACE_RE = re.compile(
    r"^(\d+):\((\d+),(\d+),(\d+),(\d+)\)"
    r" removed=\{(\d+),(\d+),(\d+)\}"
    r" added=\{(\d+),(\d+),(\d+)\}"
    r" value=(-?\d+(?:/\d+)?)$")


def format_trace_line(move: MutationMove, value: Fraction) -> str:
    rem = ",".join(str(p) for p in move.removed)
    add = ",".join(str(p) for p in move.added)
    return (f"{move.z}:({move.a},{move.b},{move.c},{move.d})"
            f" removed={{{rem}}} added={{{add}}} value={value}")


def parse_trace_line(line: str):
    """-> (MutationMove, expected value); raises InvalidInputError on malformed
    lines or removed/added sets inconsistent with the move points."""
    m = _TRACE_RE.match(line.strip())
    if not m:
        raise InvalidInputError(f"malformed trace line: {line!r}")
    z, a, b, c, d = (int(m.group(i)) for i in range(1, 6))
    removed = tuple(sorted(int(m.group(i)) for i in range(6, 9)))
    added = tuple(sorted(int(m.group(i)) for i in range(9, 12)))
    value = Fraction(m.group(12))
    move = MutationMove(z, a, b, c, d)
    if move.removed != removed or move.added != added:
        raise InvalidInputError(f"trace line inconsistent with its move: {line!r}")
    return move, value
