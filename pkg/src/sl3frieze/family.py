"""Triangles over a ground set and weakly separated families of them.

A triangle is stored as a strictly ascending 3-tuple of points. A family keeps
its ground set, a frozenset of triangles and a ``validated`` flag meaning the
pairwise weak-separation check has been run on construction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .cyclic import GroundSet
from .errors import InvalidInputError, MalformedFileError
from .separation import crossing

Triangle = tuple  # ascending (a, b, c)

FAMILY_SCHEMA_VERSION = 1


def make_triangle(a: int, b: int, c: int, ground: GroundSet) -> Triangle:
    """Sort and validate a point triple."""
    t = (a, b, c)
    for p in t:
        if not ground.contains(p):
            raise InvalidInputError(f"triangle point {p!r} outside 1..{ground.n}")
    if len(set(t)) != 3:
        raise InvalidInputError(f"triangle points must be distinct: {t}")
    return tuple(sorted(t))


def wrap_triangle(ground: GroundSet, a: int, b: int, c: int) -> Triangle:
    """Like make_triangle but first reduces the points mod n into 1..n."""
    return make_triangle(ground.wrap(a), ground.wrap(b), ground.wrap(c), ground)


def all_triangles(ground: GroundSet):
    """All 3-subsets of the ground set, ascending tuples in lex order."""
    return combinations(ground.points(), 3)


@dataclass(frozen=True)
class Family:
    """A set of triangles over a ground set.

    ``validated`` records that pairwise weak separation was checked; operations
    whose guarantees need it refuse unvalidated input.
    """

    ground: GroundSet
    triangles: frozenset
    validated: bool = False

    def __len__(self):
        return len(self.triangles)

    def __contains__(self, t):
        return t in self.triangles

    def sorted_triangles(self) -> list:
        return sorted(self.triangles)

    def with_exchange(self, removed: Triangle, added: Triangle) -> "Family":
        """Replace one triangle by another; validation status is preserved by
        callers that know the exchange is separation-safe."""
        if removed not in self.triangles or added in self.triangles:
            raise InvalidInputError("exchange does not apply to this family")
        return Family(self.ground, self.triangles - {removed} | {added}, self.validated)


def make_family(ground: GroundSet, triangles, validate: bool = True) -> Family:
    """Build a family from point triples; with validate=True the result is
    checked to be weakly separated (raising otherwise) and marked validated."""
    tris = [make_triangle(*t, ground=ground) for t in triangles]
    ts = frozenset(tris)
    if len(ts) != len(tris):
        raise InvalidInputError("duplicate triangles in family")
    fam = Family(ground, ts, validated=False)
    if validate:
        ok, pair = is_weakly_separated_family(fam)
        if not ok:
            raise InvalidInputError(f"family is not weakly separated: {pair[0]} crosses {pair[1]}")
        fam = Family(ground, ts, validated=True)
    return fam


def frozen_triangles(ground: GroundSet) -> Family:
    """The n continuous triangles {i, i+1, i+2}; they cross nothing, so they lie
    in every maximal family."""
    ts = frozenset(wrap_triangle(ground, i, i + 1, i + 2) for i in ground.points())
    return Family(ground, ts, validated=True)


def is_weakly_separated_family(fam: Family):
    """(True, None) if all pairs are non-crossing, else (False, first bad pair)
    in lex order of the sorted triangle list."""
    ts = fam.sorted_triangles()
    for i, A in enumerate(ts):
        for B in ts[i + 1:]:
            if crossing(A, B):
                return False, (A, B)
    return True, None


def maximal_size(ground: GroundSet) -> int:
    return 3 * ground.n - 8


def addable_triangles(fam: Family) -> list:
    """Triangles outside the family that are weakly separated from all of it."""
    out = []
    for t in all_triangles(fam.ground):
        if t in fam.triangles:
            continue
        if all(not crossing(t, s) for s in fam.triangles):
            out.append(t)
    return out


def is_maximal_family(fam: Family, thorough: bool = False) -> bool:
    """Maximality via the cardinality 3n-8; ``thorough`` additionally scans for
    addable triangles (slow diagnostic mode)."""
    if not fam.validated:
        ok, pair = is_weakly_separated_family(fam)
        if not ok:
            raise InvalidInputError(f"family is not weakly separated: {pair[0]} crosses {pair[1]}")
    size_ok = len(fam) == maximal_size(fam.ground)
    if not thorough:
        return size_ok
    return size_ok and not addable_triangles(fam)


def greedy_complete(fam: Family) -> Family:
    """Extend to a maximal weakly separated family, repeatedly adding the
    lexicographically smallest compatible triangle."""
    if not fam.validated:
        ok, pair = is_weakly_separated_family(fam)
        if not ok:
            raise InvalidInputError(f"family is not weakly separated: {pair[0]} crosses {pair[1]}")
    current = set(fam.triangles)
    candidates = [t for t in all_triangles(fam.ground)
                  if t not in current and all(not crossing(t, s) for s in current)]
    while candidates:
        chosen = candidates[0]  # lex smallest by construction order
        current.add(chosen)
        candidates = [t for t in candidates[1:] if not crossing(t, chosen)]
    return Family(fam.ground, frozenset(current), validated=True)


# -- JSON format --------------------------------------------------------------
#
# {"n": 8, "triangles": [[1,2,3], [1,2,4], ...]}  (triples sorted ascending;
# an optional "schema_version" key is accepted; anything else is rejected)

def family_to_dict(fam: Family) -> dict:
    return {
        "schema_version": FAMILY_SCHEMA_VERSION,
        "n": fam.ground.n,
        "triangles": [list(t) for t in fam.sorted_triangles()],
    }


def family_from_dict(data, validate: bool = True) -> Family:
    if not isinstance(data, dict):
        raise MalformedFileError("family file must be a JSON object")
    unknown = set(data) - {"n", "triangles", "schema_version"}
    if unknown:
        raise MalformedFileError(f"unknown keys in family file: {sorted(unknown)}")
    if "n" not in data or "triangles" not in data:
        raise MalformedFileError('family file needs keys "n" and "triangles"')
    try:
        ground = GroundSet(data["n"])
    except InvalidInputError as e:
        raise MalformedFileError(str(e)) from e
    triples = data["triangles"]
    if not isinstance(triples, list):
        raise MalformedFileError('"triangles" must be a list of 3-point lists')
    triangles = []
    for raw in triples:
        if (not isinstance(raw, list) or len(raw) != 3
                or any(not ground.contains(p) for p in raw)):
            raise MalformedFileError(f"bad triangle entry: {raw!r}")
        if raw != sorted(raw):
            raise MalformedFileError(f"triangle not sorted ascending: {raw!r}")
        triangles.append(tuple(raw))
    try:
        return make_family(ground, triangles, validate=validate)
    except InvalidInputError as e:
        if validate:
            raise
        raise MalformedFileError(str(e)) from e


def dump_family(fam: Family) -> str:
    return json.dumps(family_to_dict(fam), indent=2) + "\n"


def load_family(text: str, validate: bool = True) -> Family:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedFileError(f"invalid JSON: {e}") from e
    return family_from_dict(data, validate=validate)
