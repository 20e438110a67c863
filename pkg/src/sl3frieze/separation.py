"""Crossing / weak separation of triangles.

Two routes are provided and kept independent on purpose:

* ``crossing_definition`` searches for interleaved witnesses a,c in A\\B and
  b,d in B\\A directly.
* ``crossing_cases`` runs the three-interval case analysis over the placements
  of B's points relative to the arcs cut out by A.

Production callers go through ``crossing``, a cached wrapper around the case
analysis; the definitional search stays around as the oracle the fast route is
tested against.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclic import in_open_interval, is_cyclic


def crossing_definition(A, B) -> bool:
    """Interleaving-witness search: some a,c in A\\B and b,d in B\\A with
    (a,b,c,d) cyclically ordered."""
    only_a = [p for p in A if p not in B]
    only_b = [p for p in B if p not in A]
    if len(only_a) < 2 or len(only_b) < 2:
        return False
    for a in only_a:
        for c in only_a:
            if a == c:
                continue
            for b in only_b:
                for d in only_b:
                    if b != d and is_cyclic((a, b, c, d)):
                        return True
    return False


def crossing_cases(A, B) -> bool:
    """Interval case analysis: with (a,b,c) the sorted points of A, B crosses A
    iff some labelling (u,v,w) of B's points satisfies one of

      (i)   u in (a,b), v in (b,c), w != b
      (ii)  u in (a,b), w in (c,a), v != a
      (iii) v in (b,c), w in (c,a), u != c
    """
    if A == B:
        return False
    a, b, c = sorted(A)
    pts = tuple(B)
    for u in pts:
        for v in pts:
            if v == u:
                continue
            w = next(p for p in pts if p != u and p != v)
            if in_open_interval(u, a, b) and in_open_interval(v, b, c) and w != b:
                return True
            if in_open_interval(u, a, b) and in_open_interval(w, c, a) and v != a:
                return True
            if in_open_interval(v, b, c) and in_open_interval(w, c, a) and u != c:
                return True
    return False


@lru_cache(maxsize=None)
def _crossing_cached(A, B) -> bool:
    return crossing_cases(A, B)


def crossing(A, B) -> bool:
    """Cached crossing test on sorted triangle tuples."""
    if A <= B:
        return _crossing_cached(A, B)
    return _crossing_cached(B, A)


def weakly_separated(A, B) -> bool:
    return not crossing(A, B)
