"""Exhaustive poset enumeration up to isomorphism.

Posets are reflexive order relations given as bit rows (bit j of row i set
iff i >= j).  Each size is generated from the previous one by adjoining a new
maximal element over every order ideal, with canonical-form deduplication;
every finite poset arises this way by peeling a maximal element.
"""

from __future__ import annotations

from functools import lru_cache

from .iso import canonical_form
from .quivers import Quiver


@lru_cache(maxsize=None)
def posets_up_to_iso(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical representatives of all posets with exactly n elements."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ((),)
    if n == 1:
        return ((1,),)
    out = {}
    for base in posets_up_to_iso(n - 1):
        k = n - 1
        for ideal in _ideals(base, k):
            rows = list(base) + [(1 << k) | ideal]
            key = canonical_form(n, rows)
            out.setdefault(key, key)
    return tuple(sorted(out))


def _ideals(rows: tuple[int, ...], k: int):
    """Down-closed subsets: every element's row (its down-set) stays inside."""
    for mask in range(1 << k):
        ok = True
        m = mask
        while m:
            low = m & -m
            x = low.bit_length() - 1
            if rows[x] & ~mask:
                ok = False
                break
            m &= m - 1
        if ok:
            yield mask


def hasse_quiver_of(rows: tuple[int, ...]) -> Quiver:
    """The Hasse quiver of an order relation (names are 1-based positions)."""
    n = len(rows)
    names = [str(i + 1) for i in range(n)]
    arrows = []
    for a in range(n):
        for b in range(n):
            if a != b and rows[a] >> b & 1:
                strictly_between = rows[a] & ~(1 << a) & ~(1 << b)
                if not any(rows[c] >> b & 1 for c in _bits(strictly_between)):
                    arrows.append((names[a], names[b]))
    return Quiver(names, arrows)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1
