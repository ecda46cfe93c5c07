"""Bundled desk-scale incidence and adjacency models.

All generators are deterministic: vertex orders are lexicographic over the
underlying subset representations, so every run (and every platform)
produces the same matrix.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .config import CoherentConfiguration, from_adjacency, from_incidence

EXAMPLE_NAMES = ("gq22", "petersen", "design_6_3_2", "k4")


def _duads():
    return list(combinations(range(6), 2))


def _synthemes():
    """Perfect matchings of a 6-set as sorted triples of duads, lex order."""
    out = []
    first = 0
    for b in range(1, 6):
        rest = [x for x in range(6) if x not in (first, b)]
        c = rest[0]
        for d in rest[1:]:
            e, f = [x for x in rest[1:] if x != d]
            out.append(tuple(sorted([(first, b), tuple(sorted((c, d))), tuple(sorted((e, f)))])))
    return sorted(out)


def gq22_incidence() -> np.ndarray:
    """15x15 duad/syntheme incidence of the generalized quadrangle GQ(2,2).

    Rows are the 2-subsets of a 6-set, columns the 15 partitions of the
    6-set into three 2-subsets; a cell is 1 when the duad belongs to the
    syntheme.  Constant row and column sums 3.
    """
    duads = _duads()
    synthemes = _synthemes()
    m = np.zeros((15, 15), dtype=np.int64)
    for i, d in enumerate(duads):
        for j, s in enumerate(synthemes):
            if d in s:
                m[i, j] = 1
    return m


def petersen_adjacency() -> np.ndarray:
    """Petersen graph as the disjointness graph on 2-subsets of a 5-set."""
    verts = list(combinations(range(5), 2))
    m = np.zeros((10, 10), dtype=np.int64)
    for i, a in enumerate(verts):
        for j, b in enumerate(verts):
            if i != j and not set(a) & set(b):
                m[i, j] = 1
    return m


def design_6_3_2_incidence() -> np.ndarray:
    """6x10 point/block incidence of the 2-(6,3,2) design.

    Blocks are found by lexicographic backtracking over the 20 triples of a
    6-set, covering every point pair exactly twice; the first solution in
    lex order is returned, so the matrix is a fixed constant.
    """
    triples = list(combinations(range(6), 3))
    pair_count = {p: 0 for p in combinations(range(6), 2)}

    def search(start: int, chosen: list[int]) -> list[int] | None:
        if all(v == 2 for v in pair_count.values()):
            return chosen
        if len(chosen) == 10:
            return None
        for idx in range(start, len(triples)):
            t = triples[idx]
            pairs = list(combinations(t, 2))
            if any(pair_count[p] >= 2 for p in pairs):
                continue
            for p in pairs:
                pair_count[p] += 1
            found = search(idx + 1, chosen + [idx])
            if found is not None:
                return found
            for p in pairs:
                pair_count[p] -= 1
        return None

    solution = search(0, [])
    assert solution is not None and len(solution) == 10
    m = np.zeros((6, 10), dtype=np.int64)
    for col, idx in enumerate(solution):
        for pt in triples[idx]:
            m[pt, col] = 1
    return m


def k4_adjacency() -> np.ndarray:
    """Complete graph on 4 vertices: all-ones minus identity."""
    return np.ones((4, 4), dtype=np.int64) - np.eye(4, dtype=np.int64)


_GENERATORS = {
    "gq22": ("incidence", gq22_incidence),
    "petersen": ("adjacency", petersen_adjacency),
    "design_6_3_2": ("incidence", design_6_3_2_incidence),
    "k4": ("adjacency", k4_adjacency),
}


def gen_example(name: str) -> tuple[str, np.ndarray]:
    """Named example matrix as (kind, matrix), kind incidence|adjacency."""
    try:
        kind, builder = _GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown example {name!r}; known: {', '.join(EXAMPLE_NAMES)}") from None
    return kind, builder()


def example_configuration(name: str) -> CoherentConfiguration:
    """Initial coloring of a named example."""
    kind, matrix = gen_example(name)
    if kind == "incidence":
        return from_incidence(matrix.shape[0], matrix.shape[1], matrix)
    return from_adjacency(matrix)
