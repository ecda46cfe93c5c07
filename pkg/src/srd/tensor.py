"""Intersection-number tensors of coherent configurations.

Relations are indexed 1..count throughout (index 0 of every array is
unused), matching the conventional layout for the two-fiber type [3 2; 3]:

    1  identity on fiber 1        6  complement graph on fiber 2
    2  graph on fiber 1           7  flag relation (fiber 1 -> 2)
    3  complement graph, fiber 1  8  non-flag relation (fiber 1 -> 2)
    4  identity on fiber 2        9  transpose of 7 (fiber 2 -> 1)
    5  graph on fiber 2          10  transpose of 8 (fiber 2 -> 1)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

ID1, ADJ1, NONADJ1 = 1, 2, 3
ID2, ADJ2, NONADJ2 = 4, 5, 6
FLAG, NONFLAG = 7, 8
FLAG_T, NONFLAG_T = 9, 10

#: fiber signature (source, target) of each canonical relation
SIGNATURES_3_2_3 = {
    1: (1, 1), 2: (1, 1), 3: (1, 1),
    4: (2, 2), 5: (2, 2), 6: (2, 2),
    7: (1, 2), 8: (1, 2),
    9: (2, 1), 10: (2, 1),
}

#: transposed partner of each canonical relation
TRANSPOSES_3_2_3 = {1: 1, 2: 2, 3: 3, 4: 4, 5: 5, 6: 6, 7: 9, 8: 10, 9: 7, 10: 8}


@dataclass(frozen=True)
class StructureTensor:
    """All intersection numbers p[i][j][k] plus valencies of a configuration.

    ``p`` has shape (count+1, count+1, count+1) with index 0 unused;
    ``valencies``, ``signatures`` and ``transposes`` are indexed the same
    way.  p[i][j][k] is the coefficient of relation k in the product of
    relations i and j.
    """

    count: int
    p: np.ndarray
    valencies: tuple[int, ...]
    signatures: tuple[tuple[int, int] | None, ...]
    transposes: tuple[int, ...]

    def __post_init__(self):
        if self.p.shape != (self.count + 1,) * 3:
            raise ValueError("tensor shape does not match relation count")
        self.p.flags.writeable = False

    def entry(self, i: int, j: int, k: int) -> int:
        return int(self.p[i, j, k])

    def valency(self, i: int) -> int:
        return self.valencies[i]

    def composable(self, i: int, j: int) -> bool:
        return self.signatures[i][1] == self.signatures[j][0]

    def product(self, i: int, j: int) -> list[int]:
        """Coefficient vector (index 0 unused) of the product of i and j."""
        return [0] + [int(x) for x in self.p[i, j, 1:]]

    # -- invariant scans ---------------------------------------------------

    def _composable_mask(self) -> np.ndarray:
        tgt = np.array([0] + [s[1] for s in self.signatures[1:]])
        src = np.array([0] + [s[0] for s in self.signatures[1:]])
        return tgt[:, None] == src[None, :]

    def row_sum_violations(self) -> list[tuple[int, int, int, int]]:
        """Composable (i, j) with sum_k p[i][j][k] v_k != v_i v_j."""
        v = np.array(self.valencies, dtype=np.int64)
        sums = (self.p * v[None, None, :]).sum(axis=2)
        expect = v[:, None] * v[None, :]
        mask = self._composable_mask()
        bad = np.argwhere((sums != expect) & mask)
        return [
            (int(i), int(j), int(sums[i, j]), int(expect[i, j]))
            for i, j in bad
            if i > 0 and j > 0
        ]

    def intersection_identity_violations(self) -> list[tuple[int, int, int, int, int]]:
        """Triples (i, j, k) with p[i][j][k] v_k != p[k][j*][i] v_i.

        The identity holds vacuously (0 = 0) on non-composable triples, so
        all index triples are scanned.
        """
        v = np.array(self.valencies, dtype=np.int64)
        t = np.array(self.transposes)
        lhs = self.p * v[None, None, :]
        rhs = self.p[:, t, :].transpose(2, 1, 0) * v[:, None, None]
        bad = np.argwhere(lhs != rhs)
        return [
            (int(i), int(j), int(k), int(lhs[i, j, k]), int(rhs[i, j, k]))
            for i, j, k in bad
            if i > 0 and j > 0 and k > 0
        ]

    def transpose_symmetry_violations(self) -> list[tuple[int, int, int]]:
        """Triples (i, j, k) with p[i][j][k] != p[j*][i*][k*]."""
        t = np.array(self.transposes)
        other = self.p[t][:, t][:, :, t].transpose(1, 0, 2)
        bad = np.argwhere(self.p != other)
        return [(int(i), int(j), int(k)) for i, j, k in bad if i > 0 and j > 0 and k > 0]

    def __eq__(self, other) -> bool:
        if not isinstance(other, StructureTensor):
            return NotImplemented
        return (
            self.count == other.count
            and np.array_equal(self.p, other.p)
            and self.valencies == other.valencies
            and self.signatures == other.signatures
            and self.transposes == other.transposes
        )
