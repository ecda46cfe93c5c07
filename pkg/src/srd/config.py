"""Concrete coherent configurations: construction, closure, verification.

A configuration is a coloring of all ordered vertex pairs of one or two
fibers.  ``wl_closure`` refines a coloring by the classic pair-refinement
rule (split classes by the multiset of color pairs over intermediate
vertices) until the partition is coherent;  ``structure_constants`` then
counts the intersection numbers from the model.

Color indices start at 1 and are always assigned by first occurrence in a
row-major scan, so every operation here is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import CoherenceError, TypeMismatchError
from .tensor import SIGNATURES_3_2_3, StructureTensor


@dataclass(frozen=True)
class CoherentConfiguration:
    """A colored pair partition on one or two fibers.

    ``colors`` is the (n1+n2) x (n1+n2) matrix assigning a color in
    1..color_count to every ordered vertex pair; fiber-1 vertices come
    first.  ``n2 == 0`` means a single fiber.  The name is aspirational for
    freshly built colorings: ``verify_axioms`` decides whether the coloring
    actually is coherent, and ``wl_closure`` makes it so.
    """

    n1: int
    n2: int
    colors: np.ndarray
    color_count: int

    def __post_init__(self):
        n = self.n1 + self.n2
        if self.n1 < 1 or self.n2 < 0:
            raise ValueError("fiber sizes must be positive (n2 may be 0)")
        if self.colors.shape != (n, n):
            raise ValueError("color matrix shape does not match fiber sizes")
        used = np.unique(self.colors)
        if used[0] < 1 or used[-1] > self.color_count or len(used) != self.color_count:
            raise ValueError("colors must use exactly the values 1..color_count")
        self.colors.flags.writeable = False

    @property
    def size(self) -> int:
        return self.n1 + self.n2

    @property
    def single_fiber(self) -> bool:
        return self.n2 == 0

    def block_of_cells(self) -> np.ndarray:
        """Per-cell fiber block id: 0,1,2,3 for (1,1),(1,2),(2,1),(2,2)."""
        f = np.zeros(self.size, dtype=np.int64)
        f[self.n1 :] = 1
        return f[:, None] * 2 + f[None, :]

    def fiber_of_color(self) -> dict[int, tuple[int, int]]:
        """Color -> ordered fiber pair; raises if some color spans blocks."""
        blocks = self.block_of_cells()
        out: dict[int, tuple[int, int]] = {}
        pair = {0: (1, 1), 1: (1, 2), 2: (2, 1), 3: (2, 2)}
        for c in range(1, self.color_count + 1):
            vals = np.unique(blocks[self.colors == c])
            if len(vals) != 1:
                raise CoherenceError(f"color {c} spans more than one fiber block")
            out[c] = pair[int(vals[0])]
        return out

    def transpose_of_color(self) -> dict[int, int]:
        """Color -> color of the transposed cells; raises if ill-defined."""
        out: dict[int, int] = {}
        ct = self.colors.T
        for c in range(1, self.color_count + 1):
            vals = np.unique(ct[self.colors == c])
            if len(vals) != 1:
                raise CoherenceError(f"transpose of color {c} is not a single color")
            out[c] = int(vals[0])
        return out


@dataclass(frozen=True)
class TripleViolation:
    """Intersection count of (i, j) differs over two cells of color k."""

    i: int
    j: int
    k: int
    cell_a: tuple[int, int]
    count_a: int
    cell_b: tuple[int, int]
    count_b: int

    def __str__(self) -> str:
        return (
            f"triple ({self.i},{self.j},{self.k}): cell {self.cell_a} sees "
            f"{self.count_a}, cell {self.cell_b} sees {self.count_b}"
        )


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of verify_axioms."""

    structural_issues: tuple[str, ...]
    triple_violations: tuple[TripleViolation, ...]

    @property
    def passed(self) -> bool:
        return not self.structural_issues and not self.triple_violations


def _first_occurrence_relabel(keys: np.ndarray) -> tuple[np.ndarray, int]:
    """Relabel integer keys to 1..count by first occurrence, row-major."""
    flat = keys.ravel()
    uniq, first, inverse = np.unique(flat, return_index=True, return_inverse=True)
    order = np.argsort(first, kind="stable")
    rank = np.empty(len(uniq), dtype=np.int64)
    rank[order] = np.arange(1, len(uniq) + 1)
    return rank[inverse].reshape(keys.shape), len(uniq)


def from_color_matrix(n1: int, n2: int, matrix) -> CoherentConfiguration:
    """Wrap an arbitrary integer cell-labeling as a configuration.

    Labels are compacted to 1..count by first occurrence; the labeling is
    otherwise taken as-is (use verify_axioms to test coherence).
    """
    m = np.asarray(matrix, dtype=np.int64).copy()
    colors, count = _first_occurrence_relabel(m)
    return CoherentConfiguration(n1, n2, colors, count)


def from_incidence(n1: int, n2: int, incidence) -> CoherentConfiguration:
    """Initial two-fiber coloring of a 0/1 incidence matrix.

    Cells are classed as fiber-1 diagonal, fiber-1 off-diagonal, fiber-2
    diagonal, fiber-2 off-diagonal, incident and non-incident (each cross
    class covering both directions); empty classes are dropped.  The result
    is a valid colored structure but not yet coherent.
    """
    inc = np.asarray(incidence, dtype=np.int64)
    if inc.shape != (n1, n2):
        raise ValueError(f"incidence must be {n1}x{n2}, got {inc.shape}")
    if not np.isin(inc, (0, 1)).all():
        raise ValueError("incidence entries must be 0 or 1")
    n = n1 + n2
    keys = np.empty((n, n), dtype=np.int64)
    keys[:n1, :n1] = 11
    keys[n1:, n1:] = 13
    np.fill_diagonal(keys, 0)
    keys[np.diag_indices(n1)] = 10
    keys[range(n1, n), range(n1, n)] = 12
    keys[:n1, n1:] = np.where(inc == 1, 14, 15)
    keys[n1:, :n1] = np.where(inc.T == 1, 14, 15)
    colors, count = _first_occurrence_relabel(keys)
    return CoherentConfiguration(n1, n2, colors, count)


def from_adjacency(adjacency) -> CoherentConfiguration:
    """Initial single-fiber coloring of a 0/1 adjacency matrix.

    Classes: diagonal, arcs (entry 1), off-diagonal non-arcs; empty classes
    dropped.  The matrix need not be symmetric.
    """
    adj = np.asarray(adjacency, dtype=np.int64)
    n = adj.shape[0]
    if adj.shape != (n, n):
        raise ValueError("adjacency matrix must be square")
    if not np.isin(adj, (0, 1)).all():
        raise ValueError("adjacency entries must be 0 or 1")
    keys = np.where(adj == 1, 11, 12)
    np.fill_diagonal(keys, 10)
    colors, count = _first_occurrence_relabel(keys)
    return CoherentConfiguration(n, 0, colors, count)


def _refine_once(colors: np.ndarray, count: int) -> tuple[np.ndarray, int]:
    """One pair-refinement round; new colors by first occurrence."""
    n = colors.shape[0]
    base = np.int64(count + 1)
    new_keys: dict[tuple[int, bytes], int] = {}
    out = np.empty_like(colors)
    ct = colors.T.copy()
    for x in range(n):
        # enc[y, w] encodes the color pair (x->w, w->y)
        enc = colors[x, :][None, :] * base + ct
        enc.sort(axis=1)
        row = colors[x]
        for y in range(n):
            key = (int(row[y]), enc[y].tobytes())
            nc = new_keys.get(key)
            if nc is None:
                nc = len(new_keys) + 1
                new_keys[key] = nc
            out[x, y] = nc
    return out, len(new_keys)


def wl_closure(c: CoherentConfiguration) -> CoherentConfiguration:
    """Coherent closure of a colored structure by pair refinement.

    Refines the input coloring (never merges classes), is idempotent, and
    the output passes verify_axioms.
    """
    colors = c.colors
    count = c.color_count
    while True:
        refined, new_count = _refine_once(colors, count)
        if new_count == count:
            return CoherentConfiguration(c.n1, c.n2, refined, new_count)
        colors, count = refined, new_count


def _decode_signature(codes: np.ndarray, base: int) -> dict[tuple[int, int], int]:
    """Sorted pair-code row -> {(i, j): count}."""
    vals, counts = np.unique(codes, return_counts=True)
    return {
        (int(v) // base, int(v) % base): int(cnt)
        for v, cnt in zip(vals, counts)
    }


def _scan_intersection_counts(c: CoherentConfiguration, collect_all: bool = False):
    """Sparse intersection counts with well-definedness checking.

    For every cell (x, y) the multiset of color pairs (x->w, w->y) is
    encoded exactly as in the refinement round; a coloring is coherent iff
    the multiset depends only on colors[x, y].  Returns (sparse, reps,
    violations) where sparse maps (i, j, k) to the constant count and reps
    maps each color to its representative cell.  With collect_all=False the
    scan raises CoherenceError at the first violation.
    """
    colors = c.colors
    n = c.size
    base = c.color_count + 1
    ct = colors.T.copy()
    rep_sig: dict[int, bytes] = {}
    rep_cell: dict[int, tuple[int, int]] = {}
    variants: dict[int, list[tuple[bytes, tuple[int, int]]]] = {}
    rep_codes: dict[int, np.ndarray] = {}
    for x in range(n):
        enc = colors[x, :][None, :] * base + ct
        enc.sort(axis=1)
        row = colors[x]
        for y in range(n):
            k = int(row[y])
            sig = enc[y].tobytes()
            known = rep_sig.get(k)
            if known is None:
                rep_sig[k] = sig
                rep_cell[k] = (x, y)
                rep_codes[k] = enc[y].copy()
            elif sig != known:
                if not collect_all:
                    a = _decode_signature(rep_codes[k], base)
                    b = _decode_signature(enc[y], base)
                    i, j = next(ij for ij in set(a) | set(b) if a.get(ij, 0) != b.get(ij, 0))
                    raise CoherenceError(
                        str(
                            TripleViolation(
                                i, j, k, rep_cell[k], a.get((i, j), 0), (x, y), b.get((i, j), 0)
                            )
                        )
                    )
                bucket = variants.setdefault(k, [])
                if all(sig != seen for seen, _ in bucket):
                    bucket.append((sig, (x, y)))
    violations: list[TripleViolation] = []
    for k, bucket in sorted(variants.items()):
        a = _decode_signature(rep_codes[k], base)
        for sig, cell in bucket:
            b = _decode_signature(np.frombuffer(sig, dtype=np.int64), base)
            for ij in sorted(set(a) | set(b)):
                ca, cb = a.get(ij, 0), b.get(ij, 0)
                if ca != cb:
                    violations.append(
                        TripleViolation(ij[0], ij[1], k, rep_cell[k], ca, cell, cb)
                    )
    sparse = {
        (i, j, k): cnt
        for k, codes in rep_codes.items()
        for (i, j), cnt in _decode_signature(codes, base).items()
    }
    return sparse, rep_cell, violations


def verify_axioms(c: CoherentConfiguration) -> AxiomReport:
    """Check the coherent-configuration axioms, reporting every violation.

    Structural axioms: diagonal colors disjoint from off-diagonal colors,
    each color within one fiber block, transposition maps colors to colors.
    The core axiom is well-definedness of the intersection count of every
    ordered color triple; each failure is witnessed by two cells.
    """
    issues: list[str] = []
    n = c.size
    diag_colors = set(np.unique(c.colors[np.diag_indices(n)]).tolist())
    off = ~np.eye(n, dtype=bool)
    off_colors = set(np.unique(c.colors[off]).tolist()) if n > 1 else set()
    shared = diag_colors & off_colors
    if shared:
        issues.append(f"colors {sorted(shared)} appear both on and off the diagonal")
    if not c.single_fiber:
        blocks = c.block_of_cells()
        for k in range(1, c.color_count + 1):
            if len(np.unique(blocks[c.colors == k])) != 1:
                issues.append(f"color {k} spans more than one fiber block")
    ct = c.colors.T
    for k in range(1, c.color_count + 1):
        if len(np.unique(ct[c.colors == k])) != 1:
            issues.append(f"transpose of color {k} is not a single color")
    _, _, violations = _scan_intersection_counts(c, collect_all=True)
    return AxiomReport(tuple(issues), tuple(violations))


def _valencies(c: CoherentConfiguration) -> list[int]:
    """Row sum of each color; raises if not constant over source rows."""
    C = c.color_count
    n = c.size
    counts = np.zeros((n, C + 1), dtype=np.int64)
    np.add.at(counts, (np.arange(n)[:, None], c.colors), 1)
    vals = [0] * (C + 1)
    for k in range(1, C + 1):
        rows = np.nonzero(counts[:, k])[0]
        per_row = np.unique(counts[rows, k])
        if len(per_row) != 1:
            raise CoherenceError(f"valency of color {k} is not constant across rows")
        vals[k] = int(per_row[0])
    return vals


_DENSE_COLOR_LIMIT = 128


def intersection_counts(c: CoherentConfiguration) -> dict[tuple[int, int, int], int]:
    """Sparse intersection numbers {(i, j, k): p} of a coherent coloring.

    Works for any color count; raises CoherenceError naming a violated
    triple if the coloring is not coherent.
    """
    sparse, _, _ = _scan_intersection_counts(c, collect_all=False)
    return sparse


def intersection_identity_violations(c: CoherentConfiguration) -> list[tuple]:
    """Triples with p[i][j][k] v_k != p[k][j*][i] v_i on a coherent coloring.

    Sparse equivalent of the tensor-level scan, usable at any color count;
    zero entries satisfy the identity pairwise (a nonzero entry on either
    side puts the triple in the iteration).
    """
    sparse = intersection_counts(c)
    vals = _valencies(c)
    transpose = c.transpose_of_color()
    out = []
    for (i, j, k), count in sorted(sparse.items()):
        lhs = count * vals[k]
        rhs = sparse.get((k, transpose[j], i), 0) * vals[i]
        if lhs != rhs:
            out.append((i, j, k, lhs, rhs))
    return out


def structure_constants(c: CoherentConfiguration) -> StructureTensor:
    """Exact intersection-number tensor of a coherent coloring.

    Precondition: verify_axioms passes.  Violations found while counting
    raise CoherenceError naming the offending triple.  The dense tensor is
    only built for moderate color counts; use intersection_counts for the
    sparse form at any size.
    """
    if c.color_count > _DENSE_COLOR_LIMIT:
        raise ValueError(
            f"{c.color_count} colors exceed the dense tensor limit "
            f"({_DENSE_COLOR_LIMIT}); use intersection_counts instead"
        )
    sparse, _, _ = _scan_intersection_counts(c, collect_all=False)
    p = np.zeros((c.color_count + 1,) * 3, dtype=np.int64)
    for (i, j, k), count in sparse.items():
        p[i, j, k] = count
    vals = _valencies(c)
    transposes = [0] + [c.transpose_of_color()[k] for k in range(1, c.color_count + 1)]
    if c.single_fiber:
        sigs: list = [None] + [(1, 1)] * c.color_count
    else:
        fib = c.fiber_of_color()
        sigs = [None] + [fib[k] for k in range(1, c.color_count + 1)]
    return StructureTensor(
        count=c.color_count,
        p=p,
        valencies=tuple(vals),
        signatures=tuple(sigs),
        transposes=tuple(transposes),
    )


def detect_type(c: CoherentConfiguration) -> tuple[int, ...]:
    """Color counts per fiber block: (r11,) or (r11, r12, r22).

    Precondition: the coloring is coherent.  Downstream design processing
    requires the two-fiber result (3, 2, 3).
    """
    if c.single_fiber:
        return (c.color_count,)
    blocks = c.block_of_cells()
    r11 = len(np.unique(c.colors[blocks == 0]))
    r12 = len(np.unique(c.colors[blocks == 1]))
    r21 = len(np.unique(c.colors[blocks == 2]))
    r22 = len(np.unique(c.colors[blocks == 3]))
    if r12 != r21:
        raise CoherenceError("cross blocks disagree on color count; coloring is not coherent")
    return (r11, r12, r22)


def canonical_relabel(
    c: CoherentConfiguration,
    fiber1_color: int | None = None,
    cross_color: int | None = None,
    fiber2_color: int | None = None,
) -> tuple[CoherentConfiguration, dict[int, int]]:
    """Relabel a type-(3,2,3) configuration to the canonical 1..10 layout.

    The caller may designate which fiber-1 color becomes relation 2, which
    cross color becomes relation 7 (the flag relation) and which fiber-2
    color becomes relation 5; defaults pick the smaller-valency color of
    each pair (ties: smaller input color id).  Returns the relabeled
    configuration and the input-color -> canonical-index mapping.
    """
    if detect_type(c) != (3, 2, 3):
        raise TypeMismatchError(f"type {detect_type(c)} is not (3, 2, 3)")
    fib = c.fiber_of_color()
    transpose = c.transpose_of_color()
    vals = _valencies(c)
    n = c.size
    diag = set(np.unique(c.colors[np.diag_indices(n)]).tolist())

    def split(block: tuple[int, int]):
        return sorted(k for k, b in fib.items() if b == block)

    ids1 = [k for k in split((1, 1)) if k in diag]
    ids2 = [k for k in split((2, 2)) if k in diag]
    if len(ids1) != 1 or len(ids2) != 1:
        raise TypeMismatchError("each fiber must carry a single identity color")
    off1 = [k for k in split((1, 1)) if k not in diag]
    off2 = [k for k in split((2, 2)) if k not in diag]
    cross = split((1, 2))

    def pick(candidates: list[int], designated: int | None, what: str) -> int:
        if designated is not None:
            if designated not in candidates:
                raise ValueError(f"color {designated} is not a {what} candidate {candidates}")
            return designated
        return min(candidates, key=lambda k: (vals[k], k))

    c2 = pick(off1, fiber1_color, "fiber-1 graph")
    c7 = pick(cross, cross_color, "cross")
    c5 = pick(off2, fiber2_color, "fiber-2 graph")
    mapping = {
        ids1[0]: 1, c2: 2, next(k for k in off1 if k != c2): 3,
        ids2[0]: 4, c5: 5, next(k for k in off2 if k != c5): 6,
        c7: 7, next(k for k in cross if k != c7): 8,
    }
    mapping[transpose[c7]] = 9
    mapping[transpose[next(k for k in cross if k != c7)]] = 10
    if len(mapping) != 10:
        raise CoherenceError("transpose pairing of cross colors is inconsistent")
    lut = np.zeros(c.color_count + 1, dtype=np.int64)
    for old, new in mapping.items():
        lut[old] = new
    out = CoherentConfiguration(c.n1, c.n2, lut[c.colors], 10)
    # canonical layout demands transpose(7) = 9 and transpose(8) = 10
    t = out.transpose_of_color()
    if t[7] != 9 or t[8] != 10 or t[9] != 7 or t[10] != 8:
        raise CoherenceError("relabeled cross colors are not transpose-paired")
    return out, mapping


def is_canonical_3_2_3(c: CoherentConfiguration) -> bool:
    """True if colors 1..10 already sit in the canonical layout."""
    if c.single_fiber or c.color_count != 10:
        return False
    try:
        fib = c.fiber_of_color()
        transpose = c.transpose_of_color()
    except CoherenceError:
        return False
    if any(fib[k] != SIGNATURES_3_2_3[k] for k in range(1, 11)):
        return False
    n = c.size
    diag = set(np.unique(c.colors[np.diag_indices(n)]).tolist())
    return diag == {1, 4} and transpose[7] == 9 and transpose[8] == 10


# -- text matrix format ----------------------------------------------------


def parse_matrix_text(text: str) -> CoherentConfiguration:
    """Parse the shared matrix format and build the initial coloring.

    First line ``n1 n2``, then n1 rows of n2 0/1 entries (incidence mode);
    or ``n 0`` followed by n rows of n entries (adjacency mode).  Lines
    starting with ``#`` are comments.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty matrix file")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n1 n2'")
    try:
        n1, n2 = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ValueError("first line must be 'n1 n2'") from exc
    rows_needed = n1
    cols = n2 if n2 > 0 else n1
    body = lines[1:]
    if len(body) != rows_needed:
        raise ValueError(f"expected {rows_needed} matrix rows, got {len(body)}")
    rows = []
    for ln in body:
        parts = ln.split()
        if len(parts) != cols:
            raise ValueError(f"expected {cols} entries per row, got {len(parts)}")
        try:
            rows.append([int(x) for x in parts])
        except ValueError as exc:
            raise ValueError(f"non-integer matrix entry in line: {ln!r}") from exc
    matrix = np.array(rows, dtype=np.int64)
    if n2 > 0:
        return from_incidence(n1, n2, matrix)
    return from_adjacency(matrix)


def format_matrix_text(kind: str, matrix, comment: str | None = None) -> str:
    """Render an incidence or adjacency matrix in the shared text format."""
    m = np.asarray(matrix)
    lines = []
    if comment:
        lines.append(f"# {comment}")
    if kind == "incidence":
        lines.append(f"{m.shape[0]} {m.shape[1]}")
    elif kind == "adjacency":
        lines.append(f"{m.shape[0]} 0")
    else:
        raise ValueError(f"unknown matrix kind {kind!r}")
    for row in m:
        lines.append(" ".join(str(int(x)) for x in row))
    return "\n".join(lines) + "\n"
