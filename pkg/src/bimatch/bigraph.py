"""Bipartite graphs stored as bitmask adjacency, with text I/O and canonical forms.

A graph lives on two vertex parts X (size ``m``) and Y (size ``n``).  All
edges join X to Y, so the whole graph fits in ``n`` integers: bit ``i`` of
``adj[y]`` is set iff ``x_i y_j`` is an edge.  Parts are capped at 64
vertices so every neighborhood fits one machine word.

Graphs are immutable after construction; every operation here is a pure
function, safe for parallel use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import GraphFormatError, LimitError

MAX_SIDE = 64
# Canonical forms minimise over all m! permutations of X, so they are only
# offered at desk scale.
MAX_CANONICAL_M = 8


@dataclass(frozen=True)
class BipartiteGraph:
    """Immutable bipartite graph on X (indices 0..m-1) and Y (0..n-1)."""

    m: int
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (1 <= self.m <= MAX_SIDE) or not (1 <= self.n <= MAX_SIDE):
            raise LimitError(
                f"part sizes must be in 1..{MAX_SIDE}, got m={self.m}, n={self.n}"
            )
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} neighborhood masks, got {len(self.adj)}")
        full = (1 << self.m) - 1
        for y, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"neighborhood of y_{y + 1} uses bits outside X")

    @property
    def x_full(self) -> int:
        return (1 << self.m) - 1

    @property
    def y_full(self) -> int:
        return (1 << self.n) - 1

    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as 0-indexed (x, y) pairs, lexicographically sorted."""
        return sorted(
            (x, y) for y, mask in enumerate(self.adj) for x in _bits(mask)
        )

    def x_adj(self) -> tuple[int, ...]:
        """Y-neighborhood mask of each X-vertex (the transposed adjacency)."""
        out = [0] * self.m
        for y, mask in enumerate(self.adj):
            for x in _bits(mask):
                out[x] |= 1 << y
        return tuple(out)


@dataclass(frozen=True)
class CanonicalKey:
    """Isomorphism-class fingerprint: the minimal relabelled mask list.

    ``swapped`` records whether exchanging the two parts produced the
    minimum; it is only meaningful when side swaps were allowed.
    """

    key: tuple[int, ...]
    swapped: bool = False


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edge_list(m: int, n: int, edges) -> BipartiteGraph:
    """Build a graph from 0-indexed (x, y) pairs; duplicates collapse."""
    adj = [0] * n
    for x, y in edges:
        if not (0 <= x < m):
            raise ValueError(f"x index {x} out of range 0..{m - 1}")
        if not (0 <= y < n):
            raise ValueError(f"y index {y} out of range 0..{n - 1}")
        adj[y] |= 1 << x
    return BipartiteGraph(m, n, tuple(adj))


def parse_graph(text: str) -> BipartiteGraph:
    """Parse the text format: header "m n", then 1-indexed edge lines "i j".

    Blank lines and lines starting with '#' are ignored.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {line!r}") from None
        if header is None:
            header = (a, b)
        else:
            edges.append((a - 1, b - 1))
    if header is None:
        raise GraphFormatError("missing 'm n' header line")
    m, n = header
    if m < 1 or n < 1:
        raise GraphFormatError(f"part sizes must be positive, got m={m}, n={n}")
    try:
        return from_edge_list(m, n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def format_graph(g: BipartiteGraph) -> str:
    """Serialise deterministically: header plus sorted 1-indexed edges."""
    lines = [f"{g.m} {g.n}"]
    lines.extend(f"{x + 1} {y + 1}" for x, y in g.edges())
    return "\n".join(lines) + "\n"


def bipartite_complement(g: BipartiteGraph) -> BipartiteGraph:
    """Complement across the bipartition: flip every X-Y pair."""
    full = g.x_full
    return BipartiteGraph(g.m, g.n, tuple(mask ^ full for mask in g.adj))


def transpose(g: BipartiteGraph) -> BipartiteGraph:
    """Exchange the two parts."""
    return BipartiteGraph(g.n, g.m, g.x_adj())


def is_connected(g: BipartiteGraph) -> bool:
    """True iff X and Y together form a single connected component."""
    return _connected_masks(g.m, g.n, g.adj)


def _connected_masks(m: int, n: int, adj) -> bool:
    # BFS from x_0, alternating sides on whole-part bitmasks.  Newly found
    # Y-vertices are expanded in the same round they appear.
    x_adj = [0] * m
    for y in range(n):
        for x in _bits(adj[y]):
            x_adj[x] |= 1 << y
    seen_x, seen_y = 1, 0
    frontier_x = 1
    while frontier_x:
        new_y = 0
        for x in _bits(frontier_x):
            new_y |= x_adj[x]
        new_y &= ~seen_y
        seen_y |= new_y
        new_x = 0
        for y in _bits(new_y):
            new_x |= adj[y]
        new_x &= ~seen_x
        seen_x |= new_x
        frontier_x = new_x
    return seen_x == (1 << m) - 1 and seen_y == (1 << n) - 1


@dataclass(frozen=True)
class StructuralFlags:
    has_leaf: bool
    has_isolated: bool
    x_degrees: tuple[int, ...]
    y_degrees: tuple[int, ...]


def structural_flags(g: BipartiteGraph) -> StructuralFlags:
    """Degree-based predicates: leaves (degree 1) and isolated vertices."""
    y_degrees = tuple(mask.bit_count() for mask in g.adj)
    x_degrees = tuple(mask.bit_count() for mask in g.x_adj())
    degrees = x_degrees + y_degrees
    return StructuralFlags(
        has_leaf=1 in degrees,
        has_isolated=0 in degrees,
        x_degrees=x_degrees,
        y_degrees=y_degrees,
    )


def has_isolated_vertex(g: BipartiteGraph) -> bool:
    if any(mask == 0 for mask in g.adj):
        return True
    covered = 0
    for mask in g.adj:
        covered |= mask
    return covered != g.x_full


@lru_cache(maxsize=8)
def _perm_mask_tables(m: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation of 0..m-1, the relabelling of every m-bit mask."""
    size = 1 << m
    tables = []
    for perm in itertools.permutations(range(m)):
        table = [0] * size
        for mask in range(size):
            out = 0
            rest = mask
            while rest:
                low = rest & -rest
                out |= 1 << perm[low.bit_length() - 1]
                rest ^= low
            table[mask] = out
        tables.append(tuple(table))
    return tuple(tables)


def _min_key_over_x_perms(m: int, adj) -> tuple[int, ...]:
    best = None
    for table in _perm_mask_tables(m):
        candidate = tuple(sorted(table[mask] for mask in adj))
        if best is None or candidate < best:
            best = candidate
    return best


def canonical_form(g: BipartiteGraph, allow_side_swap: bool = False) -> CanonicalKey:
    """Minimal sorted mask list over all relabelings of X (Y is absorbed by sorting).

    With ``allow_side_swap`` (only legal when m = n) the two parts may also be
    exchanged; the flag in the result says whether the swap won.  Keys are
    equal exactly for graphs isomorphic under the chosen relabelling group.
    """
    if allow_side_swap and g.m != g.n:
        raise ValueError("side swap requires m = n")
    if g.m > MAX_CANONICAL_M or (allow_side_swap and g.n > MAX_CANONICAL_M):
        raise LimitError(f"canonical form minimises over m! permutations; m <= {MAX_CANONICAL_M}")
    direct = _min_key_over_x_perms(g.m, g.adj)
    if not allow_side_swap:
        return CanonicalKey(direct, swapped=False)
    flipped = _min_key_over_x_perms(g.n, g.x_adj())
    if flipped < direct:
        return CanonicalKey(flipped, swapped=True)
    return CanonicalKey(direct, swapped=False)
