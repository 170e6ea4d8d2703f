"""Exact matching invariants by direct search.

Four matching numbers are computed here: the maximum matching, the minimum
maximal matching, the maximum induced matching, and the maximum ordered
matching (a matching a_1b_1, ..., a_rb_r whose first endpoints form an
independent set and where a_i b_j can only be an edge for i <= j).  All
searches are exhaustive within documented edge/vertex limits; exceeding a
limit raises instead of returning an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bigraph import BipartiteGraph, _bits, is_connected, structural_flags, transpose
from .errors import LimitError

MIN_MATCH_EDGE_LIMIT = 40
INDUCED_EDGE_LIMIT = 40
ORDERED_EDGE_LIMIT = 30
UNMIXED_VERTEX_LIMIT = 24


@dataclass(frozen=True)
class InvariantReport:
    """The four matching numbers plus structural flags for one graph."""

    match: int
    min_match: int
    ind_match: int
    ord_match: int
    connected: bool
    has_leaf: bool
    unmixed: bool


def matching_number(g: BipartiteGraph) -> int:
    """Maximum matching size via augmenting paths."""
    match_of_y = [-1] * g.n
    x_neighbors = [list(_bits(mask)) for mask in transpose(g).adj]

    def try_augment(x: int, visited: list[bool]) -> bool:
        for y in x_neighbors[x]:
            if visited[y]:
                continue
            visited[y] = True
            if match_of_y[y] == -1 or try_augment(match_of_y[y], visited):
                match_of_y[y] = x
                return True
        return False

    size = 0
    for x in range(g.m):
        if try_augment(x, [False] * g.n):
            size += 1
    return size


def min_matching_number(g: BipartiteGraph) -> int:
    """Minimum size of a maximal matching, by exhaustive branching.

    At each step the lexicographically first edge with both endpoints free
    must be dominated, so some edge touching it belongs to the matching;
    branching over those candidates visits every maximal matching.
    """
    edges = g.edges()
    if len(edges) > MIN_MATCH_EDGE_LIMIT:
        raise LimitError(f"minimum-matching search limited to {MIN_MATCH_EDGE_LIMIT} edges")
    if not edges:
        return 0

    # Greedy maximal matching seeds the upper bound.
    used_x = used_y = 0
    greedy = 0
    for x, y in edges:
        if not (used_x >> x & 1) and not (used_y >> y & 1):
            used_x |= 1 << x
            used_y |= 1 << y
            greedy += 1
    best = [greedy]

    def search(matched_x: int, matched_y: int, size: int) -> None:
        if size >= best[0]:
            return
        for x, y in edges:
            if not (matched_x >> x & 1) and not (matched_y >> y & 1):
                # (x, y) is undominated: every maximal matching covers x or y.
                for u, v in edges:
                    if (u == x or v == y) and not (matched_x >> u & 1) and not (matched_y >> v & 1):
                        search(matched_x | 1 << u, matched_y | 1 << v, size + 1)
                return
        best[0] = size

    search(0, 0, 0)
    return best[0]


def induced_matching_number(g: BipartiteGraph) -> int:
    """Maximum induced matching via branch and bound over the edge list.

    Two edges conflict when they share an endpoint or an edge of the graph
    joins them; an induced matching is an independent set in that conflict
    relation.
    """
    edges = g.edges()
    if len(edges) > INDUCED_EDGE_LIMIT:
        raise LimitError(f"induced-matching search limited to {INDUCED_EDGE_LIMIT} edges")
    k = len(edges)
    if k == 0:
        return 0

    conflict = [0] * k
    for i, (xi, yi) in enumerate(edges):
        for j, (xj, yj) in enumerate(edges):
            if i == j:
                continue
            if xi == xj or yi == yj or (g.adj[yj] >> xi & 1) or (g.adj[yi] >> xj & 1):
                conflict[i] |= 1 << j

    best = 0

    def search(candidates: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + candidates.bit_count() <= best:
            return
        if not candidates:
            return
        low = candidates & -candidates
        e = low.bit_length() - 1
        search(candidates & ~conflict[e] & ~low, size + 1)
        search(candidates ^ low, size)

    search((1 << k) - 1, 0)
    return best


def ordered_matching_number(g: BipartiteGraph) -> int:
    """Maximum ordered matching; both choices of the first-endpoint side are tried.

    Within one side the first endpoints are automatically independent, but
    the side holding them is not forced, so the search runs once with the
    first endpoints in X and once (on the transpose) with them in Y.
    """
    if g.edge_count() > ORDERED_EDGE_LIMIT:
        raise LimitError(f"ordered-matching search limited to {ORDERED_EDGE_LIMIT} edges")
    return max(_ordered_one_side(g), _ordered_one_side(transpose(g)))


def _ordered_one_side(g: BipartiteGraph) -> int:
    # First endpoints in X.  Growing the sequence only constrains the new
    # first endpoint against the seconds already used, so the best extension
    # depends on the used-vertex masks alone and can be memoised.
    edges = g.edges()
    x_adj = transpose(g).adj
    memo: dict[tuple[int, int], int] = {}

    def extend(used_x: int, used_y: int) -> int:
        key = (used_x, used_y)
        cached = memo.get(key)
        if cached is not None:
            return cached
        best = 0
        for a, b in edges:
            if used_x >> a & 1 or used_y >> b & 1:
                continue
            if x_adj[a] & used_y:
                continue  # a is adjacent to an earlier second endpoint
            got = 1 + extend(used_x | 1 << a, used_y | 1 << b)
            if got > best:
                best = got
        memo[key] = best
        return best

    return extend(0, 0)


def maximal_independent_set_sizes(g: BipartiteGraph) -> set[int]:
    """Sizes of all maximal independent sets, by closure over the smaller part."""
    if g.m + g.n > UNMIXED_VERTEX_LIMIT:
        raise LimitError(f"independent-set enumeration limited to {UNMIXED_VERTEX_LIMIT} vertices")
    h = g if g.m <= g.n else transpose(g)
    x_adj = transpose(h).adj
    sizes: set[int] = set()
    for a_mask in range(1 << h.m):
        # Largest compatible Y-set, then check A is closed back.
        b_mask = 0
        for y in range(h.n):
            if not (h.adj[y] & a_mask):
                b_mask |= 1 << y
        closed = 0
        for x in range(h.m):
            if not (x_adj[x] & b_mask):
                closed |= 1 << x
        if closed == a_mask:
            sizes.add(a_mask.bit_count() + b_mask.bit_count())
    return sizes


def is_unmixed(g: BipartiteGraph) -> bool:
    """True iff every maximal independent set has the same cardinality."""
    return len(maximal_independent_set_sizes(g)) == 1


def invariant_report(g: BipartiteGraph) -> InvariantReport:
    """Bundle all invariants; the standard inequality chain is asserted."""
    report = InvariantReport(
        match=matching_number(g),
        min_match=min_matching_number(g),
        ind_match=induced_matching_number(g),
        ord_match=ordered_matching_number(g),
        connected=is_connected(g),
        has_leaf=structural_flags(g).has_leaf,
        unmixed=is_unmixed(g),
    )
    assert report.ind_match <= report.ord_match <= report.match
    assert report.ind_match <= report.min_match <= report.match
    return report
