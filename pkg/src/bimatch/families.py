"""Constructors for the two witness families used throughout the test suite.

Both families separate invariants that coincide on simpler graphs: one keeps
the induced and ordered matching numbers at r while pushing the minimum
maximal matching up to m, the other keeps the ordered matching number equal
to the plain matching number.
"""

from __future__ import annotations

from .bigraph import BipartiteGraph, from_edge_list


def build_grm(r: int, m: int) -> BipartiteGraph:
    """Leafless connected graph on (m+1)+(m+1) vertices with ind = ord = r
    and minimum maximal matching m (for 2 <= r <= m).

    Using 1-indexed names x_1..x_{m+1}, y_1..y_{m+1}: each y_j with
    j < r is adjacent to x_1 and x_{j+1}; each y_j with r <= j <= m is
    adjacent to x_1 and to all of x_{r+1}..x_{m+1}; and y_{m+1} is adjacent
    to every X-vertex.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    if r > m:
        raise ValueError("r must not exceed m")
    edges: list[tuple[int, int]] = []
    for j in range(1, r):
        edges.append((0, j - 1))
        edges.append((j, j - 1))
    for j in range(r, m + 1):
        edges.append((0, j - 1))
        edges.extend((i - 1, j - 1) for i in range(r + 1, m + 2))
    edges.extend((i, m) for i in range(m + 1))
    return from_edge_list(m + 1, m + 1, edges)


def build_cycle_path(k: int) -> BipartiteGraph:
    """4-cycle with a path of 2k-3 edges hung on one cycle vertex (k >= 3).

    The result is bipartite (even cycle plus a path); vertices are assigned
    to sides by parity of their distance from the attachment vertex, with
    the even side becoming X.  Its matching and ordered matching numbers
    are both k.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    # Vertices: cycle w, c1, c2, c3 and path p1..p_{2k-3} hanging off w.
    w, c1, c2, c3 = 0, 1, 2, 3
    path = [4 + i for i in range(2 * k - 3)]
    raw_edges = [(w, c1), (c1, c2), (c2, c3), (c3, w)]
    prev = w
    for p in path:
        raw_edges.append((prev, p))
        prev = p
    parity = {w: 0, c1: 1, c2: 0, c3: 1}
    for i, p in enumerate(path, start=1):
        parity[p] = i % 2
    x_index: dict[int, int] = {}
    y_index: dict[int, int] = {}
    for v in range(4 + len(path)):
        if parity[v] == 0:
            x_index[v] = len(x_index)
        else:
            y_index[v] = len(y_index)
    edges = []
    for u, v in raw_edges:
        if parity[u] == 0:
            edges.append((x_index[u], y_index[v]))
        else:
            edges.append((x_index[v], y_index[u]))
    return from_edge_list(len(x_index), len(y_index), edges)
