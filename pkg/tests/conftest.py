import random

from bimatch import BipartiteGraph


def random_bipartite(rng: random.Random, max_m: int = 6, max_n: int = 6,
                     edge_bias: float | None = None) -> BipartiteGraph:
    """Random graph with uniform part sizes and per-pair edge probability."""
    m = rng.randint(1, max_m)
    n = rng.randint(1, max_n)
    p = edge_bias if edge_bias is not None else rng.uniform(0.15, 0.85)
    adj = tuple(
        sum(1 << x for x in range(m) if rng.random() < p) for _ in range(n)
    )
    return BipartiteGraph(m, n, adj)


def iter_isolated_free(m: int, n: int):
    """Every graph on m+n labeled vertices without isolated vertices."""
    full = (1 << m) - 1
    for bits in range(1 << (m * n)):
        adj = tuple((bits >> (m * y)) & full for y in range(n))
        if any(mask == 0 for mask in adj):
            continue
        covered = 0
        for mask in adj:
            covered |= mask
        if covered != full:
            continue
        yield BipartiteGraph(m, n, adj)
