"""Neighborhood profiles and the classification of graphs with ind = ord.

The profile of a bipartite graph maps each subset I of X to the number of
Y-vertices whose neighborhood is exactly I.  It determines the graph up to
relabelling of Y, and it is the whole story for deciding whether the induced
and ordered matching numbers coincide: both numbers are recomputable from
the profile alone, and equality at a given value r is a finite condition on
the family of subsets with positive count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bigraph import BipartiteGraph, _bits, bipartite_complement, is_connected
from .errors import LimitError

FAMILY_LIMIT = 20      # exhaustive subfamily searches
ORD_PROFILE_M_LIMIT = 24


@dataclass(frozen=True)
class NeighborhoodProfile:
    """Map from X-subsets (bitmasks) to the count of Y-vertices realising them.

    Only positive counts are stored and the empty subset never appears, so
    the counts sum to n.
    """

    m: int
    counts: dict[int, int]

    def __post_init__(self) -> None:
        full = (1 << self.m) - 1
        for mask, count in self.counts.items():
            if mask == 0:
                raise ValueError("empty neighborhood in profile (isolated Y-vertex)")
            if mask & ~full:
                raise ValueError("profile subset uses bits outside X")
            if count < 1:
                raise ValueError("profile stores positive counts only")

    @property
    def n(self) -> int:
        return sum(self.counts.values())

    @property
    def x_full(self) -> int:
        return (1 << self.m) - 1

    def proper_subsets(self) -> tuple[int, ...]:
        """Stored subsets other than X, ordered by size then value."""
        return tuple(
            sorted(
                (mask for mask in self.counts if mask != self.x_full),
                key=lambda mask: (mask.bit_count(), mask),
            )
        )

    @property
    def c_x(self) -> int:
        return self.counts.get(self.x_full, 0)


@dataclass(frozen=True)
class ClassificationResult:
    """Outcome of the ind = ord = 2 decision for one graph."""

    equal: bool
    r: int | None
    z: int
    jsets: tuple[int, ...]
    c_x: int
    disjoint_case: bool


def compute_profile(g: BipartiteGraph) -> NeighborhoodProfile:
    """Group the Y-vertices by their exact neighborhood.

    Graphs with an isolated vertex on either side are rejected: an isolated
    Y-vertex would need the empty subset, and an isolated X-vertex makes the
    stored subsets miss part of X.
    """
    counts: dict[int, int] = {}
    covered = 0
    for mask in g.adj:
        if mask == 0:
            raise ValueError("graph has an isolated Y-vertex")
        counts[mask] = counts.get(mask, 0) + 1
        covered |= mask
    if covered != g.x_full:
        raise ValueError("graph has an isolated X-vertex")
    return NeighborhoodProfile(g.m, counts)


def _family(p: NeighborhoodProfile) -> tuple[int, ...]:
    family = tuple(sorted(p.counts))
    if len(family) > FAMILY_LIMIT:
        raise LimitError(f"profile family larger than {FAMILY_LIMIT} subsets")
    return family


def _has_private_elements(sets: tuple[int, ...]) -> bool:
    """True when no member is contained in the union of the others."""
    total = 0
    for s in sets:
        total |= s
    for s in sets:
        others = 0
        for t in sets:
            if t is not s:
                others |= t
        if not (s & ~others):
            return False
    return True


def ind_match_from_profile(p: NeighborhoodProfile) -> int:
    """Induced matching number: the largest subfamily with all members private.

    A family is usable when none of its members lies in the union of the
    others; adding further sets only grows the union, so validity is
    inherited by subfamilies and the search can prune as soon as a member
    loses its private element.
    """
    family = _family(p)
    k = len(family)
    best = 0

    def search(chosen: list[int], start: int) -> None:
        nonlocal best
        if len(chosen) > best:
            best = len(chosen)
        for idx in range(start, k):
            if len(chosen) + (k - idx) <= best:
                break
            extended = chosen + [family[idx]]
            if _has_private_elements(tuple(extended)):
                search(extended, idx + 1)

    search([], 0)
    return best


def ord_match_from_profile(p: NeighborhoodProfile) -> int:
    """Ordered matching number: the longest chain of strict union growth.

    Dynamic programming over the union bitmask; each step must pick a stored
    subset with an element outside the running union.
    """
    if p.m > ORD_PROFILE_M_LIMIT:
        raise LimitError(f"profile ord-match limited to m <= {ORD_PROFILE_M_LIMIT}")
    family = tuple(sorted(p.counts))
    memo: dict[int, int] = {}

    def longest(union: int) -> int:
        cached = memo.get(union)
        if cached is not None:
            return cached
        best = 0
        for s in family:
            if s & ~union:
                got = 1 + longest(union | s)
                if got > best:
                    best = got
        memo[union] = best
        return best

    return longest(0)


def _longest_chain_below_full(family: tuple[int, ...], full: int) -> int:
    """Longest strict-growth chain whose union stays a proper subset.

    A chain adds sets that each contribute a new element; prefixes of a
    chain avoiding the full set avoid it too, so the search never needs to
    pass through the full union.
    """
    best: dict[int, int] = {0: 0}

    def explore(union: int, length: int) -> None:
        for s in family:
            if s & ~union:
                grown = union | s
                if grown != full and best.get(grown, -1) < length + 1:
                    best[grown] = length + 1
                    explore(grown, length + 1)

    explore(0, 0)
    return max(best.values())


def classify_equal_r(p: NeighborhoodProfile, r: int) -> bool:
    """Decide ind = ord = r (r >= 2) from the proper stored subsets alone.

    Three conditions: at least r proper subsets occur; some r of them form
    an independent family (each keeps a private element), which pushes the
    induced matching number to r; and no chain of r sets, each adding a new
    element over its predecessors, has union short of X, which caps the
    ordered matching number at r.  The chain condition is strictly stronger
    than requiring only the independent r-families to union to X: a nested
    pair is a valid chain but not an independent family.
    """
    if r < 2:
        raise ValueError("classification by subset family applies to r >= 2 only")
    proper = p.proper_subsets()
    if len(proper) > FAMILY_LIMIT:
        raise LimitError(f"profile family larger than {FAMILY_LIMIT} subsets")
    if len(proper) < r:
        return False
    if not any(_has_private_elements(combo) for combo in itertools.combinations(proper, r)):
        return False
    return _longest_chain_below_full(proper, p.x_full) < r


def is_ind_ord_one(g: BipartiteGraph) -> bool:
    """Both matching numbers equal 1 exactly for complete bipartite graphs."""
    profile = compute_profile(g)
    return profile.counts.keys() == {profile.x_full}


def classify_equal_two(g: BipartiteGraph) -> ClassificationResult:
    """Decide ind = ord = 2 twice over and insist the answers agree.

    Route (a) checks the subset-family conditions on the profile: at least
    two proper subsets occur, some two are incomparable, and every pair
    unions to X.  Route (b) checks that the bipartite complement splits into
    complete bipartite components, at least two of which carry an edge.
    Disagreement would mean a bug, so it is a fatal assertion.
    """
    profile = compute_profile(g)
    proper = profile.proper_subsets()
    z = len(proper)

    pairwise_union = all(
        a | b == profile.x_full for a, b in itertools.combinations(proper, 2)
    )
    incomparable = any(
        a & ~b and b & ~a for a, b in itertools.combinations(proper, 2)
    )
    route_a = z >= 2 and incomparable and pairwise_union

    route_b = _complement_is_kpartite_union(g)
    assert route_a == route_b, "profile and complement classifications disagree"

    disjoint_case = any(a & b == 0 for a, b in itertools.combinations(proper, 2))
    return ClassificationResult(
        equal=route_a,
        r=2 if route_a else None,
        z=z,
        jsets=proper,
        c_x=profile.c_x,
        disjoint_case=disjoint_case,
    )


def _complement_is_kpartite_union(g: BipartiteGraph) -> bool:
    """Complement test: a disjoint union of complete bipartite components,
    at least two of them with an edge.  An isolated vertex counts as a
    degenerate complete bipartite component with one empty side."""
    h = bipartite_complement(g)
    h_x_adj = h.x_adj()
    seen_x = seen_y = 0
    components = 0
    with_edges = 0
    for start_x in range(h.m):
        if seen_x >> start_x & 1:
            continue
        a_mask, b_mask = _component_from(h, h_x_adj, x_seed=1 << start_x, y_seed=0)
        seen_x |= a_mask
        seen_y |= b_mask
        components += 1
        if a_mask and b_mask:
            with_edges += 1
            for y in _bits(b_mask):
                if h.adj[y] != a_mask:
                    return False
    for start_y in range(h.n):
        if not (seen_y >> start_y & 1):
            components += 1  # isolated in the complement
            seen_y |= 1 << start_y
    return components >= 2 and with_edges >= 2


def _component_from(h: BipartiteGraph, h_x_adj, x_seed: int, y_seed: int):
    a_mask, b_mask = x_seed, y_seed
    grew = True
    while grew:
        grew = False
        new_b = 0
        for x in _bits(a_mask):
            new_b |= h_x_adj[x]
        if new_b & ~b_mask:
            b_mask |= new_b
            grew = True
        new_a = 0
        for y in _bits(b_mask):
            new_a |= h.adj[y]
        if new_a & ~a_mask:
            a_mask |= new_a
            grew = True
    return a_mask, b_mask
