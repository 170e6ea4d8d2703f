"""Brute-force oracles that ground the counting formulas.

Three independent routes are provided.  ``count_tuples`` literally counts
the admissible count-tuples behind each nested sum.  ``enumerate_graphs``
walks neighborhood profiles (a profile is a graph up to Y-relabelling),
deduplicates them under X-relabelling (and optionally a side swap) and
filters.  ``raw_enumerate`` sweeps every edge subset of K_{m,n} at tiny
sizes and must agree with the profile enumeration wherever both run.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .bigraph import (
    BipartiteGraph,
    _connected_masks,
    _perm_mask_tables,
    canonical_form,
    format_graph,
    transpose,
)
from .errors import LimitError
from .invariants import induced_matching_number, ordered_matching_number
from .kseq import KSequence, jsets_from_ksequence
from .profile import classify_equal_two, compute_profile, \
    ind_match_from_profile, ord_match_from_profile

ENUM_M_LIMIT = 6
ENUM_N_LIMIT = 9
RAW_EDGE_CELL_LIMIT = 20
FULL_COMPOSITION_LIMIT = 2_000_000
SPOT_CHECK_STRIDE = 37

FILTER_IND_ORD_TWO = "ind_ord_two"
FILTER_IND_ORD_R = "ind_ord_r"
FILTER_ALL_CONNECTED = "all_connected"
MODE_LABELED = "sides_labeled"
MODE_UNLABELED = "sides_unlabeled"


@dataclass(frozen=True)
class EnumerationJob:
    """What to enumerate: sizes, isomorphism mode, and the graph filter."""

    m: int
    n: int
    mode: str = MODE_LABELED
    filter: str = FILTER_IND_ORD_TWO
    r: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in (MODE_LABELED, MODE_UNLABELED):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.filter not in (FILTER_IND_ORD_TWO, FILTER_IND_ORD_R, FILTER_ALL_CONNECTED):
            raise ValueError(f"unknown filter {self.filter!r}")
        if self.mode == MODE_UNLABELED and self.m != self.n:
            raise ValueError("side-swap mode requires m = n")
        if self.filter == FILTER_IND_ORD_R:
            if self.r is None or self.r < 1:
                raise ValueError("ind_ord_r filter needs r >= 1")
        elif self.r is not None:
            raise ValueError("r only applies to the ind_ord_r filter")


def worker_count() -> int:
    """Thread budget from BIMATCH_THREADS (informational; results never depend on it)."""
    raw = os.environ.get("BIMATCH_THREADS", "")
    if not raw:
        return os.cpu_count() or 1
    value = int(raw)
    if value < 1:
        raise ValueError("BIMATCH_THREADS must be positive")
    return value


def count_tuples(n: int, ks) -> int:
    """Literal tuple count behind one sequence: no formula, plain enumeration.

    Counts tuples (c_1, ..., c_z, c_extra) of nonnegative integers summing
    to n with c_1, c_2 >= 1 and c_l <= c_{l-1} whenever the l-th and
    (l-1)-th canonical sets have equal size.  For z = 2 the two sets
    partition X, where connectivity additionally needs c_extra >= 1.
    """
    ks = ks if isinstance(ks, KSequence) else KSequence(tuple(ks))
    if n < 0:
        raise ValueError("n must be nonnegative")
    sizes = [s.bit_count() for s in jsets_from_ksequence(ks).sets]
    z = ks.z
    total = 0

    def place(l: int, used: int, prev: int) -> None:
        nonlocal total
        if l > z:
            if z == 2 and used == n:
                return  # no fully adjacent Y-vertex: the partitioned graph splits
            total += 1
            return
        lo = 1 if l <= 2 else 0
        hi = n - used
        if l >= 2 and sizes[l - 1] == sizes[l - 2]:
            hi = min(hi, prev)
        for c in range(lo, hi + 1):
            place(l + 1, used + c, c)

    place(1, 0, 0)
    return total


def _graph_from_profile(m: int, counts: dict[int, int]) -> BipartiteGraph:
    adj = tuple(
        mask for mask in sorted(counts) for _ in range(counts[mask])
    )
    return BipartiteGraph(m, len(adj), adj)


def _profile_orbit_key(m: int, counts: dict[int, int]) -> tuple[tuple[int, int], ...]:
    """Lexicographically least relabelling of the profile under all X-permutations."""
    items = tuple(counts.items())
    best = None
    for table in _perm_mask_tables(m):
        candidate = tuple(sorted((table[mask], c) for mask, c in items))
        if best is None or candidate < best:
            best = candidate
    return best


def _class_key(job: EnumerationJob, counts: dict[int, int], rep: BipartiteGraph):
    key = _profile_orbit_key(job.m, counts)
    if job.mode == MODE_UNLABELED:
        flipped = compute_profile(transpose(rep))
        key = min(key, _profile_orbit_key(flipped.m, flipped.counts))
    return key


def _candidate_profiles(job: EnumerationJob) -> Iterator[dict[int, int]]:
    """Profiles with count total n; the 2-filter job restricts supports.

    For the ind = ord = 2 filter every pair of positive proper subsets must
    union to X (their complements are disjoint), so only such supports are
    generated; the raw edge-subset sweep cross-checks this restriction.
    Other filters walk the full composition space, which is only feasible at
    very small sizes.
    """
    m, n = job.m, job.n
    full = (1 << m) - 1
    if job.filter == FILTER_IND_ORD_TWO:
        for complements in _disjoint_complement_families(full):
            supports = tuple(full ^ a for a in complements)
            yield from _profiles_on_support(supports, full, n)
    else:
        masks = list(range(1, full + 1))
        space = _composition_space(n, len(masks))
        if space > FULL_COMPOSITION_LIMIT:
            raise LimitError(
                f"{space} profiles exceed the full-enumeration limit "
                f"{FULL_COMPOSITION_LIMIT}; only the ind=ord=2 filter scales past it"
            )
        yield from _full_profiles(masks, n)


def _composition_space(n: int, parts: int) -> int:
    return math.comb(n + parts - 1, parts - 1)


def _disjoint_complement_families(full: int) -> Iterator[tuple[int, ...]]:
    """Families of pairwise disjoint nonempty proper submasks, each family once.

    The complements of such a family are the supports whose members pairwise
    union to the whole ground set."""

    def extend(chosen: tuple[int, ...], free: int, floor: int) -> Iterator[tuple[int, ...]]:
        yield chosen
        sub = free
        candidates = []
        while sub:
            if sub > floor and sub != full:
                candidates.append(sub)
            sub = (sub - 1) & free
        for nxt in sorted(candidates):
            yield from extend(chosen + (nxt,), free & ~nxt, nxt)

    yield from extend((), full, 0)


def _profiles_on_support(supports: tuple[int, ...], full: int, n: int) -> Iterator[dict[int, int]]:
    z = len(supports)

    def assign(idx: int, left: int, acc: dict[int, int]) -> Iterator[dict[int, int]]:
        if idx == z:
            profile = dict(acc)
            if left:
                profile[full] = left
            if profile:
                yield profile
            return
        for c in range(1, left - (z - idx - 1) + 1):
            acc[supports[idx]] = c
            yield from assign(idx + 1, left - c, acc)
        acc.pop(supports[idx], None)

    yield from assign(0, n, {})


def _full_profiles(masks: list[int], n: int) -> Iterator[dict[int, int]]:
    def assign(idx: int, left: int, acc: dict[int, int]) -> Iterator[dict[int, int]]:
        if idx == len(masks) - 1:
            if left:
                acc[masks[idx]] = left
                yield dict(acc)
                del acc[masks[idx]]
            else:
                yield dict(acc)
            return
        for c in range(left + 1):
            if c:
                acc[masks[idx]] = c
            yield from assign(idx + 1, left - c, acc)
            if c:
                del acc[masks[idx]]

    yield from assign(0, n, {})


def _passes(job: EnumerationJob, counts: dict[int, int], rep: BipartiteGraph) -> bool:
    covered = 0
    for mask in counts:
        covered |= mask
    if covered != (1 << job.m) - 1:
        return False  # isolated X-vertex
    if not _connected_masks(rep.m, rep.n, rep.adj):
        return False
    if job.filter == FILTER_ALL_CONNECTED:
        return True
    if job.filter == FILTER_IND_ORD_TWO:
        return classify_equal_two(rep).equal
    profile = compute_profile(rep)
    return (
        ind_match_from_profile(profile) == job.r
        and ord_match_from_profile(profile) == job.r
    )


def _spot_check(job: EnumerationJob, rep: BipartiteGraph) -> None:
    # Re-verify by direct search where its edge limits allow.
    if job.filter == FILTER_ALL_CONNECTED:
        return
    want = 2 if job.filter == FILTER_IND_ORD_TWO else job.r
    edges = rep.edge_count()
    if edges <= 40:
        assert induced_matching_number(rep) == want, \
            "profile filter disagrees with direct induced-matching search"
    if edges <= 30:
        assert ordered_matching_number(rep) == want, \
            "profile filter disagrees with direct ordered-matching search"


def iter_graph_classes(job: EnumerationJob) -> Iterator[BipartiteGraph]:
    """One representative per isomorphism class passing the job's filter.

    Filters are isomorphism-invariant, so filtering before orbit
    deduplication yields the same classes as the reverse order.  Every
    ``SPOT_CHECK_STRIDE``-th representative is re-verified by direct
    matching search.
    """
    if job.m > ENUM_M_LIMIT or job.n > ENUM_N_LIMIT:
        raise LimitError(
            f"profile enumeration limited to m <= {ENUM_M_LIMIT}, n <= {ENUM_N_LIMIT}"
        )
    seen: set = set()
    accepted = 0
    for counts in _candidate_profiles(job):
        rep = _graph_from_profile(job.m, counts)
        if not _passes(job, counts, rep):
            continue
        key = _class_key(job, counts, rep)
        if key in seen:
            continue
        seen.add(key)
        accepted += 1
        if accepted % SPOT_CHECK_STRIDE == 1:
            _spot_check(job, rep)
        yield rep


def enumerate_graphs(job: EnumerationJob, emit_dir: str | Path | None = None) -> int:
    """Count the job's isomorphism classes; optionally write each representative."""
    count = 0
    directory = Path(emit_dir) if emit_dir is not None else None
    if directory is not None:
        directory.mkdir(parents=True, exist_ok=True)
    for rep in iter_graph_classes(job):
        count += 1
        if directory is not None:
            key = canonical_form(rep, allow_side_swap=job.mode == MODE_UNLABELED)
            digits = (rep.m + 3) // 4
            name = "".join(f"{mask:0{digits}x}" for mask in key.key)
            (directory / f"{name}.txt").write_text(format_graph(rep))
    return count


def raw_enumerate(m: int, n: int, mode: str = MODE_LABELED,
                  filter: str = FILTER_IND_ORD_TWO, r: int | None = None) -> int:
    """Sweep all 2^(m*n) edge subsets; filter by direct matching search.

    Completely independent of the profile machinery: connectivity is checked
    on the masks, deduplication uses the canonical form, and the matching
    numbers come from the branch-and-bound searches.
    """
    job = EnumerationJob(m, n, mode, filter, r)  # reuse argument validation
    if m * n > RAW_EDGE_CELL_LIMIT:
        raise LimitError(f"raw sweep limited to m*n <= {RAW_EDGE_CELL_LIMIT}")
    full_x = (1 << m) - 1
    swap = mode == MODE_UNLABELED
    want = 2 if filter == FILTER_IND_ORD_TWO else r
    seen: set[tuple[int, ...]] = set()
    count = 0
    for bits in range(1 << (m * n)):
        adj = tuple((bits >> (m * y)) & full_x for y in range(n))
        covered = 0
        skip = False
        for mask in adj:
            if mask == 0:
                skip = True
                break
            covered |= mask
        if skip or covered != full_x:
            continue
        if not _connected_masks(m, n, adj):
            continue
        g = BipartiteGraph(m, n, adj)
        key = canonical_form(g, allow_side_swap=swap).key
        if key in seen:
            continue
        seen.add(key)
        if filter == FILTER_ALL_CONNECTED:
            count += 1
        elif induced_matching_number(g) == want and ordered_matching_number(g) == want:
            count += 1
    return count
