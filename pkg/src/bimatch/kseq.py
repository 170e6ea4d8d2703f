"""Admissible integer sequences and their canonical realizations as set lists.

The counting formulas enumerate graphs through strictly decreasing integer
sequences k_0 > k_1 > ... > k_z = 0 (z >= 2) that satisfy the convexity
condition k_{l+1} >= 2*k_l - k_{l-1} for l = 1..z-1.  Each such sequence is
realized canonically by proper subsets J_l = {1..k_l} | {k_{l-1}+1..m} of
X = {1..m}: a list of nonempty proper subsets with nondecreasing sizes,
pairwise unions equal to X and empty total intersection.  The sequence and
the canonical list determine each other.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class KSequence:
    """Strictly decreasing convex integer sequence ending in 0, z >= 2."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if len(terms) < 3:
            raise ValueError("sequence needs at least three terms (z >= 2)")
        if terms[-1] != 0:
            raise ValueError("sequence must end in 0")
        if any(a <= b for a, b in zip(terms, terms[1:])):
            raise ValueError("sequence must be strictly decreasing")
        for l in range(1, len(terms) - 1):
            if terms[l + 1] < 2 * terms[l] - terms[l - 1]:
                raise ValueError(
                    f"convexity fails at position {l}: "
                    f"{terms[l + 1]} < 2*{terms[l]} - {terms[l - 1]}"
                )

    @property
    def z(self) -> int:
        return len(self.terms) - 1

    @property
    def k0(self) -> int:
        return self.terms[0]

    def __iter__(self):
        return iter(self.terms)

    def __getitem__(self, idx):
        return self.terms[idx]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class JSetList:
    """Subsets J_1..J_z of {1..m} as bitmasks (element i on bit i-1)."""

    m: int
    sets: tuple[int, ...]


def enumerate_ksequences(m: int, min_length: int = 3) -> list[KSequence]:
    """All sequences with first term m and at least ``min_length`` terms.

    ``min_length`` 3 keeps everything; 4 keeps the sequences whose canonical
    set lists overlap pairwise.  Output is ordered largest-first, e.g. for
    m = 4: (4,3,2,1,0), (4,2,1,0), (4,2,0), (4,1,0).
    """
    if m < 2:
        raise ValueError("m must be at least 2")
    if min_length not in (3, 4):
        raise ValueError("min_length must be 3 or 4")
    out: list[KSequence] = []

    def extend(prefix: list[int]) -> None:
        lower = 0 if len(prefix) == 1 else max(0, 2 * prefix[-1] - prefix[-2])
        for nxt in range(prefix[-1] - 1, lower - 1, -1):
            if nxt == 0:
                if len(prefix) >= 2 and len(prefix) + 1 >= min_length:
                    out.append(KSequence((*prefix, 0)))
            else:
                extend(prefix + [nxt])

    extend([m])
    return out


def _range_mask(lo: int, hi: int) -> int:
    """Bitmask of 1-indexed elements lo..hi inclusive (empty when lo > hi)."""
    if lo > hi:
        return 0
    return ((1 << hi) - 1) ^ ((1 << (lo - 1)) - 1)


def jsets_from_ksequence(ks: KSequence) -> JSetList:
    """Canonical realization J_l = {1..k_l} | {k_{l-1}+1..m}."""
    terms = ks.terms
    m = terms[0]
    sets = tuple(
        _range_mask(1, terms[l]) | _range_mask(terms[l - 1] + 1, m)
        for l in range(1, len(terms))
    )
    return JSetList(m, sets)


def ksequence_of(js: JSetList) -> KSequence:
    """Recover the sequence from running intersection sizes k_l = |J_1 & .. & J_l|."""
    terms = [js.m]
    running = (1 << js.m) - 1
    for s in js.sets:
        running &= s
        terms.append(running.bit_count())
    return KSequence(tuple(terms))


def validate_jsets(js: JSetList) -> tuple[bool, str | None]:
    """Check the structural set-list conditions; name the first violation.

    Conditions: at least two sets, each a nonempty proper subset of {1..m},
    nondecreasing sizes, every pair unions to the full ground set, empty
    total intersection.
    """
    full = (1 << js.m) - 1
    sets = js.sets
    if len(sets) < 2:
        return False, "fewer than two sets"
    for idx, s in enumerate(sets, start=1):
        if s == 0:
            return False, f"set {idx} is empty"
        if s & ~full:
            return False, f"set {idx} uses elements outside 1..{js.m}"
        if s == full:
            return False, f"set {idx} is not a proper subset"
    sizes = [s.bit_count() for s in sets]
    if any(a > b for a, b in zip(sizes, sizes[1:])):
        return False, "sizes are not nondecreasing"
    for i in range(len(sets)):
        for j in range(i + 1, len(sets)):
            if sets[i] | sets[j] != full:
                return False, f"sets {i + 1} and {j + 1} do not union to the ground set"
    total = full
    for s in sets:
        total &= s
    if total:
        return False, "total intersection is nonempty"
    return True, None
