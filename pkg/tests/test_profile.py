import itertools
import random

import pytest

from bimatch import (
    BipartiteGraph,
    LimitError,
    NeighborhoodProfile,
    classify_equal_r,
    classify_equal_two,
    compute_profile,
    from_edge_list,
    ind_match_from_profile,
    induced_matching_number,
    is_connected,
    is_ind_ord_one,
    ord_match_from_profile,
    ordered_matching_number,
)
from bimatch.families import build_cycle_path, build_grm

from conftest import iter_isolated_free, random_bipartite


def complete(m, n):
    return from_edge_list(m, n, [(x, y) for x in range(m) for y in range(n)])


def test_profile_of_complete():
    p = compute_profile(complete(3, 5))
    assert p.counts == {0b111: 5}
    assert p.n == 5 and p.c_x == 5


def test_profile_of_grm24():
    p = compute_profile(build_grm(2, 4))
    assert p.counts == {0b00011: 1, 0b11101: 3, 0b11111: 1}


def test_profile_of_two_edge_matching():
    p = compute_profile(BipartiteGraph(2, 2, (0b01, 0b10)))
    assert p.counts == {0b01: 1, 0b10: 1}


def test_profile_rejects_isolated_vertices():
    with pytest.raises(ValueError):
        compute_profile(from_edge_list(2, 1, []))  # isolated y and x
    with pytest.raises(ValueError):
        compute_profile(from_edge_list(2, 2, [(0, 0), (0, 1)]))  # isolated x_2


def test_profile_counts_sum_to_n():
    rng = random.Random(801)
    done = 0
    while done < 200:
        g = random_bipartite(rng)
        try:
            p = compute_profile(g)
        except ValueError:
            continue
        assert p.n == g.n
        assert all(c >= 1 for c in p.counts.values())
        done += 1


# ------------------------------------------------- profile-based numbers

def test_ind_from_profile_examples():
    assert ind_match_from_profile(compute_profile(complete(4, 3))) == 1
    assert ind_match_from_profile(compute_profile(build_grm(2, 4))) == 2
    singles = NeighborhoodProfile(3, {0b001: 1, 0b010: 1, 0b100: 1})
    assert ind_match_from_profile(singles) == 3


def test_ord_from_profile_examples():
    assert ord_match_from_profile(compute_profile(complete(2, 5))) == 1
    chain = NeighborhoodProfile(2, {0b01: 1, 0b11: 1})
    assert ord_match_from_profile(chain) == 2
    for k in (3, 4, 5):
        g = build_cycle_path(k)
        assert ord_match_from_profile(compute_profile(g)) == k


def _brute_ord_from_family(m, family):
    best = 0
    for size in range(1, len(family) + 1):
        for seq in itertools.permutations(family, size):
            union = 0
            ok = True
            for s in seq:
                if not (s & ~union):
                    ok = False
                    break
                union |= s
            if ok:
                best = max(best, size)
    return best


def test_ord_from_profile_matches_chain_brute_force():
    rng = random.Random(802)
    for _ in range(300):
        m = rng.randint(1, 5)
        full = (1 << m) - 1
        pool = list(range(1, full + 1))
        family = rng.sample(pool, k=min(len(pool), rng.randint(1, 5)))
        if rng.random() < 0.5 and full not in family:
            family.append(full)
        profile = NeighborhoodProfile(m, {s: 1 for s in family})
        assert ord_match_from_profile(profile) == _brute_ord_from_family(m, family)


# ---------------------------------------------------------- classifiers

@pytest.mark.parametrize("r,m", [(r, m) for m in range(2, 6) for r in range(2, m + 1)])
def test_classify_equal_r_on_grm(r, m):
    p = compute_profile(build_grm(r, m))
    assert classify_equal_r(p, r)
    for other in range(2, m + 2):
        if other != r:
            assert not classify_equal_r(p, other)


def test_classify_equal_r_on_complete():
    p = compute_profile(complete(3, 3))
    assert not classify_equal_r(p, 2)
    assert not classify_equal_r(p, 3)


def test_classify_equal_r_rejects_r_one():
    with pytest.raises(ValueError):
        classify_equal_r(compute_profile(complete(2, 2)), 1)


def test_classify_nested_pair_is_not_equal_two():
    # neighborhoods {1}, {1,2}, {1,3}: induced 2 but ordered 3
    g = BipartiteGraph(3, 3, (0b101, 0b011, 0b001))
    assert induced_matching_number(g) == 2
    assert ordered_matching_number(g) == 3
    assert not classify_equal_r(compute_profile(g), 2)
    assert not classify_equal_two(g).equal


def test_classify_equal_two_grm24():
    res = classify_equal_two(build_grm(2, 4))
    assert res.equal and res.r == 2
    assert res.z == 2 and res.c_x == 1 and not res.disjoint_case


def test_classify_equal_two_disjoint_edges():
    g = BipartiteGraph(2, 2, (0b01, 0b10))
    res = classify_equal_two(g)
    assert res.equal and res.z == 2 and res.c_x == 0 and res.disjoint_case
    assert not is_connected(g)


def test_classify_equal_two_complete():
    assert not classify_equal_two(complete(3, 3)).equal


def test_is_ind_ord_one():
    assert is_ind_ord_one(complete(4, 7))
    near = from_edge_list(2, 2, [(0, 0), (0, 1), (1, 0)])  # K22 minus an edge
    assert not is_ind_ord_one(near)
    assert ordered_matching_number(near) == 2
    assert not is_ind_ord_one(build_grm(2, 4))


def test_jsets_sorted_by_size():
    res = classify_equal_two(build_grm(3, 5))
    sizes = [mask.bit_count() for mask in res.jsets]
    assert sizes == sorted(sizes)


# -------------------------------------------- exhaustive small equivalence

def test_profile_equivalences_small_exhaustive():
    # full sweep of m, n <= 3; the acceptance suite extends this to 4
    for m in range(1, 4):
        for n in range(1, 4):
            for g in iter_isolated_free(m, n):
                p = compute_profile(g)
                ind = induced_matching_number(g)
                order = ordered_matching_number(g)
                assert ind_match_from_profile(p) == ind
                assert ord_match_from_profile(p) == order
                assert classify_equal_r(p, 2) == (ind == order == 2)
                assert classify_equal_two(g).equal == (ind == order == 2)
                assert is_ind_ord_one(g) == all(mask == p.x_full for mask in g.adj)


def test_classification_routes_agree_on_random_graphs():
    # classify_equal_two asserts internally that the profile conditions and
    # the complement decomposition give the same verdict
    rng = random.Random(803)
    done = 0
    while done < 10_000:
        g = random_bipartite(rng, max_m=6, max_n=6)
        try:
            res = classify_equal_two(g)
        except ValueError:
            continue  # isolated vertices
        if res.disjoint_case and res.equal:
            total_positive = res.z + (1 if res.c_x else 0)
            assert total_positive in (2, 3)
            assert (total_positive == 3) == is_connected(g)
            assert (res.c_x > 0) == is_connected(g)
        done += 1


def test_family_size_limit():
    masks = {}
    m = 5
    value = 1
    # 21 distinct nonempty masks force the family over the search limit
    for mask in range(1, 1 << m):
        masks[mask] = 1
        if len(masks) == 21:
            break
    big = NeighborhoodProfile(m, masks)
    with pytest.raises(LimitError):
        ind_match_from_profile(big)
    with pytest.raises(LimitError):
        classify_equal_r(big, 2)
