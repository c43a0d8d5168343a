"""Brute-force ground truth: labeled-tree enumeration and support search."""

import itertools

import pytest

from searchorder import (
    CapError,
    DegBounded,
    EdgeBounded,
    Graph,
    Paradigm,
    Profile,
    TreeSupport,
    all_tree_supports,
    brute_force_graph_support,
    brute_force_tree_support,
    enumerate_labeled_trees,
    is_s_ordering,
    min_vertex_cover,
)

from conftest import k4, random_profiles

SINGLE = Profile.build("abc", [("a", "b", "c")])
PAIR = Profile.build("abc", [("a", "b", "c"), ("a", "c", "b")])
MIRROR = Profile.build("abc", [("a", "b", "c"), ("c", "b", "a")])
ROTATION = Profile.build("abc", [("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")])


def test_cayley_counts():
    for n, want in [(1, 1), (2, 1), (3, 3), (4, 16), (5, 125)]:
        trees = list(enumerate_labeled_trees("abcdefgh"[:n]))
        assert len(trees) == want
        assert len({frozenset(t.edge_names()) for t in trees}) == want
        for t in trees:
            assert t.n == n and t.m == n - 1 and t.is_connected()


def test_mirror_profile_has_the_path_as_tree_support():
    result = brute_force_tree_support(MIRROR, Paradigm.DFS)
    assert result.is_yes
    assert sorted(result.witness.edge_names()) == [("a", "b"), ("b", "c")]


@pytest.mark.parametrize(
    "paradigm", [Paradigm.GS, Paradigm.BFS, Paradigm.DFS, Paradigm.MNS]
)
def test_rotation_profile_has_no_tree_support(paradigm):
    assert not brute_force_tree_support(ROTATION, paradigm).is_yes


def test_all_tree_supports_for_one_ordering():
    found = {frozenset(t.edge_names()) for t in all_tree_supports(SINGLE, Paradigm.DFS)}
    assert found == {
        frozenset({("a", "b"), ("a", "c")}),
        frozenset({("a", "b"), ("b", "c")}),
    }


# -------------------------------------------------------- bounded problems


def test_single_ordering_walks_its_own_path():
    result = brute_force_graph_support(SINGLE, Paradigm.DFS, EdgeBounded(2))
    assert result.is_yes and result.witness.m == 2
    for sigma in SINGLE:
        assert is_s_ordering(result.witness, sigma, Paradigm.DFS)


def test_pair_needs_the_star():
    result = brute_force_graph_support(PAIR, Paradigm.GS, EdgeBounded(2))
    assert result.is_yes
    assert sorted(result.witness.edge_names()) == [("a", "b"), ("a", "c")]
    # one edge cannot reach all three vertices, whatever the paradigm
    assert not brute_force_graph_support(PAIR, Paradigm.GS, EdgeBounded(1)).is_yes


def test_degree_bound_variant():
    assert not brute_force_graph_support(PAIR, Paradigm.BFS, DegBounded(1)).is_yes
    result = brute_force_graph_support(PAIR, Paradigm.BFS, DegBounded(2))
    assert result.is_yes and result.witness.max_degree() <= 2


def test_clique_bound_is_always_enough():
    rows = list(itertools.permutations("abcde"))[:7]
    profile = Profile.build("abcde", rows)
    result = brute_force_graph_support(profile, Paradigm.LEXBFS, EdgeBounded(10))
    assert result.is_yes


def test_tree_support_kind_dispatches():
    assert brute_force_graph_support(MIRROR, Paradigm.DFS, TreeSupport()).is_yes


def test_edge_bound_monotonicity_seeded():
    for profile in random_profiles(97, 25, sizes=(4, 5), rows=(1, 2)):
        hits = [
            brute_force_graph_support(profile, Paradigm.DFS, EdgeBounded(k)).is_yes
            for k in range(profile.universe.n + 2)
        ]
        # once feasible, feasible forever
        assert hits == sorted(hits)


def test_witnesses_reverify_seeded():
    for profile in random_profiles(98, 40, sizes=(4, 5), rows=(1, 2)):
        for paradigm in (Paradigm.BFS, Paradigm.MCS):
            result = brute_force_graph_support(profile, paradigm, EdgeBounded(6))
            if result.is_yes:
                assert result.witness.is_connected()
                for sigma in profile:
                    assert is_s_ordering(result.witness, sigma, paradigm)


def test_lexdfs_tree_support_implies_dfs_and_mns():
    from searchorder import enumerate_orderings

    hits = 0
    for tree in itertools.islice(enumerate_labeled_trees("abcde"), 0, 125, 7):
        rows = [o.names for o in enumerate_orderings(tree, Paradigm.LEXDFS)[:3]]
        profile = Profile.build(tree.universe.names, rows)
        if brute_force_tree_support(profile, Paradigm.LEXDFS).is_yes:
            hits += 1
            assert brute_force_tree_support(profile, Paradigm.DFS).is_yes
            assert brute_force_tree_support(profile, Paradigm.MNS).is_yes
    assert hits > 0


# ----------------------------------------------------------- vertex cover


def test_min_vertex_cover_pins():
    assert min_vertex_cover(k4()) == ("a", "b", "c")
    assert min_vertex_cover(Graph.build("ab", [("a", "b")])) == ("a",)
    assert min_vertex_cover(Graph.build("abc", [("a", "b"), ("b", "c")])) == ("b",)
    assert min_vertex_cover(Graph.build("ab", [])) == ()
    c5 = Graph.build("abcde", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "a")])
    assert len(min_vertex_cover(c5)) == 3


def test_caps_and_bad_bounds():
    names = "abcdefghij"
    with pytest.raises(CapError):
        brute_force_tree_support(Profile.build(names[:9], [tuple(names[:9])]), Paradigm.DFS)
    with pytest.raises(CapError):
        brute_force_graph_support(
            Profile.build(names[:6], [tuple(names[:6])]), Paradigm.DFS, EdgeBounded(3)
        )
    with pytest.raises(ValueError):
        brute_force_graph_support(SINGLE, Paradigm.DFS, EdgeBounded(-1))
    with pytest.raises(CapError):
        min_vertex_cover(Graph.build([f"v{i}" for i in range(21)], []))
