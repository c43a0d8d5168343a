"""Polynomial-time DFS tree-support recognition against frozen fixtures."""

import pytest

from searchorder import (
    DISCONNECTED_ATTACHMENT,
    EMPTY_Q,
    FINAL_VERIFY_FAILED,
    Paradigm,
    Profile,
    RESTRICTION_FAILS,
    TSTAR_NOT_SUPPORT_FULL,
    assign_parents,
    brute_force_tree_support,
    build_attachment_digraph,
    forced_subtree,
    guider,
    is_s_ordering,
    purify,
    q_path,
    recognize_dfs_tree,
    sigma_over,
)

from conftest import random_profiles

YES_PATH = Profile.build("abcde", [("a", "b", "c", "d", "e"), ("c", "b", "a", "d", "e")])
SHRINK = Profile.build("abcde", [("a", "b", "c", "d", "e"), ("a", "c", "e", "b", "d")])
EMPTY_BY_INTERSECTION = Profile.build(
    "abcde", [("a", "b", "c", "d", "e"), ("c", "e", "a", "d", "b")]
)
EMPTY_BY_PURIFICATION = Profile.build(
    "abcdef", [tuple("abcdef"), tuple("cdfaeb")]
)
DISCONNECTED = Profile.build(
    "abcd", [("a", "b", "c", "d"), ("a", "b", "d", "c"), ("c", "d", "a", "b")]
)
FULL_TSTAR_FAILS = Profile.build(
    "abcd", [("a", "b", "c", "d"), ("a", "c", "b", "d"), ("b", "d", "a", "c")]
)
RESTRICTION_BAD = Profile.build(
    "abcde", [("a", "b", "c", "d", "e"), ("a", "c", "b", "d", "e"), ("b", "d", "a", "c", "e")]
)
# here the forced vertices induce a forest, which already rules out a support
FOREST_TSTAR = Profile.build(
    "abcd", [("a", "b", "c", "d"), ("a", "c", "b", "d"), ("b", "c", "a", "d")]
)

FIXTURES = [
    (YES_PATH, True, None),
    (SHRINK, True, None),
    (EMPTY_BY_INTERSECTION, False, EMPTY_Q),
    (EMPTY_BY_PURIFICATION, False, EMPTY_Q),
    (DISCONNECTED, False, DISCONNECTED_ATTACHMENT),
    (FULL_TSTAR_FAILS, False, TSTAR_NOT_SUPPORT_FULL),
    (RESTRICTION_BAD, False, RESTRICTION_FAILS),
    (FOREST_TSTAR, False, RESTRICTION_FAILS),
]


@pytest.mark.parametrize("profile,is_yes,reason", FIXTURES)
def test_fixture_outcomes(profile, is_yes, reason):
    out = recognize_dfs_tree(profile)
    assert out.is_yes == is_yes
    assert out.reason == reason
    if is_yes:
        for sigma in profile:
            assert is_s_ordering(out.tree, sigma_over(out.tree, sigma), Paradigm.DFS)
    else:
        assert out.tree is None


@pytest.mark.parametrize("profile,is_yes,reason", FIXTURES)
def test_fixtures_agree_with_the_oracle(profile, is_yes, reason):
    assert brute_force_tree_support(profile, Paradigm.DFS).is_yes == is_yes


def test_shrink_fixture_internals():
    dg = build_attachment_digraph(SHRINK)
    assert sorted(dg.forced_names()) == ["a", "b", "c"]
    assert sorted(dg.free_names()) == ["d", "e"]
    tstar = forced_subtree(SHRINK, dg)
    assert sorted(tstar.edge_names()) == [("a", "b"), ("a", "c")]

    first, second = SHRINK.orderings
    forced = dg.forced_names()
    assert guider(first, "d", forced) == "c"
    assert guider(first, "e", forced) == "c"
    assert guider(second, "d", forced) == "b"
    assert guider(second, "e", forced) == "c"

    qmap = {
        v: frozenset.intersection(*(q_path(sigma, v, tstar) for sigma in SHRINK))
        for v in dg.free_names()
    }
    assert qmap == {"d": frozenset({"a"}), "e": frozenset({"a", "c"})}
    # d and e share the guider c in the first ordering, which pares e down
    cleaned = purify(qmap, SHRINK, tstar)
    assert cleaned == {"d": frozenset({"a"}), "e": frozenset({"a"})}

    witness = assign_parents(tstar, cleaned, SHRINK.universe)
    assert sorted(witness.edge_names()) == [
        ("a", "b"),
        ("a", "c"),
        ("a", "d"),
        ("a", "e"),
    ]
    assert sorted(recognize_dfs_tree(SHRINK).tree.edge_names()) == sorted(
        witness.edge_names()
    )


def test_purification_can_empty_a_candidate_set():
    dg = build_attachment_digraph(EMPTY_BY_PURIFICATION)
    tstar = forced_subtree(EMPTY_BY_PURIFICATION, dg)
    assert sorted(tstar.edge_names()) == [("a", "b"), ("a", "c"), ("c", "d")]
    qmap = {
        v: frozenset.intersection(
            *(q_path(sigma, v, tstar) for sigma in EMPTY_BY_PURIFICATION)
        )
        for v in dg.free_names()
    }
    # non-empty before the sweep, empty after: the recognizer must reach
    # the purification stage to reject this one
    assert qmap == {"e": frozenset({"a"}), "f": frozenset({"c", "d"})}
    cleaned = purify(qmap, EMPTY_BY_PURIFICATION, tstar)
    assert cleaned == {"e": frozenset(), "f": frozenset()}


def test_forest_fixture_really_has_a_forest_of_forced_vertices():
    dg = build_attachment_digraph(FOREST_TSTAR)
    induced = dg.underlying_graph().induced(dg.forced_names())
    assert induced.m < induced.n - 1  # forest with several components


def test_sigma_over_rekeys_onto_equal_names():
    out = recognize_dfs_tree(SHRINK)
    sigma = SHRINK.orderings[0]
    moved = sigma_over(out.tree, sigma)
    assert moved.names == sigma.names
    assert moved.universe == out.tree.universe
    other = Profile.build("xyz", [("x", "y", "z")]).orderings[0]
    with pytest.raises(KeyError):
        sigma_over(out.tree, other)


def test_recognizer_against_oracle_seeded():
    final_verify_hits = 0
    for profile in random_profiles(2718, 300):
        out = recognize_dfs_tree(profile)
        assert out.is_yes == brute_force_tree_support(profile, Paradigm.DFS).is_yes
        final_verify_hits += out.reason == FINAL_VERIFY_FAILED
        if out.is_yes:
            for sigma in profile:
                assert is_s_ordering(out.tree, sigma_over(out.tree, sigma), Paradigm.DFS)
    assert final_verify_hits == 0


def test_free_vertices_come_out_as_leaves():
    seen_free = 0
    for profile in random_profiles(2719, 200):
        dg = build_attachment_digraph(profile)
        out = recognize_dfs_tree(profile)
        if out.is_yes:
            for v in dg.free_names():
                seen_free += 1
                assert out.tree.degree(v) == 1
    assert seen_free > 0  # the corpus really exercises the attachment step
