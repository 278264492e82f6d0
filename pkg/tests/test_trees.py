import pytest

from bridgeburn.enumeration import unlabeled_trees
from bridgeburn.graph import all_distances_from, build_graph
from bridgeburn.solver import bridge_burning_cop_number
from bridgeburn.trees import NotATreeError, tree_cop_number


def test_p6_rooted_at_endpoint(fam):
    rep = tree_cop_number(fam("path", 6), root=0)
    assert rep.N == 2
    # deepest unguarded leaf is v6; its grandparent is v4, then the root itself
    assert rep.placements == (3, 0)


def test_p5_single_cop(fam):
    assert tree_cop_number(fam("path", 5)).N == 1


def test_spider333(fam):
    rep = tree_cop_number(fam("spider", 3, 3, 3), root=0)
    assert rep.N == 3
    assert rep.placements == (1, 4, 7)  # depth-1 vertex of each leg


def test_star_k15(fam):
    assert tree_cop_number(fam("complete_bipartite", 1, 5)).N == 1


def test_single_vertex_and_edge(fam):
    assert tree_cop_number(fam("path", 1)).N == 1
    assert tree_cop_number(fam("path", 2)).N == 1


def test_not_a_tree(fam):
    with pytest.raises(NotATreeError):
        tree_cop_number(fam("cycle", 4))
    with pytest.raises(NotATreeError):
        tree_cop_number(build_graph(4, [(0, 1), (2, 3)]))


def test_certificate_valid(fam):
    t = fam("spider", 4, 2, 1, 3)
    rep = tree_cop_number(t)
    leaves = [v for v in range(t.vertex_count) if t.degree(v) <= 1]
    assert sorted(rep.guarded_certificate) == leaves
    for leaf, guard in rep.guarded_certificate.items():
        assert all_distances_from(t, guard)[leaf] <= 2
        assert guard in rep.placements


def test_root_invariance_small_trees():
    for n in range(1, 8):
        for t in unlabeled_trees(n):
            values = {tree_cop_number(t, root=r).N for r in range(t.vertex_count)}
            assert len(values) == 1


def test_matches_exact_solver_up_to_7():
    for n in range(2, 8):
        for t in unlabeled_trees(n):
            assert tree_cop_number(t).N == bridge_burning_cop_number(t, 5).value
