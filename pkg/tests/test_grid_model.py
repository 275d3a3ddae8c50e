import pytest
from hypothesis import given

from acmpts import canonicalize, coordinate, project, relabel
from acmpts.errors import (
    BadDirection,
    BadPermutation,
    DimensionMismatch,
    EmptyConfiguration,
)
from conftest import ELEVEN_POINTS, grid_configurations


def test_canonicalize_relabels_order_preserving():
    X = canonicalize([(2, 5), (7, 5)])
    assert X.n == 2
    assert X.dims == (2, 1)
    assert X.points == {(1, 1), (2, 1)}


def test_canonicalize_single_point():
    X = canonicalize([(1, 1, 1)])
    assert X.dims == (1, 1, 1)
    assert X.points == {(1, 1, 1)}


def test_canonicalize_eleven_point_example():
    X = canonicalize(ELEVEN_POINTS)
    assert X.dims == (3, 3, 3)
    assert X.size == 11


def test_canonicalize_merges_duplicates():
    X = canonicalize([(1, 1), (1, 1), (3, 1)])
    assert X.size == 2


def test_canonicalize_rejects_empty():
    with pytest.raises(EmptyConfiguration):
        canonicalize([])


def test_canonicalize_rejects_ragged():
    with pytest.raises(DimensionMismatch):
        canonicalize([(1, 2), (1, 2, 3)])


@given(grid_configurations())
def test_canonicalize_idempotent(X):
    assert canonicalize(X.sorted_points()) == X


def test_project_six_points(six_points):
    assert project(six_points, 1).points == {(1, 1), (1, 2), (2, 1), (2, 2)}


def test_project_to_single_direction():
    X = canonicalize([(1, 1)])
    Y = project(X, 2)
    assert Y.n == 1
    assert Y.points == {(1,)}


def test_project_eleven_points_dedupes(eleven_points):
    # every direction collapses the eleven points to six shadows
    for i in (1, 2, 3):
        assert project(eleven_points, i).size == 6


def test_project_bad_direction(six_points):
    with pytest.raises(BadDirection):
        project(six_points, 4)
    with pytest.raises(BadDirection):
        project(canonicalize([(1,)]), 1)


@given(grid_configurations())
def test_project_size_bound(X):
    if X.n < 2:
        return
    for i in range(1, X.n + 1):
        images = {p[: i - 1] + p[i:] for p in X.points}
        Y = project(X, i)
        assert Y.size == len(images) <= X.size
        # equality exactly when coordinate deletion is injective on X
        assert (Y.size == X.size) == (len(images) == X.size)


def test_coordinate():
    assert coordinate((1, 2, 3), 2) == 2
    assert coordinate((1, 2, 3), 3) == 3
    assert coordinate((5,), 1) == 5
    with pytest.raises(BadDirection):
        coordinate((1, 2), 3)


def test_relabel_identity(six_points):
    assert relabel(six_points) == six_points


def test_relabel_swap_directions():
    X = canonicalize([(1, 1), (1, 2)])
    Y = relabel(X, direction_perm=[2, 1])
    assert Y.points == {(1, 1), (2, 1)}  # (1,2) becomes (2,1)
    assert Y.dims == (2, 1)


def test_relabel_swap_levels():
    X = canonicalize([(1, 1), (2, 2)])
    Y = relabel(X, level_perms=[[2, 1], [1, 2]])
    assert Y.points == {(2, 1), (1, 2)}


def test_relabel_rejects_bad_permutations(six_points):
    with pytest.raises(BadPermutation):
        relabel(six_points, direction_perm=[1, 1, 2])
    with pytest.raises(BadPermutation):
        relabel(six_points, level_perms=[[1], [1, 2], [1, 2]])


@given(grid_configurations())
def test_relabel_preserves_size(X):
    reversed_dirs = list(range(X.n, 0, -1))
    reversed_levels = [list(range(r, 0, -1)) for r in X.dims]
    Y = relabel(X, reversed_dirs, reversed_levels)
    assert Y.size == X.size
    # applying the inverse relabeling twice returns the original
    assert relabel(Y, reversed_dirs, [list(range(r, 0, -1)) for r in Y.dims]) == X
