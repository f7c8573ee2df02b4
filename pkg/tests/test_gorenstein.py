import random

import pytest

from conftest import (
    COLLINEAR_PLUS_ONE,
    COORDINATE_POINTS,
    FOUR_POINTS,
    GORENSTEIN_CASES,
    CASE_IDS,
    config,
)
from invsys.gorenstein import cayley_bacharach, gorenstein_report, is_symmetric
from invsys.points import PointConfiguration


@pytest.mark.parametrize("h,expected", [((1, 2, 1), True), ((1, 2), False), ((1,), True),
                                        ((1, 3, 3, 1), True), ((1, 2, 2), False)])
def test_is_symmetric(h, expected):
    assert is_symmetric(h) is expected


def test_is_symmetric_rejects_trailing_zero():
    with pytest.raises(ValueError):
        is_symmetric((1, 0))


def test_cayley_bacharach_examples():
    assert cayley_bacharach(config(FOUR_POINTS)) == (True, None)
    assert cayley_bacharach(config(COLLINEAR_PLUS_ONE)) == (False, 3)
    assert cayley_bacharach(config([[1, 0], [0, 1]])) == (True, None)


def test_reports():
    rep = gorenstein_report(config(FOUR_POINTS))
    assert rep.arithmetically_gorenstein
    rep = gorenstein_report(config(COORDINATE_POINTS))
    assert not rep.arithmetically_gorenstein and not rep.symmetric
    assert rep.hilbert.h_vector == (1, 2)
    assert rep.reason == "h-vector not symmetric"
    rep = gorenstein_report(config(COLLINEAR_PLUS_ONE))
    assert rep.symmetric and not rep.cayley_bacharach and rep.failing_subset == 3
    assert rep.hilbert.h_vector == (1, 2, 1)


@pytest.mark.parametrize("label,points,ell", GORENSTEIN_CASES, ids=CASE_IDS)
def test_complete_intersections_are_gorenstein(label, points, ell):
    assert gorenstein_report(config(points)).arithmetically_gorenstein


@pytest.mark.parametrize("seed", range(5))
def test_report_invariant_under_permutation(seed):
    rng = random.Random(seed)
    for pts in (FOUR_POINTS, COLLINEAR_PLUS_ONE, COORDINATE_POINTS):
        Z = config(pts)
        perm = list(range(Z.m))
        rng.shuffle(perm)
        W = PointConfiguration(Z.n, tuple(Z.points[i] for i in perm))
        a, b = gorenstein_report(Z), gorenstein_report(W)
        assert (a.symmetric, a.cayley_bacharach, a.hilbert) == (b.symmetric, b.cayley_bacharach, b.hilbert)
        if a.failing_subset is not None:
            # the witness is the unique off-line point in both orders
            assert Z.points[a.failing_subset] == W.points[b.failing_subset]
