import itertools

import numpy as np
import pytest

from slrc.designs import (Design, affine_design, complete_graph_design,
                          load_design, validate_design)
from slrc.errors import DesignError, ParameterError
from slrc.field import FieldError
from slrc.reference import golden


def test_k4_design_matches_reference_matrix():
    d = complete_graph_design(3)
    assert (d.incidence == golden("design")).all()
    assert d.k == 6 and d.b == 4 and d.t_i == 2


def test_triangle_design():
    d = complete_graph_design(2)
    assert d.lines == ((0, 1), (0, 2), (1, 2))


def test_k5_design_validates():
    d = complete_graph_design(4)
    assert d.incidence.shape == (5, 10)
    ok, report = validate_design(d, t_i=2, r=4)
    assert ok, report


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_complete_graph_counts_and_girth(r):
    d = complete_graph_design(r)
    assert d.b * d.r == d.k * d.t_i
    for i, j in itertools.combinations(range(d.b), 2):
        assert len(set(d.lines[i]) & set(d.lines[j])) <= 1


def test_complete_graph_rejects_small_r():
    with pytest.raises(ParameterError):
        complete_graph_design(1)


def test_affine_2x2_grid():
    d = affine_design(2, 2)
    assert d.k == 4
    assert [sorted(p + 1 for p in line) for line in d.lines] == [
        [1, 2], [3, 4], [1, 3], [2, 4]]
    ok, report = validate_design(d)
    assert ok
    assert report["class_level"] == "strict"


def test_affine_r3_two_classes():
    d = affine_design(3, 2)
    assert d.b == 6 and d.k == 9
    ok, _ = validate_design(d)
    assert ok


def test_affine_r3_all_classes_pairwise_meet_once():
    d = affine_design(3, 4)
    assert d.b == 12
    for ci, cj in itertools.combinations(range(4), 2):
        for li in d.classes[ci]:
            for lj in d.classes[cj]:
                assert len(set(d.lines[li]) & set(d.lines[lj])) == 1


def test_affine_r4_validates():
    d = affine_design(4, 3)
    ok, report = validate_design(d)
    assert ok, report
    assert report["class_level"] == "strict"


def test_affine_every_point_pair_at_most_one_line():
    d = affine_design(3, 4)
    for p, q in itertools.combinations(range(d.k), 2):
        common = [line for line in d.lines if p in line and q in line]
        assert len(common) <= 1


def test_affine_rejects_bad_args():
    with pytest.raises(ParameterError):
        affine_design(3, 1)
    with pytest.raises(ParameterError):
        affine_design(3, 5)
    with pytest.raises(FieldError):
        affine_design(6, 2)


def test_validate_rejects_shared_pair():
    d = Design(k=6, r=3, t_i=2,
               lines=((0, 1, 2), (0, 1, 3), (2, 4, 5), (3, 4, 5)))
    ok, report = validate_design(d, t_i=2, r=3)
    assert not ok
    assert "share points [1, 2]" in report["violation"]


def test_validate_rejects_bad_row_weight():
    d = Design(k=4, r=3, t_i=2, lines=((0, 1), (0, 1, 3)))
    ok, report = validate_design(d, t_i=2, r=3)
    assert not ok
    assert "line 1" in report["violation"]


def test_validate_relaxed_class_level():
    # classes whose lines are disjoint but do not cover every point
    d = Design(k=6, r=2, t_i=1, lines=((0, 1), (2, 3), (4, 5)),
               classes=((0,), (1,), (2,)))
    ok, report = validate_design(d)
    assert ok
    assert report["class_level"] == "relaxed"


def test_load_reference_matrix():
    d = load_design(golden("design"))
    assert (d.k, d.b, d.r, d.t_i) == (6, 4, 3, 2)


def test_load_identity():
    d = load_design(np.eye(3, dtype=int))
    assert d.r == 1 and d.t_i == 1


def test_load_rejects_girth_violation():
    with pytest.raises(DesignError):
        load_design(np.ones((2, 4), dtype=int))


def test_load_rejects_nonuniform():
    m = np.array([[1, 1, 0], [1, 0, 0]])
    with pytest.raises(DesignError, match="row 2"):
        load_design(m)
    m = np.array([[1, 1, 0], [1, 1, 0]])
    with pytest.raises(DesignError, match="column 3"):
        load_design(m)


def test_design_dict_round_trip():
    d = affine_design(3, 3)
    again = Design.from_dict(d.to_dict())
    assert again == d
