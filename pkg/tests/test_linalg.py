from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyaut.linalg import DependenceFinder, mat_det, mat_inverse, mat_vec

Q = Fraction

entries = st.fractions(min_value=-6, max_value=6, max_denominator=4)


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)


def test_det_values():
    assert mat_det([[Q(2)]]) == 2
    assert mat_det([[1, 2], [3, 4]]) == -2
    assert mat_det([[0, 1], [1, 0]]) == -1
    assert mat_det([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0


def test_inverse_roundtrip():
    m = [[Q(2), Q(1)], [Q(5), Q(3)]]
    inv = mat_inverse(m)
    assert inv == [[Q(3), Q(-1)], [Q(-5), Q(2)]]
    with pytest.raises(ValueError):
        mat_inverse([[Q(1), Q(2)], [Q(2), Q(4)]])


def test_mat_vec():
    assert mat_vec([[1, 2], [3, 4]], [Q(1), Q(1)]) == [Q(3), Q(7)]


@given(square(3))
def test_inverse_is_two_sided_when_nonsingular(rows):
    rows = [[Q(e) for e in r] for r in rows]
    if mat_det(rows) == 0:
        return
    inv = mat_inverse(rows)
    ident = [[Q(int(i == j)) for j in range(3)] for i in range(3)]
    prod = [
        [sum(rows[i][k] * inv[k][j] for k in range(3)) for j in range(3)]
        for i in range(3)
    ]
    assert prod == ident


# ----------------------------------------------------------------------
# DependenceFinder: the combination it reports must actually vanish

def _check_combo(vectors, combo):
    keys = set().union(*(v.keys() for v in vectors if v)) if vectors else set()
    for k in keys:
        assert sum(c * vectors[i].get(k, Q(0)) for i, c in combo.items()) == 0


def test_finder_reports_first_dependence():
    f = DependenceFinder()
    vs = [{"a": Q(1)}, {"b": Q(1)}, {"a": Q(2), "b": Q(3)}]
    assert f.add(vs[0]) is None
    assert f.add(vs[1]) is None
    combo = f.add(vs[2])
    assert combo is not None and combo[2] == 1
    _check_combo(vs, combo)
    assert f.rank == 2
    assert f.vectors_seen == 3


def test_zero_vector_depends_on_nothing():
    f = DependenceFinder()
    combo = f.add({})
    assert combo == {0: Q(1)}


def test_finder_independent_run():
    f = DependenceFinder()
    for i in range(4):
        assert f.add({i: Q(1), i + 1: Q(1)}) is None
    assert f.rank == 4


@given(
    st.lists(
        st.dictionaries(st.integers(min_value=0, max_value=4), entries, max_size=5),
        min_size=1,
        max_size=8,
    )
)
def test_finder_combination_vanishes(vectors):
    vectors = [{k: Q(v) for k, v in vec.items() if v} for vec in vectors]
    f = DependenceFinder()
    for vec in vectors:
        combo = f.add(vec)
        if combo is not None:
            newest = f.vectors_seen - 1
            assert combo[newest] == 1
            _check_combo(vectors, combo)
            return
    # never more independent vectors than coordinates touched
    dim = len(set().union(*(v.keys() for v in vectors))) if any(vectors) else 0
    assert f.rank <= dim
