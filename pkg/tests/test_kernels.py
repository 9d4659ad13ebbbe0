import random

import pytest
from hypothesis import given, strategies as st

from pervmirror import _kernels

pytestmark = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


@given(st.integers(2, 4).flatmap(
    lambda d: st.lists(st.tuples(*[st.integers(-4, 4)] * d), min_size=d + 1, max_size=12, unique=True)))
def test_numba_and_numpy_hyperplanes_agree(points):
    a = _kernels.supporting_hyperplanes(points, use_numba=True)
    b = _kernels.supporting_hyperplanes(points, use_numba=False)
    assert a == b


def test_hyperplanes_support_every_point():
    rnd = random.Random(7)
    pts = [tuple(rnd.randint(-5, 5) for _ in range(4)) for _ in range(15)]
    for normal, level in _kernels.supporting_hyperplanes(pts):
        slack = [sum(n * x for n, x in zip(normal, p)) - level for p in pts]
        assert min(slack) == 0


def test_large_coordinates_use_exact_path():
    s = 10 ** 15
    tri = [(s, 0), (0, s), (-s, -s)]
    planes = _kernels.supporting_hyperplanes(tri, use_numba=True)
    assert ((-1, -1), -s) in planes
    assert len(planes) == 3


@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(-9, 9), st.integers(-9, 9)), min_size=1, max_size=8),
       st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=5))
def test_slacks_agree(points, normals):
    levels = [-1] * len(normals)
    a = _kernels.facet_slacks(points, normals, levels, use_numba=True)
    b = _kernels.facet_slacks(points, normals, levels, use_numba=False)
    expected = [[sum(n * x for n, x in zip(nr, p)) + 1 for nr in normals] for p in points]
    assert a == b == expected
