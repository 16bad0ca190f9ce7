"""Parity between the compiled kernels and the pure-Python fallback."""

from array import array

import pytest
from hypothesis import given, strategies as st

from convexcycles import _kernels_py
from convexcycles import kernels

try:
    from convexcycles import _kernels as compiled
except ImportError:
    compiled = None

needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernels not built"
)


def edge_arrays(max_positions=16, max_edges=14):
    def build(raw):
        us = array("i")
        vs = array("i")
        for a, b in raw:
            if a == b:
                continue
            us.append(min(a, b))
            vs.append(max(a, b))
        return us, vs

    position = st.integers(0, max_positions - 1)
    return st.builds(
        build, st.lists(st.tuples(position, position), max_size=max_edges)
    )


def test_selector_exposes_an_implementation():
    assert kernels.IMPLEMENTATION in ("cython", "python")
    assert callable(kernels.count_crossings_arrays)


def test_pure_empty_and_single():
    assert _kernels_py.count_crossings_arrays(array("i"), array("i")) == 0
    assert _kernels_py.count_crossings_arrays(array("i", [0]), array("i", [3])) == 0
    assert _kernels_py.edge_crossings(0, 3, array("i"), array("i"), 0) == 0


@needs_compiled
@given(edge_arrays())
def test_count_parity(arrays):
    us, vs = arrays
    assert compiled.count_crossings_arrays(us, vs) == _kernels_py.count_crossings_arrays(
        us, vs
    )


@needs_compiled
@given(edge_arrays(), st.integers(0, 15), st.integers(0, 15))
def test_edge_crossings_parity(arrays, a, b):
    us, vs = arrays
    if a == b:
        return
    u, v = min(a, b), max(a, b)
    for count in (0, len(us)):
        assert compiled.edge_crossings(u, v, us, vs, count) == _kernels_py.edge_crossings(
            u, v, us, vs, count
        )


@needs_compiled
def test_known_values():
    us = array("i", [0, 0, 1, 1, 2, 3])
    vs = array("i", [2, 5, 3, 4, 5, 4])
    assert compiled.count_crossings_arrays(us, vs) == 4
    assert _kernels_py.count_crossings_arrays(us, vs) == 4
