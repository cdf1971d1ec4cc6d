import pytest
from hypothesis import strategies as st

from topocode import _backend, _pykernels
from topocode.surface import Edge, EmbeddedGraph, trace_faces

KERNEL_MODULES = [_pykernels]
if _backend._ckernels is not None:
    KERNEL_MODULES.append(_backend._ckernels)


@pytest.fixture(params=KERNEL_MODULES, ids=lambda m: m.__name__.rsplit(".", 1)[-1])
def kernel_module(request):
    return request.param


@st.composite
def random_graphs(draw, max_vertices=5, max_extra=5, twists=True):
    """Connected signed rotation systems: spanning tree plus extra edges (loops allowed)."""
    V = draw(st.integers(1, max_vertices))
    edges = []
    for v in range(1, V):
        edges.append((draw(st.integers(0, v - 1)), v))
    for _ in range(draw(st.integers(0 if V > 1 else 1, max_extra))):
        edges.append((draw(st.integers(0, V - 1)), draw(st.integers(0, V - 1))))
    tw = [draw(st.integers(0, 1)) if twists else 0 for _ in edges]
    at = [[] for _ in range(V)]
    for i, (a, b) in enumerate(edges):
        at[a].append(2 * i)
        at[b].append(2 * i + 1)
    rots = [draw(st.permutations(darts)) for darts in at]
    return EmbeddedGraph(V, [Edge(a, b, t) for (a, b), t in zip(edges, tw)], rots)


@st.composite
def random_embeddings(draw, **kw):
    return trace_faces(draw(random_graphs(**kw)))
