"""Topological stabilizer codes from graph embeddings on surfaces."""

__version__ = "0.1.0"

from ._backend import BACKEND
from .code import StabilizerCode, distance, from_embedding
from .families import complete_selfdual, kitaev_toric, optimal_toric, planar_holed
from .surface import CellEmbedding, EmbeddedGraph, connected_sum, dual_embedding, trace_faces

__all__ = [
    "BACKEND",
    "CellEmbedding",
    "EmbeddedGraph",
    "StabilizerCode",
    "complete_selfdual",
    "connected_sum",
    "distance",
    "dual_embedding",
    "from_embedding",
    "kitaev_toric",
    "optimal_toric",
    "planar_holed",
    "trace_faces",
]
