"""Deterministic edge connectivity of simple graphs via expander decomposition."""

from .decomp import CertStatus, DecompositionReport, Partition, expander_decompose
from .graph import LoopedGraph, MultiGraph, SimpleGraph, VertexSet, build_simple_graph
from .io import parse_graph, serialize_graph
from .oracle import OracleChoice, bounded_edge_connectivity
from .pipeline import CutResult, PipelineReport, contract, edge_connectivity, verify_cut
from .trimshave import shave, trim

__all__ = [
    "CertStatus", "CutResult", "DecompositionReport", "LoopedGraph", "MultiGraph",
    "OracleChoice", "Partition", "PipelineReport", "SimpleGraph", "VertexSet",
    "bounded_edge_connectivity", "build_simple_graph", "contract", "edge_connectivity",
    "expander_decompose", "parse_graph", "serialize_graph", "shave", "trim", "verify_cut",
]
