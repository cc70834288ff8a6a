"""Relaxed greedy approximation over symmetric dictionaries."""

from ._prga import (
    BoundReport,
    DivergedProductError,
    DomainError,
    IoError,
    ProductResult,
    RunTrace,
    SweepCell,
    TraceRow,
    atomic_norm,
    dual_atomic_norm,
    format_csv,
    gershgorin_floor,
    gram_matrix,
    greedy_select,
    make_coherent_pair,
    mutual_coherence,
    p_alpha,
    parse_grid,
    partial_product,
    render_svg,
    run_prga,
    run_rga,
    sparse_floor,
    sweep_alpha,
    sweep_mu,
    theorem_floor,
    witness_vector,
)

__all__ = [name for name in dir() if not name.startswith("_")]
