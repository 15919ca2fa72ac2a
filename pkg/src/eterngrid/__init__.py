"""Eternal domination on strong grids (king graphs).

An engine for the alternating guard strategy: periodic dominating
families, tabulated and matching-based attack responses, finite-grid
border and composite strategies, a strategy-agnostic referee, an exact
small-graph oracle, and exact bound comparisons.
"""

from .grid import (
    Configuration,
    DomainError,
    GridDims,
    Rect,
    Vertex,
    chebyshev_distance,
    is_dominating,
    neighbors,
)
from .patterns import PatternPhase, PatternSpec, identify, spec_through, window
from .responder import (
    AttackResponse,
    GuardMove,
    InfeasibleResponseError,
    StrategyError,
    TransitionError,
    apply,
    respond_matching,
    respond_tabulated,
)

__version__ = "0.1.0"
