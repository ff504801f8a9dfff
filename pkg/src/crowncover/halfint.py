"""Optimal half-integral solutions to the vertex cover LP.

The LP (minimize sum of w(v) x_v subject to x_u + x_v >= 1 per edge, x >= 0)
always has an optimum with every value in {0, 1/2, 1}. We never solve the LP
generically: the doubled flow network's canonical minimum cut yields such an
optimum directly. Values are stored doubled (0/1/2) so all arithmetic is on
integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InconsistentCut, InvalidParameter
from .flow import build_bipartite_double, max_flow, min_cut_cover
from .graph import WeightedGraph


@dataclass(frozen=True)
class HalfIntegralSolution:
    """Per-vertex LP values in {0, 1/2, 1}, stored as doubled integers."""

    twice_values: tuple[int, ...]
    twice_objective: int

    def value(self, v: int) -> Fraction:
        return Fraction(self.twice_values[v], 2)

    @property
    def objective(self) -> Fraction:
        return Fraction(self.twice_objective, 2)


def half_integral_solution(g: WeightedGraph) -> HalfIntegralSolution:
    """Compute an optimal half-integral LP solution for `g` via max-flow.

    Each vertex value is half the number of its copies in the canonical
    bipartite min-cut cover, so the objective is exactly half the flow value.
    Deterministic: identical graphs give identical solutions.
    """
    net = build_bipartite_double(g)
    flow_value, reach = max_flow(net)
    side1, side2 = min_cut_cover(net, reach)
    twice = tuple((v in side1) + (v in side2) for v in range(g.n))
    twice_objective = sum(w * t for w, t in zip(g.weights, twice))
    if twice_objective != flow_value:
        raise InconsistentCut(
            f"cut weight {twice_objective} disagrees with flow value {flow_value}"
        )
    for u, v in g.edges:
        if twice[u] + twice[v] < 2:
            raise InconsistentCut(f"edge ({u}, {v}) uncovered by the extracted solution")
    return HalfIntegralSolution(twice_values=twice, twice_objective=twice_objective)


def lp_value(sol: HalfIntegralSolution, g: WeightedGraph) -> Fraction:
    """Exact objective of `sol` on `g`: sum of w(v) times the vertex value."""
    if len(sol.twice_values) != g.n:
        raise InvalidParameter(
            f"solution has {len(sol.twice_values)} values, graph has {g.n} vertices"
        )
    return Fraction(sum(w * t for w, t in zip(g.weights, sol.twice_values)), 2)
