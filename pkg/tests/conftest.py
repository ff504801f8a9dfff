"""Shared test fixtures and independent brute-force reference solvers.

The reference solvers here deliberately share no code with the library:
they enumerate subsets (or half-integral assignments) directly with numpy
so library results can be checked against ground truth on small instances.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from crowncover import WeightedGraph, random_gnp_graph


_SUBSET_TABLES: dict[int, np.ndarray] = {}
_HALF_TABLES: dict[int, np.ndarray] = {}


def subset_table(n: int) -> np.ndarray:
    """Boolean table of all 2^n subsets, row k = bits of k. Cached per n."""
    if n not in _SUBSET_TABLES:
        masks = np.arange(1 << n, dtype=np.int64)
        _SUBSET_TABLES[n] = ((masks[:, None] >> np.arange(n)) & 1).astype(bool)
    return _SUBSET_TABLES[n]


def half_table(n: int) -> np.ndarray:
    """All 3^n assignments over {0, 1, 2} as an int16 array. Cached per n."""
    if n not in _HALF_TABLES:
        codes = np.arange(3**n, dtype=np.int64)
        powers = 3 ** np.arange(n, dtype=np.int64)
        _HALF_TABLES[n] = ((codes[:, None] // powers) % 3).astype(np.int16)
    return _HALF_TABLES[n]


def brute_min_vc_weight(g: WeightedGraph) -> int:
    """Minimum vertex cover weight by exhaustive 2^n enumeration."""
    if g.n == 0:
        return 0
    bits = subset_table(g.n)
    w = np.asarray(g.weights, dtype=np.int64)
    if g.edges:
        e = np.asarray(g.edges, dtype=np.int64)
        ok = (bits[:, e[:, 0]] | bits[:, e[:, 1]]).all(axis=1)
    else:
        ok = np.ones(len(bits), dtype=bool)
    return int((bits @ w)[ok].min())


def brute_max_is_weight(g: WeightedGraph) -> int:
    """Maximum independent set weight by exhaustive 2^n enumeration."""
    if g.n == 0:
        return 0
    bits = subset_table(g.n)
    w = np.asarray(g.weights, dtype=np.int64)
    if g.edges:
        e = np.asarray(g.edges, dtype=np.int64)
        ok = ~(bits[:, e[:, 0]] & bits[:, e[:, 1]]).any(axis=1)
    else:
        ok = np.ones(len(bits), dtype=bool)
    return int((bits @ w)[ok].max())


def brute_half_lp(g: WeightedGraph) -> Fraction:
    """Minimum LP objective over all 3^n half-integral assignments.

    Assignment values are doubled to {0, 1, 2} so everything stays integer.
    """
    if g.n == 0:
        return Fraction(0)
    vals = half_table(g.n)
    if g.edges:
        e = np.asarray(g.edges, dtype=np.int64)
        ok = (vals[:, e[:, 0]] + vals[:, e[:, 1]] >= 2).all(axis=1)
    else:
        ok = np.ones(len(vals), dtype=bool)
    w = np.asarray(g.weights, dtype=np.int64)
    doubled = (vals[ok] @ w).min()
    return Fraction(int(doubled), 2)


def has_improving_swap(g: WeightedGraph, members, t: int) -> bool:
    """Exhaustively test for a <=t-swap improving a unit-weight IS.

    A swap inserts an independent outside set X and evicts the members
    adjacent to X; it improves iff |X| exceeds the evicted count.
    """
    current = set(members)
    outside = [v for v in range(g.n) if v not in current]
    for k in range(1, t + 1):
        for xs in combinations(outside, k):
            if any(b in g.adjacency[a] for a, b in combinations(xs, 2)):
                continue
            conflicts = set()
            for x in xs:
                conflicts |= g.adjacency[x] & current
            if len(xs) > len(conflicts):
                return True
    return False


def graph_family(count: int, n_max: int, w_hi: int, seed0: int = 0, n_min: int = 0):
    """Deterministic stream of random graphs with varied size and density."""
    rng = random.Random(seed0)
    out = []
    for _ in range(count):
        n = rng.randint(n_min, n_max)
        p = rng.uniform(0.05, 0.95)
        g = random_gnp_graph(n, p, weight_range=(1, w_hi), seed=rng.randrange(2**30))
        out.append(g)
    return out


@pytest.fixture(scope="session")
def small_graphs():
    """A reusable pool of small weighted graphs for cross-module checks."""
    return graph_family(120, 10, 5, seed0=42)
