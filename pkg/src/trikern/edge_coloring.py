"""Greedy improper edge colouring with a per-vertex load cap."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from trikern import _kernels
from trikern.graph import Graph, max_degree


@dataclass(frozen=True, eq=False)
class EdgeColoring:
    colors: np.ndarray  # 1-based colour per edge index
    b: int
    f: int
    cap: int

    def classes(self) -> list[np.ndarray]:
        """Edge ids of each colour class, colour 1 first."""
        order = np.argsort(self.colors, kind="stable")
        bounds = np.cumsum(np.bincount(self.colors, minlength=self.f + 1))[1:-1]
        return np.split(order, bounds)

    def max_load(self, g: Graph) -> int:
        """Largest number of same-coloured edges at one vertex."""
        if g.m == 0:
            return 0
        ends = np.concatenate([g.edges[:, 0], g.edges[:, 1]])
        cols = np.concatenate([self.colors, self.colors])
        return int(np.bincount(ends * (self.f + 1) + cols).max())


def greedy_edge_color(g: Graph, b: int) -> EdgeColoring:
    """Colour edges in index order, each with the smallest colour that keeps both
    endpoints at no more than ``ceil(max_degree / b)`` edges of that colour.

    Uses at most ``2b - 1`` colours.
    """
    if b < 1:
        raise ValueError("b must be at least 1")
    delta = max_degree(g)
    cap = max(1, -(-delta // b))
    if g.m == 0:
        return EdgeColoring(np.zeros(0, dtype=np.int64), b, 0, cap)
    colors = _kernels.greedy_color(g.n, np.ascontiguousarray(g.edges[:, 0]),
                                   np.ascontiguousarray(g.edges[:, 1]), b, cap)
    colors.setflags(write=False)
    return EdgeColoring(colors, b, int(colors.max()), cap)
