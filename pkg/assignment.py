"""
Exact combinatorial solvers used by the determinant

- Hungarian algorithm (potentials + shortest augmenting paths) on
  integer costs, able to forbid one cell and re-solve from the previous
  optimum with a single augmentation
- Hopcroft-Karp maximum cardinality matching (networkx) on the finite support
- König vertex cover / Hall violator extraction from a maximum matching
"""

import logging
import math
from typing import List, Optional, Sequence, Set, Tuple

import networkx as nx

logger = logging.getLogger(__name__)

INF = math.inf


class _Hungarian:
    """
    Square min-cost assignment on an n x n integer cost matrix

    State (potentials u, v and column owners p) is 1-based with a
    virtual column 0, so rows can be (re-)inserted one at a time.
    """

    def __init__(self, costs: List[List[int]]):
        n = len(costs)
        self.n = n
        self.costs = costs
        self.u = [0] * (n + 1)
        self.v = [0] * (n + 1)
        # p[j]: row (1..n) currently assigned to column j, 0 when free
        self.p = [0] * (n + 1)

    def copy(self) -> '_Hungarian':
        clone = _Hungarian([row[:] for row in self.costs])
        clone.u = self.u[:]
        clone.v = self.v[:]
        clone.p = self.p[:]
        return clone

    def solve(self) -> List[int]:
        for i in range(1, self.n + 1):
            self._augment(i)
        return self.assignment()

    def assignment(self) -> List[int]:
        """0-based: a[row] = column"""
        a = [-1] * self.n
        for j in range(1, self.n + 1):
            if self.p[j] > 0:
                a[self.p[j] - 1] = j - 1
        return a

    def _augment(self, i: int) -> None:
        n = self.n
        costs, u, v, p = self.costs, self.u, self.v, self.p
        way = [0] * (n + 1)
        minv = [INF] * (n + 1)
        used = [False] * (n + 1)

        p[0] = i
        j0 = 0
        while True:
            used[j0] = True
            i0 = p[j0]
            row = costs[i0 - 1]
            u_i0 = u[i0]
            delta = INF
            j1 = 0

            for j in range(1, n + 1):
                if not used[j]:
                    cur = row[j - 1] - u_i0 - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j

            if j1 == 0:
                raise AssertionError("Hungarian stuck: no free column reachable")

            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta

            j0 = j1
            if p[j0] == 0:
                break

        # flip the augmenting path
        while True:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
            if j0 == 0:
                break

    def forbid_and_resolve(self, row: int, col: int, forbidden_cost: int) -> List[int]:
        """Raise cell (row, col) (0-based) to `forbidden_cost` and repair the optimum"""
        self.costs[row][col] = forbidden_cost
        if self.p[col + 1] == row + 1:
            self.p[col + 1] = 0
            self._augment(row + 1)
        return self.assignment()


class MaxAssignment:
    """
    Maximum-weight perfect assignment on a square matrix of integer
    weights, where None marks a forbidden cell

    Forbidden cells get a cost large enough that an optimum uses one only
    when no perfect assignment avoids them; such a result is reported as
    infeasible.
    """

    def __init__(self, weights: Sequence[Sequence[Optional[int]]]):
        self.n = len(weights)
        self.weights = [list(row) for row in weights]
        finite = [-w for row in self.weights for w in row if w is not None]
        self._solver = None
        self._optimum = None
        if not finite:
            self.forbidden_cost = None
            return
        lo, hi = min(finite), max(finite)
        self.forbidden_cost = self.n * (hi - lo) + hi + 1
        costs = [
            [self.forbidden_cost if w is None else -w for w in row]
            for row in self.weights
        ]
        self._solver = _Hungarian(costs)

    def _result(self, assignment: List[int],
                banned: Tuple[int, int] = None) -> Optional[Tuple[int, List[int]]]:
        total = 0
        for r, c in enumerate(assignment):
            w = self.weights[r][c]
            if w is None or (r, c) == banned:
                return None
            total += w
        return total, assignment

    def solve(self) -> Optional[Tuple[int, List[int]]]:
        """
        Solve once

        Returns:
            (optimal weight, 0-based assignment) or None when every
            perfect assignment hits a forbidden cell
        """
        if self._solver is None:
            return None
        self._optimum = self._result(self._solver.solve())
        return self._optimum

    def solve_without(self, row: int, col: int) -> Optional[Tuple[int, List[int]]]:
        """
        Best assignment avoiding cell (row, col), 0-based

        Re-solves incrementally from the stored optimum.
        """
        if self._solver is None:
            return None
        if self._optimum is None:
            self.solve()
        solver = self._solver.copy()
        assignment = solver.forbid_and_resolve(row, col, self.forbidden_cost)
        return self._result(assignment, banned=(row, col))


def support_graph(adjacency: Sequence[Sequence[int]], n_right: int) -> nx.Graph:
    """
    Bipartite graph with left vertices ('row', i) and right vertices
    ('col', j); isolated vertices are kept
    """
    graph = nx.Graph()
    graph.add_nodes_from((('row', i) for i in range(len(adjacency))), bipartite=0)
    graph.add_nodes_from((('col', j) for j in range(n_right)), bipartite=1)
    graph.add_edges_from(
        (('row', i), ('col', j)) for i, neighbours in enumerate(adjacency) for j in neighbours
    )
    return graph


def hall_violator(adjacency: Sequence[Sequence[int]], n_right: int) -> Optional[Tuple[Set[int], Set[int]]]:
    """
    König construction on a Hopcroft-Karp maximum matching

    The left vertices outside the minimum vertex cover are exactly those
    reachable by alternating paths from unmatched left vertices, and their
    neighbourhood is the right half of the cover.

    Returns:
        (S, N(S)) with |N(S)| < |S|, or None when the matching saturates
        the left side
    """
    graph = support_graph(adjacency, n_right)
    left = {('row', i) for i in range(len(adjacency))}
    matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=left)
    if all(vertex in matching for vertex in left):
        return None

    cover = nx.bipartite.to_vertex_cover(graph, matching, top_nodes=left)
    rows = {i for kind, i in left - cover}
    cols = {j for kind, j in cover if kind == 'col'}
    logger.debug("Hall violator: %d rows, %d neighbours", len(rows), len(cols))
    return rows, cols
