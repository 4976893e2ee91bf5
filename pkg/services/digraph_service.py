"""
Digraph service - Weighted digraph of a square matrix

Demonstrates:
- Graph construction from the finite support (networkx MultiDiGraph)
- Degrees, sources and sinks straight from the graph
- Multicycles as the cycle factorisation of permutations
"""

import logging
from typing import List, Optional, Sequence, Tuple

import networkx as nx

from exceptions import ValidationError
from models import Multicycle, WeightedDigraph
from semiring import NEG_INF, ONE, TropScalar, format_scalar, ghost, tprod, tsum
from tensor import TropMatrix
from validators import MatrixValidator
from .base_service import BaseService

logger = logging.getLogger(__name__)

GHOST_ZERO = ghost(ONE)


class DigraphService(BaseService):
    """Service for the digraph view of a matrix"""

    @staticmethod
    def _empty_graph(n: int) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(1, n + 1))
        return graph

    @staticmethod
    def digraph_of(matrix: TropMatrix) -> WeightedDigraph:
        """
        Build G_A: an edge i -> j of weight a_{i,j} whenever a_{i,j} != -inf

        Raises:
            NonSquareError: If the matrix is not square
        """
        n = DigraphService.require_square(matrix, 'digraph')
        graph = DigraphService._empty_graph(n)
        graph.add_edges_from(
            (i, j, {'weight': x})
            for i, row in enumerate(matrix.rows, 1)
            for j, x in enumerate(row, 1)
            if not x.is_neg_inf
        )
        return WeightedDigraph(n, graph)

    @staticmethod
    def out_degree(graph: WeightedDigraph, vertex: int) -> int:
        MatrixValidator.validate_index(vertex, graph.n, 'vertex')
        return graph.graph.out_degree(vertex)

    @staticmethod
    def in_degree(graph: WeightedDigraph, vertex: int) -> int:
        MatrixValidator.validate_index(vertex, graph.n, 'vertex')
        return graph.graph.in_degree(vertex)

    @staticmethod
    def sources(graph: WeightedDigraph) -> List[int]:
        """Vertices without incoming edges"""
        return [v for v, degree in graph.graph.in_degree() if degree == 0]

    @staticmethod
    def sinks(graph: WeightedDigraph) -> List[int]:
        """Vertices without outgoing edges"""
        return [v for v, degree in graph.graph.out_degree() if degree == 0]

    @staticmethod
    def find_simple_cycle(graph: WeightedDigraph) -> Optional[Multicycle]:
        """
        Find some simple cycle (a loop counts as a cycle of length 1)

        Returns:
            A one-cycle Multicycle, or None for an acyclic graph
        """
        try:
            found = nx.find_cycle(graph.graph)
        except nx.NetworkXNoCycle:
            return None

        cycle = tuple(step[0] for step in found)
        weight = DigraphService._cycle_weight(graph, cycle)
        logger.debug("simple cycle %s of weight %s", cycle, format_scalar(weight))
        return Multicycle((cycle,), weight)

    @staticmethod
    def _cycle_weight(graph: WeightedDigraph, cycle: Sequence[int]) -> TropScalar:
        steps = zip(cycle, cycle[1:] + cycle[:1])
        return tprod(graph.edge(i, j).weight for i, j in steps)

    @staticmethod
    def reduced_zero_graph(graph: WeightedDigraph) -> WeightedDigraph:
        """
        Keep only the edges of weight 0 or 0^ν

        A 0^ν edge is added twice, so it counts twice in the degrees.
        """
        reduced = DigraphService._empty_graph(graph.n)
        for source, target, weight in graph.graph.edges(data='weight'):
            if weight == ONE:
                reduced.add_edge(source, target, weight=weight)
            elif weight == GHOST_ZERO:
                reduced.add_edges_from([(source, target, {'weight': weight})] * 2)
        return WeightedDigraph(graph.n, reduced)

    @staticmethod
    def cycle_decomposition(sigma: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
        """Disjoint cycles of a permutation, each starting at its least vertex"""
        functional = nx.DiGraph(enumerate(sigma, 1))
        cycles = []
        for cycle in nx.simple_cycles(functional):
            start = cycle.index(min(cycle))
            cycles.append(tuple(cycle[start:] + cycle[:start]))
        return tuple(sorted(cycles))

    @staticmethod
    def multicycles(matrix: TropMatrix) -> List[Multicycle]:
        """
        All n-multicycles of G_A with their weights

        Each permutation with a finite product is one n-multicycle.
        """
        n = DigraphService.require_square(matrix, 'multicycles')
        MatrixValidator.validate_size_guard(n, MatrixValidator.MAX_BRUTE_N, 'multicycle enumeration')
        found = []
        for sigma in DigraphService.iter_permutations(n):
            weight = DigraphService.permutation_product(matrix, sigma)
            if weight.is_neg_inf:
                continue
            found.append(Multicycle(DigraphService.cycle_decomposition(sigma), weight))
        return found

    @staticmethod
    def max_multicycle_weight(matrix: TropMatrix, k: int) -> TropScalar:
        """
        ⊕-sum of the weights of all k-multicycles

        Only full multicycles (k = n) are supported; the result equals |A|.
        """
        n = DigraphService.require_square(matrix, 'multicycle weight')
        if k != n:
            raise ValidationError(f"Only full multicycles are supported (k must be {n})", field="k")
        cycles = DigraphService.multicycles(matrix)
        if not cycles:
            return NEG_INF
        return tsum(c.weight for c in cycles)

    @staticmethod
    def format_edge_list(graph: WeightedDigraph) -> str:
        """One `i j weight` line per edge"""
        return ''.join(
            f"{e.source} {e.target} {format_scalar(e.weight)}\n" for e in graph.edges
        )
