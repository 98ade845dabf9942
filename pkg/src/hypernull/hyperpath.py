"""Loose k-uniform hyperpaths and the index data behind their null equations.

A loose hyperpath with n edges of size k has (k-1)n + 1 vertices, labeled so
that edge j covers vertices (k-1)(j-1)+1 through (k-1)j+1; consecutive edges
overlap in exactly one vertex and all other pairs of edges are disjoint.

For k = 3 every degree-one vertex contributes one quadratic monomial x_i x_j
to the system cutting out the zero eigenvectors.  Collecting those index
pairs as edges of an auxiliary graph turns "every monomial vanishes" into
"pick a vertex cover", which is how the brute-force decomposition works.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


@dataclass(frozen=True)
class Hyperpath:
    """A loose k-uniform hyperpath on n edges with the standard vertex labels."""

    n: int
    k: int
    edges: tuple[frozenset[int], ...]

    @property
    def vertex_count(self) -> int:
        return (self.k - 1) * self.n + 1


@dataclass(frozen=True)
class AuxGraph:
    """Graph on variable indices, one edge per degree-one-vertex link monomial."""

    n: int
    vertices: frozenset[int]
    edges: frozenset[frozenset[int]]


def build_hyperpath(n: int, k: int) -> Hyperpath:
    """Construct the loose hyperpath with n edges of uniformity k."""
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    if k < 3:
        raise ValueError(f"uniformity must be >= 3, got {k}")
    step = k - 1
    edges = tuple(
        frozenset(range(step * (j - 1) + 1, step * j + 2)) for j in range(1, n + 1)
    )
    return Hyperpath(n=n, k=k, edges=edges)


def degree_one_vertices(path: Hyperpath) -> list[int]:
    degree = Counter(v for edge in path.edges for v in edge)
    return [v for v in range(1, path.vertex_count + 1) if degree[v] == 1]


def link_monomial_edges(path: Hyperpath) -> list[frozenset[int]]:
    """Index pairs {i, j} with x_i x_j the link monomial of a degree-one vertex.

    Only meaningful for k = 3, where every degree-one vertex has a two-vertex
    link.  The result has n + 2 distinct pairs.
    """
    if path.k != 3:
        raise ValueError("link monomials are quadratic only for k = 3")
    pairs = []
    for v in degree_one_vertices(path):
        (edge,) = (e for e in path.edges if v in e)
        pairs.append(edge - {v})
    return pairs


def aux_graph(n: int) -> AuxGraph:
    """The monomial-incidence graph of the 3-uniform hyperpath on n edges.

    Two pendant vertices hang off each of the interior endpoints 3 and 2n-1,
    which are joined by the path 3 - 5 - ... - (2n-1).  Requires n >= 3; the
    one- and two-edge paths are degenerate and handled specially elsewhere.
    """
    if n < 3:
        raise ValueError(f"aux graph is defined for n >= 3, got {n}")
    edges = frozenset(link_monomial_edges(build_hyperpath(n, 3)))
    vertices = frozenset(i for edge in edges for i in edge)
    return AuxGraph(n=n, vertices=vertices, edges=edges)
