"""Jahangir graph construction and the matrices derived from a labeled graph.

A Jahangir graph J(n, m) is a cycle on n*m rim vertices plus one center
vertex joined to m rim vertices spaced n apart.  The canonical labeling used
everywhere in this package: vertex 0 is the center, rim vertices are 1..nm
in cycle order, and spoke j (j = 1..m) joins 0 to rim vertex (j-1)*n + 1.
Edges are listed rim first in cycle order, then spokes in j order, so edge
indices are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphValidationError, ParameterDomainError


@dataclass(frozen=True)
class JahangirParams:
    """Validated (n, m) pair: n rim edges per arc segment, m spokes."""

    n: int
    m: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise ParameterDomainError("n and m must be integers")
        if self.n < 2:
            raise ParameterDomainError(f"n must be >= 2 (got {self.n})")
        if self.m < 3:
            raise ParameterDomainError(f"m must be >= 3 (got {self.m})")

    @property
    def vertex_count(self) -> int:
        return self.n * self.m + 1

    @property
    def edge_count(self) -> int:
        return self.n * self.m + self.m


@dataclass(frozen=True)
class LabeledGraph:
    """Simple undirected graph: a vertex count and an ordered edge list.

    Edges are stored as (u, v) with u < v.  The constructor normalizes
    orientation and rejects loops, duplicates, and out-of-range endpoints.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise GraphValidationError("vertex_count must be >= 1")
        normalized = []
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphValidationError(f"loop at vertex {u} is not allowed")
            if u > v:
                u, v = v, u
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphValidationError(
                    f"edge {e} has an endpoint outside 0..{self.vertex_count - 1}"
                )
            if (u, v) in seen:
                raise GraphValidationError(f"duplicate edge {{{u}, {v}}}")
            seen.add((u, v))
            normalized.append((u, v))
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def neighbors(self, v: int) -> list[int]:
        out = []
        for a, b in self.edges:
            if a == v:
                out.append(b)
            elif b == v:
                out.append(a)
        return out


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense matrix of arbitrary-precision integers."""

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows:
            raise ValueError("entry grid does not match declared row count")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("entry grid does not match declared column count")

    def transpose(self) -> "IntegerMatrix":
        flipped = tuple(zip(*self.entries)) if self.entries else ()
        return IntegerMatrix(self.cols, self.rows, tuple(tuple(r) for r in flipped))

    def matmul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        bt = list(zip(*other.entries))
        prod = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
            for row in self.entries
        )
        return IntegerMatrix(self.rows, other.cols, prod)

    def row_sums(self) -> list[int]:
        return [sum(row) for row in self.entries]


def build_jahangir(params: JahangirParams) -> LabeledGraph:
    """Construct J(n, m) under the canonical labeling.

    Rim edge i (0-based) joins rim vertices i+1 and i+2 for i < nm-1; the
    closing edge joins 1 and nm.  Spoke j lands at edge index nm + j - 1.
    """
    n, m = params.n, params.m
    nm = n * m
    edges = [(i, i + 1) for i in range(1, nm)]
    edges.append((1, nm))
    for j in range(1, m + 1):
        edges.append((0, (j - 1) * n + 1))
    return LabeledGraph(nm + 1, tuple(edges))


def adjacency_matrix(g: LabeledGraph) -> IntegerMatrix:
    """Symmetric 0/1 matrix with zero diagonal."""
    nv = g.vertex_count
    a = [[0] * nv for _ in range(nv)]
    for u, v in g.edges:
        a[u][v] = 1
        a[v][u] = 1
    return IntegerMatrix(nv, nv, tuple(tuple(row) for row in a))


def degree_matrix(g: LabeledGraph) -> IntegerMatrix:
    nv = g.vertex_count
    deg = g.degrees()
    d = [[deg[i] if i == j else 0 for j in range(nv)] for i in range(nv)]
    return IntegerMatrix(nv, nv, tuple(tuple(row) for row in d))


def laplacian_matrix(g: LabeledGraph) -> IntegerMatrix:
    """Degree matrix minus adjacency matrix; every row sums to zero."""
    nv = g.vertex_count
    deg = g.degrees()
    lap = [[0] * nv for _ in range(nv)]
    for i in range(nv):
        lap[i][i] = deg[i]
    for u, v in g.edges:
        lap[u][v] = -1
        lap[v][u] = -1
    return IntegerMatrix(nv, nv, tuple(tuple(row) for row in lap))


def oriented_incidence_matrix(g: LabeledGraph) -> IntegerMatrix:
    """|V| x |E| matrix; the column for edge (u, v) with u < v holds +1 at
    row u and -1 at row v.  Any consistent orientation satisfies the
    Laplacian identity L == M @ M^T; the lower-index-is-tail convention is
    fixed so output is reproducible.
    """
    nv, ne = g.vertex_count, len(g.edges)
    grid = [[0] * ne for _ in range(nv)]
    for idx, (u, v) in enumerate(g.edges):
        grid[u][idx] = 1    # lower index is the tail
        grid[v][idx] = -1
    return IntegerMatrix(nv, ne, tuple(tuple(row) for row in grid))


def is_connected(g: LabeledGraph) -> bool:
    if g.vertex_count == 1:
        return True
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.vertex_count


def to_dot(g: LabeledGraph, highlight_edges=None, name: str = "g") -> str:
    """DOT rendering: vertices v0..v_{k}, one statement per edge in canonical
    order.  When highlight_edges (a set of edge indices) is given, edges
    outside the set are drawn dashed; used to display a spanning tree inside
    its host graph.
    """
    lines = [f"graph {name} {{"]
    for v in range(g.vertex_count):
        lines.append(f"  v{v};")
    for idx, (u, v) in enumerate(g.edges):
        if highlight_edges is not None and idx not in highlight_edges:
            lines.append(f"  v{u} -- v{v} [style=dashed];")
        else:
            lines.append(f"  v{u} -- v{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
