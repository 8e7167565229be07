"""Loop-free undirected multigraphs with stable edge identities.

Vertices are integers 0..n-1.  Edges carry an opaque integer id that
survives deletion of other edges; contraction renumbers vertices densely
and reports the renaming.  All graphs are immutable values; every
operation returns a new graph.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple


class Edge(NamedTuple):
    eid: int
    u: int
    v: int


class GraphParseError(ValueError):
    """Malformed edge-list text; carries a 1-based line/column position."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        seen = set()
        for e in self.edges:
            if e.u == e.v:
                raise ValueError(f"loop at vertex {e.u}")
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise ValueError(f"edge {e} out of vertex range [0, {self.n})")
            if e.u > e.v:
                raise ValueError(f"edge {e} endpoints not normalized")
            if e.eid in seen:
                raise ValueError(f"duplicate edge id {e.eid}")
            seen.add(e.eid)

    # -- construction ------------------------------------------------------

    @classmethod
    def from_edge_list(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Multigraph":
        edges = tuple(
            Edge(i, min(u, v), max(u, v)) for i, (u, v) in enumerate(pairs)
        )
        return cls(n, edges)

    @classmethod
    def parse(cls, text: str) -> "Multigraph":
        """Parse the text edge-list format: "n m" then m lines "u v"."""
        lines = text.splitlines()
        if not lines:
            raise GraphParseError(1, 1, "empty input")

        def split_ints(lineno: int, expected: int) -> list[int]:
            raw = lines[lineno - 1]
            parts = raw.split()
            if len(parts) != expected:
                raise GraphParseError(
                    lineno, 1, f"expected {expected} integers, got {len(parts)}"
                )
            out = []
            for p in parts:
                col = raw.index(p) + 1
                try:
                    out.append(int(p))
                except ValueError:
                    raise GraphParseError(lineno, col, f"not an integer: {p!r}") from None
            return out

        n, m = split_ints(1, 2)
        if n < 1:
            raise GraphParseError(1, 1, "vertex count must be positive")
        if m < 0:
            raise GraphParseError(1, 1, "edge count must be nonnegative")
        if len([ln for ln in lines[1:] if ln.strip()]) < m:
            raise GraphParseError(len(lines) + 1, 1, f"expected {m} edge lines")
        pairs = []
        lineno = 1
        while len(pairs) < m:
            lineno += 1
            if lineno > len(lines):
                raise GraphParseError(lineno, 1, f"expected {m} edge lines")
            if not lines[lineno - 1].strip():
                continue
            u, v = split_ints(lineno, 2)
            if u == v:
                raise GraphParseError(lineno, 1, f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphParseError(lineno, 1, f"vertex out of range [0, {n})")
            pairs.append((u, v))
        return cls.from_edge_list(n, pairs)

    def format(self) -> str:
        """Inverse of parse, up to edge ordering."""
        out = [f"{self.n} {len(self.edges)}"]
        out.extend(f"{e.u} {e.v}" for e in self.edges)
        return "\n".join(out) + "\n"

    # -- basic queries -----------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _edge_by_id(self) -> dict[int, Edge]:
        return {e.eid: e for e in self.edges}

    def edge(self, eid: int) -> Edge:
        try:
            return self._edge_by_id[eid]
        except KeyError:
            raise KeyError(f"unknown edge id {eid}") from None

    @cached_property
    def multiplicity_matrix(self) -> tuple[tuple[int, ...], ...]:
        mat = [[0] * self.n for _ in range(self.n)]
        for e in self.edges:
            mat[e.u][e.v] += 1
            mat[e.v][e.u] += 1
        return tuple(tuple(row) for row in mat)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in (e.u, e.v))

    @cached_property
    def _adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e in self.edges:
            adj[e.u].append((e.v, e.eid))
            adj[e.v].append((e.u, e.eid))
        return tuple(tuple(a) for a in adj)

    def parallel_class(self, eid: int) -> tuple[int, ...]:
        """Ids of all edges sharing this edge's endpoint pair (incl. itself)."""
        e = self.edge(eid)
        return tuple(f.eid for f in self.edges if (f.u, f.v) == (e.u, e.v))

    def has_parallel_edges(self) -> bool:
        seen = set()
        for e in self.edges:
            if (e.u, e.v) in seen:
                return True
            seen.add((e.u, e.v))
        return False

    # -- minors ------------------------------------------------------------

    def delete_edge(self, eid: int) -> "Multigraph":
        self.edge(eid)
        return Multigraph(self.n, tuple(e for e in self.edges if e.eid != eid))

    def contract_edge_with_map(self, eid: int) -> tuple["Multigraph", dict[int, int]]:
        """Contract eid; parallel copies become loops and are dropped.

        Returns the contracted graph and the dense old->new vertex renaming.
        """
        e = self.edge(eid)
        merged = e.u  # e.v folds into e.u
        renum: dict[int, int] = {}
        nxt = 0
        for v in range(self.n):
            if v == e.v:
                continue
            renum[v] = nxt
            nxt += 1
        renum[e.v] = renum[merged]
        edges = []
        for f in self.edges:
            if f.eid == eid:
                continue
            a, b = renum[f.u], renum[f.v]
            if a == b:
                continue  # loop created by contraction: dropped
            edges.append(Edge(f.eid, min(a, b), max(a, b)))
        return Multigraph(self.n - 1, tuple(edges)), renum

    def contract_edge(self, eid: int) -> "Multigraph":
        return self.contract_edge_with_map(eid)[0]

    def contract_subset(self, subset: frozenset[int] | set[int]) -> "Multigraph":
        """Contract every edge with both endpoints in the subset.

        Equivalent to iterated contract_edge over E(S) in any order: each
        connected component of the induced subgraph collapses to a point.
        """
        if not subset:
            raise ValueError("empty subset")
        if not all(0 <= v < self.n for v in subset):
            raise ValueError("subset outside vertex range")
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            if e.u in subset and e.v in subset:
                ru, rv = find(e.u), find(e.v)
                if ru != rv:
                    parent[rv] = ru
        roots = sorted({find(v) for v in range(self.n)})
        renum = {r: i for i, r in enumerate(roots)}
        edges = []
        for e in self.edges:
            a, b = renum[find(e.u)], renum[find(e.v)]
            if a == b:
                continue
            edges.append(Edge(e.eid, min(a, b), max(a, b)))
        return Multigraph(len(roots), tuple(edges))

    def induced_subgraph(self, subset: frozenset[int] | set[int]) -> "Multigraph":
        """Restriction to the subset; edge ids are preserved."""
        if not subset:
            raise ValueError("empty subset")
        if not all(0 <= v < self.n for v in subset):
            raise ValueError("subset outside vertex range")
        verts = sorted(subset)
        renum = {v: i for i, v in enumerate(verts)}
        edges = tuple(
            Edge(e.eid, renum[e.u], renum[e.v])
            for e in self.edges
            if e.u in subset and e.v in subset
        )
        return Multigraph(len(verts), edges)

    def edges_within(self, subset: frozenset[int] | set[int]) -> frozenset[int]:
        """E(S): ids of edges with both endpoints in the subset."""
        return frozenset(
            e.eid for e in self.edges if e.u in subset and e.v in subset
        )

    # -- connectivity ------------------------------------------------------

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w, _ in self._adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def blocks(self) -> list[frozenset[int]]:
        """The 2-connected components (blocks), as vertex sets.

        A single vertex yields no block; a bridge is its own block.
        Parallel edges keep their endpoints in one block.
        """
        disc = [-1] * self.n
        low = [0] * self.n
        stack: list[tuple[int, int, int]] = []
        out: list[frozenset[int]] = []
        counter = itertools.count()

        def dfs(root: int) -> None:
            # iterative DFS to keep deep paths safe
            work: list[tuple[int, int, iter]] = [(root, -1, iter(self._adjacency[root]))]
            disc[root] = low[root] = next(counter)
            while work:
                u, peid, it = work[-1]
                advanced = False
                for w, eid in it:
                    if eid == peid:
                        continue
                    if disc[w] == -1:
                        disc[w] = low[w] = next(counter)
                        stack.append((u, w, eid))
                        work.append((w, eid, iter(self._adjacency[w])))
                        advanced = True
                        break
                    elif disc[w] < disc[u]:
                        stack.append((u, w, eid))
                        low[u] = min(low[u], disc[w])
                if not advanced:
                    work.pop()
                    if work:
                        pu = work[-1][0]
                        low[pu] = min(low[pu], low[u])
                        if low[u] >= disc[pu]:
                            comp: set[int] = set()
                            while True:
                                a, b, eid = stack.pop()
                                comp.add(a)
                                comp.add(b)
                                if (a, b) == (pu, u):
                                    break
                            out.append(frozenset(comp))

        for r in range(self.n):
            if disc[r] == -1 and self._adjacency[r]:
                dfs(r)
        return out

    def is_two_connected(self) -> bool:
        """Connected, at least two vertices, and no cut vertex.

        K_2 and C_2 both count as 2-connected under this convention.
        """
        if self.n < 2:
            return False
        if not self.is_connected():
            return False
        return len(self.blocks()) == 1

    # -- spanning trees ----------------------------------------------------

    def spanning_trees(self) -> list[frozenset[int]]:
        """All spanning trees as edge-id sets (parallel edges give distinct trees)."""
        if not self.is_connected():
            raise ValueError("graph is not connected")
        k = self.n - 1
        out = []
        for combo in itertools.combinations(self.edges, k):
            parent = list(range(self.n))

            def find(x: int) -> int:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            ok = True
            for e in combo:
                ru, rv = find(e.u), find(e.v)
                if ru == rv:
                    ok = False
                    break
                parent[rv] = ru
            if ok:
                out.append(frozenset(e.eid for e in combo))
        return out

    def spanning_tree_count(self) -> int:
        """Matrix-Tree determinant of a Laplacian principal minor."""
        if self.n == 1:
            return 1
        lap = [[0] * self.n for _ in range(self.n)]
        for e in self.edges:
            lap[e.u][e.u] += 1
            lap[e.v][e.v] += 1
            lap[e.u][e.v] -= 1
            lap[e.v][e.u] -= 1
        minor = [row[1:] for row in lap[1:]]
        return _int_determinant(minor)

    # -- canonical form ----------------------------------------------------

    def canonicalize(self) -> tuple["Multigraph", tuple[int, ...], dict[int, int]]:
        """Canonical relabeling.

        Returns (canonical graph, vertex permutation old->new, edge id map
        old->new).  Canonical edge ids run 0..m-1 sorted by endpoint pair;
        within a parallel class, old ids are mapped in increasing order.
        """
        order = _canonical_ordering(self.multiplicity_matrix, self.n)
        vperm = [0] * self.n
        for pos, v in enumerate(order):
            vperm[v] = pos
        relabeled = sorted(
            (
                (min(vperm[e.u], vperm[e.v]), max(vperm[e.u], vperm[e.v]), e.eid)
                for e in self.edges
            )
        )
        emap: dict[int, int] = {}
        edges = []
        for new_id, (u, v, old_id) in enumerate(relabeled):
            emap[old_id] = new_id
            edges.append(Edge(new_id, u, v))
        return Multigraph(self.n, tuple(edges)), tuple(vperm), emap

    @cached_property
    def canonical_form(self) -> tuple[tuple[int, ...], ...]:
        """Isomorphism-invariant multiplicity matrix.

        Two multigraphs have equal canonical_form iff they are isomorphic.
        """
        return self.canonicalize()[0].multiplicity_matrix

    def is_isomorphic(self, other: "Multigraph") -> bool:
        return self.canonical_form == other.canonical_form

    def permuted(self, vperm: Iterable[int]) -> "Multigraph":
        """Relabel vertices by old->new permutation (edge ids kept)."""
        p = list(vperm)
        edges = tuple(
            Edge(e.eid, min(p[e.u], p[e.v]), max(p[e.u], p[e.v])) for e in self.edges
        )
        return Multigraph(self.n, edges)

    def shuffled(self, rng: random.Random) -> "Multigraph":
        p = list(range(self.n))
        rng.shuffle(p)
        return self.permuted(p)


def _int_determinant(mat: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of a square integer matrix."""
    a = [row[:] for row in mat]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _canonical_ordering(mult: tuple[tuple[int, ...], ...], n: int) -> tuple[int, ...]:
    """Vertex ordering maximizing the column-wise upper-triangle sequence.

    Cells (i, j) with i < j are compared in order (j, i), so placing the
    k-th vertex appends exactly k known entries; this makes prefix pruning
    sound.  Any fixed total order on cells gives a valid canonical form;
    the maximizing one keeps adjacent vertices early, which prunes well on
    the sparse, path-heavy graphs produced by subdivision.
    """
    best_seq: tuple[int, ...] | None = None
    best_ord: tuple[int, ...] | None = None
    used = [False] * n
    order: list[int] = []

    def rec(seq: tuple[int, ...]) -> None:
        nonlocal best_seq, best_ord
        k = len(order)
        if k == n:
            if best_seq is None or seq > best_seq:
                best_seq, best_ord = seq, tuple(order)
            return
        groups: dict[tuple[int, ...], list[int]] = {}
        for v in range(n):
            if not used[v]:
                col = tuple(mult[u][v] for u in order)
                groups.setdefault(col, []).append(v)
        for col in sorted(groups, reverse=True):
            ns = seq + col
            if best_seq is not None and ns < best_seq[: len(ns)]:
                break  # every remaining column is smaller still
            for v in groups[col]:
                used[v] = True
                order.append(v)
                rec(ns)
                order.pop()
                used[v] = False

    rec(())
    assert best_ord is not None
    return best_ord


# -- common small graphs ---------------------------------------------------

def cycle_graph(length: int) -> Multigraph:
    """C_length; length 2 gives the 2-cycle (two parallel edges)."""
    if length < 2:
        raise ValueError("cycle length must be >= 2")
    if length == 2:
        return Multigraph.from_edge_list(2, [(0, 1), (0, 1)])
    return Multigraph.from_edge_list(
        length, [(i, (i + 1) % length) for i in range(length)]
    )


def complete_graph(n: int) -> Multigraph:
    return Multigraph.from_edge_list(n, list(itertools.combinations(range(n), 2)))


def banana_graph(num_edges: int) -> Multigraph:
    """Two vertices joined by num_edges parallel edges."""
    if num_edges < 1:
        raise ValueError("need at least one edge")
    return Multigraph.from_edge_list(2, [(0, 1)] * num_edges)
