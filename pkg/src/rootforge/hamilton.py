"""Hamiltonian cycle and path enumeration on polyhedral graphs.

Exact backtracking counts with light pruning; undirected cycles are counted
once (not per orientation or starting point).  An optional automorphism
list quotients the cycle count into symmetry orbits, and a pluggable
predicate filters cycles for downstream modelling experiments.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .errors import Disconnected, GraphTooLarge

DEFAULT_VERTEX_CAP = 100
CONNECTIVITY_CHECK_DEPTH = 4


@dataclass(frozen=True)
class PolyGraph:
    n: int
    adjacency: tuple  # tuple of sorted neighbour tuples
    automorphisms: tuple = ()

    @staticmethod
    def from_edges(n: int, edges: Sequence, automorphisms: Sequence = ()) -> "PolyGraph":
        adj = [set() for _ in range(n)]
        for a, b in edges:
            if a == b:
                continue
            adj[a].add(b)
            adj[b].add(a)
        return PolyGraph(
            n=n,
            adjacency=tuple(tuple(sorted(s)) for s in adj),
            automorphisms=tuple(tuple(p) for p in automorphisms),
        )

    def edges(self):
        return [(i, j) for i in range(self.n) for j in self.adjacency[i] if i < j]

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def graph_from_solid(solid) -> PolyGraph:
    return PolyGraph.from_edges(len(solid.vertices), solid.edges)


def named_graph(name: str) -> PolyGraph:
    """Small built-in graphs used by the tests and the CLI."""
    from . import polyhedra

    if name == "tetrahedron":
        return PolyGraph.from_edges(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    if name == "cube":
        edges = []
        for v in range(8):
            for bit in (1, 2, 4):
                w = v ^ bit
                if v < w:
                    edges.append((v, w))
        return PolyGraph.from_edges(8, edges)
    if name == "petersen":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        return PolyGraph.from_edges(10, outer + inner + spokes)
    if name in polyhedra.CATALOG_SOLIDS:
        return graph_from_solid(polyhedra.catalog_solid(name))
    raise KeyError(f"unknown graph {name!r}")


def canonical_cycle(seq: Sequence[int]) -> tuple:
    """Minimal rotation/reflection of a closed vertex sequence."""
    seq = list(seq)
    best = None
    for s in (seq, seq[::-1]):
        k = s.index(min(s))
        rot = tuple(s[k:] + s[:k])
        if best is None or rot < best:
            best = rot
    return best


def _unvisited_connected(g: PolyGraph, visited: list, tail: int, start: int) -> bool:
    """The unvisited region plus the path ends must be mutually reachable."""
    remaining = [v for v in range(g.n) if not visited[v]]
    if not remaining:
        return True
    seen = {tail}
    stack = [tail]
    hit = 0
    while stack:
        v = stack.pop()
        for w in g.adjacency[v]:
            if w in seen:
                continue
            if not visited[w] or w == start:
                seen.add(w)
                stack.append(w)
                if not visited[w]:
                    hit += 1
    return hit == len(remaining)


def enumerate_hamiltonian_cycles(
    g: PolyGraph,
    quotient_symmetry: bool = False,
    cycle_filter: Optional[Callable[[tuple], bool]] = None,
    cap: int = DEFAULT_VERTEX_CAP,
):
    """(count, representatives); representatives are canonical vertex tuples.

    Each undirected cycle is produced exactly once by anchoring at vertex 0
    and orienting so the second vertex is smaller than the last.  With
    quotient_symmetry the count is over orbits of the supplied
    automorphisms.
    """
    if g.n > cap:
        raise GraphTooLarge(f"{g.n} vertices exceed the cap {cap}")
    if not g.is_connected():
        raise Disconnected("Hamiltonian cycles need a connected graph")
    if g.n < 3:
        return 0, []
    cycles = []
    visited = [False] * g.n
    visited[0] = True
    path = [0]

    def backtrack(v, depth):
        if depth == g.n:
            if 0 in g.adjacency[v] and path[1] < path[-1]:
                cyc = tuple(path)
                if cycle_filter is None or cycle_filter(cyc):
                    cycles.append(canonical_cycle(cyc))
            return
        if depth % CONNECTIVITY_CHECK_DEPTH == 0 and not _unvisited_connected(
            g, visited, v, 0
        ):
            return
        for w in g.adjacency[v]:
            if visited[w]:
                continue
            # forced-edge style prune: an unvisited vertex with fewer than two
            # open contacts can never be traversed
            visited[w] = True
            path.append(w)
            ok = True
            for u in range(g.n):
                if not visited[u]:
                    open_contacts = sum(
                        1 for x in g.adjacency[u] if not visited[x] or x == 0 or x == w
                    )
                    if open_contacts < 2:
                        ok = False
                        break
            if ok:
                backtrack(w, depth + 1)
            path.pop()
            visited[w] = False

    backtrack(0, 1)
    cycles.sort()
    if not quotient_symmetry or not g.automorphisms:
        return len(cycles), cycles
    orbits = set()
    for cyc in cycles:
        rep = min(canonical_cycle([p[v] for v in cyc]) for p in g.automorphisms)
        orbits.add(rep)
    return len(orbits), sorted(orbits)


def enumerate_hamiltonian_paths(
    g: PolyGraph,
    start: Optional[int] = None,
    end: Optional[int] = None,
    cap: int = DEFAULT_VERTEX_CAP,
) -> int:
    """Exact count of Hamiltonian paths with optional fixed endpoints.

    Undirected paths are counted once when both endpoints are free or only
    one is fixed; with both endpoints given, the count is of paths from
    start to end.
    """
    if g.n > cap:
        raise GraphTooLarge(f"{g.n} vertices exceed the cap {cap}")
    if not g.is_connected():
        raise Disconnected("Hamiltonian paths need a connected graph")

    def count_from(s):
        total = 0
        visited = [False] * g.n
        visited[s] = True

        def backtrack(v, depth):
            nonlocal total
            if depth == g.n:
                if end is None or v == end:
                    total += 1
                return
            for w in g.adjacency[v]:
                if not visited[w]:
                    visited[w] = True
                    backtrack(w, depth + 1)
                    visited[w] = False

        backtrack(s, 1)
        return total

    if start is not None:
        return count_from(start)
    total = sum(count_from(s) for s in range(g.n))
    if end is None:
        return total // 2  # each undirected path counted from both ends
    return total


def brute_force_cycle_count(g: PolyGraph) -> int:
    """Oracle: permutations of the remaining vertices, undirected dedup."""
    if g.n < 3:
        return 0
    adj = [set(a) for a in g.adjacency]
    count = 0
    for perm in itertools.permutations(range(1, g.n)):
        if perm[0] > perm[-1]:
            continue
        seq = (0,) + perm
        if all(seq[i + 1] in adj[seq[i]] for i in range(g.n - 1)) and seq[0] in adj[seq[-1]]:
            count += 1
    return count


def brute_force_path_count(g: PolyGraph, start=None, end=None) -> int:
    count = 0
    for perm in itertools.permutations(range(g.n)):
        if start is not None and perm[0] != start:
            continue
        if end is not None and perm[-1] != end:
            continue
        if all(perm[i + 1] in g.adjacency[perm[i]] for i in range(g.n - 1)):
            count += 1
    if start is None and end is None:
        return count // 2
    if start is not None and end is None:
        return count
    if start is None and end is not None:
        return count
    return count
