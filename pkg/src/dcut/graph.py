"""Simple undirected graphs plus the structural primitives the solvers need.

Vertices are dense ints 0..n-1 everywhere in the library; the file format
is 1-indexed and conversion happens only at parse/serialize time.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GraphFormatError, SizeLimitError

# Brute-force ceilings. These routines are oracles, not production paths:
# the independent-set search is exponential in the host graph, the spider
# search in the pattern.
INDEPENDENT_SET_CEILING = 20
SPIDER_PATTERN_CEILING = 12


class Graph:
    """Immutable simple graph with sorted adjacency lists."""

    __slots__ = ("n", "m", "adj", "_adj_sets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            lists[u].append(v)
            lists[v].append(u)
        self.n = n
        self.m = len(seen)
        self.adj = tuple(tuple(sorted(nb)) for nb in lists)
        self._adj_sets = tuple(frozenset(nb) for nb in lists)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(nb) for nb in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def neighbours(self, v: int) -> frozenset[int]:
        return self._adj_sets[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, lexicographically sorted."""
        for u in range(self.n):
            for v in self.adj[u]:
                if v > u:
                    yield (u, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_graph(text: str | bytes) -> Graph:
    """Parse the 'p edge' format.

    Comment lines start with 'c'. The header 'p edge <n> <m>' precedes all
    edge lines 'e <u> <v>' (1-indexed, either endpoint order). Self-loops,
    duplicate edges and count mismatches are rejected; errors carry the
    offending line number.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"not an ascii stream: {exc}") from exc
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise GraphFormatError("duplicate header", lineno)
            if len(tok) != 4 or tok[1] != "edge":
                raise GraphFormatError("header must be 'p edge <n> <m>'", lineno)
            try:
                n, m = int(tok[2]), int(tok[3])
            except ValueError:
                raise GraphFormatError("header counts must be integers", lineno) from None
            if n < 1:
                raise GraphFormatError("vertex count must be at least 1", lineno)
            if m < 0:
                raise GraphFormatError("edge count must be non-negative", lineno)
        elif tok[0] == "e":
            if n is None:
                raise GraphFormatError("edge line before 'p edge' header", lineno)
            if len(tok) != 3:
                raise GraphFormatError("edge line must be 'e <u> <v>'", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise GraphFormatError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"endpoint out of range 1..{n}", lineno)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}", lineno)
            a, b = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if (a, b) in seen:
                raise GraphFormatError(f"duplicate edge ({u}, {v})", lineno)
            seen.add((a, b))
            edges.append((a, b))
        else:
            raise GraphFormatError(f"unrecognized line type {tok[0]!r}", lineno)
    if n is None:
        raise GraphFormatError("missing 'p edge' header")
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def serialize_graph(g: Graph) -> str:
    """Canonical text form: sorted 1-indexed edges with u < v."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                stack.append(w)
    return count == g.n


def bfs_layers(g: Graph, v: int, depth: int) -> list[frozenset[int]]:
    """Distance layers around v: exactly depth+1 sets, layer i holds the
    vertices at distance exactly i. Trailing layers may be empty."""
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range")
    if depth < 0:
        raise ValueError("depth must be non-negative")
    dist = {v: 0}
    layers = [[v]]
    for i in range(depth):
        nxt: list[int] = []
        for u in layers[i]:
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = i + 1
                    nxt.append(w)
        layers.append(nxt)
    return [frozenset(layer) for layer in layers]


def boundary(g: Graph, s: Iterable[int]) -> list[tuple[int, int]]:
    """Edges with exactly one endpoint in s, sorted, each as (u, v), u < v."""
    sset = frozenset(s)
    for x in sset:
        if not (0 <= x < g.n):
            raise ValueError(f"vertex {x} out of range")
    out = []
    for u in sset:
        for w in g.adj[u]:
            if w not in sset:
                out.append((u, w) if u < w else (w, u))
    out.sort()
    return out


def degeneracy_core(g: Graph) -> tuple[frozenset[int], int]:
    """Peel minimum-degree vertices (ties: smallest id); return the last
    non-empty core and the degeneracy k. The core induces min degree >= k."""
    if g.n == 0:
        raise ValueError("empty graph has no core")
    deg = [g.degree(v) for v in range(g.n)]
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    removed = bytearray(g.n)
    order: list[int] = []
    peel: list[int] = []
    while heap:
        d0, v = heapq.heappop(heap)
        if removed[v] or d0 != deg[v]:
            continue
        removed[v] = 1
        order.append(v)
        peel.append(d0)
        for w in g.adj[v]:
            if not removed[w]:
                deg[w] -= 1
                heapq.heappush(heap, (deg[w], w))
    k = max(peel)
    start = peel.index(k)
    return frozenset(order[start:]), k


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph on the given vertices, relabelled densely.

    Returns (subgraph, original_ids) where original_ids[i] is the vertex of g
    that became vertex i (ids in sorted order)."""
    ids = sorted(set(vertices))
    for x in ids:
        if not (0 <= x < g.n):
            raise ValueError(f"vertex {x} out of range")
    pos = {x: i for i, x in enumerate(ids)}
    edges = []
    for i, x in enumerate(ids):
        for w in g.adj[x]:
            if w in pos and pos[w] > i:
                edges.append((i, pos[w]))
    return Graph(len(ids), edges), ids


def find_independent_set(g: Graph, t: int, limit: int = INDEPENDENT_SET_CEILING):
    """Lexicographically first independent set of size t, or None.

    Exponential; refuses hosts larger than `limit`."""
    if t < 1:
        raise ValueError("t must be >= 1")
    if g.n > limit:
        raise SizeLimitError(
            f"independent-set search limited to {limit} vertices, got {g.n}"
        )
    if t > g.n:
        return None
    sets = g._adj_sets

    def extend(chosen: list[int], cand: list[int]):
        if len(chosen) == t:
            return tuple(chosen)
        if len(chosen) + len(cand) < t:
            return None
        for i, v in enumerate(cand):
            chosen.append(v)
            rest = [w for w in cand[i + 1 :] if w not in sets[v]]
            got = extend(chosen, rest)
            if got is not None:
                return got
            chosen.pop()
        return None

    return extend([], list(range(g.n)))


def has_independent_set(g: Graph, t: int, limit: int = INDEPENDENT_SET_CEILING) -> bool:
    return find_independent_set(g, t, limit=limit) is not None


@dataclass(frozen=True)
class Spider:
    """A centre with t pendant leaves plus one path of length ell leaving the
    centre: t + ell edges on t + ell + 1 vertices. (2, 1) is the claw."""

    t: int
    ell: int

    def __post_init__(self):
        if self.t < 1:
            raise ValueError("spider needs t >= 1")
        if self.ell < 1:
            raise ValueError("spider needs ell >= 1")

    @property
    def size(self) -> int:
        return self.t + self.ell + 1

    def realize(self) -> Graph:
        """The pattern as a concrete graph: centre 0, leaves 1..t, then the
        path t+1..t+ell."""
        edges = [(0, i) for i in range(1, self.t + 1)]
        edges.append((0, self.t + 1))
        edges.extend((i, i + 1) for i in range(self.t + 1, self.t + self.ell))
        return Graph(self.size, edges)


def _find_claw(g: Graph):
    # Claw = independent triple inside one neighbourhood.
    sets = g._adj_sets
    for c in range(g.n):
        nb = g.adj[c]
        k = len(nb)
        if k < 3:
            continue
        for i in range(k):
            a = nb[i]
            for j in range(i + 1, k):
                b = nb[j]
                if b in sets[a]:
                    continue
                for l in range(j + 1, k):
                    x = nb[l]
                    if x not in sets[a] and x not in sets[b]:
                        return (c, a, b, x)
    return None


def find_induced_spider(g: Graph, p: Spider, limit: int = SPIDER_PATTERN_CEILING):
    """Witness vertices of an induced spider, or None.

    Returns (centre, leaf_1..leaf_t, q_1..q_ell) where q_* is the long leg.
    Cost is exponential in the pattern only; patterns above `limit` vertices
    are refused."""
    if p.size > limit:
        raise SizeLimitError(
            f"spider search limited to pattern size {limit}, got {p.size}"
        )
    if p.t == 2 and p.ell == 1:
        return _find_claw(g)
    sets = g._adj_sets

    def grow_path(c: int, leaves: tuple[int, ...]):
        leafset = frozenset(leaves)
        path: list[int] = []

        def admissible(v: int) -> bool:
            if v == c or v in leafset or v in path:
                return False
            for u in leaves:
                if v in sets[u]:
                    return False
            prior = [c] + path
            if v not in sets[prior[-1]]:
                return False
            return all(v not in sets[u] for u in prior[:-1])

        def rec() -> bool:
            if len(path) == p.ell:
                return True
            frontier = g.adj[path[-1]] if path else g.adj[c]
            for v in frontier:
                if admissible(v):
                    path.append(v)
                    if rec():
                        return True
                    path.pop()
            return False

        return tuple(path) if rec() else None

    def independent_tuples(cand: tuple[int, ...], t: int):
        chosen: list[int] = []

        def rec(start: int):
            if len(chosen) == t:
                yield tuple(chosen)
                return
            for i in range(start, len(cand)):
                v = cand[i]
                if all(v not in sets[u] for u in chosen):
                    chosen.append(v)
                    yield from rec(i + 1)
                    chosen.pop()

        yield from rec(0)

    for c in range(g.n):
        if g.degree(c) < p.t + 1:
            continue
        for leaves in independent_tuples(g.adj[c], p.t):
            path = grow_path(c, leaves)
            if path is not None:
                return (c, *leaves, *path)
    return None


def contains_induced_spider(g: Graph, p: Spider, limit: int = SPIDER_PATTERN_CEILING) -> bool:
    return find_induced_spider(g, p, limit=limit) is not None


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of g (in sorted edge order), adjacent
    iff the edges share an endpoint. Always claw-free."""
    es = list(g.edges())
    if not es:
        raise ValueError("line graph needs at least one edge")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(es):
        incident[u].append(i)
        incident[v].append(i)
    ledges: set[tuple[int, int]] = set()
    for ids in incident:
        for a in range(len(ids)):
            for b in range(a + 1, len(ids)):
                x, y = ids[a], ids[b]
                ledges.add((x, y) if x < y else (y, x))
    return Graph(len(es), sorted(ledges))


@dataclass(frozen=True)
class StructuralReport:
    connected: bool
    max_degree: int
    is_regular: bool
    degree_histogram: tuple[tuple[int, int], ...]  # (degree, count), sorted

    def to_json_dict(self) -> dict:
        return {
            "connected": self.connected,
            "max_degree": self.max_degree,
            "is_regular": self.is_regular,
            "degree_histogram": {str(d): c for d, c in self.degree_histogram},
        }


def structural_report(g: Graph) -> StructuralReport:
    degs = [g.degree(v) for v in range(g.n)]
    hist: dict[int, int] = {}
    for d in degs:
        hist[d] = hist.get(d, 0) + 1
    return StructuralReport(
        connected=is_connected(g),
        max_degree=max(degs, default=0),
        is_regular=len(set(degs)) <= 1,
        degree_histogram=tuple(sorted(hist.items())),
    )
