"""Linear-time d-cut construction for spider-free graphs of bounded degree.

Pipeline: grow distance layers from a low-degree start vertex, absorb the
dense cores next to heavily-attached layer vertices, check the seed's
boundary discipline, then flood. Flooding colours the seed blue and keeps
colouring any vertex that accumulates d+1 blue neighbours; everything else
is red. The seed guarantees make the result a valid d-cut.

All entry points accept an optional WorkCounter that accumulates edge
touches, used to evidence linear scaling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .colouring import BLUE, RED, DCutCertificate, verify
from .errors import PreconditionError, PromiseViolationError
from .graph import (
    Graph,
    Spider,
    bfs_layers,
    degeneracy_core,
    find_independent_set,
    find_induced_spider,
    induced_subgraph,
    is_connected,
)


class WorkCounter:
    """Accumulates a count of edge touches / per-vertex passes."""

    __slots__ = ("touches",)

    def __init__(self):
        self.touches = 0

    def add(self, k: int):
        self.touches += k


def _touch(counter: Optional[WorkCounter], k: int):
    if counter is not None:
        counter.add(k)


@dataclass(frozen=True)
class SeedReport:
    """What build_seed constructed and why it is safe to flood from."""

    start_vertex: int
    layer_sizes: tuple[int, ...]  # ell+2 entries, layers 0..ell+1
    forced: tuple[int, ...]  # layer-ell vertices with >= d+1 next-layer edges
    cores: tuple[tuple[int, tuple[int, ...]], ...]  # (u, absorbed core) per forced u
    seed: tuple[int, ...]
    boundary_size: int
    incidence: tuple[tuple[int, int], ...]  # (seed vertex, boundary edges at it)
    size_bound: int  # vertex count above which success is guaranteed
    size_bound_ok: bool

    def to_json_dict(self, one_indexed: bool = True) -> dict:
        off = 1 if one_indexed else 0
        return {
            "start_vertex": self.start_vertex + off,
            "layer_sizes": list(self.layer_sizes),
            "seed_size": len(self.seed),
            "boundary_size": self.boundary_size,
            "forced": [u + off for u in self.forced],
            "core_sizes": {str(u + off): len(core) for u, core in self.cores},
            "cores": {str(u + off): [x + off for x in core] for u, core in self.cores},
            "seed": [x + off for x in self.seed],
            "incidence": {str(v + off): c for v, c in self.incidence},
            "size_bound": self.size_bound,
            "size_bound_ok": self.size_bound_ok,
        }


def flood_from_seed(
    g: Graph, seed: Iterable[int], d: int, counter: Optional[WorkCounter] = None
) -> DCutCertificate:
    """Colour the seed blue, close under the d+1-blue-neighbours rule, make
    the rest red.

    Preconditions (each reported by name): the graph is connected with max
    degree <= 2d+1, the seed is non-empty, every seed vertex meets at most d
    boundary edges, and |seed| + |boundary| < |V|. These guarantee the blue
    side never swallows the graph: each newly blued vertex retires d+1
    boundary edges and creates at most d new ones.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    seedset = frozenset(seed)
    if not seedset:
        raise PreconditionError("emptiness", "seed must be non-empty")
    for v in seedset:
        if not (0 <= v < g.n):
            raise ValueError(f"seed vertex {v} out of range")
    if not is_connected(g):
        raise PreconditionError("connectivity", "graph must be connected")
    _touch(counter, g.n + 2 * g.m)
    maxdeg = g.max_degree()
    _touch(counter, g.n)
    if maxdeg > 2 * d + 1:
        raise PreconditionError(
            "degree bound", f"max degree {maxdeg} exceeds 2d+1 = {2 * d + 1}"
        )
    bsize = 0
    for u in sorted(seedset):
        out = sum(1 for w in g.adj[u] if w not in seedset)
        _touch(counter, g.degree(u))
        if out > d:
            raise PreconditionError(
                "boundary incidence",
                f"seed vertex {u} meets {out} boundary edges (at most {d} allowed)",
            )
        bsize += out
    if len(seedset) + bsize >= g.n:
        raise PreconditionError(
            "size bound",
            f"|seed| + |boundary| = {len(seedset) + bsize} must be below |V| = {g.n}",
        )

    blue = set(seedset)
    nblue = [0] * g.n
    _touch(counter, g.n)
    queue = deque(sorted(seedset))
    while queue:
        u = queue.popleft()
        _touch(counter, g.degree(u))
        for w in g.adj[u]:
            if w not in blue:
                nblue[w] += 1
                if nblue[w] == d + 1:
                    blue.add(w)
                    queue.append(w)

    colouring = tuple(BLUE if v in blue else RED for v in range(g.n))
    _touch(counter, g.n)
    cert = verify(g, colouring, d)
    _touch(counter, g.n + 2 * g.m + sum(g.degree(u) for u in blue))
    assert isinstance(cert, DCutCertificate), cert
    # The flood never spends more budget than the seed had.
    assert len(cert.blue) + len(cert.crossing) <= len(seedset) + bsize
    return cert


def build_seed(
    g: Graph, d: int, t: int, ell: int, counter: Optional[WorkCounter] = None
) -> SeedReport:
    """Construct a floodable seed around a minimum-degree start vertex.

    Layers 0..ell are taken wholesale. A layer-ell vertex with d+1 or more
    edges into layer ell+1 would break the boundary discipline, so for each
    such u the densest part (last non-empty core) of the subgraph on u's
    forward neighbours is absorbed too; spider-freeness makes that core
    rich enough that u and its forward neighbours all keep at least
    (d+1)/(t-1) seed neighbours.

    The vertex-count threshold (d+1)*(max_deg*(max_deg-1)^(ell+1)-2)/(max_deg-2)
    is sufficient but not necessary, so it is recorded in the report rather
    than enforced; the realized invariants (per-vertex boundary incidence
    <= d, |seed| + |boundary| < |V|) are always checked and are what
    flooding actually needs.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    if t < 2:
        raise ValueError("t must be >= 2")
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if not is_connected(g):
        raise PreconditionError("connectivity", "graph must be connected")
    _touch(counter, g.n + 2 * g.m)
    maxdeg = g.max_degree()
    _touch(counter, g.n)
    if maxdeg < 3:
        raise PreconditionError("degree bound", f"max degree {maxdeg} is below 3")
    if (t - 1) * maxdeg > t * d + 1:
        raise PreconditionError(
            "degree bound",
            f"max degree {maxdeg} exceeds (t*d+1)/(t-1) = {(t * d + 1) / (t - 1):g}",
        )
    size_bound = (d + 1) * ((maxdeg * (maxdeg - 1) ** (ell + 1) - 2) // (maxdeg - 2))

    v0 = min(range(g.n), key=lambda v: (g.degree(v), v))
    _touch(counter, g.n)
    layers = bfs_layers(g, v0, ell + 1)
    _touch(counter, sum(g.degree(u) for i in range(ell + 1) for u in layers[i]))

    last = layers[ell + 1]
    forced = sorted(
        u for u in layers[ell] if sum(1 for w in g.adj[u] if w in last) >= d + 1
    )
    _touch(counter, sum(g.degree(u) for u in layers[ell]))

    cores: list[tuple[int, tuple[int, ...]]] = []
    for u in forced:
        behind = layers[ell - 1] | layers[ell]
        ahead = [w for w in g.adj[u] if w not in behind]
        sub, ids = induced_subgraph(g, ahead)
        _touch(counter, g.degree(u) + len(ids) * len(ids))
        free_leaves = find_independent_set(sub, t, limit=max(20, sub.n))
        if free_leaves is not None:
            leaves = tuple(ids[i] for i in free_leaves)
            path = _bfs_path(g, v0, u)  # length ell, one vertex per layer
            witness = (u, *leaves, *path[-2::-1])
            raise PromiseViolationError(
                f"vertex {u} has {t} pairwise non-adjacent forward neighbours; "
                f"graph is not spider-free for (t={t}, ell={ell})",
                witness,
            )
        core, _ = degeneracy_core(sub)
        cores.append((u, tuple(sorted(ids[i] for i in core))))

    seed = set()
    for i in range(ell + 1):
        seed |= layers[i]
    for _, core in cores:
        seed.update(core)

    incidence = []
    bsize = 0
    for u in sorted(seed):
        out = sum(1 for w in g.adj[u] if w not in seed)
        incidence.append((u, out))
        bsize += out
    _touch(counter, sum(g.degree(u) for u in seed))
    for u, out in incidence:
        if out > d:
            raise PreconditionError(
                "boundary incidence",
                f"seed vertex {u} meets {out} boundary edges (at most {d} allowed); "
                f"graph has {g.n} vertices, guaranteed above {size_bound}",
            )
    if len(seed) + bsize >= g.n:
        raise PreconditionError(
            "size bound",
            f"|seed| + |boundary| = {len(seed) + bsize} is not below |V| = {g.n}; "
            f"guaranteed only above {size_bound} vertices",
        )
    layer_total = sum(len(layers[i]) for i in range(ell + 2))
    assert len(seed) <= layer_total <= size_bound // (d + 1)

    return SeedReport(
        start_vertex=v0,
        layer_sizes=tuple(len(layer) for layer in layers),
        forced=tuple(forced),
        cores=tuple(cores),
        seed=tuple(sorted(seed)),
        boundary_size=bsize,
        incidence=tuple(incidence),
        size_bound=size_bound,
        size_bound_ok=g.n > size_bound,
    )


def _bfs_path(g: Graph, src: int, dst: int) -> list[int]:
    """A shortest path src..dst (shortest paths are induced)."""
    parent = {src: src}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        if u == dst:
            break
        for w in g.adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    path = [dst]
    while path[-1] != src:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def degree_two_cut(g: Graph, d: int, counter: Optional[WorkCounter] = None) -> DCutCertificate:
    """The max-degree-2 case: isolating the smallest vertex is already a
    d-cut for d >= 2 (every vertex then meets at most 2 crossing edges)."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if not is_connected(g):
        raise PreconditionError("connectivity", "graph must be connected")
    _touch(counter, g.n + 2 * g.m)
    if g.max_degree() != 2:
        raise PreconditionError("degree bound", f"max degree {g.max_degree()} is not 2")
    _touch(counter, g.n)
    colouring = tuple(BLUE if v == 0 else RED for v in range(g.n))
    _touch(counter, g.n)
    cert = verify(g, colouring, d)
    _touch(counter, g.n + 2 * g.m)
    assert isinstance(cert, DCutCertificate), cert
    return cert


def solve_star_free(
    g: Graph,
    d: int,
    t: int,
    ell: int,
    check_promise: bool = False,
    counter: Optional[WorkCounter] = None,
) -> DCutCertificate:
    """Find a d-cut of a connected spider-free graph within the degree
    bounds: either the max-degree-2 shortcut or seed-and-flood."""
    if d < 2:
        raise ValueError("d must be >= 2")
    if check_promise:
        found = find_induced_spider(g, Spider(t, ell))
        if found is not None:
            raise PromiseViolationError(
                f"input contains an induced spider for (t={t}, ell={ell})", found
            )
    if g.max_degree() == 2:
        return degree_two_cut(g, d, counter)
    report = build_seed(g, d, t, ell, counter)
    return flood_from_seed(g, report.seed, d, counter)


def solve_claw_free(
    g: Graph,
    d: int,
    check_promise: bool = False,
    counter: Optional[WorkCounter] = None,
) -> DCutCertificate:
    """Find a d-cut of a connected claw-free graph with max degree <= 2d+1
    and more than 4*d^2*(2d+1) vertices (d >= 2). Large claw-free graphs of
    bounded degree always have one; this delegates to the spider machinery
    with t=2, ell=1."""
    if d < 2:
        raise ValueError("d must be >= 2")
    maxdeg = g.max_degree()
    if maxdeg > 2 * d + 1:
        raise PreconditionError(
            "degree bound", f"max degree {maxdeg} exceeds 2d+1 = {2 * d + 1}"
        )
    threshold = 4 * d * d * (2 * d + 1)
    if g.n <= threshold:
        raise PreconditionError(
            "size bound",
            f"need more than 4*d^2*(2d+1) = {threshold} vertices, got {g.n}",
        )
    return solve_star_free(g, d, 2, 1, check_promise=check_promise, counter=counter)
