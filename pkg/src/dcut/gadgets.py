"""Deterministic instance generators.

The two ring gadgets also return labels: a dict mapping group names
("T_1", "A_1", "B_1", "v_1", "w_1", ...) to sorted vertex tuples, so tests
and downstream constructions can address the named parts by id.
"""

from __future__ import annotations

import random

from .graph import Graph, line_graph

GadgetLabels = dict[str, tuple[int, ...]]


def _clique_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [
        (vertices[i], vertices[j])
        for i in range(len(vertices))
        for j in range(i + 1, len(vertices))
    ]


def gen_regular_noncut(d: int, k: int, r: int) -> tuple[Graph, GadgetLabels]:
    """Ring of k r-cliques with connector vertices; r-regular, claw-free,
    and admits no d-cut.

    Clique T_i splits into A_i (d+1 vertices) and B_i; connector v_i is
    joined to B_i and A_{i+1} (cyclically). Vertex layout: the cliques
    occupy 0..k*r-1 contiguously (A_i before B_i), then v_1..v_k.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    if k < 2:
        raise ValueError("k must be >= 2")
    if r < 2 * d + 2:
        raise ValueError(f"r must be >= 2d+2 = {2 * d + 2}")
    labels: GadgetLabels = {}
    edges: list[tuple[int, int]] = []
    for i in range(1, k + 1):
        base = (i - 1) * r
        clique = list(range(base, base + r))
        labels[f"T_{i}"] = tuple(clique)
        labels[f"A_{i}"] = tuple(clique[: d + 1])
        labels[f"B_{i}"] = tuple(clique[d + 1 :])
        edges.extend(_clique_edges(clique))
    for i in range(1, k + 1):
        v = k * r + (i - 1)
        labels[f"v_{i}"] = (v,)
        nxt = i + 1 if i < k else 1
        for u in labels[f"B_{i}"] + labels[f"A_{nxt}"]:
            edges.append((u, v))
    return Graph(k * (r + 1), edges), labels


def gen_h_gadget(d: int, k: int, r: int) -> tuple[Graph, GadgetLabels]:
    """The ring gadget extended with k low-degree 'free' vertices.

    w_i is joined to A_i and to v_{i-1} (cyclically), so deg(w_i) = d+2
    while every other vertex keeps degree r or r+1. Still claw-free, still
    no d-cut; the free vertices are the attachment points for reductions.
    Layout: ring gadget first, then w_1..w_k.
    """
    base, labels = gen_regular_noncut(d, k, r)
    edges = list(base.edges())
    for i in range(1, k + 1):
        w = k * r + k + (i - 1)
        labels[f"w_{i}"] = (w,)
        prev = i - 1 if i > 1 else k
        for u in labels[f"A_{i}"] + labels[f"v_{prev}"]:
            edges.append((u, w))
    return Graph(k * (r + 2), edges), labels


def gen_diamond_chain(p: int, k: int) -> Graph:
    """Chain of k copies of K_p minus an edge, consecutive copies glued at
    one endpoint of the missing edge. Claw-free, no 1-cut.

    p + (k-1)(p-1) vertices; shared vertices reach degree 2p-4.
    """
    if p < 4:
        raise ValueError("p must be >= 4")
    if k < 1:
        raise ValueError("k must be >= 1")
    edges: list[tuple[int, int]] = []
    start = 0  # first endpoint of the current copy's missing edge
    n = p
    for i in range(k):
        if i == 0:
            copy = list(range(p))
        else:
            copy = [start] + list(range(n, n + p - 1))
            n += p - 1
        # missing edge joins copy[0] and copy[-1], the two degree-(p-2) ends
        for a in range(p):
            for b in range(a + 1, p):
                if (a, b) != (0, p - 1):
                    edges.append((copy[a], copy[b]))
        start = copy[-1]
    return Graph(n, edges)


def gen_spider(t: int, ell: int) -> Graph:
    """Centre 0 with leaves 1..t and a path of length ell from the centre:
    t + ell edges on t + ell + 1 vertices."""
    from .graph import Spider

    return Spider(t, ell).realize()


def gen_random_clawfree(n_base: int, max_deg_base: int, seed: int) -> Graph:
    """Line graph of a random connected base graph with bounded degree.

    The base is a random tree plus a random number of extra edges under the
    degree cap, so the output is connected, claw-free, and has max degree
    at most 2*(max_deg_base - 1). Deterministic for fixed parameters.
    """
    if n_base < 2:
        raise ValueError("n_base must be >= 2")
    if max_deg_base < 2:
        raise ValueError("max_deg_base must be >= 2")
    rng = random.Random(seed)
    deg = [0] * n_base
    edges: set[tuple[int, int]] = set()
    for v in range(1, n_base):
        hosts = [u for u in range(v) if deg[u] < max_deg_base]
        u = rng.choice(hosts)
        edges.add((u, v))
        deg[u] += 1
        deg[v] += 1
    extra_target = rng.randint(0, n_base)
    pairs = [
        (u, v)
        for u in range(n_base)
        for v in range(u + 1, n_base)
        if (u, v) not in edges
    ]
    rng.shuffle(pairs)
    added = 0
    for u, v in pairs:
        if added == extra_target:
            break
        if deg[u] < max_deg_base and deg[v] < max_deg_base:
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
            added += 1
    return line_graph(Graph(n_base, sorted(edges)))


def circular_ladder(n: int) -> Graph:
    """Two n-cycles joined by rungs; 3-regular on 2n vertices. Its line
    graph (3n vertices, 4-regular) is the scaling family used in tests."""
    if n < 3:
        raise ValueError("n must be >= 3")
    edges = []
    for i in range(n):
        j = (i + 1) % n
        edges.append((i, j))
        edges.append((n + i, n + j))
        edges.append((i, n + i))
    return Graph(2 * n, edges)
