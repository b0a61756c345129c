"""Small independent oracles and graph builders shared across test files.

Everything here recomputes from first principles (plain adjacency scans,
exhaustive enumeration) so the package is never used to check itself.
"""

import itertools
import random

from dcut.graph import Graph

BLUE = "B"
RED = "R"


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(legs: int) -> Graph:
    return Graph(legs + 1, [(0, i) for i in range(1, legs + 1)])


def cross_counts(g: Graph, colouring) -> list[int]:
    return [
        sum(1 for w in g.adj[v] if colouring[w] != colouring[v]) for v in range(g.n)
    ]


def is_valid_dcut(g: Graph, colouring, d: int) -> bool:
    """Both colours present and every vertex within its crossing budget,
    recounted straight off the adjacency lists."""
    if set(colouring) != {BLUE, RED}:
        return False
    return max(cross_counts(g, colouring)) <= d


def all_dcuts(g: Graph, d: int):
    """Exhaustive list of valid colourings. Tiny graphs only."""
    found = []
    for bits in itertools.product((BLUE, RED), repeat=g.n):
        if is_valid_dcut(g, bits, d):
            found.append(bits)
    return found


def random_connected_graph(rng: random.Random, n: int, extra: int) -> Graph:
    """Random tree plus up to `extra` additional random edges."""
    edges = {tuple(sorted((rng.randrange(v), v))) for v in range(1, n)}
    pool = [
        (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges
    ]
    rng.shuffle(pool)
    edges.update(pool[:extra])
    return Graph(n, sorted(edges))


def bounded_degree_connected(rng: random.Random, n: int, cap: int, extra: int) -> Graph:
    """Random tree grown under a degree cap, plus extra edges under the cap."""
    deg = [0] * n
    edges = []
    for v in range(1, n):
        open_slots = [u for u in range(v) if deg[u] < cap]
        u = rng.choice(open_slots) if open_slots else rng.randrange(v)
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    have = set(edges)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in have]
    rng.shuffle(pool)
    added = 0
    for u, v in pool:
        if added == extra:
            break
        if deg[u] < cap and deg[v] < cap:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
            added += 1
    return Graph(n, sorted(edges))


def contains_pattern_oracle(g: Graph, pattern: Graph) -> bool:
    """Induced-subgraph check by trying every injection. Tiny inputs only."""
    verts = range(g.n)
    for image in itertools.permutations(verts, pattern.n):
        if all(
            g.has_edge(image[a], image[b]) == pattern.has_edge(a, b)
            for a in range(pattern.n)
            for b in range(a + 1, pattern.n)
        ):
            return True
    return False


def kcore_oracle(g: Graph, k: int) -> set[int]:
    """Iteratively strip vertices of degree < k; the fixed point is the
    unique maximal k-core."""
    alive = set(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in list(alive):
            if sum(1 for w in g.adj[v] if w in alive) < k:
                alive.discard(v)
                changed = True
    return alive


def nae_solutions(f):
    """Exhaustive reference: all non-constant assignments where every clause
    gets both a true and a false literal. Recomputed from the clause tuples."""
    sols = []
    for bits in itertools.product((False, True), repeat=f.n_vars):
        if all(bits) or not any(bits):
            continue
        if all(
            len({not bits[neg - 1], bits[p1 - 1], bits[p2 - 1]}) == 2
            for neg, p1, p2 in f.clauses
        ):
            sols.append(bits)
    return sols


def random_formula(rng, n_vars, m):
    """Random normalized formula with at least m clauses.

    A first sweep of overlapping clauses covers every variable and keeps the
    variable-clause incidence connected; the rest is random padding."""
    from dcut.sat import NaeFormula

    vs = list(range(1, n_vars + 1))
    rng.shuffle(vs)
    clauses = []
    i = 0
    while True:
        chunk = vs[i : i + 3]
        if len(chunk) < 3:
            pool = [v for v in range(1, n_vars + 1) if v not in chunk]
            chunk = chunk + rng.sample(pool, 3 - len(chunk))
        clauses.append(tuple(chunk))
        if i + 3 >= len(vs):
            break
        i += 2
    while len(clauses) < m:
        clauses.append(tuple(rng.sample(range(1, n_vars + 1), 3)))
    return NaeFormula(n_vars, tuple(clauses))
