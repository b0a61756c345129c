"""Red-blue colourings, the d-cut verifier, forced-colour propagation and
monochromatic block detection.

A d-cut of a connected graph is a partition into non-empty sides Blue/Red
where every vertex has at most d neighbours on the other side. Colourings
are tuples of "B"/"R" indexed by vertex; partial colourings use None for
uncoloured vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import GraphFormatError
from .graph import Graph, boundary

BLUE = "B"
RED = "R"

Colouring = tuple[str, ...]
PartialColouring = list  # entries BLUE / RED / None


def parse_colouring(text: str | bytes, n: int) -> Colouring:
    """Parse 'v <id> <R|B>' lines (1-indexed). Must be total: every vertex
    exactly once."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    out: list[Optional[str]] = [None] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] != "v" or len(tok) != 3:
            raise GraphFormatError("colouring line must be 'v <id> <R|B>'", lineno)
        try:
            v = int(tok[1])
        except ValueError:
            raise GraphFormatError("vertex id must be an integer", lineno) from None
        if not (1 <= v <= n):
            raise GraphFormatError(f"vertex id out of range 1..{n}", lineno)
        if tok[2] not in (RED, BLUE):
            raise GraphFormatError(f"colour must be R or B, got {tok[2]!r}", lineno)
        if out[v - 1] is not None:
            raise GraphFormatError(f"duplicate colour for vertex {v}", lineno)
        out[v - 1] = tok[2]
    missing = [i + 1 for i, c in enumerate(out) if c is None]
    if missing:
        raise GraphFormatError(f"missing colour for vertex {missing[0]}")
    return tuple(out)  # type: ignore[arg-type]


def serialize_colouring(c: Sequence[str]) -> str:
    return "\n".join(f"v {i + 1} {col}" for i, col in enumerate(c)) + "\n"


@dataclass(frozen=True)
class DCutCertificate:
    """A checked d-cut: the two sides and the crossing edge set."""

    d: int
    blue: frozenset[int]
    red: frozenset[int]
    crossing: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("d must be >= 1")
        if not self.blue or not self.red:
            raise ValueError("both sides must be non-empty")
        if self.blue & self.red:
            raise ValueError("sides must be disjoint")

    def colouring(self) -> Colouring:
        n = len(self.blue) + len(self.red)
        return tuple(BLUE if v in self.blue else RED for v in range(n))


@dataclass(frozen=True)
class VerifyFailure:
    """Why a colouring is not a d-cut: 'no-red', 'no-blue', or 'cross-degree'
    with the first offending vertex (smallest id) and its cross count."""

    kind: str
    vertex: Optional[int] = None
    count: Optional[int] = None

    def message(self, one_indexed: bool = False) -> str:
        if self.kind == "no-red":
            return "no red vertex"
        if self.kind == "no-blue":
            return "no blue vertex"
        v = self.vertex + 1 if one_indexed else self.vertex
        return f"vertex {v} has {self.count} neighbours of the other colour"


def verify(g: Graph, c: Sequence[str], d: int):
    """Check c is a red-blue d-colouring of g; return a DCutCertificate or a
    VerifyFailure naming the first violated constraint."""
    if d < 1:
        raise ValueError("d must be >= 1")
    if len(c) != g.n:
        raise ValueError(f"colouring has {len(c)} entries for {g.n} vertices")
    for v, col in enumerate(c):
        if col not in (RED, BLUE):
            raise ValueError(f"vertex {v}: colour must be {RED!r} or {BLUE!r}")
    blue = frozenset(v for v in range(g.n) if c[v] == BLUE)
    if len(blue) == g.n:
        return VerifyFailure("no-red")
    if not blue:
        return VerifyFailure("no-blue")
    for v in range(g.n):
        cross = sum(1 for w in g.adj[v] if c[w] != c[v])
        if cross > d:
            return VerifyFailure("cross-degree", vertex=v, count=cross)
    return DCutCertificate(
        d=d,
        blue=blue,
        red=frozenset(range(g.n)) - blue,
        crossing=tuple(boundary(g, blue)),
    )


def propagate(g: Graph, partial: Sequence[Optional[str]], d: int):
    """Close a partial colouring under the forcing rule: a vertex with at
    least d+1 neighbours of one colour must take that colour.

    Returns (extended, conflict). conflict is True iff some vertex is forced
    to both colours or an already-coloured vertex ends up with more than d
    cross-coloured neighbours. The input is never shrunk.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if len(partial) != g.n:
        raise ValueError(f"partial colouring has {len(partial)} entries for {g.n} vertices")
    col: list[Optional[str]] = list(partial)
    nblue = [0] * g.n
    nred = [0] * g.n
    queue = deque(v for v in range(g.n) if col[v] is not None)
    conflict = False
    while queue and not conflict:
        u = queue.popleft()
        cu = col[u]
        for w in g.adj[u]:
            if cu == BLUE:
                nblue[w] += 1
            else:
                nred[w] += 1
            cw = col[w]
            if cw is None:
                if nblue[w] > d:
                    col[w] = BLUE
                    queue.append(w)
                elif nred[w] > d:
                    col[w] = RED
                    queue.append(w)
            else:
                opp = nred[w] if cw == BLUE else nblue[w]
                if opp > d:
                    conflict = True
                    break
    return col, conflict


def _maximal_clique_through(g: Graph, u: int, v: int) -> list[int]:
    # Greedy extension by smallest id among common neighbours.
    clique = [u, v]
    cand = sorted(g._adj_sets[u] & g._adj_sets[v])
    while cand:
        w = cand[0]
        clique.append(w)
        ws = g._adj_sets[w]
        cand = [x for x in cand[1:] if x in ws]
    return clique


def clique_blocks(g: Graph, d: int) -> list[tuple[int, ...]]:
    """Partition the vertices into blocks that are monochromatic in every
    red-blue d-colouring.

    Seeds: greedy maximal cliques of size >= 2d+1 (such cliques can never be
    split). Closure: a vertex with >= d+1 neighbours inside a block always
    follows that block's colour, so its block merges in; repeat to a fixed
    point. Blocks are sorted tuples, listed by smallest member.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for u, v in g.edges():
        clique = _maximal_clique_through(g, u, v)
        if len(clique) >= 2 * d + 1:
            for x in clique[1:]:
                union(clique[0], x)

    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            counts: dict[int, int] = {}
            for w in g.adj[v]:
                r = find(w)
                counts[r] = counts.get(r, 0) + 1
            rv = find(v)
            for r, cnt in counts.items():
                if r != rv and cnt >= d + 1:
                    union(v, r)
                    rv = find(v)
                    changed = True

    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted((tuple(sorted(vs)) for vs in groups.values()), key=lambda b: b[0])
