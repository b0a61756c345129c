"""Exact d-cut deciders: exhaustive enumeration and branch-and-propagate."""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .colouring import BLUE, RED, Colouring, DCutCertificate, clique_blocks, verify
from .errors import PreconditionError, ResourceExceeded, SizeLimitError
from .graph import Graph, is_connected

NAIVE_CEILING = 25
DEFAULT_MAX_NODES = 10_000_000
DEFAULT_TIME_BUDGET = 60.0


@dataclass(frozen=True)
class SolveStats:
    branch_nodes: int = 0
    propagation_steps: int = 0


@dataclass(frozen=True)
class SolveOutcome:
    has_dcut: bool
    witness: Optional[Colouring]
    stats: SolveStats


def _require_connected(g: Graph):
    if not is_connected(g):
        raise PreconditionError("connectivity", "input graph must be connected")


def solve_naive(g: Graph, d: int) -> SolveOutcome:
    """Try all 2^(n-1) colourings with vertex 0 pinned Blue; return the
    lexicographically first valid one (Blue < Red, vertex order)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    _require_connected(g)
    n = g.n
    if n < 2:
        raise PreconditionError("size", "need at least 2 vertices")
    if n > NAIVE_CEILING:
        raise SizeLimitError(f"naive solver limited to {NAIVE_CEILING} vertices, got {n}")

    # Bit n-1-v stands for vertex v, so increasing mask order is exactly
    # lexicographic order on (c(1), ..., c(n-1)) with Blue=0.
    adjm = [0] * n
    for u, v in g.edges():
        adjm[u] |= 1 << (n - 1 - v)
        adjm[v] |= 1 << (n - 1 - u)
    full = (1 << n) - 1
    tried = 0
    for mask in range(1, 1 << (n - 1)):
        tried += 1
        blue = full ^ mask
        ok = True
        for v in range(n):
            cross = adjm[v] & (blue if (mask >> (n - 1 - v)) & 1 else mask)
            if cross.bit_count() > d:
                ok = False
                break
        if ok:
            witness = tuple(
                RED if (mask >> (n - 1 - v)) & 1 else BLUE for v in range(n)
            )
            assert isinstance(verify(g, witness, d), DCutCertificate)
            return SolveOutcome(True, witness, SolveStats(branch_nodes=tried))
    return SolveOutcome(False, None, SolveStats(branch_nodes=tried))


def solve_bp(
    g: Graph,
    d: int,
    max_nodes: int = DEFAULT_MAX_NODES,
    time_budget: float = DEFAULT_TIME_BUDGET,
) -> SolveOutcome:
    """Branch-and-propagate decider.

    Vertices are grouped into clique_blocks (monochromatic in every valid
    colouring), the largest block is pinned Blue (colour-swap symmetry),
    and the search branches block-wise, propagating forced colours and
    pruning on conflicts. Raises ResourceExceeded past the node or time
    budget, with partial stats attached.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    _require_connected(g)
    blocks = clique_blocks(g, d)
    nb = len(blocks)
    if nb == 1:
        # Everything is forced into one colour class; no cut can exist.
        return SolveOutcome(False, None, SolveStats())

    bidx = [0] * g.n
    for i, blk in enumerate(blocks):
        for v in blk:
            bidx[v] = i
    pinned = max(range(nb), key=lambda i: (len(blocks[i]), -blocks[i][0]))

    col: list[Optional[str]] = [None] * g.n
    bcol: list[Optional[str]] = [None] * nb
    nblue = [0] * g.n
    nred = [0] * g.n
    vtrail: list[int] = []
    btrail: list[int] = []
    ctrail: list[tuple[int, str]] = []  # counter bumps, for exact reversal
    nodes = 0
    props = 0
    deadline = time.monotonic() + time_budget

    def paint(b: int, colour: str, forced: bool) -> bool:
        """Colour block b and run propagation; False on conflict."""
        queue: deque[int] = deque()

        def set_block(bb: int, cc: str, is_forced: bool) -> bool:
            nonlocal props
            if bcol[bb] is not None:
                return bcol[bb] == cc
            bcol[bb] = cc
            btrail.append(bb)
            for v in blocks[bb]:
                col[v] = cc
                vtrail.append(v)
                queue.append(v)
                if is_forced:
                    props += 1
                own_cross = nred[v] if cc == BLUE else nblue[v]
                if own_cross > d:
                    return False
            return True

        if not set_block(b, colour, forced):
            return False
        while queue:
            u = queue.popleft()
            cu = col[u]
            for w in g.adj[u]:
                if cu == BLUE:
                    nblue[w] += 1
                else:
                    nred[w] += 1
                ctrail.append((w, cu))
                cw = col[w]
                if cw is None:
                    if nblue[w] > d:
                        if not set_block(bidx[w], BLUE, True):
                            return False
                    elif nred[w] > d:
                        if not set_block(bidx[w], RED, True):
                            return False
                elif (nred[w] if cw == BLUE else nblue[w]) > d:
                    return False
        return True

    def undo(vmark: int, bmark: int, cmark: int):
        while len(ctrail) > cmark:
            w, cc = ctrail.pop()
            if cc == BLUE:
                nblue[w] -= 1
            else:
                nred[w] -= 1
        while len(vtrail) > vmark:
            col[vtrail.pop()] = None
        while len(btrail) > bmark:
            bcol[btrail.pop()] = None

    def pick_block() -> Optional[int]:
        best = None
        best_pressure = -1
        for i in range(nb):
            if bcol[i] is None:
                pressure = sum(nblue[v] + nred[v] for v in blocks[i])
                if pressure > best_pressure:
                    best, best_pressure = i, pressure
        return best

    def stats() -> SolveStats:
        return SolveStats(branch_nodes=nodes, propagation_steps=props)

    def dfs() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise ResourceExceeded(f"branch node limit {max_nodes} exceeded", stats())
        if time.monotonic() > deadline:
            raise ResourceExceeded(f"time budget {time_budget}s exceeded", stats())
        b = pick_block()
        if b is None:
            # Leaf. The pinned block is Blue, so monochromatic == all Blue.
            return any(c == RED for c in bcol)
        for colour in (BLUE, RED):
            vmark, bmark, cmark = len(vtrail), len(btrail), len(ctrail)
            if paint(b, colour, forced=False) and dfs():
                return True
            undo(vmark, bmark, cmark)
        return False

    if paint(pinned, BLUE, forced=False) and dfs():
        witness = tuple(col)  # type: ignore[arg-type]
        assert isinstance(verify(g, witness, d), DCutCertificate)
        return SolveOutcome(True, witness, stats())
    return SolveOutcome(False, None, stats())
