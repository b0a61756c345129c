"""Not-all-equal 3-SAT with a non-constant restriction, and its encoding
into d-cut instances.

Formulas are kept in a normal form where every clause has exactly one
negated literal, stored as (negated var, positive var, positive var).
A clause with two negated literals is equivalent under the not-all-equal
semantics to its literal-wise complement, so the parser flips it; clauses
with zero or three negated literals are rejected.

An assignment is accepted only if it is non-constant (at least one true
and one false variable) on top of giving every clause both a true and a
false literal. That matches the two-sidedness of a cut exactly, which is
what makes the encoding an equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import BLUE, RED, Colouring
from .errors import CnfFormatError, ReductionError, SizeLimitError
from .gadgets import gen_h_gadget
from .graph import Graph

NAE_CEILING = 20  # exhaustive assignment search above this is pointless


@dataclass(frozen=True)
class NaeFormula:
    """Clauses are (neg, p1, p2): the first variable appears negated, the
    other two positive. Variables are numbered 1..n_vars and every one of
    them must occur somewhere."""

    n_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        if self.n_vars < 3:
            raise ValueError("need at least 3 variables")
        if not self.clauses:
            raise ValueError("need at least one clause")
        seen = set()
        for idx, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ValueError(f"clause {idx + 1} does not have 3 literals")
            for var in clause:
                if not (1 <= var <= self.n_vars):
                    raise ValueError(f"clause {idx + 1}: variable {var} out of range")
            if len(set(clause)) != 3:
                raise ValueError(f"clause {idx + 1} repeats a variable")
            seen.update(clause)
        for var in range(1, self.n_vars + 1):
            if var not in seen:
                raise ValueError(f"variable {var} never occurs")

    def occurrence_counts(self) -> list[int]:
        """counts[v-1] = number of clauses variable v appears in."""
        counts = [0] * self.n_vars
        for clause in self.clauses:
            for var in clause:
                counts[var - 1] += 1
        return counts


def parse_cnf(text: str | bytes) -> NaeFormula:
    """Parse DIMACS cnf with exactly three distinct literals per clause,
    one clause per line, each terminated by 0."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    n_vars = 0
    n_clauses = 0
    clauses: list[tuple[int, int, int]] = []
    saw_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if saw_header:
                raise CnfFormatError("duplicate header", lineno)
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise CnfFormatError("header must be 'p cnf <vars> <clauses>'", lineno)
            try:
                n_vars, n_clauses = int(fields[2]), int(fields[3])
            except ValueError:
                raise CnfFormatError("header counts must be integers", lineno) from None
            if n_vars < 1 or n_clauses < 1:
                raise CnfFormatError("header counts must be positive", lineno)
            saw_header = True
            continue
        if not saw_header:
            raise CnfFormatError("clause before header", lineno)
        try:
            lits = [int(tok) for tok in line.split()]
        except ValueError:
            raise CnfFormatError(f"unparseable clause line {line!r}", lineno) from None
        if not lits or lits[-1] != 0:
            raise CnfFormatError("clause line must end with 0", lineno)
        lits = lits[:-1]
        if len(lits) != 3 or any(l == 0 for l in lits):
            raise CnfFormatError("clause must have exactly 3 literals", lineno)
        if any(not (1 <= abs(l) <= n_vars) for l in lits):
            raise CnfFormatError("literal out of range", lineno)
        if len({abs(l) for l in lits}) != 3:
            raise CnfFormatError("clause repeats a variable", lineno)
        if len(clauses) == n_clauses:
            raise CnfFormatError(f"more than {n_clauses} clauses", lineno)
        negs = [-l for l in lits if l < 0]
        poss = [l for l in lits if l > 0]
        if len(negs) == 1:
            clauses.append((negs[0], poss[0], poss[1]))
        elif len(negs) == 2:
            # complementing every literal preserves not-all-equal
            clauses.append((poss[0], negs[0], negs[1]))
        else:
            raise CnfFormatError(
                f"clause has {len(negs)} negated literals, need 1 or 2", lineno
            )
    if not saw_header:
        raise CnfFormatError("missing 'p cnf' header", 1)
    if len(clauses) != n_clauses:
        raise CnfFormatError(
            f"expected {n_clauses} clauses, found {len(clauses)}", len(text.splitlines())
        )
    try:
        return NaeFormula(n_vars, tuple(clauses))
    except ValueError as exc:
        raise CnfFormatError(str(exc), 1) from None


def serialize_cnf(f: NaeFormula) -> str:
    lines = [f"p cnf {f.n_vars} {len(f.clauses)}"]
    for neg, p1, p2 in f.clauses:
        lines.append(f"-{neg} {p1} {p2} 0")
    return "\n".join(lines) + "\n"


def is_nae_satisfying(f: NaeFormula, assignment: tuple[bool, ...]) -> bool:
    """Every clause has a true and a false literal under the assignment."""
    if len(assignment) != f.n_vars:
        raise ValueError(f"assignment has {len(assignment)} values, need {f.n_vars}")
    for neg, p1, p2 in f.clauses:
        vals = (not assignment[neg - 1], assignment[p1 - 1], assignment[p2 - 1])
        if all(vals) or not any(vals):
            return False
    return True


def solve_nae01(f: NaeFormula) -> tuple[bool, ...] | None:
    """Exhaustive search for a non-constant satisfying assignment, in
    lexicographic order (x1 most significant, False before True)."""
    n = f.n_vars
    if n > NAE_CEILING:
        raise SizeLimitError(f"{n} variables exceeds the ceiling of {NAE_CEILING}")
    for mask in range(1, (1 << n) - 1):  # endpoints are the constant assignments
        assignment = tuple(bool((mask >> (n - v)) & 1) for v in range(1, n + 1))
        if is_nae_satisfying(f, assignment):
            return assignment
    return None


@dataclass(frozen=True)
class VariableGadget:
    """One rigid block per variable: vertices [start, stop), with one
    attachment vertex per clause occurrence listed in `free`. A variable
    with a single occurrence gets a two-slot block anyway (padded=True)
    and its second attachment vertex stays unused."""

    var: int
    start: int
    stop: int
    free: tuple[int, ...]
    padded: bool


@dataclass(frozen=True)
class ClauseGadget:
    index: int  # 0-based clause index
    vars: tuple[int, int, int]
    d1: tuple[int, ...]  # clique of size d, tied to the negated literal's side
    d2: tuple[int, ...]  # clique of size d+1
    centre: int
    attached: tuple[int, int, int]  # attachment vertices used, literal order


@dataclass(frozen=True)
class ReductionMap:
    d: int
    delta: int
    variables: tuple[VariableGadget, ...]
    clauses: tuple[ClauseGadget, ...]

    def to_json_dict(self, one_indexed: bool = True) -> dict:
        off = 1 if one_indexed else 0
        return {
            "d": self.d,
            "delta": self.delta,
            "variables": [
                {
                    "var": vg.var,
                    "first_vertex": vg.start + off,
                    "last_vertex": vg.stop - 1 + off,
                    "free": [w + off for w in vg.free],
                    "padded": vg.padded,
                }
                for vg in self.variables
            ],
            "clauses": [
                {
                    "clause": cg.index + 1,
                    "vars": list(cg.vars),
                    "d1": [x + off for x in cg.d1],
                    "d2": [x + off for x in cg.d2],
                    "centre": cg.centre + off,
                    "attached": [x + off for x in cg.attached],
                }
                for cg in self.clauses
            ],
        }


def _check_incidence_connected(f: NaeFormula):
    parent = list(range(f.n_vars + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for clause in f.clauses:
        roots = {find(v) for v in clause}
        keep = min(roots)
        for r in roots:
            parent[r] = keep
    if len({find(v) for v in range(1, f.n_vars + 1)}) != 1:
        raise ReductionError(
            "variable-clause incidence is disconnected; the output graph "
            "would be disconnected too"
        )


def reduce(f: NaeFormula, d: int, delta: int | None = None) -> tuple[Graph, ReductionMap]:
    """Encode the formula as a graph that has a d-cut exactly when the
    formula has a non-constant not-all-equal satisfying assignment.

    Each variable becomes a rigid ring gadget that any valid colouring
    must keep monochromatic; its colour is the truth value. Each clause
    becomes two cliques and a centre vertex wired to the attachment
    vertices of its three variables so that an all-equal clause forces
    some vertex over the crossing budget d.

    delta controls the ring gadgets' internal clique size; the output max
    degree equals delta, which must be at least 2d+3.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    if delta is None:
        delta = 2 * d + 3
    if delta < 2 * d + 3:
        raise ValueError(f"delta must be at least 2d+3 = {2 * d + 3}")
    _check_incidence_connected(f)

    counts = f.occurrence_counts()
    edges: list[tuple[int, int]] = []
    variables: list[VariableGadget] = []
    offset = 0
    for var in range(1, f.n_vars + 1):
        k = max(counts[var - 1], 2)
        block, labels = gen_h_gadget(d, k, delta - 1)
        for u, v in block.edges():
            edges.append((u + offset, v + offset))
        free = tuple(labels[f"w_{i}"][0] + offset for i in range(1, k + 1))
        variables.append(
            VariableGadget(
                var=var,
                start=offset,
                stop=offset + block.n,
                free=free,
                padded=counts[var - 1] < 2,
            )
        )
        offset += block.n

    cursor = [0] * f.n_vars  # next unused attachment vertex per variable
    clause_gadgets: list[ClauseGadget] = []
    for idx, (neg, p1, p2) in enumerate(f.clauses):
        d1 = tuple(range(offset, offset + d))
        d2 = tuple(range(offset + d, offset + 2 * d + 1))
        centre = offset + 2 * d + 1
        offset += 2 * d + 2
        for block in (d1, d2):
            for i in range(len(block)):
                for j in range(i + 1, len(block)):
                    edges.append((block[i], block[j]))
        for u in d1:
            for v in d2:
                edges.append((u, v))
            edges.append((u, centre))
        taps = []
        for var in (neg, p1, p2):
            vg = variables[var - 1]
            taps.append(vg.free[cursor[var - 1]])
            cursor[var - 1] += 1
        w1, w2, w3 = taps
        for u in d1:
            edges.append((min(w1, u), max(w1, u)))
        edges.append((min(w1, centre), max(w1, centre)))
        for u in d2:
            edges.append((min(w2, u), max(w2, u)))
        edges.append((min(w3, centre), max(w3, centre)))
        clause_gadgets.append(
            ClauseGadget(
                index=idx, vars=(neg, p1, p2), d1=d1, d2=d2, centre=centre,
                attached=(w1, w2, w3),
            )
        )

    graph = Graph(offset, edges)
    rmap = ReductionMap(
        d=d, delta=delta, variables=tuple(variables), clauses=tuple(clause_gadgets)
    )
    return graph, rmap


def assignment_to_colouring(
    f: NaeFormula, rmap: ReductionMap, assignment: tuple[bool, ...]
) -> Colouring:
    """Colour the reduced graph from a satisfying assignment. Variable
    blocks get their truth colour; each clause's cliques follow the first
    positive literal's variable and the centre follows the negated one."""
    if len(assignment) != f.n_vars:
        raise ValueError(f"assignment has {len(assignment)} values, need {f.n_vars}")
    if all(assignment) or not any(assignment):
        raise ValueError("assignment is constant, colouring would be one-sided")
    if not is_nae_satisfying(f, assignment):
        raise ValueError("assignment does not satisfy the formula")
    n = rmap.clauses[-1].centre + 1
    col: list[str] = [""] * n
    for vg in rmap.variables:
        colour = BLUE if assignment[vg.var - 1] else RED
        for v in range(vg.start, vg.stop):
            col[v] = colour
    for cg in rmap.clauses:
        neg, p1, _ = cg.vars
        side = BLUE if assignment[p1 - 1] else RED
        for v in cg.d1 + cg.d2:
            col[v] = side
        col[cg.centre] = BLUE if assignment[neg - 1] else RED
    return tuple(col)


def colouring_to_assignment(
    f: NaeFormula, rmap: ReductionMap, colouring: Colouring
) -> tuple[bool, ...]:
    """Read the assignment back off a d-cut of the reduced graph."""
    n = rmap.clauses[-1].centre + 1
    if len(colouring) != n:
        raise ValueError(f"colouring has {len(colouring)} entries, need {n}")
    assignment = []
    for vg in rmap.variables:
        seen = {colouring[v] for v in range(vg.start, vg.stop)}
        if len(seen) != 1 or not seen <= {BLUE, RED}:
            raise ValueError(
                f"variable block {vg.var} is not monochromatic, "
                "not a valid colouring of the reduction"
            )
        assignment.append(seen.pop() == BLUE)
    result = tuple(assignment)
    if all(result) or not any(result):
        raise ValueError(
            "all variable blocks share one colour, not a valid colouring "
            "of the reduction"
        )
    if not is_nae_satisfying(f, result):
        raise ValueError(
            "decoded assignment leaves a clause all-equal, not a valid "
            "colouring of the reduction"
        )
    return result
