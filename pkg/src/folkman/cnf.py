"""CNF encoding of 2-color edge-arrowing instances for external SAT solvers.

The formula is satisfiable iff a free coloring exists.  One variable per
edge; true means color 1 (blue).  Color 1 carries the smaller clique size in
our instances, so the short clauses come out all-negative, which solver
preprocessors recognize well.  Solving stays out of process: this module
only writes DIMACS, reads models back, and re-verifies them.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

from .graphs import Graph, edges, enumerate_cliques
from .arrowing import ArrowSpec, EdgeColoring, is_free_edge_coloring


class CnfError(ValueError):
    """Malformed formula, DIMACS text, or model."""


@dataclass
class CnfFormula:
    num_vars: int
    clauses: list[list[int]]
    comments: list[str] = field(default_factory=list)

    def validate(self):
        for cl in self.clauses:
            if not cl:
                raise CnfError("empty clause")
            for lit in cl:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise CnfError(f"literal {lit} out of range for "
                                   f"{self.num_vars} variables")

    def __eq__(self, other):
        if not isinstance(other, CnfFormula):
            return NotImplemented
        return self.num_vars == other.num_vars and self.clauses == other.clauses


def edge_variable_map(g: Graph) -> dict[tuple[int, int], int]:
    """Edge (u,v), u<v, lexicographic -> DIMACS variable, numbered from 1."""
    return {e: i + 1 for i, e in enumerate(edges(g))}


def encode_edge_arrowing(g: Graph, spec: ArrowSpec) -> CnfFormula:
    """One clause per forbidden clique: all-blue forbidden for size a_1
    (all literals negative), all-red forbidden for size a_2 (all positive).
    Clause order follows the lexicographic clique enumeration, so two
    encodings of the same instance are identical."""
    if spec.r != 2:
        raise CnfError("CNF encoding supports 2-color specs only")
    var = edge_variable_map(g)
    a1, a2 = spec.sizes
    clauses: list[list[int]] = []
    for clique in enumerate_cliques(g, a1):
        clauses.append([-var[(clique[x], clique[y])]
                        for x in range(len(clique))
                        for y in range(x + 1, len(clique))])
    for clique in enumerate_cliques(g, a2):
        clauses.append([var[(clique[x], clique[y])]
                        for x in range(len(clique))
                        for y in range(x + 1, len(clique))])
    comments = [
        f"graph {g.label or 'unlabeled'} n={g.n} m={g.edge_count}",
        f"spec {spec} (true = color 1 = blue, false = color 2 = red)",
        "satisfiable iff a free edge coloring exists",
    ]
    comments += [f"edge {i} {u} {v}" for (u, v), i in var.items()]
    f = CnfFormula(len(var), clauses, comments)
    f.validate()
    return f


def emit_dimacs(f: CnfFormula) -> str:
    f.validate()
    lines = [f"c {c}" for c in f.comments]
    lines.append(f"p cnf {f.num_vars} {len(f.clauses)}")
    lines += [" ".join(map(str, cl)) + " 0" for cl in f.clauses]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    comments: list[str] = []
    clauses: list[list[int]] = []
    num_vars = num_clauses = None
    pending: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith("c"):
            comments.append(line[2:] if line.startswith("c ") else line[1:])
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"malformed problem line: {line!r}")
            num_vars, num_clauses = int(parts[2]), int(parts[3])
            continue
        if num_vars is None:
            raise CnfError("clause before problem line")
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(pending)
                pending = []
            else:
                pending.append(lit)
    if pending:
        raise CnfError("trailing clause not terminated by 0")
    if num_vars is None:
        raise CnfError("missing problem line")
    if len(clauses) != num_clauses:
        raise CnfError(f"header promises {num_clauses} clauses, found {len(clauses)}")
    f = CnfFormula(num_vars, clauses, comments)
    f.validate()
    return f


def parse_model(text: str) -> list[int]:
    """SAT-competition model output: literals from 'v ' lines, 0-terminated."""
    lits: list[int] = []
    done = False
    for line in text.splitlines():
        line = line.strip()
        if not line.startswith("v"):
            continue
        for tok in line[1:].split():
            lit = int(tok)
            if lit == 0:
                done = True
                break
            lits.append(lit)
        if done:
            break
    if not lits:
        raise CnfError("no 'v' model lines found")
    return lits


def decode_model(g: Graph, spec: ArrowSpec, model) -> EdgeColoring:
    """Rebuild the edge coloring a model encodes and re-verify it.

    A model that decodes to a non-free coloring means the encoder and the
    solver disagree about the formula; that is an error, never a witness.
    """
    if spec.r != 2:
        raise CnfError("decoding supports 2-color specs only")
    var = edge_variable_map(g)
    assignment: dict[int, bool] = {}
    for lit in model:
        if lit == 0:
            continue
        assignment[abs(lit)] = lit > 0
    missing = [i for i in range(1, len(var) + 1) if i not in assignment]
    if missing:
        raise CnfError(f"model leaves variables unassigned: {missing[:5]}")
    colors = tuple(1 if assignment[var[e]] else 2 for e in edges(g))
    coloring = EdgeColoring(g, colors)
    ok, violation = is_free_edge_coloring(g, spec, coloring)
    if not ok:
        raise CnfError(
            f"model decodes to a non-free coloring: clique {violation[1]} is "
            f"monochromatic in color {violation[0]} (encoder/solver inconsistency)")
    return coloring


def dimacs_sha256(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()
