"""Vertex and edge arrowing decisions by pruned backtracking search.

G arrows (a_1,...,a_r) on edges iff no r-coloring of E(G) avoids a
monochromatic a_i-clique in every color i; a coloring that does avoid them
all is "free".  The searches here are exhaustive (a verdict of Arrows is
only reported after the whole tree is exhausted); budgets turn into an
explicit BudgetExhausted verdict, never a wrong answer.
"""
from __future__ import annotations

import concurrent.futures
import enum
import sys
import time
from dataclasses import dataclass, field

from .graphs import Graph, edges, enumerate_cliques, find_clique, has_clique, mask_of, max_clique


class ColoringError(ValueError):
    """Partial or out-of-range coloring."""


@dataclass(frozen=True)
class ArrowSpec:
    """Clique sizes (a_1,...,a_r) to avoid, one per color; colors are 1-based."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= len(self.sizes) <= 4:
            raise ValueError(f"spec arity {len(self.sizes)} outside 1..4")
        if any(a < 2 for a in self.sizes):
            raise ValueError(f"all clique sizes must be >= 2, got {self.sizes}")

    @property
    def r(self) -> int:
        return len(self.sizes)

    @staticmethod
    def parse(text: str) -> "ArrowSpec":
        return ArrowSpec(tuple(int(t) for t in text.split(",")))

    def __str__(self):
        return ",".join(map(str, self.sizes))


@dataclass(frozen=True)
class EdgeColoring:
    """Total color assignment on E(host), aligned to the canonical edge list."""

    host: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.host.edge_count:
            raise ColoringError(
                f"{len(self.colors)} colors for {self.host.edge_count} edges")

    def color_of(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        try:
            return self.colors[edges(self.host).index(e)]
        except ValueError:
            raise ColoringError(f"({u},{v}) is not an edge") from None

    def to_json_obj(self) -> list[list[int]]:
        return [[u, v, c] for (u, v), c in zip(edges(self.host), self.colors)]

    @staticmethod
    def from_pairs(host: Graph, triples) -> "EdgeColoring":
        want = {e: None for e in edges(host)}
        for u, v, c in triples:
            e = (u, v) if u < v else (v, u)
            if e not in want:
                raise ColoringError(f"({u},{v}) is not an edge of the host")
            want[e] = c
        missing = [e for e, c in want.items() if c is None]
        if missing:
            raise ColoringError(f"edges left uncolored: {missing[:5]}...")
        return EdgeColoring(host, tuple(want[e] for e in edges(host)))


@dataclass(frozen=True)
class VertexColoring:
    """Total color assignment on V(host)."""

    host: Graph
    colors: tuple[int, ...]

    def __post_init__(self):
        if len(self.colors) != self.host.n:
            raise ColoringError(f"{len(self.colors)} colors for {self.host.n} vertices")


class Verdict(enum.Enum):
    ARROWS = "arrows"
    FREE_COLORING = "free-coloring"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass
class SearchStats:
    nodes: int = 0
    prunings: dict[str, int] = field(default_factory=dict)
    seconds: float = 0.0

    def bump(self, cause: str):
        self.prunings[cause] = self.prunings.get(cause, 0) + 1

    def merge(self, other: "SearchStats"):
        self.nodes += other.nodes
        for k, v in other.prunings.items():
            self.prunings[k] = self.prunings.get(k, 0) + v
        self.seconds = max(self.seconds, other.seconds)


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int | None = None
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes <= 0:
            raise ValueError("max_nodes must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


@dataclass
class SearchOutcome:
    verdict: Verdict
    witness: EdgeColoring | VertexColoring | None
    stats: SearchStats

    def to_json_obj(self) -> dict:
        obj = {
            "verdict": self.verdict.value,
            "stats": {
                "nodes": self.stats.nodes,
                "prunings": self.stats.prunings,
                "seconds": round(self.stats.seconds, 3),
            },
        }
        if isinstance(self.witness, EdgeColoring):
            obj["witness"] = {"kind": "edges", "coloring": self.witness.to_json_obj()}
        elif isinstance(self.witness, VertexColoring):
            obj["witness"] = {"kind": "vertices", "coloring": list(self.witness.colors)}
        return obj


# --- free-coloring verification ---------------------------------------------

def _check_colors(spec: ArrowSpec, colors):
    for c in colors:
        if not 1 <= c <= spec.r:
            raise ColoringError(f"color {c} outside 1..{spec.r}")


def is_free_vertex_coloring(g: Graph, spec: ArrowSpec, c: VertexColoring):
    """(True, None) if no color class induces a forbidden clique, else
    (False, (color, clique))."""
    if c.host is not g and c.host != g:
        raise ColoringError("coloring belongs to a different graph")
    _check_colors(spec, c.colors)
    for i, a in enumerate(spec.sizes, start=1):
        mask = mask_of(v for v in range(g.n) if c.colors[v] == i)
        clique = find_clique(g, mask, a)
        if clique is not None:
            return False, (i, clique)
    return True, None


def is_free_edge_coloring(g: Graph, spec: ArrowSpec, c: EdgeColoring):
    """(True, None) if no color class contains all edges of a forbidden
    clique, else (False, (color, clique))."""
    if c.host is not g and c.host != g:
        raise ColoringError("coloring belongs to a different graph")
    _check_colors(spec, c.colors)
    col = {e: k for e, k in zip(edges(g), c.colors)}
    for i, a in enumerate(spec.sizes, start=1):
        for clique in enumerate_cliques(g, a):
            if all(col[(clique[x], clique[y])] == i
                   for x in range(len(clique)) for y in range(x + 1, len(clique))):
                return False, (i, clique)
    return True, None


# --- Ramsey registry and derived pruning bounds ------------------------------

_RAMSEY = {(3, 3): 6, (3, 4): 9, (3, 5): 14}


def ramsey_known(s: int, t: int) -> int | None:
    """Classical two-color Ramsey values the bounds rely on; None if unknown here."""
    if s > t:
        s, t = t, s
    if s == 1:
        return 1
    if s == 2:
        return t
    return _RAMSEY.get((s, t))


def neighborhood_clique_bounds(spec: ArrowSpec) -> tuple[int, int] | None:
    """Per-color caps on cl(G[N_i(v)]) that any free 2-coloring must obey.

    A clique of size R(a_1-1, a_2) inside v's color-1 neighborhood forces a
    monochromatic clique no matter how its edges end up colored (a color-1
    edge closes an a_1-clique through v; otherwise the clique is a color-2
    a_2-clique), and symmetrically for color 2.  Returns None when a needed
    Ramsey value is missing from the registry; the search then simply runs
    without this pruning.
    """
    if spec.r != 2:
        raise ValueError("neighborhood bounds are defined for 2-color specs only")
    a1, a2 = spec.sizes
    r1 = ramsey_known(a1 - 1, a2)
    r2 = ramsey_known(a1, a2 - 1)
    if r1 is None or r2 is None:
        return None
    return r1 - 1, r2 - 1


# --- vertex arrowing ----------------------------------------------------------

def arrows_vertices(g: Graph, spec: ArrowSpec,
                    budget: SearchBudget | None = None) -> SearchOutcome:
    """Exhaustive backtracking over vertex colorings.

    Vertices are assigned in descending-degree order (ties by index); a branch
    dies as soon as the newest vertex completes a forbidden clique in its
    color class.
    """
    order = sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v))
    stats = SearchStats()
    start = time.monotonic()
    colors = [0] * g.n
    class_mask = [0] * (spec.r + 1)
    adj = g.adj

    def over_budget() -> bool:
        if budget is None:
            return False
        if budget.max_nodes is not None and stats.nodes >= budget.max_nodes:
            return True
        return (budget.max_seconds is not None
                and stats.nodes % 1024 == 0
                and time.monotonic() - start > budget.max_seconds)

    FOUND, EXHAUSTED, STOPPED = 0, 1, 2
    found: list[int] = []

    def rec(depth: int) -> int:
        if depth == g.n:
            found[:] = colors  # snapshot before the unwind resets it
            return FOUND
        v = order[depth]
        for i, a in enumerate(spec.sizes, start=1):
            stats.nodes += 1
            if over_budget():
                return STOPPED
            if has_clique(g, class_mask[i] & adj[v], a - 1):
                stats.bump("clique")
                continue
            colors[v] = i
            class_mask[i] |= 1 << v
            res = rec(depth + 1)
            class_mask[i] &= ~(1 << v)
            colors[v] = 0
            if res != EXHAUSTED:
                return res
        return EXHAUSTED

    res = rec(0)
    stats.seconds = time.monotonic() - start
    if res == FOUND:
        witness = VertexColoring(g, tuple(found))
        ok, _ = is_free_vertex_coloring(g, spec, witness)
        assert ok, "search produced a non-free witness"
        return SearchOutcome(Verdict.FREE_COLORING, witness, stats)
    if res == STOPPED:
        return SearchOutcome(Verdict.BUDGET_EXHAUSTED, None, stats)
    return SearchOutcome(Verdict.ARROWS, None, stats)


# --- edge arrowing ------------------------------------------------------------

def _static_edge_order(g: Graph) -> list[int]:
    # Edges inside the densest clique regions first: sort by how many maximum
    # cliques contain each edge, descending; ties lexicographic.  Completes
    # monochromatic-clique constraints as early as possible.
    elist = edges(g)
    idx = {e: i for i, e in enumerate(elist)}
    count = [0] * len(elist)
    w = len(max_clique(g))
    for clique in enumerate_cliques(g, w):
        for x in range(len(clique)):
            for y in range(x + 1, len(clique)):
                count[idx[(clique[x], clique[y])]] += 1
    return sorted(range(len(elist)), key=lambda i: (-count[i], elist[i]))


def _edge_search(g: Graph, spec: ArrowSpec, budget: SearchBudget | None,
                 neighborhood_pruning: bool, fixed: tuple[tuple[int, int], ...],
                 progress_every: int = 0):
    """Sequential backtracking core.  `fixed` pre-assigns (edge-index, color)
    pairs (used for parallel work splitting).  Returns (result, colors, stats)
    where result is 'found' | 'exhausted' | 'stopped'."""
    elist = edges(g)
    m = len(elist)
    order = _static_edge_order(g)
    pos = {e: i for i, e in enumerate(elist)}

    # Per color: for every clique of the forbidden size, the bitmask of its
    # edge indices; indexed by edge for fast "does this assignment complete a
    # monochromatic clique" checks.
    by_edge: list[dict[int, list[int]]] = [dict() for _ in range(spec.r + 1)]
    for i, a in enumerate(spec.sizes, start=1):
        for clique in enumerate_cliques(g, a):
            cm = 0
            eids = []
            for x in range(len(clique)):
                for y in range(x + 1, len(clique)):
                    eid = pos[(clique[x], clique[y])]
                    cm |= 1 << eid
                    eids.append(eid)
            for eid in eids:
                by_edge[i].setdefault(eid, []).append(cm)

    bounds = None
    if neighborhood_pruning and spec.r == 2:
        bounds = neighborhood_clique_bounds(spec)

    symmetric = len(set(spec.sizes)) == 1
    colors = [0] * m
    color_mask = [0] * (spec.r + 1)
    nbr = [[0] * g.n for _ in range(spec.r + 1)]
    stats = SearchStats()
    start = time.monotonic()
    fixed_map = dict(fixed)
    found: list[int] = []

    def over_budget() -> bool:
        if budget is None:
            return False
        if budget.max_nodes is not None and stats.nodes >= budget.max_nodes:
            return True
        return (budget.max_seconds is not None
                and stats.nodes % 1024 == 0
                and time.monotonic() - start > budget.max_seconds)

    def rec(depth: int) -> str:
        if depth == m:
            found[:] = colors  # snapshot before the unwind resets it
            return "found"
        eid = order[depth]
        u, v = elist[eid]
        if eid in fixed_map:
            choices = (fixed_map[eid],)
        elif symmetric and depth == 0 and not fixed_map:
            # All forbidden sizes equal: colors are interchangeable, so fixing
            # the first edge's color halves the tree without losing verdicts.
            choices = (1,)
        else:
            choices = range(1, spec.r + 1)
        bit = 1 << eid
        for c in choices:
            stats.nodes += 1
            if progress_every and stats.nodes % progress_every == 0:
                print(f"progress nodes={stats.nodes} depth={depth} "
                      f"prunings={stats.prunings}", file=sys.stderr)
            if over_budget():
                return "stopped"
            new_mask = color_mask[c] | bit
            if any(cm & ~new_mask == 0 for cm in by_edge[c].get(eid, ())):
                stats.bump("clique")
                continue
            if bounds is not None:
                b = bounds[c - 1]
                nu = nbr[c][u] | 1 << v
                nv = nbr[c][v] | 1 << u
                if ((nu.bit_count() > b and has_clique(g, nu, b + 1))
                        or (nv.bit_count() > b and has_clique(g, nv, b + 1))):
                    stats.bump("neighborhood")
                    continue
            colors[eid] = c
            color_mask[c] = new_mask
            nbr[c][u] |= 1 << v
            nbr[c][v] |= 1 << u
            res = rec(depth + 1)
            nbr[c][u] &= ~(1 << v)
            nbr[c][v] &= ~(1 << u)
            color_mask[c] &= ~bit
            colors[eid] = 0
            if res != "exhausted":
                return res
        return "exhausted"

    res = rec(0)
    stats.seconds = time.monotonic() - start
    return res, tuple(found if res == "found" else colors), stats


def _branch_worker(args):
    g, spec, budget, pruning, fixed = args
    return _edge_search(g, spec, budget, pruning, fixed)


def arrows_edges(g: Graph, spec: ArrowSpec, budget: SearchBudget | None = None,
                 workers: int = 1, neighborhood_pruning: bool = True,
                 progress_every: int = 0) -> SearchOutcome:
    """Exhaustive pruned backtracking over edge colorings.

    Assigns one edge per node in a static order, pruning any branch that
    completes a monochromatic forbidden clique and (for 2-color specs) any
    branch whose forced same-color neighborhood already contains a clique
    beyond the Ramsey-derived cap.  With workers > 1 the tree is split at the
    first edge's color choices; single-worker runs are fully deterministic.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or spec.r == 1:
        res, colors, stats = _edge_search(
            g, spec, budget, neighborhood_pruning, (), progress_every)
        return _edge_outcome(g, spec, res, colors, stats)

    sys.setrecursionlimit(10_000)
    first = _static_edge_order(g)[0]
    ncolors = 1 if len(set(spec.sizes)) == 1 else spec.r
    jobs = [(g, spec, budget, neighborhood_pruning, ((first, c),))
            for c in range(1, ncolors + 1)]
    total = SearchStats()
    results = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        for res, colors, stats in pool.map(_branch_worker, jobs):
            total.merge(stats)
            results.append((res, colors))
    for res, colors in results:  # lowest branch first: stable aggregation
        if res == "found":
            return _edge_outcome(g, spec, res, colors, total)
    if any(res == "stopped" for res, _ in results):
        return SearchOutcome(Verdict.BUDGET_EXHAUSTED, None, total)
    return SearchOutcome(Verdict.ARROWS, None, total)


def _edge_outcome(g, spec, res, colors, stats) -> SearchOutcome:
    if res == "found":
        witness = EdgeColoring(g, colors)
        ok, _ = is_free_edge_coloring(g, spec, witness)
        assert ok, "search produced a non-free witness"
        return SearchOutcome(Verdict.FREE_COLORING, witness, stats)
    if res == "stopped":
        return SearchOutcome(Verdict.BUDGET_EXHAUSTED, None, stats)
    return SearchOutcome(Verdict.ARROWS, None, stats)


# --- per-vertex audit of a claimed free coloring ------------------------------

class AuditError(ValueError):
    """Input to the audit is not a free coloring or not a recognized join."""


def audit_free_coloring(g: Graph, spec: ArrowSpec, c: EdgeColoring,
                        kernel) -> dict:
    """Replay per-vertex clique bounds on a free coloring of join(K_m, H).

    For each kernel vertex v and color i, A_i(v) is the set of H-vertices
    reached from v by a color-i edge.  Reports cl(G[A_1(v)]), cl(G[A_2(v)])
    and whether the neighborhood caps, the additive cap
    b_1 + b_2 - (|kernel| - 1), and the extremal condition
    max_i cl(G[A_i(v)]) = cl(H) hold.
    """
    if spec.r != 2:
        raise AuditError("audit is defined for 2-color specs")
    kernel = sorted(set(kernel))
    full = (1 << g.n) - 1
    for v in kernel:
        if g.adj[v] != full & ~(1 << v):
            raise AuditError(f"kernel vertex {v} is not adjacent to all others; "
                             "graph is not a recognized join")
    ok, violation = is_free_edge_coloring(g, spec, c)
    if not ok:
        raise AuditError(f"coloring not free: {violation[1]} monochromatic "
                         f"in color {violation[0]}")

    rest_mask = full & ~mask_of(kernel)
    col = {e: k for e, k in zip(edges(g), c.colors)}
    bounds = neighborhood_clique_bounds(spec)
    rest = [v for v in range(g.n) if rest_mask >> v & 1]
    if not rest:
        raise AuditError("kernel covers the whole graph; nothing to audit against")
    from .graphs import induced
    h_clique = len(max_clique(induced(g, rest)))
    per_vertex = {}
    for v in kernel:
        n_col = [0, 0, 0]
        for u in range(g.n):
            if u == v:
                continue
            e = (u, v) if u < v else (v, u)
            n_col[col[e]] |= 1 << u
        a_sets = [n_col[1] & rest_mask, n_col[2] & rest_mask]
        cls = []
        for am in a_sets:
            k = 0
            while has_clique(g, am, k + 1):
                k += 1
            cls.append(k)
        entry = {"a1_clique_number": cls[0], "a2_clique_number": cls[1]}
        if bounds is not None:
            nb_ok = True
            for i, b in enumerate(bounds, start=1):
                if has_clique(g, n_col[i], b + 1):
                    nb_ok = False
            entry["neighborhood_bounds_ok"] = nb_ok
            entry["sum_bound"] = bounds[0] + bounds[1] - (len(kernel) - 1)
            entry["sum_bound_ok"] = cls[0] + cls[1] <= entry["sum_bound"]
        entry["extremal_ok"] = max(cls) == h_clique
        per_vertex[v] = entry
    return {
        "kernel": kernel,
        "rest_clique_number": h_clique,
        "bounds": bounds,
        "per_vertex": per_vertex,
        "all_neighborhood_bounds_ok": all(
            e.get("neighborhood_bounds_ok", True) for e in per_vertex.values()),
        "all_sum_bounds_ok": all(
            e.get("sum_bound_ok", True) for e in per_vertex.values()),
    }
