"""Named graph constructions, the known-values catalog, and bound certificates.

An upper bound F_e(a_1,...,a_r; q) <= n is certified by exhibiting an
n-vertex graph with clique number below q together with conclusive evidence
that it edge-arrows (a_1,...,a_r): either an exhausted native search or an
external solver's UNSAT result on the emitted CNF.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import (Graph, circulant, complement, complete, cycle,
                     emit_graph6, join, max_clique)
from .arrowing import ArrowSpec, SearchOutcome, Verdict, arrows_vertices

CERTIFICATE_SCHEMA = "folkman-certificate/1"


class ConstructionError(ValueError):
    """A named construction failed its published-property validation gate."""


class CertificateError(ValueError):
    """Ineligible graph or inconclusive evidence."""


def build_q() -> Graph:
    """The 13-vertex Greenwood-Gleason graph Q: complement of the circulant
    with offsets {1, 5}.

    Only Q's complement is pictured in the literature, so the construction
    is gated on Q's three published properties: cl(Q) = 4, independence
    number 2, and Q vertex-arrows (3,4).  Failing any check aborts rather
    than silently returning the wrong graph.
    """
    q = complement(circulant(13, {1, 5})).relabel("Q")
    if len(max_clique(q)) != 4:
        raise ConstructionError(f"Q gate: clique number {len(max_clique(q))} != 4")
    if len(max_clique(complement(q))) != 2:
        raise ConstructionError("Q gate: independence number != 2")
    outcome = arrows_vertices(q, ArrowSpec((3, 4)))
    if outcome.verdict is not Verdict.ARROWS:
        raise ConstructionError("Q gate: Q does not vertex-arrow (3,4)")
    return q


def build_theorem_graph() -> Graph:
    """K_8 + Q: 21 vertices, clique number 12; the carrier of F_e(3,5;13) <= 21."""
    return join(complete(8), build_q()).relabel("K8+Q")


def build_lin_graph() -> Graph:
    """K_8 + C_5 + C_5: the unique 18-vertex candidate for F_e(3,5;13) = 18.

    Whether it edge-arrows (3,5) is an open problem; this graph exists here
    as an experiment target only and no bound is ever concluded from it.
    """
    return join(complete(8), join(cycle(5), cycle(5))).relabel("K8+C5+C5")


BUILTIN_GRAPHS = {
    "q": build_q,
    "theorem-graph": build_theorem_graph,
    "lin-graph": build_lin_graph,
}


# --- known-values catalog -----------------------------------------------------

@dataclass(frozen=True)
class KnownValueEntry:
    sizes: tuple[int, ...]
    q: int
    low: int
    high: int
    sources: tuple[str, ...]
    note: str = ""

    def __post_init__(self):
        if self.low > self.high:
            raise ValueError(f"interval [{self.low}, {self.high}] is empty")

    @property
    def exact(self) -> int | None:
        return self.low if self.low == self.high else None

    def to_json_obj(self) -> dict:
        obj = {"spec": list(self.sizes), "q": self.q,
               "value": self.exact if self.exact is not None
               else [self.low, self.high],
               "sources": list(self.sources)}
        if self.note:
            obj["note"] = self.note
        return obj


_KNOWN = (
    KnownValueEntry((3, 3), 6, 8, 8, ("G",)),
    KnownValueEntry((3, 4), 9, 14, 14, ("N349",)),
    KnownValueEntry((3, 5), 14, 16, 16, ("L",)),
    KnownValueEntry((4, 4), 18, 20, 20, ("L",)),
    KnownValueEntry((3, 3, 3), 17, 19, 19, ("L",)),
    KnownValueEntry((3, 4), 8, 16, 16, ("KNdokl", "KNgod")),
    KnownValueEntry((3, 3), 5, 15, 15, ("N335", "PRU")),
    KnownValueEntry((3, 3, 3), 16, 21, 21, ("L", "N33316")),
    KnownValueEntry((3, 3, 3), 15, 23, 23, ("N33315",)),
    KnownValueEntry((3, 3, 3), 14, 25, 25, ("N33314",)),
    KnownValueEntry((3, 5), 13, 18, 21, ("L", "K8+Q"),
                    note="lower bound from Lin; upper bound 21 from the K8+Q "
                         "construction, improving the previous 24 (KNgod); "
                         "the source abstract misprints the bound as "
                         "F_e(3,5;8) <= 21, the body and corollary use q=13"),
)


def known_numbers() -> list[KnownValueEntry]:
    return list(_KNOWN)


def lookup_known(sizes, q: int) -> KnownValueEntry | None:
    sizes = tuple(sizes)
    for entry in _KNOWN:
        if entry.sizes == sizes and entry.q == q:
            return entry
    return None


# --- bound certificates -------------------------------------------------------

@dataclass(frozen=True)
class BoundCertificate:
    schema: str
    label: str
    graph6: str
    vertex_count: int
    sizes: tuple[int, ...]
    q: int
    clique_number: int
    evidence: dict
    bound: str

    def to_json_obj(self) -> dict:
        return {
            "schema": self.schema,
            "graph": {"label": self.label, "graph6": self.graph6,
                      "n": self.vertex_count},
            "spec": list(self.sizes),
            "q": self.q,
            "clique_number": self.clique_number,
            "evidence": self.evidence,
            "bound": self.bound,
        }


def _evidence_record(evidence) -> dict:
    if isinstance(evidence, SearchOutcome):
        if evidence.verdict is not Verdict.ARROWS:
            raise CertificateError(
                f"evidence verdict is {evidence.verdict.value}, need arrows")
        return {"kind": "native-search", **evidence.to_json_obj()}
    if isinstance(evidence, dict):
        if evidence.get("status", "").upper() == "UNSAT":
            return {"kind": "solver-unsat", **evidence}
        if evidence.get("verdict") == Verdict.ARROWS.value:
            return {"kind": "native-search", **evidence}
        raise CertificateError(
            "evidence record is neither a solver UNSAT result nor an "
            f"arrows search run: {evidence.get('status') or evidence.get('verdict')!r}")
    raise CertificateError(f"unsupported evidence type {type(evidence).__name__}")


def bound_certificate(g: Graph, spec: ArrowSpec, q: int,
                      evidence) -> BoundCertificate:
    """Build the machine-checkable record for F_e(spec; q) <= |V(g)|.

    The clique number is recomputed here, never trusted from the caller, and
    the evidence must be conclusive: an Arrows search outcome or an external
    solver UNSAT record.
    """
    record = _evidence_record(evidence)
    cl = len(max_clique(g))
    if cl >= q:
        raise CertificateError(f"clique number {cl} >= q={q}: graph ineligible")
    bound = f"F_e({spec};{q}) <= {g.n}"
    return BoundCertificate(
        schema=CERTIFICATE_SCHEMA,
        label=g.label or "unlabeled",
        graph6=emit_graph6(g),
        vertex_count=g.n,
        sizes=spec.sizes,
        q=q,
        clique_number=cl,
        evidence=record,
        bound=bound,
    )
