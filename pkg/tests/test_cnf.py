import random

import pytest

from folkman.arrowing import ArrowSpec, Verdict, arrows_edges
from folkman.cnf import (CnfError, CnfFormula, decode_model, dimacs_sha256,
                         edge_variable_map, emit_dimacs,
                         encode_edge_arrowing, parse_dimacs, parse_model)
from folkman.graphs import complete, edges
from folkman.bounds import build_theorem_graph
from oracles import (brute_arrows_edges_2color, brute_cliques,
                     brute_cnf_satisfiable, random_graph)


def test_encode_k3():
    f = encode_edge_arrowing(complete(3), ArrowSpec((3, 3)))
    assert f.num_vars == 3
    assert f.clauses == [[-1, -2, -3], [1, 2, 3]]
    assert brute_cnf_satisfiable(f.num_vars, f.clauses)


def test_encode_k6_counts():
    f = encode_edge_arrowing(complete(6), ArrowSpec((3, 3)))
    assert f.num_vars == 15
    assert len(f.clauses) == 40  # C(6,3) triangles, each forbidden in both colors
    assert not brute_cnf_satisfiable(f.num_vars, f.clauses)


def test_encode_requires_two_colors():
    with pytest.raises(CnfError):
        encode_edge_arrowing(complete(3), ArrowSpec((3, 3, 3)))


def test_variable_numbering_is_lexicographic():
    g = complete(4)
    var = edge_variable_map(g)
    assert list(var) == edges(g)
    assert list(var.values()) == list(range(1, 7))


def test_emit_header_and_roundtrip():
    f = encode_edge_arrowing(complete(3), ArrowSpec((3, 3)))
    text = emit_dimacs(f)
    assert "p cnf 3 2" in text.splitlines()
    assert parse_dimacs(text) == f


def test_emit_byte_stable():
    g = build_theorem_graph()
    f1 = emit_dimacs(encode_edge_arrowing(g, ArrowSpec((3, 5))))
    f2 = emit_dimacs(encode_edge_arrowing(build_theorem_graph(), ArrowSpec((3, 5))))
    assert f1 == f2
    assert dimacs_sha256(f1) == dimacs_sha256(f2)


def test_parse_dimacs_errors():
    with pytest.raises(CnfError):
        parse_dimacs("1 2 0\n")  # clause before header
    with pytest.raises(CnfError):
        parse_dimacs("p cnf 2 1\n1 2\n")  # unterminated clause
    with pytest.raises(CnfError):
        parse_dimacs("p cnf 2 2\n1 2 0\n")  # clause count mismatch
    with pytest.raises(CnfError):
        parse_dimacs("p cnf 1 1\n1 2 0\n")  # variable out of range


def test_satisfiability_matches_search_small():
    rng = random.Random(41)
    for _ in range(30):
        g = random_graph(rng, rng.randint(3, 7), p=0.6, max_edges=15)
        for spec in (ArrowSpec((3, 3)), ArrowSpec((3, 4))):
            f = encode_edge_arrowing(g, spec)
            sat = brute_cnf_satisfiable(f.num_vars, f.clauses)
            verdict = arrows_edges(g, spec).verdict
            assert sat == (verdict is Verdict.FREE_COLORING)


def test_clause_counts_match_clique_counts():
    rng = random.Random(43)
    for _ in range(15):
        g = random_graph(rng, rng.randint(3, 9))
        spec = ArrowSpec((3, 4))
        f = encode_edge_arrowing(g, spec)
        assert f.num_vars == g.edge_count
        assert len(f.clauses) == len(brute_cliques(g, 3)) + len(brute_cliques(g, 4))


def test_violated_clauses_are_exactly_monochromatic_cliques():
    rng = random.Random(47)
    g = random_graph(rng, 7)
    spec = ArrowSpec((3, 3))
    f = encode_edge_arrowing(g, spec)
    elist = edges(g)
    for _ in range(50):
        assignment = {i + 1: rng.random() < 0.5 for i in range(len(elist))}
        violated = [cl for cl in f.clauses
                    if all((lit > 0) != assignment[abs(lit)] for lit in cl)]
        coloring = {e: 1 if assignment[i + 1] else 2 for i, e in enumerate(elist)}
        mono = []
        for i, a in enumerate(spec.sizes, start=1):
            for vs in brute_cliques(g, a):
                pairs = [(vs[x], vs[y]) for x in range(len(vs))
                         for y in range(x + 1, len(vs))]
                if all(coloring[p] == i for p in pairs):
                    mono.append((i, vs))
        assert len(violated) == len(mono)


def test_decode_model_k5():
    g = complete(5)
    spec = ArrowSpec((3, 3))
    # obtain a model from the independent brute-force route
    arrows, witness = brute_arrows_edges_2color(g, spec.sizes)
    assert not arrows
    var = edge_variable_map(g)
    model = [var[e] if witness[e] == 1 else -var[e] for e in edges(g)]
    coloring = decode_model(g, spec, model)
    assert coloring.colors == tuple(witness[e] for e in edges(g))


def test_decode_model_rejects_non_free():
    g = complete(3)
    with pytest.raises(CnfError, match="non-free"):
        decode_model(g, ArrowSpec((3, 3)), [1, 2, 3])


def test_decode_model_rejects_incomplete():
    g = complete(3)
    with pytest.raises(CnfError, match="unassigned"):
        decode_model(g, ArrowSpec((3, 3)), [1, -2])
    with pytest.raises(CnfError, match="unassigned"):
        decode_model(g, ArrowSpec((3, 3)), [])


def test_parse_model():
    text = "c comment\ns SATISFIABLE\nv 1 -2 3\nv -4 0\n"
    assert parse_model(text) == [1, -2, 3, -4]
    with pytest.raises(CnfError):
        parse_model("s UNSATISFIABLE\n")


def test_formula_validation():
    with pytest.raises(CnfError):
        CnfFormula(2, [[1], []]).validate()
    with pytest.raises(CnfError):
        CnfFormula(2, [[3]]).validate()
