import pytest

from covercones import (Clutter, InputError, balanced_check, balanced_oracle,
                        clique_halfspaces, cm_height_two_normal, complement,
                        dual_balanced_normal, edge_clutter, incidence_matrix,
                        is_perfect_definitional, mfmc_check,
                        perfect_matrix_check, perfect_via_rees_cone,
                        tdi_check, tdi_oracle, vertex_clique_matrix)
from covercones.errors import CapExceededError
from covercones.lp import GE, OPTIMAL, make_lp, solve, solve_ilp_bounded

from corpus import (all_graphs_up_to_iso, complete_graph, cycle_graph,
                    no_isolated, path_graph, with_edges)


def test_cone_perfection_fixtures():
    r = perfect_via_rees_cone(cycle_graph(5))
    assert r.verdict is False
    assert r.witness["non_clique_facets"] == [(1, 1, 1, 1, 1, -3)]
    assert perfect_via_rees_cone(cycle_graph(4)).verdict is True
    k4 = perfect_via_rees_cone(complete_graph(4))
    assert k4.verdict is True
    assert (1, 1, 1, 1, -3) in {h.normal for h in
                                clique_halfspaces(complete_graph(4))}
    with pytest.raises(InputError):
        perfect_via_rees_cone(Graph_with_isolated())
    with pytest.raises(CapExceededError):
        perfect_via_rees_cone(cycle_graph(5), cap=4)


def Graph_with_isolated():
    from covercones import Graph
    return Graph(3, [(1, 2)])


def test_cone_perfection_equals_oracle_on_connected_four_vertex_graphs():
    for G in with_edges(no_isolated(all_graphs_up_to_iso(4))):
        assert (perfect_via_rees_cone(G).verdict
                == is_perfect_definitional(G).verdict)


def test_exhaustive_six_vertex_sweep():
    # every 6-vertex graph without isolated vertices, both perfection
    # routes, plus normality and the clique description on the perfect ones
    from covercones import (clique_lift_set, cover_ideal, is_rees_normal,
                            simis_hilbert_basis)
    graphs = with_edges(no_isolated(all_graphs_up_to_iso(6)))
    assert len(graphs) == 122
    perfect = []
    for G in graphs:
        cone = perfect_via_rees_cone(G).verdict
        assert cone == is_perfect_definitional(G).verdict, G
        if cone:
            perfect.append(G)
    assert len(perfect) == 115
    for G in perfect:
        assert is_rees_normal(cover_ideal(edge_clutter(G))).verdict, G
        edge_ideal = [tuple(1 if v in e else 0 for v in range(1, 7))
                      for e in G.edges]
        hb = set(simis_hilbert_basis(edge_ideal).elements)
        cliques = {m.exponents + (m.t_degree,) for m in clique_lift_set(G)}
        assert hb == cliques, G


def test_perfect_matrix_fixtures():
    assert perfect_matrix_check(vertex_clique_matrix(cycle_graph(4))).verdict
    r = perfect_matrix_check(incidence_matrix(edge_clutter(cycle_graph(5))))
    assert r.verdict is False and r.witness["vertex"] == ("1/2",) * 5
    assert perfect_matrix_check([(1,)]).verdict is True


def test_tdi_fixtures():
    assert tdi_check(vertex_clique_matrix(complete_graph(2))).verdict is True
    assert tdi_check(incidence_matrix(edge_clutter(cycle_graph(5)))).verdict is False
    single = tdi_check([(2,)])
    assert single.verdict is False
    assert single.witness["fractional_vertex"]["vertex"] == ("1/2",)


def test_tdi_on_integer_matrix_is_one_directional():
    # a matrix with a negative entry: conditions hold -> verdict true
    ok = tdi_check([(1, 0), (-1, 1)])
    assert ok.verdict in (True, None)
    if ok.verdict is None:
        assert "negative" in ok.reason


def test_tdi_oracle_fixtures():
    r = tdi_oracle(vertex_clique_matrix(complete_graph(2)))
    assert r.verdict is True and r.certificate["objectives_checked"] > 0
    r = tdi_oracle(incidence_matrix(edge_clutter(cycle_graph(3))))
    assert r.verdict is False
    assert r.witness["alpha"] == (1, 1, 1)
    assert (r.witness["lp_value"], r.witness["ilp_value"]) == (
        __import__("fractions").Fraction(3, 2), 2)


def test_tdi_oracle_agrees_with_tdi_check_on_small_matrices():
    fixtures = [
        vertex_clique_matrix(complete_graph(2)),
        vertex_clique_matrix(path_graph(3)),
        vertex_clique_matrix(cycle_graph(4)),
        incidence_matrix(edge_clutter(cycle_graph(3))),
        [(1, 1, 0), (0, 1, 1)],
        [(1, 0), (1, 1), (0, 1)],
    ]
    for A in fixtures:
        cols = A.columns if hasattr(A, "columns") else A
        if len(cols) > 4:
            continue
        assert tdi_check(A).verdict == tdi_oracle(A).verdict


def test_balanced_fixtures():
    assert balanced_check(incidence_matrix(edge_clutter(cycle_graph(4)))).verdict
    r = balanced_check(incidence_matrix(edge_clutter(cycle_graph(3))))
    assert r.verdict is False
    assert (r.witness["rows"], r.witness["columns"]) == ([1, 2, 3], [1, 2, 3])
    assert balanced_check([(1, 0, 0), (0, 1, 0)]).verdict is True
    with pytest.raises(InputError):
        balanced_check([(2, 0)])


def test_balanced_fast_path_agrees_with_submatrix_scan():
    import random
    rng = random.Random(13)
    fixtures = [incidence_matrix(edge_clutter(G))
                for G in with_edges(no_isolated(all_graphs_up_to_iso(5)))]
    for _ in range(30):
        n, q = rng.randint(2, 6), rng.randint(2, 7)
        cols = [tuple(rng.randint(0, 1) for _ in range(n)) for _ in range(q)]
        cols = [c for c in cols if any(c)]
        if cols:
            fixtures.append(cols)
    for A in fixtures:
        assert balanced_check(A).verdict == balanced_oracle(A).verdict


def test_mfmc_fixtures():
    assert mfmc_check(edge_clutter(cycle_graph(4))).verdict is True
    r = mfmc_check(edge_clutter(cycle_graph(5)))
    assert r.verdict is False
    assert r.witness["packing"]["vertex"] == ("1/2",) * 5
    assert mfmc_check(edge_clutter(complete_graph(2))).verdict is True
    mixed = mfmc_check(Clutter(3, [(1,), (2, 3)]))
    assert mixed.verdict is None and "mixed" in mixed.reason


def test_mfmc_true_implies_integral_covering_ilp_for_all_ones():
    C = edge_clutter(cycle_graph(4))
    assert mfmc_check(C).verdict is True
    rows = [[1 if v in e else 0 for e in C.edges] for v in range(1, C.n + 1)]
    lp = make_lp([1] * len(C.edges), rows, [1] * C.n, [GE] * C.n)
    relax = solve(lp)
    ilp = solve_ilp_bounded(lp, [(0, 3)] * len(C.edges))
    assert relax.status == OPTIMAL and ilp.value == relax.value


def test_cm_height_two_fixtures():
    assert cm_height_two_normal(list(cycle_graph(4).edges)).verdict is True
    two_k2 = list(complement(cycle_graph(4)).edges)
    r = cm_height_two_normal(two_k2)
    assert r.verdict is None and r.witness["chordless_cycle"] == (1, 2, 3, 4)
    assert cm_height_two_normal([(1, 2)]).verdict is True


def test_dual_balanced_fixtures():
    assert dual_balanced_normal(incidence_matrix(edge_clutter(cycle_graph(4)))).verdict is True
    r = dual_balanced_normal(incidence_matrix(edge_clutter(cycle_graph(5))))
    assert r.verdict is None and "not balanced" in r.reason
    with pytest.raises(InputError):
        dual_balanced_normal([(1, 1)])
