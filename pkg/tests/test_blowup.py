import pytest

from covercones import (InputError, MonomialGenerator, clique_lift_set,
                        cover_ideal, edge_clutter, ehrhart_equality,
                        gorenstein_check, is_rees_normal,
                        maximal_independent_sets, rees_cone,
                        semigroup_member, simis_cone, simis_hilbert_basis,
                        symbolic_generators_perfect)

from corpus import (complete_bipartite, complete_graph, cycle_graph,
                    path_graph, paw_graph)


def edge_ideal(G):
    return [tuple(1 if v in e else 0 for v in range(1, G.n + 1))
            for e in G.edges]


def test_monomial_rendering():
    assert str(MonomialGenerator((1, 1, 0), 1)) == "x1x2 t"
    assert str(MonomialGenerator((1, 0, 0), 0)) == "x1"
    assert str(MonomialGenerator((2, 0, 1), 3)) == "x1^2x3 t^3"
    assert str(MonomialGenerator((0, 0, 0), 2)) == "t^2"
    with pytest.raises(InputError):
        MonomialGenerator((0, 0), 0)


def test_rees_cone_shapes():
    model = rees_cone([(0, 1), (1, 0)])
    assert {h.normal for h in model.cone.facets} == {
        (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1)}
    model = rees_cone([(1, 1)])
    assert set(model.lift_set) == {(1, 0, 0), (0, 1, 0), (1, 1, 1)}
    with pytest.raises(InputError):
        rees_cone([(0, 0)])


def test_rees_cone_lift_set_satisfies_facets():
    model = rees_cone(cover_ideal(edge_clutter(cycle_graph(5))))
    for g in model.lift_set:
        assert model.cone.contains(g)


def test_cover_ideal_of_pentagon_is_normal():
    report = is_rees_normal(cover_ideal(edge_clutter(cycle_graph(5))))
    assert report.verdict is True
    certs = report.certificate["memberships"]
    assert len(certs) == report.certificate["hilbert_basis_size"]


def test_normality_witness_when_lift_set_misses_a_point():
    # the square-free cube-root ideal: (1,1,0),(0,1,1),(1,0,1) lifted
    # misses nothing, but the non-square-free pair below leaves a gap
    report = is_rees_normal([(2, 0), (0, 2)])
    assert report.verdict is False
    assert report.witness["hilbert_basis_element"] == (1, 1, 1)


def test_triangle_clutter_recorded_fixture():
    # the four triangles through the edges of a tetrahedron; recorded run:
    # not normal, the all-vertices point at t-degree two is unreachable
    ideal = [(1, 1, 1, 0, 0, 0), (1, 0, 0, 1, 1, 0),
             (0, 1, 0, 1, 0, 1), (0, 0, 1, 0, 1, 1)]
    report = is_rees_normal(ideal)
    assert report.verdict is False
    witness = report.witness["hilbert_basis_element"]
    assert witness == (1, 1, 1, 1, 1, 1, 2)
    # certificate logic: the witness is a cone lattice point the lift set
    # cannot reach
    model = rees_cone(ideal)
    assert model.cone.contains(witness)
    refusal = semigroup_member(witness, model.lift_set,
                               grading=(1,) * 7)
    assert refusal.member is False


def test_simis_cone_definition_and_redundancy_flags():
    model = simis_cone([(1, 1)])
    inequalities = {(h.normal) for h in model.halfspaces}
    assert inequalities == {(1, 0, 0), (0, 1, 0), (0, 0, 1),
                            (1, 0, -1), (0, 1, -1)}
    # a1 >= 0 and a2 >= 0 follow from a_i >= a3 >= 0
    assert {h.normal for h in model.redundant_halfspaces} == {(1, 0, 0), (0, 1, 0)}
    assert {h.normal for h in model.cone.facets} == {(0, 0, 1), (1, 0, -1), (0, 1, -1)}


def test_simis_hilbert_basis_small_graphs():
    assert simis_hilbert_basis([(1, 1)]).elements == (
        (0, 1, 0), (1, 0, 0), (1, 1, 1))
    k3 = simis_hilbert_basis(edge_ideal(complete_graph(3)))
    assert k3.elements == (
        (0, 0, 1, 0), (0, 1, 0, 0), (0, 1, 1, 1), (1, 0, 0, 0),
        (1, 0, 1, 1), (1, 1, 0, 1), (1, 1, 1, 2))


def test_simis_basis_of_pentagon_exceeds_clique_set():
    C5 = cycle_graph(5)
    hb = set(simis_hilbert_basis(edge_ideal(C5)).elements)
    cliques = {m.exponents + (m.t_degree,) for m in clique_lift_set(C5)}
    assert cliques < hb
    assert hb - cliques == {(1, 1, 1, 1, 1, 3)}


def test_symbolic_generators_for_perfect_graphs():
    gens = symbolic_generators_perfect(complete_graph(3))
    assert sorted(str(m) for m in gens) == [
        "x1", "x1x2 t", "x1x2x3 t^2", "x1x3 t", "x2", "x2x3 t", "x3"]
    gens = symbolic_generators_perfect(complete_graph(2))
    assert sorted(str(m) for m in gens) == ["x1", "x1x2 t", "x2"]
    c4 = symbolic_generators_perfect(cycle_graph(4))
    assert len(c4) == 8
    hb = set(simis_hilbert_basis(edge_ideal(cycle_graph(4))).elements)
    assert {m.exponents + (m.t_degree,) for m in c4} == hb


def test_symbolic_generators_reject_imperfect_unless_assumed():
    with pytest.raises(InputError):
        symbolic_generators_perfect(cycle_graph(5))
    gens = symbolic_generators_perfect(cycle_graph(5), assume_perfect=True)
    assert len(gens) == 10


def test_ehrhart_equality_fixtures():
    assert ehrhart_equality([(1, 1, 1)]).verdict is True
    c4_mis = [tuple(1 if v in s else 0 for v in range(1, 5))
              for s in maximal_independent_sets(cycle_graph(4))]
    assert ehrhart_equality(c4_mis).verdict is True
    # triangle edge set: Hilbert basis of the lifted cone equals the lift
    # set (the dilation scan is the oracle and is recorded in the report)
    report = ehrhart_equality([(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    assert report.verdict is True
    assert report.certificate["dilation_scan"][1]["missed"] == []


def test_ehrhart_equality_detects_gaps():
    report = ehrhart_equality([(2, 0), (0, 2)])
    assert report.verdict is False
    assert report.witness["hilbert_basis_element"] == (1, 1, 1)


def test_ehrhart_requires_positive_normalizing_point():
    with pytest.raises(InputError):
        ehrhart_equality([(1, 0), (2, 0)])
    # a coordinate outside every generator leaves x0 free there, still fine
    assert ehrhart_equality([(1, 0)]).verdict is True


def test_gorenstein_fixtures():
    c4 = gorenstein_check(cycle_graph(4))
    assert c4.verdict is True
    assert c4.certificate["canonical_generator"] == "x1x2x3x4 t"
    assert gorenstein_check(complete_graph(2)).verdict is True
    p3 = gorenstein_check(path_graph(3))
    assert p3.verdict is None and p3.reason == "not unmixed"
    c5 = gorenstein_check(cycle_graph(5))
    assert c5.verdict is False
    assert c5.witness["interior_point"] == (2, 2, 2, 2, 2, 3)
    paw = gorenstein_check(paw_graph())
    assert paw.verdict is None


def test_gorenstein_reports_scan_bounds():
    report = gorenstein_check(complete_bipartite(2, 2), scan_bound=3)
    assert report.verdict is True
    assert report.search_bounds["scan_bound"] == 3


def test_gorenstein_certificate_property():
    # a true verdict means every scanned interior point reduces by all-ones
    G = complete_graph(3)
    report = gorenstein_check(G)
    assert report.verdict is True
    cone = rees_cone(cover_ideal(edge_clutter(G))).cone
    bound = report.search_bounds["scan_bound"]
    from itertools import product
    for point in product(range(1, bound + 1), repeat=4):
        if cone.in_interior(point):
            assert cone.contains(tuple(x - 1 for x in point))


def test_paw_chain_normality_is_preserved_under_contraction():
    from covercones import Clutter, clique_equalization, complement, contraction
    G = paw_graph()
    H, added = clique_equalization(G)
    ideal_H = cover_ideal(edge_clutter(complement(H)))
    ideal_G = cover_ideal(edge_clutter(complement(G)))
    # the cover ideal of the grown complement contracts onto the original
    clutter_H = Clutter(H.n, [tuple(i + 1 for i, x in enumerate(v) if x)
                              for v in ideal_H])
    for z in reversed(added):
        clutter_H, _ = contraction(clutter_H, z)
    clutter_G = Clutter(G.n, [tuple(i + 1 for i, x in enumerate(v) if x)
                              for v in ideal_G])
    assert clutter_H == clutter_G
    assert is_rees_normal(ideal_H).verdict is True
    assert is_rees_normal(ideal_G).verdict is True
