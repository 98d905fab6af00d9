import random
import warnings

import pytest

from binact.classgraph import (build_gamma, build_gamma_rational,
                               component_group, component_of,
                               connected_components, dot_export, graph_summary,
                               normalize_involution, quad_edge_oracle)
from binact.config import BoundExceeded
from binact.group import PermGroup, class_of, rational_class
from binact.perm import from_cycles

from helpers import definitional_edge


def P(degree, text):
    return from_cycles(degree, text)


@pytest.fixture(scope="module")
def gamma_quads_a5():
    A5 = PermGroup.alternating(5)
    return build_gamma(class_of(A5, P(5, "(1,2)(3,4)")))


@pytest.fixture(scope="module")
def gamma_quads_a6():
    A6 = PermGroup.alternating(6)
    return build_gamma(class_of(A6, P(6, "(1,2)(3,4)")))


class TestBuildGamma:
    def test_a5_five_triangles(self, gamma_quads_a5):
        g = gamma_quads_a5
        assert g.vertex_count == 15
        assert g.edge_count == 15
        comps = connected_components(g)
        assert len(comps) == 5 and all(len(c) == 3 for c in comps)

    def test_a6_connected(self, gamma_quads_a6):
        assert gamma_quads_a6.vertex_count == 45
        assert len(connected_components(gamma_quads_a6)) == 1

    def test_no_edge_between_33_pair(self, A6):
        g = build_gamma(class_of(A6, P(6, "(1,2,3)(4,5,6)")))
        assert not g.has_edge(P(6, "(1,2,3)(4,5,6)"), P(6, "(1,2,3)(4,6,5)"))

    def test_adjacency_symmetric_irreflexive(self, gamma_quads_a6):
        g = gamma_quads_a6
        for i, nbrs in enumerate(g.adjacency):
            assert i not in nbrs
            for j in nbrs:
                assert i in g.adjacency[j]

    def test_edges_satisfy_predicate_nonedges_fail(self, gamma_quads_a5):
        g = gamma_quads_a5
        members = set(g.vertices)
        rng = random.Random(43)
        for i, nbrs in enumerate(g.adjacency):
            for j in nbrs:
                assert definitional_edge(g.vertices[i], g.vertices[j], members)
        checked = 0
        while checked < 1000:
            i, j = rng.randrange(15), rng.randrange(15)
            if i == j or j in g.adjacency[i]:
                continue
            assert not definitional_edge(g.vertices[i], g.vertices[j], members)
            checked += 1

    def test_composite_order_warns(self, S6):
        cls = class_of(S6, P(6, "(1,2,3,4,5,6)"))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            build_gamma(cls)
        assert any("composite" in str(w.message) for w in caught)

    def test_centralizer_path_matches_all_pairs(self, A6):
        # the natural fast path and the generic scan agree on A6 quads
        from binact.classgraph import _build
        cls = class_of(A6, P(6, "(1,2)(3,4)"))
        fast = build_gamma(cls)
        members = set(fast.vertices)
        for i, x in enumerate(fast.vertices):
            expected = {j for j, y in enumerate(fast.vertices)
                        if definitional_edge(x, y, members)}
            assert set(fast.adjacency[i]) == expected


class TestRationalGamma:
    def test_five_cycles_rational(self, A5):
        cls = rational_class(A5, P(5, "(1,2,3,4,5)"))
        g = build_gamma_rational(cls)
        assert g.vertex_count == 24
        # edges pair powers within each cyclic subgroup: C(4,2) per subgroup
        assert g.edge_count == 6 * 6
        for comp in connected_components(g):
            assert len(comp) == 4

    def test_involution_class_same_as_ordinary(self, A6):
        g = P(6, "(1,2)(3,4)")
        ordinary = build_gamma(class_of(A6, g))
        rational = build_gamma_rational(rational_class(A6, g))
        assert ordinary.vertices == rational.vertices
        assert ordinary.adjacency == rational.adjacency

    def test_a4_rational_three_cycles(self, A4):
        g = build_gamma_rational(rational_class(A4, P(4, "(1,2,3)")))
        assert g.vertex_count == 8
        assert g.edge_count == 4
        for comp in connected_components(g):
            assert len(comp) == 2

    def test_gamma_subgraph_of_rational(self, A5):
        g = P(5, "(1,2,3,4,5)")
        ordinary = build_gamma(class_of(A5, g))
        rational = build_gamma_rational(rational_class(A5, g))
        rat_index = {v: i for i, v in enumerate(rational.vertices)}
        for i, nbrs in enumerate(ordinary.adjacency):
            ri = rat_index[ordinary.vertices[i]]
            for j in nbrs:
                assert rat_index[ordinary.vertices[j]] in rational.adjacency[ri]


class TestComponents:
    def test_two_four_class_a9(self, A9):
        g = build_gamma(class_of(A9, P(9, "(1,2)(3,4)(5,6)(7,8)")))
        comps = connected_components(g)
        assert len(comps) == 9

    def test_component_group_a5_klein(self, gamma_quads_a5):
        K = component_group(gamma_quads_a5, P(5, "(1,2)(3,4)"))
        assert K.order() == 4

    def test_component_group_a6_full(self, gamma_quads_a6):
        assert component_group(gamma_quads_a6, P(6, "(1,2)(3,4)")).order() == 360

    def test_component_invariant_under_vertex_choice(self, gamma_quads_a5):
        comp = component_of(gamma_quads_a5, P(5, "(1,2)(3,4)"))
        for v in comp:
            assert component_of(gamma_quads_a5, gamma_quads_a5.vertices[v]) == comp

    def test_component_group_contains_vertex(self, gamma_quads_a5):
        g = P(5, "(1,3)(2,4)")
        assert g in component_group(gamma_quads_a5, g)

    def test_vertex_outside_class_errors(self, gamma_quads_a5):
        with pytest.raises(ValueError):
            component_of(gamma_quads_a5, P(5, "(1,2,3)"))


class TestQuadEdgeOracle:
    def test_same_support(self, gamma_quads_a5):
        w = quad_edge_oracle(P(5, "(1,2)(3,4)"), P(5, "(1,4)(2,3)"),
                             gamma_quads_a5.cls)
        assert w is not None and w.kind == "same-support"
        assert w.check()

    def test_exchange(self, A6, gamma_quads_a6):
        w = quad_edge_oracle(P(6, "(1,2)(3,4)"), P(6, "(1,2)(5,6)"),
                             gamma_quads_a6.cls)
        assert w is not None and w.kind == "exchange"
        ex = w.pairs[0].exchange
        assert (ex.removed, ex.added) == ((3, 4), (5, 6))

    def test_support_not_divisible_by_4_has_no_edges(self):
        # type 2^3 involutions are odd, so the class lives in S_7
        S7 = PermGroup.symmetric(7)
        cls = class_of(S7, P(7, "(1,2)(3,4)(5,6)"))
        elems = cls.elements()
        for s in elems:
            for t in elems:
                if s < t:
                    assert quad_edge_oracle(s, t, cls) is None

    def test_non_involution_errors(self, gamma_quads_a5):
        with pytest.raises(ValueError):
            quad_edge_oracle(P(5, "(1,2,3)"), P(5, "(1,2)(3,4)"),
                             gamma_quads_a5.cls)

    def test_oracle_matches_definitional_edges_small(self):
        for n in range(4, 8):
            G = PermGroup.alternating(n)
            cls = class_of(G, P(n, "(1,2)(3,4)"))
            elems = cls.elements()
            members = set(elems)
            for s in elems:
                for t in elems:
                    if not s < t:
                        continue
                    oracle = quad_edge_oracle(s, t, cls)
                    assert (oracle is not None) == definitional_edge(s, t, members)


class TestNormalizeInvolution:
    def test_a6_path(self, gamma_quads_a6):
        path = normalize_involution(gamma_quads_a6, P(6, "(1,5)(2,6)"))
        assert path
        assert path[-1] == P(6, "(1,2)(3,4)")
        prev = P(6, "(1,5)(2,6)")
        for step in path:
            assert gamma_quads_a6.has_edge(prev, step)
            prev = step

    def test_already_canonical(self, gamma_quads_a6):
        assert normalize_involution(gamma_quads_a6, P(6, "(1,2)(3,4)")) == []

    def test_a8_every_vertex_reaches_canonical(self):
        A8 = PermGroup.alternating(8)
        cls = class_of(A8, P(8, "(1,2)(3,4)(5,6)(7,8)"))
        graph = build_gamma(cls)
        target = P(8, "(1,2)(3,4)(5,6)(7,8)")
        for s in graph.vertices:
            path = normalize_involution(graph, s)
            end = path[-1] if path else s
            assert end == target
            prev = s
            for step in path:
                assert graph.has_edge(prev, step)
                prev = step

    def test_4k_plus_1_errors(self, gamma_quads_a5):
        with pytest.raises(ValueError, match="4k"):
            normalize_involution(gamma_quads_a5, P(5, "(1,2)(3,4)"))


class TestExport:
    def test_summary_a5(self, gamma_quads_a5):
        s = graph_summary(gamma_quads_a5)
        assert s["vertices"] == 15 and s["edges"] == 15
        assert len(s["components"]) == 5
        assert all(c == {"size": 3, "group_order": 4} for c in s["components"])

    def test_summary_edgeless(self):
        S7 = PermGroup.symmetric(7)
        g = build_gamma(class_of(S7, P(7, "(1,2)(3,4)(5,6)")))
        s = graph_summary(g)
        assert s["edges"] == 0
        assert len(s["components"]) == g.vertex_count

    def test_dot_output(self, gamma_quads_a5):
        text = dot_export(gamma_quads_a5)
        assert text.startswith("graph")
        assert text.count(" -- ") == 15
        assert '(1,2)(3,4)' in text
        colored = dot_export(gamma_quads_a5, components=True)
        assert "fillcolor" in colored
