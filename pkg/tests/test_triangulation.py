import json
import random

import pytest

import multicurve as mc
from multicurve import errors
from multicurve.triangulation import canonical_form

from conftest import random_triangulation


class TestBuild:
    def test_ex11_counts(self):
        tri = mc.fixture("ex11")
        assert (tri.genus, tri.punctures) == (1, 1)
        assert tri.num_edges == 3
        assert len(tri.vertices) == 1
        assert len(tri.vertices[0]) == 6

    def test_minimal_three_punctured_sphere(self):
        tri = mc.build(2, [((0, 0), (1, 0)), ((0, 1), (1, 2)),
                           ((0, 2), (1, 1))])
        assert (tri.genus, tri.punctures) == (0, 3)
        assert tri.num_edges == 3

    def test_edge_count_identity(self, any_fixture):
        tri = any_fixture
        assert tri.num_edges == 3 * (2 * tri.genus + tri.punctures - 2)
        assert tri.triangle_count == 2 * (2 * tri.genus + tri.punctures - 2)
        assert 3 * tri.triangle_count == 6 * (2 * tri.genus
                                              + tri.punctures - 2)

    def test_euler_characteristic(self, any_fixture):
        tri = any_fixture
        chi = len(tri.vertices) - tri.num_edges + tri.triangle_count
        assert chi == 2 - 2 * tri.genus

    def test_slot_glued_to_itself(self):
        with pytest.raises(errors.SlotGluedToItself):
            mc.build(2, [((0, 0), (0, 0)), ((0, 1), (1, 0)),
                         ((0, 2), (1, 1)), ((1, 2), (0, 0))])

    def test_not_involution(self):
        with pytest.raises(errors.GluingNotInvolution):
            mc.build(2, [((0, 0), (1, 0)), ((0, 0), (1, 1)),
                         ((0, 1), (1, 2))])

    def test_unglued_slot(self):
        with pytest.raises(errors.GluingNotInvolution):
            mc.build(2, [((0, 0), (1, 0)), ((0, 1), (1, 1))])

    def test_disconnected(self):
        pairs = [((0, k), (1, k)) for k in range(3)]
        pairs += [((2, k), (3, k)) for k in range(3)]
        with pytest.raises(errors.EulerCharacteristicInvalid):
            mc.build(4, pairs)

    def test_canonical_edge_order_sorted(self, any_fixture):
        edges = any_fixture.edges
        assert edges == tuple(sorted(edges))

    def test_random_surfaces_validate(self):
        rng = random.Random(7)
        for triangles in (2, 4, 6):
            for _ in range(10):
                tri = random_triangulation(rng, triangles)
                chi = (len(tri.vertices) - tri.num_edges
                       + tri.triangle_count)
                assert chi == 2 - 2 * tri.genus
                assert tri.num_edges == 3 * (2 * tri.genus
                                             + tri.punctures - 2)


class TestDualGraph:
    def test_ex11_theta_graph(self):
        dual = mc.dual_graph(mc.fixture("ex11"))
        assert dual.num_vertices == 2
        assert dual.edges == ((0, 1), (0, 1), (0, 1))

    def test_n4ex_is_k4(self):
        dual = mc.dual_graph(mc.fixture("n4ex"))
        assert dual.num_vertices == 4
        assert sorted(dual.edges) == [(0, 1), (0, 2), (0, 3),
                                      (1, 2), (1, 3), (2, 3)]

    def test_flower4_loops_on_star(self):
        dual = mc.dual_graph(mc.flower(4))
        assert dual.num_loops() == 3
        non_loops = [e for e in dual.edges if e[0] != e[1]]
        center = set(non_loops[0]) & set(non_loops[1]) & set(non_loops[2])
        assert len(center) == 1  # three leaves hang off one center

    def test_always_trivalent(self, any_fixture):
        dual = mc.dual_graph(any_fixture)
        degrees = [0] * dual.num_vertices
        for a, b in dual.edges:
            degrees[a] += 1
            degrees[b] += 1
        assert all(d == 3 for d in degrees)


class TestFlower:
    @pytest.mark.parametrize("n,edges,folded,triangles", [
        (4, 6, 3, 4),
        (5, 9, 4, 6),
        (6, 12, 5, 8),
        (7, 15, 6, 10),
    ])
    def test_counts(self, n, edges, folded, triangles):
        tri = mc.flower(n)
        assert (tri.genus, tri.punctures) == (0, n)
        assert tri.num_edges == edges
        assert len(tri.folded_triangles()) == folded
        assert tri.triangle_count == triangles
        assert mc.dual_graph(tri).num_loops() == n - 1

    def test_requires_at_least_4(self):
        with pytest.raises(errors.FlowerRequiresNAtLeast4):
            mc.flower(3)


class TestFlip:
    def test_preserves_counts(self):
        tri = mc.fixture("n4ex")
        flipped = mc.flip(tri, 0)
        assert (flipped.genus, flipped.punctures) == (tri.genus,
                                                      tri.punctures)
        assert flipped.num_edges == tri.num_edges
        assert flipped.triangle_count == tri.triangle_count

    def test_n4ex_flips_to_n4ex2(self):
        tri = mc.fixture("n4ex")
        other = mc.fixture("n4ex2")
        for e in range(tri.num_edges):
            assert mc.is_isomorphic(mc.flip(tri, e), other)

    def test_double_flip_isomorphic(self, any_fixture):
        tri = any_fixture
        for e in range(tri.num_edges):
            s1, s2 = tri.edges[e]
            if s1 // 3 == s2 // 3:
                continue
            assert mc.is_isomorphic(mc.flip(mc.flip(tri, e), e), tri)

    def test_folded_edge_rejected(self):
        tri = mc.flower(5)
        doubled = next(e for e, (a, b) in enumerate(tri.edges)
                       if a // 3 == b // 3)
        with pytest.raises(errors.FlipOnFoldedEdge):
            mc.flip(tri, doubled)

    def test_flip_on_self_glued_square_allowed(self):
        # ex11: every square has repeated outer sides; flips stay legal
        tri = mc.fixture("ex11")
        for e in range(3):
            flipped = mc.flip(tri, e)
            assert (flipped.genus, flipped.punctures) == (1, 1)


class TestIsomorphism:
    def test_self_isomorphic(self, any_fixture):
        assert mc.is_isomorphic(any_fixture, any_fixture)

    def test_relabeled_isomorphic(self):
        tri = mc.fixture("n4ex")
        perm = [2, 0, 3, 1]
        pairs = []
        for s, p in enumerate(tri.gluing):
            if s < p:
                pairs.append(((perm[s // 3], s % 3), (perm[p // 3], p % 3)))
        relabeled = mc.build(4, pairs)
        assert mc.is_isomorphic(tri, relabeled)
        assert canonical_form(tri) == canonical_form(relabeled)

    def test_distinguishes(self):
        assert not mc.is_isomorphic(mc.fixture("n4ex"), mc.fixture("n4ex2"))
        assert not mc.is_isomorphic(mc.fixture("n4ex"), mc.flower(4))


class TestJson:
    def test_round_trip(self, any_fixture):
        tri = any_fixture
        text = json.dumps(tri.to_json_dict())
        again = mc.load(text)
        assert again == tri

    def test_named_fixtures_load(self):
        for name in ("ex11", "n4ex", "n4ex2", "flower:4", "flower:6"):
            assert mc.load(name).num_edges > 0

    def test_flower3_fixture_is_three_punctured_sphere(self):
        tri = mc.fixture("flower:3")
        assert (tri.genus, tri.punctures) == (0, 3)
        assert len(tri.folded_triangles()) == 2
