import random

import oracles
from conftest import random_graph
from isolab import graphs as G
from isolab import solvers as S


def as_edges(g):
    return {frozenset(e) for e in g.edges()}


class TestPredicates:
    def test_isolating_examples(self):
        c5 = G.cycle_graph(5)
        assert not S.is_isolating(c5, 1 << 0)
        assert S.is_isolating(c5, G.bits_of([0, 2]))
        assert S.is_isolating(G.star_graph(3), 1 << 0)

    def test_dominating_examples(self):
        c5 = G.cycle_graph(5)
        assert S.is_dominating(c5, G.bits_of([0, 2]))
        assert not S.is_dominating(c5, 1 << 0)
        assert S.is_dominating(G.star_graph(3), 1 << 0)

    def test_distance2_examples(self):
        assert S.is_distance2_dominating(G.cycle_graph(5), 1 << 0)
        assert S.is_distance2_dominating(G.path_graph(5), 1 << 2)
        assert not S.is_distance2_dominating(G.path_graph(7), 1 << 0)

    def test_hierarchy(self, small_connected):
        # dominating => isolating => distance-2 dominating (no isolated
        # vertices in connected graphs of order >= 2)
        rng = random.Random(0)
        for n in (4, 5, 6):
            for g in small_connected[n]:
                for _ in range(8):
                    x = rng.randrange(1 << n)
                    if S.is_dominating(g, x):
                        assert S.is_isolating(g, x)
                    if S.is_isolating(g, x):
                        assert S.is_distance2_dominating(g, x)


class TestMinimizers:
    def test_examples(self):
        assert S.isolation_number(G.cycle_graph(5)).value == 2
        assert S.isolation_number(G.from_edges(2, [(0, 1)])).value == 1
        assert S.isolation_number(G.empty_graph(6)).value == 0
        assert S.isolation_number(G.empty_graph(0)).value == 0
        assert S.domination_number(G.cycle_graph(5)).value == 2
        assert S.domination_number(G.star_graph(3)).value == 1
        assert S.domination_number(G.corona_of_complete(4)).value == 4

    def test_against_oracle_exhaustive_order5(self, small_connected):
        for g in small_connected[5]:
            edges = as_edges(g)
            want_i, wit_i = oracles.min_param_ref(5, edges, oracles.isolating_ref)
            want_d, wit_d = oracles.min_param_ref(5, edges, oracles.dominating_ref)
            ri = S.isolation_number(g)
            rd = S.domination_number(g)
            assert (ri.value, G.bit_list(ri.witness)) == (want_i, list(wit_i))
            assert (rd.value, G.bit_list(rd.witness)) == (want_d, list(wit_d))

    def test_against_oracle_random(self):
        rng = random.Random(17)
        for _ in range(150):
            n = rng.randrange(1, 8)
            g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            edges = as_edges(g)
            want_i, wit_i = oracles.min_param_ref(n, edges, oracles.isolating_ref)
            ri = S.isolation_number(g)
            assert (ri.value, G.bit_list(ri.witness)) == (want_i, list(wit_i))

    def test_disconnected_adds_up(self):
        a = G.cycle_graph(5)
        b = G.star_graph(3)
        u = G.disjoint_union(a, b)
        assert S.isolation_number(u).value == S.isolation_number(a).value + S.isolation_number(b).value
        assert S.domination_number(u).value == S.domination_number(a).value + S.domination_number(b).value

    def test_witness_validity(self, small_connected):
        for n in (4, 6):
            for g in small_connected[n]:
                r = S.isolation_number(g)
                assert r.witness.bit_count() == r.value
                assert S.is_isolating(g, r.witness)
                assert not S.has_isolating_set(g, r.value - 1)


class TestExtremal:
    def test_examples(self):
        assert S.is_extremal(G.path_graph(3))
        assert S.is_extremal(G.complete_graph(3))
        # settled by brute force: both are extremal
        assert S.is_extremal(G.cycle_graph(6))
        assert S.is_extremal(G.cycle_graph(9))
        assert not S.is_extremal(G.cycle_graph(5))
        assert not S.is_extremal(G.star_graph(5))  # order 6, iota 1

    def test_matches_direct_definition(self, small_connected):
        for g in small_connected[6]:
            direct = S.isolation_number(g).value == 2
            assert S.is_extremal(g) == direct
