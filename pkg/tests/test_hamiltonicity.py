import json
from itertools import combinations, permutations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_graph, small_corpus
from tokenham.fan_cycle import fan_ham_cycle
from tokenham.graph_core import (
    Graph,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_fan,
    make_path,
    make_wheel,
)
from tokenham.hamiltonicity import (
    SearchOutcome,
    VerificationReport,
    brute_force_ham_cycle,
    certify_lift,
    hosts_fan,
    validate_cycle,
)
from tokenham.token_graph import build_token_graph, token_adjacent


def fan_oracle(n):
    f = make_fan(n)
    return lambda a, b: token_adjacent(f, a, b)


def permutation_hamiltonian(adj_sets):
    """Brute force over all orderings that start at vertex 0."""
    size = len(adj_sets)
    for rest in permutations(range(1, size)):
        order = (0, *rest)
        if all(order[(i + 1) % size] in adj_sets[order[i]] for i in range(size)):
            return True
    return False


class TestValidate:
    def test_paper_triangle(self):
        assert validate_cycle(fan_oracle(3), 3, [(1, 3), (1, 2), (2, 3)]).ok

    def test_anchor_cyclic(self):
        r = validate_cycle(fan_oracle(3), 3, [(1, 3), (2, 3), (1, 2)], anchor=((1, 2), (1, 3)))
        assert r.ok

    def test_non_adjacent(self):
        c, _ = fan_ham_cycle(5, 2)
        bad = [(1, 2), (3, 4)] + [v for v in c.verts if v not in {(1, 2), (3, 4)}]
        r = validate_cycle(fan_oracle(5), 10, bad)
        assert not r.ok
        assert r.failure_kind == "non-adjacent-step"
        assert r.witness == ((1, 2), (3, 4))

    def test_failure_kinds(self):
        c, a = fan_ham_cycle(6, 3)
        verts = list(c.verts)
        assert validate_cycle(fan_oracle(6), 20, verts[:-1]).failure_kind == "wrong-cardinality"
        dup = verts[:-1] + [verts[0]]
        r = validate_cycle(fan_oracle(6), 20, dup)
        assert (r.failure_kind, r.witness) == ("duplicate-vertex", verts[0])
        odd = verts[:-1] + [(1, 2, 9)]
        r = validate_cycle(fan_oracle(6), 20, odd, vertices=sorted(verts))
        assert (r.failure_kind, r.witness) == ("missing-vertex", verts[-1])
        # malformed entry without a vertex universe is caught by the adjacency step
        assert validate_cycle(fan_oracle(6), 20, odd).failure_kind == "non-adjacent-step"
        r = validate_cycle(fan_oracle(6), 20, verts, anchor=(verts[0], verts[5]))
        assert r.failure_kind == "anchor-missing"
        assert validate_cycle(fan_oracle(6), 20, verts, anchor=a).ok

    def test_report_json(self):
        r = VerificationReport(False, "non-adjacent-step", ((1, 2), (3, 4)))
        assert json.loads(r.to_json()) == {
            "ok": False,
            "failure_kind": "non-adjacent-step",
            "witness": [[1, 2], [3, 4]],
        }
        assert json.loads(VerificationReport(True).to_json()) == {
            "ok": True,
            "failure_kind": None,
            "witness": None,
        }
        with pytest.raises(ValueError):
            VerificationReport(True, "duplicate-vertex")

    @given(st.integers(0, 34), st.booleans())
    def test_rotation_and_reflection_invariant(self, shift, flip):
        c, a = fan_ham_cycle(7, 3)
        verts = list(c.verts)
        verts = verts[shift:] + verts[:shift]
        if flip:
            verts.reverse()
        assert validate_cycle(fan_oracle(7), 35, verts, anchor=a).ok


class TestBruteForce:
    def test_triangle(self):
        out = brute_force_ham_cycle(make_complete(3))
        assert out.found and len(out.cycle) == 3

    def test_kmm_even_k(self):
        assert not brute_force_ham_cycle(build_token_graph(make_complete_bipartite(2, 2), 2)).found

    def test_fan_5_2(self):
        tg = build_token_graph(make_fan(5), 2)
        out = brute_force_ham_cycle(tg)
        assert out.found
        assert validate_cycle(fan_oracle(5), 10, out.cycle).ok

    def test_prechecks(self):
        assert not brute_force_ham_cycle(make_path(5)).found
        two_triangles = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        out = brute_force_ham_cycle(two_triangles)
        assert not out.found and out.nodes_explored == 0

    def test_cap(self):
        with pytest.raises(ValueError):
            brute_force_ham_cycle(build_token_graph(make_fan(7), 3))
        assert brute_force_ham_cycle(build_token_graph(make_fan(7), 3), cap=40).found
        with pytest.raises(ValueError):
            brute_force_ham_cycle(make_complete(2))

    def test_deterministic(self):
        tg = build_token_graph(make_complete_bipartite(3, 3), 2)
        a, b = brute_force_ham_cycle(tg), brute_force_ham_cycle(tg)
        assert a == b

    def test_outcome_json(self):
        doc = json.loads(brute_force_ham_cycle(build_token_graph(make_fan(4), 2)).to_json())
        assert doc["found"] is True and len(doc["cycle"]) == 6

    @pytest.mark.parametrize("name,g", [c for c in small_corpus(7) if c[1].n >= 3])
    def test_agrees_with_permutation_search(self, name, g):
        adj_sets = [set(w - 1 for w in g.neighbors[v]) for v in g.vertices()]
        out = brute_force_ham_cycle(g)
        assert out.found == permutation_hamiltonian(adj_sets)
        if out.found:
            assert validate_cycle(lambda u, v: g.has_edge(u, v), g.n, out.cycle).ok

    @settings(max_examples=40, deadline=None)
    @given(st.integers(3, 8), st.floats(0.2, 0.9), st.integers(0, 10**6))
    def test_random_graphs_agree(self, n, p, seed):
        g = random_graph(n, p, seed)
        adj_sets = [set(w - 1 for w in g.neighbors[v]) for v in g.vertices()]
        out = brute_force_ham_cycle(g)
        assert out.found == permutation_hamiltonian(adj_sets)
        if out.found:
            assert validate_cycle(lambda u, v: g.has_edge(u, v), g.n, out.cycle).ok


class TestCertifyLift:
    def test_johnson(self):
        c, a = fan_ham_cycle(6, 2)
        assert certify_lift(c, make_complete(6), a).ok

    def test_wheel(self):
        c, a = fan_ham_cycle(6, 3)
        assert certify_lift(c, make_wheel(6), a).ok

    def test_path_fails(self):
        c, _ = fan_ham_cycle(5, 2)
        path = make_path(5)
        verts = list(c.verts)
        # oracle: first cyclic step whose swapped pair is not a path edge
        expected = next(
            (verts[i], verts[(i + 1) % len(verts)])
            for i in range(len(verts))
            if tuple(sorted(set(verts[i]) ^ set(verts[(i + 1) % len(verts)]))) not in path.edges
        )
        r = certify_lift(c, path)
        assert r.failure_kind == "non-adjacent-step"
        assert r.witness == expected
        assert 5 in set(expected[0]) ^ set(expected[1])

    def test_order_mismatch(self):
        c, _ = fan_ham_cycle(5, 2)
        assert not certify_lift(c, make_complete(6)).ok

    def test_hosts_fan(self):
        assert hosts_fan(make_wheel(7)) and hosts_fan(make_complete(5))
        assert not hosts_fan(make_cycle(5))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(4, 9), st.data())
    def test_monotone_under_edge_addition(self, n, data):
        k = data.draw(st.integers(1, n - 1))
        extra = data.draw(st.sets(st.sampled_from(list(combinations(range(1, n + 1), 2)))))
        c, a = fan_ham_cycle(n, k)
        h = Graph(n, set(make_fan(n).edges) | extra)
        more = data.draw(st.sets(st.sampled_from(list(combinations(range(1, n + 1), 2)))))
        g = Graph(n, set(h.edges) | more)
        assert certify_lift(c, h, a).ok
        assert certify_lift(c, g, a).ok


@pytest.mark.parametrize("n,k", [(n, k) for n in range(3, 8) for k in range(1, n) if 3 <= comb(n, k) <= 24])
def test_oracle_agrees_with_construction(n, k):
    c, _ = fan_ham_cycle(n, k)
    assert validate_cycle(fan_oracle(n), comb(n, k), c.verts).ok
    assert brute_force_ham_cycle(build_token_graph(make_fan(n), k)).found
