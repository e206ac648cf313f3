import random
from itertools import combinations

import pytest

from bergeturan.berge import (
    BergeWitness,
    assign_edges,
    find_berge_cycle,
    find_berge_path,
    hamiltonian_path,
    has_berge_cycle_at_least,
    is_hamiltonian_connected,
    klm_hypothesis,
    longest_berge_path,
    verify_witness,
)
from bergeturan.budget import Budget
from bergeturan.errors import BudgetExhausted, InvalidParameterError, OutOfTheoremRangeError
from bergeturan.hypercore import Hypergraph
from bergeturan.search import random_hypergraph

from brute import brute_has_cycle, brute_has_path, brute_longest_path

K4 = Hypergraph.complete(4, 3)
K5 = Hypergraph.complete(5, 3)
CHAIN = Hypergraph(7, 3, [(0, 1, 2), (2, 3, 4), (4, 5, 6)])


class TestVerifyWitness:
    def test_single_edge(self):
        H = Hypergraph(3, 3, [(0, 1, 2)])
        assert verify_witness(H, BergeWitness("path", (0, 1), ((0, 1, 2),)))
        bad = verify_witness(H, BergeWitness("path", (0, 1, 2), ((0, 1, 2), (0, 1, 2))))
        assert not bad and bad.reason == "repeated_edge"

    def test_k4_cycle(self):
        w = BergeWitness("cycle", (0, 1, 2), ((0, 1, 3), (1, 2, 3), (0, 2, 3)))
        assert verify_witness(K4, w)

    @pytest.mark.parametrize(
        "w, reason",
        [
            (BergeWitness("path", (0, 0), ((0, 1, 2),)), "repeated_vertex"),
            (BergeWitness("path", (0, 1), ((0, 2, 3),)), "pair_not_covered"),
            (BergeWitness("path", (0, 1, 2), ((0, 1, 2),)), "vertex_count"),
            (BergeWitness("loop", (0, 1), ((0, 1, 2),)), "unknown_kind"),
        ],
    )
    def test_rejections(self, w, reason):
        check = verify_witness(K4, w)
        assert not check and check.reason == reason

    def test_json_roundtrip(self):
        w = find_berge_cycle(K4, 4)
        assert BergeWitness.from_json(w.to_json()) == w


class TestDetection:
    def test_path_examples(self):
        w = find_berge_path(K4, 3)
        assert w is not None and verify_witness(K4, w)
        assert find_berge_path(K4, 4) is None
        assert find_berge_path(Hypergraph(6, 3, [(0, 1, 2), (3, 4, 5)]), 2) is None

    def test_cycle_examples(self):
        assert find_berge_cycle(K4, 3) is not None
        w = find_berge_cycle(K4, 4)
        assert w is not None and verify_witness(K4, w)
        assert find_berge_cycle(CHAIN, 3) is None

    def test_longest_examples(self):
        assert longest_berge_path(K4)[0] == 3
        assert longest_berge_path(Hypergraph(5, 3))[0] == 0
        ell, w = longest_berge_path(CHAIN)
        assert ell == 3 and verify_witness(CHAIN, w)

    def test_length_validation(self):
        with pytest.raises(InvalidParameterError):
            find_berge_path(K4, 0)
        with pytest.raises(InvalidParameterError):
            find_berge_cycle(K4, 1)

    def test_cycle_of_length_two_needs_two_edges_on_a_pair(self):
        assert find_berge_cycle(K4, 2) is not None
        assert find_berge_cycle(CHAIN, 2) is None

    def test_assign_edges(self):
        w = assign_edges(K4, (0, 1, 2, 3), "cycle")
        assert w is not None and verify_witness(K4, w)
        assert assign_edges(CHAIN, (0, 1, 2), "path") is None

    def test_budget_exhaustion_is_not_a_negative(self):
        H = Hypergraph.complete(8, 3)
        with pytest.raises(BudgetExhausted):
            find_berge_cycle(Hypergraph(H.n, 3, H.edges[:30]), 8, budget=Budget(max_nodes=3))

    def test_cycle_at_least(self):
        assert has_berge_cycle_at_least(K5, 5) is not None
        assert has_berge_cycle_at_least(CHAIN, 2) is None


class TestAgainstBruteForce:
    @pytest.mark.parametrize("seed", range(6))
    def test_random_hypergraphs(self, seed):
        rng = random.Random(seed)
        for _ in range(40):
            n = rng.randint(3, 6)
            H = random_hypergraph(n, 3, rng.random(), rng)
            for k in range(1, 6):
                w = find_berge_path(H, k)
                assert (w is not None) == brute_has_path(H, k), (H, k)
                if w is not None:
                    assert verify_witness(H, w)
            for k in range(2, 6):
                w = find_berge_cycle(H, k)
                assert (w is not None) == brute_has_cycle(H, k), (H, k)
                if w is not None:
                    assert verify_witness(H, w)
            assert longest_berge_path(H)[0] == brute_longest_path(H)

    def test_four_uniform(self):
        rng = random.Random(99)
        for _ in range(30):
            H = random_hypergraph(rng.randint(4, 7), 4, rng.random(), rng)
            for k in range(1, 6):
                assert (find_berge_path(H, k) is not None) == brute_has_path(H, k)

    def test_monotone_under_edge_addition(self):
        rng = random.Random(5)
        for _ in range(30):
            H = random_hypergraph(6, 3, 0.3, rng)
            missing = [e for e in combinations(range(6), 3) if e not in H]
            if not missing:
                continue
            bigger = H.add_edges([rng.choice(missing)])
            assert longest_berge_path(bigger)[0] >= longest_berge_path(H)[0]


class TestHamiltonian:
    def test_examples(self):
        assert is_hamiltonian_connected(K5)
        assert not is_hamiltonian_connected(Hypergraph(5, 3, [(0, 1, 2), (2, 3, 4)]))
        assert not is_hamiltonian_connected(Hypergraph(3, 3, [(0, 1, 2)]))

    def test_endpoints_respected(self):
        w = hamiltonian_path(K5, 1, 3)
        assert w.vertices[0] == 1 and w.vertices[-1] == 3 and len(w.vertices) == 5

    def test_klm_examples(self):
        assert klm_hypothesis(K5)
        # complements of six Fano lines: a 4-graph on 7 vertices with minimum degree 3
        fano = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6)]
        H = Hypergraph(7, 4, [tuple(v for v in range(7) if v not in line) for line in fano])
        assert H.min_degree() == 3
        assert klm_hypothesis(H)
        # n = 8, r = 3, delta = 5: below C(4,2)+1 and r is not above n/2
        cyclic = {tuple(sorted((i % 8, (i + 1) % 8, (i + d) % 8))) for i in range(8) for d in (2, 3)}
        H = Hypergraph(8, 3, cyclic - {(0, 1, 3)})
        assert H.min_degree() == 5
        assert not klm_hypothesis(H)

    def test_klm_range(self):
        with pytest.raises(OutOfTheoremRangeError):
            klm_hypothesis(Hypergraph(3, 2, [(0, 1)]))
