import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meandric.errors import ValidationError
from meandric.gf2mat import Gf2Matrix, add, is_idempotent, mul, solve_linear
from meandric.gaussdiag import (
    ChordDiagram,
    InterlacementGraph,
    diagram_of_permutation,
    interlacement,
    is_realizable,
    make_chord_diagram,
    meandric_graph_of,
    realizability_of_matrix,
)
from meandric.permcore import Permutation, co_inversion_set, identity, omega

from oracles import dense_adjacency, interlace_brute, realizable_by_search

MU = Permutation((1, 4, 3, 2, 5, 6))
MU_WORD = (0, 1, 2, 3, 4, 5, 6, 0, 1, 4, 3, 2, 5, 6)


def random_word(rng, k):
    word = [c for c in range(1, k + 1) for _ in range(2)]
    rng.shuffle(word)
    return tuple(word)


@st.composite
def words(draw, max_k=9):
    k = draw(st.integers(1, max_k))
    return tuple(draw(st.permutations([c for c in range(1, k + 1) for _ in range(2)])))


class TestChordDiagram:
    def test_examples(self):
        assert make_chord_diagram((1, 2, 1, 2)).order == 2
        assert make_chord_diagram(MU_WORD).order == 7

    @pytest.mark.parametrize("word", [(1, 1, 2), (1, 2, 1, 3), (1, 1, 1, 1)])
    def test_rejects_non_double_occurrence(self, word):
        with pytest.raises(ValidationError):
            make_chord_diagram(word)

    def test_equality_up_to_rotation_and_reversal(self):
        a = make_chord_diagram((1, 2, 3, 1, 2, 3))
        assert a == make_chord_diagram((2, 3, 1, 2, 3, 1))
        assert a == make_chord_diagram((3, 2, 1, 3, 2, 1))
        assert a != make_chord_diagram((1, 1, 2, 2, 3, 3))

    def test_unlabeled_equivalence(self):
        a = make_chord_diagram((1, 2, 1, 2))
        b = make_chord_diagram((7, 9, 7, 9))
        assert a != b
        assert a.equivalent(b, labeled=False)

    def test_json(self):
        cd = make_chord_diagram(MU_WORD)
        assert ChordDiagram.from_json(cd.to_json()).word == MU_WORD
        assert str(cd) == "(0,1,2,3,4,5,6,0,1,4,3,2,5,6)"


class TestInterlacement:
    def test_small_examples(self):
        assert interlacement(make_chord_diagram((1, 2, 1, 2))).edges() == [(1, 2)]
        assert interlacement(make_chord_diagram((1, 1, 2, 2))).edges() == []
        assert interlacement(make_chord_diagram((1, 2, 2, 1))).edges() == []

    def test_permutation_diagram(self):
        g = interlacement(make_chord_diagram(MU_WORD))
        assert g.neighbors(0) == frozenset(range(1, 7))
        expected = {(0, i) for i in range(1, 7)} | set(co_inversion_set(MU))
        assert set(g.edges()) == expected

    def test_diagram_of_permutation(self):
        assert diagram_of_permutation(MU).word == MU_WORD
        assert diagram_of_permutation(identity(1)).word == (0, 1, 0, 1)
        assert diagram_of_permutation(identity(2)).word == (0, 1, 2, 0, 1, 2)

    def test_meandric_graph_of(self):
        g = meandric_graph_of(MU)
        assert g.vertices == tuple(range(7))
        assert len(g.edges()) == 18
        k4 = meandric_graph_of(identity(3))
        assert len(k4.edges()) == 6
        star = meandric_graph_of(omega(5))
        assert star.edges() == [(0, i) for i in range(1, 6)]

    def test_graph_helpers(self):
        g = InterlacementGraph.from_edges([3, 1, 2], [(1, 2), (2, 3)])
        assert g.vertices == (1, 2, 3)
        assert g.degree(2) == 2 and g.adjacent(3, 2) and not g.adjacent(1, 3)
        h = g.without(2)
        assert h.vertices == (1, 3) and h.edges() == []

    def test_rejects_non_adjacency(self):
        with pytest.raises(ValidationError):
            InterlacementGraph((0, 1), Gf2Matrix.from_lists([[1, 0], [0, 0]]))
        with pytest.raises(ValidationError):
            InterlacementGraph((0, 1), Gf2Matrix.from_lists([[0, 1], [0, 0]]))

    @given(words())
    def test_matches_brute_force(self, word):
        labels, edges = interlace_brute(word)
        g = interlacement(make_chord_diagram(word))
        assert g.vertices == tuple(labels)
        assert set(g.edges()) == edges

    @given(words(), st.integers(0, 40), st.booleans())
    def test_invariant_under_rotation_and_reversal(self, word, shift, flip):
        k = shift % len(word)
        moved = word[k:] + word[:k]
        if flip:
            moved = moved[::-1]
        assert interlacement(make_chord_diagram(moved)) == interlacement(make_chord_diagram(word))

    @given(st.integers(1, 12).flatmap(lambda n: st.permutations(range(1, n + 1))))
    def test_relabeling_isomorphism(self, word):
        pi = Permutation(tuple(word))
        from_word = interlacement(diagram_of_permutation(pi))
        graph = meandric_graph_of(pi)
        label = (0,) + pi.word
        for i in range(pi.n + 1):
            for j in range(pi.n + 1):
                assert from_word.adjacent(label[i], label[j]) == graph.adjacent(i, j)


class TestRealizability:
    def test_two_chord_crossing_is_not_realizable(self):
        v = is_realizable(make_chord_diagram((1, 2, 1, 2)))
        assert not v.realizable and v.witness is None
        assert "odd number" in v.violation
        assert realizable_by_search([[0, 1], [1, 0]]) is None

    def test_trefoil_is_realizable(self):
        cd = make_chord_diagram((1, 2, 3, 1, 2, 3))
        v = is_realizable(cd)
        assert v.realizable
        m = interlacement(cd).adjacency
        assert is_idempotent(add(m, Gf2Matrix.diagonal(v.witness)))

    def test_permutation_diagram_has_zero_witness(self):
        v = is_realizable(diagram_of_permutation(MU))
        assert v.realizable and v.witness == (0,) * 7

    @pytest.mark.parametrize(
        "word, fragment",
        [
            ((2, 3, 1, 3, 5, 5, 1, 2, 4, 4), "crosses an odd number"),
            ((5, 4, 1, 3, 2, 1, 3, 5, 4, 2), "share an odd number"),
            ((4, 3, 5, 1, 6, 4, 2, 5, 3, 6, 1, 2), "inconsistent parity cycle"),
        ],
    )
    def test_violation_kinds(self, word, fragment):
        v = is_realizable(make_chord_diagram(word))
        assert not v.realizable and fragment in v.violation
        assert realizable_by_search(interlacement(make_chord_diagram(word)).adjacency.to_lists()) is None

    def test_verdict_json(self):
        v = is_realizable(make_chord_diagram((1, 2, 3, 1, 2, 3)))
        assert '"realizable": true' in v.to_json()

    def test_agrees_with_exhaustive_search(self):
        rng = random.Random(2024)
        for _ in range(300):
            k = rng.randint(1, 12 if rng.random() < 0.1 else 9)
            word = random_word(rng, k)
            g = interlacement(make_chord_diagram(word))
            fast = realizability_of_matrix(g.adjacency, g.vertices)
            slow = realizable_by_search(g.adjacency.to_lists())
            assert fast.realizable == (slow is not None)
            if fast.realizable:
                assert is_idempotent(add(g.adjacency, Gf2Matrix.diagonal(fast.witness)))

    def test_meander_diagrams_are_realizable(self):
        # every meander is a plane curve, so its diagram must be realizable
        for word in [(1, 2), (1, 4, 3, 2), (1, 6, 3, 4, 5, 2, 7, 8)]:
            assert is_realizable(diagram_of_permutation(Permutation(word))).realizable

    @settings(max_examples=100)
    @given(words(max_k=10))
    def test_accepted_diagrams_satisfy_necessary_conditions(self, word):
        g = interlacement(make_chord_diagram(word))
        v = realizability_of_matrix(g.adjacency, g.vertices)
        if not v.realizable:
            return
        m = g.adjacency
        n = m.n
        for i in range(n):
            for j in range(n):
                if i != j and not m[i, j]:
                    assert m.inner(i, j) == 0
        md = add(m, Gf2Matrix.diagonal(v.witness))
        sq = mul(md, md)
        assert sq.diag() == md.diag()

    @settings(max_examples=100)
    @given(words(max_k=10))
    def test_witness_solves_the_edge_system(self, word):
        # the same parity system written out for the generic solver
        g = interlacement(make_chord_diagram(word))
        m = g.adjacency
        v = realizability_of_matrix(m, g.vertices)
        eqs, rhs = [], []
        for i, j in ((i, j) for i in range(m.n) for j in range(i + 1, m.n) if m[i, j]):
            eqs.append((1 << i) | (1 << j))
            rhs.append(m.inner(i, j) ^ 1)
        sol = solve_linear(eqs, rhs, nvars=m.n)
        even_rows = all(r.bit_count() % 2 == 0 for r in m.rows)
        nonadj_ok = all(m[i, j] or not m.inner(i, j) for i in range(m.n) for j in range(i + 1, m.n))
        assert v.realizable == (sol is not None and even_rows and nonadj_ok)

    def test_dense_adjacency_oracle_agrees(self):
        labels, edges = interlace_brute(MU_WORD)
        g = interlacement(make_chord_diagram(MU_WORD))
        assert g.adjacency.to_lists() == dense_adjacency(labels, edges)
