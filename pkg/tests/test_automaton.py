"""Presentations, factor automata, counting, growth, and Hilbert series."""

import random
from fractions import Fraction

import pytest

from monoalg.automaton import (
    LabeledGraph,
    Presentation,
    UfnAutomaton,
    _charpoly_reversed,
    build_automaton,
    check_factor_closed,
    classify_growth,
    count_words,
    determinize_graph,
    expand_series,
    family_A,
    hilbert_series,
    normalize_presentation,
    total_dims,
)
from monoalg.errors import NotSubwordClosed, RecurrenceNotStabilized
from monoalg.words import Alphabet, Word

import oracles

AB = Alphabet("ab")


def pres(alphabet, *forbidden):
    return Presentation(alphabet, tuple(alphabet.word(f) for f in forbidden))


def random_presentation(rng):
    size = rng.randint(1, 3)
    alphabet = Alphabet("abc"[:size])
    forbidden = []
    for _ in range(rng.randint(0, 4)):
        n = rng.randint(1, 3)
        forbidden.append(Word(alphabet, (rng.randrange(size) for _ in range(n))))
    return normalize_presentation(Presentation(alphabet, tuple(forbidden)))


def test_family_examples():
    assert family_A(1).alphabet.size == 3
    assert family_A(1).forbidden == ()
    a4 = family_A(2)
    assert a4.alphabet.size == 4
    assert sorted(w.text() for w in a4.forbidden) == [
        "x1 x1",
        "x2 x2",
        "x3 x3",
        "x4 x4",
    ]
    a5 = family_A(3)
    assert a5.alphabet.size == 5
    squares = [w for w in a5.forbidden if len(w) == 2]
    sandwiches = [w for w in a5.forbidden if len(w) == 3]
    assert len(squares) == 5 and len(sandwiches) == 5 * 4
    assert all(w[0] == w[2] and w[0] != w[1] for w in sandwiches)


def test_family_matches_relation_description():
    """Forbidden set must cut exactly the words of length k <= n having a
    repeated letter (checked against brute enumeration)."""
    for n in (2, 3):
        p = family_A(n)
        size = p.alphabet.size
        for k in range(1, n + 3):
            for letters in oracles.all_words(size, k, k):
                has_repeat_window = any(
                    letters[i] == letters[j]
                    for i in range(k)
                    for j in range(i + 1, min(i + n, k))
                )
                should_die = k <= n and len(set(letters)) < k
                dies = not p.is_normal(Word(p.alphabet, letters))
                if k <= n:
                    assert dies == should_die
                else:
                    # longer words die exactly when a short repeat window occurs
                    assert dies == has_repeat_window


def test_family_prose_convention():
    p = family_A(2, gap_convention="prose")
    lengths = sorted(set(len(w) for w in p.forbidden))
    assert lengths == [2, 3]


def test_normalize_presentation():
    p = pres(AB, "aa", "aab")
    assert normalize_presentation(p).forbidden == (AB.word("aa"),)
    p = pres(AB, "ab", "ba")
    assert set(normalize_presentation(p).forbidden) == {AB.word("ab"), AB.word("ba")}
    p = pres(AB, "aa", "aa")
    assert normalize_presentation(p).forbidden == (AB.word("aa"),)


def test_build_automaton_a4():
    aut = build_automaton(family_A(2))
    assert aut.names == ("", "x1", "x2", "x3", "x4")
    for i in range(1, 5):
        for x in range(4):
            target = aut.delta[i][x]
            assert (target is None) == (x == i - 1)


def test_build_automaton_free_and_square():
    free = build_automaton(Presentation(AB, ()))
    assert free.names == ("",)
    assert free.delta == ((0, 0),)
    sq = build_automaton(pres(AB, "aa"))
    assert sq.names == ("", "a", "b")
    a = sq.state_index("a")
    assert sq.delta[a][0] is None
    assert sq.delta[a][1] == sq.state_index("b")


def test_automaton_acceptance_matches_scanning():
    rng = random.Random(5)
    for _ in range(40):
        p = random_presentation(rng)
        aut = build_automaton(p)
        for letters in oracles.all_words(p.alphabet.size, 0, 6):
            w = Word(p.alphabet, letters)
            assert aut.accepts(w) == p.is_normal(w)


def test_subword_closure_of_built_automata():
    rng = random.Random(6)
    for _ in range(20):
        aut = build_automaton(random_presentation(rng))
        check_factor_closed(aut)


def test_count_words_examples():
    a4 = build_automaton(family_A(2))
    assert count_words(a4, 10) == [4 * 3 ** (k - 1) for k in range(1, 11)]
    free = build_automaton(Presentation(AB, ()))
    assert count_words(free, 6) == [2 ** k for k in range(1, 7)]
    ba = build_automaton(pres(AB, "ba"))
    assert count_words(ba, 8) == [k + 1 for k in range(1, 9)]
    assert total_dims([4, 12]) == [5, 17]


def test_counts_match_brute_force():
    rng = random.Random(9)
    for _ in range(25):
        p = random_presentation(rng)
        aut = build_automaton(p)
        forb = [w.letters for w in p.forbidden]
        for k in range(1, 7):
            assert count_words(aut, k)[-1] == len(
                oracles.brute_normal_words(forb, p.alphabet.size, k)
            )


def test_words_of_length_enumeration():
    aut = build_automaton(pres(AB, "ba"))
    got = [w.text() for w in aut.words_of_length(3)]
    assert got == ["aaa", "aab", "abb", "bbb"]


def test_classify_growth_examples():
    a4 = classify_growth(build_automaton(family_A(2)))
    assert a4.kind == "exponential"
    assert a4.witness_vertex == "x1"
    assert [w.text() for w in a4.cycle_words] == ["x2 x1", "x3 x1"]

    one = classify_growth(build_automaton(Presentation(Alphabet("a"), ())), k_max=6)
    assert one.kind == "polynomial" and one.degree == 1
    assert list(one.counts) == [1] * 6

    ba = classify_growth(build_automaton(pres(AB, "ba")))
    assert ba.kind == "polynomial" and ba.degree == 2

    finite = classify_growth(build_automaton(pres(AB, "a", "b")), k_max=4)
    assert finite.kind == "polynomial" and finite.degree == 0
    assert list(finite.counts) == [0, 0, 0, 0]


def test_growth_flag_consistent_with_counts():
    rng = random.Random(21)
    for _ in range(30):
        aut = build_automaton(random_presentation(rng))
        report = classify_growth(aut, k_max=14)
        if report.kind == "exponential":
            block = sum(len(w) for w in report.cycle_words)
            for k in range(1, 13):
                assert report.counts[k - 1] >= 2 ** (k // block)
        else:
            d = report.degree
            if d == 0:
                assert report.counts[-1] == 0
            else:
                fit = max(c / k ** (d - 1) for k, c in enumerate(report.counts, 1))
                for k, c in enumerate(report.counts, 1):
                    assert c <= 2 * fit * k ** (d - 1) + 1e-9


def test_hilbert_examples():
    assert hilbert_series(build_automaton(Presentation(AB, ()))) == ((1,), (1, -2))
    assert hilbert_series(build_automaton(family_A(2))) == ((1, 1), (1, -3))
    one_letter = build_automaton(Presentation(Alphabet("a"), ()))
    assert hilbert_series(one_letter) == ((1,), (1, -1))
    assert hilbert_series(build_automaton(pres(AB, "ba"))) == ((1,), (1, -2, 1))


def test_hilbert_expansion_reproduces_counts():
    rng = random.Random(23)
    for _ in range(20):
        aut = build_automaton(random_presentation(rng))
        p, q = hilbert_series(aut)
        k = 2 * (2 * aut.n_states + 2)
        values = [1] + count_words(aut, k)
        assert oracles.series_matches(p, q, values)
        assert expand_series(p, q, k) == values
        assert q[0] == 1


def test_hilbert_needs_enough_terms():
    aut = build_automaton(family_A(2))
    with pytest.raises(RecurrenceNotStabilized):
        hilbert_series(aut, k_max=5)


def test_charpoly_small():
    assert _charpoly_reversed([[2]]) == [1, -2]
    m = [[1, 2], [3, 4]]
    assert _charpoly_reversed(m) == oracles.det_i_minus_tm_2x2(m)
    # permutation matrix of a 3-cycle: det(I - tM) = 1 - t^3
    rot = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    assert _charpoly_reversed(rot) == [1, 0, 0, -1]


def test_determinize_deterministic_input():
    aut = build_automaton(pres(AB, "aa"))
    g = LabeledGraph(
        alphabet=AB,
        vertices=aut.names,
        edges=tuple(
            (aut.names[q], AB.symbols[x], aut.names[t])
            for q, row in enumerate(aut.delta)
            for x, t in enumerate(row)
            if t is not None
        ),
        initials=("",),
    )
    det = determinize_graph(g)
    assert det.n_states == aut.n_states
    for letters in oracles.all_words(2, 0, 6):
        w = Word(AB, letters)
        assert det.accepts(w) == aut.accepts(w)


def test_determinize_merges_parallel_edges():
    g = LabeledGraph(
        alphabet=AB,
        vertices=("p", "q", "r"),
        edges=(("p", "a", "q"), ("p", "a", "r"), ("q", "a", "p"), ("r", "a", "p")),
        initials=("p",),
    )
    det = determinize_graph(g)
    assert det.accepts(AB.word("aaaa"))
    assert not det.accepts(AB.word("b"))
    assert det.n_states == 2  # {p} and {q,r}


def test_determinize_rejects_non_factor_closed():
    g = LabeledGraph(
        alphabet=AB,
        vertices=("0", "1", "2"),
        edges=(("0", "a", "1"), ("1", "b", "2")),
        initials=("0",),
    )
    with pytest.raises(NotSubwordClosed) as exc:
        determinize_graph(g)
    assert exc.value.factor == "b"
