"""Lie-freeness and group-freeness verification."""

import random

import pytest

from monoalg.automaton import Presentation, build_automaton, family_A
from monoalg.errors import (
    InvalidCertificate,
    RelationFails,
    TruncationTooSmall,
    WordVanishes,
)
from monoalg.finder import FreePairCertificate, find_regular_pair
from monoalg.poly import NcPoly, reduce_mod_ideal
from monoalg.regular import standard_bracketing
from monoalg.verify import (
    PATTERN_ALPHABET,
    TruncatedUnit,
    left_normalized_commutator,
    unit_inverse,
    verify_free_subgroup,
    verify_group_relations,
    verify_lie_freeness,
)
from monoalg.words import Alphabet, Word

import oracles

AB = Alphabet("ab")
FREE2 = build_automaton(Presentation(AB, ()))
A4 = build_automaton(family_A(2))
A5 = build_automaton(family_A(3))


def hand_cert(aut, u_text, v_text):
    u, v = aut.alphabet.word(u_text), aut.alphabet.word(v_text)
    return FreePairCertificate(
        u=u,
        v=v,
        base_vertex=aut.names[aut.root],
        cycle_words=(v, u),
        exponents=((0, 1), (1, 0)),
        bracket_u=standard_bracketing(u),
        bracket_v=standard_bracketing(v),
    )


def test_lie_freeness_free_algebra_degree3():
    cert = hand_cert(FREE2, "b", "a")
    report = verify_lie_freeness(FREE2, cert, 3)
    assert report.verified
    rows = {r.pattern.text(): (r.substituted.text(), r.leading.text(), r.coefficient)
            for r in report.rows}
    assert rows == {
        "A": ("b", "b", 1),
        "B": ("a", "a", 1),
        "AB": ("ba", "ba", 1),
        "AAB": ("bba", "bba", 1),
        "ABB": ("baa", "baa", 1),
    }


def test_lie_freeness_degree1_trivial():
    cert = find_regular_pair(A4)
    report = verify_lie_freeness(A4, cert, 1)
    assert report.verified and len(report.rows) == 2


def test_lie_freeness_rejects_tampered_cert():
    cert = find_regular_pair(A4)
    broken = FreePairCertificate(
        u=cert.u,
        v=cert.u,
        base_vertex=cert.base_vertex,
        cycle_words=cert.cycle_words,
        exponents=cert.exponents,
        bracket_u=cert.bracket_u,
        bracket_v=cert.bracket_u,
    )
    with pytest.raises(InvalidCertificate):
        verify_lie_freeness(A4, broken, 2)


def test_hall_pattern_counts():
    from monoalg.regular import enumerate_regular

    words = enumerate_regular(PATTERN_ALPHABET, 5)
    by_len = [sum(1 for w in words if len(w) == m) for m in range(1, 6)]
    assert by_len == [2, 1, 2, 3, 6]
    assert len(words) == 14
    assert by_len == [oracles.necklace_count(2, m) for m in range(1, 6)]


def test_unit_inverse_examples():
    x = Alphabet("x")
    one = NcPoly.one(x)
    g = TruncatedUnit(one + NcPoly.monomial(x.word("x")), 3)
    inv = unit_inverse(g)
    assert inv.poly == one - NcPoly.monomial(x.word("x")) + NcPoly.monomial(
        x.word("xx")
    )
    e = TruncatedUnit(one, 3)
    assert unit_inverse(e).poly == one
    assert (g * inv).is_one() and (inv * g).is_one()


def random_unit(rng, alphabet, n):
    poly = NcPoly.one(alphabet)
    for _ in range(rng.randint(1, 3)):
        deg = rng.randint(1, n - 1)
        w = Word(alphabet, (rng.randrange(alphabet.size) for _ in range(deg)))
        poly = poly + NcPoly.monomial(w, rng.randint(-2, 2))
    return TruncatedUnit(poly, n)


def test_random_units_invert_and_antihomomorphism():
    rng = random.Random(41)
    for _ in range(1000):
        n = rng.randint(2, 6)
        g, h = random_unit(rng, AB, n), random_unit(rng, AB, n)
        assert (g * unit_inverse(g)).is_one()
        assert unit_inverse(g * h) == unit_inverse(h) * unit_inverse(g)


def test_left_normalized_commutator_basics():
    x = Alphabet("x")
    g = TruncatedUnit(NcPoly.one(x) + NcPoly.monomial(x.word("x")), 4)
    assert left_normalized_commutator([g]) == g
    assert left_normalized_commutator([g, g]).is_one()


def test_commutator_leading_term():
    x12 = Alphabet(("x1", "x2"))
    one = NcPoly.one(x12)
    g = TruncatedUnit(one + NcPoly.monomial(x12.word(["x1"])), 3)
    h = TruncatedUnit(one + NcPoly.monomial(x12.word(["x2"])), 3)
    c = left_normalized_commutator([g, h]).poly
    x1x2 = NcPoly.monomial(x12.word(["x1", "x2"]))
    x2x1 = NcPoly.monomial(x12.word(["x2", "x1"]))
    # degree-2 part of [1+x1, 1+x2] is the ring commutator
    deg2 = NcPoly(x12, {w: c2 for w, c2 in c.terms.items() if len(w) == 2})
    assert deg2 == x1x2 - x2x1


def test_group_relations_family():
    report = verify_group_relations(3, 8)
    assert report.verdict == "verified"
    assert report.checked == ((1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2))

    report4 = verify_group_relations(4, 8, cap=500)
    assert report4.verdict == "verified"
    lengths = sorted(set(len(t) for t in report4.checked))
    assert lengths == [3, 4]


def test_length2_commutator_is_not_trivial():
    """Negative control: short commutators are not relations of the family."""
    aut = A5
    alphabet = aut.alphabet
    one = NcPoly.one(alphabet)
    g = TruncatedUnit(one + NcPoly.monomial(alphabet.word(["x1"])), 8, aut)
    h = TruncatedUnit(one + NcPoly.monomial(alphabet.word(["x2"])), 8, aut)
    assert not left_normalized_commutator([g, h]).is_one()


def test_relations_depend_on_the_ideal():
    """Negative control: without the monomial ideal the very same commutators
    do not vanish, so the relation check is not vacuous."""
    alphabet = Alphabet([f"x{i}" for i in range(1, 6)])
    one = NcPoly.one(alphabet)
    gens = [
        TruncatedUnit(one + NcPoly.monomial(Word(alphabet, (i,))), 8)
        for i in range(5)
    ]
    free_comm = left_normalized_commutator([gens[0], gens[1], gens[0]])
    assert not free_comm.is_one()
    quotient_gens = [
        TruncatedUnit(one + NcPoly.monomial(Word(alphabet, (i,))), 8, A5)
        for i in range(5)
    ]
    assert left_normalized_commutator(
        [quotient_gens[0], quotient_gens[1], quotient_gens[0]]
    ).is_one()


def test_free_subgroup_free_algebra():
    cert = hand_cert(FREE2, "b", "a")
    report = verify_free_subgroup(FREE2, cert, 3, truncation=6)
    assert report.verdict == "verified"
    assert report.words_checked == 4 + 12 + 36


def test_free_subgroup_default_truncation():
    cert = find_regular_pair(A5)
    report = verify_free_subgroup(A5, cert, 2)
    assert report.truncation == 2 * len(cert.u) + 2
    assert report.verdict == "verified"


def test_free_subgroup_truncation_guard():
    cert = find_regular_pair(A4)
    with pytest.raises(TruncationTooSmall):
        verify_free_subgroup(A4, cert, 3, truncation=3)


def test_free_subgroup_monotone_in_length():
    cert = find_regular_pair(A4)
    long_run = verify_free_subgroup(A4, cert, 3)
    short_run = verify_free_subgroup(A4, cert, 2, truncation=long_run.truncation)
    assert long_run.verdict == short_run.verdict == "verified"
    assert short_run.words_checked < long_run.words_checked


def test_word_vanishes_alarm(monkeypatch):
    """The alarm path: in the quotient killing every length-2 word the unit
    group is abelian, so the commutator word must evaluate to 1.  Such an
    automaton admits no valid certificate, so validation is stubbed out to
    reach the evaluation."""
    import monoalg.verify as verify_mod

    aut = build_automaton(
        Presentation(AB, (AB.word("aa"), AB.word("ab"), AB.word("ba"), AB.word("bb")))
    )
    cert = hand_cert(aut, "b", "a")
    monkeypatch.setattr(verify_mod, "validate_certificate", lambda a, c: None)
    with pytest.raises(WordVanishes) as exc:
        verify_free_subgroup(aut, cert, 4, truncation=12)
    assert len(exc.value.word) == 4
