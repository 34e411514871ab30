"""Desk-scale freeness verification.

Lie side: the standard bracketings of a certificate pair, substituted into
every regular two-letter pattern up to a degree bound, must expand to
elements of the monomial algebra whose leading monomials are exactly the
substituted words; distinct leading monomials certify linear independence.

Group side: units 1+a in the length-truncated algebra are invertible
outright, so group words in 1+[u], 1+[v] can be evaluated exactly; a nonzero
result proves the word is not a relation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import UfnAutomaton, build_automaton, family_A
from .errors import RelationFails, TruncationTooSmall, WordVanishes
from .finder import FreePairCertificate, validate_certificate
from .poly import NcPoly, expand_bracket, leading_monomial, lie_bracket, reduce_mod_ideal, truncate
from .regular import (
    BracketTree,
    Leaf,
    Node,
    enumerate_regular,
    standard_bracketing,
    substitute,
)
from .words import Alphabet, Word

#: two-letter pattern alphabet for Hall words; "A" is the greater letter.
PATTERN_ALPHABET = Alphabet(("B", "A"))


@dataclass(frozen=True)
class HallRow:
    pattern: Word
    substituted: Word
    leading: Word
    coefficient: int


@dataclass(frozen=True)
class LieFreenessReport:
    degree: int
    rows: tuple[HallRow, ...]
    verdict: str  # "verified" | "refuted"
    offending: Word | None = None

    @property
    def verified(self) -> bool:
        return self.verdict == "verified"


def _graft(tree: BracketTree, plug_a: BracketTree, plug_b: BracketTree) -> BracketTree:
    """Replace pattern leaves: greater letter by plug_a, smaller by plug_b."""
    if isinstance(tree, Leaf):
        return plug_a if tree.letter.letters[0] == 1 else plug_b
    return Node(
        _graft(tree.left, plug_a, plug_b), _graft(tree.right, plug_a, plug_b)
    )


def _expand_reduced(tree: BracketTree, aut: UfnAutomaton) -> NcPoly:
    """Bracket expansion with reduction after every bracket.

    Reduction modulo a monomial ideal is an algebra map, so this equals
    reducing the full free expansion, while keeping intermediates small.
    """
    if isinstance(tree, Leaf):
        return reduce_mod_ideal(NcPoly.monomial(tree.letter), aut)
    left = _expand_reduced(tree.left, aut)
    right = _expand_reduced(tree.right, aut)
    return reduce_mod_ideal(lie_bracket(left, right), aut)


def verify_lie_freeness(
    aut: UfnAutomaton, cert: FreePairCertificate, degree: int
) -> LieFreenessReport:
    """Check the Hall-basis correspondence through the given pattern degree."""
    if degree < 1:
        raise ValueError("degree must be >= 1")
    validate_certificate(aut, cert)

    base = aut.state_index(cert.base_vertex)
    rows = []
    seen: dict[Word, Word] = {}
    for pattern in enumerate_regular(PATTERN_ALPHABET, degree):
        image = substitute(pattern, cert.u, cert.v)
        if aut.walk(base, image) is None:
            return LieFreenessReport(degree, tuple(rows), "refuted", pattern)
        if image in seen:
            return LieFreenessReport(degree, tuple(rows), "refuted", pattern)
        seen[image] = pattern
        tree = _graft(standard_bracketing(pattern), cert.bracket_u, cert.bracket_v)
        poly = _expand_reduced(tree, aut)
        if poly.is_zero():
            return LieFreenessReport(degree, tuple(rows), "refuted", pattern)
        lead, coeff = leading_monomial(poly)
        rows.append(HallRow(pattern, image, lead, coeff))
        if lead != image or coeff != 1:
            return LieFreenessReport(degree, tuple(rows), "refuted", pattern)
    return LieFreenessReport(degree, tuple(rows), "verified")


class TruncatedUnit:
    """Unit 1 + (length >= 1 terms) of the algebra truncated at degree N.

    When an automaton is attached, all arithmetic also reduces modulo its
    monomial ideal, i.e. the unit lives in the quotient algebra.
    """

    __slots__ = ("poly", "n", "aut")

    def __init__(self, poly: NcPoly, n: int, aut: UfnAutomaton | None = None):
        if n < 1:
            raise ValueError("truncation degree must be >= 1")
        poly = truncate(poly, n)
        if aut is not None:
            poly = reduce_mod_ideal(poly, aut)
        if poly.constant_term() != 1:
            raise ValueError("unit must have constant term exactly 1")
        self.poly = poly
        self.n = n
        self.aut = aut

    def _compatible(self, other: "TruncatedUnit"):
        if self.n != other.n:
            raise ValueError("mismatched truncation degrees")
        if self.aut is not other.aut:
            raise ValueError("mismatched quotient contexts")

    def __mul__(self, other: "TruncatedUnit") -> "TruncatedUnit":
        self._compatible(other)
        return TruncatedUnit(self.poly * other.poly, self.n, self.aut)

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedUnit)
            and self.n == other.n
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.poly, self.n))

    def is_one(self) -> bool:
        return self.poly == NcPoly.one(self.poly.alphabet)

    def __repr__(self):
        return f"TruncatedUnit({self.poly!r}, n={self.n})"


def unit_inverse(g: TruncatedUnit) -> TruncatedUnit:
    """Alternating geometric series of the augmentation part."""
    alphabet = g.poly.alphabet
    x = g.poly - NcPoly.one(alphabet)
    acc = NcPoly.one(alphabet)
    power = NcPoly.one(alphabet)
    sign = 1
    while True:
        power = truncate(power * x, g.n)
        if g.aut is not None:
            power = reduce_mod_ideal(power, g.aut)
        if power.is_zero():
            break
        sign = -sign
        acc = acc + power * sign
    return TruncatedUnit(acc, g.n, g.aut)


def left_normalized_commutator(gs: list[TruncatedUnit]) -> TruncatedUnit:
    """Fold [a, b] = a⁻¹·b⁻¹·a·b over the list, left to right."""
    if not gs:
        raise ValueError("need at least one unit")
    acc = gs[0]
    for g in gs[1:]:
        acc = unit_inverse(acc) * unit_inverse(g) * acc * g
    return acc


def _index_patterns(length: int, max_distinct: int):
    """Canonical index tuples (first occurrences in order) with few values."""
    out = []

    def rec(prefix, used):
        if len(prefix) == length:
            if used <= max_distinct:
                out.append(tuple(prefix))
            return
        for v in range(1, min(used + 1, max_distinct) + 1):
            rec(prefix + [v], max(used, v))

    rec([], 0)
    return out


@dataclass(frozen=True)
class GroupRelationsReport:
    n: int
    truncation: int
    checked: tuple[tuple[int, ...], ...]
    verdict: str = "verified"


def verify_group_relations(n: int, truncation: int, cap: int = 500) -> GroupRelationsReport:
    """All short left-normalized commutators on repeated generators are 1.

    Works in the quotient algebra of the n-parameter family, truncated at the
    given degree; commutators of length k in 3..n built from fewer than k
    distinct generators must vanish exactly.  Index tuples are enumerated up
    to generator relabeling, which the relations are symmetric under.
    """
    if n < 3:
        raise ValueError("relations only exist for n >= 3")
    aut = build_automaton(family_A(n))
    alphabet = aut.alphabet
    gens = [
        TruncatedUnit(
            NcPoly.one(alphabet) + NcPoly.monomial(Word(alphabet, (i,))),
            truncation,
            aut,
        )
        for i in range(alphabet.size)
    ]
    checked = []
    for k in range(3, n + 1):
        for pattern in _index_patterns(k, k - 1):
            if len(checked) >= cap:
                return GroupRelationsReport(n, truncation, tuple(checked))
            comm = left_normalized_commutator([gens[i - 1] for i in pattern])
            if not comm.is_one():
                raise RelationFails(
                    pattern, detail=f"(n={n}, truncation={truncation})"
                )
            checked.append(pattern)
    return GroupRelationsReport(n, truncation, tuple(checked))


@dataclass(frozen=True)
class FreeSubgroupReport:
    max_word_len: int
    truncation: int
    words_checked: int
    verdict: str = "verified"


def _reduced_group_words(max_len: int):
    """Nonempty reduced words over g, g⁻¹, h, h⁻¹ up to max_len, short first."""
    letters = ("g", "g^-1", "h", "h^-1")
    inverse = {0: 1, 1: 0, 2: 3, 3: 2}
    frontier = [[i] for i in range(4)]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            yield tuple(letters[i] for i in w), tuple(w)
            nxt.extend(w + [i] for i in range(4) if i != inverse[w[-1]])
        frontier = nxt


def verify_free_subgroup(
    aut: UfnAutomaton,
    cert: FreePairCertificate,
    max_word_len: int,
    truncation: int | None = None,
) -> FreeSubgroupReport:
    """No reduced word of bounded length in 1+[u], 1+[v] equals 1.

    The truncation must keep the lowest homogeneous component of any failed
    relation alive, which needs N > max_word_len·max(|u|,|v|) + 1; the
    default adds one more for headroom.
    """
    if max_word_len < 1:
        raise ValueError("max_word_len must be >= 1")
    validate_certificate(aut, cert)
    floor = max_word_len * max(len(cert.u), len(cert.v)) + 1
    if truncation is None:
        truncation = floor + 1
    if truncation <= floor:
        raise TruncationTooSmall(
            f"truncation {truncation} <= {floor} cannot separate words of length {max_word_len}"
        )

    one = NcPoly.one(aut.alphabet)
    g = TruncatedUnit(
        one + reduce_mod_ideal(expand_bracket(cert.bracket_u), aut), truncation, aut
    )
    h = TruncatedUnit(
        one + reduce_mod_ideal(expand_bracket(cert.bracket_v), aut), truncation, aut
    )
    table = {0: g, 1: unit_inverse(g), 2: h, 3: unit_inverse(h)}

    checked = 0
    cache: dict[tuple[int, ...], TruncatedUnit] = {}
    for rendered, word in _reduced_group_words(max_word_len):
        prefix = word[:-1]
        value = (cache[prefix] if prefix else None)
        value = table[word[-1]] if value is None else value * table[word[-1]]
        cache[word] = value
        if value.is_one():
            raise WordVanishes(rendered)
        checked += 1
    return FreeSubgroupReport(max_word_len, truncation, checked)
