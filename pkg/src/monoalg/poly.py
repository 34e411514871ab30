"""Exact integer noncommutative polynomials over a free alphabet.

Sparse map monomial → coefficient; the empty word is the unit monomial.
The monomial order used by leading_monomial is total length first, then lex,
so it is total on inhomogeneous elements.
"""

from __future__ import annotations

from .errors import AlphabetMismatch, ZeroPolynomial
from .regular import BracketTree, Leaf, Node
from .words import Alphabet, Word


class NcPoly:
    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=None):
        self.alphabet = alphabet
        self.terms: dict[Word, int] = {}
        if terms:
            for w, c in dict(terms).items():
                if w.alphabet != alphabet:
                    raise AlphabetMismatch(f"monomial {w!r} not over {alphabet!r}")
                if c:
                    self.terms[w] = c

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NcPoly":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NcPoly":
        return cls.monomial(alphabet.empty())

    @classmethod
    def monomial(cls, w: Word, coeff: int = 1) -> "NcPoly":
        return cls(w.alphabet, {w: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: Word) -> int:
        return self.terms.get(w, 0)

    def constant_term(self) -> int:
        return self.terms.get(self.alphabet.empty(), 0)

    def __eq__(self, other):
        return (
            isinstance(other, NcPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.alphabet, frozenset(self.terms.items())))

    def __add__(self, other: "NcPoly") -> "NcPoly":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NcPoly(self.alphabet, out)

    def __neg__(self) -> "NcPoly":
        return NcPoly(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return NcPoly(self.alphabet, {w: c * other for w, c in self.terms.items()})
        self._check(other)
        out: dict[Word, int] = {}
        alphabet = self.alphabet
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = Word(alphabet, w1.letters + w2.letters)
                s = out.get(w, 0) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return NcPoly(alphabet, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def _check(self, other):
        if not isinstance(other, NcPoly):
            raise TypeError(f"expected NcPoly, got {type(other).__name__}")
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch("polynomials over different alphabets")

    def sorted_terms(self) -> list[tuple[Word, int]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0].letters))

    def __repr__(self):
        if not self.terms:
            return "NcPoly(0)"
        bits = []
        for w, c in reversed(self.sorted_terms()):
            mono = w.text() if w.letters else "1"
            if c == 1:
                bits.append(f"+ {mono}")
            elif c == -1:
                bits.append(f"- {mono}")
            else:
                bits.append(f"{'+' if c > 0 else '-'} {abs(c)}·{mono}")
        s = " ".join(bits)
        return f"NcPoly({s[2:] if s.startswith('+ ') else s})"


def multiply(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q


def lie_bracket(p: NcPoly, q: NcPoly) -> NcPoly:
    return p * q - q * p


def expand_bracket(t: BracketTree) -> NcPoly:
    """Open all brackets of the tree into the free algebra."""
    if isinstance(t, Leaf):
        return NcPoly.monomial(t.letter)
    if isinstance(t, Node):
        return lie_bracket(expand_bracket(t.left), expand_bracket(t.right))
    raise TypeError(f"not a bracket tree: {t!r}")


def leading_monomial(p: NcPoly) -> tuple[Word, int]:
    """Greatest monomial (length first, then lex) with its coefficient."""
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no leading monomial")
    w = max(p.terms, key=lambda m: (len(m), m.letters))
    return w, p.terms[w]


def lowest_monomial(p: NcPoly) -> tuple[Word, int]:
    """Smallest monomial under the same order; the dual of leading_monomial."""
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no lowest monomial")
    w = min(p.terms, key=lambda m: (len(m), m.letters))
    return w, p.terms[w]


def reduce_mod_ideal(p: NcPoly, aut) -> NcPoly:
    """Canonical image in the monomial algebra: drop monomials the automaton rejects."""
    if p.alphabet != aut.alphabet:
        raise AlphabetMismatch("polynomial and automaton alphabets differ")
    return NcPoly(p.alphabet, {w: c for w, c in p.terms.items() if aut.accepts(w)})


def truncate(p: NcPoly, degree: int) -> NcPoly:
    """Drop every monomial of length >= degree (the image in A/J^degree)."""
    if degree < 1:
        raise ValueError("truncation degree must be >= 1")
    return NcPoly(p.alphabet, {w: c for w, c in p.terms.items() if len(w) < degree})
