"""Regular words, the ▷ order on periodic tails, and standard bracketing.

Convention: a word is *regular* when it is strictly the lexicographically
greatest among its rotations (the mirror of the usual smallest-rotation
Lyndon convention).  f ▷ g compares the infinite periodic tails f··f·· and
g··g··; it is computed exactly on the finite words f·g and g·f.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import CyclicInput, EquivalentInputs, NotRegular
from .words import Alphabet, LexOutcome, Word, lex_compare, primitive_root


class UfnOutcome(enum.Enum):
    GREATER = "greater"
    LESS = "less"
    EQUIVALENT = "equivalent"


def ufn_compare(f: Word, g: Word) -> UfnOutcome:
    """Compare periodic tails: Greater iff f^∞ > g^∞; Equivalent iff same root.

    Uses the classic identity: f^∞ > g^∞ iff f·g > g·f, with equality exactly
    when f and g are powers of a common word.
    """
    if not f.letters or not g.letters:
        raise ValueError("ufn_compare needs nonempty words")
    out = lex_compare(f + g, g + f)
    if out is LexOutcome.EQUAL:
        return UfnOutcome.EQUIVALENT
    return UfnOutcome.GREATER if out is LexOutcome.GREATER else UfnOutcome.LESS


def inf_prefix(u: Word, length: int) -> Word:
    """Prefix of the periodic tail u·u·u·· of the given length."""
    reps = -(-length // len(u))
    return (u * reps)[:length]


class Regularity(enum.Enum):
    REGULAR = "regular"
    SEMI_REGULAR_POWER = "semi_regular_power"
    NOT_SEMI_REGULAR = "not_semi_regular"


@dataclass(frozen=True)
class RegularityClass:
    kind: Regularity
    root: Word | None = None
    exponent: int | None = None

    @property
    def is_semi_regular(self) -> bool:
        return self.kind is not Regularity.NOT_SEMI_REGULAR


def is_regular(u: Word) -> bool:
    """True iff u strictly exceeds every proper rotation of itself."""
    letters = u.letters
    n = len(letters)
    if n == 0:
        return False
    doubled = letters + letters
    return all(letters > doubled[s : s + n] for s in range(1, n))


def classify_regularity(u: Word) -> RegularityClass:
    """Regular, a proper power of a regular word, or neither."""
    if not u.letters:
        raise ValueError("empty word")
    if is_regular(u):
        return RegularityClass(Regularity.REGULAR)
    root, k = primitive_root(u)
    if k >= 2 and is_regular(root):
        return RegularityClass(Regularity.SEMI_REGULAR_POWER, root, k)
    return RegularityClass(Regularity.NOT_SEMI_REGULAR)


def is_semi_regular(u: Word) -> bool:
    return classify_regularity(u).is_semi_regular


def regular_rotation(u: Word) -> tuple[int, Word]:
    """The unique regular rotation of a primitive word, with its shift."""
    root, k = primitive_root(u)
    if k > 1:
        raise CyclicInput(f"{u!r} = {root!r}**{k} has no unique regular rotation")
    best = max(range(len(u)), key=lambda s: u.letters[s:] + u.letters[:s])
    return best, u.rotated(best)


class BracketTree:
    """Binary bracket arrangement; leaves carry single-letter words."""

    __slots__ = ()

    @property
    def frontier(self) -> Word:
        raise NotImplementedError


@dataclass(frozen=True)
class Leaf(BracketTree):
    letter: Word

    def __post_init__(self):
        if len(self.letter) != 1:
            raise ValueError("leaf must hold a single letter")

    @property
    def frontier(self) -> Word:
        return self.letter

    def __repr__(self):
        return self.letter.text()


@dataclass(frozen=True)
class Node(BracketTree):
    left: BracketTree
    right: BracketTree

    @property
    def frontier(self) -> Word:
        return self.left.frontier + self.right.frontier

    def __repr__(self):
        return f"[{self.left!r},{self.right!r}]"


def standard_bracketing(u: Word) -> BracketTree:
    """Standard factorization tree of a regular word.

    Splits u = u1·u2 with u2 the longest proper regular suffix (then u1 is
    regular as well) and recurses; a single letter is a leaf.  Expanding the
    tree in the free algebra yields u as the highest monomial, coefficient 1.
    """
    if not is_regular(u):
        raise NotRegular(f"{u!r} is not regular")
    return _bracket_regular(u)


def _bracket_regular(u: Word) -> BracketTree:
    if len(u) == 1:
        return Leaf(u)
    for i in range(1, len(u)):
        if is_regular(u[i:]):
            u1, u2 = u[:i], u[i:]
            assert is_regular(u1), f"prefix {u1!r} of {u!r} not regular"
            return Node(_bracket_regular(u1), _bracket_regular(u2))
    raise AssertionError(f"no regular proper suffix in {u!r}")


def enumerate_regular(alphabet: Alphabet, max_len: int) -> list[Word]:
    """All regular words of length <= max_len, in decreasing ▷ order."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    words = [Word(alphabet, w) for w in _duval_mirrored(alphabet.size, max_len)]
    window = 2 * max_len
    words.sort(key=lambda u: inf_prefix(u, window).letters, reverse=True)
    return words


def _duval_mirrored(size: int, max_len: int):
    """Duval's generation run on the reversed letter order.

    Yields exactly the letter tuples whose words are greatest among their
    rotations (mirror image of the smallest-rotation generation).
    """
    top = size - 1
    w = [-1]
    while w:
        w[-1] += 1
        m = len(w)
        yield tuple(top - x for x in w)
        while len(w) < max_len:
            w.append(w[-m])
        while w and w[-1] == top:
            w.pop()


def power_product(u: Word, v: Word, k: int, l: int) -> tuple[Word, bool]:
    """u**k · v**l for ▷-ordered non-equivalent u, v; reports its regularity.

    Regularity of the product is guaranteed only for large enough exponents,
    so it is verified on the result rather than assumed.
    """
    if k < 1 or l < 1:
        raise ValueError("exponents must be positive")
    out = ufn_compare(u, v)
    if out is UfnOutcome.EQUIVALENT:
        raise EquivalentInputs(f"{u!r} and {v!r} share a primitive root")
    if out is not UfnOutcome.GREATER:
        raise ValueError(f"need u ▷ v, got {u!r} ◁ {v!r}")
    w = u * k + v * l
    return w, is_regular(w)


def substitute(w: Word, u: Word, v: Word) -> Word:
    """Image of a two-letter pattern under greater-letter ↦ u, smaller ↦ v."""
    if w.alphabet.size != 2:
        raise ValueError("pattern must be over a two-letter alphabet")
    if u.alphabet != v.alphabet:
        raise ValueError("u and v must share an alphabet")
    if not u.letters or not v.letters:
        raise ValueError("u and v must be nonempty")
    out = []
    for x in w.letters:
        out.extend(u.letters if x == 1 else v.letters)
    return Word(u.alphabet, out)
