"""Finite words over an ordered alphabet and the periodicity toolkit.

Words are immutable sequences of letter indices into an :class:`Alphabet`;
the alphabet's symbol order *is* the base order used by every comparison.
All positions are 0-based.
"""

from __future__ import annotations

import enum
from math import gcd

from .errors import AlphabetMismatch, CyclicInput, EquationDoesNotHold


class Alphabet:
    """Ordered alphabet; the symbol sequence defines the total order."""

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols):
        self.symbols = tuple(str(s) for s in symbols)
        if not self.symbols:
            raise ValueError("alphabet must be nonempty")
        self._index = {s: i for i, s in enumerate(self.symbols)}
        if len(self._index) != len(self.symbols):
            raise ValueError(f"duplicate symbols in {self.symbols}")

    @property
    def size(self) -> int:
        return len(self.symbols)

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise ValueError(f"unknown symbol {symbol!r}") from None

    def word(self, symbols) -> "Word":
        """Build a word from a string (one char per symbol) or symbol iterable."""
        return Word(self, (self.index(s) for s in symbols))

    def letters_word(self, letters) -> "Word":
        return Word(self, letters)

    def empty(self) -> "Word":
        return Word(self, ())

    def __eq__(self, other):
        return self is other or (
            isinstance(other, Alphabet) and self.symbols == other.symbols
        )

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"Alphabet({list(self.symbols)!r})"


class Word:
    """Immutable word: a tuple of letter indices plus its alphabet."""

    __slots__ = ("alphabet", "letters")

    def __init__(self, alphabet: Alphabet, letters):
        self.alphabet = alphabet
        self.letters = tuple(letters)
        n = alphabet.size
        for x in self.letters:
            if not 0 <= x < n:
                raise ValueError(f"letter index {x} out of range for {alphabet!r}")

    def __len__(self):
        return len(self.letters)

    def __bool__(self):
        return bool(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return Word(self.alphabet, self.letters[i])
        return self.letters[i]

    def __eq__(self, other):
        return (
            isinstance(other, Word)
            and self.letters == other.letters
            and self.alphabet == other.alphabet
        )

    def __hash__(self):
        return hash(self.letters)

    def __add__(self, other: "Word") -> "Word":
        if self.alphabet != other.alphabet:
            raise AlphabetMismatch(f"{self!r} + {other!r}")
        return Word(self.alphabet, self.letters + other.letters)

    def __mul__(self, k: int) -> "Word":
        return Word(self.alphabet, self.letters * k)

    __rmul__ = __mul__

    def rotated(self, shift: int) -> "Word":
        """Rotation moving the first `shift` letters to the end."""
        s = shift % len(self) if self.letters else 0
        return Word(self.alphabet, self.letters[s:] + self.letters[:s])

    def symbols(self):
        return tuple(self.alphabet.symbols[x] for x in self.letters)

    def text(self) -> str:
        syms = self.symbols()
        sep = "" if all(len(s) == 1 for s in self.alphabet.symbols) else " "
        return sep.join(syms)

    def __repr__(self):
        return f"Word({self.text()!r})" if self.letters else "Word(ε)"


class LexOutcome(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    LEFT_IS_PREFIX = "left_is_prefix"
    RIGHT_IS_PREFIX = "right_is_prefix"


def lex_compare(a: Word, b: Word) -> LexOutcome:
    """Left-to-right comparison; a proper prefix is reported, not ordered."""
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"lex_compare({a!r}, {b!r})")
    for x, y in zip(a.letters, b.letters):
        if x < y:
            return LexOutcome.LESS
        if x > y:
            return LexOutcome.GREATER
    if len(a) == len(b):
        return LexOutcome.EQUAL
    return LexOutcome.LEFT_IS_PREFIX if len(a) < len(b) else LexOutcome.RIGHT_IS_PREFIX


def primitive_root(u: Word) -> tuple[Word, int]:
    """Shortest root and maximal exponent with u = root**exponent."""
    n = len(u)
    if n == 0:
        raise ValueError("empty word has no primitive root")
    letters = u.letters
    for d in range(1, n + 1):
        if n % d == 0 and letters[:d] * (n // d) == letters:
            return Word(u.alphabet, letters[:d]), n // d
    raise AssertionError("unreachable")


def is_primitive(u: Word) -> bool:
    return primitive_root(u)[1] == 1


def is_cyclically_conjugate(u: Word, v: Word) -> bool:
    """True iff v is a rotation of u."""
    if len(u) != len(v) or u.alphabet != v.alphabet:
        return False
    if not u.letters:
        return True
    return _scan(v.letters, u.letters + u.letters) != []


def factor_positions(pat: Word, text: Word) -> list[int]:
    """All start positions of pat as a factor of text."""
    if not pat.letters:
        raise ValueError("empty pattern")
    if pat.alphabet != text.alphabet:
        raise AlphabetMismatch(f"factor_positions({pat!r}, {text!r})")
    return _scan(pat.letters, text.letters)


def _scan(pat: tuple, text: tuple) -> list[int]:
    m = len(pat)
    return [i for i in range(len(text) - m + 1) if text[i : i + m] == pat]


def occurrences_in_power(v: Word, u: Word, n_copies: int) -> list[int]:
    """Positions of v inside the finite window u repeated n_copies times.

    u must be primitive: occurrence positions of a long enough v then differ
    by multiples of len(u).
    """
    if not v.letters:
        raise ValueError("empty pattern")
    if not is_primitive(u):
        raise CyclicInput(f"{u!r} is a proper power; pass its primitive root")
    if n_copies < 1:
        raise ValueError("need at least one copy")
    return factor_positions(v, u * n_copies)


def shift_equation_decompose(u: Word, w: Word, r: Word) -> tuple[int, Word]:
    """Solve u·W = W·r: W = u**n · p with p a proper prefix of u.

    Checks the equation and returns the unique (n, p); r is then the rotation
    of u by len(p).  Raises EquationDoesNotHold otherwise.
    """
    if len(u) != len(r):
        raise ValueError("u and r must have equal length")
    if not u.letters:
        raise ValueError("u must be nonempty")
    if (u + w).letters != (w + r).letters:
        raise EquationDoesNotHold(f"{u!r}·{w!r} != {w!r}·{r!r}")
    n, rem = divmod(len(w), len(u))
    p = w[n * len(u) :]
    assert w.letters == u.letters * n + p.letters, "period structure violated"
    assert rem < len(u)
    return n, p


def has_period(w: Word, p: int) -> bool:
    """True iff w[i] == w[i+p] wherever both sides exist (p >= len is vacuous)."""
    if p <= 0:
        raise ValueError("period must be positive")
    letters = w.letters
    return all(letters[i] == letters[i + p] for i in range(len(letters) - p))


def check_overlap(m: int, n: int, w: Word) -> bool:
    """Executable overlap lemma for one word.

    If w has periods m and n and len(w) >= m+n-1, then w must have period
    gcd(m, n); true vacuously when the hypothesis fails.
    """
    if not w.letters:
        raise ValueError("empty word")
    if len(w) < m + n - 1 or not has_period(w, m) or not has_period(w, n):
        return True
    return has_period(w, gcd(m, n))
