"""Executable property suites for the periodicity and regular-word laws.

Each law is checked over an explicit finite range (exhaustive where stated,
seeded-random otherwise) and reports its case count; the first failing case
is returned as a counterexample.  Exhaustive laws enumerate inputs in
increasing size, so a reported counterexample is already minimal; random
laws shrink the failure by word length, then alphabet size, before reporting.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .poly import expand_bracket, leading_monomial
from .regular import (
    UfnOutcome,
    inf_prefix,
    is_regular,
    is_semi_regular,
    regular_rotation,
    standard_bracketing,
    substitute,
    ufn_compare,
)
from .words import (
    Alphabet,
    LexOutcome,
    Word,
    check_overlap,
    factor_positions,
    is_cyclically_conjugate,
    is_primitive,
    lex_compare,
    occurrences_in_power,
    primitive_root,
    shift_equation_decompose,
)
from .errors import EquationDoesNotHold

AB = Alphabet("ab")
ABC = Alphabet("abc")


@dataclass(frozen=True)
class LawResult:
    name: str
    cases: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


@dataclass(frozen=True)
class SuiteResult:
    name: str
    laws: tuple[LawResult, ...]

    @property
    def ok(self) -> bool:
        return all(law.ok for law in self.laws)


def _words(alphabet: Alphabet, min_len: int, max_len: int):
    for n in range(min_len, max_len + 1):
        for letters in itertools.product(range(alphabet.size), repeat=n):
            yield Word(alphabet, letters)


def _primitive_words(alphabet: Alphabet, min_len: int, max_len: int):
    return (w for w in _words(alphabet, min_len, max_len) if is_primitive(w))


def _run(checks) -> LawResult:
    """checks: (name, iterator of (case description, bool)); stop at first failure."""
    name, cases = checks
    count = 0
    for desc, ok in cases:
        count += 1
        if not ok:
            return LawResult(name, count, desc)
    return LawResult(name, count)


# ---------------------------------------------------------------------------
# periodic-word laws


def _law_overlap():
    def gen():
        for w in _words(AB, 1, 12):
            for m in range(1, 7):
                for n in range(1, 7):
                    yield f"w={w.text()} m={m} n={n}", check_overlap(m, n, w)

    return "overlap-gcd-period", gen()


def _law_conjugate_factors():
    """Equal-length factors of a power are conjugate; equal ones differ by the period."""

    def gen():
        for u in _primitive_words(AB, 1, 5):
            for n_copies in range(1, 5):
                window = u * (2 * n_copies)
                flen = n_copies * len(u)
                canons = set()
                first_at: dict[tuple, int] = {}
                for i in range(len(window) - flen + 1):
                    f = window[i : i + flen]
                    canons.add(max(f.rotated(s).letters for s in range(flen)))
                    j = first_at.setdefault(f.letters, i)
                    if j != i:
                        yield (
                            f"u={u.text()} N={n_copies} pos {j},{i}",
                            (i - j) % len(u) == 0,
                        )
                yield f"u={u.text()} N={n_copies} one conjugacy class", len(canons) == 1

    return "power-factors-conjugate", gen()


def _law_occurrence_gaps():
    """Occurrences of a long pattern in a power sit a period multiple apart."""

    def gen():
        for u in _primitive_words(AB, 1, 4):
            for v in _words(AB, len(u), 8):
                pos = occurrences_in_power(v, u, 6)
                ok = all((b - a) % len(u) == 0 for a, b in zip(pos, pos[1:]))
                yield f"u={u.text()} v={v.text()}", ok

    return "power-occurrence-gaps", gen()


def _law_square_in_power():
    """A squared factor of a power is conjugate to a power of the root."""

    def gen():
        for u in _primitive_words(AB, 1, 4):
            window = u * 6
            for v in _words(AB, len(u), 8):
                vv = v + v
                if len(vv) > len(window) or not factor_positions(vv, window):
                    continue
                ok = len(v) % len(u) == 0 and is_cyclically_conjugate(
                    v, u * (len(v) // len(u))
                )
                yield f"u={u.text()} v={v.text()}", ok

    return "square-factor-power", gen()


def _law_shift_equation():
    """u·W = W·r holds iff W is a power-plus-prefix of u, and the
    decomposition returns exactly that shape."""

    def gen():
        for u in _words(AB, 1, 3):
            for w in _words(AB, 0, 6):
                s = u + w
                r = s[len(w) :]
                holds = (u + w).letters == (w + r).letters
                desc = f"u={u.text()} W={w.text()}"
                try:
                    n, p = shift_equation_decompose(u, w, r)
                except EquationDoesNotHold:
                    yield desc, not holds
                    continue
                ok = (
                    holds
                    and w.letters == u.letters * n + p.letters
                    and len(p) < len(u)
                    and u.letters[: len(p)] == p.letters
                )
                # uW must be a factor of a long enough power of u
                ok = ok and bool(factor_positions(s, u * (len(s) // len(u) + 2)))
                yield desc, ok

    return "shift-equation-decomposition", gen()


def overlap_suite() -> SuiteResult:
    return SuiteResult(
        "overlap",
        tuple(
            _run(law())
            for law in (
                _law_overlap,
                _law_conjugate_factors,
                _law_occurrence_gaps,
                _law_square_in_power,
                _law_shift_equation,
            )
        ),
    )


# ---------------------------------------------------------------------------
# period-switching laws


def _switch_pairs():
    for u in _primitive_words(AB, 1, 3):
        for v in _primitive_words(AB, 1, 3):
            if u != v:
                yield u, v


def _law_switch_not_in_power():
    def gen():
        for u, v in _switch_pairs():
            for l in range(1, 7):
                for s in range(1, 7):
                    if l * len(v) <= 2 * len(u) or s * len(u) <= 2 * len(v):
                        continue
                    word = v * l + u * s
                    k_rep = 4 * (l + s)
                    hit_u = factor_positions(word, u * k_rep) if len(word) <= k_rep * len(u) else []
                    hit_v = factor_positions(word, v * k_rep) if len(word) <= k_rep * len(v) else []
                    yield f"u={u.text()} v={v.text()} l={l} s={s}", not hit_u and not hit_v

    return "switched-powers-escape-periods", gen()


def _law_switch_primitive():
    def gen():
        for u, v in _switch_pairs():
            for l in range(1, 7):
                for s in range(1, 7):
                    if l * len(v) <= 2 * len(u) or s * len(u) <= 2 * len(v):
                        continue
                    _, exp = primitive_root(v * l + u * s)
                    yield f"u={u.text()} v={v.text()} l={l} s={s}", exp == 1

    return "switched-powers-primitive", gen()


def _law_power_product_escapes():
    def gen():
        for u, v in _switch_pairs():
            text = v * 12 + u * 12
            for n in range(1, 6):
                for m in range(1, 6):
                    if n * len(u) <= 2 * len(v) or m * len(v) <= 2 * len(u):
                        continue
                    word = u * n + v * m
                    ok = len(word) > len(text) or not factor_positions(word, text)
                    yield f"u={u.text()} v={v.text()} n={n} m={m}", ok

    return "power-product-escapes-switched", gen()


def _law_occurrence_spacing():
    def gen():
        for u, v in _switch_pairs():
            for k in range(2, 7):
                if (k - 1) * len(u) <= 2 * len(v) or (k - 1) * len(v) <= 2 * len(u):
                    continue
                for l in range(2, 7):
                    if (l - 1) * len(v) <= 2 * len(u):
                        continue
                    pattern = u * k + v * l
                    for n in range(k + 1, 6):
                        for m in range(l + 1, 6):
                            period = n * len(u) + m * len(v)
                            window = (u * n + v * m) * 4
                            pos = factor_positions(pattern, window)
                            ok = all((b - pos[0]) % period == 0 for b in pos)
                            yield (
                                f"u={u.text()} v={v.text()} k={k} l={l} n={n} m={m}",
                                ok,
                            )

    return "occurrence-spacing-in-power", gen()


def _law_distinct_powers_not_conjugate():
    def gen():
        for u, v in _switch_pairs():
            n0 = 1
            while n0 * len(u) <= 2 * len(v) or n0 * len(v) <= 2 * len(u):
                n0 += 1
            exps = range(n0, n0 + 3)
            for k1, l1 in itertools.product(exps, repeat=2):
                for k2, l2 in itertools.product(exps, repeat=2):
                    if (k1, l1) >= (k2, l2):
                        continue
                    a = u * k1 + v * l1
                    b = u * k2 + v * l2
                    yield (
                        f"u={u.text()} v={v.text()} ({k1},{l1}) vs ({k2},{l2})",
                        not is_cyclically_conjugate(a, b),
                    )

    return "distinct-exponents-not-conjugate", gen()


def switching_suite() -> SuiteResult:
    return SuiteResult(
        "switching",
        tuple(
            _run(law())
            for law in (
                _law_switch_not_in_power,
                _law_switch_primitive,
                _law_power_product_escapes,
                _law_occurrence_spacing,
                _law_distinct_powers_not_conjugate,
            )
        ),
    )


# ---------------------------------------------------------------------------
# regular-word laws


def _law_regular_primitive():
    def gen():
        for w in _words(AB, 1, 10):
            yield f"w={w.text()}", (not is_regular(w)) or is_primitive(w)

    return "regular-implies-primitive", gen()


def _law_unique_rotation():
    def gen():
        for w in _primitive_words(AB, 1, 10):
            regs = [s for s in range(len(w)) if is_regular(w.rotated(s))]
            shift, rot = regular_rotation(w)
            ok = len(regs) == 1 and regs[0] == shift and rot == w.rotated(shift)
            yield f"w={w.text()}", ok

    return "unique-regular-rotation", gen()


def _random_word(rng: random.Random, alphabet: Alphabet, max_len: int) -> Word:
    n = rng.randint(1, max_len)
    return Word(alphabet, (rng.randrange(alphabet.size) for _ in range(n)))


def _shrink_triple(triple, predicate):
    """Greedy shrink: drop letters, then remap onto a smaller alphabet."""
    current = list(triple)
    changed = True
    while changed:
        changed = False
        for i, w in enumerate(current):
            for pos in range(len(w)):
                if len(w) == 1:
                    continue
                cand = list(current)
                cand[i] = Word(w.alphabet, w.letters[:pos] + w.letters[pos + 1 :])
                if not predicate(cand):
                    current = cand
                    changed = True
                    break
            else:
                continue
            break
    squashed = [Word(w.alphabet, (0,) * len(w)) for w in current]
    if not predicate(squashed):
        current = squashed
    return current


def _law_ufn_preorder(seed: int):
    rng = random.Random(seed)

    def holds(triple) -> bool:
        f, g, h = triple
        out_fg, out_gf = ufn_compare(f, g), ufn_compare(g, f)
        flip = {
            UfnOutcome.GREATER: UfnOutcome.LESS,
            UfnOutcome.LESS: UfnOutcome.GREATER,
            UfnOutcome.EQUIVALENT: UfnOutcome.EQUIVALENT,
        }
        if out_gf is not flip[out_fg]:
            return False
        if (out_fg is UfnOutcome.EQUIVALENT) != (primitive_root(f)[0] == primitive_root(g)[0]):
            return False
        # agreement with comparing the periodic tails directly
        window = len(f) + len(g)
        tail = lex_compare(inf_prefix(f, window), inf_prefix(g, window))
        expected = {
            UfnOutcome.GREATER: LexOutcome.GREATER,
            UfnOutcome.LESS: LexOutcome.LESS,
            UfnOutcome.EQUIVALENT: LexOutcome.EQUAL,
        }[out_fg]
        if tail is not expected:
            return False
        # transitivity through h
        out_gh, out_fh = ufn_compare(g, h), ufn_compare(f, h)
        if out_fg is out_gh is UfnOutcome.GREATER and out_fh is not UfnOutcome.GREATER:
            return False
        if out_fg is out_gh is UfnOutcome.LESS and out_fh is not UfnOutcome.LESS:
            return False
        return True

    def gen():
        for _ in range(10_000):
            triple = [_random_word(rng, AB, 6) for _ in range(3)]
            if holds(triple):
                yield "", True
            else:
                small = _shrink_triple(triple, holds)
                yield f"f,g,h = {[w.text() for w in small]}", False

    return "ufn-total-preorder", gen()


def _law_lex_implies_ufn():
    def gen():
        for f in _words(AB, 1, 6):
            for g in _words(AB, 1, 6):
                out = lex_compare(f, g)
                if out is LexOutcome.GREATER:
                    ok = ufn_compare(f, g) is UfnOutcome.GREATER
                elif out is LexOutcome.LESS:
                    ok = ufn_compare(f, g) is UfnOutcome.LESS
                else:
                    ok = True
                yield f"f={f.text()} g={g.text()}", ok

    return "lex-implies-ufn", gen()


def _semi_regular_ordered_pairs(max_len: int):
    words = [w for w in _words(AB, 1, max_len) if is_semi_regular(w)]
    for u in words:
        for v in words:
            if ufn_compare(u, v) is UfnOutcome.GREATER:
                yield u, v


def _law_power_product_order():
    """Ordered power products: larger first exponent wins, and the products
    are regular, once each power block is long enough to dominate."""

    def qualifies(u, v, k, l):
        return (k - 1) * len(u) > 2 * len(v) and (l - 1) * len(v) > 2 * len(u)

    def gen():
        for u, v in _semi_regular_ordered_pairs(3):
            exps = [
                (k, l)
                for k in range(2, 6)
                for l in range(2, 6)
                if qualifies(u, v, k, l)
            ]
            for k, l in exps:
                yield (
                    f"regular u={u.text()} v={v.text()} k={k} l={l}",
                    is_regular(u * k + v * l),
                )
            for (k1, l1), (k2, l2) in itertools.product(exps, repeat=2):
                if k1 <= k2:
                    continue
                out = ufn_compare(u * k1 + v * l1, u * k2 + v * l2)
                yield (
                    f"u={u.text()} v={v.text()} ({k1},{l1}) vs ({k2},{l2})",
                    out is UfnOutcome.GREATER,
                )

    return "ordered-power-products", gen()


def _law_powers_not_conjugate():
    def gen():
        for u, v in _semi_regular_ordered_pairs(3):
            ru, _ = primitive_root(u)
            rv, _ = primitive_root(v)
            if is_cyclically_conjugate(ru, rv):
                continue
            ks = range(len(v) + 1, len(v) + 3)
            ls = range(len(u) + 1, len(u) + 3)
            for k1, l1 in itertools.product(ks, ls):
                for k2, l2 in itertools.product(ks, ls):
                    if (k1, l1) >= (k2, l2):
                        continue
                    yield (
                        f"u={u.text()} v={v.text()} ({k1},{l1}) vs ({k2},{l2})",
                        not is_cyclically_conjugate(u * k1 + v * l1, u * k2 + v * l2),
                    )

    return "ordered-powers-not-conjugate", gen()


def _law_substitution_regular():
    from .verify import PATTERN_ALPHABET

    patterns = [w for w in _words(PATTERN_ALPHABET, 1, 4) if is_regular(w)]

    def gen():
        for u in _words(AB, 1, 4):
            if not is_regular(u):
                continue
            for v in _words(AB, 1, 4):
                if not is_regular(v) or ufn_compare(u, v) is not UfnOutcome.GREATER:
                    continue
                for w in patterns:
                    yield (
                        f"w={w.text()} u={u.text()} v={v.text()}",
                        is_regular(substitute(w, u, v)),
                    )

    return "substitution-preserves-regular", gen()


def regular_suite(seed: int = 0) -> SuiteResult:
    laws = [
        _run(_law_regular_primitive()),
        _run(_law_unique_rotation()),
        _run(_law_ufn_preorder(seed)),
        _run(_law_lex_implies_ufn()),
        _run(_law_power_product_order()),
        _run(_law_powers_not_conjugate()),
        _run(_law_substitution_regular()),
    ]
    return SuiteResult("regular", tuple(laws))


# ---------------------------------------------------------------------------
# bracketing


def _law_highest_term(alphabet: Alphabet, max_len: int, tag: str):
    def gen():
        for w in _words(alphabet, 1, max_len):
            if not is_regular(w):
                continue
            lead, coeff = leading_monomial(expand_bracket(standard_bracketing(w)))
            yield f"w={w.text()}", lead == w and coeff == 1

    return f"bracketing-highest-term-{tag}", gen()


def bracketing_suite() -> SuiteResult:
    return SuiteResult(
        "bracketing",
        (
            _run(_law_highest_term(AB, 8, "2letters")),
            _run(_law_highest_term(ABC, 6, "3letters")),
        ),
    )


SUITES = {
    "overlap": lambda seed: overlap_suite(),
    "switching": lambda seed: switching_suite(),
    "regular": regular_suite,
    "bracketing": lambda seed: bracketing_suite(),
}


def run_suites(names, seed: int = 0) -> list[SuiteResult]:
    if "all" in names:
        names = list(SUITES)
    out = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        out.append(SUITES[name](seed))
    return out
