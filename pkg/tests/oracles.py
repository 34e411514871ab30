"""Independent oracles used to derive expected values.

Everything here is deliberately naive (enumeration, direct scans, textbook
formulas) and never calls the code paths it is used to check.
"""

import itertools
from fractions import Fraction


def scan_positions(pat, text):
    """All 0-based occurrences of tuple pat in tuple text by direct scan."""
    m = len(pat)
    return [i for i in range(len(text) - m + 1) if text[i : i + m] == pat]


def rotations(letters):
    n = len(letters)
    return [letters[s:] + letters[:s] for s in range(n)]


def greatest_rotation(letters):
    return max(rotations(letters))


def is_strictly_greatest_rotation(letters):
    return all(letters > r for r in rotations(letters)[1:])


def brute_primitive_root(letters):
    n = len(letters)
    for d in range(1, n + 1):
        if n % d == 0 and letters[:d] * (n // d) == letters:
            return letters[:d], n // d
    raise AssertionError


def mobius(n):
    result, m = 1, n
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


def necklace_count(size, length):
    """Number of primitive necklaces (= greatest-rotation words) of a length."""
    total = 0
    for d in range(1, length + 1):
        if length % d == 0:
            total += mobius(length // d) * size ** d
    return total // length


def all_words(size, min_len, max_len):
    for n in range(min_len, max_len + 1):
        yield from itertools.product(range(size), repeat=n)


def brute_normal_words(forbidden, size, length):
    """Words of exact length avoiding every forbidden tuple, by direct scan."""
    out = []
    for w in itertools.product(range(size), repeat=length):
        if all(not scan_positions(f, w) for f in forbidden):
            out.append(w)
    return out


def series_matches(p, q, values):
    """Check P/Q = Σ values[k]·t^k via the convolution identity Q·H = P."""
    for k in range(len(values)):
        acc = Fraction(0)
        for i in range(min(k, len(q) - 1) + 1):
            acc += q[i] * values[k - i]
        expected = p[k] if k < len(p) else 0
        if acc != expected:
            return False
    return True


def det_i_minus_tm_2x2(m):
    """det(I - tM) for a 2x2 integer matrix, expanded by hand."""
    a, b = m[0]
    c, d = m[1]
    return [1, -(a + d), a * d - b * c]
