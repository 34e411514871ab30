"""Search for two regular pairwise well-based words in an exponential automaton.

The certificate (u ▷ v, both regular, both reading closed paths at one base
vertex) is what both freeness verifiers consume.  Every emitted certificate is
machine-checked against its invariants before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import UfnAutomaton, witness_cycles
from .errors import CapExceeded, InvalidCertificate, PolynomialGrowth
from .regular import (
    BracketTree,
    UfnOutcome,
    is_regular,
    regular_rotation,
    standard_bracketing,
    ufn_compare,
)
from .words import Word, is_primitive


@dataclass(frozen=True)
class FreePairCertificate:
    u: Word
    v: Word
    base_vertex: str
    cycle_words: tuple[Word, Word]
    exponents: tuple[tuple[int, int], tuple[int, int]]  # (k,l) used for u and for v
    bracket_u: BracketTree
    bracket_v: BracketTree


def check_well_based(aut: UfnAutomaton, q: str, w: Word) -> bool:
    """True iff reading w from state q returns to q without dying."""
    i = aut.state_index(q)
    return aut.walk(i, w) == i


def find_cycle_pair(aut: UfnAutomaton) -> tuple[str, Word, Word]:
    """Two distinct simple cycles through a common vertex, smallest first.

    Deterministic: smallest branching state in construction order, then the
    two first cycle words in (length, lex) order.  Their primitive roots
    always differ.
    """
    witness = witness_cycles(aut)
    if witness is None:
        raise PolynomialGrowth("no vertex lies on two distinct cycles")
    return witness


def _candidate_exponents(cap: int):
    """(k, l) pairs by increasing k+l, then decreasing k, starting at k+l=1.

    Pure powers (l=0 or k=0) come first within each block, so the cycle words
    themselves are tried before any mixed product; this keeps certificates as
    short as the automaton allows.
    """
    emitted = 0
    total = 1
    while emitted < cap:
        for k in range(total, -1, -1):
            yield k, total - k
            emitted += 1
            if emitted >= cap:
                return
        total += 1


def find_regular_pair(aut: UfnAutomaton, cap: int = 64) -> FreePairCertificate:
    """Certificate of two regular pairwise well-based words.

    Walks products w1**k · w2**l of the witness cycles, replaces each by its
    regular rotation (rotations of well-based words are well-based at the
    shifted vertex), and stops at the first two distinct regular words that
    share a base vertex.  Exceeding the cap is an alarm: theory says a pair
    must appear.
    """
    if cap < 4:
        raise ValueError("cap must be >= 4")
    q_name, w1, w2 = find_cycle_pair(aut)
    q = aut.state_index(q_name)

    recorded: dict[tuple[str, Word], tuple[int, int]] = {}
    by_vertex: dict[str, list[Word]] = {}
    trace = []
    for k, l in _candidate_exponents(cap):
        s = w1 * k + w2 * l
        trace.append((k, l, s.text()))
        if not is_primitive(s):
            continue
        shift, t = regular_rotation(s)
        base = aut.walk(q, s[:shift])
        assert base is not None and aut.walk(base, t) == base, "rotation lost the cycle"
        base_name = aut.names[base]
        key = (base_name, t)
        if key in recorded:
            continue
        recorded[key] = (k, l)
        group = by_vertex.setdefault(base_name, [])
        group.append(t)
        if len(group) == 2:
            a, b = group
            if ufn_compare(a, b) is UfnOutcome.GREATER:
                u, v = a, b
            else:
                u, v = b, a
            cert = FreePairCertificate(
                u=u,
                v=v,
                base_vertex=base_name,
                cycle_words=(w1, w2),
                exponents=(recorded[(base_name, u)], recorded[(base_name, v)]),
                bracket_u=standard_bracketing(u),
                bracket_v=standard_bracketing(v),
            )
            validate_certificate(aut, cert)
            return cert
    raise CapExceeded(cap, trace)


def validate_certificate(aut: UfnAutomaton, cert: FreePairCertificate) -> None:
    """Machine-check every certificate invariant; raise InvalidCertificate."""

    def fail(reason):
        raise InvalidCertificate(reason)

    if cert.u.alphabet != aut.alphabet or cert.v.alphabet != aut.alphabet:
        fail("certificate words are over a different alphabet")
    if cert.u == cert.v:
        fail("u and v must differ")
    if not is_regular(cert.u):
        fail(f"u = {cert.u!r} is not regular")
    if not is_regular(cert.v):
        fail(f"v = {cert.v!r} is not regular")
    out = ufn_compare(cert.u, cert.v)
    if out is UfnOutcome.EQUIVALENT:
        fail("u and v share a primitive root")
    if out is not UfnOutcome.GREATER:
        fail("u must be ▷-greater than v")
    if cert.base_vertex not in aut.names:
        fail(f"unknown base vertex {cert.base_vertex!r}")
    if not check_well_based(aut, cert.base_vertex, cert.u):
        fail("u is not well-based at the base vertex")
    if not check_well_based(aut, cert.base_vertex, cert.v):
        fail("v is not well-based at the base vertex")
    if cert.bracket_u != standard_bracketing(cert.u):
        fail("bracket_u is not the standard bracketing of u")
    if cert.bracket_v != standard_bracketing(cert.v):
        fail("bracket_v is not the standard bracketing of v")
