"""Monomial-algebra presentations, their deterministic factor automata,
word counting, growth classification, and exact Hilbert series.

The automaton of a presentation has one state per normal word of length
<= L-1 (L = longest forbidden word); every state is accepting, the accepted
language is exactly the set of words avoiding all forbidden factors, and a
single Dead sink (represented as None transitions) absorbs everything else.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSubwordClosed, RecurrenceNotStabilized
from .words import Alphabet, Word, primitive_root


@dataclass(frozen=True)
class Presentation:
    """Alphabet plus the set of forbidden (zero) words."""

    alphabet: Alphabet
    forbidden: tuple[Word, ...]

    def __post_init__(self):
        for w in self.forbidden:
            if not w.letters:
                raise ValueError("empty forbidden word")
            if w.alphabet != self.alphabet:
                raise ValueError(f"forbidden word {w!r} not over the alphabet")

    def is_normal(self, w: Word) -> bool:
        """True iff w avoids every forbidden factor (direct scan)."""
        letters = w.letters
        for f in self.forbidden:
            m = len(f.letters)
            if any(letters[i : i + m] == f.letters for i in range(len(letters) - m + 1)):
                return False
        return True


def _canonical(words) -> tuple[Word, ...]:
    return tuple(sorted(set(words), key=lambda w: (len(w), w.letters)))


def normalize_presentation(p: Presentation) -> Presentation:
    """Drop forbidden words that properly contain another forbidden word."""
    words = _canonical(p.forbidden)
    kept: list[Word] = []
    for w in words:  # increasing length, so containers come after content
        sub = Presentation(p.alphabet, tuple(kept))
        if sub.is_normal(w):
            kept.append(w)
    return Presentation(p.alphabet, tuple(kept))


def family_A(n: int, gap_convention: str = "relations") -> Presentation:
    """The n-parameter family on n+2 generators whose short words with a
    repeated letter vanish.

    Forbidden words are the minimal ones: x·v·x with v repeat-free, x not in
    v, and total length <= n ("relations" convention) or <= n+1 ("prose"
    convention, the off-by-one alternative reading).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if gap_convention not in ("relations", "prose"):
        raise ValueError(f"unknown gap convention {gap_convention!r}")
    max_len = n if gap_convention == "relations" else n + 1
    alphabet = Alphabet([f"x{i}" for i in range(1, n + 3)])
    forbidden = []
    for total in range(2, max_len + 1):
        inner = total - 2
        for x in range(alphabet.size):
            others = [y for y in range(alphabet.size) if y != x]
            for v in itertools.permutations(others, inner):
                forbidden.append(Word(alphabet, (x, *v, x)))
    return Presentation(alphabet, _canonical(forbidden))


class UfnAutomaton:
    """Deterministic factor automaton: all states accepting, Dead = None."""

    __slots__ = ("alphabet", "names", "delta", "root", "_name_index")

    def __init__(self, alphabet: Alphabet, names, delta, root: int = 0):
        self.alphabet = alphabet
        self.names = tuple(names)
        self.delta = tuple(tuple(row) for row in delta)
        self.root = root
        self._name_index = {nm: i for i, nm in enumerate(self.names)}
        if len(self._name_index) != len(self.names):
            raise ValueError("duplicate state names")
        for row in self.delta:
            if len(row) != alphabet.size:
                raise ValueError("transition row arity mismatch")

    @property
    def n_states(self) -> int:
        return len(self.names)

    def state_index(self, name: str) -> int:
        try:
            return self._name_index[name]
        except KeyError:
            raise ValueError(f"unknown state {name!r}") from None

    def step(self, q: int, letter: int) -> int | None:
        return self.delta[q][letter]

    def walk(self, q: int, w: Word) -> int | None:
        """Final state after reading w from q, or None if the path dies."""
        for x in w.letters:
            q = self.delta[q][x]
            if q is None:
                return None
        return q

    def accepts(self, w: Word) -> bool:
        return self.walk(self.root, w) is not None

    def words_of_length(self, k: int):
        """Accepted words of exact length k, lexicographic order."""
        alphabet = self.alphabet

        def rec(q, prefix):
            if len(prefix) == k:
                yield Word(alphabet, prefix)
                return
            for x in range(alphabet.size):
                nxt = self.delta[q][x]
                if nxt is not None:
                    yield from rec(nxt, prefix + [x])

        yield from rec(self.root, [])


def build_automaton(p: Presentation) -> UfnAutomaton:
    """Factor automaton of a presentation (normalized first)."""
    p = normalize_presentation(p)
    alphabet = p.alphabet
    max_f = max((len(w) for w in p.forbidden), default=1)
    window = max_f - 1

    states: list[tuple[int, ...]] = []
    for k in range(window + 1):
        for letters in itertools.product(range(alphabet.size), repeat=k):
            if p.is_normal(Word(alphabet, letters)):
                states.append(letters)
    index = {s: i for i, s in enumerate(states)}
    forbidden_set = {w.letters for w in p.forbidden}

    delta = []
    for s in states:
        row: list[int | None] = []
        for x in range(alphabet.size):
            t = s + (x,)
            if any(t[i:] in forbidden_set for i in range(len(t))):
                row.append(None)
            else:
                row.append(index[t[-window:] if window else ()])
        delta.append(row)

    names = ["".join(alphabet.symbols[x] for x in s) for s in states]
    return UfnAutomaton(alphabet, names, delta, root=index[()])


@dataclass(frozen=True)
class LabeledGraph:
    """Nondeterministic labeled digraph (single-symbol edge labels)."""

    alphabet: Alphabet
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str, str], ...]  # (from, label, to)
    initials: tuple[str, ...]


def determinize_graph(g: LabeledGraph) -> UfnAutomaton:
    """Subset construction; rejects languages that are not factor-closed."""
    vset = set(g.vertices)
    for a, lab, b in g.edges:
        if a not in vset or b not in vset:
            raise ValueError(f"edge {a}-{lab}->{b} uses unknown vertex")
        g.alphabet.index(lab)
    if not g.initials:
        raise ValueError("no initial vertices")

    out: dict[str, dict[int, set[str]]] = {v: {} for v in g.vertices}
    for a, lab, b in g.edges:
        out[a].setdefault(g.alphabet.index(lab), set()).add(b)

    def succ(subset: frozenset, x: int) -> frozenset:
        nxt = set()
        for v in subset:
            nxt |= out[v].get(x, set())
        return frozenset(nxt)

    root = frozenset(g.initials)
    subsets = [root]
    index = {root: 0}
    delta: list[list[int | None]] = []
    pos = 0
    while pos < len(subsets):
        cur = subsets[pos]
        row: list[int | None] = []
        for x in range(g.alphabet.size):
            nxt = succ(cur, x)
            if not nxt:
                row.append(None)
            else:
                if nxt not in index:
                    index[nxt] = len(subsets)
                    subsets.append(nxt)
                row.append(index[nxt])
        delta.append(row)
        pos += 1

    names = ["{" + ",".join(sorted(s)) + "}" for s in subsets]
    aut = UfnAutomaton(g.alphabet, names, delta, root=0)
    check_factor_closed(aut)
    return aut


def check_factor_closed(aut: UfnAutomaton) -> None:
    """Raise NotSubwordClosed unless every factor of an accepted word is accepted.

    The language is prefix-closed by construction (all states accept), so it
    suffices that whatever is readable from any reachable state is also
    readable from the root; this is checked on the deterministic product.
    """
    access: dict[int, list[int]] = {aut.root: []}
    order = [aut.root]
    for q in order:
        for x in range(aut.alphabet.size):
            t = aut.delta[q][x]
            if t is not None and t not in access:
                access[t] = access[q] + [x]
                order.append(t)
    seen = {(q, aut.root) for q in access}
    queue = [(q, q, aut.root, []) for q in access]
    while queue:
        start, q, r, path = queue.pop()
        for x in range(aut.alphabet.size):
            qn = aut.delta[q][x]
            if qn is None:
                continue
            rn = aut.delta[r][x]
            if rn is None:
                def render(ls):
                    return "".join(aut.alphabet.symbols[y] for y in ls)

                raise NotSubwordClosed(
                    word=render(access[start] + path + [x]),
                    factor=render(path + [x]),
                )
            if (qn, rn) not in seen:
                seen.add((qn, rn))
                queue.append((start, qn, rn, path + [x]))


def count_words(aut: UfnAutomaton, k_max: int) -> list[int]:
    """Exact counts c_1..c_k_max of accepted words by length (big integers)."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    vec = [0] * aut.n_states
    vec[aut.root] = 1
    counts = []
    for _ in range(k_max):
        nxt = [0] * aut.n_states
        for q, c in enumerate(vec):
            if not c:
                continue
            for t in aut.delta[q]:
                if t is not None:
                    nxt[t] += c
        counts.append(sum(nxt))
        vec = nxt
    return counts


def total_dims(counts: list[int]) -> list[int]:
    """Partial sums 1 + c_1 + .. + c_k (dimension of words of length <= k)."""
    out = []
    acc = 1
    for c in counts:
        acc += c
        out.append(acc)
    return out


def _reachable(aut: UfnAutomaton) -> list[int]:
    seen = {aut.root}
    stack = [aut.root]
    while stack:
        q = stack.pop()
        for t in aut.delta[q]:
            if t is not None and t not in seen:
                seen.add(t)
                stack.append(t)
    return sorted(seen)


def _sccs(nodes: list[int], adj: dict[int, list[int]]) -> list[list[int]]:
    """Tarjan's algorithm, iterative; components in reverse topological order."""
    index = {}
    low = {}
    on_stack = set()
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = itertools.count()

    for start in nodes:
        if start in index:
            continue
        work = [(start, iter(adj[start]))]
        index[start] = low[start] = next(counter)
        stack.append(start)
        on_stack.add(start)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = next(counter)
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def _live_adjacency(aut: UfnAutomaton, nodes: list[int]) -> dict[int, list[int]]:
    node_set = set(nodes)
    return {
        q: sorted({t for t in aut.delta[q] if t is not None and t in node_set})
        for q in nodes
    }


def witness_cycles(aut: UfnAutomaton) -> tuple[str, Word, Word] | None:
    """Branching vertex with its two smallest simple cycles, or None.

    Picks the smallest state (construction order) that has two distinct
    within-component out-edges, then the two first cycle words in
    (length, lex) order.  The two words always have distinct primitive roots:
    determinism forces equal-root cycles through one vertex to coincide.
    """
    nodes = _reachable(aut)
    adj = _live_adjacency(aut, nodes)
    comp_of = {}
    for comp in _sccs(nodes, adj):
        for q in comp:
            comp_of[q] = id(comp)
        comp_set = set(comp)
        candidates = [
            q
            for q in comp
            if sum(1 for t in aut.delta[q] if t is not None and t in comp_set) >= 2
        ]
        if not candidates:
            continue
        q0 = min(candidates)
        cycles = _simple_cycles(aut, q0, comp_set, want=2)
        assert len(cycles) >= 2, "branching vertex must lie on two simple cycles"
        w1, w2 = cycles[0], cycles[1]
        return aut.names[q0], w1, w2
    return None


def _simple_cycles(aut: UfnAutomaton, q0: int, comp: set[int], want: int) -> list[Word]:
    """First `want` simple-cycle words through q0, in (length, lex) order."""
    found: list[Word] = []
    for length in range(1, len(comp) + 1):
        stack = [(q0, [], set())]
        words_here: list[tuple[int, ...]] = []

        def rec(q, path, visited):
            if len(path) == length:
                return
            for x in range(aut.alphabet.size):
                t = aut.delta[q][x]
                if t is None or t not in comp:
                    continue
                if len(path) + 1 == length:
                    if t == q0:
                        words_here.append(tuple(path + [x]))
                    continue
                if t == q0 or t in visited:
                    continue
                rec(t, path + [x], visited | {t})

        rec(q0, [], set())
        for w in sorted(words_here):
            found.append(Word(aut.alphabet, w))
            if len(found) >= want:
                return found
    return found


@dataclass(frozen=True)
class GrowthReport:
    counts: tuple[int, ...]
    kind: str  # "exponential" | "polynomial"
    witness_vertex: str | None = None
    cycle_words: tuple[Word, Word] | None = None
    degree: int | None = None
    hilbert: tuple[tuple[int, ...], tuple[int, ...]] | None = None


def classify_growth(aut: UfnAutomaton, k_max: int = 12, hilbert: bool = False) -> GrowthReport:
    """Exponential/polynomial dichotomy with witness cycles or exact degree."""
    counts = tuple(count_words(aut, k_max))
    witness = witness_cycles(aut)
    hs = hilbert_series(aut) if hilbert else None
    if witness is not None:
        name, w1, w2 = witness
        assert primitive_root(w1)[0] != primitive_root(w2)[0]
        return GrowthReport(counts, "exponential", name, (w1, w2), None, hs)
    return GrowthReport(counts, "polynomial", None, None, _poly_degree(aut), hs)


def _poly_degree(aut: UfnAutomaton) -> int:
    """Max number of cycle-bearing components on a condensation path."""
    nodes = _reachable(aut)
    adj = _live_adjacency(aut, nodes)
    comps = _sccs(nodes, adj)  # reverse topological order
    comp_id = {}
    for i, comp in enumerate(comps):
        for q in comp:
            comp_id[q] = i
    cyclic = [
        len(comp) > 1 or any(t == comp[0] for t in aut.delta[comp[0]] if t is not None)
        for comp in comps
    ]
    best = [0] * len(comps)
    for i, comp in enumerate(comps):  # successors already processed
        succ_best = max(
            (best[comp_id[t]] for q in comp for t in adj[q] if comp_id[t] != i),
            default=0,
        )
        best[i] = succ_best + (1 if cyclic[i] else 0)
    return best[comp_id[aut.root]]


def _berlekamp_massey(seq: list[Fraction]) -> list[Fraction]:
    """Minimal connection polynomial [1, q1, .., qL] of the whole sequence."""
    c = [Fraction(1)]
    b = [Fraction(1)]
    L, m, bb = 0, 1, Fraction(1)
    for n, s in enumerate(seq):
        d = s + sum(c[i] * seq[n - i] for i in range(1, L + 1))
        if d == 0:
            m += 1
            continue
        t = list(c)
        coef = d / bb
        c = c + [Fraction(0)] * (len(b) + m - len(c))
        for i, bi in enumerate(b):
            c[i + m] -= coef * bi
        if 2 * L <= n:
            L, b, bb, m = n + 1 - L, t, d, 1
        else:
            m += 1
    return c[: L + 1]


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(num: list[Fraction], den: list[Fraction]):
    num = list(num)
    while num and num[-1] == 0:
        num.pop()
    d = len(den) - 1
    while len(den) > 1 and den[-1] == 0:
        den = den[:-1]
        d -= 1
    quo = [Fraction(0)] * max(len(num) - d, 1)
    while len(num) - 1 >= d and any(num):
        shift = len(num) - 1 - d
        factor = num[-1] / den[-1]
        quo[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] -= factor * c
        while num and num[-1] == 0:
            num.pop()
    return quo, num


def _charpoly_reversed(m: list[list[int]]) -> list[int]:
    """det(I - t·M) as integer coefficients, ascending in t.

    Computed as the reversal of the characteristic polynomial, which is
    obtained from the Hessenberg form with exact rational arithmetic.
    """
    n = len(m)
    if n == 0:
        return [1]
    h = [[Fraction(x) for x in row] for row in m]
    for col in range(n - 2):
        pivot = next((r for r in range(col + 1, n) if h[r][col]), None)
        if pivot is None:
            continue
        if pivot != col + 1:
            h[pivot], h[col + 1] = h[col + 1], h[pivot]
            for row in h:
                row[pivot], row[col + 1] = row[col + 1], row[pivot]
        inv = 1 / h[col + 1][col]
        for r in range(col + 2, n):
            if h[r][col]:
                f = h[r][col] * inv
                for c in range(col, n):
                    h[r][c] -= f * h[col + 1][c]
                for rr in range(n):
                    h[rr][col + 1] += f * h[rr][r]
    # charpoly of Hessenberg form: p_k = det(x·I_k - H_k) by recurrence
    p = [[Fraction(1)]]  # p_0 = 1
    for k in range(1, n + 1):
        term = _poly_mul([-h[k - 1][k - 1], Fraction(1)], p[k - 1])
        beta = Fraction(1)
        for i in range(k - 1, 0, -1):
            beta *= h[i][i - 1]
            sub = _poly_mul([-h[i - 1][k - 1] * beta], p[i - 1])
            term = [a + b for a, b in zip(term, sub + [Fraction(0)] * (len(term) - len(sub)))]
        p.append(term)
    char = p[n]  # ascending coefficients of det(xI - M), degree n
    rev = list(reversed(char))  # det(I - tM) = t^n · char(1/t)
    assert all(c.denominator == 1 for c in rev), "characteristic polynomial not integral"
    return [int(c) for c in rev]


def hilbert_series(aut: UfnAutomaton, k_max: int | None = None):
    """Integer polynomials (P, Q), Q(0)=1, with P/Q = 1 + Σ c_k t^k exactly.

    Detects the minimal linear recurrence of the counts and cross-checks that
    Q divides det(I - t·M) for the transition matrix M on live states.
    """
    nodes = _reachable(aut)
    need = 2 * len(nodes) + 2
    if k_max is None:
        k_max = need
    if k_max < need:
        raise RecurrenceNotStabilized(
            f"need at least {need} counts for {len(nodes)} live states, got {k_max}"
        )
    seq = [Fraction(1)] + [Fraction(c) for c in count_words(aut, k_max)]
    q = _berlekamp_massey(seq)
    order = len(q) - 1
    if 2 * order > len(seq):
        raise RecurrenceNotStabilized(
            f"recurrence order {order} not confirmed by {len(seq)} terms"
        )
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    prod = _poly_mul(q, seq)[: len(seq)]
    assert all(c == 0 for c in prod[order:]), "recurrence fails inside the window"
    p = prod[:order]
    while p and p[-1] == 0:
        p.pop()
    if not p:
        p = [Fraction(0)]
    assert all(c.denominator == 1 for c in p + q), "series is not integral"

    # cross-check against the transition matrix
    pos = {qi: i for i, qi in enumerate(nodes)}
    mat = [[0] * len(nodes) for _ in nodes]
    for qi in nodes:
        for t in aut.delta[qi]:
            if t is not None:
                mat[pos[qi]][pos[t]] += 1
    det = _charpoly_reversed(mat)
    _, rem = _poly_divmod([Fraction(c) for c in det], [Fraction(c) for c in q])
    assert not any(rem), "denominator does not divide det(I - tM)"

    return tuple(int(c) for c in p), tuple(int(c) for c in q)


def expand_series(p, q, k_max: int) -> list[int]:
    """Coefficients h_0..h_k_max of P/Q (Q(0) must be 1)."""
    if q[0] != 1:
        raise ValueError("denominator must have constant term 1")
    out = []
    for k in range(k_max + 1):
        acc = p[k] if k < len(p) else 0
        for i in range(1, min(k, len(q) - 1) + 1):
            acc -= q[i] * out[k - i]
        out.append(acc)
    return out
