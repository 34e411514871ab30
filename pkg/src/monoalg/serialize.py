"""JSON encodings of presentations, automata, and free-pair certificates.

Words are arrays of symbol strings; the order of the "alphabet" array defines
the letter order.  Bracket trees are nested two-element arrays with symbol
strings at the leaves.  These schemas are the file contract of the CLI.
"""

from __future__ import annotations

import json

from .automaton import Presentation, UfnAutomaton, check_factor_closed
from .finder import FreePairCertificate
from .regular import BracketTree, Leaf, Node
from .words import Alphabet, Word


def word_to_json(w: Word) -> list[str]:
    return list(w.symbols())


def word_from_json(alphabet: Alphabet, data) -> Word:
    if not isinstance(data, list):
        raise ValueError(f"word must be an array of symbols, got {data!r}")
    return alphabet.word(data)


def presentation_to_json(p: Presentation) -> dict:
    return {
        "alphabet": list(p.alphabet.symbols),
        "forbidden": [word_to_json(w) for w in p.forbidden],
    }


def presentation_from_json(data: dict) -> Presentation:
    alphabet = Alphabet(data["alphabet"])
    forbidden = tuple(word_from_json(alphabet, w) for w in data["forbidden"])
    return Presentation(alphabet, forbidden)


def automaton_to_json(aut: UfnAutomaton) -> dict:
    edges = []
    for q, row in enumerate(aut.delta):
        for x, t in enumerate(row):
            if t is not None:
                edges.append(
                    {
                        "from": aut.names[q],
                        "label": aut.alphabet.symbols[x],
                        "to": aut.names[t],
                    }
                )
    return {
        "alphabet": list(aut.alphabet.symbols),
        "vertices": list(aut.names),
        "root": aut.names[aut.root],
        "edges": edges,
    }


def automaton_from_json(data: dict) -> UfnAutomaton:
    alphabet = Alphabet(data["alphabet"])
    names = list(data["vertices"])
    index = {nm: i for i, nm in enumerate(names)}
    if len(index) != len(names):
        raise ValueError("duplicate vertex names")
    delta: list[list[int | None]] = [[None] * alphabet.size for _ in names]
    for e in data["edges"]:
        q = index[e["from"]]
        x = alphabet.index(e["label"])
        t = index[e["to"]]
        if delta[q][x] is not None:
            raise ValueError(
                f"nondeterministic: two {e['label']!r} edges from {e['from']!r}"
            )
        delta[q][x] = t
    aut = UfnAutomaton(alphabet, names, delta, root=index[data["root"]])
    check_factor_closed(aut)
    return aut


def bracket_to_json(t: BracketTree):
    if isinstance(t, Leaf):
        return t.letter.symbols()[0]
    return [bracket_to_json(t.left), bracket_to_json(t.right)]


def bracket_from_json(alphabet: Alphabet, data) -> BracketTree:
    if isinstance(data, str):
        return Leaf(alphabet.word([data]))
    if isinstance(data, list) and len(data) == 2:
        return Node(
            bracket_from_json(alphabet, data[0]), bracket_from_json(alphabet, data[1])
        )
    raise ValueError(f"malformed bracket tree node: {data!r}")


def certificate_to_json(cert: FreePairCertificate) -> dict:
    return {
        "alphabet": list(cert.u.alphabet.symbols),
        "u": word_to_json(cert.u),
        "v": word_to_json(cert.v),
        "base_vertex": cert.base_vertex,
        "cycle_words": [word_to_json(w) for w in cert.cycle_words],
        "exponents": {"u": list(cert.exponents[0]), "v": list(cert.exponents[1])},
        "bracket_u": bracket_to_json(cert.bracket_u),
        "bracket_v": bracket_to_json(cert.bracket_v),
    }


def certificate_from_json(data: dict) -> FreePairCertificate:
    alphabet = Alphabet(data["alphabet"])
    return FreePairCertificate(
        u=word_from_json(alphabet, data["u"]),
        v=word_from_json(alphabet, data["v"]),
        base_vertex=data["base_vertex"],
        cycle_words=tuple(word_from_json(alphabet, w) for w in data["cycle_words"]),
        exponents=(
            tuple(data["exponents"]["u"]),
            tuple(data["exponents"]["v"]),
        ),
        bracket_u=bracket_from_json(alphabet, data["bracket_u"]),
        bracket_v=bracket_from_json(alphabet, data["bracket_v"]),
    )


def dump(obj: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")


def load(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
