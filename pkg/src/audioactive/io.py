"""JSON and DOT serialization of transducers.

JSON layout::

    {"input_alphabet": [...], "output_alphabet": [...], "num_states": n,
     "initial": [...], "final": [...],
     "transitions": [[src, in_label or null, out_label or null, dst], ...]}

◊ is written as ``*``. Output is deterministic, so export, import and export
again gives identical bytes.
"""

from __future__ import annotations

import json

from .fst import DIAMOND, DIAMOND_ASCII, EPS, EPSILON_LABEL, SymbolTable, Transducer


def _ascii(label: str) -> str:
    return DIAMOND_ASCII if label == DIAMOND else label


def _unascii(label: str) -> str:
    return DIAMOND if label == DIAMOND_ASCII else label


def to_dict(t: Transducer) -> dict:
    def lab(table: SymbolTable, sym: int):
        return None if sym == EPS else _ascii(table.label(sym))

    return {
        "input_alphabet": [_ascii(x) for x in t.input_table.labels],
        "output_alphabet": [_ascii(x) for x in t.output_table.labels],
        "num_states": t.num_states,
        "initial": sorted(t.initial),
        "final": sorted(t.final),
        "transitions": [
            [s, lab(t.input_table, i), lab(t.output_table, o), d]
            for s, i, o, d in sorted(t.transitions)
        ],
    }


def from_dict(data: dict) -> Transducer:
    try:
        tin = SymbolTable(tuple(_unascii(x) for x in data["input_alphabet"]))
        tout = SymbolTable(tuple(_unascii(x) for x in data["output_alphabet"]))
        trans = [
            (
                s,
                EPS if i is None else tin.index(i),
                EPS if o is None else tout.index(o),
                d,
            )
            for s, i, o, d in data["transitions"]
        ]
        return Transducer(tin, tout, data["num_states"], data["initial"], data["final"], trans)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed automaton JSON: {exc}") from None


def dumps(t: Transducer) -> str:
    return json.dumps(to_dict(t), indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Transducer:
    return from_dict(json.loads(text))


def to_dot(t: Transducer, name: str = "T") -> str:
    """Graphviz source: finals drawn as double circles, initials fed from invisible nodes."""

    def lab(table: SymbolTable, sym: int) -> str:
        return EPSILON_LABEL if sym == EPS else table.label(sym)

    lines = [f'digraph "{name}" {{', "  rankdir=LR;"]
    final = set(t.final)
    for q in range(t.num_states):
        shape = "doublecircle" if q in final else "circle"
        lines.append(f"  q{q} [label=\"{q}\", shape={shape}];")
    for q in sorted(t.initial):
        lines.append(f"  start{q} [shape=point, style=invis];")
        lines.append(f"  start{q} -> q{q};")
    for s, i, o, d in sorted(t.transitions):
        label = f"{lab(t.input_table, i)}|{lab(t.output_table, o)}"
        lines.append(f'  q{s} -> q{d} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
