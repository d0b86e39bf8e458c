"""JSON documents for automata, FDFAs and ultimately periodic words."""

from __future__ import annotations

import json

import jsonschema

from .core import Alphabet, Dfa, Structure
from .errors import InputError
from .fdfa import Fdfa, Mode
from .omega import Buchi, CoBuchi, Muller, OmegaAutomaton, Parity
from .words import UPWord

_NAT = {"type": "integer", "minimum": 0}
_STATES = {"type": "array", "items": _NAT, "uniqueItems": True}

_STRUCTURE = {
    "alphabet": {"type": "array", "items": {"type": "string", "pattern": r"^\S+$"}, "minItems": 1},
    "states": {"type": "integer", "minimum": 1},
    "initial": _NAT,
    "delta": {"type": "array", "items": {"type": "array", "items": _NAT}},
}

AUTOMATON_SCHEMA = {
    "type": "object",
    "required": ["alphabet", "states", "initial", "delta", "acceptance"],
    "properties": {
        **_STRUCTURE,
        "type": {"const": "automaton"},
        "acceptance": {
            "oneOf": [
                {
                    "type": "object",
                    "required": ["kind", "data"],
                    "properties": {"kind": {"enum": ["buchi", "cobuchi"]}, "data": _STATES},
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "required": ["kind", "data"],
                    "properties": {"kind": {"const": "parity"}, "data": {"type": "array", "items": _NAT}},
                    "additionalProperties": False,
                },
                {
                    "type": "object",
                    "required": ["kind", "data"],
                    "properties": {"kind": {"const": "muller"}, "data": {"type": "array", "items": _STATES}},
                    "additionalProperties": False,
                },
            ]
        },
    },
    "additionalProperties": False,
}

_DFA = {
    "type": "object",
    "required": ["states", "initial", "delta", "accepting"],
    "properties": {
        "states": {"type": "integer", "minimum": 1},
        "initial": _NAT,
        "delta": _STRUCTURE["delta"],
        "accepting": _STATES,
        "colors": {"type": "array", "items": _NAT},
    },
    "additionalProperties": False,
}

FDFA_SCHEMA = {
    "type": "object",
    "required": ["leading", "progress", "mode"],
    "properties": {
        "type": {"const": "fdfa"},
        "leading": {
            "type": "object",
            "required": ["alphabet", "states", "initial", "delta"],
            "properties": _STRUCTURE,
            "additionalProperties": False,
        },
        "progress": {
            "type": "object",
            "patternProperties": {r"^(0|[1-9][0-9]*)$": _DFA},
            "additionalProperties": False,
        },
        "mode": {"enum": [m.value for m in Mode]},
        "min_colors": {"type": "array", "items": _NAT},
    },
    "additionalProperties": False,
}

UPWORD_SCHEMA = {
    "type": "object",
    "required": ["u", "v"],
    "properties": {"u": {"type": "string"}, "v": {"type": "string", "minLength": 1}},
    "additionalProperties": False,
}


def _validate(doc, schema, what):
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        path = "/".join(str(p) for p in e.absolute_path) or "<root>"
        raise InputError(f"invalid {what} document at {path}: {e.message}") from None


def _structure(doc, alphabet: Alphabet) -> Structure:
    if len(doc["delta"]) != doc["states"]:
        raise InputError(f"delta has {len(doc['delta'])} rows but states is {doc['states']}")
    return Structure(alphabet, doc["delta"], doc["initial"])


def _structure_doc(s: Structure, with_alphabet=True) -> dict:
    out = {"alphabet": list(s.alphabet.symbols)} if with_alphabet else {}
    out.update(states=s.state_count, initial=s.initial, delta=[list(r) for r in s.delta])
    return out


# ---------------------------------------------------------------------------


def automaton_from_json(doc) -> OmegaAutomaton:
    _validate(doc, AUTOMATON_SCHEMA, "automaton")
    s = _structure(doc, Alphabet(tuple(doc["alphabet"])))
    acc = doc["acceptance"]
    kind, data = acc["kind"], acc["data"]
    if kind == "buchi":
        cond = Buchi(frozenset(data))
    elif kind == "cobuchi":
        cond = CoBuchi(frozenset(data))
    elif kind == "parity":
        cond = Parity(tuple(data))
    else:
        cond = Muller(tuple(frozenset(x) for x in data))
    return OmegaAutomaton(s, cond)


def automaton_to_json(m: OmegaAutomaton) -> dict:
    a = m.acceptance
    if a.kind in ("buchi", "cobuchi"):
        data = sorted(a.F)
    elif a.kind == "parity":
        data = list(a.kappa)
    else:
        data = [sorted(s) for s in a.alpha]
    doc = {"type": "automaton"}
    doc.update(_structure_doc(m.structure))
    doc["acceptance"] = {"kind": a.kind, "data": data}
    return doc


def fdfa_from_json(doc) -> Fdfa:
    _validate(doc, FDFA_SCHEMA, "FDFA")
    alphabet = Alphabet(tuple(doc["leading"]["alphabet"]))
    leading = _structure(doc["leading"], alphabet)
    progress = []
    for q in range(leading.state_count):
        d = doc["progress"].get(str(q))
        if d is None:
            raise InputError(f"no progress DFA for leading state {q}")
        progress.append(Dfa(_structure(d, alphabet), frozenset(d["accepting"])))
    extra = set(doc["progress"]) - {str(q) for q in range(leading.state_count)}
    if extra:
        raise InputError(f"progress DFAs for unknown leading states: {sorted(extra)}")
    return Fdfa(leading, tuple(progress), Mode(doc["mode"]))


def fdfa_to_json(f: Fdfa, colors=None, min_colors=None) -> dict:
    progress = {}
    for q, p in enumerate(f.progress):
        d = _structure_doc(p.structure, with_alphabet=False)
        d["accepting"] = sorted(p.accepting)
        if colors is not None:
            d["colors"] = [0 if c is None else c for c in colors[q]]
        progress[str(q)] = d
    doc = {"type": "fdfa", "leading": _structure_doc(f.leading), "progress": progress, "mode": f.mode.value}
    if min_colors is not None:
        doc["min_colors"] = list(min_colors)
    return doc


def upword_from_json(doc, alphabet: Alphabet) -> UPWord:
    _validate(doc, UPWORD_SCHEMA, "word")
    return UPWord(alphabet.parse(doc["u"]), alphabet.parse(doc["v"]))


def upword_to_json(w: UPWord, alphabet: Alphabet) -> dict:
    return {"u": alphabet.render(w.u), "v": alphabet.render(w.v)}


def load_document(path):
    """An :class:`OmegaAutomaton` or :class:`Fdfa` read from a JSON file."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from None
    return document_from_json(doc)


def document_from_json(doc):
    if isinstance(doc, dict) and "leading" in doc:
        return fdfa_from_json(doc)
    return automaton_from_json(doc)


def document_to_json(x) -> dict:
    if isinstance(x, Fdfa):
        return fdfa_to_json(x)
    return automaton_to_json(x)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def save_document(x, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(document_to_json(x) if not isinstance(x, dict) else x))
