"""Command line interface.

Every command prints a JSON document on stdout and a one-line summary on
stderr (``--format text`` prints only the summary, on stdout).  Exit
codes: 0 ok, 1 a queried property does not hold (a witness is included),
2 bad input, 3 a capacity limit was hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fixtures
from .blackwhite import black_white_dba, black_white_dca
from .colors import ColorContext, finite_color, finite_color_clamped, infinite_color, is_relevant, is_reliable
from .dot import automaton_dot, fdfa_dot
from .errors import CapacityError, ContractError, DomainError, InputError
from .fdfa import (
    Fdfa,
    accepts,
    check_saturation_bounded,
    complement,
    emptiness_witness,
    inclusion_witness,
    intersect,
    union,
    universality_witness,
)
from .io import automaton_to_json, dumps, fdfa_to_json, load_document, upword_to_json
from .omega import OmegaAutomaton, accepts_up, periodic_fdfa
from .persistent import diameter
from .properties import Bounds, fdfa_suite, language_suites
from .wagner import classify, inclusion_measures
from .words import UPWord


class Result:
    def __init__(self, payload, summary, code=0, document=None, text=None):
        self.payload = payload
        self.summary = summary
        self.code = code
        self.document = document  # written by --out
        self.text = text  # non-JSON artifact (DOT) for --format text


def _load(path, cap=None):
    if path in fixtures.AUTOMATA or path in fixtures.FDFAS:
        raise InputError(f"{path!r} is a fixture name; use `omegacanon fixture {path}` to export it")
    return load_document(path)


def _automaton(path) -> OmegaAutomaton:
    x = _load(path)
    if not isinstance(x, OmegaAutomaton):
        raise InputError(f"{path} is an FDFA; this command needs an ω-automaton")
    return x


def _fdfa(path, cap) -> Fdfa:
    x = _load(path)
    if isinstance(x, OmegaAutomaton):
        return periodic_fdfa(x, cap)
    return x


def _word(alphabet, u, v) -> UPWord:
    if v is None or v == "":
        raise InputError("the period --v must be nonempty")
    return UPWord(alphabet.parse(u or ""), alphabet.parse(v))


def _bounds(text) -> tuple:
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"--bounds expects U,V, got {text!r}") from None
    if len(parts) != 2 or min(parts) < 1:
        raise InputError("--bounds expects two positive integers U,V")
    return parts[0], parts[1]


def _color_json(c):
    return "-inf" if c == float("-inf") else c


# ---------------------------------------------------------------------------
# commands


def cmd_wagner(args) -> Result:
    m = _automaton(args.file)
    wm = inclusion_measures(m, args.cap)
    hc = classify(m, args.cap)
    payload = {"m_plus": wm.m_plus, "m_minus": wm.m_minus, "class": {"k": hc.k, "polarity": hc.polarity}}
    return Result(payload, f"m+ = {wm.m_plus}, m- = {wm.m_minus}, class {hc}")


def cmd_diameter(args) -> Result:
    f = _fdfa(args.file, args.cap)
    d = diameter(f)
    return Result({"d_plus": d.d_plus, "d_minus": d.d_minus}, f"d+ = {d.d_plus}, d- = {d.d_minus}")


def cmd_colorful(args) -> Result:
    m = _automaton(args.file)
    ctx = ColorContext(m, args.cap)
    cf = ctx.colorful
    doc = fdfa_to_json(cf.fdfa, cf.colors, cf.min_colors)
    dot = fdfa_dot(cf.fdfa, cf.colors, "colorful")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
    payload = {
        "leading_states": cf.leading.state_count,
        "progress_states": {str(q): p.state_count for q, p in enumerate(cf.progress)},
        "colors": {str(q): list(c) for q, c in enumerate(cf.colors)},
        "min_colors": list(cf.min_colors),
        "fdfa": doc,
    }
    sizes = ", ".join(str(p.state_count) for p in cf.progress)
    return Result(payload, f"{cf.leading.state_count} leading states; progress sizes {sizes}", document=doc)


def cmd_color(args) -> Result:
    m = _automaton(args.file)
    ctx = ColorContext(m, args.cap)
    w = _word(m.alphabet, args.u, args.v)
    if args.infinite:
        c = infinite_color(ctx, w)
        payload = {"u": args.u or "", "v": args.v, "infinite": True, "color": c}
        return Result(payload, f"color of {args.u or ''}({args.v})^ω is {c}")
    c = finite_color(ctx, w.u, w.v)
    payload = {
        "u": args.u or "",
        "v": args.v,
        "infinite": False,
        "color": _color_json(c),
        "clamped": finite_color_clamped(ctx, w.u, w.v),
        "relevant": is_relevant(ctx, w.u, w.v),
        "reliable": is_reliable(ctx, w.u, w.v),
    }
    return Result(payload, f"color of {args.v} after {args.u or 'ε'} is {_color_json(c)}")


def cmd_fdfa_ops(args) -> Result:
    op = args.op
    files = args.files
    arity = {"complement": 1, "empty": 1, "universal": 1}.get(op, 2)
    if len(files) != arity:
        raise InputError(f"{op} takes {arity} file(s), got {len(files)}")
    fs = [_fdfa(p, args.cap) for p in files]
    a = fs[0].alphabet

    def wj(w):
        return None if w is None else upword_to_json(w, a)

    if op in ("complement", "intersect", "union"):
        out = {"complement": lambda: complement(fs[0]),
               "intersect": lambda: intersect(*fs),
               "union": lambda: union(*fs)}[op]()
        doc = fdfa_to_json(out)
        return Result({"fdfa": doc}, f"{op}: {out.leading.state_count} leading states", document=doc)
    if op == "empty":
        w = emptiness_witness(fs[0])
        return Result({"empty": w is None, "witness": wj(w)},
                      "empty" if w is None else "not empty", 0 if w is None else 1)
    if op == "universal":
        w = universality_witness(fs[0])
        return Result({"universal": w is None, "witness": wj(w)},
                      "universal" if w is None else "not universal", 0 if w is None else 1)
    if op == "contains":
        w = inclusion_witness(fs[0], fs[1])
        summary = "contains" if w is None else "does not contain; the witness is accepted by the second only"
        return Result({"contains": w is None, "witness": wj(w)}, summary, 0 if w is None else 1)
    w = inclusion_witness(fs[0], fs[1])
    side = "second"
    if w is None:
        w = inclusion_witness(fs[1], fs[0])
        side = "first"
    payload = {"equivalent": w is None, "witness": wj(w)}
    if w is not None:
        payload["accepted_by"] = side
    return Result(payload, "equivalent" if w is None else "not equivalent", 0 if w is None else 1)


def cmd_accepts(args) -> Result:
    x = _load(args.file)
    w = _word(x.alphabet, args.u, args.v)
    ok = accepts(x, w) if isinstance(x, Fdfa) else accepts_up(x, w)
    return Result({"u": args.u or "", "v": args.v, "accepted": ok}, "accepted" if ok else "rejected")


def cmd_bw(args) -> Result:
    m = _automaton(args.file)
    ctx = ColorContext(m, args.cap)
    out = black_white_dba(ctx) if args.kind == "dba" else black_white_dca(ctx)
    doc = automaton_to_json(out)
    return Result({"automaton": doc}, f"Black & White {args.kind.upper()} with {out.state_count} states",
                  document=doc)


def cmd_dot(args) -> Result:
    x = _load(args.file)
    if isinstance(x, Fdfa):
        text = fdfa_dot(x)
    elif args.colorful:
        cf = ColorContext(x, args.cap).colorful
        text = fdfa_dot(cf.fdfa, cf.colors, "colorful")
    else:
        text = automaton_dot(x)
    return Result({"dot": text}, "DOT written", text=text)


def cmd_fixture(args) -> Result:
    if args.name in fixtures.AUTOMATA:
        doc = automaton_to_json(fixtures.AUTOMATA[args.name]())
    elif args.name in fixtures.FDFAS:
        doc = fdfa_to_json(fixtures.FDFAS[args.name]())
    else:
        names = sorted(fixtures.AUTOMATA) + sorted(fixtures.FDFAS)
        raise InputError(f"unknown fixture {args.name!r}; known: {', '.join(names)}")
    return Result(doc, f"fixture {args.name}", document=doc)


def cmd_selftest(args) -> Result:
    max_u, max_v = _bounds(args.bounds) if args.bounds else (2, 5)
    bounds = Bounds(max_u=max_u, max_v=max_v)
    languages = args.fixture or list(fixtures.LANGUAGES)
    extra = args.fdfa or []
    violations = []
    checked = []
    for name in languages:
        if name not in fixtures.AUTOMATA:
            raise InputError(f"unknown language fixture {name!r}")
        violations += language_suites(fixtures.AUTOMATA[name](), bounds)
        checked.append(name)
    fdfa_names = [n for n in fixtures.FDFAS if n != "unsaturated"] if not args.fixture else []
    for name in fdfa_names + extra:
        f = fixtures.FDFAS[name]() if name in fixtures.FDFAS else _fdfa_file(name, args.cap)
        violations += fdfa_suite(f, bounds)
        checked.append(name)
    payload = {
        "bounds": {"u": max_u, "v": max_v},
        "checked": checked,
        "violations": [v.to_json() for v in violations],
    }
    summary = f"{len(checked)} inputs checked, {len(violations)} violations"
    return Result(payload, summary, 1 if violations else 0)


def _fdfa_file(path, cap):
    x = load_document(path)
    return periodic_fdfa(x, cap) if isinstance(x, OmegaAutomaton) else x


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--cap", type=int, default=None, help="enumeration cap per MSCC")
    common.add_argument("--out", help="write the produced machine (or the result) to FILE")

    parser = argparse.ArgumentParser(prog="omegacanon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("wagner", cmd_wagner, "inclusion measures and Wagner class of an ω-automaton")
    p.add_argument("file")
    p = add("diameter", cmd_diameter, "diameter measure of an FDFA (or of an automaton's periodic FDFA)")
    p.add_argument("file")
    p = add("colorful", cmd_colorful, "build the colorful FDFA of an ω-automaton")
    p.add_argument("file")
    p.add_argument("--dot", help="also write a DOT rendering to this file")
    p = add("color", cmd_color, "natural color of a finite or infinite word")
    p.add_argument("file")
    p.add_argument("--u", default="")
    p.add_argument("--v", required=True)
    p.add_argument("--infinite", action="store_true", help="color the ω-word u v^ω")
    p = add("fdfa-ops", cmd_fdfa_ops, "Boolean operations and decision procedures on FDFAs")
    p.add_argument("op", choices=("complement", "intersect", "union", "empty", "universal", "contains", "equiv"))
    p.add_argument("files", nargs="+")
    p = add("accepts", cmd_accepts, "membership of u v^ω")
    p.add_argument("file")
    p.add_argument("--u", default="")
    p.add_argument("--v", required=True)
    p = add("bw", cmd_bw, "Black & White DBA or DCA")
    p.add_argument("kind", choices=("dba", "dca"))
    p.add_argument("file")
    p = add("dot", cmd_dot, "Graphviz rendering")
    p.add_argument("file")
    p.add_argument("--colorful", action="store_true", help="render the colorful FDFA of an automaton")
    p = add("selftest", cmd_selftest, "run the property suites on bundled fixtures")
    p.add_argument("--bounds", help="U,V: maximal lengths of u and v")
    p.add_argument("--fixture", action="append", help="restrict to this language fixture (repeatable)")
    p.add_argument("--fdfa", action="append", help="also check this FDFA fixture or file (repeatable)")
    p = add("fixture", cmd_fixture, "print a bundled fixture as JSON")
    p.add_argument("name")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    fmt = args.format
    try:
        if args.cap is not None and args.cap < 1:
            raise InputError("--cap must be positive")
        result = args.func(args)
    except CapacityError as e:
        return _fail(fmt, "capacity", str(e), 3)
    except (InputError, DomainError) as e:
        return _fail(fmt, "input", str(e), 2)
    except ContractError as e:
        return _fail(fmt, "contract", str(e), 1)
    if args.out:
        body = result.document if result.document is not None else result.payload
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dumps(body))
    if fmt == "text":
        sys.stdout.write(result.text if result.text is not None else result.summary + "\n")
    else:
        sys.stdout.write(dumps(result.payload))
        print(result.summary, file=sys.stderr)
    return result.code


def _fail(fmt, kind, message, code) -> int:
    if fmt == "json":
        sys.stdout.write(dumps({"error": message, "kind": kind}))
    print(f"error: {message}", file=sys.stderr)
    return code


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
