"""Command-line front end: ``gridlang <command> ...``.

Exit codes: 0 accepted / equal / valid, 1 rejected / unequal / invalid or
refused model, 2 usage or input error, 3 search bound exhausted.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .automaton import enumerate_language, find_derivation, max_states_from_env, validate
from .constructions import build_tile_system, find_loops, reconstruct_derivation, wts_to_saha
from .errors import (
    AlphabetError,
    FormatError,
    InvalidAutomaton,
    ReconstructionError,
    SearchBoundExceeded,
    StrongLoopError,
)
from .picture import Picture, pts_enumerate, pts_preimage
from .wang import wts_enumerate, wts_tiling

OK, NO, INPUT_ERROR, BOUND_EXHAUSTED = 0, 1, 2, 3


class _Output:
    """Collects the human-readable lines and the JSON report of one command."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.report = {}

    def say(self, text=""):
        if not self.as_json:
            print(text)

    def finish(self, code: int) -> int:
        if self.as_json:
            print(json.dumps({"exit_code": code, **self.report}, indent=2, sort_keys=True))
        return code


def _render(p: Picture) -> str:
    return p.render(framed=True)


def _max_states(args):
    return args.max_steps if getattr(args, "max_steps", None) else max_states_from_env()


def _load_picture(path) -> Picture:
    return io.load(path, "picture")[1]


def _language(kind, model, max_h, max_w, max_states):
    if kind == "automaton":
        return enumerate_language(model, max_h, max_w, max_states=max_states)
    if kind == "wts":
        return wts_enumerate(model, max_h, max_w)
    if kind == "pts":
        return pts_enumerate(model, max_h, max_w)
    raise FormatError(f"cannot enumerate a {kind} file")


def cmd_validate(args, out: _Output) -> int:
    kind, model = io.load(args.model)
    out.report["kind"] = kind
    problems = validate(model) if kind == "automaton" else []
    out.report["diagnostics"] = [{"hyperedge": d.hyperedge, "code": d.code, "message": d.message} for d in problems]
    for d in problems:
        out.say(f"invalid: {d}")
    if problems:
        return NO
    out.say(f"valid {kind}")
    return OK


def cmd_accept(args, out: _Output) -> int:
    p = _load_picture(args.picture)
    if args.wts:
        W = io.load(args.wts, "wts")[1]
        witness = wts_tiling(W, p)
        if witness is not None:
            out.report["witness"] = io.tiling_to_json(witness)
            if args.render == "ascii":
                out.say(witness.render())
    elif args.pts:
        T = io.load(args.pts, "pts")[1]
        witness = pts_preimage(T, p)
        if witness is not None:
            out.report["witness"] = io.picture_to_json(witness)
            if args.render == "ascii":
                out.say(_render(witness))
    else:
        A = io.load(args.saha, "automaton")[1]
        witness = find_derivation(A, p, max_states=_max_states(args))
        if witness is not None:
            out.report["derivation"] = witness.hyperedge_ids()
            out.say("derivation: " + " ".join(witness.hyperedge_ids()))
    out.report["accepted"] = witness is not None
    if args.witness and witness is not None and not args.saha:
        io.save(witness, args.witness)
        out.say(f"witness written to {args.witness}")
    if args.render == "ascii":
        out.say(_render(p))
    out.say("accepted" if witness is not None else "rejected")
    return OK if witness is not None else NO


def cmd_enumerate(args, out: _Output) -> int:
    kind, model = io.load(args.model)
    found = sorted(_language(kind, model, args.max_h, args.max_w, _max_states(args)), key=Picture.sort_key)
    payload = io.pictures_to_json(found)
    out.report["count"] = len(found)
    if args.out:
        Path(args.out).write_text(io.dumps(payload))
        out.report["out"] = args.out
        out.say(f"{len(found)} pictures written to {args.out}")
    elif args.render == "ascii":
        for p in found:
            out.say(_render(p))
            out.say()
        out.say(f"{len(found)} pictures")
    elif out.as_json:
        out.report.update(payload)
    else:
        out.say(io.dumps(payload).rstrip())
    return OK


def _write_model(model, target, out: _Output, construction: str):
    out.report["construction"] = construction
    if target:
        io.save(model, target)
        out.report["output"] = target
        out.say(f"{construction}: wrote {target}")
    elif out.as_json:
        out.report["model"] = io.to_json(model)
    else:
        print(io.dumps(model), end="")


def cmd_convert(args, out: _Output) -> int:
    if args.direction == "wts-to-saha":
        V = io.load(args.input, "wts")[1]
        A = wts_to_saha(V, prune=args.prune)
        out.report.update(nodes=len(A.graph.labels), hyperedges=len(A.hyperedges))
        _write_model(A, args.output, out, "wts-to-saha")
        return OK
    A = io.load(args.input, "automaton")[1]
    try:
        con = build_tile_system(A)
    except StrongLoopError as exc:
        out.report["strong_loops"] = [r.to_json() for r in exc.loops]
        out.say(f"refused: {exc}")
        for r in exc.loops:
            out.say(json.dumps(r.to_json()))
        return NO
    except InvalidAutomaton as exc:
        out.report["diagnostics"] = [str(d) for d in exc.diagnostics]
        out.say(f"refused: {exc}")
        return NO
    out.report.update(candidates=len(con.candidates), tiles=len(con.system.tiles))
    _write_model(con.system, args.output, out, "saha-to-wts")
    return OK


def cmd_loops(args, out: _Output) -> int:
    A = io.load(args.automaton, "automaton")[1]
    loops = find_loops(A)
    out.report["loops"] = [r.to_json() for r in loops]
    for r in loops:
        tag = "strong" if r.strong else "weak"
        out.say(f"{tag}: {' -> '.join(r.cycle)} displacement {r.displacement}")
    if not loops:
        out.say("no loops")
    return NO if any(r.strong for r in loops) else OK


def cmd_compare(args, out: _Output) -> int:
    sides = {}
    for side in ("left", "right"):
        kind, model = io.load(getattr(args, side))
        sides[side] = _language(kind, model, args.max_h, args.max_w, _max_states(args))
    left, right = sides["left"], sides["right"]
    only_left = sorted(left - right, key=Picture.sort_key)
    only_right = sorted(right - left, key=Picture.sort_key)
    out.report.update(
        equal=not only_left and not only_right,
        left_count=len(left),
        right_count=len(right),
        only_left=[io.picture_to_json(p) for p in only_left],
        only_right=[io.picture_to_json(p) for p in only_right],
    )
    for name, extra in (("left", only_left), ("right", only_right)):
        for p in extra:
            out.say(f"only in {name}:")
            out.say(_render(p))
    verdict = "equal" if out.report["equal"] else "different"
    out.say(f"{verdict} ({len(left)} vs {len(right)} pictures within {args.max_h}x{args.max_w})")
    return OK if out.report["equal"] else NO


def cmd_reconstruct(args, out: _Output) -> int:
    A = io.load(args.saha, "automaton")[1]
    try:
        con = build_tile_system(A)
    except (StrongLoopError, InvalidAutomaton) as exc:
        out.say(f"refused: {exc}")
        return NO
    try:
        tiling = io.tiling_from_json(io.read_json(args.tiling), con.system)
    except FormatError as exc:
        raise FormatError(str(exc), args.tiling) from exc
    try:
        derivation = reconstruct_derivation(A, tiling, con)
    except ReconstructionError as exc:
        out.report["error"] = str(exc)
        out.say(f"reconstruction failed: {exc}")
        return NO
    out.report["derivation"] = derivation.hyperedge_ids()
    out.report["picture"] = io.picture_to_json(derivation.final.picture())
    out.say("derivation: " + " ".join(derivation.hyperedge_ids()))
    if args.render == "ascii":
        out.say(_render(derivation.final.picture()))
    return OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a machine-readable JSON report")
    common.add_argument("--render", choices=["ascii"], help="also print pictures as framed ASCII matrices")

    bounded = argparse.ArgumentParser(add_help=False)
    bounded.add_argument("--max-h", type=int, required=True)
    bounded.add_argument("--max-w", type=int, required=True)
    bounded.add_argument("--max-steps", type=int, help="cap on explored automaton configurations")

    parser = argparse.ArgumentParser(prog="gridlang", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a model file")
    p.add_argument("model")
    p.set_defaults(run=cmd_validate)

    p = sub.add_parser("accept", parents=[common], help="decide membership of one picture")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--wts")
    which.add_argument("--pts")
    which.add_argument("--saha")
    p.add_argument("--picture", required=True)
    p.add_argument("--max-steps", type=int)
    p.add_argument("--witness", help="write the tiling (WTS) or preimage (PTS) witness to this file")
    p.set_defaults(run=cmd_accept)

    p = sub.add_parser("enumerate", parents=[common, bounded], help="list the pictures of a model within bounds")
    p.add_argument("model")
    p.add_argument("--out")
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("convert", parents=[common], help="translate between tile systems and automata")
    p.add_argument("direction", choices=["wts-to-saha", "saha-to-wts"])
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.add_argument("--prune", action="store_true", help="drop unused nodes (wts-to-saha only)")
    p.set_defaults(run=cmd_convert)

    p = sub.add_parser("loops", parents=[common], help="list derivation loops of an automaton")
    p.add_argument("automaton")
    p.set_defaults(run=cmd_loops)

    p = sub.add_parser("compare", parents=[common, bounded], help="compare two bounded languages")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(run=cmd_compare)

    p = sub.add_parser("reconstruct", parents=[common], help="derivation for a tiling of a converted automaton")
    p.add_argument("--saha", required=True)
    p.add_argument("--tiling", required=True)
    p.set_defaults(run=cmd_reconstruct)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    for name in ("max_h", "max_w"):
        if getattr(args, name, 1) < 1:
            parser.print_usage(sys.stderr)
            print(f"gridlang: error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return INPUT_ERROR
    out = _Output(args.json)
    try:
        code = args.run(args, out)
    except (FormatError, AlphabetError) as exc:
        print(f"gridlang: input error: {exc}", file=sys.stderr)
        out.report["error"] = str(exc)
        code = INPUT_ERROR
    except SearchBoundExceeded as exc:
        print(f"gridlang: {exc}", file=sys.stderr)
        out.report["error"] = str(exc)
        code = BOUND_EXHAUSTED
    return out.finish(code)


def main() -> None:
    sys.exit(run())
