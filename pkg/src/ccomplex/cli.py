"""Command line front end.

Exit codes: 0 for success or YES, 1 for NO, 2 for invalid input or a
violated hypothesis.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .core import sublink
from .equivalence import decide_equivalent, decide_equivalent_bruteforce
from .errors import CComplexError, NonvanishingLinking
from .generate import random_descriptor
from .invariants import linking_matrix, mu3, mu3_all, pairwise_linking, substitution_word
from .magnus import magnus_expand
from .moves import apply_move, make_equivalent_pair
from .obstruction import prop_mu123_check, theorem1_decide, theorem2_decide
from .textio import load, serialize

EXIT_OK, EXIT_NO, EXIT_INVALID = 0, 1, 2


def _ints(text, count=None):
    try:
        vals = [int(v) for v in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if count is not None and len(vals) != count:
        raise argparse.ArgumentTypeError(f"expected {count} comma-separated integers, got {text!r}")
    return vals


def _emit(args, text, payload):
    if args.json:
        print(json.dumps(payload, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_validate(args):
    D = load(args.file)
    text = f"valid: components={D.n} clasps={len(D.clasps)} genus={' '.join(map(str, D.genus))}"
    _emit(args, text, {"valid": True, "components": D.n, "clasps": len(D.clasps),
                       "genus": list(D.genus)})
    return EXIT_OK


def cmd_lk(args):
    D = load(args.file)
    if args.pair:
        i, j = args.pair
        value = pairwise_linking(D, i, j)
        _emit(args, f"lk({i},{j}) = {value}", {"pair": [i, j], "lk": value})
    else:
        mat = linking_matrix(D)
        _emit(args, "\n".join(" ".join(f"{v:3d}" for v in row) for row in mat), {"matrix": mat})
    return EXIT_OK


def cmd_mu3(args):
    D = load(args.file)
    if args.triples:
        results = [(tuple(t), mu3(D, *t)) for t in args.triples]
    else:
        results = mu3_all(D)
    text = "\n".join(f"mu({i},{j},{k}) = {v}" for (i, j, k), v in results) or "(fewer than 3 components)"
    _emit(args, text, {"triples": [{"triple": list(t), **v.to_json()} for t, v in results]})
    return EXIT_OK


def cmd_magnus(args):
    D = load(args.file)
    w = substitution_word(D, args.k, args.scope)
    M = magnus_expand(w)
    _emit(args, f"u{args.k} = {w}\nM{args.k} = {M}",
          {"component": args.k, "word": [list(x) for x in w], "series": M.to_json()})
    return EXIT_OK


def cmd_equiv(args):
    F, G = load(args.a), load(args.b)
    verdict = (decide_equivalent_bruteforce(F, G, args.bound) if args.bruteforce
               else decide_equivalent(F, G))
    if verdict:
        text = f"YES\n{verdict.witness}"
        payload = {"result": "YES", "certificate": verdict.witness.to_json()}
    else:
        text = f"NO\nrefuted: {verdict.reason}"
        payload = {"result": "NO", "reason": verdict.reason}
    _emit(args, text, payload)
    return EXIT_OK if verdict else EXIT_NO


def cmd_obstruct(args):
    D, E = load(args.a), load(args.b)
    if D.n != E.n:
        msg = f"component counts differ: {D.n} vs {E.n}"
        _emit(args, f"result=INVALID\nreason={msg}\nINVALID: {msg}",
              {"result": "INVALID", "reason": msg})
        return EXIT_INVALID
    report = prop_mu123_check(D, E)
    fields = {}
    for c in report.linking:
        fields["lk.%d,%d" % c.pair] = f"{c.first}/{c.second}"
    for c in report.triples:
        fields["mu.%d,%d,%d" % c.triple] = f"{c.first}/{c.second} mod {c.modulus}"

    vanishing = all(c.first == 0 and c.second == 0 for c in report.linking)
    witness = None
    if D.n == 1:
        check, result, reason = "knot", "YES", "single components always admit equivalent surfaces"
    elif D.n == 2:
        verdict = theorem1_decide(D, E)
        check, result, reason = "linking-number", verdict.label, verdict.reason
        witness = verdict.witness
        if verdict:
            reason = "linking numbers agree; witness constructed"
    elif vanishing:
        verdict = theorem2_decide(D, E)
        check, result, reason = "triple-linking", verdict.label, verdict.reason
        for t, a, b in verdict.details.get("mismatches", []):
            fields.setdefault("mismatch", f"({t[0]},{t[1]},{t[2]}):{a}!={b}")
    else:
        check = "necessary-conditions"
        if report.obstructed:
            bad = report.failures()[0]
            what = getattr(bad, "pair", None) or getattr(bad, "triple", None)
            result, reason = "NO", f"necessary condition fails at {what}: {bad.first} ≠ {bad.second}"
        else:
            result = "NO-OBSTRUCTION"
            reason = "no obstruction found (nonvanishing linking: sufficiency unknown)"

    head = {"result": result, "check": check, **fields}
    lines = [f"{k}={v}" for k, v in head.items()]
    lines.append(f"{result}: {reason}")
    payload = dict(head, reason=reason)
    if witness is not None:
        payload["witness"] = {"first": serialize(witness.first), "second": serialize(witness.second)}
    _emit(args, "\n".join(lines), payload)
    return EXIT_NO if result == "NO" else EXIT_OK


def cmd_canon(args):
    D, E = load(args.a), load(args.b)
    verdict = make_equivalent_pair(D, E)
    if not verdict:
        _emit(args, f"NO\n{verdict.reason}", {"result": "NO", "reason": verdict.reason})
        return EXIT_NO
    pair = verdict.witness
    if args.out:
        for tag, X, t in (("1", pair.first, pair.first_moves), ("2", pair.second, pair.second_moves)):
            with open(f"{args.out}{tag}.cc", "w", encoding="utf-8") as fh:
                fh.write(serialize(X))
            with open(f"{args.out}{tag}.moves", "w", encoding="utf-8") as fh:
                fh.write(str(t) + ("\n" if len(t) else ""))
    text = "\n".join([
        "YES",
        "# first", serialize(pair.first).rstrip(),
        "# first moves", str(pair.first_moves) or "(none)",
        "# second", serialize(pair.second).rstrip(),
        "# second moves", str(pair.second_moves) or "(none)",
        "# certificate", str(pair.certificate),
    ])
    payload = {
        "result": "YES",
        "first": serialize(pair.first), "first_moves": pair.first_moves.to_json(),
        "second": serialize(pair.second), "second_moves": pair.second_moves.to_json(),
        "certificate": pair.certificate.to_json(),
    }
    _emit(args, text, payload)
    return EXIT_OK


def cmd_move(args):
    D = load(args.file)
    if args.transpose:
        i, p = args.transpose
        out, rec = apply_move(D, "transpose", component=i, position=p)
    elif args.cancel_pair:
        i, j, p, q = args.cancel_pair
        out, rec = apply_move(D, "cancel_pair", i=i, j=j, p=p, q=q)
    else:
        out, rec = apply_move(D, "stabilize", component=args.stabilize)
    _emit(args, f"# {rec}\n{serialize(out).rstrip()}",
          {"descriptor": serialize(out), "move": {"kind": rec.kind, "params": dict(rec.params),
                                                  "before": rec.before, "after": rec.after}})
    return EXIT_OK


def cmd_sub(args):
    out = sublink(load(args.file), args.indices)
    _emit(args, serialize(out).rstrip(), {"descriptor": serialize(out)})
    return EXIT_OK


def cmd_rand(args):
    D = random_descriptor(args.components, args.clasps, args.seed,
                          max_genus=args.max_genus, zero_linking=args.zero_linking)
    _emit(args, serialize(D).rstrip(), {"descriptor": serialize(D)})
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="ccomplex", description="C-complex descriptor toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a descriptor file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("lk", parents=[common], help="pairwise linking numbers")
    p.add_argument("file")
    p.add_argument("pair", nargs="*", type=int, metavar="I J")
    p.set_defaults(func=cmd_lk)

    p = sub.add_parser("mu3", parents=[common], help="triple linking numbers")
    p.add_argument("file")
    p.add_argument("--triples", nargs="+", type=lambda s: _ints(s, 3), metavar="I,J,K",
                   help="only these triples (default: all i<j<k)")
    p.set_defaults(func=cmd_mu3)

    p = sub.add_parser("magnus", parents=[common], help="substituted word and its expansion")
    p.add_argument("file")
    p.add_argument("-k", type=int, required=True, help="component")
    p.add_argument("--scope", type=_ints, help="components kept as variables (default: all)")
    p.set_defaults(func=cmd_magnus)

    p = sub.add_parser("equiv", parents=[common], help="decide equivalence of two descriptors")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--bruteforce", action="store_true", help="use the exhaustive reference search")
    p.add_argument("--bound", type=int, default=8, help="clasp bound for --bruteforce")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("obstruct", parents=[common], help="can two links admit equivalent C-complexes?")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("canon", parents=[common], help="build equivalent 2-component descriptors")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--out", help="write PREFIX1.cc, PREFIX1.moves, PREFIX2.cc, PREFIX2.moves")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("move", parents=[common], help="apply one move")
    p.add_argument("file")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--transpose", type=lambda s: _ints(s, 2), metavar="I,P")
    g.add_argument("--cancel-pair", type=lambda s: _ints(s, 4), metavar="I,J,P,Q")
    g.add_argument("--stabilize", type=int, metavar="I")
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("sub", parents=[common], help="restrict to a sublink")
    p.add_argument("file")
    p.add_argument("indices", nargs="+", type=int)
    p.set_defaults(func=cmd_sub)

    p = sub.add_parser("rand", parents=[common], help="random descriptor")
    p.add_argument("--components", type=int, required=True)
    p.add_argument("--clasps", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-genus", type=int, default=0)
    p.add_argument("--zero-linking", action="store_true")
    p.set_defaults(func=cmd_rand)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "lk" and len(args.pair) not in (0, 2):
        parser.error("lk takes either no indices or exactly two")
    try:
        return args.func(args)
    except NonvanishingLinking as exc:
        print(f"hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (CComplexError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
