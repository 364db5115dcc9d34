"""Command-line interface: mp power | summary | classify | verify."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .errors import InvalidInput, ParseError, Unsupported
from .monomials import (
    FieldSpec,
    emit_ideal_text,
    matching_power,
    parse_ideal_text,
)
from . import graphs as gr
from . import homology as hm
from . import theorems as th
from .cache import DiskCache


def _add_input_flags(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-g6", metavar="STR", help="graph6 string")
    src.add_argument("-e", metavar="FILE", help="edge-list file ('-' for stdin)")
    src.add_argument("-i", metavar="FILE", help="ideal text file ('-' for stdin)")


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_ideal(args):
    if args.g6 is not None:
        return gr.edge_ideal(gr.parse_graph6(args.g6))
    if args.e is not None:
        return gr.edge_ideal(gr.parse_edge_list(_read(args.e)))
    return parse_ideal_text(_read(args.i))


def _setup_cache(cache_dir):
    cache_dir = cache_dir or os.environ.get("MP_CACHE_DIR")
    if cache_dir:
        hm.set_store(DiskCache(cache_dir, __version__))
    return cache_dir


def cmd_power(args):
    I = _load_ideal(args)
    sys.stdout.write(emit_ideal_text(matching_power(I, args.k)))
    return 0


def cmd_summary(args):
    _setup_cache(args.cache_dir)
    I = matching_power(_load_ideal(args), args.k)
    s = hm.summary(I, FieldSpec.parse(args.field))
    if args.json:
        out = s.to_dict()
        out["k"] = args.k
        json.dump(out, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        rows = [
            ("nvars", s.nvars), ("height", s.height), ("dim", s.dim),
            ("depth", s.depth), ("pdim", s.pdim),
            ("cohen_macaulay", "yes" if s.is_cm else "no"),
            ("field", s.field.label()),
        ]
        for name, val in rows:
            sys.stdout.write(f"{name:<16}{val}\n")
    return 0


def cmd_classify(args):
    _setup_cache(args.cache_dir)
    field = FieldSpec.parse(args.field)
    records = []
    for n in range(2, args.max_n + 1):
        records.extend(th.classify_all(n, field, jobs=args.jobs))
    payload = [r.to_dict() for r in records]
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args):
    _setup_cache(args.cache_dir)
    field = FieldSpec.parse(args.field)
    rep = th.run_suite(
        args.theorem, args.max_n, field,
        sample=args.sample, seed=args.seed, jobs=args.jobs,
    )
    if args.json:
        json.dump(rep.to_dict(), sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        status = "PASS" if rep.passed else "FAIL"
        sys.stdout.write(
            f"{status} {rep.theorem}: {rep.instances} instances, "
            f"{len(rep.failures)} failures ({rep.elapsed_s:.1f}s; {rep.corpus})\n"
        )
        for f in rep.failures:
            sys.stdout.write("  witness: " + json.dumps(f, sort_keys=True) + "\n")
    return 0 if rep.passed else 1


def build_parser():
    p = argparse.ArgumentParser(
        prog="mp",
        description="Matching powers of monomial ideals: exact homological "
        "invariants, classification and verification suites.",
    )
    p.add_argument("--version", action="version", version=f"mp {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    pp = sub.add_parser("power", help="print a matching power in ideal text form")
    _add_input_flags(pp)
    pp.add_argument("-k", type=int, required=True, help="power index (k >= 0)")
    pp.set_defaults(fn=cmd_power)

    ps = sub.add_parser("summary", help="height/dim/depth/pdim/CM of a power")
    _add_input_flags(ps)
    ps.add_argument("-k", type=int, default=1)
    ps.add_argument("--field", default="q", help="q, gf2, gf3 or gf:<p>")
    ps.add_argument("--json", action="store_true")
    ps.add_argument("--cache-dir", default=None)
    ps.set_defaults(fn=cmd_summary)

    pc = sub.add_parser("classify", help="graphs whose matching powers are all CM")
    pc.add_argument("--max-n", type=int, required=True, choices=range(2, 9))
    pc.add_argument("--field", default="q")
    pc.add_argument("--jobs", type=int, default=1)
    pc.add_argument("--out", default=None, help="output JSON path (default stdout)")
    pc.add_argument("--cache-dir", default=None)
    pc.set_defaults(fn=cmd_classify)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("theorem", choices=th.THEOREM_IDS)
    pv.add_argument("--max-n", type=int, default=6, choices=range(2, 9))
    pv.add_argument("--field", default="q")
    pv.add_argument("--json", action="store_true")
    pv.add_argument("--jobs", type=int, default=1)
    pv.add_argument("--sample", type=int, default=None,
                    help="sample size for the top vertex count (exhaustive below)")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--cache-dir", default=None)
    pv.set_defaults(fn=cmd_verify)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (InvalidInput, ParseError, Unsupported, OSError) as exc:
        sys.stderr.write(f"mp: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
