"""Command-line interface: seed files in, deterministic reports out.

Seed files are JSON with 1-based vertex labels:
    {"n": 2, "unfrozen": [1, 2], "B": [[0,-1],[1,0]],
     "Lambda": [[0,-1],[1,0]], "D": [1, 1]}
B is row-major with one column per unfrozen vertex; Lambda and D are
optional and synthesized when absent.

Exit codes: 0 success, 1 check failure, 2 usage or input error,
3 internal assertion failure.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import leclerc, tropical
from .expansion import apply_word, build_exchange_graph, emit_dot, initial_tracked
from .seed import (
    NoCompatibleLambda,
    QuantumSeed,
    check_compatible,
    find_compatible_lambda,
    mutate_seed,
)


class UsageError(Exception):
    pass


def load_seed(path, require_compatible=True):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read seed file: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"seed file is not valid JSON: {exc}")
    try:
        n = int(data["n"])
        unfrozen = tuple(int(k) - 1 for k in data.get("unfrozen", range(1, n + 1)))
        b = tuple(tuple(int(x) for x in row) for row in data["B"])
        lam = data.get("Lambda")
        d = data.get("D")
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"seed file field error: {exc}")
    if lam is None:
        try:
            lam, found_d = find_compatible_lambda(b, unfrozen)
        except (ValueError, NoCompatibleLambda) as exc:
            raise UsageError(f"cannot synthesize a compatible skew form: {exc}")
        d = d or found_d
        synthesized = True
    else:
        lam = tuple(tuple(int(x) for x in row) for row in lam)
        synthesized = False
        if d is None:
            bt_lam = [
                [sum(b[i][r] * lam[i][j] for i in range(n)) for j in range(n)]
                for r in range(len(unfrozen))
            ]
            d = [bt_lam[r][k] for r, k in enumerate(unfrozen)]
    try:
        seed = QuantumSeed(n, unfrozen, b, lam, tuple(int(x) for x in d))
    except ValueError as exc:
        raise UsageError(f"bad seed data: {exc}")
    if require_compatible:
        ok, diag = check_compatible(seed)
        if not ok:
            raise UsageError(f"seed file is not a compatible pair: {diag}")
    return seed, synthesized


def parse_word(text, seed):
    if not text:
        return ()
    try:
        word = tuple(int(x) - 1 for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad mutation word: {text!r}")
    for k in word:
        if k not in seed.unfrozen:
            raise UsageError(f"vertex {k + 1} is not unfrozen")
    return word


def print_seed(seed):
    print(f"n={seed.n} unfrozen={[k + 1 for k in seed.unfrozen]}")
    print("B=" + json.dumps([list(r) for r in seed.B]))
    print("Lambda=" + json.dumps([list(r) for r in seed.Lambda]))
    print("D=" + json.dumps(list(seed.D)))


def cmd_check(args):
    seed, synthesized = load_seed(args.seed_file, require_compatible=False)
    ok, diag = check_compatible(seed)
    if synthesized:
        print("Lambda synthesized:")
        print_seed(seed)
    print("compatible" if ok else f"incompatible: {diag}")
    return 0 if ok else 1


def cmd_mutate(args):
    seed, _ = load_seed(args.seed_file)
    for k in parse_word(args.word, seed):
        seed = mutate_seed(seed, k)
    print_seed(seed)
    return 0


def cmd_expand(args):
    seed, _ = load_seed(args.seed_file)
    ts = apply_word(initial_tracked(seed), parse_word(args.word, seed))
    var = args.var - 1
    if not 0 <= var < seed.n:
        raise UsageError(f"variable index {args.var} out of range")
    print(ts.vars[var])
    return 0


def cmd_graph(args):
    seed, _ = load_seed(args.seed_file)
    graph = build_exchange_graph(seed, node_cap=args.cap)
    nvars = len(graph.distinct_variables())
    print(f"{len(graph.order)} nodes, {len(graph.undirected_edges())} edges, "
          f"{nvars} distinct cluster variables"
          + (" (truncated)" if graph.truncated else ""))
    if args.dot:
        text = emit_dot(graph)
        if args.dot == "-":
            sys.stdout.write(text)
        else:
            with open(args.dot, "w") as fh:
                fh.write(text)
    return 0


def cmd_shift(args):
    seed, _ = load_seed(args.seed_file)
    graph = build_exchange_graph(seed, node_cap=args.cap)
    sd = tropical.detect_shift(graph, graph.order[0], args.direction)
    out = {
        "direction": sd.direction,
        "word": [k + 1 for k in sd.word],
        "sigma": {str(k + 1): sd.sigma[k] + 1 for k in sorted(sd.sigma)},
        "u": {str(k + 1): list(sd.u[k]) for k in sorted(sd.u)},
    }
    print(json.dumps(out, sort_keys=True))
    return 0


def _verdict_json(v):
    out = {
        "R": {"node": None, "m": list(v.r_spec[1])},
        "V": list(v.v_degree),
        "verdict": v.case,
        "checks": {k: bool(b) for k, b in sorted(v.checks.items())},
    }
    if v.reason:
        out["reason"] = v.reason
    if v.s is not None:
        out["s"] = v.s
    if v.h is not None:
        out["h"] = v.h
    if v.S is not None:
        out["S"] = list(v.S)
    if v.H is not None:
        out["H"] = list(v.H)
    if v.middle:
        out["middle"] = [[list(g), str(c)] for g, c in v.middle]
    return out


def cmd_leclerc(args):
    seed, _ = load_seed(args.seed_file)
    graph = build_exchange_graph(seed, node_cap=args.node_cap)
    if graph.truncated:
        print(f"not finite type within cap {args.node_cap}; no report written")
        return 1
    basis = leclerc.CandidateBasis(graph, unfrozen_cap=args.cap,
                                   frozen_window=args.frozen_window)
    r_specs = leclerc.default_r_specs(graph)
    if args.scope == "all":
        pass
    elif args.scope.startswith("sample:"):
        rng = random.Random(args.rng_seed)
        count = int(args.scope.split(":", 1)[1])
        r_specs = rng.sample(r_specs, min(count, len(r_specs)))
    else:
        wanted = {int(x) for x in args.scope.split(",")}
        r_specs = [rs for i, rs in enumerate(r_specs) if i in wanted]
    report = leclerc.verify_theorem(basis, r_specs=r_specs)
    node_ids = {key: i for i, key in enumerate(graph.order)}
    pairs = []
    for v in report.verdicts:
        item = _verdict_json(v)
        item["R"]["node"] = node_ids[v.r_spec[0]]
        pairs.append(item)
    pairs.sort(key=lambda p: (p["R"]["node"], p["R"]["m"], p["V"]))
    doc = {
        "nodes": len(graph.order),
        "variables": len(graph.distinct_variables()),
        "basis_size": len(basis.by_degree),
        "counts": report.counts(),
        "conflicts": [str(c) for c in report.conflicts],
        "pairs": pairs,
    }
    text = json.dumps(doc, indent=2, sort_keys=True)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(text + "\n")
    c = report.counts()
    print(f"basis {doc['basis_size']} elements; "
          f"in_basis {c['in_basis']}, two_tail_pass {c['two_tail_pass']}, "
          f"two_tail_fail {c['two_tail_fail']}, indeterminate {c['indeterminate']}, "
          f"conflicts {len(report.conflicts)}")
    for v in report.verdicts:
        if v.case == "two_tail" and not v.passed:
            bad = [k for k, b in v.checks.items() if not b]
            print(f"FAIL R={v.r_spec[1]} V@{v.v_degree}: {bad}")
        elif v.case == "indeterminate":
            print(f"INDETERMINATE R={v.r_spec[1]} V@{v.v_degree}: {v.reason}")
    return 0 if report.ok else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="qcluster")
    ap.add_argument("--seed", dest="rng_seed", type=int, default=0,
                    help="RNG seed for sampled scopes")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a seed file's compatible pair")
    p.add_argument("seed_file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mutate", help="print the seed after a mutation word")
    p.add_argument("seed_file")
    p.add_argument("--word", default="", help="comma-separated 1-based vertices")
    p.set_defaults(func=cmd_mutate)

    p = sub.add_parser("expand", help="print one variable's Laurent expansion")
    p.add_argument("seed_file")
    p.add_argument("--word", default="")
    p.add_argument("--var", type=int, required=True, help="1-based variable index")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("graph", help="enumerate the exchange graph")
    p.add_argument("seed_file")
    p.add_argument("--cap", type=int, default=10000)
    p.add_argument("--dot", default=None, help="write DOT here ('-' for stdout)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("shift", help="detect the shifted seed of the initial node")
    p.add_argument("seed_file")
    p.add_argument("--direction", type=int, choices=(1, -1), default=1)
    p.add_argument("--cap", type=int, default=10000)
    p.set_defaults(func=cmd_shift)

    p = sub.add_parser("leclerc", help="run the product-structure verification")
    p.add_argument("seed_file")
    p.add_argument("--cap", type=int, default=3, help="unfrozen exponent cap")
    p.add_argument("--frozen-window", type=int, default=0)
    p.add_argument("--node-cap", type=int, default=10000)
    p.add_argument("--scope", default="all",
                   help="'all', comma-separated R indices, or 'sample:N'")
    p.add_argument("--json", dest="json_out", default=None,
                   help="write the full JSON report here")
    p.set_defaults(func=cmd_leclerc)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RuntimeError, LookupError, ValueError, ArithmeticError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
