"""Command-line interface.

Exit codes: 0 success, 1 a checked claim or predicate failed, 2 usage or
input error, 3 resource cap reached (including exhausted hunt budgets).
"""

import argparse
import json
import random
import sys

from .claims import registry
from .engine import (
    STATUS_COUNTEREXAMPLE,
    STATUS_HOLDS,
    emit,
    result_predicate,
    run_remark_hunt,
    run_suite,
)
from .groupring import GroupRing
from .io import (
    json_plain,
    load_soft,
    load_structure_file,
    soft_to_dict,
)
from .ncollect import NCollection, classify_mixed
from .softsets import (
    OPS,
    _value_verdict,
    restricted_union,
    soft_is,
)
from .structures import FiniteMagma, FiniteRing, ResourceCap, verify_kind
from .subsets import classify_lagrange, enumerate_subs


def _parse_subset(universe, text):
    if isinstance(universe, NCollection):
        parts = [p.strip() for p in text.split(";")]
        return tuple(frozenset(x.strip() for x in p.split(",") if x.strip())
                     for p in parts)
    return frozenset(x.strip() for x in text.split(",") if x.strip())


def _format_subset(universe, value):
    if isinstance(value, tuple):
        return "; ".join(",".join(sorted(p)) for p in value)
    if isinstance(universe, GroupRing):
        return ",".join(sorted(universe.format(x) for x in value))
    return ",".join(sorted(value))


def _cmd_build(args):
    s = load_structure_file(args.spec)
    if isinstance(s, FiniteMagma):
        rep = verify_kind(s)
        print("%s: magma with %d elements; strongest verified kind: %s"
              % (s.name, len(s), rep.best()))
        if rep.identity is not None:
            print("identity: %s" % rep.identity)
    elif isinstance(s, FiniteRing):
        print("%s: ring with %d elements (tables validated)" % (s.name, len(s)))
    elif isinstance(s, GroupRing):
        print("%s: formal sums over %d basis elements, %d in total"
              % (s.name, len(s.basis), len(s)))
    elif isinstance(s, NCollection):
        print("%s: collection of %d components, total order %d"
              % (s.name, len(s), s.order()))
        for c in s.components:
            print("  %s: %s%s, %d elements"
                  % (c.name, c.alg, " (indeterminate)" if c.neutro else "",
                     len(c.structure)))
    else:
        print(s)
    return 0


def _cmd_check_sub(args):
    universe = load_structure_file(args.structure)
    value = _parse_subset(universe, args.subset)
    name = args.predicate if args.strict else result_predicate(args.predicate)
    v = _value_verdict(universe, value, name)
    if v.ok:
        print("holds: %s on {%s}" % (name, _format_subset(universe, value)))
        return 0
    print("fails: %s" % (v.note or "predicate failed"))
    if v.witness:
        print("witness: %s" % (json.dumps(json_plain(v.witness)),))
    return 1


def _cmd_enumerate(args):
    universe = load_structure_file(args.structure)
    subs = enumerate_subs(universe, args.predicate)
    for s in subs:
        print(",".join(sorted(s, key=universe.idx)))
    print("-- %d subsets satisfy %s" % (len(subs), args.predicate))
    return 0


def _cmd_classify(args):
    universe = load_structure_file(args.structure)
    if isinstance(universe, NCollection):
        print("mixed profile: %s (order %d)"
              % (classify_mixed(universe), universe.order()))
        return 0
    if isinstance(universe, FiniteMagma):
        rep = verify_kind(universe)
        lag = classify_lagrange(universe)
        print("kind: %s" % rep.best())
        print("divisibility class: %s (%d dividing, %d non-dividing)"
              % (lag.verdict, len(lag.dividing), len(lag.non_dividing)))
        return 0
    if isinstance(universe, FiniteRing):
        print("ring with %d elements" % len(universe))
        return 0
    raise ValueError("nothing to classify for this universe")


def _cmd_soft_op(args):
    with open(args.lhs) as fh:
        lhs_spec = json.load(fh)
    f = load_soft(lhs_spec)
    with open(args.rhs) as fh:
        k = load_soft(json.load(fh), universe=f.universe)
    if args.union_all_params and args.op != "restricted-union":
        raise ValueError("--union-all-params only applies to restricted-union")
    if args.op == "restricted-union":
        res = restricted_union(f, k, literal=args.union_all_params)
    else:
        res = OPS[args.op](f, k)
    out = soft_to_dict(res, universe_spec=lhs_spec.get("universe"))
    with open(args.output, "w") as fh:
        json.dump(out, fh, indent=2)
        fh.write("\n")
    print("wrote %s with parameters: %s" % (args.output, ", ".join(res.params)))
    return 0


def _cmd_soft_check(args):
    with open(args.file) as fh:
        soft = load_soft(json.load(fh))
    rep = soft_is(soft, args.predicate)
    if rep.ok:
        print("holds: every assignment satisfies %s" % args.predicate)
        return 0
    print("fails: %s" % rep.note)
    for p, v in rep.failures:
        line = "  %s: %s" % (p, v.note or "predicate failed")
        if v.witness:
            line += "  witness %s" % (json.dumps(json_plain(v.witness)),)
        print(line)
    return 1


def _cmd_verify(args):
    reg = registry()
    reports, ok = run_suite(reg, filter_pat=args.filter, seed=args.seed)
    print(emit(reports, fmt=args.format, registry=reg))
    return 0 if ok else 1


def _cmd_hunt(args):
    if ":" not in args.template:
        raise ValueError("template must look like <operation>:<predicate>")
    op_name, predicate = args.template.split(":", 1)
    if op_name not in OPS:
        raise ValueError("unknown operation %r; choices: %s"
                         % (op_name, ", ".join(sorted(OPS))))
    universe = load_structure_file(args.universe)
    population = enumerate_subs(universe, predicate)
    rng = random.Random("hunt:%s" % args.template)
    status, witness, trials = run_remark_hunt(
        universe, op_name, result_predicate(predicate), rng,
        population=population, budget=args.budget, exhaustive=True)
    print(json.dumps({"status": status, "witness": json_plain(witness),
                      "trials": trials}, indent=2))
    if status in (STATUS_COUNTEREXAMPLE, STATUS_HOLDS):
        return 0
    return 3


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="neutrolab",
        description="Finite computational toolkit for soft neutrosophic "
                    "algebra: build structures, decide predicates, verify "
                    "the registered claims, and hunt counterexamples.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a structure from a JSON spec")
    p.add_argument("spec")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("check-sub", help="test a subset predicate")
    p.add_argument("--structure", required=True)
    p.add_argument("--subset", required=True,
                   help="comma-separated labels; ';' separates collection parts")
    p.add_argument("--predicate", required=True)
    p.add_argument("--strict", action="store_true",
                   help="require an indeterminate member where applicable")
    p.set_defaults(fn=_cmd_check_sub)

    p = sub.add_parser("enumerate", help="list all subsets with a predicate")
    p.add_argument("--structure", required=True)
    p.add_argument("--predicate", required=True)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("classify", help="classification report for a structure")
    p.add_argument("--structure", required=True)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("soft-op", help="combine two soft-set files")
    p.add_argument("--op", required=True, choices=sorted(OPS))
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--union-all-params", action="store_true",
                   help="restricted-union keeps every parameter instead of "
                        "merging only the shared ones")
    p.set_defaults(fn=_cmd_soft_op)

    p = sub.add_parser("soft-check", help="test a predicate on a soft-set file")
    p.add_argument("--file", required=True)
    p.add_argument("--predicate", required=True)
    p.set_defaults(fn=_cmd_soft_check)

    p = sub.add_parser("verify", help="run the registered claim suite")
    p.add_argument("--filter", default=None,
                   help="claim id, glob pattern, or chN for one chapter")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("hunt", help="search for a closure counterexample")
    p.add_argument("--template", required=True,
                   help="<operation>:<predicate>, e.g. extended-union:subgroupoid")
    p.add_argument("--universe", required=True)
    p.add_argument("--budget", type=int, default=10_000)
    p.set_defaults(fn=_cmd_hunt)

    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except ResourceCap as cap:
        print("resource cap: %s" % cap, file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
