"""Command-line surface: crystal / tensor / branch / oracle / verify.

Weights are entered in ambient-lattice coordinates (the epsilon basis for
GL(n)); --fundamental converts fundamental-weight coordinates for the named
semisimple data.  Output is deterministic for identical invocations and
seeds.  Exit codes: 0 success, 1 check failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import characters
from .branching import (
    branch,
    branching_support,
    component_bijection_check,
    embedding_bounds_check,
    levi_ceiling,
    string_structure_check,
)
from .crystal_graph import (
    build_crystal,
    character,
    check_normal_crystal,
    crystal_to_dot,
    crystal_to_json,
    decompose,
)
from .linalg import rational_inverse
from .properties import run_properties
from .root_data import GuardError, InputError, build_datum
from .tensor import closed_family_certificate, tensor
from .worked_examples import repellent_dim, run_examples

USAGE_ERROR, CHECK_FAILURE = 2, 1


def _parse_weight(text, rd, fundamental=False):
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"weight {text!r} is not a comma-separated integer vector")
    if fundamental:
        if len(rd.index_set) != rd.rank:
            raise InputError("fundamental coordinates need a semisimple datum "
                             "(rank equal to the number of simple roots)")
        if len(coords) != rd.rank:
            raise InputError(f"weight {text!r} has {len(coords)} coordinates, "
                             f"expected {rd.rank}")
        # columns of the inverse coroot matrix are the fundamental weights
        inv = rational_inverse([list(c) for c in rd.simple_coroots])
        out = [sum(Fraction(inv[k][j]) * coords[j] for j in range(rd.rank))
               for k in range(rd.rank)]
        if any(x.denominator != 1 for x in out):
            raise InputError(f"{text!r} is not in the weight lattice of {rd.name}")
        return tuple(int(x) for x in out)
    if len(coords) != rd.rank:
        raise InputError(f"weight {text!r} has {len(coords)} coordinates, "
                         f"datum rank is {rd.rank}")
    return coords


def _parse_levi(text, rd):
    if not text:
        return ()
    try:
        levi = tuple(sorted(int(x) for x in text.split(",")))
    except ValueError:
        raise InputError(f"Levi set {text!r} is not a comma-separated index list")
    for i in levi:
        rd.pos(i)
    return levi


def _datum_arg(args):
    spec = args.datum
    if spec.strip().startswith("{"):
        spec = json.loads(spec)
    return build_datum(spec)


def _emit(args, payload, table_text):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(table_text)


def _weight_str(w):
    return ",".join(str(x) for x in w)


def _cmd_crystal(args):
    rd = _datum_arg(args)
    lam = _parse_weight(args.hw, rd, args.fundamental)
    c = build_crystal(rd, lam, max_elements=args.max_elements)
    if args.format == "dot":
        print(crystal_to_dot(c), end="")
        return 0
    if args.format == "json":
        print(json.dumps(crystal_to_json(c), sort_keys=True))
        return 0
    lines = [f"crystal {rd.name} hw={_weight_str(lam)} elements={len(c)}"]
    for x in c.ids():
        edges = " ".join(f"f{i}->{c.f(x, i)}" for i in rd.index_set
                         if c.f(x, i) is not None)
        lines.append(f"{x}\t({_weight_str(c.weight(x))})\t{edges}")
    print("\n".join(lines))
    return 0


def _cmd_tensor(args):
    rd = _datum_arg(args)
    lam1 = _parse_weight(args.hw1, rd, args.fundamental)
    lam2 = _parse_weight(args.hw2, rd, args.fundamental)
    b1 = build_crystal(rd, lam1, max_elements=args.max_elements)
    b2 = build_crystal(rd, lam2, max_elements=args.max_elements)
    t = tensor(b1, b2)
    parts = decompose(t, rd.index_set)
    payload = {
        "factors": [list(lam1), list(lam2)],
        "elements": len(t),
        "decomposition": [{"nu": list(w), "mult": m} for w, m in parts.items()],
    }
    status = 0
    if args.retraction_check:
        cert = closed_family_certificate(rd, lam1, lam2, max_elements=args.max_elements)
        payload["retraction"] = cert.report.to_json()
        payload["zero_fiber"] = cert.report.details["zero_fiber"]
        ok = cert.ok and parts == characters.klimyk(rd, lam1, lam2)
        payload["ok"] = ok
        status = 0 if ok else CHECK_FAILURE
    if args.format == "dot":
        print(crystal_to_dot(t), end="")
        return status
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
        return status
    lines = [f"tensor {rd.name} {_weight_str(lam1)} (x) {_weight_str(lam2)} "
             f"elements={len(t)}"]
    for w, m in parts.items():
        lines.append(f"({_weight_str(w)})\tx{m}")
    if args.retraction_check:
        lines.append(("PASS" if status == 0 else "FAIL") + " retraction certificate")
    print("\n".join(lines))
    return status


def _cmd_branch(args):
    rd = _datum_arg(args)
    lam = _parse_weight(args.hw, rd, args.fundamental)
    levi = _parse_levi(args.levi, rd)
    mu = _parse_weight(args.mu, rd, args.fundamental) if args.mu else None
    if args.lambda_tilde:
        if mu is None:
            raise InputError("--lambda-tilde needs --mu")
        ceiling = levi_ceiling(rd, lam, mu, levi)
        _emit(args, {"lambda_tilde": list(ceiling)}, _weight_str(ceiling))
        return 0
    status = 0
    if args.check_bijection:
        if mu is None:
            raise InputError("--check-bijection needs --mu")
        report = component_bijection_check(rd, lam, mu, levi,
                                           max_elements=args.max_elements)
        _emit(args, report.to_json(), str(report))
        return 0 if report.ok else CHECK_FAILURE
    result = branch(rd, lam, levi, max_elements=args.max_elements)
    payload = result.to_json()
    if args.sets:
        support = branching_support(rd, lam, levi, mu=mu,
                                    max_elements=args.max_elements)
        payload["support"] = [list(nu) for nu in support]
    if mu is not None:
        report = embedding_bounds_check(rd, lam, mu, levi,
                                        max_elements=args.max_elements)
        payload["bounds"] = report.to_json()
        status = 0 if report.ok else CHECK_FAILURE
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
        return status
    lines = [f"branch {rd.name} hw={_weight_str(lam)} levi={','.join(map(str, levi))}"]
    for nu, m in result.table.items():
        lines.append(f"({_weight_str(nu)})\tx{m}")
    if "support" in payload:
        lines.append("support: " + " ".join(f"({_weight_str(tuple(n))})"
                                            for n in payload["support"]))
    if mu is not None:
        lines.append(("PASS" if status == 0 else "FAIL") + " embedding bounds")
    print("\n".join(lines))
    return status


def _cmd_oracle(args):
    rd = _datum_arg(args)
    lam = _parse_weight(args.hw, rd, args.fundamental)
    if args.dim:
        _emit(args, {"dim": characters.weyl_dim(rd, lam)},
              str(characters.weyl_dim(rd, lam)))
        return 0
    if args.char:
        table = characters.freudenthal(rd, lam)
        text = "\n".join(f"({_weight_str(w)})\tx{m}"
                         for w, m in sorted(table.mults.items()))
        _emit(args, table.to_json(), text)
        return 0
    if args.tensor_with:
        lam2 = _parse_weight(args.tensor_with, rd, args.fundamental)
        parts = characters.klimyk(rd, lam, lam2)
        payload = [{"nu": list(w), "mult": m} for w, m in parts.items()]
        text = "\n".join(f"({_weight_str(w)})\tx{m}" for w, m in parts.items())
        _emit(args, {"decomposition": payload}, text)
        return 0
    if args.branch_levi is not None:
        levi = _parse_levi(args.branch_levi, rd)
        result = characters.branch_by_characters(rd, lam, levi)
        text = "\n".join(f"({_weight_str(w)})\tx{m}"
                         for w, m in sorted(result.table.items()))
        _emit(args, result.to_json(), text)
        return 0
    if args.is_weight:
        mu = _parse_weight(args.is_weight, rd, args.fundamental)
        ok = characters.is_weight(rd, lam, mu)
        _emit(args, {"is_weight": ok}, "true" if ok else "false")
        return 0
    if args.repellent_dim:
        mu = _parse_weight(args.repellent_dim, rd, args.fundamental)
        d = repellent_dim(rd, lam, mu)
        _emit(args, {"repellent_dim": d}, str(d))
        return 0
    raise InputError("pick one oracle query "
                     "(--dim/--char/--tensor-with/--branch-levi/--is-weight/--repellent-dim)")


def _cmd_verify(args):
    if args.what == "examples":
        report = run_examples()
        if args.format == "json":
            print(json.dumps(report.to_json(), sort_keys=True))
        else:
            print(report.render_table())
        return 0 if report.ok else CHECK_FAILURE
    report = run_properties(seed=args.seed, max_height=args.max_height)
    if args.format == "json":
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        print(report.render_text())
    return 0 if report.ok else CHECK_FAILURE


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="crystals",
        description="Integrable crystals, tensor retractions and Levi branching "
                    "with an independent character oracle.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, hw=True):
        p.add_argument("--datum", required=True,
                       help="datum name (A2, GL4, GL2xGL2, PGL3, ...) or JSON descriptor")
        p.add_argument("--format", choices=("table", "json", "dot"), default="table")
        p.add_argument("--fundamental", action="store_true",
                       help="interpret weights in fundamental-weight coordinates")
        p.add_argument("--max-elements", type=int, default=None,
                       help="element guard override (env CRYSTALS_MAX_ELEMENTS)")
        if hw:
            p.add_argument("--hw", required=True, help="highest weight, e.g. 2,0,0,-2")

    p = sub.add_parser("crystal", help="build and export one crystal")
    common(p)
    p.set_defaults(fn=_cmd_crystal)

    p = sub.add_parser("tensor", help="tensor product, decomposition, retraction")
    common(p, hw=False)
    p.add_argument("--hw1", required=True)
    p.add_argument("--hw2", required=True)
    p.add_argument("--retraction-check", action="store_true")
    p.set_defaults(fn=_cmd_tensor)

    p = sub.add_parser("branch", help="Levi branching tables and certificates")
    common(p)
    p.add_argument("--levi", default="", help="comma-separated simple-root indices")
    p.add_argument("--mu", default=None)
    p.add_argument("--lambda-tilde", action="store_true",
                   help="print the ceiling weight (mu plus the Levi part of hw - mu)")
    p.add_argument("--sets", action="store_true", help="print the branching support")
    p.add_argument("--check-bijection", action="store_true",
                   help="certify the component pairing at --mu")
    p.set_defaults(fn=_cmd_branch)

    p = sub.add_parser("oracle", help="character-formula oracle queries")
    common(p)
    p.add_argument("--dim", action="store_true")
    p.add_argument("--char", action="store_true")
    p.add_argument("--tensor-with", default=None)
    p.add_argument("--branch-levi", default=None)
    p.add_argument("--is-weight", default=None)
    p.add_argument("--repellent-dim", default=None)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("verify", help="run the example or property suites")
    p.add_argument("what", choices=("examples", "properties"))
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--max-height", type=int, default=3)
    p.set_defaults(fn=_cmd_verify)
    return parser


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        return args.fn(args)
    except GuardError as exc:
        print(f"error: element guard exceeded: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except json.JSONDecodeError as exc:
        print(f"error: bad JSON datum descriptor: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
