"""Command-line front end.

Exit codes: 0 ok, 1 verification failure, 2 usage, 3 precondition, 4 resource.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .classify import sigma_matrix, to_multisegments, zeta_coords
from .hecke import (
    DimensionLimitError, build_module, cpser_check, ddot_weight_list, simple_quotient,
    weight_table,
)
from .oracle import ResourceLimitError, SUITES, SweepConfig, run_sweep
from .params import ParamPair, domain_membership, reduce_pair_to_fundamental, reduce_to_affdom

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION, EXIT_RESOURCE = 0, 1, 2, 3, 4


class PreconditionError(Exception):
    pass


def _csv(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else [x.numerator, x.denominator]
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _pair(args, kappa: int) -> ParamPair:
    if len(args.lam) != len(args.mu):
        raise PreconditionError("--lambda and --mu must have the same length")
    return ParamPair(kappa, args.lam, args.mu)


def cmd_reduce(args) -> dict:
    if args.kappa <= 0:
        raise PreconditionError("reduction needs kappa > 0")
    if args.mu is None:
        canon, w = reduce_to_affdom(args.lam, args.kappa)
        return {"canonical": list(canon), "witness_word": str(w)}
    pp = _pair(args, args.kappa)
    if not pp.in_I_star():
        raise PreconditionError(f"{pp} is not in I_p^*")
    canon, w = reduce_pair_to_fundamental(pp)
    return {"canonical": canon.to_json(), "witness_word": str(w)}


def cmd_classify(args) -> dict:
    if args.kappa <= 0:
        raise PreconditionError("classification needs kappa > 0")
    pp = _pair(args, args.kappa)
    if not pp.in_I_star():
        raise PreconditionError(f"{pp} is not in I_p^*: some lambda_i equals mu_i")
    canon, _ = reduce_pair_to_fundamental(pp)
    ms = to_multisegments(pp)
    return {
        "p": pp.p,
        "canonical_pair": canon.to_json(),
        "multisegments": ms.to_json()["segments"],
        "sigma_matrix": sigma_matrix(ms).to_json(),
        "zeta": list(zeta_coords(pp)),
    }


def cmd_module(args) -> dict:
    pp = _pair(args, args.kappa)
    if not pp.in_I():
        raise PreconditionError(f"{pp} is not in I_p")
    if args.simple and not domain_membership(pp).I_plus:
        raise PreconditionError(f"{pp} is not in I_p^+")
    M = build_module(pp)
    out = {"pair": pp.to_json(), "dim": M.dim, "weight_table": weight_table(M).to_json()}
    if args.simple:
        out["dim_L"] = simple_quotient(M).dim_L
    if pp.p == 2 and pp.in_I_star():
        rep = cpser_check(pp)
        out["factor_dims"] = list(rep.factor_dims)
        out["p2_report"] = rep.to_json()
    return out


def cmd_weights(args) -> dict:
    if args.kappa == 0:
        raise PreconditionError("kappa = 0 is not treated")
    if args.length_bound < 0:
        raise PreconditionError("the length bound must be nonnegative")
    pp = _pair(args, args.kappa)
    if not pp.in_I():
        raise PreconditionError(f"{pp} is not in I_p")
    table = ddot_weight_list(pp, args.length_bound)
    return {"pair": pp.to_json(), "length_bound": args.length_bound,
            "truncated": True, "weights": table.to_json()}


def cmd_verify(args):
    if args.suite != "all" and args.suite not in SUITES:
        raise _UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    cfg = SweepConfig()
    if args.config:
        with open(args.config) as fh:
            cfg = SweepConfig.from_dict(json.load(fh))
    suites = None if args.suite == "all" else [args.suite]
    reports = run_sweep(cfg, suites)
    ok = all(not r["failures"] for r in reports)
    return {"passed": ok, "reports": reports}, (EXIT_OK if ok else EXIT_FAIL)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ddaha", description="Degenerate (double) affine Hecke algebra toolkit.")
    parser.add_argument("--output", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, mu_required=True, kappa_required=True, kappa_default=None):
        p.add_argument("--kappa", type=int, required=kappa_required, default=kappa_default)
        p.add_argument("--lambda", dest="lam", type=_csv, required=True)
        p.add_argument("--mu", type=_csv, required=mu_required)
        p.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)

    common(sub.add_parser("reduce", help="reduce into the fundamental domain"), mu_required=False)
    common(sub.add_parser("classify", help="classification data of a simple module"))
    p = sub.add_parser("module", help="induced module, weights and simple quotient")
    common(p, kappa_required=False, kappa_default=1)
    p.add_argument("--simple", action="store_true")
    p = sub.add_parser("weights", help="truncated weight list of the double affine module")
    common(p)
    p.add_argument("--length-bound", type=int, default=0)
    p = sub.add_parser("verify", help="run the cross-check suites")
    p.add_argument("--suite", required=True)
    p.add_argument("--config")
    p.add_argument("--output", choices=("json", "text"), default=argparse.SUPPRESS)
    return parser


def _text(data, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, int) for x in v):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
    elif isinstance(data, list):
        for v in data:
            lines.append(f"{pad}- {json.dumps(v, ensure_ascii=False, sort_keys=True)}")
    else:
        lines.append(f"{pad}{data}")
    return "\n".join(lines)


def _emit(data, fmt: str, stream) -> None:
    data = _jsonable(data)
    if fmt == "text":
        stream.write(_text(data) + "\n")
    else:
        stream.write(json.dumps(data, ensure_ascii=False) + "\n")


COMMANDS = {
    "reduce": cmd_reduce, "classify": cmd_classify, "module": cmd_module,
    "weights": cmd_weights, "verify": cmd_verify,
}


_VECTOR = re.compile(r"^-?\d+(,-?\d+)*$")


def _glue_vectors(argv: list[str]) -> list[str]:
    """``--lambda -3,4`` would read as an option; rewrite it as ``--lambda=-3,4``."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--lambda", "--mu") and i + 1 < len(argv) and _VECTOR.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = _glue_vectors(list(sys.argv[1:] if argv is None else argv))
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        result = COMMANDS[args.command](args)
    except _UsageError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (PreconditionError, ValueError, IndexError) as exc:
        code = EXIT_RESOURCE if isinstance(exc, DimensionLimitError) else EXIT_PRECONDITION
        stderr.write(f"error: {exc}\n")
        return code
    except ResourceLimitError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    code = EXIT_OK
    if isinstance(result, tuple):
        result, code = result
    _emit(result, args.output, stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
