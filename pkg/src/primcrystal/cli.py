"""Command-line front end.

Every JSON document is wrapped as ``{"tool-version", "command", "params", "result"}``.
Exit status: 0 on success, 1 on a computation error (or a failed ``verify``),
2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import __version__
from .capparelli import (CapparelliSpec, alternative_spec, canonical_spec, enumerate_capparelli,
                         gf_capparelli)
from .characters import (char_from_gp, char_kp, char_positive, gp_ct, gp_lattice, gp_theta,
                         principal_spec, verify_all)
from .crystal import pair_graph
from .energy import energy_table
from .errors import PrimcrystalError
from .partitions import enumerate_grounded, gf_grounded
from .series import q_poch, to_alpha

GF_FORMULAS = ("grounded", "minimal", "ct", "lattice", "theta", "shifted", "capparelli")
CHAR_FORMULAS = ("kp", "positive", "gp")


class UsageError(Exception):
    pass


def _envelope(command: str, params: dict, result) -> str:
    doc = {"tool-version": __version__, "command": command, "params": params, "result": result}
    return json.dumps(doc, indent=2) + "\n"


def _series_text(s) -> str:
    return "\n".join(f"{c}\t{m}" for m, c in s.items()) + "\n"


def _check_rank(args, lo: int = 1) -> None:
    if args.n < lo:
        raise UsageError(f"--n must be at least {lo}")
    level = getattr(args, "level", None)
    if level is not None and not 0 <= level < args.n:
        raise UsageError(f"--level must lie in 0..{args.n - 1}")
    for name in ("trunc", "max_weight"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be nonnegative")


def _load_spec(text: str | None, n: int) -> CapparelliSpec:
    if text in (None, "canonical"):
        return canonical_spec(n)
    if text == "alternative":
        return alternative_spec(n)
    if not Path(text).is_file():
        raise UsageError(f"spec file {text!r} not found")
    return CapparelliSpec.load(text, n)


# --- commands -----------------------------------------------------------------

def cmd_energy(args) -> tuple[str, int]:
    _check_rank(args)
    cs, rows = energy_table(args.n).matrix()
    names = [str(c) for c in cs]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["earlier\\later"] + names)
        for name, row in zip(names, rows):
            w.writerow([name] + row)
        return buf.getvalue(), 0
    return _envelope("energy", {"n": args.n}, {"colours": names, "matrix": rows}), 0


def cmd_graph(args) -> tuple[str, int]:
    _check_rank(args, 2)
    g = pair_graph(args.n)
    if args.format == "dot":
        return g.to_dot(), 0
    return _envelope("graph", {"n": args.n}, g.to_dict()), 0


def cmd_enumerate(args) -> tuple[str, int]:
    _check_rank(args)
    pis = enumerate_grounded(args.n, args.level, args.max_weight, args.minimal)
    params = {"n": args.n, "level": args.level, "max-weight": args.max_weight,
              "minimal": args.minimal}
    return _envelope("enumerate", params,
                     {"count": len(pis), "partitions": [p.to_list() for p in pis]}), 0


def cmd_capparelli(args) -> tuple[str, int]:
    _check_rank(args)
    spec = _load_spec(args.spec, args.n)
    parts = enumerate_capparelli(args.n, spec, args.max_weight)
    params = {"n": args.n, "max-weight": args.max_weight, "spec": spec.to_dict()}
    result = {"count": len(parts), "partitions": [[p.to_dict() for p in ps] for ps in parts]}
    return _envelope("capparelli", params, result), 0


def _gf(args):
    n, N = args.n, args.trunc
    f = args.formula
    if f == "grounded":
        return gf_grounded(n, args.level, N, minimal=False)
    if f == "minimal":
        return gf_grounded(n, args.level, N, minimal=True)
    if f == "ct":
        return gp_ct(n, N)
    if f == "lattice":
        return gp_lattice(n, N)
    if f == "theta":
        return gp_theta(n, N)
    if f == "shifted":
        return gp_ct(n, N, args.level)
    return gf_capparelli(n, _load_spec(args.spec, n), N)


def cmd_gf(args) -> tuple[str, int]:
    _check_rank(args)
    s = _gf(args)
    if args.format == "text":
        return _series_text(s), 0
    params = {"n": args.n, "level": args.level, "trunc": args.trunc, "formula": args.formula}
    return _envelope("gf", params, s.to_dict()), 0


def cmd_character(args) -> tuple[str, int]:
    _check_rank(args)
    fn = {"kp": char_kp, "positive": char_positive, "gp": char_from_gp}[args.formula]
    s = fn(args.n, args.level, args.trunc)
    if args.format == "text":
        return _series_text(s), 0
    result = s.to_dict()
    if args.alpha:
        ax = to_alpha(s)
        result["alpha"] = [{"c": list(am.c), "coef": str(c)} for am, c in sorted(ax.terms.items())]
        result["positive"] = ax.is_positive()
    params = {"n": args.n, "level": args.level, "trunc": args.trunc, "formula": args.formula}
    return _envelope("character", params, result), 0


def cmd_verify(args) -> tuple[str, int]:
    _check_rank(args)
    spec = None if args.spec is None else _load_spec(args.spec, args.n)
    rep = verify_all(args.n, args.level, args.trunc, spec)
    if args.principal:
        for c in principal_spec(args.n, args.trunc).checks:
            rep.add(c)
    code = 0 if rep.passed else 1
    if args.report == "text":
        return rep.to_text(args.timings), code
    params = {"n": args.n, "level": args.level, "trunc": args.trunc,
              "spec": None if spec is None else spec.to_dict(), "principal": args.principal}
    return _envelope("verify", params, rep.to_dict(args.timings)), code


# --- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="primcrystal", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--n", type=int, required=True, help="rank parameter (number of colours per letter)")
        sp.add_argument("--output", "-o", help="write here instead of standard output")
        sp.set_defaults(func=fn)
        return sp

    sp = add("energy", cmd_energy, "energy matrix, rows = earlier colour, columns = later colour")
    sp.add_argument("--format", choices=("json", "csv"), default="json")

    sp = add("graph", cmd_graph, "f-edges of the pair crystal")
    sp.add_argument("--format", choices=("dot", "json"), default="dot")

    sp = add("enumerate", cmd_enumerate, "grounded partitions up to a weight")
    sp.add_argument("--level", type=int, default=0)
    sp.add_argument("--max-weight", type=int, required=True)
    sp.add_argument("--minimal", action="store_true", help="use equality instead of >=")
    sp.add_argument("--format", choices=("json",), default="json")

    sp = add("capparelli", cmd_capparelli, "generalised Capparelli partitions up to a weight")
    sp.add_argument("--spec", help="JSON spec file, or 'canonical' (default) / 'alternative'")
    sp.add_argument("--max-weight", type=int, required=True)
    sp.add_argument("--format", choices=("json",), default="json")

    sp = add("gf", cmd_gf, "a generating function as a truncated series")
    sp.add_argument("--level", type=int, default=0)
    sp.add_argument("--trunc", type=int, required=True)
    sp.add_argument("--formula", choices=GF_FORMULAS, default="grounded")
    sp.add_argument("--spec", help="Capparelli spec for --formula capparelli")
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = add("character", cmd_character, "level-1 character e^{-Lambda_l} ch L(Lambda_l)")
    sp.add_argument("--level", type=int, default=0)
    sp.add_argument("--trunc", type=int, required=True)
    sp.add_argument("--formula", choices=CHAR_FORMULAS, default="kp")
    sp.add_argument("--alpha", action="store_true", help="also give the simple-root expansion")
    sp.add_argument("--format", choices=("json", "text"), default="json")

    sp = add("verify", cmd_verify, "check every identity; exit 0 iff all hold")
    sp.add_argument("--level", type=int, default=0)
    sp.add_argument("--trunc", type=int, required=True)
    sp.add_argument("--spec", help="also check the Capparelli identity with this spec")
    sp.add_argument("--principal", action="store_true", help="include principal specialisation")
    sp.add_argument("--report", choices=("json", "text"), default="text")
    sp.add_argument("--timings", action="store_true", help="include runtimes (output no longer reproducible)")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, code = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except PrimcrystalError as exc:
        print(f"primcrystal: error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
