"""Command-line front end.

Exit status: 0 success, 2 invariant violation, 3 budget exceeded, 4 bad input.  Errors
are written to stderr as JSON objects.
"""

import argparse
import json
import sys

from . import export
from .combinatorics import (a_function, enumerate_multipartitions, involution_star,
                            involution_theta, involution_vee, precedes, serialize)
from .config import SCHEMA_VERSION, RunConfig, default_truncation
from .errors import InvalidInput, InvariantViolation, KostkaError


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def _add_common(p, group=True):
    if group:
        p.add_argument("m", type=int)
        p.add_argument("ell", type=int, metavar="l")
        p.add_argument("--n", type=int, default=None, help="block width (default m)")
        p.add_argument("--allow-degenerate", action="store_true",
                       help="accept l = 1 (classical Kostka mode)")
        p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", default=None, help="write to this file instead of stdout")


def build_parser():
    parser = _Parser(prog="kostka-shoji",
                     description="Kostka polynomials for G(l,1,m) by two independent routes.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("classify", help="list l-partitions with a-values, involutions, order")
    _add_common(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("chartable", help="character table of G(l,1,m)")
    _add_common(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("omega", help="Molien multiplicity matrix")
    _add_common(p)
    p.add_argument("--truncate", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("kostka", help="K+/K- matrices")
    _add_common(p)
    p.add_argument("--method", choices=("ls", "demazure", "both"), default="ls")
    p.add_argument("--sign", choices=("plus", "minus", "both"), default="minus")
    p.add_argument("--format", choices=("json", "csv", "latex"), default="json")

    p = sub.add_parser("macdonald", help="E_mu(x; q, 0) for a composition")
    p.add_argument("composition", help="comma-separated exponents, e.g. 0,1,0,1")
    _add_common(p, group=False)
    p.add_argument("--format", choices=("json",), default="json")

    p = sub.add_parser("crosscheck", help="compare the Demazure and Lusztig-Shoji routes")
    _add_common(p)
    p.add_argument("--format", choices=("json",), default="json")
    return parser


def _config(args, **extra):
    return RunConfig(m=args.m, ell=args.ell, n=args.n, allow_degenerate=args.allow_degenerate,
                     jobs=args.jobs, output_format=args.format, output_path=args.output,
                     **extra)


def cmd_classify(args):
    cfg = _config(args)
    index = enumerate_multipartitions(cfg.m, cfg.ell)
    covers = {}
    for lam in index:
        below = [mu for mu in index if precedes(mu, lam, cfg.n)]
        covers[lam] = [mu for mu in below
                       if not any(precedes(mu, nu, cfg.n) for nu in below if nu != mu)]
    if cfg.output_format == "csv":
        rows = [[serialize(lam), a_function(lam), serialize(involution_vee(lam)),
                 serialize(involution_star(lam)), serialize(involution_theta(lam)),
                 ";".join(serialize(mu) for mu in covers[lam])] for lam in index]
        return export.table_csv(["label", "a", "vee", "star", "theta", "covers"], rows), 0
    return export.dumps_json({
        "command": "classify", "m": cfg.m, "ell": cfg.ell, "n": cfg.n,
        "labels": [{"label": serialize(lam), "a": a_function(lam),
                    "vee": serialize(involution_vee(lam)),
                    "star": serialize(involution_star(lam)),
                    "theta": serialize(involution_theta(lam)),
                    "covers": [serialize(mu) for mu in covers[lam]]} for lam in index],
    }), 0


def cmd_chartable(args):
    from .wreath import character_table
    cfg = _config(args)
    table = character_table(cfg.m, cfg.ell, cfg.budgets)
    if cfg.output_format == "csv":
        rows = [[serialize(lam), serialize(c), " ".join(table.values[i][j].to_json())]
                for i, lam in enumerate(table.irreps) for j, c in enumerate(table.classes)]
        return export.table_csv(["irrep", "class", "value"], rows), 0
    payload = {"command": "chartable"}
    payload.update(table.to_json())
    return export.dumps_json(payload), 0


def cmd_omega(args):
    from .molien import minimal_degree_check, omega_matrix, structural_report
    cfg = _config(args, truncation=args.truncate)
    omega = omega_matrix(cfg.m, cfg.ell, cfg.budgets)
    degree = cfg.truncation if cfg.truncation is not None else default_truncation(
        max(omega.a_values))
    failures = structural_report(omega, degree) + minimal_degree_check(omega)
    if failures:
        raise InvariantViolation("Omega fails its structural checks", failures=failures[:10])
    if cfg.output_format == "csv":
        series = omega.series(degree)
        rows = [[serialize(lam), serialize(mu), str(series[(lam, mu)]).replace(" ", "")]
                for lam in omega.index for mu in omega.index]
        return export.table_csv(["row", "col", f"series_to_q^{degree}"], rows), 0
    payload = {"command": "omega"}
    payload.update(omega.to_json(truncate=args.truncate))
    return export.dumps_json(payload), 0


def _solve_ls(cfg):
    from .lusztig_shoji import solve
    from .molien import omega_matrix
    sol = solve(omega_matrix(cfg.m, cfg.ell, cfg.budgets), check_residual=True)
    if not sol.residual_ok:
        raise InvariantViolation("solution does not reproduce Omega", **sol.meta["residual"])
    return sol


def cmd_kostka(args):
    cfg = _config(args, method=args.method, sign=args.sign)
    if cfg.method == "demazure" and cfg.sign != "minus":
        raise InvalidInput("the Demazure route produces K- only; use --sign minus")
    if cfg.ell == 1 and cfg.method != "ls":
        raise InvalidInput("the degenerate l = 1 mode supports --method ls only")
    signs = ("plus", "minus") if cfg.sign == "both" else (cfg.sign,)
    index = enumerate_multipartitions(cfg.m, cfg.ell)
    matrices = []       # (method, sign, entry function)
    if cfg.method in ("ls", "both"):
        sol = _solve_ls(cfg)
        for s in signs:
            matrices.append(("ls", s, sol.kplus if s == "plus" else sol.kminus))
    if cfg.method in ("demazure", "both"):
        from .limit_kostka import FROZEN_RELABELING, kminus_demazure, relabel
        cand = kminus_demazure(cfg.m, cfg.ell, n=cfg.n, jobs=cfg.jobs, budgets=cfg.budgets)

        def dem_entry(row, col, cand=cand):
            return cand.entry(relabel(row, FROZEN_RELABELING), relabel(col, FROZEN_RELABELING))
        matrices.append(("demazure", "minus", dem_entry))
    status = 0
    agreement = None
    if cfg.method == "both":
        ls_minus = sol.kminus
        agreement = all(ls_minus(r, c) == dem_entry(r, c) for r in index for c in index)
        status = 0 if agreement else 2
        if cfg.sign == "plus":
            matrices = [mat for mat in matrices if mat[1] == "plus"]
    if cfg.output_format == "latex":
        text = "\n".join(export.latex_table(index, entry, s) for _, s, entry in matrices)
    elif cfg.output_format == "csv":
        text = export.matrix_csv(index, [(f"{meth}:{s}", entry) for meth, s, entry in matrices])
    else:
        payload = {"command": "kostka", "m": cfg.m, "ell": cfg.ell, "n": cfg.n,
                   "index": [serialize(lam) for lam in index],
                   "a_values": [a_function(lam) for lam in index],
                   "matrices": [{"method": meth, "sign": s,
                                 "entries": export.matrix_json(index, entry)}
                                for meth, s, entry in matrices]}
        if agreement is not None:
            payload["routes_agree"] = agreement
        text = export.dumps_json(payload)
    return text, status


def cmd_macdonald(args):
    from .macdonald import nonsym_macdonald_t0, parse_composition
    mu = parse_composition(args.composition)
    poly = nonsym_macdonald_t0(mu)
    return export.dumps_json({"command": "macdonald", "composition": list(mu),
                              "terms": poly.to_json()}), 0


def cmd_crosscheck(args):
    from .limit_kostka import cross_check
    cfg = _config(args)
    if cfg.ell == 1:
        raise InvalidInput("crosscheck needs l >= 2")
    verdict = cross_check(cfg.m, cfg.ell, jobs=cfg.jobs, budgets=cfg.budgets)
    payload = {"command": "crosscheck"}
    payload.update(verdict.to_json())
    return export.dumps_json(payload), 0 if verdict.equal else 2


COMMANDS = {"classify": cmd_classify, "chartable": cmd_chartable, "omega": cmd_omega,
            "kostka": cmd_kostka, "macdonald": cmd_macdonald, "crosscheck": cmd_crosscheck}


def run(argv):
    """Parse and execute; returns ``(stdout_text, stderr_text, exit_code)``."""
    try:
        args = build_parser().parse_args(argv)
        text, status = COMMANDS[args.command](args)
    except KostkaError as exc:
        payload = dict(exc.to_json(), schema_version=SCHEMA_VERSION)
        return "", json.dumps(payload, default=str) + "\n", exc.exit_code
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        return "", "", status
    return text, "", status


def main(argv=None):
    out, err, status = run(sys.argv[1:] if argv is None else argv)
    if out:
        sys.stdout.write(out)
    if err:
        sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())

