"""Command-line workbench: every subcommand reads a presentation file,
prints a human report (or --json), and exits 0 for a positive/computed
verdict, 1 for a negative verdict, 2 for errors.

All degree and homological bounds are explicit flags with conservative
defaults (degree 8, homological 4) and are echoed in the output, because
every certificate is bounded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import filtration as filt
from . import generic as gen
from . import groebner, homology, ideals, quotient
from .errors import NcfiltError
from .freealg import render_word
from .presfile import (
    load_presentation,
    parse_ideal_file,
    render_poly_text,
    render_presentation,
)

DEFAULT_DEGREE = 8
DEFAULT_HOM = 4


def _order_text(pres) -> str:
    return "<".join(pres.names[i] for i in pres.ord.sequence)


def _emit(args, payload: dict, lines) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_gb(args) -> int:
    pres = load_presentation(args.presentation)
    gb = groebner.complete(list(pres.relations), pres.ord, pres.ngens,
                           args.bound, pres.field)
    elements = [render_poly_text(e, pres.names, pres.ord)
                for e in gb.elements]
    header = (f"# order: {_order_text(pres)}, bound: {args.bound}, "
              f"complete: {'true' if gb.complete else 'false'}")
    payload = {"command": "gb", "order": _order_text(pres),
               "bound": args.bound, "complete": gb.complete,
               "elements": elements}
    _emit(args, payload, [header] + elements)
    return 0


def cmd_pbw(args) -> int:
    pres = load_presentation(args.presentation)
    res = groebner.pbw_certificate(pres)
    witness = render_word(res.witness, pres.names) if res.witness else None
    payload = {"command": "pbw", "order": _order_text(pres),
               "pbw": res.is_pbw, "witness": witness}
    lines = ["PBW" if res.is_pbw
             else f"NotPBW: unresolved overlap at {witness}"]
    _emit(args, payload, lines)
    return 0 if res.is_pbw else 1


def cmd_hilbert(args) -> int:
    pres = load_presentation(args.presentation)
    Q = quotient.QuotientAlgebra(pres, max(args.max_degree, args.bound))
    series = Q.hilbert_function(args.max_degree)
    ratfunc = None
    if args.ratfunc:
        ratfunc = str(quotient.monomial_hilbert_ratfunc(Q))
    payload = {"command": "hilbert", "max_degree": args.max_degree,
               "coefficients": series.to_json(), "ratfunc": ratfunc}
    lines = ["[" + ", ".join(series.to_json()) + "]"]
    if ratfunc:
        lines.append(f"series = {ratfunc}")
    _emit(args, payload, lines)
    return 0


def cmd_dual(args) -> int:
    pres = load_presentation(args.presentation)
    dual = quotient.quadratic_dual(pres)
    text = render_presentation(dual)
    payload = {"command": "dual", "presentation": text,
               "relations": [render_poly_text(r, dual.names)
                             for r in dual.relations]}
    _emit(args, payload, [text.rstrip()])
    return 0


def cmd_froberg(args) -> int:
    pres = load_presentation(args.presentation)
    residual = quotient.froberg_check(pres, args.max_degree)
    zero = all(c == 0 for c in residual.coeffs)
    payload = {"command": "froberg", "max_degree": args.max_degree,
               "residual": residual.to_json(), "zero": zero}
    lines = ["residual [" + ", ".join(residual.to_json()) + "]",
             "duality relation holds to degree "
             f"{args.max_degree}" if zero else "duality relation FAILS"]
    _emit(args, payload, lines)
    return 0 if zero else 1


def cmd_koszul(args) -> int:
    pres = load_presentation(args.presentation)
    Q = quotient.QuotientAlgebra(pres, args.bound)
    if args.module:
        with open(args.module, "r", encoding="utf-8") as handle:
            gens = parse_ideal_file(handle.read(), pres)
        module = ideals.ideal_from_generators(Q, gens, 1)
        cert = homology.koszul_certificate(module, args.hom_bound,
                                           args.module)
        module_id = args.module
    else:
        cert = homology.koszul_certificate(Q, args.hom_bound, "k")
        module_id = "k"
    witness = None
    if cert.witness:
        witness = {"i": cert.witness[0], "j": cert.witness[1],
                   "dim": cert.witness[2]}
    payload = {"command": "koszul", "module": module_id,
               "hom_bound": args.hom_bound, "j_max": cert.j_max,
               "koszul_to_bound": cert.koszul_to_bound, "witness": witness}
    lines = [f"KoszulToBound(i_max={args.hom_bound}, j_max={cert.j_max})"
             if cert.koszul_to_bound else
             f"NotKoszul: H_{cert.witness[0]} has dimension "
             f"{cert.witness[2]} in degree {cert.witness[1]}"]
    _emit(args, payload, lines)
    return 0 if cert.koszul_to_bound else 1


def cmd_rate(args) -> int:
    pres = load_presentation(args.presentation)
    j_max = args.max_degree if args.max_degree else 2 * args.hom_bound + 1
    Q = quotient.QuotientAlgebra(pres, max(args.bound, j_max))
    table = homology.tor_table_trivial(Q, args.hom_bound, j_max)
    estimate = homology.rate_estimate(table)
    payload = {"command": "rate", "hom_bound": args.hom_bound,
               "max_degree": j_max, "rate": str(estimate),
               "tor": table.to_json()}
    _emit(args, payload, [f"rate estimate: {estimate} "
                          f"(i <= {args.hom_bound}, j <= {j_max})"])
    return 0


def cmd_anick(args) -> int:
    pres = load_presentation(args.presentation)
    chains = homology.anick_chains_quadratic_monomial(pres, args.hom_bound)
    counts = chains.counts
    payload = {"command": "anick", "hom_bound": args.hom_bound,
               "counts": counts,
               "chains": [[render_word(w, pres.names) for w in level]
                          for level in chains.chains]}
    _emit(args, payload, [f"chain counts by homological degree: {counts}"])
    return 0


def cmd_init_koszul(args) -> int:
    pres = load_presentation(args.presentation)
    if args.search:
        res = filt.initially_koszul_search(pres, args.limit)
        order = ("<".join(pres.names[i] for i in res.order.sequence)
                 if res.found else None)
        payload = {"command": "init-koszul", "search": True,
                   "found": res.found, "order": order}
        lines = [f"Found({order})" if res.found else "NotFound"]
        _emit(args, payload, lines)
        return 0 if res.found else 1
    res = filt.initially_koszul_criterion(pres)
    witness = res.witness
    if res.reason == "not-pbw" and witness is not None:
        witness = render_word(witness, pres.names)
    payload = {"command": "init-koszul", "search": False,
               "order": _order_text(pres),
               "initially_koszul": res.initially_koszul,
               "reason": res.reason or None,
               "witness": witness if witness is None else str(witness)}
    lines = ["Yes" if res.initially_koszul
             else f"No ({res.reason}: {witness})"]
    _emit(args, payload, lines)
    return 0 if res.initially_koszul else 1


def cmd_semi_tensor(args) -> int:
    pres = load_presentation(args.presentation)
    left = load_presentation(args.left)
    right = load_presentation(args.right)
    verdict = quotient.semi_tensor_check(pres, left, right, args.bound)
    payload = {"command": "semi-tensor", "bound": args.bound,
               "semi_tensor": verdict}
    _emit(args, payload, ["semi-tensor product: "
                          + ("yes" if verdict else "no")])
    return 0 if verdict else 1


def cmd_processing(args) -> int:
    pres = load_presentation(args.presentation)
    gb = groebner.complete(list(pres.relations), pres.ord, pres.ngens,
                           args.bound, pres.field)
    res = groebner.restricted_processing_check(gb, args.r, args.bound)
    counterexample = None
    if not res.holds:
        counterexample = {"p": render_word(res.p, pres.names),
                          "q": render_word(res.q, pres.names),
                          "q1": render_word(res.split[0], pres.names),
                          "q2": render_word(res.split[1], pres.names)}
    payload = {"command": "processing", "r": args.r, "bound": args.bound,
               "gb_complete": gb.complete, "holds": res.holds,
               "counterexample": counterexample}
    lines = [f"{args.r}-processing holds to degree {args.bound}"
             if res.holds else
             f"{args.r}-processing fails: p={counterexample['p']}, "
             f"q={counterexample['q']}"]
    if not gb.complete:
        lines.append("note: Groebner basis truncated; verdict is relative "
                     f"to degree {args.bound}")
    _emit(args, payload, lines)
    return 0 if res.holds else 1


def _report_lines(report) -> list:
    lines = [f"filtration {'VALID' if report.valid else 'INVALID'} "
             f"(bound {report.degree_bound}, hom bound {report.hom_bound})"]
    lines.extend(f"  violation: {v}" for v in report.violations)
    for ideal_id, cert in sorted(report.certificates.items()):
        lines.append(f"  {ideal_id}: {cert}")
    lines.append("  flag chain: " + " > ".join(report.flag_chain))
    return lines


def cmd_filtration(args) -> int:
    pres = load_presentation(args.presentation)
    if args.action == "monomial":
        table = filt.monomial_subset_filtration(pres, args.bound)
        report = filt.verify_filtration(table, args.bound, args.hom_bound)
        payload = filt.filtration_to_json(table)
        payload["verification"] = {
            "valid": report.valid, "violations": report.violations,
            "certificates": report.certificates,
            "flag_chain": report.flag_chain,
            "bound": args.bound, "hom_bound": args.hom_bound}
        _emit(args, payload, [json.dumps(filt.filtration_to_json(table),
                                         indent=2, sort_keys=True)]
              if not args.json else [])
        return 0 if report.valid else 1
    with open(args.table, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    table = filt.filtration_from_json(data, pres, args.bound)
    if args.action == "verify":
        report = filt.verify_filtration(table, args.bound, args.hom_bound)
        payload = filt.filtration_to_json(table)
        payload["verification"] = {
            "valid": report.valid, "violations": report.violations,
            "certificates": report.certificates,
            "flag_chain": report.flag_chain,
            "bound": args.bound, "hom_bound": args.hom_bound}
        _emit(args, payload, _report_lines(report))
        return 0 if report.valid else 1
    violations = filt.check_structure(table, args.bound)
    if violations:
        _emit(args, {"command": "filtration-hilbert",
                     "violations": violations},
              [f"structural violation: {v}" for v in violations])
        return 1
    total, series = filt.hilbert_from_filtration(table)
    payload = {"command": "filtration-hilbert", "series": str(total),
               "per_ideal": {k: str(v) for k, v in sorted(series.items())}}
    lines = [f"R(z) = {total}"]
    lines.extend(f"  {k}(z) = {v}" for k, v in sorted(series.items()))
    _emit(args, payload, lines)
    return 0


def cmd_generic(args) -> int:
    if args.regime == "small-r":
        report = gen.small_r_experiment(args.n, args.r, args.prime, args.seed,
                                        args.degree, args.hom_bound)
    else:
        report = gen.large_r_experiment(args.n, args.r, args.prime, args.seed,
                                        args.steps, args.degree,
                                        args.hom_bound)
    payload = report.to_json()
    lines = [f"{report.kind} experiment n={report.n} r={report.r} "
             f"p={report.prime} seed={report.seed}: "
             + ("OK" if report.valid else "GenericityFailure")]
    lines.append(f"  hilbert prefix: {report.hilbert_prefix}")
    lines.extend(f"  {name}: {'ok' if ok else 'FAIL'}"
                 for name, ok in report.checks.items())
    lines.extend(f"  detail: {d}" for d in report.details)
    _emit(args, payload, lines)
    return 0 if report.valid else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ncfilt",
        description="Koszul-type structure and exact Hilbert series for "
                    "finitely presented graded algebras")
    parser.add_argument("--json", action="store_true",
                        help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    def presentation_cmd(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("presentation", help="presentation file")
        p.set_defaults(handler=handler)
        return p

    p = presentation_cmd("gb", cmd_gb, help="truncated Groebner basis")
    p.add_argument("--bound", type=int, default=DEFAULT_DEGREE)

    presentation_cmd("pbw", cmd_pbw, help="PBW certificate")

    p = presentation_cmd("hilbert", cmd_hilbert, help="Hilbert function")
    p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--bound", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--ratfunc", action="store_true",
                   help="also the rational series (monomial algebras)")

    presentation_cmd("dual", cmd_dual, help="quadratic dual presentation")

    p = presentation_cmd("froberg", cmd_froberg,
                         help="power-series duality residual")
    p.add_argument("--max-degree", type=int, default=DEFAULT_DEGREE)

    p = presentation_cmd("koszul", cmd_koszul,
                         help="bounded Koszulness certificate")
    p.add_argument("--hom-bound", type=int, default=DEFAULT_HOM)
    p.add_argument("--bound", type=int, default=DEFAULT_DEGREE)
    p.add_argument("--module", help="file with right-ideal generators")

    p = presentation_cmd("rate", cmd_rate, help="rate estimate")
    p.add_argument("--hom-bound", type=int, default=DEFAULT_HOM)
    p.add_argument("--max-degree", type=int, default=0)
    p.add_argument("--bound", type=int, default=DEFAULT_DEGREE)

    p = presentation_cmd("anick", cmd_anick,
                         help="chain counts (quadratic monomial)")
    p.add_argument("--hom-bound", type=int, default=DEFAULT_HOM)

    p = presentation_cmd("init-koszul", cmd_init_koszul,
                         help="initially-Koszul criterion")
    p.add_argument("--search", action="store_true",
                   help="search all generator orders")
    p.add_argument("--limit", type=int, default=8,
                   help="generator-count limit for the search")

    p = presentation_cmd("semi-tensor", cmd_semi_tensor,
                         help="semi-tensor leading-word test")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--bound", type=int, default=3)

    p = presentation_cmd("processing", cmd_processing,
                         help="restricted-processing check")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_DEGREE)

    p = sub.add_parser("filtration", help="filtration tables")
    p.add_argument("action", choices=["verify", "monomial", "hilbert"])
    p.add_argument("presentation", help="presentation file")
    p.add_argument("table", nargs="?", help="filtration JSON file")
    p.add_argument("--bound", type=int, default=6)
    p.add_argument("--hom-bound", type=int, default=DEFAULT_HOM)
    p.set_defaults(handler=cmd_filtration)

    p = sub.add_parser("generic", help="generic-relations experiments")
    p.add_argument("regime", choices=["small-r", "large-r"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--prime", type=int, default=32003)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--hom-bound", type=int, default=DEFAULT_HOM)
    p.add_argument("--steps", type=int, default=5)
    p.set_defaults(handler=cmd_generic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "filtration" and args.action in ("verify", "hilbert") \
            and not args.table:
        parser.error(f"filtration {args.action} needs a table file")
    try:
        return args.handler(args)
    except NcfiltError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
