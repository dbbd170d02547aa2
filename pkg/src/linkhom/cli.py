"""Command-line front end.

Subcommands: bracket, jones, kh, homfly, graph poly, graph kh, stable,
verify.  Output is deterministic for fixed inputs and flags; exit code 0
on success, 1 on a computation defect or failed verification, 2 on usage
errors.  The LINKHOM_THREADS environment variable sets the worker count
for homology blocks (results are identical for any value).
"""

from __future__ import annotations

import argparse
import os
import sys

from .graphhom import (
    Multigraph,
    Pn_homology,
    Qn_homology,
    dichromatic,
    dichromatic_DG,
    enhanced_homology,
    parse_graph,
    specialize_Pn,
    specialize_Qn,
    tutte,
)
from .homcore import HomologyTable, poincare_polynomial
from .homflypt import homfly_F, homfly_G, homfly_skein_form, specialize_Gn
from .khovanov import (
    jones_unnormalized,
    kauffman_bracket,
    khovanov_homology,
    stable_poincare,
    width_report,
)
from .linkdiag import Diagram, braid_closure, parse_braid, parse_pd
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _load_diagram(spec: str) -> Diagram:
    """Inline braid text, or a path to a file holding braid or PD lines."""
    text = spec
    if os.path.exists(spec):
        with open(spec) as f:
            text = f.read()
    stripped = text.strip()
    if not stripped:
        raise UsageError("empty diagram input")
    first = stripped.splitlines()[0].strip()
    if first[:1].upper() == "X":
        return parse_pd(stripped)
    if ":" in stripped:
        return braid_closure(parse_braid(stripped))
    raise UsageError(f"cannot interpret {spec!r} as a braid or PD code")


def _load_graph(spec: str) -> Multigraph:
    text = spec
    if os.path.exists(spec):
        with open(spec) as f:
            text = f.read()
    return parse_graph(text)


def _parse_window(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise UsageError(f"window must look like a..b, got {text!r}")
    try:
        return int(lo), int(hi)
    except ValueError:
        raise UsageError(f"bad window bounds in {text!r}") from None


def _emit_table(table: HomologyTable, fmt: str, out) -> None:
    if fmt == "json":
        print(table.to_json(), file=out)
    elif fmt == "csv":
        print(table.to_csv(), end="", file=out)
    else:
        print(table.pretty(), end="", file=out)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linkhom", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p_br = sub.add_parser("bracket", help="Kauffman bracket of a diagram")
    p_br.add_argument("input", help="braid text like '2: 1 1 1', or a file of braid/PD lines")

    p_jones = sub.add_parser("jones", help="unnormalized Jones polynomial")
    p_jones.add_argument("input")

    p_kh = sub.add_parser("kh", help="Khovanov homology of a link diagram")
    p_kh.add_argument("input")
    p_kh.add_argument("--table", action="store_true", help="print the homology table (default)")
    p_kh.add_argument("--poincare", action="store_true", help="print the two-variable Poincare polynomial")
    p_kh.add_argument("--width", action="store_true", help="print the diagonal/width report")
    p_kh.add_argument("--jwindow", default=None, help="restrict to q-degrees a..b")
    p_kh.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    p_hf = sub.add_parser("homfly", help="HOMFLYPT values of a braid closure")
    p_hf.add_argument("braid")
    p_hf.add_argument("--var", choices=("qt", "at"), default="qt")
    p_hf.add_argument("--specialize", type=int, default=None, metavar="N")
    p_hf.add_argument("--format", choices=("json", "pretty"), default="pretty")

    p_graph = sub.add_parser("graph", help="graph polynomials and homology")
    gsub = p_graph.add_subparsers(dest="graph_command", required=True)
    p_gp = gsub.add_parser("poly", help="graph polynomials")
    p_gp.add_argument("input", help="graph file ('v N' then 'e u v' lines) or inline text")
    p_gp.add_argument("--dichromatic", action="store_true")
    p_gp.add_argument("--tutte", action="store_true")
    p_gp.add_argument("--pn", type=int, default=None, metavar="N")
    p_gp.add_argument("--qn", type=int, default=None, metavar="N")
    p_gp.add_argument("--dg", action="store_true")
    p_gp.add_argument("--jwindow", default=None)
    p_gk = gsub.add_parser("kh", help="graph homology tables")
    p_gk.add_argument("input")
    p_gk.add_argument("--theory", choices=("pn", "qn", "enhanced"), required=True)
    p_gk.add_argument("--n", type=int, default=1)
    p_gk.add_argument("--variant", choices=("zero", "xn"), default="zero")
    p_gk.add_argument("--jwindow", default=None)
    p_gk.add_argument("--format", choices=("json", "csv", "pretty"), default="pretty")

    p_st = sub.add_parser("stable", help="stable normalized torus series")
    p_st.add_argument("--m", type=int, required=True)
    p_st.add_argument("--n", required=True, help="twist values, e.g. 3..6 or 3,4,5")

    p_vf = sub.add_parser("verify", help="run a named verification suite")
    p_vf.add_argument("suite", help=f"one of: {', '.join(sorted(SUITES))}, all")
    p_vf.add_argument("--slow", action="store_true", help="include the slow tier")
    p_vf.add_argument("--p", type=int, default=None)
    p_vf.add_argument("--q", type=int, default=None)
    return ap


def _cmd_kh(args, out) -> int:
    d = _load_diagram(args.input)
    window = _parse_window(args.jwindow) if args.jwindow else None
    table = khovanov_homology(d, jwindow=window)
    if args.poincare:
        print(poincare_polynomial(table).render(), file=out)
    elif args.width:
        w = width_report(table)
        kind = "thin" if w.thin else "thick"
        print(
            f"diagonals {list(w.diagonals)} width {w.width} ({kind})",
            file=out,
        )
    else:
        _emit_table(table, args.format, out)
    return 0


def _cmd_homfly(args, out) -> int:
    b = parse_braid(args.braid)
    f = homfly_F(b)
    g = homfly_G(b)
    rows: list[tuple[str, str]] = []
    if args.var == "qt":
        rows.append(("F", f.value.render()))
        rows.append(("G", g.render()))
    else:
        rows.append(("F", f.value.render()))
        rows.append(("G(a,q)", homfly_skein_form(g).render()))
    if args.specialize is not None:
        rows.append((f"G_{args.specialize}", specialize_Gn(g, args.specialize).render()))
    if args.format == "json":
        import json

        print(json.dumps({k: v for k, v in rows}, sort_keys=True), file=out)
    else:
        for k, v in rows:
            print(f"{k} = {v}", file=out)
    return 0


def _cmd_graph_poly(args, out) -> int:
    g = _load_graph(args.input)
    chosen = [bool(args.dichromatic), bool(args.tutte), args.pn is not None, args.qn is not None, bool(args.dg)]
    if sum(chosen) != 1:
        raise UsageError("choose exactly one of --dichromatic/--tutte/--pn/--qn/--dg")
    if args.dichromatic:
        print(dichromatic(g).render(), file=out)
    elif args.tutte:
        print(tutte(g).render(), file=out)
    elif args.pn is not None:
        print(specialize_Pn(g, args.pn).render(), file=out)
    elif args.qn is not None:
        if not args.jwindow:
            raise UsageError("--qn requires --jwindow a..b")
        print(specialize_Qn(g, args.qn, _parse_window(args.jwindow)).render(), file=out)
    else:
        print(dichromatic_DG(g).render(), file=out)
    return 0


def _cmd_graph_kh(args, out) -> int:
    g = _load_graph(args.input)
    if args.theory == "pn":
        table = Pn_homology(g, args.n, args.variant)
    else:
        if not args.jwindow:
            raise UsageError(f"theory {args.theory!r} requires --jwindow a..b")
        window = _parse_window(args.jwindow)
        if args.theory == "qn":
            table = Qn_homology(g, args.n, window)
        else:
            table = enhanced_homology(g, window)
    _emit_table(table, args.format, out)
    return 0


def _parse_n_values(text: str) -> list[int]:
    if ".." in text:
        lo, hi = _parse_window(text)
        return list(range(lo, hi + 1))
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad twist list {text!r}") from None


def _cmd_stable(args, out) -> int:
    polys, agreements = stable_poincare(args.m, _parse_n_values(args.n))
    for n, p in polys:
        print(f"n={n}: {p.render()}", file=out)
    code = 0
    for (n1, n2, bound, ok) in agreements:
        mark = "PASS" if ok else "FAIL"
        print(f"{mark} agreement n={n1} vs n={n2} for t-powers below {bound}", file=out)
        if not ok:
            code = 1
    return code


def _cmd_verify(args, out) -> int:
    try:
        reports = run_suite(args.suite, slow=args.slow, p=args.p, q=args.q)
    except KeyError:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(sorted(SUITES))}, all")
    code = 0
    for rep in reports:
        for line in rep.lines():
            print(line, file=out)
        if not rep.ok:
            code = 1
    print("OVERALL " + ("PASS" if code == 0 else "FAIL"), file=out)
    return code


def run(argv, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        if args.command == "bracket":
            print(kauffman_bracket(_load_diagram(args.input)).render(), file=out)
            return 0
        if args.command == "jones":
            print(jones_unnormalized(_load_diagram(args.input)).render(), file=out)
            return 0
        if args.command == "kh":
            return _cmd_kh(args, out)
        if args.command == "homfly":
            return _cmd_homfly(args, out)
        if args.command == "graph":
            if args.graph_command == "poly":
                return _cmd_graph_poly(args, out)
            return _cmd_graph_kh(args, out)
        if args.command == "stable":
            return _cmd_stable(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as e:
        print(f"usage error: {e}", file=err)
        return 2
    except (ValueError, ArithmeticError) as e:
        print(f"computation error: {e}", file=err)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
