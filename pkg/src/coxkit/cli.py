"""Command-line front end.

Subcommands: element, product, coproduct, series, expand, table, hecke,
verify.  Output is deterministic; ``--format json`` emits the documented
schemas.  Exit status: 0 success, 1 verification failure, 2 argument or
parse error, 3 enumeration cap exceeded.

Window-notation arguments are ASCII comma-separated signed integers
("2,-4,-3,1"); subsets are sorted generator indices ("0,2");
(pseudo-)compositions are parenthesized ("(0,2,1)").
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import descents as dsc
from . import hecke as hk
from . import linalg
from . import qsym
from . import series as sr
from . import verify as vf
from . import words as wd
from .freemodule import FormalVector, sort_key
from .systems import (
    CapExceededError,
    CoxeterSystem,
    Element,
    all_subsets,
    composition_from_descents,
    descents_of_composition,
    elements,
    format_window,
    is_valid_composition,
    parse_window,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_PARSE = 2
EXIT_CAP = 3

#: Window-size caps per family; the verification suites stay interactive
#: below them.  Override with --max-window or COXKIT_MAX_ORDER.
DEFAULT_WINDOW_CAPS = {"A": 7, "B": 5, "D": 5}


class CliError(Exception):
    def __init__(self, message: str, status: int = EXIT_PARSE):
        super().__init__(message)
        self.status = status


def _system(args) -> CoxeterSystem:
    family = args.type
    rank = args.rank
    try:
        system = CoxeterSystem.of_rank(family, rank)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    cap = getattr(args, "max_window", None) or DEFAULT_WINDOW_CAPS[family]
    if system.n > cap:
        raise CliError(
            f"window size {system.n} exceeds the {family} cap {cap}"
            " (raise with --max-window)",
            EXIT_CAP,
        )
    return system


def _parse_subset(text: str) -> frozenset[int]:
    text = text.strip()
    if not text:
        return frozenset()
    return frozenset(int(p) for p in text.split(","))


def _parse_composition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


def _coeff_str(c) -> str:
    return str(c)


def _element_json(w: Element) -> list[int]:
    return list(w.window)


def _vector_json(system: CoxeterSystem, vec: FormalVector, basis: str) -> dict:
    terms = []
    for key, coeff in vec.items():
        if basis == "element":
            jkey = _element_json(key)
        elif basis == "pair":
            jkey = [_element_json(key[0]), _element_json(key[1])]
        else:
            jkey = sorted(key)
        terms.append({"key": jkey, "coeff": coeff if isinstance(coeff, int) else _coeff_str(coeff)})
    return {
        "system": {"family": system.family, "rank": system.rank},
        "basis": basis,
        "terms": terms,
    }


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# -- subcommands -------------------------------------------------------------------


def cmd_element(args) -> int:
    system = _system(args)
    w = parse_window(system, args.window)
    if args.op == "length":
        _emit(args, {"op": "length", "value": w.length()}, [str(w.length())])
    elif args.op == "descents":
        d = sorted(w.descent_set())
        _emit(args, {"op": "descents", "value": d}, [",".join(map(str, d))])
    elif args.op == "inverse":
        v = w.inverse()
        _emit(args, {"op": "inverse", "value": _element_json(v)}, [format_window(v.window)])
    elif args.op == "reduced-word":
        rw = list(w.reduced_word())
        _emit(args, {"op": "reduced-word", "value": rw}, [",".join(map(str, rw))])
    elif args.op == "compose":
        if args.right is None:
            raise CliError("compose needs --right")
        v = w * parse_window(system, args.right)
        _emit(args, {"op": "compose", "value": _element_json(v)}, [format_window(v.window)])
    else:
        raise CliError(f"unknown element op {args.op!r}")
    return EXIT_OK


def _parse_window_tuple(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


def _operand_families(family: str) -> tuple[str, str]:
    if family.endswith("BB"):
        return "B", "B"
    return family[-1], "A"


def cmd_product(args) -> int:
    if args.family not in wd.PRODUCTS:
        raise CliError(f"unknown product family {args.family!r}")
    left_fam, right_fam = _operand_families(args.family)
    try:
        lwin, rwin = _parse_window_tuple(args.left), _parse_window_tuple(args.right)
        u = CoxeterSystem(left_fam, len(lwin)).element(lwin)
        v = CoxeterSystem(right_fam, len(rwin)).element(rwin)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    vec = wd.PRODUCTS[args.family](u, v)
    out_system = next(iter(vec.terms)).system if vec.terms else u.system
    lines = [f"{coeff}\t{format_window(k.window)}" for k, coeff in vec.items()]
    lines.append(f"# {len(vec)} terms")
    _emit(args, _vector_json(out_system, vec, "element"), lines)
    return EXIT_OK


def cmd_coproduct(args) -> int:
    if args.family not in wd.COPRODUCTS:
        raise CliError(f"unknown coproduct family {args.family!r}")
    fam_letter, _ = _operand_families(args.family)
    try:
        win = _parse_window_tuple(args.arg)
        u = CoxeterSystem(fam_letter, len(win)).element(win)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    vec = wd.COPRODUCTS[args.family](u)
    if args.split is not None:
        vec = wd.coproduct_component(vec, args.split)
    lines = [
        f"{coeff}\t{format_window(a.window)} (x) {format_window(b.window)}"
        for (a, b), coeff in vec.items()
    ]
    lines.append(f"# {len(vec)} terms")
    _emit(args, _vector_json(u.system, vec, "pair"), lines)
    return EXIT_OK


SERIES_KINDS = ("sA", "hA", "sB", "hB", "sD", "hD")


def cmd_series(args) -> int:
    if args.kind not in SERIES_KINDS:
        raise CliError(f"unknown series kind {args.kind!r} (choose from {SERIES_KINDS})")
    family = args.kind[-1]
    alpha = _parse_composition(args.key)
    system = CoxeterSystem(family, sum(alpha))
    if not is_valid_composition(system, alpha):
        raise CliError(f"{alpha} is not a valid index for family {family}")
    builder = sr.s_basis if args.kind.startswith("s") else sr.h_basis
    try:
        x = builder(system, alpha, args.window)
    except CapExceededError as exc:
        raise CliError(str(exc), EXIT_CAP) from exc
    payload = {
        "degree": x.degree,
        "window": x.window,
        "terms": [{"word": list(wrd), "coeff": c} for wrd, c in sorted(x.terms.items())],
    }
    lines = [f"{c}\t{','.join(map(str, wrd))}" for wrd, c in sorted(x.terms.items())]
    lines.append(f"# {len(x.terms)} words")
    _emit(args, payload, lines)
    return EXIT_OK


def _parse_poly_token(token: str, K: int) -> qsym.CPoly:
    token = token.strip()
    if ":" in token:
        kind, key = token.split(":", 1)
    else:
        kind, key = token, ""
    kind = kind.strip()
    if kind == "x0":
        return qsym.x0_power(int(key or 1))
    alpha = _parse_composition(key)
    if kind in ("sA", "sB", "sD"):
        family = kind[-1]
        system = CoxeterSystem(family, sum(alpha))
        if not is_valid_composition(system, alpha):
            raise CliError(f"{alpha} is not a valid index for family {family}")
        return sr.projection(family)(sr.s_basis(system, alpha, K))
    table = {
        "M": qsym.monomial_qsym,
        "F": qsym.fundamental_qsym,
        "MB": qsym.monomial_qsym_b,
        "FB": qsym.fundamental_qsym_b,
        "MD": qsym.monomial_qsym_d,
        "FD": qsym.fundamental_qsym_d,
        "h": qsym.sym_h,
        "m": qsym.sym_m,
        "p": qsym.sym_p,
        "hB": qsym.sym_h_b,
        "mB": qsym.sym_m_b,
    }
    if kind not in table:
        raise CliError(f"unknown polynomial token kind {kind!r}")
    return table[kind](alpha, K)


def cmd_expand(args) -> int:
    K = args.window
    target = _parse_poly_token(args.target, K)
    basis_tokens = [t for t in args.basis.split(";") if t.strip()]
    basis = [_parse_poly_token(t, K) for t in basis_tokens]
    try:
        coeffs = linalg.express_in_basis(target, basis)
    except linalg.NotInSpanError:
        _emit(args, {"in_span": False}, ["not in span"])
        return EXIT_CHECK_FAILED
    payload = {"in_span": True,
               "coefficients": [str(c) for c in coeffs],
               "basis": basis_tokens}
    lines = [f"{tok.strip()}: {c}" for tok, c in zip(basis_tokens, coeffs)]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_table(args) -> int:
    system = _system(args)
    subs = list(all_subsets(system))
    comps = [composition_from_descents(system, I) for I in subs]
    if args.table == "c":
        mat = [[dsc.mutual_descent_count(system, I, J) for J in subs] for I in subs]
    elif args.table == "hgram":
        labels, mat = dsc.h_gram_matrix(system)
        comps = [composition_from_descents(system, I) for I in labels]
    elif args.table == "hm":
        from .systems import parabolic_conjugacy_classes

        labels = [dsc.class_label(c) for c in parabolic_conjugacy_classes(system)]
        hs = dsc.h_class_basis(system)
        ms = dsc.m_class_basis(system)
        gram = {(a, b): dsc.weak_descent_count(system, a, b) for a in labels for b in labels}
        basis = [hs[l] for l in labels]
        mat = []
        for lam in labels:
            row = []
            for mu in labels:
                coeffs = linalg.express_in_basis(ms[mu], basis)
                val = sum(c * gram[(lam, nu)] for c, nu in zip(coeffs, labels))
                row.append(int(val) if Fraction(val).denominator == 1 else str(val))
            mat.append(row)
        comps = [composition_from_descents(system, I) for I in labels]
    else:
        raise CliError(f"unknown table {args.table!r}")
    payload = {
        "labels": [list(c) for c in comps],
        "rows": mat,
        "table": args.table,
    }
    width = max(len(str(x)) for row in mat for x in row)
    lwidth = max(len(str(c)) for c in comps)
    lines = [" " * lwidth + "  " + "  ".join(str(c).rjust(width + 4) for c in comps)]
    for c, row in zip(comps, mat):
        lines.append(str(c).ljust(lwidth) + "  " + "  ".join(str(x).rjust(width + 4) for x in row))
    _emit(args, payload, lines)
    return EXIT_OK


def _parse_module(system: CoxeterSystem, spec: str, acting: frozenset[int]) -> hk.HModule:
    spec = spec.strip()
    if spec == "regular":
        return hk.regular_module(system, acting)
    if ":" not in spec:
        raise CliError("module spec must be 'C:<subset>', 'P:<subset>' or 'regular'")
    kind, key = spec.split(":", 1)
    subset = _parse_subset(key)
    if not subset <= acting:
        raise CliError(
            f"module label {sorted(subset)} must lie inside the acting set {sorted(acting)}"
        )
    if kind == "C":
        return hk.simple_module(system, subset, acting=acting)
    if kind == "P":
        return hk.projective_module(system, subset, carrier=acting)
    raise CliError(f"unknown module kind {kind!r}")


def _g0_report(system: CoxeterSystem, vec: FormalVector) -> tuple[dict, list[str]]:
    items = [
        {"composition": list(composition_from_descents(system, k)), "mult": c}
        for k, c in vec.items()
    ]
    lines = [f"{it['mult']}\tC{tuple(it['composition'])}" for it in items]
    return {"factors": items}, lines


def cmd_hecke(args) -> int:
    system = _system(args)
    acting = _parse_subset(args.subset) if args.subset is not None else system.generator_set
    if not acting <= system.generator_set:
        raise CliError("subset contains unknown generators")
    module = _parse_module(system, args.module, acting if args.op != "restrict" else system.generator_set)
    if args.op == "induce":
        module = hk.induce(module)
    elif args.op == "restrict":
        module = hk.restrict(module, acting)
    elif args.op != "none":
        raise CliError(f"unknown hecke op {args.op!r}")
    if args.report == "factors":
        payload, lines = _g0_report(system, hk.composition_factors(module))
    elif args.report == "multiplicities":
        vec = hk.projective_multiplicities(module)
        items = [
            {"composition": list(composition_from_descents(system, k)), "mult": c}
            for k, c in vec.items()
        ]
        payload, lines = {"multiplicities": items}, [
            f"{it['mult']}\tP{tuple(it['composition'])}" for it in items
        ]
    elif args.report == "dim":
        payload, lines = {"dim": module.dim}, [str(module.dim)]
    elif args.report == "matrices":
        def jnum(x):
            f = Fraction(x)
            return int(f) if f.denominator == 1 else str(f)

        payload = {
            "dim": module.dim,
            "matrices": {str(s): [[jnum(x) for x in row] for row in m]
                         for s, m in sorted(module.mats.items())},
        }
        lines = [json.dumps(payload, sort_keys=True)]
    else:
        raise CliError(f"unknown report {args.report!r}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = sorted(vf.SUITES) if args.suite == "all" else [args.suite]
    for name in names:
        if name not in vf.SUITES:
            raise CliError(f"unknown suite {name!r} (choose from {sorted(vf.SUITES)} or 'all')")
    family = args.type
    n = None
    if args.rank is not None:
        if family is None:
            raise CliError("--rank needs --type")
        n = CoxeterSystem.of_rank(family, args.rank).n
    report = {}
    all_ok = True
    for name in names:
        checks = sorted(vf.run_suite(name, family, n), key=lambda c: c.name)
        passed = sum(1 for c in checks if c.passed)
        all_ok &= passed == len(checks)
        report[name] = {
            "checks": [
                {"name": c.name, "passed": c.passed, **({"detail": c.detail} if not c.passed else {})}
                for c in checks
            ],
            "passed": passed,
            "failed": len(checks) - passed,
        }
    payload = {"suites": report, "ok": all_ok}
    lines = []
    for name in names:
        r = report[name]
        lines.append(f"[{name}] {r['passed']}/{r['passed'] + r['failed']} checks passed")
        for c in r["checks"]:
            mark = "ok " if c["passed"] else "FAIL"
            lines.append(f"  {mark} {c['name']}" + ("" if c["passed"] else f" -- {c.get('detail', '')}"))
    _emit(args, payload, lines)
    return EXIT_OK if all_ok else EXIT_CHECK_FAILED


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxkit",
        description="Exact combinatorics of (signed) permutation groups: "
        "descent algebras, shuffle structures, series realizations, and "
        "degenerate Hecke representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, system_args: bool = True):
        p.add_argument("--format", "--out", dest="format", choices=("text", "json"),
                       default="text", help="output format")
        if system_args:
            p.add_argument("--type", choices=("A", "B", "D"), required=True)
            p.add_argument("--rank", type=int, required=True)
            p.add_argument("--max-window", type=int, default=None,
                           help="override the per-family window cap")

    p = sub.add_parser("element", help="window-notation arithmetic")
    add_common(p)
    p.add_argument("--op", required=True,
                   choices=("length", "descents", "inverse", "reduced-word", "compose"))
    p.add_argument("window", help="comma-separated window, e.g. '2,-4,-3,1'")
    p.add_argument("--right", default=None, help="second operand for compose")
    p.set_defaults(fn=cmd_element)

    p = sub.add_parser("product", help="shuffle-style products")
    add_common(p, system_args=False)
    p.add_argument("--family", required=True, choices=sorted(wd.PRODUCTS))
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(fn=cmd_product)

    p = sub.add_parser("coproduct", help="unshuffle-style coproducts")
    add_common(p, system_args=False)
    p.add_argument("--family", required=True, choices=sorted(wd.COPRODUCTS))
    p.add_argument("--arg", required=True)
    p.add_argument("--split", type=int, default=None, help="keep one component")
    p.set_defaults(fn=cmd_coproduct)

    p = sub.add_parser("series", help="truncated noncommutative basis elements")
    add_common(p, system_args=False)
    p.add_argument("--kind", required=True, help="one of " + ", ".join(SERIES_KINDS))
    p.add_argument("--key", required=True, help="(pseudo-)composition, e.g. '(0,2,1)'")
    p.add_argument("--window", type=int, required=True)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("expand", help="exact expansion in a polynomial basis")
    add_common(p, system_args=False)
    p.add_argument("--target", required=True, help="token like 'x0:2' or 'h:(1,1)'")
    p.add_argument("--basis", required=True,
                   help="semicolon-separated tokens, e.g. 'hB:(2);hB:(1,1);hB:(0,2);hB:(0,1,1)'")
    p.add_argument("--window", type=int, default=3)
    p.set_defaults(fn=cmd_expand)

    p = sub.add_parser("table", help="pairing tables")
    add_common(p)
    p.add_argument("--table", required=True, choices=("c", "hm", "hgram"))
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("hecke", help="degenerate Hecke module calculus")
    add_common(p)
    p.add_argument("--op", default="none", choices=("none", "induce", "restrict"))
    p.add_argument("--subset", default=None, help="acting generators, e.g. '1,2'")
    p.add_argument("--module", required=True, help="'C:<subset>', 'P:<subset>' or 'regular'")
    p.add_argument("--report", default="factors",
                   choices=("factors", "multiplicities", "dim", "matrices"))
    p.set_defaults(fn=cmd_hecke)

    p = sub.add_parser("verify", help="run named verification suites")
    add_common(p, system_args=False)
    p.add_argument("--suite", default="all",
                   help="suite name (" + ", ".join(sorted(vf.SUITES)) + ") or 'all'")
    p.add_argument("--type", choices=("A", "B", "D"), default=None)
    p.add_argument("--rank", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    return parser


def _protect_negative_windows(argv: list[str]) -> list[str]:
    """Keep window arguments starting with '-' out of option parsing: fuse
    them into '--opt=value' form and shield bare positionals with '--'."""
    import re

    window = re.compile(r"-\d+(,-?\d+)*")
    fused: list[str] = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else None
        if tok in ("--right", "--left", "--arg", "--key") and nxt is not None \
                and window.fullmatch(nxt):
            fused.append(f"{tok}={nxt}")
            i += 2
        else:
            fused.append(tok)
            i += 1
    for i, tok in enumerate(fused):
        if window.fullmatch(tok) and "--" not in fused[:i]:
            return fused[:i] + ["--"] + fused[i:]
    return fused


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _protect_negative_windows(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.status
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
