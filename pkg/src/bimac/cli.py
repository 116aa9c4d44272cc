"""Command-line front end: expansions, Kostka tables, Nabla data, checks."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import bisym, nabla, superspace
from .bialgebra import BASES, BiSymPoly
from .coeffs import parse
from .partitions import SuperPartition, format_pair, format_super, parse_pair, parse_super
from .suites import SUITES, run_suite

FORMATS = ("json", "csv", "latex", "text")
FAMILIES = ("P", "Q", "J", "H", "Htilde")
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    max_n: int | None = None
    fmt: str = "json"
    out: str | None = None
    seed: int = 0

    def __post_init__(self):
        if self.max_n is not None and self.max_n < 0:
            raise UsageError("--max-n must be nonnegative")
        if self.fmt not in FORMATS:
            raise UsageError(f"unknown format {self.fmt!r}")


# labels and documents

def parse_label(text: str):
    """'λ|μ' gives a pair, 'a;s' a superpartition."""
    try:
        if ";" in text:
            return parse_super(text)
        return parse_pair(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def poly_document(f: BiSymPoly, **meta) -> dict:
    entries = [{"lam": list(k[0]), "mu": list(k[1]), "coeff": str(v)}
               for k, v in sorted(f.coeffs.items()) if v]
    return {**meta, "basis": f.basis, "entries": entries}


def document_poly(doc: dict) -> BiSymPoly:
    return BiSymPoly(doc["basis"], {(tuple(e["lam"]), tuple(e["mu"])): parse(e["coeff"])
                                    for e in doc["entries"]})


def expand(label, family: str = "P", basis: str | None = None) -> dict:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}")
    if basis is not None and basis not in BASES:
        raise UsageError(f"unknown basis {basis!r}")
    if isinstance(label, SuperPartition):
        builders = {"P": lambda L: superspace.super_P(L).poly, "J": superspace.super_J,
                    "H": superspace.super_H}
        if family not in builders:
            raise UsageError(f"family {family} is not available in superspace")
        f = builders[family](label)
        if basis is not None:
            if basis in ("PP", "PM"):
                raise UsageError("superspace expansions use the SM, SP or SS basis")
            f = superspace.truncate(f, label.m, basis)
        return poly_document(f, label=format_super(label), family=family, m=label.m)
    builders = {"P": bisym.double_P, "Q": bisym.double_Q, "J": bisym.double_J,
                "H": bisym.double_H, "Htilde": nabla.h_tilde}
    f = builders[family](label)
    if basis is not None:
        f = f.to(basis)
    return poly_document(f, label=format_pair(label), family=family, m=None)


def kostka_document(n: int, variant: str = "double", m: int | None = None) -> dict:
    if variant == "double":
        rows, cols, mat = bisym.kostka_table(n)
        rl = [format_pair(p) for p in rows]
        cl = [format_pair(p) for p in cols]
    elif variant == "super":
        if m is None:
            raise UsageError("the super variant needs --m")
        labels = list(reversed(superspace.super_order(n, m)))
        mat = [[superspace.super_kostka(Om, L) for Om in labels] for L in labels]
        rl = cl = [format_super(L) for L in labels]
    else:
        raise UsageError(f"unknown variant {variant!r}")
    return {"variant": variant, "n": n, "m": m, "rows": rl, "cols": cl,
            "entries": [[str(x) for x in r] for r in mat]}


def nabla_document(n: int, which: str = "B") -> dict:
    if which not in nabla.WHICH:
        raise UsageError(f"unknown operator {which!r}")
    f = nabla.nabla_apply(nabla.s_empty_n(n), which)
    doc = poly_document(f, label=format_pair(((), (n,))), operator=which)
    if which == "B":
        doc["catalan"] = str(nabla.catalan_pairing(n))
        doc["dim_pairing"] = str(nabla.dim_pairing_operator(n))
    return doc


def evaluate_document(label, N: int, m: int | None = None) -> dict:
    if isinstance(label, SuperPartition):
        a = superspace.super_evaluation(label, N)
        b = superspace.super_evaluation(label, N, "explicit")
        return {"label": format_super(label), "N": N, "m": label.m,
                "closed": str(a), "explicit": str(b), "agree": a == b}
    if m is None:
        raise UsageError("pair evaluation needs --m")
    a = bisym.evaluate_E(label, N, m)
    b = bisym.evaluate_E(label, N, m, route="explicit")
    return {"label": format_pair(label), "N": N, "m": m,
            "closed": str(a), "explicit": str(b), "agree": a == b}


def sweep_document(p, m_list) -> dict:
    rep = superspace.stability_sweep(p, m_list)
    return {"pair": format_pair(p), "ok": rep["ok"],
            "by_m": {str(k): v for k, v in rep["by_m"].items()}}


def verify_document(suite: str, max_n: int | None, seed: int) -> dict:
    names = list(SUITES) if suite == "all" else [suite]
    if any(s not in SUITES for s in names):
        raise UsageError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    reports = []
    for s in names:
        reports += run_suite(s, max_n, seed)
    ok = all(r["status"] == "verified" for r in reports)
    return {"suite": suite, "max_n": max_n, "seed": seed, "ok": ok,
            "count": len(reports), "reports": reports}


# rendering

def _table(doc: dict):
    """(header, rows) view of a document, if it has a tabular form."""
    if "entries" in doc and "basis" in doc:
        return ["lam", "mu", "coeff"], [[",".join(map(str, e["lam"])) or "∅",
                                        ",".join(map(str, e["mu"])) or "∅", e["coeff"]]
                                       for e in doc["entries"]]
    if "rows" in doc and "cols" in doc:
        return [""] + doc["cols"], [[r] + e for r, e in zip(doc["rows"], doc["entries"])]
    if "reports" in doc:
        return ["conjecture", "instance", "status"], [[r["conjecture"], r["instance"], r["status"]]
                                                      for r in doc["reports"]]
    return None


def _latex_cell(s: str) -> str:
    return "$" + s.replace("*", "") + "$" if s else ""


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, ensure_ascii=False, indent=1) + "\n"
    tab = _table(doc)
    if tab is None:
        if fmt == "text":
            return "\n".join(f"{k}: {v}" for k, v in doc.items()) + "\n"
        tab = (list(doc), [[json.dumps(v, ensure_ascii=False) if isinstance(v, (dict, list))
                            else str(v) for v in doc.values()]])
    header, rows = tab
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "latex":
        lines = ["\\begin{tabular}{|" + "c|" * len(header) + "}", "\\hline",
                 " & ".join(header) + " \\\\ \\hline"]
        lines += [" & ".join([r[0]] + [_latex_cell(x) for x in r[1:]]) + " \\\\ \\hline"
                  for r in rows]
        lines.append("\\end{tabular}")
        return "\n".join(lines) + "\n"
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    fmt_row = lambda r: "  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip()
    return "\n".join([fmt_row(header)] + [fmt_row(r) for r in rows]) + "\n"


def load_document(text: str) -> dict:
    return json.loads(text)


# argument handling

def _m_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --m list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json")
    common.add_argument("--out")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", type=int)

    ap = argparse.ArgumentParser(prog="bimac", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="expand P, Q, J, H or Htilde")
    p.add_argument("label", help="pair 'λ|μ' (e.g. '2,1|∅') or superpartition 'a;s' (e.g. '1,0;2')")
    p.add_argument("--family", choices=FAMILIES, default="P")
    p.add_argument("--basis", choices=BASES)

    p = sub.add_parser("kostka", parents=[common], help="table of Kostka coefficients")
    p.add_argument("n", type=int)
    p.add_argument("--variant", choices=("double", "super"), default="double")
    p.add_argument("--m", type=int)

    p = sub.add_parser("nabla", parents=[common], help="∇ applied to s_{∅,(n)}")
    p.add_argument("n", type=int)
    p.add_argument("--which", choices=nabla.WHICH, default="B")

    p = sub.add_parser("evaluate", parents=[common], help="evaluation formulas, both routes")
    p.add_argument("label")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--m", type=int)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", help="all, " + ", ".join(SUITES))

    p = sub.add_parser("sweep", parents=[common], help="stability of P over fermionic degrees")
    p.add_argument("label", help="pair 'λ|μ'")
    p.add_argument("--m", default=None, help="comma separated, default 1..n+2")
    return ap


def run(args) -> tuple[dict, int]:
    cmd = args.command
    if cmd == "expand":
        return expand(parse_label(args.label), args.family, args.basis), EXIT_OK
    if cmd == "kostka":
        if args.n < 0:
            raise UsageError("n must be nonnegative")
        return kostka_document(args.n, args.variant, args.m), EXIT_OK
    if cmd == "nabla":
        if args.n < 1:
            raise UsageError("n must be positive")
        return nabla_document(args.n, args.which), EXIT_OK
    if cmd == "evaluate":
        return evaluate_document(parse_label(args.label), args.N, args.m), EXIT_OK
    if cmd == "verify":
        doc = verify_document(args.suite, args.max_n, args.seed)
        return doc, EXIT_OK if doc["ok"] else EXIT_FAIL
    if cmd == "sweep":
        lab = parse_label(args.label)
        if isinstance(lab, SuperPartition):
            lab = lab.to_pair()
        n = sum(lab[0]) + sum(lab[1])
        ms = _m_list(args.m) if args.m else list(range(1, n + 3))
        doc = sweep_document(lab, ms)
        return doc, EXIT_OK if doc["ok"] else EXIT_FAIL
    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        RunConfig(args.command, args.max_n, args.format, args.out, args.seed)
        doc, code = run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:                     # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    text = render(doc, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code

