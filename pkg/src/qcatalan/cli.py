"""Command-line front end: ``table``, ``enumerate``, ``verify`` and ``bijection``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from enum import Enum
from math import comb

from . import lattice, perms, triangles, verify
from .bijections import phi_insert, psi, psi_inverse
from .poly import CycInt, MultiPoly, UniPoly


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    LATEX = "latex"


TABLE_KINDS = ("classical", "q", "mirror", "qp", "multi", "cyclotomic")
FAMILIES = tuple(f"perm:{p.value}" for p in perms.ALL_PATTERNS) + ("path", "word", "tree")
MAPS = ("phi", "psi", "psi-inverse", "path-word", "word-path", "path-tree")


class UsageError(Exception):
    pass


def render_value(v, latex=False) -> str:
    if isinstance(v, (UniPoly, MultiPoly, CycInt)):
        return v.render(latex=latex)
    return str(v)


def build_table(kind: str, n_max: int, mu: int | None = None) -> triangles.TriangleTable:
    if kind in ("multi", "cyclotomic"):
        if mu is None:
            raise UsageError(f"--mu is required for --kind {kind}")
        if kind == "multi":
            return triangles.multi_triangle(n_max, mu)
        return triangles.cyclotomic_triangle(n_max, mu)
    builders = {
        "classical": triangles.classical_triangle,
        "q": triangles.q_triangle,
        "mirror": triangles.mirror_triangle,
        "qp": triangles.qp_triangle,
    }
    return builders[kind](n_max)


def format_table(table: triangles.TriangleTable, fmt: OutputFormat) -> str:
    n_max = table.n_max
    if fmt is OutputFormat.JSON:
        rows = [[v if isinstance(v, int) else render_value(v) for v in table.row(n)]
                for n in range(n_max + 1)]
        doc = {"kind": table.kind, "n_max": n_max, "mu": table.mu, "rows": rows}
        return json.dumps(doc, ensure_ascii=False) + "\n"
    if fmt is OutputFormat.CSV:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n"] + [f"k={k}" for k in range(n_max + 1)])
        for n in range(n_max + 1):
            w.writerow([n] + [render_value(v) for v in table.row(n)])
        return buf.getvalue()
    cols = "c" * (n_max + 1)
    lines = [f"\\[\\begin{{array}}{{c|{cols}}}",
             "n\\,\\backslash\\, k & " + " & ".join(str(k) for k in range(n_max + 1))
             + "\\\\\\hline"]
    for n in range(n_max + 1):
        cells = " & ".join(render_value(v, latex=True) for v in table.row(n))
        lines.append(f"{n} & {cells} \\\\")
    lines.append("\\end{array}\\]")
    return "\n".join(lines) + "\n"


def parse_latex_table(text: str) -> list[list[str]]:
    """Cell texts of a table produced by :func:`format_table` in latex format."""
    rows = []
    for line in text.splitlines()[2:-1]:
        parts = [p.strip() for p in line.rstrip("\\ ").split("&")]
        rows.append(parts[1:])
    return rows


def enumerate_rows(family: str, n: int, k: int, with_stats: bool) -> list[dict]:
    top = comb(n, 2)
    rows = []
    if family.startswith("perm:"):
        tau = perms.Pattern.parse(family.split(":", 1)[1])
        for p in perms.s_prime(n, k, tau):
            row = {"perm": str(p)}
            if with_stats:
                row["cell"] = perms.cell_index(p, tau)
                row["inv"] = perms.inv(p)
                row["coinv"] = perms.coinv(p)
                if tau.value in ("312", "231"):
                    row["sigma"] = row["inv"]
                elif tau.value in ("213", "132"):
                    row["sigma"] = row["coinv"]
            rows.append(row)
        return rows
    if family not in ("path", "word", "tree"):
        raise UsageError(f"unknown family {family!r}")
    for g in lattice.gen_paths(n, k):
        if family == "path":
            row = {"path": str(g)}
            if with_stats:
                a = lattice.area(g)
                row.update(word=str(lattice.path_to_word(g)), area=a, complement=top - a)
        elif family == "word":
            w = lattice.path_to_word(g)
            row = {"word": str(w)}
            if with_stats:
                wi = lattice.word_inv(w)
                row.update(inv=wi, complement=top - wi)
        else:
            t = lattice.path_to_tree(lattice.complete_path(g))
            row = {"tree": lattice.render_tree(t)}
            if with_stats:
                row.update(path=str(g), stat=lattice.tree_stat(t),
                           triangulation=" ".join(f"{a}-{b}" for a, b in
                                                  lattice.tree_to_triangulation(t, n)))
        rows.append(row)
    return rows


def format_rows(rows: list[dict], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return json.dumps(rows, ensure_ascii=False) + "\n"
    header = list(rows[0]) if rows else []
    if fmt is OutputFormat.CSV:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([r[h] for h in header])
        return buf.getvalue()
    lines = [f"\\begin{{tabular}}{{{'c' * len(header)}}}",
             " & ".join(header) + " \\\\\\hline"]
    for r in rows:
        lines.append(" & ".join(str(r[h]) for h in header) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def format_reports(reports: list[verify.CheckReport], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        docs = [r.to_dict() for r in reports]
        return json.dumps(docs[0] if len(docs) == 1 else docs, indent=2,
                          ensure_ascii=False) + "\n"
    if fmt is OutputFormat.CSV:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["check_id", "status", "n", "k", "tag", "expected", "actual", "ok"])
        for r in reports:
            for c in r.cells:
                w.writerow([r.check_id, r.status, c.n, c.k, c.tag, c.expected, c.actual,
                            int(c.ok)])
        return buf.getvalue()
    lines = []
    for r in reports:
        lines += [f"% {r.check_id}: {r.status}",
                  "\\begin{tabular}{cccccc}",
                  "n & k & tag & expected & actual & ok \\\\\\hline"]
        for c in r.cells:
            lines.append(f"{c.n} & {c.k} & {c.tag} & ${c.expected}$ & ${c.actual}$ & "
                         f"{'yes' if c.ok else 'no'} \\\\")
        lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def apply_bijection(name: str, text: str, n: int | None, k: int | None) -> str:
    def need(*vals):
        if any(v is None for v in vals):
            raise UsageError(f"--map {name} requires --n and --k")

    if name == "phi":
        need(n, k)
        return str(phi_insert(perms.Perm.parse(text), n, k))
    if name == "psi":
        need(n, k)
        return str(psi(perms.Perm.parse(text), n, k))
    if name == "psi-inverse":
        path = lattice.LatticePath(text.strip())
        return str(psi_inverse(path, path.n if n is None else n, path.k if k is None else k))
    if name == "path-word":
        return str(lattice.path_to_word(lattice.LatticePath(text.strip())))
    if name == "word-path":
        return str(lattice.word_to_path(lattice.BinWord.parse(text)))
    if name == "path-tree":
        path = lattice.LatticePath(text.strip())
        return lattice.render_tree(lattice.path_to_tree(lattice.complete_path(path)))
    raise UsageError(f"unknown map {name!r}")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qcatalan",
                                 description="q-Catalan triangle tables, families and checks")
    sub = ap.add_subparsers(dest="command", required=True)
    fmt = dict(choices=[f.value for f in OutputFormat], default="csv")

    t = sub.add_parser("table", help="print a triangle")
    t.add_argument("--kind", choices=TABLE_KINDS, required=True)
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--mu", type=int)
    t.add_argument("--format", **fmt)

    e = sub.add_parser("enumerate", help="list a family member per row")
    e.add_argument("--family", choices=FAMILIES, required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--with-stats", action="store_true")
    e.add_argument("--format", **fmt)

    v = sub.add_parser("verify", help="run a named check, or all of them")
    v.add_argument("--check", required=True, help="check id or 'all'")
    v.add_argument("--n-max", type=int, default=6)
    v.add_argument("--n-max-poly", type=int, default=20,
                   help="bound for polynomial-only checks under --check all")
    v.add_argument("--mu", type=int)
    v.add_argument("--format", choices=[f.value for f in OutputFormat], default="json")

    b = sub.add_parser("bijection", help="apply a map to one object")
    b.add_argument("--map", choices=MAPS, required=True)
    b.add_argument("--input", required=True)
    b.add_argument("--n", type=int)
    b.add_argument("--k", type=int)
    return ap


def main(argv=None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "table":
            table = build_table(args.kind, args.n_max, args.mu)
            out.write(format_table(table, OutputFormat(args.format)))
            return 0
        if args.command == "enumerate":
            rows = enumerate_rows(args.family, args.n, args.k, args.with_stats)
            out.write(format_rows(rows, OutputFormat(args.format)))
            return 0
        if args.command == "verify":
            if args.check == "all":
                reports = verify.run_all(args.n_max, args.n_max_poly)
            else:
                if args.check not in verify.REGISTRY:
                    raise UsageError(f"unknown check {args.check!r}; choose from "
                                     f"{', '.join(verify.CHECK_IDS)} or 'all'")
                reports = [verify.run_check(args.check, args.n_max, args.mu)]
            out.write(format_reports(reports, OutputFormat(args.format)))
            return 1 if any(r.status == verify.FAIL for r in reports) else 0
        out.write(apply_bijection(args.map, args.input, args.n, args.k) + "\n")
        return 0
    except (UsageError, ValueError) as exc:
        print(f"qcatalan {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
