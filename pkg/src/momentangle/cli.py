"""Command-line interface.

Subcommands: ``analyze`` (full pipeline on one complex), ``corpus``
(exhaustive sweep with a summary table and TSV output), ``golod``,
``decompose`` (single-stage variants), and ``dual`` (emit the Alexander
dual as a facet file).  Exit codes: 0 when all invariants held, 1 on an
invariant violation, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import os
import re
import sys

from .catalog import enumerate_complexes, format_facet_file
from .errors import FacetFileError, InternalError, ToolkitError
from .homology import Coefficients
from .report import (AnalyzeOptions, ComplexSource, analyze,
                     emit_report, jint)
from .structure import DEFAULT_SHELLING_BUDGET

_NAMED_RE = re.compile(r"^([a-z0-9-]+)(?:\(([0-9,\s]*)\))?$")
_ENUM_RE = re.compile(r"^enum:(\d+):(\d+)$")


def parse_source(text: str) -> ComplexSource:
    if os.path.exists(text):
        return ComplexSource.file(text)
    m = _ENUM_RE.match(text)
    if m:
        return ComplexSource.enumerated(int(m.group(1)), int(m.group(2)))
    m = _NAMED_RE.match(text.strip())
    if m:
        name = m.group(1)
        params = tuple(int(p) for p in m.group(2).split(",")) if m.group(2) else ()
        return ComplexSource.named(name, *params)
    raise ToolkitError(f"cannot interpret source {text!r}: not a file, "
                       f"a name(params) form, or enum:n:index")


def parse_coeffs(text: str) -> tuple[Coefficients, ...]:
    return tuple(Coefficients.parse(part) for part in text.split(","))


def _write_out(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(sub):
    sub.add_argument("source", help="facet file path, name(params), or enum:n:index")
    sub.add_argument("--coeffs", default="Z,F2,F3,Q",
                     help="comma-separated coefficient systems (default Z,F2,F3,Q)")
    sub.add_argument("--budget", type=int, default=DEFAULT_SHELLING_BUDGET,
                     help="search node budget")
    sub.add_argument("--format", choices=("json", "markdown"), default="markdown")
    sub.add_argument("--out", help="write the report to this path")
    sub.add_argument("--figures", help="directory for figure files")


def _run_single(args, stages) -> int:
    source = parse_source(args.source)
    options = AnalyzeOptions(coefficients=parse_coeffs(args.coeffs),
                             budget=args.budget, stages=stages)
    report = analyze(source, options)
    _write_out(emit_report(report, args.format), args.out)
    if args.figures:
        from .figures import render_report_figures
        stem = re.sub(r"[^A-Za-z0-9_-]+", "_", source.describe())
        for path in render_report_figures(report.payload, args.figures, stem):
            print(f"figure: {path}", file=sys.stderr)
    return 1 if report.violations else 0


def _corpus_rows(n: int, options: AnalyzeOptions):
    rows = []
    all_violations: list[str] = []
    for size in range(1, n + 1):
        for idx, K in enumerate(enumerate_complexes(size)):
            report = analyze(K, options)
            p = report.payload
            structure = p.get("structure", {})
            betti_ok = all(e["equal"] for e in p.get("betti", {}).values())
            decomposition = p.get("decomposition", {})
            decomp_ok = all(e["match"] for k, e in decomposition.items()
                            if isinstance(e, dict) and "match" in e)
            golod = p.get("golod", {})
            row = {
                "label": f"enum:{size}:{idx}",
                "m": jint(size),
                "facets": jint(len(K.facets)),
                "shellable": structure.get("shellable", {}).get("answer") == "yes",
                "shifted": structure.get("shifted", {}).get("answer") == "yes",
                "vertex_decomposable":
                    structure.get("vertex_decomposable", {}).get("answer") == "yes",
                "scm_Z": structure.get("sequentially_cm", {}).get("Z", False),
                "betti_equal": betti_ok,
                "decomposition": decomp_ok,
            }
            for label, entry in sorted(golod.items()):
                row[f"golod_{label}"] = entry["golod"]
            row["violations"] = jint(len(report.violations))
            rows.append(row)
            all_violations.extend(f"{row['label']}: {v}" for v in report.violations)
    return rows, all_violations


def _corpus_tsv(rows) -> str:
    if not rows:
        return ""
    columns = list(rows[0].keys())
    lines = ["\t".join(columns)]
    for row in rows:
        lines.append("\t".join(
            (v if isinstance(v, str) else ("1" if v else "0"))
            for v in (row[c] for c in columns)))
    return "\n".join(lines) + "\n"


def _corpus_markdown(rows, violations) -> str:
    lines = ["# Corpus sweep", ""]
    lines.append(f"complexes analyzed: {len(rows)}")
    lines.append("")
    if rows:
        columns = list(rows[0].keys())
        lines.append("| " + " | ".join(columns) + " |")
        lines.append("|" + "---|" * len(columns))
        for row in rows:
            cells = [(v if isinstance(v, str) else ("yes" if v else "no"))
                     for v in (row[c] for c in columns)]
            lines.append("| " + " | ".join(cells) + " |")
    lines.append("")
    if violations:
        lines.append("## Violations")
        lines.extend(f"- {v}" for v in violations)
    else:
        lines.append("All invariants held on the corpus.")
    return "\n".join(lines) + "\n"


def _cmd_corpus(args) -> int:
    import json

    options = AnalyzeOptions(coefficients=parse_coeffs(args.coeffs),
                             budget=args.budget)
    rows, violations = _corpus_rows(args.n, options)
    if args.format == "json":
        text = json.dumps({"rows": rows, "violations": violations},
                          sort_keys=True, indent=2) + "\n"
    else:
        text = _corpus_markdown(rows, violations)
    _write_out(text, args.out)
    if args.tsv:
        _write_out(_corpus_tsv(rows), args.tsv)
    if args.figures:
        from .figures import save_corpus_figure
        os.makedirs(args.figures, exist_ok=True)
        columns = [c for c in rows[0] if c not in ("label", "m", "facets",
                                                   "violations")] if rows else []
        path = save_corpus_figure(rows, columns,
                                  os.path.join(args.figures, "corpus_summary.png"))
        print(f"figure: {path}", file=sys.stderr)
    return 1 if violations else 0


def _cmd_dual(args) -> int:
    source = parse_source(args.source)
    K = source.resolve()
    _write_out(format_facet_file(K.alexander_dual()), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="momentangle",
        description="Exact verification toolkit for simplicial complexes, "
                    "Stanley-Reisner Tor algebras, and moment-angle models.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="run the full pipeline")
    _add_common(p_analyze)

    p_corpus = sub.add_parser("corpus", help="exhaustive sweep on <= n indices")
    p_corpus.add_argument("--n", type=int, default=3,
                          help="sweep all complexes on up to n indices (<= 4)")
    p_corpus.add_argument("--coeffs", default="Z,F2,F3,Q")
    p_corpus.add_argument("--budget", type=int, default=DEFAULT_SHELLING_BUDGET)
    p_corpus.add_argument("--format", choices=("json", "markdown"),
                          default="markdown")
    p_corpus.add_argument("--out", help="write the summary to this path")
    p_corpus.add_argument("--tsv", help="write a delimited summary to this path")
    p_corpus.add_argument("--figures", help="directory for figure files")

    p_golod = sub.add_parser("golod", help="Golod verdicts only")
    _add_common(p_golod)

    p_dec = sub.add_parser("decompose", help="decomposition checks only")
    _add_common(p_dec)

    p_dual = sub.add_parser("dual", help="emit the Alexander dual facet file")
    p_dual.add_argument("source")
    p_dual.add_argument("--out")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "analyze":
            return _run_single(args, ("structure", "betti", "spanning",
                                      "decomposition", "golod"))
        if args.command == "golod":
            return _run_single(args, ("golod",))
        if args.command == "decompose":
            return _run_single(args, ("decomposition",))
        if args.command == "corpus":
            return _cmd_corpus(args)
        if args.command == "dual":
            return _cmd_dual(args)
        parser.error(f"unknown command {args.command}")
    except FacetFileError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        # an invariant that should hold by theory failed: report as a
        # violation, not a usage problem
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 1
    except (ToolkitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
