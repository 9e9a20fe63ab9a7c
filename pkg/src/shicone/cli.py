"""Command-line front end.

    shicone info A2
    shicone count A5 --word "5 2 4 3 1" --show-matrix --oracle
    shicone poincare A2 --word "1 2"
    shicone table G2 --poincare
    shicone verify D4 --all
    shicone digraph G2 --format dot

Exit codes: 0 ok, 2 usage, 3 missing digraph data, 4 verification failure,
5 enumeration cap, 6 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .det import cone_matrix, default_workers, region_table
from .digraph import DataUnavailable, ShiDigraph, build_digraph, corner_label, export_digraph, load_digraph
from .oracle import PathCatalogue, count_antichains
from .poly import Poly
from .rootsystem import ConfigError, WeylType, format_root, parse_type, root_system
from .validate import validate_digraph
from .weyl import CapExceeded, element_of, enumerate_group, parse_word

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY, EXIT_CAP, EXIT_IO = 0, 2, 3, 4, 5, 6


class VerifyFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    type: WeylType
    word: tuple[int, ...] = ()
    format: str = "plain"
    show_matrix: bool = False
    oracle: bool = False
    oracle_only: bool = False
    all: bool = False
    poincare: bool = False
    workers: int = 1
    max_group_order: int = 10**6
    data: Path | None = None
    out: Path | None = None
    order: str | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        t = parse_type(ns.type)
        word = parse_word(ns.word or "", t.rank)
        fmt = ns.format
        if ns.command == "digraph":
            fmt = {"plain": "dot", "csv": "dot"}.get(fmt, fmt)
        elif fmt == "dot":
            raise ConfigError("--format dot only applies to the digraph command")
        if ns.command == "verify" and ns.all and ns.word:
            raise ConfigError("--all and --word are mutually exclusive")
        workers = ns.workers if ns.workers is not None else default_workers()
        return cls(ns.command, t, word, fmt, ns.show_matrix, ns.oracle, ns.oracle_only, ns.all,
                   ns.poincare, max(1, workers), ns.max_group_order,
                   Path(ns.data) if ns.data else None, Path(ns.out) if ns.out else None, ns.order)


def _digraph(cfg: RunConfig) -> ShiDigraph:
    if cfg.data is not None:
        try:
            g = load_digraph(cfg.data)
        except OSError as exc:
            raise DataUnavailable(f"cannot read {cfg.data}: {exc}") from None
        except ValueError as exc:
            raise DataUnavailable(f"bad digraph file {cfg.data}: {exc}") from None
        if g.type != cfg.type:
            raise ConfigError(f"{cfg.data} describes {g.type}, not {cfg.type}")
        report = validate_digraph(g)
        if not report.ok:
            raise DataUnavailable(f"digraph file {cfg.data} failed validation:\n{report}")
        return g
    try:
        return build_digraph(cfg.type)
    except DataUnavailable:
        raise DataUnavailable(
            f"no digraph data for {cfg.type}: pass a digraph file with --data, "
            f"or certify counts with `verify {cfg.type} --oracle-only`") from None


def _word_text(word) -> str:
    return " ".join(map(str, word)) if word else "e"


def _root_name(rs, r: int) -> str:
    # segment shorthand only reads well for the classical families
    if rs.type.family in "ABCD":
        return f"α_{{{rs.label(r)}}}"
    return format_root(rs.roots[r])


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out is not None:
        cfg.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_info(cfg: RunConfig) -> int:
    rs = root_system(cfg.type)
    inv = rs.invariants
    doc = {"type": str(cfg.type), "rank": rs.rank, "positive_roots": len(rs),
           "exponents": list(inv.exponents), "coxeter_number": inv.coxeter_number,
           "weyl_order": inv.weyl_order, "catalan": inv.catalan}
    if cfg.format == "json":
        _emit(cfg, json.dumps(doc, indent=1) + "\n")
    else:
        _emit(cfg, "".join(f"{k}: {v}\n" for k, v in doc.items()))
    return EXIT_OK


def _order(cfg: RunConfig, rs) -> list[int] | None:
    if not cfg.order:
        return None
    return [rs.find(tok) for tok in cfg.order.split()]


def _cone(cfg: RunConfig, refined: bool):
    g = _digraph(cfg)
    w = element_of(g.rs, cfg.word)
    try:
        cm = cone_matrix(g, w, _order(cfg, g.rs), refined=refined)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return g, w, cm


def cmd_count(cfg: RunConfig) -> int:
    g, w, cm = _cone(cfg, refined=False)
    rs = g.rs
    count = cm.determinant()
    doc = {
        "type": str(cfg.type),
        "word": list(cfg.word),
        "inversions": [{"label": _root_name(rs, r), "coeffs": list(rs.roots[r])} for r in cm.roots],
        "corners": [{"root": _root_name(rs, c.root), "bl": str(c.bl), "br": str(c.br), "tr": str(c.tr)}
                    for c in cm.corners],
        "count": count,
    }
    if cfg.show_matrix:
        doc["matrix"] = cm.matrix
    status = EXIT_OK
    if cfg.oracle:
        anti, _ = count_antichains(rs, w.inversions_of_inverse())
        paths, _ = PathCatalogue(g).avoiding(w.inversions_of_inverse())
        doc["oracle"] = {"antichains": anti, "paths": paths, "pass": count == anti == paths}
        if not doc["oracle"]["pass"]:
            status = EXIT_VERIFY
    if cfg.format == "json":
        _emit(cfg, json.dumps(doc, indent=1) + "\n")
        return status
    lines = [f"type {cfg.type}, word {_word_text(cfg.word)}", "inversion set of w^-1:"]
    lines += [f"  {_root_name(rs, r)} {format_root(rs.roots[r])}" if rs.type.family in "ABCD"
              else f"  {_root_name(rs, r)}" for r in cm.roots] or ["  (empty)"]
    lines.append("forbidden corners:")
    lines += [f"  {_root_name(rs, c.root)}: {corner_label(c)}" for c in cm.corners] or ["  (none)"]
    if cfg.show_matrix:
        lines.append("matrix:")
        lines += ["  [" + ", ".join(str(x) for x in row) + "]" for row in cm.matrix]
    lines.append(f"count: {count}")
    if cfg.oracle:
        o = doc["oracle"]
        lines.append(f"oracle antichains: {o['antichains']}")
        lines.append(f"oracle paths: {o['paths']}")
        lines.append("PASS" if o["pass"] else "FAIL")
    _emit(cfg, "\n".join(lines) + "\n")
    return status


def cmd_poincare(cfg: RunConfig) -> int:
    g, w, cm = _cone(cfg, refined=True)
    poly = cm.determinant()
    poly = poly if isinstance(poly, Poly) else Poly(poly)
    doc = {"type": str(cfg.type), "word": list(cfg.word), "coefficients": list(poly.coeffs), "polynomial": str(poly)}
    if cfg.show_matrix:
        doc["matrix"] = [[str(x) for x in row] for row in cm.matrix]
    status = EXIT_OK
    if cfg.oracle:
        _, by_size = count_antichains(g.rs, w.inversions_of_inverse())
        doc["oracle"] = {"by_size": list(by_size), "pass": tuple(by_size) == poly.coeffs}
        status = EXIT_OK if doc["oracle"]["pass"] else EXIT_VERIFY
    if cfg.format == "json":
        _emit(cfg, json.dumps(doc, indent=1) + "\n")
        return status
    lines = [f"type {cfg.type}, word {_word_text(cfg.word)}"]
    if cfg.show_matrix:
        lines.append("matrix:")
        lines += ["  [" + ", ".join(str(x) for x in row) + "]" for row in cm.matrix]
    lines.append("coefficients: " + " ".join(map(str, poly.coeffs)))
    lines.append(f"poincare: {poly}")
    if cfg.oracle:
        lines.append("oracle by size: " + " ".join(map(str, doc["oracle"]["by_size"])))
        lines.append("PASS" if doc["oracle"]["pass"] else "FAIL")
    _emit(cfg, "\n".join(lines) + "\n")
    return status


def cmd_table(cfg: RunConfig) -> int:
    g = _digraph(cfg)
    rows = region_table(cfg.type, refined=cfg.poincare, workers=cfg.workers,
                        cap=cfg.max_group_order, digraph=g if cfg.data else None)
    total = sum(r.count for r in rows)
    if cfg.format == "json":
        doc = {"type": str(cfg.type), "total": total,
               "rows": [{"word": list(r.word), "length": r.length, "count": r.count,
                         **({"poincare": list(r.poincare)} if cfg.poincare else {})} for r in rows]}
        _emit(cfg, json.dumps(doc, indent=1) + "\n")
        return EXIT_OK
    buf = io.StringIO()
    out = csv.writer(buf, lineterminator="\n")
    out.writerow(["word", "length", "count"] + (["poincare_coeffs"] if cfg.poincare else []))
    for r in rows:
        extra = [" ".join(map(str, r.poincare))] if cfg.poincare else []
        out.writerow([_word_text(r.word), r.length, r.count] + extra)
    out.writerow(["total", "", total] + ([""] if cfg.poincare else []))
    _emit(cfg, buf.getvalue())
    return EXIT_OK


def _verify_words(args) -> list[tuple[bool, str, int]]:
    """(ok, summary, antichain count) for each word; runs in worker processes."""
    tname, words, g, oracle_only = args
    rs = root_system(tname) if g is None else g.rs
    catalogue = None if oracle_only else PathCatalogue(g)
    out = []
    for word in words:
        w = element_of(rs, word)
        anti, by_size = count_antichains(rs, w.inversions_of_inverse())
        if oracle_only:
            out.append((True, f"{_word_text(word)}: antichains {anti}", anti))
            continue
        det = cone_matrix(g, w).determinant()
        poly = cone_matrix(g, w, refined=True).determinant()
        paths, path_poly = catalogue.avoiding(w.inversions_of_inverse())
        ok = det == anti == paths and poly.coeffs == tuple(by_size) == path_poly.coeffs
        out.append((ok, f"{_word_text(word)}: {det}={anti}={paths}", anti))
    return out


def cmd_verify(cfg: RunConfig) -> int:
    rs = root_system(cfg.type)
    g = None if cfg.oracle_only else _digraph(cfg)
    if cfg.all:
        words = [w.word for w in enumerate_group(rs, cfg.max_group_order)]
    else:
        words = [cfg.word]
    if cfg.workers > 1 and len(words) >= 64:
        size = -(-len(words) // (cfg.workers * 4))
        jobs = [(str(cfg.type), words[k:k + size], g, cfg.oracle_only) for k in range(0, len(words), size)]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = [r for part in pool.map(_verify_words, jobs) for r in part]
    else:
        results = _verify_words((str(cfg.type), words, g, cfg.oracle_only))
    failures = [msg for ok, msg, _ in results if not ok]
    total = sum(anti for _, _, anti in results)
    if cfg.format == "json":
        doc = {"type": str(cfg.type), "elements": len(results), "pass": not failures, "failures": failures}
        if cfg.all:
            doc["total_regions"] = total
        _emit(cfg, json.dumps(doc, indent=1) + "\n")
    else:
        lines = [f"MISMATCH {m}" for m in failures]
        verdict = "FAIL" if failures else "PASS"
        if cfg.all:
            lines.append(f"{verdict} ({len(results)} elements, {total} regions)")
        else:
            lines.append(f"{verdict}, {results[0][1].split(': ', 1)[1]}")
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_VERIFY if failures else EXIT_OK


def cmd_digraph(cfg: RunConfig) -> int:
    g = _digraph(cfg)
    _emit(cfg, export_digraph(g, cfg.format))
    return EXIT_OK


COMMANDS = {"info": cmd_info, "count": cmd_count, "poincare": cmd_poincare,
            "table": cmd_table, "verify": cmd_verify, "digraph": cmd_digraph}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shicone", description="Shi regions per Weyl cone via path determinants.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("type", help="Weyl type such as A3, B4, D5, F4, G2")
        s.add_argument("--word", default="", help='generator indices, e.g. "5 2 4 3 1"')
        s.add_argument("--format", default="plain", choices=["plain", "json", "csv", "dot"])
        s.add_argument("--show-matrix", action="store_true")
        s.add_argument("--oracle", action="store_true", help="cross-check against brute force")
        s.add_argument("--oracle-only", action="store_true", help="skip the determinant, count antichains only")
        s.add_argument("--all", action="store_true", help="every element of the group")
        s.add_argument("--poincare", action="store_true", help="add Poincare coefficients to tables")
        s.add_argument("--workers", type=int, default=None)
        s.add_argument("--max-group-order", type=int, default=10**6)
        s.add_argument("--data", help="digraph JSON file (needed for E6)")
        s.add_argument("--out", help="write output here instead of stdout")
        s.add_argument("--order", help='root order for the matrix, e.g. "12 22"')
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig.from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except ConfigError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataUnavailable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
