"""Command-line interface.

Data goes to standard output, run reports to standard error. Exit codes:
0 all checks passed, 1 a mathematical finding (no 6-CDC, mismatch, ...),
2 usage error, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from importlib import resources
from pathlib import Path
from typing import Sequence

EXIT_OK, EXIT_FINDING, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class RunReport:
    def __init__(self, command: str, **params):
        self.command = command
        self.params = params
        self.counts: dict[str, object] = {}
        self.checks: list[tuple[str, bool]] = []
        self.lines: list[str] = []
        self.start = time.perf_counter()

    def check(self, name: str, passed: bool) -> bool:
        self.checks.append((name, bool(passed)))
        return passed

    @property
    def ok(self) -> bool:
        return all(p for _, p in self.checks)

    def emit(self, stream=None) -> None:
        out = stream or sys.stderr
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        print(f"command: {self.command}", file=out)
        if params:
            print(f"parameters: {params}", file=out)
        if self.counts:
            print("counts: " + " ".join(f"{k}={v}" for k, v in self.counts.items()), file=out)
        for line in self.lines:
            print(line, file=out)
        for name, passed in self.checks:
            print(f"check {name}: {'pass' if passed else 'FAIL'}", file=out)
        print(f"time: {time.perf_counter() - self.start:.2f}s", file=out)


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _read_graphs(path: str):
    from .graph6 import Graph6Error, decode_graph6

    out = []
    for k, line in enumerate(_read_text(path).splitlines()):
        if not line.strip():
            continue
        try:
            out.append(decode_graph6(line.strip()))
        except Graph6Error as exc:
            raise UsageError(f"{path}:{k + 1}: {exc}") from exc
    return out


def _read_graph(path: str):
    gs = _read_graphs(path)
    if len(gs) != 1:
        raise UsageError(f"{path}: expected exactly one graph6 line, found {len(gs)}")
    return gs[0]


def _read_cdc(path: str, g):
    from .cdc import CdcError, parse_cdc

    try:
        (n, m, _), cdc = parse_cdc(_read_text(path))
    except CdcError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    if (n, m) != (g.n, g.m):
        raise UsageError(f"{path}: header says n={n} m={m}, graph has n={g.n} m={g.m}")
    return cdc


def packaged_catalog() -> str:
    return resources.files("hexcover").joinpath("data/catalog.txt").read_text()


def _catalog(path: str | None):
    from .seeds import load_catalog, parse_catalog

    if path is None:
        return parse_catalog(packaged_catalog())
    return load_catalog(path)


def _write(text: str) -> None:
    sys.stdout.write(text)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_derive_seeds(args) -> int:
    from .seeds import CatalogFormatError, build_catalog, format_catalog, parse_catalog

    rep = RunReport("derive-seeds", out=args.out)
    out = Path(args.out) if args.out != "-" else None
    if out is not None and out.exists():
        try:
            parse_catalog(out.read_text())
        except (CatalogFormatError, UnicodeDecodeError) as exc:
            backup = out.with_name(out.name + ".bak")
            out.replace(backup)
            rep.lines.append(f"existing catalog unreadable ({exc}); moved to {backup}")
    cat = build_catalog()
    text = format_catalog(cat)
    if out is None:
        _write(text)
    else:
        out.write_text(text)
    for e in cat.entries:
        sizes = ",".join(f"{b.graph.n}{b.type}" for b in e.B) or "-"
        i_size = e.I.graph.n if e.I else "none"
        rep.lines.append(f"entry {e.name:<3} I {i_size:<5} B {sizes}")
    rep.counts["entries"] = len(cat.entries)
    rep.counts["bases"] = sum(len(e.B) for e in cat.entries)
    for a in cat.anchors:
        rep.check(a.name + (f" ({a.detail})" if a.detail and not a.passed else ""), a.passed)
    rep.emit()
    return EXIT_OK if rep.ok else EXIT_INTERNAL


def _format_record(gg, with_cdc: bool, with_ham: bool, fmt: str) -> str:
    from .cdc import format_cdc
    from .graph6 import encode_graph6

    if fmt == "graph6":
        lines = [encode_graph6(gg.graph).decode()]
    else:
        lines = [f"{gg.graph.n} {gg.graph.m}"] + [f"{u} {v}" for u, v in gg.graph.edges()]
    text = "\n".join(lines) + "\n"
    if with_cdc:
        text += format_cdc(gg.graph, gg.cdc)
    if with_ham:
        text += "ham " + " ".join(map(str, gg.hamiltonian)) + "\n"
    return text


def cmd_generate(args) -> int:
    from .generator import GenerationReport, generate

    if args.girth not in (3, 4, 5, 6):
        raise UsageError("girth must be 3, 4, 5 or 6")
    if args.max_n < 4:
        raise UsageError("--max-n must be at least 4")
    rep = RunReport("generate", girth=args.girth, max_n=args.max_n)
    cat = _catalog(args.catalog)
    info = GenerationReport(args.girth, args.max_n)
    out = generate(cat, args.girth, args.max_n, info)
    for gg in out:
        _write(_format_record(gg, args.with_cdc, args.with_ham, args.format))
    rep.counts.update(graphs=len(out), states=info.states, reselected=info.reselected, fallbacks=info.fallbacks)
    sizes: dict[int, int] = {}
    for gg in out:
        sizes[gg.n] = sizes.get(gg.n, 0) + 1
    rep.lines.append("per n: " + " ".join(f"{n}:{k}" for n, k in sorted(sizes.items())))
    rep.check("certificates distinct", len({gg.certificate for gg in out}) == len(out))
    rep.check("every cycle spliced", info.fallbacks == 0)
    for code, names in info.multiplicity:
        rep.lines.append(f"seed copies with several configurations ({', '.join(names)}): {code}")
    for code, checks in info.theorem_failures:
        bad = ", ".join(k for k, v in checks.items() if not v)
        rep.lines.append(f"structure theorem violated ({bad}): {code}")
    rep.emit()
    if info.fallbacks:
        return EXIT_FINDING
    return EXIT_OK


def cmd_oracle(args) -> int:
    from .cdc import find_6cdc, format_cdc
    from .graph6 import encode_graph6

    rep = RunReport("oracle", input=args.input, mode=args.mode)
    graphs = _read_graphs(args.input)
    negative = 0
    for g in graphs:
        if not g.is_cubic():
            raise UsageError(f"{encode_graph6(g).decode()} is not cubic")
        sols = find_6cdc(g, args.mode)
        if not sols:
            negative += 1
            rep.lines.append(f"no 6-CDC: {encode_graph6(g).decode()}")
        for c in sols:
            _write(format_cdc(g, c.renumbered()))
    rep.counts.update(graphs=len(graphs), without_6cdc=negative)
    rep.emit()
    return EXIT_FINDING if negative else EXIT_OK


def cmd_verify(args) -> int:
    from .cdc import check_structure_theorems, verify_6cdc

    rep = RunReport("verify", graph=args.graph, cdc=args.cdc)
    g = _read_graph(args.graph)
    cdc = _read_cdc(args.cdc, g)
    try:
        res = verify_6cdc(g, cdc.cycles)
    except ValueError as exc:
        rep.lines.append(str(exc))
        rep.check("input", False)
        rep.emit()
        return EXIT_FINDING
    rep.lines.extend(res.table())
    rep.check("6-CDC", res.ok)
    if res.ok:
        th = check_structure_theorems(g, cdc)
        for name, passed in th.checks.items():
            rep.check(name, passed)
    rep.emit()
    return EXIT_OK if rep.ok else EXIT_FINDING


def cmd_crosscheck(args) -> int:
    from .cubic_enum import MAX_N, crosscheck

    if not 4 <= args.max_n <= MAX_N:
        raise UsageError(f"--max-n must be between 4 and {MAX_N}")
    rep = RunReport("crosscheck", max_n=args.max_n)
    cat = _catalog(args.catalog)
    res = crosscheck(args.max_n, cat, Path(args.cache_dir) if args.cache_dir else None)
    rep.lines.extend(res.table())
    for r in res.rows:
        for code in r.missed:
            rep.lines.append(f"missed n={r.n}: {code.decode()}")
        for code in r.extra:
            rep.lines.append(f"extra n={r.n}: {code.decode()}")
    rep.check("generator equals oracle", res.ok)
    rep.emit()
    return EXIT_OK if res.ok else EXIT_FINDING


def cmd_circulant(args) -> int:
    from .circulant import CirculantSpec, circulant, find_mcsd, mobius_ladder, torus_2layer, verify_theorem2
    from .graph6 import encode_graph6

    rep = RunReport("circulant", family=args.family, n=args.n)
    if args.family == "families":
        if args.n % 2:
            raise UsageError("n must be even")
        res = verify_theorem2(args.n, _catalog(args.catalog) if args.stream else None)
        rep.lines.extend(res.table())
        rep.check("every M_n and T_n,2 except K_4 has a 6-CDC", res.ok)
        rep.emit()
        return EXIT_OK if res.ok else EXIT_FINDING
    try:
        if args.family == "mobius":
            g = mobius_ladder(args.n)
        elif args.family == "torus":
            g = torus_2layer(args.n)
        else:
            if args.s is None:
                raise UsageError("circulant needs --s")
            c = circulant(CirculantSpec(args.n, args.s))
            g = c.graph
            if not c.connected:
                rep.lines.append("warning: graph is disconnected")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _write(encode_graph6(g).decode() + "\n")
    code = EXIT_OK
    if args.mcsd:
        lab = find_mcsd(g)
        if lab is None:
            rep.lines.append("no minimal chordal sense of direction")
            code = EXIT_FINDING
        else:
            _write(lab.format())
    rep.emit()
    return code


def cmd_reduce(args) -> int:
    from .cdc import format_cdc
    from .generator import reduce_to_base
    from .graph6 import encode_graph6

    rep = RunReport("reduce", graph=args.graph, cdc=args.cdc)
    g = _read_graph(args.graph)
    cdc = _read_cdc(args.cdc, g)
    from .cdc import verify_6cdc

    if not verify_6cdc(g, cdc.cycles).ok:
        rep.lines.append("input cover is not a valid 6-CDC")
        rep.emit()
        return EXIT_FINDING
    red = reduce_to_base(_catalog(args.catalog), g, cdc)
    _write(encode_graph6(red.graph).decode() + "\n")
    _write(format_cdc(red.graph, red.cdc.renumbered()))
    rep.lines.append("steps: " + (" ".join(red.steps) or "none"))
    rep.lines.append(f"terminal: {red.base or 'not a base instance'}")
    rep.check("terminates at a base instance", red.ok)
    rep.emit()
    return EXIT_OK if red.ok else EXIT_FINDING


def cmd_iso(args) -> int:
    from .canon import find_isomorphism

    rep = RunReport("iso", first=args.first, second=args.second)
    a, b = _read_graph(args.first), _read_graph(args.second)
    phi = find_isomorphism(a, b)
    if phi is not None:
        _write(" ".join(map(str, phi)) + "\n")
    rep.check("isomorphic", phi is not None)
    rep.emit()
    return EXIT_OK if phi is not None else EXIT_FINDING


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hexcover", description="Cubic graphs with 6-cycle double covers.")
    sub = p.add_subparsers(dest="command", required=True)

    def catalog_opt(sp):
        sp.add_argument("--catalog", help="catalog file (default: the packaged catalog)")

    sp = sub.add_parser("derive-seeds", help="derive the seed catalog and check its anchors")
    sp.add_argument("--out", default="hexcover-catalog.txt", help="output file, '-' for stdout")
    sp.set_defaults(func=cmd_derive_seeds)

    sp = sub.add_parser("generate", help="generate every graph of one girth up to a size")
    sp.add_argument("--girth", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--with-cdc", action="store_true")
    sp.add_argument("--with-ham", action="store_true")
    sp.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    catalog_opt(sp)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("oracle", help="find 6-CDCs of graph6 graphs by exhaustive search")
    sp.add_argument("input", help="graph6 file, '-' for stdin")
    sp.add_argument("--mode", choices=("first", "all"), default="first")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="check a 6-CDC and the structure theorems")
    sp.add_argument("graph")
    sp.add_argument("cdc")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("crosscheck", help="compare generator output with the oracle on all cubic graphs")
    sp.add_argument("--max-n", type=int, default=14)
    sp.add_argument("--cache-dir", help="directory for cubic graph corpus files")
    catalog_opt(sp)
    sp.set_defaults(func=cmd_crosscheck)

    sp = sub.add_parser("circulant", help="Moebius ladders, tori, circulants and MCSD labelings")
    sp.add_argument("family", choices=("mobius", "torus", "circulant", "families"))
    sp.add_argument("n", type=int, help="vertex count (for families: the largest n)")
    sp.add_argument("--s", type=int, help="circulant generator besides n/2")
    sp.add_argument("--mcsd", action="store_true", help="also search a minimal chordal labeling")
    sp.add_argument("--stream", action="store_true", help="families: also check generator membership")
    catalog_opt(sp)
    sp.set_defaults(func=cmd_circulant)

    sp = sub.add_parser("reduce", help="reduce a graph and 6-CDC to a base instance")
    sp.add_argument("graph")
    sp.add_argument("cdc")
    catalog_opt(sp)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("iso", help="test two graphs for isomorphism")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_iso)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (AssertionError, RuntimeError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
