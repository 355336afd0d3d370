"""Command-line front end: ``parfus <command> --group SPEC [options]``."""
from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__
from .blocks import blocks, decomposition_json, format_wedderburn, format_wedderburn_md, verify_blocks, wedderburn_summary
from .fusion import fusion_table, label_name, to_csv, to_markdown, unit_decomposition, verify_fusion
from .functors import FunctorReport, christmas_verify, matryoshka_verify
from .group_core import (
    DEFAULT_CAP,
    CapExceeded,
    FiniteGroup,
    GroupError,
    Subgroup,
    check_cap,
    elementary_decomposition,
    from_cayley,
    make_cyclic,
    make_dicyclic,
    make_dihedral,
    make_direct_product,
    make_symmetric,
    subgroup_from_generators,
    subgroups,
)
from .groupoid import dimension, verify_foundations
from .rep_theory import simple_labels, simples_json, verify_simples
from .report import Report, merge
from .subsets import fundamental_domain
from .weak_hopf import verify_lambda_hopf_algebroid, verify_weak_hopf

COMMANDS = ("info", "decompose", "simples", "fusion", "verify", "christmas", "matryoshka")
FORMATS = ("json", "md", "csv")
SUITES = ("foundations", "weakhopf", "blocks", "simples", "fusion", "all")
CACHE_VERSION = 1

# default order caps per exhaustive suite; --cap overrides all of them
SUITE_CAPS = {"foundations": 8, "weakhopf": 6, "blocks": 8, "simples": 8, "fusion": 8}
FUNCTOR_CAP = 12


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    group_spec: str
    format: str = "json"
    suite: str = "all"
    subgroup: str | None = None
    cap: int | None = None
    cache_dir: str | None = None


def parse_group_spec(spec: str) -> FiniteGroup:
    kind, sep, arg = spec.partition(":")
    if not sep or not arg:
        raise UsageError(f"bad group spec {spec!r}: expected KIND:ARG")
    try:
        if kind == "cyclic":
            return make_cyclic(int(arg))
        if kind == "product":
            parts = [int(p) for p in arg.split("x")]
            if len(parts) < 2:
                raise UsageError("product needs at least two factors, e.g. product:2x2")
            G = make_cyclic(parts[0])
            for n in parts[1:]:
                G = make_direct_product(G, make_cyclic(n))
            return G
        if kind == "sym":
            return make_symmetric(int(arg))
        if kind == "dihedral":
            return make_dihedral(int(arg))
        if kind == "dicyclic":
            return make_dicyclic(int(arg))
        if kind == "file":
            return _load_cayley(Path(arg))
    except ValueError as exc:
        if isinstance(exc, GroupError):
            raise
        raise UsageError(f"bad group spec {spec!r}: {exc}") from exc
    raise UsageError(f"unknown group kind {kind!r} (cyclic, product, sym, dihedral, dicyclic, file)")


def _load_cayley(path: Path) -> FiniteGroup:
    try:
        data = json.loads(path.read_text())
    except FileNotFoundError as exc:
        raise UsageError(f"group file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {path}: {exc}") from exc
    if not isinstance(data, dict) or "table" not in data:
        raise UsageError(f"{path}: expected an object with a 'table' field")
    table = data["table"]
    if "order" in data and data["order"] != len(table):
        raise UsageError(f"{path}: order {data['order']} does not match table size {len(table)}")
    return from_cayley(table, label=data.get("label", path.stem))


def parse_subgroup(G: FiniteGroup, spec: str) -> Subgroup:
    kind, sep, arg = spec.partition(":")
    if kind != "gens" or not sep:
        raise UsageError(f"bad subgroup spec {spec!r}: expected gens:i,j,...")
    try:
        gens = [int(x) for x in arg.split(",") if x.strip()] if arg else []
    except ValueError as exc:
        raise UsageError(f"bad subgroup spec {spec!r}: {exc}") from exc
    if any(not 0 <= g < G.order for g in gens):
        raise UsageError(f"generator index out of range 0..{G.order - 1}")
    return subgroup_from_generators(G, gens)


# ---------------------------------------------------------------------------
# emitters


def _json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def _md_table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(v) for v in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def _csv_table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _table(fmt: str, header, rows) -> str:
    return _md_table(header, rows) if fmt == "md" else _csv_table(header, rows)


def _cmd_info(G: FiniteGroup, cfg: RunConfig, cap: int) -> tuple[int, str]:
    T = fundamental_domain(G, cap)
    count, formula = dimension(G, cap)
    data = {
        "group": cfg.group_spec,
        "label": G.label,
        "order": G.order,
        "abelian": G.is_abelian,
        "elements": [G.name(g) for g in range(G.order)],
        "e_subsets": 1 << (G.order - 1),
        "orbits": len(T.reps),
        "subgroups": len(subgroups(G, cap)),
        "dim": count,
        "dim_formula": formula,
    }
    if G.is_abelian:
        data["elementary_divisors"] = [
            {"p": p, "n": n, "generator": a} for p, n, a in elementary_decomposition(G).components
        ]
    if cfg.format == "json":
        return 0, _json(data)
    rows = [(k, json.dumps(v, ensure_ascii=False)) for k, v in data.items()]
    return 0, _table(cfg.format, ("field", "value"), rows)


def _cmd_decompose(G: FiniteGroup, cfg: RunConfig, cap: int) -> tuple[int, str]:
    data = decomposition_json(G, cfg.group_spec, cap)
    if cfg.format == "json":
        data["summary"] = format_wedderburn(data["wedderburn"])
        return 0, _json(data)
    rows = [
        (G.format_set(b.X), b.n, b.isotropy.order, b.dim)
        for b in blocks(G, cap)
    ]
    out = _table(cfg.format, ("X", "n", "isotropy order", "dim"), rows)
    summary = format_wedderburn_md(wedderburn_summary(G, cap))
    if cfg.format == "md":
        return 0, out + f"\ndim = {data['dim']}\n\n{summary}\n"
    return 0, out


def _cmd_simples(G: FiniteGroup, cfg: RunConfig, cap: int) -> tuple[int, str]:
    if cfg.format == "json":
        return 0, _json(simples_json(G, cap))
    labels = simple_labels(G, cap)
    rows = [(label_name(G, lab), lab.X, lab.alpha, lab.dim) for lab in labels]
    out = _table(cfg.format, ("module", "X", "alpha", "dim"), rows)
    if cfg.format == "md":
        total = sum(lab.dim ** 2 for lab in labels)
        units = " ⊕ ".join(label_name(G, u) for u in unit_decomposition(G, cap))
        out += f"\nsum of dim^2 = {total}\n\nunit = {units}\n"
    return 0, out


def _cmd_fusion(G: FiniteGroup, cfg: RunConfig, cap: int) -> tuple[int, str]:
    table = fusion_table(G, cap)
    if cfg.format == "json":
        return 0, _json(table.to_json())
    return 0, to_markdown(table) if cfg.format == "md" else to_csv(table)


def _suite_reports(G: FiniteGroup, suite: str, override: int | None) -> list[Report]:
    names = [s for s in SUITES if s != "all"] if suite == "all" else [suite]
    out = []
    for name in names:
        cap = override if override is not None else SUITE_CAPS[name]
        check_cap(G, cap, f"{name} suite")
        if name == "foundations":
            out.append(verify_foundations(G, cap))
        elif name == "weakhopf":
            out.append(verify_weak_hopf(G, cap))
            out.append(verify_lambda_hopf_algebroid(G, 3, cap))
        elif name == "blocks":
            out.append(verify_blocks(G, cap))
        elif name == "simples":
            out.append(verify_simples(G, cap))
        elif name == "fusion":
            out.append(verify_fusion(G, cap))
    return out


def _emit_report(rep: Report, fmt: str) -> str:
    if fmt == "json":
        return _json({"subject": rep.subject, "status": "pass" if rep.passed else "fail", "checks": rep.to_json()})
    rows = [
        (c.axiom, c.status, c.cases, json.dumps(c.counterexample, ensure_ascii=False) if c.counterexample else "")
        for c in rep.checks
    ]
    return _table(fmt, ("axiom", "status", "cases", "counterexample"), rows)


def _cmd_verify(G: FiniteGroup, cfg: RunConfig, cap: int) -> tuple[int, str]:
    rep = merge(f"{cfg.suite} {cfg.group_spec}", _suite_reports(G, cfg.suite, cfg.cap))
    return (0 if rep.passed else 1), _emit_report(rep, cfg.format)


def _emit_functors(reports: list[FunctorReport], fmt: str) -> tuple[int, str]:
    ok = all(r.passed for r in reports)
    if fmt == "json":
        return (0 if ok else 1), _json([r.to_json() for r in reports])
    rows = []
    for r in reports:
        rows.append((r.name, "pass" if r.passed else "fail", r.pairs, r.injective, len(r.monoidal_failures)))
    return (0 if ok else 1), _table(fmt, ("functor", "status", "pairs", "injective", "monoidal_failures"), rows)


def _cmd_christmas(G: FiniteGroup, cfg: RunConfig, cap: int) -> tuple[int, str]:
    check_cap(G, cfg.cap or FUNCTOR_CAP, "christmas")
    hs = [parse_subgroup(G, cfg.subgroup)] if cfg.subgroup else subgroups(G, cap)
    return _emit_functors([christmas_verify(G, H) for H in hs], cfg.format)


def _cmd_matryoshka(G: FiniteGroup, cfg: RunConfig, cap: int) -> tuple[int, str]:
    if not cfg.subgroup:
        raise UsageError("matryoshka requires --subgroup gens:i,j,...")
    check_cap(G, cfg.cap or FUNCTOR_CAP, "matryoshka")
    if not G.is_abelian:
        raise UsageError(f"matryoshka needs an abelian group; {G.label} is not abelian")
    return _emit_functors([matryoshka_verify(G, parse_subgroup(G, cfg.subgroup))], cfg.format)


HANDLERS = {
    "info": _cmd_info,
    "decompose": _cmd_decompose,
    "simples": _cmd_simples,
    "fusion": _cmd_fusion,
    "verify": _cmd_verify,
    "christmas": _cmd_christmas,
    "matryoshka": _cmd_matryoshka,
}


# ---------------------------------------------------------------------------
# cache


def _cache_key(cfg: RunConfig) -> str:
    parts = [str(CACHE_VERSION), __version__, cfg.command, cfg.group_spec, cfg.format,
             cfg.suite, cfg.subgroup or "", str(cfg.cap)]
    if cfg.group_spec.startswith("file:"):
        path = Path(cfg.group_spec[5:])
        if path.exists():
            parts.append(hashlib.sha256(path.read_bytes()).hexdigest())
    return hashlib.sha256("\0".join(parts).encode()).hexdigest()


def _cache_load(cfg: RunConfig) -> tuple[int, str] | None:
    if not cfg.cache_dir:
        return None
    path = Path(cfg.cache_dir) / f"{_cache_key(cfg)}.json"
    try:
        data = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if data.get("version") != CACHE_VERSION:
        return None
    return data["code"], data["text"]


def _cache_store(cfg: RunConfig, code: int, text: str) -> None:
    if not cfg.cache_dir:
        return
    folder = Path(cfg.cache_dir)
    folder.mkdir(parents=True, exist_ok=True)
    path = folder / f"{_cache_key(cfg)}.json"
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"version": CACHE_VERSION, "code": code, "text": text}))
    tmp.replace(path)


def run(cfg: RunConfig) -> tuple[int, str]:
    """Execute one command; returns (exit code, document)."""
    if cfg.command not in HANDLERS:
        return 2, f"error: unknown command {cfg.command!r}\n"
    if cfg.format not in FORMATS:
        return 2, f"error: unknown format {cfg.format!r}\n"
    if cfg.suite not in SUITES:
        return 2, f"error: unknown suite {cfg.suite!r}\n"
    hit = _cache_load(cfg)
    if hit is not None:
        return hit
    try:
        G = parse_group_spec(cfg.group_spec)
        cap = cfg.cap if cfg.cap is not None else DEFAULT_CAP
        check_cap(G, cap, cfg.command)
        code, text = HANDLERS[cfg.command](G, cfg, cap)
    except (UsageError, CapExceeded, GroupError) as exc:
        return 2, f"error: {exc}\n"
    _cache_store(cfg, code, text)
    return code, text


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parfus", description="Partial group algebras of finite groups.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--group", required=True, help="cyclic:N | product:N1xN2[x...] | sym:N | dihedral:N | dicyclic:N | file:PATH")
    p.add_argument("--subgroup", help="subgroup by generator indices, e.g. gens:2")
    p.add_argument("--format", choices=FORMATS, default="json")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--cap", type=int, help="override the group-order cap of the command")
    p.add_argument("--cache", metavar="DIR", help="cache directory (default: $PARFUS_CACHE)")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def config_from_args(argv: Sequence[str] | None = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    cache = None if args.no_cache else (args.cache or os.environ.get("PARFUS_CACHE") or None)
    return RunConfig(
        command=args.command,
        group_spec=args.group,
        format=args.format,
        suite=args.suite,
        subgroup=args.subgroup,
        cap=args.cap,
        cache_dir=cache,
    )


def main(argv: Sequence[str] | None = None) -> int:
    cfg = config_from_args(argv)
    code, text = run(cfg)
    stream = sys.stderr if code == 2 else sys.stdout
    stream.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
