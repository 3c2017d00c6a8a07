"""Command-line front end: ``cyldim <command> [options]``."""
from __future__ import annotations

import argparse
import json
import os
import shlex
import sys
from collections import Counter
from dataclasses import dataclass

from .combinatorics import BoxShape, Partition, as_composition, degree
from .crystals import build_crystal_graph
from .dimers import (
    configurations_to_json,
    count_from,
    enumerate_all,
    enumerate_configurations,
    crossing_profile_from,
)
from .errors import BudgetExceeded, DomainError, InvariantViolation
from .qcohomology import gw_rows, kostka_rows, rows_to_json, rows_to_tsv, toric_rows, toric_schur
from .render import render_svg

DEFAULT_BUDGET = 100_000
COMMANDS = ("enumerate", "count", "kostka", "gw", "toric", "verify", "render", "crystal")
FORMATS = ("json", "tsv", "svg", "dot")


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int | None = None
    k: int | None = None
    mu: str | None = None
    nu: str | None = None
    lam: str | None = None
    d: int | None = None
    output: str = "-"
    format: str | None = None
    budget: int = DEFAULT_BUDGET
    index: int = 0
    suites: tuple[int, ...] = ()
    verbose: bool = False

    def __post_init__(self):
        if self.budget <= 0:
            raise DomainError(f"budget must be positive, got {self.budget}")
        if self.n is not None:
            BoxShape(self.k if self.k is not None else 0, self.n)


def parse_parts(text: str | None, what: str) -> tuple[int, ...]:
    if text is None:
        raise DomainError(f"--{what} is required")
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise DomainError(f"--{what}: cannot parse {text!r} as comma-separated integers") from None


def _box(cfg: RunConfig) -> BoxShape:
    if cfg.n is None or cfg.k is None:
        raise DomainError("--n and --k are required")
    return BoxShape(cfg.k, cfg.n)


def _partition(cfg: RunConfig, attr: str, box: BoxShape) -> Partition:
    return Partition(parse_parts(getattr(cfg, attr), "lambda" if attr == "lam" else attr), box)


def _format(cfg: RunConfig, default: str, allowed: tuple[str, ...]) -> str:
    fmt = cfg.format or default
    if fmt not in allowed:
        raise DomainError(f"{cfg.command} supports --format {'/'.join(allowed)}, not {fmt}")
    return fmt


def _tsv(rows: list[tuple]) -> str:
    return "".join("\t".join(map(str, r)) + "\n" for r in rows)


def cmd_enumerate(cfg: RunConfig) -> str:
    box = _box(cfg)
    mu, nu = _partition(cfg, "mu", box), _partition(cfg, "nu", box)
    alpha = as_composition(parse_parts(cfg.lam, "lambda"), box)
    configs = enumerate_configurations(mu, nu, alpha, budget=cfg.budget)
    if _format(cfg, "json", ("json", "tsv")) == "json":
        return configurations_to_json(configs) + "\n"
    rows = [("levels", "dimers", "crossings")]
    for c in configs:
        data = c.to_json()
        rows.append((" ".join(data["levels"]), " ".join(r["dimers"] for r in data["rows"]), c.crossings))
    return _tsv(rows)


def cmd_count(cfg: RunConfig) -> str:
    box = _box(cfg)
    mu, nu = _partition(cfg, "mu", box), _partition(cfg, "nu", box)
    if cfg.lam is None:
        classes = enumerate_all(mu, nu)
        payload = {"count": sum(classes.values()), "classes": {str(a): v for a, v in classes.items()}}
        rows = [("count", payload["count"])] + [("class", a, v) for a, v in payload["classes"].items()]
    else:
        alpha = as_composition(parse_parts(cfg.lam, "lambda"), box)
        total = count_from(mu, alpha).get(nu, 0)
        hist = Counter(crossing_profile_from(mu).get((nu, alpha.parts), {}))
        payload = {
            "count": total,
            "degree": degree(alpha.size, mu, nu),
            "crossings": {str(d): c for d, c in sorted(hist.items())},
        }
        rows = [("count", total), ("degree", payload["degree"])]
        rows += [("crossings", d, c) for d, c in sorted(hist.items())]
    if _format(cfg, "tsv", ("json", "tsv")) == "json":
        return json.dumps(payload, indent=1, sort_keys=True) + "\n"
    return _tsv(rows)


def _table(cfg: RunConfig, rows: list[dict]) -> str:
    if cfg.nu is not None:
        want = str(_partition(cfg, "nu", _box(cfg)))
        rows = [r for r in rows if r["nu"] == want]
    if _format(cfg, "tsv", ("json", "tsv")) == "json":
        return rows_to_json(rows) + "\n"
    return rows_to_tsv(rows)


def cmd_kostka(cfg: RunConfig) -> str:
    box = _box(cfg)
    mu = _partition(cfg, "mu", box)
    return _table(cfg, kostka_rows(mu, as_composition(parse_parts(cfg.lam, "lambda"), box)))


def cmd_gw(cfg: RunConfig) -> str:
    box = _box(cfg)
    return _table(cfg, gw_rows(_partition(cfg, "mu", box), _partition(cfg, "lam", box)))


def cmd_toric(cfg: RunConfig) -> str:
    box = _box(cfg)
    mu, nu = _partition(cfg, "mu", box), _partition(cfg, "nu", box)
    if cfg.d is not None:
        ds = [cfg.d]
    else:
        ds = [d for d in range(box.k + 1) if 0 <= box.n * d + nu.size - mu.size <= box.k * box.width]
    rows = [row for d in ds for row in toric_rows(toric_schur(mu, nu, d))]
    if _format(cfg, "tsv", ("json", "tsv")) == "json":
        return rows_to_json(rows) + "\n"
    return rows_to_tsv(rows)


def cmd_render(cfg: RunConfig) -> str:
    _format(cfg, "svg", ("svg",))
    box = _box(cfg)
    mu, nu = _partition(cfg, "mu", box), _partition(cfg, "nu", box)
    configs = enumerate_configurations(mu, nu, parse_parts(cfg.lam, "lambda"), budget=cfg.budget)
    if not configs:
        raise DomainError("no configurations to render")
    if not 0 <= cfg.index < len(configs):
        raise DomainError(f"--index must lie in 0..{len(configs) - 1}")
    return render_svg(configs[cfg.index])


def cmd_crystal(cfg: RunConfig) -> str:
    if cfg.n is None:
        raise DomainError("--n is required")
    weights = parse_parts(cfg.lam, "lambda")
    for r in weights:
        if not 0 <= r <= cfg.n:
            raise DomainError(f"column weight {r} outside 0..{cfg.n}")
    graph = build_crystal_graph(weights, cfg.n, budget=cfg.budget)
    if _format(cfg, "dot", ("dot", "json")) == "dot":
        return graph.to_dot()
    return graph.to_json() + "\n"


HANDLERS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "kostka": cmd_kostka,
    "gw": cmd_gw,
    "toric": cmd_toric,
    "render": cmd_render,
    "crystal": cmd_crystal,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cyldim", description="Cylinder dimers, KR crystals and quantum cohomology.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--output", "-o", default="-", help="file path, or - for stdout")
        p.add_argument("--format", choices=FORMATS)
        p.add_argument("--budget", type=int, help=f"configuration/vertex cap (env CYLDIM_BUDGET, default {DEFAULT_BUDGET})")
        if name == "verify":
            p.add_argument("--suite", type=int, action="append", default=[], help="run only these criteria (repeatable)")
            p.add_argument("--verbose", "-v", action="store_true")
            continue
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=name != "crystal")
        p.add_argument("--mu")
        p.add_argument("--nu")
        p.add_argument("--lambda", dest="lam")
        if name == "toric":
            p.add_argument("--d", type=int)
        if name == "render":
            p.add_argument("--index", type=int, default=0, help="which configuration (sorted order) to draw")
    return parser


def default_budget() -> int:
    raw = os.environ.get("CYLDIM_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"CYLDIM_BUDGET={raw!r} is not an integer") from None


def _emit(text: str, output: str):
    if output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def run(cfg: RunConfig) -> int:
    if cfg.command == "verify":
        from .verify import report, run_all

        results = run_all(only=set(cfg.suites))
        _emit(report(results, verbose=cfg.verbose), cfg.output)
        return 0 if all(r.passed for r in results) else 1
    _emit(HANDLERS[cfg.command](cfg), cfg.output)
    return 0


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        budget = args.budget if args.budget is not None else default_budget()
        cfg = RunConfig(
            command=args.command,
            n=getattr(args, "n", None),
            k=getattr(args, "k", None),
            mu=getattr(args, "mu", None),
            nu=getattr(args, "nu", None),
            lam=getattr(args, "lam", None),
            d=getattr(args, "d", None),
            output=args.output,
            format=args.format,
            budget=budget,
            index=getattr(args, "index", 0),
            suites=tuple(getattr(args, "suite", ())),
            verbose=getattr(args, "verbose", False),
        )
        return run(cfg)
    except DomainError as err:
        print(f"cyldim: error: {err}", file=sys.stderr)
        return 2
    except BudgetExceeded as err:
        print(f"cyldim: budget exceeded: {err}", file=sys.stderr)
        return 3
    except InvariantViolation as err:
        print(f"cyldim: internal invariant violated: {err}", file=sys.stderr)
        print(f"reproduce with: cyldim {shlex.join(argv)}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
