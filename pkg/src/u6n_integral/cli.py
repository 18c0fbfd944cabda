"""Command-line front end.

Exit codes: 0 decided, 1 invalid input, 2 internal-consistency failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import families as fam
from .characters import char_table
from .group import ConnectionSet, InvalidConnectionSet, ParameterError
from .integrality import ConsistencyError, atom_decomposition, atoms, decide, is_integral_set_cyclic
from .search import census
from .spectral import babai_spectrum, brute_spectrum, exact_integer_spectrum

__all__ = ["RunConfig", "UsageError", "parse_args", "run", "main"]

EXIT_OK, EXIT_INPUT, EXIT_CONSISTENCY = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        raise UsageError(message)


@dataclass
class RunConfig:
    subcommand: str
    n: int | None = None
    order: int | None = None
    set_text: str = ""
    S: ConnectionSet | None = None
    exponents: list[int] = field(default_factory=list)
    fmt: str = "text"
    method: str = "babai"
    family_id: str | None = None
    param: int | None = None
    verify: bool = False
    connected_only: bool = False
    sample: int | None = None
    seed: int = 0
    workers: int = 1
    cross_check: bool = False


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="u6n", description="Integral Cayley graphs over U_6n = <a,b | a^2n = b^3 = 1, a^-1 b a = b^-1>")
    sub = p.add_subparsers(dest="subcommand", required=True)

    t = sub.add_parser("table", help="print the character table")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--json", action="store_true")

    s = sub.add_parser("spectrum", help="spectrum of Cay(U_6n, S)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--set", dest="set_text", required=True, help='comma-separated elements, e.g. "a^1,a^3,b^1,b^2"')
    s.add_argument("--method", choices=["babai", "brute", "exact"], default="babai")
    s.add_argument("--json", action="store_true")

    c = sub.add_parser("check", help="decide integrality")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--set", dest="set_text", required=True)
    c.add_argument("--json", action="store_true")
    c.add_argument("--cross-check", action="store_true", help="also run every applicable criterion and the exact oracle")

    b = sub.add_parser("boolean", help="Boolean-algebra membership in a cyclic group")
    b.add_argument("--order", type=int, required=True)
    b.add_argument("--set", dest="set_text", required=True, help="comma-separated exponents of the generator")
    b.add_argument("--json", action="store_true")

    f = sub.add_parser("family", help="build one of the explicit integral families")
    f.add_argument("--id", dest="family_id", required=True, choices=list(fam.FAMILIES) + [f"cor-{x}" for x in fam.FAMILIES[1:]])
    f.add_argument("--param", type=int, required=True)
    f.add_argument("--verify", action="store_true")
    f.add_argument("--json", action="store_true")

    r = sub.add_parser("search", help="census of connection sets")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--connected-only", action="store_true")
    r.add_argument("--sample", type=int, default=None)
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--workers", type=int, default=1)
    out = r.add_mutually_exclusive_group()
    out.add_argument("--csv", action="store_true")
    out.add_argument("--json", action="store_true")
    return p


def parse_args(argv: Sequence[str]) -> RunConfig:
    """Parse and validate; raises UsageError naming the offending flag."""
    ns = _build_parser().parse_args(list(argv))
    cfg = RunConfig(subcommand=ns.subcommand)
    cfg.fmt = "json" if getattr(ns, "json", False) else ("csv" if getattr(ns, "csv", False) else "text")
    if hasattr(ns, "n"):
        if ns.n < 1:
            raise UsageError(f"--n must be >= 1, got {ns.n}")
        cfg.n = ns.n
    if ns.subcommand in ("spectrum", "check"):
        cfg.set_text = ns.set_text
        try:
            cfg.S = ConnectionSet.parse(ns.n, ns.set_text)
        except (ParameterError, InvalidConnectionSet) as exc:
            raise UsageError(f"--set: {exc}") from None
    if ns.subcommand == "spectrum":
        cfg.method = ns.method
    if ns.subcommand == "check":
        cfg.cross_check = ns.cross_check
    if ns.subcommand == "boolean":
        if ns.order < 1:
            raise UsageError(f"--order must be >= 1, got {ns.order}")
        cfg.order = ns.order
        cfg.set_text = ns.set_text
        try:
            cfg.exponents = sorted({int(tok) for tok in ns.set_text.split(",") if tok.strip()})
        except ValueError:
            raise UsageError(f"--set: exponents must be integers, got {ns.set_text!r}") from None
        bad = [e for e in cfg.exponents if not 0 <= e < ns.order]
        if bad:
            raise UsageError(f"--set: exponents {bad} outside [0, {ns.order})")
    if ns.subcommand == "family":
        cfg.family_id, cfg.param, cfg.verify = ns.family_id, ns.param, ns.verify
        try:
            fam.family(cfg.family_id, cfg.param)
        except ParameterError as exc:
            raise UsageError(f"--param: {exc}") from None
    if ns.subcommand == "search":
        if ns.sample is not None and ns.sample < 0:
            raise UsageError("--sample must be non-negative")
        if ns.workers < 1:
            raise UsageError("--workers must be >= 1")
        cfg.connected_only, cfg.sample, cfg.seed, cfg.workers = ns.connected_only, ns.sample, ns.seed, ns.workers
    return cfg


def _power(coef: int, expo: int) -> str:
    if coef == 0:
        return "0"
    base = "1" if expo == 0 else ("w" if expo == 1 else f"w^{expo}")
    if coef == 1:
        return base
    if coef == -1:
        return f"-{base}"
    return str(coef) if expo == 0 else f"{coef}{base}"


def _table(cfg: RunConfig) -> tuple[int, Any]:
    tab = char_table(cfg.n)
    reps = [cls[0] for cls in tab.classes]
    rows = []
    for ch in tab.rows:
        vals = [(int(ch.coef[x.index]), int(ch.expo[x.index])) for x in reps]
        rows.append({"name": ch.name, "degree": ch.degree, "values": [{"coef": c, "exp": e} for c, e in vals]})
    data = {
        "n": cfg.n,
        "root": f"w = exp(pi i / {cfg.n})",
        "classes": [{"representative": str(c[0]), "size": len(c)} for c in tab.classes],
        "characters": rows,
    }
    if cfg.fmt == "json":
        return EXIT_OK, data
    header = [""] + [f"{c['representative']} ({c['size']})" for c in data["classes"]]
    body = [[r["name"]] + [_power(v["coef"], v["exp"]) for v in r["values"]] for r in rows]
    widths = [max(len(row[k]) for row in [header] + body) for k in range(len(header))]
    lines = [data["root"]]
    for row in [header] + body:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return EXIT_OK, "\n".join(lines)


def _spectrum(cfg: RunConfig) -> tuple[int, Any]:
    S = cfg.S
    if cfg.method == "babai":
        spec = babai_spectrum(S)
        integral = spec.is_exact
    elif cfg.method == "brute":
        spec = brute_spectrum(S)
        integral = spec.is_integral()
    else:
        spec = exact_integer_spectrum(S)
        integral = spec is not None
    data = {
        "n": cfg.n,
        "set": str(S),
        "method": cfg.method,
        "integral": integral,
        "spectrum": [] if spec is None else spec.to_list(),
    }
    if cfg.fmt == "json":
        return EXIT_OK, data
    shown = "does not split over the integers" if spec is None else str(spec)
    return EXIT_OK, f"n={cfg.n} S={{{S}}} method={cfg.method}\nintegral: {integral}\nspectrum: {shown}"


def _check(cfg: RunConfig) -> tuple[int, Any]:
    report = decide(cfg.S, cross_check=cfg.cross_check)
    data = {"n": cfg.n, "set": str(cfg.S), **report.to_dict()}
    if cfg.fmt == "json":
        return EXIT_OK, data
    lines = [f"n={cfg.n} S={{{cfg.S}}}", f"integral: {report.verdict}", f"criterion: {report.criterion}"]
    for msg in report.diagnostics.get("failures", []):
        lines.append(f"  - {msg}")
    return EXIT_OK, "\n".join(lines)


def _boolean(cfg: RunConfig) -> tuple[int, Any]:
    member = is_integral_set_cyclic(cfg.exponents, cfg.order)
    data = {
        "order": cfg.order,
        "set": cfg.exponents,
        "member": member,
        "decomposition": atom_decomposition(cfg.exponents, cfg.order),
        "atoms": {str(d): a for d, a in atoms(cfg.order).items()},
    }
    if cfg.fmt == "json":
        return EXIT_OK, data
    lines = [f"Z_{cfg.order}, T={cfg.exponents}", f"member: {member}"]
    if member:
        lines.append("atoms (element orders): " + ", ".join(map(str, data["decomposition"])))
    return EXIT_OK, "\n".join(lines)


def _family(cfg: RunConfig) -> tuple[int, Any]:
    spec = fam.family(cfg.family_id, cfg.param)
    data: dict[str, Any] = {
        "id": spec.id,
        "param": spec.param,
        "n": spec.n,
        "set": str(spec.S),
        "size": len(spec.S),
        "predicted": spec.predicted.to_list(),
    }
    code = EXIT_OK
    if cfg.verify:
        rep = fam.family_report(spec)
        data["verification"] = rep
        if not rep["ok"]:
            code = EXIT_CONSISTENCY
    if cfg.fmt == "json":
        return code, data
    lines = [f"family {spec.id}, parameter {spec.param}: n={spec.n}, |S|={len(spec.S)}", f"S = {{{spec.S}}}", f"predicted: {spec.predicted}"]
    if cfg.verify:
        rep = data["verification"]
        lines += [f"babai:     {rep['babai']}", f"exact:     {rep['exact']}", f"connected: {rep['connected']}", f"verified:  {rep['ok']}"]
    return code, "\n".join(lines)


def _search(cfg: RunConfig) -> tuple[int, Any]:
    rows = census(cfg.n, sample=cfg.sample, seed=cfg.seed, connected_only=cfg.connected_only, workers=cfg.workers)
    mode = "exhaustive" if cfg.sample is None else "sample"
    if cfg.fmt == "json":
        return EXIT_OK, {
            "n": cfg.n,
            "mode": mode,
            "sample": cfg.sample,
            "seed": cfg.seed if cfg.sample is not None else None,
            "connected_only": cfg.connected_only,
            "rows": [r.to_dict() for r in rows],
        }
    if cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["set", "size", "connected", "integral", "criterion", "spectrum"])
        for r in rows:
            w.writerow([r.set, r.size, r.connected, r.integral, r.criterion, r.spectrum or ""])
        return EXIT_OK, buf.getvalue().rstrip("\n")
    integral = sum(r.integral for r in rows)
    head = f"n={cfg.n} mode={mode}" + (f" seed={cfg.seed}" if cfg.sample is not None else "")
    lines = [head, f"sets: {len(rows)}  integral: {integral}  connected: {sum(r.connected for r in rows)}"]
    for r in rows:
        lines.append(f"{'I' if r.integral else '-'} {'C' if r.connected else '-'} {r.criterion:<10} {{{r.set}}}")
    return EXIT_OK, "\n".join(lines)


_DISPATCH = {
    "table": _table,
    "spectrum": _spectrum,
    "check": _check,
    "boolean": _boolean,
    "family": _family,
    "search": _search,
}


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        code, payload = _DISPATCH[cfg.subcommand](cfg)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (ParameterError, InvalidConnectionSet) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if isinstance(payload, str):
        print(payload, file=out)
    else:
        print(json.dumps(payload, indent=2), file=out)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
