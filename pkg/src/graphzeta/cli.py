"""Command-line front end: ``graphzeta COMMAND [options]``.

Exit codes: 0 success/match, 1 usage or parse error, 2 mismatch,
3 resource guard exceeded, 4 rejected combination.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import format_poly
from .io import SpecError, parse_graph_spec, parse_spec, parse_weight
from .paths import (
    DEFAULT_MAX_PATHS,
    ResourceLimitError,
    euler_expression_truncated,
    exp_expression_truncated,
    hashimoto_series,
    lyndon_words,
    n_m_sequence,
)
from .weights import AdjacencyKind, Preset, check_adjacency_condition, edge_matrix
from .zeta import (
    CLASSICAL_VARIANTS,
    NotSimpleGraphError,
    classical_closed_forms,
    hashimoto_polynomial,
    ihara_polynomial,
    weighted_matrix,
)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_RESOURCE, EXIT_REJECTED = 0, 1, 2, 3, 4
COMMANDS = ("hashimoto", "ihara", "verify", "series", "nm", "lyndon", "classical")


class UsageError(Exception):
    pass


class RejectedCombination(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class CommandConfig:
    command: str
    input: str | None = None
    scheme: str | None = None
    eval_q: str | None = None
    order: int = 10
    fmt: str = "human"
    max_paths: int = DEFAULT_MAX_PATHS
    alphabet: int = 2
    reduced: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.order < 0:
            raise UsageError("-T must be non-negative")
        if self.max_paths <= 0:
            raise UsageError("--max-paths must be positive")
        if self.alphabet <= 0:
            raise UsageError("--alphabet must be positive")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="graphzeta",
                description="Exact zeta functions of Bartholdi type on finite digraphs.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", "-i", help="digraph (or graph, for 'classical') JSON document")
    p.add_argument("--scheme", help="override the document's preset (or classical variant)")
    p.add_argument("--eval-q", dest="eval_q", metavar="RAT", help="substitute q = RAT")
    p.add_argument("-T", dest="order", type=int, default=10, metavar="ORDER",
                   help="truncation order / maximum length (default 10)")
    p.add_argument("--format", dest="fmt", choices=("human", "coeffs", "json"), default="human")
    p.add_argument("--max-paths", dest="max_paths", type=int, default=DEFAULT_MAX_PATHS,
                   help="refuse path enumeration when |A|^m exceeds this")
    p.add_argument("--alphabet", type=int, default=2, help="alphabet size for 'lyndon'")
    p.add_argument("--reduced", action="store_true", help="restrict to reduced closed paths")
    return p


def parse_args(argv) -> CommandConfig:
    ns = build_parser().parse_args(argv)
    return CommandConfig(ns.command, ns.input, ns.scheme, ns.eval_q, ns.order, ns.fmt,
                         ns.max_paths, ns.alphabet, ns.reduced)


# -- output helpers -----------------------------------------------------------

def _coeffs(field, values) -> list[str]:
    return [field.format(c) for c in values]


def _poly_coeffs(p) -> list[str]:
    return _coeffs(p.field, p.coeffs) if p.coeffs else ["0"]


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _read(path: str | None) -> str:
    if path is None:
        raise UsageError("this command needs --input FILE")
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _load_spec(cfg: CommandConfig):
    spec = parse_spec(_read(cfg.input), preset=cfg.scheme, eval_q=cfg.eval_q)
    if cfg.reduced and cfg.command in ("hashimoto", "ihara", "verify", "series"):
        s = spec.scheme
        if s.preset is Preset.BOWEN_LANFORD:
            raise RejectedCombination(
                "Bowen-Lanford weights over reduced paths do not satisfy the path condition; "
                "there is no Hashimoto/Ihara expression for this combination")
        if check_adjacency_condition(spec.digraph, edge_matrix(spec.digraph, s)) \
                is not AdjacencyKind.REDUCED_ADJACENCY:
            raise RejectedCombination(
                f"{s.describe()} weights do not satisfy the reduced adjacency condition; "
                "the reduced zeta has no Hashimoto/Ihara expression here")
    return spec


# -- commands -----------------------------------------------------------------

def _cmd_poly(cfg, which):
    spec = _load_spec(cfg)
    d, s = spec.digraph, spec.scheme
    poly = hashimoto_polynomial(d, s) if which == "hashimoto" else ihara_polynomial(d, s)
    if cfg.fmt == "json":
        return EXIT_OK, _dump({which: _poly_coeffs(poly), "scheme": s.describe()})
    if cfg.fmt == "coeffs":
        return EXIT_OK, ",".join(_poly_coeffs(poly)) + "\n"
    return EXIT_OK, f"scheme: {s.describe()}\n{which}: {format_poly(poly)}\n"


def _cmd_verify(cfg):
    spec = _load_spec(cfg)
    d, s = spec.digraph, spec.scheme
    h = hashimoto_polynomial(d, s)
    i = ihara_polynomial(d, s)
    ok = h == i
    code = EXIT_OK if ok else EXIT_MISMATCH
    if cfg.fmt == "json":
        return code, _dump({"hashimoto": _poly_coeffs(h), "ihara": _poly_coeffs(i),
                            "match": ok, "scheme": s.describe(), "T": None})
    if cfg.fmt == "coeffs":
        return code, (",".join(_poly_coeffs(h)) + "\n" + ",".join(_poly_coeffs(i)) + "\n"
                      + ("MATCH" if ok else "MISMATCH") + "\n")
    lines = [f"scheme: {s.describe()}",
             f"arcs: {d.arc_count}, vertices: {d.vertex_count}",
             f"hashimoto: {format_poly(h)}",
             f"ihara:     {format_poly(i)}",
             "MATCH" if ok else "MISMATCH"]
    return code, "\n".join(lines) + "\n"


def _cmd_series(cfg):
    spec = _load_spec(cfg)
    d, s, T = spec.digraph, spec.scheme, cfg.order
    exp_s = exp_expression_truncated(d, s, T, cfg.reduced, cfg.max_paths)
    eul_s = euler_expression_truncated(d, s, T, cfg.reduced, cfg.max_paths)
    hash_s = hashimoto_series(d, s, T)
    f = s.field
    rows = {"exp": _coeffs(f, exp_s.coeffs), "euler": _coeffs(f, eul_s.coeffs),
            "hashimoto": _coeffs(f, hash_s.coeffs)}
    ok = exp_s == eul_s == hash_s
    code = EXIT_OK if ok else EXIT_MISMATCH
    if cfg.fmt == "json":
        return code, _dump({**rows, "match": ok, "scheme": s.describe(), "T": T})
    if cfg.fmt == "coeffs":
        return code, "".join(",".join(r) + "\n" for r in rows.values())
    lines = [f"scheme: {s.describe()}", f"T: {T}"]
    lines += [f"{k + ':':<10} {','.join(v)}" for k, v in rows.items()]
    lines.append("AGREE" if ok else "DISAGREE")
    return code, "\n".join(lines) + "\n"


def _cmd_nm(cfg):
    spec = _load_spec(cfg)
    d, s = spec.digraph, spec.scheme
    vals = n_m_sequence(d, s, cfg.order, cfg.reduced, cfg.max_paths) if cfg.order else []
    out = _coeffs(s.field, vals)
    if cfg.fmt == "json":
        return EXIT_OK, _dump({"N": out, "reduced": cfg.reduced, "scheme": s.describe(), "T": cfg.order})
    if cfg.fmt == "coeffs":
        return EXIT_OK, ",".join(out) + "\n"
    return EXIT_OK, "".join(f"N_{m} = {v}\n" for m, v in enumerate(out, start=1))


def _cmd_lyndon(cfg):
    if cfg.order < 1:
        raise UsageError("lyndon needs -T >= 1")
    words = lyndon_words(cfg.alphabet, cfg.order)
    sep = "" if cfg.alphabet <= 9 else "."
    text = [sep.join(str(x) for x in w) for w in words]
    if cfg.fmt == "json":
        return EXIT_OK, _dump({"words": [list(w) for w in words], "alphabet": cfg.alphabet, "T": cfg.order})
    return EXIT_OK, "; ".join(text) + "\n"


def _cmd_classical(cfg):
    g = parse_graph_spec(_read(cfg.input))
    variant = (cfg.scheme or "IHARA").upper()
    if variant not in CLASSICAL_VARIANTS:
        raise UsageError(f"unknown classical variant {variant!r}; expected one of {', '.join(CLASSICAL_VARIANTS)}")
    W = None
    if variant in ("MIZUNO_SATO", "SATO") or (variant == "BOWEN_LANFORD" and g.graph.is_simple()):
        W = weighted_matrix(g.graph, g.weights, g.field)
    q = None
    if cfg.eval_q is not None:
        q, uses_q = parse_weight(cfg.eval_q)
        if uses_q:
            raise UsageError("--eval-q must be a rational number")
    poly = classical_closed_forms(g.graph, variant, W=W, q=q)
    if cfg.fmt == "json":
        return EXIT_OK, _dump({"classical": _poly_coeffs(poly), "variant": variant})
    if cfg.fmt == "coeffs":
        return EXIT_OK, ",".join(_poly_coeffs(poly)) + "\n"
    return EXIT_OK, f"variant: {variant}\nclassical: {format_poly(poly)}\n"


def run_command(cfg: CommandConfig) -> tuple[int, str]:
    """Run one command; returns ``(exit_code, text)`` without touching stdout."""
    try:
        if cfg.command in ("hashimoto", "ihara"):
            return _cmd_poly(cfg, cfg.command)
        return {"verify": _cmd_verify, "series": _cmd_series, "nm": _cmd_nm,
                "lyndon": _cmd_lyndon, "classical": _cmd_classical}[cfg.command](cfg)
    except (SpecError, UsageError, NotSimpleGraphError) as e:
        return EXIT_USAGE, f"error: {e}\n"
    except ResourceLimitError as e:
        return EXIT_RESOURCE, f"error: {e}\n"
    except RejectedCombination as e:
        return EXIT_REJECTED, f"error: {e}\n"


def main(argv=None) -> int:
    try:
        cfg = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as e:
        sys.stderr.write(f"graphzeta: error: {e}\n")
        return EXIT_USAGE
    code, text = run_command(cfg)
    (sys.stdout if code in (EXIT_OK, EXIT_MISMATCH) else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
