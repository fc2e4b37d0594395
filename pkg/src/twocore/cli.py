"""Command-line front end.

Exit codes: 0 success, 1 runtime failure, 2 invalid configuration / usage.
Every file artifact is written atomically and gets a ``<path>.meta.json``
sidecar holding the full run configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Sequence

from .cores import er_branching_oracle, two_core
from .estimator import estimate, sample_size, sweep
from .generators import GeneratorSpec
from .graph import Graph, dump_edge_list, load_edge_list
from .percolation import draw_coupling, percolate_at, sprinkle

COMMANDS = ("gen", "percolate", "exact", "estimate", "sweep", "diagnose", "oracle")
SWEEP_HEADER = ["p", "I2", "I2inf", "frac_c2", "frac_c2max"]
PLOT_HEADER = SWEEP_HEADER + ["zeta2_oracle", "zeta2inf_oracle"]


class ConfigError(ValueError):
    """Invalid run configuration (exit status 2)."""


@dataclass
class RunConfig:
    command: str
    generator: dict | None = None  # GeneratorSpec as {model, params, seed}
    input: str | None = None
    percolation: dict = field(default_factory=dict)  # p | p_grid | p_low+p_high, seed
    estimator: dict = field(default_factory=dict)  # K, T | epsilon, mode, with_exact
    diagnose: dict = field(default_factory=dict)
    output: dict = field(default_factory=dict)  # format, path, samples, plot_data
    master_seed: int = 0
    oracle_lambda: float | None = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.command == "oracle":
            if self.oracle_lambda is None:
                raise ConfigError("oracle needs --lambda")
            return
        if (self.generator is None) == (self.input is None):
            raise ConfigError("give exactly one input source: --gen or --input")
        if self.command == "gen" and self.generator is None:
            raise ConfigError("gen needs --gen")
        if self.command in ("estimate", "sweep"):
            est = self.estimator
            if est.get("K") is None:
                raise ConfigError("--K is required")
            has_t, has_eps = est.get("T") is not None, est.get("epsilon") is not None
            if has_t == has_eps:
                raise ConfigError("give exactly one of --T and --epsilon")
        if self.command == "sweep" and not self.percolation.get("p_grid"):
            raise ConfigError("sweep needs --p-grid")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> "RunConfig":
        known = set(cls.__dataclass_fields__)
        extra = set(d) - known
        if extra:
            raise ConfigError(f"unknown config keys: {sorted(extra)}")
        return cls(**d)


def atomic_write(path: str | os.PathLike, data: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _fmt(x) -> str:
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return f"{float(x):.6g}"


def format_table(rows: Sequence[dict], header: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_fmt(r.get(h)) for h in header])
    return buf.getvalue()


def parse_table(text: str) -> list[dict]:
    rd = csv.DictReader(io.StringIO(text))
    return [{k: (float(v) if v != "" else None) for k, v in row.items()} for row in rd]


def emit_plot_data(table: Sequence[dict], path: str | os.PathLike | None = None,
                   mean_degree: float | None = None) -> str:
    """CSV with the fixed plot header; oracle columns filled when ``mean_degree`` is an ER c."""
    if not table:
        raise ValueError("empty table")
    rows = []
    for r in table:
        r = dict(r)
        if mean_degree is not None and r.get("zeta2inf_oracle") is None:
            z2 = er_branching_oracle(mean_degree * r["p"])[1]
            r["zeta2_oracle"] = r["zeta2inf_oracle"] = z2
        rows.append(r)
    text = format_table(rows, PLOT_HEADER)
    if path is not None:
        atomic_write(path, text)
    return text


def _load_graph(cfg: RunConfig) -> Graph:
    if cfg.generator is not None:
        return GeneratorSpec.from_json(cfg.generator).build()
    return load_edge_list(Path(cfg.input).read_bytes())


def _perc_seed(cfg: RunConfig) -> int:
    return int(cfg.percolation.get("seed", cfg.master_seed))


def _percolated(cfg: RunConfig, g: Graph) -> Graph:
    perc = cfg.percolation
    if perc.get("p_low") is not None and perc.get("p_high") is not None:
        c = draw_coupling(g, _perc_seed(cfg))
        return sprinkle(c, float(perc["p_low"]), float(perc["p_high"]), _perc_seed(cfg) + 1)
    p = perc.get("p")
    if p is None or float(p) == 1.0:
        return g
    return percolate_at(draw_coupling(g, _perc_seed(cfg)), float(p))


def _dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(cfg: RunConfig, text: str, path: str | None = None) -> None:
    path = path or cfg.output.get("path")
    if path:
        atomic_write(path, text)
        atomic_write(f"{path}.meta.json", cfg.to_json() + "\n")
    else:
        sys.stdout.write(text)


def _read_ids(path: str) -> list[int]:
    return [int(tok) for tok in Path(path).read_text().split() if not tok.startswith("#")]


def run(cfg: RunConfig) -> int:
    """Execute one pipeline; returns the process exit status."""
    cfg.validate()
    cmd = cfg.command
    if cmd == "oracle":
        z, z2 = er_branching_oracle(float(cfg.oracle_lambda))
        _emit(cfg, _dumps({"zeta": z, "zeta2inf": z2}))
        _summary(f"oracle lambda={cfg.oracle_lambda}: zeta={z:.6g} zeta2inf={z2:.6g}")
        return 0
    g = _load_graph(cfg)
    if cmd == "gen":
        _emit(cfg, dump_edge_list(g))
        _summary(f"gen: n={g.n} m={g.m}")
        return 0
    if cmd == "percolate":
        gp = _percolated(cfg, g)
        _emit(cfg, dump_edge_list(gp))
        _summary(f"percolate: n={gp.n} m={gp.m} (base m={g.m})")
        return 0
    if cmd == "exact":
        res = two_core(_percolated(cfg, g)).as_dict()
        _emit(cfg, _dumps(res))
        _summary(f"exact: frac_c2={res['frac_c2']:.6g} frac_c2max={res['frac_c2max']:.6g}")
        return 0
    if cmd == "diagnose":
        return _diagnose(cfg, g)
    est = cfg.estimator
    K = int(est["K"])
    eps = est.get("epsilon")
    T = int(est["T"]) if est.get("T") is not None else sample_size(float(eps))
    mode = {"literal": "paper_literal"}.get(est.get("mode", "semantic"), est.get("mode", "semantic"))
    if cmd == "estimate":
        gp = _percolated(cfg, g)
        rep = estimate(gp, K, T, cfg.master_seed, mode, epsilon=eps,
                       keep_samples=bool(cfg.output.get("samples")),
                       with_exact=bool(est.get("with_exact")))
        _emit(cfg, _dumps(rep.as_dict()))
        if cfg.output.get("samples"):
            rows = [{"vertex": v, "I2": a, "I2inf": b} for v, a, b in rep.per_sample.tolist()]
            text = format_table(rows, ["vertex", "I2", "I2inf"])
            _emit(cfg, text, cfg.output["samples"])
        _summary(f"estimate: I2={rep.I2:.6g} I2inf={rep.I2inf:.6g} (K={K}, T={T})")
        return 0
    if cmd == "sweep":
        grid = [float(p) for p in cfg.percolation["p_grid"]]
        rows = sweep(None, grid, K, T, cfg.master_seed, with_exact=est.get("with_exact", True),
                     mode=mode, graph=g)
        _emit(cfg, format_table(rows, SWEEP_HEADER))
        if cfg.output.get("plot_data"):
            c = None
            gen = cfg.generator
            if gen is not None and GeneratorSpec.from_json(gen).model == "erdos_renyi":
                c = float(gen["params"]["c"])
            text = emit_plot_data(rows, None, mean_degree=c)
            _emit(cfg, text, cfg.output["plot_data"])
        _summary(f"sweep: {len(rows)} rows")
        return 0
    raise ConfigError(cmd)


def _diagnose(cfg: RunConfig, g: Graph) -> int:
    from .diagnostics import (color_forest, edge_disjoint_paths, find_balanced_cut,
                              seed_core_experiment, verify_lemma6)

    d = cfg.diagnose
    out: dict[str, Any] = {}
    gp = _percolated(cfg, g)
    if d.get("cut_epsilon") is not None:
        w = find_balanced_cut(gp, float(d["cut_epsilon"]), int(d.get("iters", 20)), cfg.master_seed)
        out["cut"] = {"size_a": w.size_a, "size_b": w.size_b, "crossing": w.crossing,
                      "epsilon_level": w.epsilon_level, "delta_level": w.delta_level}
    if d.get("paths"):
        a, b = d["paths"]
        out["edge_disjoint_paths"] = edge_disjoint_paths(gp, _read_ids(a), _read_ids(b))
    if d.get("H") and d.get("ell"):
        cf = color_forest(gp, _read_ids(d["H"]), int(d["ell"]))
        rep = verify_lemma6(cf)
        out["upstream_ratio"] = {"checked": rep.checked, "exempt": rep.exempt,
                         "violations": len(rep.violations), "min_ratio": rep.min_ratio,
                         "segments": len(cf.segments)}
    if d.get("seed_core"):
        perc = cfg.percolation
        rep = seed_core_experiment(g, float(perc["p_low"]), float(perc["p_high"]),
                                   int(d.get("ell", 5)), _perc_seed(cfg))
        out["seed_core"] = rep.as_dict()
    if not out:
        raise ConfigError("diagnose needs --cut-epsilon, --paths, --H with --ell, or --seed-core")
    _emit(cfg, _dumps(out))
    _summary(f"diagnose: {', '.join(sorted(out))}")
    return 0


def _summary(line: str) -> None:
    print(line, file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twocore", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, source=True):
        p.add_argument("--config", help="JSON RunConfig; flags given explicitly override it")
        if source:
            p.add_argument("--gen", help="generator spec, e.g. er:n=1000,c=4 or a JSON object")
            p.add_argument("--input", help="edge-list file")
        p.add_argument("--seed", type=int, help="master seed")
        p.add_argument("--out", help="output path (default: stdout)")

    def perc(p):
        p.add_argument("--p", type=float)
        p.add_argument("--p-low", type=float)
        p.add_argument("--p-high", type=float)
        p.add_argument("--perc-seed", type=int, help="percolation seed (default: master seed)")

    def est(p):
        p.add_argument("--K", type=int)
        g = p.add_mutually_exclusive_group()
        g.add_argument("--T", type=int)
        g.add_argument("--epsilon", type=float)
        p.add_argument("--mode", choices=["semantic", "literal"])

    p = sub.add_parser("gen", help="generate a graph and write its edge list")
    common(p)
    p = sub.add_parser("percolate", help="percolate (or sprinkle) and write the edge list")
    common(p)
    perc(p)
    p = sub.add_parser("exact", help="exact 2-core fractions")
    common(p)
    perc(p)
    p = sub.add_parser("estimate", help="local Monte Carlo estimate")
    common(p)
    perc(p)
    est(p)
    p.add_argument("--with-exact", action="store_true")
    p.add_argument("--samples", help="CSV path for per-sample bits")
    p = sub.add_parser("sweep", help="estimate along a percolation grid")
    common(p)
    est(p)
    p.add_argument("--p-grid", help="comma-separated p values")
    p.add_argument("--no-exact", action="store_true")
    p.add_argument("--plot-data", help="also write the plot CSV (with oracle columns)")
    p = sub.add_parser("diagnose", help="structural diagnostics")
    common(p)
    perc(p)
    p.add_argument("--cut-epsilon", type=float)
    p.add_argument("--iters", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--H", help="file with seed-set vertex ids (for the coloring and upstream-ratio report)")
    p.add_argument("--paths", nargs=2, metavar=("A.txt", "B.txt"))
    p.add_argument("--seed-core", action="store_true", help="run the two-step sprinkling experiment")
    p = sub.add_parser("oracle", help="Poisson branching limits")
    common(p, source=False)
    p.add_argument("--lambda", dest="lam", type=float)
    return ap


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    base: dict[str, Any] = {}
    if ns.config:
        base = json.loads(Path(ns.config).read_text())
        if base.get("command", ns.command) != ns.command:
            raise ConfigError("config command does not match subcommand")
    base["command"] = ns.command
    cfg = RunConfig.from_dict(base)
    get = lambda name: getattr(ns, name, None)
    if get("seed") is not None:
        cfg.master_seed = ns.seed
    if get("gen"):
        spec = GeneratorSpec.parse(ns.gen, seed=cfg.master_seed)
        cfg.generator = json.loads(spec.to_json())
    if get("input"):
        cfg.input = ns.input
    for name, key in (("p", "p"), ("p_low", "p_low"), ("p_high", "p_high"), ("perc_seed", "seed")):
        if get(name) is not None:
            cfg.percolation[key] = get(name)
    if get("p_grid"):
        cfg.percolation["p_grid"] = [float(x) for x in ns.p_grid.split(",") if x.strip()]
    for name in ("K", "T", "epsilon", "mode"):
        if get(name) is not None:
            cfg.estimator[name] = get(name)
    if get("with_exact"):
        cfg.estimator["with_exact"] = True
    if get("no_exact"):
        cfg.estimator["with_exact"] = False
    for name, key in (("cut_epsilon", "cut_epsilon"), ("iters", "iters"), ("ell", "ell"),
                      ("H", "H"), ("paths", "paths"), ("seed_core", "seed_core")):
        if get(name):
            cfg.diagnose[key] = get(name)
    for name, key in (("out", "path"), ("samples", "samples"), ("plot_data", "plot_data")):
        if get(name):
            cfg.output[key] = get(name)
    if get("lam") is not None:
        cfg.oracle_lambda = ns.lam
    return cfg


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        return run(cfg)
    except (ConfigError, TypeError) as exc:
        print(f"twocore: usage error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # runtime failure
        print(f"twocore: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
