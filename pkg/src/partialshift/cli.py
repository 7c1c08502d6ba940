"""Command line: read a system from an INI file, run suites, write reports.

Example config::

    [system]
    alphabet = a b
    kind = matrix
    matrix = 1 1; 1 0
    side = one

    [bounds]
    resolution = 3,3
    radius = 2
    basis = 2,4

Exit codes: 0 all pass, 1 any fail, 2 inconclusive only, 3 input error.
"""
from __future__ import annotations

import argparse
import configparser
import json
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .boolean_algebra import BooleanAlgebra, check_modsat, stone_dual
from .free_group import ball
from .partial_action import PartialAction, check_disjointness, check_partial_action_axioms
from .report import FAIL, INCONCLUSIVE, Report, Timer
from .shift_space import FIBONACCI, GOLDEN_MEAN, UPPER_TRIANGULAR, InputError, ShiftPresentation, Side

PRESETS = {
    "golden-mean": ("ab", "matrix", GOLDEN_MEAN),
    "upper-triangular": ("ab", "matrix", UPPER_TRIANGULAR),
    "full": ("ab", "full", None),
    "fibonacci": ("ab", "substitution", FIBONACCI),
}

SUITES = ("axioms", "definition", "appendix", "ck", "crossed", "lambda-phi", "stone", "modsat", "vanishing")


@dataclass
class SystemConfig:
    alphabet: Tuple[str, ...]
    kind: str
    data: object = None
    side: Side = Side.ONE
    seed_symbol: Optional[str] = None
    resolution: Tuple[int, int] = (3, 3)
    radius: int = 2
    basis: Tuple[int, int] = (2, 4)
    basis_d: int = 4
    coverage_floor: float = 0.9
    depth: int = 12
    seed: int = 0
    max_word: int = 3
    samples: int = 100

    def presentation(self, side=None) -> ShiftPresentation:
        side = Side(side) if side is not None else self.side
        kw = {"seed": self.seed_symbol} if self.kind == "substitution" else {}
        return ShiftPresentation(self.alphabet, self.kind, self.data, side, **kw)

    def handle(self, side=None) -> PartialAction:
        return PartialAction(self.presentation(side))

    def as_params(self) -> dict:
        return {"alphabet": "".join(self.alphabet), "kind": self.kind, "side": self.side.value,
                "resolution": list(self.resolution), "radius": self.radius, "basis": list(self.basis),
                "basis_d": self.basis_d, "coverage_floor": self.coverage_floor, "depth": self.depth,
                "seed": self.seed}


# ------------------------------------------------------------------ parsing

def _pair(text: str, name: str) -> Tuple[int, int]:
    parts = [p for p in text.replace("(", "").replace(")", "").replace(",", " ").split()]
    if len(parts) != 2:
        raise InputError(f"{name} needs two integers, got {text!r}")
    try:
        a, b = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise InputError(f"{name} needs two integers, got {text!r}") from exc
    if a < 0 or b < 0:
        raise InputError(f"{name} entries must be nonnegative")
    return a, b


def _int(text: str, name: str, low: int = 0) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise InputError(f"{name} must be an integer") from exc
    if v < low:
        raise InputError(f"{name} must be at least {low}")
    return v


def _side(text) -> Side:
    t = str(text).strip().lower()
    t = {"one": "one-sided", "two": "two-sided"}.get(t, t)
    try:
        return Side(t)
    except ValueError as exc:
        raise InputError("side must be 'one' or 'two'") from exc


def _symbols(text: str) -> Tuple[str, ...]:
    text = text.strip()
    return tuple(text.replace(",", " ").split()) if (" " in text or "," in text) else tuple(text)


def _matrix(text: str):
    rows = [r.replace(",", " ").split() for r in text.replace("\n", ";").split(";") if r.strip()]
    try:
        return tuple(tuple(int(v) for v in r) for r in rows)
    except ValueError as exc:
        raise InputError("matrix entries must be integers") from exc


def _rules(text: str) -> Dict[str, str]:
    out = {}
    for item in text.replace("\n", ",").split(","):
        if not item.strip():
            continue
        if ":" not in item and "->" not in item:
            raise InputError(f"substitution rule {item.strip()!r} needs the form a:ab")
        k, v = item.replace("->", ":").split(":", 1)
        out[k.strip()] = v.strip()
    return out


def parse_config(text: str) -> SystemConfig:
    cp = configparser.ConfigParser()
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise InputError(f"unreadable config: {exc}") from exc
    if not cp.has_section("system"):
        raise InputError("config needs a [system] section")
    sy = cp["system"]
    preset = sy.get("preset")
    if preset:
        if preset not in PRESETS:
            raise InputError(f"unknown preset {preset!r}")
        alpha, kind, data = PRESETS[preset]
        alphabet = tuple(alpha)
    else:
        if "alphabet" not in sy or "kind" not in sy:
            raise InputError("[system] needs alphabet and kind (or a preset)")
        alphabet = _symbols(sy["alphabet"])
        kind = sy["kind"].strip()
        if kind == "full":
            data = None
        elif kind == "matrix":
            data = _matrix(sy.get("matrix", ""))
        elif kind == "forbidden":
            data = tuple(w.strip() for w in sy.get("forbidden", "").split(",") if w.strip())
        elif kind == "substitution":
            data = _rules(sy.get("substitution", ""))
        elif kind == "points":
            data = tuple(w.strip() for w in sy.get("points", "").split(",") if w.strip())
        else:
            raise InputError(f"unknown kind {kind!r}")
    side = _side(sy.get("side", "one"))
    cfg = SystemConfig(alphabet, kind, data, side, seed_symbol=sy.get("seed") or None)
    if cp.has_section("bounds"):
        b = cp["bounds"]
        if "resolution" in b:
            cfg.resolution = _pair(b["resolution"], "resolution")
        if "radius" in b:
            cfg.radius = _int(b["radius"], "radius")
        if "basis" in b:
            cfg.basis = _pair(b["basis"], "basis")
        if "basis_d" in b:
            cfg.basis_d = _int(b["basis_d"], "basis_d")
        if "coverage_floor" in b:
            try:
                cfg.coverage_floor = float(b["coverage_floor"])
            except ValueError as exc:
                raise InputError("coverage_floor must be a number") from exc
        if "depth" in b:
            cfg.depth = _int(b["depth"], "depth", 1)
        if "seed" in b:
            cfg.seed = _int(b["seed"], "seed")
        if "max_word" in b:
            cfg.max_word = _int(b["max_word"], "max_word", 1)
        if "samples" in b:
            cfg.samples = _int(b["samples"], "samples", 1)
    validate(cfg)
    return cfg


def validate(cfg: SystemConfig) -> SystemConfig:
    """Build the presentation once so bad input fails before any suite runs."""
    if not 0.0 <= cfg.coverage_floor <= 1.0:
        raise InputError("coverage floor must lie in [0, 1]")
    if cfg.basis[1] < 1:
        raise InputError("basis period bound must be at least 1")
    cfg.presentation()
    return cfg


def preset_config(name: str, side="one") -> SystemConfig:
    alpha, kind, data = PRESETS[name]
    return validate(SystemConfig(tuple(alpha), kind, data, _side(side)))


# ------------------------------------------------------------------ commands

def _sft_matrix(pres: ShiftPresentation):
    if pres.kind == "matrix":
        return np.array(pres.data, dtype=np.int64)
    if not pres.is_sft or pres.memory > 1:
        raise InputError("the Exel-Laca suite needs a memory-one SFT")
    two = pres.factors(2)
    return np.array([[int(a + b in two) for b in pres.alphabet] for a in pres.alphabet], dtype=np.int64)


def _basis(cfg: SystemConfig, handle: PartialAction):
    from .representation import build_basis

    q, p = cfg.basis
    return build_basis(handle, q, p, cfg.basis_d)


def _sample_points(cfg: SystemConfig, handle: PartialAction):
    pres = handle.presentation
    if pres.kind == "substitution":
        return [pres.fixed_point(offset=n) for n in range(8)]
    q, p = cfg.basis
    from .representation import build_basis

    return list(build_basis(handle, q, p, 0).points)


def cmd_describe(cfg: SystemConfig, n: Optional[int] = None) -> Report:
    pres = cfg.presentation()
    K, L = cfg.resolution
    n = n if n is not None else max(6, K + L)
    rep = Report("describe", params={**cfg.as_params(), "max_length": n})
    timer = Timer()
    rep.details["presentation"] = repr(pres)
    rep.details["factor_counts"] = [len(pres.factors(m)) for m in range(1, n + 1)]
    alg = BooleanAlgebra(PartialAction(pres))
    counts = {}
    for k in range(K + 1):
        for l in range(L + 1):
            counts[f"{k},{l}"] = len(alg.atoms((k, l)))
    rep.details["atom_counts"] = counts
    if alg.flags:
        rep.details["flags"] = list(alg.flags)
    rep.coverage["describe"] = 1.0
    rep.timings_ms["total"] = timer.ms()
    return rep.finish()


def _suite(cfg: SystemConfig, name: str) -> Report:
    from . import representation as R

    if name == "axioms":
        handle = cfg.handle()
        pts = _sample_points(cfg, handle)
        rep = check_partial_action_axioms(handle, ball(len(cfg.alphabet), cfg.radius), pts)
        rep.merge(check_disjointness(handle, 3, pts), "disjointness.")
        return rep.finish()
    if name == "definition":
        handle = cfg.handle()
        return R.verify_definition_relations(_basis(cfg, handle), handle, cfg.radius, cfg.coverage_floor)
    if name == "appendix":
        handle = cfg.handle()
        return R.verify_appendix_axiom_sets(_basis(cfg, handle), handle, cfg.radius, cfg.coverage_floor)
    if name == "ck":
        handle = cfg.handle(Side.ONE)
        return R.verify_ck_relations(_sft_matrix(handle.presentation), _basis(cfg, handle),
                                     max_word=cfg.max_word, coverage_floor=cfg.coverage_floor)
    if name == "crossed":
        handle = cfg.handle(Side.TWO)
        return R.verify_crossed_product(handle, _basis(cfg, handle), max(cfg.radius, 1))
    if name == "lambda-phi":
        handle = cfg.handle(Side.ONE)
        return R.verify_lambda_phi(handle, _basis(cfg, handle), resolution=(2, 2), seed=cfg.seed,
                                   coverage_floor=cfg.coverage_floor)
    if name == "vanishing":
        handle = cfg.handle()
        return R.verify_vanishing(_basis(cfg, handle), cfg.radius)
    if name == "stone":
        alg = BooleanAlgebra(cfg.handle())
        view = stone_dual(alg, cfg.resolution)
        rep = Report("stone", params={"resolution": list(cfg.resolution), "seed": cfg.seed})
        rep.merge(view.check_separation(), "separation.")
        rep.merge(view.check_iso(seed=cfg.seed), "iso.")
        return rep.finish()
    if name == "modsat":
        alg = BooleanAlgebra(cfg.handle())
        return check_modsat(alg, 5, 200, cfg.seed)
    raise InputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


def cmd_check(cfg: SystemConfig, suites: Sequence[str]) -> List[Report]:
    for s in suites:
        if s not in SUITES:
            raise InputError(f"unknown suite {s!r}; choose from {', '.join(SUITES)}")
    return [_suite(cfg, s) for s in suites]


def cmd_ideals(cfg: SystemConfig):
    from .ideals import check_lattice, invariant_admissible_sets

    lattice = invariant_admissible_sets(cfg.handle(Side.ONE), cfg.resolution)
    rep = check_lattice(lattice)
    rep.details["members"] = [repr(m) for m in lattice.members]
    return rep, lattice.to_dot()


def cmd_special(cfg: SystemConfig) -> List[Report]:
    """The left special ledger followed by the (*) and (**) verdicts."""
    from .ideals import check_property_star, check_property_starstar, left_special_scan

    handle = cfg.handle(Side.ONE)
    timer = Timer()
    ledger = left_special_scan(handle, cfg.depth)
    rep = Report("special", params={"depth": cfg.depth}, details={"ledger": ledger.to_dict()})
    rep.coverage["scan"] = 1.0
    rep.inconclusive = not ledger.stable and not ledger.infinite
    rep.timings_ms["total"] = timer.ms()
    return [rep.finish(), check_property_star(handle, min(cfg.depth, 6)),
            check_property_starstar(handle, cfg.depth)]


def cmd_psi(cfg: SystemConfig) -> Report:
    from .ideals import check_psi

    return check_psi(cfg.handle(Side.ONE), cfg.handle(Side.TWO), cfg.resolution, pairs=cfg.samples,
                     kappa_pairs=max(1, cfg.samples // 2), seed=cfg.seed)


def cmd_units(cfg: SystemConfig) -> Report:
    from .ideals import left_special_scan, matrix_units

    handle = cfg.handle(Side.ONE)
    ledger = left_special_scan(handle, cfg.depth)
    if not ledger.candidates:
        raise InputError("no left special element; there are no matrix units to build")
    _, rep = matrix_units(handle, ledger, kmax=cfg.depth)
    return rep


# ------------------------------------------------------------------ driver

def exit_code(reports: Sequence[Report]) -> int:
    verdicts = {r.verdict for r in reports}
    if FAIL in verdicts:
        return 1
    if INCONCLUSIVE in verdicts:
        return 2
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="partialshift", description=__doc__.split("\n")[0])
    ap.add_argument("command", choices=("describe", "check", "ideals", "special", "psi", "units"))
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--config", metavar="PATH", help="INI file with [system] and [bounds]")
    src.add_argument("--preset", choices=sorted(PRESETS), help="built-in system instead of a config")
    ap.add_argument("--side", choices=("one", "two"), help="override the side of the system")
    ap.add_argument("--suite", metavar="NAME[,NAME...]", help=f"for check: {', '.join(SUITES)}")
    ap.add_argument("--json", metavar="PATH", help="write the reports as JSON ('-' for stdout)")
    ap.add_argument("--dot", metavar="PATH", help="write the lattice or Stone dual as DOT")
    ap.add_argument("--seed", type=int)
    ap.add_argument("--depth", type=int)
    ap.add_argument("--resolution", metavar="K,L")
    ap.add_argument("--radius", type=int)
    ap.add_argument("--coverage-floor", type=float, dest="coverage_floor")
    return ap


def _load(args) -> SystemConfig:
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = parse_config(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read config: {exc}") from exc
    elif args.preset:
        cfg = preset_config(args.preset)
    else:
        raise InputError("give --config PATH or --preset NAME")
    if args.side:
        cfg.side = _side(args.side)
    if args.seed is not None:
        cfg.seed = args.seed
    if args.depth is not None:
        cfg.depth = args.depth
    if args.resolution:
        cfg.resolution = _pair(args.resolution, "resolution")
    if args.radius is not None:
        cfg.radius = args.radius
    if args.coverage_floor is not None:
        cfg.coverage_floor = args.coverage_floor
    return validate(cfg)


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        cfg = _load(args)
        dot = None
        if args.command == "describe":
            reports = [cmd_describe(cfg)]
        elif args.command == "check":
            suites = [s.strip() for s in (args.suite or ",".join(SUITES)).split(",") if s.strip()]
            reports = cmd_check(cfg, suites)
            if "stone" in suites:
                dot = stone_dual(BooleanAlgebra(cfg.handle()), cfg.resolution).to_dot()
        elif args.command == "ideals":
            rep, dot = cmd_ideals(cfg)
            reports = [rep]
        elif args.command == "special":
            reports = cmd_special(cfg)
        elif args.command == "psi":
            reports = [cmd_psi(cfg)]
        else:
            reports = [cmd_units(cfg)]
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    for r in reports:
        r.params.setdefault("seed", cfg.seed)
        print(f"{r.suite}: {r.verdict}", file=out)
    payload = [r.to_dict() for r in reports]
    if args.json == "-":
        print(json.dumps(payload, indent=2, default=str), file=out)
    elif args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, default=str)
    if args.dot and dot is not None:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot + "\n")
    return exit_code(reports)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
