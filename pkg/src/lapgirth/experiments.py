"""Batch drivers for the exhaustive sweeps, configured by small dataclasses and writing JSON reports."""

from __future__ import annotations

import json
import logging
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .families import make
from .generate import DEFAULT_MAX_ORDER
from .spectra import eigenvalues_numeric
from .verify import TheoremReport, exhaustive_equality_search, exhaustive_thr, y1_uniqueness_search

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GenSweepConfig:
    orders: tuple[int, ...] = (5, 6, 7, 8)
    ks: tuple[int, ...] = (1, 2, 3, 4)
    jobs: int = 1
    max_order: int = DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class ThrSweepConfig:
    orders: tuple[int, ...] = (5, 6, 7)
    parts: tuple[str, ...] = ("top_interval", "mult_n")
    corrected: bool = False
    jobs: int = 1
    max_order: int = DEFAULT_MAX_ORDER


@dataclass
class RunLog:
    reports: list[dict] = field(default_factory=list)
    seconds: list[float] = field(default_factory=list)

    def add(self, rep: TheoremReport, seconds: float) -> None:
        self.reports.append(rep.to_dict())
        self.seconds.append(round(seconds, 3))
        log.info("%s %s checked=%d match=%s (%.1fs)", rep.theorem_id, rep.params, rep.graphs_checked, rep.match, seconds)

    @property
    def all_match(self) -> bool:
        return all(r["match"] for r in self.reports)

    def write(self, path: Optional[Path]) -> None:
        if path is None:
            return
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps({"reports": self.reports, "seconds": self.seconds}, indent=2, sort_keys=True))


def run_gen(cfg: GenSweepConfig) -> RunLog:
    out = RunLog()
    for n in cfg.orders:
        for k in cfg.ks:
            start = time.perf_counter()
            rep = exhaustive_equality_search(n, k, jobs=cfg.jobs, max_order=cfg.max_order)
            out.add(rep, time.perf_counter() - start)
    return out


def run_thr(cfg: ThrSweepConfig) -> RunLog:
    out = RunLog()
    for n in cfg.orders:
        for part in cfg.parts:
            start = time.perf_counter()
            rep = exhaustive_thr(n, jobs=cfg.jobs, max_order=cfg.max_order, part=part, corrected=cfg.corrected)
            out.add(rep, time.perf_counter() - start)
    return out


def run_y1_search(orders: tuple[int, ...] = (7, 8), max_order: int = DEFAULT_MAX_ORDER) -> RunLog:
    out = RunLog()
    for n in orders:
        start = time.perf_counter()
        out.add(y1_uniqueness_search(n, max_order=max_order), time.perf_counter() - start)
    return out


def figure_table(entries: list[tuple[str, int, float]]) -> list[dict]:
    """Computed eigenvalue next to each quoted one: rows of name, index, quoted, computed, difference."""
    rows = []
    for name, k, quoted in entries:
        value = float(eigenvalues_numeric(make(name))[k - 1])
        rows.append({"graph": name, "k": k, "quoted": quoted, "computed": round(value, 6), "diff": round(value - quoted, 6)})
    return rows


__all__ = ["GenSweepConfig", "ThrSweepConfig", "RunLog", "run_gen", "run_thr", "run_y1_search", "figure_table"]
