"""Monte-Carlo sweeps over the mean degree, with CSV and summary output.

A sweep samples graphs at each requested mean degree, runs the selected
measures (orientation gap, core sizes, rigid decomposition, dense-witness
probe) and records one row per trial.  Summaries put empirical means next
to the predicted limits for the same q and c.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .asymptotics import ThresholdReport, threshold_report
from .cores import core_stats
from .graph import ErConfig, TypedGraph, induced_subgraph, sample_er
from .orientation import DenseWitness, find_orientation, max_orientable_edges
from .rigidity import rigid_components

_MEASURES = ("orient", "cores", "rigid", "witness_scan")
# decomposition switches to the core-restricted fast path above this n
_CORE_FAST_ABOVE = 500

CSV_COLUMNS = (
    "q", "c", "n", "trial", "seed", "m", "orientable", "gap",
    "n1_core", "n2_core", "m_core", "n_core_plus",
    "largest_rigid_frac", "largest_connected_rigid_frac",
    "witness_size", "notes",
)


@dataclass(frozen=True)
class SweepConfig:
    """One sweep: a q, a list of c values, and which measures to run."""

    q: float
    c_values: tuple[float, ...]
    n: int
    trials: int
    base_seed: int
    measures: frozenset[str] = frozenset(("orient", "cores"))
    rigid_n_cap: int = 5000

    def __post_init__(self):
        object.__setattr__(self, "c_values", tuple(float(c) for c in self.c_values))
        object.__setattr__(self, "measures", frozenset(self.measures))
        if not self.c_values:
            raise ValueError("c_values must be nonempty")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        unknown = self.measures - set(_MEASURES)
        if unknown:
            raise ValueError(f"unknown measures: {sorted(unknown)}")


@dataclass(frozen=True)
class TrialRecord:
    # fields not covered by the configured measures stay None
    q: float
    c: float
    n: int
    trial: int
    seed: int
    m: int
    orientable: bool | None = None
    gap: int | None = None
    n1_core: int | None = None
    n2_core: int | None = None
    m_core: int | None = None
    n_core_plus: int | None = None
    largest_rigid_frac: float | None = None
    largest_connected_rigid_frac: float | None = None
    witness_size: int | None = None
    notes: str = ""


def witness_scan(g: TypedGraph, size_cap: int | None = None) -> DenseWitness | None:
    """Probe for an overloaded vertex set; None when g is orientable.

    The first witness is shrunk by re-running the orientation search on
    its induced subgraph until the size stops dropping, or drops below
    size_cap (the caller's threshold of interest).
    """
    found = find_orientation(g)
    if not isinstance(found, DenseWitness):
        return None
    best = found
    current = tuple(best.vertices)
    while size_cap is None or len(current) >= size_cap:
        sub, fwd = induced_subgraph(g, current)
        back = {new: old for old, new in fwd.items()}
        again = find_orientation(sub)
        # a witness subgraph still has m > n1 + 2 n2, so the re-run fails
        assert isinstance(again, DenseWitness)
        smaller = tuple(sorted(back[v] for v in again.vertices))
        if len(smaller) >= len(current):
            break
        current = smaller
    sub, fwd = induced_subgraph(g, current)
    return DenseWitness(
        vertices=current, n1=sub.n1, n2=sub.n2, m=sub.m,
    )


def _measure(cfg: SweepConfig, g: TypedGraph, c: float, trial: int,
             seed: int) -> TrialRecord:
    notes: list[str] = []
    fields: dict = {}
    if "orient" in cfg.measures:
        count, _ = max_orientable_edges(g)
        fields["orientable"] = count == g.m
        fields["gap"] = g.m - count
    if "cores" in cfg.measures:
        st = core_stats(g)
        fields["n1_core"] = st.n1_core
        fields["n2_core"] = st.n2_core
        fields["m_core"] = st.m_core
        fields["n_core_plus"] = st.n_core_plus
    if "rigid" in cfg.measures:
        if g.n > cfg.rigid_n_cap:
            notes.append("rigid skipped: n over cap")
        else:
            fast = g.n > _CORE_FAST_ABOVE
            dec = rigid_components(g, core_fast=fast)
            fields["largest_rigid_frac"] = dec.largest_component_size() / g.n
            fields["largest_connected_rigid_frac"] = (
                dec.largest_connected_component_size() / g.n
            )
            if fast:
                notes.append("rigid via core fast path")
    if "witness_scan" in cfg.measures:
        cap = max(2, g.n // 100)
        w = witness_scan(g, size_cap=cap)
        if w is not None:
            fields["witness_size"] = len(w.vertices)
            if len(w.vertices) < cap:
                notes.append("witness below 1% of n")
    return TrialRecord(q=cfg.q, c=c, n=g.n, trial=trial, seed=seed, m=g.m,
                       notes="; ".join(notes), **fields)


def run_sweep(cfg: SweepConfig) -> list[TrialRecord]:
    """One record per (c, trial), deterministic in base_seed.

    Trial seeds are base_seed + flat index, so any (c, trial) cell can be
    reproduced in isolation.
    """
    records = []
    for i, c in enumerate(cfg.c_values):
        for j in range(cfg.trials):
            seed = cfg.base_seed + i * cfg.trials + j
            g = sample_er(ErConfig(n=cfg.n, c=c, q=cfg.q, seed=seed))
            records.append(_measure(cfg, g, c, j, seed))
    return records


@dataclass(frozen=True)
class SummaryRow:
    c: float
    measure: str
    trials: int
    mean: float
    stderr: float
    predicted: float | None
    abs_dev: float | None


def compare(records: Sequence[TrialRecord],
            report: ThresholdReport) -> list[SummaryRow]:
    """Per-c empirical mean and stderr next to the predicted limits.

    Records must share q and n; predictions are recomputed per c from
    report's q.  Measures with no configured records are omitted.
    """
    if not records:
        return []
    qs = {r.q for r in records}
    ns = {r.n for r in records}
    if len(qs) != 1 or len(ns) != 1:
        raise ValueError("records must share a single q and n")
    q = qs.pop()
    n = ns.pop()
    if abs(q - report.q) > 1e-12:
        raise ValueError("report is for a different q than the records")

    rows: list[SummaryRow] = []

    def emit(c: float, measure: str, values: Iterable[float | None],
             predicted: float | None) -> None:
        vals = [v for v in values if v is not None]
        if not vals:
            return
        k = len(vals)
        mean = sum(vals) / k
        var = sum((v - mean) ** 2 for v in vals) / (k - 1) if k > 1 else 0.0
        stderr = math.sqrt(var / k)
        dev = abs(mean - predicted) if predicted is not None else None
        rows.append(SummaryRow(c, measure, k, mean, stderr, predicted, dev))

    for c in sorted({r.c for r in records}):
        group = [r for r in records if r.c == c]
        rep = threshold_report(q, c)
        emit(c, "orientable_frac",
             [None if r.orientable is None else float(r.orientable)
              for r in group],
             1.0 if c < report.c_star else 0.0)
        emit(c, "gap_frac",
             [None if r.gap is None else (r.gap / r.m if r.m else 0.0)
              for r in group],
             1.0 - rep.orientable_limit)
        emit(c, "n1_core_frac",
             [None if r.n1_core is None else r.n1_core / n for r in group],
             rep.core_n1_frac)
        emit(c, "n2_core_frac",
             [None if r.n2_core is None else r.n2_core / n for r in group],
             rep.core_n2_frac)
        emit(c, "core_halfedge_frac",
             [None if r.m_core is None else 2 * r.m_core / n for r in group],
             rep.core_halfedge_frac)
        emit(c, "core_plus_frac",
             [None if r.n_core_plus is None else r.n_core_plus / n
              for r in group],
             rep.core_plus_frac)
        emit(c, "largest_rigid_frac",
             [r.largest_rigid_frac for r in group], None)
        emit(c, "largest_connected_rigid_frac",
             [r.largest_connected_rigid_frac for r in group], None)
    return rows


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def emit_csv(records: Sequence[TrialRecord], path) -> None:
    """Fixed 16-column CSV; absent measures are left blank."""
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_COLUMNS)
            for r in records:
                writer.writerow([_fmt(getattr(r, col)) for col in CSV_COLUMNS])
    except OSError as exc:
        raise OSError(f"cannot write sweep CSV {path}: {exc}") from exc


def _parse_cell(text: str, kind: str):
    if text == "":
        return None
    if kind == "int":
        return int(text)
    if kind == "float":
        return float(text)
    if kind == "bool":
        return text == "1"
    return text


_COLUMN_KINDS = {
    "q": "float", "c": "float", "n": "int", "trial": "int", "seed": "int",
    "m": "int", "orientable": "bool", "gap": "int", "n1_core": "int",
    "n2_core": "int", "m_core": "int", "n_core_plus": "int",
    "largest_rigid_frac": "float", "largest_connected_rigid_frac": "float",
    "witness_size": "int", "notes": "str",
}


def parse_csv(path) -> list[TrialRecord]:
    """Inverse of emit_csv; round-trips records exactly."""
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header is None or tuple(header) != CSV_COLUMNS:
                raise ValueError(f"unexpected sweep CSV header in {path}")
            out = []
            for row in reader:
                if len(row) != len(CSV_COLUMNS):
                    raise ValueError(
                        f"wrong column count in {path}: {len(row)}")
                kw = {
                    col: _parse_cell(cell, _COLUMN_KINDS[col])
                    for col, cell in zip(CSV_COLUMNS, row)
                }
                kw["notes"] = kw["notes"] or ""
                out.append(TrialRecord(**kw))
            return out
    except OSError as exc:
        raise OSError(f"cannot read sweep CSV {path}: {exc}") from exc


def emit_plotdata(summary: Sequence[SummaryRow], path) -> None:
    """Delimited (measure, c, empirical, predicted) rows for plotting."""
    try:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(("measure", "c", "empirical", "predicted"))
            for row in summary:
                writer.writerow((
                    row.measure, repr(row.c), repr(row.mean),
                    "" if row.predicted is None else repr(row.predicted),
                ))
    except OSError as exc:
        raise OSError(f"cannot write plot data {path}: {exc}") from exc
