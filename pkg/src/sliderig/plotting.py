"""Render sweep summaries as small multiples, one panel per measure."""

from __future__ import annotations

from collections import defaultdict
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .experiments import SummaryRow


def render_summary(summary: Sequence[SummaryRow], path,
                   title: str | None = None) -> None:
    """Empirical means with error bars against the predicted curves.

    The output format follows the file extension (svg, png, pdf).
    """
    by_measure: dict[str, list[SummaryRow]] = defaultdict(list)
    for row in summary:
        by_measure[row.measure].append(row)
    measures = sorted(by_measure)
    if not measures:
        raise ValueError("nothing to plot: empty summary")
    cols = min(3, len(measures))
    nrows = (len(measures) + cols - 1) // cols
    fig, axes = plt.subplots(nrows, cols,
                             figsize=(4.2 * cols, 3.2 * nrows),
                             squeeze=False)
    for ax in axes.flat[len(measures):]:
        ax.set_visible(False)
    for ax, measure in zip(axes.flat, measures):
        pts = sorted(by_measure[measure], key=lambda r: r.c)
        cs = [p.c for p in pts]
        ax.errorbar(cs, [p.mean for p in pts],
                    yerr=[p.stderr for p in pts],
                    marker="o", markersize=3, linewidth=1,
                    label="empirical")
        pred = [(p.c, p.predicted) for p in pts if p.predicted is not None]
        if pred:
            ax.plot([x for x, _ in pred], [y for _, y in pred],
                    linestyle="--", linewidth=1, label="predicted")
        ax.set_title(measure, fontsize=9)
        ax.set_xlabel("c")
        ax.legend(fontsize=7)
    if title:
        fig.suptitle(title)
    fig.tight_layout()
    try:
        fig.savefig(path)
    except OSError as exc:
        raise OSError(f"cannot write figure {path}: {exc}") from exc
    finally:
        plt.close(fig)
