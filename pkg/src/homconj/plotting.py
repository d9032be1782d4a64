"""Figures for census reports, written next to the JSON/CSV output."""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .census import CensusReport  # noqa: E402

AGREE_COLOR = "#4c72b0"
MISMATCH_COLOR = "#c44e52"


def _label(group: dict) -> str:
    lab = "".join(str(x) for x in group["cycle_type"]) if group["degree"] < 10 else group["sigma"]
    if "m" in group:
        lab += f" m={group['m']}"
    return lab


def plot_instances(report: CensusReport, ax=None):
    """Stacked bars of agreements and mismatches per sigma class."""
    if ax is None:
        _, ax = plt.subplots(figsize=(max(6, 0.28 * len(report.groups)), 4))
    labels = [_label(g) for g in report.groups]
    agree = [g["agreements"] for g in report.groups]
    miss = [g["instances"] - g["agreements"] for g in report.groups]
    xs = range(len(labels))
    ax.bar(xs, agree, color=AGREE_COLOR, label="agree with oracle")
    ax.bar(xs, miss, bottom=agree, color=MISMATCH_COLOR, label="mismatch")
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels, rotation=90, fontsize=7)
    ax.set_yscale("log")
    ax.set_ylabel("instances")
    p = report.parameters
    ax.set_title(f"{p['family']} {p['mode']} census, n_max={p['n_max']}: "
                 f"{report.agreements}/{report.instances_total} agree")
    ax.legend(fontsize=8)
    return ax


def plot_timings(report: CensusReport, ax=None):
    if ax is None:
        _, ax = plt.subplots(figsize=(5, 3))
    names = sorted(report.timings)
    ax.barh(names, [report.timings[k] for k in names], color=AGREE_COLOR)
    ax.set_xlabel("wall time [s]")
    ax.set_title("time per phase")
    return ax


def render_census_figures(report: CensusReport, outdir: str | Path, stem: str | None = None) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    p = report.parameters
    stem = stem or f"census_{p['family']}_{p['mode']}_n{p['n_max']}"
    paths = []
    ax = plot_instances(report)
    ax.figure.tight_layout()
    paths.append(outdir / f"{stem}_instances.png")
    ax.figure.savefig(paths[-1], dpi=120)
    plt.close(ax.figure)
    if report.timings:
        ax = plot_timings(report)
        ax.figure.tight_layout()
        paths.append(outdir / f"{stem}_timings.png")
        ax.figure.savefig(paths[-1], dpi=120)
        plt.close(ax.figure)
    return paths
