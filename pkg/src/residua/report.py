"""Render theorem verification reports to a CSV file plus summary figures."""
from __future__ import annotations

import csv
import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .harness import DESCRIPTIONS, TheoremReport  # noqa: E402


def write_report(reports: list[TheoremReport], outdir: str | Path) -> list[Path]:
    """Write verify_report.csv and verify_report.png under outdir."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    csv_path = out / "verify_report.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["theorem", "status", "cases_checked", "counterexamples", "elapsed_s", "statement"]
        )
        for r in reports:
            writer.writerow(
                [
                    r.theorem_id,
                    "pass" if r.passed else "FAIL",
                    r.cases_checked,
                    json.dumps(list(r.counterexamples)),
                    f"{r.elapsed:.4f}",
                    DESCRIPTIONS[r.theorem_id],
                ]
            )
    png_path = out / "verify_report.png"
    ids = [r.theorem_id for r in reports]
    colors = ["#2a7e43" if r.passed else "#b3382c" for r in reports]
    fig, (ax_cases, ax_time) = plt.subplots(2, 1, figsize=(9, 6), sharex=True)
    ax_cases.bar(ids, [r.cases_checked for r in reports], color=colors)
    ax_cases.set_yscale("log")
    ax_cases.set_ylabel("cases checked")
    ax_cases.set_title(f"theorem verification (max prime {reports[0].bounds.max_prime})")
    ax_time.bar(ids, [r.elapsed for r in reports], color=colors)
    ax_time.set_ylabel("elapsed [s]")
    ax_time.set_xlabel("theorem")
    fig.tight_layout()
    fig.savefig(png_path, dpi=150)
    plt.close(fig)
    return [csv_path, png_path]
