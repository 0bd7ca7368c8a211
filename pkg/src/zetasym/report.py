"""Deterministic CSV/JSON report emission, plus optional figure rendering.

Numbers are formatted with 17 significant digits so identical inputs produce
byte-identical files (timings are reported to the console only, keeping the
written artifacts reproducible).
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Sequence

SCHEMA_VERSION = "1"


def fmt(x: float) -> str:
    """Fixed 17-significant-digit decimal rendering ('.' decimal point)."""
    return format(float(x), ".17g")


def output_record(command: str, parameters: dict[str, Any],
                  results: dict[str, Any]) -> dict[str, Any]:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": parameters,
        "results": results,
    }


def write_json(path: str | Path, record: dict[str, Any]) -> None:
    Path(path).write_text(json.dumps(record, indent=2, sort_keys=True) + "\n",
                          encoding="utf-8")


def write_csv(path: str | Path, header: Sequence[str],
              rows: Iterable[Sequence[Any]]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(fmt(v) if isinstance(v, float) else str(v)
                              for v in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def render_margin_figure(path: str | Path, sigmas: Sequence[float],
                         ts: Sequence[float],
                         margins: Sequence[Sequence[float]],
                         title: str) -> None:
    """Heatmap of scan margins (sigma on x, t on y), written as an image file."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    fig, ax = plt.subplots(figsize=(7, 5))
    grid = np.asarray(margins, dtype=float)  # shape (len(sigmas), len(ts))
    mesh = ax.pcolormesh(np.asarray(sigmas), np.asarray(ts), grid.T,
                         shading="nearest", cmap="viridis")
    fig.colorbar(mesh, ax=ax, label="margin")
    ax.set_xlabel(r"$\sigma$")
    ax.set_ylabel("t")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
