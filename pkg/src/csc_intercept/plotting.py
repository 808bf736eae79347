"""Path and control-history figures written straight to PNG (no pyplot state)."""

from __future__ import annotations

import os
from typing import Sequence

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

# drop the version-stamped Software chunk so reruns are byte-identical
_PNG_META = {"Software": None}


def _save(fig: Figure, path: str) -> str:
    FigureCanvasAgg(fig)
    fig.savefig(path, dpi=120, metadata=_PNG_META)
    return path


def plot_path(samples: Sequence, path: str, title: str = "") -> str:
    """Pursuer path and target track in the world frame."""
    fig = Figure(figsize=(5.5, 5.0))
    ax = fig.add_subplot(1, 1, 1)
    ax.plot([s.x for s in samples], [s.y for s in samples], "b-", lw=1.6, label="pursuer")
    ax.plot([s.target_x for s in samples], [s.target_y for s in samples], "r--", lw=1.2, label="target")
    first, last = samples[0], samples[-1]
    ax.plot(first.x, first.y, "bo", ms=5)
    ax.plot(first.target_x, first.target_y, "ro", ms=5)
    ax.plot(last.x, last.y, "k*", ms=10, label="intercept")
    ax.set_aspect("equal", adjustable="datalim")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.grid(True, lw=0.4, alpha=0.5)
    ax.legend(loc="best", fontsize=8)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    return _save(fig, path)


def plot_control(samples: Sequence, path: str, title: str = "") -> str:
    """Steering input u(t) as a step plot."""
    fig = Figure(figsize=(5.5, 3.0))
    ax = fig.add_subplot(1, 1, 1)
    ax.step([s.t for s in samples], [s.u for s in samples], where="post", color="b", lw=1.6)
    ax.set_ylim(-1.3, 1.3)
    ax.set_yticks([-1, 0, 1])
    ax.set_xlabel("t")
    ax.set_ylabel("u")
    ax.grid(True, lw=0.4, alpha=0.5)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    return _save(fig, path)


def render(samples: Sequence, out_dir: str, title: str = ""):
    """Write path.png and control.png into ``out_dir``; returns their paths."""
    return (
        plot_path(samples, os.path.join(out_dir, "path.png"), title),
        plot_control(samples, os.path.join(out_dir, "control.png"), title),
    )
