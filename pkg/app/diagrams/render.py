"""SVG drawings of tangled diagrams."""

import logging
from pathlib import Path
from typing import Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Arc as ArcPatch, Circle  # noqa: E402

from ..errors import RenderError  # noqa: E402
from .model import Label, TangledDiagram, inflate  # noqa: E402

logger = logging.getLogger(__name__)

PRIME_OFFSET = 0.25
LOOP_RADIUS = 0.2
CROSSED_COLOR = "tab:red"
VERTEX_COLOR = "black"

# fixed ids and no timestamp so repeated renders are byte-identical
SVG_RC = {"svg.hashsalt": "tanglekit", "svg.fonttype": "none"}


def _x(label: Label) -> float:
    vertex, primed = label
    return vertex + (PRIME_OFFSET if primed else 0.0)


def render(d: TangledDiagram, path: Union[str, Path]) -> Path:
    """
    Write ``d`` as an SVG file.

    Vertices sit on a horizontal baseline, arcs are upper semicircles
    drawn between inflated positions (``j'`` slightly right of ``j``),
    loops are small circles and crossed vertices are drawn in red.

    Raises:
        RenderError: If the file cannot be written.
    """
    path = Path(path)
    m = inflate(d)
    span = max((_x(b) - _x(a) for a, b in m.arcs), default=1.0)

    with matplotlib.rc_context(SVG_RC):
        fig, ax = plt.subplots(figsize=(max(2.0, 0.8 * d.n), max(1.5, 0.4 * span + 0.8)))
        try:
            for a, b in m.arcs:
                if a[0] == b[0]:
                    ax.add_patch(
                        Circle((a[0], LOOP_RADIUS), LOOP_RADIUS, fill=False, linewidth=1.2)
                    )
                    continue
                left, right = _x(a), _x(b)
                ax.add_patch(
                    ArcPatch(
                        ((left + right) / 2, 0.0),
                        right - left,
                        right - left,
                        theta1=0.0,
                        theta2=180.0,
                        linewidth=1.2,
                    )
                )
            for v in range(1, d.n + 1):
                color = CROSSED_COLOR if v in d.crossed else VERTEX_COLOR
                ax.plot([v], [0.0], marker="o", markersize=6, color=color)
                ax.annotate(str(v), (v, 0.0), xytext=(0, -14), textcoords="offset points",
                            ha="center", fontsize=8)

            ax.axhline(0.0, color="0.6", linewidth=0.6, zorder=0)
            ax.set_xlim(0.4, d.n + 0.6)
            ax.set_ylim(-0.4, max(span / 2, 2 * LOOP_RADIUS) + 0.3)
            ax.set_aspect("equal")
            ax.axis("off")
            fig.savefig(path, format="svg", metadata={"Date": None})
        except OSError as exc:
            raise RenderError(f"Could not write {path}: {exc}") from exc
        finally:
            plt.close(fig)
    logger.info("Rendered %s to %s", d, path)
    return path
