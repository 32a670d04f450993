"""Histograms of Coverageability and mean coverage over (0, 1]."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Sequence

import numpy as np

DEFAULT_BINS = 50


def bin_index(values, bins: int) -> np.ndarray:
    """Bin i covers (i/bins, (i+1)/bins]; zero lands in the first bin."""
    v = np.asarray(values, dtype=float)
    if np.any((v < 0) | (v > 1)):
        raise ValueError("values must lie in [0, 1]")
    return np.clip(np.ceil(v * bins).astype(int) - 1, 0, bins - 1)


def log_count(c) -> np.ndarray:
    return np.log10(1.0 + np.asarray(c, dtype=float))


@dataclass(frozen=True)
class DistributionReport:
    bins: int
    cmu: np.ndarray  # counts per bin
    mean: np.ndarray

    @property
    def edges(self) -> np.ndarray:
        return np.linspace(0.0, 1.0, self.bins + 1)

    def text(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["bin_low", "bin_high", "count_coverageability", "log_count_coverageability", "count_mean", "log_count_mean"])
        e = self.edges
        lc, lm = log_count(self.cmu), log_count(self.mean)
        for i in range(self.bins):
            w.writerow([repr(float(e[i])), repr(float(e[i + 1])), int(self.cmu[i]), repr(float(lc[i])), int(self.mean[i]), repr(float(lm[i]))])
        return buf.getvalue()

    def svg(self, width: int = 720, height: int = 300) -> str:
        """Two side-by-side bar charts with log-scaled counts."""
        pad, gap = 40, 30
        pw = (width - 2 * pad - gap) / 2
        ph = height - 2 * pad
        top = max(float(log_count(self.cmu).max()), float(log_count(self.mean).max()), 1.0)
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
            '<rect width="100%" height="100%" fill="white"/>',
        ]
        for k, (title, counts) in enumerate((("Coverageability", self.cmu), ("Mean coverage", self.mean))):
            x0 = pad + k * (pw + gap)
            parts.append(f'<text x="{x0 + pw / 2:.2f}" y="{pad - 12}" font-size="13" text-anchor="middle">{title}</text>')
            parts.append(f'<line x1="{x0:.2f}" y1="{pad + ph}" x2="{x0 + pw:.2f}" y2="{pad + ph}" stroke="black"/>')
            parts.append(f'<line x1="{x0:.2f}" y1="{pad}" x2="{x0:.2f}" y2="{pad + ph}" stroke="black"/>')
            bw = pw / self.bins
            for i, h in enumerate(log_count(counts)):
                if h <= 0:
                    continue
                bh = ph * h / top
                parts.append(
                    f'<rect x="{x0 + i * bw:.2f}" y="{pad + ph - bh:.2f}" width="{bw * 0.9:.2f}" height="{bh:.2f}" fill="#4a7ab5"/>'
                )
            for tick in (0.0, 0.5, 1.0):
                parts.append(f'<text x="{x0 + tick * pw:.2f}" y="{pad + ph + 16}" font-size="10" text-anchor="middle">{tick:g}</text>')
            parts.append(f'<text x="{x0 - 6:.2f}" y="{pad + 4}" font-size="10" text-anchor="end">{top:.2f}</text>')
        parts.append(f'<text x="{width / 2:.2f}" y="{height - 6}" font-size="10" text-anchor="middle">log10(1 + count)</text>')
        parts.append("</svg>")
        return "\n".join(parts) + "\n"


def render_distribution_report(cmu: Sequence[float], mean: Sequence[float], bins: int = DEFAULT_BINS) -> DistributionReport:
    if bins < 1:
        raise ValueError("bins must be at least 1")
    if len(cmu) == 0:
        raise ValueError("need at least one target")
    c = np.bincount(bin_index(cmu, bins), minlength=bins)
    m = np.bincount(bin_index(mean, bins), minlength=bins)
    return DistributionReport(bins, c, m)

