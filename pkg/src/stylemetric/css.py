"""Style vectors and the Jensen-Shannon based code style similarity (CSS)."""

from __future__ import annotations

import numpy as np

from .attributes import CSS_ORDER
from .checks import CheckReport

EPSILON = 1e-6
DIM = len(CSS_ORDER)


class UnparseableSource(ValueError):
    """The source could not be lexed or its brackets do not balance."""


def style_vector(report: CheckReport) -> np.ndarray:
    """Violation fraction per criterion, ordered by css index (Indentation excluded)."""
    if report.unparseable:
        raise UnparseableSource(f"{report.file}: {report.diagnostic or 'unparseable'}")
    v = np.zeros(DIM)
    for k, attr in enumerate(CSS_ORDER):
        n = report.opportunities.get(attr, 0)
        if n > 0:
            v[k] = min(1.0, report.count(attr) / n)
    return v


def validate_vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or not np.all(np.isfinite(v)) or np.any(v < 0) or np.any(v > 1):
        raise ValueError("style vector components must be finite and within [0, 1]")
    return v


def normalize(v, eps: float = EPSILON) -> np.ndarray:
    """ε-smooth then L1-normalize a style vector into a strictly positive distribution."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    d = np.asarray(v, dtype=float) + eps
    return d / d.sum()


def _pair(p, q) -> tuple[np.ndarray, np.ndarray]:
    p, q = np.asarray(p, dtype=float), np.asarray(q, dtype=float)
    if p.shape != q.shape:
        raise ValueError(f"length mismatch: {p.shape} vs {q.shape}")
    return p, q


def kl_divergence(p, q) -> float:
    """Σ p log₂(p/q) with 0·log(0/q) = 0."""
    p, q = _pair(p, q)
    mask = p > 0
    if np.any(q[mask] <= 0):
        return float("inf")
    return float(max(0.0, np.sum(p[mask] * np.log2(p[mask] / q[mask]))))


def js_divergence(p, q) -> float:
    p, q = _pair(p, q)
    m = 0.5 * (p + q)
    d = 0.5 * (kl_divergence(p, m) + kl_divergence(q, m))
    return float(min(1.0, max(0.0, d)))


def css(gen, ref, eps: float = EPSILON) -> float:
    """1 − JS(normalize(gen) ‖ normalize(ref)); 1 means identical style."""
    g, r = validate_vector(gen), validate_vector(ref)
    _pair(g, r)
    if np.array_equal(g, r):
        return 1.0
    return 1.0 - js_divergence(normalize(g, eps), normalize(r, eps))
