"""Compensated (Kahan-Neumaier) summation kernels.

Alternating-sign weights make every sum in this package a cancellation
hazard, so all reductions and running prefix sums go through these two
functions instead of plain ``np.sum``/``np.cumsum``.  Both operate along
the last axis and broadcast over any leading batch axes, which is what
lets the randomized bound suites evaluate 10^5 instances in one call.
"""

from __future__ import annotations

import numpy as np

__all__ = ["kahan_sum", "kahan_cumsum"]


def _neumaier_step(s, c, v):
    t = s + v
    # Neumaier's branch: feed the rounding error of whichever operand was
    # smaller into the compensation term.
    c = c + np.where(np.abs(s) >= np.abs(v), (s - t) + v, (v - t) + s)
    return t, c


def kahan_sum(values: np.ndarray, axis: int = -1) -> np.ndarray:
    """Compensated sum along ``axis`` (default last)."""
    x = np.asarray(values, dtype=np.float64)
    if x.shape[axis] == 0:
        raise ValueError("kahan_sum requires a non-empty axis")
    x = np.moveaxis(x, axis, -1)
    s = np.zeros(x.shape[:-1], dtype=np.float64)
    c = np.zeros_like(s)
    for k in range(x.shape[-1]):
        s, c = _neumaier_step(s, c, x[..., k])
    return s + c


def kahan_cumsum(values: np.ndarray, axis: int = -1) -> np.ndarray:
    """Compensated running prefix sums along ``axis`` (default last).

    Element k of the output is the compensated value of
    ``values[..., :k+1].sum()``; this is what turns a weight sequence into
    its admissibility certificate P_k.
    """
    x = np.asarray(values, dtype=np.float64)
    if x.shape[axis] == 0:
        raise ValueError("kahan_cumsum requires a non-empty axis")
    x = np.moveaxis(x, axis, -1)
    out = np.empty_like(x)
    s = np.zeros(x.shape[:-1], dtype=np.float64)
    c = np.zeros_like(s)
    for k in range(x.shape[-1]):
        s, c = _neumaier_step(s, c, x[..., k])
        out[..., k] = s + c
    return np.moveaxis(out, -1, axis)
