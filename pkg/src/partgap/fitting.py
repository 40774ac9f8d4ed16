"""Least-squares polynomial models in ln d for threshold series.

The m_k_d series grow polylogarithmically in d, so a low-degree
polynomial in ln d captures them well across seventy decades.  Fits are
plain unweighted least squares on a column-normalized Vandermonde
matrix; normalization keeps the design conditioned when (ln d)^5 spans
1 to ~10^11, and coefficients are rescaled back afterwards.  Agreement
with published models is judged at the evaluation level, not
coefficient by coefficient: the low-order coefficients of such fits are
numerically tender.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .repulsion import MkGrid


@dataclass(frozen=True)
class LogPolyModel:
    """value(d) ~ sum_j coefficients[j] * (ln d)^j, natural log.

    ``window_exponent`` records the largest decimal exponent among the
    fitted thresholds (the fit used d <= 10^window_exponent).
    """

    degree: int
    coefficients: tuple[float, ...]
    window_exponent: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("degree must be >= 1, got %d" % self.degree)
        if len(self.coefficients) != self.degree + 1:
            raise ValueError(
                "degree %d needs %d coefficients, got %d"
                % (self.degree, self.degree + 1, len(self.coefficients))
            )
        if not all(math.isfinite(c) for c in self.coefficients):
            raise ValueError("coefficients must be finite")


def evaluate(model: LogPolyModel, d: int | float) -> float:
    """Model value at threshold d >= 1 (Horner on ln d)."""
    if d < 1:
        raise ValueError("model is defined for d >= 1, got %r" % (d,))
    t = math.log(d)
    acc = 0.0
    for c in reversed(model.coefficients):
        acc = acc * t + c
    return acc


def fit_log_poly(points: Sequence[tuple[int, int]], degree: int) -> LogPolyModel:
    """Least-squares fit of a degree-``degree`` polynomial in ln d.

    ``points`` are (d, value) pairs with integer d >= 1 (d = 1
    contributes ln d = 0).  Raises ValueError when the system is
    underdetermined or rank-deficient; never silently regularizes.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1, got %d" % degree)
    if len(points) < degree + 1:
        raise ValueError(
            "need at least %d points for degree %d, got %d"
            % (degree + 1, degree, len(points))
        )
    if any(d < 1 for d, _ in points):
        raise ValueError("all thresholds must satisfy d >= 1")
    x = np.array([math.log(d) for d, _ in points], dtype=float)
    y = np.array([v for _, v in points], dtype=float)
    design = np.vander(x, degree + 1, increasing=True)
    norms = np.linalg.norm(design, axis=0)
    if np.any(norms == 0.0):
        raise ValueError("design matrix has a zero column; fit is degenerate")
    scaled, _, rank, _ = np.linalg.lstsq(design / norms, y, rcond=None)
    if rank < degree + 1:
        raise ValueError(
            "rank-deficient fit (rank %d < %d); thresholds too repetitive"
            % (rank, degree + 1)
        )
    coeffs = scaled / norms
    window = max(len(str(int(d))) - 1 for d, _ in points)
    return LogPolyModel(
        degree=degree,
        coefficients=tuple(float(c) for c in coeffs),
        window_exponent=window,
    )


def grid_points(grid: MkGrid, k: int) -> list[tuple[int, int]]:
    """(10^i, m) pairs for one grid series, fit-ready."""
    return [(10 ** i, m) for i, m in grid.coordinates(k)]


def fit_grid_series(grid: MkGrid, k: int, degree: int) -> LogPolyModel:
    """Fit one power-of-ten series of a grid; see fit_log_poly."""
    return fit_log_poly(grid_points(grid, k), degree)


def model_as_dict(model: LogPolyModel) -> dict:
    """JSON-ready form: degree, coefficients, window exponent."""
    return {
        "degree": model.degree,
        "coefficients": list(model.coefficients),
        "window_exponent": model.window_exponent,
    }
