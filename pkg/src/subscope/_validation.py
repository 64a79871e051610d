"""Input validation helpers used across the estimator-facing modules."""

from __future__ import annotations

import numpy as np

from .exceptions import InvalidSoftLabel, NonFiniteValue, ZeroVector


def as_matrix(x, name: str = "X") -> np.ndarray:
    """Coerce to a 2-D float64 array, rejecting anything else."""
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {arr.shape}")
    return arr


def as_vector(x, name: str = "x") -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be 1-D, got shape {arr.shape}")
    return arr


def check_finite(arr: np.ndarray, section: str) -> None:
    """Raise NonFiniteValue naming the first offending entry."""
    if np.isfinite(arr).all():
        return
    bad = np.argwhere(~np.isfinite(np.atleast_2d(arr)))
    row, col = int(bad[0][0]), int(bad[0][1])
    raise NonFiniteValue(section, row, col)


def unit(v: np.ndarray, name: str = "vector", eps: float = 1e-12) -> np.ndarray:
    """Return v scaled to unit L2 norm; raise ZeroVector below eps."""
    n = float(np.linalg.norm(v))
    if n < eps:
        raise ZeroVector(f"{name} has norm {n:.3e} < {eps:.0e}, cannot normalize")
    return v / n


def normalize_rows(x: np.ndarray, eps: float = 1e-12) -> np.ndarray:
    """L2-normalize each row; zero rows are left untouched."""
    norms = np.linalg.norm(x, axis=1, keepdims=True)
    safe = np.where(norms < eps, 1.0, norms)
    return x / safe


def check_simplex(g, n: int, atol: float = 1e-6) -> np.ndarray:
    """Validate a soft subgroup label: length n, entries >= 0, sums to 1."""
    arr = np.asarray(g, dtype=np.float64)
    if arr.shape != (n,):
        raise InvalidSoftLabel(f"soft label has shape {arr.shape}, expected ({n},)")
    if not np.isfinite(arr).all():
        raise InvalidSoftLabel("soft label contains non-finite entries")
    if (arr < -atol).any():
        raise InvalidSoftLabel(f"soft label has negative entry {arr.min():.3e}")
    total = float(arr.sum())
    if abs(total - 1.0) > atol:
        raise InvalidSoftLabel(f"soft label sums to {total:.9f}, expected 1")
    return np.clip(arr, 0.0, None)
