"""Spinor values, duals and chiral parts.

A spinor is a plain complex ndarray of shape (4,), components ordered
(P11, P12, P21, P22): the top pair is block 1, the bottom pair block 2.
Dual spinors are row arrays of shape (4,); right-multiply them onto columns.
"""

from __future__ import annotations

import enum

import numpy as np

from .clifford import build, projector
from .errors import DegenerateXi

DEFAULT_TOL = 1e-9


class DualKind(enum.Enum):
    DIRAC = "dirac"
    MDO = "mdo"


def as_spinor(values) -> np.ndarray:
    psi = np.asarray(values, dtype=complex).reshape(4)
    if not np.all(np.isfinite(psi.view(float))):
        raise ValueError("spinor components must be finite")
    return psi


def norm_sq(psi: np.ndarray) -> float:
    """Sum of |c_i|^2; the quadratic scale of every bilinear."""
    return float(np.sum(np.abs(np.asarray(psi)) ** 2))


def quad_scale(psi: np.ndarray) -> float:
    """Floor-at-one scale for zero-testing quantities quadratic in psi."""
    return max(1.0, norm_sq(psi))


def quartic_scale(psi: np.ndarray) -> float:
    """Floor-at-one scale for residuals quartic in psi (identity checks)."""
    return max(1.0, norm_sq(psi) ** 2)


def dirac_dual(psi: np.ndarray) -> np.ndarray:
    """psi^dag gamma^0 as a row."""
    return np.conj(psi) @ build().gamma[0]


def mdo_dual(psi: np.ndarray, xi: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """(Xi psi)^dag gamma^0; Xi must square to the identity."""
    xi = np.asarray(xi, dtype=complex)
    if np.max(np.abs(xi @ xi - np.eye(4))) > tol:
        raise DegenerateXi("Xi^2 != 1 beyond tolerance")
    return np.conj(xi @ psi) @ build().gamma[0]


def block1(psi: np.ndarray) -> np.ndarray:
    return np.asarray(psi)[:2]


def block2(psi: np.ndarray) -> np.ndarray:
    return np.asarray(psi)[2:]


def assemble(top: np.ndarray, bottom: np.ndarray) -> np.ndarray:
    return np.concatenate([np.asarray(top, dtype=complex), np.asarray(bottom, dtype=complex)])


def chiral_parts(psi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(P1 psi, P2 psi); the parts always recombine to psi exactly."""
    return projector(1) @ psi, projector(2) @ psi


def to_json(psi: np.ndarray) -> dict:
    """Round-trip-exact JSON form {"re": [...], "im": [...]}."""
    psi = np.asarray(psi, dtype=complex)
    return {"re": [float(x) for x in psi.real], "im": [float(x) for x in psi.imag]}


def from_json(obj: dict) -> np.ndarray:
    re = obj["re"]
    im = obj["im"]
    if len(re) != 4 or len(im) != 4:
        raise ValueError("spinor JSON needs 4 're' and 4 'im' entries")
    return as_spinor(np.array(re, dtype=float) + 1j * np.array(im, dtype=float))


def complex_to_json(z: complex) -> dict:
    return {"re": float(np.real(z)), "im": float(np.imag(z))}


def complex_from_json(obj: dict) -> complex:
    return complex(float(obj["re"]), float(obj["im"]))

