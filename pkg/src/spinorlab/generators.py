"""Random inputs for suites and tests (all draws from a passed Generator).

Draw order is fixed: complex arrays take real parts first, then imaginary
parts, each as standard normals of the stated shape.
"""

from __future__ import annotations

import numpy as np

from .bilinear import compute_batch


def random_spinors(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal((n, 4)) + 1j * rng.standard_normal((n, 4))


def random_complex(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def random_rim_bases(rng: np.random.Generator, n: int, margin: float = 1e-2) -> np.ndarray:
    """Valid reference spinors with |A|, |B| and ||A|-|B|| bounded away from
    zero (relative to the norm).

    The last margin keeps the Dirac image away from the type-3 surface,
    which is hit exactly when A^2 = B^2.
    """
    out = np.empty((n, 4), dtype=complex)
    have = 0
    while have < n:
        cand = random_spinors(rng, 2 * (n - have) + 8)
        cov = compute_batch(cand)
        a = np.real(cov["A"])
        b = np.real(cov["B"])
        s = cov["scale"]
        keep = (np.abs(a) > margin * s) & (np.abs(b) > margin * s) & (np.abs(np.abs(a) - np.abs(b)) > margin * s)
        took = cand[keep][: n - have]
        out[have : have + took.shape[0]] = took
        have += took.shape[0]
    return out


def random_valid_params(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Coupling pairs with Re(a) = Re(b) exactly and Im(b) away from zero."""
    re = rng.uniform(0.2, 1.5, n)
    im_a = rng.uniform(-1.0, 1.0, n)
    im_b = rng.uniform(0.2, 1.5, n) * np.where(rng.uniform(0.0, 1.0, n) < 0.5, -1.0, 1.0)
    return re + 1j * im_a, re + 1j * im_b


def random_momenta(rng: np.random.Generator, n: int):
    """(m, p, theta, phi) tuples with positive mass."""
    m = rng.uniform(0.5, 2.0, n)
    p = rng.uniform(0.0, 3.0, n)
    theta = rng.uniform(0.05, np.pi - 0.05, n)
    phi = rng.uniform(0.0, 2.0 * np.pi, n)
    return np.stack([m, p, theta, phi], axis=1)
