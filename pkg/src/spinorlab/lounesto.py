"""Lounesto classification from covariants, and the fast coefficient rules.

Classes 1-3 are regular (A or B nonzero), 4-6 singular (A = B = 0, told
apart by which of K, S vanish).  J must never vanish.  The coefficient route
classifies psi = r1*block1(base) + r2*block2(base) straight from (r1, r2)
and the base scalars (A, B) without building any covariant.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bilinear import Bilinears
from .errors import AmbiguousScale, InconsistentBilinears, InvalidBase, NullCurrent, ZeroDecomposition
from .spinor import DEFAULT_TOL, DualKind


class LounestoClass(enum.IntEnum):
    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3
    TYPE4 = 4
    TYPE5 = 5
    TYPE6 = 6

    @property
    def regular(self) -> bool:
        return self.value <= 3


@dataclass(frozen=True)
class ClassifyOptions:
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.tol <= 0:
            raise ValueError("tol must be positive")


def classify(b: Bilinears, opt: ClassifyOptions = ClassifyOptions()) -> LounestoClass:
    """Assign the unique class; covariants must come from the Dirac dual."""
    if b.dual is not DualKind.DIRAC:
        raise ValueError("classification is defined for the Dirac dual only")
    if b.scale < opt.tol:
        raise AmbiguousScale("spinor norm below threshold")
    thr = opt.tol * max(1.0, b.scale)
    if np.max(np.abs(b.J)) < thr:
        raise NullCurrent("all current components below threshold")

    a_zero = abs(b.A) < thr
    b_zero = abs(b.B) < thr
    k_zero = np.max(np.abs(b.K)) < thr
    s_zero = np.max(np.abs(b.S)) < thr

    if not a_zero or not b_zero:
        if k_zero or s_zero:
            raise InconsistentBilinears("regular class requires K != 0 and S != 0")
        if not a_zero and not b_zero:
            return LounestoClass.TYPE1
        return LounestoClass.TYPE2 if not a_zero else LounestoClass.TYPE3
    if not k_zero and not s_zero:
        return LounestoClass.TYPE4
    if k_zero and not s_zero:
        return LounestoClass.TYPE5
    if not k_zero and s_zero:
        return LounestoClass.TYPE6
    raise InconsistentBilinears("A = B = 0 with K = S = 0 but J != 0")


def _check_base_scalars(A: float, B: float, tol: float) -> None:
    s = max(1.0, abs(A), abs(B))
    if abs(A) <= tol * s or abs(B) <= tol * s:
        raise InvalidBase("base must have A != 0 and B != 0")


def classify_by_coefficients(
    r1: complex,
    r2: complex,
    A: float,
    B: float,
    opt: ClassifyOptions = ClassifyOptions(),
) -> LounestoClass:
    """Class of r1*block1 + r2*block2 of a regular base with scalars (A, B).

    Only classes 1, 2, 3 and 6 are reachable; the ratio conditions
    A = -iB (w+/w-) and A = -iB (w-/w+) with w+- = r1 r2* +- r1* r2 select
    types 2 and 3, one vanishing coordinate selects type 6.
    """
    tol = opt.tol
    _check_base_scalars(A, B, tol)
    rs = max(1.0, abs(r1), abs(r2))
    r1_zero = abs(r1) <= tol * rs
    r2_zero = abs(r2) <= tol * rs
    if r1_zero and r2_zero:
        raise ZeroDecomposition("r1 = r2 = 0 is not a decomposition")
    if r1_zero or r2_zero:
        return LounestoClass.TYPE6

    z = r1 * np.conj(r2)
    guard = abs(z.real * z.imag) > tol * (abs(r1) * abs(r2)) ** 2
    if guard:
        w_plus = 2.0 * z.real
        w_minus = 2j * z.imag
        margin = tol * max(abs(A), abs(B), 1.0)
        if abs(A + 1j * B * (w_plus / w_minus)) <= margin:
            return LounestoClass.TYPE2
        if abs(A + 1j * B * (w_minus / w_plus)) <= margin:
            return LounestoClass.TYPE3
    # boundary-straddling inputs fall through to the generic class
    return LounestoClass.TYPE1


def coefficient_margins(r1: complex, r2: complex, A: float, B: float) -> dict[str, float]:
    """Distances to the type-2/3 decision surfaces (scaled like classify)."""
    z = r1 * np.conj(r2)
    scale = max(abs(A), abs(B), 1.0)
    out = {
        "guard": abs(z.real * z.imag) / max((abs(r1) * abs(r2)) ** 2, 1e-300),
        "type2": float("inf"),
        "type3": float("inf"),
    }
    if z.real != 0.0 and z.imag != 0.0:
        w_plus = 2.0 * z.real
        w_minus = 2j * z.imag
        out["type2"] = abs(A + 1j * B * (w_plus / w_minus)) / scale
        out["type3"] = abs(A + 1j * B * (w_minus / w_plus)) / scale
    return out


def bilinears_near_degenerate(
    b: Bilinears,
    opt: ClassifyOptions = ClassifyOptions(),
    band: float = 10.0,
) -> bool:
    """True when a zero-test input sits just above its threshold, i.e. the
    assigned class would flip under a ``band``-fold tolerance change."""
    thr = opt.tol * max(1.0, b.scale)
    for value in (abs(b.A), abs(b.B), float(np.max(np.abs(b.K))), float(np.max(np.abs(b.S)))):
        if thr < value <= band * thr:
            return True
    return False


def near_degenerate(
    r1: complex,
    r2: complex,
    A: float,
    B: float,
    opt: ClassifyOptions = ClassifyOptions(),
    band: float = 10.0,
) -> bool:
    """True when the input sits within ``band`` tolerances of a decision
    boundary (ratio conditions or a vanishing coordinate)."""
    tol = opt.tol
    rs = max(1.0, abs(r1), abs(r2))
    small = min(abs(r1), abs(r2))
    if tol * rs < small <= band * tol * rs:
        return True
    m = coefficient_margins(r1, r2, A, B)
    lo = min(m["type2"], m["type3"])
    return tol < lo <= band * tol
