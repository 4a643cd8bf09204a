"""Mass-dimension-one (Elko-type) spinors, the Xi involution and their
momentum-space identities.

Construction: lambda = (sign * i * Theta conj(phi_L), phi_L) with phi_L the
boosted helicity spinor sqrt(E - h p) * phi_unit^h.  The charge-conjugation
operator is gamma^2 composed with complex conjugation (phase exactly 1 in
this representation); self-conjugate spinors carry sign = +1,
anti-self-conjugate sign = -1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bilinear import Bilinears, compute
from .clifford import build, slash
from .rim import RimParams
from .spinor import DualKind, assemble, block1, block2, mdo_dual

# realized eigenvalue of slash(p) Xi on a constructed spinor, by conjugacy
DIRACLIKE_SIGN = {"S": +1, "A": -1}


@dataclass(frozen=True)
class Momentum:
    m: float
    p: float
    theta: float
    phi: float
    E: float = field(init=False)

    def __post_init__(self):
        if self.m <= 0:
            raise ValueError("mass must be positive")
        if self.p < 0:
            raise ValueError("|p| must be non-negative")
        object.__setattr__(self, "E", math.hypot(self.p, self.m))


@dataclass(frozen=True)
class ElkoSpinor:
    spinor: np.ndarray
    conj: str  # "S" or "A"
    helicity: int
    sign: int


def wigner_theta() -> np.ndarray:
    """2x2 time-reversal matrix [[0,-1],[1,0]]; Theta sigma Theta^-1 = -sigma*."""
    return np.array([[0.0, -1.0], [1.0, 0.0]])


def helicity_spinor(theta: float, phi: float, h: int) -> np.ndarray:
    """Unit eigenvector of sigma.phat with eigenvalue h, half-angle phases
    e^{-+ i phi/2} on the upper/lower components."""
    if h not in (+1, -1):
        raise ValueError("helicity must be +1 or -1")
    up = np.exp(-0.5j * phi)
    dn = np.exp(+0.5j * phi)
    if h > 0:
        return np.array([math.cos(theta / 2.0) * up, math.sin(theta / 2.0) * dn])
    return np.array([-math.sin(theta / 2.0) * up, math.cos(theta / 2.0) * dn])


def sigma_phat(theta: float, phi: float) -> np.ndarray:
    st, ct = math.sin(theta), math.cos(theta)
    return np.array([[ct, st * np.exp(-1j * phi)], [st * np.exp(1j * phi), -ct]])


def boosted_left(mom: Momentum, h: int) -> np.ndarray:
    """Left-handed block sqrt(E - h p) * phi_unit^h.

    The scalar is the helicity eigenvalue of the canonical left boost acting
    on the sqrt(m)-normalized rest spinor; at p = 0 it reduces to sqrt(m).
    """
    return math.sqrt(mom.E - h * mom.p) * helicity_spinor(mom.theta, mom.phi, h)


def elko(mom: Momentum, helicity: int, conj: str, sign: int | None = None) -> ElkoSpinor:
    """Construct a dual-helicity spinor and certify its conjugation eigenvalue.

    The top-block sign is tied to the conjugacy class: C lambda = +lambda
    needs +i, C lambda = -lambda needs -i.  Passing a contradictory sign is
    an error.
    """
    if conj not in ("S", "A"):
        raise ValueError("conj must be 'S' or 'A'")
    expected_sign = +1 if conj == "S" else -1
    if sign is None:
        sign = expected_sign
    elif sign != expected_sign:
        raise ValueError(f"conj={conj!r} requires top-block sign {expected_sign:+d}")
    phi_l = boosted_left(mom, helicity)
    top = sign * 1j * wigner_theta() @ np.conj(phi_l)
    lam = assemble(top, phi_l)
    eigen = +1 if conj == "S" else -1
    if np.max(np.abs(charge_conjugate(lam) - eigen * lam)) > 1e-12 * np.linalg.norm(lam):
        raise AssertionError("charge-conjugation eigenvalue check failed")
    return ElkoSpinor(spinor=lam, conj=conj, helicity=int(helicity), sign=int(sign))


def charge_conjugate(psi: np.ndarray) -> np.ndarray:
    return build().gamma[2] @ np.conj(psi)


def four_momentum(mom: Momentum) -> np.ndarray:
    st, ct = math.sin(mom.theta), math.cos(mom.theta)
    return np.array(
        [mom.E, mom.p * st * math.cos(mom.phi), mom.p * st * math.sin(mom.phi), mom.p * ct]
    )


def xi(mom: Momentum) -> np.ndarray:
    """Momentum-space involution; Xi^2 = 1 and [Xi, slash(p)] = 0.

    The 2x2 blocks are the standard ones; their placement on the diagonal
    follows this package's chiral layout (swapping them is what makes the
    commutator vanish with sigma^k sitting upper-right in gamma^k).
    """
    m, p = mom.m, mom.p
    E = mom.E
    s, c = math.sin(mom.theta), math.cos(mom.theta)
    em, ep = np.exp(-1j * mom.phi), np.exp(1j * mom.phi)
    top = np.array(
        [
            [-1j * p * s / m, -1j * (E - p * c) * em / m],
            [1j * (E + p * c) * ep / m, 1j * p * s / m],
        ]
    )
    bottom = np.array(
        [
            [1j * p * s / m, -1j * (E + p * c) * em / m],
            [1j * (E - p * c) * ep / m, -1j * p * s / m],
        ]
    )
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = top
    out[2:, 2:] = bottom
    return out


def diraclike_residual(e: ElkoSpinor, mom: Momentum) -> tuple[float, int]:
    """Residual of (slash(p) Xi - eta m) lambda minimized over eta = +-1.

    Returns (residual, realized eta); the realized sign must match
    DIRACLIKE_SIGN[conj].
    """
    lam = e.spinor
    v = slash(four_momentum(mom)) @ xi(mom) @ lam
    best = None
    for eta in (+1, -1):
        r = float(np.linalg.norm(v - eta * mom.m * lam))
        if best is None or r < best[0]:
            best = (r, eta)
    return best


def chirality_current_residuals(e: ElkoSpinor, mom: Momentum) -> np.ndarray:
    """Residuals of the four current-chirality relations under the Xi dual.

    With lambda_L = (1 + gamma5)/2 lambda (the bottom block here) and all
    covariants from the same dual:
        slash(J) lambda_L = (A - iB) lambda_R
        slash(J) lambda_R = (A + iB) lambda_L
        slash(K) lambda_L = (A - iB) lambda_R
        slash(K) lambda_R = -(A + iB) lambda_L
    The axial pair carries the opposite relative sign pattern to the vector
    pair in this gamma5 convention.
    """
    lam = e.spinor
    x = xi(mom)
    bil = compute(lam, DualKind.MDO, x)
    lam_l = assemble(np.zeros(2), block2(lam))
    lam_r = assemble(block1(lam), np.zeros(2))
    sj = slash(bil.J)
    sk = slash(bil.K)
    amib = bil.A - 1j * bil.B
    apib = bil.A + 1j * bil.B
    return np.array(
        [
            np.linalg.norm(sj @ lam_l - amib * lam_r),
            np.linalg.norm(sj @ lam_r - apib * lam_l),
            np.linalg.norm(sk @ lam_l - amib * lam_r),
            np.linalg.norm(sk @ lam_r + apib * lam_l),
        ]
    )


def mdo_norm(e: ElkoSpinor, mom: Momentum) -> complex:
    """Dual contraction with the Xi dual (nonzero, unlike the Dirac one)."""
    lam = e.spinor
    return complex(mdo_dual(lam, xi(mom)) @ lam)


def fg_functions(
    S: float,
    R: float,
    params: RimParams,
    bil: Bilinears,
    mom: Momentum,
    sign: int = -1,
) -> tuple[complex, complex]:
    """Decomposition exponents for the two chiral blocks.

    F = -2isR + sign * p sin(theta) (A+iB) e^{-2(a+abar)S} / (2(a+abar)),
    G = +2isR + sign * p sin(theta) (A-iB) e^{-2(a+abar)S} / (2(a+abar)).
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    two_re_a = 2.0 * params.a.real
    common = sign * mom.p * math.sin(mom.theta) * np.exp(-2.0 * two_re_a * S) / (2.0 * two_re_a)
    f = -2j * params.s * R + (bil.A + 1j * bil.B) * common
    g = +2j * params.s * R + (bil.A - 1j * bil.B) * common
    return complex(f), complex(g)


def fg_exponential_forms(
    S: float,
    R: float,
    params: RimParams,
    bil: Bilinears,
    mom: Momentum,
    sign: int = -1,
) -> dict[str, complex]:
    """Raw e^F, e^G next to their J^2 = e^{2(a+abar)S} simplifications.

    When S comes from the potentials of the same covariants, the raw and
    simplified values agree; the simplified pair is
    e^F = vartheta^-1 exp[sign p sin(theta) / (2(a+abar)(A-iB))] and
    e^G = vartheta   exp[sign p sin(theta) / (2(a+abar)(A+iB))].
    """
    f, g = fg_functions(S, R, params, bil, mom, sign)
    two_re_a = 2.0 * params.a.real
    theta_phase = np.exp(2j * params.s * R)
    x = sign * mom.p * math.sin(mom.theta) / (2.0 * two_re_a)
    return {
        "raw_F": complex(np.exp(f)),
        "raw_G": complex(np.exp(g)),
        "simplified_F": complex(np.exp(x / (bil.A - 1j * bil.B)) / theta_phase),
        "simplified_G": complex(theta_phase * np.exp(x / (bil.A + 1j * bil.B))),
    }


def xi_checks(mom: Momentum) -> tuple[float, float]:
    """(max |Xi^2 - 1|, max |[Xi, slash(p)]|) for one momentum."""
    x = xi(mom)
    sp = slash(four_momentum(mom))
    return (
        float(np.max(np.abs(x @ x - np.eye(4)))),
        float(np.max(np.abs(x @ sp - sp @ x))),
    )


def dual_helicity_eigenvalues(e: ElkoSpinor, mom: Momentum) -> tuple[float, float]:
    """Rayleigh quotients of sigma.phat on the two blocks (must be opposite)."""
    sp = sigma_phat(mom.theta, mom.phi)
    top = np.asarray(block1(e.spinor))
    bottom = np.asarray(block2(e.spinor))
    ev = []
    for blk in (top, bottom):
        n = np.real(np.vdot(blk, blk))
        ev.append(float(np.real(np.vdot(blk, sp @ blk)) / n))
    return ev[0], ev[1]
