"""Coupling validation over the s-space, potentials, and the pointwise
derivative-condition identities.

The derivative condition reads d_mu psi = (a J_mu - b K_mu gamma5) psi.
Sign constraint: with the stored K^mu = psibar gamma5 gamma^mu psi one has
slash(K) gamma5 psi = +(A + iB gamma5) psi, so the axial coupling must carry
the minus sign for solutions to satisfy the cubic field equation
i gamma^mu d_mu psi = 2s (A + iB gamma5) psi with 2s = i(a - b).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .bilinear import Bilinears, compute
from .clifford import build, minkowski_dot, slash
from .errors import DegenerateB, InconsistentBilinears, IntegrabilityViolation, NullCurrent
from .lounesto import ClassifyOptions
from .spinor import DEFAULT_TOL

_TWO_PI = 2.0 * math.pi
# quarter-turn intervals for the polar angles of a and b (open)
_QUARTERS = (
    (0.0, math.pi / 2.0),
    (math.pi / 2.0, math.pi),
    (math.pi, 3.0 * math.pi / 2.0),
    (3.0 * math.pi / 2.0, _TWO_PI),
)
# admissible (W_i, Z_j) quarter pairs, numbered domains 1..6
DOMAIN_PAIRS = {(1, 1): 1, (4, 1): 2, (4, 4): 3, (2, 2): 4, (3, 2): 5, (3, 3): 6}


class OmegaDomain(enum.Enum):
    OMEGA_1 = 1
    OMEGA_2 = 2
    OMEGA_3 = 3
    OMEGA_4 = 4
    OMEGA_5 = 5
    OMEGA_6 = 6
    OUTSIDE = 0


@dataclass(frozen=True)
class RimParams:
    a: complex
    b: complex
    s: float
    rho: float
    domain: OmegaDomain


@dataclass(frozen=True)
class SSpacePoint:
    phi1: float
    phi2: float
    a0: float
    b0: float
    domain: OmegaDomain


@dataclass(frozen=True)
class Potentials:
    S: float
    R: float


@dataclass(frozen=True)
class BaseValidation:
    ok: bool
    reasons: tuple[str, ...]
    A: float
    B: float
    A1: complex
    A2: complex


def _quarter(phi: float) -> int | None:
    for i, (lo, hi) in enumerate(_QUARTERS, start=1):
        if lo < phi < hi:
            return i
    return None  # boundary angles live in no open quarter


def domain_of(phi1: float, phi2: float) -> OmegaDomain:
    """Domain tag of a polar-angle pair; boundaries classify outside."""
    w = _quarter(phi1 % _TWO_PI)
    z = _quarter(phi2 % _TWO_PI)
    if w is None or z is None:
        return OmegaDomain.OUTSIDE
    return OmegaDomain(DOMAIN_PAIRS.get((w, z), 0))


def validate(a: complex, b: complex, tol: float = DEFAULT_TOL) -> RimParams:
    """Check the coupling pair and derive (s, rho, domain).

    Raises IntegrabilityViolation when Re(a) != Re(b) and DegenerateB when
    Im(b) = 0.  An angle pair outside every domain is a tag, not an error.
    """
    a = complex(a)
    b = complex(b)
    scale = max(1.0, abs(a), abs(b))
    if abs(a.real - b.real) > tol * scale:
        raise IntegrabilityViolation(f"Re(a)={a.real!r} != Re(b)={b.real!r}")
    if abs(b.imag) <= tol * scale:
        raise DegenerateB("Im(b) = 0 makes the axial potential diverge")
    s = 0.5 * (b.imag - a.imag)  # real part of i(a - b)/2
    rho = (a.imag - b.imag) / b.imag
    return RimParams(a=a, b=b, s=s, rho=rho, domain=domain_of(np.angle(a) % _TWO_PI, np.angle(b) % _TWO_PI))


def sspace_point(params: RimParams) -> SSpacePoint:
    return SSpacePoint(
        phi1=float(np.angle(params.a) % _TWO_PI),
        phi2=float(np.angle(params.b) % _TWO_PI),
        a0=abs(params.a),
        b0=abs(params.b),
        domain=params.domain,
    )


def potentials(bil: Bilinears, params: RimParams, tol: float = DEFAULT_TOL) -> Potentials:
    """Scalar potentials S = ln(J)/(2 Re a), R = ln((A-iB)/J)/(2i Im b).

    Principal branch for both logarithms; R is real whenever A and B are.
    """
    j2 = complex(minkowski_dot(bil.J, bil.J))
    if j2.real <= tol * max(1.0, bil.scale**2):
        raise NullCurrent("J^2 <= 0: potentials need a timelike current")
    j = math.sqrt(j2.real)
    s_pot = math.log(j) / (2.0 * params.a.real)
    r_pot = np.log((bil.A - 1j * bil.B) / j) / (2j * params.b.imag)
    return Potentials(S=s_pot, R=float(np.real(r_pot)))


def vartheta(params: RimParams, pots: Potentials) -> complex:
    """Phase factor exp(2 i s R); unit modulus for real s and R."""
    return complex(np.exp(2j * params.s * pots.R))


def rim_derivative(psi: np.ndarray, params: RimParams) -> np.ndarray:
    """The four coordinate derivatives D_mu psi implied by the condition.

    Rows are indexed by mu; the stored currents are contravariant, so they
    are lowered with eta here.  The axial coupling enters with -gamma5 (see
    module docstring).
    """
    b = compute(psi)
    g5 = build().gamma5
    eta_diag = np.array([1.0, -1.0, -1.0, -1.0])
    jl = eta_diag * b.J
    kl = eta_diag * b.K
    g5psi = g5 @ psi
    return np.stack([params.a * jl[mu] * psi - params.b * kl[mu] * g5psi for mu in range(4)])


def heisenberg_residual(psi: np.ndarray, params: RimParams) -> float:
    """Norm of i gamma^mu D_mu psi - 2s (A + iB gamma5) psi.

    Vanishes identically for any spinor and any valid coupling pair; this is
    the pointwise statement that condition solutions solve the cubic
    equation.
    """
    b = compute(psi)
    g = build()
    d = rim_derivative(psi, params)
    lhs = 1j * sum(g.gamma[mu] @ d[mu] for mu in range(4))
    rhs = 2.0 * params.s * (b.A * psi + 1j * b.B * (g.gamma5 @ psi))
    return float(np.linalg.norm(lhs - rhs))


def del_ab_residuals(psi: np.ndarray, params: RimParams) -> tuple[float, float]:
    """Max-over-mu residuals of the derivative identities for A and B.

    d_mu A = (a+abar) A J_mu + i(b-bbar) B K_mu and
    d_mu B = (a+abar) B J_mu - i(b-bbar) A K_mu; the sign of the K-term in
    the B identity is the one that closes algebraically in this
    representation.  The dual derivative is (D_mu psi)^dag gamma0.
    """
    b = compute(psi)
    g0 = build().gamma[0]
    g5 = build().gamma5
    eta_diag = np.array([1.0, -1.0, -1.0, -1.0])
    jl = eta_diag * b.J
    kl = eta_diag * b.K
    d = rim_derivative(psi, params)
    dual = np.conj(psi) @ g0
    a, bb = params.a, params.b
    worst_a = worst_b = 0.0
    for mu in range(4):
        dbar = np.conj(d[mu]) @ g0
        da = dbar @ psi + dual @ d[mu]
        db = 1j * (dbar @ g5 @ psi + dual @ g5 @ d[mu])
        rhs_a = (a + np.conj(a)) * b.A * jl[mu] + 1j * (bb - np.conj(bb)) * b.B * kl[mu]
        rhs_b = (a + np.conj(a)) * b.B * jl[mu] - 1j * (bb - np.conj(bb)) * b.A * kl[mu]
        worst_a = max(worst_a, abs(da - rhs_a))
        worst_b = max(worst_b, abs(db - rhs_b))
    return worst_a, worst_b


def validate_rim_base(psi: np.ndarray, opt: ClassifyOptions = ClassifyOptions()) -> BaseValidation:
    """Accept a base iff A, B, A1, A2 are all nonzero and A1 != +-A2.

    Under the Dirac dual A2 = conj(A1), so the essential content is
    A != 0 and B != 0 (type 1); the remaining constraints are reported
    individually so a rejection names what failed.
    """
    b = compute(psi)
    thr = opt.tol * max(1.0, b.scale)
    reasons = []
    if abs(b.A) <= thr:
        reasons.append("A=0")
    if abs(b.B) <= thr:
        reasons.append("B=0")
    if abs(b.A1) <= thr:
        reasons.append("A1=0")
    if abs(b.A2) <= thr:
        reasons.append("A2=0")
    if abs(b.A1 - b.A2) <= thr:
        reasons.append("A1=+A2")
    if abs(b.A1 + b.A2) <= thr:
        reasons.append("A1=-A2")
    return BaseValidation(
        ok=not reasons,
        reasons=tuple(reasons),
        A=float(np.real(b.A)),
        B=float(np.real(b.B)),
        A1=complex(b.A1),
        A2=complex(b.A2),
    )


def restriction_operator(bil: Bilinears, tol: float = DEFAULT_TOL) -> np.ndarray:
    """G = (1/2 J^2) J^mu K^alpha [gamma_alpha, gamma_mu] gamma5.

    Also evaluates the unreduced form (1/J^2) slash(K) slash(J) gamma5 and
    checks the two agree (they differ by (J.K/J^2) gamma5, zero by the
    orthogonality constraint).
    """
    j2 = complex(minkowski_dot(bil.J, bil.J))
    if abs(j2) <= tol * max(1.0, bil.scale**2):
        raise NullCurrent("J^2 = 0: restriction operator undefined")
    g5 = build().gamma5
    sk = slash(bil.K)
    sj = slash(bil.J)
    g_comm = (sk @ sj - sj @ sk) @ g5 / (2.0 * j2)
    g_raw = sk @ sj @ g5 / j2
    # the forms differ by (J.K / J^2) gamma5, so this bounds |J.K|
    if np.max(np.abs(g_comm - g_raw)) > tol * max(1.0, bil.scale**2) / abs(j2):
        raise InconsistentBilinears("J.K != 0: the two operator forms disagree")
    return g_comm


def heisenberg_residual_batch(
    psis: np.ndarray,
    a: np.ndarray,
    b: np.ndarray,
    s: np.ndarray,
) -> np.ndarray:
    """Vectorized residuals for stacks of spinors and coupling pairs."""
    from .bilinear import compute_batch

    psis = np.atleast_2d(np.asarray(psis, dtype=complex))
    cov = compute_batch(psis)
    g = build()
    eta_diag = np.array([1.0, -1.0, -1.0, -1.0])
    jl = cov["J"] * eta_diag
    kl = cov["K"] * eta_diag
    g5psi = psis @ g.gamma5.T
    a = np.asarray(a, dtype=complex)[:, None, None]
    b_ = np.asarray(b, dtype=complex)[:, None, None]
    d = a * jl[:, :, None] * psis[:, None, :] - b_ * kl[:, :, None] * g5psi[:, None, :]
    gammas = np.stack(g.gamma)
    lhs = 1j * np.einsum("mij,nmj->ni", gammas, d)
    rhs = 2.0 * np.asarray(s)[:, None] * (
        cov["A"][:, None] * psis + 1j * cov["B"][:, None] * g5psi
    )
    return np.linalg.norm(lhs - rhs, axis=1)


def del_ab_residuals_batch(
    psis: np.ndarray,
    a: np.ndarray,
    b: np.ndarray,
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized (max over mu) residuals of the A and B identities."""
    from .bilinear import compute_batch

    psis = np.atleast_2d(np.asarray(psis, dtype=complex))
    cov = compute_batch(psis)
    g = build()
    eta_diag = np.array([1.0, -1.0, -1.0, -1.0])
    jl = cov["J"] * eta_diag
    kl = cov["K"] * eta_diag
    g5psi = psis @ g.gamma5.T
    a = np.asarray(a, dtype=complex)
    b_ = np.asarray(b, dtype=complex)
    d = (
        a[:, None, None] * jl[:, :, None] * psis[:, None, :]
        - b_[:, None, None] * kl[:, :, None] * g5psi[:, None, :]
    )
    g0 = g.gamma[0]
    dbar = np.conj(d) @ g0  # (n, 4mu, 4)
    dual = np.conj(psis) @ g0
    da = np.einsum("nmj,nj->nm", dbar, psis) + np.einsum("nj,nmj->nm", dual, d)
    g5d = np.einsum("ij,nmj->nmi", g.gamma5, d)
    db = 1j * (np.einsum("nmj,nj->nm", dbar, g5psi) + np.einsum("nj,nmj->nm", dual, g5d))
    two_re_a = (a + np.conj(a))[:, None]
    i_two_im_b = (1j * (b_ - np.conj(b_)))[:, None]
    rhs_a = two_re_a * cov["A"][:, None] * jl + i_two_im_b * cov["B"][:, None] * kl
    rhs_b = two_re_a * cov["B"][:, None] * jl - i_two_im_b * cov["A"][:, None] * kl
    return (
        np.max(np.abs(da - rhs_a), axis=1),
        np.max(np.abs(db - rhs_b), axis=1),
    )
