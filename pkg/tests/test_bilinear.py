import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spinorlab import bilinear, clifford
from spinorlab.spinor import DualKind, quartic_scale

from conftest import random_spinor


def oracle_bilinears(psi, dual_row=None):
    """Independent brute-force covariants, written out against raw matrices."""
    g = clifford.build()
    d = np.conj(psi) @ g.gamma[0] if dual_row is None else dual_row
    A = d @ psi
    B = 1j * (d @ g.gamma5 @ psi)
    J = np.array([d @ g.gamma[mu] @ psi for mu in range(4)])
    K = np.array([d @ g.gamma5 @ g.gamma[mu] @ psi for mu in range(4)])
    S = np.zeros((4, 4), dtype=complex)
    for mu in range(4):
        for nu in range(4):
            if mu != nu:
                S[mu, nu] = d @ (1j * g.gamma[mu] @ g.gamma[nu]) @ psi
    return A, B, J, K, S


def test_basis_spinor_values():
    b = bilinear.compute(np.array([1, 0, 0, 0], dtype=complex))
    assert abs(b.A) < 1e-15 and abs(b.B) < 1e-15
    assert abs(b.J[0] - 1) < 1e-15
    assert abs(b.K[0] - 1) < 1e-15
    assert abs(b.J[3] + 1) < 1e-15
    assert b.j_squared() == pytest.approx(0.0, abs=1e-14)
    assert b.k_squared() == pytest.approx(0.0, abs=1e-14)


def test_balanced_spinor_scalar():
    psi = np.array([1, 0, 1, 0], dtype=complex) / np.sqrt(2)
    b = bilinear.compute(psi)
    assert b.A == pytest.approx(1.0, abs=1e-14)
    assert b.A1 == pytest.approx(0.5, abs=1e-14)
    assert b.A2 == pytest.approx(0.5, abs=1e-14)


def test_compute_matches_oracle(rng):
    for _ in range(200):
        psi = random_spinor(rng)
        b = bilinear.compute(psi)
        A, B, J, K, S = oracle_bilinears(psi)
        assert abs(b.A - A) < 1e-12
        assert abs(b.B - B) < 1e-12
        assert np.max(np.abs(b.J - J)) < 1e-12
        assert np.max(np.abs(b.K - K)) < 1e-12
        assert np.max(np.abs(b.S - S)) < 1e-12


def test_reality_under_dirac_dual(rng):
    for _ in range(200):
        b = bilinear.compute(random_spinor(rng))
        scale = max(1.0, b.scale)
        assert abs(b.A.imag) < 1e-12 * scale
        assert abs(b.B.imag) < 1e-12 * scale
        assert np.max(np.abs(b.J.imag)) < 1e-12 * scale
        assert np.max(np.abs(b.K.imag)) < 1e-12 * scale
        assert np.max(np.abs(b.S.imag)) < 1e-12 * scale
        assert np.max(np.abs(b.S + b.S.T)) < 1e-12 * scale


def test_chiral_overlap_split(rng):
    for _ in range(100):
        b = bilinear.compute(random_spinor(rng))
        assert abs(b.A - (b.A1 + b.A2)) < 1e-12 * max(1.0, b.scale)
        assert abs(b.B - 1j * (-b.A1 + b.A2)) < 1e-12 * max(1.0, b.scale)


def test_fast_matches_compute_on_shared_fields(rng):
    for _ in range(300):
        base = random_spinor(rng)
        r1 = complex(rng.standard_normal(), rng.standard_normal())
        r2 = complex(rng.standard_normal(), rng.standard_normal())
        psi = np.concatenate([r1 * base[:2], r2 * base[2:]])
        full = bilinear.compute(psi)
        fast = bilinear.compute_fast(base, r1, r2)
        scale = max(1.0, full.scale)
        assert abs(fast.A - full.A) < 1e-10 * scale
        assert abs(fast.B - full.B) < 1e-10 * scale
        assert np.max(np.abs(fast.J - full.J)) < 1e-10 * scale
        assert abs(fast.K0 - full.K[0]) < 1e-10 * scale
        for (mu, nu), value in fast.s_items():
            assert abs(value - full.S[mu, nu]) < 1e-10 * scale


def test_fast_one_sided_decomposition_kills_s():
    base = np.array([1, 0, 1, 0], dtype=complex)
    fast = bilinear.compute_fast(base, 1.0, 0.0)
    assert fast.J[0] == pytest.approx(1.0)
    assert fast.K0 == pytest.approx(1.0)
    for _, value in fast.s_items():
        assert value == 0.0


def test_fast_unit_coefficients_reduce_to_base(rng):
    base = random_spinor(rng)
    fast = bilinear.compute_fast(base, 1.0, 1.0)
    full = bilinear.compute(base)
    assert abs(fast.A - (full.A1 + full.A2)) < 1e-12 * max(1.0, full.scale)


def test_fpk_residuals_random(rng):
    for _ in range(300):
        psi = random_spinor(rng)
        res = bilinear.fpk_residuals(bilinear.compute(psi))
        assert np.max(res) < 1e-10 * quartic_scale(psi)


def test_fpk_residuals_detect_inconsistent_record():
    # covariants not coming from any spinor violate all four constraints
    b = bilinear.from_scalars(1.0, 2.0, [3.0, 0, 0, 0], [0.5, 1.0, 0, 0], np.zeros((4, 4)))
    res = bilinear.fpk_residuals(b)
    assert np.min(res) > 0.1


def test_fpk_zero_record():
    b = bilinear.from_scalars(0.0, 0.0, np.zeros(4), np.zeros(4), np.zeros((4, 4)))
    assert np.max(bilinear.fpk_residuals(b)) == 0.0


@given(
    theta=st.floats(min_value=0.0, max_value=2 * np.pi),
    scale=st.floats(min_value=0.1, max_value=10.0),
)
@settings(deadline=None, max_examples=60)
def test_phase_and_scale_invariance(theta, scale):
    psi = np.array([0.4 - 0.2j, 1.1, -0.3j, 0.8 + 0.5j])
    b0 = bilinear.compute(psi)
    b1 = bilinear.compute(np.exp(1j * theta) * psi)
    assert abs(b1.A - b0.A) < 1e-10 * max(1.0, b0.scale)
    assert np.max(np.abs(b1.S - b0.S)) < 1e-10 * max(1.0, b0.scale)
    b2 = bilinear.compute(scale * psi)
    assert abs(b2.A - scale**2 * b0.A) < 1e-10 * max(1.0, b2.scale)
    assert np.max(np.abs(b2.J - scale**2 * b0.J)) < 1e-10 * max(1.0, b2.scale)


def test_mdo_dual_route_requires_xi(rng):
    with pytest.raises(ValueError):
        bilinear.compute(random_spinor(rng), DualKind.MDO)


def test_mdo_dual_route_rejects_bad_xi(rng):
    from spinorlab.errors import DegenerateXi

    with pytest.raises(DegenerateXi):
        bilinear.compute(random_spinor(rng), DualKind.MDO, 3.0 * np.eye(4))


def test_batch_equals_scalar_route(rng):
    psis = random_spinor(rng, 64)
    batch = bilinear.compute_batch(psis)
    for i in (0, 17, 63):
        b = bilinear.compute(psis[i])
        assert abs(batch["A"][i] - b.A) < 1e-14
        assert np.max(np.abs(batch["S"][i] - b.S)) < 1e-14
