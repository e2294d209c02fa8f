import numpy as np
import pytest
from conftest import random_canonical, random_density_matrix, random_hermitian

from entopt.asymptotics import high_t_hop_exact
from entopt.closed_form import negativity_tilde
from entopt.measures import (
    concurrence,
    entanglement_report,
    min_pt_eigenvalue,
    necessary_condition,
    negativity,
    partial_transpose,
    pi_measure,
)
from entopt.spin_model import build_hamiltonian
from entopt.thermal import gibbs_state

BELL_SINGLET = np.zeros((4, 4))
BELL_SINGLET[1, 1] = BELL_SINGLET[2, 2] = 0.5
BELL_SINGLET[1, 2] = BELL_SINGLET[2, 1] = -0.5


def opposed_field_state(c, h, beta):
    ham = build_hamiltonian(np.diag(c.diagonal), (0, 0, h), (0, 0, -h))
    rho, _ = gibbs_state(ham, beta)
    return rho


def test_partial_transpose_identity_and_product():
    assert np.allclose(partial_transpose(np.eye(4) / 4), np.eye(4) / 4)
    rng = np.random.default_rng(3)
    r1 = random_density_matrix(rng, 2)
    r2 = random_density_matrix(rng, 2)
    prod = np.kron(r1, r2)
    assert np.allclose(partial_transpose(prod), np.kron(r1.T, r2), atol=1e-14)
    assert np.linalg.eigvalsh(partial_transpose(prod))[0] >= -1e-14


def test_partial_transpose_involution_and_trace():
    rng = np.random.default_rng(5)
    rho = random_density_matrix(rng)
    pt = partial_transpose(rho)
    assert np.allclose(partial_transpose(pt), rho, atol=1e-15)
    assert np.trace(pt) == pytest.approx(1.0, abs=1e-14)
    assert np.max(np.abs(pt - pt.conj().T)) <= 1e-14


def test_bell_state_measures():
    assert min_pt_eigenvalue(BELL_SINGLET) == pytest.approx(-0.5, abs=1e-14)
    assert negativity(BELL_SINGLET) == pytest.approx(1.0, abs=1e-14)
    assert concurrence(BELL_SINGLET) == pytest.approx(1.0, abs=1e-12)
    assert pi_measure(BELL_SINGLET) == pytest.approx(1.0, abs=1e-12)


def test_product_state_measures():
    rng = np.random.default_rng(7)
    rho = np.kron(random_density_matrix(rng, 2), random_density_matrix(rng, 2))
    assert negativity(rho) == 0.0
    assert concurrence(rho) == pytest.approx(0.0, abs=1e-12)
    assert pi_measure(rho) == 0.0


def test_negativity_matches_closed_form():
    rng = np.random.default_rng(9)
    for _ in range(200):
        c = random_canonical(rng)
        h = rng.uniform(0, 3)
        beta = 10 ** rng.uniform(-1, 1)
        rho = opposed_field_state(c, h, beta)
        n_tilde = negativity_tilde(c, h, beta)
        assert negativity(rho) == pytest.approx(max(n_tilde, 0.0), abs=1e-10)


def test_negativity_equals_concurrence_for_opposed_fields():
    rng = np.random.default_rng(13)
    for _ in range(200):
        c = random_canonical(rng)
        h = rng.uniform(0, 3)
        beta = 10 ** rng.uniform(-1, 1)
        rho = opposed_field_state(c, h, beta)
        assert abs(negativity(rho) - concurrence(rho)) <= 1e-9


def test_pi_measure_bounds_and_zero_set():
    rng = np.random.default_rng(17)
    for _ in range(300):
        c = random_canonical(rng)
        rho = opposed_field_state(c, rng.uniform(0, 3), 10 ** rng.uniform(-1, 1))
        n = negativity(rho)
        p = pi_measure(rho)
        assert 0.0 <= p <= 1.0 + 1e-12
        assert (p == 0.0) == (n == 0.0)


def test_necessary_condition_examples():
    assert necessary_condition(np.eye(4) / 4) is False
    assert necessary_condition(np.diag([1.0, 0.0, 0.0, 0.0])) is True


def test_necessary_condition_implied_by_entanglement():
    rng = np.random.default_rng(19)
    checked = 0
    for _ in range(10_000):
        h = random_hermitian(rng, scale=rng.uniform(0.2, 2.0))
        rho, _ = gibbs_state(h, 10 ** rng.uniform(-1, 1))
        if negativity(rho) > 0.0:
            checked += 1
            assert necessary_condition(rho)
    assert checked > 100  # the scan must actually exercise entangled states


def test_peres_horodecki_equivalences():
    rng = np.random.default_rng(23)
    for _ in range(500):
        rho = random_density_matrix(rng)
        pt = partial_transpose(rho)
        lam = float(np.linalg.eigvalsh(pt)[0])
        det = float(np.real(np.linalg.det(pt)))
        n = negativity(rho)
        if n > 0.0:
            assert lam < 0.0 and det < 0.0
        if lam < -1e-10:
            assert n > 0.0 and det < 0.0


def test_at_most_one_negative_pt_eigenvalue():
    rng = np.random.default_rng(29)
    for _ in range(10_000):
        rho = random_density_matrix(rng)
        values = np.linalg.eigvalsh(partial_transpose(rho))
        assert np.sum(values < -1e-12) <= 1


def test_perturbative_negativity_consistency():
    # exact negativity against the first-order high-temperature expansion,
    # balanced opposed z fields, dimensionless field near its optimum
    beta = 1e-3
    jx, jy, jz = 1 / 2, 1 / 3, 1 / 6
    jt = abs(jx + jy)
    hp_op = high_t_hop_exact(jx, jy, beta).h_prime_op
    for hp in (hp_op - 0.3, hp_op, hp_op + 0.3):
        h = hp / beta
        ham = build_hamiltonian(np.diag([jx, jy, jz]), (0, 0, h), (0, 0, -h))
        rho, _ = gibbs_state(ham, beta)
        approx = beta * jt / (2 * hp) - 2 * np.exp(-2 * hp)
        assert abs(negativity(rho) - approx) <= 10 * beta**2


def test_entanglement_report_consistency():
    rng = np.random.default_rng(31)
    c = random_canonical(rng)
    rho = opposed_field_state(c, 1.0, 2.0)
    rep = entanglement_report(rho)
    assert rep.negativity == negativity(rho)
    assert rep.negativity == pytest.approx(max(-2 * rep.min_pt_eigenvalue, 0.0), abs=1e-15)
    assert rep.concurrence == concurrence(rho)
    assert rep.pi == pi_measure(rho)
