"""Generator matrices, bracket relations, group elements, and the contraction."""

import math

import numpy as np
import pytest
from scipy.linalg import expm as scipy_expm

from littlegroup import lorentz_algebra as la

ALL_LABELS = la.GENERATOR_LABELS


def series_exponential(a, terms=30):
    """Plain truncated power series, independent of the library's route."""
    a = np.asarray(a, dtype=complex)
    out = np.eye(a.shape[0], dtype=complex)
    term = np.eye(a.shape[0], dtype=complex)
    for k in range(1, terms):
        term = term @ a / k
        out = out + term
    return out


# ---------------------------------------------------------------------------
# generator matrices
# ---------------------------------------------------------------------------

def test_n1_is_k1_minus_j2_entrywise():
    n1 = la.generator("N1").matrix
    diff = n1 - (la.generator("K1").matrix - la.generator("J2").matrix)
    assert np.abs(diff).max() == 0.0


def test_n2_is_k2_plus_j1_entrywise():
    n2 = la.generator("N2").matrix
    diff = n2 - (la.generator("K2").matrix + la.generator("J1").matrix)
    assert np.abs(diff).max() == 0.0


@pytest.mark.parametrize("label", ALL_LABELS)
def test_all_generators_traceless(label):
    assert la.generator(label).matrix.trace() == 0.0


@pytest.mark.parametrize("label", ["J1", "J2", "J3"])
def test_rotations_hermitian(label):
    m = la.generator(label).matrix
    assert np.abs(m - m.conj().T).max() == 0.0


@pytest.mark.parametrize("label", ALL_LABELS)
def test_i_times_generator_is_real(label):
    m = 1j * la.generator(label).matrix
    assert np.abs(m.imag).max() == 0.0


def test_unknown_label_rejected():
    with pytest.raises(ValueError):
        la.generator("K4")
    with pytest.raises(ValueError):
        la.planar_generator("Pz")


def test_generator_matrices_read_only():
    with pytest.raises(ValueError):
        la.generator("J1").matrix[0, 0] = 1.0


# ---------------------------------------------------------------------------
# commutators
# ---------------------------------------------------------------------------

def test_j1_j2_commutator_is_i_j3():
    lhs = la.commutator(la.generator("J1"), la.generator("J2"))
    assert np.abs(lhs - 1j * la.generator("J3").matrix).max() == 0.0


def test_n1_n2_commute():
    lhs = la.commutator(la.generator("N1"), la.generator("N2"))
    assert np.abs(lhs).max() == 0.0


@pytest.mark.parametrize("label", ALL_LABELS)
def test_self_commutator_vanishes(label):
    g = la.generator(label)
    assert np.abs(la.commutator(g, g)).max() == 0.0


def test_commutator_rejects_mismatched_shapes():
    with pytest.raises(ValueError):
        la.commutator(np.eye(4), np.eye(3))


def test_every_bracket_relation_holds():
    rows = la.relation_residuals()
    assert len(rows) >= 18
    for name, residual in rows:
        assert residual <= 1e-12, name


def test_relation_suite_catches_perturbation():
    mats = {k: np.array(v) for k, v in la.GENERATOR_MATRICES.items()}
    mats["J1"] = mats["J1"] + 1e-3
    residuals = [r for _, r in la.relation_residuals(mats)]
    assert max(residuals) > 1e-12


# ---------------------------------------------------------------------------
# group elements
# ---------------------------------------------------------------------------

def test_rotation_of_unit_x_vector():
    # independent oracle: 30-term power series of the rotation generator
    theta = 0.7
    oracle = series_exponential(-1j * theta * la.generator("J3").matrix).real
    expected = oracle @ np.array([1.0, 0.0, 0.0, 0.0])
    elem = la.group_element("J3", theta)
    got = elem.matrix @ np.array([1.0, 0.0, 0.0, 0.0])
    assert np.abs(got - expected).max() < 1e-14
    assert got == pytest.approx([math.cos(theta), math.sin(theta), 0.0, 0.0],
                                abs=1e-14)


def test_boost_block_matches_cosh_sinh():
    eta = 0.8
    block = la.group_element("K3", eta).matrix[2:, 2:]
    expected = np.array([[math.cosh(eta), math.sinh(eta)],
                         [math.sinh(eta), math.cosh(eta)]])
    assert np.abs(block - expected).max() < 1e-12


@pytest.mark.parametrize("label", ALL_LABELS)
def test_zero_parameter_gives_identity(label):
    assert np.abs(la.group_element(label, 0.0).matrix - np.eye(4)).max() == 0.0


def test_full_turn_is_identity_in_vector_representation():
    elem = la.group_element("J3", 2.0 * math.pi)
    assert np.abs(elem.matrix - np.eye(4)).max() < 1e-13


@pytest.mark.parametrize("label", ALL_LABELS)
@pytest.mark.parametrize("theta", [-20.0, -3.3, 0.1, 2.7, 20.0])
def test_matrix_exponential_against_scipy(label, theta):
    a = -1j * theta * la.generator(label).matrix
    mine = la.matrix_exponential(a)
    ref = scipy_expm(a)
    scale = np.maximum(1.0, np.abs(ref))
    assert (np.abs(mine - ref) / scale).max() < 1e-13


@pytest.mark.parametrize("label", ALL_LABELS)
def test_one_parameter_subgroup_law(label):
    rng = np.random.default_rng(7)
    for _ in range(5):
        a, b = rng.uniform(-2.5, 2.5, size=2)
        lhs = (la.group_element(label, a).matrix
               @ la.group_element(label, b).matrix)
        rhs = la.group_element(label, a + b).matrix
        assert np.abs(lhs - rhs).max() < 1e-10


def test_interval_preserved_for_random_vectors():
    rng = np.random.default_rng(11)
    for _ in range(100):
        label = ALL_LABELS[int(rng.integers(len(ALL_LABELS)))]
        elem = la.group_element(label, float(rng.uniform(-2, 2)))
        p = la.FourVector(*(rng.normal(size=4) * 3.0))
        q = elem.transform(p)
        assert abs(q.interval() - p.interval()) <= 1e-10 * max(1.0, abs(p.interval()))


def test_group_elements_unimodular():
    rng = np.random.default_rng(13)
    for label in ALL_LABELS:
        for theta in rng.uniform(-5, 5, size=4):
            det = np.linalg.det(la.group_element(label, float(theta)).matrix)
            assert abs(det - 1.0) < 1e-10


def test_non_finite_parameter_rejected():
    with pytest.raises(ValueError):
        la.group_element("K3", math.inf)
    with pytest.raises(ValueError):
        la.group_element("J1", math.nan)


# ---------------------------------------------------------------------------
# invariance of momenta
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("label", ["J1", "J2", "J3"])
@pytest.mark.parametrize("mass", [0.5, 1.0, 10.0])
def test_rotations_fix_rest_momentum(label, mass):
    p = la.FourVector(0.0, 0.0, 0.0, mass)
    for theta in np.linspace(-5, 5, 20):
        assert la.leaves_invariant(la.group_element(label, float(theta)), p, 1e-9)


@pytest.mark.parametrize("label", ["J3", "N1", "N2"])
@pytest.mark.parametrize("omega", [0.5, 1.0, 10.0])
def test_massless_little_group_fixes_lightlike_momentum(label, omega):
    p = la.FourVector(0.0, 0.0, omega, omega)
    for theta in np.linspace(-5, 5, 20):
        assert la.leaves_invariant(la.group_element(label, float(theta)), p, 1e-9)


def test_identity_leaves_everything_invariant():
    elem = la.group_element("K2", 0.0)
    assert la.leaves_invariant(elem, la.FourVector(1.0, -2.0, 3.0, 4.0), 1e-15)


def test_boost_moves_rest_momentum():
    elem = la.group_element("K3", 1.0)
    assert not la.leaves_invariant(elem, la.FourVector(0, 0, 0, 1.0), 1e-9)


def test_leaves_invariant_needs_positive_tolerance():
    with pytest.raises(ValueError):
        la.leaves_invariant(la.group_element("J1", 0.0),
                            la.FourVector(0, 0, 0, 1.0), 0.0)


# ---------------------------------------------------------------------------
# contraction of the massive little group
# ---------------------------------------------------------------------------

def brute_force_contraction(eta, source):
    """Oracle route: scipy exponentials, literal conjugation."""
    k3 = la.GENERATOR_MATRICES["K3"]
    j = la.GENERATOR_MATRICES["J2"] if source == "J2" else -la.GENERATOR_MATRICES["J1"]
    boost = scipy_expm(-1j * eta * k3).real
    boost_inv = scipy_expm(1j * eta * k3).real
    return math.exp(-eta) * (boost @ j @ boost_inv)


@pytest.mark.parametrize("source", ["J2", "J1"])
def test_contraction_at_zero_rapidity(source):
    got = la.contracted_generator(0.0, source)
    expected = (la.GENERATOR_MATRICES["J2"] if source == "J2"
                else -la.GENERATOR_MATRICES["J1"])
    assert np.abs(got - expected).max() == 0.0


@pytest.mark.parametrize("source,target", [("J2", "N1"), ("J1", "N2")])
def test_contraction_limit_coefficient(source, target):
    # pre-build oracle pinned the Frobenius projection onto the target
    # at minus one half; the off-span residual decays like exp(-2 eta)
    tgt = la.GENERATOR_MATRICES[target]
    got = la.contracted_generator(10.0, source)
    coeff = np.vdot(tgt, got) / np.vdot(tgt, tgt)
    assert abs(coeff.imag) < 1e-12
    assert coeff.real == pytest.approx(-0.5, abs=1e-8)
    assert coeff.real == pytest.approx(la.CONTRACTION_LIMIT_COEFFICIENT, abs=1e-8)
    assert np.linalg.norm(got - coeff * tgt) <= 1e-8


@pytest.mark.parametrize("source", ["J2", "J1"])
def test_contraction_matches_brute_force_oracle(source):
    for eta in (0.0, 1.5, 6.0):
        mine = la.contracted_generator(eta, source)
        oracle = brute_force_contraction(eta, source)
        assert np.abs(mine - oracle).max() < 1e-12


@pytest.mark.parametrize("source", ["J2", "J1"])
def test_contraction_residual_rate(source):
    r4 = la.contraction_residual(4.0, source)
    r5 = la.contraction_residual(5.0, source)
    assert r5 / r4 == pytest.approx(math.exp(-2.0), rel=0.01)


def test_contraction_rejects_bad_input():
    with pytest.raises(ValueError):
        la.contracted_generator(-1.0, "J2")
    with pytest.raises(ValueError):
        la.contracted_generator(1.0, "J3")


# ---------------------------------------------------------------------------
# planar group
# ---------------------------------------------------------------------------

def test_planar_relations_and_little_group_match():
    for name, residual in la.planar_commutation_check():
        assert residual <= 1e-12, name


def test_translations_commute():
    px = la.planar_generator("Px")
    py = la.planar_generator("Py")
    assert np.abs(la.commutator(px, py)).max() == 0.0


def test_translation_composition():
    px = la.planar_generator("Px").matrix
    a, b = 0.9, -2.4
    lhs = (la.matrix_exponential(-1j * a * px)
           @ la.matrix_exponential(-1j * b * px))
    rhs = la.matrix_exponential(-1j * (a + b) * px)
    assert np.abs(lhs - rhs).max() < 1e-14


def test_translation_moves_plane_point():
    px = la.planar_generator("Px").matrix
    shift = la.matrix_exponential(-1j * 2.0 * px).real
    assert shift @ np.array([1.0, 1.0, 1.0]) == pytest.approx([3.0, 1.0, 1.0])


def test_structure_constants_of_little_and_planar_triples():
    little = [la.GENERATOR_MATRICES[k] for k in ("J3", "N1", "N2")]
    planar = [la.PLANAR_MATRICES[k] for k in ("L", "Px", "Py")]
    c_little = la.structure_constants(little)
    c_planar = la.structure_constants(planar)
    assert np.abs(c_little - c_planar).max() == 0.0


# ---------------------------------------------------------------------------
# four-vectors
# ---------------------------------------------------------------------------

def test_interval_signature():
    assert la.FourVector(1.0, 2.0, 3.0, 4.0).interval() == 1 + 4 + 9 - 16


def test_four_vector_arithmetic():
    a = la.FourVector(1, 2, 3, 4)
    b = la.FourVector(0.5, -1, 0, 2)
    assert (a + b) == la.FourVector(1.5, 1.0, 3.0, 6.0)
    assert (a - b) == la.FourVector(0.5, 3.0, 3.0, 2.0)
    assert 2.0 * a == la.FourVector(2.0, 4.0, 6.0, 8.0)
