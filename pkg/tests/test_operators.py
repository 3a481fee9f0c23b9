import numpy as np
import pytest

from illposed import ConfigurationError, SingularSystem, apply, build_svd_operator
from illposed.problems import deriv2_kernel


def rotation(theta):
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def test_identity_keeps_ties():
    op = build_svd_operator(np.eye(2))
    assert np.allclose(op.sigmas, [1.0, 1.0])


def test_normalize_records_scale():
    op = build_svd_operator(np.diag([2.0, 1.0]), normalize=True)
    assert np.allclose(op.sigmas, [1.0, 0.5])
    assert op.norm_scale == 2.0


def test_rank_cutoff_drops_zero_columns():
    m = np.zeros((3, 3))
    m[0, 0] = 1.0
    m[1, 1] = 1e-16
    op = build_svd_operator(m)
    assert op.rank == 1


def test_deriv2_largest_singular_value_matches_eigen_oracle():
    n = 512
    t = (np.arange(1, n + 1) - 0.5) / n
    ss, tt = np.meshgrid(t, t, indexing="ij")
    matrix = deriv2_kernel(ss, tt) / n
    # independent oracle: the matrix is symmetric, so singular values are
    # the absolute eigenvalues
    eig = np.abs(np.linalg.eigvalsh(matrix)).max()
    op = build_svd_operator(matrix)
    assert abs(op.sigmas[0] - eig) <= 1e-10
    # continuum value for the second-derivative Green's function
    assert abs(op.sigmas[0] - 1.0 / np.pi**2) <= 0.01 / np.pi**2


def test_apply_diagonal_modes():
    op = SingularSystem(sigmas=np.array([1.0, 0.5]))
    assert np.allclose(apply(op, "A", np.array([1.0, 1.0])), [1.0, 0.5])
    out = apply(op, "AstarA_power", np.array([1.0, 1.0]), nu=0.5)
    assert np.allclose(out, [1.0, 0.5])
    assert np.allclose(apply(op, "AstarA_power", np.array([3.0, 4.0]), nu=0.0),
                       [3.0, 4.0])


def test_dense_adjoint_composition_matches_matrix_oracle():
    matrix = rotation(np.pi / 4) @ np.diag([1.0, 0.5])
    op = build_svd_operator(matrix)
    x = np.array([1.0, 0.0])
    via_apply = apply(op, "A_adjoint", apply(op, "A", x))
    oracle = matrix.T @ (matrix @ x)
    assert np.allclose(via_apply, oracle, atol=1e-12)
    assert np.allclose(apply(op, "AstarA_power", x, nu=1.0), oracle, atol=1e-12)


def test_a_then_power_factor():
    op = SingularSystem(sigmas=np.array([0.9, 0.3]))
    x = np.array([2.0, -1.0])
    out = apply(op, "A_then_power", x, nu=1.5)
    assert np.allclose(out, op.sigmas**4 * x)


def test_adjoint_consistency_random():
    rng = np.random.default_rng(7)
    matrix = rng.standard_normal((6, 5))
    op = build_svd_operator(matrix)
    for _ in range(20):
        x = rng.standard_normal(5)
        y = rng.standard_normal(6)
        lhs = np.dot(apply(op, "A", x), y)
        rhs = np.dot(x, apply(op, "A_adjoint", y))
        assert abs(lhs - rhs) <= 1e-10


def test_power_semigroup():
    rng = np.random.default_rng(11)
    op = build_svd_operator(rng.standard_normal((5, 5)))
    x = rng.standard_normal(5)
    ab = apply(op, "AstarA_power", apply(op, "AstarA_power", x, nu=0.3), nu=0.9)
    direct = apply(op, "AstarA_power", x, nu=1.2)
    assert np.allclose(ab, direct, atol=1e-10)


def test_null_space_annihilation():
    rng = np.random.default_rng(3)
    base = rng.standard_normal((4, 3))
    padded = np.hstack([base, np.zeros((4, 1))])
    op = build_svd_operator(padded)
    y = rng.standard_normal(4)
    out = apply(op, "A_adjoint", y)
    assert abs(out[-1]) <= 1e-12


def test_orthonormal_factors():
    rng = np.random.default_rng(5)
    op = build_svd_operator(rng.standard_normal((8, 6)))
    gram_u = op.left_factor.T @ op.left_factor
    gram_v = op.right_factor.T @ op.right_factor
    assert np.allclose(gram_u, np.eye(op.rank), atol=1e-10)
    assert np.allclose(gram_v, np.eye(op.rank), atol=1e-10)
    # singular relations A v_i = sigma_i u_i and A* u_i = sigma_i v_i
    for i in (0, op.rank - 1):
        av = apply(op, "A", op.right_factor[:, i])
        assert np.allclose(av, op.sigmas[i] * op.left_factor[:, i], atol=1e-10)
        au = apply(op, "A_adjoint", op.left_factor[:, i])
        assert np.allclose(au, op.sigmas[i] * op.right_factor[:, i], atol=1e-10)


def test_invalid_inputs_rejected():
    op = SingularSystem(sigmas=np.array([1.0, 0.5]))
    with pytest.raises(ConfigurationError):
        build_svd_operator(np.array([[np.nan, 1.0], [0.0, 1.0]]))
    with pytest.raises(ConfigurationError):
        apply(op, "bogus", np.array([1.0, 1.0]))
    with pytest.raises(ConfigurationError):
        apply(op, "A", np.array([1.0, 1.0, 1.0]))
    with pytest.raises(ConfigurationError):
        apply(op, "A", np.array([1.0, np.inf]))
    with pytest.raises(ConfigurationError):
        SingularSystem(sigmas=np.array([0.5, 1.0]))
    with pytest.raises(ConfigurationError):
        SingularSystem(sigmas=np.array([1.0, -0.5]))
