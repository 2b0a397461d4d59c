import math

import numpy as np
import pytest

import helmls


def test_meshes():
    m = helmls.interval_mesh(-1.0, 1.0, 5)
    assert m.num_elements == 5
    assert m.h == pytest.approx(0.4)
    np.testing.assert_allclose(m.vertices()[:, 0], [-1.0, -0.6, -0.2, 0.2, 0.6, 1.0], atol=1e-15)
    sq = helmls.square_mesh(4)
    assert sq.num_elements == 32
    assert sq.volume == pytest.approx(1.0)
    assert helmls.disk_mesh(8, 1).num_elements == 32
    with pytest.raises(ValueError):
        helmls.interval_mesh(1.0, -1.0, 3)


def test_space_sizes():
    sq = helmls.square_mesh(1)
    assert helmls.space_size(sq, 2) == 9
    assert helmls.space_size(sq, 2, hdiv=True) == 21


def test_projection_preserves_polynomials():
    coeffs = helmls.project_reference(lambda x, y: 1.0 + x * y, lambda x, y: (y, x), 2, 2)
    for x, y in [(0.2, 0.3), (0.6, 0.1)]:
        assert helmls.basis_values(2, 2, x, y) @ coeffs == pytest.approx(1.0 + x * y, abs=1e-12)


def test_gram():
    l2, h00 = helmls.h12_00_gram(2)
    assert l2.shape == (3, 3)
    assert h00[0, 0] == pytest.approx(151 / 480, abs=1e-12)


def test_fosls_matrix_is_hermitian():
    a, b = helmls.assemble("plane-wave-2d", 4.0, 1, helmls.square_mesh(2))
    np.testing.assert_allclose(a, a.conj().T, atol=1e-12 * abs(a).max())
    assert np.linalg.eigvalsh(a).min() > 0
    assert b.shape == (a.shape[0],)


def test_solve_and_rates():
    h, e = [], []
    for n in (4, 8):
        mesh = helmls.square_mesh(n)
        out = helmls.solve("plane-wave-2d", 2.0, 1, mesh, "fem")
        assert out["relative_residual"] <= 1e-10
        h.append(mesh.h)
        e.append(out["errors"]["l2_rel"])
    pairwise, _ = helmls.empirical_order(h, e)
    assert pairwise[0] == pytest.approx(2.0, abs=0.3)
    out = helmls.solve("piecewise-1d", 1.0, 2, helmls.interval_mesh(-1, 1, 5))
    assert out["galerkin_residual"] <= 1e-8


def test_helpers():
    assert helmls.dofs_per_wavelength(100, 2 * math.pi, 2.0, 1) == pytest.approx(50.0)
    assert set(helmls.list_problems()) == {"plane-wave-2d", "piecewise-1d"}
    with pytest.raises(ValueError):
        helmls.empirical_order([1.0], [1.0])


def test_run_study():
    out = helmls.run_study(
        {"problem": "piecewise-1d", "method": "both", "k": 10, "degrees": [1],
         "mesh_sequence": [5, 15, 45], "avoid_node_at_zero": True}
    )
    assert len(out["rows"]) == 6
    assert out["rows"][0]["eoc_l2"] is None
    assert out["rows"][1]["eoc_l2"] is not None
    assert out["csv"].splitlines()[0].startswith("problem,method,d,k,p")
    with pytest.raises(ValueError):
        helmls.run_study({"problem": "piecewise-1d", "k": 10, "degrees": [], "mesh_sequence": [5]})
