import random
from fractions import Fraction

import numpy as np
import pytest

from contactlie.catalog import catalog
from contactlie.errors import InputError
from contactlie.linalg import mat_mul, mat_vec, transpose
from contactlie.metric import (MetricData, compute_h, compute_phi,
                               construct_associated_metric, is_associated,
                               is_kcontact, kcontact_obstruction,
                               levi_civita, skew_normal_form,
                               symplectic_is_associated)

CAT = catalog()

METRIC_NAMES = ["heisenberg3", "heisenberg5", "heisenberg7", "su2", "sl2r",
                "aff1_aff1_ext5"]


def test_metric_data_validation():
    with pytest.raises(InputError):
        MetricData.from_rows([[1, 2], [3, 4]])
    g = MetricData.from_diag([Fraction(1, 2), Fraction(1)])
    assert g.is_positive_definite()
    assert not MetricData.from_diag([1, -1]).is_positive_definite()


def test_catalog_metrics_are_associated():
    for name in METRIC_NAMES:
        e = CAT[name]
        assert is_associated(e.contact(), e.metric), name


def test_phi_square_identity_h3():
    e = CAT["heisenberg3"]
    c = e.contact()
    phi = compute_phi(c, e.metric)
    # phi = G^-1 D with G = diag(1/2,1/2,1), D12 = -1/2
    assert phi[0][1] == -1 and phi[1][0] == 1
    sq = mat_mul(phi, phi)
    assert sq[0][0] == -1 and sq[1][1] == -1 and sq[2][2] == 0


def test_levi_civita_h3_frozen():
    """Hand-computed Koszul values for h3 with g = diag(1/2, 1/2, 1)."""
    e = CAT["heisenberg3"]
    conn = levi_civita(e.algebra, e.metric)
    # nabla_{e1} e3 = -e2, nabla_{e1} e2 = 1/2 e3, nabla_{e3} e1 = -e2
    assert list(conn.cov(0, 2)) == [0, -1, 0]
    assert list(conn.cov(0, 1)) == [0, 0, Fraction(1, 2)]
    assert list(conn.cov(2, 0)) == [0, -1, 0]


def test_levi_civita_metric_compatibility_and_torsion():
    """Exact: nabla g = 0 and torsion-freeness on basis fields."""
    for name in ("heisenberg3", "su2", "sl2r", "heisenberg5"):
        e = CAT[name]
        a = e.algebra
        n = a.dim
        conn = levi_civita(a, e.metric)
        grows = [list(r) for r in e.metric.matrix]

        def ip(u, v):
            return sum(x * y for x, y in zip(mat_vec(grows, u), v))

        for i in range(n):
            for j in range(n):
                cij = list(conn.cov(i, j))
                cji = list(conn.cov(j, i))
                # torsion: nabla_i e_j - nabla_j e_i = [e_i, e_j]
                assert [x - y for x, y in zip(cij, cji)] == \
                    a.structure_vector(i, j), name
                for k in range(n):
                    # compatibility: e_i g(e_j, e_k) = 0 for invariant g
                    cik = list(conn.cov(i, k))
                    assert ip(cij, a.basis_vector(k)) \
                        + ip(a.basis_vector(j), cik) == 0, name


def test_h_tensor_frozen_values():
    e = CAT["sl2r"]
    hm = compute_h(e.contact(), e.metric)
    # h maps e1 -> -e2, e2 -> -e1, e3 -> 0
    assert [hm[i][0] for i in range(3)] == [0, -1, 0]
    assert [hm[i][1] for i in range(3)] == [-1, 0, 0]
    assert [hm[i][2] for i in range(3)] == [0, 0, 0]
    for name in ("heisenberg3", "heisenberg5", "su2"):
        e = CAT[name]
        hm = compute_h(e.contact(), e.metric)
        assert all(x == 0 for row in hm for x in row), name


def test_h_requires_associated_metric():
    e = CAT["heisenberg3"]
    g = MetricData.from_diag([Fraction(1), Fraction(1), Fraction(1)])
    with pytest.raises(InputError):
        compute_h(e.contact(), g)


def test_kcontact_verdicts():
    verdicts = {"heisenberg3": True, "heisenberg5": True,
                "heisenberg7": True, "su2": True, "sl2r": False,
                "aff1_aff1_ext5": True}
    for name, expected in verdicts.items():
        e = CAT[name]
        assert is_kcontact(e.contact(), e.metric) is expected, name


def test_prop1_exact_catalog():
    """nabla_X xi = -phi X - phi h X on every basis X, h g-symmetric,
    h xi = 0, phi g-skew.  compute_h verifies the first three internally;
    here we re-derive them independently."""
    for name in METRIC_NAMES:
        e = CAT[name]
        c = e.contact()
        g = e.metric
        n = c.algebra.dim
        conn = levi_civita(c.algebra, g)
        phi = compute_phi(c, g)
        hm = compute_h(c, g)
        grows = [list(r) for r in g.matrix]
        # phi is g-skew: G phi = -(G phi)^T
        gphi = mat_mul(grows, phi)
        assert gphi == [[-x for x in row] for row in transpose(gphi)], name
        # nabla_{e_j} xi = -phi e_j - phi h e_j
        for j in range(n):
            nxj = [sum(c.reeb[i] * conn.cov(j, i)[k] for i in range(n))
                   for k in range(n)]
            phij = [phi[k][j] for k in range(n)]
            hj = [hm[k][j] for k in range(n)]
            phihj = mat_vec(phi, hj)
            assert nxj == [-a - b for a, b in zip(phij, phihj)], name
        # h is g-symmetric and kills xi
        gh = mat_mul(grows, hm)
        assert gh == transpose(gh) or gh == mat_mul(transpose(hm),
                                                    grows), name
        assert all(x == 0 for x in mat_vec(hm, list(c.reeb))), name


def test_prop1_floating_auto_metrics():
    rng = np.random.default_rng(19)
    for name in ("heisenberg5", "sl2r", "nilpotent_nondiag5", "su2"):
        c = CAT[name].contact()
        n = c.algebra.dim
        base = np.array(
            [[float(Fraction(x)) for x in v] for v in c.horizontal_basis])
        for _ in range(3):
            mix = rng.standard_normal((n - 1, n - 1)) * 0.4 + np.eye(n - 1)
            frame = [list(mix[i] @ base) for i in range(n - 1)]
            g = construct_associated_metric(c, horizontal_frame=frame)
            assert is_associated(c, g)
            hm = compute_h(c, g)  # re-verifies Prop. 1 within 1e-9
            assert hm.shape == (n, n)


def test_prop2_agreement_sweep():
    """The two K-contact criteria agree on >= 60 (algebra, metric) pairs;
    is_kcontact raises if they ever disagree, so counting successful calls
    is the test."""
    rng = np.random.default_rng(37)
    pairs = 0
    for name in METRIC_NAMES:
        e = CAT[name]
        c = e.contact()
        is_kcontact(c, e.metric)
        pairs += 1
    for name in ("heisenberg3", "heisenberg5", "heisenberg7", "su2",
                 "sl2r", "aff1_aff1_ext5", "nilpotent_nondiag5"):
        c = CAT[name].contact()
        n = c.algebra.dim
        base = np.array(
            [[float(Fraction(x)) for x in v] for v in c.horizontal_basis])
        for _ in range(8):
            mix = np.eye(n - 1) + 0.3 * rng.standard_normal(
                (n - 1, n - 1))
            frame = [list(mix[i] @ base) for i in range(n - 1)]
            g = construct_associated_metric(c, horizontal_frame=frame)
            is_kcontact(c, g)
            pairs += 1
    assert pairs >= 60


def test_obstruction_reports():
    rep = kcontact_obstruction(CAT["sl2r"].contact())
    assert rep.obstructed and "imaginary" in rep.reason
    rep = kcontact_obstruction(CAT["nilpotent_nondiag5"].contact())
    assert rep.obstructed and "squarefree" in rep.reason
    for name in ("heisenberg3", "heisenberg5", "su2", "aff1_aff1_ext5"):
        rep = kcontact_obstruction(CAT[name].contact())
        assert not rep.obstructed, name
        assert str(rep) == "NoObstruction"


def test_skew_normal_form_known_blocks():
    """25 seeded matrices with known block values, sizes 2..8."""
    rng = np.random.default_rng(101)
    for trial in range(25):
        size = 2 + trial % 7
        npairs = size // 2
        values = np.sort(rng.uniform(0.1, 5.0, npairs))[::-1]
        b0 = np.zeros((size, size))
        for k, v in enumerate(values):
            b0[2 * k, 2 * k + 1] = v
            b0[2 * k + 1, 2 * k] = -v
        # conjugate by a random orthogonal matrix
        q0, _ = np.linalg.qr(rng.standard_normal((size, size)))
        b = q0 @ b0 @ q0.T
        b = 0.5 * (b - b.T)
        nf = skew_normal_form(b)
        assert nf.zero_count == size - 2 * npairs
        assert np.allclose(np.array(nf.blocks), values, atol=1e-10)
        assert np.max(np.abs(nf.q @ nf.q.T - np.eye(size))) <= 1e-12
        assert np.max(np.abs(nf.q @ b @ nf.q.T - nf.block_matrix())) \
            <= 1e-10


def test_skew_normal_form_rejects_nonskew():
    with pytest.raises(InputError):
        skew_normal_form(np.eye(3))


def test_symplectic_is_associated():
    e = CAT["r2_sympl"]
    k = MetricData.from_diag([Fraction(1), Fraction(1)])
    ok, j = symplectic_is_associated(e.algebra, e.omega, k)
    assert ok
    assert j[0][1] == 1 and j[1][0] == -1
    bad = MetricData.from_diag([Fraction(2), Fraction(1)])
    ok, _ = symplectic_is_associated(e.algebra, e.omega, bad)
    assert not ok
