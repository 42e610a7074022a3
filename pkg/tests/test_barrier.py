import math

import numpy as np
import pytest
from scipy.integrate import quad

from spdbicone import (
    DomainError,
    SpdMatrix,
    SymmetricMatrix,
    VpmMatrix,
    airm_metric,
    barrier_eval,
    barrier_metric,
    barrier_norm,
    barrier_path_length,
    bilogdet,
    bilogdet_gradient,
    bregman_bilogdet,
    bregman_complement,
    bregman_logdet,
    complement,
    self_concordance_check,
    symmetrized_bregman,
)
from helpers import rand_interior_vpm, rand_orthogonal, rand_spd, rand_sym, rand_vpm


def psi_direct(mat):
    """Oracle: potential via two separate determinants."""
    n = mat.shape[0]
    return -np.linalg.slogdet(mat)[1] - np.linalg.slogdet(np.eye(n) - mat)[1]


class TestPotential:
    def test_center_value(self):
        assert bilogdet(VpmMatrix(0.5 * np.eye(2))) == pytest.approx(
            4 * math.log(2), rel=1e-14
        )

    def test_diagonal_value(self):
        x = VpmMatrix(np.diag([0.2, 0.8]))
        assert bilogdet(x) == pytest.approx(2 * math.log(25 / 4), rel=1e-14)

    def test_matches_determinant_oracle(self, rng):
        for _ in range(30):
            x = rand_vpm(rng, int(rng.integers(1, 7)))
            assert bilogdet(x) == pytest.approx(psi_direct(x.mat), abs=1e-10)

    def test_lower_bound_at_center(self, rng):
        # minimized at I/2 where the value is 2n log 2
        for _ in range(20):
            n = int(rng.integers(1, 6))
            assert bilogdet(rand_vpm(rng, n)) >= 2 * n * math.log(2) - 1e-12

    def test_blows_up_near_boundary(self):
        values = [
            bilogdet(VpmMatrix(np.diag([eps, 0.5]))) for eps in (1e-2, 1e-4, 1e-6)
        ]
        assert values[0] < values[1] < values[2]

    def test_eval_bundle(self, rng):
        x = rand_vpm(rng, 3)
        ev = barrier_eval(x)
        assert ev.potential == bilogdet(x)
        np.testing.assert_array_equal(ev.gradient.mat, bilogdet_gradient(x).mat)
        assert ev.base is x


class TestGradient:
    def test_zero_at_center(self):
        g = bilogdet_gradient(VpmMatrix(0.5 * np.eye(3)))
        np.testing.assert_allclose(g.mat, np.zeros((3, 3)), atol=1e-12)

    def test_diagonal_formula(self):
        g = bilogdet_gradient(VpmMatrix(np.diag([0.2, 0.8])))
        np.testing.assert_allclose(g.mat, np.diag([-15 / 4, 15 / 4]), rtol=1e-12)

    def test_matches_resolvent_formula(self, rng):
        for _ in range(20):
            n = int(rng.integers(1, 6))
            x = rand_vpm(rng, n)
            expected = -np.linalg.inv(x.mat) + np.linalg.inv(np.eye(n) - x.mat)
            np.testing.assert_allclose(
                bilogdet_gradient(x).mat, expected, rtol=1e-9, atol=1e-9
            )

    def test_matches_directional_fd(self, rng):
        h = 1e-6
        for _ in range(30):
            n = int(rng.integers(1, 6))
            x = rand_interior_vpm(rng, n)
            v = rand_sym(rng, n, unit=True)
            fd = (psi_direct(x.mat + h * v.mat) - psi_direct(x.mat - h * v.mat)) / (2 * h)
            directional = float(np.sum(bilogdet_gradient(x).mat * v.mat))
            assert fd == pytest.approx(directional, rel=1e-6, abs=1e-6)

    def test_injective_on_samples(self, rng):
        points = [rand_vpm(rng, 3) for _ in range(10)]
        grads = [bilogdet_gradient(x).mat for x in points]
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                assert np.abs(grads[i] - grads[j]).max() > 1e-8


class TestMetric:
    def test_center_multiple_of_trace_pairing(self, rng):
        v, w = rand_sym(rng, 3), rand_sym(rng, 3)
        x = VpmMatrix(0.5 * np.eye(3))
        assert barrier_metric(x, v, w) == pytest.approx(
            8 * float(np.sum(v.mat * w.mat)), rel=1e-12
        )

    def test_splits_into_two_trace_metrics(self, rng):
        x = rand_vpm(rng, 4)
        v, w = rand_sym(rng, 4), rand_sym(rng, 4)
        expected = airm_metric(SpdMatrix(x.sym), v, w) + airm_metric(
            SpdMatrix(complement(x).sym), v, w
        )
        assert barrier_metric(x, v, w) == pytest.approx(expected, rel=1e-12)

    def test_quadratic_form_is_sum_of_congruence_norms(self, rng):
        # ||A||_F^2 + ||B||_F^2 with A, B the two congruences of v
        from spdbicone.linalg import congruence_by_inv_sqrt

        x = rand_vpm(rng, 4)
        v = rand_sym(rng, 4)
        a = congruence_by_inv_sqrt(v, x.sym).mat
        b = congruence_by_inv_sqrt(v, complement(x).sym).mat
        expected = float(np.sum(a * a) + np.sum(b * b))
        assert barrier_metric(x, v, v) == pytest.approx(expected, rel=1e-10)
        assert barrier_norm(x, v) == pytest.approx(math.sqrt(expected), rel=1e-10)

    def test_matches_fd_hessian(self, rng):
        h = 1e-4
        for _ in range(20):
            n = int(rng.integers(1, 5))
            x = rand_interior_vpm(rng, n)
            v = rand_sym(rng, n, unit=True)
            w = rand_sym(rng, n, unit=True)
            mixed = (
                psi_direct(x.mat + h * (v.mat + w.mat))
                - psi_direct(x.mat + h * (v.mat - w.mat))
                - psi_direct(x.mat - h * (v.mat - w.mat))
                + psi_direct(x.mat - h * (v.mat + w.mat))
            ) / (4 * h * h)
            g = barrier_metric(x, v, w)
            assert mixed == pytest.approx(g, rel=1e-5, abs=1e-5)

    def test_conjugation_isometry(self, rng):
        for _ in range(30):
            n = int(rng.integers(1, 6))
            x = rand_vpm(rng, n)
            v, w = rand_sym(rng, n, unit=True), rand_sym(rng, n, unit=True)
            u = rand_orthogonal(rng, n)
            lhs = barrier_metric(
                VpmMatrix(u @ x.mat @ u.T),
                SymmetricMatrix(u @ v.mat @ u.T),
                SymmetricMatrix(u @ w.mat @ u.T),
            )
            assert lhs == pytest.approx(barrier_metric(x, v, w), abs=1e-10)

    def test_complement_isometry(self, rng):
        for _ in range(30):
            n = int(rng.integers(1, 6))
            x = rand_interior_vpm(rng, n)
            v, w = rand_sym(rng, n, unit=True), rand_sym(rng, n, unit=True)
            lhs = barrier_metric(
                complement(x), SymmetricMatrix(-v.mat), SymmetricMatrix(-w.mat)
            )
            assert lhs == pytest.approx(barrier_metric(x, v, w), abs=1e-12)


class TestNorm:
    def test_rank_one_at_center(self):
        x = VpmMatrix(0.5 * np.eye(3))
        v = np.zeros((3, 3))
        v[0, 0] = 1.0
        assert barrier_norm(x, SymmetricMatrix(v)) == pytest.approx(
            2 * math.sqrt(2), rel=1e-12
        )

    def test_identity_direction_near_origin(self):
        n, eps = 4, 1e-5
        x = VpmMatrix(eps * np.eye(n))
        expected = math.sqrt(n / eps**2 + n / (1 - eps) ** 2)
        assert barrier_norm(x, SymmetricMatrix(np.eye(n))) == pytest.approx(
            expected, rel=1e-10
        )

    def test_zero_direction(self, rng):
        assert barrier_norm(rand_vpm(rng, 3), SymmetricMatrix(np.zeros((3, 3)))) == 0.0

    def test_absolute_homogeneity(self, rng):
        x, v = rand_vpm(rng, 3), rand_sym(rng, 3)
        base = barrier_norm(x, v)
        for lam in (-2.0, 0.5, 3.5):
            assert barrier_norm(x, SymmetricMatrix(lam * v.mat)) == pytest.approx(
                abs(lam) * base, rel=1e-12
            )


class TestBregman:
    def test_zero_iff_equal(self, rng):
        for _ in range(100):
            n = int(rng.integers(1, 6))
            x, y = rand_vpm(rng, n), rand_vpm(rng, n)
            sx, sy = SpdMatrix(x.sym), SpdMatrix(y.sym)
            assert bregman_logdet(sx, sx) == pytest.approx(0.0, abs=1e-12)
            assert bregman_complement(x, x) == pytest.approx(0.0, abs=1e-12)
            assert bregman_bilogdet(x, x) == pytest.approx(0.0, abs=1e-12)
            assert bregman_logdet(sx, sy) > 0
            assert bregman_complement(x, y) > 0
            assert bregman_bilogdet(x, y) > 0

    def test_logdet_identity_vs_scaled(self):
        for n, c in ((2, 3.0), (4, 0.2)):
            d = bregman_logdet(SpdMatrix(np.eye(n)), SpdMatrix(c * np.eye(n)))
            assert d == pytest.approx(n * (1 / c + math.log(c) - 1), rel=1e-12)

    def test_logdet_diagonal(self, rng):
        p = 10 ** rng.uniform(-1, 1, size=5)
        q = 10 ** rng.uniform(-1, 1, size=5)
        d = bregman_logdet(SpdMatrix(np.diag(p)), SpdMatrix(np.diag(q)))
        assert d == pytest.approx(np.sum(p / q - np.log(p / q) - 1), rel=1e-10)

    def test_logdet_trace_det_oracle(self, rng):
        # independent route: trace and slogdet of the explicit product
        for _ in range(30):
            n = int(rng.integers(1, 6))
            a, b = rand_spd(rng, n), rand_spd(rng, n)
            m = a.mat @ np.linalg.inv(b.mat)
            expected = float(np.trace(m) - np.linalg.slogdet(m)[1] - n)
            assert bregman_logdet(a, b) == pytest.approx(expected, abs=1e-10)

    def test_complement_is_logdet_of_complements(self, rng):
        x, y = rand_vpm(rng, 3), rand_vpm(rng, 3)
        assert bregman_complement(x, y) == bregman_logdet(
            SpdMatrix(complement(x).sym), SpdMatrix(complement(y).sym)
        )

    def test_bilogdet_is_sum(self, rng):
        x, y = rand_vpm(rng, 4), rand_vpm(rng, 4)
        assert bregman_bilogdet(x, y) == pytest.approx(
            bregman_logdet(SpdMatrix(x.sym), SpdMatrix(y.sym))
            + bregman_complement(x, y),
            rel=1e-14,
        )

    def test_bilogdet_complement_swap(self, rng):
        for _ in range(30):
            n = int(rng.integers(1, 6))
            x, y = rand_vpm(rng, n), rand_vpm(rng, n)
            assert bregman_bilogdet(complement(x), complement(y)) == pytest.approx(
                bregman_bilogdet(x, y), abs=1e-12
            )

    def test_bilogdet_is_asymmetric(self, rng):
        x, y = rand_vpm(rng, 3), rand_vpm(rng, 3)
        assert bregman_bilogdet(x, y) != pytest.approx(
            bregman_bilogdet(y, x), rel=1e-3
        )

    def test_generic_bregman_oracle(self, rng):
        # B(a:b) = Psi(a) - Psi(b) - <grad Psi(b), a - b>
        for _ in range(30):
            n = int(rng.integers(1, 6))
            x, y = rand_vpm(rng, n), rand_vpm(rng, n)
            generic = bilogdet(x) - bilogdet(y) - float(
                np.sum(bilogdet_gradient(y).mat * (x.mat - y.mat))
            )
            assert bregman_bilogdet(x, y) == pytest.approx(generic, abs=1e-9)


class TestSelfConcordance:
    def test_symmetric_scalar_line(self):
        # f(t) = -log(1/2 + t) - log(1/2 - t) has f'''(0) = 0
        x = VpmMatrix([[0.5]])
        v = SymmetricMatrix([[1.0]])
        report = self_concordance_check(x, v, samples=1)
        assert report.max_ratio < 0.05
        assert report.passed

    def test_random_lines(self, rng):
        for _ in range(40):
            n = int(rng.integers(1, 6))
            x = rand_interior_vpm(rng, n)
            v = rand_sym(rng, n, unit=True)
            report = self_concordance_check(x, v)
            assert report.max_ratio <= 1 + 1e-3

    def test_rejects_zero_direction(self, rng):
        with pytest.raises(DomainError):
            self_concordance_check(rand_vpm(rng, 2), SymmetricMatrix(np.zeros((2, 2))))


class TestPathLength:
    def test_constant_path(self, rng):
        x = rand_vpm(rng, 3)
        assert barrier_path_length([x, x, x]) == 0.0

    def test_needs_two_points(self, rng):
        with pytest.raises(DomainError):
            barrier_path_length([rand_vpm(rng, 2)])

    def test_scalar_segment_quadrature_oracle(self):
        # length integrand of x(u) = a + u (b - a) on (0, 1) is
        # |b - a| sqrt(1/x^2 + 1/(1-x)^2); compare adaptive quadrature
        a, b = 0.3, 0.7
        expected, _ = quad(
            lambda u: (b - a) * math.sqrt(
                1.0 / (a + u * (b - a)) ** 2 + 1.0 / (1 - a - u * (b - a)) ** 2
            ),
            0.0,
            1.0,
        )
        ts = np.linspace(0.0, 1.0, 8193)
        path = [VpmMatrix([[a + t * (b - a)]]) for t in ts]
        assert barrier_path_length(path) == pytest.approx(expected, abs=1e-8)

    def test_refinement_settles(self, rng):
        x, y = rand_interior_vpm(rng, 3), rand_interior_vpm(rng, 3)

        def length(k):
            ts = np.linspace(0.0, 1.0, k + 1)
            return barrier_path_length(
                [VpmMatrix((1 - t) * x.mat + t * y.mat) for t in ts]
            )

        k, prev = 64, length(64)
        delta = math.inf
        while k < 8192:
            k *= 2
            cur = length(k)
            delta = abs(cur - prev)
            prev = cur
            if delta < 1e-6:
                break
        assert delta < 1e-6

    def test_segment_below_sqrt_symmetrized_bregman(self, rng):
        for _ in range(15):
            n = int(rng.integers(1, 5))
            x, y = rand_interior_vpm(rng, n), rand_interior_vpm(rng, n)
            ts = np.linspace(0.0, 1.0, 257)
            length = barrier_path_length(
                [VpmMatrix((1 - t) * x.mat + t * y.mat) for t in ts]
            )
            assert length <= math.sqrt(symmetrized_bregman(x, y)) + 1e-6


class TestConvexity:
    def test_strict_convexity(self, rng):
        for _ in range(50):
            n = int(rng.integers(1, 6))
            x, y = rand_vpm(rng, n), rand_vpm(rng, n)
            alpha = rng.uniform(0.1, 0.9)
            mix = VpmMatrix(alpha * x.mat + (1 - alpha) * y.mat)
            assert bilogdet(mix) < (
                alpha * bilogdet(x) + (1 - alpha) * bilogdet(y) - 1e-12
            )
