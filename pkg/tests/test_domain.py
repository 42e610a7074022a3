import numpy as np
import pytest

from spdbicone import (
    BiconeCoords,
    DimensionError,
    DomainError,
    SimplexPoint,
    SpdMatrix,
    SymmetricMatrix,
    VpmMatrix,
    bicone_coords,
    complement,
    eigh,
    embed_simplex,
    hat,
    james_differential,
    james_forward,
    james_inverse,
    scaled_james,
    trace_normalize,
)
from helpers import rand_orthogonal, rand_spd, rand_sym, rand_vpm


class TestTypes:
    def test_spd_rejects_indefinite(self):
        with pytest.raises(DomainError):
            SpdMatrix(np.diag([1.0, 0.0]))
        with pytest.raises(DomainError):
            SpdMatrix(np.diag([1.0, -1.0]))

    def test_vpm_rejects_out_of_range(self):
        with pytest.raises(DomainError):
            VpmMatrix(np.diag([0.5, 1.0]))
        with pytest.raises(DomainError):
            VpmMatrix(np.diag([0.5, 1.0003]))
        with pytest.raises(DomainError):
            VpmMatrix(np.diag([0.0, 0.5]))

    def test_vpm_inverse_leaves_bicone(self, rng):
        # an inverse always has an eigenvalue 1/l_min > 1
        for _ in range(20):
            x = rand_vpm(rng, int(rng.integers(1, 6)))
            with pytest.raises(DomainError):
                VpmMatrix(np.linalg.inv(x.mat))

    def test_simplex_validation(self):
        with pytest.raises(DomainError):
            SimplexPoint([0.5, 0.6])
        with pytest.raises(DomainError):
            SimplexPoint([1.0, 0.0])
        p = SimplexPoint([0.25, 0.75])
        assert p.n == 2

    def test_bicone_coords_invariant(self):
        with pytest.raises(DomainError):
            BiconeCoords(r=0.5, theta=0.0, z=0.6)
        with pytest.raises(DomainError):
            BiconeCoords(r=-0.1, theta=0.0, z=0.0)


class TestJamesMap:
    def test_identity_maps_to_half(self):
        out = james_forward(SpdMatrix(np.eye(3)))
        np.testing.assert_allclose(out.mat, 0.5 * np.eye(3), atol=1e-15)

    def test_diagonal_formula(self):
        t = 3.7
        out = james_forward(SpdMatrix(np.diag([t, 1 / t])))
        np.testing.assert_allclose(
            out.mat, np.diag([t / (1 + t), (1 / t) / (1 + 1 / t)]), atol=1e-15
        )

    def test_round_trip(self, rng):
        for _ in range(50):
            p = rand_spd(rng, int(rng.integers(1, 7)))
            q = james_inverse(james_forward(p))
            np.testing.assert_allclose(q.mat, p.mat, rtol=1e-10, atol=1e-10)

    def test_half_identity_inverse(self):
        out = james_inverse(VpmMatrix(0.5 * np.eye(2)))
        np.testing.assert_allclose(out.mat, np.eye(2), atol=1e-14)

    def test_scalar_inverse(self):
        a = 0.3
        out = james_inverse(VpmMatrix([[a]]))
        assert out.mat[0, 0] == pytest.approx(a / (1 - a), rel=1e-14)

    def test_resolvent_identity(self, rng):
        # iota(P) == (I + P^{-1})^{-1}
        for _ in range(20):
            n = int(rng.integers(1, 6))
            p = rand_spd(rng, n)
            lhs = james_forward(p).mat
            rhs = np.linalg.inv(np.eye(n) + np.linalg.inv(p.mat))
            assert np.abs(lhs - rhs).max() < 1e-10

    def test_complement_resolvent_identity(self, rng):
        # (I - iota(P))^{-1} == I + P
        for _ in range(20):
            n = int(rng.integers(1, 6))
            p = rand_spd(rng, n)
            lhs = np.linalg.inv(np.eye(n) - james_forward(p).mat)
            assert np.abs(lhs - (np.eye(n) + p.mat)).max() < 1e-10

    def test_spectrum_map(self, rng):
        for _ in range(20):
            p = rand_spd(rng, int(rng.integers(1, 7)))
            lam = eigh(p.sym).eigenvalues
            image = eigh(james_forward(p).sym).eigenvalues
            np.testing.assert_allclose(image, lam / (1 + lam), atol=1e-10)

    def test_orthogonal_equivariance(self, rng):
        for _ in range(20):
            n = int(rng.integers(1, 6))
            p = rand_spd(rng, n)
            u = rand_orthogonal(rng, n)
            lhs = james_forward(SpdMatrix(u @ p.mat @ u.T)).mat
            rhs = u @ james_forward(p).mat @ u.T
            assert np.abs(lhs - rhs).max() < 1e-10


class TestJamesDifferential:
    def test_zero_direction(self, rng):
        p = rand_spd(rng, 3)
        out = james_differential(p, SymmetricMatrix(np.zeros((3, 3))))
        np.testing.assert_array_equal(out.mat, np.zeros((3, 3)))

    def test_at_identity(self, rng):
        v = rand_sym(rng, 4)
        out = james_differential(SpdMatrix(np.eye(4)), v)
        np.testing.assert_allclose(out.mat, v.mat / 4.0, atol=1e-14)

    def test_matches_central_difference(self, rng):
        # oracle: (iota(P + hV) - iota(P - hV)) / 2h with h = 1e-5
        h = 1e-5
        for _ in range(20):
            n = int(rng.integers(1, 6))
            p = rand_spd(rng, n)
            v = rand_sym(rng, n, unit=True)
            fd = (
                james_forward(SpdMatrix(p.mat + h * v.mat)).mat
                - james_forward(SpdMatrix(p.mat - h * v.mat)).mat
            ) / (2 * h)
            exact = james_differential(p, v).mat
            scale = max(1.0, np.abs(exact).max())
            assert np.abs(fd - exact).max() / scale < 1e-8


class TestComplementHat:
    def test_half_identity_fixed_point(self):
        x = VpmMatrix(0.5 * np.eye(3))
        np.testing.assert_array_equal(complement(x).mat, x.mat)

    def test_diagonal_swap(self):
        x = VpmMatrix(np.diag([0.2, 0.8]))
        np.testing.assert_allclose(complement(x).mat, np.diag([0.8, 0.2]), atol=0)

    def test_involution_to_one_ulp(self, rng):
        # 1 - (1 - x) re-rounds entries below 1/2; exact only to one ulp of 1
        eps = np.finfo(float).eps
        for _ in range(30):
            x = rand_vpm(rng, int(rng.integers(1, 7)))
            back = complement(complement(x))
            assert np.abs(back.mat - x.mat).max() <= eps

    def test_hat_components(self, rng):
        x = rand_vpm(rng, 4)
        pair = hat(x)
        np.testing.assert_array_equal(pair.first.mat, x.mat)
        np.testing.assert_allclose(
            pair.first.mat + pair.second.mat, np.eye(4), atol=1e-15
        )


class TestEmbeddings:
    def test_uniform_simplex(self):
        out = embed_simplex(SimplexPoint([1 / 3] * 3))
        np.testing.assert_allclose(out.mat, np.eye(3) / 3.0, atol=1e-15)

    def test_diagonal_embedding(self):
        out = embed_simplex(SimplexPoint([0.2, 0.8]))
        np.testing.assert_array_equal(out.mat, np.diag([0.2, 0.8]))
        assert np.trace(out.mat) == pytest.approx(1.0, abs=1e-12)

    def test_trace_normalize_scalar_multiples(self):
        for c in (0.5, 1.0, 7.3):
            out = trace_normalize(SpdMatrix(c * np.eye(2)))
            np.testing.assert_allclose(out.mat, 0.5 * np.eye(2), atol=1e-15)

    def test_trace_normalize_diagonal(self):
        out = trace_normalize(SpdMatrix(np.diag([1.0, 3.0])))
        np.testing.assert_allclose(out.mat, np.diag([0.25, 0.75]), atol=1e-15)

    def test_trace_normalize_random(self, rng):
        for _ in range(20):
            p = rand_spd(rng, int(rng.integers(2, 7)))
            out = trace_normalize(p)
            w = eigh(out.sym).eigenvalues
            assert np.trace(out.mat) == pytest.approx(1.0, abs=1e-12)
            assert 0.0 < w[0] and w[-1] < 1.0

    def test_trace_normalize_rejects_n1(self):
        with pytest.raises(DimensionError):
            trace_normalize(SpdMatrix([[2.0]]))

    def test_scaled_map(self, rng):
        p = rand_spd(rng, 3)
        np.testing.assert_array_equal(
            scaled_james(p, 1.0).mat, james_forward(p).mat
        )
        np.testing.assert_allclose(
            scaled_james(SpdMatrix(np.eye(3)), 2.0).mat, np.eye(3), atol=1e-15
        )
        top = eigh(scaled_james(p, 3.0)).eigenvalues[-1]
        assert top < 3.0
        with pytest.raises(DomainError):
            scaled_james(p, 0.0)


class TestBiconeChart:
    def test_scalar_multiples_on_axis(self):
        for alpha in (0.1, 0.5, 0.9):
            c = bicone_coords(VpmMatrix(alpha * np.eye(2)))
            assert c.r == pytest.approx(0.0, abs=1e-15)
            assert c.theta == 0.0
            assert c.z == pytest.approx((alpha - 1) / (alpha + 1), rel=1e-12)

    def test_half_identity(self):
        c = bicone_coords(VpmMatrix(0.5 * np.eye(2)))
        assert (c.r, c.theta) == (0.0, 0.0)
        assert c.z == pytest.approx(-1.0 / 3.0, rel=1e-14)

    def test_known_diagonal(self):
        # l1 = 1/5, l2 = 4/5: denominator 54/25, r = 5/18, z = -7/18
        c = bicone_coords(VpmMatrix(np.diag([0.2, 0.8])))
        assert c.r == pytest.approx(5.0 / 18.0, rel=1e-13)
        assert c.z == pytest.approx(-7.0 / 18.0, rel=1e-13)
        assert abs(c.z) + c.r < 1.0

    def test_membership_on_random(self, rng):
        for _ in range(200):
            c = bicone_coords(rand_vpm(rng, 2))
            assert abs(c.z) + c.r < 1.0

    def test_rejects_other_dimensions(self, rng):
        with pytest.raises(DimensionError):
            bicone_coords(rand_vpm(rng, 3))

    def test_cartesian_round_trip(self, rng):
        c = bicone_coords(rand_vpm(rng, 2))
        x, y, z = c.cartesian()
        assert np.hypot(x, y) == pytest.approx(c.r, abs=1e-15)
        assert z == c.z
