"""Pipeline assembly: GCD from a matching, nearby pair, certificates."""

import numpy as np
import pytest

from laggcd import (
    ClusterParams,
    LagrangePoly,
    RootList,
    ZeroPolynomialError,
    approximate_gcd,
    assemble_gcd,
    build_graph,
    evaluate,
    from_roots,
    greedy_mwm,
    reconstruct,
    roots,
)


def cheb_nodes(count, lo=-8.0, hi=8.0):
    k = np.arange(1, count + 1)
    return (lo + hi) / 2 + (hi - lo) / 2 * np.cos((2 * k - 1) * np.pi / (2 * count))


class TestAssembleGcd:
    def reference(self):
        rp = RootList([(1.0, 1), (1.825, 4), (2.7, 2)])
        rq = RootList([(1.4425, 4), (2.9, 2)])
        g = build_graph(rp, rq, 0.5)
        return g, greedy_mwm(g)

    def test_reference_gcd_roots(self):
        g, m = self.reference()
        gcd = assemble_gcd(m, g)
        centers = {mult: r for r, mult in gcd}
        assert centers[4].real == pytest.approx((4 * 1.825 + 4 * 1.4425) / 8)
        assert centers[4].real == pytest.approx(1.63375)
        assert centers[2].real == pytest.approx(2.8)
        assert gcd.total_multiplicity() == 6

    def test_identical_endpoints(self):
        g = build_graph(RootList([(5.0, 1)]), RootList([(5.0, 1)]), 0.1)
        gcd = assemble_gcd(greedy_mwm(g), g)
        assert gcd.entries == ((5.0 + 0j, 1),)

    def test_no_edges_degree_zero(self):
        g = build_graph(RootList([(0.0, 1)]), RootList([(9.0, 1)]), 0.1)
        gcd = assemble_gcd(greedy_mwm(g), g)
        assert gcd.total_multiplicity() == 0


class TestReconstruct:
    def test_reference_tilde_structure(self):
        rp = RootList([(1.0, 1), (1.825, 4), (2.7, 2)])
        rq = RootList([(1.4425, 4), (2.9, 2)])
        g = build_graph(rp, rq, 0.5)
        m = greedy_mwm(g)
        gcd = assemble_gcd(m, g)
        pt = reconstruct(rp, m, "left", gcd)
        qt = reconstruct(rq, m, "right", gcd)
        # matched clusters are fully absorbed; only the lone root survives
        assert pt.total_multiplicity() == 7
        assert qt == gcd
        extra = [e for e in pt.entries if e not in gcd.entries]
        assert extra == [(1.0 + 0j, 1)]

    def test_unmatched_pass_through(self):
        rp = RootList([(0.0, 2), (5.0, 1)])
        g = build_graph(rp, RootList([(9.0, 1)]), 0.1)
        m = greedy_mwm(g)
        pt = reconstruct(rp, m, "left", assemble_gcd(m, g))
        assert pt == rp

    def test_bad_side(self):
        with pytest.raises(ValueError):
            reconstruct(RootList(), greedy_mwm(build_graph(RootList(), RootList(), 1.0)), "middle", RootList())


class TestApproximateGcd:
    def test_reference_end_to_end(self, ref_p, ref_q):
        res = approximate_gcd(ref_p, ref_q, ClusterParams(sigma=0.5))
        assert res.gcd_degree == 6
        assert res.matching.total_weight == 6
        assert sorted(m for _, m in res.gcd_roots) == [2, 4]
        assert res.cert_p and res.cert_q
        assert res.dist_p <= 0.5 and res.dist_q <= 0.5

    def test_identical_inputs(self):
        nodes = np.array([0.0, 1.0, 2.0, 3.0])
        p = from_roots(RootList([(0.5, 1), (1.5, 1), (2.5, 1)]), nodes)
        res = approximate_gcd(p, p, ClusterParams(sigma=1e-6))
        assert res.gcd_degree == 3
        assert res.dist_p == pytest.approx(0.0, abs=1e-9)
        assert res.dist_q == pytest.approx(0.0, abs=1e-9)
        assert res.p_tilde_roots == res.q_tilde_roots

    def test_separated_roots_coprime(self):
        p = from_roots(RootList([(0.0, 1), (1.0, 1)]), np.array([-3.0, -2.0, 4.0]))
        q = from_roots(RootList([(10.0, 1), (11.0, 1)]), np.array([8.0, 9.5, 13.0]))
        res = approximate_gcd(p, q, ClusterParams(sigma=0.01))
        assert res.gcd_degree == 0
        assert res.matching.total_weight == 0
        assert res.gcd_poly.degree == 0
        assert evaluate(res.gcd_poly, 123.0) == pytest.approx(1.0)
        # tilde polynomials keep each side's own clustered roots
        assert res.p_tilde_roots == res.p_clustered

    def test_exact_recovery_synthetic(self):
        g0 = RootList([(-2.0, 1), (3.0, 2)])
        a = RootList([(0.0, 1), (5.0, 1)])
        b = RootList([(-5.0, 1)])
        p_roots = RootList(list(g0.entries) + list(a.entries))
        q_roots = RootList(list(g0.entries) + list(b.entries))
        p = from_roots(p_roots, cheb_nodes(p_roots.total_multiplicity() + 1))
        q = from_roots(q_roots, cheb_nodes(q_roots.total_multiplicity() + 1))
        # sigma must cover the ~1e-5 eigenvalue splitting of the double root
        res = approximate_gcd(p, q, ClusterParams(sigma=1e-4))
        assert res.gcd_degree == 3
        got = sorted(res.gcd_roots.entries, key=lambda e: e[0].real)
        assert got[0][1] == 1 and abs(got[0][0] + 2.0) <= 1e-6
        assert got[1][1] == 2 and abs(got[1][0] - 3.0) <= 1e-6

    def test_monotone_degree_in_sigma(self, ref_p, ref_q):
        degrees = []
        for sigma in (0.01, 0.05, 0.1, 0.3, 0.5, 0.8):
            res = approximate_gcd(ref_p, ref_q, ClusterParams(sigma=sigma))
            degrees.append(res.gcd_degree)
        assert degrees == sorted(degrees)

    def test_zero_polynomial_rejected(self, ref_p):
        zero = LagrangePoly([0.0, 1.0], [0.0, 0.0])
        with pytest.raises(ZeroPolynomialError):
            approximate_gcd(ref_p, zero, ClusterParams(sigma=0.5))

    def test_degree_bookkeeping_random(self, rng):
        for _ in range(10):
            dp = int(rng.integers(2, 7))
            dq = int(rng.integers(2, 7))
            p = LagrangePoly(cheb_nodes(dp + 1, -2, 2), rng.uniform(-5, 5, dp + 1))
            q = LagrangePoly(cheb_nodes(dq + 1, -2, 2), rng.uniform(-5, 5, dq + 1))
            res = approximate_gcd(p, q, ClusterParams(sigma=float(rng.uniform(0, 0.5))))
            assert res.p_tilde_roots.total_multiplicity() == len(res.p_report.roots)
            assert res.q_tilde_roots.total_multiplicity() == len(res.q_report.roots)
            assert res.gcd_degree == res.matching.total_weight
            # gcd divides both tilde root lists
            for r, m in res.gcd_roots:
                assert any(r == s and m <= ms for s, ms in res.p_tilde_roots)
                assert any(r == s and m <= ms for s, ms in res.q_tilde_roots)

    def test_perturbed_common_roots_certificate(self, rng):
        # common roots perturbed by <= sigma/4 on each side: certificate
        # is analytically expected to hold
        sigma = 0.2
        common = [(-1.0, 1), (2.0, 1)]
        for _ in range(5):
            eps = lambda: complex(*rng.uniform(-sigma / 8, sigma / 8, 2))
            pr = RootList([(r + eps(), m) for r, m in common] + [(6.0, 1)])
            qr = RootList([(r + eps(), m) for r, m in common] + [(-6.0, 1)])
            p = from_roots(pr, cheb_nodes(4))
            q = from_roots(qr, cheb_nodes(4))
            res = approximate_gcd(p, q, ClusterParams(sigma=sigma))
            assert res.gcd_degree >= 2
            assert res.cert_p and res.cert_q

    def test_exact_matcher_available(self, ref_p, ref_q):
        res = approximate_gcd(
            ref_p, ref_q, ClusterParams(sigma=0.5), matcher="exact"
        )
        assert res.gcd_degree == 6

    def test_cofactors(self, ref_p, ref_q):
        res = approximate_gcd(ref_p, ref_q, ClusterParams(sigma=0.5))
        assert res.cofactor_q.total_multiplicity() == 0
        assert res.cofactor_p.total_multiplicity() == 1
        (r, m), = res.cofactor_p.entries
        assert m == 1 and abs(r.imag) < 1e-9

    def test_gcd_poly_matches_product(self, ref_p, ref_q):
        res = approximate_gcd(ref_p, ref_q, ClusterParams(sigma=0.5))
        z = 3.3 + 0.1j
        want = 1.0 + 0j
        for r, m in res.gcd_roots:
            want *= (z - r) ** m
        assert evaluate(res.gcd_poly, z) == pytest.approx(want, rel=1e-9)

    def test_certificate_warning_path(self, rng):
        # force a tight certificate budget so the warning machinery fires
        p = from_roots(RootList([(0.0, 1), (1.0, 1)]), np.array([-2.0, 3.0, 4.0]))
        q = from_roots(RootList([(0.4, 1), (1.4, 1)]), np.array([-2.0, 3.0, 4.0]))
        with pytest.warns(UserWarning, match="certificate failed"):
            res = approximate_gcd(
                p, q, ClusterParams(sigma=0.5), sigma_cert=1e-12
            )
        assert not res.cert_p
        assert res.warnings
