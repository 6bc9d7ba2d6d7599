#include <cmath>
#include <vector>

#include "doctest.h"
#include "qaskey/coupling.hpp"
#include "qaskey/numerics.hpp"
#include "qaskey/polynomials.hpp"
#include "qaskey/spectral.hpp"

using namespace qaskey;

namespace {

CgcLabel cgc(Algebra alg, double k1, double k2, int n1, int n2, int n, int j, std::optional<double> q = {}) {
    CgcLabel L;
    L.algebra = alg;
    L.k1 = k1;
    L.k2 = k2;
    L.n1 = n1;
    L.n2 = n2;
    L.n = n;
    L.j = j;
    L.q = q;
    return L;
}

RacahLabel racah(double k1, double k2, double k3, int j12, int j23, int j, int jp, std::optional<double> q = {}) {
    RacahLabel L;
    L.k1 = k1;
    L.k2 = k2;
    L.k3 = k3;
    L.j12 = j12;
    L.j23 = j23;
    L.j = j;
    L.jprime = jp;
    L.q = q;
    return L;
}

template <class F> double orthogonality_defect(int dim, F entry) {
    double worst = 0;
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            double s = 0;
            for (int r = 0; r < dim; ++r) s += entry(r, a) * entry(r, b);
            worst = std::max(worst, std::abs(s - (a == b ? 1.0 : 0.0)));
        }
    return worst;
}

}  // namespace

TEST_SUITE("coupling") {

TEST_CASE("su(1,1) Clebsch-Gordan coefficients") {
    CHECK(cgc_su11(cgc(Algebra::su11, 0.7, 1.3, 0, 0, 0, 0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(cgc_su11(cgc(Algebra::su11, 0.7, 1.3, 2, 0, 1, 0)) == 0.0);

    // lowest-weight component: sqrt(binom(n, n1) (2k1)_n1 (2k2)_n2 / (2k1+2k2)_n)
    const double k1 = 0.7, k2 = 1.3;
    for (int n = 0; n <= 6; ++n)
        for (int n1 = 0; n1 <= n; ++n1) {
            const double expect = std::sqrt(binomial(n, n1) * pochhammer(2 * k1, n1) * pochhammer(2 * k2, n - n1) /
                                            pochhammer(2 * k1 + 2 * k2, n));
            CHECK(cgc_su11(cgc(Algebra::su11, k1, k2, n1, n - n1, n, 0)) == doctest::Approx(expect).epsilon(1e-13));
        }

    CHECK(orthogonality_defect(3, [&](int n1, int j) {
              return cgc_su11(cgc(Algebra::su11, k1, k2, n1, 2 - n1, 2 - j, j));
          }) < 1e-12);
    CHECK(orthogonality_defect(7, [&](int n1, int j) {
              return cgc_su11(cgc(Algebra::su11, 0.45, 2.1, n1, 6 - n1, 6 - j, j));
          }) < 1e-11);
}

TEST_CASE("U_q(su(1,1)) Clebsch-Gordan coefficients") {
    CHECK(cgc_uq_su11(cgc(Algebra::uq_su11, 0.7, 1.3, 0, 0, 0, 0, 0.5)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(orthogonality_defect(4, [&](int n1, int j) {
              return cgc_uq_su11(cgc(Algebra::uq_su11, 0.7, 1.3, n1, 3 - n1, 3 - j, j, 0.5));
          }) < 1e-12);
    // q -> 1 limit
    const double q = 1 - 1e-4;
    for (int n1 = 0; n1 <= 3; ++n1)
        for (int j = 0; j <= 3; ++j) {
            const double a = cgc_uq_su11(cgc(Algebra::uq_su11, 0.7, 1.3, n1, 3 - n1, 3 - j, j, q));
            const double b = cgc_su11(cgc(Algebra::su11, 0.7, 1.3, n1, 3 - n1, 3 - j, j));
            CHECK(std::abs(a - b) < 1e-2);
        }
    CHECK_THROWS_AS(cgc_uq_su11(cgc(Algebra::uq_su11, 0.7, 1.3, 0, 0, 0, 0)), DomainError);
    CHECK_THROWS_AS(cgc_uq_su11(cgc(Algebra::uq_su11, -0.7, 1.3, 0, 0, 0, 0, 0.5)), DomainError);
}

TEST_CASE("Racah coefficients") {
    CHECK(racah_su11(racah(0.6, 0.9, 1.4, 0, 0, 0, 0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(racah_uq_su11(racah(0.6, 0.9, 1.4, 0, 0, 0, 0, 0.6)) == doctest::Approx(1.0).epsilon(1e-15));
    for (int J : {1, 2, 3}) {
        CHECK(orthogonality_defect(J + 1, [&](int a, int b) {
                  return racah_su11(racah(0.6, 0.9, 1.4, a, b, J - a, J - b));
              }) < 1e-11);
        CHECK(orthogonality_defect(J + 1, [&](int a, int b) {
                  return racah_uq_su11(racah(0.6, 0.9, 1.4, a, b, J - a, J - b, 0.6));
              }) < 1e-11);
    }
    const double q = 1 - 1e-4;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            CHECK(std::abs(racah_uq_su11(racah(0.6, 0.9, 1.4, a, b, 2 - a, 2 - b, q)) -
                           racah_su11(racah(0.6, 0.9, 1.4, a, b, 2 - a, 2 - b))) < 1e-2);
    CHECK_THROWS_AS(racah_su11(racah(0.6, 0.9, 1.4, 1, 0, 0, 0)), DomainError);
}

TEST_CASE("normalisation constant") {
    CHECK(c_norm(0.8, 1.1, 0, 0.5) == 1.0);
    for (int j = 1; j <= 5; ++j) {
        const double v = c_norm(0.8, 1.1, j, 0.5);
        CHECK(v > 0.0);
        const double Q = 0.25;
        const double prod = q_pochhammer(Q, Q, j) * q_pochhammer(std::pow(0.5, 3.2), Q, j) *
                            q_pochhammer(std::pow(0.5, 4.4), Q, j) * q_pochhammer(std::pow(0.5, 7.6 + 2 * j - 2), Q, j);
        CHECK(1.0 / (v * v) == doctest::Approx(prod).epsilon(1e-13));
    }
}

TEST_CASE("U_q(su(2)) n=0 Clebsch-Gordan column") {
    CHECK(cgc_uq_su2_n0(3, 2, 0, 0, 0, 0.5) == 1.0);
    for (int N1 = 0; N1 <= 4; ++N1)
        for (int N2 = 0; N2 <= 4; ++N2)
            for (int j = 0; j <= std::min(N1, N2); ++j) {
                double s = 0;
                for (int n1 = 0; n1 <= j; ++n1) {
                    const double c = cgc_uq_su2_n0(N1, N2, j, n1, j - n1, 0.5);
                    if (j - n1 > 0) CHECK((c < 0) == ((j - n1) % 2 == 1));
                    s += c * c;
                }
                CHECK(s == doctest::Approx(1.0).epsilon(1e-13));
            }
    CHECK_THROWS_AS(cgc_uq_su2_n0(2, 2, 1, 1, 1, 0.5), DomainError);
}

TEST_CASE("eigenbasis overlaps against the direct inner product") {
    const double q = 0.7, p = 1.15, Q = q * q;
    for (int N1 = 0; N1 <= 3; ++N1)
        for (int N2 = 0; N2 <= 3; ++N2)
            for (int j = 0; j <= std::min(N1, N2); ++j)
                for (int f1 = 0; f1 <= N1; ++f1)
                    for (int f2 = 0; f2 <= N2; ++f2) {
                        double direct = 0;
                        for (int n1 = 0; n1 <= j; ++n1) {
                            const int n2 = j - n1;
                            if (n1 > N1 || n2 > N2) continue;
                            direct += cgc_uq_su2_n0(N1, N2, j, n1, n2, q) *
                                      orthonormal_eval(DualQKrawtchouk(p * std::pow(q, 2 * N2 - 4 * f2), N1, Q), n1, f1) *
                                      orthonormal_eval(DualQKrawtchouk(p, N2, Q), n2, f2);
                        }
                        CHECK(std::abs(eigenbasis_overlap_uq_su2(N1, N2, j, f1, f2, p, q) - direct) < 1e-11);
                    }
    CHECK(eigenbasis_overlap_uq_su2(2, 2, 2, 0, 1, p, q) == 0.0);
}

TEST_CASE("linearisation coefficients") {
    const auto one = linearisation_coeffs(3, 0, 1.1, 0.9, 0.5);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == doctest::Approx(1.0).epsilon(1e-15));
    for (double c : linearisation_coeffs(3, 2, 1.2, 1.2, 0.6)) CHECK(c > 0.0);

    // projection with a Gauss rule of the Askey-Wilson measure
    const double p = 1.1, r = 1.1, q = 0.5;
    const int l1 = 2, l2 = 2, L = l1 + l2;
    const AwParams w = linearisation_aw_params(p, r, q);
    const AskeyWilson aw(w.a, w.b, w.c, w.d, q * q);
    const QuadratureRule rule = gauss_rule(askey_wilson_operator(aw), L + 1);
    auto P = [&](int m, double x) { return eval(aw, m, x).real(); };
    const auto c = linearisation_coeffs(l1, l2, p, r, q);
    REQUIRE(c.size() == std::size_t(2 * std::min(l1, l2) + 1));
    for (int j = 0; j < int(c.size()); ++j) {
        double num = 0, den = 0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double x = rule.nodes[k];
            num += rule.weights[k] * P(l1, x) * P(l2, x) * P(L - j, x);
            den += rule.weights[k] * P(L - j, x) * P(L - j, x);
        }
        CHECK(std::abs(c[j] - num / den) < 1e-9 * (1 + std::abs(c[j])));
    }
    CHECK_THROWS_AS(linearisation_coeffs(1, 1, -1.0, 1.0, 0.5), DomainError);
}

}
