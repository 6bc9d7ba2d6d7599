#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qaskey/polynomials.hpp"
#include "qaskey/spectral.hpp"

using namespace qaskey;

namespace {

// Roots of det(T - x) by bisection on the Sturm sign count, long double.
std::vector<double> sturm_eigenvalues(const TridiagonalMatrix& T) {
    const int n = int(T.diag.size());
    auto below = [&](long double x) {
        int count = 0;
        long double d = 1;
        for (int i = 0; i < n; ++i) {
            const long double e = i ? T.offdiag[i - 1] : 0.0;
            d = (T.diag[i] - x) - (i ? e * e / d : 0.0L);
            if (d == 0) d = -1e-300L;
            if (d < 0) ++count;
        }
        return count;
    };
    std::vector<double> out;
    for (int k = 0; k < n; ++k) {
        long double lo = -100, hi = 100;
        for (int it = 0; it < 200; ++it) {
            const long double m = (lo + hi) / 2;
            (below(m) > k ? hi : lo) = m;
        }
        out.push_back(double((lo + hi) / 2));
    }
    return out;
}

JacobiOperator chebyshev() {
    JacobiOperator J;
    J.a = [](int) { return 0.5; };
    J.b = [](int) { return 0.0; };
    return J;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("Chebyshev matrix: analytic eigenvalues and weights") {
    for (int N : {1, 2, 5, 17, 40}) {
        const QuadratureRule r = gauss_rule(chebyshev(), N);
        REQUIRE(r.nodes.size() == std::size_t(N));
        for (int k = 1; k <= N; ++k) {
            const double th = k * std::numbers::pi / (N + 1);
            CHECK(std::abs(r.nodes[N - k] - std::cos(th)) < 1e-12);
            CHECK(std::abs(r.weights[N - k] - 2.0 / (N + 1) * std::sin(th) * std::sin(th)) < 1e-12);
        }
    }
}

TEST_CASE("QL eigenvalues match the Sturm-bisection oracle") {
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> u(-2, 2), v(0.05, 2);
    for (int trial = 0; trial < 60; ++trial) {
        const int N = 1 + trial % 6;
        TridiagonalMatrix T;
        for (int i = 0; i < N; ++i) T.diag.push_back(u(gen));
        for (int i = 0; i + 1 < N; ++i) T.offdiag.push_back(v(gen));
        const EigenResult e = eig_tridiagonal(T);
        const auto ref = sturm_eigenvalues(T);
        double wsum = 0;
        for (int i = 0; i < N; ++i) {
            CHECK(std::abs(e.values[i] - ref[i]) < 1e-10);
            CHECK(e.first_components[i] >= 0.0);
            wsum += e.first_components[i] * e.first_components[i];
        }
        CHECK(wsum == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("Gauss rule integrates polynomials up to degree 2N-1") {
    const JacobiOperator J = recurrence(AlSalamChihara(0.4, 0.2, 0.5));
    const int N = 6;
    const QuadratureRule r = gauss_rule(J, N);
    for (int m = 0; m < N; ++m)
        for (int n = 0; n < N; ++n) {
            double g = 0;
            for (int k = 0; k < N; ++k) {
                const auto p = eval_by_recurrence(J, N, r.nodes[k]);
                g += r.weights[k] * p[m] * p[n];
            }
            CHECK(std::abs(g - (m == n ? 1.0 : 0.0)) < 1e-12);
        }
}

TEST_CASE("truncation limits") {
    CHECK_THROWS_AS(truncate(chebyshev(), 0), DomainError);
    const JacobiOperator J = recurrence(DualQKrawtchouk(1.0, 3, 0.5));
    CHECK(truncate(J, 4).diag.size() == 4);
    CHECK_THROWS_AS(truncate(J, 5), DomainError);
}

TEST_CASE("representation operators coincide with the mapped family recurrences") {
    auto gap = [](const JacobiOperator& op, const JacobiOperator& fam, int n_max) {
        const double ratio = op.variable_map.scale / fam.variable_map.scale;
        const double shift = op.variable_map.shift - ratio * fam.variable_map.shift;
        double g = 0;
        for (int n = 0; n < n_max; ++n) {
            g = std::max(g, std::abs(op.a(n) - ratio * fam.a(n)));
            g = std::max(g, std::abs(op.b(n) - (ratio * fam.b(n) + shift)));
        }
        return g;
    };
    CHECK(gap(representation_operator(Su11Xphi{0.7, 1.2}), recurrence(MeixnerPollaczek(0.7, 1.2)), 25) < 1e-13);
    const double k = 0.9, s = 1.3, q = 0.6, q2k = std::pow(q, 2 * k);
    CHECK(gap(representation_operator(UqSu11YsA{k, s, q}), recurrence(AlSalamChihara(q2k * s, q2k / s, q * q)), 25) <
          1e-13);
    for (int N = 0; N <= 6; ++N)
        CHECK(gap(representation_operator(UqSu2XpA{N, 1.2, 0.7}), recurrence(DualQKrawtchouk(1.2, N, 0.49)), N + 1) <
              1e-13);
}

TEST_CASE("t^N(X_p A) spectrum equals the closed-form eigenvalues") {
    for (int N = 0; N <= 8; ++N)
        for (double p : {0.8, 1.25}) {
            const double q = 0.65;
            const auto e = eig_tridiagonal(truncate(representation_operator(UqSu2XpA{N, p, q}), N + 1));
            std::vector<double> lam;
            for (int f = 0; f <= N; ++f) lam.push_back(xpa_eigenvalue(N, f, p, q));
            std::sort(lam.begin(), lam.end());
            for (int f = 0; f <= N; ++f) CHECK(std::abs(e.values[f] - lam[f]) < 1e-10 * std::max(1.0, std::abs(lam[f])));
        }
}

}
