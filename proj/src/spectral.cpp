#include "qaskey/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qaskey/errors.hpp"

namespace qaskey {

TridiagonalMatrix truncate(const JacobiOperator& J, int N) {
    if (N < 1) throw DomainError("truncate: N must be positive");
    if (J.dimension && N > *J.dimension) throw DomainError("truncate: N exceeds the operator dimension");
    TridiagonalMatrix T;
    T.diag.resize(N);
    T.offdiag.resize(N - 1);
    for (int n = 0; n < N; ++n) T.diag[n] = J.b(n);
    for (int n = 0; n + 1 < N; ++n) {
        T.offdiag[n] = J.a(n);
        if (!(T.offdiag[n] > 0.0)) throw DomainError("truncate: off-diagonal entries must be positive");
    }
    return T;
}

EigenResult eig_tridiagonal(const TridiagonalMatrix& T) {
    const int n = int(T.diag.size());
    if (n == 0) return {};
    if (int(T.offdiag.size()) != n - 1) throw DomainError("eig_tridiagonal: size mismatch");
    std::vector<double> d = T.diag;
    std::vector<double> e(n, 0.0);
    std::copy(T.offdiag.begin(), T.offdiag.end(), e.begin());
    std::vector<double> z(n, 0.0);  // first row of the eigenvector matrix
    z[0] = 1.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-14 * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) throw ConvergenceError("eig_tridiagonal: iteration cap reached");
                // Wilkinson shift from the trailing 2x2 block at l
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
    EigenResult out;
    out.values.reserve(n);
    out.first_components.reserve(n);
    for (int i : order) {
        out.values.push_back(d[i]);
        out.first_components.push_back(std::abs(z[i]));
    }
    return out;
}

QuadratureRule gauss_rule(const JacobiOperator& J, int N) {
    const EigenResult eig = eig_tridiagonal(truncate(J, N));
    QuadratureRule rule;
    rule.nodes = eig.values;
    rule.weights.reserve(N);
    for (double v : eig.first_components) rule.weights.push_back(v * v);
    return rule;
}

std::vector<double> eval_by_recurrence(const JacobiOperator& J, int N, double y) {
    if (N < 0) throw DomainError("eval_by_recurrence: N must be nonnegative");
    std::vector<double> p(N + 1);
    p[0] = 1.0;
    double prev = 0.0;
    for (int n = 0; n < N; ++n) {
        const double back = n > 0 ? J.a(n - 1) * prev : 0.0;
        p[n + 1] = ((y - J.b(n)) * p[n] - back) / J.a(n);
        prev = p[n];
    }
    return p;
}

JacobiOperator representation_operator(const RepnOperatorSpec& spec) {
    if (const auto* s = std::get_if<Su11Xphi>(&spec)) {
        if (!(s->k > 0.0)) throw DomainError("Su11Xphi: k must be positive");
        const double k = s->k, c = std::cos(s->phi);
        JacobiOperator J;
        J.a = [k](int n) { return std::sqrt((n + 1.0) * (2.0 * k + n)); };
        J.b = [k, c](int n) { return -2.0 * (n + k) * c; };
        J.variable_map = ArgumentMap::affine(2.0 * std::sin(s->phi), 0.0);
        return J;
    }
    if (const auto* s = std::get_if<UqSu11YsA>(&spec)) {
        if (!(s->k > 0.0)) throw DomainError("UqSu11YsA: k must be positive");
        if (!(s->q > 0.0 && s->q < 1.0)) throw DomainError("UqSu11YsA: q must lie in (0,1)");
        if (s->s == 0.0) throw DomainError("UqSu11YsA: s must be nonzero");
        const double k = s->k, q = s->q, mu2 = s->s + 1.0 / s->s;
        const double scale = 1.0 / (1.0 / q - q);
        JacobiOperator J;
        J.a = [k, q, scale](int n) {
            return scale * std::sqrt((1.0 - std::pow(q, 2 * n + 2)) * (1.0 - std::pow(q, 4 * k + 2 * n)));
        };
        J.b = [k, q, mu2, scale](int n) { return scale * mu2 * (std::pow(q, 2 * k + 2 * n) - 1.0); };
        J.variable_map = ArgumentMap::affine(2.0 * scale, -mu2 * scale);
        return J;
    }
    const auto& s = std::get<UqSu2XpA>(spec);
    if (s.N < 0) throw DomainError("UqSu2XpA: N must be nonnegative");
    if (!(s.p > 0.0)) throw DomainError("UqSu2XpA: p must be positive");
    if (!(s.q > 0.0 && s.q < 1.0)) throw DomainError("UqSu2XpA: q must lie in (0,1)");
    const int N = s.N;
    const double p = s.p, q = s.q, sp = std::sqrt(p);
    JacobiOperator J;
    J.a = [N, q](int n) {
        return std::pow(q, n + 1 - N) *
               std::sqrt((1.0 - std::pow(q, 2 * n + 2)) * (1.0 - std::pow(q, 2 * N - 2 * n))) /
               (1.0 - q * q);
    };
    J.b = [N, q, sp](int n) {
        return -(sp - 1.0 / sp) * (std::pow(q, 2 * n - N) - 1.0) / (q - 1.0 / q);
    };
    J.dimension = N + 1;
    J.variable_map = ArgumentMap::dualqk(p, N, q * q);
    J.variable_map.scale = sp * std::pow(q, N) / (1.0 / q - q);
    J.variable_map.shift = (1.0 / sp - sp) / (1.0 / q - q);
    return J;
}

double xpa_eigenvalue(int N, int f, double p, double q) {
    const double sp = std::sqrt(p);
    return (sp * std::pow(q, N - 2 * f) - std::pow(q, 2 * f - N) / sp + 1.0 / sp - sp) / (1.0 / q - q);
}

}  // namespace qaskey
