#include "qaskey/coupling.hpp"

#include <cmath>

#include "qaskey/numerics.hpp"
#include "qaskey/polynomials.hpp"

namespace qaskey {

namespace {

// Accumulates log-magnitudes of positive factors; nonpositive factors are
// degenerate labels and rejected.
template <class R> struct LogProduct {
    R acc{0};

    void mul(const R& f) {
        using std::log;
        if (!(f > R(0))) throw DomainError("coupling: degenerate parameters (nonpositive factor)");
        acc += log(f);
    }
    void div(const R& f) {
        using std::log;
        if (!(f > R(0))) throw DomainError("coupling: degenerate parameters (nonpositive factor)");
        acc -= log(f);
    }
    void poch(const R& a, int n, bool up = true) {
        for (int i = 0; i < n; ++i) up ? mul(a + R(i)) : div(a + R(i));
    }
    void fact(int n, bool up = true) { poch(R(1), n, up); }
    // (a; base)_n
    void qpoch(const R& a, const R& base, int n, bool up = true) {
        R t = a;
        for (int i = 0; i < n; ++i) {
            up ? mul(R(1) - t) : div(R(1) - t);
            t *= base;
        }
    }
    R sqrt_value() const {
        using std::exp;
        return exp(acc / R(2));
    }
};

template <class R> R qpow(double q, double e) {
    using std::pow;
    return pow(R(q), R(e));
}

double require_q(const std::optional<double>& q) {
    if (!q) throw DomainError("coupling: q required");
    if (!(*q > 0.0 && *q < 1.0)) throw DomainError("coupling: q must lie in (0,1)");
    return *q;
}

void check_ks(std::initializer_list<double> ks) {
    for (double k : ks)
        if (!(k > 0.0)) throw DomainError("coupling: k must be positive");
}

void check_racah(const RacahLabel& L) {
    check_ks({L.k1, L.k2, L.k3});
    if (L.j12 < 0 || L.j23 < 0 || L.j < 0 || L.jprime < 0)
        throw DomainError("racah: labels must be nonnegative");
    if (L.j12 + L.j != L.j23 + L.jprime) throw DomainError("racah: j12 + j must equal j23 + jprime");
}

// (a; base)_n extended to negative n by (a; base)_{-m} = 1 / prod_{i=1}^m (1 - a base^{-i}).
template <class R> R q_pochhammer_z(const R& a, const R& base, int n) {
    using std::pow;
    if (n >= 0) return q_pochhammer(a, base, n);
    R r(1);
    for (int i = 1; i <= -n; ++i) r *= R(1) - a * pow(base, -i);
    return R(1) / r;
}

template <class R> R real_part(const complex_t<R>& z) {
    using std::real;
    return real(z);
}

}  // namespace

template <class R> R cgc_su11(const CgcLabel& L) {
    check_ks({L.k1, L.k2});
    const int n = L.n, j = L.j, n1 = L.n1, n2 = L.n2;
    if (n < 0 || j < 0 || n1 < 0 || n2 < 0) throw DomainError("cgc: labels must be nonnegative");
    if (n1 + n2 != n + j) return R(0);
    const R k1(L.k1), k2(L.k2);
    LogProduct<R> s;
    s.poch(R(2) * k1, n1);
    s.poch(R(2) * k2, n2);
    s.poch(R(2) * k1, j);
    s.fact(n, false);
    s.fact(n1, false);
    s.fact(n2, false);
    s.fact(j, false);
    s.poch(R(2) * k1 + R(2) * k2 + R(2 * j), n, false);
    s.poch(R(2) * k2, j, false);
    s.poch(R(2) * k1 + R(2) * k2 + R(j - 1), j, false);
    R f(1);
    for (int i = 2; i <= n + j; ++i) f *= R(i);
    const complex_t<R> h = hahn_value<R>(j, complex_t<R>(R(n1)), complex_t<R>(R(2) * k1 - R(1)),
                                         complex_t<R>(R(2) * k2 - R(1)), complex_t<R>(R(n + j)));
    return s.sqrt_value() * f * real_part<R>(h);
}

template <class R> R cgc_uq_su11(const CgcLabel& L) {
    using std::pow;
    check_ks({L.k1, L.k2});
    const double qd = require_q(L.q);
    const int n = L.n, j = L.j, n1 = L.n1, n2 = L.n2;
    if (n < 0 || j < 0 || n1 < 0 || n2 < 0) throw DomainError("cgc: labels must be nonnegative");
    if (n1 + n2 != n + j) return R(0);
    const R q(qd), Q = q * q;
    const double k1 = L.k1, k2 = L.k2;
    LogProduct<R> s;
    s.qpoch(qpow<R>(qd, 4 * k1), Q, n1);
    s.qpoch(qpow<R>(qd, 4 * k2), Q, n2);
    s.qpoch(qpow<R>(qd, 4 * k1), Q, j);
    s.qpoch(Q, Q, n, false);
    s.qpoch(Q, Q, n1, false);
    s.qpoch(Q, Q, n2, false);
    s.qpoch(Q, Q, j, false);
    s.qpoch(qpow<R>(qd, 4 * k1 + 4 * k2 + 4 * j), Q, n, false);
    s.qpoch(qpow<R>(qd, 4 * k2), Q, j, false);
    s.qpoch(qpow<R>(qd, 4 * k1 + 4 * k2 + 2 * j - 2), Q, j, false);
    const R pre = qpow<R>(qd, 2 * k1 * (n - n1)) * q_pochhammer(Q, Q, n + j);
    const complex_t<R> h =
        q_hahn_value<R>(j, complex_t<R>(R(n1)), complex_t<R>(qpow<R>(qd, 4 * k1 - 2)),
                        complex_t<R>(qpow<R>(qd, 4 * k2 - 2)), n + j, Q);
    return pre * s.sqrt_value() * real_part<R>(h);
}

template <class R> R racah_su11(const RacahLabel& L) {
    using C = complex_t<R>;
    check_racah(L);
    const int j12 = L.j12, j23 = L.j23, j = L.j, jp = L.jprime;
    const R k1(L.k1), k2(L.k2), k3(L.k3);
    const R k12 = k1 + k2 + R(j12), k23 = k2 + k3 + R(j23);
    const R two(2);
    LogProduct<R> s;
    s.fact(jp);
    s.poch(two * k1, jp);
    s.poch(two * k23, jp);
    s.poch(two * k1 + two * k23 + R(jp - 1), jp);
    s.fact(j23);
    s.poch(two * k2, j23);
    s.poch(two * k3, j23);
    s.poch(two * k2 + two * k3 + R(j23 - 1), j23);
    s.fact(j, false);
    s.poch(two * k12, j, false);
    s.poch(two * k3, j, false);
    s.poch(two * k12 + two * k3 + R(j - 1), j, false);
    s.fact(j12, false);
    s.poch(two * k1, j12, false);
    s.poch(two * k2, j12, false);
    s.poch(two * k1 + two * k2 + R(j12 - 1), j12, false);

    const R pre = R(binomial(j + j12, j23)) * pochhammer(two * k2, j12) * pochhammer(two * k3, j) *
                  pochhammer(two * (k1 + k2 + k3) + R(j + j12 - 1), j23) /
                  (pochhammer(two * k3, j23) * pochhammer(two * (k2 + k3) + R(j23 - 1), j23) *
                   pochhammer(two * (k2 + k3) + R(2 * j23), jp));
    const C F = hyp<R>({C(two * (k1 + k2) + R(j12 - 1)), C(two * (k2 + k3) + R(j23 - 1)), C(R(-j12)),
                        C(R(-j23))},
                       {C(two * k2), C(two * (k1 + k2 + k3) + R(j + j12 - 1)), C(R(-j - j12))},
                       C(R(1)), std::min(j12, j23));
    return pre * s.sqrt_value() * real_part<R>(F);
}

template <class R> R racah_uq_su11(const RacahLabel& L) {
    using C = complex_t<R>;
    using std::pow;
    check_racah(L);
    const double qd = require_q(L.q);
    const int j12 = L.j12, j23 = L.j23, j = L.j, jp = L.jprime;
    const double k1 = L.k1, k2 = L.k2, k3 = L.k3;
    const double k12 = k1 + k2 + j12, k23 = k2 + k3 + j23;
    const R q(qd), Q = q * q;
    auto qp = [&](double e) { return qpow<R>(qd, e); };
    LogProduct<R> s;
    auto four = [&](double a, double b, int n, bool up) {
        s.qpoch(Q, Q, n, up);
        s.qpoch(qp(4 * a), Q, n, up);
        s.qpoch(qp(4 * b), Q, n, up);
        s.qpoch(qp(4 * a + 4 * b + 2 * n - 2), Q, n, up);
    };
    four(k1, k23, jp, true);
    four(k2, k3, j23, true);
    four(k12, k3, j, false);
    four(k1, k2, j12, false);

    const R pre = qp(2 * k2 * (j - j23)) * q_binomial(j + j12, j23, Q) *
                  q_pochhammer(qp(4 * k3), Q, j) * q_pochhammer(qp(4 * k2), Q, j12) *
                  q_pochhammer(qp(4 * (k1 + k2 + k3) + 2 * j + 2 * j12 - 2), Q, j23) /
                  (q_pochhammer(qp(4 * k3), Q, j23) *
                   q_pochhammer(qp(4 * (k2 + k3) + 2 * j23 - 2), Q, j23) *
                   q_pochhammer(qp(4 * (k2 + k3) + 4 * j23), Q, jp));
    const C F = qphi<R>({C(qp(4 * (k1 + k2) + 2 * j12 - 2)), C(qp(4 * (k2 + k3) + 2 * j23 - 2)),
                         C(pow(Q, -j12)), C(pow(Q, -j23))},
                        {C(qp(4 * k2)), C(qp(4 * (k1 + k2 + k3) + 2 * j + 2 * j12 - 2)),
                         C(pow(Q, -j - j12))},
                        Q, C(Q), std::min(j12, j23));
    return pre * s.sqrt_value() * real_part<R>(F);
}

template <class R> R c_norm(double k1, double k2, int j, double qd) {
    check_ks({k1, k2});
    if (j < 0) throw DomainError("c_norm: j must be nonnegative");
    require_q(qd);
    const R q(qd), Q = q * q;
    LogProduct<R> s;
    s.qpoch(Q, Q, j, false);
    s.qpoch(qpow<R>(qd, 4 * k1), Q, j, false);
    s.qpoch(qpow<R>(qd, 4 * k2), Q, j, false);
    s.qpoch(qpow<R>(qd, 4 * k1 + 4 * k2 + 2 * j - 2), Q, j, false);
    return s.sqrt_value();
}

template <class R> R cgc_uq_su2_n0(int N1, int N2, int j, int n1, int n2, double qd) {
    require_q(qd);
    if (N1 < 0 || N2 < 0 || j < 0 || n1 < 0 || n2 < 0)
        throw DomainError("cgc_uq_su2_n0: labels must be nonnegative");
    if (n1 + n2 != j || j > std::min(N1, N2)) throw DomainError("cgc_uq_su2_n0: selection rule violated");
    const R q(qd), Q = q * q, Qi = R(1) / Q;
    LogProduct<R> s;
    s.qpoch(qpow<R>(qd, 2 * n1 + 2), Q, n2);
    s.qpoch(qpow<R>(qd, 2 * N1 - 2 * n1), Qi, n2);
    s.qpoch(Q, Q, n2, false);
    s.qpoch(qpow<R>(qd, 2 * N2), Qi, n2, false);
    s.qpoch(qpow<R>(qd, 2 * N2), Qi, j);
    s.qpoch(qpow<R>(qd, 2 * N1 + 2 * N2 - 2 * j + 2), Qi, j, false);
    R v = qpow<R>(qd, n2 * (N2 - j + 1)) * s.sqrt_value();
    return n2 % 2 ? -v : v;
}

template <class R>
R eigenbasis_overlap_uq_su2(int N1, int N2, int j, int f1, int f2, double pd, double qd) {
    using C = complex_t<R>;
    using std::pow;
    using std::sqrt;
    require_q(qd);
    if (!(pd > 0.0)) throw DomainError("overlap: p must be positive");
    if (N1 < 0 || N2 < 0 || j < 0 || j > std::min(N1, N2)) throw DomainError("overlap: bad j");
    if (f1 < 0 || f1 > N1 || f2 < 0 || f2 > N2) throw DomainError("overlap: f out of range");
    const int N = N1 + N2 - 2 * j;
    if (f1 + f2 - j < 0 || f1 + f2 - j > N) return R(0);
    const R q(qd), Q = q * q, Qi = R(1) / Q, p(pd);
    auto qp = [&](int e) { return pow(q, e); };
    R pre = sqrt(q_binomial(N2, j, Q)) * pow(p, R(j) / R(2)) * qp(j * (2 * N1 + N2)) *
            pow(q, R(-3 * j * (j - 1)) / R(2)) /
            sqrt(q_pochhammer(qp(2 * N1), Qi, j) * q_pochhammer(qp(2 * N1 + 2 * N2 - 2 * j + 2), Qi, j));
    pre *= q_pochhammer(R(-qp(2 * f1 + 2 * f2 - 2 * N1 - 2 * N2) / p), Q, j) *
           q_pochhammer(qp(-2 * f1 - 2 * f2), Q, j);
    const C F = qphi<R>({C(pow(Q, -j)), C(qp(2 * j - 2 - 2 * N1 - 2 * N2)), C(qp(-2 * f2)),
                         C(-qp(2 * f2 - 2 * N2) / p)},
                        {C(qp(-2 * N2)), C(qp(-2 * f1 - 2 * f2)),
                         C(-qp(2 * f1 + 2 * f2 - 2 * N1 - 2 * N2) / p)},
                        Q, C(Q), std::min(j, f2));
    // sign (-1)^j: matches the inner product of the dual q-Krawtchouk
    // eigenvectors with the n=0 column
    const R v = pre * real_part<R>(F);
    return j % 2 ? -v : v;
}

template <class R> std::vector<R> linearisation_coeffs(int l1, int l2, double pd, double rd, double qd) {
    using C = complex_t<R>;
    using std::pow;
    if (!(pd > 0.0 && rd > 0.0)) throw DomainError("linearisation: p, r must be positive");
    if (!(qd > 0.0 && qd < 1.0)) throw DomainError("linearisation: q must lie in (0,1)");
    if (l1 < 0 || l2 < 0) throw DomainError("linearisation: degrees must be nonnegative");
    const R q(qd), Q = q * q, Qi = R(1) / Q;
    auto qp = [&](int e) { return pow(q, e); };
    std::vector<R> out;
    for (int j = 0; j <= 2 * std::min(l1, l2); ++j) {
        R pre = pow(q, -j * (j - 1)) * qp(j + 4 * j * l1) *
                q_pochhammer_z(qp(2 * l1 + 2), Q, l1 - j) * q_pochhammer(qp(2 * l2 + 2), Q, l2) *
                q_binomial(2 * l2, j, Q);
        pre *= q_pochhammer(qp(2 * l1 + 2 * l2), Qi, j) /
               q_pochhammer(qp(2 * l1 + 2 * l2 + 2), Q, l1 + l2 - j) *
               (R(1) - qp(4 * l1 + 4 * l2 - 4 * j + 2)) / (R(1) - qp(4 * l1 + 4 * l2 - 2 * j + 2));
        auto part = [&](const R& x) {
            const R lead = pow(x, R(j) / R(2)) * q_pochhammer(R(-qp(-2 * l1 - 2 * l2) / x), Q, j);
            const C F = qphi<R>({C(pow(Q, -j)), C(qp(-2 * l2)), C(qp(2 * j - 2 - 4 * l1 - 4 * l2)),
                                 C(-qp(-2 * l2) / x)},
                                {C(qp(-4 * l2)), C(qp(-2 * l1 - 2 * l2)), C(-qp(-2 * l1 - 2 * l2) / x)},
                                Q, C(Q), std::min(j, l2));
            return lead * real_part<R>(F);
        };
        out.push_back(pre * part(R(pd)) * part(R(rd)));
    }
    return out;
}

AwParams linearisation_aw_params(double p, double r, double q) {
    return {q * std::sqrt(p / r), q * std::sqrt(r / p), -q / std::sqrt(p * r), -q * std::sqrt(p * r)};
}

#define QASKEY_INSTANTIATE(R)                                                                  \
    template R cgc_su11<R>(const CgcLabel&);                                                  \
    template R cgc_uq_su11<R>(const CgcLabel&);                                               \
    template R racah_su11<R>(const RacahLabel&);                                              \
    template R racah_uq_su11<R>(const RacahLabel&);                                           \
    template R c_norm<R>(double, double, int, double);                                        \
    template R cgc_uq_su2_n0<R>(int, int, int, int, int, double);                             \
    template R eigenbasis_overlap_uq_su2<R>(int, int, int, int, int, double, double);         \
    template std::vector<R> linearisation_coeffs<R>(int, int, double, double, double);

QASKEY_INSTANTIATE(double)
QASKEY_INSTANTIATE(Ext)

#undef QASKEY_INSTANTIATE

double cgc_su11(const CgcLabel& l) { return cgc_su11<double>(l); }
double cgc_uq_su11(const CgcLabel& l) { return cgc_uq_su11<double>(l); }
double racah_su11(const RacahLabel& l) { return racah_su11<double>(l); }
double racah_uq_su11(const RacahLabel& l) { return racah_uq_su11<double>(l); }
double c_norm(double k1, double k2, int j, double q) { return c_norm<double>(k1, k2, j, q); }
double cgc_uq_su2_n0(int N1, int N2, int j, int n1, int n2, double q) {
    return cgc_uq_su2_n0<double>(N1, N2, j, n1, n2, q);
}
double eigenbasis_overlap_uq_su2(int N1, int N2, int j, int f1, int f2, double p, double q) {
    return eigenbasis_overlap_uq_su2<double>(N1, N2, j, f1, f2, p, q);
}
std::vector<double> linearisation_coeffs(int l1, int l2, double p, double r, double q) {
    return linearisation_coeffs<double>(l1, l2, p, r, q);
}

}  // namespace qaskey
