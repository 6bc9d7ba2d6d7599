#include <cmath>

#include "qaskey/polynomials.hpp"

namespace qaskey {

namespace {

template <class R> R factorial(int n) {
    R r(1);
    for (int k = 2; k <= n; ++k) r *= R(k);
    return r;
}

template <class R> complex_t<R> i_pow(int n) {
    using C = complex_t<R>;
    switch (n % 4) {
        case 0: return C(R(1), R(0));
        case 1: return C(R(0), R(1));
        case 2: return C(R(-1), R(0));
        default: return C(R(0), R(-1));
    }
}

template <class R> bool is_zero(const complex_t<R>& z) {
    using std::real;
    using std::imag;
    return real(z) == R(0) && imag(z) == R(0);
}

}  // namespace

template <class R> complex_t<R> q_power_neg(const R& q, const complex_t<R>& x) {
    using C = complex_t<R>;
    using std::exp;
    using std::imag;
    using std::log;
    using std::pow;
    using std::real;
    using std::round;
    const R xr = real(x);
    if (imag(x) == R(0) && xr == round(xr) && abs(xr) < R(1 << 20)) {
        const int m = xr.template convert_to<int>();
        return C(pow(q, -m));
    }
    return exp(-x * log(q));
}

// double specialisation: Ext-style convert_to is not available on double.
template <> Cx q_power_neg<double>(const double& q, const Cx& x) {
    if (x.imag() == 0.0 && x.real() == std::round(x.real()) && std::abs(x.real()) < double(1 << 20))
        return Cx(std::pow(q, -int(x.real())));
    return std::exp(-x * std::log(q));
}

template <class R>
complex_t<R> meixner_pollaczek_value(int n, const complex_t<R>& x, const R& lambda, const R& phi) {
    using C = complex_t<R>;
    using std::cos;
    using std::sin;
    const C i(R(0), R(1));
    const C pre = pochhammer(C(R(2) * lambda), n) / factorial<R>(n) *
                  C(cos(R(n) * phi), sin(R(n) * phi));
    const C z = C(R(1)) - C(cos(R(2) * phi), -sin(R(2) * phi));
    return pre * hyp<R>({C(R(-n)), C(lambda) + i * x}, {C(R(2) * lambda)}, z, n);
}

template <class R>
complex_t<R> continuous_hahn_value(int n, const complex_t<R>& x, const complex_t<R>& a,
                                   const complex_t<R>& b, const complex_t<R>& c,
                                   const complex_t<R>& d) {
    using C = complex_t<R>;
    const C i(R(0), R(1));
    const C pre = i_pow<R>(n) * pochhammer(a + c, n) * pochhammer(a + d, n) / factorial<R>(n);
    return pre * hyp<R>({C(R(-n)), C(R(n - 1)) + a + b + c + d, a + i * x}, {a + c, a + d}, C(R(1)),
                        n);
}

template <class R>
complex_t<R> hahn_value(int n, const complex_t<R>& x, const complex_t<R>& a, const complex_t<R>& b,
                        const complex_t<R>& N) {
    using C = complex_t<R>;
    return hyp<R>({C(R(-n)), C(R(n + 1)) + a + b, -x}, {a + C(R(1)), -N}, C(R(1)), n);
}

template <class R>
complex_t<R> jacobi_value(int n, const complex_t<R>& x, const complex_t<R>& a,
                          const complex_t<R>& b) {
    using C = complex_t<R>;
    const C pre = pochhammer(a + C(R(1)), n) / factorial<R>(n);
    return pre * hyp<R>({C(R(-n)), C(R(n + 1)) + a + b}, {a + C(R(1))}, (C(R(1)) - x) / R(2), n);
}

template <class R>
complex_t<R> laguerre_value(int n, const complex_t<R>& x, const complex_t<R>& a) {
    using C = complex_t<R>;
    const C pre = pochhammer(a + C(R(1)), n) / factorial<R>(n);
    return pre * hyp<R>({C(R(-n))}, {a + C(R(1))}, x, n);
}

template <class R>
complex_t<R> meixner_value(int n, const complex_t<R>& x, const complex_t<R>& beta,
                           const complex_t<R>& c) {
    using C = complex_t<R>;
    return hyp<R>({C(R(-n)), -x}, {beta}, C(R(1)) - C(R(1)) / c, n);
}

template <class R>
complex_t<R> krawtchouk_value(int n, const complex_t<R>& x, const complex_t<R>& p,
                              const complex_t<R>& N) {
    using C = complex_t<R>;
    return hyp<R>({C(R(-n)), -x}, {-N}, C(R(1)) / p, n);
}

template <class R> complex_t<R> charlier_value(int n, const complex_t<R>& x, const complex_t<R>& a) {
    using C = complex_t<R>;
    return hyp<R>({C(R(-n)), -x}, {}, C(R(1)) / a, n);
}

template <class R> complex_t<R> hermite_value(int n, const complex_t<R>& x) {
    using C = complex_t<R>;
    std::vector<C> terms;
    const C y = R(2) * x;
    for (int k = 0; 2 * k <= n; ++k) {
        R coef = factorial<R>(n) / (factorial<R>(k) * factorial<R>(n - 2 * k));
        if (k % 2) coef = -coef;
        C p(R(1));
        for (int e = 0; e < n - 2 * k; ++e) p *= y;
        terms.push_back(coef * p);
    }
    return compensated_sum(terms);
}

template <class R>
complex_t<R> racah_value(int n, const complex_t<R>& x, const complex_t<R>& alpha,
                         const complex_t<R>& beta, const complex_t<R>& gamma,
                         const complex_t<R>& delta) {
    using C = complex_t<R>;
    const C one(R(1));
    return hyp<R>({C(R(-n)), C(R(n + 1)) + alpha + beta, -x, x + gamma + delta + one},
                  {alpha + one, beta + delta + one, gamma + one}, one, n);
}

template <class R>
complex_t<R> askey_wilson_value(int n, const complex_t<R>& x, const complex_t<R>& a,
                                const complex_t<R>& b, const complex_t<R>& c,
                                const complex_t<R>& d, const R& q) {
    using C = complex_t<R>;
    using std::abs;
    using std::pow;
    if (n < 0) throw DomainError("askey_wilson: negative degree");
    if (n == 0) return C(R(1));
    const C one(R(1));
    const C e1 = a + b + c + d;
    const C e3 = a * b * c + a * b * d + a * c * d + b * c * d;
    const C e4 = a * b * c * d;
    const R tiny = R(64) * epsilon<R>();
    auto nonzero = [&](const C& v) {
        if (abs(v) <= tiny) throw PoleError("askey_wilson: degenerate recurrence coefficient");
        return v;
    };
    C prev(R(0));
    C cur = one;
    // p_1 written out; the generic coefficients have a removable 0/0 at n=0
    // when abcd = q or abcd = q^2.
    C next = R(2) * (one - e4) * x + e3 - e1;
    for (int m = 1; m < n; ++m) {
        prev = cur;
        cur = next;
        const R Q = pow(q, m);
        const C e4Q2 = e4 * Q * Q;
        const C A = (one - e4 * Q / q) / nonzero((one - e4Q2 / q) * (one - e4Q2));
        const C B = Q * ((e3 + q * e1) * (q + e4Q2) - Q * (R(1) + q) * (q * e3 + e4 * e1)) /
                    nonzero((C(q * q) - e4Q2) * (one - e4Q2));
        const C Cn = (R(1) - Q) * (one - a * b * Q / q) * (one - a * c * Q / q) *
                     (one - a * d * Q / q) * (one - b * c * Q / q) * (one - b * d * Q / q) *
                     (one - c * d * Q / q) / nonzero((one - e4Q2 / (q * q)) * (one - e4Q2 / q));
        next = ((R(2) * x - B) * cur - Cn * prev) / nonzero(A);
    }
    return next;
}

template <class R>
complex_t<R> askey_wilson_series(int n, const complex_t<R>& w, const complex_t<R>& a,
                                 const complex_t<R>& b, const complex_t<R>& c,
                                 const complex_t<R>& d, const R& q) {
    using C = complex_t<R>;
    using std::pow;
    // the 4phi3 form needs a nonzero leading parameter; p_n is symmetric
    C p[4] = {a, b, c, d};
    int lead = 0;
    while (lead < 4 && is_zero<R>(p[lead])) ++lead;
    if (lead == 4) throw DomainError("askey_wilson_series: all parameters zero");
    std::swap(p[0], p[lead]);
    const C& A = p[0];
    const C ab = A * p[1], ac = A * p[2], ad = A * p[3];
    const C abcd = ab * p[2] * p[3];
    C pre = q_pochhammer(ab, q, n) * q_pochhammer(ac, q, n) * q_pochhammer(ad, q, n);
    for (int k = 0; k < n; ++k) pre /= A;
    return pre * qphi<R>({C(pow(q, -n)), abcd * pow(q, n - 1), A * w, A / w}, {ab, ac, ad}, q,
                         C(q), n);
}

template <class R>
complex_t<R> al_salam_chihara_value(int n, const complex_t<R>& x, const complex_t<R>& a,
                                    const complex_t<R>& b, const R& q) {
    const complex_t<R> zero(R(0));
    return askey_wilson_value<R>(n, x, a, b, zero, zero, q);
}

template <class R>
complex_t<R> q_hahn_value(int n, const complex_t<R>& x, const complex_t<R>& a,
                          const complex_t<R>& b, int N, const R& q) {
    using C = complex_t<R>;
    using std::pow;
    return qphi<R>({C(pow(q, -n)), q_power_neg(q, x), a * b * pow(q, n + 1)},
                   {a * q, C(pow(q, -N))}, q, C(q), n);
}

template <class R>
complex_t<R> q_racah_value(int n, const complex_t<R>& x, const complex_t<R>& alpha,
                           const complex_t<R>& beta, const complex_t<R>& gamma,
                           const complex_t<R>& delta, const R& q) {
    using C = complex_t<R>;
    using std::pow;
    const C qmx = q_power_neg(q, x);
    return qphi<R>({C(pow(q, -n)), alpha * beta * pow(q, n + 1), qmx, gamma * delta * q / qmx},
                   {alpha * q, beta * delta * q, gamma * q}, q, C(q), n);
}

template <class R>
complex_t<R> dual_q_krawtchouk_value(int n, const complex_t<R>& x, const R& a, int N, const R& q) {
    using C = complex_t<R>;
    using std::pow;
    const C qmx = q_power_neg(q, x);
    return qphi<R>({C(pow(q, -n)), qmx, -pow(q, -N) / (qmx * a)}, {C(pow(q, -N)), C(R(0))}, q,
                   C(q), n);
}

template <class R>
complex_t<R> dual_q_krawtchouk_orthonormal(int n, const complex_t<R>& x, const R& a, int N,
                                           const R& q) {
    using std::pow;
    using std::sqrt;
    R pre = pow(a, R(n) / R(2)) * pow(q, R(n * (n - 1)) / R(4)) * sqrt(q_binomial(N, n, q));
    if (n % 2) pre = -pre;
    return pre * dual_q_krawtchouk_value<R>(n, x, a, N, q);
}

#define QASKEY_INSTANTIATE(R)                                                                    \
    template complex_t<R> q_power_neg<R>(const R&, const complex_t<R>&);                        \
    template complex_t<R> meixner_pollaczek_value<R>(int, const complex_t<R>&, const R&,        \
                                                     const R&);                                 \
    template complex_t<R> continuous_hahn_value<R>(int, const complex_t<R>&,                    \
                                                   const complex_t<R>&, const complex_t<R>&,    \
                                                   const complex_t<R>&, const complex_t<R>&);   \
    template complex_t<R> hahn_value<R>(int, const complex_t<R>&, const complex_t<R>&,          \
                                        const complex_t<R>&, const complex_t<R>&);              \
    template complex_t<R> jacobi_value<R>(int, const complex_t<R>&, const complex_t<R>&,        \
                                          const complex_t<R>&);                                 \
    template complex_t<R> laguerre_value<R>(int, const complex_t<R>&, const complex_t<R>&);     \
    template complex_t<R> meixner_value<R>(int, const complex_t<R>&, const complex_t<R>&,       \
                                           const complex_t<R>&);                                \
    template complex_t<R> krawtchouk_value<R>(int, const complex_t<R>&, const complex_t<R>&,    \
                                              const complex_t<R>&);                             \
    template complex_t<R> charlier_value<R>(int, const complex_t<R>&, const complex_t<R>&);     \
    template complex_t<R> hermite_value<R>(int, const complex_t<R>&);                           \
    template complex_t<R> racah_value<R>(int, const complex_t<R>&, const complex_t<R>&,         \
                                         const complex_t<R>&, const complex_t<R>&,              \
                                         const complex_t<R>&);                                  \
    template complex_t<R> askey_wilson_value<R>(int, const complex_t<R>&, const complex_t<R>&,  \
                                                const complex_t<R>&, const complex_t<R>&,       \
                                                const complex_t<R>&, const R&);                 \
    template complex_t<R> askey_wilson_series<R>(int, const complex_t<R>&, const complex_t<R>&, \
                                                 const complex_t<R>&, const complex_t<R>&,      \
                                                 const complex_t<R>&, const R&);                \
    template complex_t<R> al_salam_chihara_value<R>(int, const complex_t<R>&,                   \
                                                    const complex_t<R>&, const complex_t<R>&,   \
                                                    const R&);                                  \
    template complex_t<R> q_hahn_value<R>(int, const complex_t<R>&, const complex_t<R>&,        \
                                          const complex_t<R>&, int, const R&);                  \
    template complex_t<R> q_racah_value<R>(int, const complex_t<R>&, const complex_t<R>&,       \
                                           const complex_t<R>&, const complex_t<R>&,            \
                                           const complex_t<R>&, const R&);                      \
    template complex_t<R> dual_q_krawtchouk_value<R>(int, const complex_t<R>&, const R&, int,   \
                                                     const R&);                                 \
    template complex_t<R> dual_q_krawtchouk_orthonormal<R>(int, const complex_t<R>&, const R&,  \
                                                           int, const R&);

QASKEY_INSTANTIATE(double)
QASKEY_INSTANTIATE(Ext)

#undef QASKEY_INSTANTIATE

}  // namespace qaskey
