#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "qaskey/errors.hpp"
#include "qaskey/scalar.hpp"

namespace qaskey {

// Principal branch of log Gamma (analytic off the negative real axis).
Cx log_gamma(Cx z);

// (a)_n; works for any field type (double, Cx, Ext, ExtCx).
template <class T> T pochhammer(const T& a, int n) {
    if (n < 0) throw DomainError("pochhammer: negative index");
    T r(1);
    for (int k = 0; k < n; ++k) r *= a + T(k);
    return r;
}

// (a;q)_n for finite n >= 0.
template <class T, class R> T q_pochhammer(const T& a, const R& q, int n) {
    if (n < 0) throw DomainError("q_pochhammer: negative index");
    T r(1);
    R qk(1);
    for (int k = 0; k < n; ++k) {
        r *= T(1) - a * qk;
        qk *= q;
    }
    return r;
}

// (a;q)_inf, truncated once |a| q^k / (1-q) < 1e-17.
Cx q_pochhammer_inf(Cx a, double q);

template <class R> R q_binomial(int n, int k, const R& q) {
    if (k < 0 || k > n) return R(0);
    return q_pochhammer(q, q, n) / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k));
}

inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

// Terminating (basic) hypergeometric series. Exactly one numerator
// parameter must equal -n (classical) or q^{-n} (basic), n = degree.
template <class R> struct SeriesSpec {
    std::vector<complex_t<R>> numerator;
    std::vector<complex_t<R>> denominator;
    complex_t<R> argument{1};
    std::optional<R> base;
    int degree = 0;
};

// Terms t_0..t_m of the series, m <= degree; the list stops early when a
// numerator factor vanishes exactly.
template <class R> std::vector<complex_t<R>> hyp_terms(const SeriesSpec<R>& spec);
template <class R> std::vector<complex_t<R>> basic_phi_terms(const SeriesSpec<R>& spec);

template <class R> complex_t<R> hyp_terminating(const SeriesSpec<R>& spec);
template <class R> complex_t<R> basic_phi_terminating(const SeriesSpec<R>& spec);

// Neumaier-compensated sum of complex terms.
template <class C> C compensated_sum(const std::vector<C>& terms);

// Convenience wrappers used by the family evaluators.
template <class R>
complex_t<R> hyp(std::vector<complex_t<R>> num, std::vector<complex_t<R>> den,
                 const complex_t<R>& z, int degree) {
    SeriesSpec<R> s;
    s.numerator = std::move(num);
    s.denominator = std::move(den);
    s.argument = z;
    s.degree = degree;
    return hyp_terminating(s);
}

template <class R>
complex_t<R> qphi(std::vector<complex_t<R>> num, std::vector<complex_t<R>> den,
                  const R& q, const complex_t<R>& z, int degree) {
    SeriesSpec<R> s;
    s.numerator = std::move(num);
    s.denominator = std::move(den);
    s.argument = z;
    s.base = q;
    s.degree = degree;
    return basic_phi_terminating(s);
}

extern template std::vector<Cx> hyp_terms<double>(const SeriesSpec<double>&);
extern template std::vector<ExtCx> hyp_terms<Ext>(const SeriesSpec<Ext>&);
extern template std::vector<Cx> basic_phi_terms<double>(const SeriesSpec<double>&);
extern template std::vector<ExtCx> basic_phi_terms<Ext>(const SeriesSpec<Ext>&);
extern template Cx hyp_terminating<double>(const SeriesSpec<double>&);
extern template ExtCx hyp_terminating<Ext>(const SeriesSpec<Ext>&);
extern template Cx basic_phi_terminating<double>(const SeriesSpec<double>&);
extern template ExtCx basic_phi_terminating<Ext>(const SeriesSpec<Ext>&);
extern template Cx compensated_sum<Cx>(const std::vector<Cx>&);
extern template ExtCx compensated_sum<ExtCx>(const std::vector<ExtCx>&);

}  // namespace qaskey
