#include "qaskey/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace qaskey {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

Cx lanczos_log_gamma(Cx z) {
    // valid for Re z >= 0.5
    const Cx zz = z - 1.0;
    Cx x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (zz + double(i));
    const Cx t = zz + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (zz + 0.5) * std::log(t) - t + std::log(x);
}

template <class C> void neumaier_add(C& sum, C& comp, const C& t) {
    using std::abs;
    using std::real;
    using std::imag;
    auto one = [](auto s, auto& c, auto v) {
        auto u = s + v;
        if (abs(s) >= abs(v))
            c += (s - u) + v;
        else
            c += (v - u) + s;
        return u;
    };
    auto sr = real(sum), si = imag(sum);
    auto cr = real(comp), ci = imag(comp);
    sr = one(sr, cr, real(t));
    si = one(si, ci, imag(t));
    sum = C(sr, si);
    comp = C(cr, ci);
}

template <class R> void check_terminates(const SeriesSpec<R>& s, bool basic) {
    using std::abs;
    using std::pow;
    if (s.degree < 0) throw DomainError("series degree must be nonnegative");
    if (s.degree == 0) return;
    const R tol(1e-9);
    const R n(s.degree);
    for (const auto& a : s.numerator) {
        if (!basic) {
            if (abs(a + complex_t<R>(n)) <= tol * (R(1) + n)) return;
        } else {
            const R qn = pow(*s.base, s.degree);
            if (abs(a * qn - complex_t<R>(R(1))) <= tol) return;
        }
    }
    throw DomainError("series does not terminate at the requested degree");
}

}  // namespace

Cx log_gamma(Cx z) {
    if (z.imag() == 0.0) {
        const double x = z.real();
        if (x <= 0.0 && x == std::floor(x)) throw PoleError("log_gamma: pole at nonpositive integer");
        if (x > 0.0) return {std::lgamma(x), 0.0};
    }
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    // Shift upwards; the sum of principal logs continues the branch analytically.
    const int m = int(std::ceil(0.5 - z.real()));
    Cx acc = 0.0;
    for (int k = 0; k < m; ++k) acc += std::log(z + double(k));
    return lanczos_log_gamma(z + double(m)) - acc;
}

Cx q_pochhammer_inf(Cx a, double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q_pochhammer_inf: q must lie in (0,1)");
    Cx r = 1.0;
    double qk = 1.0;
    for (int k = 0; k < 100000; ++k) {
        if (std::abs(a) * qk / (1.0 - q) < 1e-17) break;
        r *= 1.0 - a * qk;
        qk *= q;
    }
    return r;
}

template <class C> C compensated_sum(const std::vector<C>& terms) {
    C sum(0), comp(0);
    for (const auto& t : terms) neumaier_add(sum, comp, t);
    return sum + comp;
}

template <class R> std::vector<complex_t<R>> hyp_terms(const SeriesSpec<R>& s) {
    using C = complex_t<R>;
    using std::abs;
    using std::max;
    if (s.base) throw DomainError("hyp_terminating: base given, use basic_phi_terminating");
    check_terminates(s, false);
    const R tiny = R(64) * epsilon<R>();
    std::vector<C> out;
    out.reserve(s.degree + 1);
    C t(R(1));
    out.push_back(t);
    for (int k = 0; k < s.degree; ++k) {
        C ratio(R(1));
        bool stop = false;
        for (const auto& a : s.numerator) {
            const C f = a + C(R(k));
            if (abs(f) <= tiny * max(R(1), max(abs(a), R(k)))) {
                stop = true;
                break;
            }
            ratio *= f;
        }
        if (stop) break;
        for (const auto& b : s.denominator) {
            const C f = b + C(R(k));
            if (abs(f) <= tiny * max(R(1), max(abs(b), R(k))))
                throw PoleError("hyp_terminating: denominator Pochhammer vanishes");
            ratio /= f;
        }
        t *= ratio * s.argument / R(k + 1);
        out.push_back(t);
    }
    return out;
}

template <class R> std::vector<complex_t<R>> basic_phi_terms(const SeriesSpec<R>& s) {
    using C = complex_t<R>;
    using std::abs;
    using std::max;
    if (!s.base) throw DomainError("basic_phi_terminating: base missing");
    const R q = *s.base;
    if (!(q > R(0) && q < R(1))) throw DomainError("basic_phi_terminating: q must lie in (0,1)");
    if (s.numerator.size() != s.denominator.size() + 1)
        throw DomainError("basic_phi_terminating: expects an r+1 phi r series");
    check_terminates(s, true);
    std::vector<C> out;
    out.reserve(s.degree + 1);
    C t(R(1));
    out.push_back(t);
    R qk(1);
    for (int k = 0; k < s.degree; ++k) {
        const R tiny = R(64 * (k + 1)) * epsilon<R>();
        C ratio(R(1));
        bool stop = false;
        for (const auto& a : s.numerator) {
            const C aq = a * qk;
            const C f = C(R(1)) - aq;
            if (abs(f) <= tiny * max(R(1), abs(aq))) {
                stop = true;
                break;
            }
            ratio *= f;
        }
        if (stop) break;
        for (const auto& b : s.denominator) {
            const C bq = b * qk;
            const C f = C(R(1)) - bq;
            if (abs(f) <= tiny * max(R(1), abs(bq)))
                throw PoleError("basic_phi_terminating: denominator q-Pochhammer vanishes");
            ratio /= f;
        }
        qk *= q;
        t *= ratio * s.argument / (R(1) - qk);
        out.push_back(t);
    }
    return out;
}

template <class R> complex_t<R> hyp_terminating(const SeriesSpec<R>& s) {
    return compensated_sum(hyp_terms(s));
}

template <class R> complex_t<R> basic_phi_terminating(const SeriesSpec<R>& s) {
    return compensated_sum(basic_phi_terms(s));
}

template std::vector<Cx> hyp_terms<double>(const SeriesSpec<double>&);
template std::vector<ExtCx> hyp_terms<Ext>(const SeriesSpec<Ext>&);
template std::vector<Cx> basic_phi_terms<double>(const SeriesSpec<double>&);
template std::vector<ExtCx> basic_phi_terms<Ext>(const SeriesSpec<Ext>&);
template Cx hyp_terminating<double>(const SeriesSpec<double>&);
template ExtCx hyp_terminating<Ext>(const SeriesSpec<Ext>&);
template Cx basic_phi_terminating<double>(const SeriesSpec<double>&);
template ExtCx basic_phi_terminating<Ext>(const SeriesSpec<Ext>&);
template Cx compensated_sum<Cx>(const std::vector<Cx>&);
template ExtCx compensated_sum<ExtCx>(const std::vector<ExtCx>&);

}  // namespace qaskey
