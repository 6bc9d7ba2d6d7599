#include "qaskey/polynomials.hpp"

#include <cmath>
#include <numbers>

namespace qaskey {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const char* msg) {
    if (!ok) throw DomainError(msg);
}

void require_q(double q) { require(q > 0.0 && q < 1.0, "q must lie in (0,1)"); }

bool close(Cx a, Cx b) { return std::abs(a - b) <= 1e-14 * (1.0 + std::abs(a) + std::abs(b)); }

bool is_real(Cx z) { return z.imag() == 0.0; }

// Parameter multiset closed under complex conjugation.
bool conj_closed(std::vector<Cx> v) {
    std::vector<bool> used(v.size(), false);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (used[i]) continue;
        if (std::abs(v[i].imag()) <= 1e-14 * (1.0 + std::abs(v[i]))) {
            used[i] = true;
            continue;
        }
        bool found = false;
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (!used[j] && close(v[j], std::conj(v[i]))) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// N with value == -N for a nonnegative integer N, if any.
std::optional<int> neg_integer(double v) {
    const double r = std::round(-v);
    if (r >= 0.0 && std::abs(v + r) <= 1e-9 * (1.0 + r)) return int(r);
    return std::nullopt;
}

// N with value == q^{-N}, if any.
std::optional<int> q_neg_power(double v, double q) {
    if (!(v > 0.0)) return std::nullopt;
    const double r = std::round(-std::log(v) / std::log(q));
    if (r >= 0.0 && std::abs(v - std::pow(q, -r)) <= 1e-9 * std::pow(q, -r)) return int(r);
    return std::nullopt;
}

Cx realify(Cx v, bool guaranteed_real) {
    if (!guaranteed_real) return v;
    if (std::abs(v.imag()) > 1e-10 * (1.0 + std::abs(v.real())))
        throw RealificationError("imaginary part exceeds the realification bound");
    return {v.real(), 0.0};
}

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void check_degree(int n, std::optional<int> N = std::nullopt) {
    require(n >= 0, "degree must be nonnegative");
    if (N) require(n <= *N, "degree exceeds N");
}

double aw_h(int n, Cx a, Cx b, Cx c, Cx d, double q) {
    if (n == 0) return 1.0;
    const Cx abcd = a * b * c * d;
    Cx h = (1.0 - std::pow(q, n - 1) * abcd) / (1.0 - std::pow(q, 2 * n - 1) * abcd);
    h *= q_pochhammer(Cx(q), q, n);
    for (Cx e : {a * b, a * c, a * d, b * c, b * d, c * d}) h *= q_pochhammer(e, q, n);
    h /= q_pochhammer(abcd, q, n);
    require(h.real() > 0.0 && std::abs(h.imag()) <= 1e-10 * h.real(),
            "askey_wilson: norm not positive for these parameters");
    return h.real();
}

void check_aw_admissible(const std::vector<Cx>& p) {
    require(conj_closed(p), "askey_wilson: parameters must be real or conjugate pairs");
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            const Cx e = p[i] * p[j];
            require(!(std::abs(e.imag()) <= 1e-12 && e.real() >= 1.0),
                    "askey_wilson: pairwise parameter products must be < 1");
        }
}

// Density of the normalised Askey-Wilson measure in theta.
double aw_density(Cx a, Cx b, Cx c, Cx d, double q, double theta) {
    check_aw_admissible({a, b, c, d});
    const Cx z = std::polar(1.0, theta);
    Cx num = q_pochhammer_inf(z * z, q) * q_pochhammer_inf(1.0 / (z * z), q);
    Cx den = 1.0;
    for (Cx e : {a, b, c, d}) den *= q_pochhammer_inf(e * z, q) * q_pochhammer_inf(e / z, q);
    Cx h0 = q_pochhammer_inf(a * b * c * d, q);
    Cx h0den = q_pochhammer_inf(Cx(q), q);
    for (Cx e : {a * b, a * c, a * d, b * c, b * d, c * d}) h0den *= q_pochhammer_inf(e, q);
    h0 /= h0den;
    const Cx v = num / den / (2.0 * kPi * h0);
    return realify(v, true).real();
}

std::vector<MassPoint> aw_masses(Cx a, Cx b, Cx c, Cx d, double q) {
    check_aw_admissible({a, b, c, d});
    std::vector<MassPoint> out;
    const Cx all[4] = {a, b, c, d};
    Cx h0 = q_pochhammer_inf(a * b * c * d, q);
    Cx h0den = q_pochhammer_inf(Cx(q), q);
    for (Cx e : {a * b, a * c, a * d, b * c, b * d, c * d}) h0den *= q_pochhammer_inf(e, q);
    h0 /= h0den;
    for (int i = 0; i < 4; ++i) {
        const Cx e = all[i];
        if (std::abs(e) <= 1.0) continue;
        require(is_real(e), "askey_wilson: parameter of modulus > 1 must be real");
        const double E = e.real();
        Cx others[3];
        for (int j = 0, m = 0; j < 4; ++j)
            if (j != i) others[m++] = all[j];
        // k-independent factor
        Cx base = q_pochhammer_inf(Cx(1.0 / (E * E)), q);
        Cx bden = q_pochhammer_inf(Cx(q), q);
        for (Cx u : others) bden *= q_pochhammer_inf(E * u, q) * q_pochhammer_inf(u / E, q);
        base /= bden;
        for (int k = 0; std::abs(E) * std::pow(q, k) > 1.0; ++k) {
            const double Eq = E * std::pow(q, k);
            Cx w = base * (1.0 - E * E * std::pow(q, 2 * k)) / (1.0 - E * E);
            w *= q_pochhammer(Cx(E * E), q, k) / q_pochhammer(Cx(q), q, k) * std::pow(q / E, k);
            // (eu;q)_k / ((eq/u;q)_k u^k), written so that u = 0 is regular
            for (Cx u : others)
                for (int m = 0; m < k; ++m)
                    w *= (1.0 - E * u * std::pow(q, m)) / (u - E * std::pow(q, m + 1));
            w /= h0;
            out.push_back({0.5 * (Eq + 1.0 / Eq), realify(w, true).real()});
        }
    }
    return out;
}

}  // namespace

MeixnerPollaczek::MeixnerPollaczek(double lambda_, double phi_) : lambda(lambda_), phi(phi_) {
    require(lambda > 0.0, "meixner_pollaczek: lambda must be positive");
    require(phi > 0.0 && phi < kPi, "meixner_pollaczek: phi must lie in (0,pi)");
}

ContinuousHahn::ContinuousHahn(Cx a_, Cx b_, Cx c_, Cx d_) : a(a_), b(b_), c(c_), d(d_) {
    for (Cx v : {a, b, c, d})
        require(v.real() > 0.0, "continuous_hahn: parameters need positive real part");
}

Hahn::Hahn(double a_, double b_, int N_) : a(a_), b(b_), N(N_) {
    require(a > -1.0 && b > -1.0, "hahn: a, b must exceed -1");
    require(N >= 0, "hahn: N must be nonnegative");
}

Jacobi::Jacobi(double a_, double b_) : a(a_), b(b_) {
    require(a > -1.0 && b > -1.0, "jacobi: a, b must exceed -1");
}

Laguerre::Laguerre(double a_) : a(a_) { require(a > -1.0, "laguerre: a must exceed -1"); }

Meixner::Meixner(double beta_, double c_) : beta(beta_), c(c_) {
    require(beta > 0.0, "meixner: beta must be positive");
    require(c > 0.0 && c < 1.0, "meixner: c must lie in (0,1)");
}

Krawtchouk::Krawtchouk(double p_, int N_) : p(p_), N(N_) {
    require(p > 0.0 && p < 1.0, "krawtchouk: p must lie in (0,1)");
    require(N >= 0, "krawtchouk: N must be nonnegative");
}

Charlier::Charlier(double a_) : a(a_) { require(a > 0.0, "charlier: a must be positive"); }

Racah::Racah(double alpha_, double beta_, double gamma_, double delta_)
    : alpha(alpha_), beta(beta_), gamma(gamma_), delta(delta_) {
    for (double v : {alpha + 1.0, beta + delta + 1.0, gamma + 1.0})
        if (auto n = neg_integer(v)) {
            N = *n;
            return;
        }
    throw DomainError("racah: one of alpha+1, beta+delta+1, gamma+1 must be -N");
}

AskeyWilson::AskeyWilson(Cx a_, Cx b_, Cx c_, Cx d_, double q_) : a(a_), b(b_), c(c_), d(d_), q(q_) {
    require_q(q);
}

AlSalamChihara::AlSalamChihara(Cx a_, Cx b_, double q_) : a(a_), b(b_), q(q_) { require_q(q); }

QHahn::QHahn(double a_, double b_, int N_, double q_) : a(a_), b(b_), N(N_), q(q_) {
    require_q(q);
    require(N >= 0, "q_hahn: N must be nonnegative");
}

QRacah::QRacah(double alpha_, double beta_, double gamma_, double delta_, double q_)
    : alpha(alpha_), beta(beta_), gamma(gamma_), delta(delta_), q(q_) {
    require_q(q);
    for (double v : {alpha * q, beta * delta * q, gamma * q})
        if (auto n = q_neg_power(v, q)) {
            N = *n;
            return;
        }
    throw DomainError("q_racah: one of alpha*q, beta*delta*q, gamma*q must be q^{-N}");
}

DualQKrawtchouk::DualQKrawtchouk(double a_, int N_, double q_) : a(a_), N(N_), q(q_) {
    require(a > 0.0, "dual_q_krawtchouk: a must be positive");
    require(N >= 0, "dual_q_krawtchouk: N must be nonnegative");
    require_q(q);
}

std::string family_name(const Family& f) {
    return std::visit(overloaded{
                          [](const MeixnerPollaczek&) { return "meixner-pollaczek"; },
                          [](const ContinuousHahn&) { return "continuous-hahn"; },
                          [](const Hahn&) { return "hahn"; },
                          [](const Jacobi&) { return "jacobi"; },
                          [](const Laguerre&) { return "laguerre"; },
                          [](const Meixner&) { return "meixner"; },
                          [](const Krawtchouk&) { return "krawtchouk"; },
                          [](const Charlier&) { return "charlier"; },
                          [](const Hermite&) { return "hermite"; },
                          [](const Racah&) { return "racah"; },
                          [](const AskeyWilson&) { return "askey-wilson"; },
                          [](const AlSalamChihara&) { return "al-salam-chihara"; },
                          [](const QHahn&) { return "q-hahn"; },
                          [](const QRacah&) { return "q-racah"; },
                          [](const DualQKrawtchouk&) { return "dual-q-krawtchouk"; },
                      },
                      f);
}

Cx eval(const Family& f, int n, Cx x) {
    const bool xr = is_real(x);
    return std::visit(
        overloaded{
            [&](const MeixnerPollaczek& p) {
                check_degree(n);
                return realify(meixner_pollaczek_value<double>(n, x, p.lambda, p.phi), xr);
            },
            [&](const ContinuousHahn& p) {
                check_degree(n);
                const bool real = xr && ((close(p.a, std::conj(p.c)) && close(p.b, std::conj(p.d))) ||
                                         (close(p.a, std::conj(p.d)) && close(p.b, std::conj(p.c))));
                return realify(continuous_hahn_value<double>(n, x, p.a, p.b, p.c, p.d), real);
            },
            [&](const Hahn& p) {
                check_degree(n, p.N);
                return realify(hahn_value<double>(n, x, p.a, p.b, double(p.N)), xr);
            },
            [&](const Jacobi& p) {
                check_degree(n);
                return realify(jacobi_value<double>(n, x, p.a, p.b), xr);
            },
            [&](const Laguerre& p) {
                check_degree(n);
                return realify(laguerre_value<double>(n, x, p.a), xr);
            },
            [&](const Meixner& p) {
                check_degree(n);
                return realify(meixner_value<double>(n, x, p.beta, p.c), xr);
            },
            [&](const Krawtchouk& p) {
                check_degree(n, p.N);
                return realify(krawtchouk_value<double>(n, x, p.p, double(p.N)), xr);
            },
            [&](const Charlier& p) {
                check_degree(n);
                return realify(charlier_value<double>(n, x, p.a), xr);
            },
            [&](const Hermite&) {
                check_degree(n);
                return realify(hermite_value<double>(n, x), xr);
            },
            [&](const Racah& p) {
                check_degree(n, p.N);
                return realify(racah_value<double>(n, x, p.alpha, p.beta, p.gamma, p.delta), xr);
            },
            [&](const AskeyWilson& p) {
                check_degree(n);
                const bool real = xr && conj_closed({p.a, p.b, p.c, p.d});
                return realify(askey_wilson_value<double>(n, x, p.a, p.b, p.c, p.d, p.q), real);
            },
            [&](const AlSalamChihara& p) {
                check_degree(n);
                const bool real = xr && conj_closed({p.a, p.b});
                return realify(al_salam_chihara_value<double>(n, x, p.a, p.b, p.q), real);
            },
            [&](const QHahn& p) {
                check_degree(n, p.N);
                return realify(q_hahn_value<double>(n, x, p.a, p.b, p.N, p.q), xr);
            },
            [&](const QRacah& p) {
                check_degree(n, p.N);
                return realify(
                    q_racah_value<double>(n, x, p.alpha, p.beta, p.gamma, p.delta, p.q), xr);
            },
            [&](const DualQKrawtchouk& p) {
                check_degree(n, p.N);
                return realify(dual_q_krawtchouk_value<double>(n, x, p.a, p.N, p.q), xr);
            },
        },
        f);
}

double orthonormal_eval(const Family& f, int n, double x) {
    if (const auto* p = std::get_if<MeixnerPollaczek>(&f)) {
        // probability measure: norm of P_n is (2 lambda)_n / n!
        double s = 1.0;
        for (int k = 1; k <= n; ++k) s *= k / (2.0 * p->lambda + k - 1);
        return std::sqrt(s) * eval(f, n, x).real();
    }
    if (const auto* p = std::get_if<AlSalamChihara>(&f)) {
        const Cx ab = p->a * p->b;
        require(std::abs(ab.imag()) <= 1e-14 && ab.real() < 1.0,
                "al_salam_chihara: ab must be real and < 1");
        const double h = q_pochhammer(p->q, p->q, n) * q_pochhammer(ab.real(), p->q, n);
        return eval(f, n, x).real() / std::sqrt(h);
    }
    if (const auto* p = std::get_if<AskeyWilson>(&f)) {
        return eval(f, n, x).real() / std::sqrt(aw_h(n, p->a, p->b, p->c, p->d, p->q));
    }
    if (const auto* p = std::get_if<DualQKrawtchouk>(&f)) {
        check_degree(n, p->N);
        return dual_q_krawtchouk_orthonormal<double>(n, Cx(x), p->a, p->N, p->q).real();
    }
    throw UnsupportedFamily("orthonormal_eval: no orthonormal normalisation for " + family_name(f));
}

JacobiOperator recurrence(const Family& f) {
    if (const auto* p = std::get_if<MeixnerPollaczek>(&f)) {
        const double lambda = p->lambda, c = std::cos(p->phi);
        JacobiOperator J;
        J.a = [lambda](int n) { return std::sqrt((n + 1.0) * (n + 2.0 * lambda)); };
        J.b = [lambda, c](int n) { return -2.0 * (n + lambda) * c; };
        J.variable_map = ArgumentMap::affine(2.0 * std::sin(p->phi), 0.0);
        return J;
    }
    if (const auto* p = std::get_if<AlSalamChihara>(&f)) {
        const Cx ab = p->a * p->b, apb = p->a + p->b;
        require(std::abs(ab.imag()) <= 1e-14 && std::abs(apb.imag()) <= 1e-14,
                "al_salam_chihara: a, b must be real or a conjugate pair");
        require(ab.real() < 1.0, "al_salam_chihara: ab must be < 1");
        const double q = p->q, s = ab.real(), t = apb.real();
        JacobiOperator J;
        J.a = [q, s](int n) {
            return std::sqrt((1.0 - s * std::pow(q, n)) * (1.0 - std::pow(q, n + 1)));
        };
        J.b = [q, t](int n) { return std::pow(q, n) * t; };
        J.variable_map = ArgumentMap::affine(2.0, 0.0);
        return J;
    }
    if (const auto* p = std::get_if<DualQKrawtchouk>(&f)) {
        const double a = p->a, q = p->q;
        const int N = p->N;
        JacobiOperator J;
        J.a = [a, q, N](int n) {
            return std::pow(q, -N + 0.5 * n) / std::sqrt(a) *
                   std::sqrt((1.0 - std::pow(q, n + 1)) * (1.0 - std::pow(q, N - n)));
        };
        J.b = [a, q, N](int n) { return std::pow(q, n - N) * (1.0 - 1.0 / a); };
        J.dimension = N + 1;
        J.variable_map = ArgumentMap::dualqk(a, N, q);
        return J;
    }
    throw UnsupportedFamily("recurrence: no recurrence provided for " + family_name(f));
}

JacobiOperator askey_wilson_operator(const AskeyWilson& f) {
    check_aw_admissible({f.a, f.b, f.c, f.d});
    const Cx a = f.a, b = f.b, c = f.c, d = f.d;
    const double q = f.q;
    const Cx e1 = a + b + c + d;
    const Cx e3 = a * b * c + a * b * d + a * c * d + b * c * d;
    const Cx e4 = a * b * c * d;
    // 2x p_n = A_n p_{n+1} + B_n p_n + C_n p_{n-1} for the unnormalised p_n
    auto A = [=](int n) -> Cx {
        if (n == 0) return 1.0 / (1.0 - e4);
        const double Q = std::pow(q, n);
        return (1.0 - e4 * Q / q) / ((1.0 - e4 * Q * Q / q) * (1.0 - e4 * Q * Q));
    };
    auto B = [=](int n) -> Cx {
        if (n == 0) return (e1 - e3) / (1.0 - e4);
        const double Q = std::pow(q, n);
        return Q * ((e3 + q * e1) * (q + e4 * Q * Q) - Q * (1.0 + q) * (q * e3 + e4 * e1)) /
               ((q * q - e4 * Q * Q) * (1.0 - e4 * Q * Q));
    };
    auto Cn = [=](int n) -> Cx {
        const double Q = std::pow(q, n);
        Cx v = 1.0 - Q;
        for (Cx e : {a * b, a * c, a * d, b * c, b * d, c * d}) v *= 1.0 - e * Q / q;
        return v / ((1.0 - e4 * Q * Q / (q * q)) * (1.0 - e4 * Q * Q / q));
    };
    JacobiOperator J;
    J.a = [=](int n) {
        const Cx v = A(n) * Cn(n + 1);
        if (!(v.real() > 0.0)) throw DomainError("askey_wilson: recurrence not positive definite");
        return 0.5 * std::sqrt(v.real());
    };
    J.b = [=](int n) { return 0.5 * B(n).real(); };
    return J;
}

double weight(const Family& f, double point) {
    if (const auto* p = std::get_if<MeixnerPollaczek>(&f)) {
        const double lam = p->lambda;
        const double lg = log_gamma(Cx(lam, point)).real();
        return std::exp(2.0 * lam * std::log(2.0 * std::sin(p->phi)) - std::log(2.0 * kPi) +
                        (2.0 * p->phi - kPi) * point + 2.0 * lg - std::lgamma(2.0 * lam));
    }
    if (const auto* p = std::get_if<ContinuousHahn>(&f)) {
        const Cx ix(0.0, point);
        const Cx L = log_gamma(p->a + ix) + log_gamma(p->b + ix) + log_gamma(p->c - ix) +
                     log_gamma(p->d - ix) - std::log(2.0 * kPi) -
                     (log_gamma(p->a + p->c) + log_gamma(p->a + p->d) + log_gamma(p->b + p->c) +
                      log_gamma(p->b + p->d) - log_gamma(p->a + p->b + p->c + p->d));
        return realify(std::exp(L), true).real();
    }
    if (const auto* p = std::get_if<AskeyWilson>(&f)) return aw_density(p->a, p->b, p->c, p->d, p->q, point);
    if (const auto* p = std::get_if<AlSalamChihara>(&f))
        return aw_density(p->a, p->b, 0.0, 0.0, p->q, point);
    throw UnsupportedFamily("weight: use the Gauss rule of the recurrence for " + family_name(f));
}

std::vector<MassPoint> weight_masses(const Family& f) {
    if (const auto* p = std::get_if<AskeyWilson>(&f)) return aw_masses(p->a, p->b, p->c, p->d, p->q);
    if (const auto* p = std::get_if<AlSalamChihara>(&f)) return aw_masses(p->a, p->b, 0.0, 0.0, p->q);
    throw UnsupportedFamily("weight_masses: only Askey-Wilson and Al-Salam-Chihara");
}

Cx argument(const ArgumentMap& m, Cx input) {
    Cx y;
    switch (m.kind) {
        case ArgumentMap::Kind::identity:
            y = input;
            break;
        case ArgumentMap::Kind::mu:
            if (input == Cx(0.0)) throw DomainError("mu: zero input");
            y = 0.5 * (input + 1.0 / input);
            break;
        case ArgumentMap::Kind::racah_lambda:
            y = input * (input + m.gamma + m.delta + 1.0);
            break;
        case ArgumentMap::Kind::qracah_nu: {
            const Cx qmx = q_power_neg<double>(m.q, input);
            y = qmx + m.gamma * m.delta * m.q / qmx;
            break;
        }
        case ArgumentMap::Kind::dualqk: {
            const Cx qmx = q_power_neg<double>(m.q, input);
            y = qmx - std::pow(m.q, -m.N) / (qmx * m.a);
            break;
        }
    }
    return m.scale * y + m.shift;
}

}  // namespace qaskey
