#include "identities.hpp"

#include <cmath>

#include "qaskey/coupling.hpp"
#include "qaskey/numerics.hpp"
#include "qaskey/polynomials.hpp"

namespace qaskey::detail {

void Params::set(const std::string& name, double value) {
    for (auto& p : v)
        if (p.name == name) {
            p.value = value;
            return;
        }
    v.push_back({name, value});
}

double Params::operator[](const std::string& name) const {
    for (const auto& p : v)
        if (p.name == name) return p.value;
    throw Error("internal: missing sample parameter " + name);
}

namespace {

// ---------------------------------------------------------------------------
// sampling

void degrees(Params& P, CounterRng& rng, int cap, const char* a = "n", const char* b = "j") {
    // uniform over the triangle a + b <= cap
    const int total = (cap + 1) * (cap + 2) / 2;
    int idx = rng.integer(0, total - 1);
    int first = 0;
    while (idx > cap - first) {
        idx -= cap - first + 1;
        ++first;
    }
    P.set(a, first);
    P.set(b, idx);
}

double u(CounterRng& rng, Range r) { return rng.uniform(r.lo, r.hi); }

// log-uniform in (q^e, q^{-e})
double sym_log(CounterRng& rng, double q, double e) {
    return std::pow(q, e * rng.uniform(-1.0, 1.0));
}

// ---------------------------------------------------------------------------
// helpers in working precision

template <class R> using C_ = complex_t<R>;

template <class R> R fact(int n) {
    R r(1);
    for (int i = 2; i <= n; ++i) r *= R(i);
    return r;
}

template <class R> R binom(int n, int k) { return fact<R>(n) / (fact<R>(k) * fact<R>(n - k)); }

template <class R> R ipow(const R& x, int n) {
    R r(1);
    const R b = n < 0 ? R(1) / x : x;
    for (int i = 0; i < std::abs(n); ++i) r *= b;
    return r;
}

template <class R> C_<R> ipow(const C_<R>& x, int n) {
    C_<R> r(R(1));
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

template <class R> R rpow(const R& q, const R& e) {
    using std::pow;
    return pow(q, e);
}

template <class R> C_<R> unit(const R& theta) {
    using std::cos;
    using std::sin;
    return C_<R>(cos(theta), sin(theta));
}

template <class R> C_<R> cosc(const R& theta) {
    using std::cos;
    return C_<R>(cos(theta));
}

template <class R> C_<R> aw(int n, const C_<R>& x, const C_<R>& a, const C_<R>& b, const C_<R>& c,
                           const C_<R>& d, const R& q) {
    return askey_wilson_value<R>(n, x, a, b, c, d, q);
}

template <class R> C_<R> asc(int n, const C_<R>& x, const C_<R>& a, const C_<R>& b, const R& q) {
    return al_salam_chihara_value<R>(n, x, a, b, q);
}

// ---------------------------------------------------------------------------
// classical identities

template <class R> Sides<R> t3_4(const Params& P) {
    using C = C_<R>;
    using std::sin;
    const R k1(P["k1"]), k2(P["k2"]), phi(P["phi"]);
    const C x1(R{P["x1"]}), x2(R{P["x2"]});
    const int n = P.integer("n"), j = P.integer("j"), N = n + j;
    Sides<R> s;
    const R bn = binom<R>(N, n);
    for (int l = 0; l <= N; ++l)
        s.terms.push_back(bn *
                          hahn_value<R>(j, C(R(l)), C(R(2) * k1 - R(1)), C(R(2) * k2 - R(1)), C(R(N))) *
                          meixner_pollaczek_value<R>(l, x1, k1, phi) *
                          meixner_pollaczek_value<R>(N - l, x2, k2, phi));
    const C sx = x1 + x2, i(R(0), R(1));
    const R pre = ipow<R>(R(-2) * sin(phi), j) / pochhammer(R(2) * k1, j);
    s.other = pre * meixner_pollaczek_value<R>(n, sx, k1 + k2 + R(j), phi) *
              continuous_hahn_value<R>(j, x1, C(k1), C(k2) - i * sx, C(k1), C(k2) + i * sx);
    return s;
}

template <class R> Sides<R> c3_6i(const Params& P) {
    using C = C_<R>;
    const C a(R(2) * R{P["k1"]} - R(1)), b(R(2) * R{P["k2"]} - R(1));
    const C x1(R{P["x1"]}), x2(R{P["x2"]});
    const int n = P.integer("n"), j = P.integer("j"), N = n + j;
    Sides<R> s;
    for (int l = 0; l <= N; ++l)
        s.terms.push_back(hahn_value<R>(j, C(R(l)), a, b, C(R(N))) * laguerre_value<R>(l, x1, a) *
                          laguerre_value<R>(N - l, x2, b));
    const C sx = x1 + x2;
    R pre = fact<R>(n) * fact<R>(j) / fact<R>(N);
    if (j % 2) pre = -pre;
    s.other = pre / pochhammer(a + C(R(1)), j) *
              laguerre_value<R>(n, sx, a + b + C(R(1 + 2 * j))) * ipow<R>(sx, j) *
              jacobi_value<R>(j, (x2 - x1) / sx, a, b);
    return s;
}

template <class R> Sides<R> c3_6ii(const Params& P) {
    using C = C_<R>;
    const C a(R(2) * R{P["k1"]}), b(R(2) * R{P["k2"]}), c(R{P["c"]});
    const C x1(R{P["x1"]}), x2(R{P["x2"]});
    const C one(R(1));
    const int n = P.integer("n"), j = P.integer("j"), N = n + j;
    Sides<R> s;
    const C lead = ipow<R>(one / (one / c - one), j);
    for (int l = 0; l <= N; ++l)
        s.terms.push_back(lead * pochhammer(a, l) * pochhammer(b, N - l) / (fact<R>(l) * fact<R>(N - l)) *
                          hahn_value<R>(j, C(R(l)), a - one, b - one, C(R(N))) *
                          meixner_value<R>(l, x1, a, c) * meixner_value<R>(N - l, x2, b, c));
    const C sx = x1 + x2;
    const C ab = a + b + C(R(2 * j));
    s.other = pochhammer(ab, n) / fact<R>(N) * meixner_value<R>(n, sx - C(R(j)), ab, c) *
              pochhammer(-sx, j) * hahn_value<R>(j, x1, a - one, b - one, sx);
    return s;
}

template <class R> Sides<R> c3_8i(const Params& P) {
    using C = C_<R>;
    using std::sqrt;
    const R a(P["a"]), b(P["b"]);
    const C x(R{P["x"]}), y(R{P["y"]});
    const int n = P.integer("n"), j = P.integer("j"), N = n + j;
    const R a2b2 = a * a + b * b, r = sqrt(a2b2);
    Sides<R> s;
    for (int l = 0; l <= N; ++l)
        s.terms.push_back(krawtchouk_value<R>(j, C(R(l)), C(a * a / a2b2), C(R(N))) * ipow<R>(a, l) /
                          fact<R>(l) * hermite_value<R>(l, x) * ipow<R>(b, N - l) / fact<R>(N - l) *
                          hermite_value<R>(N - l, y));
    s.other = ipow<R>(r, N) / fact<R>(N) * ipow<R>(b / a, j) * hermite_value<R>(n, (a * x + b * y) / r) *
              hermite_value<R>(j, (a * y - b * x) / r);
    return s;
}

template <class R> Sides<R> c3_8ii(const Params& P) {
    using C = C_<R>;
    const R al(P["alpha"]), be(P["beta"]);
    const C x(R{P["x"]}), y(R{P["y"]});
    const int n = P.integer("n"), j = P.integer("j"), N = n + j;
    const C p(al / (al + be));
    Sides<R> s;
    for (int l = 0; l <= N; ++l)
        s.terms.push_back(binom<R>(N, l) * ipow<R>(al, l) * ipow<R>(be, N - l) *
                          krawtchouk_value<R>(j, C(R(l)), p, C(R(N))) * charlier_value<R>(l, x, C(al)) *
                          charlier_value<R>(N - l, y, C(be)));
    R pre = ipow<R>(al + be, n);
    if (j % 2) pre = -pre;
    s.other = pre * charlier_value<R>(n, x + y - C(R(j)), C(al + be)) * pochhammer(-x - y, j) *
              krawtchouk_value<R>(j, x, p, x + y);
    return s;
}

template <class R> Sides<R> t3_13(const Params& P) {
    using C = C_<R>;
    const R k1(P["k1"]), k2(P["k2"]), k3(P["k3"]), two(2);
    const C x1(R{P["x1"]}), x2(R{P["x2"]}), sv(R{P["s"]});
    const int n = P.integer("n"), j = P.integer("j"), N = n + j;
    const C i(R(0), R(1));
    Sides<R> s;
    for (int l = 0; l <= N; ++l) {
        const R co = binom<R>(N, n) * pochhammer(two * k2, n) * pochhammer(two * k3, j) *
                     pochhammer(two * (k1 + k2 + k3) + R(N - 1), l) /
                     (pochhammer(two * k3, l) * pochhammer(two * (k2 + k3) + R(l - 1), l) *
                      pochhammer(two * (k2 + k3) + R(2 * l), N - l));
        const C rac = racah_value<R>(l, C(R(n)), C(two * k2 - R(1)), C(two * k3 - R(1)), C(R(-N - 1)),
                                     C(two * (k1 + k2) + R(N - 1)));
        const C b = C(k2 + k3 + R(l));
        const C ch1 = continuous_hahn_value<R>(N - l, x1, C(k1), b - i * sv, C(k1), b + i * sv);
        const C ch2 = continuous_hahn_value<R>(l, x2, C(k2), C(k3) - i * (sv - x1), C(k2),
                                               C(k3) + i * (sv - x1));
        s.terms.push_back(co * rac * ch1 * ch2);
    }
    const C sx = x1 + x2;
    const C k12n(k1 + k2 + R(n));
    s.other = continuous_hahn_value<R>(n, x1, C(k1), C(k2) - i * sx, C(k1), C(k2) + i * sx) *
              continuous_hahn_value<R>(j, sx, k12n, C(k3) - i * sv, k12n, C(k3) + i * sv);
    return s;
}

template <class R> Sides<R> c3_15i(const Params& P) {
    using C = C_<R>;
    const R two(2), one(1);
    const R a = two * R{P["k1"]} - one, b = two * R{P["k2"]} - one, c = two * R{P["k3"]} - one;
    const C x1(R{P["x1"]}), x2(R{P["x2"]});
    const int n = P.integer("n"), j = P.integer("j"), N = n + j;
    const C cone(one);
    Sides<R> s;
    for (int l = 0; l <= N; ++l) {
        const R co = binom<R>(N, n) * pochhammer(b + one, n) * pochhammer(c + one, j) *
                     pochhammer(a + b + c + R(N + 2), l) /
                     (pochhammer(c + one, l) * pochhammer(b + c + R(l + 1), l) *
                      pochhammer(b + c + R(2 * l + 2), N - l));
        const C rac = racah_value<R>(l, C(R(n)), C(b), C(c), C(R(-N - 1)), C(a + b + R(N + 1)));
        const C j1 = jacobi_value<R>(N - l, cone - two * x1, C(a), C(b + c + R(2 * l + 1)));
        const C j2 = jacobi_value<R>(l, (cone - x1 - two * x2) / (cone - x1), C(b), C(c));
        s.terms.push_back(co * rac * j1 * ipow<R>(cone - x1, l) * j2);
    }
    const C sx = x1 + x2;
    s.other = ipow<R>(sx, n) * jacobi_value<R>(n, (x2 - x1) / sx, C(a), C(b)) *
              jacobi_value<R>(j, cone - two * sx, C(a + b + R(2 * n + 1)), C(c));
    return s;
}

template <class R> Sides<R> c3_15ii(const Params& P) {
    using C = C_<R>;
    const R two(2), one(1);
    const R a = two * R{P["k1"]} - one, b = two * R{P["k2"]} - one, c = two * R{P["k3"]} - one;
    const C x1(R{P["x1"]}), x2(R{P["x2"]}), sv(R{P["s"]});
    const int n = P.integer("n"), j = P.integer("j"), N = n + j;
    Sides<R> s;
    for (int l = 0; l <= N; ++l) {
        const R co = binom<R>(N, l) * pochhammer(a + one, N - l) * pochhammer(b + one, l) *
                     pochhammer(b + one, n) * pochhammer(c + one, j) *
                     pochhammer(a + b + c + R(N + 2), l) /
                     (pochhammer(a + one, n) * pochhammer(c + one, l) * pochhammer(b + c + R(l + 1), l) *
                      pochhammer(b + c + R(2 * l + 2), N - l) * pochhammer(a + b + R(2 * n + 2), j));
        const C rac = racah_value<R>(l, C(R(n)), C(b), C(c), C(R(-N - 1)), C(a + b + R(N + 1)));
        const C h1 = pochhammer(C(R(l)) - sv, N - l) *
                     hahn_value<R>(N - l, x1, C(a), C(b + c + R(2 * l + 1)), sv - C(R(l)));
        const C h2 = pochhammer(x1 - sv, l) * hahn_value<R>(l, x2, C(b), C(c), sv - x1);
        s.terms.push_back(co * rac * h1 * h2);
    }
    const C sx = x1 + x2;
    s.other = pochhammer(-sx, n) * hahn_value<R>(n, x1, C(a), C(b), sx) *
              pochhammer(C(R(n)) - sv, j) *
              hahn_value<R>(j, sx - C(R(n)), C(a + b + R(2 * n + 1)), C(c), sv - C(R(n)));
    return s;
}

// ---------------------------------------------------------------------------
// q identities

template <class R>
Sides<R> t4_5_core(const R& q, const R& k1, const R& k2, const R& sv, const R& th1, const R& th2, int n,
                   int j) {
    using C = C_<R>;
    const R Q = q * q, two(2);
    const int N = n + j;
    const C w1 = unit(th1), w2 = unit(th2), x1 = cosc(th1), x2 = cosc(th2);
    const R q2k1 = rpow(q, two * k1), q2k2 = rpow(q, two * k2);
    Sides<R> s;
    const R lead = q_pochhammer(q2k1 * q2k1, Q, j);
    for (int l = 0; l <= N; ++l) {
        const R co = lead * rpow(q, two * k1 * R(n - l)) * q_binomial(N, l, Q);
        const C h = q_hahn_value<R>(j, C(R(l)), C(q2k1 * q2k1 / Q), C(q2k2 * q2k2 / Q), N, Q);
        s.terms.push_back(co * h * asc<R>(l, x1, q2k1 * w2, q2k1 / w2, Q) *
                          asc<R>(N - l, x2, C(q2k2 * sv), C(q2k2 / sv), Q));
    }
    const R q2K = rpow(q, two * (k1 + k2 + R(j)));
    s.other = asc<R>(n, x1, C(q2K * sv), C(q2K / sv), Q) *
              aw<R>(j, x2, q2k1 * w1, q2k1 / w1, C(q2k2 * sv), C(q2k2 / sv), Q);
    return s;
}

template <class R> Sides<R> t4_5(const Params& P) {
    return t4_5_core<R>(R{P["q"]}, R{P["k1"]}, R{P["k2"]}, R{P["s"]}, R{P["theta1"]}, R{P["theta2"]},
                        P.integer("n"), P.integer("j"));
}

template <class R>
Sides<R> t4_10_core(const R& q, const R& a, const R& b, const R& c, const R& sv, const R& t, const R& th1,
                    const R& th2, int n, int j) {
    using C = C_<R>;
    const int N = n + j;
    const C w1 = unit(th1), w2 = unit(th2), x1 = cosc(th1), x2 = cosc(th2);
    const R a2 = a * a, b2 = b * b, c2 = c * c;
    Sides<R> s;
    for (int l = 0; l <= N; ++l) {
        const R co = ipow<R>(b, j - l) * q_binomial(N, l, q) * q_pochhammer(b2, q, n) *
                     q_pochhammer(a2 * b2 * c2 * ipow<R>(q, N - 1), q, l) * q_pochhammer(c2, q, j) /
                     (q_pochhammer(c2, q, l) * q_pochhammer(b2 * c2 * ipow<R>(q, l - 1), q, l) *
                      q_pochhammer(b2 * c2 * ipow<R>(q, 2 * l), q, N - l));
        const C rac = q_racah_value<R>(l, C(R(n)), C(b2 / q), C(c2 / q), C(ipow<R>(q, -N - 1)),
                                       C(a2 * b2 * ipow<R>(q, N - 1)), q);
        const R bcl = b * c * ipow<R>(q, l);
        s.terms.push_back(co * rac * aw<R>(N - l, x1, C(a * t), C(a / t), C(bcl * sv), C(bcl / sv), q) *
                          aw<R>(l, x2, b * w1, b / w1, C(c * sv), C(c / sv), q));
    }
    const R abn = a * b * ipow<R>(q, n);
    s.other = aw<R>(n, x1, C(a * t), C(a / t), b * w2, b / w2, q) *
              aw<R>(j, x2, C(abn * t), C(abn / t), C(c * sv), C(c / sv), q);
    return s;
}

template <class R> Sides<R> t4_10(const Params& P) {
    const R q(P["q"]);
    return t4_10_core<R>(q, rpow(q, R{P["k1"]}), rpow(q, R{P["k2"]}), rpow(q, R{P["k3"]}), R{P["s"]},
                         R{P["t"]}, R{P["theta1"]}, R{P["theta2"]}, P.integer("n"), P.integer("j"));
}

template <class R> Sides<R> r4_11(const Params& P, bool qracah) {
    using C = C_<R>;
    const R q(P["q"]), two(2);
    const R k1(P["k1"]), k2(P["k2"]), k3(P["k3"]);
    const R al = rpow(q, two * k1), be = rpow(q, two * k2), ga = rpow(q, two * k3);
    const R uu = rpow(q, k2 + k3 - k1) * R{P["s"]} / R{P["t"]};
    const int n = P.integer("n"), j = P.integer("j"), N = n + j;
    Sides<R> s;
    for (int l = 0; l <= N; ++l) {
        R co = q_binomial(N, l, q) * q_pochhammer(al, q, N - l) * q_pochhammer(be, q, n) /
               q_pochhammer(al, q, n) * ipow<R>(uu, j - l) * q_pochhammer(uu, q, l);
        C poly;
        if (qracah) {
            co *= q_pochhammer(al * be * ga * ipow<R>(q, N - 1), q, l) /
                  (q_pochhammer(be * ga * ipow<R>(q, l - 1), q, l) *
                   q_pochhammer(be * ga * ipow<R>(q, 2 * l), q, N - l)) *
                  q_pochhammer(be * ga * ipow<R>(q, l) / uu, q, N - l);
            poly = q_racah_value<R>(l, C(R(n)), C(be / q), C(ga / q), C(ipow<R>(q, -N - 1)),
                                    C(al * be * ipow<R>(q, N - 1)), q);
        } else {
            poly = q_hahn_value<R>(n, C(R(l)), C(be / q), C(al / q), N, q);
        }
        s.terms.push_back(co * poly);
    }
    s.other = C(q_pochhammer(al * ipow<R>(q, n) * uu, q, j) * q_pochhammer(be / uu, q, n));
    return s;
}

template <class R> Sides<R> t5_5(const Params& P) {
    using C = C_<R>;
    using std::sqrt;
    const double qd = P["q"], pd = P["p"], rd = P["r"];
    const R q(qd), p(pd), r(rd), Q = q * q;
    const int l1 = P.integer("l1"), l2 = P.integer("l2"), L = l1 + l2;
    const C x = cosc(R{P["theta"]});
    const C a(q * sqrt(p / r)), b(q * sqrt(r / p)), c(-q / sqrt(p * r)), d(-q * sqrt(p * r));
    const std::vector<R> cj = linearisation_coeffs<R>(l1, l2, pd, rd, qd);
    Sides<R> s;
    for (std::size_t jj = 0; jj < cj.size(); ++jj)
        s.terms.push_back(cj[jj] * aw<R>(L - int(jj), x, a, b, c, d, Q));
    s.other = aw<R>(l1, x, a, b, c, d, Q) * aw<R>(l2, x, a, b, c, d, Q);
    return s;
}

}  // namespace

Params draw(IdentityId id, CounterRng& rng, const SampleConfig& cfg) {
    Params P;
    const int cc = cfg.classical_cap, qc = cfg.q_cap;
    switch (id) {
        case IdentityId::T3_4:
            degrees(P, rng, cc);
            P.set("k1", u(rng, cfg.k));
            P.set("k2", u(rng, cfg.k));
            P.set("phi", u(rng, cfg.phi));
            P.set("x1", u(rng, cfg.x));
            P.set("x2", u(rng, cfg.x));
            break;
        case IdentityId::C3_6i:
            degrees(P, rng, cc);
            P.set("k1", u(rng, cfg.k));
            P.set("k2", u(rng, cfg.k));
            P.set("x1", u(rng, cfg.x));
            P.set("x2", u(rng, cfg.x));
            break;
        case IdentityId::C3_6ii:
            degrees(P, rng, cc);
            P.set("k1", u(rng, cfg.k));
            P.set("k2", u(rng, cfg.k));
            P.set("c", u(rng, cfg.meixner_c));
            P.set("x1", u(rng, cfg.x));
            P.set("x2", u(rng, cfg.x));
            break;
        case IdentityId::C3_8i:
            degrees(P, rng, cc);
            P.set("a", u(rng, cfg.hermite_ab));
            P.set("b", u(rng, cfg.hermite_ab));
            P.set("x", u(rng, cfg.x));
            P.set("y", u(rng, cfg.x));
            break;
        case IdentityId::C3_8ii:
            degrees(P, rng, cc);
            P.set("alpha", u(rng, cfg.k));
            P.set("beta", u(rng, cfg.k));
            P.set("x", u(rng, cfg.x));
            P.set("y", u(rng, cfg.x));
            break;
        case IdentityId::T3_13:
        case IdentityId::C3_15ii:
            degrees(P, rng, cc);
            P.set("k1", u(rng, cfg.k));
            P.set("k2", u(rng, cfg.k));
            P.set("k3", u(rng, cfg.k));
            P.set("x1", u(rng, cfg.x));
            P.set("x2", u(rng, cfg.x));
            P.set("s", u(rng, cfg.x));
            break;
        case IdentityId::C3_15i:
            degrees(P, rng, cc);
            P.set("k1", u(rng, cfg.k));
            P.set("k2", u(rng, cfg.k));
            P.set("k3", u(rng, cfg.k));
            P.set("x1", u(rng, cfg.x));
            P.set("x2", u(rng, cfg.x));
            break;
        case IdentityId::T4_5: {
            degrees(P, rng, qc);
            const double q = u(rng, cfg.q), k2 = u(rng, cfg.k);
            P.set("q", q);
            P.set("k1", u(rng, cfg.k));
            P.set("k2", k2);
            P.set("s", sym_log(rng, q, 2.0 * k2));
            P.set("theta1", u(rng, cfg.theta));
            P.set("theta2", u(rng, cfg.theta));
            break;
        }
        case IdentityId::T4_10:
        case IdentityId::R4_11ii_qracah:
        case IdentityId::R4_11ii_qhahn: {
            degrees(P, rng, qc);
            const double q = u(rng, cfg.q), k1 = u(rng, cfg.k), k2 = u(rng, cfg.k), k3 = u(rng, cfg.k);
            P.set("q", q);
            P.set("k1", k1);
            P.set("k2", k2);
            P.set("k3", k3);
            P.set("s", sym_log(rng, q, k3));
            P.set("t", sym_log(rng, q, k1));
            if (id == IdentityId::T4_10) {
                P.set("theta1", u(rng, cfg.theta));
                P.set("theta2", u(rng, cfg.theta));
            }
            break;
        }
        case IdentityId::T5_5: {
            degrees(P, rng, qc, "l1", "l2");
            double p, r, q;
            do {
                p = u(rng, cfg.lin_pr);
                r = u(rng, cfg.lin_pr);
                q = u(rng, cfg.q);
            } while (!(q * std::sqrt(p / r) < 1.0 && q * std::sqrt(r / p) < 1.0 && q * std::sqrt(p * r) < 1.0));
            P.set("p", p);
            P.set("r", r);
            P.set("q", q);
            P.set("theta", u(rng, cfg.theta));
            break;
        }
        default:
            throw Error("internal: no sampler for this identity");
    }
    return P;
}

Params draw_j0(IdentityId id, CounterRng& rng, const SampleConfig& cfg) {
    Params P = draw(id, rng, cfg);
    const int cap = id == IdentityId::T3_4 ? cfg.classical_cap : cfg.q_cap;
    P.set("n", rng.integer(0, cap));
    P.set("j", 0);
    return P;
}

template <class R> Sides<R> evaluate(IdentityId id, const Params& p) {
    switch (id) {
        case IdentityId::T3_4: return t3_4<R>(p);
        case IdentityId::C3_6i: return c3_6i<R>(p);
        case IdentityId::C3_6ii: return c3_6ii<R>(p);
        case IdentityId::C3_8i: return c3_8i<R>(p);
        case IdentityId::C3_8ii: return c3_8ii<R>(p);
        case IdentityId::T3_13: return t3_13<R>(p);
        case IdentityId::C3_15i: return c3_15i<R>(p);
        case IdentityId::C3_15ii: return c3_15ii<R>(p);
        case IdentityId::T4_5: return t4_5<R>(p);
        case IdentityId::T4_10: return t4_10<R>(p);
        case IdentityId::R4_11ii_qracah: return r4_11<R>(p, true);
        case IdentityId::R4_11ii_qhahn: return r4_11<R>(p, false);
        case IdentityId::T5_5: return t5_5<R>(p);
        default: throw Error("internal: no evaluator for this identity");
    }
}

template <class R> Sides<R> evaluate_t4_10_from_t4_5(const Params& P) {
    const R q(P["q"]), two(2);
    const R Q = q * q;
    return t4_10_core<R>(Q, rpow(q, two * R{P["k2"]}), rpow(q, two * R{P["k1"]}), R(0), R(1), R{P["s"]},
                         R{P["theta2"]}, R{P["theta1"]}, P.integer("j"), P.integer("n"));
}

template Sides<double> evaluate<double>(IdentityId, const Params&);
template Sides<Ext> evaluate<Ext>(IdentityId, const Params&);
template Sides<double> evaluate_t4_10_from_t4_5<double>(const Params&);
template Sides<Ext> evaluate_t4_10_from_t4_5<Ext>(const Params&);

}  // namespace qaskey::detail
