#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qaskey/argument.hpp"
#include "qaskey/numerics.hpp"
#include "qaskey/spectral.hpp"

namespace qaskey {

// ---------------------------------------------------------------------------
// Families. Constructors validate the parameter domains.

struct MeixnerPollaczek {
    double lambda, phi;
    MeixnerPollaczek(double lambda, double phi);
};
struct ContinuousHahn {
    Cx a, b, c, d;
    ContinuousHahn(Cx a, Cx b, Cx c, Cx d);
};
struct Hahn {
    double a, b;
    int N;
    Hahn(double a, double b, int N);
};
struct Jacobi {
    double a, b;
    Jacobi(double a, double b);
};
struct Laguerre {
    double a;
    explicit Laguerre(double a);
};
struct Meixner {
    double beta, c;
    Meixner(double beta, double c);
};
struct Krawtchouk {
    double p;
    int N;
    Krawtchouk(double p, int N);
};
struct Charlier {
    double a;
    explicit Charlier(double a);
};
struct Hermite {};
// One of alpha+1, beta+delta+1, gamma+1 must equal -N.
struct Racah {
    double alpha, beta, gamma, delta;
    int N;
    Racah(double alpha, double beta, double gamma, double delta);
};

struct AskeyWilson {
    Cx a, b, c, d;
    double q;
    AskeyWilson(Cx a, Cx b, Cx c, Cx d, double q);
};
struct AlSalamChihara {
    Cx a, b;
    double q;
    AlSalamChihara(Cx a, Cx b, double q);
};
struct QHahn {
    double a, b;
    int N;
    double q;
    QHahn(double a, double b, int N, double q);
};
// One of alpha*q, beta*delta*q, gamma*q must equal q^{-N}.
struct QRacah {
    double alpha, beta, gamma, delta, q;
    int N;
    QRacah(double alpha, double beta, double gamma, double delta, double q);
};
struct DualQKrawtchouk {
    double a;
    int N;
    double q;
    DualQKrawtchouk(double a, int N, double q);
};

using ClassicalFamily = std::variant<MeixnerPollaczek, ContinuousHahn, Hahn, Jacobi, Laguerre,
                                     Meixner, Krawtchouk, Charlier, Hermite, Racah>;
using QFamily = std::variant<AskeyWilson, AlSalamChihara, QHahn, QRacah, DualQKrawtchouk>;
using Family = std::variant<MeixnerPollaczek, ContinuousHahn, Hahn, Jacobi, Laguerre, Meixner,
                            Krawtchouk, Charlier, Hermite, Racah, AskeyWilson, AlSalamChihara,
                            QHahn, QRacah, DualQKrawtchouk>;

std::string family_name(const Family& f);

// Polynomial value in the library normalisation. For the lattice families
// (Hahn, Krawtchouk, Meixner, Charlier, Racah, q-Hahn, q-Racah, dual
// q-Krawtchouk) x is the lattice variable; for Askey-Wilson and
// Al-Salam-Chihara x = cos(theta). Values guaranteed real are realified.
Cx eval(const Family& f, int n, Cx x);

// Orthonormal version for Meixner-Pollaczek, Al-Salam-Chihara,
// Askey-Wilson and dual q-Krawtchouk (probability-normalised measures).
double orthonormal_eval(const Family& f, int n, double x);

// Orthonormal recurrence for Meixner-Pollaczek (variable 2x sin phi),
// Al-Salam-Chihara (variable 2x) and dual q-Krawtchouk (variable
// q^{-x} - q^{x-N}/a).
JacobiOperator recurrence(const Family& f);

// Orthonormal Askey-Wilson recurrence in x = cos(theta); parameters real or in
// conjugate pairs with a positive norm sequence.
JacobiOperator askey_wilson_operator(const AskeyWilson& f);

// Normalised weight density: Meixner-Pollaczek and continuous Hahn in x,
// Askey-Wilson / Al-Salam-Chihara as a density in theta on [0, pi].
double weight(const Family& f, double point);

struct MassPoint {
    double x;
    double w;
};
// Discrete part of the Askey-Wilson measure (empty when |a|,|b|,|c|,|d| < 1).
std::vector<MassPoint> weight_masses(const Family& f);

// ---------------------------------------------------------------------------
// Generic evaluators, instantiated for double and Ext.

template <class R>
complex_t<R> meixner_pollaczek_value(int n, const complex_t<R>& x, const R& lambda, const R& phi);
template <class R>
complex_t<R> continuous_hahn_value(int n, const complex_t<R>& x, const complex_t<R>& a,
                                   const complex_t<R>& b, const complex_t<R>& c,
                                   const complex_t<R>& d);
template <class R>
complex_t<R> hahn_value(int n, const complex_t<R>& x, const complex_t<R>& a, const complex_t<R>& b,
                        const complex_t<R>& N);
template <class R>
complex_t<R> jacobi_value(int n, const complex_t<R>& x, const complex_t<R>& a,
                          const complex_t<R>& b);
template <class R>
complex_t<R> laguerre_value(int n, const complex_t<R>& x, const complex_t<R>& a);
template <class R>
complex_t<R> meixner_value(int n, const complex_t<R>& x, const complex_t<R>& beta,
                           const complex_t<R>& c);
template <class R>
complex_t<R> krawtchouk_value(int n, const complex_t<R>& x, const complex_t<R>& p,
                              const complex_t<R>& N);
template <class R> complex_t<R> charlier_value(int n, const complex_t<R>& x, const complex_t<R>& a);
template <class R> complex_t<R> hermite_value(int n, const complex_t<R>& x);
template <class R>
complex_t<R> racah_value(int n, const complex_t<R>& x, const complex_t<R>& alpha,
                         const complex_t<R>& beta, const complex_t<R>& gamma,
                         const complex_t<R>& delta);

// Askey-Wilson p_n(x; a,b,c,d | q) via its three-term recurrence.
template <class R>
complex_t<R> askey_wilson_value(int n, const complex_t<R>& x, const complex_t<R>& a,
                                const complex_t<R>& b, const complex_t<R>& c,
                                const complex_t<R>& d, const R& q);
// The same polynomial from the 4phi3 definition, at x = mu(w).
template <class R>
complex_t<R> askey_wilson_series(int n, const complex_t<R>& w, const complex_t<R>& a,
                                 const complex_t<R>& b, const complex_t<R>& c,
                                 const complex_t<R>& d, const R& q);
template <class R>
complex_t<R> al_salam_chihara_value(int n, const complex_t<R>& x, const complex_t<R>& a,
                                    const complex_t<R>& b, const R& q);
template <class R>
complex_t<R> q_hahn_value(int n, const complex_t<R>& x, const complex_t<R>& a,
                          const complex_t<R>& b, int N, const R& q);
template <class R>
complex_t<R> q_racah_value(int n, const complex_t<R>& x, const complex_t<R>& alpha,
                           const complex_t<R>& beta, const complex_t<R>& gamma,
                           const complex_t<R>& delta, const R& q);
// R_n of the dual q-Krawtchouk family at lattice point x.
template <class R>
complex_t<R> dual_q_krawtchouk_value(int n, const complex_t<R>& x, const R& a, int N, const R& q);
// Orthonormal r_n.
template <class R>
complex_t<R> dual_q_krawtchouk_orthonormal(int n, const complex_t<R>& x, const R& a, int N,
                                           const R& q);

// q^{-x}, exact repeated products when x is an integer.
template <class R> complex_t<R> q_power_neg(const R& q, const complex_t<R>& x);

}  // namespace qaskey
