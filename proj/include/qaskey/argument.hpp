#pragma once

#include "qaskey/scalar.hpp"

namespace qaskey {

// Spectral variable of a polynomial family. After the base map an optional
// affine post-map y -> scale*y + shift is applied (Meixner-Pollaczek uses
// y = 2x sin(phi), the U_q operators rescale the Al-Salam-Chihara variable).
struct ArgumentMap {
    enum class Kind { identity, mu, racah_lambda, qracah_nu, dualqk };

    Kind kind = Kind::identity;
    Cx gamma{0.0};  // racah_lambda, qracah_nu
    Cx delta{0.0};  // racah_lambda, qracah_nu
    double a = 1.0;  // dualqk
    int N = 0;       // dualqk
    double q = 0.5;  // qracah_nu, dualqk
    double scale = 1.0;
    double shift = 0.0;

    static ArgumentMap identity() { return {}; }
    static ArgumentMap affine(double scale, double shift) {
        ArgumentMap m;
        m.scale = scale;
        m.shift = shift;
        return m;
    }
    static ArgumentMap mu() {
        ArgumentMap m;
        m.kind = Kind::mu;
        return m;
    }
    static ArgumentMap racah_lambda(Cx gamma, Cx delta) {
        ArgumentMap m;
        m.kind = Kind::racah_lambda;
        m.gamma = gamma;
        m.delta = delta;
        return m;
    }
    static ArgumentMap qracah_nu(Cx gamma, Cx delta, double q) {
        ArgumentMap m;
        m.kind = Kind::qracah_nu;
        m.gamma = gamma;
        m.delta = delta;
        m.q = q;
        return m;
    }
    static ArgumentMap dualqk(double a, int N, double q) {
        ArgumentMap m;
        m.kind = Kind::dualqk;
        m.a = a;
        m.N = N;
        m.q = q;
        return m;
    }
};

// mu(w) = (w + 1/w)/2, racah_lambda(x) = x(x+gamma+delta+1),
// qracah_nu(x) = q^{-x} + gamma*delta*q^{x+1}, dualqk(x) = q^{-x} - q^{x-N}/a.
Cx argument(const ArgumentMap& map, Cx input);

}  // namespace qaskey
