#pragma once

#include <string>
#include <vector>

#include "qaskey/verify.hpp"
#include "rng.hpp"

namespace qaskey::detail {

struct Params {
    std::vector<Param> v;

    void set(const std::string& name, double value);
    double operator[](const std::string& name) const;
    int integer(const std::string& name) const { return int((*this)[name]); }
};

template <class R> struct Sides {
    std::vector<complex_t<R>> terms;  // summed side
    complex_t<R> other;
};

// Parameter draw for one of the thirteen identities.
Params draw(IdentityId id, CounterRng& rng, const SampleConfig& cfg);

// Draw with the second degree label forced to zero (T3_4 and T4_5 only).
Params draw_j0(IdentityId id, CounterRng& rng, const SampleConfig& cfg);

template <class R> Sides<R> evaluate(IdentityId id, const Params& p);

// T4_10 evaluated at c = 0 with the parameters of a T4_5 draw mapped onto it
// (base q^2, b = q^{2k1}, a = q^{2k2}, t = s, the two points and the two
// degrees swapped).
template <class R> Sides<R> evaluate_t4_10_from_t4_5(const Params& p);

}  // namespace qaskey::detail
