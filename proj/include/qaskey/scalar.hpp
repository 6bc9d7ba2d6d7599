#pragma once

#include <complex>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace qaskey {

using Cx = std::complex<double>;

// Working precision for the identity harness. The q-Hahn and q-Racah
// coefficient series lose close to 100 digits at the default caps.
inline constexpr unsigned ext_digits = 160;
using Ext = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<ext_digits>, boost::multiprecision::et_off>;
using ExtCx = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<ext_digits>>,
    boost::multiprecision::et_off>;

template <class R> struct complex_of;
template <> struct complex_of<double> { using type = Cx; };
template <> struct complex_of<Ext> { using type = ExtCx; };
template <class R> using complex_t = typename complex_of<R>::type;

inline double to_double(double v) { return v; }
inline double to_double(const Ext& v) { return v.convert_to<double>(); }
inline Cx to_cx(const Cx& z) { return z; }
inline Cx to_cx(const ExtCx& z) {
    return {real(z).convert_to<double>(), imag(z).convert_to<double>()};
}

template <class R> complex_t<R> lift(const Cx& z) {
    return complex_t<R>(R(z.real()), R(z.imag()));
}
template <class R> complex_t<R> lift(double v) { return complex_t<R>(R(v)); }

template <class R> R epsilon() { return std::numeric_limits<R>::epsilon(); }

}  // namespace qaskey
