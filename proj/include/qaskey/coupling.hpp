#pragma once

#include <optional>
#include <vector>

#include "qaskey/scalar.hpp"

namespace qaskey {

enum class Algebra { su11, uq_su11, uq_su2 };

// Clebsch-Gordan label. su11 and uq_su11 use k1, k2; uq_su2 uses N1, N2.
struct CgcLabel {
    Algebra algebra = Algebra::su11;
    double k1 = 0.0, k2 = 0.0;
    int N1 = 0, N2 = 0;
    int j = 0, n1 = 0, n2 = 0, n = 0;
    std::optional<double> q;
};

// Racah label: k12 = k1+k2+j12, k23 = k2+k3+j23 and j12+j = j23+jprime.
struct RacahLabel {
    double k1 = 0.0, k2 = 0.0, k3 = 0.0;
    int j12 = 0, j23 = 0, j = 0, jprime = 0;
    std::optional<double> q;
};

// Every coefficient is available in double and in Ext. The double entry
// points below forward to the <double> instantiation.

template <class R> R cgc_su11(const CgcLabel& label);
template <class R> R cgc_uq_su11(const CgcLabel& label);
template <class R> R racah_su11(const RacahLabel& label);
template <class R> R racah_uq_su11(const RacahLabel& label);
template <class R> R c_norm(double k1, double k2, int j, double q);
template <class R> R cgc_uq_su2_n0(int N1, int N2, int j, int n1, int n2, double q);
template <class R> R eigenbasis_overlap_uq_su2(int N1, int N2, int j, int f1, int f2, double p, double q);
template <class R> std::vector<R> linearisation_coeffs(int l1, int l2, double p, double r, double q);

double cgc_su11(const CgcLabel& label);
double cgc_uq_su11(const CgcLabel& label);
double racah_su11(const RacahLabel& label);
double racah_uq_su11(const RacahLabel& label);
double c_norm(double k1, double k2, int j, double q);
double cgc_uq_su2_n0(int N1, int N2, int j, int n1, int n2, double q);
double eigenbasis_overlap_uq_su2(int N1, int N2, int j, int f1, int f2, double p, double q);
std::vector<double> linearisation_coeffs(int l1, int l2, double p, double r, double q);

// Askey-Wilson parameters (base q^2) whose polynomials the linearisation
// coefficients expand: q sqrt(p/r), q sqrt(r/p), -q/sqrt(pr), -q sqrt(pr).
struct AwParams {
    double a, b, c, d;
};
AwParams linearisation_aw_params(double p, double r, double q);

}  // namespace qaskey
