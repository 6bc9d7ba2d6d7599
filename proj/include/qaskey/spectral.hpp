#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "qaskey/argument.hpp"

namespace qaskey {

// Orthonormal recurrence x p_n = a_n p_{n+1} + b_n p_n + a_{n-1} p_{n-1}.
struct JacobiOperator {
    std::function<double(int)> a;
    std::function<double(int)> b;
    std::optional<int> dimension;  // empty when unbounded
    ArgumentMap variable_map;
};

struct TridiagonalMatrix {
    std::vector<double> diag;
    std::vector<double> offdiag;
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

struct EigenResult {
    std::vector<double> values;            // ascending
    std::vector<double> first_components;  // nonnegative
};

TridiagonalMatrix truncate(const JacobiOperator& J, int N);

// Implicit QL with Wilkinson shift, accumulating only the first row of the
// eigenvector matrix.
EigenResult eig_tridiagonal(const TridiagonalMatrix& T);

QuadratureRule gauss_rule(const JacobiOperator& J, int N);

// p_0..p_N at the spectral variable y (apply J.variable_map to go from the
// family variable).
std::vector<double> eval_by_recurrence(const JacobiOperator& J, int N, double x);

struct Su11Xphi {
    double k;
    double phi;
};
struct UqSu11YsA {
    double k;
    double s;
    double q;
};
struct UqSu2XpA {
    int N;
    double p;
    double q;
};
using RepnOperatorSpec = std::variant<Su11Xphi, UqSu11YsA, UqSu2XpA>;

JacobiOperator representation_operator(const RepnOperatorSpec& spec);

// lambda_f^N(p), the eigenvalues of t^N(X_p A).
double xpa_eigenvalue(int N, int f, double p, double q);

}  // namespace qaskey
