#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qaskey/polynomials.hpp"
#include "qaskey/scalar.hpp"

namespace qaskey {

enum class IdentityId {
    T3_4,
    C3_6i,
    C3_6ii,
    C3_8i,
    C3_8ii,
    T3_13,
    C3_15i,
    C3_15ii,
    T4_5,
    T4_10,
    R4_11ii_qracah,
    R4_11ii_qhahn,
    T5_5,
    CGC_ORTHO,
    RACAH_ORTHO,
    GAUSS_ORTHO,
};

enum class Precision { double_, extended };

struct Range {
    double lo, hi;
};

struct SampleConfig {
    std::uint64_t seed = 42;
    int count = 200;
    int classical_cap = 12;  // n+j for the classical identities
    int q_cap = 10;          // n+j (or l1+l2) for the q-identities
    double tolerance = 1e-8;
    Precision precision = Precision::extended;
    int threads = 1;

    Range k{0.3, 2.5};  // k, lambda; Laguerre/Jacobi/Hahn use 2k-1, Meixner 2k
    Range phi{0.3, std::numbers::pi - 0.3};
    Range x{-3.0, 3.0};
    Range meixner_c{0.2, 0.8};
    Range hermite_ab{0.3, 2.0};
    Range q{0.2, 0.9};
    Range theta{0.2, std::numbers::pi - 0.2};
    Range lin_pr{0.7, 1.4};

    // Both sides are multiplied by this before the residual is formed.
    double scale = 1.0;
};

struct Param {
    std::string name;
    double value;
};

struct SampleRecord {
    int index = 0;
    std::vector<Param> params;
    Cx lhs{0.0};  // summed side
    Cx rhs{0.0};
    double residual = 0.0;
    std::string error;  // empty unless evaluation failed
};

struct IdentityReport {
    std::string identity;
    SampleConfig config;
    std::vector<SampleRecord> samples;
    double max_residual = 0.0;
    bool pass = false;
};

std::string identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(const std::string& name);

struct CatalogEntry {
    IdentityId id;
    std::string name;
    std::string description;
    std::string ranges;
};
std::vector<CatalogEntry> list_identities();

// Scaled residual |sum(terms) - other| / (1e-300 + sum |terms|).
IdentityReport verify(IdentityId id, const SampleConfig& config);

// Gram matrix of the first N orthonormal polynomials under the N-point Gauss
// rule; residual max |G - I|. Single sample.
IdentityReport orthogonality_suite(const Family& family, int N, const SampleConfig& config);

enum class UnitarityKind { cgc_su11, cgc_uq_su11, racah_su11, racah_uq_su11, uq_su2_overlap };
std::string unitarity_name(UnitarityKind kind);

// For each level in sizes, config.count parameter draws; residual max |M^T M - I|.
// uq_su2_overlap checks the n=0 column normalisation together with the
// Parseval relation of the overlaps.
IdentityReport unitarity_suite(UnitarityKind kind, const std::vector<int>& sizes,
                               const SampleConfig& config);

enum class Degeneration { T3_4_j0, T4_5_j0, T4_10_c0 };
std::string degeneration_name(Degeneration d);
IdentityReport degeneration_check(Degeneration d, const SampleConfig& config);

}  // namespace qaskey
