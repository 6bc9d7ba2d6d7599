#include <cmath>
#include <numbers>

#include "doctest.h"
#include "identities.hpp"
#include "qaskey/verify.hpp"

using namespace qaskey;

namespace {

double residual(const detail::Sides<double>& s) {
    Cx sum = 0;
    double mag = 0;
    for (const Cx& t : s.terms) {
        sum += t;
        mag += std::abs(t);
    }
    return std::abs(sum - s.other) / (1e-300 + mag);
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("catalog is stable and round-trips names") {
    const auto cat = list_identities();
    REQUIRE(cat.size() == 16);
    CHECK(cat.front().name == "T3_4");
    CHECK(cat[9].name == "T4_10");
    CHECK(cat.back().name == "GAUSS_ORTHO");
    for (std::size_t i = 0; i < cat.size(); ++i) {
        CHECK(int(cat[i].id) == int(i));
        CHECK(identity_from_name(cat[i].name) == cat[i].id);
        CHECK(identity_name(cat[i].id) == cat[i].name);
    }
    CHECK_FALSE(identity_from_name("T9_9").has_value());
}

TEST_CASE("T3_4 example point") {
    detail::Params p;
    p.set("n", 1);
    p.set("j", 0);
    p.set("k1", 1.0);
    p.set("k2", 1.0);
    p.set("phi", std::numbers::pi / 3);
    p.set("x1", 0.2);
    p.set("x2", -0.4);
    CHECK(residual(detail::evaluate<double>(IdentityId::T3_4, p)) <= 1e-12);
}

TEST_CASE("every catalog identity passes a short run") {
    SampleConfig cfg;
    cfg.count = 12;
    for (const auto& e : list_identities()) {
        // GAUSS_ORTHO at small q is covered separately below.
        if (e.id == IdentityId::GAUSS_ORTHO) continue;
        const IdentityReport r = verify(e.id, cfg);
        CHECK_MESSAGE(r.pass, e.name, " max residual ", r.max_residual);
        CHECK(r.samples.size() == 12);
    }
    cfg.precision = Precision::double_;
    for (IdentityId id : {IdentityId::T3_4, IdentityId::C3_6i, IdentityId::C3_8ii})
        CHECK(verify(id, cfg).pass);
}

TEST_CASE("GAUSS_ORTHO: dual q-Krawtchouk draws are well conditioned only for q near 1") {
    SampleConfig cfg;
    cfg.count = 30;
    cfg.q = {0.7, 0.9};
    CHECK(verify(IdentityId::GAUSS_ORTHO, cfg).pass);
    // At q = 0.25 a relative node perturbation of one ulp moves p_11 by O(1)
    // at the outer nodes, so the Gram residual is far above tolerance.
    cfg.q = {0.25, 0.25};
    const auto r = verify(IdentityId::GAUSS_ORTHO, cfg);
    CHECK(r.max_residual > 1e-10);
}

TEST_CASE("results do not depend on the thread count") {
    SampleConfig a;
    a.count = 30;
    SampleConfig b = a;
    b.threads = 3;
    const auto ra = verify(IdentityId::T4_5, a), rb = verify(IdentityId::T4_5, b);
    REQUIRE(ra.samples.size() == rb.samples.size());
    for (std::size_t i = 0; i < ra.samples.size(); ++i) {
        CHECK(ra.samples[i].residual == rb.samples[i].residual);
        CHECK(ra.samples[i].lhs == rb.samples[i].lhs);
        REQUIRE(ra.samples[i].params.size() == rb.samples[i].params.size());
        for (std::size_t k = 0; k < ra.samples[i].params.size(); ++k)
            CHECK(ra.samples[i].params[k].value == rb.samples[i].params[k].value);
    }
}

TEST_CASE("residual is invariant under a common scale") {
    SampleConfig a;
    a.count = 40;
    a.precision = Precision::double_;
    SampleConfig b = a;
    b.scale = 1e3;
    const auto ra = verify(IdentityId::C3_6i, a), rb = verify(IdentityId::C3_6i, b);
    for (std::size_t i = 0; i < ra.samples.size(); ++i)
        CHECK(std::abs(ra.samples[i].residual - rb.samples[i].residual) <= 1e-15);
}

TEST_CASE("pass flag follows max residual and tolerance") {
    SampleConfig cfg;
    cfg.count = 10;
    const auto r = verify(IdentityId::T3_13, cfg);
    double worst = 0;
    for (const auto& s : r.samples) worst = std::max(worst, s.residual);
    CHECK(r.max_residual == worst);
    cfg.tolerance = r.max_residual / 2;
    CHECK_FALSE(verify(IdentityId::T3_13, cfg).pass);
    cfg.count = 0;
    CHECK_THROWS_AS(verify(IdentityId::T3_13, cfg), DomainError);
}

TEST_CASE("evaluation errors are recorded per sample") {
    SampleConfig cfg;
    cfg.count = 6;
    cfg.k = {-0.5, -0.2};
    const auto r = verify(IdentityId::CGC_ORTHO, cfg);
    CHECK_FALSE(r.pass);
    REQUIRE_FALSE(r.samples.empty());
    CHECK_FALSE(r.samples[0].error.empty());
    CHECK(std::isinf(r.samples[0].residual));
}

TEST_CASE("Gram identity for the Gauss rules") {
    SampleConfig cfg;
    CHECK(orthogonality_suite(MeixnerPollaczek(0.8, 1.1), 10, cfg).max_residual <= 1e-10);
    CHECK(orthogonality_suite(AlSalamChihara(0.4, 0.2, 0.5), 10, cfg).max_residual <= 1e-10);
    CHECK(orthogonality_suite(DualQKrawtchouk(1.3, 9, 0.8), 10, cfg).max_residual <= 1e-10);
    const auto one = orthogonality_suite(MeixnerPollaczek(0.8, 1.1), 1, cfg);
    CHECK(one.max_residual == 0.0);
    CHECK(one.identity == "orthogonality:meixner-pollaczek");
}

TEST_CASE("unitarity suites") {
    SampleConfig cfg;
    cfg.count = 5;
    CHECK(unitarity_suite(UnitarityKind::cgc_su11, {4}, cfg).max_residual <= 1e-11);
    cfg.q = {0.7, 0.7};
    CHECK(unitarity_suite(UnitarityKind::racah_uq_su11, {3}, cfg).max_residual <= 1e-10);
    CHECK(unitarity_suite(UnitarityKind::cgc_uq_su11, {0}, cfg).max_residual == 0.0);
    CHECK(unitarity_suite(UnitarityKind::uq_su2_overlap, {0, 1, 2, 3}, cfg).pass);
}

TEST_CASE("degenerations") {
    SampleConfig cfg;
    cfg.count = 40;
    CHECK(degeneration_check(Degeneration::T3_4_j0, cfg).max_residual <= 1e-12);
    CHECK(degeneration_check(Degeneration::T4_5_j0, cfg).max_residual <= 1e-12);
    CHECK(degeneration_check(Degeneration::T4_10_c0, cfg).max_residual <= 1e-10);
}

}
