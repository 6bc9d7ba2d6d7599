#include "qaskey/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "identities.hpp"
#include "qaskey/coupling.hpp"
#include "qaskey/spectral.hpp"

namespace qaskey {

namespace {

using detail::CounterRng;
using detail::Params;
using detail::Sides;

constexpr double guard = 1e-300;
constexpr double inf = std::numeric_limits<double>::infinity();

struct NameEntry {
    IdentityId id;
    const char* name;
    const char* description;
    const char* ranges;
};

const NameEntry catalog[] = {
    {IdentityId::T3_4, "T3_4", "Meixner-Pollaczek convolution with Hahn and continuous Hahn factors",
     "n+j<=12; k1,k2 in [0.3,2.5]; phi in [0.3,pi-0.3]; x1,x2 in [-3,3]"},
    {IdentityId::C3_6i, "C3_6i", "Laguerre convolution with Hahn and Jacobi factors",
     "n+j<=12; alpha=2k1-1, beta=2k2-1 with k in [0.3,2.5]; x1,x2 in [-3,3]"},
    {IdentityId::C3_6ii, "C3_6ii", "Meixner convolution with Hahn factors",
     "n+j<=12; beta1=2k1, beta2=2k2 with k in [0.3,2.5]; c in [0.2,0.8]; x1,x2 in [-3,3]"},
    {IdentityId::C3_8i, "C3_8i", "Hermite convolution with Krawtchouk factors",
     "n+j<=12; a,b in [0.3,2]; x,y in [-3,3]"},
    {IdentityId::C3_8ii, "C3_8ii", "Charlier convolution with Krawtchouk factors",
     "n+j<=12; alpha,beta in [0.3,2.5]; x,y in [-3,3]"},
    {IdentityId::T3_13, "T3_13", "continuous Hahn convolution with Racah coefficients",
     "n+j<=12; k1,k2,k3 in [0.3,2.5]; x1,x2,s in [-3,3]"},
    {IdentityId::C3_15i, "C3_15i", "Jacobi convolution with Racah coefficients",
     "n+j<=12; a,b,c = 2k-1 with k in [0.3,2.5]; x1,x2 in [-3,3]"},
    {IdentityId::C3_15ii, "C3_15ii", "Hahn convolution with Racah coefficients",
     "n+j<=12; a,b,c = 2k-1 with k in [0.3,2.5]; x1,x2,s in [-3,3]"},
    {IdentityId::T4_5, "T4_5", "Al-Salam-Chihara convolution with q-Hahn and Askey-Wilson factors",
     "n+j<=10; q in [0.2,0.9]; k1,k2 in [0.3,2.5]; s log-uniform in (q^{2k2},q^{-2k2}); theta1,theta2 in [0.2,pi-0.2]"},
    {IdentityId::T4_10, "T4_10", "Askey-Wilson convolution with q-Racah coefficients",
     "n+j<=10; q in [0.2,0.9]; a,b,c = q^k1,q^k2,q^k3 with k in [0.3,2.5]; t in (a,1/a), s in (c,1/c) log-uniform; theta1,theta2 in [0.2,pi-0.2]"},
    {IdentityId::R4_11ii_qracah, "R4_11ii_qracah", "generating identity for the q-Racah coefficients",
     "n+j<=10; q in [0.2,0.9]; alpha,beta,gamma = q^{2k}; u = q^{k2+k3-k1} s/t with s,t as in T4_10"},
    {IdentityId::R4_11ii_qhahn, "R4_11ii_qhahn", "generating identity for the q-Hahn coefficients",
     "n+j<=10; q in [0.2,0.9]; alpha,beta = q^{2k}; u as in R4_11ii_qracah"},
    {IdentityId::T5_5, "T5_5", "linearisation of Askey-Wilson products",
     "l1+l2<=10; p,r in [0.7,1.4], q in [0.2,0.9] with q*sqrt(p/r), q*sqrt(r/p), q*sqrt(pr) < 1; theta in [0.2,pi-0.2]"},
    {IdentityId::CGC_ORTHO, "CGC_ORTHO", "orthogonality of Clebsch-Gordan matrices (su(1,1), U_q(su(1,1)), U_q(su(2)) n=0)",
     "levels 0..4; k in [0.3,2.5]; q in [0.2,0.9]; p in [0.7,1.4]"},
    {IdentityId::RACAH_ORTHO, "RACAH_ORTHO", "orthogonality of Racah matrices (classical and q)",
     "levels 0..4; k1,k2,k3 in [0.3,2.5]; q in [0.2,0.9]"},
    {IdentityId::GAUSS_ORTHO, "GAUSS_ORTHO", "Gram matrices of Gauss rules from orthonormal recurrences",
     "N in 1..12; Meixner-Pollaczek, Al-Salam-Chihara (a,b in [-0.8,0.8]), dual q-Krawtchouk (a in [0.5,2])"},
};

template <class R> double scaled_residual(const Sides<R>& s, double scale, Cx& lhs, Cx& rhs) {
    using std::abs;
    const complex_t<R> sc{R(scale)};
    complex_t<R> sum(R(0));
    R mag(0);
    for (const auto& t : s.terms) {
        const complex_t<R> v = t * sc;
        sum += v;
        mag += abs(v);
    }
    const complex_t<R> other = s.other * sc;
    lhs = to_cx(sum);
    rhs = to_cx(other);
    return to_double(R(abs(sum - other) / (R(guard) + mag)));
}

double scaled_residual_any(const SampleConfig& cfg, IdentityId id, const Params& p, Cx& lhs, Cx& rhs) {
    if (cfg.precision == Precision::extended)
        return scaled_residual(detail::evaluate<Ext>(id, p), cfg.scale, lhs, rhs);
    return scaled_residual(detail::evaluate<double>(id, p), cfg.scale, lhs, rhs);
}

// Runs body(i, record) for i in [0, count); records land at their own index,
// so the result does not depend on the thread count.
void run_samples(int count, int threads, std::vector<SampleRecord>& out,
                 const std::function<void(int, SampleRecord&)>& body) {
    out.assign(std::max(count, 0), SampleRecord{});
    auto one = [&](int i) {
        SampleRecord& r = out[i];
        r.index = i;
        try {
            body(i, r);
        } catch (const std::exception& e) {
            r.error = e.what();
            r.residual = inf;
        }
    };
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) one(i);
        return;
    }
    const int T = std::min(threads, count);
    std::vector<std::thread> pool;
    for (int t = 0; t < T; ++t)
        pool.emplace_back([&, t] {
            for (int i = t; i < count; i += T) one(i);
        });
    for (auto& th : pool) th.join();
}

void finish(IdentityReport& rep) {
    rep.max_residual = 0.0;
    bool ok = true;
    for (const auto& s : rep.samples) {
        if (!s.error.empty() || !(s.residual <= rep.config.tolerance)) ok = false;
        if (std::isnan(s.residual))
            rep.max_residual = inf;
        else
            rep.max_residual = std::max(rep.max_residual, s.residual);
    }
    rep.pass = ok && rep.max_residual <= rep.config.tolerance;
}

double max_dev_from_identity(const std::vector<std::vector<double>>& G, double& trace) {
    double w = 0.0;
    trace = 0.0;
    for (std::size_t a = 0; a < G.size(); ++a) {
        trace += G[a][a];
        for (std::size_t b = 0; b < G.size(); ++b)
            w = std::max(w, std::abs(G[a][b] - (a == b ? 1.0 : 0.0)));
    }
    return w;
}

// M^T M for a square matrix held as rows, computed in R.
template <class R>
double gram_residual(const std::vector<std::vector<R>>& M, double& trace) {
    const std::size_t n = M.size();
    std::vector<std::vector<double>> G(n, std::vector<double>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            R s(0);
            for (std::size_t r = 0; r < n; ++r) s += M[r][a] * M[r][b];
            G[a][b] = to_double(s);
        }
    return max_dev_from_identity(G, trace);
}

// ---------------------------------------------------------------------------
// coupling matrices

template <class R>
double unitarity_sample(UnitarityKind kind, int level, CounterRng& rng, const SampleConfig& cfg,
                        std::vector<Param>& params, Cx& lhs, Cx& rhs) {
    auto draw = [&](const char* name, Range r) {
        const double v = rng.uniform(r.lo, r.hi);
        params.push_back({name, v});
        return v;
    };
    params.push_back({"level", double(level)});
    const int L = level;
    double trace = 0.0, res = 0.0;
    switch (kind) {
        case UnitarityKind::cgc_su11:
        case UnitarityKind::cgc_uq_su11: {
            CgcLabel lab;
            lab.k1 = draw("k1", cfg.k);
            lab.k2 = draw("k2", cfg.k);
            const bool qc = kind == UnitarityKind::cgc_uq_su11;
            if (qc) {
                lab.algebra = Algebra::uq_su11;
                lab.q = draw("q", cfg.q);
            }
            std::vector<std::vector<R>> M(L + 1, std::vector<R>(L + 1));
            for (int n1 = 0; n1 <= L; ++n1)
                for (int j = 0; j <= L; ++j) {
                    lab.n1 = n1;
                    lab.n2 = L - n1;
                    lab.j = j;
                    lab.n = L - j;
                    M[n1][j] = qc ? cgc_uq_su11<R>(lab) : cgc_su11<R>(lab);
                }
            res = gram_residual(M, trace);
            break;
        }
        case UnitarityKind::racah_su11:
        case UnitarityKind::racah_uq_su11: {
            RacahLabel lab;
            lab.k1 = draw("k1", cfg.k);
            lab.k2 = draw("k2", cfg.k);
            lab.k3 = draw("k3", cfg.k);
            const bool qc = kind == UnitarityKind::racah_uq_su11;
            if (qc) lab.q = draw("q", cfg.q);
            std::vector<std::vector<R>> M(L + 1, std::vector<R>(L + 1));
            for (int j12 = 0; j12 <= L; ++j12)
                for (int j23 = 0; j23 <= L; ++j23) {
                    lab.j12 = j12;
                    lab.j = L - j12;
                    lab.j23 = j23;
                    lab.jprime = L - j23;
                    M[j12][j23] = qc ? racah_uq_su11<R>(lab) : racah_su11<R>(lab);
                }
            res = gram_residual(M, trace);
            break;
        }
        case UnitarityKind::uq_su2_overlap: {
            const int hi = std::max(L, 4);
            const int N1 = rng.integer(L, hi), N2 = rng.integer(L, hi);
            params.push_back({"N1", double(N1)});
            params.push_back({"N2", double(N2)});
            const double q = draw("q", cfg.q);
            const double p = draw("p", cfg.lin_pr);
            R norm(0);
            for (int n1 = 0; n1 <= L; ++n1) {
                const R c = cgc_uq_su2_n0<R>(N1, N2, L, n1, L - n1, q);
                norm += c * c;
            }
            res = std::abs(to_double(norm) - 1.0);
            trace = to_double(norm);
            // Parseval for the eigenvectors of X_p A on the tensor product.
            const R Q = R(q) * R(q), Rp(p);
            auto nrm = [&](int N, int f, const R& a) {
                R s(0);
                for (int n = 0; n <= N; ++n) {
                    const R v = real(dual_q_krawtchouk_orthonormal<R>(n, complex_t<R>(R(f)), a, N, Q));
                    s += v * v;
                }
                return s;
            };
            for (int f1 = 0; f1 <= N1; ++f1)
                for (int f2 = 0; f2 <= N2; ++f2) {
                    R qp(1);
                    for (int e = 0; e < std::abs(2 * N2 - 4 * f2); ++e) qp *= R(q);
                    if (2 * N2 - 4 * f2 < 0) qp = R(1) / qp;
                    const R left = nrm(N1, f1, Rp * qp) * nrm(N2, f2, Rp);
                    R right(0);
                    for (int j = 0; j <= std::min(N1, N2); ++j) {
                        const int f = f1 + f2 - j, N = N1 + N2 - 2 * j;
                        if (f < 0 || f > N) continue;
                        const R ov = eigenbasis_overlap_uq_su2<R>(N1, N2, j, f1, f2, p, q);
                        right += ov * ov * nrm(N, f, Rp);
                    }
                    using std::abs;
                    res = std::max(res, to_double(R(abs(left - right) / left)));
                }
            lhs = Cx(trace);
            rhs = Cx(1.0);
            return res;
        }
    }
    lhs = Cx(trace);
    rhs = Cx(double(L + 1));
    return res;
}

double unitarity_any(UnitarityKind kind, int level, CounterRng& rng, const SampleConfig& cfg,
                     std::vector<Param>& params, Cx& lhs, Cx& rhs) {
    if (cfg.precision == Precision::extended)
        return unitarity_sample<Ext>(kind, level, rng, cfg, params, lhs, rhs);
    return unitarity_sample<double>(kind, level, rng, cfg, params, lhs, rhs);
}

// ---------------------------------------------------------------------------
// Gauss rules

JacobiOperator operator_for(const Family& f) {
    if (const auto* aw = std::get_if<AskeyWilson>(&f)) return askey_wilson_operator(*aw);
    return recurrence(f);
}

// Gram matrix of the recurrence polynomials under the Gauss rule. The
// polynomials are evaluated in Ext from the same double coefficients that
// built the rule; in double, forward recurrence at the outer nodes of the
// strongly graded dual q-Krawtchouk matrices loses all digits.
double gram_sample(const Family& f, int N, Cx& lhs, Cx& rhs) {
    const JacobiOperator J = operator_for(f);
    const QuadratureRule rule = gauss_rule(J, N);
    std::vector<Ext> a(N), b(N);
    for (int n = 0; n < N; ++n) {
        a[n] = Ext(n + 1 < N ? J.a(n) : 0.0);
        b[n] = Ext(J.b(n));
    }
    std::vector<std::vector<Ext>> G(N, std::vector<Ext>(N, Ext(0)));
    std::vector<Ext> p(N);
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const Ext y(rule.nodes[k]), w(rule.weights[k]);
        p[0] = Ext(1);
        if (N > 1) p[1] = (y - b[0]) / a[0];
        for (int n = 1; n + 1 < N; ++n) p[n + 1] = ((y - b[n]) * p[n] - a[n - 1] * p[n - 1]) / a[n];
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) G[i][j] += w * p[i] * p[j];
    }
    std::vector<std::vector<double>> Gd(N, std::vector<double>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) Gd[i][j] = to_double(G[i][j]);
    double trace = 0.0;
    const double res = max_dev_from_identity(Gd, trace);
    lhs = Cx(trace);
    rhs = Cx(double(N));
    return res;
}

// ---------------------------------------------------------------------------
// suite identities inside verify()

constexpr std::uint64_t unitarity_stream = 100;
constexpr std::uint64_t degeneration_stream = 200;

void suite_sample(IdentityId id, int i, const SampleConfig& cfg, SampleRecord& rec) {
    CounterRng rng(cfg.seed, std::uint64_t(id), std::uint64_t(i));
    switch (id) {
        case IdentityId::CGC_ORTHO: {
            static const UnitarityKind kinds[] = {UnitarityKind::cgc_su11, UnitarityKind::cgc_uq_su11,
                                                  UnitarityKind::uq_su2_overlap};
            const UnitarityKind k = kinds[i % 3];
            rec.params.push_back({"kind", double(int(k))});
            rec.residual = unitarity_any(k, (i / 3) % 5, rng, cfg, rec.params, rec.lhs, rec.rhs);
            break;
        }
        case IdentityId::RACAH_ORTHO: {
            const UnitarityKind k = i % 2 ? UnitarityKind::racah_uq_su11 : UnitarityKind::racah_su11;
            rec.params.push_back({"kind", double(int(k))});
            rec.residual = unitarity_any(k, (i / 2) % 5, rng, cfg, rec.params, rec.lhs, rec.rhs);
            break;
        }
        case IdentityId::GAUSS_ORTHO: {
            const int fam = i % 3;
            const int N = rng.integer(1, 12);
            rec.params.push_back({"family", double(fam)});
            rec.params.push_back({"N", double(N)});
            auto draw = [&](const char* name, double lo, double hi) {
                const double v = rng.uniform(lo, hi);
                rec.params.push_back({name, v});
                return v;
            };
            if (fam == 0) {
                const double lam = draw("lambda", cfg.k.lo, cfg.k.hi);
                const double phi = draw("phi", cfg.phi.lo, cfg.phi.hi);
                rec.residual = gram_sample(MeixnerPollaczek(lam, phi), N, rec.lhs, rec.rhs);
            } else if (fam == 1) {
                const double a = draw("a", -0.8, 0.8), b = draw("b", -0.8, 0.8);
                const double q = draw("q", cfg.q.lo, cfg.q.hi);
                rec.residual = gram_sample(AlSalamChihara(a, b, q), N, rec.lhs, rec.rhs);
            } else {
                const double a = draw("a", 0.5, 2.0);
                const double q = draw("q", cfg.q.lo, cfg.q.hi);
                rec.residual = gram_sample(DualQKrawtchouk(a, N - 1, q), N, rec.lhs, rec.rhs);
            }
            break;
        }
        default:
            throw Error("internal: not a suite identity");
    }
}

}  // namespace

std::string identity_name(IdentityId id) {
    for (const auto& e : catalog)
        if (e.id == id) return e.name;
    throw Error("unknown identity");
}

std::optional<IdentityId> identity_from_name(const std::string& name) {
    for (const auto& e : catalog)
        if (name == e.name) return e.id;
    return std::nullopt;
}

std::vector<CatalogEntry> list_identities() {
    std::vector<CatalogEntry> out;
    for (const auto& e : catalog) out.push_back({e.id, e.name, e.description, e.ranges});
    return out;
}

IdentityReport verify(IdentityId id, const SampleConfig& config) {
    if (config.count < 1) throw DomainError("verify: count must be positive");
    if (config.classical_cap < 0 || config.q_cap < 0) throw DomainError("verify: negative degree cap");
    IdentityReport rep;
    rep.identity = identity_name(id);
    rep.config = config;
    const bool suite =
        id == IdentityId::CGC_ORTHO || id == IdentityId::RACAH_ORTHO || id == IdentityId::GAUSS_ORTHO;
    run_samples(config.count, config.threads, rep.samples, [&](int i, SampleRecord& rec) {
        if (suite) {
            suite_sample(id, i, config, rec);
            return;
        }
        CounterRng rng(config.seed, std::uint64_t(id), std::uint64_t(i));
        const Params p = detail::draw(id, rng, config);
        rec.params = p.v;
        rec.residual = scaled_residual_any(config, id, p, rec.lhs, rec.rhs);
    });
    finish(rep);
    return rep;
}

IdentityReport orthogonality_suite(const Family& family, int N, const SampleConfig& config) {
    IdentityReport rep;
    rep.identity = "orthogonality:" + family_name(family);
    rep.config = config;
    rep.samples.resize(1);
    SampleRecord& rec = rep.samples[0];
    rec.params.push_back({"N", double(N)});
    try {
        rec.residual = gram_sample(family, N, rec.lhs, rec.rhs);
    } catch (const std::exception& e) {
        rec.error = e.what();
        rec.residual = inf;
    }
    finish(rep);
    return rep;
}

std::string unitarity_name(UnitarityKind kind) {
    switch (kind) {
        case UnitarityKind::cgc_su11: return "cgc_su11";
        case UnitarityKind::cgc_uq_su11: return "cgc_uq_su11";
        case UnitarityKind::racah_su11: return "racah_su11";
        case UnitarityKind::racah_uq_su11: return "racah_uq_su11";
        case UnitarityKind::uq_su2_overlap: return "uq_su2_overlap";
    }
    return "?";
}

IdentityReport unitarity_suite(UnitarityKind kind, const std::vector<int>& sizes, const SampleConfig& config) {
    IdentityReport rep;
    rep.identity = "unitarity:" + unitarity_name(kind);
    rep.config = config;
    const int per = config.count;
    const int total = per * int(sizes.size());
    run_samples(total, config.threads, rep.samples, [&](int i, SampleRecord& rec) {
        const int level = sizes[i / per];
        if (level < 0) throw DomainError("unitarity_suite: negative level");
        CounterRng rng(config.seed, unitarity_stream + std::uint64_t(kind), std::uint64_t(i));
        rec.residual = unitarity_any(kind, level, rng, config, rec.params, rec.lhs, rec.rhs);
    });
    finish(rep);
    return rep;
}

std::string degeneration_name(Degeneration d) {
    switch (d) {
        case Degeneration::T3_4_j0: return "T3_4_j0";
        case Degeneration::T4_5_j0: return "T4_5_j0";
        case Degeneration::T4_10_c0: return "T4_10_c0";
    }
    return "?";
}

IdentityReport degeneration_check(Degeneration d, const SampleConfig& config) {
    IdentityReport rep;
    rep.identity = "degeneration:" + degeneration_name(d);
    rep.config = config;
    run_samples(config.count, config.threads, rep.samples, [&](int i, SampleRecord& rec) {
        CounterRng rng(config.seed, degeneration_stream + std::uint64_t(d), std::uint64_t(i));
        if (d == Degeneration::T4_10_c0) {
            const Params p = detail::draw(IdentityId::T4_5, rng, config);
            rec.params = p.v;
            auto run = [&]<class R>(R) {
                using std::abs;
                const Sides<R> a = detail::evaluate<R>(IdentityId::T4_5, p);
                const Sides<R> b = detail::evaluate_t4_10_from_t4_5<R>(p);
                complex_t<R> sa(R(0)), sb(R(0));
                R mag(0);
                for (const auto& t : a.terms) {
                    sa += t;
                    mag += abs(t);
                }
                for (const auto& t : b.terms) sb += t;
                rec.lhs = to_cx(sb);
                rec.rhs = to_cx(sa);
                const R e1 = abs(sa - sb), e2 = abs(a.other - b.other);
                return to_double(R((e1 > e2 ? e1 : e2) / (R(guard) + mag)));
            };
            rec.residual = config.precision == Precision::extended ? run(Ext(0)) : run(0.0);
            return;
        }
        const IdentityId id = d == Degeneration::T3_4_j0 ? IdentityId::T3_4 : IdentityId::T4_5;
        const Params p = detail::draw_j0(id, rng, config);
        rec.params = p.v;
        rec.residual = scaled_residual_any(config, id, p, rec.lhs, rec.rhs);
    });
    finish(rep);
    return rep;
}

}  // namespace qaskey
