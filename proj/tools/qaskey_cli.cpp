#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qaskey/coupling.hpp"
#include "qaskey/polynomials.hpp"
#include "qaskey/spectral.hpp"
#include "qaskey/verify.hpp"
#include "report.hpp"

using namespace qaskey;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest representation that reads back to the same double.
std::string shortest(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string show(Cx z) {
    if (z.imag() == 0.0) return shortest(z.real());
    std::string im = shortest(std::abs(z.imag()));
    return shortest(z.real()) + (z.imag() < 0 ? "-" : "+") + im + "i";
}

double parse_real(const std::string& s, const std::string& what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("bad number for " + what + ": " + s);
    return v;
}

// Accepts "re", "re+imi", "re-imi", "imi" and "i".
Cx parse_complex(const std::string& s, const std::string& what) {
    if (s.empty()) throw UsageError("empty value for " + what);
    if (s.back() != 'i') return parse_real(s, what);
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;)
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    auto imag = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t[0] == '+' ? t.substr(1) : t, what);
    };
    if (split == std::string::npos) return {0.0, imag(body)};
    return {parse_real(body.substr(0, split), what), imag(body.substr(split))};
}

// Named parameters given on the command line, parsed on demand.
struct ParamSet {
    std::map<std::string, std::string> raw;

    bool has(const std::string& k) const { return raw.count(k) && !raw.at(k).empty(); }
    const std::string& get(const std::string& k) const {
        if (!has(k)) throw UsageError("missing --" + k);
        return raw.at(k);
    }
    double real(const std::string& k) const { return parse_real(get(k), "--" + k); }
    Cx cx(const std::string& k) const { return parse_complex(get(k), "--" + k); }
    int integer(const std::string& k) const {
        const double v = real(k);
        if (v != std::floor(v)) throw UsageError("--" + k + " must be an integer");
        return int(v);
    }
};

const char* param_names[] = {"lambda", "phi", "a", "b", "c", "d", "alpha", "beta", "gamma", "delta",
                             "p", "r", "N", "q", "k", "s"};

void add_params(CLI::App* app, ParamSet& ps) {
    for (const char* n : param_names) app->add_option(std::string("--") + n, ps.raw[n], std::string("parameter ") + n);
}

Family make_family(const std::string& name, const ParamSet& p) {
    if (name == "meixner-pollaczek") return MeixnerPollaczek(p.real("lambda"), p.real("phi"));
    if (name == "continuous-hahn") return ContinuousHahn(p.cx("a"), p.cx("b"), p.cx("c"), p.cx("d"));
    if (name == "hahn") return Hahn(p.real("alpha"), p.real("beta"), p.integer("N"));
    if (name == "jacobi") return Jacobi(p.real("alpha"), p.real("beta"));
    if (name == "laguerre") return Laguerre(p.real("alpha"));
    if (name == "meixner") return Meixner(p.real("beta"), p.real("c"));
    if (name == "krawtchouk") return Krawtchouk(p.real("p"), p.integer("N"));
    if (name == "charlier") return Charlier(p.real("a"));
    if (name == "hermite") return Hermite{};
    if (name == "racah") return Racah(p.real("alpha"), p.real("beta"), p.real("gamma"), p.real("delta"));
    if (name == "askey-wilson") return AskeyWilson(p.cx("a"), p.cx("b"), p.cx("c"), p.cx("d"), p.real("q"));
    if (name == "al-salam-chihara") return AlSalamChihara(p.cx("a"), p.cx("b"), p.real("q"));
    if (name == "q-hahn") return QHahn(p.real("alpha"), p.real("beta"), p.integer("N"), p.real("q"));
    if (name == "q-racah")
        return QRacah(p.real("alpha"), p.real("beta"), p.real("gamma"), p.real("delta"), p.real("q"));
    if (name == "dual-q-krawtchouk") return DualQKrawtchouk(p.real("a"), p.integer("N"), p.real("q"));
    throw UsageError("unknown family: " + name);
}

JacobiOperator make_operator(const std::string& name, const ParamSet& p) {
    if (name == "su11-xphi") return representation_operator(Su11Xphi{p.real("k"), p.real("phi")});
    if (name == "uqsu11-ys") return representation_operator(UqSu11YsA{p.real("k"), p.real("s"), p.real("q")});
    if (name == "uqsu2-xp") return representation_operator(UqSu2XpA{p.integer("N"), p.real("p"), p.real("q")});
    throw UsageError("unknown operator: " + name);
}

int run_eval(const std::string& family, const ParamSet& ps, int n, const std::string& x, bool orthonormal) {
    const Family f = make_family(family, ps);
    if (orthonormal) {
        std::cout << shortest(orthonormal_eval(f, n, parse_real(x, "--x"))) << "\n";
    } else {
        std::cout << show(eval(f, n, parse_complex(x, "--x"))) << "\n";
    }
    return 0;
}

int run_quad(const std::string& family, const std::string& op, const ParamSet& ps, int nodes,
             const std::string& out) {
    if (family.empty() == op.empty()) throw UsageError("quad needs exactly one of --family, --operator");
    JacobiOperator J;
    if (!op.empty()) {
        J = make_operator(op, ps);
    } else {
        const Family f = make_family(family, ps);
        if (const auto* aw = std::get_if<AskeyWilson>(&f))
            J = askey_wilson_operator(*aw);
        else
            J = recurrence(f);
    }
    const QuadratureRule rule = gauss_rule(J, nodes);
    std::string text = "node,weight\n";
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        text += report::number(rule.nodes[k]) + "," + report::number(rule.weights[k]) + "\n";
    if (out.empty())
        std::cout << text;
    else
        report::write_file(out, text);
    return 0;
}

int run_coeff(const std::string& kind, const std::map<std::string, double>& v, const ParamSet& ps) {
    auto i = [&](const char* k) {
        auto it = v.find(k);
        if (it == v.end()) throw UsageError(std::string("missing --") + k);
        return int(it->second);
    };
    std::optional<double> q;
    if (ps.has("q")) q = ps.real("q");
    auto print = [](double x) { std::cout << shortest(x) << "\n"; };
    if (kind == "cgc_su11" || kind == "cgc_uq_su11") {
        CgcLabel L;
        L.algebra = kind == "cgc_su11" ? Algebra::su11 : Algebra::uq_su11;
        L.k1 = ps.real("k1");
        L.k2 = ps.real("k2");
        L.j = i("j");
        L.n1 = i("n1");
        L.n2 = i("n2");
        L.n = i("n");
        L.q = q;
        print(kind == "cgc_su11" ? cgc_su11(L) : cgc_uq_su11(L));
    } else if (kind == "racah_su11" || kind == "racah_uq_su11") {
        RacahLabel L;
        L.k1 = ps.real("k1");
        L.k2 = ps.real("k2");
        L.k3 = ps.real("k3");
        L.j12 = i("j12");
        L.j23 = i("j23");
        L.j = i("j");
        L.jprime = i("jprime");
        L.q = q;
        print(kind == "racah_su11" ? racah_su11(L) : racah_uq_su11(L));
    } else if (kind == "c_norm") {
        print(c_norm(ps.real("k1"), ps.real("k2"), i("j"), ps.real("q")));
    } else if (kind == "cgc_uq_su2_n0") {
        print(cgc_uq_su2_n0(i("N1"), i("N2"), i("j"), i("n1"), i("n2"), ps.real("q")));
    } else if (kind == "overlap") {
        print(eigenbasis_overlap_uq_su2(i("N1"), i("N2"), i("j"), i("f1"), i("f2"), ps.real("p"), ps.real("q")));
    } else if (kind == "linearisation") {
        for (double c : linearisation_coeffs(i("l1"), i("l2"), ps.real("p"), ps.real("r"), ps.real("q"))) print(c);
    } else {
        throw UsageError("unknown coefficient kind: " + kind);
    }
    return 0;
}

struct VerifyArgs {
    std::string identity;
    bool all = false;
    int samples = 200;
    std::uint64_t seed = 42;
    double tol = 1e-8;
    std::string format = "json";
    std::string report_path;
    std::string precision = "extended";
    int threads = 1;
    int classical_cap = 12;
    int q_cap = 10;
};

int run_verify(const VerifyArgs& a) {
    if (a.all == !a.identity.empty()) throw UsageError("verify needs exactly one of --identity, --all");
    const auto fmt = report::parse_format(a.format);
    if (!fmt) throw UsageError("unknown format: " + a.format);
    if (a.samples < 1) throw UsageError("--samples must be positive");
    SampleConfig cfg;
    cfg.count = a.samples;
    cfg.seed = a.seed;
    cfg.tolerance = a.tol;
    cfg.threads = a.threads;
    cfg.classical_cap = a.classical_cap;
    cfg.q_cap = a.q_cap;
    if (a.precision == "double")
        cfg.precision = Precision::double_;
    else if (a.precision != "extended")
        throw UsageError("--precision must be double or extended");

    std::vector<IdentityId> ids;
    if (a.all) {
        for (const auto& e : list_identities()) ids.push_back(e.id);
    } else {
        const auto id = identity_from_name(a.identity);
        if (!id) throw UsageError("unknown identity: " + a.identity);
        ids.push_back(*id);
    }
    std::vector<IdentityReport> reports;
    bool pass = true;
    for (IdentityId id : ids) {
        reports.push_back(verify(id, cfg));
        const auto& r = reports.back();
        pass = pass && r.pass;
        std::cerr << r.identity << ": " << (r.pass ? "pass" : "FAIL") << "  max_residual=" << report::number(r.max_residual)
                  << "  samples=" << r.samples.size() << "\n";
    }
    const std::string text = report::render(reports, *fmt);
    std::string path = a.report_path;
    if (path.empty()) {
        if (const char* dir = std::getenv("QASKEY_REPORT_DIR"); dir && *dir) {
            std::filesystem::create_directories(dir);
            path = (std::filesystem::path(dir) / ((a.all ? "all" : a.identity) + "." + report::extension(*fmt))).string();
        }
    }
    if (path.empty())
        std::cout << text;
    else
        report::write_file(path, text);
    return pass ? 0 : 1;
}

int run_list() {
    for (const auto& e : list_identities()) std::cout << e.name << "\t" << e.description << "\t" << e.ranges << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qaskey: Askey-scheme polynomials, coupling coefficients and identity checks"};
    app.require_subcommand(1);

    ParamSet eval_ps;
    std::string eval_family, eval_x;
    int eval_n = 0;
    bool eval_orth = false;
    auto* ev = app.add_subcommand("eval", "evaluate a polynomial");
    ev->add_option("--family", eval_family, "family name")->required();
    ev->add_option("--n", eval_n, "degree")->required();
    ev->add_option("--x", eval_x, "argument (re+imi accepted)")->required();
    ev->add_flag("--orthonormal", eval_orth, "orthonormal normalisation");
    add_params(ev, eval_ps);

    ParamSet quad_ps;
    std::string quad_family, quad_op, quad_out;
    int quad_nodes = 0;
    auto* qd = app.add_subcommand("quad", "Gauss rule from a recurrence or representation operator");
    qd->add_option("--family", quad_family, "family with an orthonormal recurrence");
    qd->add_option("--operator", quad_op, "su11-xphi, uqsu11-ys or uqsu2-xp");
    qd->add_option("--nodes", quad_nodes, "number of nodes")->required()->check(CLI::PositiveNumber);
    qd->add_option("--out", quad_out, "CSV output path (default stdout)");
    add_params(qd, quad_ps);

    ParamSet coeff_ps;
    std::string coeff_kind;
    std::map<std::string, double> coeff_labels;
    auto* co = app.add_subcommand("coeff", "coupling and linearisation coefficients");
    co->add_option("--kind", coeff_kind,
                   "cgc_su11, cgc_uq_su11, racah_su11, racah_uq_su11, c_norm, cgc_uq_su2_n0, overlap, linearisation")
        ->required();
    for (const char* n : {"k1", "k2", "k3"}) co->add_option(std::string("--") + n, coeff_ps.raw[n]);
    for (const char* n : {"q", "p", "r"}) co->add_option(std::string("--") + n, coeff_ps.raw[n]);
    static const char* int_labels[] = {"j", "n1", "n2", "n", "N1", "N2", "j12", "j23", "jprime", "f1", "f2", "l1", "l2"};
    std::map<std::string, int> label_store;
    for (const char* n : int_labels) co->add_option(std::string("--") + n, label_store[n]);

    VerifyArgs va;
    auto* vf = app.add_subcommand("verify", "run identity checks and write a report");
    vf->add_option("--identity", va.identity, "catalog name");
    vf->add_flag("--all", va.all, "run the full catalog");
    vf->add_option("--samples", va.samples, "samples per identity");
    vf->add_option("--seed", va.seed, "64-bit seed");
    vf->add_option("--tol", va.tol, "scaled residual tolerance");
    vf->add_option("--format", va.format, "json, csv or md");
    vf->add_option("--report", va.report_path, "report path (default stdout, or $QASKEY_REPORT_DIR)");
    vf->add_option("--precision", va.precision, "double or extended");
    vf->add_option("--threads", va.threads, "worker threads");
    vf->add_option("--classical-cap", va.classical_cap, "degree cap n+j for classical identities");
    vf->add_option("--q-cap", va.q_cap, "degree cap n+j for q-identities");

    auto* ls = app.add_subcommand("list", "list the identity catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (ev->parsed()) return run_eval(eval_family, eval_ps, eval_n, eval_x, eval_orth);
        if (qd->parsed()) return run_quad(quad_family, quad_op, quad_ps, quad_nodes, quad_out);
        if (co->parsed()) {
            for (const char* n : int_labels)
                if (co->count(std::string("--") + n)) coeff_labels[n] = label_store[n];
            return run_coeff(coeff_kind, coeff_labels, coeff_ps);
        }
        if (vf->parsed()) return run_verify(va);
        if (ls->parsed()) return run_list();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedFamily& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
