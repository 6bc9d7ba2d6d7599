#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qaskey/coupling.hpp"
#include "qaskey/polynomials.hpp"
#include "qaskey/spectral.hpp"
#include "qaskey/verify.hpp"

namespace py = pybind11;
using namespace qaskey;

namespace {

// Family types have no default constructor, so the stl variant caster does not
// apply; dispatch on the bound class instead.
template <class T> bool try_family(py::handle h, std::optional<Family>& out) {
    if (!py::isinstance<T>(h)) return false;
    out.emplace(h.cast<T>());
    return true;
}

Family to_family(py::handle h) {
    std::optional<Family> f;
    try_family<MeixnerPollaczek>(h, f) || try_family<ContinuousHahn>(h, f) || try_family<Hahn>(h, f) ||
        try_family<Jacobi>(h, f) || try_family<Laguerre>(h, f) || try_family<Meixner>(h, f) ||
        try_family<Krawtchouk>(h, f) || try_family<Charlier>(h, f) || try_family<Hermite>(h, f) ||
        try_family<Racah>(h, f) || try_family<AskeyWilson>(h, f) || try_family<AlSalamChihara>(h, f) ||
        try_family<QHahn>(h, f) || try_family<QRacah>(h, f) || try_family<DualQKrawtchouk>(h, f);
    if (!f) throw py::type_error("expected a qaskey polynomial family");
    return *f;
}

JacobiOperator operator_for(const Family& f) {
    if (const auto* aw = std::get_if<AskeyWilson>(&f)) return askey_wilson_operator(*aw);
    return recurrence(f);
}

py::tuple rule_tuple(const QuadratureRule& r) { return py::make_tuple(r.nodes, r.weights); }

py::dict report_dict(const IdentityReport& r) {
    py::list samples;
    for (const auto& s : r.samples) {
        py::dict params;
        for (const auto& p : s.params) params[py::str(p.name)] = p.value;
        py::dict d;
        d["index"] = s.index;
        d["params"] = params;
        d["lhs"] = s.lhs;
        d["rhs"] = s.rhs;
        d["residual"] = s.residual;
        if (!s.error.empty()) d["error"] = s.error;
        samples.append(d);
    }
    py::dict out;
    out["identity"] = r.identity;
    out["seed"] = r.config.seed;
    out["count"] = r.config.count;
    out["tolerance"] = r.config.tolerance;
    out["precision"] = r.config.precision == Precision::extended ? "extended" : "double";
    out["samples"] = samples;
    out["max_residual"] = r.max_residual;
    out["pass"] = r.pass;
    return out;
}

SampleConfig make_config(int samples, std::uint64_t seed, double tol, const std::string& precision, int threads) {
    SampleConfig c;
    c.count = samples;
    c.seed = seed;
    c.tolerance = tol;
    c.threads = threads;
    if (precision == "double")
        c.precision = Precision::double_;
    else if (precision != "extended")
        throw DomainError("precision must be 'double' or 'extended'");
    return c;
}

template <class T, class... Args> void family_class(py::module_& m, const char* name) {
    py::class_<T>(m, name).def(py::init<Args...>());
}

}  // namespace

PYBIND11_MODULE(qaskey, m) {
    m.doc() = "Askey-scheme polynomials, coupling coefficients and identity checks";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", domain.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<RealificationError>(m, "RealificationError", base.ptr());
    py::register_exception<UnsupportedFamily>(m, "UnsupportedFamily", base.ptr());

    family_class<MeixnerPollaczek, double, double>(m, "MeixnerPollaczek");
    family_class<ContinuousHahn, Cx, Cx, Cx, Cx>(m, "ContinuousHahn");
    family_class<Hahn, double, double, int>(m, "Hahn");
    family_class<Jacobi, double, double>(m, "Jacobi");
    family_class<Laguerre, double>(m, "Laguerre");
    family_class<Meixner, double, double>(m, "Meixner");
    family_class<Krawtchouk, double, int>(m, "Krawtchouk");
    family_class<Charlier, double>(m, "Charlier");
    py::class_<Hermite>(m, "Hermite").def(py::init<>());
    family_class<Racah, double, double, double, double>(m, "Racah");
    family_class<AskeyWilson, Cx, Cx, Cx, Cx, double>(m, "AskeyWilson");
    family_class<AlSalamChihara, Cx, Cx, double>(m, "AlSalamChihara");
    family_class<QHahn, double, double, int, double>(m, "QHahn");
    family_class<QRacah, double, double, double, double, double>(m, "QRacah");
    family_class<DualQKrawtchouk, double, int, double>(m, "DualQKrawtchouk");

    m.def("family_name", [](py::handle f) { return family_name(to_family(f)); }, py::arg("family"));
    m.def(
        "eval", [](py::handle f, int n, Cx x) { return eval(to_family(f), n, x); }, py::arg("family"), py::arg("n"),
        py::arg("x"), "polynomial value p_n(x)");
    m.def(
        "orthonormal_eval", [](py::handle f, int n, double x) { return orthonormal_eval(to_family(f), n, x); },
        py::arg("family"), py::arg("n"), py::arg("x"));
    m.def(
        "weight", [](py::handle f, double point) { return weight(to_family(f), point); }, py::arg("family"),
        py::arg("point"));

    m.def(
        "gauss_rule", [](py::handle f, int N) { return rule_tuple(gauss_rule(operator_for(to_family(f)), N)); },
        py::arg("family"), py::arg("N"), "(nodes, weights) in the family's spectral variable");
    m.def(
        "operator_gauss_rule",
        [](const std::string& kind, int N, double k, double phi, double s, double q, int dim, double p) {
            RepnOperatorSpec spec;
            if (kind == "su11-xphi")
                spec = Su11Xphi{k, phi};
            else if (kind == "uqsu11-ys")
                spec = UqSu11YsA{k, s, q};
            else if (kind == "uqsu2-xp")
                spec = UqSu2XpA{dim, p, q};
            else
                throw DomainError("unknown operator: " + kind);
            return rule_tuple(gauss_rule(representation_operator(spec), N));
        },
        py::arg("kind"), py::arg("N"), py::kw_only(), py::arg("k") = 1.0, py::arg("phi") = 1.0, py::arg("s") = 1.0,
        py::arg("q") = 0.5, py::arg("dim") = 0, py::arg("p") = 1.0);
    m.def("xpa_eigenvalue", &xpa_eigenvalue, py::arg("N"), py::arg("f"), py::arg("p"), py::arg("q"));

    m.def(
        "cgc_su11",
        [](double k1, double k2, int n1, int n2, int n, int j) {
            CgcLabel L;
            L.k1 = k1, L.k2 = k2, L.n1 = n1, L.n2 = n2, L.n = n, L.j = j;
            return cgc_su11(L);
        },
        py::arg("k1"), py::arg("k2"), py::arg("n1"), py::arg("n2"), py::arg("n"), py::arg("j"));
    m.def(
        "cgc_uq_su11",
        [](double k1, double k2, int n1, int n2, int n, int j, double q) {
            CgcLabel L;
            L.algebra = Algebra::uq_su11;
            L.k1 = k1, L.k2 = k2, L.n1 = n1, L.n2 = n2, L.n = n, L.j = j, L.q = q;
            return cgc_uq_su11(L);
        },
        py::arg("k1"), py::arg("k2"), py::arg("n1"), py::arg("n2"), py::arg("n"), py::arg("j"), py::arg("q"));
    m.def(
        "racah_su11",
        [](double k1, double k2, double k3, int j12, int j23, int j, int jprime) {
            RacahLabel L;
            L.k1 = k1, L.k2 = k2, L.k3 = k3, L.j12 = j12, L.j23 = j23, L.j = j, L.jprime = jprime;
            return racah_su11(L);
        },
        py::arg("k1"), py::arg("k2"), py::arg("k3"), py::arg("j12"), py::arg("j23"), py::arg("j"), py::arg("jprime"));
    m.def(
        "racah_uq_su11",
        [](double k1, double k2, double k3, int j12, int j23, int j, int jprime, double q) {
            RacahLabel L;
            L.k1 = k1, L.k2 = k2, L.k3 = k3, L.j12 = j12, L.j23 = j23, L.j = j, L.jprime = jprime, L.q = q;
            return racah_uq_su11(L);
        },
        py::arg("k1"), py::arg("k2"), py::arg("k3"), py::arg("j12"), py::arg("j23"), py::arg("j"), py::arg("jprime"),
        py::arg("q"));
    m.def("c_norm", static_cast<double (*)(double, double, int, double)>(&c_norm), py::arg("k1"), py::arg("k2"),
          py::arg("j"), py::arg("q"));
    m.def("cgc_uq_su2_n0", static_cast<double (*)(int, int, int, int, int, double)>(&cgc_uq_su2_n0), py::arg("N1"),
          py::arg("N2"), py::arg("j"), py::arg("n1"), py::arg("n2"), py::arg("q"));
    m.def("eigenbasis_overlap_uq_su2",
          static_cast<double (*)(int, int, int, int, int, double, double)>(&eigenbasis_overlap_uq_su2), py::arg("N1"),
          py::arg("N2"), py::arg("j"), py::arg("f1"), py::arg("f2"), py::arg("p"), py::arg("q"));
    m.def("linearisation_coeffs", static_cast<std::vector<double> (*)(int, int, double, double, double)>(&linearisation_coeffs),
          py::arg("l1"), py::arg("l2"), py::arg("p"), py::arg("r"), py::arg("q"));

    m.def("list_identities", [] {
        py::list out;
        for (const auto& e : list_identities()) out.append(py::make_tuple(e.name, e.description));
        return out;
    });
    m.def(
        "verify",
        [](const std::string& identity, int samples, std::uint64_t seed, double tol, const std::string& precision,
           int threads) {
            const auto id = identity_from_name(identity);
            if (!id) throw DomainError("unknown identity: " + identity);
            const SampleConfig cfg = make_config(samples, seed, tol, precision, threads);
            IdentityReport r;
            {
                py::gil_scoped_release release;
                r = verify(*id, cfg);
            }
            return report_dict(r);
        },
        py::arg("identity"), py::arg("samples") = 200, py::arg("seed") = 42, py::arg("tol") = 1e-8,
        py::arg("precision") = "extended", py::arg("threads") = 1);
}
