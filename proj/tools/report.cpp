#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#ifndef QASKEY_VERSION
#define QASKEY_VERSION "unknown"
#endif

namespace qaskey::report {

namespace {

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_number(double v) { return std::isfinite(v) ? number(v) : "null"; }

std::string pair(double a, double b) { return "[" + json_number(a) + ", " + json_number(b) + "]"; }

std::string precision_name(Precision p) { return p == Precision::extended ? "extended" : "double"; }

void ranges_json(std::ostringstream& o, const SampleConfig& c) {
    const std::pair<const char*, Range> rs[] = {
        {"k", c.k},         {"phi", c.phi},     {"x", c.x},         {"meixner_c", c.meixner_c},
        {"hermite_ab", c.hermite_ab}, {"q", c.q}, {"theta", c.theta}, {"lin_pr", c.lin_pr},
    };
    o << "{";
    bool first = true;
    for (const auto& [name, r] : rs) {
        o << (first ? "" : ", ") << quoted(name) << ": " << pair(r.lo, r.hi);
        first = false;
    }
    o << "}";
}

void report_json(std::ostringstream& o, const IdentityReport& r, const std::string& ind) {
    const SampleConfig& c = r.config;
    const std::string in = ind + "  ";
    o << "{\n";
    o << in << "\"tool_version\": " << quoted(QASKEY_VERSION) << ",\n";
    o << in << "\"identity\": " << quoted(r.identity) << ",\n";
    o << in << "\"seed\": " << c.seed << ",\n";
    o << in << "\"count\": " << c.count << ",\n";
    o << in << "\"tolerance\": " << json_number(c.tolerance) << ",\n";
    o << in << "\"precision\": " << quoted(precision_name(c.precision)) << ",\n";
    o << in << "\"degree_caps\": {\"classical\": " << c.classical_cap << ", \"q\": " << c.q_cap << "},\n";
    o << in << "\"ranges\": ";
    ranges_json(o, c);
    o << ",\n";
    o << in << "\"samples\": [";
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        const SampleRecord& s = r.samples[i];
        o << (i ? ",\n" : "\n") << in << "  {\"index\": " << s.index << ", \"params\": {";
        for (std::size_t k = 0; k < s.params.size(); ++k)
            o << (k ? ", " : "") << quoted(s.params[k].name) << ": " << json_number(s.params[k].value);
        o << "}, \"lhs\": " << pair(s.lhs.real(), s.lhs.imag()) << ", \"rhs\": " << pair(s.rhs.real(), s.rhs.imag())
          << ", \"residual\": " << json_number(s.residual);
        if (!s.error.empty()) o << ", \"error\": " << quoted(s.error);
        o << "}";
    }
    o << (r.samples.empty() ? "],\n" : "\n" + in + "],\n");
    o << in << "\"max_residual\": " << json_number(r.max_residual) << ",\n";
    o << in << "\"pass\": " << (r.pass ? "true" : "false") << "\n";
    o << ind << "}";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::optional<Format> parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "md") return Format::md;
    return std::nullopt;
}

std::string extension(Format f) {
    switch (f) {
        case Format::json: return "json";
        case Format::csv: return "csv";
        case Format::md: return "md";
    }
    return "txt";
}

std::string number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string to_json(const std::vector<IdentityReport>& reports) {
    std::ostringstream o;
    if (reports.size() == 1) {
        report_json(o, reports[0], "");
    } else {
        o << "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            o << (i ? ",\n  " : "\n  ");
            report_json(o, reports[i], "  ");
        }
        o << "\n]";
    }
    o << "\n";
    return o.str();
}

std::string to_csv(const std::vector<IdentityReport>& reports) {
    std::ostringstream o;
    o << "identity,index,params,lhs_re,lhs_im,rhs_re,rhs_im,residual,error\n";
    for (const auto& r : reports)
        for (const auto& s : r.samples) {
            std::string params;
            for (std::size_t k = 0; k < s.params.size(); ++k)
                params += (k ? ";" : "") + s.params[k].name + "=" + number(s.params[k].value);
            o << csv_field(r.identity) << ',' << s.index << ',' << csv_field(params) << ','
              << number(s.lhs.real()) << ',' << number(s.lhs.imag()) << ',' << number(s.rhs.real()) << ','
              << number(s.rhs.imag()) << ',' << number(s.residual) << ',' << csv_field(s.error) << '\n';
        }
    return o.str();
}

std::string to_md(const std::vector<IdentityReport>& reports) {
    std::ostringstream o;
    o << "| identity | samples | errors | max residual | tolerance | pass |\n";
    o << "|---|---:|---:|---:|---:|:---:|\n";
    for (const auto& r : reports) {
        int errors = 0;
        for (const auto& s : r.samples) errors += s.error.empty() ? 0 : 1;
        char res[32], tol[32];
        std::snprintf(res, sizeof res, "%.3e", r.max_residual);
        std::snprintf(tol, sizeof tol, "%.1e", r.config.tolerance);
        o << "| " << r.identity << " | " << r.samples.size() << " | " << errors << " | " << res << " | " << tol
          << " | " << (r.pass ? "yes" : "**no**") << " |\n";
    }
    return o.str();
}

std::string render(const std::vector<IdentityReport>& reports, Format f) {
    switch (f) {
        case Format::json: return to_json(reports);
        case Format::csv: return to_csv(reports);
        case Format::md: return to_md(reports);
    }
    return {};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << content;
    out.close();
    if (!out) throw Error("write to " + path + " failed");
}

void write_report(const IdentityReport& report, const std::string& path, Format f) {
    write_file(path, render({report}, f));
}

}  // namespace qaskey::report
