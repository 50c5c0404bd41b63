// Command-line front end: evaluation, tabulation, identity/integral suites.
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gp/errors.hpp"
#include "gp/expansions.hpp"
#include "gp/genpoly.hpp"
#include "gp/identities.hpp"
#include "gp/suites.hpp"

namespace {

using gp::Complex;

// ---- deterministic serialization -------------------------------------------

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string jcomplex(Complex v) {
    return "{\"re\":" + fmt(v.real()) + ",\"im\":" + fmt(v.imag()) + "}";
}

struct EvalRecord {
    Complex z, q, value;
    double est_error;
    std::string method;
};

std::string eval_json(const EvalRecord& r) {
    return "{\"z\":" + jcomplex(r.z) + ",\"q\":" + jcomplex(r.q) +
           ",\"value\":" + jcomplex(r.value) +
           ",\"est_error\":" + fmt(r.est_error) +
           ",\"method\":\"" + r.method + "\"}";
}

const char* kCsvHeader =
    "z_re,z_im,q_re,q_im,value_re,value_im,est_error,method";

std::string eval_csv(const EvalRecord& r) {
    return fmt(r.z.real()) + "," + fmt(r.z.imag()) + "," + fmt(r.q.real()) +
           "," + fmt(r.q.imag()) + "," + fmt(r.value.real()) + "," +
           fmt(r.value.imag()) + "," + fmt(r.est_error) + "," + r.method;
}

std::string eval_text(const EvalRecord& r) {
    std::ostringstream os;
    os << "psi(z=" << r.z << ", q=" << r.q << ") = " << fmt(r.value.real());
    if (r.value.imag() != 0.0) os << (r.value.imag() < 0 ? " " : " +") << fmt(r.value.imag()) << "i";
    os << "   [est_error " << fmt(r.est_error) << ", " << r.method << "]";
    return os.str();
}

std::string report_json(const gp::IdentityReport& r) {
    std::string inputs;
    for (const auto& [name, value] : r.inputs) {
        if (!inputs.empty()) inputs += ",";
        inputs += "\"" + name + "\":" + jcomplex(value);
    }
    return "{\"identity_id\":\"" + r.identity_id + "\",\"inputs\":{" + inputs +
           "},\"lhs\":" + jcomplex(r.lhs) + ",\"rhs\":" + jcomplex(r.rhs) +
           ",\"abs_residual\":" + fmt(r.abs_residual) +
           ",\"rel_residual\":" + fmt(r.rel_residual) +
           ",\"tol\":" + fmt(r.tol) +
           ",\"pass\":" + (r.pass ? "true" : "false") + "}";
}

std::string report_text(const gp::IdentityReport& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS " : "FAIL ") << r.identity_id << " (";
    bool first = true;
    for (const auto& [name, value] : r.inputs) {
        if (!first) os << ", ";
        first = false;
        os << name << "=" << value.real();
        if (value.imag() != 0.0) os << (value.imag() < 0 ? "" : "+") << value.imag() << "i";
    }
    os << ") abs=" << fmt(r.abs_residual) << " rel=" << fmt(r.rel_residual)
       << " tol=" << fmt(r.tol);
    return os.str();
}

int emit_reports(const std::vector<gp::IdentityReport>& reports,
                 const std::string& format) {
    bool all_pass = true;
    if (format == "json") {
        std::string out = "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) out += ",";
            out += report_json(reports[i]);
        }
        std::cout << out << "]\n";
    } else { // text and csv fall back to one line per report
        for (const auto& r : reports) std::cout << report_text(r) << "\n";
    }
    for (const auto& r : reports) all_pass = all_pass && r.pass;
    return all_pass ? 0 : 1;
}

// ---- complex argument parsing: "a", "bi", "a+bi", "a-bi" -------------------

bool parse_complex(const std::string& text, Complex& out) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return false;

    bool has_i = s.back() == 'i' || s.back() == 'I';
    if (has_i) s.pop_back();

    // find the +/- that splits real and imaginary parts (not a leading sign,
    // not an exponent sign)
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')
            split = k; // keep the last one: "1e-3-2i" splits at the second '-'
    }

    auto to_double = [](const std::string& p, double& v) {
        if (p.empty() || p == "+") { v = 1.0; return true; }
        if (p == "-") { v = -1.0; return true; }
        std::size_t pos = 0;
        try { v = std::stod(p, &pos); } catch (...) { return false; }
        return pos == p.size();
    };

    double re = 0.0, im = 0.0;
    if (has_i && split != std::string::npos) {
        if (!to_double(s.substr(0, split), re)) return false;
        if (!to_double(s.substr(split), im)) return false;
    } else if (has_i) {
        re = 0.0;
        if (!to_double(s, im)) return false;
    } else {
        if (split != std::string::npos) return false; // "1+2" without i
        if (!to_double(s, re)) return false;
    }
    out = Complex(re, im);
    return true;
}

// ---- evaluation dispatch ----------------------------------------------------

EvalRecord evaluate(Complex z, Complex q, const std::string& method, double tol) {
    gp::EvalConfig cfg;
    cfg.target_tol = tol;
    if (method == "direct") {
        gp::GenPolyValue v = gp::gen_polygamma(z, q, cfg);
        return {z, q, v.value, v.est_error, "direct"};
    }
    if (method == "taylor") {
        // expansion about q = 1, radius 1
        gp::SeriesResult v = gp::taylor_psi(z, q - 1.0, tol, cfg);
        return {z, q, v.value, v.est_truncation, "taylor"};
    }
    if (method == "fourier") {
        if (q.imag() != 0.0)
            throw gp::domain_error("--method fourier requires real q in [0,1]");
        gp::SeriesResult v = gp::fourier_psi(z, q.real(), tol);
        return {z, q, v.value, v.est_truncation, "fourier"};
    }
    if (method == "asymptotic") {
        if (q.imag() != 0.0)
            throw gp::domain_error("--method asymptotic requires real q >= 10");
        gp::AsymptoticResult v = gp::asymptotic_psi(z, q.real(), 40);
        return {z, q, v.value, v.first_omitted, "asymptotic"};
    }
    // auto: direct for |q| >= 1, shift-reduced direct below
    if (std::abs(q) >= 1.0) {
        gp::GenPolyValue v = gp::gen_polygamma(z, q, cfg);
        return {z, q, v.value, v.est_error, "direct"};
    }
    gp::GenPolyValue v = gp::gen_polygamma(z, q + 1.0, cfg);
    return {z, q, v.value - gp::shift_rhs(z, q), v.est_error, "shift-direct"};
}

int emit_evals(const std::vector<EvalRecord>& records, const std::string& format) {
    if (format == "json") {
        std::string out = records.size() == 1 ? eval_json(records[0]) : "[";
        if (records.size() != 1) {
            for (std::size_t i = 0; i < records.size(); ++i) {
                if (i) out += ",";
                out += eval_json(records[i]);
            }
            out += "]";
        }
        std::cout << out << "\n";
    } else if (format == "csv") {
        std::cout << kCsvHeader << "\n";
        for (const auto& r : records) std::cout << eval_csv(r) << "\n";
    } else {
        for (const auto& r : records) std::cout << eval_text(r) << "\n";
    }
    return 0;
}

// Cross-method agreement spot checks for the documented overlap regions.
std::vector<gp::IdentityReport> expansions_demo(double tol) {
    std::vector<gp::IdentityReport> reports;
    auto compare = [&](const char* id, Complex z, Complex q, const char* method) {
        EvalRecord a = evaluate(z, q, "auto", 1e-13);
        // the fourier tail bound cannot reach 1e-10 within the term cap
        EvalRecord b = evaluate(z, q, method,
                                method == std::string("fourier") ? 2e-9 : 1e-10);
        reports.push_back(gp::make_report(id, {{"z", z}, {"q", q}}, b.value,
                                          a.value, tol));
    };
    compare("demo-taylor-vs-auto", Complex(0.7, 0.3), 1.5, "taylor");
    compare("demo-taylor-vs-auto", -2.2, 0.4, "taylor");
    compare("demo-taylor-vs-auto", 1.5, 1.8, "taylor");
    compare("demo-fourier-vs-auto", -2.5, 0.25, "fourier");
    compare("demo-fourier-vs-auto", -3.0, 0.8, "fourier");
    compare("demo-asymptotic-vs-auto", -1.5, 50.0, "asymptotic");
    compare("demo-asymptotic-vs-auto", Complex(1.3, 0.4), 40.0, "asymptotic");
    // the two halves of the auto dispatch agree across the |q| = 1 seam
    EvalRecord lo = evaluate(1.4, 0.999999, "auto", 1e-13);
    EvalRecord hi = evaluate(1.4, 1.0, "auto", 1e-13);
    reports.push_back(gp::make_report("demo-dispatch-seam",
                                      {{"z", 1.4}, {"q", 0.999999}},
                                      lo.value, hi.value, 2e-5));
    return reports;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized polygamma evaluator and identity checker"};
    app.require_subcommand(1);

    std::string z_str = "0", q_str = "1", q_start_str, q_end_str;
    std::string method = "auto", format = "json", suite = "all";
    double tol = 1e-12;
    int steps = 2, samples = 50;
    std::uint64_t seed = 42;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "target tolerance")
            ->check(CLI::Range(1e-14, 1e-2));
        cmd->add_option("--format", format)
            ->check(CLI::IsMember({"json", "csv", "text"}));
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate psi(z,q)");
    eval->add_option("--z", z_str, "order, complex as a+bi");
    eval->add_option("--q", q_str, "argument, complex as a+bi");
    eval->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "direct", "taylor", "fourier", "asymptotic"}));
    add_common(eval);

    CLI::App* table = app.add_subcommand("table", "tabulate psi(z,q) over a q range");
    table->add_option("--z", z_str);
    table->add_option("--q-start", q_start_str)->required();
    table->add_option("--q-end", q_end_str)->required();
    table->add_option("--steps", steps)->check(CLI::Range(2, 1000000));
    table->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "direct", "taylor", "fourier", "asymptotic"}));
    add_common(table);

    CLI::App* check_id = app.add_subcommand("check-identities",
                                            "run a seeded identity suite");
    check_id->add_option("--suite", suite)
        ->check(CLI::IsMember({"shift", "mult", "derivative", "negapoly",
                               "taylor", "fourier", "grossman", "all"}));
    check_id->add_option("--samples", samples)->check(CLI::Range(1, 100000));
    check_id->add_option("--seed", seed);
    add_common(check_id);

    CLI::App* check_int = app.add_subcommand("check-integrals",
                                             "verify the integral identities");
    add_common(check_int);

    CLI::App* demo = app.add_subcommand("expansions-demo",
                                        "cross-method agreement spot checks");
    add_common(demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (eval->parsed()) {
            Complex z, q;
            if (!parse_complex(z_str, z))
                throw gp::domain_error("--z: cannot parse '" + z_str + "'");
            if (!parse_complex(q_str, q))
                throw gp::domain_error("--q: cannot parse '" + q_str + "'");
            return emit_evals({evaluate(z, q, method, tol)}, format);
        }
        if (table->parsed()) {
            Complex z, q0, q1;
            if (!parse_complex(z_str, z))
                throw gp::domain_error("--z: cannot parse '" + z_str + "'");
            if (!parse_complex(q_start_str, q0))
                throw gp::domain_error("--q-start: cannot parse '" + q_start_str + "'");
            if (!parse_complex(q_end_str, q1))
                throw gp::domain_error("--q-end: cannot parse '" + q_end_str + "'");
            if (format == "json" && table->count("--format") == 0) format = "csv";
            std::vector<EvalRecord> rows;
            rows.reserve(steps);
            for (int i = 0; i < steps; ++i) {
                double t = static_cast<double>(i) / (steps - 1);
                rows.push_back(evaluate(z, q0 + t * (q1 - q0), method, tol));
            }
            return emit_evals(rows, format);
        }
        if (check_id->parsed()) {
            if (check_id->count("--tol") == 0) tol = 1e-10;
            return emit_reports(gp::run_identity_suite(suite, samples, tol, seed),
                                format);
        }
        if (check_int->parsed()) {
            if (check_int->count("--tol") == 0) tol = 1e-8;
            return emit_reports(gp::run_integral_suite(tol), format);
        }
        if (demo->parsed()) {
            if (demo->count("--tol") == 0) tol = 1e-8;
            return emit_reports(expansions_demo(tol), format);
        }
    } catch (const gp::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
