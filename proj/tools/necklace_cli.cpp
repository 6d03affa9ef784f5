// necklace: command-line front end for the necklace library.
//
// Exit codes: 0 success, 1 bad input, 2 guardrail refusal, 3 verification
// mismatch. Every exact value is emitted as a string.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "necklace/necklace.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace necklace;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitGuardrail = 2;
constexpr int kExitMismatch = 3;

enum class Format { Text, Json, Csv };

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// What a command produced, before formatting.
struct Output {
    json doc;
    std::string text;
    std::optional<Csv> csv;
    int exit_code = kExitOk;
};

struct CommonOptions {
    std::string format = "text";
    std::optional<std::string> degree_cap;
    std::optional<std::string> max_work;
};

Format parse_format(const std::string& s) {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw InputError("--format must be text, json or csv");
}

/// Flags win over NECKLACE_DEGREE_CAP / NECKLACE_MAX_WORK.
Guardrails make_guardrails(const CommonOptions& opts) {
    Guardrails g;
    if (const char* env = std::getenv("NECKLACE_DEGREE_CAP")) g.degree_cap = parse_integer(env);
    if (const char* env = std::getenv("NECKLACE_MAX_WORK")) g.work_cap = parse_integer(env);
    if (opts.degree_cap) g.degree_cap = parse_integer(*opts.degree_cap);
    if (opts.max_work) g.work_cap = parse_integer(*opts.max_work);
    if (g.degree_cap < 0 || g.work_cap < 0) throw InputError("guardrails must be nonnegative");
    return g;
}

/// An evaluation point: an integer or a prime order root of unity "zeta:p".
struct Point {
    std::optional<BigInteger> integer;
    std::optional<std::uint64_t> root_prime;
};

Point parse_point(const std::string& s) {
    Point pt;
    if (s.rfind("zeta:", 0) == 0) {
        const BigInteger p = parse_integer(s.substr(5));
        if (p < 2 || !p.fits_ulong_p() || !is_prime(p.get_ui())) throw InputError("zeta:p needs a prime p, got '" + s + "'");
        pt.root_prime = p.get_ui();
    } else {
        pt.integer = parse_integer(s);
    }
    return pt;
}

json strings(const std::vector<Rational>& values) {
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.get_str());
    return arr;
}

json poly_result(const RatPoly& f) {
    return json{{"kind", "polynomial"}, {"coefficients", strings(f.coeffs())}, {"text", f.to_string()}};
}

json cyclo_result(const CycloElem& z) {
    return json{{"kind", "cyclotomic"}, {"prime", std::to_string(z.prime())}, {"coords", strings(z.coords())}};
}

std::string join_strings(const json& arr) {
    std::string s = "[";
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (i) s += ", ";
        s += arr[i].get<std::string>();
    }
    return s + "]";
}

std::string seconds_string(double s) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(6);
    os << s;
    return os.str();
}

std::string csv_line(const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) s += ',';
        s += cells[i];
    }
    return s + "\n";
}

/// NECKLACE_FAULT_INJECT=1 shifts every predicted M in verify-fq by one so
/// the mismatch path (exit 3) can be exercised end to end.
bool fault_injected() {
    const char* env = std::getenv("NECKLACE_FAULT_INJECT");
    return env != nullptr && std::string(env) == "1";
}

// --- commands ---------------------------------------------------------------

struct DnOptions {
    std::uint64_t d = 0;
    std::uint64_t n = 1;
    std::optional<std::string> at;
};

Output run_pcount(const DnOptions& o, const Guardrails& guard) {
    Output out;
    const CountingParams params(o.d, o.n);
    out.doc["parameters"] = {{"d", std::to_string(o.d)}, {"n", std::to_string(o.n)}, {"at", o.at ? json(*o.at) : json(nullptr)}};
    std::ostringstream text;
    text << "P_{" << o.d << "," << o.n << "}";
    if (!o.at) {
        const RatPoly f = poly_count_polynomial(params, guard);
        out.doc["results"] = poly_result(f);
        text << "(x) = " << f.to_string() << "\ncoefficients: " << join_strings(out.doc["results"]["coefficients"]) << "\n";
    } else {
        const Point pt = parse_point(*o.at);
        if (pt.root_prime) {
            const CycloElem v = poly_count_at_root(params, *pt.root_prime);
            out.doc["results"] = cyclo_result(v);
            text << "(" << *o.at << ") = " << v.to_string() << "\n";
        } else {
            const BigInteger v = poly_count_value(params, *pt.integer, guard);
            out.doc["results"] = {{"kind", "rational"}, {"value", v.get_str()}};
            text << "(" << *o.at << ") = " << v.get_str() << "\n";
        }
    }
    out.text = text.str();
    return out;
}

Output run_necklace(const DnOptions& o, const Guardrails& guard) {
    Output out;
    const CountingParams params(o.d, o.n);
    out.doc["parameters"] = {{"d", std::to_string(o.d)}, {"n", std::to_string(o.n)}, {"at", o.at ? json(*o.at) : json(nullptr)}};
    std::ostringstream text;
    text << "M_{" << o.d << "," << o.n << "}";
    if (!o.at) {
        const RatPoly f = necklace_polynomial(params, guard);
        out.doc["results"] = poly_result(f);
        text << "(x) = " << f.to_string() << "\ncoefficients: " << join_strings(out.doc["results"]["coefficients"]) << "\n";
    } else {
        const Point pt = parse_point(*o.at);
        if (pt.root_prime) {
            const CycloElem v = necklace_value_cyclo(params, *pt.root_prime, guard);
            out.doc["results"] = cyclo_result(v);
            text << "(" << *o.at << ") = " << v.to_string() << "\n";
        } else {
            const Rational v = necklace_value(params, *pt.integer, guard);
            out.doc["results"] = {{"kind", "rational"}, {"value", v.get_str()}};
            text << "(" << *o.at << ") = " << v.get_str() << "\n";
        }
    }
    out.text = text.str();
    return out;
}

Output run_balanced(const std::string& n_text, std::uint64_t base) {
    Output out;
    const BigInteger n = parse_integer(n_text);
    if (n < 1) throw InputError("--n must be at least 1");
    out.doc["parameters"] = {{"n", n.get_str()}, {"base", std::to_string(base)}};
    const auto expansion = balanced_expansion(n, base);
    if (!expansion) {
        out.doc["results"] = {{"exists", false}, {"expansion", "none"}, {"terms", json::array()}};
        out.text = "none\n";
        return out;
    }
    json terms = json::array();
    for (auto it = expansion->terms().rbegin(); it != expansion->terms().rend(); ++it) {
        terms.push_back({{"exponent", std::to_string(it->exponent)}, {"sign", it->sign > 0 ? "+1" : "-1"}});
    }
    out.doc["results"] = {{"exists", true}, {"expansion", expansion->to_string()}, {"terms", terms}};
    out.text = expansion->to_string() + "\n";
    return out;
}

Output run_euler_table(std::uint64_t n, std::uint64_t d_max, const std::string& field_name) {
    Output out;
    const BaseField field = parse_base_field(field_name);
    out.doc["parameters"] = {{"n", std::to_string(n)}, {"dmax", std::to_string(d_max)}, {"field", to_string(field)}};
    const EulerTable table = euler_table(n, d_max, field);
    json rows = json::array();
    Csv csv{{"d", "chi_c", "closed_form"}, {}};
    std::ostringstream text;
    text << "chi_c(Irr_{d," << n << "}(" << (field == BaseField::Real ? "R" : "C") << ")), method " << table.method() << "\n";
    for (const auto& row : table.rows) {
        const std::string closed = row.closed ? row.closed->get_str() : "";
        rows.push_back({{"d", std::to_string(row.d)},
                        {"chi_c", row.chi.get_str()},
                        {"closed_form", row.closed ? json(closed) : json(nullptr)}});
        csv.rows.push_back({std::to_string(row.d), row.chi.get_str(), closed});
        text << "d=" << row.d << "  " << row.chi.get_str() << "\n";
    }
    out.doc["results"] = {{"field", to_string(field)}, {"method", table.method()}, {"rows", rows}};
    out.doc["pass"] = true;
    out.text = text.str();
    out.csv = std::move(csv);
    return out;
}

Output run_verify_fq(std::uint32_t q, std::uint32_t n, std::uint32_t d_max, const Guardrails& guard, unsigned workers) {
    Output out;
    out.doc["parameters"] = {{"q", std::to_string(q)}, {"n", std::to_string(n)}, {"dmax", std::to_string(d_max)},
                             {"workers", std::to_string(workers)}};
    std::vector<GridCell> grid;
    for (std::uint32_t d = 1; d <= d_max; ++d) grid.push_back({d, n, q});
    auto reports = verify_grid(grid, guard, workers);
    if (fault_injected()) {
        for (auto& r : reports) {
            r.necklace += 1;
            r.irreducible_pass = Rational(static_cast<unsigned long>(r.irreducible)) == r.necklace;
        }
    }
    json rows = json::array();
    json cell_times = json::array();
    Csv csv{{"d", "n", "q", "enumerated", "P", "irreducible", "M", "pass"}, {}};
    std::ostringstream text;
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.pass();
        const std::string enumerated = std::to_string(r.enumerated);
        const std::string irr = std::to_string(r.irreducible);
        rows.push_back({{"d", std::to_string(r.cell.d)},
                        {"n", std::to_string(r.cell.n)},
                        {"q", std::to_string(r.cell.q)},
                        {"enumerated", enumerated},
                        {"P", r.predicted_total.get_str()},
                        {"irreducible", irr},
                        {"M", r.necklace.get_str()},
                        {"pass", r.pass()}});
        cell_times.push_back(seconds_string(r.seconds));
        csv.rows.push_back({std::to_string(r.cell.d), std::to_string(r.cell.n), std::to_string(r.cell.q), enumerated,
                            r.predicted_total.get_str(), irr, r.necklace.get_str(), r.pass() ? "pass" : "FAIL"});
        text << "d=" << r.cell.d << " n=" << r.cell.n << " q=" << r.cell.q << "  |Poly|=" << enumerated << " (P="
             << r.predicted_total.get_str() << ")  |Irr|=" << irr << " (M=" << r.necklace.get_str() << ")  "
             << (r.pass() ? "pass" : "FAIL") << "\n";
    }
    out.doc["results"] = {{"rows", rows}};
    out.doc["pass"] = all;
    out.doc["timings"]["cells_seconds"] = cell_times;
    text << (all ? "all pass" : "MISMATCH") << "\n";
    out.text = text.str();
    out.csv = std::move(csv);
    out.exit_code = all ? kExitOk : kExitMismatch;
    return out;
}

Output run_identity_check(std::uint64_t n, std::uint64_t d_max, const Guardrails& guard) {
    Output out;
    out.doc["parameters"] = {{"n", std::to_string(n)}, {"dmax", std::to_string(d_max)}};
    if (n < 1) throw InputError("--n must be at least 1");
    const auto report = identity_check(n, d_max, guard);
    json results = {{"first_mismatch", report.first_mismatch ? json(std::to_string(*report.first_mismatch)) : json(nullptr)}};
    std::ostringstream text;
    text << "higher cyclotomic identity, n=" << n << ", through t^" << d_max << ": " << (report.pass ? "pass" : "FAIL") << "\n";
    if (report.mismatch) {
        results["lhs"] = report.mismatch->first.to_string();
        results["rhs"] = report.mismatch->second.to_string();
        text << "first mismatch at t^" << *report.first_mismatch << ": " << report.mismatch->first.to_string() << " vs "
             << report.mismatch->second.to_string() << "\n";
    }
    out.doc["results"] = results;
    out.doc["pass"] = report.pass;
    out.text = text.str();
    out.exit_code = report.pass ? kExitOk : kExitMismatch;
    return out;
}

Output run_qproduct_check(const std::string& n_text, std::uint64_t p, std::uint64_t d_max) {
    Output out;
    const BigInteger n = parse_integer(n_text);
    if (n < 1) throw InputError("--n must be at least 1");
    out.doc["parameters"] = {{"n", n.get_str()}, {"p", std::to_string(p)}, {"dmax", std::to_string(d_max)}};
    const auto report = q_product_check(n, p, d_max);
    json lhs = json::array();
    json rhs = json::array();
    for (const auto& v : report.lhs) lhs.push_back(v.get_str());
    for (const auto& v : report.rhs) rhs.push_back(v.get_str());
    out.doc["results"] = {{"lhs", lhs},
                          {"rhs", rhs},
                          {"first_mismatch", report.first_mismatch ? json(std::to_string(*report.first_mismatch)) : json(nullptr)}};
    out.doc["pass"] = report.pass;
    std::ostringstream text;
    text << "(1 - t) Q(t) product formula, n=" << n.get_str() << ", p=" << p << ", through t^" << d_max << ": "
         << (report.pass ? "pass" : "FAIL") << "\n";
    text << "coefficients: " << join_strings(lhs) << "\n";
    out.text = text.str();
    out.exit_code = report.pass ? kExitOk : kExitMismatch;
    return out;
}

void emit(const std::string& command, Output& out, Format format, double seconds) {
    json doc;
    doc["command"] = command;
    doc["parameters"] = out.doc["parameters"];
    doc["results"] = out.doc["results"];
    if (out.doc.contains("pass")) doc["pass"] = out.doc["pass"];
    doc["timings"] = out.doc.contains("timings") ? out.doc["timings"] : json::object();
    doc["timings"]["total_seconds"] = seconds_string(seconds);

    switch (format) {
        case Format::Text:
            std::cout << out.text;
            break;
        case Format::Json:
            std::cout << doc.dump(2) << "\n";
            break;
        case Format::Csv:
            std::cout << csv_line(out.csv->header);
            for (const auto& row : out.csv->rows) std::cout << csv_line(row);
            break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Higher necklace polynomials, balanced expansions and Euler characteristics"};
    app.require_subcommand(1);

    CommonOptions common;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", common.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--degree-cap", common.degree_cap, "largest C(n+d, n) materialized (env NECKLACE_DEGREE_CAP)");
        sub->add_option("--max-work", common.max_work, "largest oracle enumeration (env NECKLACE_MAX_WORK)");
    };

    DnOptions pcount_opts;
    auto* pcount = app.add_subcommand("pcount", "P_{d,n}(x) or its value");
    pcount->add_option("--d", pcount_opts.d, "total degree")->required();
    pcount->add_option("--n", pcount_opts.n, "number of variables")->required();
    pcount->add_option("--at", pcount_opts.at, "integer or zeta:p");
    add_common(pcount);

    DnOptions necklace_opts;
    auto* necklace_cmd = app.add_subcommand("necklace", "M_{d,n}(x) or its value");
    necklace_cmd->add_option("--d", necklace_opts.d, "total degree")->required();
    necklace_cmd->add_option("--n", necklace_opts.n, "number of variables")->required();
    necklace_cmd->add_option("--at", necklace_opts.at, "integer or zeta:p");
    add_common(necklace_cmd);

    std::string balanced_n;
    std::uint64_t balanced_base = 2;
    auto* balanced = app.add_subcommand("balanced", "balanced base-b expansion");
    balanced->add_option("--n", balanced_n, "positive integer")->required();
    balanced->add_option("--base", balanced_base, "base b >= 2")->required();
    add_common(balanced);

    std::uint64_t table_n = 1;
    std::uint64_t table_dmax = 1;
    std::string table_field = "real";
    auto* table = app.add_subcommand("euler-table", "chi_c(Irr_{d,n}(K)) for d = 1..dmax");
    table->add_option("--n", table_n, "number of variables")->required();
    table->add_option("--dmax", table_dmax, "largest degree")->required();
    table->add_option("--field", table_field, "real | complex")->check(CLI::IsMember({"real", "complex"}));
    add_common(table);

    std::uint32_t fq_q = 2;
    std::uint32_t fq_n = 1;
    std::uint32_t fq_dmax = 1;
    unsigned fq_workers = 1;
    auto* verify = app.add_subcommand("verify-fq", "brute-force counts over F_q against P and M");
    verify->add_option("--q", fq_q, "prime field order: 2, 3, 5 or 7")->required();
    verify->add_option("--n", fq_n, "number of variables")->required();
    verify->add_option("--dmax", fq_dmax, "largest degree")->required();
    verify->add_option("--workers", fq_workers, "sieve threads")->check(CLI::Range(1u, 256u));
    add_common(verify);

    std::uint64_t id_n = 1;
    std::uint64_t id_dmax = 1;
    auto* ident = app.add_subcommand("identity-check", "sum P_{d,n} t^d == prod (1/(1-t^j))^{M_{j,n}} in Q[x][[t]]");
    ident->add_option("--n", id_n, "number of variables")->required();
    ident->add_option("--dmax", id_dmax, "truncation order")->required();
    add_common(ident);

    std::string qp_n;
    std::uint64_t qp_p = 2;
    std::uint64_t qp_dmax = 1;
    auto* qprod = app.add_subcommand("qproduct-check", "(1-t)Q(t) against the balanced product formula");
    qprod->add_option("--n", qp_n, "number of variables, balanced in base p")->required();
    qprod->add_option("--p", qp_p, "prime")->required();
    qprod->add_option("--dmax", qp_dmax, "truncation order")->required();
    add_common(qprod);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    const auto start = std::chrono::steady_clock::now();
    try {
        const Format format = parse_format(common.format);
        const Guardrails guard = make_guardrails(common);
        Output out;
        if (chosen == pcount) {
            out = run_pcount(pcount_opts, guard);
        } else if (chosen == necklace_cmd) {
            out = run_necklace(necklace_opts, guard);
        } else if (chosen == balanced) {
            out = run_balanced(balanced_n, balanced_base);
        } else if (chosen == table) {
            out = run_euler_table(table_n, table_dmax, table_field);
        } else if (chosen == verify) {
            out = run_verify_fq(fq_q, fq_n, fq_dmax, guard, fq_workers);
        } else if (chosen == ident) {
            out = run_identity_check(id_n, id_dmax, guard);
        } else {
            out = run_qproduct_check(qp_n, qp_p, qp_dmax);
        }
        if (format == Format::Csv && !out.csv) throw InputError("--format csv is only available for euler-table and verify-fq");
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        emit(command, out, format, seconds);
        return out.exit_code;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuardrail;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
