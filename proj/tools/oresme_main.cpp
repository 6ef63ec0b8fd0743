// Command-line surface: sequence tables, point evaluation, identity
// verification, analytic probes, strategy benchmarks and DSL corpus checks,
// with pretty/JSON/CSV output. Exit codes: 0 success, 1 unexpected identity
// outcome (or benchmark digest mismatch), 2 usage or input errors.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "oresme/analytic.hpp"
#include "oresme/dsl.hpp"
#include "oresme/identities.hpp"
#include "oresme/json_io.hpp"
#include "oresme/parallel.hpp"
#include "oresme/sequences.hpp"

namespace {

using oresme::Json;
using oresme::Rational;

enum class Format { pretty, json, csv };

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<Json>> rows;
};

std::string csv_cell(const Json& v) {
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    bool needs_quotes = text.find_first_of(",\"\n") != std::string::npos;
    if (!needs_quotes) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += "\"\"";
        } else {
            quoted += c;
        }
    }
    quoted += "\"";
    return quoted;
}

void emit_csv(const CsvTable& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        std::cout << (i ? "," : "") << csv_cell(Json(table.header[i]));
    }
    std::cout << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::cout << (i ? "," : "") << csv_cell(row[i]);
        }
        std::cout << "\n";
    }
}

void emit_json(const Json& doc) {
    std::cout << doc.dump(2) << "\n";
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : data) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::string digest_of(const std::string& data) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return buf;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) {
                out.push_back(cur);
            }
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) {
        out.push_back(cur);
    }
    return out;
}

double wall_ms(std::chrono::steady_clock::time_point a,
               std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
}

// ---------------------------------------------------------------------------
// table

int cmd_table(std::int64_t from, std::int64_t to, bool derivative,
              const std::string& x_text, const std::string& method, Format format) {
    oresme::Provenance provenance = oresme::Provenance::recurrence;
    if (method == "closed") {
        provenance = oresme::Provenance::closed;
    } else if (method == "matrix") {
        provenance = oresme::Provenance::matrix;
    }
    oresme::SequenceTable table = oresme::make_table(from, to, derivative, provenance);

    bool with_value = !x_text.empty();
    Rational x0;
    if (with_value) {
        x0 = Rational::parse(x_text);
    }

    Json doc;
    doc["command"] = "table";
    doc["from"] = from;
    doc["to"] = to;
    doc["derivative"] = derivative;
    doc["provenance"] = oresme::provenance_name(provenance);
    if (with_value) {
        doc["x"] = x0.str();
    }
    Json rows = Json::array();
    for (const auto& row : table.entries) {
        Json r;
        r["n"] = row.index;
        r["poly"] = oresme::json_of(row.poly);
        if (with_value) {
            r["value"] = row.poly.eval_exact(x0).str();
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = rows;

    if (format == Format::json) {
        emit_json(doc);
    } else if (format == Format::csv) {
        CsvTable csv;
        csv.header = {"n", "poly"};
        if (with_value) {
            csv.header.push_back("value");
        }
        for (const auto& r : rows) {
            std::vector<Json> cells{r["n"], Json(r["poly"].dump())};
            if (with_value) {
                cells.push_back(r["value"]);
            }
            csv.rows.push_back(std::move(cells));
        }
        emit_csv(csv);
    } else {
        const char* name = derivative ? "O'" : "O";
        for (const auto& row : table.entries) {
            std::cout << name << "_" << row.index << "(x) = " << row.poly.str();
            if (with_value) {
                std::cout << "   |   at x=" << x0.str() << ": "
                          << row.poly.eval_exact(x0).str();
            }
            std::cout << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// eval

int cmd_eval(std::int64_t n, const std::string& x_text, const std::string& mode,
             Format format) {
    Rational x = Rational::parse(x_text);
    Json doc;
    doc["command"] = "eval";
    doc["n"] = n;
    doc["x"] = x.str();
    doc["mode"] = mode;
    std::string value_str;
    if (mode == "binet") {
        double v = oresme::binet_float(n, x.to_double());
        doc["value"] = v;
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        value_str = buf;
        doc["digest"] = digest_of(value_str);
    } else {
        Rational v;
        if (mode == "matrix") {
            v = oresme::eval_matrix(n, x);
        } else if (mode == "closed") {
            v = oresme::eval_closed(n, x);
        } else {
            v = oresme::eval_recurrence(n, x);
        }
        value_str = v.str();
        doc["value"] = value_str;
        doc["digest"] = digest_of(value_str);
    }

    if (format == Format::json) {
        emit_json(doc);
    } else if (format == Format::csv) {
        CsvTable csv;
        csv.header = {"n", "x", "mode", "value", "digest"};
        csv.rows.push_back({doc["n"], doc["x"], doc["mode"], doc["value"], doc["digest"]});
        emit_csv(csv);
    } else {
        std::cout << "O_" << n << "(" << x.str() << ") [" << mode << "] = " << value_str
                  << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify

void verify_csv(const std::vector<oresme::IdentityReport>& reports) {
    CsvTable csv;
    csv.header = {"id",      "sweep",   "verdict",  "expected", "unexpected",
                  "vacuous", "checked", "failures", "witnesses"};
    for (const auto& r : reports) {
        Json j = oresme::json_of(r);
        csv.rows.push_back({j["id"], j["sweep"], j["verdict"], j["expected"],
                            j["unexpected"], j["vacuous"], j["checked"], j["failures"],
                            Json(j["witnesses"].dump())});
    }
    emit_csv(csv);
}

void verify_pretty(const std::vector<oresme::IdentityReport>& reports) {
    for (const auto& r : reports) {
        std::printf("%-16s %-6s (expected %-20s) %s  checked=%lld failures=%lld%s\n",
                    r.id.c_str(), oresme::verdict_name(r.verdict),
                    oresme::expected_name(r.expected),
                    r.unexpected ? "UNEXPECTED" : "as expected",
                    static_cast<long long>(r.checked), static_cast<long long>(r.failures),
                    r.vacuous ? " (vacuous)" : "");
        for (const auto& w : r.witnesses) {
            std::string params;
            for (const auto& [name, value] : w.params) {
                if (!params.empty()) {
                    params += ", ";
                }
                params += name + "=" + std::to_string(value);
            }
            std::cout << "    witness " << params << ": lhs = " << w.lhs.str()
                      << " ; rhs = " << w.rhs.str() << "\n";
        }
    }
}

int cmd_verify(const std::string& id, bool all, const std::string& profile_name,
               bool has_override, std::int64_t from, std::int64_t to, int workers,
               Format format) {
    const auto& catalog = oresme::IdentityCatalog::instance();
    oresme::SweepProfile profile = profile_name == "full" ? oresme::SweepProfile::full
                                                          : oresme::SweepProfile::quick;
    std::vector<oresme::IdentityReport> reports;
    if (!id.empty()) {
        const auto& entry = catalog.entry(id);
        oresme::Sweep sweep =
            profile == oresme::SweepProfile::full ? entry.full : entry.quick;
        if (has_override) {
            oresme::Sweep replaced;
            for (const auto& [name, lo, hi] : sweep.ranges) {
                (void)lo;
                (void)hi;
                replaced.add(name, from, to);
            }
            sweep = replaced;
        }
        reports.push_back(catalog.check_identity(id, sweep, workers));
    } else {
        (void)all; // --all is the default when no --id is given
        reports = catalog.run_catalog(profile, workers);
    }

    bool any_unexpected = false;
    for (const auto& r : reports) {
        any_unexpected = any_unexpected || r.unexpected;
    }

    if (format == Format::json) {
        Json doc;
        doc["command"] = "verify";
        doc["profile"] = profile_name;
        Json rs = Json::array();
        for (const auto& r : reports) {
            rs.push_back(oresme::json_of(r));
        }
        doc["reports"] = std::move(rs);
        doc["all_match_expected"] = !any_unexpected;
        emit_json(doc);
    } else if (format == Format::csv) {
        verify_csv(reports);
    } else {
        verify_pretty(reports);
        std::cout << (any_unexpected ? "UNEXPECTED OUTCOMES PRESENT\n"
                                     : "all outcomes match expectations\n");
    }
    return any_unexpected ? 1 : 0;
}

// ---------------------------------------------------------------------------
// roots

int cmd_roots(std::int64_t n, double tol, Format format) {
    oresme::ReconstructionReport report = oresme::product_reconstruct(n, tol);
    Json doc;
    doc["command"] = "roots";
    Json body = oresme::json_of(report);
    for (auto& [key, value] : body.items()) {
        doc[key] = value;
    }
    if (format == Format::json) {
        emit_json(doc);
    } else if (format == Format::csv) {
        CsvTable csv;
        csv.header = {"n", "tol", "max_abs_error", "pass", "roots", "reconstructed", "exact"};
        csv.rows.push_back({doc["n"], doc["tol"], doc["max_abs_error"], doc["pass"],
                            Json(doc["roots"].dump()), Json(doc["reconstructed"].dump()),
                            Json(doc["exact"].dump())});
        emit_csv(csv);
    } else {
        std::printf("x^%lld * O_%lld(x): max coefficient error %.3e (tol %.3e) -> %s\n",
                    static_cast<long long>(n), static_cast<long long>(n),
                    report.max_abs_error, tol, report.pass ? "pass" : "FAIL");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// limit

int cmd_limit(const std::string& x_text, std::int64_t steps, Format format) {
    Rational x = Rational::parse(x_text);
    oresme::ConvergenceTrace trace = oresme::ratio_limit_probe(x, steps);
    Json doc;
    doc["command"] = "limit";
    Json body = oresme::json_of(trace);
    for (auto& [key, value] : body.items()) {
        doc[key] = value;
    }
    if (format == Format::json) {
        emit_json(doc);
    } else if (format == Format::csv) {
        CsvTable csv;
        csv.header = {"x", "verdict", "burn_in", "observed_limit", "flagged", "note",
                      "n", "ratio", "error"};
        for (const auto& s : trace.steps) {
            csv.rows.push_back({doc["x"], doc["verdict"], doc["burn_in"],
                                doc["observed_limit"], doc["flagged"], doc["note"], s.n,
                                oresme::json_float(s.ratio), oresme::json_float(s.error)});
        }
        emit_csv(csv);
    } else {
        std::cout << "x = " << trace.x_str << ": "
                  << oresme::trace_verdict_name(trace.verdict);
        if (trace.flagged) {
            std::cout << " [flagged: " << trace.note << "]";
        }
        std::cout << "\n";
        std::size_t shown = trace.steps.size() > 5 ? trace.steps.size() - 5 : 0;
        for (std::size_t i = shown; i < trace.steps.size(); ++i) {
            const auto& s = trace.steps[i];
            std::printf("  n=%-5lld ratio=%-22.17g error=%.3e\n",
                        static_cast<long long>(s.n), s.ratio, s.error);
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const std::string& modes_text, const std::string& nlist_text,
              const std::string& x_text, Format format) {
    Rational x = Rational::parse(x_text);
    std::vector<std::string> modes = split_list(modes_text);
    std::vector<std::int64_t> ns;
    for (const auto& t : split_list(nlist_text)) {
        ns.push_back(std::stoll(t));
    }
    if (modes.empty() || ns.empty()) {
        throw CLI::ValidationError("bench", "--modes and --n-list must be non-empty");
    }

    struct Record {
        std::string strategy;
        std::int64_t n;
        double median_ms;
        std::string digest;
        std::string value_kind; // "exact" or "float"
    };
    std::vector<Record> records;
    bool consistent = true;

    for (std::int64_t n : ns) {
        std::string exact_digest;
        for (const auto& mode : modes) {
            std::vector<double> times;
            std::string digest;
            std::string kind = mode == "binet_float" ? "float" : "exact";
            for (int rep = 0; rep < 3; ++rep) {
                auto t0 = std::chrono::steady_clock::now();
                std::string value;
                if (mode == "recurrence") {
                    value = oresme::eval_recurrence(n, x).str();
                } else if (mode == "matrix") {
                    value = oresme::eval_matrix(n, x).str();
                } else if (mode == "closed") {
                    value = oresme::eval_closed(n, x).str();
                } else if (mode == "binet_float") {
                    char buf[40];
                    std::snprintf(buf, sizeof(buf), "%.17g",
                                  oresme::binet_float(n, x.to_double()));
                    value = buf;
                } else {
                    throw CLI::ValidationError("bench", "unknown mode: " + mode);
                }
                auto t1 = std::chrono::steady_clock::now();
                times.push_back(wall_ms(t0, t1));
                digest = digest_of(value);
            }
            std::sort(times.begin(), times.end());
            records.push_back(Record{mode, n, times[1], digest, kind});
            if (kind == "exact") {
                if (exact_digest.empty()) {
                    exact_digest = digest;
                } else if (exact_digest != digest) {
                    consistent = false;
                }
            }
        }
    }

    Json doc;
    doc["command"] = "bench";
    doc["x"] = x.str();
    Json rs = Json::array();
    for (const auto& r : records) {
        Json j;
        j["strategy"] = r.strategy;
        j["n"] = r.n;
        j["x"] = x.str();
        j["median_ms"] = r.median_ms;
        j["digest"] = r.digest;
        j["kind"] = r.value_kind;
        rs.push_back(std::move(j));
    }
    doc["records"] = std::move(rs);
    doc["digests_consistent"] = consistent;

    if (format == Format::json) {
        emit_json(doc);
    } else if (format == Format::csv) {
        CsvTable csv;
        csv.header = {"strategy", "n", "x", "median_ms", "digest", "kind"};
        for (const auto& r : doc["records"]) {
            csv.rows.push_back({r["strategy"], r["n"], r["x"], r["median_ms"], r["digest"],
                                r["kind"]});
        }
        emit_csv(csv);
    } else {
        for (const auto& r : records) {
            std::printf("%-12s n=%-8lld median %10.3f ms   digest %s\n", r.strategy.c_str(),
                        static_cast<long long>(r.n), r.median_ms, r.digest.c_str());
        }
        std::cout << (consistent ? "exact strategies agree\n"
                                 : "EXACT STRATEGY DIGESTS DIFFER\n");
    }
    return consistent ? 0 : 1;
}

// ---------------------------------------------------------------------------
// dsl check

int cmd_dsl_check(const std::string& file, const std::vector<std::string>& range_overrides,
                  int workers, Format format) {
    oresme::dsl::Corpus corpus = oresme::dsl::load_corpus(file);
    if (!corpus.errors.empty()) {
        for (const auto& e : corpus.errors) {
            std::cerr << file << ":" << e.line << ":" << e.column << ": " << e.message;
            if (!e.token.empty()) {
                std::cerr << " near '" << e.token << "'";
            }
            std::cerr << "\n";
        }
        return 2;
    }

    std::vector<oresme::dsl::RangeDecl> overrides;
    for (const auto& text : range_overrides) {
        for (const auto& one : split_list(text)) {
            auto eq = one.find('=');
            auto dots = one.find("..");
            if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
                throw CLI::ValidationError("dsl", "bad --range override: " + one);
            }
            oresme::dsl::RangeDecl decl;
            decl.var = one.substr(0, eq);
            decl.lo = std::stoll(one.substr(eq + 1, dots - eq - 1));
            decl.hi = std::stoll(one.substr(dots + 2));
            overrides.push_back(std::move(decl));
        }
    }

    std::vector<oresme::IdentityReport> reports;
    for (auto& entry : corpus.entries) {
        oresme::dsl::IdentityAst ast = entry.ast;
        oresme::dsl::override_ranges(ast, overrides);
        std::string label = entry.name.empty()
                                ? file + ":" + std::to_string(entry.line)
                                : entry.name;
        reports.push_back(oresme::dsl::check_ast(ast, label, workers));
    }

    if (format == Format::json) {
        Json doc;
        doc["command"] = "dsl-check";
        doc["file"] = file;
        Json rs = Json::array();
        for (const auto& r : reports) {
            rs.push_back(oresme::json_of(r));
        }
        doc["reports"] = std::move(rs);
        emit_json(doc);
    } else if (format == Format::csv) {
        verify_csv(reports);
    } else {
        verify_pretty(reports);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Oresme polynomial toolkit"};
    app.require_subcommand(1);

    std::string format_name = "pretty";
    int workers = 0;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}));
    app.add_option("--workers", workers,
                   "Worker threads for sweeps (0 = hardware; ORESME_WORKERS caps)");

    auto* table = app.add_subcommand("table", "Emit O_n (or O_n') over an index range");
    std::int64_t t_from = 0, t_to = 0;
    bool t_derivative = false;
    std::string t_x, t_method = "recurrence";
    table->add_option("--from", t_from, "First index")->required();
    table->add_option("--to", t_to, "Last index")->required();
    table->add_flag("--derivative", t_derivative, "Differentiate the polynomials");
    table->add_option("--x", t_x, "Also evaluate each row exactly at this rational point");
    table->add_option("--method", t_method, "Generator to use")
        ->check(CLI::IsMember({"recurrence", "closed", "matrix"}));

    auto* eval = app.add_subcommand("eval", "Evaluate O_n at a rational point");
    std::int64_t e_n = 0;
    std::string e_x, e_mode = "recurrence";
    eval->add_option("--n", e_n, "Index")->required();
    eval->add_option("--x", e_x, "Rational point, e.g. 3 or 7/2 or 2.5")->required();
    eval->add_option("--mode", e_mode, "Evaluation strategy")
        ->check(CLI::IsMember({"recurrence", "matrix", "closed", "binet"}));

    auto* verify = app.add_subcommand("verify", "Check cataloged identities over sweeps");
    std::string v_id, v_profile = "quick";
    bool v_all = false;
    std::int64_t v_from = 0, v_to = 0;
    auto* v_id_opt = verify->add_option("--id", v_id, "Check a single identity");
    verify->add_flag("--all", v_all, "Check the whole catalog (default)");
    verify->add_option("--profile", v_profile, "Sweep size")
        ->check(CLI::IsMember({"quick", "full"}));
    auto* v_from_opt =
        verify->add_option("--from", v_from, "Override sweep lower bound (with --id)")
            ->needs(v_id_opt);
    verify->add_option("--to", v_to, "Override sweep upper bound (with --id)")
        ->needs(v_from_opt);

    auto* roots = app.add_subcommand("roots", "Rebuild x^n O_n from its cosine roots");
    std::int64_t r_n = 0;
    double r_tol = 1e-8;
    roots->add_option("--n", r_n, "Index")->required();
    roots->add_option("--tol", r_tol, "Max coefficient error to pass");

    auto* limit = app.add_subcommand("limit", "Probe the consecutive-term ratio limit");
    std::string l_x;
    std::int64_t l_steps = 60;
    limit->add_option("--x", l_x, "Rational point")->required();
    limit->add_option("--steps", l_steps, "Number of ratios to record");

    auto* bench = app.add_subcommand("bench", "Time the evaluation strategies");
    std::string b_modes = "recurrence,matrix,closed";
    std::string b_nlist = "1024,4096,16384";
    std::string b_x = "3";
    bench->add_option("--modes", b_modes, "Comma list of strategies");
    bench->add_option("--n-list", b_nlist, "Comma list of indices");
    bench->add_option("--x", b_x, "Rational point");

    auto* dsl = app.add_subcommand("dsl", "Identity DSL commands");
    auto* dsl_check = dsl->add_subcommand("check", "Parse and verify a corpus file");
    std::string d_file;
    std::vector<std::string> d_ranges;
    dsl_check->add_option("file", d_file, "Corpus file, one identity per line")->required();
    dsl_check->add_option("--range", d_ranges, "Override ranges, e.g. n=1..30");
    dsl->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    Format format = Format::pretty;
    if (format_name == "json") {
        format = Format::json;
    } else if (format_name == "csv") {
        format = Format::csv;
    }

    try {
        if (*table) {
            return cmd_table(t_from, t_to, t_derivative, t_x, t_method, format);
        }
        if (*eval) {
            return cmd_eval(e_n, e_x, e_mode, format);
        }
        if (*verify) {
            bool has_override = v_from_opt->count() > 0;
            return cmd_verify(v_id, v_all, v_profile, has_override, v_from, v_to, workers,
                              format);
        }
        if (*roots) {
            return cmd_roots(r_n, r_tol, format);
        }
        if (*limit) {
            return cmd_limit(l_x, l_steps, format);
        }
        if (*bench) {
            return cmd_bench(b_modes, b_nlist, b_x, format);
        }
        if (*dsl) {
            return cmd_dsl_check(d_file, d_ranges, workers, format);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
