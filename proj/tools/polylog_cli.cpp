// Command-line frontend: construct and print the library's special objects,
// emit coefficient tables, and run identity-verification suites with exact
// JSON reports.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polylog/combinatorics.hpp"
#include "polylog/format.hpp"
#include "polylog/special.hpp"
#include "polylog/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polylog;

constexpr std::uint32_t kShowTableCap = 101;
constexpr std::uint32_t kVerifyCap = 13;

std::uint32_t effective_cap(std::uint32_t command_default, std::optional<std::uint32_t> flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("POLYLOG_MAX_PRIME")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v >= 3) return static_cast<std::uint32_t>(v);
    }
    return command_default;
}

std::uint32_t parse_single_prime(const std::string& text, std::uint32_t cap) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &pos);
    } catch (const std::exception&) {
        throw BadArgument("malformed prime '" + text + "'");
    }
    if (pos != text.size()) throw BadArgument("malformed prime '" + text + "'");
    PrimeModulus pm(static_cast<std::uint32_t>(v), cap);
    return pm.value();
}

// "N" or "lo..hi" (odd primes enumerated inclusively).
std::vector<std::uint32_t> parse_prime_range(const std::string& text, std::uint32_t cap) {
    auto dots = text.find("..");
    if (dots == std::string::npos) return {parse_single_prime(text, cap)};
    std::string lo_s = text.substr(0, dots), hi_s = text.substr(dots + 2);
    unsigned long lo = 0, hi = 0;
    try {
        std::size_t p1 = 0, p2 = 0;
        lo = std::stoul(lo_s, &p1);
        hi = std::stoul(hi_s, &p2);
        if (p1 != lo_s.size() || p2 != hi_s.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw BadArgument("malformed prime range '" + text + "'");
    }
    if (lo > hi) throw BadArgument("malformed prime range '" + text + "': lower bound above upper");
    if (hi > cap)
        throw BadArgument("prime range '" + text + "' exceeds the cap " + std::to_string(cap) +
                          " (raise it with --max-prime or POLYLOG_MAX_PRIME)");
    auto primes = odd_primes_in(static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(hi));
    if (primes.empty()) throw BadArgument("no odd primes in range '" + text + "'");
    return primes;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file '" + path + "'");
    out << text;
}

// ---------------------------------------------------------------------------
// show

int run_show(std::uint32_t p, const std::string& object, std::int64_t d, std::uint32_t s,
             const std::string& format, const std::string& output) {
    std::string text;
    ordered_json js;
    js["object"] = object;
    js["p"] = p;

    auto coeff_array_fp = [](const Poly<Fp>& f) {
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < f.coeffs().size(); ++i)
            arr.push_back(coeff_string(f.coeff(i)));
        return arr;
    };
    auto coeff_array_rf = [](const Poly<RatFunc>& f) {
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < f.coeffs().size(); ++i)
            arr.push_back(coeff_string(f.coeff(i)));
        return arr;
    };

    if (object == "polylog") {
        Poly<Fp> f = build_polylog(p, d);
        js["params"] = {{"d", d}};
        js["coefficients"] = coeff_array_fp(f);
        if (format == "latex")
            text = "\\pounds_{" + std::to_string(d) + "}(X) = " + poly_latex(f);
        else
            text = poly_text(f);
    } else if (object == "gen_polylog") {
        Poly<RatFunc> f = build_gen_polylog(p, d);
        js["params"] = {{"d", d}};
        js["coefficients"] = coeff_array_rf(f);
        if (format == "latex")
            text = "\\pounds_{" + std::to_string(d) + "}^{(\\alpha)}(X) = " + poly_rf_latex(f);
        else
            text = poly_rf_text(f);
    } else if (object == "laguerre") {
        Poly<RatFunc> f = build_laguerre(p);
        js["coefficients"] = coeff_array_rf(f);
        if (format == "latex")
            text = "L_{p-1}^{(\\alpha)}(X) = " + poly_rf_latex(f);
        else
            text = poly_rf_text(f);
    } else if (object == "gexp") {
        Poly<RatFunc> f = build_gexp(p);
        js["coefficients"] = coeff_array_rf(f);
        if (format == "latex")
            text = "\\mathcal{E}^{(\\alpha)}(X) = " + poly_rf_latex(f);
        else
            text = poly_rf_text(f);
    } else if (object == "trunc_exp") {
        Poly<Fp> f = build_trunc_exp(p);
        js["coefficients"] = coeff_array_fp(f);
        if (format == "latex")
            text = "E(X) = " + poly_latex(f);
        else
            text = poly_text(f);
    } else if (object == "T") {
        Poly<Fp> f = build_T(p);
        js["coefficients"] = coeff_array_fp(f);
        if (format == "latex")
            text = "T(X) = " + poly_latex(f);
        else
            text = poly_text(f);
    } else if (object == "b1s") {
        Poly<Fp> f = build_b1s(p, s);
        js["params"] = {{"s", s}};
        js["coefficients"] = coeff_array_fp(f);
        if (format == "latex")
            text = "b_{1," + std::to_string(s) + "}(\\alpha) = " + poly_compact_latex(f);
        else
            text = poly_text(f, "a");
    } else {
        throw BadArgument("unknown object '" + object + "' for show");
    }

    if (format == "json")
        write_output(js.dump(1) + "\n", output);
    else
        write_output(text + "\n", output);
    return 0;
}

// ---------------------------------------------------------------------------
// table

std::string factored_b1s(const Poly<Fp>& b, std::uint32_t p) {
    // b splits into distinct linear factors; print lead * prod (a + c).
    std::string out;
    Fp lead = b.leading();
    if (lead.value() != 1) out = std::to_string(lead.value());
    for (std::uint32_t r = 0; r < p; ++r) {
        if (!b.eval(Fp(r, p)).is_zero()) continue;
        if (!out.empty()) out += "*";
        std::uint32_t c = (p - r) % p;
        out += c == 0 ? "a" : "(a+" + std::to_string(c) + ")";
    }
    if (out.empty()) out = "1";
    return out;
}

int run_table(std::uint32_t p, const std::string& object, const std::string& format,
              const std::string& output) {
    std::vector<std::vector<std::string>> rows;
    if (object == "g") {
        auto g = build_g(p);
        for (std::uint32_t k = 1; k < p; ++k)
            rows.push_back({std::to_string(k), ratfunc_string(g[k])});
    } else if (object == "e") {
        for (std::uint32_t k = 1; k < p; ++k) {
            std::vector<std::string> row{"k=" + std::to_string(k)};
            for (std::uint32_t a = 1; a < p; ++a)
                row.push_back(std::to_string(valuation_e(k, a, p)));
            rows.push_back(std::move(row));
        }
    } else if (object == "b1s") {
        for (std::uint32_t s = 1; s + 1 < p; ++s)
            rows.push_back({std::to_string(s), factored_b1s(build_b1s(p, s), p)});
    } else {
        throw BadArgument("unknown object '" + object + "' for table");
    }

    std::string text;
    if (format == "latex") {
        std::size_t width = rows.empty() ? 1 : rows[0].size();
        text += "\\begin{tabular}{" + std::string(width, 'l') + "}\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                text += (i ? " & " : "") + row[i];
            text += " \\\\\n";
        }
        text += "\\end{tabular}\n";
    } else {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                text += (i ? "," : "") + csv_quote(row[i]);
            text += "\n";
        }
    }
    write_output(text, output);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

ordered_json suite_to_json(const SuiteResult& result) {
    ordered_json js;
    js["runs"] = ordered_json::array();
    for (const CheckReport& r : result.runs) {
        ordered_json run;
        run["identity"] = r.identity;
        run["p"] = r.prime;
        ordered_json params = ordered_json::object();
        for (const auto& [name, value] : r.params) params[name] = value;
        run["params"] = params;
        switch (r.status) {
            case CheckStatus::pass: run["status"] = "pass"; break;
            case CheckStatus::fail: run["status"] = "fail"; break;
            case CheckStatus::error: run["status"] = "error"; break;
        }
        if (r.witness) {
            run["witness"] = {{"position", r.witness->position},
                              {"lhs", r.witness->lhs},
                              {"rhs", r.witness->rhs}};
        }
        if (r.status == CheckStatus::error) run["message"] = r.message;
        run["millis"] = r.elapsed_millis;
        js["runs"].push_back(std::move(run));
    }
    js["summary"] = {{"pass", result.passed}, {"fail", result.failed}, {"error", result.errors}};
    return js;
}

int run_verify(const std::string& range, const std::string& suite, const std::string& report,
               unsigned jobs, std::uint32_t cap) {
    std::vector<std::uint32_t> primes = parse_prime_range(range, cap);
    std::set<std::string> selection;
    if (suite == "all") {
        selection.insert(all_identity_tags().begin(), all_identity_tags().end());
    } else {
        std::size_t start = 0;
        while (start <= suite.size()) {
            std::size_t comma = suite.find(',', start);
            std::string tag = suite.substr(start, comma == std::string::npos ? std::string::npos
                                                                             : comma - start);
            if (!tag.empty()) {
                const auto& known = all_identity_tags();
                if (std::find(known.begin(), known.end(), tag) == known.end())
                    throw BadArgument("unknown identity tag '" + tag + "'");
                selection.insert(tag);
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (selection.empty()) throw BadArgument("empty --suite selection");
    }

    SuiteResult result = run_suite(primes, selection, jobs);
    ordered_json js = suite_to_json(result);
    std::string doc = js.dump(1) + "\n";
    if (report.empty()) {
        std::cout << doc;
    } else {
        write_output(doc, report);
        std::cout << "pass=" << result.passed << " fail=" << result.failed
                  << " error=" << result.errors << "\n";
    }
    return (result.failed == 0 && result.errors == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact constructor and identity verifier for finite polylogarithms over F_p"};
    app.require_subcommand(1);

    std::string p_text, object, output, suite = "all", report;
    std::string show_format = "text", table_format = "csv";
    std::int64_t d = 1;
    std::uint32_t s = 1;
    unsigned jobs = 1;
    std::optional<std::uint32_t> max_prime;

    CLI::App* show = app.add_subcommand("show", "Print one constructed object");
    show->add_option("--p", p_text, "Odd prime")->required();
    show->add_option("--object", object,
                     "One of: polylog, gen_polylog, laguerre, gexp, trunc_exp, T, b1s")
        ->required();
    show->add_option("--d", d, "Polylogarithm index (polylog, gen_polylog)");
    show->add_option("--s", s, "Index s for b1s");
    show->add_option("--format", show_format, "text (default), latex, json");
    show->add_option("--output", output, "Write to file instead of stdout");
    show->add_option("--max-prime", max_prime, "Raise the prime cap (default 101)");

    CLI::App* table = app.add_subcommand("table", "Emit a coefficient table");
    table->add_option("--p", p_text, "Odd prime")->required();
    table->add_option("--object", object, "One of: g, e, b1s")->required();
    table->add_option("--format", table_format, "csv (default), latex");
    table->add_option("--output", output, "Write to file instead of stdout");
    table->add_option("--max-prime", max_prime, "Raise the prime cap (default 101)");

    CLI::App* verify = app.add_subcommand("verify", "Run identity suites and emit a JSON report");
    verify->add_option("--p", p_text, "Odd prime or range lo..hi")->required();
    verify->add_option("--suite", suite, "Comma-separated identity tags, or 'all'");
    verify->add_option("--report", report, "Write the JSON report to this file");
    verify->add_option("--jobs", jobs, "Worker threads (default 1)");
    verify->add_option("--max-prime", max_prime, "Raise the prime cap (default 13 for verify)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (show->parsed()) {
            if (show_format != "text" && show_format != "latex" && show_format != "json")
                throw BadArgument("show: format must be text, latex or json");
            std::uint32_t cap = effective_cap(kShowTableCap, max_prime);
            return run_show(parse_single_prime(p_text, cap), object, d, s, show_format, output);
        }
        if (table->parsed()) {
            if (table_format != "csv" && table_format != "latex")
                throw BadArgument("table: format must be csv or latex");
            std::uint32_t cap = effective_cap(kShowTableCap, max_prime);
            return run_table(parse_single_prime(p_text, cap), object, table_format, output);
        }
        if (verify->parsed()) {
            if (jobs == 0) throw BadArgument("verify: --jobs must be at least 1");
            std::uint32_t cap = effective_cap(kVerifyCap, max_prime);
            return run_verify(p_text, suite, report, jobs, cap);
        }
    } catch (const PoleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BadArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedOrder& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
