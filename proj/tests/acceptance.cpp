// Acceptance suite: runs every top-level requirement at its stated budget and
// prints one pass/fail line per criterion. Exits nonzero if any criterion
// fails. argv[1] must point at the CLI binary (used by the determinism
// criterion).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "polylog/combinatorics.hpp"
#include "polylog/format.hpp"
#include "polylog/verify.hpp"

using namespace polylog;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int number, const std::string& label, bool ok, double ms, const std::string& note = "") {
    std::printf("[%s] criterion %d: %s (%.0f ms)%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                ms, note.empty() ? "" : (" -- " + note).c_str());
    if (!ok) ++g_failures;
}

bool suite_all_pass(const std::vector<std::uint32_t>& primes, const std::set<std::string>& tags,
                    unsigned jobs, SuiteResult* out = nullptr) {
    SuiteResult r = run_suite(primes, tags, jobs);
    if (out) *out = r;
    return r.failed == 0 && r.errors == 0 && !r.runs.empty();
}

// --- criterion 1 -----------------------------------------------------------

std::uint64_t vp_factorial(std::uint64_t n, std::uint32_t p) {
    std::uint64_t total = 0;
    for (std::uint64_t q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break;
    }
    return total;
}

std::uint64_t valuation_oracle(std::uint32_t k, std::uint32_t a, std::uint32_t p) {
    std::uint64_t total = 0;
    for (std::uint32_t s = 1; s <= k; ++s)
        total += vp_factorial(static_cast<std::uint64_t>(s) * a, p) - vp_factorial(a, p) -
                 vp_factorial(static_cast<std::uint64_t>(s - 1) * a, p);
    return total;
}

void criterion1() {
    auto start = Clock::now();
    bool ok = true;
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        auto gv = build_g(p, GMethod::valuation);
        auto gj = build_g(p, GMethod::jacobi);
        for (std::uint32_t k = 1; k < p && ok; ++k) ok = gv[k] == gj[k];
        for (std::uint32_t k = 1; k < p && ok; ++k)
            for (std::uint32_t a = 1; a < p && ok; ++a)
                ok = valuation_e(k, a, p) == valuation_oracle(k, a, p);
        if (!ok) break;
    }
    double ms = elapsed_ms(start);
    report(1, "g-table cross-check and exact valuation oracle, p in {3..13}", ok && ms < 5000.0,
           ms);
}

// --- criterion 2 -----------------------------------------------------------

void criterion2() {
    auto start = Clock::now();
    bool ok = suite_all_pass({3, 5, 7}, {"l_diff", "thm2", "thm1_coeffs", "characterization"}, 1);
    double ms = elapsed_ms(start);
    report(2, "functional-equation suite (L_diff, thm2, thm1, probe) for p in {3,5,7}",
           ok && ms < 60000.0, ms);
}

// --- criteria 3, 4 ---------------------------------------------------------

void criterion3() {
    auto start = Clock::now();
    bool ok = suite_all_pass({3, 5, 7, 11, 13}, {"eq2", "eq3", "eq4", "eq5", "eq6", "eq7"}, 1);
    double ms = elapsed_ms(start);
    report(3, "classical equation suite eq2-eq7 for p in {3..13}", ok && ms < 10000.0, ms);
}

void criterion4() {
    auto start = Clock::now();
    bool ok = suite_all_pass({3, 5, 7, 11, 13},
                             {"inverse", "periodicity", "theta_chain", "b1s_properties"}, 1);
    double ms = elapsed_ms(start);
    report(4, "inverse/periodicity/theta-chain/b1s suite for p in {3..13}", ok && ms < 30000.0,
           ms);
}

// --- criterion 5 -----------------------------------------------------------

void criterion5() {
    const std::vector<std::uint32_t> primes{3, 5, 7, 11};
    const std::set<std::string> tags{"g_symmetry", "g_highest",  "gen_inversion",
                                     "lemma_g0g1", "thm_powers", "thm_xh",
                                     "thm_gp",     "aux_identities"};
    cache::clear();
    auto start = Clock::now();
    SuiteResult single;
    bool ok = suite_all_pass(primes, tags, 1, &single);
    double cold_ms = elapsed_ms(start);
    ok = ok && cold_ms < 120000.0;

    std::string note;
    unsigned cores = std::thread::hardware_concurrency();
    // Results must be identical across worker counts regardless of core count.
    SuiteResult multi = run_suite(primes, tags, 4);
    if (multi.runs.size() != single.runs.size()) ok = false;
    for (std::size_t i = 0; ok && i < multi.runs.size(); ++i)
        ok = multi.runs[i].identity == single.runs[i].identity &&
             multi.runs[i].prime == single.runs[i].prime &&
             multi.runs[i].params == single.runs[i].params &&
             multi.runs[i].status == single.runs[i].status;
    if (cores >= 2) {
        auto h1 = Clock::now();
        run_suite(primes, tags, 1);
        double hot1 = elapsed_ms(h1);
        auto h2 = Clock::now();
        run_suite(primes, tags, 2);
        double hot2 = elapsed_ms(h2);
        double speedup = hot2 > 0 ? hot1 / hot2 : 0.0;
        std::ostringstream os;
        os << "2-worker speedup x" << speedup;
        note = os.str();
        ok = ok && speedup >= 1.3;
    } else {
        note = "single-core host: speedup unmeasurable, worker-count determinism verified";
    }
    report(5, "higher-identity suite for p in {3,5,7,11}, single worker", ok, cold_ms, note);
}

// --- criterion 6 -----------------------------------------------------------

Poly<RatFunc> perturb(const Poly<RatFunc>& f, std::size_t k) {
    std::vector<RatFunc> c(f.coeffs());
    if (c.size() <= k) c.resize(k + 1);
    RatFunc one(Fp(1, f.leading().prime()));
    c[k] = c[k] + one;
    return Poly<RatFunc>(std::move(c));
}

PolyFp perturb_fp(const PolyFp& f, std::size_t k, std::uint32_t p) {
    std::vector<Fp> c(f.coeffs());
    if (c.size() <= k) c.resize(k + 1);
    c[k] = c[k] + Fp(1, p);
    return PolyFp(std::move(c));
}

std::vector<RatFunc> perturb_table(std::vector<RatFunc> g, std::size_t k) {
    g[k] = g[k] + g[k].one();
    return g;
}

int run_cli(const std::string& command) {
    int rc = std::system(command.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void criterion6(const std::string& cli) {
    auto start = Clock::now();
    const std::uint32_t p = 5;
    auto g = *cache::g_table(p);
    auto T = *cache::tpoly(p);
    auto L = *cache::laguerre(p);
    PolyFp l1 = build_polylog(p, 1);

    std::vector<std::pair<std::string, detail::Outcome>> mutated;
    mutated.emplace_back("l_diff", detail::check_L_diff(p, perturb(L, 1)));
    {
        auto corr = build_thm2_correction(p);
        corr.set(1, p - 1, BiFrac(p));
        mutated.emplace_back("thm2", detail::check_thm2(p, corr));
    }
    {
        auto coeffs = build_thm1_coeffs(p);
        coeffs[1] = BiFrac(p);
        mutated.emplace_back("thm1_coeffs", detail::check_thm1(p, L, coeffs));
    }
    mutated.emplace_back("characterization", detail::check_characterization(p, 1, true));
    mutated.emplace_back("inverse", detail::check_inverse(p, perturb(build_gen_polylog(p, 1), 2), L));
    mutated.emplace_back("periodicity", detail::check_periodicity(p, 1, perturb_table(g, 2), g));
    mutated.emplace_back("theta_chain", detail::check_theta_chain(p, 1, perturb_table(g, 3), g));
    mutated.emplace_back("eq2", detail::check_eq2(p, perturb_fp(l1, 2, p)));
    mutated.emplace_back("eq3", detail::check_eq3(p, perturb_fp(l1, 1, p)));
    mutated.emplace_back("eq4", detail::check_eq4(p, 2, perturb_fp(build_polylog(p, 2), 1, p)));
    mutated.emplace_back("eq5",
                         detail::check_eq5(p, 1, 2, perturb_fp(build_polylog(p, 1), 2, p)));
    mutated.emplace_back("eq6",
                         detail::check_eq6(p, 1, 2, perturb_fp(build_polylog(p, 1), 2, p)));
    mutated.emplace_back("eq7", detail::check_eq7(p, 2, l1, perturb_fp(build_polylog(p, 2), 1, p)));
    mutated.emplace_back("g_symmetry", detail::check_g_symmetry(p, perturb_table(g, 2)));
    mutated.emplace_back("g_highest", detail::check_g_highest(p, g, perturb_fp(T, 1, p)));
    mutated.emplace_back("b1s_properties", [&] {
        auto b1s = *cache::b1s_all(p);
        b1s[1] = perturb_fp(b1s[1], 0, p);
        return detail::check_b1s_properties(p, b1s);
    }());
    mutated.emplace_back("gen_inversion", detail::check_gen_inversion(p, 1, g, perturb_fp(T, 2, p)));
    mutated.emplace_back("lemma_g0g1", detail::check_lemma_G0G1(p, perturb_table(g, 2), T));
    mutated.emplace_back("thm_powers", detail::check_thm_powers(p, 2, perturb_table(g, 2), T));
    mutated.emplace_back("thm_xh", detail::check_thm_xh(p, 2, 3, perturb_table(g, 2), T));
    mutated.emplace_back("thm_gp", [&] {
        auto sums = detail::compute_gp_sums(p, g, perturb_fp(T, 1, p));
        return detail::check_thm_gp(p, 1, sums);
    }());
    mutated.emplace_back("aux_identities",
                         detail::check_aux_identities(p, 1, g, perturb_fp(T, 1, p), L));

    bool ok = mutated.size() == all_identity_tags().size();
    std::string first_bad;
    for (const auto& [tag, outcome] : mutated) {
        bool flipped = !outcome.ok && outcome.witness.has_value() &&
                       !outcome.witness->position.empty();
        if (!flipped && first_bad.empty()) first_bad = tag;
        ok = ok && flipped;
    }
    // Wrong-modulus negative control for the G0*G1 lemma.
    auto wrong = detail::check_lemma_G0G1(p, g, T, /*wrong_modulus_control=*/true);
    if (wrong.ok) {
        ok = false;
        if (first_bad.empty()) first_bad = "lemma_g0g1(wrong-modulus)";
    }
    // A mutated g table injected through the harness hook must fail the CLI
    // run with a recorded witness.
    {
        std::string path = "acceptance_mutated.json";
        int rc = run_cli("POLYLOG_MUTATION=g:2 " + cli + " verify --p 5 --suite inverse --report " +
                         path + " > /dev/null");
        std::string doc = slurp(path);
        std::remove(path.c_str());
        bool hook_ok = rc == 1 && doc.find("\"status\": \"fail\"") != std::string::npos &&
                       doc.find("\"witness\"") != std::string::npos;
        if (!hook_ok && first_bad.empty()) first_bad = "cli-mutation-hook";
        ok = ok && hook_ok;
    }
    report(6, "mutation controls: one failing single-coefficient mutation per identity tag", ok,
           elapsed_ms(start), first_bad.empty() ? "" : "no flip for " + first_bad);
}

// --- criterion 7 -----------------------------------------------------------

void criterion7(const std::string& cli) {
    auto start = Clock::now();
    std::string r1 = "acceptance_report_1.json", r2 = "acceptance_report_2.json";
    int rc1 = run_cli(cli + " verify --p 3..11 --suite all --report " + r1 + " > /dev/null");
    int rc2 = run_cli(cli + " verify --p 3..11 --suite all --report " + r2 + " > /dev/null");
    bool ok = rc1 == 0 && rc2 == 0;
    std::string note;
    if (ok) {
        std::regex millis("\"millis\": \\d+");
        std::string raw = slurp(r1);
        std::string a = std::regex_replace(raw, millis, "\"millis\": 0");
        std::string b = std::regex_replace(slurp(r2), millis, "\"millis\": 0");
        ok = !a.empty() && a == b;
        if (!ok) note = "reports differ beyond millis";
        // Exactness: no floating-point anywhere in the serialized report.
        if (ok && std::regex_search(raw, std::regex("[0-9]\\.[0-9]"))) {
            ok = false;
            note = "floating-point literal found in the report";
        }
    } else {
        note = "exit codes " + std::to_string(rc1) + "/" + std::to_string(rc2);
    }
    std::remove(r1.c_str());
    std::remove(r2.c_str());
    report(7, "two consecutive CLI runs are byte-identical apart from millis, exit 0", ok,
           elapsed_ms(start), note);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6(argv[1]);
    criterion7(argv[1]);
    if (g_failures == 0) {
        std::printf("acceptance: all 7 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
