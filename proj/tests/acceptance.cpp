// End-to-end acceptance gate: one line per shipped guarantee, with pinned
// tolerances and time budgets.  Guarantees about the command-line tool are
// checked through the real binary (path injected at build time); everything
// else goes through the library directly.  Exit status 0 iff every line
// passes.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "brute_oracle.hpp"
#include "fewnom/cyclotomic.hpp"
#include "fewnom/errors.hpp"
#include "fewnom/expr.hpp"
#include "fewnom/factorize.hpp"
#include "fewnom/mahler.hpp"
#include "fewnom/teichmuller.hpp"
#include "fewnom/whitehead.hpp"

using json = nlohmann::json;
using namespace fewnom;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(FEWNOM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

class Timer {
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();

  public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }
};

int failures = 0;

void report(int id, const std::string& label, bool pass, const std::string& detail,
            double seconds) {
    std::ostringstream line;
    line << (pass ? "[PASS]" : "[FAIL]") << " " << id << ": " << label << " (" << detail
         << "; " << std::fixed << std::setprecision(2) << seconds << "s)";
    std::cout << line.str() << "\n";
    if (!pass) ++failures;
}

// 1. Tool-level: every odd m in {1,3,5} with n in 1..8, gcd(m,n) = 1, splits
//    as (x^2+1) * irreducible with multiplicity exactly one and a non-zero
//    derivative witness; a certified-reducible quotient exits 4 and is logged
//    as data, not failed.  Budget: 10 s for the whole grid.
void criterion_1() {
    Timer t;
    bool pass = true;
    std::string detail;
    int runs = 0, logged_reducible = 0;
    for (unsigned m : {1u, 3u, 5u}) {
        for (unsigned n = 1; n <= 8 && pass; ++n) {
            if (gcd(Int(m), Int(n)) != 1) continue;
            ++runs;
            std::ostringstream args;
            args << "whitehead --m " << m << " --n " << n << " --json";
            CliResult r = run_cli(args.str());
            json j;
            try {
                j = json::parse(r.out);
            } catch (...) {
                pass = false;
                detail = "unparseable output at m=" + std::to_string(m) +
                         " n=" + std::to_string(n);
                break;
            }
            if (r.exit_code == 4 && j.value("quotient_irreducible", true) == false) {
                ++logged_reducible;
                std::cout << "  note: reducible quotient at m=" << m << " n=" << n
                          << " (exit 4, logged)\n";
                continue;
            }
            bool ok = r.exit_code == 0 && j.value("witness_nonzero", false) &&
                      j.value("quotient_irreducible", false) &&
                      j.value("degree", -1) == static_cast<int>(2 * m + 4 * n) &&
                      j.value("trace_field_degree", 0u) == 2 * n + m - 1;
            if (!ok) {
                pass = false;
                detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                         " exit=" + std::to_string(r.exit_code);
            }
        }
    }
    double s = t.seconds();
    if (pass && s >= 10.0) {
        pass = false;
        detail = "over the 10s budget";
    }
    if (pass)
        detail = std::to_string(runs) + " tool runs, " +
                 std::to_string(logged_reducible) + " logged reducible";
    report(1, "two-term family splits certified through the tool", pass, detail,
           s);
}

// 2. The two trace recursion orders agree and the connecting identity to the
//    two-term form holds for all 0 <= m, n <= 8 except (0,0).  Budget: 5 s.
void criterion_2() {
    Timer t;
    bool pass = true;
    std::string detail = "81 grid points x 2 directions";
    for (unsigned m = 0; m <= 8 && pass; ++m) {
        for (unsigned n = 0; n <= 8 && pass; ++n) {
            if (m == 0 && n == 0) continue;
            if (!verify_trace_identity(m, n, TraceDirection::m_last) ||
                !verify_trace_identity(m, n, TraceDirection::n_last) ||
                trace_poly(m, n, TraceDirection::m_last) !=
                    trace_poly(m, n, TraceDirection::n_last)) {
                pass = false;
                detail = "mismatch at m=" + std::to_string(m) + " n=" + std::to_string(n);
            }
        }
    }
    double s = t.seconds();
    if (pass && s >= 5.0) {
        pass = false;
        detail = "over the 5s budget";
    }
    report(2, "trace identity holds in both recursion orders", pass, detail, s);
}

// 3. deg T_{m,n} = 2n + m - 1 on the same grid.  Budget: 5 s.
void criterion_3() {
    Timer t;
    bool pass = true;
    std::string detail = "degree = 2n+m-1 on the 8x8 grid";
    for (unsigned m = 0; m <= 8 && pass; ++m) {
        for (unsigned n = 0; n <= 8 && pass; ++n) {
            if (m == 0 && n == 0) continue;
            if (trace_poly(m, n).degree() != static_cast<int>(2 * n + m) - 1) {
                pass = false;
                detail = "wrong degree at m=" + std::to_string(m) +
                         " n=" + std::to_string(n);
            }
        }
    }
    double s = t.seconds();
    if (pass && s >= 5.0) {
        pass = false;
        detail = "over the 5s budget";
    }
    report(3, "trace polynomial degree formula", pass, detail, s);
}

// 4. Tool-level: the (448, 441) five-term member has cyclotomic part exactly
//    {10, 12, 70, 84}, each with multiplicity one and a non-zero witness; the
//    degree-840 cofactor is reciprocal with no cyclotomic factor, and any
//    irreducibility claim rests on a fast modular certificate (otherwise the
//    tool must say "incomplete").  Budget: 60 s.
void criterion_4() {
    Timer t;
    bool pass = true;
    std::string detail;
    CliResult r = run_cli("teich --a 448 --b 441 --json");
    json j;
    try {
        j = json::parse(r.out);
    } catch (...) {
        pass = false;
        detail = "unparseable output";
    }
    if (pass) {
        std::vector<std::pair<unsigned long, unsigned>> want = {
            {10, 1}, {12, 1}, {70, 1}, {84, 1}};
        bool obs_ok = j["observed_cyclotomic"].size() == want.size();
        for (std::size_t i = 0; obs_ok && i < want.size(); ++i) {
            obs_ok = j["observed_cyclotomic"][i]["index"] == want[i].first &&
                     j["observed_cyclotomic"][i]["multiplicity"] == want[i].second;
        }
        bool wit_ok = true;
        for (const auto& w : j["witnesses"]) wit_ok = wit_ok && w.value("nonzero", false);
        std::string irr = j["cofactor"].value("irreducible", "");
        std::string cert = j["cofactor"].value("certificate", "");
        bool irr_ok =
            irr == "incomplete" ||
            (irr == "irreducible" && (cert == "linear" || cert == "irreducible-mod-p" ||
                                      cert == "degree-pattern"));
        pass = r.exit_code == 0 && obs_ok && j.value("classification_match", false) &&
               wit_ok && j["cofactor"].value("degree", -1) == 840 &&
               j["cofactor"].value("reciprocal", false) && irr_ok;
        detail = "indices {10,12,70,84}, cofactor deg 840 " + irr;
        if (!pass) detail = "structure mismatch, exit=" + std::to_string(r.exit_code);
    }
    double s = t.seconds();
    if (pass && s >= 60.0) {
        pass = false;
        detail = "over the 60s budget";
    }
    report(4, "large five-term member certified through the tool", pass, detail, s);
}

// 5. The residue-class prediction of cyclotomic indices matches the exact
//    cyclotomic part for every 1 <= a, b <= 12.  Budget: 30 s.
void criterion_5() {
    Timer t;
    auto discrepancies = ct_consistency(12, 12);
    bool pass = discrepancies.empty();
    std::string detail = "144 members, " + std::to_string(discrepancies.size()) +
                         " discrepancies";
    for (const auto& d : discrepancies)
        std::cout << "  discrepancy at a=" << d.a << " b=" << d.b << ": " << d.note
                  << "\n";
    double s = t.seconds();
    if (pass && s >= 30.0) {
        pass = false;
        detail = "over the 30s budget";
    }
    report(5, "cyclotomic-index prediction matches exact computation", pass, detail, s);
}

// 6. The modification closure of the built-in factored seed stabilizes at
//    round 5 with exactly 32 members, 8 of which carry the two-positive/
//    three-negative sign pattern, and none of those 8 admits a non-degenerate
//    exponent-system solution.  Budget: 10 s.
void criterion_6() {
    Timer t;
    bool pass = true;
    std::string detail;
    ClosureResult closure = modification_closure(closure_seed());
    unsigned pattern = 0;
    std::size_t matches = 0;
    for (const auto& m : closure.members) {
        unsigned pos = 0, neg = 0;
        for (const auto& term : m.poly.terms()) (term.c > 0 ? pos : neg)++;
        if (m.poly.term_count() == 5 && pos == 2 && neg == 3) {
            ++pattern;
            matches += exponent_system_match(m.poly).size();
        }
    }
    pass = closure.rounds == 5 && closure.members.size() == 32 && pattern == 8 &&
           matches == 0;
    detail = "J=" + std::to_string(closure.rounds) +
             ", size=" + std::to_string(closure.members.size()) +
             ", pattern members=" + std::to_string(pattern) +
             ", exponent matches=" + std::to_string(matches);
    double s = t.seconds();
    if (pass && s >= 10.0) {
        pass = false;
        detail = "over the 10s budget";
    }
    report(6, "modification closure invariants", pass, detail, s);
}

// 7. Measure calibration: the reference degree-10 small-measure polynomial
//    evaluates to 1.176280818 within 1e-6 with a covering bound, and the
//    two-variable measure of the five-term source is 1.28573 within 1e-3 on
//    a 512-grid with the refinement bound covering that target.  Budget: 60 s.
void criterion_7() {
    Timer t;
    bool pass = true;
    std::string detail;
    IntPoly lehmer({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    auto m1 = mahler_univariate(lehmer);
    bool uni_ok = std::abs(m1.value - 1.176280818) < 1e-6 &&
                  m1.value - m1.error_bound <= 1.176280818260 &&
                  1.176280818260 <= m1.value + m1.error_bound;
    auto m2 = mahler_bivariate(xy_p(), 512);
    bool biv_ok = std::abs(m2.value - 1.28573) < 1e-3 &&
                  m2.value - m2.error_bound <= 1.28573 &&
                  1.28573 <= m2.value + m2.error_bound;
    pass = uni_ok && biv_ok;
    {
        std::ostringstream d;
        d << std::setprecision(12) << "M1=" << m1.value << "+-" << m1.error_bound
          << ", M2=" << m2.value << "+-" << m2.error_bound;
        detail = d.str();
    }
    double s = t.seconds();
    if (pass && s >= 60.0) {
        pass = false;
        detail = "over the 60s budget";
    }
    report(7, "measure calibration with covering error bounds", pass, detail, s);
}

// 8. The one-variable specializations along (1, g) for g in {10, 20, 50}
//    approach the two-variable value on net: the final distance to 1.28573 is
//    below 0.02 and does not exceed the worst earlier distance (the sequence
//    is not pointwise monotone; g = 20 overshoots).  The small-measure gate
//    certifies the g = 50 specialization.  Budget: 60 s.
void criterion_8() {
    Timer t;
    BivarPoly p = xy_p();
    auto seq = lawton_sequence(p, {{1, 10}, {1, 20}, {1, 50}});
    double d10 = std::abs(seq[0].value - 1.28573);
    double d20 = std::abs(seq[1].value - 1.28573);
    double d50 = std::abs(seq[2].value - 1.28573);
    auto gate = lehmer_gate(build_gt(1, 50));
    bool pass = d50 < 0.02 && d50 <= std::max(d10, d20) &&
                gate.conditionally_irreducible;
    std::ostringstream d;
    d << std::setprecision(6) << "distances " << d10 << "/" << d20 << "/" << d50
      << ", gate " << (gate.conditionally_irreducible ? "certified" : "inconclusive");
    std::string detail = d.str();
    double s = t.seconds();
    if (pass && s >= 60.0) {
        pass = false;
        detail = "over the 60s budget";
    }
    report(8, "specialization sequence approaches the two-variable measure", pass,
           detail, s);
}

// 9. The factorizer agrees with a brute-force oracle on 10^4 random
//    polynomials of degree <= 4 with coefficients in [-3, 3], and the
//    three-part split reproduces the worked low-degree example verbatim.
void criterion_9() {
    Timer t;
    bool pass = true;
    std::string detail;
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> coeff(-3, 3);
    int checked = 0;
    while (checked < 10000 && pass) {
        std::vector<Int> cs(5);
        bool all_zero = true;
        for (auto& c : cs) {
            int v = coeff(rng);
            c = v;
            if (v != 0) all_zero = false;
        }
        if (all_zero) continue;
        IntPoly p(cs);
        ++checked;
        auto expected = oracle::brute_factor(p);
        auto got = factor_z(p);
        if (got.unit != expected.unit || got.content != expected.content ||
            got.content_primes != expected.content_primes ||
            got.factors != expected.factors) {
            pass = false;
            detail = "disagreement on " + render_univariate(p);
        }
    }
    if (pass) {
        IntPoly f = IntPoly({2, -2}) * IntPoly({1, 1, 1, 3, 1, 1, 1});
        auto parts = three_part_split(f);
        bool split_ok =
            parts.unit == 1 && parts.content == 2 &&
            parts.content_primes ==
                std::vector<std::pair<Int, unsigned>>{{2, 1}} &&
            parts.cyclotomic == std::vector<CyclotomicHit>{{1, 1}} &&
            parts.reciprocal.empty() &&
            parts.nonreciprocal_part == IntPoly({-1, -1, -1, -3, -1, -1, -1}) &&
            reconstruct(parts) == f;
        if (!split_ok) {
            pass = false;
            detail = "worked three-part split mismatch";
        } else {
            detail = std::to_string(checked) + " random cross-checks + worked split";
        }
    }
    report(9, "factorizer matches the brute-force oracle", pass, detail, t.seconds());
}

// 10. The filling-parameter threshold is the exact rational 5^17/2 - 1/4 at
//     m = 1 and, for m in {1,3,5}, equals the generic exponent threshold
//     translated through k = 4n + m.
void criterion_10() {
    Timer t;
    Int p17;
    mpz_ui_pow_ui(p17.get_mpz_t(), 5, 17);
    bool pass = n_threshold_whitehead(1) == Rat(p17) / 2 - Rat(1, 4);
    std::string detail = "5^17/2 - 1/4 exact";
    for (unsigned m : {1u, 3u, 5u}) {
        IntPoly f = binomial_power(1, 1, m);
        IntPoly g = -binomial_power(1, -1, m);
        auto rep = schinzel_conditions(f, g, Int(m) + 4);
        if (n_threshold_whitehead(m) != (rep.n_threshold - m) / 4) {
            pass = false;
            detail = "translation mismatch at m=" + std::to_string(m);
        }
    }
    report(10, "filling threshold matches the generic exponent threshold", pass,
           detail, t.seconds());
}

} // namespace

int main() {
    std::cout << "tool under test: " << FEWNOM_CLI_PATH << "\n";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures == 0) {
        std::cout << "all 10 criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria FAILED\n";
    return 1;
}
