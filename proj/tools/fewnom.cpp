// Command-line surface for the fewnom library: subcommands for the
// two-term Dehn-filling family, the five-term specializations with their
// cyclotomic parts, factorization, Mahler measures, the modification
// closure, parameter sweeps, and the small-index enumeration.
//
// Exit codes: 0 success; 2 usage or input error; 3 computation incomplete
// (factor recombination or numeric iteration gave up -- never a wrong
// answer); 4 structure violation (a computed fact contradicts what the
// construction guarantees: such a finding is exit-code-distinguishable so
// sweeps can flag it).

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fewnom/arith.hpp"
#include "fewnom/bivar.hpp"
#include "fewnom/cyclotomic.hpp"
#include "fewnom/errors.hpp"
#include "fewnom/expr.hpp"
#include "fewnom/factorize.hpp"
#include "fewnom/intpoly.hpp"
#include "fewnom/mahler.hpp"
#include "fewnom/teichmuller.hpp"
#include "fewnom/whitehead.hpp"

namespace {

using fewnom::Int;
using fewnom::IntPoly;
using ordered_json = nlohmann::ordered_json;

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string gauss_str(const fewnom::GaussInt& g) {
    if (g.is_zero()) return "0";
    std::string s;
    if (g.re != 0) s += g.re.get_str();
    if (g.im != 0) {
        if (g.im > 0 && !s.empty()) s += "+";
        if (g.im == -1)
            s += "-";
        else if (g.im != 1)
            s += g.im.get_str();
        s += "i";
    }
    return s;
}

const char* certificate_name(fewnom::IrreducibilityCertificate c) {
    using C = fewnom::IrreducibilityCertificate;
    switch (c) {
        case C::linear: return "linear";
        case C::irreducible_mod_p: return "irreducible-mod-p";
        case C::degree_pattern: return "degree-pattern";
        case C::factorization: return "factorization";
        case C::squarefree_defect: return "squarefree-defect";
        case C::factor_found: return "factor-found";
        case C::none: return "none";
    }
    return "none";
}

// Variable relabeling for display: the trace polynomials live in z.
std::string in_z(const IntPoly& p) {
    std::string s = fewnom::render_univariate(p);
    for (char& c : s)
        if (c == 'x') c = 'z';
    return s;
}

unsigned thread_budget() {
    if (const char* env = std::getenv("FEWNOM_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && v <= 256) return (unsigned)v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// ---------------------------------------------------------------- whitehead

int run_whitehead(unsigned m, unsigned n, bool json_mode) {
    Stopwatch sw;
    IntPoly fw = fewnom::build_fw(m, n);
    fewnom::X2p1Structure st = fewnom::x2p1_structure(m, n);
    IntPoly trace = fewnom::trace_poly(m, n);
    unsigned field_degree = fewnom::trace_field_degree(m, n);
    fewnom::IrreducibilityResult irr = fewnom::is_irreducible_z(st.quotient);
    bool reducible = irr.status == fewnom::IrreducibilityStatus::reducible;
    bool witness_ok = !st.derivative_witness.is_zero();

    if (json_mode) {
        ordered_json out;
        out["command"] = "whitehead";
        out["m"] = m;
        out["n"] = n;
        out["fw"] = fewnom::render_univariate(fw);
        out["degree"] = fw.degree();
        out["quotient"] = fewnom::render_univariate(st.quotient);
        out["witness"] = gauss_str(st.derivative_witness);
        out["witness_nonzero"] = witness_ok;
        out["trace"] = fewnom::render_univariate(trace);
        out["trace_degree"] = trace.degree();
        out["trace_field_degree"] = field_degree;
        out["quotient_irreducible"] =
            irr.status == fewnom::IrreducibilityStatus::irreducible;
        out["certificate"] = certificate_name(irr.certificate);
        out["ms"] = sw.ms();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "F_{" << m << "," << n
                  << "} = " << fewnom::render_univariate(fw) << "\n";
        std::cout << "quotient by x^2+1 = "
                  << fewnom::render_univariate(st.quotient) << "\n";
        std::cout << "derivative witness = " << gauss_str(st.derivative_witness)
                  << (witness_ok ? "  (non-zero: multiplicity exactly 1)"
                                 : "  (ZERO: multiplicity defect!)")
                  << "\n";
        std::cout << "trace polynomial = " << in_z(trace) << "  (degree "
                  << trace.degree() << ")\n";
        std::cout << "trace-field degree = " << field_degree << "\n";
        std::cout << "quotient irreducible: "
                  << (reducible ? "NO"
                                : irr ? "yes" : "unknown")
                  << "  [" << certificate_name(irr.certificate) << "]\n";
    }
    if (!witness_ok || reducible) {
        std::cerr << "structure violation: the x^2+1 quotient for m=" << m
                  << " n=" << n
                  << (reducible ? " is reducible" : " has a zero witness")
                  << "\n";
        return 4;
    }
    return 0;
}

// -------------------------------------------------------------------- teich

int run_teich(unsigned long a, unsigned long b, bool json_mode) {
    Stopwatch sw;
    IntPoly gt = fewnom::build_gt(a, b);
    std::vector<fewnom::CtClassHit> predicted_hits = fewnom::ct_part_hits(a, b);
    std::vector<unsigned long> predicted = fewnom::ct_part(a, b);
    fewnom::CyclotomicPart observed = fewnom::cyclotomic_part(gt);

    bool match = observed.factors.size() == predicted.size();
    for (std::size_t i = 0; match && i < predicted.size(); ++i)
        match = observed.factors[i].index == predicted[i] &&
                observed.factors[i].multiplicity == 1;

    struct WitnessRow {
        unsigned long index;
        IntPoly value;
    };
    std::vector<WitnessRow> witnesses;
    bool witnesses_ok = true;
    for (unsigned long idx : predicted) {
        IntPoly w = fewnom::multiplicity_witness(a, b, idx);
        witnesses_ok = witnesses_ok && !w.is_zero();
        witnesses.push_back({idx, std::move(w)});
    }

    const IntPoly& cof = observed.cofactor;
    bool cof_reciprocal = cof.degree() >= 1 && fewnom::is_reciprocal(cof);
    fewnom::IrreducibleOptions fast;
    fast.fast_only = true;
    fewnom::IrreducibilityResult irr =
        cof.degree() >= 1 ? fewnom::is_irreducible_z(fewnom::primitive_part(cof), fast)
                          : fewnom::IrreducibilityResult{
                                fewnom::IrreducibilityStatus::unknown,
                                fewnom::IrreducibilityCertificate::none, 0};
    const char* irr_text =
        cof.degree() < 1 ? "trivial"
        : irr.status == fewnom::IrreducibilityStatus::irreducible ? "irreducible"
        : irr.status == fewnom::IrreducibilityStatus::reducible   ? "reducible"
                                                                  : "incomplete";
    fewnom::LehmerGateResult gate = fewnom::lehmer_gate(observed);

    if (json_mode) {
        ordered_json out;
        out["command"] = "teich";
        out["a"] = a;
        out["b"] = b;
        out["gt"] = fewnom::render_univariate(gt);
        out["degree"] = gt.degree();
        ordered_json pred = ordered_json::array();
        for (const auto& h : predicted_hits)
            pred.push_back({{"index", h.index},
                            {"case", h.case_id},
                            {"base", h.base},
                            {"d", h.d}});
        out["predicted_cyclotomic"] = pred;
        ordered_json obs = ordered_json::array();
        for (const auto& h : observed.factors)
            obs.push_back({{"index", h.index}, {"multiplicity", h.multiplicity}});
        out["observed_cyclotomic"] = obs;
        out["classification_match"] = match;
        ordered_json wit = ordered_json::array();
        for (const auto& w : witnesses)
            wit.push_back({{"index", w.index},
                           {"witness", fewnom::render_univariate(w.value)},
                           {"nonzero", !w.value.is_zero()}});
        out["witnesses"] = wit;
        out["cofactor"] = {{"degree", cof.degree()},
                           {"reciprocal", cof_reciprocal},
                           {"irreducible", irr_text},
                           {"certificate", certificate_name(irr.certificate)}};
        out["lehmer_gate"] = {
            {"measure", gate.measure.value},
            {"error_bound", gate.measure.error_bound},
            {"threshold", gate.threshold},
            {"conditionally_irreducible", gate.conditionally_irreducible}};
        out["ms"] = sw.ms();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "G_{" << a << "," << b
                  << "} = " << fewnom::render_univariate(gt) << "  (degree "
                  << gt.degree() << ")\n";
        std::cout << "predicted cyclotomic part:";
        if (predicted.empty()) std::cout << " (none)";
        for (const auto& h : predicted_hits)
            std::cout << " Phi_" << h.index << "[case " << h.case_id << ", d="
                      << h.d << "]";
        std::cout << "\n";
        std::cout << "observed cyclotomic part: ";
        if (observed.factors.empty()) std::cout << "(none)";
        for (const auto& h : observed.factors)
            std::cout << "Phi_" << h.index << "^" << h.multiplicity << " ";
        std::cout << (match ? " [matches prediction]" : " [MISMATCH]") << "\n";
        for (const auto& w : witnesses)
            std::cout << "multiplicity witness at Phi_" << w.index << ": "
                      << fewnom::render_univariate(w.value)
                      << (w.value.is_zero() ? "  (ZERO)" : "  (non-zero)")
                      << "\n";
        std::cout << "cofactor: degree " << cof.degree() << ", "
                  << (cof_reciprocal ? "reciprocal" : "not reciprocal") << ", "
                  << irr_text << " [" << certificate_name(irr.certificate)
                  << "]\n";
        std::cout << "small-measure gate: M = " << gate.measure.value << " +- "
                  << gate.measure.error_bound << " vs threshold "
                  << gate.threshold << " -> "
                  << (gate.conditionally_irreducible
                          ? "conditionally irreducible"
                          : "inconclusive")
                  << "\n";
    }
    if (!match || !witnesses_ok) {
        std::cerr << "structure violation: cyclotomic classification failed"
                     " for a=" << a << " b=" << b << "\n";
        return 4;
    }
    return 0;
}

// ------------------------------------------------------------------- factor

ordered_json poly_mult_list(const std::vector<std::pair<IntPoly, unsigned>>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& [p, mult] : v)
        arr.push_back({{"factor", fewnom::render_univariate(p)},
                       {"multiplicity", mult}});
    return arr;
}

int run_factor(const std::string& expr, bool json_mode) {
    Stopwatch sw;
    IntPoly p = fewnom::parse_univariate(expr);
    fewnom::FactorParts split = fewnom::three_part_split(p);
    fewnom::Factorization fz = fewnom::factor_z(p);

    if (json_mode) {
        ordered_json out;
        out["command"] = "factor";
        out["poly"] = fewnom::render_univariate(p);
        ordered_json sp;
        sp["unit"] = split.unit;
        sp["content"] = split.content.get_str();
        ordered_json cprimes = ordered_json::array();
        for (const auto& [q, e] : split.content_primes)
            cprimes.push_back({{"prime", q.get_str()}, {"multiplicity", e}});
        sp["content_primes"] = cprimes;
        ordered_json cyc = ordered_json::array();
        for (const auto& h : split.cyclotomic)
            cyc.push_back({{"index", h.index}, {"multiplicity", h.multiplicity}});
        sp["cyclotomic"] = cyc;
        sp["reciprocal"] = poly_mult_list(split.reciprocal);
        sp["nonreciprocal"] = fewnom::render_univariate(split.nonreciprocal_part);
        out["split"] = sp;
        ordered_json fj;
        fj["unit"] = fz.unit;
        fj["content"] = fz.content.get_str();
        fj["factors"] = poly_mult_list(fz.factors);
        out["factorization"] = fj;
        out["ms"] = sw.ms();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "p = " << fewnom::render_univariate(p) << "\n";
        std::cout << "split: unit " << split.unit << ", content "
                  << split.content.get_str() << "\n";
        if (!split.cyclotomic.empty()) {
            std::cout << "  cyclotomic:";
            for (const auto& h : split.cyclotomic)
                std::cout << " Phi_" << h.index << "^" << h.multiplicity;
            std::cout << "\n";
        }
        for (const auto& [q, mult] : split.reciprocal)
            std::cout << "  reciprocal: (" << fewnom::render_univariate(q)
                      << ")^" << mult << "\n";
        std::cout << "  non-reciprocal part: "
                  << fewnom::render_univariate(split.nonreciprocal_part) << "\n";
        std::cout << "factorization: unit " << fz.unit << ", content "
                  << fz.content.get_str() << "\n";
        for (const auto& [q, mult] : fz.factors)
            std::cout << "  (" << fewnom::render_univariate(q) << ")^" << mult
                      << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------- mahler

int run_mahler(const std::string& expr, bool bivariate, unsigned grid,
               double tol, bool json_mode) {
    Stopwatch sw;
    fewnom::MahlerEstimate est;
    std::string rendered;
    if (bivariate) {
        fewnom::BivarPoly p = fewnom::parse_bivariate(expr);
        rendered = fewnom::render_bivariate(p);
        est = fewnom::mahler_bivariate(p, grid);
    } else {
        IntPoly p = fewnom::parse_univariate(expr);
        rendered = fewnom::render_univariate(p);
        est = fewnom::mahler_univariate(p, tol);
    }
    const char* method = est.method == fewnom::MahlerMethod::roots
                             ? "roots"
                             : "torus-quadrature";
    if (json_mode) {
        ordered_json out;
        out["command"] = "mahler";
        out["poly"] = rendered;
        out["bivariate"] = bivariate;
        out["value"] = est.value;
        out["error_bound"] = est.error_bound;
        out["method"] = method;
        if (bivariate) out["grid"] = grid;
        out["ms"] = sw.ms();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout.precision(12);
        std::cout << "M(" << rendered << ") = " << est.value << " +- "
                  << est.error_bound << "  [" << method << "]\n";
    }
    return 0;
}

// ------------------------------------------------------------------ closure

bool has_2pos_3neg(const fewnom::BivarPoly& p) {
    if (p.terms().size() != 5) return false;
    int pos = 0, neg = 0;
    for (const auto& t : p.terms()) (t.c > 0 ? pos : neg)++;
    return pos == 2 && neg == 3;
}

int run_modification_closure(bool json_mode) {
    Stopwatch sw;
    fewnom::ClosureResult closure = fewnom::modification_closure(fewnom::closure_seed());
    unsigned pattern_members = 0;
    std::size_t matches = 0;
    for (const auto& member : closure.members) {
        if (!has_2pos_3neg(member.poly)) continue;
        ++pattern_members;
        matches += fewnom::exponent_system_match(member.poly).size();
    }
    if (json_mode) {
        ordered_json out;
        out["command"] = "closure";
        out["J"] = closure.rounds;
        out["size"] = closure.members.size();
        out["sign_pattern_members"] = pattern_members;
        out["exponent_matches"] = matches;
        out["ms"] = sw.ms();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "closure stabilized at J = " << closure.rounds
                  << " with |S_J| = " << closure.members.size() << "\n";
        std::cout << "members with the 2-positive/3-negative pattern: "
                  << pattern_members << "\n";
        std::cout << "exponent systems with a non-zero (a,b) solution: "
                  << matches << "\n";
    }
    return 0;
}

// -------------------------------------------------------------------- sweep

struct SweepRow {
    unsigned m = 0;
    unsigned n = 0;
    int deg = 0;
    std::string cyclotomic;
    std::string verdict;
    double ms = 0.0;
};

SweepRow sweep_one(unsigned m, unsigned n) {
    Stopwatch sw;
    SweepRow row;
    row.m = m;
    row.n = n;
    IntPoly fw = fewnom::build_fw(m, n);
    row.deg = fw.degree();
    if (m % 2 == 0 || std::gcd(m, n) != 1) {
        row.verdict = "skipped";
        row.ms = sw.ms();
        return row;
    }
    try {
        fewnom::X2p1Structure st = fewnom::x2p1_structure(m, n);
        fewnom::CyclotomicPart cyc = fewnom::cyclotomic_part(fw);
        std::string c;
        for (const auto& h : cyc.factors) {
            if (!c.empty()) c += ";";
            c += std::to_string(h.index);
            if (h.multiplicity != 1) c += "^" + std::to_string(h.multiplicity);
        }
        row.cyclotomic = c;
        if (st.derivative_witness.is_zero()) {
            row.verdict = "structure-violation";
        } else {
            fewnom::IrreducibilityResult irr =
                fewnom::is_irreducible_z(st.quotient);
            row.verdict =
                irr.status == fewnom::IrreducibilityStatus::irreducible
                    ? "ok"
                    : irr.status == fewnom::IrreducibilityStatus::reducible
                          ? "reducible-quotient"
                          : "incomplete";
        }
    } catch (const fewnom::StructureViolation&) {
        row.verdict = "structure-violation";
    } catch (const fewnom::RecombinationOverflow&) {
        row.verdict = "incomplete";
    }
    row.ms = sw.ms();
    return row;
}

int run_sweep(const std::vector<unsigned>& m_list, unsigned n_max,
              bool json_mode) {
    std::vector<std::pair<unsigned, unsigned>> grid;
    for (unsigned m : m_list)
        for (unsigned n = 1; n <= n_max; ++n) grid.emplace_back(m, n);

    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    unsigned workers =
        std::min<std::size_t>(thread_budget(), grid.size() ? grid.size() : 1);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= grid.size()) break;
                rows[i] = sweep_one(grid[i].first, grid[i].second);
            }
        });
    for (auto& t : pool) t.join();

    int exit_code = 0;
    for (const SweepRow& r : rows) {
        if (r.verdict == "structure-violation" ||
            r.verdict == "reducible-quotient")
            exit_code = 4;
        else if (r.verdict == "incomplete" && exit_code == 0)
            exit_code = 3;
    }

    if (json_mode) {
        ordered_json arr = ordered_json::array();
        for (const SweepRow& r : rows)
            arr.push_back({{"m", r.m},
                           {"n", r.n},
                           {"deg", r.deg},
                           {"cyclotomic", r.cyclotomic},
                           {"verdict", r.verdict},
                           {"ms", r.ms}});
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "m,n,deg,cyclotomic,verdict,ms\n";
        char buf[32];
        for (const SweepRow& r : rows) {
            std::snprintf(buf, sizeof buf, "%.3f", r.ms);
            std::cout << r.m << "," << r.n << "," << r.deg << ","
                      << r.cyclotomic << "," << r.verdict << "," << buf
                      << "\n";
        }
    }
    return exit_code;
}

// ----------------------------------------------------------------- script-t

int run_script_t(bool json_mode) {
    Stopwatch sw;
    std::vector<fewnom::ScriptTriple> triples = fewnom::enumerate_script_t();
    if (json_mode) {
        ordered_json out;
        out["command"] = "script-t";
        out["count"] = triples.size();
        ordered_json arr = ordered_json::array();
        for (const auto& t : triples)
            arr.push_back({{"n0", t.n0}, {"a0", t.a0}, {"b0", t.b0}});
        out["triples"] = arr;
        out["ms"] = sw.ms();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n0 a0 b0   (" << triples.size() << " triples with Phi_{n0}"
                  << " dividing G_{a0,b0}, all indices in [1,12])\n";
        for (const auto& t : triples)
            std::cout << t.n0 << " " << t.a0 << " " << t.b0 << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "fewnom: exact constructions, factorizations, and Mahler measures "
        "for sparse polynomial families"};
    app.require_subcommand(1);

    unsigned wm = 1, wn = 1;
    bool w_json = false;
    CLI::App* whitehead =
        app.add_subcommand("whitehead",
                           "two-term family: build, split off x^2+1, trace "
                           "polynomial, irreducibility");
    whitehead->add_option("--m", wm, "odd filling parameter")
        ->required()
        ->check(CLI::PositiveNumber);
    whitehead->add_option("--n", wn, "filling parameter coprime to m")
        ->required()
        ->check(CLI::PositiveNumber);
    whitehead->add_flag("--json", w_json, "machine-readable output");

    unsigned long ta = 1, tb = 1;
    bool t_json = false;
    CLI::App* teich = app.add_subcommand(
        "teich",
        "five-term specialization: cyclotomic part, witnesses, measure gate");
    teich->add_option("--a", ta, "first exponent")->required()
        ->check(CLI::PositiveNumber);
    teich->add_option("--b", tb, "second exponent")->required()
        ->check(CLI::PositiveNumber);
    teich->add_flag("--json", t_json, "machine-readable output");

    std::string f_expr;
    bool f_json = false;
    CLI::App* factor = app.add_subcommand(
        "factor", "three-part split and complete factorization over Z");
    factor->add_option("--poly", f_expr, "polynomial in x")->required();
    factor->add_flag("--json", f_json, "machine-readable output");

    std::string m_expr;
    bool m_biv = false, m_json = false;
    unsigned m_grid = 512;
    double m_tol = 1e-13;
    CLI::App* mahler =
        app.add_subcommand("mahler", "Mahler measure with error bound");
    mahler->add_option("--poly", m_expr, "polynomial in x (or x,y Laurent)")
        ->required();
    mahler->add_flag("--bivariate", m_biv, "two-variable torus quadrature");
    mahler->add_option("--grid", m_grid, "quadrature grid (bivariate)")
        ->check(CLI::Range(8u, 1u << 16));
    mahler->add_option("--tol", m_tol, "root-finder tolerance (univariate)")
        ->check(CLI::PositiveNumber);
    mahler->add_flag("--json", m_json, "machine-readable output");

    bool c_json = false;
    CLI::App* closure = app.add_subcommand(
        "closure",
        "modification closure of the built-in factored five-term seed");
    closure->add_flag("--json", c_json, "machine-readable output");

    std::vector<unsigned> s_mlist;
    unsigned s_nmax = 8;
    bool s_json = false;
    CLI::App* sweep =
        app.add_subcommand("sweep", "grid run over the two-term family");
    CLI::App* sweep_w = sweep->add_subcommand("whitehead", "sweep m x n grid");
    sweep_w->add_option("--m-list", s_mlist, "m values (comma separated)")
        ->required()
        ->delimiter(',');
    sweep_w->add_option("--n-max", s_nmax, "sweep n = 1..n-max")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep_w->add_flag("--json", s_json, "JSON rows instead of CSV");
    sweep->require_subcommand(1);

    bool st_json = false;
    CLI::App* script_t = app.add_subcommand(
        "script-t",
        "enumerate small cyclotomic divisors Phi_{n0} | G_{a0,b0}, all <= 12");
    script_t->add_flag("--json", st_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (whitehead->parsed()) return run_whitehead(wm, wn, w_json);
        if (teich->parsed()) return run_teich(ta, tb, t_json);
        if (factor->parsed()) return run_factor(f_expr, f_json);
        if (mahler->parsed())
            return run_mahler(m_expr, m_biv, m_grid, m_tol, m_json);
        if (closure->parsed()) return run_modification_closure(c_json);
        if (sweep->parsed()) return run_sweep(s_mlist, s_nmax, s_json);
        if (script_t->parsed()) return run_script_t(st_json);
    } catch (const fewnom::StructureViolation& e) {
        std::cerr << "structure violation: " << e.what() << "\n";
        return 4;
    } catch (const fewnom::RecombinationOverflow& e) {
        std::cerr << "incomplete: " << e.what() << "\n";
        return 3;
    } catch (const fewnom::ConvergenceFailure& e) {
        std::cerr << "incomplete: " << e.what() << "\n";
        return 3;
    } catch (const fewnom::SingularGrid& e) {
        std::cerr << "incomplete: " << e.what() << "\n";
        return 3;
    } catch (const fewnom::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
