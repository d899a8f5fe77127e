#include "fewnom/teichmuller.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>
#include <utility>

#include "fewnom/cyclotomic.hpp"

namespace fewnom {

BivarPoly xy_p() {
    // xy * (y + 1/y - (x + 1/x + 1)) = x*y^2 + x - x^2*y - y - x*y
    return BivarPoly({{1, 2, Int(1)}, {1, 0, Int(1)}, {2, 1, Int(-1)}, {0, 1, Int(-1)},
                      {1, 1, Int(-1)}});
}

IntPoly build_gt(unsigned long a, unsigned long b) {
    if (a < 1 || b < 1)
        throw PreconditionViolation("build_gt: exponents must be >= 1");
    return specialize(xy_p(), static_cast<long>(a), static_cast<long>(b));
}

namespace {

struct ResidueCase {
    int case_id;
    unsigned long base;
    std::vector<std::pair<unsigned long, unsigned long>> pairs;
};

const std::array<ResidueCase, 3>& residue_cases() {
    static const std::array<ResidueCase, 3> cases = {{
        {1, 6, {{1, 0}, {3, 2}, {3, 4}, {5, 0}}},
        {2, 10, {{2, 1}, {2, 9}, {4, 3}, {4, 7}, {6, 3}, {6, 7}, {8, 1}, {8, 9}}},
        {3, 12, {{3, 2}, {3, 10}, {4, 3}, {4, 9}, {8, 3}, {8, 9}, {9, 2}, {9, 10}}},
    }};
    return cases;
}

} // namespace

std::vector<CtClassHit> ct_part_hits(unsigned long a, unsigned long b) {
    if (a < 1 || b < 1)
        throw PreconditionViolation("ct_part: exponents must be >= 1");
    std::vector<CtClassHit> hits;
    unsigned long g = gcd(Int(a), Int(b)).get_ui();
    for (unsigned long d : divisors(g)) {
        unsigned long ar = a / d, br = b / d;
        for (const auto& rc : residue_cases()) {
            std::pair<unsigned long, unsigned long> key{ar % rc.base, br % rc.base};
            if (std::find(rc.pairs.begin(), rc.pairs.end(), key) != rc.pairs.end())
                hits.push_back({rc.case_id, rc.base, d, rc.base * d});
        }
    }
    std::sort(hits.begin(), hits.end(),
              [](const CtClassHit& s, const CtClassHit& t) { return s.index < t.index; });
    return hits;
}

std::vector<unsigned long> ct_part(unsigned long a, unsigned long b) {
    std::vector<unsigned long> idx;
    for (const auto& h : ct_part_hits(a, b)) idx.push_back(h.index);
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

IntPoly ct_polynomial(unsigned long a, unsigned long b) {
    IntPoly p{1};
    for (unsigned long n : ct_part(a, b)) p *= cyclotomic_poly(n);
    return p;
}

std::vector<ScriptTriple> enumerate_script_t() {
    std::vector<ScriptTriple> out;
    for (unsigned long n0 = 1; n0 <= 12; ++n0) {
        const IntPoly phi = cyclotomic_poly(n0);
        for (unsigned long a0 = 1; a0 <= 12; ++a0)
            for (unsigned long b0 = 1; b0 <= 12; ++b0)
                if (try_exact_div(build_gt(a0, b0), phi)) out.push_back({n0, a0, b0});
    }
    return out;
}

std::vector<CtDiscrepancy> ct_consistency(unsigned long a_max, unsigned long b_max) {
    if (a_max < 1 || b_max < 1)
        throw PreconditionViolation("ct_consistency: bounds must be >= 1");
    std::vector<CtDiscrepancy> bad;
    for (unsigned long a = 1; a <= a_max; ++a) {
        for (unsigned long b = 1; b <= b_max; ++b) {
            std::vector<unsigned long> predicted = ct_part(a, b);
            CyclotomicPart cp = cyclotomic_part(build_gt(a, b));
            std::vector<unsigned long> observed;
            bool mult_ok = true;
            for (const auto& h : cp.factors) {
                observed.push_back(h.index);
                if (h.multiplicity != 1) mult_ok = false;
            }
            std::sort(observed.begin(), observed.end());
            if (observed != predicted || !mult_ok) {
                bad.push_back({a, b, std::move(predicted), std::move(observed),
                               mult_ok ? "index mismatch" : "multiplicity != 1"});
            }
        }
    }
    return bad;
}

IntPoly multiplicity_witness(unsigned long a, unsigned long b, unsigned long n) {
    if (a < 1 || b < 1 || n < 1)
        throw PreconditionViolation("multiplicity_witness: arguments must be >= 1");
    const IntPoly phi = cyclotomic_poly(n);
    if (!try_exact_div(build_gt(a, b), phi))
        throw NotACyclotomicFactor("multiplicity_witness: index " + std::to_string(n) +
                                   " does not divide the five-term polynomial");
    // U(x) = x * d/dx of the five-term numerator.
    Int A(static_cast<unsigned long>(a)), B(static_cast<unsigned long>(b));
    std::vector<SparseTerm> terms = {
        {static_cast<std::size_t>(a + 2 * b), A + 2 * B},
        {static_cast<std::size_t>(a), A},
        {static_cast<std::size_t>(2 * a + b), -(2 * A + B)},
        {static_cast<std::size_t>(b), -B},
        {static_cast<std::size_t>(a + b), -(A + B)},
    };
    IntPoly u = from_sparse_terms(terms);
    auto [q, r] = divrem(u, phi);
    (void)q;
    return r;
}

SignedBivar closure_seed() {
    BivarPoly f1({{3, 1, Int(1)}, {2, 1, Int(1)}, {0, 0, Int(1)}});
    BivarPoly f2({{2, 1, Int(1)}, {1, 1, Int(-1)}, {0, 0, Int(-1)}});
    return {f1 * f2, f1, f2};
}

namespace {

SignedBivar star(const SignedBivar& e) {
    BivarPoly f2t = tilde(e.f2);
    return {normalize_shift(e.f1 * f2t), e.f1, f2t};
}

SignedBivar apply_tilde(const SignedBivar& e) {
    return {tilde(e.poly), tilde(e.f1), tilde(e.f2)};
}

SignedBivar apply_flip_x(const SignedBivar& e) {
    return {flip_x(e.poly), flip_x(e.f1), flip_x(e.f2)};
}

SignedBivar apply_flip_y(const SignedBivar& e) {
    return {flip_y(e.poly), flip_y(e.f1), flip_y(e.f2)};
}

SignedBivar negate(const SignedBivar& e) { return {-e.poly, -e.f1, e.f2}; }

} // namespace

ClosureResult modification_closure(const SignedBivar& seed, std::size_t max_elements) {
    if (seed.poly.is_zero() || seed.f1 * seed.f2 != seed.poly)
        throw PreconditionViolation(
            "modification_closure: seed factor pair does not multiply back to the seed");

    ClosureResult res;
    std::unordered_set<std::string> keys;
    auto insert = [&](const SignedBivar& e) -> bool {
        std::string key = to_string(e.poly);
        if (!keys.insert(std::move(key)).second) return false;
        if (res.members.size() >= max_elements)
            throw ClosureBudgetExceeded("modification_closure: element budget exceeded");
        res.members.push_back(e);
        return true;
    };

    SignedBivar s0{normalize_shift(seed.poly), normalize_shift(seed.f1),
                   normalize_shift(seed.f2)};
    insert(s0);
    insert(negate(s0));

    unsigned round = 1;
    for (;;) {
        bool grew = false;
        const std::size_t frozen = res.members.size();
        for (std::size_t i = 0; i < frozen; ++i) {
            // Copy: res.members may reallocate during insertion.
            const SignedBivar e = res.members[i];
            for (const SignedBivar& gen :
                 {apply_tilde(e), star(e), apply_flip_x(e), apply_flip_y(e)}) {
                grew |= insert(gen);
                grew |= insert(negate(gen));
            }
        }
        if (!grew) break;
        ++round;
    }
    res.rounds = round;
    return res;
}

std::vector<ExponentSolution> exponent_system_match(const BivarPoly& g) {
    std::vector<std::pair<long, long>> pos, neg;
    for (const auto& t : g.terms()) (t.c > 0 ? pos : neg).push_back({t.xe, t.ye});
    if (g.term_count() != 5 || pos.size() != 2 || neg.size() != 3)
        throw MalformedCandidate(
            "exponent_system_match: need exactly five terms, 2 positive and 3 negative");

    // Family exponent slots, as coefficient rows (alpha*a + beta*b + c):
    // positive: a+2b, a; negative: 2a+b, b, a+b.
    const std::array<std::pair<long, long>, 2> pos_slots = {{{1, 2}, {1, 0}}};
    const std::array<std::pair<long, long>, 3> neg_slots = {{{2, 1}, {0, 1}, {1, 1}}};

    // Unknown vector (a, b, c, t, u); each matching yields 5 homogeneous rows
    //   alpha*a + beta*b + c - xe*t - ye*u = 0.
    std::vector<ExponentSolution> found;
    std::array<std::size_t, 2> pperm = {0, 1};
    do {
        std::array<std::size_t, 3> nperm = {0, 1, 2};
        do {
            std::vector<std::vector<Int>> rows;
            for (std::size_t i = 0; i < 2; ++i) {
                auto [alpha, beta] = pos_slots[pperm[i]];
                rows.push_back({Int(alpha), Int(beta), Int(1), Int(-pos[i].first),
                                Int(-pos[i].second)});
            }
            for (std::size_t i = 0; i < 3; ++i) {
                auto [alpha, beta] = neg_slots[nperm[i]];
                rows.push_back({Int(alpha), Int(beta), Int(1), Int(-neg[i].first),
                                Int(-neg[i].second)});
            }
            auto kernel = integer_kernel(rows);
            // A kernel vector with a != 0 and b != 0 exists iff the kernel is
            // contained in neither hyperplane {a = 0} nor {b = 0}.
            const std::vector<Int>* va = nullptr;
            const std::vector<Int>* vb = nullptr;
            for (const auto& v : kernel) {
                if (v[0] != 0 && va == nullptr) va = &v;
                if (v[1] != 0 && vb == nullptr) vb = &v;
            }
            if (va && vb) {
                std::vector<Int> sol = *va;
                if (sol[1] == 0) {
                    // Add a multiple of vb that cannot cancel the a-coordinate.
                    Int lambda = ((*va)[0] + (*vb)[0] != 0) ? 1 : 2;
                    for (std::size_t i = 0; i < 5; ++i) sol[i] += lambda * (*vb)[i];
                }
                found.push_back({sol[0], sol[1], sol[2], sol[3], sol[4]});
            }
        } while (std::next_permutation(nperm.begin(), nperm.end()));
    } while (std::next_permutation(pperm.begin(), pperm.end()));
    return found;
}

} // namespace fewnom
