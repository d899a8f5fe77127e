#include "fewnom/bivar.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fewnom {

BivarPoly::BivarPoly(std::vector<BivarTerm> terms) {
    std::map<std::pair<long, long>, Int> acc;
    for (auto& t : terms) acc[{t.xe, t.ye}] += t.c;
    terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) terms_.push_back({e.first, e.second, std::move(c)});
}

long BivarPoly::min_x_exponent() const {
    if (terms_.empty()) throw ZeroPolynomial("bivariate exponent of zero polynomial");
    return terms_.front().xe; // terms sorted by (xe, ye)
}

long BivarPoly::max_x_exponent() const {
    if (terms_.empty()) throw ZeroPolynomial("bivariate exponent of zero polynomial");
    return terms_.back().xe;
}

long BivarPoly::min_y_exponent() const {
    if (terms_.empty()) throw ZeroPolynomial("bivariate exponent of zero polynomial");
    long m = terms_.front().ye;
    for (const auto& t : terms_) m = std::min(m, t.ye);
    return m;
}

long BivarPoly::max_y_exponent() const {
    if (terms_.empty()) throw ZeroPolynomial("bivariate exponent of zero polynomial");
    long m = terms_.front().ye;
    for (const auto& t : terms_) m = std::max(m, t.ye);
    return m;
}

BivarPoly operator-(const BivarPoly& p) {
    std::vector<BivarTerm> out = p.terms_;
    for (auto& t : out) t.c = -t.c;
    return BivarPoly(std::move(out));
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
    std::vector<BivarTerm> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return BivarPoly(std::move(out));
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    std::vector<BivarTerm> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) out.push_back({s.xe + t.xe, s.ye + t.ye, s.c * t.c});
    return BivarPoly(std::move(out));
}

BivarPoly normalize_shift(const BivarPoly& p) {
    if (p.is_zero()) return p;
    long dx = p.min_x_exponent();
    long dy = p.min_y_exponent();
    if (dx == 0 && dy == 0) return p;
    std::vector<BivarTerm> out = p.terms();
    for (auto& t : out) {
        t.xe -= dx;
        t.ye -= dy;
    }
    return BivarPoly(std::move(out));
}

BivarPoly tilde(const BivarPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("tilde of the zero polynomial");
    std::vector<BivarTerm> out = p.terms();
    for (auto& t : out) {
        t.xe = -t.xe;
        t.ye = -t.ye;
    }
    return normalize_shift(BivarPoly(std::move(out)));
}

BivarPoly flip_x(const BivarPoly& p) {
    std::vector<BivarTerm> out = p.terms();
    for (auto& t : out)
        if (t.xe % 2 != 0) t.c = -t.c;
    return BivarPoly(std::move(out));
}

BivarPoly flip_y(const BivarPoly& p) {
    std::vector<BivarTerm> out = p.terms();
    for (auto& t : out)
        if (t.ye % 2 != 0) t.c = -t.c;
    return BivarPoly(std::move(out));
}

bool is_reciprocal(const BivarPoly& p) {
    if (p.is_zero()) return true;
    BivarPoly n = normalize_shift(p);
    BivarPoly t = tilde(n);
    return t == n || t == -n;
}

IntPoly specialize(const BivarPoly& p, long a, long b) {
    if (p.is_zero()) return {};
    long min_e = 0;
    bool first = true;
    for (const auto& t : p.terms()) {
        long e = t.xe * a + t.ye * b;
        if (first || e < min_e) min_e = e;
        first = false;
    }
    std::map<long, Int> acc;
    for (const auto& t : p.terms()) acc[t.xe * a + t.ye * b - min_e] += t.c;
    long deg = acc.empty() ? 0 : acc.rbegin()->first;
    std::vector<Int> coeffs(static_cast<std::size_t>(deg) + 1, Int(0));
    for (auto& [e, c] : acc) coeffs[static_cast<std::size_t>(e)] = std::move(c);
    // Exponent collisions may cancel; the shift stays the pre-cancellation
    // minimum so that the result is exactly p(x^a, x^b) / x^min.
    return unchecked_from_coeffs(std::move(coeffs));
}

std::string to_string(const BivarPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    // Render in descending lexicographic exponent order.
    const auto& ts = p.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        Int c = it->c;
        if (!s.empty()) {
            s += (c < 0) ? "-" : "+";
            if (c < 0) c = -c;
        } else if (c < 0) {
            s += "-";
            c = -c;
        }
        std::string vars;
        auto var = [](const char* name, long e) -> std::string {
            if (e == 0) return "";
            std::string v = name;
            if (e != 1) v += "^" + std::to_string(e);
            return v;
        };
        std::string vx = var("x", it->xe);
        std::string vy = var("y", it->ye);
        vars = vx;
        if (!vx.empty() && !vy.empty()) vars += "*";
        vars += vy;
        if (vars.empty()) {
            s += c.get_str();
        } else {
            if (c != 1) s += c.get_str() + "*";
            s += vars;
        }
    }
    return s;
}

} // namespace fewnom
