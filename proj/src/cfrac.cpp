#include "critex/cfrac.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>

namespace critex {

namespace {

struct Mobius {
    // z -> (a z + b) / (c z + d)
    Int a{1}, b{0}, c{0}, d{1};

    Mobius times(const Mobius& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

// Matrix of one quotient: z -> q + 1/z = (q z + 1)/z.
Mobius quotient_matrix(uint32_t q) {
    return {Int(q), Int(1), Int(1), Int(0)};
}

// Value of the purely periodic continued fraction [c_0; c_1, ..., c_{p-1},
// repeat]; the fixed point > 1 of the period's Mobius map.
Quad purely_periodic_value(const std::vector<uint32_t>& cyc) {
    assert(!cyc.empty());
    Mobius m;
    for (uint32_t q : cyc) m = m.times(quotient_matrix(q));
    // t = (a t + b)/(c t + d)  =>  c t^2 + (d - a) t - b = 0
    Int disc = (m.a + m.d) * (m.a + m.d) - 4 * (m.a * m.d - m.b * m.c);
    Quad root = Quad::sqrt_of(disc);
    Quad t = (Quad(Rat(m.a - m.d)) + root) / Quad(Rat(2 * m.c));
    return t;
}

std::vector<uint32_t> parse_quotients(std::string_view s, size_t& pos, char stop) {
    std::vector<uint32_t> out;
    while (pos < s.size() && s[pos] != stop && s[pos] != '(') {
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) throw std::invalid_argument("expected quotient at position " + std::to_string(pos));
        unsigned long v = std::stoul(std::string(s.substr(start, pos - start)));
        if (v < 1) throw std::invalid_argument("partial quotients must be >= 1");
        out.push_back((uint32_t)v);
        if (pos < s.size() && s[pos] == ',') ++pos;
    }
    return out;
}

}  // namespace

ContinuedFraction ContinuedFraction::parse(std::string_view s) {
    if (s.size() < 2 || s[0] != '0' || s[1] != ';')
        throw std::invalid_argument("continued fraction must start with '0;'");
    size_t pos = 2;
    ContinuedFraction cf;
    cf.pre = parse_quotients(s, pos, '\0');
    if (pos < s.size() && s[pos] == '(') {
        ++pos;
        cf.period = parse_quotients(s, pos, ')');
        if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("unclosed period");
        ++pos;
    }
    if (pos != s.size()) throw std::invalid_argument("trailing input in continued fraction");
    if (cf.pre.empty() && cf.period.empty()) throw std::invalid_argument("no quotients");
    return cf;
}

std::string ContinuedFraction::str() const {
    std::string out = "0;";
    for (size_t i = 0; i < pre.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(pre[i]);
    }
    if (!period.empty()) {
        if (!pre.empty()) out += ",";
        out += "(";
        for (size_t i = 0; i < period.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(period[i]);
        }
        out += ")";
    }
    return out;
}

uint32_t ContinuedFraction::quotient(size_t n) const {
    if (n == 0) throw std::out_of_range("quotients are 1-based");
    size_t i = n - 1;
    if (i < pre.size()) return pre[i];
    if (period.empty()) throw degenerate_period{};
    return period[(i - pre.size()) % period.size()];
}

Quad ContinuedFraction::value() const {
    if (period.empty()) throw degenerate_period{};
    std::vector<uint32_t> cyc(period.begin(), period.end());
    Quad t = purely_periodic_value(cyc);
    // [0; a_1..a_s, t] = (p_s t + p_{s-1}) / (q_s t + q_{s-1})
    ConvergentState st = ConvergentState::initial();
    for (uint32_t a : pre) st = st.advanced(a);
    return (Quad(Rat(st.p)) * t + Quad(Rat(st.p_prev))) / (Quad(Rat(st.q)) * t + Quad(Rat(st.q_prev)));
}

Quad ContinuedFraction::tail_value(size_t N) const {
    if (period.empty()) throw degenerate_period{};
    if (N >= pre.size()) {
        size_t r = (N - pre.size()) % period.size();
        std::vector<uint32_t> cyc;
        cyc.reserve(period.size());
        for (size_t i = 0; i < period.size(); ++i) cyc.push_back(period[(r + i) % period.size()]);
        return purely_periodic_value(cyc);
    }
    ContinuedFraction shifted;
    shifted.pre.assign(pre.begin() + N, pre.end());
    shifted.period = period;
    return Quad(1) / shifted.value();
}

Quad ContinuedFraction::reversed_limit(size_t j) const {
    if (period.empty()) throw degenerate_period{};
    size_t p = period.size();
    if (j >= p) throw std::out_of_range("period position out of range");
    std::vector<uint32_t> rev;
    rev.reserve(p);
    for (size_t i = 0; i < p; ++i) rev.push_back(period[(j + p - i) % p]);
    return Quad(1) / purely_periodic_value(rev);
}

ConvergentState ConvergentState::advanced(uint32_t a) const {
    if (a < 1) throw std::invalid_argument("partial quotient must be >= 1");
    ConvergentState next;
    next.n = n + 1;
    next.p_prev = p;
    next.q_prev = q;
    next.Q_prev = Q;
    next.p = Int(a) * p + p_prev;
    next.q = Int(a) * q + q_prev;
    next.Q = Int(a) * Q + Q_prev;
    return next;
}

}  // namespace critex
