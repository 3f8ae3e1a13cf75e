#include "critex/quadratic.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace critex {

Quad::Quad(Rat a, Rat b, const Int& d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    a_.canonicalize();  // raw mpq pairs are not reduced on construction
    b_.canonicalize();
    if (sgn(d_) < 0) throw std::domain_error("negative radicand");
    if (sgn(b_) == 0 || d_ == 0) {  // b*sqrt(0) = 0
        b_ = 0;
        d_ = 0;
        return;
    }
    auto [s, sf] = extract_square(d_);
    if (s != 1) {
        b_ *= Rat(s);
        d_ = sf;
    }
    if (d_ == 1) {   // sqrt(1) folds into the rational part
        a_ += b_;
        b_ = 0;
        d_ = 0;
    } else if (d_ == 0) {
        b_ = 0;
    }
}

Quad Quad::sqrt_of(const Int& n) {
    return Quad(Rat(0), Rat(1), n);
}

const Rat& Quad::as_rational() const {
    if (!is_rational()) throw std::domain_error("irrational quadratic used as rational");
    return a_;
}

void Quad::require_same_field(const Quad& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_) throw incompatible_fields{};
}

Quad Quad::operator+(const Quad& o) const {
    require_same_field(o);
    Int d = d_ != 0 ? d_ : o.d_;
    Rat b = b_ + o.b_;
    if (sgn(b) == 0) return Quad(a_ + o.a_);
    return Quad(a_ + o.a_, std::move(b), std::move(d), unchecked{});
}

Quad Quad::operator-(const Quad& o) const {
    return *this + (-o);
}

Quad Quad::operator*(const Quad& o) const {
    require_same_field(o);
    Int d = d_ != 0 ? d_ : o.d_;
    Rat a = a_ * o.a_ + b_ * o.b_ * Rat(d);
    Rat b = a_ * o.b_ + b_ * o.a_;
    if (sgn(b) == 0) return Quad(std::move(a));
    return Quad(std::move(a), std::move(b), std::move(d), unchecked{});
}

Quad Quad::operator/(const Quad& o) const {
    require_same_field(o);
    if (o.sign() == 0) throw std::domain_error("division by zero");
    // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2 - b^2 d)
    Rat norm = o.a_ * o.a_ - o.b_ * o.b_ * Rat(o.d_);
    Quad inv(o.a_ / norm, -o.b_ / norm, o.d_, unchecked{});
    return *this * inv;
}

int Quad::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(d), squared.
    Rat diff = a_ * a_ - b_ * b_ * Rat(d_);
    int t = sgn(diff);
    return t == 0 ? 0 : (t > 0 ? sa : sb);
}

int Quad::cmp_same_field(const Quad& x, const Quad& y) {
    return (x - y).sign();  // operator- enforces field compatibility
}

int Quad::cmp(const Quad& x, const Quad& y) {
    if (x.d_ == 0 || y.d_ == 0 || x.d_ == y.d_) return cmp_same_field(x, y);
    // Distinct irrational fields: values are never equal, so refinement
    // of the rational enclosures separates them.
    for (unsigned bits = 32;; bits *= 2) {
        auto [xlo, xhi] = x.enclosure(bits);
        auto [ylo, yhi] = y.enclosure(bits);
        if (xhi < ylo) return -1;
        if (yhi < xlo) return 1;
        if (bits > 4096) throw std::runtime_error("enclosure refinement failed to separate");
    }
}

std::pair<Rat, Rat> Quad::enclosure(unsigned bits) const {
    if (is_rational()) return {a_, a_};
    // sqrt(d) in [s/2^bits, (s+1)/2^bits] with s = isqrt(d*4^bits)
    Int s = isqrt(d_ << (2 * bits));
    Rat lo(s, Int(1) << bits), hi(s + 1, Int(1) << bits);
    lo.canonicalize();
    hi.canonicalize();
    if (sgn(b_) >= 0) return {a_ + b_ * lo, a_ + b_ * hi};
    return {a_ + b_ * hi, a_ + b_ * lo};
}

Int Quad::floor() const {
    if (is_rational()) return rat_floor(a_);
    // Common denominator: x = (A + B*sqrt(d)) / den
    Int ad = a_.get_den(), bd = b_.get_den();
    Int den = ad * bd;
    Int A = a_.get_num() * bd, B = b_.get_num() * ad;
    Int s = isqrt(B * B * d_);
    Int num_lo;
    if (sgn(B) >= 0) num_lo = A + s;
    else num_lo = A - s - 1;
    Int n = floor_div(num_lo, den);
    // Fix-up by exact comparison (at most a couple of steps).
    while (*this < Quad(n)) n -= 1;
    while (*this >= Quad(Int(n + 1))) n += 1;
    return n;
}

Int Quad::ceil() const {
    return -(-*this).floor();
}

double Quad::to_double() const {
    double v = a_.get_d();
    if (!is_rational()) v += b_.get_d() * std::sqrt(d_.get_d());
    return v;
}

std::string Quad::str() const {
    if (is_rational()) return rat_str(a_);
    std::string out;
    bool have_a = sgn(a_) != 0;
    if (have_a) out += rat_str(a_);
    Rat b = b_;
    if (sgn(b) < 0) {
        out += have_a ? " - " : "-";
        b = -b;
    } else if (have_a) {
        out += " + ";
    }
    if (b != 1) out += rat_str(b) + "*";
    out += "sqrt(" + d_.get_str() + ")";
    return out;
}

std::string Quad::decimal(int digits) const {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    bool neg = sign() < 0;
    Quad absx = neg ? -*this : *this;
    Int n = (absx * Quad(Rat(scale))).floor();  // truncated decimal expansion
    Int ip = n / scale, fp = n % scale;
    std::string frac = fp.get_str();
    frac.insert(frac.begin(), digits - (long)frac.size(), '0');
    return (neg ? "-" : "") + ip.get_str() + "." + frac;
}

Int floor_quad(const Quad& x) {
    return x.floor();
}

std::ostream& operator<<(std::ostream& os, const Quad& q) {
    return os << q.str();
}

namespace {

// Recursive-descent parser over Q(sqrt(D)).
struct QuadParser {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }

    Quad parse_expr() {
        Quad v = parse_term();
        while (true) {
            if (eat('+')) v += parse_term();
            else if (eat('-')) v -= parse_term();
            else return v;
        }
    }
    Quad parse_term() {
        Quad v = parse_factor();
        while (true) {
            if (eat('*')) v *= parse_factor();
            else if (eat('/')) {
                Quad w = parse_factor();
                if (w.sign() == 0) fail("division by zero");
                v /= w;
            } else return v;
        }
    }
    Quad parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('(')) {
            Quad v = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (s.substr(pos, 4) == "sqrt") {
            pos += 4;
            if (!eat('(')) fail("expected '(' after sqrt");
            Quad arg = parse_expr();
            if (!eat(')')) fail("expected ')'");
            if (!arg.is_rational()) fail("nested irrational sqrt");
            Rat r = arg.as_rational();
            if (sgn(r) < 0) fail("sqrt of negative");
            // sqrt(p/q) = sqrt(p*q)/q
            Quad root = Quad::sqrt_of(r.get_num() * r.get_den());
            return root / Quad(Rat(r.get_den()));
        }
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected number");
        return Quad(Rat(Int(std::string(s.substr(start, pos - start)))));
    }
};

}  // namespace

Quad parse_quad(std::string_view sv) {
    QuadParser p{sv};
    Quad v = p.parse_expr();
    p.skip_ws();
    if (p.pos != sv.size()) p.fail("trailing input");
    return v;
}

}  // namespace critex
