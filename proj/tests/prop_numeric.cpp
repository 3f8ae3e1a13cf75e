#include "doctest.h"

#include "critex/cfrac.hpp"
#include "critex/interval_set.hpp"

#include <random>

using namespace critex;

namespace {

Rat random_rat(std::mt19937_64& rng, long num_hi, long den_hi) {
    std::uniform_int_distribution<long> num(-num_hi, num_hi), den(1, den_hi);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

// Sign of x - y by scaled-integer evaluation at 60 decimal digits: an
// independent route through isqrt(d * 10^120).
int digit_cmp(const Quad& x, const Quad& y, int digits = 60) {
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    auto scaled_floor = [&](const Quad& q) {
        // floor(q * scale) via exact rational + surd parts
        Rat a = q.rational_part() * Rat(scale);
        Rat b = q.surd_coeff() * Rat(scale);
        // integer-floor of a + b*sqrt(d)
        Int ad = a.get_den(), bd = b.get_den();
        Int den = ad * bd;
        Int A = a.get_num() * bd, B = b.get_num() * ad;
        Int s = isqrt(B * B * q.surd());
        Int lo;
        if (sgn(B) >= 0) lo = A + s;
        else lo = A - s - 1;
        return floor_div(lo, den);
    };
    Int fx = scaled_floor(x), fy = scaled_floor(y);
    if (fx < fy) return -1;
    if (fx > fy) return 1;
    return 0;
}

}  // namespace

TEST_CASE("quad_cmp agrees with 60-digit evaluation on 1000 random cases") {
    std::mt19937_64 rng(20260808);
    int decided = 0;
    for (int it = 0; it < 1000; ++it) {
        // continued-fraction values vs rationals: same-field comparisons
        std::uniform_int_distribution<int> qd(1, 6), len(1, 4);
        ContinuedFraction cf;
        int np = len(rng);
        for (int i = 0; i < np; ++i) cf.period.push_back(qd(rng));
        Quad v = cf.value();
        Quad r(random_rat(rng, 40, 40));
        int got = quad_cmp(v, r);
        int expect = digit_cmp(v, r);
        if (expect != 0) {
            CHECK(got == expect);
            ++decided;
        }
    }
    CHECK(decided >= 990);  // ties under 60 digits essentially never happen
}

TEST_CASE("quadratic arithmetic is a field") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 300; ++it) {
        Quad x(random_rat(rng, 30, 12), random_rat(rng, 30, 12), 7);
        Quad y(random_rat(rng, 30, 12), random_rat(rng, 30, 12), 7);
        CHECK((x + y) - y == x);
        if (y.sign() != 0) CHECK((x * y) / y == x);
        if (x.sign() != 0) CHECK(x * (Quad(1) / x) == Quad(1));
    }
}

TEST_CASE("interval subtraction: sampled membership") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 200; ++it) {
        IntervalSet base = IntervalSet::full(Quad(0), Quad(16));
        std::uniform_int_distribution<long> num(0, 64);
        std::vector<std::pair<Rat, Rat>> removed;
        for (int r = 0; r < 4; ++r) {
            Rat a(num(rng), 4), b(num(rng), 4);
            a.canonicalize();
            b.canonicalize();
            if (b < a) std::swap(a, b);
            removed.push_back({a, b});
            base.subtract_closure(Quad(a), Quad(b));
        }
        for (long t = 0; t <= 128; ++t) {
            Rat x(t, 8);
            x.canonicalize();
            bool in_removed_closure = false;
            for (auto& [a, b] : removed)
                if (a <= x && x <= b) in_removed_closure = true;
            bool inside = base.contains(Quad(x));
            // result never meets the removed closure
            if (in_removed_closure) CHECK_FALSE(inside);
            // and everything strictly outside it (and inside the ambient) stays
            if (!in_removed_closure && Rat(0) < x && x < Rat(16)) CHECK(inside);
        }
    }
}

TEST_CASE("reversed limits against 200-term convergent ratios") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> qd(1, 6), plen(1, 5), slen(0, 3);
    for (int it = 0; it < 50; ++it) {
        ContinuedFraction cf;
        int s = slen(rng), p = plen(rng);
        for (int i = 0; i < s; ++i) cf.pre.push_back(qd(rng));
        for (int i = 0; i < p; ++i) cf.period.push_back(qd(rng));
        // advance 200 + alignment terms, tracking Q ratios per residue class
        size_t total = 200 + (size_t)s + (size_t)p;
        ConvergentState st = ConvergentState::initial();
        std::vector<Rat> last_ratio(p, Rat(0));
        for (size_t n = 1; n <= total; ++n) {
            st = st.advanced(cf.quotient(n));
            if (st.n > (size_t)s) {
                size_t pos = (st.n - s - 1) % p;  // position of the last consumed quotient
                Rat ratio(st.Q_prev, st.Q);
                ratio.canonicalize();
                last_ratio[pos] = ratio;
            }
        }
        for (int j = 0; j < p; ++j) {
            Quad lim = cf.reversed_limit(j);
            double err = std::abs(Quad(last_ratio[j]).to_double() - lim.to_double());
            CHECK(err < 1e-12);
        }
    }
}
