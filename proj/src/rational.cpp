#include "critex/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace critex {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Int rat_floor(const Rat& x) {
    return floor_div(x.get_num(), x.get_den());
}

Int rat_ceil(const Rat& x) {
    return -rat_floor(Rat(-x));
}

Rat parse_rat(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string str(s);
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), str.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational: " + str);
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + str);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) {
    Rat c = x;
    c.canonicalize();  // raw mpq constructors do not reduce
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Int isqrt(const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

namespace {

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Int pollard_rho(const Int& n) {
    // Brent's variant; n is odd, composite, not a prime power of interest.
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0xC0FFEEul);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x = y, d = 1, q = 1, ys = y;
        unsigned long r = 1;
        const unsigned long step = 128;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += step) {
                ys = y;
                unsigned long lim = std::min(step, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            d = 1;
            while (d == 1) {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            }
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::vector<Int>& primes) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    Int root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        root = isqrt(n);
        factor_into(root, primes);
        factor_into(root, primes);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(n / d, primes);
}

}  // namespace

std::pair<Int, Int> extract_square(const Int& n) {
    if (sgn(n) < 0) throw std::domain_error("extract_square of negative");
    if (n == 0) return {Int(1), Int(0)};
    Int rest = n, s = 1, sf = 1;
    // Small trial division clears the common cases cheaply.
    for (unsigned long p = 2; p < 4096 && Int(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++e;
        }
        for (unsigned i = 0; i < e / 2; ++i) s *= p;
        if (e % 2 == 1) sf *= p;
    }
    if (rest > 1) {
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            s *= isqrt(rest);
        } else if (is_probable_prime(rest)) {
            sf *= rest;
        } else {
            std::vector<Int> primes;
            factor_into(rest, primes);
            std::sort(primes.begin(), primes.end());
            for (size_t i = 0; i < primes.size();) {
                size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                size_t e = j - i;
                for (size_t t = 0; t < e / 2; ++t) s *= primes[i];
                if (e % 2 == 1) sf *= primes[i];
                i = j;
            }
        }
    }
    return {s, sf};
}

Rat dyadic_below(const Rat& x, unsigned bits) {
    Int num = x.get_num() << bits;
    Int q = floor_div(num, x.get_den());
    Rat r(q, Int(1) << bits);
    r.canonicalize();
    return r;
}

Rat dyadic_above(const Rat& x, unsigned bits) {
    return -dyadic_below(Rat(-x), bits);
}

}  // namespace critex
