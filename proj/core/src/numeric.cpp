#include "affdyn/numeric.hpp"

#include <boost/multiprecision/integer.hpp>

#include <sstream>
#include <stdexcept>

namespace affdyn {

namespace mp = boost::multiprecision;

Int floor_mod(const Int& a, const Int& m) {
    if (m < 1) throw std::invalid_argument("floor_mod: modulus must be >= 1");
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("floor_div: division by zero");
    Int q = a / b;  // truncated
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    // extended Euclid on (a mod m, m)
    Int r0 = floor_mod(a, m), r1 = m;
    Int s0 = 1, s1 = 0;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) {
        throw std::domain_error("mod_inverse: value " + a.str() + " not invertible modulo " +
                                m.str());
    }
    return floor_mod(s0, m);
}

Int mod_pow(Int base, Int exp, const Int& m) {
    if (exp < 0) throw std::invalid_argument("mod_pow: negative exponent");
    base = floor_mod(base, m);
    Int acc = floor_mod(1, m);
    while (exp > 0) {
        if (mp::bit_test(exp, 0)) acc = acc * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return acc;
}

bool divides_power(Int d, const Int& N) {
    if (d < 1) throw std::invalid_argument("divides_power: d must be >= 1");
    if (N < 1) throw std::invalid_argument("divides_power: N must be >= 1");
    while (d != 1) {
        Int g = mp::gcd(d, N);
        if (g == 1) return false;
        while (d % g == 0) d /= g;
    }
    return true;
}

Int coprime_part(Int g, const Int& N0) {
    if (g < 1) throw std::invalid_argument("coprime_part: g must be >= 1");
    while (true) {
        Int d = mp::gcd(g, N0);
        if (d == 1) return g;
        while (g % d == 0) g /= d;
        if (g == 1) return g;
    }
}

unsigned p_adic_valuation(Int x, const Int& p) {
    if (x == 0) throw std::invalid_argument("p_adic_valuation: zero has no finite valuation");
    if (p < 2) throw std::invalid_argument("p_adic_valuation: p must be >= 2");
    if (x < 0) x = -x;
    unsigned v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    // Miller-Rabin with the first twelve primes as bases: deterministic for
    // n < 3.3e24.
    Int d = n - 1;
    unsigned s = 0;
    while (!mp::bit_test(d, 0)) {
        d >>= 1;
        ++s;
    }
    for (int base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x = mod_pow(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

Int smallest_prime_not_dividing(Int start, const Int& N) {
    if (start < 2) start = 2;
    for (Int c = start;; ++c) {
        if (is_prime(c) && N % c != 0) return c;
    }
}

Rat parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

std::string rat_string(const Rat& q) {
    std::ostringstream out;
    out << q;
    return out.str();
}

bool point_less(const Point& a, const Point& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Int& na = numerator(a[i]);
        const Int& nb = numerator(b[i]);
        if (na != nb) return na < nb;
        const Int& da = denominator(a[i]);
        const Int& db = denominator(b[i]);
        if (da != db) return da < db;
    }
    return a.size() < b.size();
}

void validate_point(const Point& y, int n, const Int& N) {
    if (static_cast<int>(y.size()) != n) {
        throw std::invalid_argument("point has " + std::to_string(y.size()) +
                                    " coordinates, expected " + std::to_string(n));
    }
    for (const Rat& c : y) {
        if (!divides_power(denominator(c), N)) {
            throw std::invalid_argument("coordinate " + rat_string(c) +
                                        " has a denominator not dividing " + N.str() + "^inf");
        }
    }
}

std::vector<std::string> point_strings(const Point& y) {
    std::vector<std::string> out;
    out.reserve(y.size());
    for (const Rat& c : y) out.push_back(rat_string(c));
    return out;
}

std::string point_repr(const Point& y) {
    std::string out = "(";
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i) out += ", ";
        out += rat_string(y[i]);
    }
    return out + ")";
}

}  // namespace affdyn
