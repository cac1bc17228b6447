#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace affdyn {

// Exact arbitrary-precision integers and rationals used throughout the
// library. Rationals are kept normalized by the backend.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// High-precision float reserved for log2-scale quantities. ~166 mantissa
// bits, far above the 80 bits the bound computations require, and a binary
// exponent range wide enough to hold p^M for every dimension this library
// can iterate over in practice.
using Real = boost::multiprecision::cpp_bin_float_50;

// Representative of a modulo m in [0, m). Requires m >= 1.
Int floor_mod(const Int& a, const Int& m);

// Floor division (round toward -inf). Requires b != 0.
Int floor_div(const Int& a, const Int& b);

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);

Int mod_pow(Int base, Int exp, const Int& m);

// True when every prime factor of d divides N, i.e. d | N^inf. d >= 1.
// N = 1 admits only d = 1.
bool divides_power(Int d, const Int& N);

// Largest divisor of g coprime to N0 (strips every prime shared with N0).
// g >= 1.
Int coprime_part(Int g, const Int& N0);

// Exponent of p in x. Requires x != 0 and p >= 2.
unsigned p_adic_valuation(Int x, const Int& p);

// Deterministic Miller-Rabin; exact for n < 3.3 * 10^24 which covers every
// prime this library works with.
bool is_prime(const Int& n);

// Smallest prime >= start that does not divide N.
Int smallest_prime_not_dividing(Int start, const Int& N);

// Parses "a", "-a" or "a/b" (optional whitespace is not allowed here; this
// is for coordinate data, not the polynomial grammar).
Rat parse_rational(const std::string& text);

// Canonical "a" or "a/b".
std::string rat_string(const Rat& q);

// A point of affine n-space with coordinates in Z[1/N].
using Point = std::vector<Rat>;

// Canonical point order: coordinatewise by numerator, then denominator.
bool point_less(const Point& a, const Point& b);

struct PointLess {
    bool operator()(const Point& a, const Point& b) const { return point_less(a, b); }
};

// Checks dimension and that every coordinate denominator divides N^inf.
// Throws std::invalid_argument on violation.
void validate_point(const Point& y, int n, const Int& N);

std::vector<std::string> point_strings(const Point& y);
std::string point_repr(const Point& y);

}  // namespace affdyn
