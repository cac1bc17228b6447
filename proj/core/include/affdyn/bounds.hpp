#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "affdyn/errors.hpp"
#include "affdyn/numeric.hpp"

namespace affdyn {

struct PrimePair {
    Int p;  // p < q, both prime
    Int q;

    bool operator==(const PrimePair&) const = default;
};

// The two smallest distinct primes not dividing N. (2, 3) for N = 1.
PrimePair choose_primes(const Int& N);

Int factorial(std::uint64_t k);

// log2(x!) computed through a Stirling-series log-gamma for x >= 32 and
// exact big-integer factorials below. The Stirling truncation error (terms
// through B_14) is below 1e-24 relative at x = 32 and falls off like x^-15,
// far inside the 1e-9 per-term budget documented for the bound computation.
Real log2_factorial(const Real& x);

// ln Gamma(z) for z >= 33 by the asymptotic series.
Real stirling_ln_gamma(const Real& z);

// One prime's factor of the orbit bound,
//   prod_{m=1}^{M} (p^m)^(p^M) * ((p^m)^n)!   with M = (n+2) p^n,
// held in log2 form. power_exponent = p^M * M(M+1)/2 is the exponent of p
// collected from the first factors (materialized only while it stays of
// reasonable size).
struct PrimeTerm {
    Int p;
    Int big_m;  // M = (n+2) p^n
    std::optional<Int> power_exponent;
    Real log2_value;
};

// Throws BoundNotRepresentable when p^M exceeds the exponent range of Real.
PrimeTerm per_prime_term(int n, const Int& p);
Real per_prime_term_log2(int n, const Int& p);

// Exact values are materialized only when every factorial argument stays
// at or below this limit (the pair (2,3) at n = 1 has arguments 64 and
// 19683; n = 2 already needs 2^32! and is out of reach).
inline constexpr std::uint64_t kExactFactorialArgumentLimit = 1'000'000;

struct EffectiveBound {
    int n = 0;
    PrimePair primes;
    // True when the primes differ from (2, 3): the constant then follows the
    // same product over a different prime pair and is reported as a derived
    // bound rather than the displayed C(n).
    bool derived = false;
    Real log2_value;
    PrimeTerm term_p;
    PrimeTerm term_q;
    std::optional<Int> exact_value;
    std::string exact_note;  // why exact_value is absent, when it was requested
};

// The uniform bound on S-periodic integral orbit sizes in A^n, in log2 form,
// with the exact integer alongside when feasible. The exact/log2 agreement
// contract is |log2(exact) - log2_value| / log2_value <= 1e-6.
EffectiveBound bound_C(int n, const PrimePair& primes, bool want_exact);

}  // namespace affdyn
