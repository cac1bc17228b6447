#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "affdyn/numeric.hpp"

namespace affdyn {

// Graded lexicographic order on exponent vectors: total degree first, ties
// broken lexicographically. This is the canonical term order used for
// printing and equality.
struct GradedLexLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const;
};

// Sparse multivariate polynomial over the rationals with the invariant that
// every stored coefficient is nonzero and every exponent vector has exactly
// `dimension()` entries. Coefficients are integers unless the ambient base
// ring is Z[1/N] with N > 1, in which case denominators divide N^inf; that
// restriction is enforced where polynomials enter the system (parser,
// AffineSystem), not by this class.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rat, GradedLexLess>;

    Polynomial() : n_(0) {}
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial constant(int n, const Rat& c);
    // x_i with 1-based index.
    static Polynomial variable(int n, int i);
    static Polynomial monomial(int n, Exponents e, const Rat& c);

    int dimension() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned total_degree() const;
    // Largest exponent of x_i across terms (0 when absent); 1-based i.
    unsigned degree_in(int i) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rat& c) const;
    bool operator==(const Polynomial& rhs) const = default;

    // Exact value at y; dimensions must agree.
    Rat evaluate(const Point& y) const;

    // Value mod m with all intermediate arithmetic reduced mod m. Requires
    // m >= 2; throws std::domain_error when a coordinate or coefficient
    // denominator is not invertible mod m.
    Int evaluate_mod(const Point& y, const Int& m) const;

    // Formal partial derivative with respect to x_i (1-based).
    Polynomial partial(int i) const;

    // Canonical rendering; parse_polynomial(to_string()) reproduces the
    // polynomial and printing again is a fixed point.
    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rat& c);

    int n_;
    TermMap terms_;
};

// Parses the expression grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' natural)?
//   atom   := integer | rational "a/b" | var | '(' expr ')' | '-' factor
//   var    := 'x' positive-integer
// over variables x1..xn, whitespace-insensitive. Rational literals must lie
// in Z[1/N]. Throws ParseError with a position on syntax errors, unknown
// variables and inadmissible denominators.
Polynomial parse_polynomial(std::string_view src, int n, const Int& N = 1);

// Matrix J with J[j][i] = (d F_j / d x_i)(a) mod p; entries in [0, p).
// Requires p prime and every denominator met invertible mod p.
std::vector<std::vector<Int>> jacobian_mod(const std::vector<Polynomial>& maps,
                                           const Point& a, const Int& p);

}  // namespace affdyn
