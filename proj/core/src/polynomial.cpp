#include "affdyn/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace affdyn {

bool GradedLexLess::operator()(const std::vector<unsigned>& a,
                               const std::vector<unsigned>& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(int n, const Rat& c) {
    Polynomial f(n);
    f.add_term(Exponents(static_cast<std::size_t>(n), 0u), c);
    return f;
}

Polynomial Polynomial::variable(int n, int i) {
    if (i < 1 || i > n) {
        throw std::invalid_argument("variable index x" + std::to_string(i) +
                                    " out of range for dimension " + std::to_string(n));
    }
    Exponents e(static_cast<std::size_t>(n), 0u);
    e[static_cast<std::size_t>(i - 1)] = 1u;
    return monomial(n, std::move(e), 1);
}

Polynomial Polynomial::monomial(int n, Exponents e, const Rat& c) {
    if (e.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("exponent vector size does not match dimension");
    }
    Polynomial f(n);
    f.add_term(e, c);
    return f;
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

unsigned Polynomial::total_degree() const {
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) {
        deg = std::max(deg, static_cast<unsigned>(std::accumulate(e.begin(), e.end(), 0ul)));
    }
    return deg;
}

unsigned Polynomial::degree_in(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("degree_in: index out of range");
    unsigned deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[static_cast<std::size_t>(i - 1)]);
    return deg;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("polynomial dimension mismatch");
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("polynomial dimension mismatch");
    Polynomial out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, Rat(-c));
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rat(-c));
    return out;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial out(n_);
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, Rat(k * c));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (n_ != rhs.n_) throw std::invalid_argument("polynomial dimension mismatch");
    Polynomial out(n_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, Rat(ca * cb));
        }
    }
    return out;
}

Rat Polynomial::evaluate(const Point& y) const {
    if (y.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("evaluate: point dimension mismatch");
    }
    // power cache per variable up to the degree actually used
    std::vector<std::vector<Rat>> pows(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) pows[i].push_back(1);
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            while (pows[i].size() <= e[i]) pows[i].push_back(pows[i].back() * y[i]);
            if (e[i]) t *= pows[i][e[i]];
        }
        acc += t;
    }
    return acc;
}

namespace {

Int residue_of(const Rat& q, const Int& m) {
    Int num = floor_mod(numerator(q), m);
    const Int& den = denominator(q);
    if (den == 1) return num;
    return num * mod_inverse(den, m) % m;
}

}  // namespace

Int Polynomial::evaluate_mod(const Point& y, const Int& m) const {
    if (m < 2) throw std::invalid_argument("evaluate_mod: modulus must be >= 2");
    if (y.size() != static_cast<std::size_t>(n_)) {
        throw std::invalid_argument("evaluate_mod: point dimension mismatch");
    }
    std::vector<Int> r(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) r[i] = residue_of(y[i], m);
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
        Int t = residue_of(c, m);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i]) t = t * mod_pow(r[i], e[i], m) % m;
        }
        acc = (acc + t) % m;
    }
    return acc;
}

Polynomial Polynomial::partial(int i) const {
    if (i < 1 || i > n_) {
        throw std::invalid_argument("partial: variable index x" + std::to_string(i) +
                                    " out of range for dimension " + std::to_string(n_));
    }
    const std::size_t k = static_cast<std::size_t>(i - 1);
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponents d = e;
        --d[k];
        out.add_term(d, Rat(c * e[k]));
    }
    return out;
}

namespace {

std::string monomial_string(const std::vector<unsigned>& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        std::string mono = monomial_string(it->first);
        std::string piece;
        if (mono.empty()) {
            piece = rat_string(mag);
        } else if (mag == 1) {
            piece = mono;
        } else {
            piece = rat_string(mag) + "*" + mono;
        }
        if (out.empty()) {
            out = (neg ? "-" : "") + piece;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

std::vector<std::vector<Int>> jacobian_mod(const std::vector<Polynomial>& maps,
                                           const Point& a, const Int& p) {
    std::vector<std::vector<Int>> out;
    out.reserve(maps.size());
    for (const Polynomial& f : maps) {
        std::vector<Int> row;
        row.reserve(static_cast<std::size_t>(f.dimension()));
        for (int i = 1; i <= f.dimension(); ++i) {
            row.push_back(f.partial(i).evaluate_mod(a, p));
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace affdyn
