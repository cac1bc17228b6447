#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "affdyn/numeric.hpp"
#include "affdyn/polynomial.hpp"

namespace affdyn {

struct MapDef {
    std::string name;
    std::vector<Polynomial> coords;  // exactly n polynomials of dimension n
};

// The pair (A^n over Z[1/N], S): dimension, inverted denominator and the
// named generator maps. N = 1 means base ring Z.
class AffineSystem {
public:
    AffineSystem() = default;
    // Validates dimensions and that every coefficient denominator divides
    // N^inf; throws std::invalid_argument otherwise.
    AffineSystem(int n, const Int& inverted_denominator, std::vector<MapDef> maps);

    int dimension() const { return n_; }
    const Int& inverted_denominator() const { return big_n_; }
    const std::vector<MapDef>& maps() const { return maps_; }

    Point apply(std::size_t map_index, const Point& y) const;

private:
    int n_ = 0;
    Int big_n_ = 1;
    std::vector<MapDef> maps_;
};

// State of the ascending chain O_1 <= O_2 <= ... After `rounds` expansion
// rounds, `visited` equals O_{rounds+1} in canonical order. stabilized
// means the frontier emptied, i.e. visited is the full orbit.
struct OrbitState {
    std::vector<Point> visited;   // canonically sorted
    std::vector<Point> frontier;  // canonically sorted; empty iff stabilized
    std::size_t rounds = 0;
    bool stabilized = false;
};

// Expands the chain until the frontier empties or more than max_points
// points are stored. The monoid contains the identity, so x itself is
// always in the orbit. Result is independent of map and evaluation order.
OrbitState orbit_closure(const AffineSystem& sys, const Point& x, std::uint64_t max_points);

// How one generator acts on a finite closed point set.
struct GeneratorAction {
    std::string map;
    bool bijective = false;
    // When bijective: permutation[i] is the index of f(points[i]).
    std::vector<std::size_t> permutation;
    // Otherwise exactly one witness kind is set: a collision (two points
    // with the same image) or an unhit point.
    std::optional<std::pair<Point, Point>> collision;
    std::optional<Point> collision_image;
    std::optional<Point> unhit;
};

// Tests each generator on a finite set closed under all of them (canonical
// order expected). Throws std::invalid_argument with a witness message when
// the set is not closed.
std::vector<GeneratorAction> permutation_check(const AffineSystem& sys,
                                               const std::vector<Point>& points);

// The bound a decision ran against.
struct BoundSpec {
    bool overridden = false;
    Int override_value;      // when overridden
    bool representable = true;  // false compares as +infinity
    Real log2_value;         // log2 of the override or of the formula bound
    PrimePair primes;        // when not overridden
    bool derived = false;    // primes differ from (2, 3)
};

struct PeriodicResult {
    std::vector<Point> orbit;
    std::vector<GeneratorAction> actions;  // all bijective
};

enum class NotPeriodicReason {
    exceeded_proven_bound,
    finite_not_permuted,
};

struct NotPeriodicResult {
    NotPeriodicReason reason;
    // finite_not_permuted carries the failing generator's action (with its
    // collision or unhit witness) and the full orbit.
    std::optional<GeneratorAction> witness;
    std::vector<Point> orbit;
};

struct UndecidedResult {
    std::uint64_t budget = 0;
};

struct Verdict {
    std::variant<PeriodicResult, NotPeriodicResult, UndecidedResult> outcome;
    std::size_t visited = 0;
    std::size_t rounds = 0;
    bool stabilized = false;
    BoundSpec bound;

    bool is_periodic() const { return std::holds_alternative<PeriodicResult>(outcome); }
    bool is_undecided() const { return std::holds_alternative<UndecidedResult>(outcome); }
};

// The decision procedure. Let B be bound_override if given, else the formula
// bound for (n, primes chosen for N) held in log2 form. Expands the chain
// and decides:
//   - |visited| > B: not periodic (exceeded the proven bound);
//   - frontier empties with |visited| <= B: periodic iff every generator
//     permutes the orbit, else not periodic with a witness;
//   - budget (points stored) exhausted first: undecided.
// Requires budget >= 1 and bound_override >= 1 when given.
Verdict decide_periodic(const AffineSystem& sys, const Point& x, std::uint64_t budget,
                        const std::optional<Int>& bound_override = {});

}  // namespace affdyn
