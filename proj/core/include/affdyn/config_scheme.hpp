#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "affdyn/bounds.hpp"
#include "affdyn/lattice.hpp"
#include "affdyn/numeric.hpp"

namespace affdyn {

// A finite configuration of integral points with its weight matrix
// g_ij = the part of gcd_k |a_i[k] - a_j[k]| coprime to N0 (zero diagonal).
// The weights record where the components of the associated configuration
// scheme meet and to what order, and are invariant under global translation.
struct ConfigScheme {
    std::vector<std::vector<Int>> points;
    Int inverted_denominator = 1;  // N0
    std::vector<std::vector<Int>> weights;

    std::size_t size() const { return points.size(); }
    int dimension() const { return points.empty() ? 0 : static_cast<int>(points[0].size()); }
};

// Builds the scheme from rational points: denominators (which must divide
// N0^inf) are cleared by a common scale, which cannot change the weights
// because scale primes divide N0 and are stripped anyway.
// Throws std::invalid_argument on duplicate points.
ConfigScheme weight_matrix(const std::vector<Point>& points, const Int& N0 = 1);
ConfigScheme weight_matrix_int(std::vector<std::vector<Int>> points, const Int& N0 = 1);

using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t n);
std::string cycle_notation(const Permutation& sigma);
Int permutation_order(const Permutation& sigma);

// sigma preserves the weight matrix: g_{sigma(i) sigma(j)} = g_ij for all i, j.
bool preserves_weights(const ConfigScheme& scheme, const Permutation& sigma);

struct PermutationGroup {
    std::size_t degree = 0;
    std::vector<Permutation> elements;    // lexicographically sorted
    std::vector<Permutation> generators;  // greedy minimal generating set
    Int order;

    bool contains(const Permutation& sigma) const;
};

// The full group of weight-preserving permutations, enumerated by
// backtracking with partial weight-consistency pruning. Hard cap at
// 10 points; throws std::invalid_argument beyond.
PermutationGroup aut_group(const ConfigScheme& scheme);

// Level-r characteristic-p data of the configuration. All lattices live in
// Z^N and membership questions are decided there; reducing mod p^r first
// would lose the obstructions that live between p^2 and p^(v+1).
//   ring_basis:    HNF basis of L = {f : f_i = f_j mod p^min(r, v_p(g_ij))}
//   radical_basis: HNF basis of L_m = L intersect (p Z)^N
//   msquare_basis: HNF basis of span{pairwise products of radical basis}
//                  + p^2 * L  (the ideal m^2; the p^2 L part is already
//                  inside the product span and is kept per the construction)
// The presented finite ring is L mod p^r; p^2 * (1,...,1) always lies in the
// product span alone, which p_squared_one_in_products records as a
// machine-checked witness.
struct LevelData {
    Int p;
    int level = 2;  // r
    lattice::Matrix ring_basis;
    lattice::Matrix radical_basis;
    lattice::Matrix msquare_basis;
    bool p_squared_one_in_products = false;
    // Point classes by residue pattern mod p; these index the maximal
    // ideals over p of the presented ring.
    std::vector<std::size_t> residue_class;
};

// Requires p prime, p not dividing N0, r >= 2.
LevelData level_data(const ConfigScheme& scheme, const Int& p, int level = 2);

// sigma acts as the identity on the level-2 quotient B/m^2 (every ring
// basis vector moves by an element of m^2) and fixes every maximal ideal
// over p (preserves each residue class). Throws std::invalid_argument when
// sigma is not weight-preserving.
bool gamma_membership(const ConfigScheme& scheme, const Permutation& sigma, const Int& p);
bool gamma_membership(const LevelData& data, const Permutation& sigma);

// Order of the action of sigma on the level-r presented ring L mod p^r:
// the least t >= 1 with sigma^t(b) = b mod p^r Z^N for every basis vector.
Int level_action_order(const LevelData& data, const Permutation& sigma);

struct TorsionCheck {
    Permutation sigma;
    Int permutation_order;
    std::map<int, Int> action_order_by_level;  // levels 3 and 4
    bool p_power_ok = false;
};

struct TorsionReport {
    Int p;
    std::vector<TorsionCheck> checks;  // one per member of Gamma_p
    bool all_p_power = true;
};

// For every sigma in Gamma_p: asserts that its order, and the order of its
// action on the level-3 and level-4 presented rings, are powers of p.
// Violations are findings recorded in the report, not errors. N <= 8.
TorsionReport torsion_order_check(const ConfigScheme& scheme, const Int& p);

// Gamma_p intersect Gamma_q == {id}. Expected true for distinct residue
// characteristics; false is a reportable finding. N <= 8.
bool injectivity_check(const ConfigScheme& scheme, const Int& p, const Int& q);

// Direct criterion used to validate the weight characterization of the
// automorphism group: for every prime p dividing some weight, the
// coordinate shuffle maps the congruence lattice at truncation
// max_ij v_p(g_ij) + 1 to itself.
bool preserves_congruence_lattices(const ConfigScheme& scheme, const Permutation& sigma);

// Minimal-degree interpolant of a cyclic sequence: f(a_i) = a_{i+1 mod L}.
struct Interpolant {
    std::vector<Rat> coefficients;  // ascending degree, trailing zeros trimmed
    bool integral = false;
    std::string to_string(const std::string& var = "t") const;
};

// Entries must be distinct; throws std::invalid_argument otherwise.
Interpolant lagrange_cycle(const std::vector<Int>& cycle);

// The congruence obstruction to an integral interpolant: some prime p among
// the given ones and indices i, j with a_i = a_j mod p but images differing
// mod p. When this returns true the interpolant cannot be integral.
bool cycle_mod_obstruction(const std::vector<Int>& cycle, const std::vector<Int>& primes);

}  // namespace affdyn
