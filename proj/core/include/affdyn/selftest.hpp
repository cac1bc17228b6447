#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "affdyn/config_scheme.hpp"
#include "affdyn/orbits.hpp"
#include "affdyn/polynomial.hpp"

namespace affdyn::selftest {

using Rng = std::mt19937_64;

// Shared deterministic generators (also used by the test and acceptance
// drivers).

Polynomial random_polynomial(Rng& rng, int n, int max_degree, int coeff_bound, int max_terms);

// One n-tuple of coordinate polynomials. structured_bias in [0,1] is the
// probability of drawing a map with known orbit structure (involutions,
// swaps, negations, translations, constants) instead of a fully random one;
// those keep the periodic branch exercised.
std::vector<Polynomial> random_map(Rng& rng, int n, int max_degree, int coeff_bound,
                                   double structured_bias);

AffineSystem random_system(Rng& rng, int max_dim, int max_maps, int max_degree,
                           int coeff_bound, double structured_bias);

Point random_point(Rng& rng, int n, int bound);

// Random integral configuration, mixing fully random coordinates with
// structured ones (arithmetic progressions, shared p-power differences)
// so that nontrivial automorphism groups actually occur.
std::vector<std::vector<Int>> random_config(Rng& rng, std::size_t max_points, int max_dim,
                                            long coord_bound);

std::vector<Int> random_cycle(Rng& rng, std::size_t max_len, long bound);

// One property suite's outcome. cases counts individual checks.
struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

SuiteResult suite_polynomial_properties(std::uint64_t seed, int iterations);
SuiteResult suite_jet_ring(std::uint64_t seed, int random_samples);
SuiteResult suite_jet_crosschecks(std::uint64_t seed, int functoriality_samples);
SuiteResult suite_orbit_properties(std::uint64_t seed, int systems);
SuiteResult suite_orbit_oracle(std::uint64_t seed, int systems, std::size_t cap,
                               std::size_t bit_guard);
SuiteResult suite_bounds(void);
SuiteResult suite_prop1(std::uint64_t seed, int configurations);
SuiteResult suite_derived_aut(std::uint64_t seed, int samples);
SuiteResult suite_config_misc(std::uint64_t seed, int iterations);
SuiteResult suite_lagrange(std::uint64_t seed, int cycles);
SuiteResult suite_cross_module(std::uint64_t seed, int systems);

struct Options {
    std::uint64_t seed = 0xA11FD1;
    int scale = 1;  // multiplies the default iteration counts
};

std::vector<SuiteResult> run_all(const Options& options = {});

}  // namespace affdyn::selftest
