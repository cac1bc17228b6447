#pragma once

#include <vector>

#include "affdyn/numeric.hpp"

namespace affdyn::lattice {

using Vec = std::vector<Int>;
using Matrix = std::vector<Vec>;

// Row-style Hermite normal form. Returns the canonical basis of the row
// lattice: echelon rows with positive pivots, entries above each pivot
// reduced into [0, pivot), zero rows dropped. Deterministic, so equal
// lattices yield identical matrices.
Matrix hnf(Matrix rows);

// Basis of the integer kernel {x in Z^n : a x = 0} of an m x n matrix,
// returned in HNF.
Matrix kernel(const Matrix& a);

// Membership of v in the row lattice of h, where h is in HNF.
bool member(const Matrix& h, Vec v);

}  // namespace affdyn::lattice
