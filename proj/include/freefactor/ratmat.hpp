#ifndef FREEFACTOR_RATMAT_HPP
#define FREEFACTOR_RATMAT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "freefactor/rational.hpp"

namespace freefactor {

// Sparse vector: (index, value) pairs, sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;
using RatMatrix = std::vector<std::vector<Rational>>;

SparseVec sparse_axpy(const SparseVec& x, const Rational& c, const SparseVec& y);

// Exact nullspace of the system rows * x = 0 over Q.
// Gauss-Jordan with pivot choice by largest |num*den| (ties: lowest column);
// basis vectors are indexed by free columns in ascending order, each with a 1
// in its free column.
std::vector<SparseVec> nullspace_sparse(const std::vector<SparseVec>& rows, int ncols);

std::vector<std::vector<Rational>> nullspace_dense(RatMatrix m);

// Any exact solution of m x = rhs, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_dense(RatMatrix m, std::vector<Rational> rhs);

// Pivots of the symmetric elimination of a symmetric matrix. Returns true iff
// the matrix is PSD (all pivots >= 0 and every zero-diagonal row is zero).
bool psd_pivots(RatMatrix g, std::vector<Rational>* pivots = nullptr);

}  // namespace freefactor

#endif
