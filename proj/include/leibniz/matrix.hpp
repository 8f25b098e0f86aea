#pragma once

#include "leibniz/ints.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace leibniz {

// Dense row-major integer matrix. Rows are vectors; a matrix M of shape
// m x n represents the homomorphism Z^m -> Z^n, u |-> u*M, so row i is the
// image of the i-th basis vector.
using Mat = std::vector<Vec>;

std::size_t row_count(const Mat& m);
std::size_t col_count(const Mat& m);

Mat identity_mat(std::size_t n);
Mat zero_mat(std::size_t rows, std::size_t cols);
Mat mat_mul(const Mat& a, const Mat& b);
Vec vec_mat(const Vec& v, const Mat& m); // v * m
Mat transpose(const Mat& m);

// Fraction-free determinant (Bareiss). Square input.
Int determinant(const Mat& m);

// Inverse of a matrix with determinant +-1, via the adjugate.
Mat inverse_unimodular(const Mat& m);

// Row-style Hermite normal form of the row lattice of `m`: echelon with
// positive pivots, entries above each pivot reduced into [0, pivot), zero
// rows dropped. Unique per lattice, so equality of forms is equality of
// lattices.
Mat hermite_normal_form(const Mat& m);

// Expresses x as an integer combination of the rows of an HNF matrix.
// Returns the coefficients, or nullopt when x is outside the lattice.
std::optional<Vec> hnf_solve(const Mat& hnf, const Vec& x);

struct SmithForm {
  Mat original;
  Mat normal;          // diagonal, d_1 | d_2 | ... | d_r, entries >= 0
  Mat left_transform;  // unimodular, left * original * right == normal
  Mat right_transform; // unimodular
  std::vector<Int> diagonal() const;
};

SmithForm smith_normal_form(const Mat& m);

// Basis (as rows) of { u in Z^m : u * M = 0 }.
Mat integer_kernel(const Mat& m);

} // namespace leibniz
