#ifndef EKR_GF_MATRIX_HPP
#define EKR_GF_MATRIX_HPP

#include <compare>
#include <span>
#include <vector>

#include "ekr/galois_field.hpp"

namespace ekr {

/// Dense row-major matrix over GF(q). Subspaces are stored as the row space
/// of a matrix in reduced row-echelon form with no zero rows.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Symbol> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  Symbol& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  Symbol at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
  std::span<const Symbol> row(int i) const {
    return {data.data() + static_cast<std::size_t>(i) * cols, static_cast<std::size_t>(cols)};
  }

  auto operator<=>(const Matrix&) const = default;
  bool operator==(const Matrix&) const = default;
};

/// Brings m to reduced row-echelon form with leading ones, drops zero rows,
/// and returns the rank.
int rref(const GaloisField& field, Matrix& m);

bool is_rref(const Matrix& m);

/// Rows of a followed by rows of b; column counts must agree.
Matrix stack(const Matrix& a, const Matrix& b);

/// Pivot column of each row of an RREF matrix.
std::vector<int> pivot_columns(const Matrix& m);

/// Row spaces, RREF in and out.
Matrix subspace_sum(const GaloisField& field, const Matrix& u, const Matrix& w);
Matrix subspace_intersection(const GaloisField& field, const Matrix& u, const Matrix& w);
/// True iff rowspace(u) is contained in rowspace(w).
bool subspace_contains(const GaloisField& field, const Matrix& w, const Matrix& u);

}  // namespace ekr

#endif  // EKR_GF_MATRIX_HPP
