#include "ekr/gf_matrix.hpp"

#include <algorithm>

#include "ekr/error.hpp"

namespace ekr {

int rref(const GaloisField& field, Matrix& m) {
  int lead = 0;
  for (int col = 0; col < m.cols && lead < m.rows; ++col) {
    int pivot = lead;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != lead)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(lead, j));
    const Symbol scale = field.inv(m.at(lead, col));
    for (int j = col; j < m.cols; ++j) m.at(lead, j) = field.mul(m.at(lead, j), scale);
    for (int i = 0; i < m.rows; ++i) {
      if (i == lead) continue;
      const Symbol factor = m.at(i, col);
      if (factor == 0) continue;
      for (int j = col; j < m.cols; ++j) m.at(i, j) = field.sub(m.at(i, j), field.mul(factor, m.at(lead, j)));
    }
    ++lead;
  }
  m.rows = lead;
  m.data.resize(static_cast<std::size_t>(lead) * m.cols);
  return lead;
}

bool is_rref(const Matrix& m) {
  int last_pivot = -1;
  for (int i = 0; i < m.rows; ++i) {
    int pivot = 0;
    while (pivot < m.cols && m.at(i, pivot) == 0) ++pivot;
    if (pivot == m.cols || pivot <= last_pivot || m.at(i, pivot) != 1) return false;
    for (int k = 0; k < m.rows; ++k)
      if (k != i && m.at(k, pivot) != 0) return false;
    last_pivot = pivot;
  }
  return true;
}

Matrix stack(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw DomainError("matrix column mismatch");
  Matrix out(a.rows + b.rows, a.cols);
  std::copy(a.data.begin(), a.data.end(), out.data.begin());
  std::copy(b.data.begin(), b.data.end(), out.data.begin() + static_cast<std::ptrdiff_t>(a.data.size()));
  return out;
}

std::vector<int> pivot_columns(const Matrix& m) {
  std::vector<int> pivots;
  for (int i = 0; i < m.rows; ++i) {
    int j = 0;
    while (j < m.cols && m.at(i, j) == 0) ++j;
    pivots.push_back(j);
  }
  return pivots;
}

Matrix subspace_sum(const GaloisField& field, const Matrix& u, const Matrix& w) {
  Matrix s = stack(u, w);
  rref(field, s);
  return s;
}

// Zassenhaus: reduce rows [u | u] and [w | 0]; the rows whose left half
// vanishes span the intersection in their right half.
Matrix subspace_intersection(const GaloisField& field, const Matrix& u, const Matrix& w) {
  if (u.cols != w.cols) throw DomainError("matrix column mismatch");
  const int d = u.cols;
  Matrix z(u.rows + w.rows, 2 * d);
  for (int i = 0; i < u.rows; ++i)
    for (int j = 0; j < d; ++j) z.at(i, j) = z.at(i, d + j) = u.at(i, j);
  for (int i = 0; i < w.rows; ++i)
    for (int j = 0; j < d; ++j) z.at(u.rows + i, j) = w.at(i, j);
  rref(field, z);

  Matrix out(0, d);
  for (int i = 0; i < z.rows; ++i) {
    bool left_zero = true;
    for (int j = 0; j < d && left_zero; ++j) left_zero = z.at(i, j) == 0;
    if (!left_zero) continue;
    out.data.insert(out.data.end(), z.row(i).begin() + d, z.row(i).end());
    ++out.rows;
  }
  rref(field, out);
  return out;
}

bool subspace_contains(const GaloisField& field, const Matrix& w, const Matrix& u) {
  if (u.rows == 0) return true;
  if (u.rows > w.rows) return false;
  Matrix s = stack(w, u);
  return rref(field, s) == w.rows;
}

}  // namespace ekr
