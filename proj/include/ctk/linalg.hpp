#pragma once

// Exact linear algebra: integer matrices (Bareiss determinants, Cramer
// solves for unimodular systems) and rational matrices (Gaussian
// elimination for rank / kernel / solve). All deterministic, all checked.

#include <vector>

#include "ctk/rat.hpp"

namespace ctk {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;  // row-major, rectangular

Mat identity_mat(int n);
Mat transpose(const Mat& m);
Vec mat_vec(const Mat& m, const Vec& x);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
Vec abs_vec(const Vec& v);
int vec_sum(const Vec& v);
bool is_skew_symmetric(const Mat& m);

// x^T form y, with the quadratic form given as a square matrix.
long long bilinear_form(const Mat& form, const Vec& x, const Vec& y);

// Fraction-free Gaussian elimination; exact for any square integer matrix.
long long det_bareiss(Mat m);

// Solve m x = rhs by Cramer's rule for |det m| = 1; the solution is then
// integral and every division is by +-1.
Vec solve_unimodular(const Mat& m, const Vec& rhs);

// Simultaneous row/column relabeling: p[i] is the new label of old index i,
// result[p[i]][p[j]] = m[i][j].
Mat apply_perm(const Mat& m, const std::vector<int>& p);

// Rational matrix with explicit shape so zero-dimensional edges (empty
// vector spaces at quiver vertices) stay unambiguous.
struct RMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;  // row-major

  RMat() = default;
  RMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static RMat identity(int n);
  static RMat from_int(const Mat& m);
  bool operator==(const RMat& o) const = default;
};

RMat rmat_mul(const RMat& x, const RMat& y);
RMat rmat_transpose(const RMat& m);

int rank(RMat m);

// Basis of the right kernel {x : m x = 0}; vectors of length m.cols,
// one per free column, in ascending column order.
std::vector<std::vector<Rat>> kernel_basis(const RMat& m);

// One exact solution of m x = rhs; returns false when inconsistent.
bool solve(const RMat& m, const std::vector<Rat>& rhs, std::vector<Rat>& out);

}  // namespace ctk
