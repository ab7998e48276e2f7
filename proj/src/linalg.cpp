#include "ctk/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace ctk {

Mat identity_mat(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  int r = static_cast<int>(m.size());
  int c = static_cast<int>(m[0].size());
  Mat t(c, Vec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) t[j][i] = m[i][j];
  return t;
}

Vec mat_vec(const Mat& m, const Vec& x) {
  Vec y(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    require(m[i].size() == x.size(), "mat_vec: shape mismatch");
    long long s = 0;
    for (size_t j = 0; j < x.size(); ++j)
      s = ck_add(s, ck_mul(m[i][j], x[j]));
    y[i] = narrow_int(s);
  }
  return y;
}

Vec vec_add(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vec_add: length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = narrow_int(ck_add(a[i], b[i]));
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vec_sub: length mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = narrow_int(ck_sub(a[i], b[i]));
  return r;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

Vec abs_vec(const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = std::abs(v[i]);
  return r;
}

int vec_sum(const Vec& v) {
  long long s = 0;
  for (int x : v) s = ck_add(s, x);
  return narrow_int(s);
}

bool is_skew_symmetric(const Mat& m) {
  int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) return false;
    for (int j = 0; j < n; ++j)
      if (m[i][j] != -m[j][i]) return false;
  }
  return true;
}

long long bilinear_form(const Mat& form, const Vec& x, const Vec& y) {
  size_t n = form.size();
  require(x.size() == n && y.size() == n, "bilinear_form: shape mismatch");
  long long s = 0;
  for (size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    long long row = 0;
    for (size_t j = 0; j < n; ++j)
      row = ck_add(row, ck_mul(form[i][j], y[j]));
    s = ck_add(s, ck_mul(x[i], row));
  }
  return s;
}

long long det_bareiss(Mat m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  for (auto& row : m) require(static_cast<int>(row.size()) == n, "det: not square");

  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];

  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { p = i; break; }
      if (p < 0) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = ck_div_exact(
            ck_sub(ck_mul(a[k][k], a[i][j]), ck_mul(a[i][k], a[k][j])), prev);
    prev = a[k][k];
  }
  return ck_mul(sign, a[n - 1][n - 1]);
}

Vec solve_unimodular(const Mat& m, const Vec& rhs) {
  int n = static_cast<int>(m.size());
  require(static_cast<int>(rhs.size()) == n, "solve_unimodular: shape mismatch");
  long long d = det_bareiss(m);
  require(d == 1 || d == -1, "solve_unimodular: determinant is not +-1");
  Vec x(n);
  for (int i = 0; i < n; ++i) {
    Mat mi = m;
    for (int r = 0; r < n; ++r) mi[r][i] = rhs[r];
    x[i] = narrow_int(ck_mul(det_bareiss(mi), d));  // det_i / d with d = +-1
  }
  return x;
}

Mat apply_perm(const Mat& m, const std::vector<int>& p) {
  int n = static_cast<int>(m.size());
  require(static_cast<int>(p.size()) == n, "apply_perm: size mismatch");
  Mat r(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[p[i]][p[j]] = m[i][j];
  return r;
}

RMat RMat::identity(int n) {
  RMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RMat RMat::from_int(const Mat& src) {
  int r = static_cast<int>(src.size());
  int c = r == 0 ? 0 : static_cast<int>(src[0].size());
  RMat m(r, c);
  for (int i = 0; i < r; ++i) {
    require(static_cast<int>(src[i].size()) == c, "from_int: ragged matrix");
    for (int j = 0; j < c; ++j) m.at(i, j) = Rat(src[i][j]);
  }
  return m;
}

RMat rmat_mul(const RMat& x, const RMat& y) {
  require(x.cols == y.rows, "rmat_mul: shape mismatch");
  RMat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k).is_zero()) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

RMat rmat_transpose(const RMat& m) {
  RMat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

namespace {

// Row echelon form in place; returns pivot columns (ascending).
std::vector<int> echelon(RMat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (!m.at(i, col).is_zero()) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat inv = Rat(1) / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Rat f = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(RMat m) { return static_cast<int>(echelon(m).size()); }

std::vector<std::vector<Rat>> kernel_basis(const RMat& m) {
  RMat r = m;
  std::vector<int> pivots = echelon(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols, Rat(0));
    v[free] = Rat(1);
    for (size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -r.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const RMat& m, const std::vector<Rat>& rhs, std::vector<Rat>& out) {
  require(static_cast<int>(rhs.size()) == m.rows, "solve: shape mismatch");
  RMat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = rhs[i];
  }
  std::vector<int> pivots = echelon(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return false;  // 0 = 1 row
  out.assign(m.cols, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k)
    out[pivots[k]] = aug.at(static_cast<int>(k), m.cols);
  return true;
}

}  // namespace ctk
