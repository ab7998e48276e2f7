#include "ctk/companion.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace ctk {

namespace {

// Columns are the basis vectors.
Mat basis_matrix(const std::vector<Vec>& gammas) {
  int n = static_cast<int>(gammas.size());
  Mat g(n, Vec(n));
  for (int j = 0; j < n; ++j) {
    require(static_cast<int>(gammas[j].size()) == n,
            "basis vector of wrong length");
    for (int i = 0; i < n; ++i) g[i][j] = gammas[j][i];
  }
  return g;
}

}  // namespace

bool is_companion_basis(const std::vector<Vec>& gammas, const Mat& b,
                        const CartanDatum& d) {
  int n = static_cast<int>(b.size());
  require(static_cast<int>(gammas.size()) == n, "basis size != rank");
  require(static_cast<int>(d.cartan.size()) == n, "datum rank != matrix size");

  for (const Vec& g : gammas)
    if (!is_root(d, g)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(pair_with(d, gammas[i], gammas[j])) != std::abs(b[i][j]))
        return false;
  long long det = det_bareiss(basis_matrix(gammas));
  return det == 1 || det == -1;
}

std::vector<CompanionBasis> search_companion_bases(const Mat& b,
                                                   const RootSystem& rs,
                                                   const SearchOptions& opts) {
  int n = static_cast<int>(b.size());
  require(static_cast<int>(rs.datum.cartan.size()) == n,
          "root system rank != matrix size");
  require(opts.max_results >= 1, "max_results must be positive");

  // Fill the most constrained vertices first.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<int> degree(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && b[i][j] != 0) ++degree[i];
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return degree[x] > degree[y]; });

  std::vector<Vec> candidates = rs.positive_roots;
  if (opts.signed_roots) {
    size_t npos = candidates.size();
    for (size_t i = 0; i < npos; ++i) {
      Vec neg(candidates[i].size());
      for (size_t k = 0; k < neg.size(); ++k) neg[k] = -candidates[i][k];
      candidates.push_back(std::move(neg));
    }
  }

  std::vector<CompanionBasis> found;
  std::vector<Vec> placed(n);

  auto dfs = [&](auto&& self, int depth) -> void {
    if (static_cast<int>(found.size()) >= opts.max_results) return;
    if (depth == n) {
      long long det = det_bareiss(basis_matrix(placed));
      if (det == 1 || det == -1) found.push_back(CompanionBasis{placed});
      return;
    }
    int v = order[depth];
    for (const Vec& cand : candidates) {
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int u = order[d];
        ok = std::abs(pair_with(rs.datum, cand, placed[u])) ==
             std::abs(b[v][u]);
      }
      if (!ok) continue;
      placed[v] = cand;
      self(self, depth + 1);
      if (static_cast<int>(found.size()) >= opts.max_results) return;
    }
  };
  dfs(dfs, 0);
  return found;
}

Vec expand_in_basis(const Vec& a, const CompanionBasis& cb) {
  return solve_unimodular(basis_matrix(cb.gammas), a);
}

Vec d_vector(const Vec& a, const CompanionBasis& cb) {
  return abs_vec(expand_in_basis(a, cb));
}

std::vector<Vec> d_set(const CompanionBasis& cb, const RootSystem& rs) {
  std::set<Vec> s;
  for (const Vec& alpha : rs.positive_roots) s.insert(d_vector(alpha, cb));
  return {s.begin(), s.end()};
}

}  // namespace ctk
