#include "ctk/exchange.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace ctk {

Quiver make_quiver(int n, std::vector<std::pair<int, int>> arrows) {
  require(n >= 1, "quiver needs at least one vertex");
  std::set<std::pair<int, int>> have;
  for (auto [s, t] : arrows) {
    require(s >= 0 && s < n && t >= 0 && t < n, "arrow endpoint out of range");
    require(s != t, "quiver has a loop");
    have.insert({s, t});
  }
  for (auto [s, t] : have)
    require(have.count({t, s}) == 0, "quiver has a 2-cycle");
  std::sort(arrows.begin(), arrows.end());
  return Quiver{n, std::move(arrows)};
}

Mat b_matrix(const Quiver& q) {
  Mat b(q.n, Vec(q.n, 0));
  for (auto [s, t] : q.arrows) {
    b[s][t] += 1;
    b[t][s] -= 1;
  }
  return b;
}

Quiver gamma_quiver(const Mat& b) {
  require(is_skew_symmetric(b), "b-matrix must be skew-symmetric");
  int n = static_cast<int>(b.size());
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int m = 0; m < b[i][j]; ++m) arrows.emplace_back(i, j);
  return make_quiver(n, std::move(arrows));
}

Quiver default_orientation(const CartanDatum& d) {
  return make_quiver(static_cast<int>(d.cartan.size()),
                     {d.edges.begin(), d.edges.end()});
}

Quiver initial_orientation(const CartanDatum& d) {
  if (d.type == DynkinType{'D', 4})
    return make_quiver(4, {{1, 2}, {3, 2}, {2, 0}});
  return default_orientation(d);
}

Seed initial_seed(const Quiver& q) {
  return Seed{b_matrix(q), identity_mat(q.n), {}};
}

namespace {

// A seed travels through the BFS as the stacked 2n x n matrix [b; c],
// row-major in a flat int vector.
std::vector<int> stack_seed(const Seed& s) {
  int n = static_cast<int>(s.b.size());
  std::vector<int> m(static_cast<size_t>(2 * n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m[static_cast<size_t>(i) * n + j] = s.b[i][j];
      m[static_cast<size_t>(n + i) * n + j] = s.c[i][j];
    }
  return m;
}

Seed unstack_seed(const std::vector<int>& m, int n, std::vector<int> history) {
  Seed s;
  s.b.assign(n, Vec(n));
  s.c.assign(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s.b[i][j] = m[static_cast<size_t>(i) * n + j];
      s.c[i][j] = m[static_cast<size_t>(n + i) * n + j];
    }
  s.history = std::move(history);
  return s;
}

void mutate_stacked(const std::vector<int>& in, std::vector<int>& out, int n,
                    int k) {
  out.resize(in.size());
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = 0; y < n; ++y) {
      size_t idx = static_cast<size_t>(x) * n + y;
      if (x == k || y == k) {
        out[idx] = -in[idx];
        continue;
      }
      int xk = in[static_cast<size_t>(x) * n + k];
      int ky = in[static_cast<size_t>(k) * n + y];
      out[idx] = narrow_int(
          ck_add(in[idx], ck_div_exact(ck_add(ck_mul(std::abs(xk), ky),
                                              ck_mul(xk, std::abs(ky))),
                                       2)));
    }
  }
}

// Invariants every seed in a simply-laced finite-type exchange graph obeys:
// skew-symmetric b with |entries| <= 1, and sign-coherent nonzero
// c-columns. A violation means bad input or a broken mutation.
void validate_stacked(const std::vector<int>& m, int n, bool fresh_coeffs) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int v = m[static_cast<size_t>(i) * n + j];
      require(v == -m[static_cast<size_t>(j) * n + i],
              "b-matrix not skew-symmetric");
      require(std::abs(v) <= 1, "b-matrix entry exceeds 1: not finite type");
    }
  if (fresh_coeffs) return;
  for (int y = 0; y < n; ++y) {
    bool pos = false, neg = false;
    for (int x = n; x < 2 * n; ++x) {
      int v = m[static_cast<size_t>(x) * n + y];
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    require(!(pos && neg), "c-column not sign-coherent");
    require(pos || neg, "c-column is zero");
  }
}

std::string pack_stacked(const std::vector<int>& m) {
  std::string key(m.size(), '\0');
  for (size_t i = 0; i < m.size(); ++i) {
    require(m[i] >= -127 && m[i] <= 127, "entry out of packed range");
    key[i] = static_cast<char>(m[i]);
  }
  return key;
}

std::vector<int> unpack_stacked(const std::string& key) {
  std::vector<int> m(key.size());
  for (size_t i = 0; i < key.size(); ++i)
    m[i] = static_cast<signed char>(key[i]);
  return m;
}

// Canonical representative of [b; c] under simultaneous relabeling: b takes
// rows and columns permuted, c only columns (its rows live in the fixed
// initial coefficient frame). The columns of c are pairwise distinct
// (c stays invertible under mutation), so sorting them lexicographically
// determines the permutation uniquely -- no search needed.
std::vector<int> reduce_stacked(const std::vector<int>& m, int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  auto col_less = [&](int a, int b) {
    for (int x = n; x < 2 * n; ++x) {
      int va = m[static_cast<size_t>(x) * n + a];
      int vb = m[static_cast<size_t>(x) * n + b];
      if (va != vb) return va < vb;
    }
    return false;
  };
  std::sort(order.begin(), order.end(), col_less);
  for (int i = 0; i + 1 < n; ++i)
    require(col_less(order[i], order[i + 1]), "c-matrix has equal columns");

  std::vector<int> r(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      r[static_cast<size_t>(i) * n + j] =
          m[static_cast<size_t>(order[i]) * n + order[j]];
  for (int x = n; x < 2 * n; ++x)
    for (int j = 0; j < n; ++j)
      r[static_cast<size_t>(x) * n + j] =
          m[static_cast<size_t>(x) * n + order[j]];
  return r;
}

}  // namespace

Seed mutate_seed(const Seed& s, int k) {
  int n = static_cast<int>(s.b.size());
  require(k >= 0 && k < n, "mutation vertex out of range");
  std::vector<int> in = stack_seed(s), out;
  mutate_stacked(in, out, n, k);
  validate_stacked(out, n, false);
  std::vector<int> h = s.history;
  h.push_back(k);
  return unstack_seed(out, n, std::move(h));
}

std::vector<Seed> exchange_graph(const Seed& s) {
  int n = static_cast<int>(s.b.size());
  std::vector<int> m0 = stack_seed(s);
  validate_stacked(m0, n, false);

  struct Node {
    std::string key;
    int parent;
    int k;
  };
  std::vector<Node> nodes{{pack_stacked(m0), -1, -1}};
  std::unordered_set<std::string> seen{nodes[0].key};

  std::vector<int> cur, nxt;
  for (size_t head = 0; head < nodes.size(); ++head) {
    cur = unpack_stacked(nodes[head].key);
    for (int k = 0; k < n; ++k) {
      mutate_stacked(cur, nxt, n, k);
      validate_stacked(nxt, n, false);
      std::string key = pack_stacked(nxt);
      if (seen.insert(key).second)
        nodes.push_back({std::move(key), static_cast<int>(head), k});
    }
  }

  std::vector<Seed> out;
  out.reserve(nodes.size());
  for (const Node& node : nodes) {
    std::vector<int> path;
    for (int at = static_cast<int>(&node - nodes.data()); nodes[at].parent >= 0;
         at = nodes[at].parent)
      path.push_back(nodes[at].k);
    std::vector<int> history = s.history;
    history.insert(history.end(), path.rbegin(), path.rend());
    out.push_back(unstack_seed(unpack_stacked(node.key), n, std::move(history)));
  }
  return out;
}

std::vector<Vec> positive_c_vectors(const Seed& s) {
  int n = static_cast<int>(s.b.size());
  std::vector<int> m0 = stack_seed(s);
  validate_stacked(m0, n, false);

  std::set<Vec> found;
  auto collect = [&](const std::vector<int>& m) {
    for (int y = 0; y < n; ++y) {
      Vec col(n);
      bool nonneg = true;
      for (int x = 0; x < n; ++x) {
        col[x] = m[static_cast<size_t>(n + x) * n + y];
        nonneg = nonneg && col[x] >= 0;
      }
      if (nonneg) found.insert(std::move(col));
    }
  };

  std::unordered_set<std::string> seen{pack_stacked(m0)};
  std::deque<std::string> queue{*seen.begin()};
  collect(m0);

  std::vector<int> cur, nxt;
  while (!queue.empty()) {
    cur = unpack_stacked(queue.front());
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      mutate_stacked(cur, nxt, n, k);
      validate_stacked(nxt, n, false);
      std::string key = pack_stacked(nxt);
      if (seen.insert(key).second) {
        queue.push_back(std::move(key));
        collect(nxt);
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Vec> positive_c_vectors_reduced(const Seed& s,
                                            size_t* orbit_count) {
  int n = static_cast<int>(s.b.size());
  std::vector<int> m0 = stack_seed(s);
  validate_stacked(m0, n, false);

  std::set<Vec> found;
  auto collect = [&](const std::vector<int>& m) {
    for (int y = 0; y < n; ++y) {
      Vec col(n);
      bool nonneg = true;
      for (int x = 0; x < n; ++x) {
        col[x] = m[static_cast<size_t>(n + x) * n + y];
        nonneg = nonneg && col[x] >= 0;
      }
      if (nonneg) found.insert(std::move(col));
    }
  };

  // BFS over relabeling orbits. Mutation commutes with relabeling, so
  // expanding each canonical representative at every vertex reaches every
  // orbit the labeled walk would; a relabeled seed's columns are the same
  // set of vectors, so nothing is lost by collecting from representatives.
  std::string start = pack_stacked(reduce_stacked(m0, n));
  std::unordered_set<std::string> seen{start};
  std::deque<std::string> queue{start};
  collect(m0);

  std::vector<int> cur, nxt;
  while (!queue.empty()) {
    cur = unpack_stacked(queue.front());
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      mutate_stacked(cur, nxt, n, k);
      validate_stacked(nxt, n, false);
      std::string key = pack_stacked(reduce_stacked(nxt, n));
      if (seen.insert(key).second) {
        queue.push_back(std::move(key));
        collect(nxt);
      }
    }
  }
  if (orbit_count) *orbit_count = seen.size();
  return {found.begin(), found.end()};
}

namespace {

Mat mutate_b_only(const Mat& b, int k) {
  int n = static_cast<int>(b.size());
  Mat r(n, Vec(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (x == k || y == k) {
        r[x][y] = -b[x][y];
        continue;
      }
      int xk = b[x][k], ky = b[k][y];
      r[x][y] = narrow_int(
          ck_add(b[x][y],
                 ck_div_exact(ck_add(ck_mul(std::abs(xk), ky),
                                     ck_mul(xk, std::abs(ky))),
                              2)));
      require(std::abs(r[x][y]) <= 1, "b-matrix entry exceeds 1: not finite type");
    }
  return r;
}

}  // namespace

Mat canonical_form(const Mat& b) {
  require(is_skew_symmetric(b), "canonical_form: b must be skew-symmetric");
  int n = static_cast<int>(b.size());

  // Degree invariant of each vertex in the quiver of b.
  std::vector<std::pair<int, int>> inv(n, {0, 0});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (b[i][j] > 0) inv[i].first += b[i][j];
      if (b[i][j] < 0) inv[i].second -= b[i][j];
    }
  std::vector<std::pair<int, int>> target = inv;
  std::sort(target.begin(), target.end());

  // DFS over position -> vertex assignments restricted to matching degree
  // invariants. The flattening order grows by nested leading submatrices
  // (row d up to column d, then column d above row d), so each new
  // assignment appends a contiguous comparable segment.
  std::vector<int> pi(n, -1), best_pi;
  std::vector<bool> used(n, false);
  std::vector<int> cur, best;
  cur.reserve(static_cast<size_t>(n) * n);

  auto dfs = [&](auto&& self, int d) -> void {
    if (d == n) {
      if (best.empty() || cur < best) {
        best = cur;
        best_pi = pi;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || inv[v] != target[d]) continue;
      size_t len0 = cur.size();
      pi[d] = v;
      for (int q = 0; q <= d; ++q) cur.push_back(b[v][pi[q]]);
      for (int p = 0; p < d; ++p) cur.push_back(b[pi[p]][v]);
      // Prune when the prefix already exceeds the best known prefix; a
      // smaller-or-equal prefix can still reach or beat the optimum.
      bool viable = true;
      if (!best.empty()) {
        for (size_t i = 0; i < cur.size(); ++i) {
          if (cur[i] != best[i]) {
            viable = cur[i] < best[i];
            break;
          }
        }
      }
      if (viable) {
        used[v] = true;
        self(self, d + 1);
        used[v] = false;
      }
      cur.resize(len0);
      pi[d] = -1;
    }
  };
  dfs(dfs, 0);

  Mat r(n, Vec(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) r[p][q] = b[best_pi[p]][best_pi[q]];
  return r;
}

std::vector<Mat> mutation_class(const Mat& b) {
  Mat start = canonical_form(b);
  std::set<Mat> seen{start};
  std::deque<Mat> queue{start};
  int n = static_cast<int>(b.size());
  while (!queue.empty()) {
    Mat cur = queue.front();
    queue.pop_front();
    for (int k = 0; k < n; ++k) {
      Mat cf = canonical_form(mutate_b_only(cur, k));
      if (seen.insert(cf).second) queue.push_back(std::move(cf));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace ctk
