#include "ctk/root_system.hpp"

#include <algorithm>
#include <set>

namespace ctk {

CartanDatum make_cartan_datum(DynkinType t) {
  int n = t.rank;
  std::vector<std::pair<int, int>> edges;
  switch (t.letter) {
    case 'A':
      require(n >= 1, "type A needs rank >= 1");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case 'D':
      require(n >= 4, "type D needs rank >= 4");
      if (n == 4) {
        edges = {{0, 2}, {1, 2}, {2, 3}};
      } else {
        for (int i = 0; i + 1 <= n - 3; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 3, n - 2);
        edges.emplace_back(n - 3, n - 1);
      }
      break;
    case 'E':
      require(n >= 6 && n <= 8, "type E needs rank in {6,7,8}");
      edges = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}};
      if (n >= 7) edges.emplace_back(5, 6);
      if (n == 8) edges.emplace_back(6, 7);
      break;
    default:
      fail("type letter must be A, D or E");
  }
  std::sort(edges.begin(), edges.end());

  Mat cartan(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) cartan[i][i] = 2;
  for (auto [i, j] : edges) {
    cartan[i][j] = -1;
    cartan[j][i] = -1;
  }
  return CartanDatum{t, std::move(edges), std::move(cartan)};
}

CartanDatum diagram_datum(int n, std::vector<std::pair<int, int>> edges) {
  require(n >= 1, "diagram needs at least one vertex");
  std::set<std::pair<int, int>> norm;
  for (auto [a, b] : edges) {
    require(a >= 0 && a < n && b >= 0 && b < n, "edge endpoint out of range");
    require(a != b, "diagram has a loop");
    require(norm.insert(std::minmax(a, b)).second, "diagram has a double edge");
  }
  require(static_cast<int>(norm.size()) == n - 1, "diagram is not a tree");

  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : norm) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  require(reached == n, "diagram is not connected");

  std::vector<int> branch_vertices;
  for (int v = 0; v < n; ++v) {
    require(adj[v].size() <= 3, "diagram vertex of degree > 3");
    if (adj[v].size() == 3) branch_vertices.push_back(v);
  }
  require(branch_vertices.size() <= 1, "diagram has two branch vertices");

  DynkinType type;
  if (branch_vertices.empty()) {
    type = {'A', n};
  } else {
    int center = branch_vertices[0];
    std::vector<int> lens;
    for (int w : adj[center]) {
      int len = 1, prev = center, cur = w;
      while (adj[cur].size() == 2) {
        int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    if (lens[0] == 1 && lens[1] == 1) {
      type = {'D', n};
    } else if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4) {
      type = {'E', n};
      require(n >= 6 && n <= 8, "diagram branch lengths off for type E");
    } else {
      fail("diagram is not a simply-laced Dynkin diagram");
    }
  }

  Mat cartan(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) cartan[i][i] = 2;
  for (auto [a, b] : norm) {
    cartan[a][b] = -1;
    cartan[b][a] = -1;
  }
  return CartanDatum{type, {norm.begin(), norm.end()}, std::move(cartan)};
}

long long pair_with(const CartanDatum& d, const Vec& x, const Vec& y) {
  return bilinear_form(d.cartan, x, y);
}

Vec reflect(const CartanDatum& d, const Vec& v, int i) {
  int n = static_cast<int>(d.cartan.size());
  require(v.size() == d.cartan.size(), "reflect: wrong length");
  require(i >= 0 && i < n, "reflect: vertex out of range");
  long long c = 0;
  for (int j = 0; j < n; ++j) c = ck_add(c, ck_mul(d.cartan[i][j], v[j]));
  Vec r = v;
  r[i] = narrow_int(ck_sub(r[i], c));
  return r;
}

bool is_root(const CartanDatum& d, const Vec& v) {
  require(v.size() == d.cartan.size(), "is_root: wrong length");
  return pair_with(d, v, v) == 2;
}

bool is_positive_vec(const Vec& v) {
  bool nonzero = false;
  for (int x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

int root_height(const Vec& v) { return vec_sum(v); }

bool root_less(const Vec& a, const Vec& b) {
  int ha = root_height(a), hb = root_height(b);
  if (ha != hb) return ha < hb;
  return a < b;
}

int expected_positive_root_count(DynkinType t) {
  switch (t.letter) {
    case 'A':
      return t.rank * (t.rank + 1) / 2;
    case 'D':
      return t.rank * (t.rank - 1);
    case 'E':
      if (t.rank == 6) return 36;
      if (t.rank == 7) return 63;
      return 120;
    default:
      fail("unknown type letter");
  }
}

RootSystem build_root_system(const CartanDatum& d) {
  int n = static_cast<int>(d.cartan.size());
  std::set<Vec> seen;
  std::vector<Vec> queue;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(std::move(e));
  }

  // Closure under adding a simple root: for distinct positive roots,
  // alpha + alpha_i is a root iff (alpha, alpha_i) = -1.
  for (size_t head = 0; head < queue.size(); ++head) {
    Vec alpha = queue[head];
    for (int i = 0; i < n; ++i) {
      Vec e(n, 0);
      e[i] = 1;
      if (pair_with(d, alpha, e) != -1) continue;
      Vec next = vec_add(alpha, e);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }

  // Independent cross-check: the same set must be closed under simple
  // reflections (up to sign).
  for (const Vec& alpha : queue) {
    for (int i = 0; i < n; ++i) {
      Vec r = reflect(d, alpha, i);
      if (is_positive_vec(r)) {
        require(seen.count(r) == 1, "root enumeration not reflection-closed");
      } else {
        Vec neg(r.size());
        for (size_t k = 0; k < r.size(); ++k) neg[k] = -r[k];
        require(seen.count(neg) == 1, "root enumeration not reflection-closed");
      }
    }
  }

  std::vector<Vec> roots(seen.begin(), seen.end());
  std::sort(roots.begin(), roots.end(), root_less);
  require(static_cast<int>(roots.size()) == expected_positive_root_count(d.type),
          "positive root count does not match the type");
  return RootSystem{d, std::move(roots)};
}

}  // namespace ctk
