#include "ctk/repq.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace ctk {

namespace {

std::vector<int> topological_order(const Quiver& q) {
  std::vector<int> indeg(q.n, 0);
  for (auto [s, t] : q.arrows) {
    (void)s;
    ++indeg[t];
  }
  std::vector<int> order;
  std::vector<bool> done(q.n, false);
  for (int round = 0; round < q.n; ++round) {
    int pick = -1;
    for (int v = 0; v < q.n; ++v)
      if (!done[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    require(pick >= 0, "quiver has an oriented cycle");
    done[pick] = true;
    order.push_back(pick);
    for (auto [s, t] : q.arrows)
      if (s == pick) --indeg[t];
  }
  return order;
}

}  // namespace

CartanDatum diagram_of(const Quiver& q) {
  std::set<std::pair<int, int>> edge_set;
  for (auto [s, t] : q.arrows) {
    auto e = std::minmax(s, t);
    require(edge_set.insert({e.first, e.second}).second,
            "parallel arrows: not a diagram orientation");
  }
  return diagram_datum(q.n, {edge_set.begin(), edge_set.end()});
}

namespace {

void validate_rep(const Representation& r) {
  require(static_cast<int>(r.dims.size()) == r.q.n, "rep dims wrong length");
  require(r.maps.size() == r.q.arrows.size(), "rep maps wrong count");
  for (size_t a = 0; a < r.maps.size(); ++a) {
    auto [s, t] = r.q.arrows[a];
    require(r.maps[a].rows == r.dims[t] && r.maps[a].cols == r.dims[s],
            "rep map has wrong shape");
  }
}

std::vector<Rat> apply_map(const RMat& m, const std::vector<Rat>& v) {
  require(static_cast<int>(v.size()) == m.cols, "apply: shape mismatch");
  std::vector<Rat> r(m.rows, Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!m.at(i, j).is_zero()) r[i] += m.at(i, j) * v[j];
  return r;
}

}  // namespace

Mat euler_matrix(const Quiver& q) {
  topological_order(q);  // enforces acyclicity
  Mat e = identity_mat(q.n);
  for (auto [s, t] : q.arrows) e[s][t] -= 1;
  return e;
}

long long euler_form(const Quiver& q, const Vec& x, const Vec& y) {
  Mat e = euler_matrix(q);
  require(x.size() == e.size() && y.size() == e.size(),
          "euler_form: wrong length");
  long long s = 0;
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j)
      s = ck_add(s, ck_mul(x[i], ck_mul(e[i][j], y[j])));
  return s;
}

Representation simple_rep(const Quiver& q, int i) {
  require(i >= 0 && i < q.n, "simple_rep: vertex out of range");
  Representation r;
  r.q = q;
  r.dims.assign(q.n, 0);
  r.dims[i] = 1;
  for (auto [s, t] : q.arrows) r.maps.emplace_back(r.dims[t], r.dims[s]);
  return r;
}

namespace {

// All paths starting at i, per end vertex, in BFS order (trivial path
// first); paths are arrow-index sequences.
std::vector<std::vector<std::vector<int>>> paths_from(const Quiver& q, int i) {
  topological_order(q);  // acyclic, so the walk terminates
  std::vector<std::vector<std::vector<int>>> at(q.n);
  std::vector<std::pair<int, std::vector<int>>> queue{{i, {}}};
  at[i].push_back({});
  for (size_t head = 0; head < queue.size(); ++head) {
    auto [v, p] = queue[head];
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].first != v) continue;
      std::vector<int> ext = p;
      ext.push_back(static_cast<int>(a));
      at[q.arrows[a].second].push_back(ext);
      queue.emplace_back(q.arrows[a].second, std::move(ext));
    }
  }
  return at;
}

}  // namespace

Representation projective_rep(const Quiver& q, int i) {
  require(i >= 0 && i < q.n, "projective_rep: vertex out of range");
  auto at = paths_from(q, i);

  Representation r;
  r.q = q;
  r.dims.resize(q.n);
  for (int v = 0; v < q.n; ++v) r.dims[v] = static_cast<int>(at[v].size());

  std::vector<std::map<std::vector<int>, int>> index(q.n);
  for (int v = 0; v < q.n; ++v)
    for (size_t p = 0; p < at[v].size(); ++p)
      index[v][at[v][p]] = static_cast<int>(p);

  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    RMat m(r.dims[t], r.dims[s]);
    for (int col = 0; col < r.dims[s]; ++col) {
      std::vector<int> ext = at[s][col];
      ext.push_back(static_cast<int>(a));
      auto it = index[t].find(ext);
      require(it != index[t].end(), "projective: extended path missing");
      m.at(it->second, col) = Rat(1);
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

namespace {

bool is_sink(const Quiver& q, int k) {
  for (auto [s, t] : q.arrows) {
    (void)t;
    if (s == k) return false;
  }
  return true;
}

Quiver reflect_quiver(const Quiver& q, int k) {
  std::vector<std::pair<int, int>> arrows;
  for (auto [s, t] : q.arrows) {
    if (s == k || t == k)
      arrows.emplace_back(t, s);
    else
      arrows.emplace_back(s, t);
  }
  return make_quiver(q.n, std::move(arrows));
}

int simple_index(const Vec& v) {
  int at = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (v[i] != 1 || at >= 0) return -1;
    at = static_cast<int>(i);
  }
  return at;
}

// Inverse reflection functor at a source k: replaces the space at k by the
// cokernel of the map into the sum over outgoing arrows, materialized by a
// basis P of the left kernel; the reversed arrows pick up the blocks of P.
Representation source_reflect(const Representation& m, int k) {
  const Quiver& q = m.q;
  std::vector<int> out_arrows;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    require(q.arrows[a].second != k, "source_reflect: k is not a source");
    if (q.arrows[a].first == k) out_arrows.push_back(static_cast<int>(a));
  }

  int total = 0;
  std::vector<int> offset;
  for (int a : out_arrows) {
    offset.push_back(total);
    total += m.dims[q.arrows[a].second];
  }

  RMat g(total, m.dims[k]);
  for (size_t idx = 0; idx < out_arrows.size(); ++idx) {
    const RMat& ma = m.maps[out_arrows[idx]];
    for (int r = 0; r < ma.rows; ++r)
      for (int c = 0; c < ma.cols; ++c)
        g.at(offset[idx] + r, c) = ma.at(r, c);
  }

  auto left = kernel_basis(rmat_transpose(g));
  RMat P(static_cast<int>(left.size()), total);
  for (size_t r = 0; r < left.size(); ++r)
    for (int c = 0; c < total; ++c) P.at(static_cast<int>(r), c) = left[r][c];

  Representation res;
  res.dims = m.dims;
  res.dims[k] = static_cast<int>(left.size());

  std::vector<std::pair<std::pair<int, int>, RMat>> items;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    if (s != k) {
      items.push_back({{s, t}, m.maps[a]});
      continue;
    }
    size_t idx = std::find(out_arrows.begin(), out_arrows.end(),
                           static_cast<int>(a)) -
                 out_arrows.begin();
    RMat na(res.dims[k], m.dims[t]);
    for (int r = 0; r < na.rows; ++r)
      for (int c = 0; c < na.cols; ++c) na.at(r, c) = P.at(r, offset[idx] + c);
    items.push_back({{t, k}, std::move(na)});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<std::pair<int, int>> arrows;
  for (auto& it : items) arrows.push_back(it.first);
  res.q = make_quiver(q.n, arrows);
  require(res.q.arrows == arrows, "source_reflect: arrow order drifted");
  for (auto& it : items) res.maps.push_back(std::move(it.second));
  validate_rep(res);
  return res;
}

}  // namespace

Representation build_indecomposable(const Quiver& q, const Vec& a) {
  CartanDatum datum = diagram_of(q);
  require(is_positive_vec(a) && is_root(datum, a),
          "dimension vector is not a positive root");

  int scount = simple_index(a);
  if (scount >= 0) return simple_rep(q, scount);

  // Reduce a to a simple root by reflecting at sinks in cyclic
  // reverse-topological order; each visited vertex is a sink of the
  // current orientation.
  std::vector<int> order = topological_order(q);
  std::reverse(order.begin(), order.end());

  std::vector<std::pair<Quiver, int>> steps;
  Quiver cur = q;
  Vec beta = a;
  int simple_at = -1;
  int guard = (expected_positive_root_count(datum.type) + 2) * q.n;
  size_t oi = 0;
  while ((simple_at = simple_index(beta)) < 0) {
    require(guard-- > 0, "root reduction did not terminate");
    int k = order[oi % order.size()];
    ++oi;
    require(is_sink(cur, k), "reduction order lost sink admissibility");
    steps.push_back({cur, k});
    beta = reflect(datum, beta, k);
    require(is_positive_vec(beta) && is_root(datum, beta),
            "reduction left the positive roots");
    cur = reflect_quiver(cur, k);
  }

  Representation m = simple_rep(cur, simple_at);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    m = source_reflect(m, it->second);
    require(m.q == it->first, "rebuild quiver mismatch");
  }
  require(m.dims == a, "rebuilt module has wrong dimension vector");
  require(hom_dim(m, m) == 1, "rebuilt module is not exceptional");
  return m;
}

std::vector<std::vector<RMat>> hom_basis(const Representation& m,
                                         const Representation& n) {
  validate_rep(m);
  validate_rep(n);
  require(m.q == n.q, "hom: representations over different quivers");
  const Quiver& q = m.q;

  std::vector<int> off(q.n + 1, 0);
  for (int v = 0; v < q.n; ++v)
    off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  int unknowns = off[q.n];

  int equations = 0;
  for (auto [s, t] : q.arrows) equations += n.dims[t] * m.dims[s];

  // phi_t M_a = N_a phi_s, entrywise, unknowns phi_v row-major.
  RMat sys(equations, unknowns);
  int row = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c) {
        for (int mm = 0; mm < m.dims[t]; ++mm)
          sys.at(row, off[t] + r * m.dims[t] + mm) += m.maps[a].at(mm, c);
        for (int mm = 0; mm < n.dims[s]; ++mm)
          sys.at(row, off[s] + mm * m.dims[s] + c) -= n.maps[a].at(r, mm);
        ++row;
      }
  }

  auto ker = kernel_basis(sys);
  std::vector<std::vector<RMat>> basis;
  for (const auto& vec : ker) {
    std::vector<RMat> fam;
    for (int v = 0; v < q.n; ++v) {
      RMat phi(n.dims[v], m.dims[v]);
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c)
          phi.at(r, c) = vec[off[v] + r * m.dims[v] + c];
      fam.push_back(std::move(phi));
    }
    basis.push_back(std::move(fam));
  }
  return basis;
}

int hom_dim(const Representation& m, const Representation& n) {
  validate_rep(m);
  validate_rep(n);
  require(m.q == n.q, "hom: representations over different quivers");
  const Quiver& q = m.q;
  std::vector<int> off(q.n + 1, 0);
  for (int v = 0; v < q.n; ++v)
    off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  int unknowns = off[q.n];
  int equations = 0;
  for (auto [s, t] : q.arrows) equations += n.dims[t] * m.dims[s];

  RMat sys(equations, unknowns);
  int row = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c) {
        for (int mm = 0; mm < m.dims[t]; ++mm)
          sys.at(row, off[t] + r * m.dims[t] + mm) += m.maps[a].at(mm, c);
        for (int mm = 0; mm < n.dims[s]; ++mm)
          sys.at(row, off[s] + mm * m.dims[s] + c) -= n.maps[a].at(r, mm);
        ++row;
      }
  }
  return unknowns - rank(sys);
}

int ext_dim(const Representation& m, const Representation& n) {
  long long euler = euler_form(m.q, m.dims, n.dims);
  long long ext = ck_sub(hom_dim(m, n), euler);
  require(ext >= 0, "negative Ext dimension: broken Euler pairing");
  return narrow_int(ext);
}

namespace {

Representation direct_sum(const Quiver& q,
                          const std::vector<const Representation*>& parts) {
  Representation r;
  r.q = q;
  r.dims.assign(q.n, 0);
  for (const auto* p : parts)
    for (int v = 0; v < q.n; ++v) r.dims[v] += p->dims[v];
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    RMat m(r.dims[t], r.dims[s]);
    int ro = 0, co = 0;
    for (const auto* p : parts) {
      const RMat& pm = p->maps[a];
      for (int i = 0; i < pm.rows; ++i)
        for (int j = 0; j < pm.cols; ++j) m.at(ro + i, co + j) = pm.at(i, j);
      ro += p->dims[t];
      co += p->dims[s];
    }
    r.maps.push_back(std::move(m));
  }
  return r;
}

std::vector<Rat> flatten_family(const std::vector<RMat>& fam) {
  std::vector<Rat> flat;
  for (const RMat& m : fam)
    flat.insert(flat.end(), m.a.begin(), m.a.end());
  return flat;
}

int rank_of_vectors(const std::vector<std::vector<Rat>>& vecs) {
  if (vecs.empty()) return 0;
  RMat m(static_cast<int>(vecs.size()), static_cast<int>(vecs[0].size()));
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = 0; j < vecs[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = vecs[i][j];
  return rank(m);
}

}  // namespace

int ext_oracle(const Representation& m, const Representation& n) {
  validate_rep(m);
  validate_rep(n);
  require(m.q == n.q, "ext: representations over different quivers");
  const Quiver& q = m.q;

  // Radical of m at each vertex: sum of incoming images; the top picks up
  // a standard-basis complement.
  std::vector<std::vector<std::vector<Rat>>> top_reps(q.n);
  for (int v = 0; v < q.n; ++v) {
    std::vector<std::vector<Rat>> span;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      if (q.arrows[a].second != v) continue;
      const RMat& ma = m.maps[a];
      for (int c = 0; c < ma.cols; ++c) {
        std::vector<Rat> col(ma.rows);
        for (int r = 0; r < ma.rows; ++r) col[r] = ma.at(r, c);
        span.push_back(std::move(col));
      }
    }
    int base = rank_of_vectors(span);
    for (int r = 0; r < m.dims[v]; ++r) {
      std::vector<Rat> e(m.dims[v], Rat(0));
      e[r] = Rat(1);
      span.push_back(e);
      if (rank_of_vectors(span) > base) {
        ++base;
        top_reps[v].push_back(std::move(e));
      } else {
        span.pop_back();
      }
    }
  }

  // Projective cover P0 = sum of P_v, one copy per top representative.
  std::vector<Representation> projs;
  std::vector<const Representation*> parts;
  std::vector<std::pair<int, std::vector<Rat>>> gens;  // (vertex, image of e_v)
  for (int v = 0; v < q.n; ++v) {
    for (const auto& rep : top_reps[v]) {
      projs.push_back(projective_rep(q, v));
      gens.push_back({v, rep});
    }
  }
  for (const auto& p : projs) parts.push_back(&p);
  Representation p0 = direct_sum(q, parts);

  // Cover map per vertex: the path basis element p (block for generator
  // g at vertex v) goes to the composite of m's arrow maps along p
  // applied to g's image.
  std::vector<RMat> cover(q.n);
  for (int v = 0; v < q.n; ++v) cover[v] = RMat(m.dims[v], p0.dims[v]);
  {
    std::vector<int> col_off(q.n, 0);
    for (size_t g = 0; g < gens.size(); ++g) {
      auto [start, image] = gens[g];
      auto at = paths_from(q, start);
      for (int v = 0; v < q.n; ++v) {
        for (size_t pi = 0; pi < at[v].size(); ++pi) {
          std::vector<Rat> u = image;
          for (int a : at[v][pi]) u = apply_map(m.maps[a], u);
          for (int r = 0; r < m.dims[v]; ++r)
            cover[v].at(r, col_off[v] + static_cast<int>(pi)) = u[r];
        }
        col_off[v] += static_cast<int>(at[v].size());
      }
    }
    for (int v = 0; v < q.n; ++v)
      require(rank(cover[v]) == m.dims[v], "projective cover not surjective");
  }

  // Kernel K with inclusion iota and induced arrow maps.
  std::vector<RMat> iota(q.n);
  Representation kk;
  kk.q = q;
  kk.dims.assign(q.n, 0);
  for (int v = 0; v < q.n; ++v) {
    auto ker = kernel_basis(cover[v]);
    kk.dims[v] = static_cast<int>(ker.size());
    iota[v] = RMat(p0.dims[v], kk.dims[v]);
    for (size_t c = 0; c < ker.size(); ++c)
      for (int r = 0; r < p0.dims[v]; ++r)
        iota[v].at(r, static_cast<int>(c)) = ker[c][r];
  }
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    auto [s, t] = q.arrows[a];
    RMat ka(kk.dims[t], kk.dims[s]);
    for (int c = 0; c < kk.dims[s]; ++c) {
      std::vector<Rat> u(p0.dims[s]);
      for (int r = 0; r < p0.dims[s]; ++r) u[r] = iota[s].at(r, c);
      std::vector<Rat> w = apply_map(p0.maps[a], u);
      std::vector<Rat> x;
      require(solve(iota[t], w, x), "kernel not arrow-stable");
      for (int r = 0; r < kk.dims[t]; ++r) ka.at(r, c) = x[r];
    }
    kk.maps.push_back(std::move(ka));
  }

  // Ext^1(m, n) = coker( Hom(P0, n) -> Hom(K, n) ), restriction along iota.
  auto hp = hom_basis(p0, n);
  std::vector<std::vector<Rat>> restricted;
  for (const auto& fam : hp) {
    std::vector<RMat> res;
    for (int v = 0; v < q.n; ++v) res.push_back(rmat_mul(fam[v], iota[v]));
    restricted.push_back(flatten_family(res));
  }
  return hom_dim(kk, n) - rank_of_vectors(restricted);
}

std::vector<TiltingModule> tilting_modules(const Quiver& q, int cap) {
  require(cap >= 1, "cap must be positive");
  CartanDatum datum = diagram_of(q);
  RootSystem rs = build_root_system(datum);
  int count = static_cast<int>(rs.positive_roots.size());

  std::vector<Representation> indec;
  indec.reserve(count);
  for (const Vec& alpha : rs.positive_roots)
    indec.push_back(build_indecomposable(q, alpha));
  for (const Representation& m : indec)
    require(ext_dim(m, m) == 0, "indecomposable is not rigid");

  std::vector<std::vector<bool>> compat(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      bool ok = ext_dim(indec[i], indec[j]) == 0 &&
                ext_dim(indec[j], indec[i]) == 0;
      compat[i][j] = compat[j][i] = ok;
    }

  std::vector<TiltingModule> out;
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, int from) -> void {
    if (static_cast<int>(out.size()) >= cap) return;
    if (static_cast<int>(chosen.size()) == q.n) {
      TiltingModule t;
      for (int i : chosen) t.summands.push_back(indec[i]);
      out.push_back(std::move(t));
      return;
    }
    int need = q.n - static_cast<int>(chosen.size());
    for (int i = from; i + need <= count; ++i) {
      bool ok = true;
      for (int j : chosen)
        if (!compat[j][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
      if (static_cast<int>(out.size()) >= cap) return;
    }
  };
  dfs(dfs, 0);
  return out;
}

Mat ringel_matrix(const TiltingModule& t) {
  require(!t.summands.empty(), "empty tilting module");
  const Quiver& q = t.summands[0].q;
  require(static_cast<int>(t.summands.size()) == q.n,
          "tilting module needs rank many summands");
  Mat e = euler_matrix(q);
  Mat g(q.n, Vec(q.n, 0));
  for (int i = 0; i < q.n; ++i) {
    require(t.summands[i].q == q, "summands over different quivers");
    for (int j = 0; j < q.n; ++j) {
      long long s = 0;
      for (int k = 0; k < q.n; ++k)
        s = ck_add(s, ck_mul(t.summands[i].dims[k], e[k][j]));
      g[i][j] = narrow_int(s);
    }
  }
  long long det = det_bareiss(g);
  require(det == 1 || det == -1, "tilting matrix is not unimodular");
  return g;
}

std::vector<Vec> phi_B_positive(const Mat& g, const RootSystem& rs) {
  std::set<Vec> out;
  for (const Vec& alpha : rs.positive_roots) out.insert(mat_vec(g, alpha));
  return {out.begin(), out.end()};
}

std::vector<Vec> abs_set(const std::vector<Vec>& vs) {
  std::set<Vec> out;
  for (const Vec& v : vs) out.insert(abs_vec(v));
  return {out.begin(), out.end()};
}

std::vector<Vec> companion_from_ringel(const Mat& g, const RootSystem& rs) {
  int n = static_cast<int>(g.size());
  std::vector<Vec> xs;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    const Vec* found = nullptr;
    for (const Vec& alpha : rs.positive_roots) {
      if (abs_vec(mat_vec(g, alpha)) != e) continue;
      require(found == nullptr, "simple image is hit by two positive roots");
      found = &alpha;
    }
    require(found != nullptr, "no positive root maps onto a simple image");
    xs.push_back(*found);
  }
  return xs;
}

Quiver end_quiver(const TiltingModule& t) {
  require(!t.summands.empty(), "empty tilting module");
  const Quiver& q = t.summands[0].q;
  int n = q.n;
  require(static_cast<int>(t.summands.size()) == n,
          "tilting module needs rank many summands");

  std::vector<std::vector<std::vector<std::vector<RMat>>>> hom(
      n, std::vector<std::vector<std::vector<RMat>>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) hom[i][j] = hom_basis(t.summands[i], t.summands[j]);

  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      // Arrows i -> j count maps T_j -> T_i that are irreducible, i.e.
      // dim Hom(T_j, T_i) minus the span of composites through any other
      // summand.
      const auto& direct = hom[j][i];
      if (direct.empty()) continue;
      std::vector<std::vector<Rat>> comps;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        for (const auto& f : hom[j][k])
          for (const auto& h : hom[k][i]) {
            std::vector<RMat> comp;
            for (int v = 0; v < n; ++v) comp.push_back(rmat_mul(h[v], f[v]));
            comps.push_back(flatten_family(comp));
          }
      }
      int mult = static_cast<int>(direct.size()) - rank_of_vectors(comps);
      require(mult >= 0, "radical square exceeds Hom");
      for (int c = 0; c < mult; ++c) arrows.emplace_back(i, j);
    }
  return make_quiver(n, std::move(arrows));
}

}  // namespace ctk
