#include "ctk/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

namespace ctk {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<Vec> symmetric_difference(const std::vector<Vec>& a,
                                      const std::vector<Vec>& b) {
  std::vector<Vec> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

// Coordinate permutation of every vector in the set: out[p[i]] = v[i].
std::vector<Vec> permute_set(const std::vector<Vec>& s,
                             const std::vector<int>& p) {
  std::vector<Vec> out;
  out.reserve(s.size());
  for (const Vec& v : s) {
    Vec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[p[i]] = v[i];
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Relabeling-invariant fingerprint of a vector set, for fast mismatch
// rejection before trying permutations.
std::vector<Vec> set_fingerprint(const std::vector<Vec>& s) {
  std::vector<Vec> fp;
  fp.reserve(s.size());
  for (const Vec& v : s) {
    Vec w = v;
    std::sort(w.begin(), w.end());
    fp.push_back(std::move(w));
  }
  std::sort(fp.begin(), fp.end());
  return fp;
}

}  // namespace

VerificationReport verify_seed(const Seed& s, const RootSystem& rs,
                               const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport r;
  r.b_canonical = canonical_form(s.b);

  SearchOptions so;
  so.max_results = opts.max_bases;
  so.signed_roots = opts.signed_search;
  auto bases = search_companion_bases(s.b, rs, so);
  r.companion_bases_found = static_cast<int>(bases.size());

  r.d_sets_all_equal = true;
  if (!bases.empty()) {
    r.d_set = d_set(bases[0], rs);
    for (size_t i = 1; i < bases.size(); ++i)
      if (d_set(bases[i], rs) != r.d_set) {
        r.d_sets_all_equal = false;
        break;
      }
  }

  r.c_set = positive_c_vectors_reduced(
      Seed{s.b, identity_mat(static_cast<int>(s.b.size())), {}});
  r.set_mismatch = symmetric_difference(r.d_set, r.c_set);

  r.pass = r.companion_bases_found >= 1 && r.d_sets_all_equal &&
           r.set_mismatch.empty();
  r.seconds = seconds_since(t0);
  return r;
}

RingelRealization verify_ringel_realization(const Quiver& q,
                                            const TiltingModule& t,
                                            const std::vector<Seed>& class_reps,
                                            const RootSystem& rs) {
  RingelRealization r;
  for (const Representation& summand : t.summands)
    r.summand_dims.push_back(summand.dims);

  Mat g = ringel_matrix(t);
  r.abs_vectors = abs_set(phi_B_positive(g, rs));
  r.psi = companion_from_ringel(g, rs);

  int n = q.n;
  std::vector<int> perm(n);
  const std::vector<Vec> target_fp = set_fingerprint(r.abs_vectors);

  bool did_recompute = false;
  bool any_agreed = false;
  for (size_t ci = 0; ci < class_reps.size(); ++ci) {
    std::vector<Vec> cset = positive_c_vectors_reduced(
        Seed{class_reps[ci].b, identity_mat(n), {}});
    if (set_fingerprint(cset) != target_fp) continue;

    bool matched = false, agreed = false;
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      if (permute_set(cset, perm) != r.abs_vectors) continue;
      Mat b_relabeled = apply_perm(class_reps[ci].b, perm);
      if (!did_recompute) {
        // The permutation match leans on equivariance and the scan on the
        // quotient walk; re-enumerate once from scratch on the full
        // labeled walk to anchor both shortcuts.
        did_recompute = true;
        r.recompute_ok =
            positive_c_vectors(Seed{b_relabeled, identity_mat(n), {}}) ==
            r.abs_vectors;
      }
      matched = true;
      if (is_companion_basis(r.psi, b_relabeled, rs.datum)) {
        agreed = true;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (matched) {
      r.matches.emplace_back(static_cast<int>(ci), agreed);
      any_agreed = any_agreed || agreed;
    }
  }

  r.d_set_ok = d_set(CompanionBasis{r.psi}, rs) == r.abs_vectors;
  r.pass = !r.matches.empty() && any_agreed && r.recompute_ok && r.d_set_ok;
  return r;
}

namespace {

// Every distinct b-matrix reachable by mutation from b0, exact labels.
std::vector<Mat> labeled_b_matrices(const Mat& b0) {
  std::set<Mat> seen{b0};
  std::deque<Mat> queue{b0};
  int n = static_cast<int>(b0.size());
  while (!queue.empty()) {
    Mat cur = queue.front();
    queue.pop_front();
    Seed s{cur, identity_mat(n), {}};
    for (int k = 0; k < n; ++k) {
      Mat next = mutate_seed(s, k).b;
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::string index_tag(size_t i) {
  std::string s = std::to_string(i);
  while (s.size() < 3) s.insert(s.begin(), '0');
  return s;
}

}  // namespace

AggregateReport verify_class(DynkinType type, const VerifyOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  AggregateReport agg;
  agg.type = type;

  CartanDatum datum = make_cartan_datum(type);
  RootSystem rs = build_root_system(datum);
  Quiver q0 = initial_orientation(datum);

  std::vector<Mat> targets;
  if (opts.labeled) {
    targets = labeled_b_matrices(b_matrix(q0));
  } else {
    targets = mutation_class(b_matrix(q0));
  }

  std::vector<Seed> reps;
  reps.reserve(targets.size());
  for (const Mat& b : targets)
    reps.push_back(Seed{b, identity_mat(static_cast<int>(b.size())), {}});

  agg.seeds.resize(reps.size());
  {
    int jobs = std::max(1, opts.jobs);
    std::atomic<size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr first_error;
    auto worker = [&] {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= reps.size()) return;
        try {
          agg.seeds[i] = verify_seed(reps[i], rs, opts);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
  }
  for (size_t i = 0; i < agg.seeds.size(); ++i)
    agg.seeds[i].id = type.name() + (opts.labeled ? "/b-" : "/class-") +
                      index_tag(i);

  bool all = true;
  for (const auto& rep : agg.seeds) all = all && rep.pass;

  if (opts.with_tilting) {
    // Tilting realizations are matched against class representatives, so
    // build those even in labeled mode.
    std::vector<Seed> class_reps;
    for (const Mat& b : mutation_class(b_matrix(q0)))
      class_reps.push_back(
          Seed{b, identity_mat(static_cast<int>(b.size())), {}});

    auto tilts = tilting_modules(q0, opts.tilting_cap);
    size_t take = std::min(tilts.size(),
                           static_cast<size_t>(std::max(1, opts.tilting_sample)));
    for (size_t ti = 0; ti < take; ++ti) {
      RingelRealization frag =
          verify_ringel_realization(q0, tilts[ti], class_reps, rs);
      all = all && frag.pass;
      if (!opts.labeled) {
        for (auto [ci, agreed] : frag.matches)
          agg.seeds[ci].ringel_matches.push_back(
              RingelMatchEntry{frag.summand_dims, agreed});
      }
      agg.ringel.push_back(std::move(frag));
    }
  }

  agg.pass = all;
  agg.seconds = seconds_since(t0);
  return agg;
}

}  // namespace ctk
