#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ctk/verify.hpp"

using namespace ctk;

namespace {

Quiver star_q() { return make_quiver(4, {{1, 2}, {3, 2}, {2, 0}}); }

const std::vector<Vec> twelve = {
    {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 0},
    {0, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 0, 1},
    {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 0, 1}, {1, 1, 1, 1}};

}  // namespace

TEST_CASE("verifying the initial star seed: d-set and c-set are the roots") {
  RootSystem rs = build_root_system(make_cartan_datum({'D', 4}));
  VerificationReport r = verify_seed(initial_seed(star_q()), rs, {});
  CHECK(r.pass);
  CHECK(r.companion_bases_found > 0);
  CHECK(r.d_sets_all_equal);
  CHECK(r.set_mismatch.empty());
  std::vector<Vec> roots = rs.positive_roots;
  std::sort(roots.begin(), roots.end());
  CHECK(r.c_set == roots);
  CHECK(r.d_set == roots);
}

TEST_CASE("verifying the mutated star seed: the twelve vectors") {
  RootSystem rs = build_root_system(make_cartan_datum({'D', 4}));
  Seed gamma = mutate_seed(initial_seed(star_q()), 2);
  VerificationReport r =
      verify_seed(Seed{gamma.b, identity_mat(4), {}}, rs, {});
  CHECK(r.pass);
  CHECK(r.d_set == twelve);
  CHECK(r.c_set == twelve);
  CHECK(r.set_mismatch.empty());
  CHECK(r.b_canonical == canonical_form(gamma.b));
}

TEST_CASE("rank-2 seed verification") {
  RootSystem rs = build_root_system(make_cartan_datum({'A', 2}));
  VerificationReport r =
      verify_seed(initial_seed(make_quiver(2, {{0, 1}})), rs, {});
  CHECK(r.pass);
  CHECK(r.companion_bases_found == 6);
  std::vector<Vec> expect = {{0, 1}, {1, 0}, {1, 1}};
  CHECK(r.d_set == expect);
  CHECK(r.c_set == expect);
}

TEST_CASE("seed verification honours the basis cap") {
  RootSystem rs = build_root_system(make_cartan_datum({'D', 4}));
  Seed gamma = mutate_seed(initial_seed(star_q()), 2);
  VerifyOptions o;
  o.max_bases = 7;
  VerificationReport r = verify_seed(Seed{gamma.b, identity_mat(4), {}}, rs, o);
  CHECK(r.companion_bases_found == 7);
  CHECK(r.pass);
}

TEST_CASE("tilting realizations of the star orientation match their seeds") {
  CartanDatum d = make_cartan_datum({'D', 4});
  RootSystem rs = build_root_system(d);
  Quiver q = star_q();
  auto classes = mutation_class(b_matrix(q));
  std::vector<Seed> reps;
  for (const Mat& b : classes) reps.push_back(Seed{b, identity_mat(4), {}});

  // The projective tilting module realizes the initial seed itself, with
  // the simple roots as the extracted basis.
  TiltingModule projs{{projective_rep(q, 0), projective_rep(q, 1),
                       projective_rep(q, 2), projective_rep(q, 3)}};
  RingelRealization r = verify_ringel_realization(q, projs, reps, rs);
  CHECK(r.pass);
  CHECK(r.recompute_ok);
  CHECK(r.d_set_ok);
  CHECK(!r.matches.empty());
  std::vector<Vec> simples = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                              {0, 0, 0, 1}};
  CHECK(r.psi == simples);
  std::vector<Vec> roots = rs.positive_roots;
  std::sort(roots.begin(), roots.end());
  CHECK(r.abs_vectors == roots);

  // The mutated projective module realizes the cyclic seed.
  TiltingModule t{{projective_rep(q, 0), projective_rep(q, 1),
                   build_indecomposable(q, {1, 1, 1, 1}),
                   projective_rep(q, 3)}};
  RingelRealization r2 = verify_ringel_realization(q, t, reps, rs);
  CHECK(r2.pass);
  CHECK(r2.abs_vectors == twelve);
  std::vector<Vec> expect_psi = {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 0},
                                 {0, 0, 1, 1}};
  CHECK(r2.psi == expect_psi);
}

TEST_CASE("a tilting module over the fork orientation also verifies") {
  CartanDatum d = make_cartan_datum({'D', 4});
  RootSystem rs = build_root_system(d);
  Quiver q = make_quiver(4, {{2, 0}, {2, 1}, {3, 2}});
  auto classes = mutation_class(b_matrix(q));
  std::vector<Seed> reps;
  for (const Mat& b : classes) reps.push_back(Seed{b, identity_mat(4), {}});
  TiltingModule t{{build_indecomposable(q, {0, 0, 0, 1}),
                   build_indecomposable(q, {1, 0, 0, 0}),
                   build_indecomposable(q, {1, 1, 1, 1}),
                   build_indecomposable(q, {0, 1, 0, 0})}};
  RingelRealization r = verify_ringel_realization(q, t, reps, rs);
  CHECK(r.pass);
  CHECK(r.abs_vectors == twelve);
  std::vector<Vec> expect_psi = {{0, 0, 1, 0}, {1, 0, 0, 0}, {0, 0, 1, 1},
                                 {0, 1, 0, 0}};
  CHECK(r.psi == expect_psi);
}

TEST_CASE("class sweeps pass at small rank") {
  for (DynkinType t : {DynkinType{'A', 2}, DynkinType{'A', 3}}) {
    AggregateReport agg = verify_class(t, {});
    CHECK(agg.pass);
    for (const auto& s : agg.seeds) {
      CHECK(s.pass);
      CHECK(s.set_mismatch.empty());
    }
  }
  AggregateReport d4 = verify_class({'D', 4}, {});
  CHECK(d4.pass);
  CHECK(d4.seeds.size() == 6);
}

TEST_CASE("class sweep with tilting samples") {
  VerifyOptions o;
  o.with_tilting = true;
  o.tilting_sample = 4;
  AggregateReport agg = verify_class({'D', 4}, o);
  CHECK(agg.pass);
  CHECK(agg.ringel.size() == 4);
  for (const auto& r : agg.ringel) {
    CHECK(r.pass);
    CHECK(r.recompute_ok);
    CHECK(r.d_set_ok);
  }
}

TEST_CASE("labeled sweep covers every distinct exchange matrix") {
  VerifyOptions o;
  o.labeled = true;
  AggregateReport agg = verify_class({'A', 2}, o);
  CHECK(agg.pass);
  // Every rank-2 mutation negates the exchange matrix, so the ten labeled
  // seeds carry exactly two distinct ones.
  CHECK(agg.seeds.size() == 2);
}

TEST_CASE("worker count does not change the outcome") {
  VerifyOptions serial, parallel;
  parallel.jobs = 4;
  AggregateReport a = verify_class({'A', 4}, serial);
  AggregateReport b = verify_class({'A', 4}, parallel);
  CHECK(a.pass);
  CHECK(b.pass);
  CHECK(a.seeds.size() == b.seeds.size());
  for (size_t i = 0; i < a.seeds.size(); ++i) {
    CHECK(a.seeds[i].id == b.seeds[i].id);
    CHECK(a.seeds[i].d_set == b.seeds[i].d_set);
    CHECK(a.seeds[i].c_set == b.seeds[i].c_set);
  }
}
