#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ctk/io.hpp"

using namespace ctk;
using nlohmann::json;

namespace {

Quiver star_q() { return make_quiver(4, {{1, 2}, {3, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("vector lists round-trip") {
  std::vector<Vec> vs = {{1, 0, -1}, {0, 2, 3}};
  CHECK(vecs_from_json(vecs_to_json(vs)) == vs);
  CHECK(vecs_to_json({}).is_array());
}

TEST_CASE("quiver JSON is 1-based and round-trips") {
  Quiver q = star_q();
  json j = quiver_to_json(q);
  CHECK(j["n"] == 4);
  CHECK(j["arrows"][0] == json::array({2, 3}));
  CHECK(quiver_from_json(j) == q);
  // Out-of-range and malformed input is rejected.
  CHECK_THROWS(quiver_from_json(json{{"n", 2}, {"arrows", {{1, 3}}}}));
  CHECK_THROWS(quiver_from_json(json{{"n", 2}, {"arrows", {{0, 1}}}}));
}

TEST_CASE("seed JSON round-trips with history") {
  Seed s = mutate_seed(mutate_seed(initial_seed(star_q()), 2), 0);
  json j = seed_to_json(s);
  CHECK(j["history"] == json::array({3, 1}));  // 1-based
  Seed t = seed_from_json(j);
  CHECK(t.b == s.b);
  CHECK(t.c == s.c);
  CHECK(t.history == s.history);
  // A non-skew b-matrix is rejected on the way in.
  json bad = j;
  bad["b"][0][1] = 7;
  CHECK_THROWS(seed_from_json(bad));
}

TEST_CASE("verification reports serialize deterministically") {
  RootSystem rs = build_root_system(make_cartan_datum({'A', 2}));
  VerificationReport r =
      verify_seed(initial_seed(make_quiver(2, {{0, 1}})), rs, {});
  json j = seed_report_to_json(r);
  CHECK(j["pass"] == true);
  CHECK(j["d_set"] == j["c_set"]);
  CHECK(j["set_mismatch"].empty());

  AggregateReport agg = verify_class({'A', 2}, {});
  std::string without = report_to_json(agg, false).dump(2);
  CHECK(without == report_to_json(agg, false).dump(2));
  CHECK(without.find("seconds") == std::string::npos);
  std::string with = report_to_json(agg, true).dump(2);
  CHECK(with.find("seconds") != std::string::npos);

  // Two independent runs produce identical bytes without timings.
  AggregateReport again = verify_class({'A', 2}, {});
  CHECK(report_to_json(again, false).dump(2) == without);
}

TEST_CASE("realization JSON carries the match table") {
  CartanDatum d = make_cartan_datum({'D', 4});
  RootSystem rs = build_root_system(d);
  Quiver q = star_q();
  std::vector<Seed> reps;
  for (const Mat& b : mutation_class(b_matrix(q)))
    reps.push_back(Seed{b, identity_mat(4), {}});
  TiltingModule t{{projective_rep(q, 0), projective_rep(q, 1),
                   projective_rep(q, 2), projective_rep(q, 3)}};
  json j = realization_to_json(verify_ringel_realization(q, t, reps, rs));
  CHECK(j["pass"] == true);
  CHECK(j["recompute_ok"] == true);
  CHECK(j["d_set_ok"] == true);
  CHECK(!j["matches"].empty());
  CHECK(j["matches"][0].contains("class"));
  CHECK(j["matches"][0].contains("agreed"));
  CHECK(j["companion_basis"].size() == 4);
}

TEST_CASE("DOT output parses back to the same quiver") {
  for (const Quiver& q :
       {star_q(), make_quiver(1, {}), make_quiver(3, {{0, 1}, {1, 2}})}) {
    std::string dot = quiver_to_dot(q);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(quiver_from_dot(dot) == q);
  }
  // Every vertex appears even when isolated.
  std::string dot = quiver_to_dot(make_quiver(2, {}));
  CHECK(dot.find("1;") != std::string::npos);
  CHECK(dot.find("2;") != std::string::npos);
}

TEST_CASE("type strings are validated") {
  CHECK(make_type("A", 3).letter == 'A');
  CHECK(make_type("D", 4).rank == 4);
  CHECK(make_type("E", 8).name() == "E8");
  CHECK_THROWS(make_type("B", 3));
  CHECK_THROWS(make_type("D", 3));
  CHECK_THROWS(make_type("E", 9));
  CHECK_THROWS(make_type("A", 0));
}
