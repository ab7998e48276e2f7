#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ctk/root_system.hpp"

using namespace ctk;

TEST_CASE("positive root counts across the small ranks") {
  struct Pin {
    char letter;
    int rank;
    int count;
  };
  // Counts frozen from an independent reflection-closure enumeration.
  const Pin pins[] = {{'A', 1, 1},  {'A', 2, 3},  {'A', 3, 6},  {'A', 4, 10},
                      {'A', 5, 15}, {'A', 6, 21}, {'D', 4, 12}, {'D', 5, 20},
                      {'E', 6, 36}, {'E', 7, 63}};
  for (const auto& p : pins) {
    RootSystem rs = build_root_system(make_cartan_datum({p.letter, p.rank}));
    CHECK(static_cast<int>(rs.positive_roots.size()) == p.count);
  }
}

TEST_CASE("A2 roots exactly") {
  RootSystem rs = build_root_system(make_cartan_datum({'A', 2}));
  std::vector<Vec> expect = {{0, 1}, {1, 0}, {1, 1}};
  CHECK(rs.positive_roots == expect);
}

TEST_CASE("rank-4 star roots include the doubled-center root") {
  RootSystem rs = build_root_system(make_cartan_datum({'D', 4}));
  std::set<Vec> roots(rs.positive_roots.begin(), rs.positive_roots.end());
  CHECK(roots.count({1, 1, 2, 1}) == 1);   // highest root
  CHECK(roots.count({1, 0, 1, 0}) == 1);
  CHECK(roots.count({0, 1, 1, 1}) == 1);
  CHECK(roots.count({1, 1, 0, 0}) == 0);   // 1 and 2 are not adjacent
}

TEST_CASE("every enumerated root has self-pairing 2; sums behave") {
  for (DynkinType t : {DynkinType{'A', 4}, DynkinType{'D', 5}, DynkinType{'E', 6}}) {
    CartanDatum d = make_cartan_datum(t);
    RootSystem rs = build_root_system(d);
    for (const Vec& a : rs.positive_roots) {
      CHECK(pair_with(d, a, a) == 2);
      CHECK(is_root(d, a));
    }
    // Root sums: alpha + beta is a root iff pairing is -1.
    for (size_t i = 0; i < rs.positive_roots.size(); ++i)
      for (size_t j = i + 1; j < rs.positive_roots.size(); ++j) {
        Vec sum = vec_add(rs.positive_roots[i], rs.positive_roots[j]);
        bool should =
            pair_with(d, rs.positive_roots[i], rs.positive_roots[j]) == -1;
        CHECK(is_root(d, sum) == should);
      }
  }
}

TEST_CASE("reflections are involutive and permute the roots") {
  CartanDatum d = make_cartan_datum({'D', 4});
  RootSystem rs = build_root_system(d);
  std::set<Vec> roots(rs.positive_roots.begin(), rs.positive_roots.end());
  for (const Vec& a : rs.positive_roots)
    for (int i = 0; i < 4; ++i) {
      Vec r = reflect(d, a, i);
      CHECK(reflect(d, r, i) == a);
      Vec abs = r;
      if (!is_positive_vec(r))
        for (auto& x : abs) x = -x;
      CHECK(roots.count(abs) == 1);
    }
}

TEST_CASE("vertex conventions") {
  CartanDatum d4 = make_cartan_datum({'D', 4});
  std::vector<std::pair<int, int>> d4_edges = {{0, 2}, {1, 2}, {2, 3}};
  CHECK(d4.edges == d4_edges);

  CartanDatum d5 = make_cartan_datum({'D', 5});
  std::vector<std::pair<int, int>> d5_edges = {{0, 1}, {1, 2}, {2, 3}, {2, 4}};
  CHECK(d5.edges == d5_edges);

  CartanDatum e6 = make_cartan_datum({'E', 6});
  std::vector<std::pair<int, int>> e6_edges = {{0, 2}, {1, 3}, {2, 3},
                                               {3, 4}, {4, 5}};
  CHECK(e6.edges == e6_edges);

  CHECK_THROWS_AS(make_cartan_datum({'D', 3}), invariant_error);
  CHECK_THROWS_AS(make_cartan_datum({'E', 9}), invariant_error);
  CHECK_THROWS_AS(make_cartan_datum({'B', 2}), invariant_error);
}

TEST_CASE("diagram recognition from arbitrary numberings") {
  // A4 path numbered out of order.
  CartanDatum a4 = diagram_datum(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(a4.type == DynkinType{'A', 4});
  CHECK(build_root_system(a4).positive_roots.size() == 10);

  // Star with center 0.
  CartanDatum d4 = diagram_datum(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(d4.type == DynkinType{'D', 4});

  CartanDatum e6 = diagram_datum(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
  CHECK(e6.type == DynkinType{'E', 6});

  // Cycle, disconnected, and non-Dynkin trees are rejected.
  CHECK_THROWS_AS(diagram_datum(3, {{0, 1}, {1, 2}, {2, 0}}), invariant_error);
  CHECK_THROWS_AS(diagram_datum(4, {{0, 1}, {2, 3}, {1, 0}}), invariant_error);
  CHECK_THROWS_AS(
      diagram_datum(7, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}),
      invariant_error);  // degree-4 vertex
  CHECK_THROWS_AS(
      diagram_datum(9,
                    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {4, 8}}),
      invariant_error);  // branch lengths (1,3,4): not A/D/E
}

TEST_CASE("canonical root order is by height then lex") {
  RootSystem rs = build_root_system(make_cartan_datum({'A', 3}));
  for (size_t i = 0; i + 1 < rs.positive_roots.size(); ++i)
    CHECK(root_less(rs.positive_roots[i], rs.positive_roots[i + 1]));
  CHECK(rs.positive_roots.front() == Vec{0, 0, 1});
  CHECK(rs.positive_roots.back() == Vec{1, 1, 1});
}
