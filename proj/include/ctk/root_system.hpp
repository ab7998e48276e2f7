#pragma once

// Simply-laced (A/D/E) root systems in simple-root coordinates. The Cartan
// matrix doubles as the bilinear form: (x, y) = x^T C y, every root has
// self-pairing 2, and membership for lattice vectors is exactly the norm-2
// condition.
//
// Vertex numbering (1-based in I/O, 0-based internally):
//   A_n : path 1 - 2 - ... - n
//   D_4 : edges 1-3, 2-3, 3-4 (center 3)
//   D_n : path 1 - ... - (n-2) with extra edges (n-2)-(n-1), (n-2)-n
//   E_n : edges 1-3, 3-4, 4-5, 5-6, 2-4, then 6-7 (E7), 7-8 (E8)

#include <string>
#include <utility>
#include <vector>

#include "ctk/linalg.hpp"

namespace ctk {

struct DynkinType {
  char letter = 'A';
  int rank = 1;

  std::string name() const { return letter + std::to_string(rank); }
  bool operator==(const DynkinType&) const = default;
};

struct CartanDatum {
  DynkinType type;
  std::vector<std::pair<int, int>> edges;  // 0-based, i < j, sorted
  Mat cartan;                              // 2 on diagonal, -edge counts off
};

struct RootSystem {
  CartanDatum datum;
  std::vector<Vec> positive_roots;  // canonical order: height, then lex
};

// Validates letter/rank bounds (A: n>=1, D: n>=4, E: n in {6,7,8}).
CartanDatum make_cartan_datum(DynkinType t);

// Datum for an arbitrary vertex numbering of a simply-laced Dynkin
// diagram; the type is recognized from the graph shape (and the graph is
// rejected when it is not such a diagram).
CartanDatum diagram_datum(int n, std::vector<std::pair<int, int>> edges);

// Enumerates positive roots by closure under root addition from the
// simples, cross-checked against closure under simple reflections, and
// checked against the classical count for the type.
RootSystem build_root_system(const CartanDatum& d);

long long pair_with(const CartanDatum& d, const Vec& x, const Vec& y);

// s_i(v) = v - (v, alpha_i) alpha_i, vertex 0-based.
Vec reflect(const CartanDatum& d, const Vec& v, int i);

// Norm-2 test; exact root membership for vectors in the root lattice.
bool is_root(const CartanDatum& d, const Vec& v);

// A root is positive iff all coordinates are >= 0.
bool is_positive_vec(const Vec& v);

int root_height(const Vec& v);

// Canonical order on root coordinate vectors: height, then lex.
bool root_less(const Vec& a, const Vec& b);

int expected_positive_root_count(DynkinType t);

}  // namespace ctk
