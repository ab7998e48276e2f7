#pragma once

// Companion bases for a skew-symmetric exchange matrix b over a root
// system: ordered tuples (gamma_1, ..., gamma_n) of roots forming a
// Z-basis of the root lattice with |(gamma_i, gamma_j)| = |b[i][j]| for
// all i != j. Expansion coefficients of roots in such a basis give
// d-vectors; the d-set collects their absolute values over all positive
// roots.

#include <vector>

#include "ctk/root_system.hpp"

namespace ctk {

struct CompanionBasis {
  std::vector<Vec> gammas;  // gammas[i] is the root attached to vertex i
};

struct SearchOptions {
  int max_results = 64;      // stop after this many bases
  bool signed_roots = false; // default searches positive roots only
};

// Z-basis test (determinant +-1) plus the pairing condition against b.
bool is_companion_basis(const std::vector<Vec>& gammas, const Mat& b,
                        const CartanDatum& d);

// Backtracking over roots in canonical order, filling vertices in order of
// decreasing constraint degree (number of nonzero off-diagonal entries in
// the row of b). Deterministic; results in discovery order.
std::vector<CompanionBasis> search_companion_bases(const Mat& b,
                                                   const RootSystem& rs,
                                                   const SearchOptions& opts);

// Coefficients x with a = sum x_i gamma_i; exact since the basis is
// unimodular.
Vec expand_in_basis(const Vec& a, const CompanionBasis& cb);

// Componentwise absolute value of the expansion.
Vec d_vector(const Vec& a, const CompanionBasis& cb);

// {d_vector(alpha) : alpha positive root}, deduplicated, sorted lex.
std::vector<Vec> d_set(const CompanionBasis& cb, const RootSystem& rs);

}  // namespace ctk
