#pragma once

// Seed mutation with principal coefficients, exchange-graph enumeration,
// and mutation classes of quivers up to simultaneous relabeling.
//
// A seed is a pair of n x n integer matrices (b, c): b skew-symmetric with
// entries in {-1,0,1} (simply-laced finite type), c the coefficient matrix
// whose COLUMNS are the c-vectors, starting at the identity. Mutation at k
// acts on the stacked 2n x n matrix [b; c] by the standard matrix mutation
// rule; every c-column stays sign-coherent (all entries >= 0 or all <= 0).

#include <vector>

#include "ctk/root_system.hpp"

namespace ctk {

struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;  // 0-based (src, dst), sorted

  bool operator==(const Quiver&) const = default;
};

struct Seed {
  Mat b;
  Mat c;
  std::vector<int> history;  // 0-based mutation vertices from the start seed

  bool same_matrices(const Seed& o) const { return b == o.b && c == o.c; }
};

// Validates vertex range, no loops, no 2-cycles; sorts the arrow list.
Quiver make_quiver(int n, std::vector<std::pair<int, int>> arrows);

// b[i][j] = #arrows i->j - #arrows j->i.
Mat b_matrix(const Quiver& q);

// Quiver with max(b[i][j], 0) arrows i->j; requires b skew-symmetric.
Quiver gamma_quiver(const Mat& b);

// Orientation of the Dynkin diagram with every edge pointing low -> high.
Quiver default_orientation(const CartanDatum& d);

// The built-in start orientation each command and sweep begins from. Every
// diagram orients low -> high except the rank-4 star, whose conventional
// start is 2->3, 4->3, 3->1; all fixtures are stated against that choice.
Quiver initial_orientation(const CartanDatum& d);

Seed initial_seed(const Quiver& q);

// Mutation at vertex k (0-based). Involution; checked to preserve
// skew-symmetry, the finite-type bound |b| <= 1, and sign coherence.
Seed mutate_seed(const Seed& s, int k);

// All seeds reachable from s, deduplicated on exact (b, c), in BFS
// discovery order with shortest mutation histories. Labeled count: this
// grows as (number of clusters) * n!, so call only at small rank.
std::vector<Seed> exchange_graph(const Seed& s);

// The set of sign-coherent c-columns that are nonnegative, over the whole
// exchange graph, deduplicated and sorted lex. Streams instead of storing
// seeds, but still walks every labeled seed.
std::vector<Vec> positive_c_vectors(const Seed& s);

// Same set, computed on the quotient of the labeled walk by simultaneous
// relabeling (b takes rows and columns, c only columns; its rows stay in
// the fixed initial frame). Mutation commutes with relabeling and c never
// repeats a column, so sorting c's columns lexicographically picks a
// unique orbit representative without search. Orbits number roughly the
// labeled count divided by n!, which is what makes rank 7-8 sweeps
// tractable; the test suite pins agreement with the labeled route.
// orbit_count, when non-null, receives the number of orbits visited.
std::vector<Vec> positive_c_vectors_reduced(const Seed& s,
                                            size_t* orbit_count = nullptr);

// Lex-minimal representative of {apply_perm(b, p)} over the permutations
// that list vertex degree invariants (out-degree, in-degree) in sorted
// order; minimality is taken over nested leading submatrices, which lets
// partial assignments be pruned. Idempotent and relabeling-invariant.
Mat canonical_form(const Mat& b);

// Canonical forms of all quivers mutation-equivalent to b, sorted.
std::vector<Mat> mutation_class(const Mat& b);

}  // namespace ctk
