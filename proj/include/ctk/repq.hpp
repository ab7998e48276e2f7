#pragma once

// Quiver representations over an acyclic orientation of a simply-laced
// Dynkin diagram: reflection-functor construction of indecomposables, Hom
// and Ext spaces (two independent routes), tilting modules, the linear map
// induced by a tilting module on dimension vectors, and the quiver of the
// endomorphism algebra.
//
// A representation assigns a vector space to each vertex and a matrix to
// each arrow; the matrix for arrow a : s -> t has shape dims[t] x dims[s]
// and acts on column vectors.

#include <vector>

#include "ctk/exchange.hpp"
#include "ctk/linalg.hpp"
#include "ctk/root_system.hpp"

namespace ctk {

struct Representation {
  Quiver q;
  Vec dims;
  std::vector<RMat> maps;  // aligned with q.arrows
};

struct TiltingModule {
  std::vector<Representation> summands;  // dimension vectors in root order
};

// Underlying diagram of the quiver, with the type recognized from the
// graph shape; rejects parallel arrows and non-Dynkin shapes.
CartanDatum diagram_of(const Quiver& q);

// Matrix of the Euler form: e = I - (arrow count matrix); requires q
// acyclic. <x, y> = x^T e y equals dim Hom - dim Ext for representations
// with those dimension vectors.
Mat euler_matrix(const Quiver& q);
long long euler_form(const Quiver& q, const Vec& x, const Vec& y);

Representation simple_rep(const Quiver& q, int i);

// Indecomposable projective at vertex i; basis at vertex j = paths i -> j.
Representation projective_rep(const Quiver& q, int i);

// The indecomposable with dimension vector a (a positive root of the
// diagram underlying q), built by reducing a to a simple root through
// sink reflections and rebuilding with inverse reflection functors.
// Postcondition: dims == a and End = k (checked).
Representation build_indecomposable(const Quiver& q, const Vec& a);

// Basis of Hom(m, n): per-vertex matrix families commuting with the arrow
// maps.
std::vector<std::vector<RMat>> hom_basis(const Representation& m,
                                         const Representation& n);
int hom_dim(const Representation& m, const Representation& n);

// Ext^1 via the Euler form: hom_dim(m, n) - <dim m, dim n>.
int ext_dim(const Representation& m, const Representation& n);

// Ext^1 computed independently from a projective presentation
// 0 -> K -> P0 -> m -> 0 as coker(Hom(P0, n) -> Hom(K, n)). Kept separate
// from ext_dim on purpose; the two must agree.
int ext_oracle(const Representation& m, const Representation& n);

// All multiplicity-free tilting modules (n pairwise Ext-vanishing
// indecomposable summands), enumerated as n-cliques of the compatibility
// graph over the indecomposables in root order; stops after cap results.
std::vector<TiltingModule> tilting_modules(const Quiver& q, int cap = 10000);

// Row i = (dim T_i)^T e; unimodular (checked). Sends the dimension vector
// of X to <summand dims, dim X> coordinates.
Mat ringel_matrix(const TiltingModule& t);

// {g alpha : alpha positive root}, deduplicated, sorted lex.
std::vector<Vec> phi_B_positive(const Mat& g, const RootSystem& rs);

// Componentwise absolute values, deduplicated, sorted lex.
std::vector<Vec> abs_set(const std::vector<Vec>& vs);

// The tuple (x_1, ..., x_n) of positive roots with |g x_i| = e_i; each
// must exist uniquely (checked).
std::vector<Vec> companion_from_ringel(const Mat& g, const RootSystem& rs);

// Quiver of the endomorphism algebra of the tilting module: arrows i -> j
// counted by dim Hom(T_j, T_i) modulo compositions through other summands.
Quiver end_quiver(const TiltingModule& t);

}  // namespace ctk
