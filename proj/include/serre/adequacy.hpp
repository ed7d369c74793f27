#pragma once

// The four adequacy conditions for a finite subgroup H of GL_n over a field of
// characteristic l: no l-power quotient, l does not divide n, prime-to-l-order
// elements span the matrix algebra, and H^1(H, gl_n) = 0.  Ranks and cohomology
// are computed over the entry field; both are invariant under extension of
// scalars, so they agree with the algebraically-closed statements.

#include <cstdint>

#include "serre/matgroup.hpp"

namespace serre {

// Incremental row echelon over a finite field (dense, modest widths).
class RowReducer {
 public:
  RowReducer(const FiniteField& F, int width);
  // Reduces the row in place; returns true when the rank grew.
  bool add_row(std::vector<gf_elt> row);
  int rank() const { return rank_; }

 private:
  const FiniteField& F_;
  int width_;
  int rank_ = 0;
  std::vector<std::vector<gf_elt>> rows_;  // indexed by pivot column
  std::vector<char> has_pivot_;
};

// n^2 x n^2 matrix of X -> g X g^{-1} acting on row-major vectorized matrices.
std::vector<gf_elt> adjoint_action(const FiniteField& F, const Mat& g,
                                   const Mat& ginv);

int span_rank_prime_to_l(const MatGroup& G);
int fixed_subspace_dim(const MatGroup& G);

// dim H^1(G, gl_n) by propagating cocycle values on the generators along the
// Cayley spanning tree and imposing the non-tree edge constraints.
int h1_adjoint(const MatGroup& G);

struct AdequacyReport {
  bool cond1 = false;            // no nontrivial l-power quotient
  std::int64_t ab_l_part = 1;    // l-part of |G^{ab}|
  bool cond2 = false;            // l does not divide n
  bool cond3 = false;            // prime-to-l elements span M_{n x n}
  int span_rank = 0;
  bool cond4 = false;            // H^1(G, gl_n) = 0
  int h1_dim = 0;
  bool adequate = false;
};

AdequacyReport is_adequate(const MatGroup& G, std::int64_t l);

}  // namespace serre
