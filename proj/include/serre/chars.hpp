#pragma once

// Exact arithmetic for characters of tame inertia written as products of the
// fundamental characters w_0, ..., w_{f'-1} of niveau f'.
//
// Labelling convention (fixed once and for all): w_i = w_{i+1}^l with indices
// mod f', equivalently w_i = w_{f'-1}^{l^{f'-1-i}}.  A product prod_i w_i^{b_i}
// is therefore determined by the single residue
//     canonical(b) = sum_i b_i * l^{f'-1-i}   (mod M),  M = l^{f'} - 1,
// i.e. the exponent vector read as a big-endian base-l integer.  Two characters
// with the same parameters are equal iff their canonical residues agree.

#include <cstdint>
#include <vector>

#include "serre/error.hpp"

namespace serre {

using i64 = std::int64_t;

// Residue field level: l odd prime, f_prime embeddings, modulus M = l^f' - 1.
struct FieldParams {
  i64 l = 0;
  int f_prime = 0;
  i64 modulus = 0;  // l^f_prime - 1

  FieldParams() = default;
  FieldParams(i64 l, int f_prime);

  bool operator==(const FieldParams&) const = default;
};

// a * b mod m without overflow (m < 2^62).
i64 mulmod(i64 a, i64 b, i64 m);

class InertialChar {
 public:
  InertialChar() = default;
  InertialChar(FieldParams params, i64 canonical_residue);

  const FieldParams& params() const { return params_; }
  i64 canonical() const { return canonical_; }
  bool is_trivial() const { return canonical_ == 0; }

  bool operator==(const InertialChar&) const = default;

 private:
  FieldParams params_;
  i64 canonical_ = 0;
};

// prod_i w_i^{b_i}; b may contain arbitrary integers, |b| must equal f_prime.
InertialChar char_from_exponents(const FieldParams& params,
                                 const std::vector<i64>& b);

InertialChar trivial_char(const FieldParams& params);

InertialChar mul(const InertialChar& a, const InertialChar& b);
InertialChar inv(const InertialChar& a);
InertialChar pow(const InertialChar& a, i64 n);

// Base-l digit vector d in [0,l-1]^{f'} with char_from_exponents(d) == chi.
// The trivial character yields all zeros; digits_alt yields the all-(l-1)
// representative instead (the expansion is unique except for that one case).
std::vector<i64> digits(const InertialChar& chi);
std::vector<i64> digits_alt(const InertialChar& chi);

// chi -> chi^l (cyclic shift of the exponent vector).
InertialChar frobenius_twist(const InertialChar& chi);

// psi -> psi^{l^f} at niveau 2f; an involution.  Throws OddNiveau if f' is odd.
InertialChar conjugate_c(const InertialChar& psi);

// View a niveau-f character on the inertia group of the quadratic unramified
// extension: each w_sigma becomes the product of the two niveau-2f fundamental
// characters above sigma, so canonically E -> E * (l^f + 1) mod l^{2f} - 1.
InertialChar inflate(const InertialChar& chi);

// Hodge-Tate multiset {a_tau} of a crystalline character: one integer per
// embedding tau = (sigma_i, slot j), j in [0, e-1].
struct CrysCharData {
  i64 l = 0;
  int f_prime = 0;
  i64 e = 0;
  std::vector<std::vector<i64>> table;  // f_prime rows, e columns

  CrysCharData() = default;
  CrysCharData(i64 l, int f_prime, i64 e);
  void check_shape() const;
};

// Reduction mod l of any crystalline character with the given Hodge-Tate
// data: prod_sigma w_sigma^{b_sigma} with b_sigma = sum_j table[sigma][j].
InertialChar crystalline_reduction(const CrysCharData& data);

}  // namespace serre
