#pragma once

// Small finite fields F_{l^m} with table-based arithmetic.  Elements are
// encoded as integers in [0, l^m): the base-l digits are the coefficients of
// the residue polynomial, digit i = coefficient of x^i.

#include <cstdint>
#include <memory>
#include <vector>

#include "serre/error.hpp"

namespace serre {

using gf_elt = std::uint16_t;

class FiniteField {
 public:
  // Uses the shipped modulus for known (l, m) pairs, otherwise the
  // lexicographically smallest monic irreducible of degree m.
  FiniteField(std::int64_t l, int m);
  FiniteField(std::int64_t l, int m, std::vector<std::int64_t> modulus);

  std::int64_t l() const { return l_; }
  int m() const { return m_; }
  std::int64_t q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

  gf_elt add(gf_elt a, gf_elt b) const { return add_[idx(a, b)]; }
  gf_elt sub(gf_elt a, gf_elt b) const { return add_[idx(a, neg_[b])]; }
  gf_elt neg(gf_elt a) const { return neg_[a]; }
  gf_elt mul(gf_elt a, gf_elt b) const { return mul_[idx(a, b)]; }
  gf_elt inv(gf_elt a) const;
  gf_elt pow(gf_elt a, std::int64_t n) const;
  gf_elt frobenius(gf_elt a) const { return pow(a, l_); }

  // element from polynomial coefficients (low degree first), arbitrary length
  gf_elt from_coeffs(const std::vector<std::int64_t>& coeffs) const;
  std::vector<std::int64_t> coeffs(gf_elt a) const;

  // a multiplicative generator of the subfield F_{l^d} (d must divide m);
  // returns 0 only for the subfield F_1 (never happens: q >= 3).
  gf_elt subfield_generator(int d) const;
  gf_elt generator() const { return subfield_generator(m_); }

  std::int64_t element_order(gf_elt a) const;

 private:
  size_t idx(gf_elt a, gf_elt b) const {
    return static_cast<size_t>(a) * q_ + b;
  }
  void build_tables();

  std::int64_t l_ = 0;
  int m_ = 0;
  std::int64_t q_ = 0;
  std::vector<std::int64_t> modulus_;  // monic, length m+1, low degree first
  std::vector<gf_elt> add_, mul_, neg_, inv_;
};

// Monic polynomial of degree m over F_l, low degree first; true iff it has no
// factor of degree in [1, m/2].
bool is_irreducible_poly(std::int64_t l, const std::vector<std::int64_t>& poly);

std::vector<std::int64_t> smallest_irreducible(std::int64_t l, int m);

}  // namespace serre
