#include "serre/chars.hpp"

#include <limits>

namespace serre {

namespace {

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 normalize(i64 x, i64 m) {
  x %= m;
  return x < 0 ? x + m : x;
}

}  // namespace

FieldParams::FieldParams(i64 l_, int f_prime_) : l(l_), f_prime(f_prime_) {
  if (l < 3 || l % 2 == 0 || !is_prime(l))
    fail(ErrorKind::ParamMismatch, "l must be an odd prime >= 3");
  if (f_prime < 1) fail(ErrorKind::ParamMismatch, "f_prime must be >= 1");
  i64 m = 1;
  const i64 bound = i64{1} << 61;  // headroom for sums of a few residues
  for (int i = 0; i < f_prime; ++i) {
    if (m > bound / l) fail(ErrorKind::Overflow, "l^f_prime too large");
    m *= l;
  }
  modulus = m - 1;
}

i64 mulmod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

InertialChar::InertialChar(FieldParams params, i64 canonical_residue)
    : params_(params), canonical_(normalize(canonical_residue, params.modulus)) {}

InertialChar char_from_exponents(const FieldParams& params,
                                 const std::vector<i64>& b) {
  if (static_cast<int>(b.size()) != params.f_prime)
    fail(ErrorKind::LengthMismatch, "exponent vector length != f_prime");
  const i64 m = params.modulus;
  i64 acc = 0;
  i64 p = 1;  // l^{f'-1-i}, built from the last entry backwards
  for (int i = params.f_prime - 1; i >= 0; --i) {
    acc = normalize(acc + mulmod(normalize(b[i], m), p, m), m);
    p = mulmod(p, params.l, m);
  }
  return InertialChar(params, acc);
}

InertialChar trivial_char(const FieldParams& params) {
  return InertialChar(params, 0);
}

InertialChar mul(const InertialChar& a, const InertialChar& b) {
  if (a.params() != b.params())
    fail(ErrorKind::ParamMismatch, "character parameters differ");
  return InertialChar(a.params(), a.canonical() + b.canonical());
}

InertialChar inv(const InertialChar& a) {
  return InertialChar(a.params(), -a.canonical());
}

InertialChar pow(const InertialChar& a, i64 n) {
  const i64 m = a.params().modulus;
  return InertialChar(a.params(), mulmod(a.canonical(), normalize(n, m), m));
}

std::vector<i64> digits(const InertialChar& chi) {
  const auto& p = chi.params();
  std::vector<i64> d(p.f_prime);
  i64 rest = chi.canonical();
  for (int i = p.f_prime - 1; i >= 0; --i) {
    d[i] = rest % p.l;
    rest /= p.l;
  }
  return d;
}

std::vector<i64> digits_alt(const InertialChar& chi) {
  if (chi.is_trivial())
    return std::vector<i64>(chi.params().f_prime, chi.params().l - 1);
  return digits(chi);
}

InertialChar frobenius_twist(const InertialChar& chi) {
  return pow(chi, chi.params().l);
}

InertialChar conjugate_c(const InertialChar& psi) {
  const auto& p = psi.params();
  if (p.f_prime % 2 != 0)
    fail(ErrorKind::OddNiveau, "conjugate_c needs even niveau 2f");
  i64 lf = 1;
  for (int i = 0; i < p.f_prime / 2; ++i) lf *= p.l;
  return pow(psi, lf);
}

InertialChar inflate(const InertialChar& chi) {
  const auto& p = chi.params();
  FieldParams big(p.l, 2 * p.f_prime);
  i64 lf = 1;
  for (int i = 0; i < p.f_prime; ++i) lf *= p.l;
  return InertialChar(big, mulmod(chi.canonical(), lf + 1, big.modulus));
}

CrysCharData::CrysCharData(i64 l_, int f_prime_, i64 e_)
    : l(l_), f_prime(f_prime_), e(e_),
      table(f_prime_, std::vector<i64>(static_cast<size_t>(e_), 0)) {
  if (e < 1) fail(ErrorKind::ParamMismatch, "e must be >= 1");
}

void CrysCharData::check_shape() const {
  if (static_cast<int>(table.size()) != f_prime)
    fail(ErrorKind::LengthMismatch, "Hodge-Tate table has wrong row count");
  for (const auto& row : table)
    if (static_cast<i64>(row.size()) != e)
      fail(ErrorKind::LengthMismatch, "Hodge-Tate table has wrong column count");
}

InertialChar crystalline_reduction(const CrysCharData& data) {
  data.check_shape();
  FieldParams params(data.l, data.f_prime);
  std::vector<i64> b(data.f_prime, 0);
  for (int i = 0; i < data.f_prime; ++i)
    for (i64 x : data.table[i]) b[i] = normalize(b[i] + normalize(x, params.modulus), params.modulus);
  return char_from_exponents(params, b);
}

}  // namespace serre
