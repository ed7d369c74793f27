#include "serre/gf.hpp"

#include <algorithm>

namespace serre {

namespace {

bool small_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// shipped deterministic moduli (lexicographically smallest monic irreducible)
const std::vector<std::int64_t>* fixed_modulus(std::int64_t l, int m) {
  static const struct {
    std::int64_t l;
    int m;
    std::vector<std::int64_t> poly;
  } table[] = {
      {3, 2, {1, 0, 1}},        // x^2 + 1
      {3, 3, {1, 0, 2, 1}},     // x^3 + 2x^2 + 1
      {3, 4, {1, 0, 1, 1, 1}},  // x^4 + x^3 + x^2 + 1
      {5, 2, {1, 1, 1}},        // x^2 + x + 1
      {5, 3, {1, 0, 1, 1}},     // x^3 + x^2 + 1
      {7, 2, {1, 0, 1}},        // x^2 + 1
  };
  for (const auto& row : table)
    if (row.l == l && row.m == m) return &row.poly;
  return nullptr;
}

std::vector<std::int64_t> poly_mod(std::vector<std::int64_t> num,
                                   const std::vector<std::int64_t>& den,
                                   std::int64_t l) {
  const int dd = static_cast<int>(den.size()) - 1;
  // den is monic
  for (int d = static_cast<int>(num.size()) - 1; d >= dd; --d) {
    std::int64_t c = num[d] % l;
    if (c)
      for (int i = 0; i <= dd; ++i)
        num[d - dd + i] = ((num[d - dd + i] - c * den[i]) % l + l) % l;
  }
  num.resize(dd);
  for (auto& x : num) x = ((x % l) + l) % l;
  return num;
}

}  // namespace

bool is_irreducible_poly(std::int64_t l, const std::vector<std::int64_t>& poly) {
  const int m = static_cast<int>(poly.size()) - 1;
  if (m < 1 || poly[m] != 1) return false;
  std::vector<std::int64_t> den(poly.size());
  for (int deg = 1; deg <= m / 2; ++deg) {
    std::vector<std::int64_t> trial(deg + 1, 0);
    trial[deg] = 1;
    for (;;) {
      auto r = poly_mod(poly, trial, l);
      if (std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; }))
        return false;
      int i = 0;
      while (i < deg && trial[i] == l - 1) trial[i++] = 0;
      if (i == deg) break;
      ++trial[i];
    }
  }
  return true;
}

std::vector<std::int64_t> smallest_irreducible(std::int64_t l, int m) {
  if (m == 1) return {0, 1};
  std::vector<std::int64_t> poly(m + 1, 0);
  poly[m] = 1;
  for (;;) {
    if (is_irreducible_poly(l, poly)) return poly;
    int i = 0;
    while (i < m && poly[i] == l - 1) poly[i++] = 0;
    if (i == m) fail(ErrorKind::UnsupportedSpec, "no irreducible found");
    ++poly[i];
  }
}

FiniteField::FiniteField(std::int64_t l, int m)
    : FiniteField(l, m,
                  fixed_modulus(l, m) ? *fixed_modulus(l, m)
                                      : smallest_irreducible(l, m)) {}

FiniteField::FiniteField(std::int64_t l, int m, std::vector<std::int64_t> modulus)
    : l_(l), m_(m), modulus_(std::move(modulus)) {
  if (!small_prime(l)) fail(ErrorKind::ParamMismatch, "l must be prime");
  if (m < 1) fail(ErrorKind::ParamMismatch, "m must be >= 1");
  q_ = 1;
  for (int i = 0; i < m; ++i) {
    q_ *= l;
    if (q_ > 4096) fail(ErrorKind::CapExceeded, "field too large for tables");
  }
  if (static_cast<int>(modulus_.size()) != m + 1 || modulus_[m] != 1)
    fail(ErrorKind::ParamMismatch, "modulus must be monic of degree m");
  if (!is_irreducible_poly(l, modulus_))
    fail(ErrorKind::ParamMismatch, "modulus is not irreducible");
  build_tables();
}

void FiniteField::build_tables() {
  const size_t q = static_cast<size_t>(q_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  auto dig = [&](std::int64_t a) {
    std::vector<std::int64_t> d(m_);
    for (int i = 0; i < m_; ++i) {
      d[i] = a % l_;
      a /= l_;
    }
    return d;
  };
  auto enc = [&](const std::vector<std::int64_t>& d) {
    std::int64_t a = 0;
    for (int i = m_ - 1; i >= 0; --i) a = a * l_ + ((d[i] % l_) + l_) % l_;
    return static_cast<gf_elt>(a);
  };
  for (std::int64_t a = 0; a < q_; ++a) {
    auto da = dig(a);
    std::vector<std::int64_t> nd(m_);
    for (int i = 0; i < m_; ++i) nd[i] = (l_ - da[i]) % l_;
    neg_[a] = enc(nd);
    for (std::int64_t b = 0; b < q_; ++b) {
      auto db = dig(b);
      std::vector<std::int64_t> sum(m_);
      for (int i = 0; i < m_; ++i) sum[i] = da[i] + db[i];
      add_[idx(static_cast<gf_elt>(a), static_cast<gf_elt>(b))] = enc(sum);
      std::vector<std::int64_t> prod(2 * m_, 0);
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) prod[i + j] += da[i] * db[j];
      auto r = poly_mod(std::move(prod), modulus_, l_);
      r.resize(m_);
      mul_[idx(static_cast<gf_elt>(a), static_cast<gf_elt>(b))] = enc(r);
    }
  }
  for (std::int64_t a = 1; a < q_; ++a) {
    if (inv_[a]) continue;
    for (std::int64_t b = 1; b < q_; ++b)
      if (mul_[idx(static_cast<gf_elt>(a), static_cast<gf_elt>(b))] == 1) {
        inv_[a] = static_cast<gf_elt>(b);
        inv_[b] = static_cast<gf_elt>(a);
        break;
      }
  }
}

gf_elt FiniteField::inv(gf_elt a) const {
  if (a == 0) fail(ErrorKind::ParamMismatch, "division by zero");
  return inv_[a];
}

gf_elt FiniteField::pow(gf_elt a, std::int64_t n) const {
  if (n < 0) {
    a = inv(a);
    n = -n;
  }
  gf_elt r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

gf_elt FiniteField::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  std::vector<std::int64_t> c = coeffs;
  for (auto& x : c) x = ((x % l_) + l_) % l_;
  auto r = poly_mod(std::move(c), modulus_, l_);
  r.resize(m_);
  std::int64_t a = 0;
  for (int i = m_ - 1; i >= 0; --i) a = a * l_ + r[i];
  return static_cast<gf_elt>(a);
}

std::vector<std::int64_t> FiniteField::coeffs(gf_elt a) const {
  std::vector<std::int64_t> d(m_);
  std::int64_t x = a;
  for (int i = 0; i < m_; ++i) {
    d[i] = x % l_;
    x /= l_;
  }
  return d;
}

std::int64_t FiniteField::element_order(gf_elt a) const {
  if (a == 0) fail(ErrorKind::ParamMismatch, "zero has no multiplicative order");
  std::int64_t o = 1;
  gf_elt x = a;
  while (x != 1) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

gf_elt FiniteField::subfield_generator(int d) const {
  if (d < 1 || m_ % d != 0)
    fail(ErrorKind::ParamMismatch, "subfield degree must divide m");
  std::int64_t sub_q = 1;
  for (int i = 0; i < d; ++i) sub_q *= l_;
  for (std::int64_t a = 1; a < q_; ++a) {
    gf_elt x = static_cast<gf_elt>(a);
    if (pow(x, sub_q) != x) continue;  // not in the subfield
    if (element_order(x) == sub_q - 1) return x;
  }
  fail(ErrorKind::UnsupportedSpec, "no subfield generator found");
}

}  // namespace serre
