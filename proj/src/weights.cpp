#include "serre/weights.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace serre {

namespace {

i64 nrm(i64 x, i64 m) {
  x %= m;
  return x < 0 ? x + m : x;
}

constexpr i64 kProductCap = 1'000'000;

}  // namespace

bool SerreWeight::in_positive_cone() const {
  if (static_cast<int>(a.size()) != f) return false;
  for (const auto& [a1, a2] : a)
    if (a1 < a2) return false;
  return true;
}

bool SerreWeight::is_serre_weight() const {
  if (!in_positive_cone()) return false;
  for (const auto& [a1, a2] : a)
    if (a1 - a2 > l - 1) return false;
  return true;
}

void SerreWeight::require_serre_weight() const {
  if (!is_serre_weight())
    fail(ErrorKind::NotASerreWeight,
         "weight is not a Serre weight (need 0 <= a1-a2 <= l-1 per embedding)");
}

bool weights_equivalent(const SerreWeight& a, const SerreWeight& b) {
  if (a.l != b.l || a.f != b.f)
    fail(ErrorKind::ParamMismatch, "weights live over different (l, f)");
  a.require_serre_weight();
  b.require_serre_weight();
  FieldParams params(a.l, a.f);
  std::vector<i64> twist(a.f);
  for (int s = 0; s < a.f; ++s) {
    if (a.a[s].first - a.a[s].second != b.a[s].first - b.a[s].second)
      return false;
    twist[s] = a.a[s].second - b.a[s].second;
  }
  return char_from_exponents(params, twist).is_trivial();
}

WeightClass weight_class(const SerreWeight& a) {
  a.require_serre_weight();
  FieldParams params(a.l, a.f);
  WeightClass c;
  c.d.resize(a.f);
  std::vector<i64> a2(a.f);
  for (int s = 0; s < a.f; ++s) {
    c.d[s] = a.a[s].first - a.a[s].second;
    a2[s] = a.a[s].second;
  }
  c.t = char_from_exponents(params, a2).canonical();
  return c;
}

SerreWeight class_representative(i64 l, int f, const WeightClass& c) {
  FieldParams params(l, f);
  auto a2 = digits(InertialChar(params, c.t));
  SerreWeight w;
  w.l = l;
  w.f = f;
  w.a.resize(f);
  for (int s = 0; s < f; ++s) w.a[s] = {a2[s] + c.d[s], a2[s]};
  return w;
}

std::vector<WeightClass> enumerate_weight_classes(i64 l, int f) {
  FieldParams params(l, f);
  std::vector<WeightClass> out;
  std::vector<i64> d(f, 0);
  for (;;) {
    for (i64 t = 0; t < params.modulus; ++t) out.push_back({d, t});
    int s = f - 1;
    while (s >= 0 && d[s] == l - 1) d[s--] = 0;
    if (s < 0) break;
    ++d[s];
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_regular(const SerreWeight& a) {
  a.require_serre_weight();
  for (const auto& [a1, a2] : a.a)
    if (a1 - a2 > a.l - 3) return false;
  return true;
}

bool is_e_regular(const SerreWeight& a, i64 e) {
  a.require_serre_weight();
  for (const auto& [a1, a2] : a.a)
    if (a1 - a2 > a.l - 1 - e) return false;
  return true;
}

InertialChar det_char(const SerreWeight& a, i64 e) {
  a.require_serre_weight();
  FieldParams params(a.l, a.f);
  const i64 m = params.modulus;
  std::vector<i64> b(a.f);
  for (int s = 0; s < a.f; ++s)
    b[s] = nrm(a.a[s].first, m) + nrm(a.a[s].second, m) + nrm(e, m);
  return char_from_exponents(params, b);
}

std::vector<WeightClass> det_weight_set(const InertialChar& chi, i64 e) {
  const auto& params = chi.params();
  const i64 l = params.l;
  const int f = params.f_prime;
  const i64 m = params.modulus;  // even since l is odd
  const i64 ones = char_from_exponents(params, std::vector<i64>(f, 1)).canonical();
  std::vector<WeightClass> out;
  std::vector<i64> d(f, 0);
  for (;;) {
    i64 c = chi.canonical() - char_from_exponents(params, d).canonical() -
            mulmod(e % m + m, ones, m);
    c = ((c % m) + m) % m;
    if (c % 2 == 0) {
      out.push_back({d, c / 2});
      out.push_back({d, (c / 2 + m / 2) % m});
    }
    int s = f - 1;
    while (s >= 0 && d[s] == l - 1) d[s--] = 0;
    if (s < 0) break;
    ++d[s];
  }
  std::sort(out.begin(), out.end());
  return out;
}

LocalModRep LocalModRep::irreducible(i64 l, int f, i64 e,
                                     const InertialChar& psi) {
  if (e < 1) fail(ErrorKind::ParamMismatch, "e must be >= 1");
  if (f < 1 || f > 15) fail(ErrorKind::ParamMismatch, "f out of range [1, 15]");
  if (psi.params() != FieldParams(l, 2 * f))
    fail(ErrorKind::ParamMismatch, "psi must have niveau 2f");
  if (psi == conjugate_c(psi))
    fail(ErrorKind::ParamMismatch,
         "psi equals its conjugate: the induced representation is reducible");
  LocalModRep r;
  r.shape_ = RepShape::Irreducible;
  r.l_ = l;
  r.f_ = f;
  r.e_ = e;
  r.psi_ = psi;
  return r;
}

LocalModRep LocalModRep::split(i64 l, int f, i64 e, const InertialChar& chi1,
                               const InertialChar& chi2) {
  if (e < 1) fail(ErrorKind::ParamMismatch, "e must be >= 1");
  if (f < 1 || f > 15) fail(ErrorKind::ParamMismatch, "f out of range [1, 15]");
  FieldParams params(l, f);
  if (chi1.params() != params || chi2.params() != params)
    fail(ErrorKind::ParamMismatch, "characters must have niveau f");
  LocalModRep r;
  r.shape_ = RepShape::Split;
  r.l_ = l;
  r.f_ = f;
  r.e_ = e;
  r.chi1_ = chi1;
  r.chi2_ = chi2;
  return r;
}

LocalModRep LocalModRep::non_split(i64 l, int f, i64 e, const InertialChar& sub,
                                   const InertialChar& quotient) {
  LocalModRep r = split(l, f, e, sub, quotient);
  r.shape_ = RepShape::NonSplit;
  return r;
}

const InertialChar& LocalModRep::psi() const {
  if (shape_ != RepShape::Irreducible)
    fail(ErrorKind::ParamMismatch, "psi() requires the irreducible shape");
  return psi_;
}

const InertialChar& LocalModRep::chi1() const {
  if (shape_ == RepShape::Irreducible)
    fail(ErrorKind::ParamMismatch, "chi1() requires a reducible shape");
  return chi1_;
}

const InertialChar& LocalModRep::chi2() const {
  if (shape_ == RepShape::Irreducible)
    fail(ErrorKind::ParamMismatch, "chi2() requires a reducible shape");
  return chi2_;
}

InertialChar LocalModRep::det() const {
  FieldParams params(l_, f_);
  if (shape_ == RepShape::Irreducible) {
    // psi*psi^c is Frobenius-stable, hence descends to niveau f: its
    // canonical residue mod l^f - 1 is the residue of psi itself.
    return InertialChar(params, psi_.canonical() % params.modulus);
  }
  return mul(chi1_, chi2_);
}

std::pair<InertialChar, InertialChar> niveau1_pair(const SerreWeight& a, i64 e,
                                                   const WitnessJD& w) {
  FieldParams params(a.l, a.f);
  const i64 m = params.modulus;
  std::vector<i64> b1(a.f), b2(a.f);
  for (int s = 0; s < a.f; ++s) {
    const auto& [a1, a2] = a.a[s];
    if (w.j_mask >> s & 1) {
      b1[s] = nrm(a1, m) + 1 + nrm(w.delta[s], m);
      b2[s] = nrm(a2, m) + nrm(e - 1 - w.delta[s], m);
    } else {
      b1[s] = nrm(a2, m) + nrm(w.delta[s], m);
      b2[s] = nrm(a1, m) + nrm(e - w.delta[s], m);
    }
  }
  return {char_from_exponents(params, b1), char_from_exponents(params, b2)};
}

InertialChar niveau2_char(const SerreWeight& a, i64 e, const WitnessJD& w) {
  FieldParams params(a.l, 2 * a.f);
  const i64 m = params.modulus;
  std::vector<i64> b(2 * a.f);
  for (int s = 0; s < a.f; ++s) {
    const auto& [a1, a2] = a.a[s];
    const int ext = w.j_mask >> s & 1;
    b[s + a.f * ext] = nrm(a1, m) + 1 + nrm(w.delta[s], m);
    b[s + a.f * (1 - ext)] = nrm(a2, m) + nrm(e - 1 - w.delta[s], m);
  }
  return char_from_exponents(params, b);
}

namespace {

// delta search range: shifting any delta_s by the order of the fundamental
// characters fixes both displayed characters, so min(e, l^{f'} - 1) suffices.
i64 delta_cap(i64 e, i64 l, int f_prime) {
  i64 order = 1;
  for (int i = 0; i < f_prime; ++i) {
    if (order > std::numeric_limits<i64>::max() / l) return e;
    order *= l;
    if (order - 1 >= e) return e;
  }
  return order - 1;
}

template <typename Accept>
std::optional<WitnessJD> search_witness(const SerreWeight& a, i64 e,
                                        int f_prime, Accept&& accept) {
  const i64 cap = delta_cap(e, a.l, f_prime);
  WitnessJD w;
  w.delta.assign(a.f, 0);
  for (std::uint32_t mask = (1u << a.f); mask-- > 0;) {
    w.j_mask = mask;
    std::fill(w.delta.begin(), w.delta.end(), 0);
    for (;;) {
      if (accept(w)) return w;
      int s = a.f - 1;
      while (s >= 0 && w.delta[s] == cap - 1) w.delta[s--] = 0;
      if (s < 0) break;
      ++w.delta[s];
    }
  }
  return std::nullopt;
}

}  // namespace

bool verify_witness(const LocalModRep& rep, const SerreWeight& a,
                    const WitnessJD& w) {
  switch (rep.shape()) {
    case RepShape::Irreducible: {
      InertialChar cand = niveau2_char(a, rep.e(), w);
      return cand == rep.psi() || cand == conjugate_c(rep.psi());
    }
    case RepShape::Split: {
      auto [p1, p2] = niveau1_pair(a, rep.e(), w);
      return (p1 == rep.chi1() && p2 == rep.chi2()) ||
             (p1 == rep.chi2() && p2 == rep.chi1());
    }
    case RepShape::NonSplit: {
      auto [p1, p2] = niveau1_pair(a, rep.e(), w);
      return p1 == rep.chi1() && p2 == rep.chi2();
    }
  }
  return false;
}

std::optional<WitnessJD> find_witness(const LocalModRep& rep,
                                      const SerreWeight& a) {
  if (a.l != rep.l() || a.f != rep.f())
    fail(ErrorKind::ParamMismatch, "weight and representation parameters differ");
  a.require_serre_weight();
  const int f_prime =
      rep.shape() == RepShape::Irreducible ? 2 * rep.f() : rep.f();
  return search_witness(a, rep.e(), f_prime, [&](const WitnessJD& w) {
    return verify_witness(rep, a, w);
  });
}

bool WeightSet::contains(const WeightClass& c) const {
  return std::binary_search(classes.begin(), classes.end(), c);
}

namespace {

WeightSet membership_scan(const LocalModRep& rep, const SetOptions& opt,
                          bool ordered) {
  auto all = enumerate_weight_classes(rep.l(), rep.f());
  std::vector<char> in(all.size(), 0);
  auto worker = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      SerreWeight a = class_representative(rep.l(), rep.f(), all[i]);
      in[i] = find_witness(rep, a).has_value();
    }
  };
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1 || all.size() < 2 * static_cast<size_t>(jobs)) {
    worker(0, all.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (all.size() + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      size_t lo = t * chunk, hi = std::min(all.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  WeightSet out;
  out.superset = ordered;  // only the non-split path sets this
  for (size_t i = 0; i < all.size(); ++i)
    if (in[i]) out.classes.push_back(all[i]);
  return out;
}

}  // namespace

WeightSet schein_set(const LocalModRep& rep, const SetOptions& opt) {
  if (!rep.semisimple())
    fail(ErrorKind::NonSemisimpleInput,
         "schein_set needs a semisimple shape; use ghs_inertial_set");
  return membership_scan(rep, opt, /*ordered=*/false);
}

WeightSet ghs_inertial_set(const LocalModRep& rep, const SetOptions& opt) {
  if (rep.shape() != RepShape::NonSplit)
    fail(ErrorKind::ParamMismatch, "ghs_inertial_set needs the non-split shape");
  return membership_scan(rep, opt, /*ordered=*/true);
}

WeightSet bdj_set(const LocalModRep& rep, const SetOptions& opt) {
  if (rep.e() != 1)
    fail(ErrorKind::RamifiedField, "bdj_set is defined for e = 1 only");
  if (rep.semisimple()) return schein_set(rep, opt);
  return ghs_inertial_set(rep, opt);
}

WeightSet explicit_set(const LocalModRep& rep, const SetOptions& opt) {
  if (rep.semisimple()) return schein_set(rep, opt);
  return ghs_inertial_set(rep, opt);
}

WitnessJD solve_niveau1_big_e(const InertialChar& chi1, const InertialChar& chi2,
                              const SerreWeight& a, i64 e) {
  a.require_serre_weight();
  FieldParams params(a.l, a.f);
  if (chi1.params() != params || chi2.params() != params)
    fail(ErrorKind::ParamMismatch, "characters must have niveau f");
  if (e < a.l)
    fail(ErrorKind::PreconditionViolated, "solve_niveau1_big_e needs e >= l");
  if (mul(chi1, chi2) != det_char(a, e))
    fail(ErrorKind::PreconditionViolated, "determinant condition fails");
  std::vector<i64> top(a.f);
  for (int s = 0; s < a.f; ++s) top[s] = a.a[s].first + 1;
  WitnessJD w;
  w.j_mask = (1u << a.f) - 1;
  w.delta = digits(mul(chi1, inv(char_from_exponents(params, top))));
  auto [p1, p2] = niveau1_pair(a, e, w);
  if (p1 != chi1 || p2 != chi2)
    fail(ErrorKind::PreconditionViolated, "witness verification failed");
  return w;
}

WitnessJD solve_niveau2_big_e(const InertialChar& psi, const SerreWeight& a,
                              i64 e) {
  a.require_serre_weight();
  const int f = a.f;
  FieldParams params2(a.l, 2 * f);
  if (psi.params() != params2)
    fail(ErrorKind::ParamMismatch, "psi must have niveau 2f");
  if (e < a.l)
    fail(ErrorKind::PreconditionViolated, "solve_niveau2_big_e needs e >= l");
  if (mul(psi, conjugate_c(psi)) != inflate(det_char(a, e)))
    fail(ErrorKind::PreconditionViolated, "determinant condition fails");

  // phi' = psi * prod_{i=1..f} w_i^{-a_{i,1}-1} * prod_{i=f+1..2f} w_i^{-a_{i,2}-e+l}
  // (k'-indices mod 2f, weight indices mod f).
  const i64 m = params2.modulus;
  std::vector<i64> c(2 * f, 0);
  for (int i = 1; i <= f; ++i) c[i % (2 * f)] -= nrm(a.a[i % f].first, m) + 1;
  for (int i = f + 1; i <= 2 * f; ++i)
    c[i % (2 * f)] -= nrm(a.a[i % f].second, m) + nrm(e - a.l, m);
  const InertialChar phi_p = mul(psi, char_from_exponents(params2, c));

  WitnessJD w;
  w.delta.assign(f, 0);
  if (!phi_p.is_trivial()) {
    auto eta = digits(phi_p);
    for (int i = 1; i <= f; ++i) w.delta[i % f] = eta[i % (2 * f)];
    w.j_mask = 1;  // sigma_0 pairs with k'-index f; the rest with k'-index i
  } else {
    // phi' = 1: shift by the cross-term at sigma_0 to force a unique expansion.
    const i64 diff = a.a[0].first + 1 - a.a[0].second;  // in [1, l]
    std::vector<i64> cc(2 * f, 0);
    cc[0] = -diff;
    cc[f] = diff;
    const InertialChar phi_pp = char_from_exponents(params2, cc);
    auto eta = digits(phi_pp);
    for (int i = 1; i < f; ++i) w.delta[i] = eta[i];
    w.delta[0] = e - 1 - eta[f];
    w.j_mask = 0;  // every sigma_i pairs with k'-index i
  }
  if (niveau2_char(a, e, w) != psi)
    fail(ErrorKind::PreconditionViolated, "witness verification failed");
  return w;
}

i64 lift_count(const SerreWeight& a, i64 e) {
  a.require_serre_weight();
  i64 r = 1;
  for (int s = 0; s < a.f; ++s) {
    if (r > std::numeric_limits<i64>::max() / e)
      fail(ErrorKind::Overflow, "e^f does not fit in 64 bits");
    r *= e;
  }
  return r;
}

HodgeTypeLift lift_at(const SerreWeight& a, i64 e, i64 index) {
  a.require_serre_weight();
  if (index < 0 || index >= lift_count(a, e))
    fail(ErrorKind::ParamMismatch, "lift index out of range");
  HodgeTypeLift lift;
  lift.weight = a;
  lift.slot.resize(a.f);
  for (int s = a.f - 1; s >= 0; --s) {
    lift.slot[s] = index % e;
    index /= e;
  }
  return lift;
}

std::vector<HodgeTypeLift> lifts_of(const SerreWeight& a, i64 e) {
  i64 n = lift_count(a, e);
  if (n > kProductCap) fail(ErrorKind::CapExceeded, "too many lifts to list");
  std::vector<HodgeTypeLift> out;
  out.reserve(static_cast<size_t>(n));
  for (i64 i = 0; i < n; ++i) out.push_back(lift_at(a, e, i));
  return out;
}

namespace {

void check_lift(const SerreWeight& a, const HodgeTypeLift& lift, i64 e) {
  if (!(lift.weight == a) ||
      static_cast<int>(lift.slot.size()) != a.f)
    fail(ErrorKind::NotALift, "lift does not lift the given weight");
  for (i64 s : lift.slot)
    if (s < 0 || s >= e) fail(ErrorKind::NotALift, "lift slot out of range");
}

void check_witness_shape(const SerreWeight& a, const WitnessJD& w, i64 e) {
  if (static_cast<int>(w.delta.size()) != a.f || w.j_mask >= (1u << a.f))
    fail(ErrorKind::InvalidWitness, "witness shape does not match the weight");
  for (i64 d : w.delta)
    if (d < 0 || d > e - 1) fail(ErrorKind::InvalidWitness, "delta out of range");
}

}  // namespace

std::pair<CrysCharData, CrysCharData> ht_data_niveau1(const SerreWeight& a,
                                                      const WitnessJD& w,
                                                      const HodgeTypeLift& lift,
                                                      i64 e) {
  a.require_serre_weight();
  check_witness_shape(a, w, e);
  check_lift(a, lift, e);
  CrysCharData B(a.l, a.f, e), C(a.l, a.f, e);
  for (int s = 0; s < a.f; ++s) {
    const auto& [a1, a2] = a.a[s];
    const bool in_j = w.j_mask >> s & 1;
    // K_sigma holds delta_sigma slots on the J side and e-1-delta_sigma on the
    // other side: the displayed pair uses the reflected parameter off J.
    const i64 k_size = in_j ? w.delta[s] : e - 1 - w.delta[s];
    const i64 dist = lift.slot[s];
    i64 placed = 0;
    for (i64 j = 0; j < e; ++j) {
      if (j == dist) {
        B.table[s][j] = in_j ? a1 + 1 : a2;
        C.table[s][j] = in_j ? a2 : a1 + 1;
      } else if (placed < k_size) {
        ++placed;
        B.table[s][j] = in_j ? 1 : 0;
        C.table[s][j] = in_j ? 0 : 1;
      } else {
        B.table[s][j] = in_j ? 0 : 1;
        C.table[s][j] = in_j ? 1 : 0;
      }
    }
  }
  return {B, C};
}

CrysCharData ht_data_niveau2(const SerreWeight& a, const WitnessJD& w,
                             const HodgeTypeLift& lift, i64 e) {
  a.require_serre_weight();
  check_witness_shape(a, w, e);
  check_lift(a, lift, e);
  CrysCharData B(a.l, 2 * a.f, e);
  for (int s = 0; s < a.f; ++s) {
    const auto& [a1, a2] = a.a[s];
    const int jrow = s + a.f * (w.j_mask >> s & 1);
    const int crow = s + a.f * (1 - (w.j_mask >> s & 1));
    const i64 dist = lift.slot[s];
    i64 placed = 0;
    for (i64 j = 0; j < e; ++j) {
      if (j == dist) {
        B.table[jrow][j] = a1 + 1;
        B.table[crow][j] = a2;
      } else if (placed < w.delta[s]) {
        ++placed;
        B.table[jrow][j] = 1;
        B.table[crow][j] = 0;
      } else {
        B.table[jrow][j] = 0;
        B.table[crow][j] = 1;
      }
    }
  }
  return B;
}

GlobalWeightSet global_weight_set(const std::vector<WeightSet>& locals) {
  GlobalWeightSet out;
  out.superset = false;
  i64 total = 1;
  for (const auto& ws : locals) {
    out.superset = out.superset || ws.superset;
    total *= static_cast<i64>(ws.classes.size());
    if (total > kProductCap)
      fail(ErrorKind::CapExceeded, "global product too large to list");
    if (total == 0) break;
  }
  if (locals.empty()) {
    out.tuples.push_back({});
    return out;
  }
  if (total == 0) return out;
  std::vector<size_t> idx(locals.size(), 0);
  for (;;) {
    std::vector<WeightClass> tuple;
    tuple.reserve(locals.size());
    for (size_t i = 0; i < locals.size(); ++i)
      tuple.push_back(locals[i].classes[idx[i]]);
    out.tuples.push_back(std::move(tuple));
    int i = static_cast<int>(locals.size()) - 1;
    while (i >= 0 && ++idx[i] == locals[i].classes.size()) idx[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace serre
