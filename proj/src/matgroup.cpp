#include "serre/matgroup.hpp"

#include <algorithm>
#include <cctype>

namespace serre {

Mat mat_identity(int n) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const FiniteField& F, const Mat& a, const Mat& b) {
  Mat c;
  c.n = a.n;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      gf_elt s = 0;
      for (int k = 0; k < a.n; ++k)
        s = F.add(s, F.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = s;
    }
  return c;
}

Mat mat_scalar(int n, gf_elt c) {
  Mat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = c;
  return m;
}

namespace {

// Gauss-Jordan on [a | I]; returns false when a is singular.
bool invert(const FiniteField& F, const Mat& a, Mat& out) {
  const int n = a.n;
  gf_elt aug[kMaxMatDim][2 * kMaxMatDim] = {};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = a.at(i, j);
    aug[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (aug[i][c]) {
        p = i;
        break;
      }
    if (p < 0) return false;
    if (p != c)
      for (int j = 0; j < 2 * n; ++j) std::swap(aug[p][j], aug[c][j]);
    const gf_elt iv = F.inv(aug[c][c]);
    for (int j = 0; j < 2 * n; ++j) aug[c][j] = F.mul(iv, aug[c][j]);
    for (int i = 0; i < n; ++i) {
      if (i == c || !aug[i][c]) continue;
      const gf_elt coef = aug[i][c];
      for (int j = 0; j < 2 * n; ++j)
        aug[i][j] = F.sub(aug[i][j], F.mul(coef, aug[c][j]));
    }
  }
  out.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = aug[i][n + j];
  return true;
}

}  // namespace

Mat mat_inverse(const FiniteField& F, const Mat& a) {
  Mat out;
  if (!invert(F, a, out))
    fail(ErrorKind::SingularGenerator, "matrix is singular");
  return out;
}

bool mat_invertible(const FiniteField& F, const Mat& a) {
  Mat out;
  return invert(F, a, out);
}

Mat mat_kronecker(const FiniteField& F, const Mat& a, const Mat& b) {
  Mat c;
  c.n = a.n * b.n;
  if (c.n > kMaxMatDim)
    fail(ErrorKind::CapExceeded, "tensor dimension exceeds the matrix budget");
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      for (int k = 0; k < b.n; ++k)
        for (int t = 0; t < b.n; ++t)
          c.at(i * b.n + k, j * b.n + t) = F.mul(a.at(i, j), b.at(k, t));
  return c;
}

MatGroup::MatGroup(std::shared_ptr<const FiniteField> field, int n,
                   std::vector<Mat> generators, std::int64_t cap)
    : field_(std::move(field)), n_(n), generators_(std::move(generators)),
      cap_(cap) {
  if (n < 1 || n > kMaxMatDim)
    fail(ErrorKind::ParamMismatch, "matrix size out of range");
  if (cap_ < 1) fail(ErrorKind::ParamMismatch, "cap must be >= 1");
  for (const auto& g : generators_) {
    if (g.n != n) fail(ErrorKind::ParamMismatch, "generator size mismatch");
    if (!mat_invertible(*field_, g))
      fail(ErrorKind::SingularGenerator, "generator is singular");
  }
  elements_.push_back(mat_identity(n));
  index_[elements_[0]] = 0;
  parent_.push_back(-1);
  parent_gen_.push_back(-1);
  for (size_t v = 0; v < elements_.size(); ++v) {
    for (size_t i = 0; i < generators_.size(); ++i) {
      Mat w = mat_mul(*field_, elements_[v], generators_[i]);
      auto it = index_.find(w);
      std::int64_t j;
      if (it == index_.end()) {
        j = static_cast<std::int64_t>(elements_.size());
        if (j >= cap_)
          fail(ErrorKind::CapExceeded,
               "group closure exceeds cap of " + std::to_string(cap_));
        index_[w] = j;
        elements_.push_back(w);
        parent_.push_back(static_cast<std::int64_t>(v));
        parent_gen_.push_back(static_cast<int>(i));
      } else {
        j = it->second;
      }
      edges_.push_back(j);
    }
  }
}

std::int64_t MatGroup::index_of(const Mat& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::int64_t element_order(const FiniteField& F, const Mat& g) {
  if (!mat_invertible(F, g))
    fail(ErrorKind::SingularGenerator, "element is singular");
  const Mat id = mat_identity(g.n);
  Mat x = g;
  std::int64_t o = 1;
  while (!(x == id)) {
    x = mat_mul(F, x, g);
    ++o;
  }
  return o;
}

std::vector<Mat> prime_to_l_elements(const MatGroup& G) {
  std::vector<Mat> out;
  for (const auto& g : G.elements())
    if (element_order(G.field(), g) % G.field().l() != 0) out.push_back(g);
  return out;
}

MatGroup derived_subgroup(const MatGroup& G) {
  const auto& F = G.field();
  const Mat id = mat_identity(G.n());
  std::vector<Mat> seeds;
  for (const auto& a : G.generators())
    for (const auto& b : G.generators()) {
      Mat c = mat_mul(F, mat_mul(F, a, b),
                      mat_mul(F, mat_inverse(F, a), mat_inverse(F, b)));
      if (!(c == id)) seeds.push_back(c);
    }
  // normal closure: alternate subgroup closure with conjugation by generators
  for (;;) {
    MatGroup N(G.field_ptr(), G.n(), seeds, G.cap());
    bool grew = false;
    for (const auto& g : G.generators()) {
      const Mat gi = mat_inverse(F, g);
      for (const auto& x : N.elements()) {
        Mat c = mat_mul(F, mat_mul(F, gi, x), g);
        if (!N.contains(c)) {
          seeds.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) return N;
  }
}

std::int64_t abelianization_l_part(const MatGroup& G, std::int64_t l) {
  const std::int64_t ab = G.size() / derived_subgroup(G).size();
  std::int64_t part = 1, rest = ab;
  while (rest % l == 0) {
    part *= l;
    rest /= l;
  }
  return part;
}

MatGroup scalar_saturate(const MatGroup& G, int subfield_degree) {
  const auto& F = G.field();
  std::vector<Mat> gens = G.generators();
  gens.push_back(mat_scalar(G.n(), F.subfield_generator(subfield_degree)));
  return MatGroup(G.field_ptr(), G.n(), gens, G.cap());
}

MatGroup tensor_image(const MatGroup& G1, const MatGroup& G2) {
  if (G1.field().q() != G2.field().q() || G1.field().l() != G2.field().l())
    fail(ErrorKind::ParamMismatch, "tensor factors over different fields");
  if (G1.generators().size() != G2.generators().size())
    fail(ErrorKind::ParamMismatch, "tensor factors need paired generators");
  std::vector<Mat> gens;
  for (size_t i = 0; i < G1.generators().size(); ++i)
    gens.push_back(
        mat_kronecker(G1.field(), G1.generators()[i], G2.generators()[i]));
  return MatGroup(G1.field_ptr(), G1.n() * G2.n(), gens,
                  std::max(G1.cap(), G2.cap()));
}

namespace {

std::pair<std::int64_t, int> factor_prime_power(std::int64_t q) {
  for (std::int64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    int m = 0;
    std::int64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++m;
    }
    if (r != 1)
      fail(ErrorKind::UnsupportedSpec, "field size is not a prime power");
    return {p, m};
  }
  return {q, 1};  // q itself prime
}

Mat mat2(const FiniteField& F, std::int64_t a, std::int64_t b, std::int64_t c,
         std::int64_t d) {
  Mat m;
  m.n = 2;
  m.v[0] = F.from_coeffs({a});
  m.v[1] = F.from_coeffs({b});
  m.v[2] = F.from_coeffs({c});
  m.v[3] = F.from_coeffs({d});
  return m;
}

std::vector<Mat> sl2_generators(const FiniteField& F) {
  std::vector<Mat> gens = {mat2(F, 1, 1, 0, 1), mat2(F, 1, 0, 1, 1)};
  if (F.m() > 1) {
    const gf_elt g = F.generator();
    Mat u = mat2(F, 1, 0, 0, 1);
    u.v[1] = g;
    Mat v = mat2(F, 1, 0, 0, 1);
    v.v[2] = g;
    gens.push_back(u);
    gens.push_back(v);
  }
  return gens;
}

}  // namespace

MatGroup standard_group(const std::string& spec, std::int64_t cap) {
  auto open = spec.find('(');
  auto close = spec.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    fail(ErrorKind::UnsupportedSpec, "bad group spec: " + spec);
  const std::string name = spec.substr(0, open);
  std::vector<std::int64_t> args;
  std::string inside = spec.substr(open + 1, close - open - 1);
  size_t pos = 0;
  while (pos < inside.size()) {
    size_t comma = inside.find(',', pos);
    if (comma == std::string::npos) comma = inside.size();
    args.push_back(std::stoll(inside.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (args.empty()) fail(ErrorKind::UnsupportedSpec, "bad group spec: " + spec);
  auto [l, m] = factor_prime_power(args[0]);
  auto F = std::make_shared<const FiniteField>(l, m);

  if (name == "SL2") {
    return MatGroup(F, 2, sl2_generators(*F), cap);
  }
  if (name == "GL2") {
    auto gens = sl2_generators(*F);
    Mat d = mat_identity(2);
    d.v[0] = F->generator();
    gens.push_back(d);
    return MatGroup(F, 2, gens, cap);
  }
  if (name == "DIHEDRAL") {
    if (args.size() != 2)
      fail(ErrorKind::UnsupportedSpec, "DIHEDRAL needs (q, order)");
    const std::int64_t order = args[1];
    if (order % 2 != 0 || order < 6)
      fail(ErrorKind::UnsupportedSpec, "dihedral order must be even and >= 6");
    const std::int64_t rot = order / 2;
    if ((F->q() - 1) % rot != 0)
      fail(ErrorKind::UnsupportedSpec, "rotation order must divide q - 1");
    const gf_elt zeta = F->pow(F->generator(), (F->q() - 1) / rot);
    Mat r = mat_identity(2);
    r.v[0] = zeta;
    r.v[3] = F->inv(zeta);
    Mat s = mat2(*F, 0, 1, 1, 0);
    return MatGroup(F, 2, {r, s}, cap);
  }
  if (name == "BINARY_ICOSAHEDRAL") {
    if (args[0] != 9)
      fail(ErrorKind::UnsupportedSpec,
           "the binary icosahedral model is shipped over F_9 only");
    // Unit-quaternion model over F_9 = F_3[i], i^2 = -1: the two generators
    // (-1+i+j+k)/2 and (phi + phi^{-1} i + j)/2 with phi = 2+2i (= (1+sqrt5)/2,
    // sqrt5 = i since 5 = -1 mod 3), mapped via a+bi+cj+dk ->
    // [[a+bi, c+di], [-c+di, a-bi]].
    Mat g1, g2;
    g1.n = g2.n = 2;
    auto cf = [&](std::int64_t c0, std::int64_t c1) {
      return F->from_coeffs({c0, c1});
    };
    g1.v = {cf(1, 2), cf(2, 2), cf(1, 2), cf(1, 1),
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    g2.v = {cf(0, 0), cf(2, 0), cf(1, 0), cf(2, 2),
            0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    return MatGroup(F, 2, {g1, g2}, cap);
  }
  if (name == "SCALARS") {
    return MatGroup(F, 2, {mat_scalar(2, F->generator())}, cap);
  }
  fail(ErrorKind::UnsupportedSpec, "unknown group spec: " + name);
}

}  // namespace serre
