#pragma once

// Finite matrix groups over small finite fields: breadth-first closure from
// generators with a Cayley spanning tree, element orders, derived subgroups,
// scalar saturation, tensor images, and the named standard groups.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "serre/gf.hpp"

namespace serre {

constexpr int kMaxMatDim = 4;
constexpr std::int64_t kDefaultGroupCap = 20000;

// Dense n x n matrix, n <= 4, entries in a FiniteField.
struct Mat {
  int n = 0;
  std::array<gf_elt, kMaxMatDim * kMaxMatDim> v{};

  gf_elt at(int i, int j) const { return v[i * n + j]; }
  gf_elt& at(int i, int j) { return v[i * n + j]; }

  bool operator==(const Mat&) const = default;
};

struct MatHash {
  size_t operator()(const Mat& m) const {
    size_t h = static_cast<size_t>(m.n);
    for (int i = 0; i < m.n * m.n; ++i) h = h * 1000003u + m.v[i];
    return h;
  }
};

Mat mat_identity(int n);
Mat mat_mul(const FiniteField& F, const Mat& a, const Mat& b);
// Inverse by Gauss-Jordan; throws SingularGenerator when singular.
Mat mat_inverse(const FiniteField& F, const Mat& a);
bool mat_invertible(const FiniteField& F, const Mat& a);
Mat mat_scalar(int n, gf_elt c);
// Kronecker product, row-major block convention.
Mat mat_kronecker(const FiniteField& F, const Mat& a, const Mat& b);

class MatGroup {
 public:
  // BFS closure under right multiplication by the generators.
  MatGroup(std::shared_ptr<const FiniteField> field, int n,
           std::vector<Mat> generators, std::int64_t cap = kDefaultGroupCap);

  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  int n() const { return n_; }
  std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::vector<Mat>& elements() const { return elements_; }
  const std::vector<Mat>& generators() const { return generators_; }
  std::int64_t cap() const { return cap_; }

  // index of the product elements_[v] * generators_[i]
  std::int64_t edge(std::int64_t v, int i) const {
    return edges_[static_cast<size_t>(v) * generators_.size() + i];
  }
  // spanning-tree parent: elements_[v] = elements_[parent(v)] * gen(parent_gen(v))
  std::int64_t parent(std::int64_t v) const { return parent_[v]; }
  int parent_gen(std::int64_t v) const { return parent_gen_[v]; }

  std::int64_t index_of(const Mat& m) const;  // -1 if absent
  bool contains(const Mat& m) const { return index_of(m) >= 0; }

 private:
  std::shared_ptr<const FiniteField> field_;
  int n_;
  std::vector<Mat> generators_;
  std::int64_t cap_;
  std::vector<Mat> elements_;
  std::unordered_map<Mat, std::int64_t, MatHash> index_;
  std::vector<std::int64_t> edges_, parent_;
  std::vector<int> parent_gen_;
};

std::int64_t element_order(const FiniteField& F, const Mat& g);
std::vector<Mat> prime_to_l_elements(const MatGroup& G);

MatGroup derived_subgroup(const MatGroup& G);
// l-part of |G / [G,G]|.
std::int64_t abelianization_l_part(const MatGroup& G, std::int64_t l);

// Closure of G together with the nonzero scalars of the subfield F_{l^d}.
MatGroup scalar_saturate(const MatGroup& G, int subfield_degree);

// Closure of {g1_i (x) g2_i} over paired generator lists (same field).
MatGroup tensor_image(const MatGroup& G1, const MatGroup& G2);

// Named groups: "SL2(q)", "GL2(q)", "DIHEDRAL(q,order)",
// "BINARY_ICOSAHEDRAL(9)", "SCALARS(q)".
MatGroup standard_group(const std::string& spec,
                        std::int64_t cap = kDefaultGroupCap);

}  // namespace serre
