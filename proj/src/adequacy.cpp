#include "serre/adequacy.hpp"

namespace serre {

RowReducer::RowReducer(const FiniteField& F, int width)
    : F_(F), width_(width), rows_(width), has_pivot_(width, 0) {}

bool RowReducer::add_row(std::vector<gf_elt> row) {
  for (int c = 0; c < width_; ++c) {
    if (!row[c]) continue;
    if (has_pivot_[c]) {
      const gf_elt coef = row[c];
      const auto& p = rows_[c];
      for (int j = c; j < width_; ++j)
        row[j] = F_.sub(row[j], F_.mul(coef, p[j]));
    } else {
      const gf_elt iv = F_.inv(row[c]);
      for (int j = c; j < width_; ++j) row[j] = F_.mul(iv, row[j]);
      rows_[c] = std::move(row);
      has_pivot_[c] = 1;
      ++rank_;
      return true;
    }
  }
  return false;
}

std::vector<gf_elt> adjoint_action(const FiniteField& F, const Mat& g,
                                   const Mat& ginv) {
  const int n = g.n, N = n * n;
  std::vector<gf_elt> ad(static_cast<size_t>(N) * N);
  // column (a,b) is the vectorization of g E_ab g^{-1}
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          ad[static_cast<size_t>(i * n + j) * N + (a * n + b)] =
              F.mul(g.at(i, a), ginv.at(b, j));
  return ad;
}

int span_rank_prime_to_l(const MatGroup& G) {
  const int N = G.n() * G.n();
  RowReducer red(G.field(), N);
  for (const auto& g : G.elements()) {
    if (element_order(G.field(), g) % G.field().l() == 0) continue;
    std::vector<gf_elt> row(g.v.begin(), g.v.begin() + N);
    red.add_row(std::move(row));
    if (red.rank() == N) break;
  }
  return red.rank();
}

int fixed_subspace_dim(const MatGroup& G) {
  const auto& F = G.field();
  const int N = G.n() * G.n();
  RowReducer red(F, N);
  for (const auto& g : G.generators()) {
    const auto ad = adjoint_action(F, g, mat_inverse(F, g));
    for (int r = 0; r < N; ++r) {
      std::vector<gf_elt> row(ad.begin() + static_cast<size_t>(r) * N,
                              ad.begin() + static_cast<size_t>(r + 1) * N);
      row[r] = F.sub(row[r], 1);
      red.add_row(std::move(row));
    }
  }
  return N - red.rank();
}

int h1_adjoint(const MatGroup& G) {
  const auto& F = G.field();
  const int n = G.n(), N = n * n;
  const int k = static_cast<int>(G.generators().size());
  if (k == 0) return 0;
  const int W = k * N;
  const std::int64_t sz = G.size();

  // R[v]: N x W matrix with f(elements[v]) = R[v] * x, x = values on generators
  std::vector<std::vector<gf_elt>> R(static_cast<size_t>(sz));
  R[0].assign(static_cast<size_t>(N) * W, 0);
  RowReducer red(F, W);

  for (std::int64_t v = 0; v < sz; ++v) {
    const Mat& gv = G.elements()[v];
    const auto adv = adjoint_action(F, gv, mat_inverse(F, gv));
    for (int i = 0; i < k; ++i) {
      const std::int64_t w = G.edge(v, i);
      // cand = R[v] + Ad(v) placed at generator block i
      std::vector<gf_elt> cand = R[v];
      for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
          auto& slot = cand[static_cast<size_t>(r) * W + i * N + c];
          slot = F.add(slot, adv[static_cast<size_t>(r) * N + c]);
        }
      if (w != 0 && G.parent(w) == v && G.parent_gen(w) == i) {
        R[w] = std::move(cand);
      } else {
        for (int r = 0; r < N; ++r) {
          std::vector<gf_elt> row(W);
          bool nonzero = false;
          for (int c = 0; c < W; ++c) {
            row[c] = F.sub(cand[static_cast<size_t>(r) * W + c],
                           R[w][static_cast<size_t>(r) * W + c]);
            nonzero = nonzero || row[c];
          }
          if (nonzero) red.add_row(std::move(row));
        }
      }
    }
  }
  const int dim_z1 = W - red.rank();
  const int dim_b1 = N - fixed_subspace_dim(G);
  return dim_z1 - dim_b1;
}

AdequacyReport is_adequate(const MatGroup& G, std::int64_t l) {
  if (G.field().l() != l)
    fail(ErrorKind::CharMismatch, "field characteristic differs from l");
  AdequacyReport rep;
  rep.ab_l_part = abelianization_l_part(G, l);
  rep.cond1 = rep.ab_l_part == 1;
  rep.cond2 = G.n() % l != 0;
  rep.span_rank = span_rank_prime_to_l(G);
  rep.cond3 = rep.span_rank == G.n() * G.n();
  rep.h1_dim = h1_adjoint(G);
  rep.cond4 = rep.h1_dim == 0;
  rep.adequate = rep.cond1 && rep.cond2 && rep.cond3 && rep.cond4;
  return rep;
}

}  // namespace serre
