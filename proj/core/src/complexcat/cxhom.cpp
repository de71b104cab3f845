#include "hallcx/complexcat/cxhom.hpp"

#include <algorithm>
#include <stdexcept>

#include "hallcx/quiverrep/ext.hpp"
#include "hallcx/quiverrep/hom.hpp"

namespace hallcx {

namespace {

Cx as_bounded(CxContext& ctx, const Cx& X) {
  if (X.shape.kind == CxKind::bounded) return X;
  if (X.shape.kind == CxKind::window) return window_to_bounded(ctx, X);
  throw std::domain_error("homotopy classes need bounded or window complexes");
}

Vec flat_vector(const RepMap& f) {
  Vec v;
  for (const auto& m : f.at) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

}  // namespace

std::vector<RepMap> cx_hom_basis(CxContext& ctx, const Cx& X, const Cx& Y) {
  const CxShape s = common_shape(X.shape, Y.shape);
  return hom_basis(ctx.flat_algebra(s), ctx.flatten(reshape(ctx, X, s)), ctx.flatten(reshape(ctx, Y, s)));
}

std::size_t cx_hom_dim(CxContext& ctx, const Cx& X, const Cx& Y) { return cx_hom_basis(ctx, X, Y).size(); }

std::size_t homotopy_hom_dim(CxContext& ctx, const Cx& X0, const Cx& Y0, std::int64_t i) {
  const auto& A = ctx.base();
  const auto& F = A.field();
  const Cx X1 = as_bounded(ctx, X0);
  const Cx Z1 = shift(ctx, as_bounded(ctx, Y0), i);
  const CxShape s = common_shape(X1.shape, Z1.shape);
  if (s.len == 0) return 0;
  // one extra degree below so every s_j : X_j -> Z_{j-1} has a home
  const Cx X = pad(ctx, X1, s.lo - 1, s.hi());
  const Cx Z = pad(ctx, Z1, s.lo - 1, s.hi());
  const CxShape t = X.shape;
  const auto chain = hom_basis(ctx.flat_algebra(t), ctx.flatten(X), ctx.flatten(Z));
  if (chain.empty()) return 0;

  const std::size_t n = ctx.n();
  std::vector<Vec> nulls;
  for (std::size_t k = 1; k < t.len; ++k) {
    // s_k : X_k -> Z_{k-1}
    for (const auto& h : hom_basis(A, X.comps[k], Z.comps[k - 1])) {
      RepMap f;
      for (std::size_t kk = 0; kk < t.len; ++kk)
        for (std::size_t v = 0; v < n; ++v) f.at.emplace_back(Z.comps[kk].dims[v], X.comps[kk].dims[v]);
      for (std::size_t v = 0; v < n; ++v) {
        // f_k += c_{k-1} s_k ; f_{k-1} += s_k d_{k-1}
        axpy(F, f.at[k * n + v], 1, multiply(F, Z.diffs[k - 1].at[v], h.at[v]));
        axpy(F, f.at[(k - 1) * n + v], 1, multiply(F, h.at[v], X.diffs[k - 1].at[v]));
      }
      nulls.push_back(flat_vector(f));
    }
  }
  if (nulls.empty()) return chain.size();
  const std::size_t r = rank(F, Matrix::from_columns(nulls.front().size(), nulls));
  if (r > chain.size()) throw InconsistencyError("null-homotopic maps exceed chain maps");
  return chain.size() - r;
}

std::int64_t euler_form_cb(CxContext& ctx, const Cx& X0, const Cx& Y0) {
  const Cx X = trim(ctx, as_bounded(ctx, X0));
  const Cx Y = trim(ctx, as_bounded(ctx, Y0));
  if (X.shape.len == 0 || Y.shape.len == 0) return 0;
  auto e = static_cast<std::int64_t>(cx_hom_dim(ctx, X, Y));
  for (std::int64_t i = 1; i <= Y.shape.hi() - X.shape.lo + 1; ++i)
    e += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(homotopy_hom_dim(ctx, X, Y, i));
  return e;
}

std::int64_t euler_form_cm(CxContext& ctx, const Cx& X, const Cx& Y) {
  if (X.shape.kind != CxKind::window || Y.shape.kind != CxKind::window || X.shape.m != Y.shape.m)
    throw std::domain_error("euler_form_cm needs window complexes of equal length");
  auto e = static_cast<std::int64_t>(cx_hom_dim(ctx, X, Y));
  for (std::int64_t i = 1; i < static_cast<std::int64_t>(X.shape.m); ++i)
    e += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(homotopy_hom_dim(ctx, X, Y, i));
  return e;
}

std::int64_t euler_form_components(const CxContext& ctx, const Cx& X, const Cx& Y) {
  if (X.shape.kind == CxKind::cyclic || Y.shape.kind == CxKind::cyclic)
    throw std::domain_error("component Euler form is not defined for cyclic complexes");
  const auto& Q = ctx.base().quiver();
  std::int64_t e = 0;
  for (std::size_t a = 0; a < X.shape.len; ++a)
    for (std::size_t b = 0; b < Y.shape.len; ++b) {
      const std::int64_t gap = Y.degree(b) - X.degree(a);
      if (gap < 0) continue;
      e += (gap % 2 ? -1 : 1) * euler_form(Q, X.comps[a].dims, Y.comps[b].dims);
    }
  return e;
}

}  // namespace hallcx
