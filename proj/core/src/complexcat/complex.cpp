#include "hallcx/complexcat/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "hallcx/quiverrep/hom.hpp"
#include "hallcx/quiverrep/iso.hpp"

namespace hallcx {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

RepMap signed_map(const PathAlgebra& A, const RepMap& f, std::int64_t t) {
  return (t % 2 == 0) ? f : scale(A, f, A.field().neg(1));
}

Cx blank(const CxContext& ctx, const CxShape& s) {
  Cx X;
  X.shape = s;
  const Rep z = zero_rep(ctx.base());
  X.comps.assign(s.len, z);
  X.diffs.assign(s.diff_count(), zero_map(z, z));
  return X;
}

void set_diff(Cx& X, std::size_t k, RepMap f) { X.diffs[k] = std::move(f); }

}  // namespace

std::string to_string(CxKind k) {
  switch (k) {
    case CxKind::cyclic:
      return "cyclic";
    case CxKind::window:
      return "window";
    case CxKind::bounded:
      return "bounded";
  }
  return "?";
}

std::size_t CxShape::diff_count() const noexcept {
  if (kind == CxKind::cyclic) return len;
  return len == 0 ? 0 : len - 1;
}

Rep Cx::component(const PathAlgebra& A, std::int64_t i) const {
  if (shape.kind == CxKind::cyclic) return comps[static_cast<std::size_t>(mod(i, static_cast<std::int64_t>(shape.m)))];
  if (i < shape.lo || i > shape.hi()) return zero_rep(A);
  return comps[static_cast<std::size_t>(i - shape.lo)];
}

CxShape cyclic_shape(std::size_t m) {
  if (m == 0) throw std::domain_error("cyclic complexes need m >= 1");
  return {CxKind::cyclic, m, 0, m};
}

CxShape window_shape(std::size_t m) {
  if (m == 0) throw std::domain_error("window complexes need m >= 1");
  return {CxKind::window, m, 1, m};
}

CxShape bounded_shape(std::int64_t lo, std::size_t len) { return {CxKind::bounded, 0, len ? lo : 0, len}; }

CxContext::CxContext(PathAlgebra A, std::uint64_t budget) : A_(A), catalog_(std::move(A), budget) {}

const PathAlgebra& CxContext::flat_algebra(const CxShape& s) {
  std::lock_guard lock(mu_);
  auto it = flats_.find(s);
  if (it != flats_.end()) return *it->second;

  const std::size_t n = A_.n();
  const auto& base = A_.quiver().arrows();
  const std::size_t na = base.size();
  const Elem minus_one = A_.field().neg(1);
  std::vector<Arrow> arrows;
  for (std::size_t k = 0; k < s.len; ++k)
    for (const auto& a : base) arrows.push_back({k * n + a.source, k * n + a.target});
  auto arrow_idx = [&](std::size_t k, std::size_t ai) { return k * na + ai; };
  auto diff_idx = [&](std::size_t k, std::size_t v) { return s.len * na + k * n + v; };
  const std::size_t dc = s.diff_count();
  for (std::size_t k = 0; k < dc; ++k)
    for (std::size_t v = 0; v < n; ++v) arrows.push_back({k * n + v, ((k + 1) % s.len) * n + v});

  std::vector<Relation> rels;
  for (std::size_t k = 0; k < dc; ++k) {
    const std::size_t next = (k + 1) % s.len;
    for (std::size_t ai = 0; ai < na; ++ai) {
      // d_t a - a d_s = 0
      Relation r;
      r.terms.push_back({1, arrow_idx(k, ai), diff_idx(k, base[ai].target)});
      r.terms.push_back({minus_one, diff_idx(k, base[ai].source), arrow_idx(next, ai)});
      rels.push_back(std::move(r));
    }
    const bool has_next = s.kind == CxKind::cyclic || k + 1 < dc;
    if (!has_next) continue;
    const std::size_t k2 = (k + 1) % dc;
    for (std::size_t v = 0; v < n; ++v) rels.push_back(Relation{{{1, diff_idx(k, v), diff_idx(k2, v)}}});
  }
  auto flat = std::make_unique<PathAlgebra>(Quiver(s.len * n, std::move(arrows), std::move(rels)), A_.field());
  auto& slot = flats_[s];
  slot = std::move(flat);
  return *slot;
}

Rep CxContext::flatten(const Cx& X) const {
  const std::size_t n = A_.n();
  Rep R;
  for (const auto& c : X.comps) R.dims.insert(R.dims.end(), c.dims.begin(), c.dims.end());
  for (const auto& c : X.comps) R.maps.insert(R.maps.end(), c.maps.begin(), c.maps.end());
  for (const auto& d : X.diffs)
    for (std::size_t v = 0; v < n; ++v) R.maps.push_back(d.at[v]);
  return R;
}

Cx CxContext::unflatten(const CxShape& s, const Rep& R) const {
  const std::size_t n = A_.n();
  const std::size_t na = A_.quiver().arrows().size();
  Cx X;
  X.shape = s;
  for (std::size_t k = 0; k < s.len; ++k) {
    Rep c;
    c.dims.assign(R.dims.begin() + static_cast<std::ptrdiff_t>(k * n),
                  R.dims.begin() + static_cast<std::ptrdiff_t>((k + 1) * n));
    c.maps.assign(R.maps.begin() + static_cast<std::ptrdiff_t>(k * na),
                  R.maps.begin() + static_cast<std::ptrdiff_t>((k + 1) * na));
    X.comps.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < s.diff_count(); ++k) {
    RepMap d;
    for (std::size_t v = 0; v < n; ++v) d.at.push_back(R.maps[s.len * na + k * n + v]);
    X.diffs.push_back(std::move(d));
  }
  return X;
}

const Rep& CxContext::projective_rep(std::size_t i) {
  std::lock_guard lock(mu_);
  auto it = projectives_.find(i);
  if (it == projectives_.end()) it = projectives_.emplace(i, projective(A_, i)).first;
  return it->second;
}

const ProjResolution& CxContext::resolution(const RepClassId& id) {
  std::lock_guard lock(mu_);
  auto it = resolutions_.find(id);
  if (it != resolutions_.end()) return *it->second;
  auto res = std::make_unique<ProjResolution>(min_proj_resolution(A_, catalog_.rep(id)));
  auto& slot = resolutions_[id];
  slot = std::move(res);
  return *slot;
}

Cx zero_cx(const CxContext& ctx, const CxShape& s) { return blank(ctx, s); }

void validate(CxContext& ctx, const Cx& X, bool projective_components) {
  const auto& s = X.shape;
  if (s.kind == CxKind::cyclic && (s.lo != 0 || s.len != s.m || s.m == 0))
    throw std::domain_error("malformed cyclic shape");
  if (s.kind == CxKind::window && (s.lo != 1 || s.len != s.m || s.m == 0))
    throw std::domain_error("malformed window shape");
  if (X.comps.size() != s.len || X.diffs.size() != s.diff_count())
    throw std::domain_error("complex has the wrong number of components or differentials");
  for (const auto& c : X.comps) {
    validate(ctx.base(), c);
    if (projective_components && !is_projective(ctx.base(), c))
      throw std::domain_error("complex component is not projective");
  }
  for (std::size_t k = 0; k < X.diffs.size(); ++k) {
    const auto& src = X.comps[k];
    const auto& dst = X.comps[(k + 1) % s.len];
    if (X.diffs[k].at.size() != ctx.n()) throw std::domain_error("differential has the wrong number of vertices");
    for (std::size_t v = 0; v < ctx.n(); ++v)
      if (X.diffs[k].at[v].rows() != dst.dims[v] || X.diffs[k].at[v].cols() != src.dims[v])
        throw std::domain_error("differential shape does not match components");
    if (!is_morphism(ctx.base(), X.diffs[k], src, dst)) throw std::domain_error("differential is not a morphism");
  }
  if (!satisfies_relations(ctx.flat_algebra(s), ctx.flatten(X))) throw std::domain_error("d o d is not zero");
}

Cx shift(CxContext& ctx, const Cx& X, std::int64_t t) {
  const auto& A = ctx.base();
  const auto& s = X.shape;
  if (s.kind == CxKind::cyclic) {
    const auto m = static_cast<std::int64_t>(s.m);
    Cx Y = blank(ctx, s);
    for (std::int64_t i = 0; i < m; ++i) {
      const auto j = static_cast<std::size_t>(mod(i + t, m));
      Y.comps[static_cast<std::size_t>(i)] = X.comps[j];
      Y.diffs[static_cast<std::size_t>(i)] = signed_map(A, X.diffs[j], t);
    }
    return Y;
  }
  if (s.kind == CxKind::bounded) {
    Cx Y = X;
    Y.shape.lo = s.lo - t;
    for (auto& d : Y.diffs) d = signed_map(A, d, t);
    if (Y.shape.len == 0) Y.shape.lo = 0;
    return Y;
  }
  // window: degree i of the result is degree i + t of X
  for (std::size_t k = 0; k < s.len; ++k) {
    const std::int64_t i = X.degree(k) - t;
    if ((i < 1 || i > static_cast<std::int64_t>(s.m)) && !X.comps[k].is_zero())
      throw std::domain_error("window shift moves a component outside degrees 1..m");
  }
  Cx Y = blank(ctx, s);
  for (std::size_t k = 0; k < s.len; ++k) Y.comps[k] = X.component(A, Y.degree(k) + t);
  for (std::size_t k = 0; k < Y.diffs.size(); ++k) {
    const std::int64_t src = Y.degree(k) + t;
    if (src >= s.lo && src + 1 <= s.hi()) {
      Y.diffs[k] = signed_map(A, X.diffs[static_cast<std::size_t>(src - s.lo)], t);
    } else {
      Y.diffs[k] = zero_map(Y.comps[k], Y.comps[k + 1]);
    }
  }
  return Y;
}

Cx reshape(const CxContext& ctx, const Cx& X, const CxShape& s) {
  if (X.shape == s) return X;
  if (X.shape.kind != CxKind::bounded || s.kind != CxKind::bounded)
    throw std::domain_error("only bounded complexes can change their degree range");
  const auto& A = ctx.base();
  for (std::size_t k = 0; k < X.shape.len; ++k) {
    const std::int64_t i = X.degree(k);
    if ((s.len == 0 || i < s.lo || i > s.hi()) && !X.comps[k].is_zero())
      throw std::domain_error("reshape would drop a nonzero component");
  }
  Cx Y = blank(ctx, s);
  for (std::size_t k = 0; k < s.len; ++k) Y.comps[k] = X.component(A, Y.degree(k));
  for (std::size_t k = 0; k < Y.diffs.size(); ++k) {
    const std::int64_t src = Y.degree(k);
    if (X.shape.len > 0 && src >= X.shape.lo && src + 1 <= X.shape.hi()) {
      Y.diffs[k] = X.diffs[static_cast<std::size_t>(src - X.shape.lo)];
    } else {
      Y.diffs[k] = zero_map(Y.comps[k], Y.comps[k + 1]);
    }
  }
  return Y;
}

Cx pad(const CxContext& ctx, const Cx& X, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) return reshape(ctx, X, bounded_shape(0, 0));
  return reshape(ctx, X, bounded_shape(lo, static_cast<std::size_t>(hi - lo + 1)));
}

Cx trim(const CxContext& ctx, const Cx& X) {
  if (X.shape.kind != CxKind::bounded) return X;
  std::size_t first = X.shape.len, last = 0;
  for (std::size_t k = 0; k < X.shape.len; ++k)
    if (!X.comps[k].is_zero()) {
      first = std::min(first, k);
      last = k;
    }
  if (first == X.shape.len) return reshape(ctx, X, bounded_shape(0, 0));
  return pad(ctx, X, X.degree(first), X.degree(last));
}

CxShape common_shape(const CxShape& a, const CxShape& b) {
  if (a.kind != b.kind || a.m != b.m) throw std::domain_error("complexes live in different categories");
  if (a.kind != CxKind::bounded) return a;
  if (a.len == 0) return b;
  if (b.len == 0) return a;
  const std::int64_t lo = std::min(a.lo, b.lo), hi = std::max(a.hi(), b.hi());
  return bounded_shape(lo, static_cast<std::size_t>(hi - lo + 1));
}

Cx direct_sum(const CxContext& ctx, const Cx& X, const Cx& Y) {
  const CxShape s = common_shape(X.shape, Y.shape);
  const Cx a = reshape(ctx, X, s), b = reshape(ctx, Y, s);
  Cx Z;
  Z.shape = s;
  for (std::size_t k = 0; k < s.len; ++k) Z.comps.push_back(direct_sum(a.comps[k], b.comps[k]));
  for (std::size_t k = 0; k < a.diffs.size(); ++k) Z.diffs.push_back(direct_sum(a.diffs[k], b.diffs[k]));
  return Z;
}

Cx make_Cf(CxContext& ctx, const RepMap& f, const Rep& Q, const Rep& P, std::size_t m) {
  const auto& A = ctx.base();
  if (!is_projective(A, Q) || !is_projective(A, P)) throw std::domain_error("C_f needs a map of projectives");
  if (!is_morphism(A, f, Q, P)) throw std::domain_error("C_f: f is not a morphism Q -> P");
  if (m == 0) {
    Cx X = blank(ctx, bounded_shape(-1, 2));
    X.comps = {Q, P};
    set_diff(X, 0, f);
    return X;
  }
  Cx X = blank(ctx, cyclic_shape(m));
  if (m == 1) {
    X.comps[0] = direct_sum(P, Q);
    RepMap d;
    for (std::size_t v = 0; v < ctx.n(); ++v) {
      Matrix b(P.dims[v] + Q.dims[v], P.dims[v] + Q.dims[v]);
      for (std::size_t i = 0; i < P.dims[v]; ++i)
        for (std::size_t j = 0; j < Q.dims[v]; ++j) b(i, P.dims[v] + j) = f.at[v](i, j);
      d.at.push_back(std::move(b));
    }
    set_diff(X, 0, std::move(d));
    return X;
  }
  X.comps[m - 1] = Q;
  X.comps[0] = P;
  for (std::size_t k = 0; k < m; ++k) X.diffs[k] = zero_map(X.comps[k], X.comps[(k + 1) % m]);
  X.diffs[m - 1] = f;
  return X;
}

Cx make_Kp(CxContext& ctx, const Rep& P, std::size_t m) { return make_Cf(ctx, identity_map(P), P, P, m); }

Cx make_Tf(CxContext& ctx, const RepMap& f, const Rep& Q, const Rep& P, std::size_t m) {
  const auto& A = ctx.base();
  if (m < 2) throw std::domain_error("T_f needs m >= 2");
  if (!is_projective(A, Q) || !is_projective(A, P)) throw std::domain_error("T_f needs a map of projectives");
  if (!is_morphism(A, f, Q, P)) throw std::domain_error("T_f: f is not a morphism Q -> P");
  Cx X = blank(ctx, window_shape(m));
  X.comps[m - 2] = Q;
  X.comps[m - 1] = P;
  for (std::size_t k = 0; k + 1 < m; ++k) X.diffs[k] = zero_map(X.comps[k], X.comps[k + 1]);
  X.diffs[m - 2] = f;
  return X;
}

Cx make_Jp(CxContext& ctx, const Rep& P, std::size_t m) { return make_Tf(ctx, identity_map(P), P, P, m); }

Cx make_Sp(CxContext& ctx, const Rep& P, std::size_t m) {
  if (!is_projective(ctx.base(), P)) throw std::domain_error("S_P needs a projective");
  Cx X = blank(ctx, window_shape(m));
  X.comps[0] = P;
  for (std::size_t k = 0; k + 1 < m; ++k) X.diffs[k] = zero_map(X.comps[k], X.comps[k + 1]);
  return X;
}

Cx make_Tp(CxContext& ctx, const Rep& P, std::size_t m) {
  if (!is_projective(ctx.base(), P)) throw std::domain_error("T_P needs a projective");
  Cx X = blank(ctx, window_shape(m));
  X.comps[m - 1] = P;
  for (std::size_t k = 0; k + 1 < m; ++k) X.diffs[k] = zero_map(X.comps[k], X.comps[k + 1]);
  return X;
}

Cx make_CM(CxContext& ctx, const Rep& M, std::size_t m) {
  const auto res = min_proj_resolution(ctx.base(), M);
  return make_Cf(ctx, res.delta, res.Omega, res.PM, m);
}

Cx make_TM(CxContext& ctx, const Rep& M, std::size_t m) {
  if (m < 2) throw std::domain_error("T_M needs m >= 2");
  const auto res = min_proj_resolution(ctx.base(), M);
  return make_Tf(ctx, res.delta, res.Omega, res.PM, m);
}

Cx window_to_bounded(CxContext& ctx, const Cx& X) {
  if (X.shape.kind != CxKind::window) throw std::domain_error("window_to_bounded needs a window complex");
  Cx Y = X;
  Y.shape = bounded_shape(1 - static_cast<std::int64_t>(X.shape.m), X.shape.m);
  for (auto& d : Y.diffs) d = signed_map(ctx.base(), d, static_cast<std::int64_t>(X.shape.m));
  return Y;
}

bool is_isomorphic(CxContext& ctx, const Cx& X, const Cx& Y) {
  const CxShape s = common_shape(X.shape, Y.shape);
  return is_isomorphic(ctx.flat_algebra(s), ctx.flatten(reshape(ctx, X, s)), ctx.flatten(reshape(ctx, Y, s)),
                       ctx.budget());
}

Cx scramble(CxContext& ctx, const Cx& X, std::mt19937_64& rng) {
  const auto& F = ctx.flat_algebra(X.shape);
  const Rep flat = ctx.flatten(X);
  const auto basis = hom_basis(F, flat, flat);
  for (int t = 0; t < 256; ++t) {
    const RepMap g = random_combination(F, basis, flat, flat, rng);
    if (is_isomorphism(F, g)) return ctx.unflatten(X.shape, transport(F, flat, g.at));
  }
  return X;
}

}  // namespace hallcx
