#include "hallcx/complexcat/decompose.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "hallcx/errors.hpp"

namespace hallcx {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::vector<RepClassId> projective_classes(CxContext& ctx) {
  std::vector<RepClassId> out;
  for (std::size_t i = 0; i < ctx.n(); ++i) out.push_back(ctx.catalog().projective_class(i));
  return out;
}

void add_projectives(std::vector<Label>& out, LabelKind kind, std::int64_t r, const DimVec& mult,
                     const std::vector<RepClassId>& proj) {
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (std::size_t c = 0; c < mult[i]; ++c) out.push_back({kind, r, proj[i]});
}

bool fits(const std::vector<DimVec>& a, const std::vector<DimVec>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t v = 0; v < a[k].size(); ++v)
      if (a[k][v] > b[k][v]) return false;
  return true;
}

std::vector<Label> alphabet(CxContext& ctx, CxKind kind, std::size_t m, const DimVec& dmax, std::int64_t r_lo,
                            std::int64_t r_hi) {
  auto& cat = ctx.catalog();
  const auto ind = cat.indecomposables_up_to(dmax);
  std::vector<RepClassId> proj;
  for (const auto& id : ind)
    if (is_projective(ctx.base(), cat.rep(id))) proj.push_back(id);
  std::vector<Label> out;
  const auto sm = static_cast<std::int64_t>(m);
  switch (kind) {
    case CxKind::cyclic:
      for (std::int64_t r = 0; r < sm; ++r) {
        for (const auto& id : ind) out.push_back({LabelKind::C, r, id});
        for (const auto& id : proj) out.push_back({LabelKind::K, r, id});
      }
      break;
    case CxKind::window:
      for (const auto& id : proj) out.push_back({LabelKind::S, 0, id});
      for (std::int64_t r = 0; r + 2 <= sm; ++r) {
        for (const auto& id : ind) out.push_back({LabelKind::T, r, id});
        for (const auto& id : proj) out.push_back({LabelKind::J, r, id});
      }
      break;
    case CxKind::bounded:
      for (std::int64_t r = r_lo; r <= r_hi; ++r) {
        for (const auto& id : ind) out.push_back({LabelKind::C, r, id});
        for (const auto& id : proj) out.push_back({LabelKind::K, r, id});
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

char to_char(LabelKind k) {
  switch (k) {
    case LabelKind::C: return 'C';
    case LabelKind::K: return 'K';
    case LabelKind::S: return 'S';
    case LabelKind::T: return 'T';
    case LabelKind::J: return 'J';
  }
  return '?';
}

std::string to_string(const Label& l) {
  std::string s(1, to_char(l.kind));
  s += to_string(l.cls);
  if (l.kind != LabelKind::S) s += "[" + std::to_string(l.r) + "]";
  return s;
}

std::string to_string(const CxKey& k) {
  std::string s = to_string(k.kind);
  if (k.kind != CxKind::bounded) s += "(" + std::to_string(k.m) + ")";
  s += ":";
  if (k.labels.empty()) return s + "0";
  for (std::size_t i = 0; i < k.labels.size(); ++i) s += (i ? "+" : "") + to_string(k.labels[i]);
  return s;
}

bool is_contractible(const Label& l) { return l.kind == LabelKind::K || l.kind == LabelKind::J; }

bool label_in_range(const CxKey& k, const Label& l) {
  const auto m = static_cast<std::int64_t>(k.m);
  switch (k.kind) {
    case CxKind::cyclic:
      return (l.kind == LabelKind::C || l.kind == LabelKind::K) && l.r >= 0 && l.r < m;
    case CxKind::window:
      if (l.kind == LabelKind::S) return l.r == 0;
      return (l.kind == LabelKind::T || l.kind == LabelKind::J) && l.r >= 0 && l.r + 2 <= m;
    case CxKind::bounded:
      return l.kind == LabelKind::C || l.kind == LabelKind::K;
  }
  return false;
}

Cx realize(CxContext& ctx, CxKind kind, std::size_t m, const Label& l) {
  if (!label_in_range({kind, m, {}}, l)) throw std::domain_error("label " + to_string(l) + " not in this category");
  const std::size_t mm = kind == CxKind::bounded ? 0 : m;
  switch (l.kind) {
    case LabelKind::C: {
      const auto& res = ctx.resolution(l.cls);
      return shift(ctx, make_Cf(ctx, res.delta, res.Omega, res.PM, mm), l.r);
    }
    case LabelKind::K:
      return shift(ctx, make_Kp(ctx, ctx.catalog().rep(l.cls), mm), l.r);
    case LabelKind::S:
      return make_Sp(ctx, ctx.catalog().rep(l.cls), m);
    case LabelKind::T: {
      const auto& res = ctx.resolution(l.cls);
      return shift(ctx, make_Tf(ctx, res.delta, res.Omega, res.PM, m), l.r);
    }
    case LabelKind::J:
      return shift(ctx, make_Jp(ctx, ctx.catalog().rep(l.cls), m), l.r);
  }
  throw std::logic_error("unknown label kind");
}

Cx realize(CxContext& ctx, const CxKey& k) {
  CxShape s;
  switch (k.kind) {
    case CxKind::cyclic: s = cyclic_shape(k.m); break;
    case CxKind::window: s = window_shape(k.m); break;
    case CxKind::bounded: s = bounded_shape(0, 0); break;
  }
  Cx X = zero_cx(ctx, s);
  for (const auto& l : k.labels) X = direct_sum(ctx, X, realize(ctx, k.kind, k.m, l));
  return k.kind == CxKind::bounded ? trim(ctx, X) : X;
}

CxShape key_shape(CxContext& ctx, const CxKey& k) { return realize(ctx, k).shape; }

CxKey decompose(CxContext& ctx, const Cx& X, bool verify) {
  validate(ctx, X);
  const auto& A = ctx.base();
  const auto& F = A.field();
  auto& cat = ctx.catalog();
  const auto& s = X.shape;
  const auto proj = projective_classes(ctx);
  CxKey key{s.kind, s.kind == CxKind::bounded ? 0 : s.m, {}};
  if (s.len == 0) return key;

  const std::size_t dc = s.diff_count();
  std::vector<Subrep> ker(s.len);
  for (std::size_t k = 0; k < s.len; ++k) {
    if (k < dc) {
      ker[k] = kernel(A, X.diffs[k], X.comps[k]);
    } else {
      for (std::size_t v = 0; v < ctx.n(); ++v) ker[k].basis.push_back(Matrix::identity(X.comps[k].dims[v]));
    }
  }

  const LabelKind piece_kind = s.kind == CxKind::window ? LabelKind::T : LabelKind::C;
  const LabelKind id_kind = s.kind == CxKind::window ? LabelKind::J : LabelKind::K;
  const auto sm = static_cast<std::int64_t>(s.m);
  for (std::size_t k = 0; k < dc; ++k) {
    const std::size_t t = (k + 1) % s.len;
    const auto& d = X.diffs[k];
    // lift the top of im d_k to get a complement of ker d_k
    const Subrep im = image(A, d);
    const Rep im_rep = restrict_to(A, X.comps[t], im);
    const Subrep im_rad = radical_subrep(A, im_rep);
    std::vector<std::pair<std::size_t, Vec>> gens;
    for (std::size_t w = 0; w < ctx.n(); ++w) {
      const Matrix tops = multiply(F, im.basis[w], complement_columns(F, im_rad.basis[w], im_rep.dims[w]));
      for (std::size_t c = 0; c < tops.cols(); ++c) {
        const Vec y = tops.column(c);
        auto x = solve(F, d.at[w], y);
        if (!x) throw InconsistencyError("image generator has no preimage");
        gens.emplace_back(w, std::move(*x));
      }
    }
    const Subrep comp = generated_subrep(A, X.comps[k], gens);
    const Rep C = restrict_to(A, X.comps[k], comp);
    const Rep K = restrict_to(A, X.comps[t], ker[t]);
    if (C.dims != im_rep.dims) throw InconsistencyError("lifted complement has the wrong dimension");
    RepMap f;
    for (std::size_t w = 0; w < ctx.n(); ++w) {
      auto m = solve(F, ker[t].basis[w], multiply(F, d.at[w], comp.basis[w]));
      if (!m) throw InconsistencyError("image of d is not inside the next kernel");
      f.at.push_back(std::move(*m));
    }
    const StrippedMap st = strip_common_summand(A, f, C, K);

    std::int64_t r = 0;
    if (s.kind == CxKind::cyclic) r = mod(sm - 1 - static_cast<std::int64_t>(k), sm);
    if (s.kind == CxKind::window) r = sm - 2 - static_cast<std::int64_t>(k);
    if (s.kind == CxKind::bounded) r = -1 - X.degree(k);
    if (!st.Y.is_zero())
      for (const auto& id : cat.summands(cat.classify(st.Y))) key.labels.push_back({piece_kind, r, id});
    add_projectives(key.labels, id_kind, r, st.R, proj);
  }
  if (s.kind != CxKind::cyclic) {
    const DimVec mult = projective_multiplicity(A, restrict_to(A, X.comps[0], ker[0]));
    if (s.kind == CxKind::window) {
      add_projectives(key.labels, LabelKind::S, 0, mult, proj);
    } else {
      add_projectives(key.labels, LabelKind::C, -s.lo, mult, proj);
    }
  }
  std::sort(key.labels.begin(), key.labels.end());
  if (verify && !is_isomorphic(ctx, realize(ctx, key), X))
    throw InconsistencyError("decomposition " + to_string(key) + " does not reassemble the complex");
  return key;
}

Minimized minimize(CxContext& ctx, const Cx& X) {
  const CxKey full = decompose(ctx, X);
  Minimized out;
  out.core_key = {full.kind, full.m, {}};
  for (const auto& l : full.labels) (is_contractible(l) ? out.stripped : out.core_key.labels).push_back(l);
  out.core = realize(ctx, out.core_key);
  if (X.shape.kind == CxKind::bounded && out.core.shape.len == 0) out.core = zero_cx(ctx, bounded_shape(0, 0));
  return out;
}

std::vector<DimVec> profile(const Cx& X) {
  std::vector<DimVec> out;
  for (const auto& c : X.comps) out.push_back(c.dims);
  return out;
}

std::vector<DimVec> key_profile(CxContext& ctx, const CxKey& k) { return profile(realize(ctx, k)); }

std::vector<CxKey> keys_with_profile(CxContext& ctx, const CxShape& s, const std::vector<DimVec>& dims) {
  if (dims.size() != s.len) throw std::domain_error("profile length does not match the shape");
  const CxKey empty{s.kind, s.kind == CxKind::bounded ? 0 : s.m, {}};
  DimVec dmax(ctx.n(), 0);
  for (const auto& d : dims)
    for (std::size_t v = 0; v < d.size(); ++v) dmax[v] = std::max(dmax[v], d[v]);

  // C_M[r] and K_P[r] sit in degrees -1-r and -r
  const std::int64_t r_lo = s.len ? -s.hi() - 1 : 0, r_hi = s.len ? -s.lo + 1 : -1;
  std::vector<Label> letters;
  std::vector<std::vector<DimVec>> prof;
  for (const auto& l : alphabet(ctx, s.kind, s.m, dmax, r_lo, r_hi)) {
    Cx Z = realize(ctx, s.kind, s.m, l);
    if (s.kind == CxKind::bounded) {
      Z = trim(ctx, Z);
      if (Z.shape.len == 0 || Z.shape.lo < s.lo || Z.shape.hi() > s.hi()) continue;
      Z = reshape(ctx, Z, s);
    }
    auto p = profile(Z);
    if (!fits(p, dims)) continue;
    letters.push_back(l);
    prof.push_back(std::move(p));
  }

  std::vector<CxKey> out;
  std::vector<Label> chosen;
  std::vector<DimVec> rest = dims;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    if (std::all_of(rest.begin(), rest.end(), [](const DimVec& d) {
          return std::all_of(d.begin(), d.end(), [](std::size_t x) { return x == 0; });
        })) {
      CxKey k = empty;
      k.labels = chosen;
      out.push_back(std::move(k));
      return;
    }
    for (std::size_t i = from; i < letters.size(); ++i) {
      if (!fits(prof[i], rest)) continue;
      for (std::size_t k = 0; k < rest.size(); ++k)
        for (std::size_t v = 0; v < rest[k].size(); ++v) rest[k][v] -= prof[i][k][v];
      chosen.push_back(letters[i]);
      go(i);
      chosen.pop_back();
      for (std::size_t k = 0; k < rest.size(); ++k)
        for (std::size_t v = 0; v < rest[k].size(); ++v) rest[k][v] += prof[i][k][v];
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CxKey> key_grid(CxContext& ctx, CxKind kind, std::size_t m, const DimVec& dmax, std::size_t max_summands,
                            std::int64_t r_lo, std::int64_t r_hi) {
  const auto letters = alphabet(ctx, kind, m, dmax, r_lo, r_hi);
  const CxKey empty{kind, kind == CxKind::bounded ? 0 : m, {}};
  std::vector<CxKey> out;
  std::vector<Label> chosen;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    CxKey k = empty;
    k.labels = chosen;
    out.push_back(std::move(k));
    if (chosen.size() == max_summands) return;
    for (std::size_t i = from; i < letters.size(); ++i) {
      chosen.push_back(letters[i]);
      go(i);
      chosen.pop_back();
    }
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hallcx
