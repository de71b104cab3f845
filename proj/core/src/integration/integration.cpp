#include "hallcx/integration/integration.hpp"

#include <stdexcept>

#include "hallcx/complexcat/cxhom.hpp"
#include "hallcx/quiverrep/projective.hpp"

namespace hallcx {

namespace {

void require_c2(const Cx& M) {
  if (M.shape.kind != CxKind::window || M.shape.m != 2)
    throw std::domain_error("integration is defined on C^2(P) only");
}

Cx two_term(const CxContext& ctx, const Rep& X1, const Rep& X2, RepMap d) {
  Cx out = zero_cx(ctx, window_shape(2));
  out.comps = {X1, X2};
  out.diffs = {std::move(d)};
  return out;
}

KVec minus(const DimVec& a, const DimVec& b) {
  KVec v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) v[i] = static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(b[i]);
  return v;
}

}  // namespace

InjectiveResolution injective_resolution_c2(CxContext& ctx, const Cx& M) {
  require_c2(M);
  const auto& A = ctx.base();
  const auto& F = A.field();
  const std::size_t n = ctx.n();
  const Rep& M1 = M.comps[0];
  const Rep& M2 = M.comps[1];
  const RepMap& d = M.diffs[0];
  InjectiveResolution r;
  r.M = M;
  r.A = M1;
  r.B = M2;
  r.C = M2;
  RepMap proj;  // S block -> 0, J block -> identity
  for (std::size_t v = 0; v < n; ++v) proj.at.push_back(hstack(Matrix(M2.dims[v], M1.dims[v]), Matrix::identity(M2.dims[v])));
  r.middle = two_term(ctx, direct_sum(M1, M2), M2, std::move(proj));
  r.tail = two_term(ctx, M2, zero_rep(A), zero_map(M2, zero_rep(A)));
  // flat vertices: k * n + v
  r.iota.at.resize(2 * n);
  r.pi.at.resize(2 * n);
  for (std::size_t v = 0; v < n; ++v) {
    r.iota.at[v] = vstack(Matrix::identity(M1.dims[v]), d.at[v]);
    r.iota.at[n + v] = Matrix::identity(M2.dims[v]);
    r.pi.at[v] = hstack(scale(F, d.at[v], F.neg(1)), Matrix::identity(M2.dims[v]));
    r.pi.at[n + v] = Matrix(0, M2.dims[v]);
  }
  return r;
}

bool is_exact(CxContext& ctx, const InjectiveResolution& r) {
  const auto& flat = ctx.flat_algebra(window_shape(2));
  const Rep X = ctx.flatten(r.M), I0 = ctx.flatten(r.middle), I1 = ctx.flatten(r.tail);
  if (!is_morphism(flat, r.iota, X, I0) || !is_morphism(flat, r.pi, I0, I1)) return false;
  if (!is_injective(flat, r.iota) || !is_surjective(flat, r.pi)) return false;
  if (!is_zero(compose(flat, r.pi, r.iota))) return false;
  return kernel(flat, r.pi, I0).dims() == image(flat, r.iota).dims();
}

InjectiveResolution pad_resolution(CxContext& ctx, const InjectiveResolution& r, const DimVec& extra) {
  const auto& A = ctx.base();
  const std::size_t n = ctx.n();
  const Rep E = projective_sum(A, extra);
  InjectiveResolution out = r;
  out.A = direct_sum(r.A, E);
  out.B = direct_sum(r.B, E);
  // middle degree 1 is A (+) E (+) C; reorder to keep the S block first
  const Rep S = out.A;
  RepMap proj;
  for (std::size_t v = 0; v < n; ++v) proj.at.push_back(hstack(Matrix(r.C.dims[v], S.dims[v]), Matrix::identity(r.C.dims[v])));
  out.middle = two_term(ctx, direct_sum(S, r.C), r.C, std::move(proj));
  out.tail = two_term(ctx, out.B, zero_rep(A), zero_map(out.B, zero_rep(A)));
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t a = r.A.dims[v], c = r.C.dims[v], e = E.dims[v], b = r.B.dims[v], m1 = r.M.comps[0].dims[v];
    // iota: old rows (A | C) with zero rows for E in between
    const Matrix& io = r.iota.at[v];
    out.iota.at[v] = vstack(vstack(submatrix(io, 0, 0, a, m1), Matrix(e, m1)), submatrix(io, a, 0, c, m1));
    // pi: [pi_A 0 pi_C ; 0 1 0]
    const Matrix& p = r.pi.at[v];
    const Matrix top = hstack(hstack(submatrix(p, 0, 0, b, a), Matrix(b, e)), submatrix(p, 0, a, b, c));
    const Matrix bottom = hstack(hstack(Matrix(e, a), Matrix::identity(e)), Matrix(e, c));
    out.pi.at[v] = vstack(top, bottom);
    out.pi.at[n + v] = Matrix(0, c);
  }
  return out;
}

ResolutionMultiplicities minimal_multiplicities(CxContext& ctx, const InjectiveResolution& r) {
  const auto& A = ctx.base();
  RepMap s_part;
  for (std::size_t v = 0; v < ctx.n(); ++v) s_part.at.push_back(submatrix(r.pi.at[v], 0, 0, r.B.dims[v], r.A.dims[v]));
  const DimVec R = top_rank(A, s_part, r.A, r.B);
  ResolutionMultiplicities out{projective_multiplicity(A, r.A), projective_multiplicity(A, r.B),
                               projective_multiplicity(A, r.C)};
  for (std::size_t i = 0; i < ctx.n(); ++i) {
    out.a[i] -= R[i];
    out.b[i] -= R[i];
  }
  return out;
}

KVec dim_vec(CxContext& ctx, const Cx& M) {
  const auto mult = minimal_multiplicities(ctx, injective_resolution_c2(ctx, M));
  KVec out = minus(mult.b, mult.a);
  for (auto c : mult.c) out.push_back(static_cast<std::int64_t>(c));
  return out;
}

C2Coords grothendieck_coords(CxContext& ctx, const Cx& M) {
  const auto mult = minimal_multiplicities(ctx, injective_resolution_c2(ctx, M));
  return {minus(mult.a, mult.b), kvec(mult.c)};
}

std::string to_string(const TorusElt& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : x.terms()) {
    if (!s.empty()) s += " + ";
    s += c.get_str() + "*X^(";
    for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
    s += ")";
  }
  return s;
}

QuantumTorus::QuantumTorus(CxContext& ctx) : p_(ctx.base().p()) {
  const std::size_t n = ctx.n();
  // Euler form on the basis S_{P_1..n}, J_{P_1..n}; dim S_P = (-e_i | 0), dim J_P = (0 | e_i)
  std::vector<Cx> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(make_Sp(ctx, ctx.projective_rep(i), 2));
  for (std::size_t i = 0; i < n; ++i) basis.push_back(make_Jp(ctx, ctx.projective_rep(i), 2));
  auto sign = [n](std::size_t i) { return i < n ? -1 : 1; };
  L_.assign(2 * n, std::vector<std::int64_t>(2 * n, 0));
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) L_[i][j] = sign(i) * sign(j) * euler_form_cm(ctx, basis[i], basis[j]);
}

std::int64_t QuantumTorus::lambda(const KVec& e, const KVec& f) const {
  if (e.size() != L_.size() || f.size() != L_.size()) throw std::domain_error("torus exponent has wrong length");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < f.size(); ++j) s += e[i] * L_[i][j] * f[j];
  return s;
}

TorusElt QuantumTorus::product(const TorusElt& x, const TorusElt& y) const {
  TorusElt out;
  for (const auto& [e, a] : x.terms())
    for (const auto& [f, b] : y.terms()) {
      KVec g = e;
      for (std::size_t i = 0; i < g.size(); ++i) g[i] += f[i];
      out.add(g, a * b * power_of(p_, -lambda(e, f)));
    }
  return out;
}

TorusElt integrate(ComplexCategory& cat, const HallElt<CxKey>& x) {
  if (cat.kind() != CxKind::window || cat.m() != 2) throw std::domain_error("integration is defined on C^2(P) only");
  TorusElt out;
  for (const auto& [k, c] : x.terms()) out.add(dim_vec(cat.context(), cat.complex(k)), c);
  return out;
}

Report verify_integration(HallAlgebra<ComplexCategory>& H, const QuantumTorus& T, const std::vector<CxKey>& keys,
                          std::uint64_t seed) {
  auto& cat = H.category();
  if (cat.kind() != CxKind::window || cat.m() != 2) throw std::domain_error("integration is defined on C^2(P) only");
  auto& ctx = cat.context();
  const std::size_t n = ctx.n();
  std::mt19937_64 rng(seed);
  Report rep{"integration-7", {}};
  for (const auto& k : keys) {
    const Cx& X = cat.complex(k);
    const auto res = injective_resolution_c2(ctx, X);
    rep.add("resolution exact", to_string(k), is_exact(ctx, res));
    DimVec extra(n);
    for (auto& e : extra) e = rng() % 2;
    const auto padded = pad_resolution(ctx, res, extra);
    rep.add("padded resolution exact", to_string(k), is_exact(ctx, padded));
    rep.add("dim independent of padding", to_string(k),
            minimal_multiplicities(ctx, padded) == minimal_multiplicities(ctx, res));
    const C2Coords co = grothendieck_coords(ctx, X);
    KVec image(co.S.size());
    for (std::size_t i = 0; i < n; ++i) image[i] = -co.S[i];
    image.insert(image.end(), co.J.begin(), co.J.end());
    rep.add("coords map to dim", to_string(k), image == dim_vec(ctx, X));
  }
  for (const auto& x : keys)
    for (const auto& y : keys) {
      const std::string ps = to_string(x) + " " + to_string(y);
      const Cx &X = cat.complex(x), &Y = cat.complex(y);
      const KVec dx = dim_vec(ctx, X), dy = dim_vec(ctx, Y);
      const std::int64_t chi = euler_form_cm(ctx, X, Y);
      rep.add("Lambda is the Euler form", ps, T.lambda(dx, dy) == chi, std::to_string(T.lambda(dx, dy)),
              std::to_string(chi));
      KVec sum = dx;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += dy[i];
      rep.add("coords additive", ps, dim_vec(ctx, cat.complex(cat.direct_sum(x, y))) == sum);
      const auto& prod = H.basis_product(x, y);
      bool additive = true;
      for (const auto& [L, c] : prod) additive = additive && dim_vec(ctx, cat.complex(L)) == sum;
      rep.add("dim additive on extensions", ps, additive);
      const TorusElt lhs = integrate(cat, H.product(H.basis(x), H.basis(y)));
      const TorusElt rhs = T.product(integrate(cat, H.basis(x)), integrate(cat, H.basis(y)));
      rep.add("integration is multiplicative", ps, lhs == rhs, to_string(lhs), to_string(rhs));
    }
  return rep;
}

}  // namespace hallcx
