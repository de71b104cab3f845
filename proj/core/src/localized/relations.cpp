#include "hallcx/localized/relations.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "hallcx/hallcore/theorem.hpp"
#include "hallcx/quiverrep/ext.hpp"
#include "hallcx/quiverrep/projective.hpp"

namespace hallcx {

void Report::add(std::string relation, std::string params, const MHElt& lhs, const MHElt& rhs) {
  const bool pass = lhs == rhs;
  checks.push_back({std::move(relation), std::move(params), pass, pass ? "" : to_string(lhs), pass ? "" : to_string(rhs)});
}

void Report::add(std::string relation, std::string params, bool pass, std::string lhs, std::string rhs) {
  checks.push_back({std::move(relation), std::move(params), pass, std::move(lhs), std::move(rhs)});
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.pass; }));
}

namespace {

std::string params(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
  return s;
}

std::string lv(const char* name, std::int64_t r) { return std::string(name) + "=" + std::to_string(r); }

std::int64_t chi_A(MHAlgebra& mh, const RepClassId& M, const RepClassId& N) {
  return euler_form(mh.context().base().quiver(), M.dims, N.dims);
}

KVec kdiff(const DimVec& a, const DimVec& b) {
  KVec v = kvec(a);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= static_cast<std::int64_t>(b[i]);
  return v;
}

std::vector<KVec> sample_classes_of_K(const std::vector<RepClassId>& classes) {
  std::set<KVec> out;
  for (const auto& c : classes) {
    KVec v = kvec(c.dims);
    out.insert(v);
    for (auto& x : v) x = -x;
    out.insert(v);
  }
  return {out.begin(), out.end()};
}

std::string kstr(const KVec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

KVec ksum(const KVec& a, const KVec& b) {
  KVec v = a;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b[i];
  return v;
}

// sum over f : M -> N of q^{-<M,N>} #f  Y(.,r) * X(.,r+1) * torus(M - X at level r)
template <class Lo, class Up>
MHElt gamma_side(MHAlgebra& mh, RepCatalog& cat, const RepClassId& M, const RepClassId& N, std::int64_t r, Lo&& lower,
                 Up&& upper) {
  MHElt rhs;
  const Rational twist = power_of(mh.p(), -chi_A(mh, M, N));
  for (const auto& [xy, count] : kernel_cokernel_counts(cat, M, N)) {
    const auto& [X, Y] = xy;
    const Rational g = gamma_count(cat, M, N, X, Y);
    const Rational coef = twist * g * rational_of(cat.aut(M)) * rational_of(cat.aut(N)) /
                          (rational_of(cat.aut(X)) * rational_of(cat.aut(Y)));
    TorusExp t;
    t.add(r, kdiff(M.dims, X.dims));
    rhs += coef * mh.product({lower(Y), upper(X), mh.torus(t)});
  }
  return rhs;
}

}  // namespace

Report verify_relations_55(MHAlgebra& mh, const std::vector<RepClassId>& classes, LevelRange levels) {
  if (mh.is_window()) throw std::domain_error("relations of MH(A) need the bounded algebra");
  auto& cat = mh.catalog();
  ModuleCategory mc(cat);
  HallAlgebra<ModuleCategory> H(mc);
  Report rep{"rel-5-5", {}};
  const auto alphas = sample_classes_of_K(classes);
  for (const auto& M : classes)
    for (const auto& N : classes) {
      const std::int64_t chi = chi_A(mh, M, N);
      for (std::int64_t r = levels.lo; r <= levels.hi; ++r) {
        const std::string ps = params({"M=" + to_string(M), "N=" + to_string(N), lv("r", r)});
        MHElt rhs;
        for (const auto& [L, c] : H.basis_product(M, N)) rhs += power_of(mh.p(), chi) * c * mh.E(L, r);
        rep.add("5.9", ps, mh.product(mh.E(M, r), mh.E(N, r)), rhs);
        if (r + 1 <= levels.hi)
          rep.add("5.10", ps, mh.product(mh.E(M, r + 1), mh.E(N, r)),
                  gamma_side(
                      mh, cat, M, N, r, [&](const RepClassId& Y) { return mh.E(Y, r); },
                      [&](const RepClassId& X) { return mh.E(X, r + 1); }));
        for (std::int64_t l = levels.lo; l + 1 < r; ++l) {
          const std::int64_t e = (r - l) % 2 ? -chi : chi;
          rep.add("5.11", params({ps, lv("l", l)}), mh.product(mh.E(M, r), mh.E(N, l)),
                  power_of(mh.p(), e) * mh.product(mh.E(N, l), mh.E(M, r)));
        }
      }
    }
  for (const auto& M : classes)
    for (const auto& a : alphas)
      for (std::int64_t r = levels.lo; r <= levels.hi; ++r)
        for (std::int64_t l = levels.lo; l <= levels.hi; ++l)
          rep.add("5.12", params({"a=" + kstr(a), "M=" + to_string(M), lv("r", r), lv("l", l)}),
                  mh.product(mh.K(a, r), mh.E(M, l)), mh.product(mh.E(M, l), mh.K(a, r)));
  for (const auto& a : alphas)
    for (const auto& b : alphas)
      for (std::int64_t r = levels.lo; r <= levels.hi; ++r) {
        const std::string ps = params({"a=" + kstr(a), "b=" + kstr(b), lv("r", r)});
        rep.add("5.13", ps, mh.product(mh.K(a, r), mh.K(b, r)), mh.K(ksum(a, b), r));
        for (std::int64_t l = levels.lo; l <= levels.hi; ++l)
          rep.add("5.13", params({ps, lv("l", l)}), mh.product(mh.K(a, r), mh.K(b, l)),
                  mh.product(mh.K(b, l), mh.K(a, r)));
      }
  return rep;
}

Report verify_relations_64(MHAlgebra& mhm, const std::vector<RepClassId>& classes) {
  if (!mhm.is_window() || mhm.m() < 2) throw std::domain_error("relations of MH_m(A) need m >= 2");
  auto& cat = mhm.catalog();
  ModuleCategory mc(cat);
  HallAlgebra<ModuleCategory> H(mc);
  const auto m = static_cast<std::int64_t>(mhm.m());
  std::vector<RepClassId> projs;
  for (const auto& c : classes)
    if (is_projective(mhm.context().base(), cat.rep(c))) projs.push_back(c);
  const auto alphas = sample_classes_of_K(classes);
  Report rep{"rel-6-4", {}};
  for (const auto& M : classes)
    for (const auto& N : classes) {
      const std::int64_t chi = chi_A(mhm, M, N);
      for (std::int64_t r = 0; r + 1 < m; ++r) {
        const std::string ps = params({"M=" + to_string(M), "N=" + to_string(N), lv("r", r)});
        MHElt rhs;
        for (const auto& [L, c] : H.basis_product(M, N)) rhs += power_of(mhm.p(), chi) * c * mhm.X(L, r);
        rep.add("6.8", ps, mhm.product(mhm.X(M, r), mhm.X(N, r)), rhs);
        if (r + 2 < m)
          rep.add("6.9", ps, mhm.product(mhm.X(M, r + 1), mhm.X(N, r)),
                  gamma_side(
                      mhm, cat, M, N, r, [&](const RepClassId& Y) { return mhm.X(Y, r); },
                      [&](const RepClassId& X) { return mhm.X(X, r + 1); }));
        for (std::int64_t l = 0; l + 1 < r; ++l) {
          const std::int64_t e = (r - l) % 2 ? -chi : chi;
          rep.add("6.11", params({ps, lv("l", l)}), mhm.product(mhm.X(M, r), mhm.X(N, l)),
                  power_of(mhm.p(), e) * mhm.product(mhm.X(N, l), mhm.X(M, r)));
        }
      }
    }
  for (const auto& P : projs) {
    for (const auto& Q : projs)
      rep.add("6.8", params({"P=" + to_string(P), "Q=" + to_string(Q)}), mhm.product(mhm.Xproj(P), mhm.Xproj(Q)),
              mhm.Xproj(cat.classify(direct_sum(cat.rep(P), cat.rep(Q)))));
    for (const auto& M : classes) {
      const std::string ps = params({"P=" + to_string(P), "M=" + to_string(M)});
      rep.add("6.10", ps, mhm.product(mhm.Xproj(P), mhm.X(M, m - 2)),
              gamma_side(
                  mhm, cat, P, M, m - 2, [&](const RepClassId& B) { return mhm.X(B, m - 2); },
                  [&](const RepClassId& R) { return mhm.Xproj(R); }));
      const std::int64_t chi = chi_A(mhm, P, M);
      for (std::int64_t r = 0; r + 2 < m; ++r) {
        const std::int64_t e = (m - r - 1) % 2 ? -chi : chi;
        rep.add("6.12", params({ps, lv("r", r)}), mhm.product(mhm.Xproj(P), mhm.X(M, r)),
                power_of(mhm.p(), e) * mhm.product(mhm.X(M, r), mhm.Xproj(P)));
      }
    }
  }
  for (const auto& a : alphas)
    for (std::int64_t r = 0; r + 1 < m; ++r) {
      for (const auto& M : classes)
        for (std::int64_t l = 0; l + 1 < m; ++l)
          rep.add("6.13", params({"a=" + kstr(a), "M=" + to_string(M), lv("r", r), lv("l", l)}),
                  mhm.product(mhm.J(a, r), mhm.X(M, l)), mhm.product(mhm.X(M, l), mhm.J(a, r)));
      for (const auto& P : projs)
        rep.add("6.13", params({"a=" + kstr(a), "P=" + to_string(P), lv("r", r)}),
                mhm.product(mhm.J(a, r), mhm.Xproj(P)), mhm.product(mhm.Xproj(P), mhm.J(a, r)));
      for (const auto& b : alphas) {
        const std::string ps = params({"a=" + kstr(a), "b=" + kstr(b), lv("r", r)});
        rep.add("6.14", ps, mhm.product(mhm.J(a, r), mhm.J(b, r)), mhm.J(ksum(a, b), r));
        for (std::int64_t l = 0; l + 1 < m; ++l)
          rep.add("6.14", params({ps, lv("l", l)}), mhm.product(mhm.J(a, r), mhm.J(b, l)),
                  mhm.product(mhm.J(b, l), mhm.J(a, r)));
      }
    }
  return rep;
}

Report verify_relations_57(MHAlgebra& mh, const std::vector<RepClassId>& classes, LevelRange levels) {
  if (mh.is_window()) throw std::domain_error("derived Hall relations live in MH(A)");
  auto& cat = mh.catalog();
  ModuleCategory mc(cat);
  HallAlgebra<ModuleCategory> H(mc);
  Report rep{"rel-5-7", {}};
  for (const auto& M : classes)
    for (const auto& N : classes) {
      const std::int64_t chi = chi_A(mh, M, N);
      for (std::int64_t r = levels.lo; r <= levels.hi; ++r) {
        const std::string ps = params({"M=" + to_string(M), "N=" + to_string(N), lv("r", r)});
        MHElt rhs;
        for (const auto& [L, c] : H.basis_product(M, N)) rhs += power_of(mh.p(), chi) * c * mh.Z(L, r);
        rep.add("5.14", ps, mh.product(mh.Z(M, r), mh.Z(N, r)), rhs);
        if (r + 1 <= levels.hi) {
          MHElt side;
          const Rational twist = power_of(mh.p(), -chi);
          for (const auto& [xy, count] : kernel_cokernel_counts(cat, M, N)) {
            const auto& [X, Y] = xy;
            const Rational coef = twist * gamma_count(cat, M, N, X, Y) * rational_of(cat.aut(M)) *
                                  rational_of(cat.aut(N)) / (rational_of(cat.aut(X)) * rational_of(cat.aut(Y)));
            side += coef * mh.product(mh.Z(Y, r), mh.Z(X, r + 1));
          }
          rep.add("5.15", ps, mh.product(mh.Z(M, r + 1), mh.Z(N, r)), side);
        }
        for (std::int64_t l = levels.lo; l + 1 < r; ++l) {
          const std::int64_t e = (r - l) % 2 ? -chi : chi;
          rep.add("5.16", params({ps, lv("l", l)}), mh.product(mh.Z(M, r), mh.Z(N, l)),
                  power_of(mh.p(), e) * mh.product(mh.Z(N, l), mh.Z(M, r)));
        }
      }
    }
  return rep;
}

HallElt<RepClassId> twisted_module_product(HallAlgebra<ModuleCategory>& H, const HallElt<RepClassId>& x,
                                           const HallElt<RepClassId>& y) {
  const auto& A = H.category().catalog().algebra();
  HallElt<RepClassId> out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      const Rational t = ca * cb * power_of(A.p(), euler_form(A.quiver(), a.dims, b.dims));
      for (const auto& [L, c] : H.basis_product(a, b)) out.add(L, t * c);
    }
  return out;
}

MHElt psi_r(MHAlgebra& mh, const HallElt<RepClassId>& x, std::int64_t r) {
  MHElt out;
  for (const auto& [M, c] : x.terms()) out += c * mh.E(M, r);
  return out;
}

MHElt phi_r(MHAlgebra& mhm, const HallElt<RepClassId>& x, std::int64_t r) {
  MHElt out;
  for (const auto& [M, c] : x.terms()) out += c * mhm.X(M, r);
  return out;
}

CxKey lambda_key(const CxKey& w) {
  if (w.kind != CxKind::window || w.m < 2) throw std::domain_error("lambda needs a window key with m >= 2");
  CxKey out{CxKind::bounded, 0, {}};
  for (const auto& l : w.labels) {
    switch (l.kind) {
      case LabelKind::T: out.labels.push_back({LabelKind::C, l.r, l.cls}); break;
      case LabelKind::J: out.labels.push_back({LabelKind::K, l.r, l.cls}); break;
      case LabelKind::S: out.labels.push_back({LabelKind::C, static_cast<std::int64_t>(w.m) - 1, l.cls}); break;
      default: throw std::domain_error("label " + to_string(l) + " is not a window label");
    }
  }
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

MHElt lambda_embed(MHAlgebra& mhm, MHAlgebra& mh, const MHElt& x) {
  if (!mhm.is_window() || mh.is_window()) throw std::domain_error("lambda maps MH_m(A) into MH(A)");
  if (mhm.m() < 2) throw std::domain_error("lambda needs m >= 2");
  MHElt out;
  for (const auto& [k, c] : x.terms()) {
    MHKey img = mh.normalize(lambda_key(k.core));
    img.torus += k.torus;
    out.add(img, c);
  }
  return out;
}

Report verify_embeddings(MHAlgebra& mh, MHAlgebra& mhm, const std::vector<RepClassId>& classes, LevelRange levels) {
  auto& cat = mh.catalog();
  ModuleCategory mc(cat);
  HallAlgebra<ModuleCategory> H(mc);
  Report rep{"embed-psi-lambda-phi", {}};
  const RepClassId zero{DimVec(mh.context().n(), 0), 0};
  const auto m = static_cast<std::int64_t>(mhm.m());
  auto basis = [](const RepClassId& M) { return HallElt<RepClassId>::basis(M); };

  for (std::int64_t r = levels.lo; r <= levels.hi; ++r) {
    rep.add("psi unit", lv("r", r), psi_r(mh, basis(zero), r), mh.one());
    std::set<MHKey> seen;
    bool injective = true;
    for (const auto& M : classes) {
      const MHElt img = psi_r(mh, basis(M), r);
      injective = injective && img.terms().size() == 1 && seen.insert(img.terms().begin()->first).second;
      for (const auto& N : classes)
        rep.add("psi hom", params({"M=" + to_string(M), "N=" + to_string(N), lv("r", r)}),
                psi_r(mh, twisted_module_product(H, basis(M), basis(N)), r),
                mh.product(psi_r(mh, basis(M), r), psi_r(mh, basis(N), r)));
    }
    rep.add("psi injective", lv("r", r), injective);
  }
  for (std::int64_t r = 0; r + 1 < m; ++r) {
    std::set<MHKey> seen;
    bool injective = true;
    for (const auto& M : classes) {
      const MHElt img = phi_r(mhm, basis(M), r);
      injective = injective && img.terms().size() == 1 && seen.insert(img.terms().begin()->first).second;
      for (const auto& N : classes)
        rep.add("phi hom", params({"M=" + to_string(M), "N=" + to_string(N), lv("r", r)}),
                phi_r(mhm, twisted_module_product(H, basis(M), basis(N)), r),
                mhm.product(phi_r(mhm, basis(M), r), phi_r(mhm, basis(N), r)));
      // phi_r = lambda^{-1} o psi_r
      rep.add("phi via lambda", params({"M=" + to_string(M), lv("r", r)}),
              lambda_embed(mhm, mh, phi_r(mhm, basis(M), r)), psi_r(mh, basis(M), r));
    }
    rep.add("phi injective", lv("r", r), injective);
  }

  // lambda on generators, products of generator pairs, and injectivity on every key met
  std::vector<std::pair<std::string, MHElt>> gens;
  std::vector<std::pair<std::string, MHElt>> images;
  for (const auto& M : classes)
    for (std::int64_t r = 0; r + 1 < m; ++r) {
      gens.emplace_back("X(" + to_string(M) + "," + std::to_string(r) + ")", mhm.X(M, r));
      images.emplace_back(gens.back().first, mh.E(M, r));
    }
  for (const auto& M : classes)
    if (is_projective(mh.context().base(), cat.rep(M))) {
      gens.emplace_back("Xproj(" + to_string(M) + ")", mhm.Xproj(M));
      images.emplace_back(gens.back().first, mh.E(M, m - 1));
    }
  for (const auto& a : sample_classes_of_K(classes))
    for (std::int64_t r = 0; r + 1 < m; ++r) {
      gens.emplace_back("J(" + kstr(a) + "," + std::to_string(r) + ")", mhm.J(a, r));
      images.emplace_back(gens.back().first, mh.K(a, r));
    }
  for (std::size_t i = 0; i < gens.size(); ++i)
    rep.add("lambda generator", gens[i].first, lambda_embed(mhm, mh, gens[i].second), images[i].second);
  std::map<MHKey, MHKey> key_image;
  bool injective = true;
  for (const auto& [gx, x] : gens)
    for (const auto& [gy, y] : gens) {
      const MHElt xy = mhm.product(x, y);
      rep.add("lambda hom", gx + " " + gy, lambda_embed(mhm, mh, xy),
              mh.product(lambda_embed(mhm, mh, x), lambda_embed(mhm, mh, y)));
      for (const auto& [k, c] : xy.terms()) {
        const MHElt img = lambda_embed(mhm, mh, MHElt::basis(k));
        key_image.emplace(k, img.terms().begin()->first);
      }
    }
  std::set<MHKey> targets;
  for (const auto& [k, v] : key_image) injective = injective && targets.insert(v).second;
  rep.add("lambda injective", std::to_string(key_image.size()) + " keys", injective);
  return rep;
}

DHTerm psi_hat_inverse(const GenSym& g) {
  DHTerm out;
  if (g.tag == GenSym::Tag::K) {
    out.torus.add(g.r, g.alpha);
    return out;
  }
  if (g.tag != GenSym::Tag::E) throw std::domain_error("psi_hat_inverse is defined on E and K generators");
  const KVec Mhat = kvec(g.M.dims);
  out.z = std::make_pair(g.M, g.r);
  const std::int64_t n = g.r < 0 ? -g.r : g.r;
  if (g.r > 0) {
    for (std::int64_t i = 0; i < n; ++i) out.torus.add(i, Mhat, (n - i - 1) % 2 ? -1 : 1);
  } else if (g.r < 0) {
    for (std::int64_t i = 1; i <= n; ++i) out.torus.add(-i, Mhat, (n - i) % 2 ? -1 : 1);
  }
  return out;
}

MHElt psi_hat(MHAlgebra& mh, const DHTerm& t) {
  const MHElt z = t.z ? mh.Z(t.z->first, t.z->second) : mh.one();
  return mh.product(z, mh.torus(t.torus));
}

bool psi_hat_roundtrip(MHAlgebra& mh, const GenSym& g) {
  if (g.tag == GenSym::Tag::E || g.tag == GenSym::Tag::K) return psi_hat(mh, psi_hat_inverse(g)) == mh.gen(g);
  if (g.tag != GenSym::Tag::Z) throw std::domain_error("round trip is defined for E, K and Z");
  // Psi(Z) = E * K_s; the inverse sends it to Z (x) (t + s), which must be Z (x) 1
  const MHElt z = mh.Z(g.M, g.r);
  const MHElt e = mh.E(g.M, g.r);
  if (z.terms().size() != 1 || e.terms().size() != 1) return false;
  const TorusExp s = z.terms().begin()->first.torus + -e.terms().begin()->first.torus;
  DHTerm back = psi_hat_inverse({GenSym::Tag::E, g.M, {}, g.r});
  back.torus += s;
  return back == DHTerm{std::make_pair(g.M, g.r), {}} && psi_hat(mh, back) == z;
}

Report verify_psi_hat(MHAlgebra& mh, const std::vector<RepClassId>& classes, LevelRange levels) {
  Report rep{"psi-hat", {}};
  for (std::int64_t r = levels.lo; r <= levels.hi; ++r) {
    for (const auto& M : classes) {
      const GenSym e{GenSym::Tag::E, M, {}, r}, z{GenSym::Tag::Z, M, {}, r};
      rep.add("E round trip", to_string(e), psi_hat_roundtrip(mh, e));
      rep.add("Z round trip", to_string(z), psi_hat_roundtrip(mh, z));
    }
    for (const auto& a : sample_classes_of_K(classes)) {
      const GenSym k{GenSym::Tag::K, {}, a, r};
      rep.add("K round trip", to_string(k), psi_hat_roundtrip(mh, k));
    }
  }
  return rep;
}

namespace {

bool is_power_of(const Rational& c, std::uint64_t p) {
  Rational x = c;
  if (x <= 0) return false;
  const Rational P = rational_of(p);
  while (x > 1) x /= P;
  while (x < 1) x *= P;
  return x == 1;
}

// levels and summed module class of each level of a core
std::map<std::int64_t, RepClassId> levels_of(MHAlgebra& mh, const CxKey& core, LabelKind kind) {
  auto& cat = mh.catalog();
  std::map<std::int64_t, Rep> sums;
  for (const auto& l : core.labels) {
    if (l.kind != kind) continue;
    auto [it, fresh] = sums.try_emplace(l.r, cat.rep(l.cls));
    if (!fresh) it->second = direct_sum(it->second, cat.rep(l.cls));
  }
  std::map<std::int64_t, RepClassId> out;
  for (const auto& [r, M] : sums) out[r] = cat.classify(M);
  return out;
}

// products of 2 or 3 generators drawn at random; each must expand in ordered monomials
template <class Expands>
void check_random_words(Report& rep, MHAlgebra& mh, const std::vector<std::pair<std::string, MHElt>>& gens,
                        std::size_t count, std::uint64_t seed, Expands&& expands) {
  if (gens.empty()) return;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t len = 2 + rng() % 2;
    std::vector<MHElt> factors;
    std::string word;
    for (std::size_t i = 0; i < len; ++i) {
      const auto& [name, g] = gens[rng() % gens.size()];
      word += (i ? " " : "") + name;
      factors.push_back(g);
    }
    const MHElt x = mh.product(factors);
    const bool ok = expands(x);
    rep.add("product expands in ordered monomials", word, ok, ok ? "" : to_string(x));
  }
}

}  // namespace

Report basis_check_cb(MHAlgebra& mh, const std::vector<RepClassId>& classes, LevelRange levels,
                      std::size_t random_products, std::uint64_t seed) {
  if (mh.is_window()) throw std::domain_error("basis_check_cb needs MH(A)");
  Report rep{"basis-5-4", {}};
  const std::size_t n = mh.context().n();
  const RepClassId zero{DimVec(n, 0), 0};
  rep.add("empty monomial", "", mh.product(std::vector<MHElt>{}), mh.one());

  // ordered monomial K_t * E_{M_r, r} * E_{M_{r+1}, r+1} * ...
  auto monomial = [&](const TorusExp& t, const std::map<std::int64_t, RepClassId>& Ms) {
    std::vector<MHElt> factors{mh.torus(t)};
    for (const auto& [r, M] : Ms) factors.push_back(mh.E(M, r));
    return mh.product(factors);
  };
  std::map<MHKey, std::string> seen;
  bool independent = true;
  const auto alphas = sample_classes_of_K(classes);
  for (std::int64_t r = levels.lo; r < levels.hi; ++r)
    for (const auto& M0 : classes)
      for (const auto& M1 : classes)
        for (std::size_t ai = 0; ai <= std::min<std::size_t>(alphas.size(), 2); ++ai) {
          TorusExp t;
          if (ai > 0) t.add(r, alphas[ai - 1]);
          std::map<std::int64_t, RepClassId> Ms;
          if (M0 != zero) Ms[r] = M0;
          if (M1 != zero) Ms[r + 1] = M1;
          const std::string ps =
              params({to_string(t), "M0=" + to_string(M0), "M1=" + to_string(M1), lv("r", r)});
          const MHElt x = monomial(t, Ms);
          const bool single = x.terms().size() == 1 && is_power_of(x.terms().begin()->second, mh.p());
          rep.add("ordered monomial is q^a times a basis key", ps, single, single ? "" : to_string(x));
          if (!single) continue;
          // the same monomial can arise from two windows; compare canonical descriptions
          std::string canon = to_string(t);
          for (const auto& [lev, M] : Ms) canon += " " + to_string(M) + "@" + std::to_string(lev);
          auto [it, fresh] = seen.emplace(x.terms().begin()->first, canon);
          if (!fresh && it->second != canon) independent = false;
        }
  rep.add("ordered monomials have distinct keys", std::to_string(seen.size()) + " monomials", independent);

  auto expands = [&](const MHElt& x) {
    for (const auto& [k, c] : x.terms()) {
      const auto Ms = levels_of(mh, k.core, LabelKind::C);
      TorusExp t = k.torus;
      for (const auto& [lev, Ml] : Ms) t.add(lev, kvec(mh.context().resolution(Ml).Omega.dims));
      const MHElt y = monomial(t, Ms);
      if (y.terms().size() != 1 || y.terms().begin()->first != k) return false;
    }
    return true;
  };
  // spanning: every term of a generator product is a multiple of an ordered monomial
  std::vector<std::pair<std::string, MHElt>> gens;
  for (std::int64_t r = levels.lo; r <= levels.hi; ++r) {
    for (const auto& M : classes)
      if (M != zero) gens.emplace_back("E(" + to_string(M) + "," + std::to_string(r) + ")", mh.E(M, r));
    for (std::size_t i = 0; i < std::min<std::size_t>(alphas.size(), 2); ++i)
      gens.emplace_back("K(" + kstr(alphas[i]) + "," + std::to_string(r) + ")", mh.K(alphas[i], r));
  }
  check_random_words(rep, mh, gens, random_products, seed, expands);
  return rep;
}

Report basis_check_cm(MHAlgebra& mhm, const std::vector<RepClassId>& classes, std::size_t random_products,
                      std::uint64_t seed) {
  if (!mhm.is_window()) throw std::domain_error("basis_check_cm needs MH_m(A)");
  Report rep{"basis-6-1", {}};
  auto& cat = mhm.catalog();
  const auto m = static_cast<std::int64_t>(mhm.m());
  const std::size_t n = mhm.context().n();
  const RepClassId zero{DimVec(n, 0), 0};
  std::vector<RepClassId> projs;
  for (const auto& c : classes)
    if (is_projective(mhm.context().base(), cat.rep(c))) projs.push_back(c);

  if (m == 1) {
    // every class is invertible: the algebra is the group algebra of K(A)
    for (const auto& P : projs)
      for (const auto& Q : projs) {
        const MHElt x = mhm.product(mhm.Xproj(P), mhm.Xproj(Q));
        bool torus_only = true;
        for (const auto& [k, c] : x.terms()) torus_only = torus_only && k.core.labels.empty();
        TorusExp t;
        t.add(0, ksum(kvec(P.dims), kvec(Q.dims)));
        rep.add("group algebra", params({"P=" + to_string(P), "Q=" + to_string(Q)}), torus_only && x == mhm.torus(t),
                "", to_string(x));
      }
    return rep;
  }

  auto monomial = [&](const TorusExp& t, const std::map<std::int64_t, RepClassId>& Ms, const RepClassId& P) {
    std::vector<MHElt> factors{mhm.torus(t)};
    for (const auto& [r, M] : Ms) factors.push_back(mhm.X(M, r));
    factors.push_back(mhm.Xproj(P));
    return mhm.product(factors);
  };
  // all choices of M_0..M_{m-2} and P over the sample
  std::map<MHKey, std::string> seen;
  bool independent = true;
  std::vector<std::size_t> idx(static_cast<std::size_t>(m - 1), 0);
  for (;;) {
    for (const auto& P : projs.empty() ? std::vector<RepClassId>{zero} : projs) {
      std::map<std::int64_t, RepClassId> Ms;
      std::string ps;
      for (std::size_t r = 0; r < idx.size(); ++r) {
        if (classes[idx[r]] != zero) Ms[static_cast<std::int64_t>(r)] = classes[idx[r]];
        ps += "M" + std::to_string(r) + "=" + to_string(classes[idx[r]]) + " ";
      }
      ps += "P=" + to_string(P);
      const MHElt x = monomial({}, Ms, P);
      const bool single = x.terms().size() == 1 && is_power_of(x.terms().begin()->second, mhm.p());
      rep.add("ordered monomial is q^a times a basis key", ps, single, single ? "" : to_string(x));
      if (!single) continue;
      auto [it, fresh] = seen.emplace(x.terms().begin()->first, ps);
      if (!fresh && it->second != ps) independent = false;
    }
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < classes.size()) break;
      idx[i] = 0;
    }
    if (i == idx.size()) break;
  }
  rep.add("ordered monomials have distinct keys", std::to_string(seen.size()) + " monomials", independent);

  auto expands = [&](const MHElt& x) {
    for (const auto& [k, c] : x.terms()) {
      const auto Ms = levels_of(mhm, k.core, LabelKind::T);
      const auto Ps = levels_of(mhm, k.core, LabelKind::S);
      TorusExp t = k.torus;
      for (const auto& [lev, Ml] : Ms) t.add(lev, kvec(mhm.context().resolution(Ml).Omega.dims));
      const MHElt y = monomial(t, Ms, Ps.empty() ? zero : Ps.begin()->second);
      if (y.terms().size() != 1 || y.terms().begin()->first != k) return false;
    }
    return true;
  };
  std::vector<std::pair<std::string, MHElt>> gens;
  for (const auto& M : classes)
    for (std::int64_t r = 0; r + 1 < m; ++r)
      if (M != zero) gens.emplace_back("X(" + to_string(M) + "," + std::to_string(r) + ")", mhm.X(M, r));
  for (const auto& P : projs)
    if (P != zero) gens.emplace_back("Xproj(" + to_string(P) + ")", mhm.Xproj(P));
  const auto alphas = sample_classes_of_K(classes);
  for (std::int64_t r = 0; r + 1 < m; ++r)
    for (std::size_t i = 0; i < std::min<std::size_t>(alphas.size(), 2); ++i)
      gens.emplace_back("J(" + kstr(alphas[i]) + "," + std::to_string(r) + ")", mhm.J(alphas[i], r));
  check_random_words(rep, mhm, gens, random_products, seed, expands);
  return rep;
}

}  // namespace hallcx
