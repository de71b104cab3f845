#include "hallcx/localized/mh.hpp"

#include <algorithm>
#include <stdexcept>

#include "hallcx/complexcat/cxhom.hpp"
#include "hallcx/quiverrep/projective.hpp"

namespace hallcx {

KVec kvec(const DimVec& d) { return KVec(d.begin(), d.end()); }

void TorusExp::add(std::int64_t level, const KVec& a, std::int64_t sign) {
  if (std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; })) return;
  auto [it, fresh] = at.try_emplace(level, KVec(a.size(), 0));
  KVec& v = it->second;
  if (v.size() != a.size()) throw std::domain_error("torus exponents of different rank");
  for (std::size_t i = 0; i < a.size(); ++i) v[i] += sign * a[i];
  if (std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; })) at.erase(it);
}

TorusExp& TorusExp::operator+=(const TorusExp& o) {
  for (const auto& [r, a] : o.at) add(r, a);
  return *this;
}

TorusExp TorusExp::operator-() const {
  TorusExp t;
  for (const auto& [r, a] : at) t.add(r, a, -1);
  return t;
}

std::string to_string(const TorusExp& t) {
  std::string s;
  for (const auto& [r, a] : t.at) {
    s += "K(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    s += ";" + std::to_string(r) + ")";
  }
  return s;
}

std::string to_string(const MHKey& k) {
  std::string s = to_string(k.torus);
  if (!k.core.labels.empty()) s += (s.empty() ? "" : "*") + ("[" + to_string(k.core) + "]");
  return s.empty() ? "1" : s;
}

std::string to_string(const MHElt& x) {
  if (x.is_zero()) return "0";
  std::string s;
  for (const auto& [k, c] : x.terms()) s += (s.empty() ? "" : " + ") + c.get_str() + " " + to_string(k);
  return s;
}

std::string to_string(const GenSym& g) {
  auto vec = [](const KVec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
  };
  switch (g.tag) {
    case GenSym::Tag::E: return "E(" + to_string(g.M) + "," + std::to_string(g.r) + ")";
    case GenSym::Tag::K: return "K(" + vec(g.alpha) + "," + std::to_string(g.r) + ")";
    case GenSym::Tag::X: return "X(" + to_string(g.M) + "," + std::to_string(g.r) + ")";
    case GenSym::Tag::Xproj: return "Xproj(" + to_string(g.M) + ")";
    case GenSym::Tag::J: return "J(" + vec(g.alpha) + "," + std::to_string(g.r) + ")";
    case GenSym::Tag::Z: return "Z(" + to_string(g.M) + "," + std::to_string(g.r) + ")";
  }
  return "?";
}

MHAlgebra::MHAlgebra(CxContext& ctx, CxKind kind, std::size_t m, bool verify_keys)
    : ctx_(ctx), cat_(ctx, kind, m, verify_keys), hall_(cat_) {}

std::unique_ptr<MHAlgebra> MHAlgebra::bounded(CxContext& ctx, bool verify_keys) {
  return std::unique_ptr<MHAlgebra>(new MHAlgebra(ctx, CxKind::bounded, 0, verify_keys));
}

std::unique_ptr<MHAlgebra> MHAlgebra::window(CxContext& ctx, std::size_t m, bool verify_keys) {
  if (m == 0) throw std::domain_error("MH_m needs m >= 1");
  return std::unique_ptr<MHAlgebra>(new MHAlgebra(ctx, CxKind::window, m, verify_keys));
}

MHElt MHAlgebra::one() const { return MHElt::basis({{}, cat_.zero()}); }

MHElt MHAlgebra::torus(const TorusExp& t) const { return MHElt::basis({t, cat_.zero()}); }

MHKey MHAlgebra::normalize(const CxKey& k) {
  MHKey out{{}, cat_.zero()};
  const bool all_injective = is_window() && m() == 1;
  for (const auto& l : k.labels) {
    if (is_contractible(l) || (all_injective && l.kind == LabelKind::S)) {
      out.torus.add(l.r, kvec(l.cls.dims));
    } else {
      out.core.labels.push_back(l);
    }
  }
  return out;
}

MHElt MHAlgebra::element(const CxKey& k) { return MHElt::basis(normalize(k)); }

std::int64_t MHAlgebra::euler(const CxKey& a, const CxKey& b) {
  {
    std::lock_guard lock(mu_);
    auto it = euler_.find({a, b});
    if (it != euler_.end()) return it->second;
  }
  const std::int64_t e = euler_form_components(ctx_, cat_.complex(a), cat_.complex(b));
  std::lock_guard lock(mu_);
  euler_[{a, b}] = e;
  return e;
}

MHElt MHAlgebra::product(const MHElt& x, const MHElt& y) {
  MHElt out;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      const TorusExp t = kx.torus + ky.torus;
      const Rational c = cx * cy * power_of(p(), euler(kx.core, ky.core));
      for (const auto& [L, cl] : hall_.basis_product(kx.core, ky.core)) {
        MHKey k = normalize(L);
        k.torus += t;
        out.add(k, c * cl);
      }
    }
  return out;
}

MHElt MHAlgebra::product(const std::vector<MHElt>& xs) {
  MHElt acc = one();
  for (const auto& x : xs) acc = product(acc, x);
  return acc;
}

KVec MHAlgebra::omega(const RepClassId& M) { return kvec(ctx_.resolution(M).Omega.dims); }

std::vector<Label> MHAlgebra::labels_of(const RepClassId& M, LabelKind kind, std::int64_t r) {
  std::vector<Label> out;
  for (const auto& s : catalog().summands(M)) out.push_back({kind, r, s});
  return out;
}

MHElt MHAlgebra::gen(const GenSym& g) {
  using Tag = GenSym::Tag;
  const bool window_tag = g.tag == Tag::X || g.tag == Tag::Xproj || g.tag == Tag::J;
  if (window_tag != is_window())
    throw std::domain_error(to_string(g) + (is_window() ? " is not a generator of MH_m" : " is not a generator of MH"));
  const auto sm = static_cast<std::int64_t>(m());
  if ((g.tag == Tag::X || g.tag == Tag::J) && (g.r < 0 || g.r + 1 >= sm))
    throw std::domain_error(to_string(g) + ": level must lie in 0..m-2");
  if ((g.tag == Tag::K || g.tag == Tag::J) && g.alpha.size() != ctx_.n())
    throw std::domain_error(to_string(g) + ": class has the wrong rank");

  switch (g.tag) {
    case Tag::K:
    case Tag::J: {
      TorusExp t;
      t.add(g.r, g.alpha);
      return torus(t);
    }
    case Tag::E:
    case Tag::X: {
      MHKey k{{}, cat_.zero()};
      k.torus.add(g.r, omega(g.M), -1);
      k.core.labels = labels_of(g.M, g.tag == Tag::E ? LabelKind::C : LabelKind::T, g.r);
      std::sort(k.core.labels.begin(), k.core.labels.end());
      return MHElt::basis(k);
    }
    case Tag::Xproj: {
      if (!is_projective(ctx_.base(), catalog().rep(g.M))) throw std::domain_error(to_string(g) + ": P must be projective");
      CxKey k = cat_.zero();
      k.labels = labels_of(g.M, LabelKind::S, 0);
      std::sort(k.labels.begin(), k.labels.end());
      return element(k);
    }
    case Tag::Z: {
      const KVec Mhat = kvec(g.M.dims);
      TorusExp t;
      const std::int64_t n = g.r < 0 ? -g.r : g.r;
      for (std::int64_t i = 1; i <= n; ++i) t.add(g.r > 0 ? n - i : -(n - i + 1), Mhat, i % 2 ? -1 : 1);
      return product(E(g.M, g.r), torus(t));
    }
  }
  throw std::logic_error("unknown generator");
}

}  // namespace hallcx
