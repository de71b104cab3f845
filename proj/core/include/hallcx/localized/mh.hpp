#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hallcx/hallcore/hall.hpp"

namespace hallcx {

/// A class in K(A) = Z^n, given by a signed dimension vector.
using KVec = std::vector<std::int64_t>;

KVec kvec(const DimVec& d);

/// Exponent of a torus monomial prod_r K_{alpha_r, r} (or J_{alpha_r, r}).
struct TorusExp {
  std::map<std::int64_t, KVec> at;  // no zero vectors

  void add(std::int64_t level, const KVec& a, std::int64_t sign = 1);
  TorusExp& operator+=(const TorusExp& o);
  friend TorusExp operator+(TorusExp a, const TorusExp& b) { return a += b; }
  TorusExp operator-() const;
  bool is_zero() const noexcept { return at.empty(); }
  auto operator<=>(const TorusExp&) const = default;
  bool operator==(const TorusExp&) const = default;
};

std::string to_string(const TorusExp& t);

/// Basis element K_t * [core] with a contractible-free core.
struct MHKey {
  TorusExp torus;
  CxKey core;
  auto operator<=>(const MHKey&) const = default;
  bool operator==(const MHKey&) const = default;
};

using MHElt = HallElt<MHKey>;

std::string to_string(const MHKey& k);
std::string to_string(const MHElt& x);

/// Generator symbols: E(M, r), K(alpha, r), X(M, r), Xproj(P), J(alpha, r), Z(M, r).
struct GenSym {
  enum class Tag { E, K, X, Xproj, J, Z };
  Tag tag = Tag::E;
  RepClassId M;  // unused for K and J
  KVec alpha;    // K and J only
  std::int64_t r = 0;
  auto operator<=>(const GenSym&) const = default;
  bool operator==(const GenSym&) const = default;
};

std::string to_string(const GenSym& g);

/// MH(A) (localized twisted Hall algebra of bounded complexes) or MH_m(A)
/// (of window complexes). Products twist by q^{<X, Y>} and then move every
/// contractible summand into the torus part.
class MHAlgebra {
 public:
  static std::unique_ptr<MHAlgebra> bounded(CxContext& ctx, bool verify_keys = true);
  static std::unique_ptr<MHAlgebra> window(CxContext& ctx, std::size_t m, bool verify_keys = true);

  CxContext& context() noexcept { return ctx_; }
  RepCatalog& catalog() noexcept { return ctx_.catalog(); }
  bool is_window() const noexcept { return cat_.kind() == CxKind::window; }
  std::size_t m() const noexcept { return cat_.m(); }
  std::uint64_t p() const noexcept { return cat_.p(); }
  ComplexCategory& category() noexcept { return cat_; }
  HallAlgebra<ComplexCategory>& hall() noexcept { return hall_; }

  MHElt one() const;
  /// The class [X] of a complex, in normal form.
  MHElt element(const CxKey& k);
  MHKey normalize(const CxKey& k);
  MHElt torus(const TorusExp& t) const;

  MHElt product(const MHElt& x, const MHElt& y);
  MHElt product(const std::vector<MHElt>& xs);

  /// Euler form of the ambient category between classes (component formula).
  std::int64_t euler(const CxKey& a, const CxKey& b);

  MHElt gen(const GenSym& g);
  MHElt E(const RepClassId& M, std::int64_t r) { return gen({GenSym::Tag::E, M, {}, r}); }
  MHElt K(const KVec& alpha, std::int64_t r) { return gen({GenSym::Tag::K, {}, alpha, r}); }
  MHElt X(const RepClassId& M, std::int64_t r) { return gen({GenSym::Tag::X, M, {}, r}); }
  MHElt Xproj(const RepClassId& P) { return gen({GenSym::Tag::Xproj, P, {}, 0}); }
  MHElt J(const KVec& alpha, std::int64_t r) { return gen({GenSym::Tag::J, {}, alpha, r}); }
  MHElt Z(const RepClassId& M, std::int64_t r) { return gen({GenSym::Tag::Z, M, {}, r}); }

 private:
  MHAlgebra(CxContext& ctx, CxKind kind, std::size_t m, bool verify_keys);
  std::vector<Label> labels_of(const RepClassId& M, LabelKind kind, std::int64_t r);
  KVec omega(const RepClassId& M);

  CxContext& ctx_;
  ComplexCategory cat_;
  HallAlgebra<ComplexCategory> hall_;
  std::mutex mu_;
  std::map<std::pair<CxKey, CxKey>, std::int64_t> euler_;
};

}  // namespace hallcx
