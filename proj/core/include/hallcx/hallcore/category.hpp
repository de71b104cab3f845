#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hallcx/complexcat/decompose.hpp"
#include "hallcx/quiverrep/catalog.hpp"

namespace hallcx {

/// Where a pair of objects and all their extensions are realized as
/// representations of one (possibly flattened) algebra.
struct Ambient {
  const PathAlgebra* algebra = nullptr;
  CxShape shape;  // unused for modules
};

/// rep(kQ) with catalog class ids as keys.
class ModuleCategory {
 public:
  using Key = RepClassId;

  explicit ModuleCategory(RepCatalog& cat) : cat_(cat) {}

  RepCatalog& catalog() noexcept { return cat_; }
  std::uint64_t budget() const noexcept { return cat_.budget(); }
  std::uint64_t p() const noexcept { return cat_.algebra().p(); }

  Ambient ambient(const Key&, const Key&) { return {&cat_.algebra(), {}}; }
  Rep object(const Ambient&, const Key& k) { return cat_.rep(k); }
  Key classify(const Ambient&, const Rep& R) { return cat_.classify(R); }
  Integer aut(const Key& k) { return cat_.aut(k); }
  /// Classes with dimension vector dims(a) + dims(b).
  std::vector<Key> candidates(const Key& a, const Key& b);
  Key zero() { return {DimVec(cat_.algebra().n(), 0), 0}; }
  bool is_zero(const Key& k) const;
  Key direct_sum(const Key& a, const Key& b);
  std::string name(const Key& k) const { return to_string(k); }

 private:
  RepCatalog& cat_;
};

/// C_m(P) (cyclic), C^m(P) (window) or C^b(P) (bounded) with CxKey keys.
class ComplexCategory {
 public:
  using Key = CxKey;

  /// With `verify_keys`, every classification reassembles the key and checks it.
  ComplexCategory(CxContext& ctx, CxKind kind, std::size_t m, bool verify_keys = true);

  CxContext& context() noexcept { return ctx_; }
  CxKind kind() const noexcept { return kind_; }
  std::size_t m() const noexcept { return m_; }
  std::uint64_t budget() const noexcept { return ctx_.budget(); }
  std::uint64_t p() const noexcept { return ctx_.base().p(); }

  Ambient ambient(const Key& a, const Key& b);
  Rep object(const Ambient& amb, const Key& k);
  Key classify(const Ambient& amb, const Rep& R);
  Integer aut(const Key& k);
  /// Keys with the componentwise sum of the two component profiles.
  std::vector<Key> candidates(const Key& a, const Key& b);
  Key zero() const { return {kind_, kind_ == CxKind::bounded ? 0 : m_, {}}; }
  bool is_zero(const Key& k) const { return k.labels.empty(); }
  Key direct_sum(const Key& a, const Key& b) const;
  std::string name(const Key& k) const { return to_string(k); }

  const Cx& complex(const Key& k);

 private:
  CxShape shape_of(const Key& k);

  CxContext& ctx_;
  CxKind kind_;
  std::size_t m_;
  bool verify_;
  std::recursive_mutex mu_;
  std::map<Key, Cx> realized_;
  std::map<Key, Integer> aut_;
};

}  // namespace hallcx
