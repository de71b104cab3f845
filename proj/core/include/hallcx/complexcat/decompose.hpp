#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hallcx/complexcat/complex.hpp"

namespace hallcx {

/// C: C_M[r] (cyclic, bounded); K: K_P[r] (cyclic, bounded); S: S_P, T: T_M[r]
/// and J: J_P[r] (window). For K, S and J the class is an indecomposable projective.
enum class LabelKind { C, K, S, T, J };

char to_char(LabelKind k);

struct Label {
  LabelKind kind = LabelKind::C;
  std::int64_t r = 0;
  RepClassId cls;
  auto operator<=>(const Label&) const = default;
  bool operator==(const Label&) const = default;
};

/// Canonical iso-class key of a complex: its category and the sorted multiset
/// of indecomposable summands.
struct CxKey {
  CxKind kind = CxKind::bounded;
  std::size_t m = 0;
  std::vector<Label> labels;
  auto operator<=>(const CxKey&) const = default;
  bool operator==(const CxKey&) const = default;
};

std::string to_string(const Label& l);
std::string to_string(const CxKey& k);

bool is_contractible(const Label& l);
/// Shift range allowed for a label kind in the given category.
bool label_in_range(const CxKey& k, const Label& l);

Cx realize(CxContext& ctx, CxKind kind, std::size_t m, const Label& l);
Cx realize(CxContext& ctx, const CxKey& k);
/// Shape holding the realization of k (window and cyclic shapes are fixed).
CxShape key_shape(CxContext& ctx, const CxKey& k);

/// Splits every component as ker d (+) a lift of im d, which cuts X into
/// two-term pieces; each piece is an injective map of projectives that splits
/// as a minimal resolution plus an identity. With `verify`, the realized key is
/// checked against X and an InconsistencyError thrown on mismatch.
CxKey decompose(CxContext& ctx, const Cx& X, bool verify = true);

struct Minimized {
  Cx core;
  CxKey core_key;
  /// K_P[r] (cyclic, bounded) or J_P[r] (window) summands split off.
  std::vector<Label> stripped;
};
/// The core is the realization of the non-contractible labels, so it is
/// isomorphic to (not a literal subcomplex of) the input minus its contractibles.
Minimized minimize(CxContext& ctx, const Cx& X);

/// Component dimension vectors of a key's realization, position by position
/// (bounded keys are reported on key_shape).
std::vector<DimVec> key_profile(CxContext& ctx, const CxKey& k);
std::vector<DimVec> profile(const Cx& X);

/// Every key whose realization has exactly the given component dims on the
/// given shape (bounded keys must fit inside the shape).
std::vector<CxKey> keys_with_profile(CxContext& ctx, const CxShape& s, const std::vector<DimVec>& dims);

/// Every key with at most `max_summands` indecomposable summands built from
/// indecomposables with dims <= dmax. Bounded keys use shifts in [r_lo, r_hi].
std::vector<CxKey> key_grid(CxContext& ctx, CxKind kind, std::size_t m, const DimVec& dmax, std::size_t max_summands,
                            std::int64_t r_lo = 0, std::int64_t r_hi = 0);

}  // namespace hallcx
