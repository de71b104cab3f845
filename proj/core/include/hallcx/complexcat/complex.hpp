#pragma once

#include <compare>
#include <functional>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

#include "hallcx/quiverrep/catalog.hpp"
#include "hallcx/quiverrep/hom.hpp"
#include "hallcx/quiverrep/projective.hpp"
#include "hallcx/quiverrep/rep.hpp"

namespace hallcx {

/// cyclic: Z_m-graded with the wraparound differential; window: degrees 1..m;
/// bounded: an arbitrary finite degree range.
enum class CxKind { cyclic, window, bounded };

std::string to_string(CxKind k);

/// Which flattened algebra a complex lives on.
struct CxShape {
  CxKind kind = CxKind::bounded;
  std::size_t m = 0;     // period (cyclic) or window length; 0 for bounded
  std::int64_t lo = 0;   // degree of the first component
  std::size_t len = 0;   // number of components
  auto operator<=>(const CxShape&) const = default;
  bool operator==(const CxShape&) const = default;
  std::int64_t hi() const noexcept { return lo + static_cast<std::int64_t>(len) - 1; }
  /// Number of differentials: len for cyclic, len - 1 otherwise.
  std::size_t diff_count() const noexcept;
};

/// A complex of representations. comps[k] sits in degree lo + k; diffs[k]
/// maps comps[k] to comps[k + 1] (to comps[0] for the last cyclic one).
struct Cx {
  CxShape shape;
  std::vector<Rep> comps;
  std::vector<RepMap> diffs;

  std::int64_t degree(std::size_t k) const noexcept { return shape.lo + static_cast<std::int64_t>(k); }
  /// Component in degree i (zero outside the range; reduced mod m when cyclic).
  Rep component(const PathAlgebra& A, std::int64_t i) const;
  bool operator==(const Cx&) const = default;
};

/// Base algebra, its iso-class catalog and the flattened algebras of complexes.
/// A complex of shape s is a representation of the quiver with one copy of Q
/// per degree, an arrow per (degree, vertex) for the differential, and
/// relations for commutativity and d o d = 0.
class CxContext {
 public:
  explicit CxContext(PathAlgebra A, std::uint64_t budget = kDefaultBudget);

  const PathAlgebra& base() const noexcept { return A_; }
  RepCatalog& catalog() noexcept { return catalog_; }
  std::uint64_t budget() const noexcept { return catalog_.budget(); }
  const PrimeField& field() const noexcept { return A_.field(); }
  std::size_t n() const noexcept { return A_.n(); }

  const PathAlgebra& flat_algebra(const CxShape& s);

  Rep flatten(const Cx& X) const;
  Cx unflatten(const CxShape& s, const Rep& R) const;
  std::size_t flat_vertex(std::size_t k, std::size_t v) const noexcept { return k * n() + v; }

  /// Indecomposable projective at vertex i, and the minimal resolution of
  /// the catalog representative of a class (both cached).
  const Rep& projective_rep(std::size_t i);
  const ProjResolution& resolution(const RepClassId& id);

 private:
  PathAlgebra A_;
  RepCatalog catalog_;
  std::recursive_mutex mu_;
  std::map<CxShape, std::unique_ptr<PathAlgebra>> flats_;
  std::map<std::size_t, Rep> projectives_;
  std::map<RepClassId, std::unique_ptr<ProjResolution>> resolutions_;
};

CxShape cyclic_shape(std::size_t m);
CxShape window_shape(std::size_t m);
CxShape bounded_shape(std::int64_t lo, std::size_t len);

Cx zero_cx(const CxContext& ctx, const CxShape& s);
/// Throws std::domain_error unless shapes match, differentials are morphisms,
/// d o d = 0 and (when `projective`) every component is projective.
void validate(CxContext& ctx, const Cx& X, bool projective = true);

/// X[t]: X_i = M_{i+t}, differential (-1)^t d_{i+t}. Window complexes must stay
/// inside degrees 1..m (std::domain_error otherwise).
Cx shift(CxContext& ctx, const Cx& X, std::int64_t t);

/// Bounded complexes only: extend with zero components to [lo, hi], or drop
/// zero components at both ends.
Cx pad(const CxContext& ctx, const Cx& X, std::int64_t lo, std::int64_t hi);
Cx trim(const CxContext& ctx, const Cx& X);
/// Smallest shape holding both (identical unless bounded).
CxShape common_shape(const CxShape& a, const CxShape& b);
Cx reshape(const CxContext& ctx, const Cx& X, const CxShape& s);

Cx direct_sum(const CxContext& ctx, const Cx& X, const Cx& Y);

/// C_f for f : Q -> P. m = 0 builds the bounded complex Q -> P in degrees -1, 0.
Cx make_Cf(CxContext& ctx, const RepMap& f, const Rep& Q, const Rep& P, std::size_t m);
Cx make_Kp(CxContext& ctx, const Rep& P, std::size_t m);
/// Window complexes (m >= 1; T_f and J_P need m >= 2).
Cx make_Tf(CxContext& ctx, const RepMap& f, const Rep& Q, const Rep& P, std::size_t m);
Cx make_Jp(CxContext& ctx, const Rep& P, std::size_t m);
Cx make_Sp(CxContext& ctx, const Rep& P, std::size_t m);
Cx make_Tp(CxContext& ctx, const Rep& P, std::size_t m);
/// Built from the minimal projective resolution of M.
Cx make_CM(CxContext& ctx, const Rep& M, std::size_t m);
Cx make_TM(CxContext& ctx, const Rep& M, std::size_t m);

/// The bounded complex X[m] for a window complex X (degrees 1-m..0).
Cx window_to_bounded(CxContext& ctx, const Cx& X);

bool is_isomorphic(CxContext& ctx, const Cx& X, const Cx& Y);
/// Conjugates X by a random chain automorphism.
Cx scramble(CxContext& ctx, const Cx& X, std::mt19937_64& rng);

/// Visits every complex of the given shape with the given components
/// (all differentials with d o d = 0).
template <class Visit>
void for_each_complex(CxContext& ctx, const CxShape& s, const std::vector<Rep>& comps, Visit&& visit) {
  const auto& A = ctx.base();
  const std::size_t dc = s.diff_count();
  Cx X = zero_cx(ctx, s);
  X.comps = comps;
  std::vector<std::vector<RepMap>> bases;
  for (std::size_t k = 0; k < dc; ++k) bases.push_back(hom_basis(A, comps[k], comps[(k + 1) % s.len]));
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == dc) {
      for (std::size_t j = 0; j + 1 < dc || (s.kind == CxKind::cyclic && j < dc); ++j)
        if (!is_zero(compose(A, X.diffs[(j + 1) % dc], X.diffs[j]))) return;
      visit(static_cast<const Cx&>(X));
      return;
    }
    for_each_combination(A, bases[k], zero_map(comps[k], comps[(k + 1) % s.len]), ctx.budget(),
                         [&](const RepMap& f, const auto&) {
                           X.diffs[k] = f;
                           go(k + 1);
                           return true;
                         });
  };
  go(0);
}

}  // namespace hallcx
