#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hallcx/errors.hpp"
#include "hallcx/quiverrep/rep.hpp"

namespace hallcx {

/// Basis of Hom(M, N): solutions of f_t M_a = N_a f_s for every arrow.
std::vector<RepMap> hom_basis(const PathAlgebra& A, const Rep& M, const Rep& N);
std::size_t hom_dim(const PathAlgebra& A, const Rep& M, const Rep& N);

/// Sum of c_i * basis_i.
RepMap combine(const PathAlgebra& A, const std::vector<RepMap>& basis, const std::vector<Elem>& coeffs,
               const Rep& M, const Rep& N);

/// p^k as an integer; throws BudgetExceeded when it exceeds `budget`.
std::uint64_t checked_power(std::uint64_t p, std::size_t k, std::uint64_t budget, const std::string& what);

/// Visits every F_p-linear combination of `basis` (p^k of them, zero first).
/// The element passed to `visit` is updated in place by one basis addition per
/// step. `visit` returns false to stop.
template <class Visit>
void for_each_combination(const PathAlgebra& A, const std::vector<RepMap>& basis, const RepMap& zero,
                          std::uint64_t budget, Visit&& visit) {
  const auto& F = A.field();
  checked_power(F.p(), basis.size(), budget, "linear span enumeration");
  RepMap cur = zero;
  std::vector<Elem> digits(basis.size(), 0);
  for (;;) {
    if (!visit(static_cast<const RepMap&>(cur), static_cast<const std::vector<Elem>&>(digits))) return;
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      // stepping digit i (with wraparound) always adds basis[i] modulo p
      for (std::size_t v = 0; v < cur.at.size(); ++v) axpy(F, cur.at[v], 1, basis[i].at[v]);
      if (++digits[i] == F.p()) {
        digits[i] = 0;
      } else {
        break;
      }
    }
    if (i == digits.size()) return;
  }
}

/// A uniformly random element of the span of `basis`.
RepMap random_combination(const PathAlgebra& A, const std::vector<RepMap>& basis, const Rep& M, const Rep& N,
                          std::mt19937_64& rng);

}  // namespace hallcx
