#pragma once

#include <cstdint>
#include <vector>

#include "hallcx/quiverrep/hom.hpp"

namespace hallcx {

/// Off-diagonal arrow data h_a : M_s -> N_t of an extension 0 -> N -> L -> M -> 0.
using Cocycle = std::vector<Matrix>;

/// Representatives of a basis of Ext^1(M, N): cocycles (solutions of the
/// linearized relations) modulo coboundaries h_a = N_a s_s - s_t M_a.
struct ExtSpace {
  std::vector<Cocycle> basis;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t dim() const noexcept { return basis.size(); }
};

ExtSpace ext1_space(const PathAlgebra& A, const Rep& M, const Rep& N);
std::size_t ext1_dim(const PathAlgebra& A, const Rep& M, const Rep& N);

/// Middle term with N occupying the leading coordinates at every vertex:
/// L_a = [[N_a, h_a], [0, M_a]].
Rep extension(const Rep& M, const Rep& N, const Cocycle& h);

/// Visits every class of Ext^1(M, N) once (p^dim of them), passing the middle term.
template <class Visit>
void for_each_extension(const PathAlgebra& A, const Rep& M, const Rep& N, const ExtSpace& ext,
                        std::uint64_t budget, Visit&& visit) {
  const auto& F = A.field();
  checked_power(F.p(), ext.dim(), budget, "extension enumeration");
  Cocycle h;
  for (const auto& a : A.quiver().arrows()) h.emplace_back(N.dims[a.target], M.dims[a.source]);
  std::vector<Elem> digits(ext.dim(), 0);
  for (;;) {
    if (!visit(extension(M, N, h))) return;
    std::size_t i = 0;
    for (; i < digits.size(); ++i) {
      for (std::size_t ai = 0; ai < h.size(); ++ai) axpy(F, h[ai], 1, ext.basis[i][ai]);
      if (++digits[i] == F.p()) {
        digits[i] = 0;
      } else {
        break;
      }
    }
    if (i == digits.size()) return;
  }
}

/// <dM, dN> = sum_i dM_i dN_i - sum_{a: i->j} dM_i dN_j, for relation-free quivers.
std::int64_t euler_form(const Quiver& Q, const DimVec& dM, const DimVec& dN);

}  // namespace hallcx
