#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hallcx/localized/relations.hpp"

namespace hallcx {

/// 0 -> M -> S_A (+) J_C -> S_B -> 0 in C^2(P). The middle is (A (+) C -> C)
/// with the S block first; iota and pi are chain maps of flattened complexes.
struct InjectiveResolution {
  Cx M, middle, tail;
  Rep A, B, C;
  RepMap iota, pi;
};

/// The resolution with A = M_1, C = B = M_2, iota = (1, d) and pi = (-d, 1).
/// Throws std::domain_error unless M is a 2-term window complex.
InjectiveResolution injective_resolution_c2(CxContext& ctx, const Cx& M);
bool is_exact(CxContext& ctx, const InjectiveResolution& r);
/// Adds S_P -> S_P (identity) for `extra` copies of each indecomposable projective.
InjectiveResolution pad_resolution(CxContext& ctx, const InjectiveResolution& r, const DimVec& extra);

/// Multiplicities (a, b, c) of the minimal resolution: pairs of S summands
/// mapped isomorphically by pi are stripped.
struct ResolutionMultiplicities {
  DimVec a, b, c;
  bool operator==(const ResolutionMultiplicities&) const = default;
};
ResolutionMultiplicities minimal_multiplicities(CxContext& ctx, const InjectiveResolution& r);

/// (b - a | c) in Z^{2n}.
KVec dim_vec(CxContext& ctx, const Cx& M);

/// Coordinates of the class of M in the basis {S_{P_i}} and {J_{P_i}}.
struct C2Coords {
  KVec S, J;
  bool operator==(const C2Coords&) const = default;
};
C2Coords grothendieck_coords(CxContext& ctx, const Cx& M);

using TorusElt = HallElt<KVec>;

std::string to_string(const TorusElt& x);

/// Quantum torus on Z^{2n} with X^e * X^f = q^{-Lambda(e, f)} X^{e+f}, where
/// Lambda is the Euler form of C^2(P) transported along dim.
class QuantumTorus {
 public:
  explicit QuantumTorus(CxContext& ctx);

  std::int64_t lambda(const KVec& e, const KVec& f) const;
  /// 2n x 2n Gram matrix of Lambda on the standard basis.
  const std::vector<std::vector<std::int64_t>>& matrix() const noexcept { return L_; }
  TorusElt monomial(const KVec& e) const { return TorusElt::basis(e); }
  TorusElt product(const TorusElt& x, const TorusElt& y) const;

 private:
  std::uint64_t p_;
  std::vector<std::vector<std::int64_t>> L_;
};

/// [M] -> X^{dim M} on the Hall algebra of C^2(P). The category must be the window category with m = 2.
TorusElt integrate(ComplexCategory& cat, const HallElt<CxKey>& x);

/// Lambda against the Euler form, resolution exactness and padding invariance,
/// additivity on every product term, and the homomorphism property.
Report verify_integration(HallAlgebra<ComplexCategory>& H, const QuantumTorus& T, const std::vector<CxKey>& keys,
                          std::uint64_t seed = 7);

}  // namespace hallcx
