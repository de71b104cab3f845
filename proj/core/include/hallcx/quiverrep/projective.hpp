#pragma once

#include <vector>

#include "hallcx/quiverrep/rep.hpp"

namespace hallcx {

/// Indecomposable projective at vertex i: the basis at vertex j is the list of
/// paths i -> j, and arrows act by extending paths.
Rep projective(const PathAlgebra& A, std::size_t i);

/// (+)_i P_i^{mult[i]}, summands ordered by vertex.
Rep projective_sum(const PathAlgebra& A, const DimVec& mult);

/// rad(M)_w is spanned by the images of the arrows ending at w.
Subrep radical_subrep(const PathAlgebra& A, const Rep& M);
Rep radical(const PathAlgebra& A, const Rep& M);
Rep top(const PathAlgebra& A, const Rep& M);
DimVec top_dims(const PathAlgebra& A, const Rep& M);

/// For a projective P, the multiplicity of each P_i as a summand (= top dims).
DimVec projective_multiplicity(const PathAlgebra& A, const Rep& P);
bool is_projective(const PathAlgebra& A, const Rep& M);

/// Dimension vector of (+)_i P_i^{mult[i]}.
DimVec projective_dims(const PathAlgebra& A, const std::vector<std::int64_t>& mult);

struct ProjectiveCover {
  Rep P;
  RepMap epi;   // P -> M
  DimVec mult;  // P = (+)_i P_i^{mult[i]}
};

/// Generators are a complement of rad(M) built from standard basis vectors;
/// P_i's trivial path maps to a generator, path p to M_p applied to it.
ProjectiveCover projective_cover(const PathAlgebra& A, const Rep& M);

/// 0 -> Omega --delta--> PM --epi--> M -> 0 with PM the projective cover.
struct ProjResolution {
  Rep Omega;
  Rep PM;
  RepMap delta;
  RepMap epi;
};

ProjResolution min_proj_resolution(const PathAlgebra& A, const Rep& M);

/// Per-vertex rank of the map induced by f : Q -> P on tops.
DimVec top_rank(const PathAlgebra& A, const RepMap& f, const Rep& Q, const Rep& P);

struct StrippedMap {
  Rep Y;        // coker f
  DimVec R;     // multiplicities of the common summand, P = P_Y (+) R
  Rep R_rep;    // projective_sum(R)
};

/// Splits an injective map of projectives as delta_Y (+) id_R. R is read off
/// the top rank of f and cross-checked against mult(P) - mult(P_Y).
/// Throws std::domain_error if f is not injective or an end is not projective.
StrippedMap strip_common_summand(const PathAlgebra& A, const RepMap& f, const Rep& Q, const Rep& P);

}  // namespace hallcx
