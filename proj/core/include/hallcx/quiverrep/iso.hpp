#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "hallcx/errors.hpp"
#include "hallcx/rational.hpp"
#include "hallcx/quiverrep/hom.hpp"

namespace hallcx {

/// Cheap isomorphism invariant: dimension vector, then the ranks of the maps
/// along every path (up to a length cap for quivers with cycles).
struct Fingerprint {
  DimVec dims;
  std::vector<std::size_t> path_ranks;
  auto operator<=>(const Fingerprint&) const = default;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const PathAlgebra& A, const Rep& M);

/// An isomorphism M -> N if one exists. Invariant filters run first; then a
/// seeded random search; an exhaustive sweep of Hom(M, N) settles the rest.
std::optional<RepMap> find_isomorphism(const PathAlgebra& A, const Rep& M, const Rep& N,
                                       std::uint64_t budget = kDefaultBudget);
/// Like find_isomorphism, but compares indecomposable summands before any sweep.
bool is_isomorphic(const PathAlgebra& A, const Rep& M, const Rep& N, std::uint64_t budget = kDefaultBudget);

/// |Aut(M)|, by enumerating End(M).
std::uint64_t aut_count(const PathAlgebra& A, const Rep& M, std::uint64_t budget = kDefaultBudget);

/// One isotypic block of a Krull-Schmidt decomposition: an indecomposable X
/// given by |Aut X| and dim End X, and its multiplicity.
struct IsotypicBlock {
  Integer aut = 1;
  std::size_t end_dim = 0;
  std::size_t mult = 0;
};
/// |Aut M| from dim End M and the blocks of M, as |rad End M| times the product
/// of |GL_mult(End X / rad End X)|.
Integer aut_from_blocks(std::uint64_t p, std::size_t end_dim, const std::vector<IsotypicBlock>& blocks);

/// Splits M into indecomposable summands using Fitting decompositions
/// M = ker f^N (+) im f^N for endomorphisms that are neither nilpotent nor
/// invertible. Summands are returned as concrete representations.
std::vector<Rep> indecomposable_summands(const PathAlgebra& A, const Rep& M,
                                         std::uint64_t budget = kDefaultBudget);
bool is_indecomposable(const PathAlgebra& A, const Rep& M, std::uint64_t budget = kDefaultBudget);

}  // namespace hallcx
