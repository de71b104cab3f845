#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "hallcx/exactla/matrix.hpp"
#include "hallcx/quiverrep/quiver.hpp"

namespace hallcx {

using DimVec = std::vector<std::size_t>;

/// A representation: a vector space per vertex and a matrix per arrow
/// (shape dims[target] x dims[source]).
struct Rep {
  DimVec dims;
  std::vector<Matrix> maps;

  std::size_t total_dim() const noexcept;
  bool is_zero() const noexcept { return total_dim() == 0; }
  auto operator<=>(const Rep&) const = default;
  bool operator==(const Rep&) const = default;
};

/// A morphism of representations: one matrix per vertex.
struct RepMap {
  std::vector<Matrix> at;
  auto operator<=>(const RepMap&) const = default;
  bool operator==(const RepMap&) const = default;
};

/// A subrepresentation given by a column basis of a subspace at each vertex.
struct Subrep {
  std::vector<Matrix> basis;
  DimVec dims() const;
};

Rep zero_rep(const PathAlgebra& A);
/// Representation with the given dims and all arrow maps zero.
Rep semisimple(const PathAlgebra& A, const DimVec& dims);
/// Throws std::domain_error if shapes or relations are violated.
void validate(const PathAlgebra& A, const Rep& M);
bool satisfies_relations(const PathAlgebra& A, const Rep& M);

/// Matrix of the composite along a path starting at `from`.
Matrix path_map(const PathAlgebra& A, const Rep& M, std::size_t from, const Path& path);

Rep direct_sum(const Rep& M, const Rep& N);
RepMap direct_sum(const RepMap& f, const RepMap& g);

RepMap identity_map(const Rep& M);
RepMap zero_map(const Rep& M, const Rep& N);
RepMap compose(const PathAlgebra& A, const RepMap& g, const RepMap& f);
RepMap add(const PathAlgebra& A, const RepMap& f, const RepMap& g);
RepMap scale(const PathAlgebra& A, const RepMap& f, Elem c);
bool is_zero(const RepMap& f);
bool is_morphism(const PathAlgebra& A, const RepMap& f, const Rep& M, const Rep& N);
bool is_injective(const PathAlgebra& A, const RepMap& f);
bool is_surjective(const PathAlgebra& A, const RepMap& f);
bool is_isomorphism(const PathAlgebra& A, const RepMap& f);

Subrep kernel(const PathAlgebra& A, const RepMap& f, const Rep& M);
Subrep image(const PathAlgebra& A, const RepMap& f);
/// Smallest subrepresentation containing each generator vector (vertex, vector).
Subrep generated_subrep(const PathAlgebra& A, const Rep& M, const std::vector<std::pair<std::size_t, Vec>>& gens);
Subrep sum(const PathAlgebra& A, const Subrep& U, const Subrep& V);
bool is_stable(const PathAlgebra& A, const Rep& M, const Subrep& U);

/// Representation carried by an arrow-stable subspace, with the basis of U.
Rep restrict_to(const PathAlgebra& A, const Rep& M, const Subrep& U);

struct Quotient {
  Rep rep;
  RepMap projection;  // M -> rep
};
Quotient quotient(const PathAlgebra& A, const Rep& M, const Subrep& U);
Quotient cokernel(const PathAlgebra& A, const RepMap& f, const Rep& N);

/// Transport M along per-vertex invertible matrices g: maps become g_t M_a g_s^-1.
Rep transport(const PathAlgebra& A, const Rep& M, const std::vector<Matrix>& g);

}  // namespace hallcx
