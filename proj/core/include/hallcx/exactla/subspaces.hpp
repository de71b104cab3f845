#pragma once

#include <cstdint>
#include <vector>

#include "hallcx/exactla/matrix.hpp"

namespace hallcx {

/// Number of k-dimensional subspaces of F_p^d.
std::uint64_t gaussian_binomial(std::uint64_t p, std::size_t d, std::size_t k);

/// Every k-dimensional subspace of F_p^d, each given once by its unique
/// k x d reduced row echelon basis. Ordered by pivot set, then by free entries.
/// Throws std::domain_error when k > d.
std::vector<Matrix> enumerate_subspaces(const PrimeField& f, std::size_t d, std::size_t k);

/// Calls `visit` for each k-dimensional subspace without materializing the list.
/// `visit` returns false to stop early.
template <class Visit>
void for_each_subspace(const PrimeField& f, std::size_t d, std::size_t k, Visit&& visit);

}  // namespace hallcx

#include "hallcx/exactla/subspaces_impl.hpp"
