#include "hallcx/quiverrep/hom.hpp"

#include <limits>

namespace hallcx {

std::vector<RepMap> hom_basis(const PathAlgebra& A, const Rep& M, const Rep& N) {
  const auto& F = A.field();
  const auto& arrows = A.quiver().arrows();
  const std::size_t n = A.n();

  // unknown layout: vertex blocks f_v (N_v x M_v), row-major
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
  const std::size_t unknowns = offset[n];
  if (unknowns == 0) return {};

  std::size_t eqs = 0;
  for (const auto& a : arrows) eqs += N.dims[a.target] * M.dims[a.source];
  Matrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < arrows.size(); ++ai) {
    const auto [s, t] = arrows[ai];
    const Matrix& Ma = M.maps[ai];  // M_t x M_s
    const Matrix& Na = N.maps[ai];  // N_t x N_s
    // (f_t Ma - Na f_s)[i][j] = sum_k f_t[i][k] Ma[k][j] - sum_k Na[i][k] f_s[k][j]
    for (std::size_t i = 0; i < N.dims[t]; ++i) {
      for (std::size_t j = 0; j < M.dims[s]; ++j, ++row) {
        for (std::size_t k = 0; k < M.dims[t]; ++k) {
          const Elem c = Ma(k, j);
          if (c) {
            Elem& e = sys(row, offset[t] + i * M.dims[t] + k);
            e = F.add(e, c);
          }
        }
        for (std::size_t k = 0; k < N.dims[s]; ++k) {
          const Elem c = Na(i, k);
          if (c) {
            Elem& e = sys(row, offset[s] + k * M.dims[s] + j);
            e = F.sub(e, c);
          }
        }
      }
    }
  }

  std::vector<RepMap> basis;
  for (const auto& sol : solve_kernel(F, sys)) {
    RepMap f;
    for (std::size_t v = 0; v < n; ++v) {
      Matrix m(N.dims[v], M.dims[v]);
      std::copy(sol.begin() + static_cast<std::ptrdiff_t>(offset[v]),
                sol.begin() + static_cast<std::ptrdiff_t>(offset[v + 1]), m.data().begin());
      f.at.push_back(std::move(m));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

std::size_t hom_dim(const PathAlgebra& A, const Rep& M, const Rep& N) { return hom_basis(A, M, N).size(); }

RepMap combine(const PathAlgebra& A, const std::vector<RepMap>& basis, const std::vector<Elem>& coeffs,
               const Rep& M, const Rep& N) {
  RepMap f = zero_map(M, N);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t v = 0; v < f.at.size(); ++v) axpy(A.field(), f.at[v], coeffs[i], basis[i].at[v]);
  return f;
}

std::uint64_t checked_power(std::uint64_t p, std::size_t k, std::uint64_t budget, const std::string& what) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > budget / p) throw BudgetExceeded(what + " (" + std::to_string(p) + "^" + std::to_string(k) + ")");
    r *= p;
  }
  if (r > budget) throw BudgetExceeded(what);
  return r;
}

RepMap random_combination(const PathAlgebra& A, const std::vector<RepMap>& basis, const Rep& M, const Rep& N,
                          std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, A.p() - 1);
  std::vector<Elem> c(basis.size());
  for (auto& x : c) x = dist(rng);
  return combine(A, basis, c, M, N);
}

}  // namespace hallcx
