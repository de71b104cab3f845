#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "hallcx/errors.hpp"
#include "hallcx/exactla/subspaces.hpp"
#include "hallcx/hallcore/category.hpp"
#include "hallcx/hallcore/hall_elt.hpp"
#include "hallcx/quiverrep/ext.hpp"
#include "hallcx/quiverrep/hom.hpp"

namespace hallcx {

/// Untwisted Hall algebra over a category backend (ModuleCategory or ComplexCategory).
/// Structure constants are cached per ordered basis pair.
template <class Cat>
class HallAlgebra {
 public:
  using Key = typename Cat::Key;
  using Elt = HallElt<Key>;

  explicit HallAlgebra(Cat& cat) : cat_(cat) {}
  Cat& category() noexcept { return cat_; }

  std::size_t hom_dim(const Key& M, const Key& N) {
    const Ambient amb = cat_.ambient(M, N);
    return hallcx::hom_dim(*amb.algebra, cat_.object(amb, M), cat_.object(amb, N));
  }
  std::size_t ext1_dim(const Key& M, const Key& N) {
    const Ambient amb = cat_.ambient(M, N);
    return hallcx::ext1_dim(*amb.algebra, cat_.object(amb, M), cat_.object(amb, N));
  }

  /// |Ext^1(M, N)_L| for every middle term L, by walking all extension classes.
  std::map<Key, std::uint64_t> ext_counts(const Key& M, const Key& N) {
    const Ambient amb = cat_.ambient(M, N);
    const Rep m = cat_.object(amb, M), n = cat_.object(amb, N);
    const ExtSpace ext = ext1_space(*amb.algebra, m, n);
    std::map<Key, std::uint64_t> out;
    for_each_extension(*amb.algebra, m, n, ext, cat_.budget(), [&](const Rep& L) {
      ++out[cat_.classify(amb, L)];
      return true;
    });
    return out;
  }

  /// g^L_{MN}: subobjects N' of L with N' = N and L/N' = M, by enumerating
  /// arrow-stable subspaces of the right dimension.
  std::uint64_t hall_number_g(const Key& M, const Key& N, const Key& L) {
    const Ambient amb = cat_.ambient(M, N);
    const Rep m = cat_.object(amb, M), n = cat_.object(amb, N), l = cat_.object(amb, L);
    return count_subobjects(*amb.algebra, m, n, l);
  }

  /// |Ext^1(M, N)_L| = g |Hom(M, N)| a_M a_N / a_L; throws if not integral.
  std::uint64_t ext_count(const Key& M, const Key& N, const Key& L) {
    Rational v = rational_of(hall_number_g(M, N, L)) * power_of(cat_.p(), static_cast<std::int64_t>(hom_dim(M, N))) *
                 rational_of(cat_.aut(M)) * rational_of(cat_.aut(N)) / rational_of(cat_.aut(L));
    if (v.get_den() != 1) throw InconsistencyError("Riedtmann-Peng count is not an integer");
    return v.get_num().get_ui();
  }

  /// [M] o [N] from extension counts over |Hom(M, N)|.
  const typename Elt::Terms& basis_product(const Key& M, const Key& N) {
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find({M, N});
      if (it != cache_.end()) return it->second.terms();
    }
    Elt r;
    if (cat_.is_zero(M)) {
      r.add(N, 1);
    } else if (cat_.is_zero(N)) {
      r.add(M, 1);
    } else {
      const Rational hom = power_of(cat_.p(), static_cast<std::int64_t>(hom_dim(M, N)));
      for (const auto& [L, c] : ext_counts(M, N)) r.add(L, rational_of(c) / hom);
    }
    std::lock_guard lock(mu_);
    return cache_.emplace(std::make_pair(M, N), std::move(r)).first->second.terms();
  }

  /// [M] o [N] from subobject counts: sum over candidates L of g a_M a_N / a_L.
  Elt basis_product_by_subobjects(const Key& M, const Key& N) {
    Elt r;
    if (cat_.is_zero(M) || cat_.is_zero(N)) {
      r.add(cat_.direct_sum(M, N), 1);
      return r;
    }
    const Rational aMN = rational_of(cat_.aut(M)) * rational_of(cat_.aut(N));
    for (const auto& L : cat_.candidates(M, N)) {
      const std::uint64_t g = hall_number_g(M, N, L);
      if (g) r.add(L, rational_of(g) * aMN / rational_of(cat_.aut(L)));
    }
    return r;
  }

  Elt product(const Elt& x, const Elt& y) {
    Elt r;
    for (const auto& [a, ca] : x.terms())
      for (const auto& [b, cb] : y.terms())
        for (const auto& [L, c] : basis_product(a, b)) r.add(L, ca * cb * c);
    return r;
  }

  Elt basis(const Key& k) const { return Elt::basis(k); }

 private:
  std::uint64_t count_subobjects(const PathAlgebra& A, const Rep& M, const Rep& N, const Rep& L) {
    const auto& F = A.field();
    const std::size_t nv = A.n();
    for (std::size_t v = 0; v < nv; ++v)
      if (M.dims[v] + N.dims[v] != L.dims[v]) return 0;
    const auto& arrows = A.quiver().arrows();
    // arrows checked once both ends are chosen
    std::vector<std::vector<std::size_t>> ready(nv);
    for (std::size_t ai = 0; ai < arrows.size(); ++ai) ready[std::max(arrows[ai].source, arrows[ai].target)].push_back(ai);
    std::uint64_t work = 1;
    for (std::size_t v = 0; v < nv; ++v) {
      work *= gaussian_binomial(F.p(), L.dims[v], N.dims[v]);
      if (work > cat_.budget()) throw BudgetExceeded("subobject enumeration");
    }
    const Fingerprint fn = fingerprint(A, N), fm = fingerprint(A, M);
    std::uint64_t count = 0;
    Subrep U;
    U.basis.resize(nv);
    std::function<void(std::size_t)> go = [&](std::size_t v) {
      if (v == nv) {
        const Rep sub = restrict_to(A, L, U);
        if (fingerprint(A, sub) != fn || !is_isomorphic(A, sub, N, cat_.budget())) return;
        const Rep quo = quotient(A, L, U).rep;
        if (fingerprint(A, quo) != fm || !is_isomorphic(A, quo, M, cat_.budget())) return;
        ++count;
        return;
      }
      for_each_subspace(F, L.dims[v], N.dims[v], [&](const Matrix& rows) {
        U.basis[v] = transpose(rows);
        for (std::size_t ai : ready[v]) {
          const auto [s, t] = arrows[ai];
          const Matrix img = multiply(F, L.maps[ai], U.basis[s]);
          if (rank(F, hstack(U.basis[t], img)) != U.basis[t].cols()) return true;
        }
        go(v + 1);
        return true;
      });
    };
    go(0);
    return count;
  }

  Cat& cat_;
  std::mutex mu_;
  std::map<std::pair<Key, Key>, Elt> cache_;
};

}  // namespace hallcx
