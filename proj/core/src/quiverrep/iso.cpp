#include "hallcx/quiverrep/iso.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "hallcx/errors.hpp"

namespace hallcx {

namespace {

constexpr std::size_t kMaxFingerprintPathLength = 4;
constexpr int kRandomTries = 48;

std::uint64_t seed_of(const Rep& M, const Rep& N) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) { h = (h ^ x) * 1099511628211ull; };
  for (auto d : M.dims) mix(d);
  for (const auto& m : M.maps)
    for (auto e : m.data()) mix(e);
  for (const auto& m : N.maps)
    for (auto e : m.data()) mix(e + 7);
  return h;
}

RepMap power(const PathAlgebra& A, const RepMap& f, std::size_t e) {
  RepMap r;
  for (const auto& m : f.at) r.at.push_back(Matrix::identity(m.rows()));
  for (std::size_t i = 0; i < e; ++i) r = compose(A, f, r);
  return r;
}

}  // namespace

Fingerprint fingerprint(const PathAlgebra& A, const Rep& M) {
  Fingerprint fp;
  fp.dims = M.dims;
  const auto& Q = A.quiver();
  const std::size_t cap = std::min(Q.vertex_count(), kMaxFingerprintPathLength);
  for (const auto& [from, path] : Q.paths_up_to(cap)) fp.path_ranks.push_back(rank(A.field(), path_map(A, M, from, path)));
  return fp;
}

namespace {

// filters and the seeded random search; `settled` is false when neither decides
std::optional<RepMap> quick_isomorphism(const PathAlgebra& A, const Rep& M, const Rep& N, std::vector<RepMap>& basis,
                                        bool& settled) {
  settled = true;
  if (M.dims != N.dims) return std::nullopt;
  if (M == N) return identity_map(M);
  if (fingerprint(A, M) != fingerprint(A, N)) return std::nullopt;
  basis = hom_basis(A, M, N);
  if (basis.size() != hom_dim(A, M, M) || basis.size() != hom_dim(A, N, M)) return std::nullopt;
  if (basis.empty()) return M.is_zero() ? std::optional<RepMap>(identity_map(M)) : std::nullopt;

  for (const auto& b : basis)
    if (is_isomorphism(A, b)) return b;
  std::mt19937_64 rng(seed_of(M, N));
  for (int t = 0; t < kRandomTries; ++t) {
    RepMap f = random_combination(A, basis, M, N, rng);
    if (is_isomorphism(A, f)) return f;
  }
  settled = false;
  return std::nullopt;
}

}  // namespace

std::optional<RepMap> find_isomorphism(const PathAlgebra& A, const Rep& M, const Rep& N, std::uint64_t budget) {
  std::vector<RepMap> basis;
  bool settled = false;
  auto quick = quick_isomorphism(A, M, N, basis, settled);
  if (settled) return quick;
  std::optional<RepMap> found;
  for_each_combination(A, basis, zero_map(M, N), budget, [&](const RepMap& f, const std::vector<Elem>&) {
    if (is_isomorphism(A, f)) {
      found = f;
      return false;
    }
    return true;
  });
  return found;
}

bool is_isomorphic(const PathAlgebra& A, const Rep& M, const Rep& N, std::uint64_t budget) {
  std::vector<RepMap> basis;
  bool settled = false;
  if (quick_isomorphism(A, M, N, basis, settled)) return true;
  if (settled) return false;
  // Krull-Schmidt: match indecomposable summands pairwise
  const auto ms = indecomposable_summands(A, M, budget);
  const auto ns = indecomposable_summands(A, N, budget);
  if (ms.size() == 1 && ns.size() == 1) return find_isomorphism(A, M, N, budget).has_value();
  if (ms.size() != ns.size()) return false;
  std::vector<bool> used(ns.size(), false);
  for (const auto& x : ms) {
    bool matched = false;
    for (std::size_t j = 0; j < ns.size() && !matched; ++j)
      if (!used[j] && is_isomorphic(A, x, ns[j], budget)) used[j] = matched = true;
    if (!matched) return false;
  }
  return true;
}

std::uint64_t aut_count(const PathAlgebra& A, const Rep& M, std::uint64_t budget) {
  const auto basis = hom_basis(A, M, M);
  std::uint64_t count = 0;
  for_each_combination(A, basis, zero_map(M, M), budget, [&](const RepMap& f, const std::vector<Elem>&) {
    if (is_isomorphism(A, f)) ++count;
    return true;
  });
  return count;
}

std::vector<Rep> indecomposable_summands(const PathAlgebra& A, const Rep& M, std::uint64_t budget) {
  if (M.is_zero()) return {};
  const auto basis = hom_basis(A, M, M);
  std::size_t top = 0;
  for (auto d : M.dims) top = std::max(top, d);

  std::optional<RepMap> splitter;
  auto try_split = [&](const RepMap& f) {
    const RepMap g = power(A, f, top);
    if (is_zero(g) || is_isomorphism(A, g)) return false;
    splitter = g;
    return true;
  };
  if (basis.size() > 1) {
    for (const auto& b : basis)
      if (try_split(b)) break;
    if (!splitter) {
      std::mt19937_64 rng(seed_of(M, M));
      for (int t = 0; t < kRandomTries && !splitter; ++t) try_split(random_combination(A, basis, M, M, rng));
    }
    if (!splitter) {
      for_each_combination(A, basis, zero_map(M, M), budget,
                           [&](const RepMap& f, const std::vector<Elem>&) { return !try_split(f); });
    }
  }
  if (!splitter) return {M};

  const Subrep ker = kernel(A, *splitter, M);
  const Subrep img = image(A, *splitter);
  auto left = indecomposable_summands(A, restrict_to(A, M, ker), budget);
  auto right = indecomposable_summands(A, restrict_to(A, M, img), budget);
  left.insert(left.end(), std::make_move_iterator(right.begin()), std::make_move_iterator(right.end()));
  return left;
}

bool is_indecomposable(const PathAlgebra& A, const Rep& M, std::uint64_t budget) {
  return indecomposable_summands(A, M, budget).size() == 1;
}

}  // namespace hallcx

namespace hallcx {

Integer aut_from_blocks(std::uint64_t p, std::size_t end_dim, const std::vector<IsotypicBlock>& blocks) {
  const mpz_class P(static_cast<unsigned long>(p));
  auto pow = [&](std::size_t e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), P.get_mpz_t(), e);
    return r;
  };
  std::size_t semisimple_dim = 0;
  mpz_class units = 1;
  for (const auto& b : blocks) {
    if (b.mult == 0) continue;
    // End X is local: |Aut X| = p^e - p^(e - d) with d = dim of its residue field
    std::size_t d = 0;
    for (std::size_t t = 1; t <= b.end_dim; ++t)
      if (pow(b.end_dim) - pow(b.end_dim - t) == b.aut) d = t;
    if (d == 0) throw InconsistencyError("automorphism count of an indecomposable is not p^e - p^(e-d)");
    const mpz_class Qd = pow(d);
    for (std::size_t i = 0; i < b.mult; ++i) {
      mpz_class qi;
      mpz_pow_ui(qi.get_mpz_t(), Qd.get_mpz_t(), i);
      mpz_class qn;
      mpz_pow_ui(qn.get_mpz_t(), Qd.get_mpz_t(), b.mult);
      units *= qn - qi;
    }
    semisimple_dim += b.mult * b.mult * d;
  }
  if (semisimple_dim > end_dim) throw InconsistencyError("semisimple quotient larger than the endomorphism ring");
  return pow(end_dim - semisimple_dim) * units;
}

}  // namespace hallcx
