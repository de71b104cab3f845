#include "hallcx/hallcore/theorem.hpp"

#include <stdexcept>

namespace hallcx {

std::map<std::pair<RepClassId, RepClassId>, std::uint64_t> kernel_cokernel_counts(RepCatalog& cat,
                                                                                    const RepClassId& M,
                                                                                    const RepClassId& N) {
  const auto& A = cat.algebra();
  const Rep& m = cat.rep(M);
  const Rep& n = cat.rep(N);
  std::map<std::pair<RepClassId, RepClassId>, std::uint64_t> out;
  for_each_combination(A, hom_basis(A, m, n), zero_map(m, n), cat.budget(), [&](const RepMap& f, const auto&) {
    const RepClassId ker = cat.classify(restrict_to(A, m, kernel(A, f, m)));
    const RepClassId cok = cat.classify(cokernel(A, f, n).rep);
    ++out[{ker, cok}];
    return true;
  });
  return out;
}

Rational gamma_count(RepCatalog& cat, const RepClassId& M, const RepClassId& N, const RepClassId& X,
                     const RepClassId& Y) {
  const auto counts = kernel_cokernel_counts(cat, M, N);
  auto it = counts.find({X, Y});
  if (it == counts.end()) return 0;
  return rational_of(cat.aut(X)) * rational_of(cat.aut(Y)) * rational_of(it->second) /
         (rational_of(cat.aut(M)) * rational_of(cat.aut(N)));
}

namespace {

void require_cyclic(const ComplexCategory& cyc) {
  if (cyc.kind() != CxKind::cyclic) throw std::domain_error("chi is defined on cyclic complexes");
}

}  // namespace

bool d0_vanishes(ComplexCategory& cyc, const CxKey& k) {
  require_cyclic(cyc);
  return is_zero(cyc.complex(k).diffs[0]);
}

std::optional<CxKey> chi(ComplexCategory& cyc, const CxKey& k) {
  if (!d0_vanishes(cyc, k)) return std::nullopt;
  auto& ctx = cyc.context();
  const std::size_t m = cyc.m();
  const Cx& X = cyc.complex(k);
  Cx W = zero_cx(ctx, window_shape(m));
  for (std::size_t j = 0; j < m; ++j) W.comps[j] = X.comps[(j + 1) % m];
  for (std::size_t j = 0; j + 1 < m; ++j) W.diffs[j] = X.diffs[j + 1];
  return decompose(ctx, W);
}

HallElt<CxKey> chi(ComplexCategory& cyc, const HallElt<CxKey>& x) {
  HallElt<CxKey> out;
  for (const auto& [k, c] : x.terms())
    if (auto w = chi(cyc, k)) out.add(*w, c);
  return out;
}

HallElt<CxKey> ideal_I_part(ComplexCategory& cyc, const HallElt<CxKey>& x) {
  HallElt<CxKey> out;
  for (const auto& [k, c] : x.terms())
    if (!d0_vanishes(cyc, k)) out.add(k, c);
  return out;
}

CxKey chi_section(ComplexCategory& cyc, const CxKey& window_key) {
  require_cyclic(cyc);
  auto& ctx = cyc.context();
  const std::size_t m = cyc.m();
  if (window_key.kind != CxKind::window || window_key.m != m) throw std::domain_error("chi_section needs a window key");
  const Cx W = realize(ctx, window_key);
  Cx X = zero_cx(ctx, cyclic_shape(m));
  X.comps[0] = W.comps[m - 1];
  for (std::size_t k = 1; k < m; ++k) X.comps[k] = W.comps[k - 1];
  X.diffs[0] = zero_map(X.comps[0], X.comps[1 % m]);
  for (std::size_t k = 1; k < m; ++k) X.diffs[k] = W.diffs[k - 1];
  return decompose(ctx, X);
}

}  // namespace hallcx
