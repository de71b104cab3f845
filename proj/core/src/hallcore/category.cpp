#include "hallcx/hallcore/category.hpp"

#include <algorithm>

#include "hallcx/quiverrep/hom.hpp"
#include "hallcx/quiverrep/iso.hpp"

namespace hallcx {

std::vector<RepClassId> ModuleCategory::candidates(const Key& a, const Key& b) {
  DimVec d = a.dims;
  for (std::size_t v = 0; v < d.size(); ++v) d[v] += b.dims[v];
  std::vector<Key> out;
  const std::size_t n = cat_.class_count(d);
  for (std::size_t i = 0; i < n; ++i) out.push_back({d, i});
  return out;
}

bool ModuleCategory::is_zero(const Key& k) const {
  return std::all_of(k.dims.begin(), k.dims.end(), [](std::size_t x) { return x == 0; });
}

RepClassId ModuleCategory::direct_sum(const Key& a, const Key& b) {
  return cat_.classify(hallcx::direct_sum(cat_.rep(a), cat_.rep(b)));
}

ComplexCategory::ComplexCategory(CxContext& ctx, CxKind kind, std::size_t m, bool verify_keys)
    : ctx_(ctx), kind_(kind), m_(kind == CxKind::bounded ? 0 : m), verify_(verify_keys) {}

const Cx& ComplexCategory::complex(const Key& k) {
  std::lock_guard lock(mu_);
  auto it = realized_.find(k);
  if (it != realized_.end()) return it->second;
  if (k.kind != kind_ || k.m != m_) throw std::domain_error("key " + to_string(k) + " is from another category");
  return realized_.emplace(k, realize(ctx_, k)).first->second;
}

CxShape ComplexCategory::shape_of(const Key& k) { return complex(k).shape; }

Ambient ComplexCategory::ambient(const Key& a, const Key& b) {
  const CxShape s = common_shape(shape_of(a), shape_of(b));
  return {&ctx_.flat_algebra(s), s};
}

Rep ComplexCategory::object(const Ambient& amb, const Key& k) {
  return ctx_.flatten(reshape(ctx_, complex(k), amb.shape));
}

CxKey ComplexCategory::classify(const Ambient& amb, const Rep& R) {
  return decompose(ctx_, ctx_.unflatten(amb.shape, R), verify_);
}

Integer ComplexCategory::aut(const Key& k) {
  {
    std::lock_guard lock(mu_);
    auto it = aut_.find(k);
    if (it != aut_.end()) return it->second;
  }
  Integer a = 1;
  const Cx& X = complex(k);
  if (k.labels.size() == 1) {
    a = aut_count(ctx_.flat_algebra(X.shape), ctx_.flatten(X), budget());
  } else if (!k.labels.empty()) {
    std::vector<IsotypicBlock> blocks;
    for (std::size_t i = 0; i < k.labels.size();) {
      std::size_t j = i;
      while (j < k.labels.size() && k.labels[j] == k.labels[i]) ++j;
      const Key one{k.kind, k.m, {k.labels[i]}};
      const Cx& Y = complex(one);
      const Rep y = ctx_.flatten(Y);
      blocks.push_back({aut(one), hom_dim(ctx_.flat_algebra(Y.shape), y, y), j - i});
      i = j;
    }
    const Rep x = ctx_.flatten(X);
    a = aut_from_blocks(p(), hom_dim(ctx_.flat_algebra(X.shape), x, x), blocks);
  }
  std::lock_guard lock(mu_);
  aut_[k] = a;
  return a;
}

std::vector<CxKey> ComplexCategory::candidates(const Key& a, const Key& b) {
  const Ambient amb = ambient(a, b);
  const auto pa = profile(reshape(ctx_, complex(a), amb.shape));
  auto sum = profile(reshape(ctx_, complex(b), amb.shape));
  for (std::size_t k = 0; k < sum.size(); ++k)
    for (std::size_t v = 0; v < sum[k].size(); ++v) sum[k][v] += pa[k][v];
  return keys_with_profile(ctx_, amb.shape, sum);
}

CxKey ComplexCategory::direct_sum(const Key& a, const Key& b) const {
  CxKey k = zero();
  k.labels = a.labels;
  k.labels.insert(k.labels.end(), b.labels.begin(), b.labels.end());
  std::sort(k.labels.begin(), k.labels.end());
  return k;
}

}  // namespace hallcx
