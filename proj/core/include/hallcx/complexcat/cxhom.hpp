#pragma once

#include <cstdint>
#include <vector>

#include "hallcx/complexcat/complex.hpp"

namespace hallcx {

/// Chain maps X -> Y as representation maps of the flattened complexes
/// (one block per degree and vertex). Kinds must agree.
std::vector<RepMap> cx_hom_basis(CxContext& ctx, const Cx& X, const Cx& Y);
std::size_t cx_hom_dim(CxContext& ctx, const Cx& X, const Cx& Y);

/// dim Hom_K(X, Y[i]): chain maps X -> Y[i] modulo maps c s + s d. Window
/// complexes are first moved to bounded degrees by [m].
std::size_t homotopy_hom_dim(CxContext& ctx, const Cx& X, const Cx& Y, std::int64_t i);

/// Alternating sum of dim Ext^i over bounded complexes of projectives, with
/// Ext^0 = chain maps and Ext^i = homotopy classes into Y[i] for i >= 1.
std::int64_t euler_form_cb(CxContext& ctx, const Cx& X, const Cx& Y);
/// Same sum truncated at i = m - 1, for window complexes.
std::int64_t euler_form_cm(CxContext& ctx, const Cx& X, const Cx& Y);

/// Closed form from component dimension vectors:
/// sum over degrees a <= b of (-1)^{b-a} <X_a, Y_b>. Bounded and window only.
std::int64_t euler_form_components(const CxContext& ctx, const Cx& X, const Cx& Y);

}  // namespace hallcx
