#pragma once

#include <map>
#include <optional>
#include <utility>

#include "hallcx/hallcore/hall.hpp"

namespace hallcx {

/// W-type counts for modules: for each (ker f, coker f) class pair, the number
/// of f in Hom(M, N) realizing it.
std::map<std::pair<RepClassId, RepClassId>, std::uint64_t> kernel_cokernel_counts(RepCatalog& cat,
                                                                                    const RepClassId& M,
                                                                                    const RepClassId& N);

/// gamma^{XY}_{MN} = a_X a_Y #{f : ker f = X, coker f = Y} / (a_M a_N).
Rational gamma_count(RepCatalog& cat, const RepClassId& M, const RepClassId& N, const RepClassId& X,
                     const RepClassId& Y);

/// Whether the differential out of degree 0 of a cyclic class vanishes.
bool d0_vanishes(ComplexCategory& cyc, const CxKey& k);

/// The window complex M_1 -> ... -> M_m with M_m := M_0, or nothing when d_0 != 0.
std::optional<CxKey> chi(ComplexCategory& cyc, const CxKey& k);
HallElt<CxKey> chi(ComplexCategory& cyc, const HallElt<CxKey>& x);
/// Projection onto the span of classes with d_0 != 0.
HallElt<CxKey> ideal_I_part(ComplexCategory& cyc, const HallElt<CxKey>& x);
/// The cyclic complex with M_0 := M_m and d_0 = 0 mapping to a window class.
CxKey chi_section(ComplexCategory& cyc, const CxKey& window_key);

}  // namespace hallcx
