#pragma once

#include "hallcx/quiverrep/quiver.hpp"

namespace fixtures {

inline hallcx::PathAlgebra a2(std::uint32_t p) {
  return {hallcx::Quiver::acyclic(2, {{0, 1}}), hallcx::PrimeField(p)};
}

inline hallcx::PathAlgebra a3(std::uint32_t p) {
  return {hallcx::Quiver::acyclic(3, {{0, 1}, {1, 2}}), hallcx::PrimeField(p)};
}

inline hallcx::PathAlgebra point(std::uint32_t p) { return {hallcx::Quiver::acyclic(1, {}), hallcx::PrimeField(p)}; }

}  // namespace fixtures
