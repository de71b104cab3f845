#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallcx/localized/mh.hpp"

namespace hallcx {

/// One evaluated relation instance; both sides in normal form.
struct RelationCheck {
  std::string relation;
  std::string params;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct Report {
  std::string suite;
  std::vector<RelationCheck> checks;

  void add(std::string relation, std::string params, const MHElt& lhs, const MHElt& rhs);
  void add(std::string relation, std::string params, bool pass, std::string lhs = {}, std::string rhs = {});
  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }
};

/// Levels lo..hi inclusive.
struct LevelRange {
  std::int64_t lo = -2;
  std::int64_t hi = 3;
};

/// E-relations, torus centrality and the group law in MH(A), over all pairs
/// of the given module classes and all admissible levels.
Report verify_relations_55(MHAlgebra& mh, const std::vector<RepClassId>& classes, LevelRange levels);
/// X-relations in MH_m(A) for all admissible levels 0..m-1.
Report verify_relations_64(MHAlgebra& mhm, const std::vector<RepClassId>& classes);
/// Derived Hall relations, evaluated on the images of the Z generators in MH(A).
Report verify_relations_57(MHAlgebra& mh, const std::vector<RepClassId>& classes, LevelRange levels);

/// [M] * [N] = q^{<M, N>} [M] o [N] in the twisted Hall algebra of A.
HallElt<RepClassId> twisted_module_product(HallAlgebra<ModuleCategory>& H, const HallElt<RepClassId>& x,
                                           const HallElt<RepClassId>& y);
MHElt psi_r(MHAlgebra& mh, const HallElt<RepClassId>& x, std::int64_t r);
MHElt phi_r(MHAlgebra& mhm, const HallElt<RepClassId>& x, std::int64_t r);
/// MH_m(A) -> MH(A): J_{a,r} -> K_{a,r}, [T_M[r]] -> [C_M[r]], [S_P] -> [C_P[m-1]].
MHElt lambda_embed(MHAlgebra& mhm, MHAlgebra& mh, const MHElt& x);
CxKey lambda_key(const CxKey& window_key);

/// Homomorphism and injectivity checks for psi_r, phi_r and lambda on sampled basis pairs.
Report verify_embeddings(MHAlgebra& mh, MHAlgebra& mhm, const std::vector<RepClassId>& classes, LevelRange levels);

/// Z_M^{[r]} (x) K_t in DH(A) (x) T(A); no Z part means the identity.
struct DHTerm {
  std::optional<std::pair<RepClassId, std::int64_t>> z;
  TorusExp torus;
  bool operator==(const DHTerm&) const = default;
};
/// The inverse of x (x) t -> Psi(x) * t on the generators E and K.
DHTerm psi_hat_inverse(const GenSym& g);
MHElt psi_hat(MHAlgebra& mh, const DHTerm& t);
/// E and K: Psi-hat after its inverse gives back the generator. Z: the inverse
/// applied to the image of Z cancels every torus factor, and Psi-hat(Z (x) 1) = gen(Z).
bool psi_hat_roundtrip(MHAlgebra& mh, const GenSym& g);
Report verify_psi_hat(MHAlgebra& mh, const std::vector<RepClassId>& classes, LevelRange levels);

/// Ordered monomials are single basis terms with distinct keys, and every term
/// of a random product of generators is a multiple of an ordered monomial.
Report basis_check_cb(MHAlgebra& mh, const std::vector<RepClassId>& classes, LevelRange levels,
                      std::size_t random_products = 200, std::uint64_t seed = 1);
Report basis_check_cm(MHAlgebra& mhm, const std::vector<RepClassId>& classes, std::size_t random_products = 200,
                      std::uint64_t seed = 1);

}  // namespace hallcx
