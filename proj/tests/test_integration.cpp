#include <doctest.h>

#include "fixtures.hpp"
#include "hallcx/complexcat/cxhom.hpp"
#include "hallcx/integration/integration.hpp"

using namespace hallcx;

namespace {

void require_ok(const Report& rep) {
  for (const auto& c : rep.checks)
    if (!c.pass) FAIL_CHECK(c.relation << " [" << c.params << "]: " << c.lhs << " vs " << c.rhs);
  CHECK(rep.checks.size() > 0);
}

}  // namespace

TEST_CASE("injective resolutions and dimension vectors in C^2") {
  CxContext ctx(fixtures::a2(2));
  const Rep P1 = ctx.projective_rep(0), P2 = ctx.projective_rep(1);
  const Rep S1 = semisimple(ctx.base(), {1, 0});

  const Cx J = make_Jp(ctx, P1, 2);
  auto rj = injective_resolution_c2(ctx, J);
  CHECK(is_exact(ctx, rj));
  CHECK(minimal_multiplicities(ctx, rj) == ResolutionMultiplicities{{0, 0}, {0, 0}, {1, 0}});
  CHECK(dim_vec(ctx, J) == KVec{0, 0, 1, 0});

  const Cx S = make_Sp(ctx, P2, 2);
  CHECK(minimal_multiplicities(ctx, injective_resolution_c2(ctx, S)) == ResolutionMultiplicities{{0, 1}, {0, 0}, {0, 0}});
  CHECK(dim_vec(ctx, S) == KVec{0, -1, 0, 0});

  // T_{S_1} = (P_2 -> P_1): middle S_{P_2} + J_{P_1}, tail S_{P_1}
  const Cx T = make_TM(ctx, S1, 2);
  auto rt = injective_resolution_c2(ctx, T);
  CHECK(is_exact(ctx, rt));
  CHECK(minimal_multiplicities(ctx, rt) == ResolutionMultiplicities{{0, 1}, {1, 0}, {1, 0}});
  CHECK(dim_vec(ctx, T) == KVec{1, -1, 1, 0});

  auto padded = pad_resolution(ctx, rt, {1, 2});
  CHECK(is_exact(ctx, padded));
  CHECK(minimal_multiplicities(ctx, padded) == minimal_multiplicities(ctx, rt));

  CHECK(grothendieck_coords(ctx, J) == C2Coords{{0, 0}, {1, 0}});
  CHECK(grothendieck_coords(ctx, S) == C2Coords{{0, 1}, {0, 0}});
  const auto sum = grothendieck_coords(ctx, direct_sum(ctx, J, T));
  CHECK(sum == C2Coords{{-1, 1}, {2, 0}});

  CHECK_THROWS_AS(dim_vec(ctx, make_Jp(ctx, P1, 3)), std::domain_error);
}

TEST_CASE("quantum torus and the integration map") {
  CxContext ctx(fixtures::a2(2));
  QuantumTorus T(ctx);
  const Cx J = make_Jp(ctx, ctx.projective_rep(0), 2);
  CHECK(T.lambda(dim_vec(ctx, J), dim_vec(ctx, J)) == static_cast<std::int64_t>(cx_hom_dim(ctx, J, J)));

  ComplexCategory cat(ctx, CxKind::window, 2);
  HallAlgebra H(cat);
  CHECK(integrate(cat, H.basis(cat.zero())) == T.monomial(KVec(4, 0)));

  const CxKey sp1 = decompose(ctx, make_Sp(ctx, ctx.projective_rep(0), 2));
  const CxKey ts2 = decompose(ctx, make_TM(ctx, semisimple(ctx.base(), {0, 1}), 2));
  CHECK(integrate(cat, H.product(H.basis(sp1), H.basis(ts2))) ==
        T.product(integrate(cat, H.basis(sp1)), integrate(cat, H.basis(ts2))));

  ComplexCategory cat3(ctx, CxKind::window, 3);
  CHECK_THROWS_AS(integrate(cat3, HallElt<CxKey>::basis(cat3.zero())), std::domain_error);
}

TEST_CASE("integration suite on small C^2 grids") {
  for (std::uint32_t p : {2u, 3u}) {
    CxContext ctx(fixtures::a2(p));
    ComplexCategory cat(ctx, CxKind::window, 2);
    HallAlgebra H(cat);
    QuantumTorus T(ctx);
    require_ok(verify_integration(H, T, key_grid(ctx, CxKind::window, 2, {1, 1}, 2)));
  }
  CxContext ctx(fixtures::a3(2));
  ComplexCategory cat(ctx, CxKind::window, 2);
  HallAlgebra H(cat);
  QuantumTorus T(ctx);
  require_ok(verify_integration(H, T, key_grid(ctx, CxKind::window, 2, {1, 1, 1}, 1)));
}
