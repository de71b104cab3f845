#include <doctest.h>

#include "fixtures.hpp"
#include "hallcx/localized/relations.hpp"
#include "hallcx/quiverrep/ext.hpp"

using namespace hallcx;

namespace {

void require_ok(const Report& rep) {
  for (const auto& c : rep.checks)
    if (!c.pass) FAIL_CHECK(rep.suite << " " << c.relation << " [" << c.params << "]: " << c.lhs << " vs " << c.rhs);
  CHECK(rep.checks.size() > 0);
}

struct A2 {
  CxContext ctx;
  RepClassId zero, s1, s2, p1;
  std::vector<RepClassId> classes;
  explicit A2(std::uint32_t p) : ctx(fixtures::a2(p)) {
    auto& cat = ctx.catalog();
    classes = cat.classes_up_to({1, 1});
    zero = {{0, 0}, 0};
    s1 = cat.classify(semisimple(cat.algebra(), {1, 0}));
    s2 = cat.classify(semisimple(cat.algebra(), {0, 1}));
    p1 = cat.projective_class(0);
  }
};

}  // namespace

TEST_CASE("torus group law, unit and projective generators") {
  A2 a(2);
  auto mh = MHAlgebra::bounded(a.ctx);
  const KVec alpha{1, -2};
  for (std::int64_t r = -2; r <= 3; ++r) {
    CHECK(mh->product(mh->K(alpha, r), mh->K({-1, 2}, r)) == mh->one());
    CHECK(mh->E(a.zero, r) == mh->one());
    CHECK(mh->E(a.p1, r) == mh->element({CxKind::bounded, 0, {{LabelKind::C, r, a.p1}}}));
  }
  auto w = MHAlgebra::window(a.ctx, 2);
  CHECK(w->product(w->J(alpha, 0), w->J({-1, 2}, 0)) == w->one());
  CHECK(w->Xproj(a.p1) == w->element({CxKind::window, 2, {{LabelKind::S, 0, a.p1}}}));
  CHECK_THROWS_AS(w->X(a.s1, 1), std::domain_error);
  CHECK_THROWS_AS(w->Xproj(a.s1), std::domain_error);
}

TEST_CASE("twisted product of X generators on A2 at p = 2") {
  A2 a(2);
  auto w = MHAlgebra::window(a.ctx, 2);
  ModuleCategory mc(a.ctx.catalog());
  HallAlgebra H(mc);
  const MHElt lhs = w->product(w->X(a.s1, 0), w->X(a.s2, 0));
  MHElt rhs;
  for (const auto& [L, c] : H.basis_product(a.s1, a.s2)) rhs += Rational(1, 2) * c * w->X(L, 0);
  CHECK(lhs == rhs);
  CHECK(lhs.terms().size() == 2);
}

TEST_CASE("Z generators and lambda on generators") {
  A2 a(2);
  auto mh = MHAlgebra::bounded(a.ctx);
  for (const auto& M : a.classes) {
    const KVec minus = [&] {
      KVec v = kvec(M.dims);
      for (auto& x : v) x = -x;
      return v;
    }();
    CHECK(mh->Z(M, 1) == mh->product(mh->E(M, 1), mh->K(minus, 0)));
    CHECK(mh->Z(M, 0) == mh->E(M, 0));
  }
  for (std::size_t m : {2u, 3u}) {
    auto w = MHAlgebra::window(a.ctx, m);
    for (std::size_t i = 0; i < 2; ++i) {
      const RepClassId P = a.ctx.catalog().projective_class(i);
      CHECK(lambda_embed(*w, *mh, w->Xproj(P)) == mh->E(P, static_cast<std::int64_t>(m) - 1));
    }
  }
}

TEST_CASE("psi_0 on a product of simples") {
  A2 a(2);
  auto mh = MHAlgebra::bounded(a.ctx);
  ModuleCategory mc(a.ctx.catalog());
  HallAlgebra H(mc);
  const auto prod = twisted_module_product(H, HallElt<RepClassId>::basis(a.s1), HallElt<RepClassId>::basis(a.s2));
  CHECK(psi_r(*mh, prod, 0) == mh->product(mh->E(a.s1, 0), mh->E(a.s2, 0)));
  CHECK(psi_r(*mh, HallElt<RepClassId>::basis(a.zero), 3) == mh->one());
}

TEST_CASE("psi-hat round trips") {
  A2 a(2);
  auto mh = MHAlgebra::bounded(a.ctx);
  const GenSym e2{GenSym::Tag::E, a.s1, {}, 2};
  const DHTerm inv = psi_hat_inverse(e2);
  TorusExp expect;
  expect.add(1, {1, 0});
  expect.add(0, {-1, 0});
  CHECK(inv.torus == expect);
  CHECK(psi_hat_roundtrip(*mh, e2));
  CHECK(psi_hat_roundtrip(*mh, {GenSym::Tag::K, {}, {1, 1}, -2}));
  require_ok(verify_psi_hat(*mh, a.classes, {-2, 2}));
}

TEST_CASE("MH_1 is the group algebra of K(A)") {
  A2 a(2);
  auto w = MHAlgebra::window(a.ctx, 1);
  for (std::size_t i = 0; i < 2; ++i) {
    const MHElt x = w->Xproj(a.ctx.catalog().projective_class(i));
    REQUIRE(x.terms().size() == 1);
    CHECK(x.terms().begin()->first.core.labels.empty());
  }
  require_ok(basis_check_cm(*w, a.classes));
}

TEST_CASE("torus elements are central") {
  A2 a(3);
  auto mh = MHAlgebra::bounded(a.ctx);
  const MHElt x = mh->product(mh->E(a.s1, 1), mh->E(a.s2, 0));
  for (std::int64_t r = -1; r <= 2; ++r) {
    const MHElt k = mh->K({2, -1}, r);
    CHECK(mh->product(k, x) == mh->product(x, k));
  }
  auto w = MHAlgebra::window(a.ctx, 3);
  const MHElt y = w->product(w->X(a.s2, 1), w->Xproj(a.p1));
  for (std::int64_t r = 0; r <= 1; ++r) {
    const MHElt j = w->J({1, 1}, r);
    CHECK(w->product(j, y) == w->product(y, j));
  }
}

TEST_CASE("relations in MH(A)") {
  for (std::uint32_t p : {2u, 3u}) {
    A2 a(p);
    auto mh = MHAlgebra::bounded(a.ctx);
    require_ok(verify_relations_55(*mh, a.classes, {}));
    require_ok(verify_relations_57(*mh, a.classes, {}));
  }
}

TEST_CASE("relations in MH_m(A)") {
  for (std::uint32_t p : {2u, 3u}) {
    A2 a(p);
    for (std::size_t m : {2u, 3u}) {
      auto w = MHAlgebra::window(a.ctx, m);
      require_ok(verify_relations_64(*w, a.classes));
    }
  }
}

TEST_CASE("embeddings and bases") {
  A2 a(2);
  auto mh = MHAlgebra::bounded(a.ctx);
  require_ok(basis_check_cb(*mh, a.classes, {}));
  for (std::size_t m : {2u, 3u}) {
    auto w = MHAlgebra::window(a.ctx, m);
    require_ok(verify_embeddings(*mh, *w, a.classes, {}));
    require_ok(basis_check_cm(*w, a.classes));
  }
}
