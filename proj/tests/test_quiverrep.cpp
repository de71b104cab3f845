#include <doctest.h>

#include "fixtures.hpp"
#include "hallcx/quiverrep/catalog.hpp"
#include "hallcx/quiverrep/ext.hpp"
#include "hallcx/quiverrep/hom.hpp"
#include "hallcx/quiverrep/iso.hpp"
#include "hallcx/quiverrep/projective.hpp"

using namespace hallcx;

namespace {

Rep simple(const PathAlgebra& A, std::size_t i) {
  DimVec d(A.n(), 0);
  d[i] = 1;
  return semisimple(A, d);
}

// A_2 representation of dims (1,1) with arrow map c
Rep a2_line(const PathAlgebra& A, Elem c) {
  Rep M = semisimple(A, {1, 1});
  M.maps[0](0, 0) = c;
  return M;
}

}  // namespace

TEST_CASE("hom basis examples") {
  const auto A = fixtures::a2(2);
  CHECK(hom_basis(A, simple(A, 0), simple(A, 0)).size() == 1);
  CHECK(hom_basis(A, simple(A, 0), simple(A, 1)).empty());
  CHECK(hom_basis(A, a2_line(A, 1), zero_rep(A)).empty());
  for (const auto& f : hom_basis(A, a2_line(A, 1), direct_sum(a2_line(A, 1), simple(A, 1))))
    CHECK(is_morphism(A, f, a2_line(A, 1), direct_sum(a2_line(A, 1), simple(A, 1))));
}

TEST_CASE("euler form examples and bilinearity") {
  const auto A = fixtures::a2(2);
  const auto& Q = A.quiver();
  CHECK(euler_form(Q, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(Q, {1, 1}, {0, 0}) == 0);
  CHECK(euler_form(Q, {1, 1}, {1, 1}) == 1);
  const auto Q3 = fixtures::a3(2);
  for (const auto& d : dims_up_to({2, 1, 2}))
    for (const auto& d2 : dims_up_to({1, 2, 1}))
      for (const auto& e : dims_up_to({1, 1, 2})) {
        DimVec s(3);
        for (int i = 0; i < 3; ++i) s[i] = d[i] + d2[i];
        CHECK(euler_form(Q3.quiver(), s, e) == euler_form(Q3.quiver(), d, e) + euler_form(Q3.quiver(), d2, e));
      }
}

TEST_CASE("ext1 examples") {
  const auto A = fixtures::a2(2);
  CHECK(ext1_dim(A, simple(A, 0), simple(A, 1)) == 1);
  CHECK(ext1_dim(A, simple(A, 1), simple(A, 0)) == 0);
  CHECK(ext1_dim(A, projective(A, 0), simple(A, 1)) == 0);
  // the nonsplit extension of S_1 by S_2 is P_1
  const auto ext = ext1_space(A, simple(A, 0), simple(A, 1));
  REQUIRE(ext.dim() == 1);
  CHECK(is_isomorphic(A, extension(simple(A, 0), simple(A, 1), ext.basis[0]), projective(A, 0)));
}

TEST_CASE("hom minus ext equals euler form on every class pair") {
  for (std::uint32_t p : {2u, 3u}) {
    for (const auto& A : {fixtures::a2(p), fixtures::a3(p)}) {
      const DimVec dmax = A.n() == 2 ? DimVec{2, 2} : DimVec{1, 1, 1};
      const auto reps = enumerate_iso_classes(A, dmax);
      for (const auto& M : reps)
        for (const auto& N : reps) {
          const auto h = static_cast<std::int64_t>(hom_dim(A, M, N));
          const auto e = static_cast<std::int64_t>(ext1_dim(A, M, N));
          CHECK(h - e == euler_form(A.quiver(), M.dims, N.dims));
        }
    }
  }
}

TEST_CASE("isomorphism testing") {
  const auto A = fixtures::a2(3);
  CHECK(is_isomorphic(A, a2_line(A, 1), a2_line(A, 1)));
  CHECK(is_isomorphic(A, a2_line(A, 1), a2_line(A, 2)));
  CHECK_FALSE(is_isomorphic(A, a2_line(A, 0), a2_line(A, 1)));
  CHECK_FALSE(is_isomorphic(A, simple(A, 0), simple(A, 1)));
}

TEST_CASE("automorphism counts") {
  const auto A = fixtures::a2(2);
  CHECK(aut_count(A, simple(A, 0)) == 1);
  CHECK(aut_count(A, direct_sum(simple(A, 0), simple(A, 0))) == 6);
  CHECK(aut_count(A, projective(A, 0)) == 1);
  const auto B = fixtures::a2(3);
  CHECK(aut_count(B, direct_sum(simple(B, 1), simple(B, 1))) == 48);
}

TEST_CASE("iso class enumeration") {
  for (std::uint32_t p : {2u, 3u}) {
    const auto A = fixtures::a2(p);
    CHECK(enumerate_iso_classes(A, {1, 1}).size() == 5);
    CHECK(enumerate_iso_classes(A, {0, 0}).size() == 1);
    CHECK(enumerate_iso_classes(fixtures::point(p), {3}).size() == 4);
    // A_2 up to (2,2): multiplicities of S_1, S_2, P_1 with dims bounded
    CHECK(enumerate_iso_classes(A, {2, 2}).size() == 14);
  }
  // indecomposables of A_3 are the 6 intervals
  RepCatalog cat(fixtures::a3(2));
  CHECK(cat.indecomposables_up_to({1, 1, 1}).size() == 6);
}

TEST_CASE("projectives, tops and covers") {
  const auto A = fixtures::a2(2);
  const Rep P1 = projective(A, 0);
  CHECK(P1.dims == DimVec{1, 1});
  CHECK(P1.maps[0] == Matrix::identity(1));
  CHECK(is_isomorphic(A, top(A, P1), simple(A, 0)));
  CHECK(is_isomorphic(A, top(A, projective(A, 1)), simple(A, 1)));
  const auto cover = projective_cover(A, direct_sum(simple(A, 0), simple(A, 1)));
  CHECK(cover.mult == DimVec{1, 1});
  CHECK(is_isomorphic(A, cover.P, direct_sum(projective(A, 0), projective(A, 1))));
  CHECK(is_surjective(A, cover.epi));
}

TEST_CASE("minimal projective resolutions") {
  const auto A = fixtures::a3(3);
  RepCatalog cat(A);
  for (const auto& id : cat.classes_up_to({1, 1, 1})) {
    const Rep& M = cat.rep(id);
    const auto res = min_proj_resolution(A, M);
    CHECK(is_projective(A, res.Omega));
    CHECK(is_injective(A, res.delta));
    CHECK(is_morphism(A, res.delta, res.Omega, res.PM));
    CHECK(is_isomorphic(A, cokernel(A, res.delta, res.PM).rep, M));
    CHECK(top_rank(A, res.delta, res.Omega, res.PM) == DimVec(3, 0));
  }
  const auto B = fixtures::a2(2);
  const auto r1 = min_proj_resolution(B, simple(B, 0));
  CHECK(is_isomorphic(B, r1.PM, projective(B, 0)));
  CHECK(is_isomorphic(B, r1.Omega, projective(B, 1)));
  CHECK(min_proj_resolution(B, projective(B, 0)).Omega.is_zero());
  CHECK(min_proj_resolution(B, zero_rep(B)).PM.is_zero());
}

TEST_CASE("strip common summand") {
  const auto A = fixtures::a2(2);
  const Rep P1 = projective(A, 0), P2 = projective(A, 1);
  const auto id = strip_common_summand(A, identity_map(P1), P1, P1);
  CHECK(id.Y.is_zero());
  CHECK(id.R == DimVec{1, 0});
  const auto res = min_proj_resolution(A, simple(A, 0));
  CHECK(strip_common_summand(A, res.delta, res.Omega, res.PM).R == DimVec{0, 0});
  // P_2 -> P_1 (+) P_2, hitting rad P_1 and the identity of P_2
  const Rep target = direct_sum(P1, P2);
  RepMap f;
  f.at.push_back(Matrix(1, 0));
  f.at.push_back(Matrix(PrimeField(2), {{1}, {1}}));
  REQUIRE(is_morphism(A, f, P2, target));
  const auto s = strip_common_summand(A, f, P2, target);
  CHECK(s.R == DimVec{0, 1});
  CHECK(is_isomorphic(A, s.Y, projective_cover(A, s.Y).P));
  CHECK(is_isomorphic(A, s.Y, P1));
  CHECK_THROWS_AS(strip_common_summand(A, zero_map(P1, P1), P1, P1), std::domain_error);
}

TEST_CASE("catalog class counts match a naive sweep") {
  auto naive = [](const PathAlgebra& A, const DimVec& d) {
    std::vector<Rep> classes;
    Rep cur = semisimple(A, d);
    std::vector<Elem*> cells;
    for (auto& m : cur.maps)
      for (auto& x : m.data()) cells.push_back(&x);
    for (;;) {
      bool known = false;
      for (const auto& r : classes) known = known || is_isomorphic(A, r, cur);
      if (!known) classes.push_back(cur);
      std::size_t i = 0;
      for (; i < cells.size(); ++i) {
        if (++*cells[i] < A.p()) break;
        *cells[i] = 0;
      }
      if (i == cells.size()) break;
    }
    return classes.size();
  };
  const PathAlgebra kronecker(Quiver::acyclic(2, {{0, 1}, {0, 1}}), PrimeField(2));
  for (const auto& A : {kronecker, fixtures::a2(3), fixtures::a3(2)}) {
    RepCatalog cat(A);
    for (const auto& d : dims_up_to(DimVec(A.n(), 2))) {
      CHECK_MESSAGE(cat.class_count(d) == naive(A, d), to_string(RepClassId{d, 0}));
      for (std::size_t i = 0; i < cat.class_count(d); ++i) CHECK(cat.aut({d, i}) == aut_count(A, cat.rep({d, i})));
    }
  }
}
