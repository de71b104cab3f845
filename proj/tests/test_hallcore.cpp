#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "hallcx/hallcore/hall.hpp"
#include "hallcx/hallcore/theorem.hpp"
#include "hallcx/quiverrep/ext.hpp"

using namespace hallcx;

namespace {

RepClassId cls(RepCatalog& cat, const DimVec& d, Elem arrow = 0) {
  Rep M = semisimple(cat.algebra(), d);
  if (!M.maps.empty() && M.maps[0].rows() && M.maps[0].cols()) M.maps[0](0, 0) = arrow;
  return cat.classify(M);
}

template <class Cat>
void check_routes(HallAlgebra<Cat>& H, const std::vector<typename Cat::Key>& keys) {
  auto& cat = H.category();
  for (const auto& M : keys)
    for (const auto& N : keys) {
      const auto& by_ext = H.basis_product(M, N);
      const auto by_sub = H.basis_product_by_subobjects(M, N);
      CHECK_MESSAGE(HallElt<typename Cat::Key>(by_sub).terms() == by_ext, cat.name(M) << " * " << cat.name(N));
      if (cat.is_zero(M) || cat.is_zero(N)) continue;
      const auto counts = H.ext_counts(M, N);
      std::uint64_t total = 0;
      for (const auto& [L, c] : counts) {
        CHECK(H.ext_count(M, N, L) == c);
        total += c;
      }
      CHECK(rational_of(total) == power_of(cat.p(), static_cast<std::int64_t>(H.ext1_dim(M, N))));
      CHECK(counts.count(cat.direct_sum(M, N)) == 1);
    }
}

template <class Cat>
void check_associativity(HallAlgebra<Cat>& H, const std::vector<typename Cat::Key>& keys, int samples,
                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    const auto x = H.basis(keys[rng() % keys.size()]);
    const auto y = H.basis(keys[rng() % keys.size()]);
    const auto z = H.basis(keys[rng() % keys.size()]);
    CHECK(H.product(H.product(x, y), z) == H.product(x, H.product(y, z)));
  }
}

}  // namespace

TEST_CASE("Hall numbers on a point and on A2") {
  for (std::uint32_t p : {2u, 3u}) {
    RepCatalog cat(fixtures::point(p));
    ModuleCategory C(cat);
    HallAlgebra H(C);
    const auto k = cls(cat, {1}), k2 = cls(cat, {2});
    CHECK(H.hall_number_g(k, k, k2) == p + 1);
    CHECK(H.hall_number_g(C.zero(), k2, k2) == 1);
    CHECK(H.ext_count(k, k, k2) == 1);
    CHECK(H.basis_product(k, k) == HallElt<RepClassId>::basis(k2, Rational(1, p)).terms());
    CHECK(H.product(H.basis(k), H.basis(C.zero())) == H.basis(k));
  }
  for (std::uint32_t p : {2u, 3u}) {
    RepCatalog cat(fixtures::a2(p));
    ModuleCategory C(cat);
    HallAlgebra H(C);
    const auto s1 = cls(cat, {1, 0}), s2 = cls(cat, {0, 1}), p1 = cls(cat, {1, 1}, 1), s12 = cls(cat, {1, 1}, 0);
    CHECK(H.hall_number_g(s1, s2, p1) == 1);
    CHECK(H.ext_count(s1, s2, p1) == p - 1);
    CHECK(H.ext_count(s1, s2, s12) == 1);
    auto want = HallElt<RepClassId>::basis(s12);
    want.add(p1, p - 1);
    CHECK(H.product(H.basis(s1), H.basis(s2)) == want);
    CHECK(H.product(H.basis(s2), H.basis(s1)) == H.basis(s12));
  }
}

TEST_CASE("module Hall algebra: routes, Riedtmann-Peng, sum rule, associativity") {
  for (auto A : {fixtures::a2(2), fixtures::a2(3), fixtures::a3(2)}) {
    RepCatalog cat(A);
    ModuleCategory C(cat);
    HallAlgebra H(C);
    const auto keys = cat.classes_up_to(DimVec(A.n(), 1));
    check_routes(H, keys);
    check_associativity(H, keys, 60, 5);
  }
}

TEST_CASE("complex Hall algebras: routes and associativity") {
  CxContext ctx(fixtures::a2(2));
  struct Case {
    CxKind kind;
    std::size_t m;
  };
  for (const Case c : {Case{CxKind::cyclic, 1}, Case{CxKind::cyclic, 2}, Case{CxKind::window, 2}, Case{CxKind::window, 3}}) {
    ComplexCategory C(ctx, c.kind, c.m);
    HallAlgebra H(C);
    const auto keys = key_grid(ctx, c.kind, c.m, {1, 1}, 1);
    check_routes(H, keys);
    check_associativity(H, keys, 60, 9);
  }
}

TEST_CASE("automorphism counts from isotypic blocks match brute force") {
  for (auto A : {fixtures::a2(2), fixtures::a2(3), fixtures::a3(2)}) {
    RepCatalog cat(A);
    for (const auto& id : cat.classes_up_to(DimVec(A.n(), 2)))
      CHECK(cat.aut(id) == aut_count(A, cat.rep(id)));
  }
  CxContext ctx(fixtures::a2(2));
  for (const CxKind kind : {CxKind::cyclic, CxKind::window}) {
    ComplexCategory C(ctx, kind, 2);
    for (const auto& k : key_grid(ctx, kind, 2, {1, 1}, 2)) {
      const Cx& X = C.complex(k);
      CHECK(C.aut(k) == aut_count(ctx.flat_algebra(X.shape), ctx.flatten(X)));
    }
  }
}

TEST_CASE("gamma counts") {
  RepCatalog cat(fixtures::a2(3));
  const auto s1 = cls(cat, {1, 0}), s2 = cls(cat, {0, 1}), p1 = cls(cat, {1, 1}, 1);
  const RepClassId zero{{0, 0}, 0};
  CHECK(gamma_count(cat, s2, s1, s2, s1) == 1);
  CHECK(gamma_count(cat, p1, s2, p1, s2) == 1);
  // only isomorphisms f, so the count is a_M and gamma is 1 / a_M
  for (const auto& M : cat.classes_up_to({1, 1}))
    CHECK(gamma_count(cat, M, M, zero, zero) == Rational(1) / rational_of(cat.aut(M)));
  CHECK(gamma_count(cat, s2, p1, s2, p1) == 1);
  CHECK(gamma_count(cat, s2, p1, zero, s1) == 1);
  CHECK(gamma_count(cat, s2, p1, zero, p1) == 0);
}

TEST_CASE("chi is a surjective homomorphism killing the ideal") {
  CxContext ctx(fixtures::a2(2));
  for (std::size_t m : {1u, 2u, 3u}) {
    ComplexCategory cyc(ctx, CxKind::cyclic, m);
    ComplexCategory win(ctx, CxKind::window, m);
    HallAlgebra Hc(cyc);
    HallAlgebra Hw(win);
    const auto keys = key_grid(ctx, CxKind::cyclic, m, {1, 1}, 1);
    for (const auto& a : keys)
      for (const auto& b : keys) {
        const auto x = Hc.basis(a), y = Hc.basis(b);
        const auto xy = Hc.product(x, y);
        CHECK(chi(cyc, xy) == Hw.product(chi(cyc, x), chi(cyc, y)));
        if (!d0_vanishes(cyc, a) || !d0_vanishes(cyc, b)) CHECK(ideal_I_part(cyc, xy) == xy);
      }
    // the d_0 = 0 classes map bijectively onto window classes of the same size
    std::set<CxKey> image;
    std::size_t d0 = 0;
    for (const auto& k : key_grid(ctx, CxKind::cyclic, m, {1, 1}, 2))
      if (auto w = chi(cyc, k)) {
        ++d0;
        image.insert(*w);
        CHECK(chi(cyc, chi_section(cyc, *w)) == *w);
      }
    CHECK(image.size() == d0);
    for (const auto& w : key_grid(ctx, CxKind::window, m, {1, 1}, 1)) CHECK(chi(cyc, chi_section(cyc, w)) == w);
  }
  ComplexCategory cyc(ctx, CxKind::cyclic, 2);
  const auto p2 = ctx.catalog().projective_class(1);
  CHECK(chi(cyc, CxKey{CxKind::cyclic, 2, {{LabelKind::K, 0, p2}}}) == CxKey{CxKind::window, 2, {{LabelKind::J, 0, p2}}});
  CHECK_FALSE(chi(cyc, CxKey{CxKind::cyclic, 2, {{LabelKind::K, 1, p2}}}).has_value());
}
