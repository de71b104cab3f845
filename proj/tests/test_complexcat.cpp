#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "fixtures.hpp"
#include "hallcx/complexcat/complex.hpp"
#include "hallcx/complexcat/cxhom.hpp"
#include "hallcx/complexcat/decompose.hpp"
#include "hallcx/quiverrep/ext.hpp"
#include "hallcx/quiverrep/hom.hpp"

using namespace hallcx;

namespace {

Rep simple(const PathAlgebra& A, std::size_t i) {
  DimVec d(A.n(), 0);
  d[i] = 1;
  return semisimple(A, d);
}

Cx bounded_C(CxContext& ctx, const Rep& M, std::int64_t r) { return shift(ctx, make_CM(ctx, M, 0), r); }

}  // namespace

TEST_CASE("named constructors") {
  CxContext ctx(fixtures::a2(2));
  const auto& A = ctx.base();
  const Rep P1 = projective(A, 0), P2 = projective(A, 1);
  for (std::size_t m : {1u, 2u, 3u}) {
    CHECK(make_Kp(ctx, P1, m) == make_Cf(ctx, identity_map(P1), P1, P1, m));
    CHECK(make_CM(ctx, zero_rep(A), m) == zero_cx(ctx, cyclic_shape(m)));
  }
  for (std::size_t m : {2u, 3u}) {
    CHECK(make_Jp(ctx, P2, m) == make_Tf(ctx, identity_map(P2), P2, P2, m));
    CHECK(make_Tf(ctx, zero_map(zero_rep(A), P1), zero_rep(A), P1, m) == make_Tp(ctx, P1, m));
    CHECK(shift(ctx, make_TM(ctx, simple(A, 0), m), 0) == make_TM(ctx, simple(A, 0), m));
  }
  // projective M: only P in degree 0
  const Cx CP = make_CM(ctx, P1, 3);
  CHECK(CP.comps[0] == P1);
  CHECK(CP.comps[1].is_zero());
  CHECK(CP.comps[2].is_zero());
  // T_{S_1} for m = 2 is the inclusion P_2 -> P_1
  const Cx T = make_TM(ctx, simple(A, 0), 2);
  CHECK(T.comps[0].dims == DimVec{0, 1});
  CHECK(T.comps[1].dims == DimVec{1, 1});
  CHECK(is_injective(A, T.diffs[0]));
  CHECK_THROWS_AS(make_TM(ctx, simple(A, 0), 1), std::domain_error);
  CHECK_THROWS_AS(make_Kp(ctx, simple(A, 0), 2), std::domain_error);
}

TEST_CASE("shifts") {
  CxContext ctx(fixtures::a2(3));
  const auto& A = ctx.base();
  const Rep P1 = projective(A, 0);
  CHECK(shift(ctx, zero_cx(ctx, cyclic_shape(3)), 2) == zero_cx(ctx, cyclic_shape(3)));
  const Cx K = make_Kp(ctx, P1, 2);
  CHECK(is_isomorphic(ctx, shift(ctx, K, 2), K));
  CHECK_FALSE(is_isomorphic(ctx, shift(ctx, K, 1), K));
  const Cx K3 = make_Kp(ctx, P1, 3);
  // odd total shift flips every sign; still isomorphic to the original
  CHECK(is_isomorphic(ctx, shift(ctx, K3, 3), K3));
  CHECK(shift(ctx, K3, 3) != K3);
  CHECK_THROWS_AS(shift(ctx, make_Sp(ctx, P1, 3), 1), std::domain_error);
  CHECK_NOTHROW(shift(ctx, make_Sp(ctx, P1, 3), -2));
}

TEST_CASE("chain maps") {
  CxContext ctx(fixtures::a2(2));
  const auto& A = ctx.base();
  const Rep P1 = projective(A, 0), P2 = projective(A, 1);
  const Cx X = make_TM(ctx, simple(A, 0), 2);
  CHECK(cx_hom_dim(ctx, X, X) >= 1);
  CHECK(cx_hom_dim(ctx, X, zero_cx(ctx, window_shape(2))) == 0);
  CHECK(cx_hom_dim(ctx, make_Sp(ctx, P1, 2), make_Tp(ctx, P2, 2)) == 0);
  CHECK_THROWS_AS(cx_hom_dim(ctx, X, make_Kp(ctx, P1, 2)), std::domain_error);
}

TEST_CASE("higher Ext between shifted C_M against the derived category") {
  for (auto A : {fixtures::a2(2), fixtures::a3(2)}) {
    CxContext ctx(A);
    const auto ind = ctx.catalog().indecomposables_up_to(DimVec(A.n(), 1));
    for (const auto& a : ind)
      for (const auto& b : ind) {
        const Rep& M = ctx.catalog().rep(a);
        const Rep& N = ctx.catalog().rep(b);
        const auto hom = static_cast<std::int64_t>(hom_dim(A, M, N));
        const auto ext = static_cast<std::int64_t>(ext1_dim(A, M, N));
        for (std::int64_t r = -1; r <= 1; ++r)
          for (std::int64_t l = -1; l <= 1; ++l) {
            const Cx X = bounded_C(ctx, M, r), Y = bounded_C(ctx, N, l);
            for (std::int64_t i = 1; i <= 3; ++i) {
              const std::int64_t e = l - r + i;
              const std::int64_t want = e == 0 ? hom : (e == 1 ? ext : 0);
              CHECK(static_cast<std::int64_t>(homotopy_hom_dim(ctx, X, Y, i)) == want);
            }
            const std::int64_t chi = euler_form(A.quiver(), M.dims, N.dims);
            const std::int64_t e = euler_form_cb(ctx, X, Y);
            if (r - l >= 1) CHECK(e == ((r - l) % 2 ? -chi : chi));
            if (l - r > 1) CHECK(e == 0);
            CHECK(e == euler_form_components(ctx, X, Y));
          }
      }
  }
}

TEST_CASE("contractibles are Ext-injective") {
  CxContext ctx(fixtures::a3(2));
  const auto& A = ctx.base();
  const Cx X = direct_sum(ctx, bounded_C(ctx, simple(A, 1), 0), bounded_C(ctx, simple(A, 0), 1));
  for (std::size_t v = 0; v < 3; ++v)
    for (std::int64_t r = -2; r <= 2; ++r) {
      const Cx K = shift(ctx, make_Kp(ctx, projective(A, v), 0), r);
      for (std::int64_t i = 1; i <= 3; ++i) CHECK(homotopy_hom_dim(ctx, X, K, i) == 0);
      CHECK(euler_form_cb(ctx, K, K) == static_cast<std::int64_t>(cx_hom_dim(ctx, K, K)));
    }
}

TEST_CASE("window Euler form: homological sum matches the component formula and is additive") {
  for (std::size_t m : {2u, 3u}) {
    CxContext ctx(fixtures::a2(2));
    const auto keys = key_grid(ctx, CxKind::window, m, {1, 1}, 1);
    std::vector<Cx> objs;
    for (const auto& k : keys) objs.push_back(realize(ctx, k));
    for (const auto& X : objs)
      for (const auto& Y : objs) CHECK(euler_form_cm(ctx, X, Y) == euler_form_components(ctx, X, Y));
    for (const auto& X : objs)
      for (const auto& Y : objs)
        for (const auto& Z : objs) {
          CHECK(euler_form_cm(ctx, direct_sum(ctx, X, Y), Z) ==
                euler_form_cm(ctx, X, Z) + euler_form_cm(ctx, Y, Z));
        }
  }
}

TEST_CASE("minimize examples") {
  CxContext ctx(fixtures::a2(3));
  const auto& A = ctx.base();
  const Rep P1 = projective(A, 0);
  const auto mk = minimize(ctx, make_Kp(ctx, P1, 2));
  CHECK(mk.core_key.labels.empty());
  REQUIRE(mk.stripped.size() == 1);
  CHECK(mk.stripped[0].r == 0);
  CHECK(mk.stripped[0].cls == ctx.catalog().projective_class(0));

  const Cx CM = make_CM(ctx, simple(A, 0), 2);
  const auto mc = minimize(ctx, CM);
  CHECK(mc.stripped.empty());
  CHECK(mc.core == CM);

  std::mt19937_64 rng(7);
  const Cx X = scramble(ctx, direct_sum(ctx, CM, shift(ctx, make_Kp(ctx, P1, 2), 1)), rng);
  const auto mx = minimize(ctx, X);
  CHECK(is_isomorphic(ctx, mx.core, CM));
  REQUIRE(mx.stripped.size() == 1);
  CHECK(mx.stripped[0].r == 1);
  CHECK(mx.stripped[0].kind == LabelKind::K);
}

TEST_CASE("decompose examples") {
  CxContext ctx(fixtures::a2(2));
  const auto& A = ctx.base();
  const auto p1 = ctx.catalog().projective_class(0);
  const auto p2 = ctx.catalog().projective_class(1);
  const auto s1 = ctx.catalog().classify(simple(A, 0));
  CHECK(decompose(ctx, make_Sp(ctx, projective(A, 0), 3)) == CxKey{CxKind::window, 3, {{LabelKind::S, 0, p1}}});

  std::mt19937_64 rng(11);
  const CxKey w{CxKind::window, 3, {{LabelKind::T, 0, s1}, {LabelKind::J, 1, p2}}};
  CHECK(decompose(ctx, scramble(ctx, realize(ctx, w), rng)) == w);
  CxKey c{CxKind::cyclic, 2, {{LabelKind::C, 0, s1}, {LabelKind::K, 1, p2}}};
  std::sort(c.labels.begin(), c.labels.end());
  CHECK(decompose(ctx, scramble(ctx, realize(ctx, c), rng)) == c);
}

TEST_CASE("Krull-Schmidt round trip over random label sums") {
  std::mt19937_64 rng(2024);
  int trials = 0;
  for (auto A : {fixtures::a2(2), fixtures::a2(3), fixtures::a3(2)}) {
    CxContext ctx(A);
    struct Cat {
      CxKind kind;
      std::size_t m;
    };
    for (const Cat c : {Cat{CxKind::cyclic, 1}, Cat{CxKind::cyclic, 2}, Cat{CxKind::cyclic, 3}, Cat{CxKind::window, 1},
                        Cat{CxKind::window, 2}, Cat{CxKind::window, 3}, Cat{CxKind::bounded, 0}}) {
      const auto keys = key_grid(ctx, c.kind, c.m, DimVec(A.n(), 1), 1, -1, 1);
      std::vector<Label> letters;
      for (const auto& k : keys)
        if (k.labels.size() == 1) letters.push_back(k.labels[0]);
      REQUIRE_FALSE(letters.empty());
      for (int t = 0; t < 6; ++t) {
        CxKey key{c.kind, c.m, {}};
        const std::size_t size = 1 + rng() % 3;
        for (std::size_t i = 0; i < size; ++i) key.labels.push_back(letters[rng() % letters.size()]);
        std::sort(key.labels.begin(), key.labels.end());
        const Cx X = scramble(ctx, realize(ctx, key), rng);
        CHECK_MESSAGE(decompose(ctx, X) == key, to_string(key));
        ++trials;
      }
    }
  }
  CHECK(trials >= 100);
}

TEST_CASE("every small complex decomposes into the listed indecomposables") {
  CxContext ctx(fixtures::a2(2));
  const auto& A = ctx.base();
  const std::vector<Rep> projs = {zero_rep(A), projective(A, 0), projective(A, 1),
                                  direct_sum(projective(A, 0), projective(A, 1))};
  std::size_t seen = 0;
  for (const CxShape s : {cyclic_shape(1), cyclic_shape(2), window_shape(2), window_shape(3)}) {
    std::vector<std::size_t> idx(s.len, 0);
    for (;;) {
      std::vector<Rep> comps;
      for (auto i : idx) comps.push_back(projs[i]);
      for_each_complex(ctx, s, comps, [&](const Cx& X) {
        const CxKey k = decompose(ctx, X);
        for (const auto& l : k.labels) CHECK(label_in_range(k, l));
        ++seen;
      });
      std::size_t i = 0;
      for (; i < idx.size(); ++i) {
        if (++idx[i] < projs.size()) break;
        idx[i] = 0;
      }
      if (i == idx.size()) break;
    }
  }
  CHECK(seen > 100);
}

TEST_CASE("keys with a given profile") {
  CxContext ctx(fixtures::a2(2));
  const auto& A = ctx.base();
  // window m = 2 with components P_2, P_1: T_{S_1}, T_{P_2}[0] + S.., etc.
  const auto keys = keys_with_profile(ctx, window_shape(2), {{0, 1}, {1, 1}});
  for (const auto& k : keys) CHECK(key_profile(ctx, k) == std::vector<DimVec>{{0, 1}, {1, 1}});
  const auto s1 = ctx.catalog().classify(simple(A, 0));
  CHECK(std::find(keys.begin(), keys.end(), CxKey{CxKind::window, 2, {{LabelKind::T, 0, s1}}}) != keys.end());
  CHECK(keys.size() == 2);
}
