#include <doctest.h>

#include "fixtures.hpp"
#include "hallcx/io/json_io.hpp"

using namespace hallcx;

TEST_CASE("quiver json") {
  const Quiver Q = parse_quiver(R"({"vertices": 3, "arrows": [[1, 2], [2, 3]]})");
  CHECK(Q.vertex_count() == 3);
  REQUIRE(Q.arrows().size() == 2);
  CHECK(Q.arrows()[1].source == 1);
  CHECK(Q.arrows()[1].target == 2);
  const Quiver R = parse_quiver(quiver_to_json(Q));
  CHECK(R.arrows() == Q.arrows());

  CHECK_THROWS_AS(parse_quiver("{"), ParseError);
  CHECK_THROWS_AS(parse_quiver(R"({"vertices": 2, "arrows": [[1, 3]]})"), ParseError);
  CHECK_THROWS_AS(parse_quiver(R"({"vertices": 2, "arrows": [[1, 2], [2, 1]]})"), ParseError);
}

TEST_CASE("complex json round trips") {
  CxContext ctx(fixtures::a2(3));
  const Rep S1 = semisimple(ctx.base(), {1, 0});
  for (const Cx& X : {make_TM(ctx, S1, 2), make_CM(ctx, S1, 3), make_Jp(ctx, ctx.projective_rep(0), 2),
                      make_Kp(ctx, ctx.projective_rep(1), 0)}) {
    const Cx Y = parse_complex(ctx, complex_to_json(X));
    CHECK(Y == X);
  }
  // d o d != 0
  CHECK_THROWS_AS(parse_complex(ctx, R"({"kind": "window", "m": 3, "components": [
      {"dims": [1, 1], "maps": [[[1]]]}, {"dims": [1, 1], "maps": [[[1]]]}, {"dims": [1, 1], "maps": [[[1]]]}],
      "differentials": [[[[1]], [[1]]], [[[1]], [[1]]]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_complex(ctx, R"({"kind": "spiral", "m": 2, "components": [], "differentials": []})"),
                  ParseError);
}

TEST_CASE("class ids and keys parse back") {
  CHECK(parse_class_id("(1,0)#0") == RepClassId{{1, 0}, 0});
  CHECK(parse_class_id(to_string(RepClassId{{2, 1, 0}, 3})) == RepClassId{{2, 1, 0}, 3});
  CHECK_THROWS_AS(parse_class_id("(1,0)"), ParseError);

  CxContext ctx(fixtures::a2(2));
  for (auto kind : {CxKind::cyclic, CxKind::window, CxKind::bounded})
    for (const auto& k : key_grid(ctx, kind, kind == CxKind::bounded ? 0 : 2, {1, 1}, 2, -1, 1))
      CHECK(parse_cx_key(to_string(k)) == k);
  CHECK_THROWS_AS(parse_cx_key("window(2):Q(1,0)#0[0]"), ParseError);
}
