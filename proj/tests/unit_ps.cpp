#include <doctest.h>

#include <algorithm>
#include <map>

#include "catt/ps.hpp"
#include "catt/rules.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace catt;
using namespace catt::testing;

namespace {

std::vector<ps_move> moves_of(const char* s) {
  std::vector<ps_move> out;
  for (; *s != '\0'; ++s) {
    if (*s == 's') out.push_back(ps_move::start);
    if (*s == 'e') out.push_back(ps_move::extend);
    if (*s == 'd') out.push_back(ps_move::drop);
  }
  return out;
}

var_set set_of(const std::vector<var_name>& xs) {
  var_set out;
  for (var_name x : xs) out.insert(x);
  return out;
}

}  // namespace

TEST_CASE("ps recognition of the worked examples") {
  raw_ctx point;
  point.push(0, obj());
  auto p = check_ps(point);
  REQUIRE(p.ok());
  CHECK(p.value().moves == moves_of("s"));
  CHECK(p.value().final_var == 0);
  CHECK(p.value().final_ty->is_obj());

  auto c = check_ps(ctx_composable());
  REQUIRE(c.ok());
  CHECK(c.value().moves == moves_of("seded"));
  CHECK(c.value().final_var == 3);

  auto w = check_ps(ctx_whisker());
  REQUIRE(w.ok());
  CHECK(w.value().moves == moves_of("seedded"));
  CHECK(w.value().final_var == 5);

  auto loop = check_ps(ctx_loop());
  REQUIRE_FALSE(loop.ok());
  CHECK(loop.error().kind == diag_kind::not_ps);
  CHECK(loop.error().rule == rule_id::ps);
}

TEST_CASE("ps rejections") {
  CHECK_FALSE(check_ps(raw_ctx{}).ok());

  raw_ctx two_objs;
  two_objs.push(0, obj());
  two_objs.push(1, obj());
  CHECK_FALSE(check_ps(two_objs).ok());  // trailing filler without arrow

  raw_ctx ill;
  ill.push(0, obj());
  ill.push(0, obj());
  auto r = check_ps(ill);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().kind == diag_kind::not_ps);

  raw_ctx arrow_first;
  arrow_first.push(0, arrow(obj(), var(0), var(0)));
  CHECK_FALSE(check_ps(arrow_first).ok());
}

TEST_CASE("triangle relation on the worked examples") {
  raw_ctx gc = ctx_composable();
  auto rel = triangle_rel::of(gc);
  // total chain x < f < y < h < z, i.e. 0 < 2 < 1 < 4 < 3
  const var_name chain[] = {0, 2, 1, 4, 3};
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      CHECK(rel.related(chain[i], chain[j]));
      CHECK_FALSE(rel.related(chain[j], chain[i]));
    }
  }
  CHECK(is_linear(gc, rel));

  raw_ctx loop = ctx_loop();
  auto lrel = triangle_rel::of(loop);
  CHECK(lrel.related(0, 1));
  CHECK(lrel.related(1, 0));
  CHECK(lrel.related(0, 0));  // closure makes it reflexive
  CHECK_FALSE(is_linear(loop, lrel));

  raw_ctx point;
  point.push(0, obj());
  CHECK(triangle_rel::of(point).pairs().empty());
  CHECK(is_linear(point, triangle_rel::of(point)));

  raw_ctx two;
  two.push(0, obj());
  two.push(1, obj());
  CHECK_FALSE(is_linear(two, triangle_rel::of(two)));  // incomparable pair
}

TEST_CASE("boundary variable lists of the worked examples") {
  auto c = check_ps(ctx_composable());
  REQUIRE(c.ok());
  CHECK(src_vars(c.value(), 1) == std::vector<var_name>{0});
  CHECK(tgt_vars(c.value(), 1) == std::vector<var_name>{3});
  CHECK(src_set(c.value()) == var_set{0});
  CHECK(tgt_set(c.value()) == var_set{3});

  auto w = check_ps(ctx_whisker());
  REQUIRE(w.ok());
  CHECK(src_vars(w.value(), 2) == std::vector<var_name>{0, 1, 2, 5, 6});
  CHECK(tgt_vars(w.value(), 2) == std::vector<var_name>{0, 1, 3, 5, 6});
  CHECK(src_set(w.value()) == var_set{0, 1, 2, 5, 6});
  CHECK(tgt_set(w.value()) == var_set{0, 1, 3, 5, 6});
}

TEST_CASE("boundary lists at extreme indices") {
  // At i = 0 the start clause contributes nothing and extends never fire.
  auto c = check_ps(ctx_composable());
  REQUIRE(c.ok());
  CHECK(src_vars(c.value(), 0).empty());
  CHECK(tgt_vars(c.value(), 0).empty());

  raw_ctx point;
  point.push(0, obj());
  auto p = check_ps(point);
  REQUIRE(p.ok());
  CHECK(src_vars(p.value(), 1) == std::vector<var_name>{0});
  CHECK(tgt_vars(p.value(), 1) == std::vector<var_name>{0});
  // dim_ctx(point) = 0, so the boundary sets hit the i = 0 clause: empty.
  CHECK(src_set(p.value()).empty());
  CHECK(tgt_set(p.value()).empty());

  // For i above the context dimension both lists enumerate every variable.
  for (std::uint32_t i = 2; i <= 4; ++i) {
    CHECK(src_vars(c.value(), i) == std::vector<var_name>{0, 1, 2, 3, 4});
    CHECK(tgt_vars(c.value(), i) == std::vector<var_name>{0, 1, 2, 3, 4});
  }
}

TEST_CASE("disks are ps-contexts in every dimension, spheres are not") {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    auto d = check_ps(disk(n));
    REQUIRE(d.ok());
    std::vector<ps_move> want{ps_move::start};
    want.insert(want.end(), n, ps_move::extend);
    want.insert(want.end(), n, ps_move::drop);
    CHECK(d.value().moves == want);

    // the brute-force search agrees, with a unique derivation
    auto all = ps_derivation_search(disk(n));
    REQUIRE(all.size() == 1);
    CHECK(all.front() == want);

    // boundary sets: everything except the top cell and the matching
    // endpoint of the sphere pair below it
    var_set all_vars = vars_ctx(disk(n));
    var_set want_src = all_vars.minus(var_set{2 * n - 1, 2 * n});
    var_set want_tgt = all_vars.minus(var_set{2 * n - 2, 2 * n});
    CHECK(src_set(d.value()) == want_src);
    CHECK(tgt_set(d.value()) == want_tgt);

    CHECK_FALSE(check_ps(sphere(n)).ok());
    CHECK(ps_derivation_search(sphere(n)).empty());
  }
}

TEST_CASE("ill-formed contexts are rejected before replay") {
  raw_ctx dangling;
  dangling.push(0, obj());
  dangling.push(1, arrow(obj(), var(5), var(0)));
  auto r = check_ps(dangling);
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().kind == diag_kind::not_ps);
}

TEST_CASE("ps oracle equivalence on small contexts") {
  std::size_t accepted = 0;
  for_each_glob_ctx(5, 2, [&](const raw_ctx& ctx) {
    auto mine = check_ps(ctx);
    auto all = ps_derivation_search(ctx);
    if (mine.ok()) {
      ++accepted;
      REQUIRE(all.size() == 1);  // uniqueness of derivations
      CHECK(mine.value().moves == all.front());
      // acceptance implies well-formedness and linearity
      CHECK_FALSE(check_ctx(glob_signature(), ctx).has_value());
      CHECK(is_linear(ctx, triangle_rel::of(ctx)));
    } else {
      CHECK(all.empty());
    }
  });
  CHECK(accepted > 0);
}

TEST_CASE("boundary replay invariants over enumerated ps-contexts") {
  std::map<var_name, std::uint32_t> var_dim;
  for_each_glob_ctx(5, 2, [&](const raw_ctx& ctx) {
    auto d = check_ps(ctx);
    if (!d.ok()) return;
    var_dim.clear();
    for (const auto& e : ctx.entries) var_dim[e.name] = dim_ty(e.ty);
    const std::uint32_t top = dim_ctx(ctx);
    for (std::uint32_t i = 0; i <= top + 2; ++i) {
      auto src = src_vars(d.value(), i);
      auto tgt = tgt_vars(d.value(), i);
      // equal lengths and equal multisets of variable dimensions
      REQUIRE(src.size() == tgt.size());
      auto dims_of = [&](const std::vector<var_name>& xs) {
        std::vector<std::uint32_t> ds;
        for (var_name x : xs) ds.push_back(var_dim.at(x));
        std::sort(ds.begin(), ds.end());
        return ds;
      };
      CHECK(dims_of(src) == dims_of(tgt));
      // boundary monotonicity: above the top dimension, everything in order
      if (i >= top + 1) {
        std::vector<var_name> all;
        for (const auto& e : ctx.entries) all.push_back(e.name);
        CHECK(src == all);
        CHECK(tgt == all);
      }
      // lists are duplicate-free and within the declared variables
      CHECK(set_of(src).size() == src.size());
      CHECK(set_of(tgt).size() == tgt.size());
      CHECK(set_of(src).subset_of(vars_ctx(ctx)));
      CHECK(set_of(tgt).subset_of(vars_ctx(ctx)));
    }
  });
}
