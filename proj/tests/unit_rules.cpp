#include <doctest.h>

#include <thread>

#include "catt/rules.hpp"
#include "catt/sexpr.hpp"
#include "catt/theory.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace catt;
using namespace catt::testing;

namespace {
const theory_signature& glob = glob_signature();
}

TEST_CASE("context checking") {
  CHECK_FALSE(check_ctx(glob, raw_ctx{}).has_value());

  raw_ctx good;
  good.push(0, obj());
  good.push(1, obj());
  good.push(2, arrow(obj(), var(0), var(1)));
  CHECK_FALSE(check_ctx(glob, good).has_value());

  raw_ctx bad;
  bad.push(0, obj());
  bad.push(0, obj());
  auto err = check_ctx(glob, bad);
  REQUIRE(err.has_value());
  CHECK(err->kind == diag_kind::name_out_of_order);
  CHECK(err->rule == rule_id::cc);
}

TEST_CASE("type checking") {
  raw_ctx point;
  point.push(0, obj());
  CHECK_FALSE(check_ty(glob, point, obj()).has_value());

  raw_ctx gc = ctx_composable();
  CHECK_FALSE(check_ty(glob, gc, arrow(obj(), var(0), var(3))).has_value());

  // var 2 is an arrow, not an object
  auto err = check_ty(glob, gc, arrow(obj(), var(0), var(2)));
  REQUIRE(err.has_value());
  CHECK(err->kind == diag_kind::endpoint_type_mismatch);
}

TEST_CASE("term inference") {
  raw_ctx gc = ctx_composable();
  auto h_ty = infer_tm(glob, gc, var(4));
  REQUIRE(h_ty.ok());
  CHECK(syn_eq(h_ty.value(), arrow(obj(), var(1), var(3))));

  auto comp_ty =
      infer_tm(catt_signature(), gc, coh(comp_index(), identity(gc)));
  REQUIRE(comp_ty.ok());
  CHECK(syn_eq(comp_ty.value(), arrow(obj(), var(0), var(3))));

  raw_ctx point;
  point.push(0, obj());
  auto err = infer_tm(glob, point, var(1));
  REQUIRE_FALSE(err.ok());
  CHECK(err.error().kind == diag_kind::unbound_variable);
  CHECK(err.error().rule == rule_id::var);
}

TEST_CASE("term checking") {
  raw_ctx gc = ctx_composable();
  CHECK_FALSE(check_tm(glob, gc, var(0), obj()).has_value());
  CHECK_FALSE(
      check_tm(glob, gc, var(2), arrow(obj(), var(0), var(1))).has_value());
  auto err = check_tm(glob, gc, var(2), obj());
  REQUIRE(err.has_value());
  CHECK(err->kind == diag_kind::type_mismatch);
  CHECK(err->expected.has_value());
  CHECK(err->actual.has_value());
}

TEST_CASE("substitution checking") {
  raw_ctx gc = ctx_composable();
  raw_ctx any;
  any.push(0, obj());
  CHECK_FALSE(check_sub(glob, any, raw_sub{}, raw_ctx{}).has_value());
  CHECK_FALSE(check_sub(glob, gc, identity(gc), gc).has_value());

  raw_ctx two;
  two.push(0, obj());
  two.push(1, obj());
  raw_sub short_sub;
  short_sub.push(0, var(0));
  auto err = check_sub(glob, gc, short_sub, two);
  REQUIRE(err.has_value());
  CHECK(err->kind == diag_kind::length_mismatch);

  raw_sub misnamed;
  misnamed.push(0, var(0));
  misnamed.push(2, var(0));
  auto err2 = check_sub(glob, gc, misnamed, two);
  REQUIRE(err2.has_value());
  CHECK(err2->kind == diag_kind::target_name_mismatch);
}

TEST_CASE("glob admits no coherence terms") {
  raw_ctx gc = ctx_composable();
  auto r = infer_tm(glob, gc, coh(comp_index(), identity(gc)));
  REQUIRE_FALSE(r.ok());
  CHECK(r.error().kind == diag_kind::index_type_ill_formed);
}

TEST_CASE("disk and sphere contexts") {
  CHECK(syn_eq(u_arrow(0), obj()));
  CHECK(sphere(0).empty());
  raw_ctx d0;
  d0.push(0, obj());
  CHECK(syn_eq(disk(0), d0));

  raw_ctx s1;
  s1.push(0, obj());
  s1.push(1, obj());
  CHECK(syn_eq(sphere(1), s1));
  CHECK(syn_eq(u_arrow(1), arrow(obj(), var(0), var(1))));

  raw_ctx d1 = s1;
  d1.push(2, arrow(obj(), var(0), var(1)));
  CHECK(syn_eq(disk(1), d1));

  for (std::uint32_t n = 0; n <= 10; ++n) {
    CAPTURE(n);
    CHECK_FALSE(check_ctx(glob, sphere(n)).has_value());
    CHECK_FALSE(check_ctx(glob, disk(n)).has_value());
    CHECK_FALSE(check_ty(glob, sphere(n), u_arrow(n)).has_value());
    // inherited by the full theory
    CHECK_FALSE(check_ctx(catt_signature(), disk(n)).has_value());
    CHECK_FALSE(check_ty(catt_signature(), sphere(n), u_arrow(n)).has_value());
  }
}

TEST_CASE("type classifier examples") {
  raw_ctx gc = ctx_composable();

  auto c0 = classify_ty(obj());
  CHECK(c0.dim == 0);
  CHECK(c0.into_sphere.empty());

  auto c1 = classify_ty(arrow(obj(), var(0), var(3)));
  CHECK(c1.dim == 1);
  raw_sub expect;
  expect.push(0, var(0));
  expect.push(1, var(3));
  CHECK(syn_eq(c1.into_sphere, expect));
  CHECK(syn_eq(apply_sub_ty(u_arrow(1), c1.into_sphere),
               arrow(obj(), var(0), var(3))));
  CHECK_FALSE(
      check_sub(glob, gc, c1.into_sphere, sphere(1)).has_value());

  auto c2 = classify_ty(u_arrow(2));
  CHECK(c2.dim == 2);
  CHECK(syn_eq(c2.into_sphere, identity(sphere(2))));

  raw_sub s;
  s.push(0, var(1));
  s.push(1, var(3));
  CHECK(syn_eq(ty_of_sphere_sub(1, s), arrow(obj(), var(1), var(3))));
  CHECK(syn_eq(ty_of_sphere_sub(0, raw_sub{}), obj()));
}

TEST_CASE("classifier round-trips on random derivable types") {
  gen g(77);
  for (int iter = 0; iter < 200; ++iter) {
    raw_ctx ctx = g.glob_ctx(6, 3);
    type_ptr a = g.glob_ty(ctx, 3);
    auto c = classify_ty(a);
    CHECK(c.dim == dim_ty(a));
    CHECK_FALSE(check_sub(glob, ctx, c.into_sphere, sphere(c.dim)).has_value());
    CHECK(syn_eq(ty_of_sphere_sub(c.dim, c.into_sphere), a));
  }

  // with coherence endpoints, against the full theory
  for (int iter = 0; iter < 200; ++iter) {
    raw_ctx ctx = g.glob_ctx(4, 2);
    type_ptr a = g.catt_ty(ctx, 2);
    REQUIRE_FALSE(check_ty(catt_signature(), ctx, a).has_value());
    auto c = classify_ty(a);
    CHECK(c.dim == dim_ty(a));
    CHECK_FALSE(check_sub(catt_signature(), ctx, c.into_sphere, sphere(c.dim))
                    .has_value());
    CHECK(syn_eq(ty_of_sphere_sub(c.dim, c.into_sphere), a));
  }
}

TEST_CASE("weakening on random derivable data") {
  gen g(31);
  const theory_signature& sig = catt_signature();
  for (int iter = 0; iter < 100; ++iter) {
    raw_ctx ctx = g.glob_ctx(4, 2);
    type_ptr a = g.glob_ty(ctx, 2);
    term_ptr t = g.term_of(ctx, a, iter % 2 == 1);
    auto s = g.sub_onto(ctx, false);

    raw_ctx wider = ctx;
    wider.push(static_cast<var_name>(wider.size()), g.glob_ty(wider, 2));
    REQUIRE_FALSE(check_ctx(sig, wider).has_value());
    CHECK_FALSE(check_ty(sig, wider, a).has_value());
    CHECK_FALSE(check_tm(sig, wider, t, a).has_value());

    raw_ctx wider_dom = s.dom;
    wider_dom.push(static_cast<var_name>(wider_dom.size()),
                   g.glob_ty(wider_dom, 2));
    CHECK_FALSE(check_sub(sig, wider_dom, s.sub, ctx).has_value());
  }
}

TEST_CASE("sub-derivability of inference") {
  gen g(32);
  const theory_signature& sig = catt_signature();
  for (int iter = 0; iter < 100; ++iter) {
    raw_ctx ctx = g.glob_ctx(4, 2);
    type_ptr a = g.glob_ty(ctx, 2);
    term_ptr t = g.term_of(ctx, a, iter % 2 == 1);
    auto inferred = infer_tm(sig, ctx, t);
    REQUIRE(inferred.ok());
    CHECK_FALSE(check_ctx(sig, ctx).has_value());
    CHECK_FALSE(check_ty(sig, ctx, inferred.value()).has_value());

    auto s = g.sub_onto(ctx, false);
    REQUIRE_FALSE(check_sub(sig, s.dom, s.sub, ctx).has_value());
    CHECK_FALSE(check_ctx(sig, s.dom).has_value());
  }
}

TEST_CASE("preservation under substitution") {
  gen g(33);
  const theory_signature& sig = catt_signature();
  for (int iter = 0; iter < 100; ++iter) {
    raw_ctx ctx = g.glob_ctx(4, 2);
    type_ptr a = g.glob_ty(ctx, 2);
    term_ptr t = g.term_of(ctx, a, iter % 2 == 1);
    auto s = g.sub_onto(ctx, iter % 3 == 0);
    REQUIRE_FALSE(check_sub(sig, s.dom, s.sub, ctx).has_value());
    CHECK_FALSE(check_ty(sig, s.dom, apply_sub_ty(a, s.sub)).has_value());
    CHECK_FALSE(check_tm(sig, s.dom, apply_sub_tm(t, s.sub),
                         apply_sub_ty(a, s.sub))
                    .has_value());
  }
}

TEST_CASE("composition admissibility") {
  gen g(34);
  const theory_signature& sig = catt_signature();
  for (int iter = 0; iter < 100; ++iter) {
    raw_ctx ctx = g.glob_ctx(4, 2);
    auto s1 = g.sub_onto(ctx, iter % 2 == 1);
    auto s2 = g.sub_onto(s1.dom, false);
    REQUIRE_FALSE(check_sub(sig, s1.dom, s1.sub, ctx).has_value());
    REQUIRE_FALSE(check_sub(sig, s2.dom, s2.sub, s1.dom).has_value());
    CHECK_FALSE(
        check_sub(sig, s2.dom, compose(s1.sub, s2.sub), ctx).has_value());
  }
}

TEST_CASE("inference is deterministic") {
  gen g(35);
  const theory_signature& sig = catt_signature();
  raw_ctx gc = ctx_composable();
  term_ptr t = coh(comp_index(), identity(gc));

  // across fresh checkers, cache settings and check orders
  checker with_cache(sig, true);
  checker no_cache(sig, false);
  auto r1 = with_cache.infer_tm(gc, t);
  auto r2 = no_cache.infer_tm(gc, t);
  auto r3 = with_cache.infer_tm(gc, t);
  REQUIRE(r1.ok());
  REQUIRE(r2.ok());
  REQUIRE(r3.ok());
  CHECK(render_ty(r1.value()) == render_ty(r2.value()));
  CHECK(render_ty(r1.value()) == render_ty(r3.value()));

  for (int iter = 0; iter < 50; ++iter) {
    raw_ctx ctx = g.glob_ctx(4, 2);
    type_ptr a = g.glob_ty(ctx, 2);
    term_ptr u = g.term_of(ctx, a, true);
    auto i1 = infer_tm(sig, ctx, u);
    auto i2 = infer_tm(sig, ctx, u);
    REQUIRE(i1.ok());
    REQUIRE(i2.ok());
    CHECK(render_ty(i1.value()) == render_ty(i2.value()));
  }
}

TEST_CASE("a shared checker is safe to use concurrently") {
  checker shared(catt_signature(), true);
  raw_ctx gc = ctx_composable();
  term_ptr t = coh(comp_index(), identity(gc));
  const std::string want = render_ty(arrow(obj(), var(0), var(3)));

  std::vector<std::thread> workers;
  std::vector<int> good(4, 0);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (int k = 0; k < 200; ++k) {
        auto r = shared.infer_tm(gc, t);
        if (r.ok() && render_ty(r.value()) == want) ++good[w];
      }
    });
  }
  for (auto& th : workers) th.join();
  for (int w = 0; w < 4; ++w) CHECK(good[w] == 200);
}
