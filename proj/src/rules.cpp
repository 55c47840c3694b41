#include "catt/rules.hpp"

#include <utility>

#include "catt/index.hpp"
#include "catt/sexpr.hpp"

namespace catt {

namespace {

diagnostic with_expected_actual(diagnostic d, std::string expected,
                                std::string actual) {
  d.expected = std::move(expected);
  d.actual = std::move(actual);
  return d;
}

}  // namespace

const theory_signature& glob_signature() {
  static const theory_signature sig = [] {
    theory_signature s;
    s.name = "glob";
    s.wf_dimension = true;  // vacuously: no index is ever admitted
    s.index_eq = [](const coh_index& a, const coh_index& b) {
      return eq_index(a, b);
    };
    s.ctx_of = [](const coh_index& i) -> const raw_ctx& { return i.ps.ctx; };
    s.ty_of = [](const coh_index& i) { return i.ty; };
    s.admit_index = [](const coh_index&) -> check_result {
      return make_diag(rule_id::tm, diag_kind::index_type_ill_formed,
                       "theory glob has no term constructors");
    };
    return s;
  }();
  return sig;
}

std::size_t checker::index_hash::operator()(const index_ptr& i) const {
  return hash_index(*i);
}

bool checker::index_eq_key::operator()(const index_ptr& a,
                                       const index_ptr& b) const {
  return eq_index(*a, *b);
}

checker::checker(theory_signature sig, bool cache_enabled)
    : sig_(std::move(sig)), cache_enabled_(cache_enabled) {}

check_result checker::check_ctx(const raw_ctx& ctx) const {
  return ctx_ok(ctx);
}

check_result checker::check_ty(const raw_ctx& ctx, const type_ptr& a) const {
  if (auto err = ctx_ok(ctx)) return err;
  return ty_ok(ctx, a);
}

result<type_ptr> checker::infer_tm(const raw_ctx& ctx,
                                   const term_ptr& t) const {
  if (auto err = ctx_ok(ctx)) return *std::move(err);
  return tm_infer(ctx, t);
}

check_result checker::check_tm(const raw_ctx& ctx, const term_ptr& t,
                               const type_ptr& a) const {
  if (auto err = ctx_ok(ctx)) return err;
  auto inferred = tm_infer(ctx, t);
  if (!inferred.ok()) return std::move(inferred).take_error();
  if (!syn_eq(inferred.value(), a)) {
    return with_expected_actual(
        make_diag(rule_id::tm, diag_kind::type_mismatch,
                  "term does not have the required type"),
        render_ty(a), render_ty(inferred.value()));
  }
  return {};
}

check_result checker::check_sub(const raw_ctx& dom, const raw_sub& s,
                                const raw_ctx& cod) const {
  if (auto err = ctx_ok(dom)) return err;
  if (auto err = ctx_ok(cod)) return err;
  return sub_ok(dom, s, cod);
}

check_result checker::ctx_ok(const raw_ctx& ctx) const {
  raw_ctx prefix;
  prefix.entries.reserve(ctx.size());
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    const auto& e = ctx.entries[k];
    if (e.name != k) {
      return with_expected_actual(
          make_diag(rule_id::cc, diag_kind::name_out_of_order,
                    "declaration " + std::to_string(k) + " must be named " +
                        std::to_string(k)),
          std::to_string(k), std::to_string(e.name));
    }
    if (auto err = ty_ok(prefix, e.ty)) return err;
    prefix.push(e.name, e.ty);
  }
  return {};
}

check_result checker::ty_ok(const raw_ctx& ctx, const type_ptr& a) const {
  if (a->is_obj()) return {};
  auto src_ty = tm_infer(ctx, a->src);
  if (!src_ty.ok()) return std::move(src_ty).take_error();
  if (!syn_eq(src_ty.value(), a->base)) {
    return with_expected_actual(
        make_diag(rule_id::ar, diag_kind::endpoint_type_mismatch,
                  "arrow source endpoint has the wrong type"),
        render_ty(a->base), render_ty(src_ty.value()));
  }
  auto tgt_ty = tm_infer(ctx, a->tgt);
  if (!tgt_ty.ok()) return std::move(tgt_ty).take_error();
  if (!syn_eq(tgt_ty.value(), a->base)) {
    return with_expected_actual(
        make_diag(rule_id::ar, diag_kind::endpoint_type_mismatch,
                  "arrow target endpoint has the wrong type"),
        render_ty(a->base), render_ty(tgt_ty.value()));
  }
  return {};
}

result<type_ptr> checker::tm_infer(const raw_ctx& ctx,
                                   const term_ptr& t) const {
  if (t->is_var()) {
    if (const type_ptr* ty = ctx.lookup(t->level)) return *ty;
    return make_diag(rule_id::var, diag_kind::unbound_variable,
                     "variable " + std::to_string(t->level) +
                         " is not declared in the context");
  }
  if (auto err = index_ok(t->index)) return *std::move(err);
  const raw_ctx& icx = sig_.ctx_of(*t->index);
  if (auto err = sub_ok(ctx, t->args, icx)) {
    auto d = make_diag(rule_id::tm, diag_kind::substitution_mismatch,
                       "coherence arguments do not match its context: " +
                           err->message);
    d.expected = err->expected;
    d.actual = err->actual;
    return d;
  }
  return apply_sub_ty(sig_.ty_of(*t->index), t->args);
}

check_result checker::sub_ok(const raw_ctx& dom, const raw_sub& s,
                             const raw_ctx& cod) const {
  if (s.size() != cod.size()) {
    return with_expected_actual(
        make_diag(rule_id::sc, diag_kind::length_mismatch,
                  "substitution has " + std::to_string(s.size()) +
                      " values for a context of length " +
                      std::to_string(cod.size())),
        std::to_string(cod.size()), std::to_string(s.size()));
  }
  raw_sub prefix;
  prefix.entries.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    const auto& target = cod.entries[k];
    const auto& e = s.entries[k];
    if (e.target != target.name) {
      return with_expected_actual(
          make_diag(rule_id::sc, diag_kind::target_name_mismatch,
                    "substitution entry " + std::to_string(k) +
                        " targets the wrong variable"),
          std::to_string(target.name), std::to_string(e.target));
    }
    type_ptr want = apply_sub_ty(target.ty, prefix);
    auto inferred = tm_infer(dom, e.value);
    if (!inferred.ok()) return std::move(inferred).take_error();
    if (!syn_eq(inferred.value(), want)) {
      return with_expected_actual(
          make_diag(rule_id::sc, diag_kind::type_mismatch,
                    "substitution value for variable " +
                        std::to_string(target.name) + " has the wrong type"),
          render_ty(want), render_ty(inferred.value()));
    }
    prefix.push(e.target, e.value);
  }
  return {};
}

check_result checker::index_ok(const index_ptr& i) const {
  if (cache_enabled_) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_cache_.find(i);
    if (it != index_cache_.end()) return it->second;
  }

  check_result verdict;
  if (auto err = sig_.admit_index(*i)) {
    verdict = err;
  } else if (auto err = ctx_ok(sig_.ctx_of(*i))) {
    verdict = make_diag(rule_id::tm, diag_kind::index_type_ill_formed,
                        "coherence context is ill-formed: " + err->message);
  } else if (auto err = ty_ok(sig_.ctx_of(*i), sig_.ty_of(*i))) {
    auto d = make_diag(rule_id::tm, diag_kind::index_type_ill_formed,
                       "coherence type is ill-formed: " + err->message);
    d.expected = err->expected;
    d.actual = err->actual;
    verdict = d;
  } else if (sig_.wf_dimension &&
             dim_ctx(sig_.ctx_of(*i)) > dim_ty(sig_.ty_of(*i))) {
    verdict = with_expected_actual(
        make_diag(rule_id::tm, diag_kind::wf_violation,
                  "coherence context dimension exceeds its type dimension"),
        "dim <= " + std::to_string(dim_ty(sig_.ty_of(*i))),
        std::to_string(dim_ctx(sig_.ctx_of(*i))));
  }

  if (cache_enabled_) {
    std::lock_guard<std::mutex> lock(mu_);
    index_cache_.emplace(i, verdict);
  }
  return verdict;
}

check_result check_ctx(const theory_signature& sig, const raw_ctx& ctx) {
  return checker(sig).check_ctx(ctx);
}

check_result check_ty(const theory_signature& sig, const raw_ctx& ctx,
                      const type_ptr& a) {
  return checker(sig).check_ty(ctx, a);
}

result<type_ptr> infer_tm(const theory_signature& sig, const raw_ctx& ctx,
                          const term_ptr& t) {
  return checker(sig).infer_tm(ctx, t);
}

check_result check_tm(const theory_signature& sig, const raw_ctx& ctx,
                      const term_ptr& t, const type_ptr& a) {
  return checker(sig).check_tm(ctx, t, a);
}

check_result check_sub(const theory_signature& sig, const raw_ctx& dom,
                       const raw_sub& s, const raw_ctx& cod) {
  return checker(sig).check_sub(dom, s, cod);
}

type_ptr u_arrow(std::uint32_t n) {
  if (n == 0) return obj();
  return arrow(u_arrow(n - 1), var(2 * (n - 1)), var(2 * (n - 1) + 1));
}

raw_ctx sphere(std::uint32_t n) {
  raw_ctx out;
  out.entries.reserve(2 * static_cast<std::size_t>(n));
  for (std::uint32_t k = 0; k < n; ++k) {
    type_ptr uk = u_arrow(k);
    out.push(2 * k, uk);
    out.push(2 * k + 1, uk);
  }
  return out;
}

raw_ctx disk(std::uint32_t n) {
  raw_ctx out = sphere(n);
  out.push(2 * n, u_arrow(n));
  return out;
}

classified_ty classify_ty(const type_ptr& a) {
  if (a->is_obj()) return {};
  classified_ty c = classify_ty(a->base);
  c.into_sphere.push(2 * c.dim, a->src);
  c.into_sphere.push(2 * c.dim + 1, a->tgt);
  c.dim += 1;
  return c;
}

type_ptr ty_of_sphere_sub(std::uint32_t n, const raw_sub& s) {
  return apply_sub_ty(u_arrow(n), s);
}

}  // namespace catt
