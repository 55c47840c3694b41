#include "catt/theory.hpp"

#include <utility>

#include "catt/sexpr.hpp"

namespace catt {

namespace {

diagnostic not_full(std::string side, const var_set& boundary,
                    const var_set& used) {
  auto d = make_diag(rule_id::fullness, diag_kind::not_full,
                     "type is not full over the ps-context: " + side +
                         " mismatch; missing " +
                         render_var_set(boundary.minus(used)) + ", extra " +
                         render_var_set(used.minus(boundary)));
  d.expected = render_var_set(boundary);
  d.actual = render_var_set(used);
  return d;
}

diagnostic wf_violation(const raw_ctx& ctx, const type_ptr& ty) {
  auto d = make_diag(rule_id::tm, diag_kind::wf_violation,
                     "coherence context dimension exceeds its type dimension");
  d.expected = "dim <= " + std::to_string(dim_ty(ty));
  d.actual = std::to_string(dim_ctx(ctx));
  return d;
}

}  // namespace

result<fullness_witness> check_fullness(const ps_derivation& d,
                                        const type_ptr& a) {
  var_set have_src;
  var_set have_tgt;
  if (a->is_arrow()) {
    have_src = src_set(d);
    have_tgt = tgt_set(d);
    const var_set want_src = vars_ty(a->base).unite(vars_tm(a->src));
    const var_set want_tgt = vars_ty(a->base).unite(vars_tm(a->tgt));
    if (have_src == want_src && have_tgt == want_tgt) {
      return fullness_witness{fullness_kind::op};
    }
    if (vars_ctx(d.ctx) == vars_ty(a)) {
      return fullness_witness{fullness_kind::coh};
    }
    // Report the failing op side; it names the boundary that was not used.
    const var_set want = have_src == want_src ? want_tgt : want_src;
    const var_set have = have_src == want_src ? have_tgt : have_src;
    return not_full(have_src == want_src ? "target boundary" : "source boundary",
                    have, want);
  }
  if (vars_ctx(d.ctx) == vars_ty(a)) {
    return fullness_witness{fullness_kind::coh};
  }
  return not_full("context coverage", vars_ctx(d.ctx), vars_ty(a));
}

result<index_ptr> make_index(const raw_ctx& ctx, const type_ptr& ty) {
  auto derivation = check_ps(ctx);
  if (!derivation.ok()) return std::move(derivation).take_error();
  if (auto err = check_ty(catt_signature(), ctx, ty)) return *std::move(err);
  auto witness = check_fullness(derivation.value(), ty);
  if (!witness.ok()) return std::move(witness).take_error();
  if (dim_ctx(ctx) > dim_ty(ty)) return wf_violation(ctx, ty);

  coh_index idx;
  idx.ps = std::move(derivation).value();
  idx.ty = ty;
  idx.witness = witness.value();
  return std::make_shared<const coh_index>(std::move(idx));
}

const theory_signature& catt_signature() {
  static const theory_signature sig = [] {
    theory_signature s;
    s.name = "catt";
    s.wf_dimension = true;
    s.index_eq = [](const coh_index& a, const coh_index& b) {
      return eq_index(a, b);
    };
    s.ctx_of = [](const coh_index& i) -> const raw_ctx& { return i.ps.ctx; };
    s.ty_of = [](const coh_index& i) { return i.ty; };
    // Admission recomputes the derivation and the witness from (ctx, ty);
    // the ones stored in the value are never trusted.
    s.admit_index = [](const coh_index& i) -> check_result {
      auto derivation = check_ps(i.ps.ctx);
      if (!derivation.ok()) return std::move(derivation).take_error();
      auto witness = check_fullness(derivation.value(), i.ty);
      if (!witness.ok()) return std::move(witness).take_error();
      if (dim_ctx(i.ps.ctx) > dim_ty(i.ty)) {
        return wf_violation(i.ps.ctx, i.ty);
      }
      return {};
    };
    return s;
  }();
  return sig;
}

}  // namespace catt
