#include "catt/ps.hpp"

#include <algorithm>

#include "catt/rules.hpp"
#include "catt/sexpr.hpp"

namespace catt {

namespace {

diagnostic not_ps(std::string message) {
  return make_diag(rule_id::ps, diag_kind::not_ps,
                   "not a ps-context: " + std::move(message));
}

bool drop_focus(var_name& focus_var, type_ptr& focus_ty) {
  if (!focus_ty->is_arrow() || !focus_ty->tgt->is_var()) return false;
  focus_var = focus_ty->tgt->level;
  focus_ty = focus_ty->base;
  return true;
}

}  // namespace

result<ps_derivation> check_ps(const raw_ctx& ctx) {
  if (auto err = check_ctx(glob_signature(), ctx)) {
    return not_ps(err->message);
  }
  if (ctx.empty()) return not_ps("the context is empty");
  if (!ctx.entries.front().ty->is_obj()) {
    return not_ps("the first declaration must be an object");
  }

  ps_derivation d;
  d.ctx = ctx;
  d.moves.push_back(ps_move::start);
  var_name focus_var = 0;
  type_ptr focus_ty = obj();
  std::size_t consumed = 1;

  while (consumed < ctx.size()) {
    const auto& filler = ctx.entries[consumed];
    const std::uint32_t want_dim = dim_ty(filler.ty);
    while (dim_ty(focus_ty) > want_dim) {
      if (!drop_focus(focus_var, focus_ty)) {
        return not_ps("focus type cannot be dropped");
      }
      d.moves.push_back(ps_move::drop);
    }
    if (!syn_eq(focus_ty, filler.ty)) {
      auto diag = not_ps("declaration " + std::to_string(filler.name) +
                         " does not continue the scheme");
      diag.expected = render_ty(focus_ty);
      diag.actual = render_ty(filler.ty);
      return diag;
    }
    if (consumed + 1 >= ctx.size()) {
      return not_ps("declaration " + std::to_string(filler.name) +
                    " is missing its filling arrow");
    }
    const auto& cell = ctx.entries[consumed + 1];
    type_ptr want =
        arrow(filler.ty, var(focus_var), var(filler.name));
    if (!syn_eq(cell.ty, want)) {
      auto diag = not_ps("declaration " + std::to_string(cell.name) +
                         " is not the forced filling arrow");
      diag.expected = render_ty(want);
      diag.actual = render_ty(cell.ty);
      return diag;
    }
    d.moves.push_back(ps_move::extend);
    focus_var = cell.name;
    focus_ty = cell.ty;
    consumed += 2;
  }

  while (focus_ty->is_arrow()) {
    if (!drop_focus(focus_var, focus_ty)) {
      return not_ps("focus type cannot be dropped");
    }
    d.moves.push_back(ps_move::drop);
  }
  d.final_var = focus_var;
  d.final_ty = focus_ty;
  return d;
}

triangle_rel triangle_rel::of(const raw_ctx& ctx) {
  const std::size_t n = ctx.size();
  std::vector<var_name> names;
  names.reserve(n);
  for (const auto& e : ctx.entries) names.push_back(e.name);
  auto idx_of = [&](var_name x) -> std::size_t {
    auto it = std::find(names.begin(), names.end(), x);
    return it == names.end() ? n : static_cast<std::size_t>(it - names.begin());
  };

  std::vector<bool> rel(n * n, false);
  for (const auto& e : ctx.entries) {
    if (!e.ty->is_arrow()) continue;
    const std::size_t f = idx_of(e.name);
    if (e.ty->src->is_var()) {
      std::size_t x = idx_of(e.ty->src->level);
      if (x < n) rel[x * n + f] = true;
    }
    if (e.ty->tgt->is_var()) {
      std::size_t y = idx_of(e.ty->tgt->level);
      if (y < n) rel[f * n + y] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!rel[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (rel[k * n + j]) rel[i * n + j] = true;
      }
    }
  }

  triangle_rel out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i * n + j]) out.pairs_.emplace_back(names[i], names[j]);
    }
  }
  std::sort(out.pairs_.begin(), out.pairs_.end());
  return out;
}

bool triangle_rel::related(var_name x, var_name y) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(x, y));
}

bool is_linear(const raw_ctx& ctx, const triangle_rel& rel) {
  const auto vars = vars_ctx(ctx).items();
  for (var_name x : vars) {
    if (rel.related(x, x)) return false;
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    for (std::size_t j = i + 1; j < vars.size(); ++j) {
      if (!rel.related(vars[i], vars[j]) && !rel.related(vars[j], vars[i])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Replays a recorded derivation, growing the boundary list move by move.
// tgt_mode switches the extend clause between the source and target rules.
std::vector<var_name> boundary_vars(const ps_derivation& d, std::uint32_t i,
                                    bool tgt_mode) {
  std::vector<var_name> out;
  var_name focus_var = 0;
  type_ptr focus_ty = obj();
  std::size_t consumed = 0;

  for (ps_move m : d.moves) {
    switch (m) {
      case ps_move::start:
        focus_var = 0;
        focus_ty = obj();
        consumed = 1;
        if (i != 0) out.push_back(0);
        break;
      case ps_move::drop:
        if (!drop_focus(focus_var, focus_ty)) return out;
        break;
      case ps_move::extend: {
        if (consumed + 1 >= d.ctx.size()) return out;
        const var_name l = d.ctx.entries[consumed].name;
        const std::uint32_t cell_dim = dim_ty(focus_ty) + 1;
        if (i > cell_dim) {
          out.push_back(l);
          out.push_back(l + 1);
        } else if (tgt_mode && i == cell_dim) {
          if (!out.empty()) out.pop_back();
          out.push_back(l);
        }
        focus_var = l + 1;
        focus_ty = d.ctx.entries[consumed + 1].ty;
        consumed += 2;
        break;
      }
    }
  }
  return out;
}

}  // namespace

std::vector<var_name> src_vars(const ps_derivation& d, std::uint32_t i) {
  return boundary_vars(d, i, false);
}

std::vector<var_name> tgt_vars(const ps_derivation& d, std::uint32_t i) {
  return boundary_vars(d, i, true);
}

var_set src_set(const ps_derivation& d) {
  var_set out;
  for (var_name x : src_vars(d, dim_ctx(d.ctx))) out.insert(x);
  return out;
}

var_set tgt_set(const ps_derivation& d) {
  var_set out;
  for (var_name x : tgt_vars(d, dim_ctx(d.ctx))) out.insert(x);
  return out;
}

}  // namespace catt
