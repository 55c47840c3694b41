#include "catt/syntax.hpp"

#include <algorithm>

#include "catt/index.hpp"

namespace catt {

raw_sub& raw_sub::push(var_name target, term_ptr value) {
  entries.push_back(sub_entry{target, std::move(value)});
  return *this;
}

raw_ctx& raw_ctx::push(var_name name, type_ptr ty) {
  entries.push_back(ctx_entry{name, std::move(ty)});
  return *this;
}

const type_ptr* raw_ctx::lookup(var_name x) const {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (it->name == x) return &it->ty;
  }
  return nullptr;
}

type_ptr obj() {
  static const type_ptr singleton = std::make_shared<raw_type>();
  return singleton;
}

type_ptr arrow(type_ptr base, term_ptr src, term_ptr tgt) {
  auto node = std::make_shared<raw_type>();
  node->base = std::move(base);
  node->src = std::move(src);
  node->tgt = std::move(tgt);
  return node;
}

term_ptr var(var_name x) {
  auto node = std::make_shared<raw_term>();
  node->level = x;
  return node;
}

term_ptr coh(index_ptr index, raw_sub args) {
  auto node = std::make_shared<raw_term>();
  node->index = std::move(index);
  node->args = std::move(args);
  return node;
}

var_set::var_set(std::initializer_list<var_name> xs) {
  for (var_name x : xs) insert(x);
}

void var_set::insert(var_name x) {
  auto it = std::lower_bound(items_.begin(), items_.end(), x);
  if (it == items_.end() || *it != x) items_.insert(it, x);
}

bool var_set::contains(var_name x) const {
  return std::binary_search(items_.begin(), items_.end(), x);
}

bool var_set::subset_of(const var_set& other) const {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

var_set var_set::unite(const var_set& other) const {
  var_set out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out.items_));
  return out;
}

var_set var_set::minus(const var_set& other) const {
  var_set out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(out.items_));
  return out;
}

type_ptr apply_sub_ty(const type_ptr& a, const raw_sub& s) {
  if (a->is_obj()) return a;
  return arrow(apply_sub_ty(a->base, s), apply_sub_tm(a->src, s),
               apply_sub_tm(a->tgt, s));
}

term_ptr apply_sub_tm(const term_ptr& t, const raw_sub& s) {
  if (t->is_coh()) return coh(t->index, compose(t->args, s));
  // Newest binding first; an absent variable is left unchanged.
  for (auto it = s.entries.rbegin(); it != s.entries.rend(); ++it) {
    if (it->target == t->level) return it->value;
  }
  return t;
}

raw_sub compose(const raw_sub& g, const raw_sub& d) {
  raw_sub out;
  out.entries.reserve(g.entries.size());
  for (const auto& e : g.entries) out.push(e.target, apply_sub_tm(e.value, d));
  return out;
}

raw_sub identity(const raw_ctx& c) {
  raw_sub out;
  out.entries.reserve(c.entries.size());
  for (const auto& e : c.entries) out.push(e.name, var(e.name));
  return out;
}

std::uint32_t dim_ty(const type_ptr& a) {
  std::uint32_t d = 0;
  for (const raw_type* p = a.get(); p->is_arrow(); p = p->base.get()) ++d;
  return d;
}

std::uint32_t dim_ctx(const raw_ctx& c) {
  std::uint32_t d = 0;
  for (const auto& e : c.entries) d = std::max(d, dim_ty(e.ty));
  return d;
}

var_set vars_ty(const type_ptr& a) {
  if (a->is_obj()) return {};
  return vars_ty(a->base).unite(vars_tm(a->src)).unite(vars_tm(a->tgt));
}

var_set vars_tm(const term_ptr& t) {
  // The index's own variables are bound in its own context.
  if (t->is_coh()) return vars_sub(t->args);
  return var_set{t->level};
}

var_set vars_sub(const raw_sub& s) {
  var_set out;
  for (const auto& e : s.entries) out = out.unite(vars_tm(e.value));
  return out;
}

var_set vars_ctx(const raw_ctx& c) {
  var_set out;
  for (const auto& e : c.entries) out.insert(e.name);
  return out;
}

bool syn_eq(const type_ptr& a, const type_ptr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_obj() != b->is_obj()) return false;
  if (a->is_obj()) return true;
  return syn_eq(a->base, b->base) && syn_eq(a->src, b->src) &&
         syn_eq(a->tgt, b->tgt);
}

bool syn_eq(const term_ptr& a, const term_ptr& b) {
  if (a.get() == b.get()) return true;
  if (a->is_var() != b->is_var()) return false;
  if (a->is_var()) return a->level == b->level;
  return eq_index(*a->index, *b->index) && syn_eq(a->args, b->args);
}

bool syn_eq(const raw_sub& a, const raw_sub& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    if (a.entries[k].target != b.entries[k].target) return false;
    if (!syn_eq(a.entries[k].value, b.entries[k].value)) return false;
  }
  return true;
}

bool syn_eq(const raw_ctx& a, const raw_ctx& b) {
  if (a.entries.size() != b.entries.size()) return false;
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    if (a.entries[k].name != b.entries[k].name) return false;
    if (!syn_eq(a.entries[k].ty, b.entries[k].ty)) return false;
  }
  return true;
}

bool eq_index(const coh_index& a, const coh_index& b) {
  return syn_eq(a.ps.ctx, b.ps.ctx) && syn_eq(a.ty, b.ty);
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

std::size_t hash_ty(const type_ptr& a) {
  if (a->is_obj()) return 0x0b9e;
  std::size_t h = 0xa880;
  h = mix(h, hash_ty(a->base));
  h = mix(h, hash_tm(a->src));
  h = mix(h, hash_tm(a->tgt));
  return h;
}

std::size_t hash_tm(const term_ptr& t) {
  if (t->is_var()) return mix(0x7a8, t->level);
  std::size_t h = 0xc0;
  h = mix(h, hash_index(*t->index));
  h = mix(h, hash_sub(t->args));
  return h;
}

std::size_t hash_sub(const raw_sub& s) {
  std::size_t h = 0x50b;
  for (const auto& e : s.entries) {
    h = mix(h, e.target);
    h = mix(h, hash_tm(e.value));
  }
  return h;
}

std::size_t hash_ctx(const raw_ctx& c) {
  std::size_t h = 0xc7;
  for (const auto& e : c.entries) {
    h = mix(h, e.name);
    h = mix(h, hash_ty(e.ty));
  }
  return h;
}

std::size_t hash_index(const coh_index& i) {
  return mix(hash_ctx(i.ps.ctx), hash_ty(i.ty));
}

}  // namespace catt
