#ifndef CATT_SEXPR_HPP
#define CATT_SEXPR_HPP

#include <string>
#include <string_view>

#include "catt/diagnostics.hpp"
#include "catt/syntax.hpp"

namespace catt {

// Canonical text form of the raw sorts (ASCII, single spaces, lowercase):
//
//   ty   := "obj" | "(arrow" ty tm tm ")"
//   tm   := "(var" nat ")" | "(coh" ctx ty sub ")"
//   sub  := "(sub" { "(" nat tm ")" } ")"
//   ctx  := "(ctx" { "(" nat ty ")" } ")"
//
// A coh node serializes its index as (context, type); the derivation and
// fullness evidence are recomputed on demand when the value is checked.
std::string render_ty(const type_ptr& a);
std::string render_tm(const term_ptr& t);
std::string render_sub(const raw_sub& s);
std::string render_ctx(const raw_ctx& c);

// Readers accept arbitrary whitespace between tokens. Deserialized coh
// indices carry an empty derivation; admission recomputes it.
result<type_ptr> parse_ty(std::string_view text);
result<term_ptr> parse_tm(std::string_view text);
result<raw_sub> parse_sub(std::string_view text);
result<raw_ctx> parse_ctx(std::string_view text);

std::string render_var_set(const var_set& s);

// JSON mirror: every node is {"sort": ..., "node": ..., "children": [...]},
// with naturals as {"sort":"nat","node":"<n>","children":[]}.
std::string json_ty(const type_ptr& a);
std::string json_tm(const term_ptr& t);
std::string json_sub(const raw_sub& s);
std::string json_ctx(const raw_ctx& c);

}  // namespace catt

#endif
