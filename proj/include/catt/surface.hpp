#ifndef CATT_SURFACE_HPP
#define CATT_SURFACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catt/diagnostics.hpp"
#include "catt/index.hpp"
#include "catt/rules.hpp"

namespace catt::surface {

// Surface grammar (whitespace-insensitive, `#` comments to end of line):
//
//   decl      := ("coh" | "def") ident telescope ":" ty [":=" term]
//   telescope := { "(" ident ":" ty ")" }
//   ty        := "*" | term "->" term
//   term      := ident | ident "(" [term {"," term}] ")"

struct surface_term {
  source_span where;
  std::string head;
  bool applied = false;
  std::vector<surface_term> args;
};

struct surface_type {
  source_span where;
  bool is_obj = false;
  surface_term src;  // endpoints, meaningful when !is_obj
  surface_term tgt;
};

struct binder {
  source_span where;
  std::string name;
  surface_type ty;
};

enum class decl_kind : std::uint8_t { coh, def };

struct surface_decl {
  source_span where;
  decl_kind kind = decl_kind::coh;
  std::string name;
  std::vector<binder> telescope;
  surface_type result_ty;
  std::optional<surface_term> body;  // def only
};

result<std::vector<surface_decl>> parse(std::string_view source,
                                        std::string file);

// A validated declaration. Definitions store their fully inlined raw body;
// they are substituted away at use sites, never turned into constructors.
struct decl_entry {
  decl_kind kind = decl_kind::coh;
  std::string name;
  source_span where;
  raw_ctx ctx;
  type_ptr ty;
  index_ptr index;  // coherences
  term_ptr body;    // definitions
};

class decl_store {
 public:
  const decl_entry* find(const std::string& name) const;
  const std::vector<decl_entry>& entries() const { return entries_; }
  void add(decl_entry e);

 private:
  std::vector<decl_entry> entries_;
  std::map<std::string, std::size_t> by_name_;
};

// Elaborates one declaration against the store prefix: telescope identifiers
// become consecutive levels, arrow bases are inferred from the endpoints,
// and the kernel validates the result. Every diagnostic carries a span.
result<decl_entry> elaborate(const decl_store& store, const surface_decl& d,
                             bool cache = true);

}  // namespace catt::surface

#endif
