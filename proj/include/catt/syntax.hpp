#ifndef CATT_SYNTAX_HPP
#define CATT_SYNTAX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <vector>

namespace catt {

// De Bruijn level: the k-th variable declared in a context is named k.
using var_name = std::uint32_t;

struct raw_type;
struct raw_term;
struct coh_index;  // defined in index.hpp

using type_ptr = std::shared_ptr<const raw_type>;
using term_ptr = std::shared_ptr<const raw_term>;
using index_ptr = std::shared_ptr<const coh_index>;

struct sub_entry {
  var_name target = 0;
  term_ptr value;
};

// Ordered (target, value) pairs, oldest target first. Variable lookup scans
// newest binding first; on derivable substitutions targets are unique, so the
// scan order is immaterial there.
struct raw_sub {
  std::vector<sub_entry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  raw_sub& push(var_name target, term_ptr value);
};

struct ctx_entry {
  var_name name = 0;
  type_ptr ty;
};

// Ordered (name, type) declarations, oldest first. Derivable contexts
// enumerate their variables in order: the i-th entry is named i.
struct raw_ctx {
  std::vector<ctx_entry> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  raw_ctx& push(var_name name, type_ptr ty);
  // Declared type of x, or null if x is not declared.
  const type_ptr* lookup(var_name x) const;
};

// obj | arrow(base, src, tgt); obj iff base is null.
struct raw_type {
  type_ptr base;
  term_ptr src;
  term_ptr tgt;

  bool is_obj() const { return base == nullptr; }
  bool is_arrow() const { return base != nullptr; }
};

// var(level) | coh(index, args); var iff index is null. A coh node carries
// its full index (context and type it was declared with), so syntactic
// equality is decidable by recursion.
struct raw_term {
  var_name level = 0;
  index_ptr index;
  raw_sub args;

  bool is_var() const { return index == nullptr; }
  bool is_coh() const { return index != nullptr; }
};

type_ptr obj();
type_ptr arrow(type_ptr base, term_ptr src, term_ptr tgt);
term_ptr var(var_name x);
term_ptr coh(index_ptr index, raw_sub args);

// Finite set of variable names; canonically a sorted duplicate-free sequence,
// so set equality is plain structural equality.
class var_set {
 public:
  var_set() = default;
  var_set(std::initializer_list<var_name> xs);

  void insert(var_name x);
  bool contains(var_name x) const;
  bool subset_of(const var_set& other) const;
  var_set unite(const var_set& other) const;
  var_set minus(const var_set& other) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const std::vector<var_name>& items() const { return items_; }

  friend bool operator==(const var_set&, const var_set&) = default;

 private:
  std::vector<var_name> items_;
};

// Substitution action and composition: the computational content of the
// theory. Total on raw syntax.
type_ptr apply_sub_ty(const type_ptr& a, const raw_sub& s);
term_ptr apply_sub_tm(const term_ptr& t, const raw_sub& s);
raw_sub compose(const raw_sub& g, const raw_sub& d);
raw_sub identity(const raw_ctx& c);

std::uint32_t dim_ty(const type_ptr& a);
// Maximal dimension among declared types; 0 for the empty context.
std::uint32_t dim_ctx(const raw_ctx& c);

var_set vars_ty(const type_ptr& a);
var_set vars_tm(const term_ptr& t);
var_set vars_sub(const raw_sub& s);
var_set vars_ctx(const raw_ctx& c);

// Structural syntactic equality. Coh nodes compare by index and arguments;
// index equality compares (context, type) only (the witness is canonical).
bool syn_eq(const type_ptr& a, const type_ptr& b);
bool syn_eq(const term_ptr& a, const term_ptr& b);
bool syn_eq(const raw_sub& a, const raw_sub& b);
bool syn_eq(const raw_ctx& a, const raw_ctx& b);
bool eq_index(const coh_index& a, const coh_index& b);

// Structural hashes consistent with syn_eq / eq_index.
std::size_t hash_ty(const type_ptr& a);
std::size_t hash_tm(const term_ptr& t);
std::size_t hash_sub(const raw_sub& s);
std::size_t hash_ctx(const raw_ctx& c);
std::size_t hash_index(const coh_index& i);

}  // namespace catt

#endif
