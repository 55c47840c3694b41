#ifndef CATT_DIAGNOSTICS_HPP
#define CATT_DIAGNOSTICS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace catt {

// Rule catalogue for rejections. Every diagnostic names the rule it violates.
enum class rule_id : std::uint8_t {
  ec,
  cc,
  var,
  ob,
  ar,
  es,
  sc,
  tm,
  ps,
  fullness,
  parse,
};

enum class diag_kind : std::uint8_t {
  name_out_of_order,
  endpoint_type_mismatch,
  unbound_variable,
  index_type_ill_formed,
  substitution_mismatch,
  type_mismatch,
  length_mismatch,
  target_name_mismatch,
  not_ps,
  not_full,
  wf_violation,
  unknown_name,
  arity_mismatch,
  duplicate_name,
  parse_error,
  io_error,
};

const char* rule_name(rule_id r);
const char* diag_kind_name(diag_kind k);

struct source_span {
  std::string file;
  int line = 0;    // 1-based
  int column = 0;  // 1-based
};

// Structured rejection evidence. Checking never throws; diagnostics are values.
struct diagnostic {
  rule_id rule = rule_id::parse;
  diag_kind kind = diag_kind::parse_error;
  std::string message;
  std::optional<std::string> expected;  // rendered raw objects, when meaningful
  std::optional<std::string> actual;
  std::optional<source_span> where;

  // "file:line:col: error: message [rule/kind]"
  std::string render() const;
};

diagnostic make_diag(rule_id rule, diag_kind kind, std::string message);

// Value-or-diagnostic. Mirrors the judgment outcomes: a successful check
// carries its payload (e.g. the inferred type), a failed one the evidence.
template <class T>
class result {
 public:
  result(T value) : v_(std::move(value)) {}
  result(diagnostic d) : v_(std::move(d)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  const diagnostic& error() const { return std::get<diagnostic>(v_); }
  diagnostic&& take_error() && { return std::get<diagnostic>(std::move(v_)); }

 private:
  std::variant<T, diagnostic> v_;
};

// Empty = accepted. Mirrors CtxOk / TyOk / SubOk verdicts.
using check_result = std::optional<diagnostic>;

}  // namespace catt

#endif
