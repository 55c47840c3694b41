#include "catt/diagnostics.hpp"

namespace catt {

const char* rule_name(rule_id r) {
  switch (r) {
    case rule_id::ec: return "ec";
    case rule_id::cc: return "cc";
    case rule_id::var: return "var";
    case rule_id::ob: return "ob";
    case rule_id::ar: return "ar";
    case rule_id::es: return "es";
    case rule_id::sc: return "sc";
    case rule_id::tm: return "tm";
    case rule_id::ps: return "ps";
    case rule_id::fullness: return "fullness";
    case rule_id::parse: return "parse";
  }
  return "?";
}

const char* diag_kind_name(diag_kind k) {
  switch (k) {
    case diag_kind::name_out_of_order: return "NameOutOfOrder";
    case diag_kind::endpoint_type_mismatch: return "EndpointTypeMismatch";
    case diag_kind::unbound_variable: return "UnboundVariable";
    case diag_kind::index_type_ill_formed: return "IndexTypeIllFormed";
    case diag_kind::substitution_mismatch: return "SubstitutionMismatch";
    case diag_kind::type_mismatch: return "TypeMismatch";
    case diag_kind::length_mismatch: return "LengthMismatch";
    case diag_kind::target_name_mismatch: return "TargetNameMismatch";
    case diag_kind::not_ps: return "NotPs";
    case diag_kind::not_full: return "NotFull";
    case diag_kind::wf_violation: return "WfViolation";
    case diag_kind::unknown_name: return "UnknownName";
    case diag_kind::arity_mismatch: return "ArityMismatch";
    case diag_kind::duplicate_name: return "DuplicateName";
    case diag_kind::parse_error: return "ParseError";
    case diag_kind::io_error: return "IoError";
  }
  return "?";
}

std::string diagnostic::render() const {
  std::string out;
  if (where) {
    out += where->file;
    out += ':';
    out += std::to_string(where->line);
    out += ':';
    out += std::to_string(where->column);
    out += ": ";
  }
  out += "error: ";
  out += message;
  if (expected) out += " (expected " + *expected + ")";
  if (actual) out += " (got " + *actual + ")";
  out += " [";
  out += rule_name(rule);
  out += '/';
  out += diag_kind_name(kind);
  out += ']';
  return out;
}

diagnostic make_diag(rule_id rule, diag_kind kind, std::string message) {
  diagnostic d;
  d.rule = rule;
  d.kind = kind;
  d.message = std::move(message);
  return d;
}

}  // namespace catt
