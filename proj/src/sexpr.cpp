#include "catt/sexpr.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

#include "catt/index.hpp"

namespace catt {

namespace {

void put_ty(std::string& out, const type_ptr& a);
void put_tm(std::string& out, const term_ptr& t);
void put_sub(std::string& out, const raw_sub& s);
void put_ctx(std::string& out, const raw_ctx& c);

void put_ty(std::string& out, const type_ptr& a) {
  if (a->is_obj()) {
    out += "obj";
    return;
  }
  out += "(arrow ";
  put_ty(out, a->base);
  out += ' ';
  put_tm(out, a->src);
  out += ' ';
  put_tm(out, a->tgt);
  out += ')';
}

void put_tm(std::string& out, const term_ptr& t) {
  if (t->is_var()) {
    out += "(var ";
    out += std::to_string(t->level);
    out += ')';
    return;
  }
  out += "(coh ";
  put_ctx(out, t->index->ps.ctx);
  out += ' ';
  put_ty(out, t->index->ty);
  out += ' ';
  put_sub(out, t->args);
  out += ')';
}

void put_sub(std::string& out, const raw_sub& s) {
  out += "(sub";
  for (const auto& e : s.entries) {
    out += " (";
    out += std::to_string(e.target);
    out += ' ';
    put_tm(out, e.value);
    out += ')';
  }
  out += ')';
}

void put_ctx(std::string& out, const raw_ctx& c) {
  out += "(ctx";
  for (const auto& e : c.entries) {
    out += " (";
    out += std::to_string(e.name);
    out += ' ';
    put_ty(out, e.ty);
    out += ')';
  }
  out += ')';
}

constexpr int max_depth = 4096;

struct reader {
  std::string_view text;
  std::size_t pos = 0;

  diagnostic fail(std::string msg) const {
    auto d = make_diag(rule_id::parse, diag_kind::parse_error, std::move(msg));
    source_span sp;
    sp.file = "<sexpr>";
    sp.line = 1;
    sp.column = static_cast<int>(pos) + 1;
    d.where = sp;
    return d;
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  result<std::string_view> atom() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos == start) return fail("expected atom");
    return text.substr(start, pos - start);
  }

  result<var_name> nat() {
    auto a = atom();
    if (!a.ok()) return std::move(a).take_error();
    std::uint64_t v = 0;
    for (char c : a.value()) {
      if (c < '0' || c > '9') return fail("expected natural number");
      v = v * 10 + static_cast<unsigned>(c - '0');
      if (v > std::numeric_limits<var_name>::max()) {
        return fail("natural number out of range");
      }
    }
    return static_cast<var_name>(v);
  }

  result<type_ptr> ty(int depth);
  result<term_ptr> tm(int depth);
  result<raw_sub> sub(int depth);
  result<raw_ctx> ctx(int depth);
};

result<type_ptr> reader::ty(int depth) {
  if (depth > max_depth) return fail("nesting too deep");
  skip_ws();
  if (pos < text.size() && text[pos] != '(') {
    auto a = atom();
    if (!a.ok()) return std::move(a).take_error();
    if (a.value() == "obj") return obj();
    return fail("expected a type");
  }
  if (!eat('(')) return fail("expected a type");
  auto head = atom();
  if (!head.ok()) return std::move(head).take_error();
  if (head.value() != "arrow") return fail("expected arrow");
  auto base = ty(depth + 1);
  if (!base.ok()) return std::move(base).take_error();
  auto src = tm(depth + 1);
  if (!src.ok()) return std::move(src).take_error();
  auto tgt = tm(depth + 1);
  if (!tgt.ok()) return std::move(tgt).take_error();
  if (!eat(')')) return fail("expected )");
  return arrow(std::move(base).value(), std::move(src).value(),
               std::move(tgt).value());
}

result<term_ptr> reader::tm(int depth) {
  if (depth > max_depth) return fail("nesting too deep");
  if (!eat('(')) return fail("expected a term");
  auto head = atom();
  if (!head.ok()) return std::move(head).take_error();
  if (head.value() == "var") {
    auto n = nat();
    if (!n.ok()) return std::move(n).take_error();
    if (!eat(')')) return fail("expected )");
    return var(n.value());
  }
  if (head.value() != "coh") return fail("expected var or coh");
  auto c = ctx(depth + 1);
  if (!c.ok()) return std::move(c).take_error();
  auto a = ty(depth + 1);
  if (!a.ok()) return std::move(a).take_error();
  auto s = sub(depth + 1);
  if (!s.ok()) return std::move(s).take_error();
  if (!eat(')')) return fail("expected )");
  coh_index idx;
  idx.ps.ctx = std::move(c).value();
  idx.ty = std::move(a).value();
  return coh(std::make_shared<const coh_index>(std::move(idx)),
             std::move(s).value());
}

result<raw_sub> reader::sub(int depth) {
  if (depth > max_depth) return fail("nesting too deep");
  if (!eat('(')) return fail("expected a substitution");
  auto head = atom();
  if (!head.ok()) return std::move(head).take_error();
  if (head.value() != "sub") return fail("expected sub");
  raw_sub out;
  while (!eat(')')) {
    if (!eat('(')) return fail("expected ( or )");
    auto n = nat();
    if (!n.ok()) return std::move(n).take_error();
    auto t = tm(depth + 1);
    if (!t.ok()) return std::move(t).take_error();
    if (!eat(')')) return fail("expected )");
    out.push(n.value(), std::move(t).value());
  }
  return out;
}

result<raw_ctx> reader::ctx(int depth) {
  if (depth > max_depth) return fail("nesting too deep");
  if (!eat('(')) return fail("expected a context");
  auto head = atom();
  if (!head.ok()) return std::move(head).take_error();
  if (head.value() != "ctx") return fail("expected ctx");
  raw_ctx out;
  while (!eat(')')) {
    if (!eat('(')) return fail("expected ( or )");
    auto n = nat();
    if (!n.ok()) return std::move(n).take_error();
    auto a = ty(depth + 1);
    if (!a.ok()) return std::move(a).take_error();
    if (!eat(')')) return fail("expected )");
    out.push(n.value(), std::move(a).value());
  }
  return out;
}

template <class T, class F>
result<T> parse_with(std::string_view text, F&& f) {
  reader r{text};
  auto v = f(r);
  if (!v.ok()) return std::move(v).take_error();
  r.skip_ws();
  if (r.pos != text.size()) return r.fail("trailing input");
  return std::move(v).value();
}

void put_json(std::string& out, const char* sort, const std::string& node,
              const std::vector<std::string>& children) {
  out += "{\"sort\":\"";
  out += sort;
  out += "\",\"node\":\"";
  out += node;
  out += "\",\"children\":[";
  bool first = true;
  for (const auto& c : children) {
    if (!first) out += ',';
    first = false;
    out += c;
  }
  out += "]}";
}

std::string json_nat(var_name n) {
  std::string out;
  put_json(out, "nat", std::to_string(n), {});
  return out;
}

}  // namespace

std::string render_ty(const type_ptr& a) {
  std::string out;
  put_ty(out, a);
  return out;
}

std::string render_tm(const term_ptr& t) {
  std::string out;
  put_tm(out, t);
  return out;
}

std::string render_sub(const raw_sub& s) {
  std::string out;
  put_sub(out, s);
  return out;
}

std::string render_ctx(const raw_ctx& c) {
  std::string out;
  put_ctx(out, c);
  return out;
}

result<type_ptr> parse_ty(std::string_view text) {
  return parse_with<type_ptr>(text, [](reader& r) { return r.ty(0); });
}

result<term_ptr> parse_tm(std::string_view text) {
  return parse_with<term_ptr>(text, [](reader& r) { return r.tm(0); });
}

result<raw_sub> parse_sub(std::string_view text) {
  return parse_with<raw_sub>(text, [](reader& r) { return r.sub(0); });
}

result<raw_ctx> parse_ctx(std::string_view text) {
  return parse_with<raw_ctx>(text, [](reader& r) { return r.ctx(0); });
}

std::string render_var_set(const var_set& s) {
  std::string out = "{";
  bool first = true;
  for (var_name x : s.items()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(x);
  }
  out += '}';
  return out;
}

std::string json_ty(const type_ptr& a) {
  std::string out;
  if (a->is_obj()) {
    put_json(out, "type", "obj", {});
  } else {
    put_json(out, "type", "arrow",
             {json_ty(a->base), json_tm(a->src), json_tm(a->tgt)});
  }
  return out;
}

std::string json_tm(const term_ptr& t) {
  std::string out;
  if (t->is_var()) {
    put_json(out, "term", "var", {json_nat(t->level)});
  } else {
    put_json(out, "term", "coh",
             {json_ctx(t->index->ps.ctx), json_ty(t->index->ty),
              json_sub(t->args)});
  }
  return out;
}

std::string json_sub(const raw_sub& s) {
  std::vector<std::string> children;
  children.reserve(s.entries.size());
  for (const auto& e : s.entries) {
    std::string pair;
    put_json(pair, "binding", "maps", {json_nat(e.target), json_tm(e.value)});
    children.push_back(std::move(pair));
  }
  std::string out;
  put_json(out, "sub", "sub", children);
  return out;
}

std::string json_ctx(const raw_ctx& c) {
  std::vector<std::string> children;
  children.reserve(c.entries.size());
  for (const auto& e : c.entries) {
    std::string pair;
    put_json(pair, "binding", "decl", {json_nat(e.name), json_ty(e.ty)});
    children.push_back(std::move(pair));
  }
  std::string out;
  put_json(out, "ctx", "ctx", children);
  return out;
}

}  // namespace catt
