#include "catt/surface.hpp"

#include <cctype>
#include <utility>

#include "catt/sexpr.hpp"
#include "catt/theory.hpp"

namespace catt::surface {

namespace {

enum class tok_kind : std::uint8_t {
  ident,
  star,
  lparen,
  rparen,
  colon,
  comma,
  arrow,
  assign,
  end,
};

struct token {
  tok_kind kind = tok_kind::end;
  std::string text;
  int line = 1;
  int column = 1;
};

source_span span_of(const std::string& file, const token& t) {
  source_span sp;
  sp.file = file;
  sp.line = t.line;
  sp.column = t.column;
  return sp;
}

diagnostic parse_fail(const std::string& file, const token& at,
                      std::string message) {
  auto d = make_diag(rule_id::parse, diag_kind::parse_error,
                     std::move(message));
  d.where = span_of(file, at);
  return d;
}

bool ident_start(char c) {
  return c == '_' || std::isalpha(static_cast<unsigned char>(c));
}

bool ident_cont(char c) {
  return ident_start(c) || c == '\'' ||
         std::isdigit(static_cast<unsigned char>(c));
}

result<std::vector<token>> tokenize(std::string_view src,
                                    const std::string& file) {
  std::vector<token> out;
  int line = 1;
  int column = 1;
  std::size_t pos = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++pos) {
      if (src[pos] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  while (pos < src.size()) {
    const char c = src[pos];
    if (c == '#') {
      while (pos < src.size() && src[pos] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    token t;
    t.line = line;
    t.column = column;
    if (ident_start(c)) {
      std::size_t start = pos;
      while (pos < src.size() && ident_cont(src[pos])) advance(1);
      t.kind = tok_kind::ident;
      t.text = std::string(src.substr(start, pos - start));
      out.push_back(std::move(t));
      continue;
    }
    switch (c) {
      case '*': t.kind = tok_kind::star; advance(1); break;
      case '(': t.kind = tok_kind::lparen; advance(1); break;
      case ')': t.kind = tok_kind::rparen; advance(1); break;
      case ',': t.kind = tok_kind::comma; advance(1); break;
      case '-':
        if (pos + 1 < src.size() && src[pos + 1] == '>') {
          t.kind = tok_kind::arrow;
          advance(2);
          break;
        }
        return parse_fail(file, t, "stray '-'; did you mean '->'?");
      case ':':
        if (pos + 1 < src.size() && src[pos + 1] == '=') {
          t.kind = tok_kind::assign;
          advance(2);
        } else {
          t.kind = tok_kind::colon;
          advance(1);
        }
        break;
      default:
        return parse_fail(file, t,
                          std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  token eof;
  eof.line = line;
  eof.column = column;
  out.push_back(std::move(eof));
  return out;
}

constexpr int max_term_depth = 4096;

struct parser {
  const std::string& file;
  const std::vector<token>& toks;
  std::size_t pos = 0;

  const token& peek() const { return toks[pos]; }
  const token& next() { return toks[pos++]; }
  bool at(tok_kind k) const { return peek().kind == k; }

  diagnostic fail(std::string message) const {
    return parse_fail(file, peek(), std::move(message));
  }

  result<token> expect(tok_kind k, const char* what) {
    if (!at(k)) return fail(std::string("expected ") + what);
    return next();
  }

  result<surface_term> term(int depth) {
    if (depth > max_term_depth) return fail("term nesting too deep");
    auto head = expect(tok_kind::ident, "an identifier");
    if (!head.ok()) return std::move(head).take_error();
    surface_term t;
    t.where = span_of(file, head.value());
    t.head = head.value().text;
    if (!at(tok_kind::lparen)) return t;
    next();
    t.applied = true;
    if (at(tok_kind::rparen)) {
      next();
      return t;
    }
    for (;;) {
      auto arg = term(depth + 1);
      if (!arg.ok()) return std::move(arg).take_error();
      t.args.push_back(std::move(arg).value());
      if (at(tok_kind::comma)) {
        next();
        continue;
      }
      if (auto r = expect(tok_kind::rparen, "',' or ')'"); !r.ok()) {
        return std::move(r).take_error();
      }
      return t;
    }
  }

  result<surface_type> type() {
    surface_type ty;
    ty.where = span_of(file, peek());
    if (at(tok_kind::star)) {
      next();
      ty.is_obj = true;
      return ty;
    }
    auto src = term(0);
    if (!src.ok()) return std::move(src).take_error();
    if (auto r = expect(tok_kind::arrow, "'->'"); !r.ok()) {
      return std::move(r).take_error();
    }
    auto tgt = term(0);
    if (!tgt.ok()) return std::move(tgt).take_error();
    ty.src = std::move(src).value();
    ty.tgt = std::move(tgt).value();
    return ty;
  }

  result<surface_decl> decl() {
    auto kw = expect(tok_kind::ident, "'coh' or 'def'");
    if (!kw.ok()) return std::move(kw).take_error();
    surface_decl d;
    d.where = span_of(file, kw.value());
    if (kw.value().text == "coh") {
      d.kind = decl_kind::coh;
    } else if (kw.value().text == "def") {
      d.kind = decl_kind::def;
    } else {
      return parse_fail(file, kw.value(), "expected 'coh' or 'def'");
    }
    auto name = expect(tok_kind::ident, "a declaration name");
    if (!name.ok()) return std::move(name).take_error();
    d.name = name.value().text;
    while (at(tok_kind::lparen)) {
      next();
      binder b;
      auto bn = expect(tok_kind::ident, "a binder name");
      if (!bn.ok()) return std::move(bn).take_error();
      b.where = span_of(file, bn.value());
      b.name = bn.value().text;
      if (auto r = expect(tok_kind::colon, "':'"); !r.ok()) {
        return std::move(r).take_error();
      }
      auto bt = type();
      if (!bt.ok()) return std::move(bt).take_error();
      b.ty = std::move(bt).value();
      if (auto r = expect(tok_kind::rparen, "')'"); !r.ok()) {
        return std::move(r).take_error();
      }
      d.telescope.push_back(std::move(b));
    }
    if (auto r = expect(tok_kind::colon, "':'"); !r.ok()) {
      return std::move(r).take_error();
    }
    auto rt = type();
    if (!rt.ok()) return std::move(rt).take_error();
    d.result_ty = std::move(rt).value();
    if (at(tok_kind::assign)) {
      next();
      auto body = term(0);
      if (!body.ok()) return std::move(body).take_error();
      d.body = std::move(body).value();
    }
    return d;
  }
};

}  // namespace

result<std::vector<surface_decl>> parse(std::string_view source,
                                        std::string file) {
  auto toks = tokenize(source, file);
  if (!toks.ok()) return std::move(toks).take_error();
  parser p{file, toks.value()};
  std::vector<surface_decl> decls;
  while (!p.at(tok_kind::end)) {
    auto d = p.decl();
    if (!d.ok()) return std::move(d).take_error();
    decls.push_back(std::move(d).value());
  }
  return decls;
}

const decl_entry* decl_store::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return nullptr;
  return &entries_[it->second];
}

void decl_store::add(decl_entry e) {
  by_name_.emplace(e.name, entries_.size());
  entries_.push_back(std::move(e));
}

namespace {

diagnostic at_span(diagnostic d, const source_span& sp) {
  if (!d.where) d.where = sp;
  return d;
}

struct elaborator {
  const decl_store& store;
  checker check;

  result<term_ptr> term(const raw_ctx& ctx,
                        const std::vector<std::string>& scope,
                        const surface_term& t) const {
    for (std::size_t k = 0; k < scope.size(); ++k) {
      if (scope[k] != t.head) continue;
      if (t.applied) {
        auto d = make_diag(rule_id::tm, diag_kind::arity_mismatch,
                           "variable '" + t.head + "' takes no arguments");
        return at_span(std::move(d), t.where);
      }
      return var(static_cast<var_name>(k));
    }
    const decl_entry* entry = store.find(t.head);
    if (entry == nullptr) {
      auto d = make_diag(rule_id::var, diag_kind::unknown_name,
                         "unknown name '" + t.head + "'");
      return at_span(std::move(d), t.where);
    }
    if (t.args.size() != entry->ctx.size()) {
      auto d = make_diag(rule_id::tm, diag_kind::arity_mismatch,
                         "'" + t.head + "' expects " +
                             std::to_string(entry->ctx.size()) +
                             " arguments, got " +
                             std::to_string(t.args.size()));
      d.expected = std::to_string(entry->ctx.size());
      d.actual = std::to_string(t.args.size());
      return at_span(std::move(d), t.where);
    }
    raw_sub sub;
    sub.entries.reserve(t.args.size());
    for (std::size_t k = 0; k < t.args.size(); ++k) {
      auto value = term(ctx, scope, t.args[k]);
      if (!value.ok()) return std::move(value).take_error();
      sub.push(entry->ctx.entries[k].name, std::move(value).value());
    }
    if (entry->kind == decl_kind::coh) return coh(entry->index, sub);
    return apply_sub_tm(entry->body, sub);
  }

  result<type_ptr> type(const raw_ctx& ctx,
                        const std::vector<std::string>& scope,
                        const surface_type& ty) const {
    if (ty.is_obj) return obj();
    auto src = term(ctx, scope, ty.src);
    if (!src.ok()) return std::move(src).take_error();
    auto tgt = term(ctx, scope, ty.tgt);
    if (!tgt.ok()) return std::move(tgt).take_error();
    auto src_ty = check.infer_tm(ctx, src.value());
    if (!src_ty.ok()) {
      return at_span(std::move(src_ty).take_error(), ty.src.where);
    }
    auto tgt_ty = check.infer_tm(ctx, tgt.value());
    if (!tgt_ty.ok()) {
      return at_span(std::move(tgt_ty).take_error(), ty.tgt.where);
    }
    if (!syn_eq(src_ty.value(), tgt_ty.value())) {
      auto d = make_diag(rule_id::ar, diag_kind::endpoint_type_mismatch,
                         "arrow endpoints have different types");
      d.expected = render_ty(src_ty.value());
      d.actual = render_ty(tgt_ty.value());
      return at_span(std::move(d), ty.where);
    }
    return arrow(std::move(src_ty).value(), std::move(src).value(),
                 std::move(tgt).value());
  }
};

}  // namespace

result<decl_entry> elaborate(const decl_store& store, const surface_decl& d,
                             bool cache) {
  if (store.find(d.name) != nullptr) {
    return at_span(make_diag(rule_id::parse, diag_kind::duplicate_name,
                             "name '" + d.name + "' is already declared"),
                   d.where);
  }
  elaborator elab{store, checker(catt_signature(), cache)};

  raw_ctx ctx;
  std::vector<std::string> scope;
  for (const auto& b : d.telescope) {
    for (const auto& seen : scope) {
      if (seen == b.name) {
        return at_span(
            make_diag(rule_id::cc, diag_kind::duplicate_name,
                      "binder '" + b.name + "' is declared twice"),
            b.where);
      }
    }
    auto ty = elab.type(ctx, scope, b.ty);
    if (!ty.ok()) return std::move(ty).take_error();
    ctx.push(static_cast<var_name>(scope.size()), std::move(ty).value());
    scope.push_back(b.name);
  }

  auto result_ty = elab.type(ctx, scope, d.result_ty);
  if (!result_ty.ok()) return std::move(result_ty).take_error();

  decl_entry entry;
  entry.kind = d.kind;
  entry.name = d.name;
  entry.where = d.where;
  entry.ctx = ctx;
  entry.ty = std::move(result_ty).value();

  if (d.kind == decl_kind::coh) {
    if (d.body) {
      return at_span(make_diag(rule_id::parse, diag_kind::parse_error,
                               "coherence declarations take no body"),
                     d.where);
    }
    auto index = make_index(ctx, entry.ty);
    if (!index.ok()) {
      auto err = std::move(index).take_error();
      const auto& sp =
          err.kind == diag_kind::not_ps ? d.where : d.result_ty.where;
      return at_span(std::move(err), sp);
    }
    entry.index = std::move(index).value();
    return entry;
  }

  if (!d.body) {
    return at_span(make_diag(rule_id::parse, diag_kind::parse_error,
                             "definition requires a body"),
                   d.where);
  }
  auto body = elab.term(ctx, scope, *d.body);
  if (!body.ok()) return std::move(body).take_error();
  entry.body = std::move(body).value();
  if (auto err = elab.check.check_tm(ctx, entry.body, entry.ty)) {
    return at_span(std::move(*err), d.body->where);
  }
  return entry;
}

}  // namespace catt::surface
