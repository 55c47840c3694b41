#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "catt/ps.hpp"
#include "catt/sexpr.hpp"
#include "catt/surface.hpp"
#include "catt/theory.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failure = 1;
constexpr int exit_parse_failure = 2;

bool color_enabled() {
  const char* env = std::getenv("CATT_COLOR");
  if (env != nullptr && std::string(env) == "0") return false;
  return isatty(fileno(stderr)) != 0;
}

void report(const catt::diagnostic& d) {
  if (color_enabled()) {
    std::string text = d.render();
    auto pos = text.find("error:");
    if (pos != std::string::npos) {
      text.insert(pos + 6, "\x1b[0m");
      text.insert(pos, "\x1b[1;31m");
    }
    std::cerr << text << '\n';
  } else {
    std::cerr << d.render() << '\n';
  }
}

int failure_class(const catt::diagnostic& d) {
  if (d.kind == catt::diag_kind::parse_error ||
      d.kind == catt::diag_kind::io_error) {
    return exit_parse_failure;
  }
  return exit_check_failure;
}

catt::result<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    auto d = catt::make_diag(catt::rule_id::parse, catt::diag_kind::io_error,
                             "cannot open '" + path + "'");
    return d;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

struct run_options {
  bool cache = true;
  int max_errors = 1;
};

struct file_result {
  catt::surface::decl_store store;
  std::vector<catt::diagnostic> diags;
};

// Processes one file: parse, then elaborate declarations in order, skipping
// rejected ones. Stops once the error budget is exhausted.
file_result process_file(const std::string& path, const run_options& opts,
                         int budget) {
  file_result out;
  auto text = read_file(path);
  if (!text.ok()) {
    out.diags.push_back(std::move(text).take_error());
    return out;
  }
  auto decls = catt::surface::parse(text.value(), path);
  if (!decls.ok()) {
    out.diags.push_back(std::move(decls).take_error());
    return out;
  }
  for (const auto& d : decls.value()) {
    auto entry = catt::surface::elaborate(out.store, d, opts.cache);
    if (entry.ok()) {
      out.store.add(std::move(entry).value());
      continue;
    }
    out.diags.push_back(std::move(entry).take_error());
    if (static_cast<int>(out.diags.size()) >= budget) break;
  }
  return out;
}

int run_check(const std::vector<std::string>& files, const run_options& opts) {
  int first_failure = exit_ok;
  int reported = 0;
  for (const auto& path : files) {
    file_result r = process_file(path, opts, opts.max_errors - reported);
    for (const auto& d : r.diags) {
      report(d);
      if (first_failure == exit_ok) first_failure = failure_class(d);
      ++reported;
    }
    if (reported >= opts.max_errors && !r.diags.empty()) break;
  }
  return first_failure;
}

void dump_sexpr(const catt::surface::decl_store& store) {
  for (const auto& e : store.entries()) {
    if (e.kind == catt::surface::decl_kind::coh) {
      std::cout << "(coh " << e.name << ' ' << catt::render_ctx(e.ctx) << ' '
                << catt::render_ty(e.ty) << ")\n";
    } else {
      std::cout << "(def " << e.name << ' ' << catt::render_ctx(e.ctx) << ' '
                << catt::render_ty(e.ty) << ' ' << catt::render_tm(e.body)
                << ")\n";
    }
  }
}

void dump_json(const catt::surface::decl_store& store) {
  std::cout << '[';
  bool first = true;
  for (const auto& e : store.entries()) {
    if (!first) std::cout << ',';
    first = false;
    const char* kind =
        e.kind == catt::surface::decl_kind::coh ? "coh" : "def";
    std::cout << "{\"sort\":\"decl\",\"node\":\"" << kind
              << "\",\"children\":[{\"sort\":\"name\",\"node\":\"" << e.name
              << "\",\"children\":[]}," << catt::json_ctx(e.ctx) << ','
              << catt::json_ty(e.ty);
    if (e.kind == catt::surface::decl_kind::def) {
      std::cout << ',' << catt::json_tm(e.body);
    }
    std::cout << "]}";
  }
  std::cout << "]\n";
}

int run_dump(const std::string& path, const std::string& format,
             const run_options& opts) {
  file_result r = process_file(path, opts, 1);
  if (!r.diags.empty()) {
    report(r.diags.front());
    return failure_class(r.diags.front());
  }
  if (format == "json") {
    dump_json(r.store);
  } else {
    dump_sexpr(r.store);
  }
  return exit_ok;
}

const char* move_name(catt::ps_move m) {
  switch (m) {
    case catt::ps_move::start: return "start";
    case catt::ps_move::extend: return "extend";
    case catt::ps_move::drop: return "drop";
  }
  return "?";
}

int run_explain(const std::string& path, const run_options& opts) {
  file_result r = process_file(path, opts, 1);
  if (!r.diags.empty()) {
    report(r.diags.front());
    return failure_class(r.diags.front());
  }
  for (const auto& e : r.store.entries()) {
    if (e.kind != catt::surface::decl_kind::coh) continue;
    const auto& d = e.index->ps;
    std::cout << "coh " << e.name << '\n';
    std::cout << "  context: " << catt::render_ctx(d.ctx) << '\n';
    std::cout << "  moves:";
    for (auto m : d.moves) std::cout << ' ' << move_name(m);
    std::cout << '\n';

    auto rel = catt::triangle_rel::of(d.ctx);
    std::vector<catt::var_name> order = catt::vars_ctx(d.ctx).items();
    std::sort(order.begin(), order.end(),
              [&](catt::var_name a, catt::var_name b) {
                return rel.related(a, b);
              });
    std::cout << "  order:";
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k > 0) std::cout << " <";
      std::cout << ' ' << order[k];
    }
    std::cout << '\n';
    std::cout << "  src: " << catt::render_var_set(catt::src_set(d)) << '\n';
    std::cout << "  tgt: " << catt::render_var_set(catt::tgt_set(d)) << '\n';
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"type checker for finite globular coherence theories"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  run_options opts;
  app.add_flag_function(
      "--no-cache", [&](std::int64_t) { opts.cache = false; },
      "disable per-index validation memoization");
  app.add_option("--max-errors", opts.max_errors,
                 "stop after this many check failures")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> check_files;
  auto* check_cmd =
      app.add_subcommand("check", "type-check declaration files in order");
  check_cmd->add_option("files", check_files, "input files")->required();

  std::string dump_file;
  std::string dump_format = "sexpr";
  auto* dump_cmd =
      app.add_subcommand("dump", "emit the elaborated raw syntax");
  dump_cmd->add_option("file", dump_file, "input file")->required();
  dump_cmd->add_option("--format", dump_format, "sexpr or json")
      ->check(CLI::IsMember({"sexpr", "json"}));

  std::string explain_file;
  auto* explain_cmd = app.add_subcommand(
      "explain-ps", "print derivation moves, order and boundaries");
  explain_cmd->add_option("file", explain_file, "input file")->required();

  try {
    app.parse(argc, argv);
    if (check_cmd->parsed()) return run_check(check_files, opts);
    if (dump_cmd->parsed()) return run_dump(dump_file, dump_format, opts);
    if (explain_cmd->parsed()) return run_explain(explain_file, opts);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_parse_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_parse_failure;
  }
  return exit_parse_failure;
}
