// Command-line front end for the cyclotome library.
//
// Exit status: 0 on success, 1 when a verification finds a mismatch, 2 on
// bad usage or parameters.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cyclotome/cyclo_ctx.hpp"
#include "cyclotome/cyclo_eval.hpp"
#include "cyclotome/error.hpp"
#include "cyclotome/io.hpp"
#include "cyclotome/line.hpp"
#include "cyclotome/number_theory.hpp"
#include "cyclotome/oracle.hpp"
#include "cyclotome/poly.hpp"
#include "cyclotome/singer.hpp"
#include "cyclotome/verify.hpp"

using namespace cyclotome;

namespace {

struct FieldArgs {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::string poly;
  std::string ds;
};

void add_field_args(CLI::App* cmd, FieldArgs& a) {
  cmd->add_option("q", a.q, "base field order (prime power)")->required();
  cmd->add_option("n", a.n, "extension degree")->required();
  cmd->add_option("--poly", a.poly, "primitive polynomial over GF(q), low degree first, e.g. 1,0,2,1");
  cmd->add_option("--ds", a.ds, "Singer set to use instead of the recurrence output (any translate)");
}

CycloPtr make_ctx(const FieldArgs& a) {
  const auto pp = as_prime_power(a.q);
  if (!pp) throw Error(ErrorCode::NotPrimePower, std::to_string(a.q) + " is not a prime power");
  CycloCtx::Options opts;
  if (!a.poly.empty()) opts.prim_poly = parse_poly(field_new(pp->p, pp->s), a.poly);
  if (!a.ds.empty()) {
    const auto params = SingerParams::of(a.q, a.n);
    opts.singer_set = parse_residue_list(params.v, a.ds);
  }
  return CycloCtx::create(a.q, a.n, std::move(opts));
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw Error(ErrorCode::InvalidParams, "cannot write " + out_path);
  f << text;
}

std::string format_set(const ResidueSet& s, const std::string& format) {
  if (format == "json") return to_json(s);
  if (format == "csv") return to_list(s);
  return to_display(s);
}

int run_singer(const FieldArgs& a, const std::string& format) {
  const auto ctx = make_ctx(a);
  const auto& p = ctx->params();
  if (format == "pretty") {
    std::cout << "polynomial " << pretty_poly(ctx->prim_poly()) << " (" << format_poly(ctx->prim_poly()) << ")\n"
              << "(v,k,lambda) = (" << p.v << "," << p.k << "," << p.lambda << ")\n";
  }
  std::cout << format_set(ctx->ds(), format) << '\n';
  return 0;
}

int run_line(const FieldArgs& a, Residue k, const std::string& format, bool verbose) {
  const auto ctx = make_ctx(a);
  const auto s = line_set(*ctx, k);
  if (verbose) {
    std::cout << "I = " << to_display(ctx->ds()) << '\n';
    if (ctx->n() == 2) {
      std::cout << "n = 2: every point lies on the line\n";
    } else if (const auto d = subfield_degree(*ctx, k)) {
      std::cout << "alpha^" << k << " lies in GF(q^" << *d << "); scaling by g = " << ctx->subfield_index(*d) << '\n';
    } else {
      const auto g = line_general_traced(*ctx, k);
      std::cout << "L = " << to_display(g.intersection) << '\n' << "x = " << g.shift << '\n';
    }
  }
  std::cout << format_set(s, format) << '\n';
  return 0;
}

int run_table(const FieldArgs& a, std::optional<Residue> order, const std::string& format,
              const std::string& out) {
  const auto ctx = make_ctx(a);
  const auto t = cyclo_table(*ctx, order.value_or(ctx->e()));
  if (format == "json") {
    emit(to_json(t), out);
  } else if (format == "csv") {
    emit(to_csv(t), out);
  } else {
    emit(to_pretty(t), out);
  }
  return 0;
}

int run_verify(const FieldArgs& a, std::optional<Residue> order, bool verbose) {
  const auto ctx = make_ctx(a);
  const Residue m = order.value_or(ctx->e());
  const Oracle oracle(*ctx);
  const auto t = cyclo_table(*ctx, m);
  const auto diff = compare_with_oracle(t, oracle);
  const auto storer = check_storer(t, ctx->p());

  std::uint64_t line_checks = 0, line_failures = 0;
  if (m == ctx->e()) {
    for (Residue k = 1; k < ctx->e(); ++k) {
      ++line_checks;
      if (line_set(*ctx, k) != oracle.line(k)) {
        ++line_failures;
        std::cout << "line mismatch at k = " << k << '\n';
      }
    }
  }

  std::cout << "GF(" << ctx->q() << "^" << ctx->n() << "), order " << m << ", f = " << t.f << '\n'
            << "pairs checked: " << diff.checks << ", mismatches: " << diff.mismatches.size() << '\n'
            << "identity checks: " << storer.checks << ", failures: " << storer.failures.size() << '\n';
  if (m == ctx->e()) std::cout << "lines checked: " << line_checks << ", mismatches: " << line_failures << '\n';
  for (const auto& x : diff.mismatches) {
    std::cout << "  (" << x.i << "," << x.j << "): computed " << x.got << ", oracle " << x.want << '\n';
  }
  for (const auto& s : storer.failures) std::cout << "  " << s << '\n';
  if (verbose) {
    std::cout << "column 0:";
    for (Residue i = 0; i < m; ++i) std::cout << ' ' << "(" << i << ",0)=" << t.at(i, 0);
    std::cout << '\n';
  }
  const bool ok = diff.ok() && storer.ok() && line_failures == 0;
  std::cout << (ok ? "OK" : "FAILED") << '\n';
  return ok ? 0 : 1;
}

int run_factor(std::uint64_t value) {
  std::cout << value << " =";
  const auto fs = factorize(value);
  if (fs.empty()) std::cout << " 1";
  for (std::size_t i = 0; i < fs.size(); ++i) std::cout << (i ? " * " : " ") << fs[i];
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclotomic numbers of order dividing (q^n-1)/(q-1) via Singer difference sets"};
  app.require_subcommand(1);

  std::string format = "pretty";
  std::string out;
  bool verbose = false;
  std::optional<Residue> order;
  Residue k = 0;
  std::uint64_t value = 0;
  const auto formats = CLI::IsMember({"json", "csv", "pretty"});

  FieldArgs singer_args;
  auto* singer = app.add_subcommand("singer", "print the Singer difference set");
  add_field_args(singer, singer_args);
  singer->add_option("--format", format, "json, csv or pretty")->check(formats);

  FieldArgs line_args;
  auto* line = app.add_subcommand("line", "print S_k, the line through points 0 and k");
  add_field_args(line, line_args);
  line->add_option("k", k, "point index, 1 <= k < e")->required();
  line->add_option("--format", format, "json, csv or pretty")->check(formats);
  line->add_flag("-v,--verbose", verbose, "show the intersection L and shift x");

  FieldArgs table_args;
  auto* table = app.add_subcommand("table", "tabulate cyclotomic numbers");
  add_field_args(table, table_args);
  table->add_option("--order", order, "divisor of e (default e)");
  table->add_option("--format", format, "json, csv or pretty")->check(formats);
  table->add_option("--out", out, "write to FILE instead of stdout");

  FieldArgs verify_args;
  auto* verify = app.add_subcommand("verify", "cross-check a table against brute force");
  add_field_args(verify, verify_args);
  verify->add_option("--order", order, "divisor of e (default e)");
  verify->add_flag("-v,--verbose", verbose, "print column 0");

  auto* factor = app.add_subcommand("factor", "factor an integer (debug)");
  factor->add_option("value", value, "integer to factor")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*singer) return run_singer(singer_args, format);
    if (*line) return run_line(line_args, k, format, verbose);
    if (*table) return run_table(table_args, order, format, out);
    if (*verify) return run_verify(verify_args, order, verbose);
    if (*factor) return run_factor(value);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
