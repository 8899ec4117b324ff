#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "polyherm/bchp.hpp"
#include "polyherm/errors.hpp"
#include "polyherm/orthogonality.hpp"
#include "polyherm/parallel.hpp"
#include "polyherm/report.hpp"
#include "polyherm/suites.hpp"
#include "polyherm/wigner.hpp"

namespace {

using namespace polyherm;
using cd = std::complex<double>;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr unsigned kTableBound = 12;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> nodes;
  std::optional<unsigned> trunc;
  std::optional<double> tol;
  std::string format = "json";
  bool as_printed_only = false;
  std::string out;
  unsigned threads = 0;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "pretty") return Format::pretty;
  throw UsageError("unknown format '" + s + "'");
}

// Four required positionals filling one multi-index.
void add_index(CLI::App* cmd, MultiIndex4& M, const std::string& prefix) {
  cmd->add_option(prefix + "m", M.m, "first slot")->required();
  cmd->add_option(prefix + "n", M.n, "second slot")->required();
  cmd->add_option(prefix + "m'", M.mp, "third slot")->required();
  cmd->add_option(prefix + "n'", M.np, "fourth slot")->required();
}

cd complex_arg(const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

nlohmann::ordered_json index_json(const MultiIndex4& M) {
  return nlohmann::ordered_json::array({M.m, M.n, M.mp, M.np});
}

// Plain-text line for a named value, used by the pretty format.
std::string pretty_line(const std::string& key, cd v) { return key + " = " + format_complex(v); }

int cmd_gen(std::ostream& os, const Globals& g, const MultiIndex4& M, const std::string& route_name) {
  const auto route = bchp::parse_route(route_name);
  if (!route) throw UsageError("unknown route '" + route_name + "' (compose, rodrigues, operational, binomial)");
  const Format f = parse_format(g.format);
  if (f == Format::csv) throw UsageError("gen supports json and pretty output");
  const Poly4 p = bchp::build(M, *route);
  os << (f == Format::json ? to_json(p) : pretty(p)) << '\n';
  return kExitPass;
}

int cmd_eval(std::ostream& os, const Globals& g, const MultiIndex4& M, const std::string& zs, const std::string& ws) {
  const cd z = complex_arg(zs), w = complex_arg(ws);
  const cd value = bchp::table(M).eval({z, std::conj(z), w, std::conj(w)});
  switch (parse_format(g.format)) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["M"] = index_json(M);
      j["z"] = format_complex(z);
      j["w"] = format_complex(w);
      j["value"] = format_complex(value);
      os << j.dump() << '\n';
      break;
    }
    case Format::csv:
      os << "M,z,w,value\n"
         << M.str() << ',' << format_complex(z) << ',' << format_complex(w) << ',' << format_complex(value) << '\n';
      break;
    case Format::pretty: os << format_complex(value) << '\n'; break;
  }
  return kExitPass;
}

int cmd_table(std::ostream& os, const Globals& g, unsigned bound) {
  if (bound > kTableBound)
    throw UsageError("table bound " + std::to_string(bound) + " exceeds " + std::to_string(kTableBound));
  const Format f = parse_format(g.format);
  if (f == Format::csv) os << "m,n,mp,np,norm2,poly\n";
  for (const MultiIndex4& M : indices_with_total_le(bound)) {
    const Poly4& p = bchp::table(M);
    const double norm2 = ortho::bchp_norm_squared(M);
    switch (f) {
      case Format::json: {
        nlohmann::ordered_json j;
        j["M"] = index_json(M);
        j["norm2"] = norm2;
        j["poly"] = nlohmann::ordered_json::parse(to_json(p));
        os << j.dump() << '\n';
        break;
      }
      case Format::csv: {
        std::string json = to_json(p), quoted = "\"";
        for (char c : json) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        os << M.m << ',' << M.n << ',' << M.mp << ',' << M.np << ',' << format_double(norm2) << ',' << quoted
           << "\"\n";
        break;
      }
      case Format::pretty:
        os << "H" << M.str() << " = " << pretty(p) << "    norm2 = " << format_double(norm2) << '\n';
        break;
    }
  }
  return kExitPass;
}

int cmd_verify(std::ostream& os, const Globals& g, const std::string& suite, std::optional<unsigned> max) {
  if (!suites::is_known(suite)) {
    std::string known;
    for (const auto& id : suites::known_suites()) known += (known.empty() ? "" : ", ") + id;
    throw UsageError("unknown suite '" + suite + "'; known suites: " + known);
  }
  suites::RunConfig cfg;
  if (g.seed) cfg.seed = *g.seed;
  if (g.nodes) cfg.nodes = *g.nodes;
  if (g.trunc) cfg.trunc = *g.trunc;
  cfg.tol = g.tol;
  cfg.as_printed_only = g.as_printed_only;
  if (max) cfg.max_slot = cfg.max_total = *max;
  const Format f = parse_format(g.format);

  const auto records = suites::run(suite, cfg);
  if (f == Format::csv) os << header(f) << '\n';
  std::size_t counted = 0, failed = 0;
  for (const auto& r : records) {
    os << render(r, f) << '\n';
    if (!suites::counts(r, cfg)) continue;
    ++counted;
    if (!r.pass) ++failed;
  }
  std::cerr << suite << ": " << records.size() << " records, " << counted << " deciding, " << failed << " failed ("
            << (cfg.as_printed_only ? "as-printed policy" : "corrected policy") << ")\n";
  return failed == 0 ? kExitPass : kExitFail;
}

int cmd_wigner(std::ostream& os, const Globals& g, const MultiIndex4& M, const std::string& zs, const std::string& ws) {
  const cd z = complex_arg(zs), w = complex_arg(ws);
  const unsigned nodes = g.nodes.value_or(wigner::kDefaultNodes);
  const bchp::Form form = g.as_printed_only ? bchp::Form::as_printed : bchp::Form::corrected;
  const cd direct = bchp::value(M, z, w);
  const cd via_complex = wigner::bchp_via_complex(M, z, w, form, nodes);
  const cd via_tensor = wigner::bchp_via_tensor(M, z, w, nodes);
  switch (parse_format(g.format)) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["M"] = index_json(M);
      j["z"] = format_complex(z);
      j["w"] = format_complex(w);
      j["nodes"] = nodes;
      j["form"] = form == bchp::Form::as_printed ? "as-printed" : "corrected";
      j["direct"] = format_complex(direct);
      j["complex"] = format_complex(via_complex);
      j["tensor"] = format_complex(via_tensor);
      os << j.dump() << '\n';
      break;
    }
    case Format::csv:
      os << "M,z,w,nodes,direct,complex,tensor\n"
         << M.str() << ',' << format_complex(z) << ',' << format_complex(w) << ',' << nodes << ','
         << format_complex(direct) << ',' << format_complex(via_complex) << ',' << format_complex(via_tensor) << '\n';
      break;
    case Format::pretty:
      os << pretty_line("direct ", direct) << '\n'
         << pretty_line("complex", via_complex) << '\n'
         << pretty_line("tensor ", via_tensor) << '\n';
      break;
  }
  return kExitPass;
}

int cmd_ortho(std::ostream& os, const Globals& g, const MultiIndex4& M, const MultiIndex4& N) {
  const unsigned nodes = g.nodes.value_or(ortho::kDefaultNodes);
  const cd value = ortho::bchp_inner(M, N, nodes);
  const double expected = M == N ? ortho::bchp_norm_squared(M) : 0.0;
  switch (parse_format(g.format)) {
    case Format::json: {
      nlohmann::ordered_json j;
      j["M"] = index_json(M);
      j["N"] = index_json(N);
      j["nodes"] = nodes;
      j["value"] = format_complex(value);
      j["expected"] = format_double(expected);
      os << j.dump() << '\n';
      break;
    }
    case Format::csv:
      os << "M,N,nodes,value,expected\n"
         << M.str() << ',' << N.str() << ',' << nodes << ',' << format_complex(value) << ',' << format_double(expected)
         << '\n';
      break;
    case Format::pretty: os << format_complex(value) << "  (expected " << format_double(expected) << ")\n"; break;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bivariate poly-analytic Hermite polynomials: construction and identity verification"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for sampled points");
  app.add_option("--nodes", g.nodes, "Gauss-Hermite nodes per real dimension");
  app.add_option("--trunc", g.trunc, "Series truncation order");
  app.add_option("--tol", g.tol, "Override every numeric base tolerance");
  app.add_option("--format", g.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_flag("--as-printed-only", g.as_printed_only, "Judge printed forms; their failures decide the exit status");
  app.add_option("--out", g.out, "Write output to FILE instead of stdout");
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware concurrency)");

  MultiIndex4 idx, idx2;
  std::string route = "compose", zs, ws, suite;
  unsigned bound = 0;
  std::optional<unsigned> max;

  auto* gen = app.add_subcommand("gen", "Build H_M by one route and print it");
  add_index(gen, idx, "");
  gen->add_option("--route", route, "compose, rodrigues, operational or binomial");

  auto* eval = app.add_subcommand("eval", "Evaluate H_M(z, w)");
  add_index(eval, idx, "");
  eval->add_option("z", zs, "complex literal a+bi")->required();
  eval->add_option("w", ws, "complex literal a+bi")->required();

  auto* table = app.add_subcommand("table", "Tabulate every H_M with |M| <= bound");
  table->add_option("bound", bound, "maximum total degree (<= 12)")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite or \"all\"");
  verify->add_option("suite", suite, "suite id")->required();
  verify->add_option("--max", max, "index bound for the exact and orthogonality suites");

  auto* wig = app.add_subcommand("wigner", "Compare H_M(z, w) with its Fourier-Wigner representations");
  add_index(wig, idx, "");
  wig->add_option("z", zs, "complex literal a+bi")->required();
  wig->add_option("w", ws, "complex literal a+bi")->required();

  auto* orth = app.add_subcommand("ortho", "Inner product of H_M and H_N under the Gaussian weight");
  add_index(orth, idx, "");
  add_index(orth, idx2, "N.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  std::unique_ptr<std::ofstream> file;
  if (!g.out.empty()) {
    file = std::make_unique<std::ofstream>(g.out);
    if (!*file) {
      std::cerr << "cannot open '" << g.out << "' for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& os = file ? *file : std::cout;
  set_thread_count(g.threads);

  try {
    if (gen->parsed()) return cmd_gen(os, g, idx, route);
    if (eval->parsed()) return cmd_eval(os, g, idx, zs, ws);
    if (table->parsed()) return cmd_table(os, g, bound);
    if (verify->parsed()) return cmd_verify(os, g, suite, max);
    if (wig->parsed()) return cmd_wigner(os, g, idx, zs, ws);
    if (orth->parsed()) return cmd_ortho(os, g, idx, idx2);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
