#include "qschubert/cli.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "qschubert/partition.hpp"
#include "qschubert/quantum.hpp"
#include "qschubert/rimhook.hpp"
#include "qschubert/verify.hpp"

namespace qschubert::cli {

namespace {

using nlohmann::json;

// Thrown inside command handlers; carries the exit code.
struct CommandError : std::runtime_error {
  CommandError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

struct Flags {
  int l = 0;
  int k = 0;
  int n = 0;
  int d = 0;
  std::string lambda = "-";
  std::string mu = "-";
  std::string nu = "-";
  std::string rho = "-";
  std::string suite;
  int max_n = 7;
  int max_side = 0;
  int max_size = 14;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  std::size_t sample = 0;
  std::string format = "text";
};

Partition parse_arg(const std::string& text, const char* flag) {
  if (text.find_first_of(" \t\n") != std::string::npos) {
    throw CommandError(kExitUsage, std::string(flag) + ": whitespace is not allowed in a partition");
  }
  try {
    return parse_partition(text);
  } catch (const ParseError& e) {
    throw CommandError(kExitUsage, std::string(flag) + ": " + e.what());
  }
}

GrassmannianContext make_context(const Flags& f) {
  if (f.l < 1 || f.k < 1) {
    throw CommandError(kExitUsage, "--l and --k must both be positive integers");
  }
  return {f.l, f.k};
}

Partition parse_in_box(const std::string& text, const char* flag, const GrassmannianContext& ctx) {
  Partition p = parse_arg(text, flag);
  if (!fits_in_box(p, ctx)) {
    throw CommandError(kExitBox, std::string(flag) + ": " + to_string(p) + " does not fit in the " +
                                     std::to_string(ctx.l) + "x" + std::to_string(ctx.k) + " box");
  }
  return p;
}

json coefficient_json(const Coefficient& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
    return c.convert_to<long long>();
  }
  return c.str();
}

json optional_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

std::string optional_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

json document(const std::string& name, json args, const std::optional<GrassmannianContext>& ctx, json payload) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = {{"name", name}, {"args", std::move(args)}};
  doc["context"] = ctx ? json{{"l", ctx->l}, {"k", ctx->k}} : json(nullptr);
  doc["payload"] = std::move(payload);
  return doc;
}

std::string text_header(const std::string& name, const std::string& args) {
  return std::string("schema ") + kSchemaVersion + "\ncommand " + name + (args.empty() ? "" : " " + args) + "\n";
}

std::string int_list(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i == 0 ? "" : ",") + std::to_string(values[i]);
  }
  return out.empty() ? "-" : out;
}

Result cmd_product(const Flags& f) {
  const auto ctx = make_context(f);
  const Partition lam = parse_in_box(f.lambda, "--lambda", ctx);
  const Partition mu = parse_in_box(f.mu, "--mu", ctx);
  const QuantumExpansion product = quantum_product_basis(lam, mu, ctx);
  Result r;
  if (f.format == "json") {
    json terms = json::array();
    for (const auto& [term, c] : product.terms()) {
      terms.push_back({{"d", term.degree}, {"nu", term.shape.parts()}, {"coeff", coefficient_json(c)}});
    }
    json args = {{"l", ctx.l}, {"k", ctx.k}, {"lambda", lam.parts()}, {"mu", mu.parts()}};
    r.out = document("product", std::move(args), ctx, {{"terms", std::move(terms)}}).dump(2) + "\n";
  } else {
    r.out = text_header("product", "l=" + std::to_string(ctx.l) + " k=" + std::to_string(ctx.k) +
                                        " lambda=" + to_string(lam) + " mu=" + to_string(mu));
    for (const auto& [term, c] : product.terms()) {
      r.out += "q^" + std::to_string(term.degree) + " * sigma[" + to_string(term.shape) + "] : " + c.str() + "\n";
    }
  }
  return r;
}

Result cmd_core(const Flags& f, bool have_l, bool have_k) {
  if (f.n < 2) {
    throw CommandError(kExitUsage, "--n: must be at least 2");
  }
  if (have_l != have_k) {
    throw CommandError(kExitUsage, "--l and --k must be given together");
  }
  const Partition rho = parse_arg(f.rho, "--rho");
  std::optional<GrassmannianContext> ctx;
  if (have_l) {
    ctx = make_context(f);
    if (ctx->n() != f.n) {
      throw CommandError(kExitNMismatch, "--n: l + k = " + std::to_string(ctx->n()) + " but n = " + std::to_string(f.n));
    }
  }
  const RimHookTrace trace = n_core(rho, f.n);
  std::vector<int> widths;
  for (const auto& hook : trace.removed) {
    widths.push_back(hook.width());
  }
  std::optional<int> sign;
  if (ctx) {
    sign = epsilon(trace, *ctx);
  }
  Result r;
  if (f.format == "json") {
    json payload = {{"n", f.n},       {"rho", rho.parts()},       {"core", trace.core.parts()},
                    {"r", trace.removals()}, {"widths", widths}, {"epsilon", optional_json(sign)}};
    json args = {{"n", f.n}, {"rho", rho.parts()}};
    if (ctx) {
      args["l"] = ctx->l;
      args["k"] = ctx->k;
    }
    r.out = document("core", std::move(args), ctx, std::move(payload)).dump(2) + "\n";
  } else {
    std::string args = "n=" + std::to_string(f.n) + " rho=" + to_string(rho);
    if (ctx) {
      args += " l=" + std::to_string(ctx->l) + " k=" + std::to_string(ctx->k);
    }
    r.out = text_header("core", args);
    r.out += "core: " + to_string(trace.core) + "\n";
    r.out += "r: " + std::to_string(trace.removals()) + "\n";
    r.out += "widths: " + int_list(widths) + "\n";
    if (sign) {
      r.out += std::string("epsilon: ") + (*sign > 0 ? "+1" : "-1") + "\n";
    }
  }
  return r;
}

Result cmd_degrees(const Flags& f) {
  const auto ctx = make_context(f);
  const Partition lam = parse_in_box(f.lambda, "--lambda", ctx);
  const Partition mu = parse_in_box(f.mu, "--mu", ctx);
  const auto degrees = occurring_degrees(quantum_product_basis(lam, mu, ctx));
  const std::optional<int> low = degrees.empty() ? std::nullopt : std::optional<int>(degrees.front());
  const std::optional<int> high = degrees.empty() ? std::nullopt : std::optional<int>(degrees.back());
  const int square = largest_square_in_overlap(lam, mu, ctx);
  const int bound = std::min(durfee(lam), durfee(mu));
  Result r;
  if (f.format == "json") {
    json payload = {{"d_min", optional_json(low)},  {"square", square}, {"d_max", optional_json(high)},
                    {"diag_bound", bound}, {"occurring_degrees", degrees}};
    json args = {{"l", ctx.l}, {"k", ctx.k}, {"lambda", lam.parts()}, {"mu", mu.parts()}};
    r.out = document("degrees", std::move(args), ctx, std::move(payload)).dump(2) + "\n";
  } else {
    r.out = text_header("degrees", "l=" + std::to_string(ctx.l) + " k=" + std::to_string(ctx.k) +
                                        " lambda=" + to_string(lam) + " mu=" + to_string(mu));
    r.out += "d_min: " + optional_text(low) + "\n";
    r.out += "square: " + std::to_string(square) + "\n";
    r.out += "d_max: " + optional_text(high) + "\n";
    r.out += "diag_bound: " + std::to_string(bound) + "\n";
    r.out += "occurring_degrees: " + int_list(degrees) + "\n";
  }
  return r;
}

Result cmd_gw(const Flags& f) {
  const auto ctx = make_context(f);
  const Partition lam = parse_in_box(f.lambda, "--lambda", ctx);
  const Partition mu = parse_in_box(f.mu, "--mu", ctx);
  const Partition nu = parse_in_box(f.nu, "--nu", ctx);
  if (f.d < 0) {
    throw CommandError(kExitUsage, "--d: degree must be nonnegative");
  }
  const std::uint64_t value = gw_invariant(lam, mu, nu, f.d, ctx);
  Result r;
  if (f.format == "json") {
    json args = {{"l", ctx.l}, {"k", ctx.k}, {"lambda", lam.parts()}, {"mu", mu.parts()}, {"nu", nu.parts()},
                 {"d", f.d}};
    r.out = document("gw", std::move(args), ctx, {{"invariant", value}}).dump(2) + "\n";
  } else {
    r.out = text_header("gw", "l=" + std::to_string(ctx.l) + " k=" + std::to_string(ctx.k) + " lambda=" +
                                  to_string(lam) + " mu=" + to_string(mu) + " nu=" + to_string(nu) +
                                  " d=" + std::to_string(f.d));
    r.out += "invariant: " + std::to_string(value) + "\n";
  }
  return r;
}

Result cmd_verify(const Flags& f) {
  if (!is_suite_name(f.suite)) {
    throw CommandError(kExitUsage, "--suite: unknown suite '" + f.suite + "'");
  }
  if (f.max_n < 2) {
    throw CommandError(kExitUsage, "--max-n: must be at least 2");
  }
  SweepBounds bounds;
  bounds.max_n = f.max_n;
  bounds.max_side = f.max_side;
  bounds.core_max_size = f.max_size;
  SweepOptions options;
  options.workers = std::max(1u, f.workers);
  options.seed = f.seed;
  options.sample = f.sample;
  const auto reports = run_suite_sweep(f.suite, bounds, options);

  bool counterexample = false;
  bool error = false;
  for (const auto& report : reports) {
    counterexample = counterexample || !report.counterexamples.empty();
    error = error || !report.errors.empty();
  }
  Result r;
  if (f.format == "json") {
    json list = json::array();
    for (const auto& report : reports) {
      list.push_back(to_json(report));
    }
    json args = {{"suite", f.suite}, {"max_n", f.max_n}, {"max_side", f.max_side}, {"max_size", f.max_size},
                 {"seed", f.seed},   {"sample", f.sample}};
    json payload = {{"passed", !counterexample && !error}, {"reports", std::move(list)}};
    r.out = document("verify", std::move(args), std::nullopt, std::move(payload)).dump(2) + "\n";
  } else {
    r.out = text_header("verify", "suite=" + f.suite + " max-n=" + std::to_string(f.max_n));
    r.out += to_text_table(reports);
  }
  if (counterexample) {
    r.exit_code = kExitCounterexample;
    r.err = "verify: counterexamples found\n";
  } else if (error) {
    r.exit_code = kExitInternal;
    r.err = "verify: errors raised while checking cases\n";
  }
  return r;
}

}  // namespace

Result run(const std::vector<std::string>& args) {
  Flags f;
  CLI::App app{"Quantum Schubert calculus on Grassmannians via the rim-hook rule", "qschubert"};
  app.require_subcommand(1);
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_box = [&](CLI::App* sub) {
    sub->add_option("--l", f.l, "Rows of the box (subspace dimension)")->required();
    sub->add_option("--k", f.k, "Columns of the box (codimension)")->required();
  };

  auto* product = app.add_subcommand("product", "Quantum product sigma_lambda * sigma_mu");
  add_box(product);
  product->add_option("--lambda", f.lambda, "First partition, e.g. 2,1 or -");
  product->add_option("--mu", f.mu, "Second partition");
  add_format(product);

  auto* core = app.add_subcommand("core", "n-core, r_n, hook widths and epsilon of a partition");
  core->add_option("--n", f.n, "Rim hook size")->required();
  core->add_option("--rho", f.rho, "Partition to reduce");
  auto* core_l = core->add_option("--l", f.l, "Rows of the box (optional, enables epsilon)");
  auto* core_k = core->add_option("--k", f.k, "Columns of the box");
  add_format(core);

  auto* degrees = app.add_subcommand("degrees", "d_min, largest overlap square, d_max and occurring degrees");
  degrees->alias("dmin-dmax");
  add_box(degrees);
  degrees->add_option("--lambda", f.lambda, "First partition");
  degrees->add_option("--mu", f.mu, "Second partition");
  add_format(degrees);

  auto* gw = app.add_subcommand("gw", "Three-point genus-zero Gromov-Witten invariant <lambda,mu,nu>_d");
  add_box(gw);
  gw->add_option("--lambda", f.lambda, "First partition");
  gw->add_option("--mu", f.mu, "Second partition");
  gw->add_option("--nu", f.nu, "Third partition");
  gw->add_option("--d", f.d, "Degree")->required();
  add_format(gw);

  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->add_option("--suite", f.suite, "Suite name or 'all'")->required();
  verify->add_option("--max-n", f.max_n, "Largest l + k to sweep");
  verify->add_option("--max-side", f.max_side, "Cap on l and k (0: per-suite default)");
  verify->add_option("--max-size", f.max_size, "Largest partition size for core-orders");
  verify->add_option("--workers", f.workers, "Worker threads");
  verify->add_option("--seed", f.seed, "Seed for random orders, triples and sampling");
  verify->add_option("--sample", f.sample, "Check a seeded random subset of this many cases per report");
  add_format(verify);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  Result result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n";
    return result;
  }

  try {
    if (product->parsed()) {
      return cmd_product(f);
    }
    if (core->parsed()) {
      return cmd_core(f, core_l->count() > 0, core_k->count() > 0);
    }
    if (degrees->parsed()) {
      return cmd_degrees(f);
    }
    if (gw->parsed()) {
      return cmd_gw(f);
    }
    return cmd_verify(f);
  } catch (const CommandError& e) {
    result.exit_code = e.code;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = kExitInternal;
    result.err = std::string("internal error: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace qschubert::cli
