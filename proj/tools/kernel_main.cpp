#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ctt/gen.hpp"
#include "ctt/run.hpp"

namespace {

std::string slurp(const std::string& path, bool& ok) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ok = false;
    return {};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  ok = true;
  return ss.str();
}

int run_files(const std::vector<std::string>& files, const ctt::RunOptions& opts, bool json,
              bool print_evals) {
  int exit_code = 0;
  for (const auto& path : files) {
    bool ok = false;
    std::string text = slurp(path, ok);
    if (!ok) {
      std::cerr << "error: cannot read " << path << "\n";
      return 2;
    }
    ctt::RunOptions o = opts;
    if (print_evals)
      o.eval_out = [&](const std::string& line) { std::cout << line << "\n"; };
    ctt::RunResult res = ctt::run_text(text, o);
    for (const auto& d : res.diagnostics) {
      if (json)
        std::cout << ctt::diagnostic_json(d) << "\n";
      else
        std::cerr << path << ": " << ctt::diagnostic_text(d) << "\n";
    }
    if (res.exit_code > exit_code) exit_code = res.exit_code;
    if (res.exit_code != 0 && !opts.keep_going) return exit_code;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reference kernel for a two-layer contextual type theory"};
  app.require_subcommand(1);
  app.fallthrough();

  long long fuel = ctt::kDefaultFuel;
  bool trace = false;
  bool json = false;
  bool keep_going = false;
  app.add_option("--fuel", fuel, "Reduction step budget")->capture_default_str();
  app.add_flag("--trace", trace, "Print each head reduction step to stderr");
  app.add_flag("--json", json, "Emit diagnostics as JSON, one object per line");
  app.add_flag("--keep-going", keep_going, "Report all failures instead of stopping at the first");

  std::vector<std::string> check_files;
  CLI::App* check = app.add_subcommand("check", "Typecheck files and run their directives");
  check->add_option("files", check_files, "Input files")->required();

  std::vector<std::string> eval_files;
  CLI::App* eval = app.add_subcommand("eval", "Run files, printing #eval results");
  eval->add_option("files", eval_files, "Input files")->required();

  std::uint64_t seed = 0;
  int count = 100;
  CLI::App* harness = app.add_subcommand("harness", "Run the generated metatheory suites");
  harness->add_option("--seed", seed, "Generator seed")->capture_default_str();
  harness->add_option("--count", count, "Cases per suite")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  ctt::RunOptions opts;
  opts.fuel = fuel;
  opts.keep_going = keep_going;
  if (trace) opts.trace = [](const std::string& step) { std::cerr << "[step] " << step << "\n"; };

  try {
    if (check->parsed()) return run_files(check_files, opts, json, /*print_evals=*/false);
    if (eval->parsed()) return run_files(eval_files, opts, json, /*print_evals=*/true);
    if (harness->parsed()) {
      auto results = ctt::run_harness(seed, count);
      int failures = 0;
      for (const auto& r : results) {
        std::cout << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << ": " << r.cases
                  << " cases, " << r.failures << " failures\n";
        for (const auto& note : r.notes) std::cout << "  " << note << "\n";
        failures += r.failures;
      }
      return failures == 0 ? 0 : 1;
    }
  } catch (const ctt::KernelError& e) {
    std::cerr << "internal error (" << ctt::err_name(e.code) << "): " << e.what() << "\n";
    return 2;
  }
  return 0;
}
