#ifndef CTT_RUN_HPP
#define CTT_RUN_HPP

#include <functional>
#include <string>
#include <vector>

#include "ctt/parse.hpp"
#include "ctt/whnf.hpp"

namespace ctt {

struct Diagnostic {
  enum class Severity { Error, Note };
  Severity severity = Severity::Error;
  Span span;
  std::string judgment;
  std::string message;
  std::string expected;
  std::string actual;
  bool internal = false;
};

std::string diagnostic_json(const Diagnostic& d);
std::string diagnostic_text(const Diagnostic& d);

struct RunOptions {
  long long fuel = kDefaultFuel;
  bool keep_going = false;
  // #eval output sink; defaults to stdout when null in the CLI.
  std::function<void(const std::string&)> eval_out;
  TraceFn trace;
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 check failure, 2 resource/internal
  std::vector<Diagnostic> diagnostics;
};

RunResult run_source(const SourceFile& file, const RunOptions& opts);
RunResult run_text(const std::string& text, const RunOptions& opts);

}  // namespace ctt

#endif  // CTT_RUN_HPP
