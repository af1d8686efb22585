#ifndef CTT_ERRORS_HPP
#define CTT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace ctt {

enum class Err {
  // Scoping and lookup
  NotFound,
  IllScoped,
  UnboundLfVar,
  UnboundCompVar,
  UnknownCtxVar,
  UnknownName,
  DuplicateName,
  // LF substitution machinery (internal on well-typed inputs)
  LookupFailure,
  TruncFailure,
  // Reduction
  FuelExhausted,
  StuckTerm,
  DispatchFailure,
  // Typing
  IllKinded,
  IllKindedDecl,
  SchemaViolation,
  NotAFunction,
  DomainMismatch,
  UnboxNotBox,
  NotAParameter,
  NotAPrefix,
  EntryTypeMismatch,
  CtxMismatch,
  UniverseError,
  BadInvariantShape,
  NotNeutral,
  NotInferable,
  TypeMismatch,
  // Frontend
  SyntaxError,
};

const char* err_name(Err e);

// True for failures that indicate a kernel bug (or a resource limit) rather
// than a defect in the user's input.
bool err_is_internal(Err e);

struct KernelError : std::runtime_error {
  Err code;
  std::string judgment;  // which judgment was being decided, e.g. "G;Psi |- M : A"
  std::string expected;
  std::string actual;

  KernelError(Err c, std::string judg, const std::string& msg, std::string exp = "",
              std::string act = "")
      : std::runtime_error(msg),
        code(c),
        judgment(std::move(judg)),
        expected(std::move(exp)),
        actual(std::move(act)) {}
};

[[noreturn]] inline void fail(Err c, std::string judg, const std::string& msg,
                              std::string exp = "", std::string act = "") {
  throw KernelError(c, std::move(judg), msg, std::move(exp), std::move(act));
}

}  // namespace ctt

#endif  // CTT_ERRORS_HPP
