#ifndef CTT_PARSE_HPP
#define CTT_PARSE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ctt/syntax.hpp"

namespace ctt {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct SyntaxError : KernelError {
  Span span;
  SyntaxError(const std::string& msg, Span s)
      : KernelError(Err::SyntaxError, "parse", msg), span(s) {}
};

// def name : tau = t.  Later items see the definition as a let-bound
// variable; the runner closes terms over the definition bodies before
// reducing them (the kernel has no delta reduction).
struct Def {
  std::string name;
  CompVar var;
  CompType type;
  CompTerm body;
  Span span;
};

struct Directive {
  enum class Kind { Check, Eval, AssertConv, FailCheck };
  Kind kind;
  Span span;
  std::optional<CompTerm> term;          // Check/Eval/FailCheck subject, AssertConv lhs
  std::optional<CompTerm> term2;         // AssertConv rhs
  std::optional<CompType> type;          // ascription
  std::optional<CompType> subject_type;  // #check with a type subject
};

using SourceItem = std::variant<Def, Directive>;

struct SourceFile {
  std::vector<SourceItem> items;
};

SourceFile parse(const std::string& text);

// Single-expression entry points for tests and tools; the expression may
// reference no names other than the fixed signature.
CompTerm parse_comp_term(const std::string& text);
CompType parse_comp_type(const std::string& text);

}  // namespace ctt

#endif  // CTT_PARSE_HPP
