#include "ctt/run.hpp"

#include <json.hpp>

#include "ctt/check.hpp"
#include "ctt/comp_subst.hpp"
#include "ctt/print.hpp"

namespace ctt {

std::string diagnostic_json(const Diagnostic& d) {
  nlohmann::json j;
  j["severity"] = d.severity == Diagnostic::Severity::Error ? "error" : "note";
  j["span"] = {d.span.begin, d.span.end};
  j["judgment"] = d.judgment;
  j["message"] = d.message;
  if (!d.expected.empty()) j["expected"] = d.expected;
  if (!d.actual.empty()) j["actual"] = d.actual;
  return j.dump();
}

std::string diagnostic_text(const Diagnostic& d) {
  std::string out = d.severity == Diagnostic::Severity::Error ? "error" : "note";
  out += " [" + std::to_string(d.span.begin) + "-" + std::to_string(d.span.end) + "]";
  if (!d.judgment.empty()) out += " (" + d.judgment + ")";
  out += ": " + d.message;
  if (!d.expected.empty()) out += "\n  expected: " + d.expected;
  if (!d.actual.empty()) out += "\n  actual:   " + d.actual;
  return out;
}

namespace {

Diagnostic from_error(const KernelError& e, Span span) {
  Diagnostic d;
  d.severity = Diagnostic::Severity::Error;
  d.span = span;
  d.judgment = e.judgment;
  d.message = e.what();
  d.expected = e.expected;
  d.actual = e.actual;
  d.internal = err_is_internal(e.code);
  return d;
}

}  // namespace

RunResult run_source(const SourceFile& file, const RunOptions& opts) {
  RunResult res;
  CompCtx defs;       // definitions in scope, as let-bound variables
  CompSubst closing;  // their (closed) bodies
  CompCtx empty;
  for (const auto& item : file.items) {
    Span span = std::holds_alternative<Def>(item) ? std::get<Def>(item).span
                                                  : std::get<Directive>(item).span;
    try {
      Checker ck(Checker::Options{opts.fuel, opts.trace});
      if (const auto* def = std::get_if<Def>(&item)) {
        ck.kind_of(defs, def->type);
        ck.check_comp(defs, def->body, def->type);
        defs = defs.extended(def->var, def->type);
        closing = closing.extended(def->var, CompPayload{csubst_partial(closing, def->body)});
        continue;
      }
      const Directive& dir = std::get<Directive>(item);
      auto closed = [&](const CompTerm& t) { return csubst_partial(closing, t); };
      switch (dir.kind) {
        case Directive::Kind::Check: {
          if (dir.subject_type) {
            // #check TYPE : U_k
            CompType asc = ck.reducer().whnf_type(*dir.type);
            const auto* u = asc.as<CTUniv>();
            if (!u)
              fail(Err::TypeMismatch, "G |- tau : u",
                   "a type subject must be checked against a universe", "U_k", show(*dir.type));
            ck.check_type_at(defs, *dir.subject_type, u->level);
          } else {
            ck.kind_of(defs, *dir.type);
            ck.check_comp(defs, *dir.term, *dir.type);
          }
          break;
        }
        case Directive::Kind::Eval: {
          CompType ty = ck.infer_comp(defs, *dir.term);
          CompTerm w = ck.reducer().whnf_comp(closed(*dir.term));
          if (opts.eval_out) opts.eval_out(show(w) + " : " + show(ty));
          break;
        }
        case Directive::Kind::AssertConv: {
          ck.kind_of(defs, *dir.type);
          ck.check_comp(defs, *dir.term, *dir.type);
          ck.check_comp(defs, *dir.term2, *dir.type);
          CompType cty = csubst_partial(closing, *dir.type);
          if (!ck.conv().comp(empty, closed(*dir.term), closed(*dir.term2), cty))
            fail(Err::TypeMismatch, "G |- t1 == t2 : tau",
                 "terms are not definitionally equal", show(*dir.term), show(*dir.term2));
          break;
        }
        case Directive::Kind::FailCheck: {
          ck.kind_of(defs, *dir.type);
          bool failed = false;
          try {
            if (dir.subject_type) {
              CompType asc = ck.reducer().whnf_type(*dir.type);
              const auto* u = asc.as<CTUniv>();
              if (!u)
                fail(Err::TypeMismatch, "G |- tau : u",
                     "a type subject must be checked against a universe", "U_k",
                     show(*dir.type));
              ck.check_type_at(defs, *dir.subject_type, u->level);
            } else {
              ck.check_comp(defs, *dir.term, *dir.type);
            }
          } catch (const KernelError& e) {
            if (err_is_internal(e.code)) throw;
            failed = true;
          }
          if (!failed)
            fail(Err::TypeMismatch, "#fail_check",
                 "expected the check to fail, but it succeeded", "a type error",
                 (dir.term ? show(*dir.term) : show(*dir.subject_type)) + " : " +
                     show(*dir.type));
          break;
        }
      }
    } catch (const KernelError& e) {
      res.diagnostics.push_back(from_error(e, span));
      if (res.diagnostics.back().internal)
        res.exit_code = 2;
      else if (res.exit_code == 0)
        res.exit_code = 1;
      if (!opts.keep_going) return res;
    }
  }
  return res;
}

RunResult run_text(const std::string& text, const RunOptions& opts) {
  try {
    SourceFile file = parse(text);
    return run_source(file, opts);
  } catch (const SyntaxError& e) {
    RunResult res;
    res.exit_code = 1;
    res.diagnostics.push_back(from_error(e, e.span));
    return res;
  }
}

}  // namespace ctt
