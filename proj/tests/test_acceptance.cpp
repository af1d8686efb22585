// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Counts and bounds are fixed here, not configurable.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ctt/check.hpp"
#include "ctt/comp_subst.hpp"
#include "ctt/conv.hpp"
#include "ctt/gen.hpp"
#include "ctt/lf_subst.hpp"
#include "ctt/parse.hpp"
#include "ctt/print.hpp"
#include "ctt/run.hpp"

using namespace ctt;

namespace {

int g_failures = 0;

void report(int n, const char* what, bool ok, const std::string& detail = "") {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

double run_timed(const std::function<bool()>& f, bool& ok) {
  auto t0 = std::chrono::steady_clock::now();
  ok = f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

std::string slurp(const std::string& path, bool& ok) {
  for (const char* prefix : {"", "tests/", "../tests/", "../../tests/"}) {
    std::ifstream in(prefix + path, std::ios::binary);
    if (in.good()) {
      std::ostringstream ss;
      ss << in.rdbuf();
      ok = true;
      return ss.str();
    }
  }
  ok = false;
  return {};
}

LfTerm capp(LfTerm m, LfTerm n) {
  return LfTerm::app(LfTerm::app(LfTerm::con("app"), std::move(m)), std::move(n));
}
LfTerm clam(LfVar x, LfTerm body) {
  return LfTerm::app(LfTerm::con("lam"), LfTerm::lam(x, std::move(body)));
}
LfCtx head_only(const CompVar& y) {
  LfCtx c;
  c.head = y;
  return c;
}
CompType boxed_tm(LfCtx c, bool param = false) {
  return CompType::box(CtxType{param, std::move(c), LfType::tm()});
}

// 1. The copy program: parse, typecheck, evaluate, read back.
void criterion1() {
  bool ok = false;
  double secs = run_timed(
      [&] {
        bool read_ok = false;
        std::string text = slurp("corpus/copy.ck", read_ok);
        if (!read_ok) return false;
        SourceFile file;
        try {
          file = parse(text);
        } catch (const SyntaxError&) {
          return false;
        }
        RunOptions opts;
        RunResult res = run_source(file, opts);
        if (res.exit_code != 0) {
          for (const auto& d : res.diagnostics) std::fprintf(stderr, "%s\n", diagnostic_text(d).c_str());
          return false;
        }
        // The checked type must be the expected invariant.
        Checker ck;
        CompCtx empty;
        const Def* copy_def = nullptr;
        for (const auto& item : file.items)
          if (const auto* d = std::get_if<Def>(&item); d && d->name == "copy") copy_def = d;
        if (!copy_def) return false;
        if (!conv_comp_type(empty, copy_def->type, make_copy_type())) return false;
        // Evaluate copy . [. |- lam \x. app x x] and read back via conversion.
        LfVar x = fresh_lf_var("x");
        CompTerm subject =
            CompTerm::box(CtxObj{ErasedCtx{}, clam(x, capp(LfTerm::var(x), LfTerm::var(x)))});
        CompVar s = fresh_comp_var("s");
        CompCtx gs = CompCtx{}.extended(s, boxed_tm(LfCtx{}));
        CompTerm call = CompTerm::app(
            CompTerm::app(copy_def->body, CompTerm::ctx_val(LfCtx{})), CompTerm::var(s));
        ck.check_comp(gs, call, boxed_tm(LfCtx{}));
        CompTerm closed = csubst(call, CompPayload{subject}, s);
        CompTerm w = ck.reducer().whnf_comp(closed);
        if (!is_whnf_comp(w)) return false;
        return conv_comp(empty, w, subject, boxed_tm(LfCtx{}));
      },
      ok);
  report(1, "copy parses, checks, and evaluates to its input", ok && secs < 1.0,
         "runtime " + std::to_string(secs) + "s (< 1s)");
}

// 2. One positive and one perturbed negative per equality rule.
void criterion2() {
  bool ok = true;
  std::string detail;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      detail += std::string(detail.empty() ? "" : "; ") + what;
    }
  };
  CompCtx empty;
  // Computation beta.
  {
    CompVar y = fresh_comp_var("y");
    CompTerm s = CompTerm::box(CtxObj{ErasedCtx{}, clam(fresh_lf_var("x"), LfTerm::con("app"))});
    CompTerm redex = CompTerm::app(CompTerm::fn(y, CompTerm::var(y)), s);
    expect(conv_comp(empty, redex, s, boxed_tm(LfCtx{})), "comp beta positive");
    CompTerm other =
        CompTerm::box(CtxObj{ErasedCtx{}, clam(fresh_lf_var("x"), LfTerm::con("lam"))});
    expect(!conv_comp(empty, redex, other, boxed_tm(LfCtx{})), "comp beta negative");
  }
  // LF beta.
  {
    LfVar x = fresh_lf_var("x");
    LfVar z = fresh_lf_var("z");
    LfTerm n = clam(z, LfTerm::var(z));
    LfTerm redex = LfTerm::app(LfTerm::lam(x, capp(LfTerm::var(x), LfTerm::var(x))), n);
    expect(conv_lf(empty, LfCtx{}, redex, capp(n, n), LfType::tm()), "LF beta positive");
    expect(!conv_lf(empty, LfCtx{}, redex, n, LfType::tm()), "LF beta negative");
  }
  // LF eta.
  {
    LfVar f = fresh_lf_var("f");
    LfType pi = LfType::pi(fresh_lf_var("x"), LfType::tm(), LfType::tm());
    LfCtx psi = LfCtx{}.snoc(f, pi);
    LfVar x = fresh_lf_var("x");
    LfTerm eta = LfTerm::lam(x, LfTerm::app(LfTerm::var(f), LfTerm::var(x)));
    expect(conv_lf(empty, psi, LfTerm::var(f), eta, pi), "LF eta positive");
    LfVar x2 = fresh_lf_var("x");
    LfTerm wrong = LfTerm::lam(x2, capp(LfTerm::var(x2), LfTerm::var(x2)));
    expect(!conv_lf(empty, psi, LfTerm::var(f), wrong, pi), "LF eta negative");
  }
  // Box eta.
  {
    CompVar psi = fresh_comp_var("psi");
    CompVar m = fresh_comp_var("m");
    CompCtx g = CompCtx{}
                    .extended(psi, CompType::tm_ctx())
                    .extended(m, boxed_tm(head_only(psi)));
    ErasedCtx pe;
    pe.head = psi;
    CompTerm expanded =
        CompTerm::box(CtxObj{pe, LfTerm::unbox(CompTerm::var(m), LfSubst::wk(pe))});
    expect(conv_comp(g, CompTerm::var(m), expanded, boxed_tm(head_only(psi))), "box eta positive");
    LfSubst id = LfSubst::wk(pe);
    CompTerm doubled = CompTerm::box(CtxObj{
        pe, capp(LfTerm::unbox(CompTerm::var(m), id), LfTerm::unbox(CompTerm::var(m), id))});
    expect(!conv_comp(g, CompTerm::var(m), doubled, boxed_tm(head_only(psi))), "box eta negative");
  }
  // Unbox-of-box contraction.
  {
    LfVar y = fresh_lf_var("y");
    LfCtx psi = LfCtx{}.snoc(y, LfType::tm());
    LfVar x = fresh_lf_var("x");
    ErasedCtx spine;
    spine.vars = {x};
    CompTerm box = CompTerm::box(CtxObj{spine, capp(LfTerm::var(x), LfTerm::var(x))});
    LfSubst s = LfSubst::snoc(LfSubst::empty(), LfTerm::var(y));
    expect(conv_lf(empty, psi, LfTerm::unbox(box, s), capp(LfTerm::var(y), LfTerm::var(y)),
                   LfType::tm()),
           "unbox contraction positive");
    expect(!conv_lf(empty, psi, LfTerm::unbox(box, s), LfTerm::var(y), LfType::tm()),
           "unbox contraction negative");
  }
  // Recursor unfoldings.
  {
    CompType motive = make_copy_type();
    Branches br = *make_copy_program().as<CFn>()->body.as<CFn>()->body.as<CRec>()->branches;
    LfVar x = fresh_lf_var("x");
    LfCtx psi = LfCtx{}.snoc(x, LfType::tm());
    CompTerm vars = CompTerm::box(CtxObj{erase(psi), LfTerm::var(x)});
    expect(conv_comp(empty, CompTerm::rec(motive, br, psi, vars), vars, boxed_tm(psi)),
           "rec variable positive");
    LfVar z = fresh_lf_var("z");
    LfTerm idtm = clam(z, LfTerm::var(z));
    CompTerm apps = CompTerm::box(CtxObj{ErasedCtx{}, capp(idtm, idtm)});
    expect(conv_comp(empty, CompTerm::rec(motive, br, LfCtx{}, apps), apps, boxed_tm(LfCtx{})),
           "rec app positive");
    CompTerm lams = CompTerm::box(CtxObj{ErasedCtx{}, idtm});
    expect(conv_comp(empty, CompTerm::rec(motive, br, LfCtx{}, lams), lams, boxed_tm(LfCtx{})),
           "rec lam positive");
    expect(!conv_comp(empty, CompTerm::rec(motive, br, LfCtx{}, apps), lams, boxed_tm(LfCtx{})),
           "rec negative");
    CompTerm y2 = CompTerm::box(CtxObj{erase(psi), clam(fresh_lf_var("w"), LfTerm::var(x))});
    expect(!conv_comp(empty, CompTerm::rec(motive, br, psi, vars), y2, boxed_tm(psi)),
           "rec variable negative");
  }
  report(2, "every equality rule has a positive and a perturbed negative test", ok, detail);
}

void criterion3() {
  SuiteResult a = suite_determinacy_lf(1001, 1000);
  SuiteResult b = suite_determinacy_subst(1002, 1000);
  SuiteResult c = suite_determinacy_comp(1003, 1000);
  int fails = a.failures + b.failures + c.failures;
  std::string detail = std::to_string(a.cases + b.cases + c.cases) + " cases, " +
                       std::to_string(fails) + " failures";
  for (const auto* s : {&a, &b, &c})
    for (const auto& n : s->notes) detail += "; " + n;
  report(3, "determinacy over 1000 generated terms per class", fails == 0, detail);
}

void criterion4() {
  bool ok = false;
  SuiteResult r;
  double secs = run_timed(
      [&] {
        r = suite_subject_reduction(1004, 1000);
        return r.failures == 0;
      },
      ok);
  std::string detail = std::to_string(r.cases) + " cases, " + std::to_string(r.failures) +
                       " failures, runtime " + std::to_string(secs) + "s (< 60s)";
  for (const auto& n : r.notes) detail += "; " + n;
  report(4, "subject reduction and normalization on 1000 computations", ok && secs < 60.0,
         detail);
}

void criterion5() {
  SuiteResult r = suite_type_uniqueness(1004, 1000);
  std::string detail =
      std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures";
  for (const auto& n : r.notes) detail += "; " + n;
  report(5, "double inference yields convertible types", r.failures == 0, detail);
}

void criterion6() {
  SuiteResult a = suite_lf_subst_lemma(1006, 500);
  SuiteResult b = suite_comp_subst_lemma(1007, 500);
  int fails = a.failures + b.failures;
  std::string detail = std::to_string(a.cases) + "+" + std::to_string(b.cases) + " cases, " +
                       std::to_string(fails) + " failures";
  for (const auto* s : {&a, &b})
    for (const auto& n : s->notes) detail += "; " + n;
  report(6, "substitution lemmas hold on 500 generated pairs per layer", fails == 0, detail);
}

void criterion7() {
  bool ok = true;
  std::string detail;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      detail += std::string(detail.empty() ? "" : "; ") + what;
    }
  };
  CompVar x = fresh_comp_var("x");
  CompCtx g = CompCtx{}.extended(x, CompType::univ(0));
  CompType xty = CompType::neut(CompTerm::var(x));
  auto rejected = [&](const CompTerm& t) {
    Checker ck;
    try {
      ck.check_comp(g, t, xty);
      return false;
    } catch (const KernelError& e) {
      return !err_is_internal(e.code);
    }
  };
  expect(rejected(CompTerm::var(x)), "x rejected at type x");
  CompVar y = fresh_comp_var("y");
  expect(rejected(CompTerm::fn(y, CompTerm::var(y))), "fn y => y rejected at type x");
  LfVar z = fresh_lf_var("z");
  expect(rejected(CompTerm::box(CtxObj{ErasedCtx{}, clam(z, LfTerm::var(z))})),
         "boxed lam rejected at type x");
  {
    // U0 at type x: its unique kind U1 is not convertible to x.
    Checker ck;
    Checker::Level l = ck.kind_of(g, CompType::univ(0));
    expect(l.rigid && l.least == 1 && !conv_comp_type(g, CompType::univ(1), xty),
           "U0 rejected at type x");
  }
  {
    Checker ck;
    bool uni_rejected = false;
    try {
      ck.check_type_at(g, CompType::univ(0), 2);
    } catch (const KernelError&) {
      uni_rejected = true;
    }
    expect(uni_rejected && !conv_comp_type(g, CompType::univ(0), CompType::univ(2)),
           "U0 at U2 rejected (no cumulativity)");
  }
  report(7, "consistency negatives in x:U0 and universe non-cumulativity", ok, detail);
}

void criterion8() {
  bool ok = true;
  std::string detail;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      detail += std::string(detail.empty() ? "" : "; ") + what;
    }
  };
  // lookup clauses.
  {
    LfVar x = fresh_lf_var("x");
    LfVar y = fresh_lf_var("y");
    ErasedCtx dom;
    dom.vars = {x, y};
    LfTerm mx = LfTerm::con("lam");
    LfTerm my = LfTerm::con("app");
    LfSubst s = LfSubst::snoc(LfSubst::snoc(LfSubst::empty(), mx), my);
    expect(alpha_eq(lf_lookup(y, s, dom), my), "lookup first clause");
    expect(alpha_eq(lf_lookup(x, s, dom), mx), "lookup second clause");
    expect(alpha_eq(lf_lookup(x, LfSubst::wk(dom), dom), LfTerm::var(x)), "lookup third clause");
    bool failed = false;
    try {
      (void)lf_lookup(fresh_lf_var("q"), s, dom);
    } catch (const KernelError& e) {
      failed = e.code == Err::LookupFailure;
    }
    expect(failed, "lookup fails otherwise");
  }
  // trunc clauses.
  {
    LfVar x = fresh_lf_var("x");
    LfVar y = fresh_lf_var("y");
    ErasedCtx dom;
    dom.vars = {x, y};
    ErasedCtx target;
    target.vars = {x};
    LfSubst tail = LfSubst::snoc(LfSubst::empty(), LfTerm::con("lam"));
    LfSubst s = LfSubst::snoc(tail, LfTerm::con("app"));
    expect(alpha_eq(trunc(dom, s, dom), s), "trunc identity clause");
    expect(alpha_eq(trunc(target, s, dom), tail), "trunc drop clause");
    expect(alpha_eq(trunc(target, LfSubst::wk(dom), dom), LfSubst::wk(target)),
           "trunc weakening clause");
    bool failed = false;
    try {
      (void)trunc(target, LfSubst::empty(), ErasedCtx{});
    } catch (const KernelError& e) {
      failed = e.code == Err::TruncFailure;
    }
    expect(failed, "trunc fails on the empty clause");
  }
  // wk expansion law.
  {
    LfVar x = fresh_lf_var("x");
    LfVar y = fresh_lf_var("y");
    ErasedCtx dom;
    dom.vars = {x, y};
    LfSubst wk = LfSubst::wk(dom);
    LfSubst expanded =
        LfSubst::snoc(LfSubst::snoc(LfSubst::empty(), LfTerm::var(x)), LfTerm::var(y));
    LfTerm m = capp(LfTerm::var(x), LfTerm::var(y));
    expect(alpha_eq(lf_subst_term(wk, dom, m), lf_subst_term(expanded, dom, m)),
           "wk expansion law");
    ErasedCtx xonly;
    xonly.vars = {x};
    LfSubst step = whnf_subst(wk);
    expect(alpha_eq(step, LfSubst::snoc(LfSubst::wk(xonly), LfTerm::var(y))),
           "wk single-step expansion");
  }
  report(8, "lookup and trunc definition tables hold bit-exact", ok, detail);
}

void criterion9() {
  SuiteResult r = suite_conv_laws(1009, 300);
  std::string detail =
      std::to_string(r.cases) + " cases, " + std::to_string(r.failures) + " failures";
  for (const auto& n : r.notes) detail += "; " + n;
  report(9, "conversion is reflexive, symmetric, and transitive on 300 triples",
         r.failures == 0, detail);
}

}  // namespace

int main() {
  void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9};
  int n = 0;
  for (auto* c : criteria) {
    ++n;
    try {
      c();
    } catch (const KernelError& e) {
      report(n, "raised an unexpected kernel error", false,
             std::string(err_name(e.code)) + ": " + e.what());
    }
  }
  if (g_failures != 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
