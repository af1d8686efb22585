#include <doctest.h>

#include "ctt/comp_subst.hpp"
#include "ctt/gen.hpp"
#include "ctt/lf_subst.hpp"
#include "ctt/print.hpp"
#include "ctt/whnf.hpp"

using namespace ctt;

namespace {

LfTerm capp(LfTerm m, LfTerm n) {
  return LfTerm::app(LfTerm::app(LfTerm::con("app"), std::move(m)), std::move(n));
}
LfTerm clam(LfVar x, LfTerm body) {
  return LfTerm::app(LfTerm::con("lam"), LfTerm::lam(x, std::move(body)));
}
CompType boxed_tm(LfCtx c) { return CompType::box(CtxType{false, std::move(c), LfType::tm()}); }

}  // namespace

TEST_CASE("LF beta step") {
  // (\x. app x x) y whnf-reduces to app y y
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  ErasedCtx amb;
  amb.vars = {y};
  LfTerm m = LfTerm::app(LfTerm::lam(x, capp(LfTerm::var(x), LfTerm::var(x))), LfTerm::var(y));
  CHECK(alpha_eq(whnf_lf(m, amb), capp(LfTerm::var(y), LfTerm::var(y))));
}

TEST_CASE("unboxing a boxed object applies the substitution") {
  // ([x, y |- app x y])[., M, N] whnf-reduces to app M N
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  LfVar a = fresh_lf_var("a");
  LfVar b = fresh_lf_var("b");
  ErasedCtx spine;
  spine.vars = {x, y};
  CompTerm box = CompTerm::box(CtxObj{spine, capp(LfTerm::var(x), LfTerm::var(y))});
  LfSubst s = LfSubst::snoc(LfSubst::snoc(LfSubst::empty(), LfTerm::var(a)), LfTerm::var(b));
  ErasedCtx amb;
  amb.vars = {a, b};
  LfTerm got = whnf_lf(LfTerm::unbox(box, s), amb);
  CHECK(alpha_eq(got, capp(LfTerm::var(a), LfTerm::var(b))));
}

TEST_CASE("constant-headed spines are weak head neutral") {
  LfVar x = fresh_lf_var("x");
  LfTerm m = clam(x, LfTerm::var(x));
  CHECK(is_wne_lf(m));
  CHECK(alpha_eq(whnf_lf(m, ErasedCtx{}), m));
  LfTerm n = capp(m, m);
  CHECK(is_wne_lf(n));
  CHECK(alpha_eq(whnf_lf(n, ErasedCtx{}), n));
}

TEST_CASE("substitution weak head steps") {
  SUBCASE("wk of the empty context steps to the empty substitution") {
    CHECK(alpha_eq(whnf_subst(LfSubst::wk(ErasedCtx{})), LfSubst::empty()));
  }
  SUBCASE("wk unfolds one entry") {
    LfVar x = fresh_lf_var("x");
    LfVar y = fresh_lf_var("y");
    ErasedCtx xy;
    xy.vars = {x, y};
    ErasedCtx xonly;
    xonly.vars = {x};
    LfSubst expect = LfSubst::snoc(LfSubst::wk(xonly), LfTerm::var(y));
    CHECK(alpha_eq(whnf_subst(LfSubst::wk(xy)), expect));
  }
  SUBCASE("snoc and head-only weakening are whnf") {
    CompVar psi = fresh_comp_var("psi");
    ErasedCtx pe;
    pe.head = psi;
    CHECK(is_whnf_subst(LfSubst::wk(pe)));
    LfSubst sn = LfSubst::snoc(LfSubst::empty(), LfTerm::con("lam"));
    CHECK(is_whnf_subst(sn));
    CHECK(alpha_eq(whnf_subst(sn), sn));
  }
}

TEST_CASE("computation beta continues reducing") {
  CompVar y = fresh_comp_var("y");
  CompTerm box = CompTerm::box(CtxObj{ErasedCtx{}, clam(fresh_lf_var("x"), LfTerm::con("lam"))});
  CompVar z = fresh_comp_var("z");
  CompTerm inner = CompTerm::app(CompTerm::fn(z, CompTerm::var(z)), box);
  CompTerm t = CompTerm::app(CompTerm::fn(y, CompTerm::var(y)), inner);
  CHECK(alpha_eq(whnf_comp(t), box));
}

TEST_CASE("recursor dispatch on a variable") {
  // rec^I B (x:tm) [x |- x]  steps into the variable branch, producing
  // [x |- p[id]]{p := [x |- x]}.
  LfVar x = fresh_lf_var("x");
  LfCtx psi = LfCtx{}.snoc(x, LfType::tm());
  ErasedCtx spine = erase(psi);
  CompTerm scrut = CompTerm::box(CtxObj{spine, LfTerm::var(x)});
  CompTerm t = CompTerm::rec(make_copy_type(), /*branches from the copy program*/
                             *make_copy_program()
                                  .as<CFn>()
                                  ->body.as<CFn>()
                                  ->body.as<CRec>()
                                  ->branches,
                             psi, scrut);
  CompTerm got = whnf_comp(t);
  const auto* b = got.as<CBox>();
  REQUIRE(b != nullptr);
  // Expected: [x |- ([x |- x])[wk(x)]]
  const auto* u = b->obj.term.as<MUnbox>();
  REQUIRE(u != nullptr);
  CHECK(alpha_eq(u->comp, scrut));
}

TEST_CASE("copy evaluates to a box convertible to its input") {
  CompTerm copy = make_copy_program();
  LfVar x = fresh_lf_var("x");
  LfVar z = fresh_lf_var("z");
  CompTerm subject = CompTerm::box(
      CtxObj{ErasedCtx{}, clam(x, capp(LfTerm::var(x), clam(z, LfTerm::var(z))))});
  CompTerm call = CompTerm::app(CompTerm::app(copy, CompTerm::ctx_val(LfCtx{})), subject);
  CompTerm w = whnf_comp(call);
  CHECK(w.as<CBox>() != nullptr);
  CHECK(is_whnf_comp(w));
}

TEST_CASE("recursor is neutral on a neutral scrutinee") {
  CompVar s = fresh_comp_var("s");
  CompTerm t = CompTerm::rec(make_copy_type(),
                             *make_copy_program()
                                  .as<CFn>()
                                  ->body.as<CFn>()
                                  ->body.as<CRec>()
                                  ->branches,
                             LfCtx{}, CompTerm::var(s));
  CHECK(is_wne_comp(t));
  CHECK(alpha_eq(whnf_comp(t), t));
}

TEST_CASE("recursor blocks on an unbox-headed scrutinee") {
  // rec^I B . [ |- m[.]] with m neutral stays a neutral recursor.
  CompVar m = fresh_comp_var("m");
  CompTerm scrut =
      CompTerm::box(CtxObj{ErasedCtx{}, LfTerm::unbox(CompTerm::var(m), LfSubst::empty())});
  CompTerm t = CompTerm::rec(make_copy_type(),
                             *make_copy_program()
                                  .as<CFn>()
                                  ->body.as<CFn>()
                                  ->body.as<CRec>()
                                  ->branches,
                             LfCtx{}, scrut);
  CHECK(is_wne_comp(t));
  CompTerm w = whnf_comp(t);
  CHECK(is_wne_comp(w));
  const auto* r = w.as<CRec>();
  REQUIRE(r != nullptr);
  const auto* b = r->scrut.as<CBox>();
  REQUIRE(b != nullptr);
  CHECK(b->obj.term.as<MUnbox>() != nullptr);
}

TEST_CASE("whnf is idempotent and matches the classification") {
  GenEnv env = make_gen_env("");
  Gen gen(7, env);
  for (int i = 0; i < 200; ++i) {
    CompType tau = gen.gen_type(i % 4);
    CompTerm t = gen.gen_comp(env.gamma, tau, i % 4);
    CompTerm w = whnf_comp(t);
    CHECK(is_whnf_comp(w));
    CHECK(alpha_eq(whnf_comp(w), w));
  }
  for (int i = 0; i < 200; ++i) {
    LfCtx psi = gen.gen_ctx(2);
    LfTerm m = gen.gen_lf(psi, i % 4);
    LfTerm w = whnf_lf(m, erase(psi));
    CHECK(is_whnf_lf(w));
    CHECK(alpha_eq(whnf_lf(w, erase(psi)), w));
  }
}

TEST_CASE("weak head neutral inputs are returned unchanged") {
  CompVar s = fresh_comp_var("s");
  CompTerm napp = CompTerm::app(CompTerm::var(s), CompTerm::var(s));
  CHECK(is_wne_comp(napp));
  CHECK(alpha_eq(whnf_comp(napp), napp));
}

TEST_CASE("fuel bounds reduction of ill-typed loops") {
  // LF Omega: (\x. x x)(\x. x x) is ill-typed but syntactically reducible.
  LfVar x1 = fresh_lf_var("x");
  LfVar x2 = fresh_lf_var("x");
  LfTerm w1 = LfTerm::lam(x1, LfTerm::app(LfTerm::var(x1), LfTerm::var(x1)));
  LfTerm w2 = LfTerm::lam(x2, LfTerm::app(LfTerm::var(x2), LfTerm::var(x2)));
  LfTerm omega = LfTerm::app(w1, w2);
  Reducer red(1000);
  CHECK_THROWS_AS((void)red.whnf_lf(omega, ErasedCtx{}), KernelError);
  try {
    Reducer red2(1000);
    (void)red2.whnf_lf(omega, ErasedCtx{});
  } catch (const KernelError& e) {
    CHECK(e.code == Err::FuelExhausted);
    CHECK(err_is_internal(e.code));
  }
}

TEST_CASE("trace hook observes head steps") {
  std::vector<std::string> steps;
  Reducer red(kDefaultFuel, [&](const std::string& s) { steps.push_back(s); });
  CompVar y = fresh_comp_var("y");
  CompTerm box = CompTerm::box(CtxObj{ErasedCtx{}, LfTerm::con("lam")});
  (void)red.whnf_comp(CompTerm::app(CompTerm::fn(y, CompTerm::var(y)), box));
  REQUIRE(steps.size() == 1);
  CHECK(steps[0] == "comp-beta");
}
