#include <doctest.h>

#include "ctt/check.hpp"
#include "ctt/comp_subst.hpp"
#include "ctt/conv.hpp"
#include "ctt/gen.hpp"
#include "ctt/lf_subst.hpp"
#include "ctt/print.hpp"

using namespace ctt;

namespace {

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
CompTerm closed_box(LfTerm m) { return CompTerm::box(CtxObj{ErasedCtx{}, std::move(m)}); }

Branches copy_branches() {
  return *make_copy_program().as<CFn>()->body.as<CFn>()->body.as<CRec>()->branches;
}

}  // namespace

TEST_CASE("reflexivity at any type") {
  CompCtx g;
  CompTerm t = closed_box(clam(fresh_lf_var("x"), LfTerm::con("lam")));
  CHECK(conv_comp(g, t, t, boxed_tm(LfCtx{})));
}

TEST_CASE("computation beta, with a perturbed negative") {
  CompCtx g;
  CompVar y = fresh_comp_var("y");
  CompTerm s = closed_box(clam(fresh_lf_var("x"), LfTerm::con("app")));
  CompTerm redex = CompTerm::app(CompTerm::fn(y, CompTerm::var(y)), s);
  CHECK(conv_comp(g, redex, s, boxed_tm(LfCtx{})));
  CompTerm other = closed_box(clam(fresh_lf_var("x"), LfTerm::con("lam")));
  CHECK_FALSE(conv_comp(g, redex, other, boxed_tm(LfCtx{})));
}

TEST_CASE("LF beta, with a perturbed negative") {
  CompCtx g;
  LfCtx psi;  // empty
  LfVar x = fresh_lf_var("x");
  LfVar z = fresh_lf_var("z");
  LfTerm n = clam(z, LfTerm::var(z));
  LfTerm redex = LfTerm::app(LfTerm::lam(x, capp(LfTerm::var(x), LfTerm::var(x))), n);
  LfTerm contractum = capp(n, n);
  CHECK(conv_lf(g, psi, redex, contractum, LfType::tm()));
  LfVar w = fresh_lf_var("w");
  LfTerm wrong = capp(n, clam(w, capp(LfTerm::var(w), LfTerm::var(w))));
  CHECK_FALSE(conv_lf(g, psi, redex, wrong, LfType::tm()));
}

TEST_CASE("LF eta at Pi types, with a perturbed negative") {
  CompCtx g;
  LfVar f = fresh_lf_var("f");
  LfVar pix = fresh_lf_var("x");
  LfType pi = LfType::pi(pix, LfType::tm(), LfType::tm());
  LfCtx psi = LfCtx{}.snoc(f, pi);
  LfVar x = fresh_lf_var("x");
  LfTerm eta = LfTerm::lam(x, LfTerm::app(LfTerm::var(f), LfTerm::var(x)));
  CHECK(conv_lf(g, psi, LfTerm::var(f), eta, pi));
  // Negative twin: the body applies f twice.
  LfVar x2 = fresh_lf_var("x");
  LfTerm wrong = LfTerm::lam(
      x2, LfTerm::app(LfTerm::var(f),
                      capp(LfTerm::var(x2), LfTerm::var(x2))));
  CHECK_FALSE(conv_lf(g, psi, LfTerm::var(f), wrong, pi));
}

TEST_CASE("box-eta, with a perturbed negative") {
  CompVar psi = fresh_comp_var("psi");
  CompVar m = fresh_comp_var("m");
  CompCtx g = CompCtx{}
                  .extended(psi, CompType::tm_ctx())
                  .extended(m, boxed_tm(head_only(psi)));
  ErasedCtx pe;
  pe.head = psi;
  CompTerm expanded =
      CompTerm::box(CtxObj{pe, LfTerm::unbox(CompTerm::var(m), LfSubst::wk(pe))});
  CHECK(conv_comp(g, CompTerm::var(m), expanded, boxed_tm(head_only(psi))));
  LfSubst id = LfSubst::wk(pe);
  CompTerm doubled = CompTerm::box(
      CtxObj{pe, capp(LfTerm::unbox(CompTerm::var(m), id), LfTerm::unbox(CompTerm::var(m), id))});
  CHECK_FALSE(conv_comp(g, CompTerm::var(m), doubled, boxed_tm(head_only(psi))));
}

TEST_CASE("unbox of a boxed object contracts, with a perturbed negative") {
  CompCtx g;
  LfVar y = fresh_lf_var("y");
  LfCtx psi = LfCtx{}.snoc(y, LfType::tm());
  LfVar x = fresh_lf_var("x");
  ErasedCtx spine;
  spine.vars = {x};
  CompTerm box = CompTerm::box(CtxObj{spine, capp(LfTerm::var(x), LfTerm::var(x))});
  LfSubst s = LfSubst::snoc(LfSubst::empty(), LfTerm::var(y));
  LfTerm contractum = capp(LfTerm::var(y), LfTerm::var(y));
  CHECK(conv_lf(g, psi, LfTerm::unbox(box, s), contractum, LfType::tm()));
  LfTerm wrong = capp(LfTerm::var(y), clam(fresh_lf_var("z"), LfTerm::var(y)));
  CHECK_FALSE(conv_lf(g, psi, LfTerm::unbox(box, s), wrong, LfType::tm()));
}

TEST_CASE("recursor unfolding: variable, app, and lam, each with a negative") {
  CompCtx g;
  CompType motive = make_copy_type();
  Branches br = copy_branches();
  SUBCASE("variable") {
    LfVar x = fresh_lf_var("x");
    LfCtx psi = LfCtx{}.snoc(x, LfType::tm());
    CompTerm scrut = CompTerm::box(CtxObj{erase(psi), LfTerm::var(x)});
    CompTerm r = CompTerm::rec(motive, br, psi, scrut);
    CHECK(conv_comp(g, r, scrut, boxed_tm(psi)));
    LfVar y = fresh_lf_var("y");
    LfCtx psi2 = psi.snoc(y, LfType::tm());
    CompTerm other = CompTerm::box(CtxObj{erase(psi2), LfTerm::var(y)});
    CompTerm r2 = CompTerm::rec(motive, br, psi2,
                                CompTerm::box(CtxObj{erase(psi2), LfTerm::var(x)}));
    CHECK_FALSE(conv_comp(g, r2, other, boxed_tm(psi2)));
  }
  SUBCASE("app") {
    LfVar z = fresh_lf_var("z");
    LfTerm idtm = clam(z, LfTerm::var(z));
    CompTerm scrut = closed_box(capp(idtm, idtm));
    CompTerm r = CompTerm::rec(motive, br, LfCtx{}, scrut);
    CHECK(conv_comp(g, r, scrut, boxed_tm(LfCtx{})));
    CompTerm wrong = closed_box(capp(idtm, capp(idtm, idtm)));
    CHECK_FALSE(conv_comp(g, r, wrong, boxed_tm(LfCtx{})));
  }
  SUBCASE("lam") {
    LfVar x = fresh_lf_var("x");
    CompTerm scrut = closed_box(clam(x, capp(LfTerm::var(x), LfTerm::var(x))));
    CompTerm r = CompTerm::rec(motive, br, LfCtx{}, scrut);
    CHECK(conv_comp(g, r, scrut, boxed_tm(LfCtx{})));
    LfVar x2 = fresh_lf_var("x");
    CompTerm wrong = closed_box(clam(x2, LfTerm::var(x2)));
    CHECK_FALSE(conv_comp(g, r, wrong, boxed_tm(LfCtx{})));
  }
}

TEST_CASE("neutral recursors compare by annotation, branches, context, and scrutinee") {
  CompVar s = fresh_comp_var("s");
  CompCtx g = CompCtx{}.extended(s, boxed_tm(LfCtx{}));
  CompTerm r1 = CompTerm::rec(make_copy_type(), copy_branches(), LfCtx{}, CompTerm::var(s));
  CompTerm r2 = refresh_binders(r1);
  CompType at = boxed_tm(LfCtx{});
  CHECK(conv_comp(g, r1, r2, at));
  // Perturb one branch body.
  Branches wrong = copy_branches();
  ErasedCtx ge;
  ge.head = wrong.var_br.psi;
  wrong.var_br.body = CompTerm::box(
      CtxObj{ge, capp(LfTerm::unbox(CompTerm::var(wrong.var_br.p), LfSubst::wk(ge)),
                      LfTerm::unbox(CompTerm::var(wrong.var_br.p), LfSubst::wk(ge)))});
  CompTerm r3 = CompTerm::rec(make_copy_type(), wrong, LfCtx{}, CompTerm::var(s));
  CHECK_FALSE(conv_comp(g, r1, r3, at));
}

TEST_CASE("type conversion") {
  CompCtx g;
  SUBCASE("universes compare by level") {
    CHECK(conv_comp_type(g, CompType::univ(0), CompType::univ(0)));
    CHECK_FALSE(conv_comp_type(g, CompType::univ(0), CompType::univ(1)));
  }
  SUBCASE("alpha-variant function types") {
    CompVar y = fresh_comp_var("y");
    CompVar z = fresh_comp_var("z");
    CompType t1 = CompType::pi(y, boxed_tm(LfCtx{}), CompType::univ(0));
    CompType t2 = CompType::pi(z, boxed_tm(LfCtx{}), CompType::univ(0));
    CHECK(conv_comp_type(g, t1, t2));
  }
  SUBCASE("tm_ctx equals itself and nothing else") {
    CHECK(conv_comp_type(g, CompType::tm_ctx(), CompType::tm_ctx()));
    CHECK_FALSE(conv_comp_type(g, CompType::tm_ctx(), CompType::univ(0)));
  }
  SUBCASE("constructor discrimination") {
    CompVar x = fresh_comp_var("x");
    CompCtx gx = CompCtx{}.extended(x, CompType::univ(0));
    CompType neut = CompType::neut(CompTerm::var(x));
    CompType uni = CompType::univ(0);
    CompType pi = CompType::pi(fresh_comp_var("y"), uni, CompType::univ(0));
    CompType box = boxed_tm(LfCtx{});
    CHECK_FALSE(conv_comp_type(gx, neut, uni));
    CHECK_FALSE(conv_comp_type(gx, neut, pi));
    CHECK_FALSE(conv_comp_type(gx, neut, box));
    CHECK_FALSE(conv_comp_type(gx, uni, pi));
    CHECK_FALSE(conv_comp_type(gx, uni, box));
    CHECK_FALSE(conv_comp_type(gx, pi, box));
    CHECK(conv_comp_type(gx, neut, neut));
  }
  SUBCASE("injectivity of function types, metamorphic") {
    CompVar y = fresh_comp_var("y");
    CompVar z = fresh_comp_var("z");
    CompVar psi = fresh_comp_var("psi");
    CompCtx gp = CompCtx{}.extended(psi, CompType::tm_ctx());
    CompType dom = boxed_tm(head_only(psi));
    CompType t1 = CompType::pi(y, dom, boxed_tm(head_only(psi)));
    CompType t2 = CompType::pi(z, dom, boxed_tm(head_only(psi)));
    REQUIRE(conv_comp_type(gp, t1, t2));
    const auto* p1 = t1.as<CTPi>();
    const auto* p2 = t2.as<CTPi>();
    CHECK(conv_comp_type(gp, p1->dom, p2->dom));
    // Codomains compare under a fresh variable of the domain.
    CompVar fresh = fresh_comp_var("w");
    CompCtx g2 = gp.extended(fresh, p1->dom);
    CompType c1 = csubst(p1->cod, CompPayload{CompTerm::var(fresh)}, p1->y);
    CompType c2 = csubst(p2->cod, CompPayload{CompTerm::var(fresh)}, p2->y);
    CHECK(conv_comp_type(g2, c1, c2));
  }
}

TEST_CASE("substitution conversion") {
  CompCtx g;
  SUBCASE("wk(.) equals the empty substitution at the empty domain") {
    LfVar y = fresh_lf_var("y");
    LfCtx range = LfCtx{}.snoc(y, LfType::tm());
    CHECK(conv_subst(g, range, LfSubst::wk(ErasedCtx{}), LfSubst::empty(), LfCtx{}));
  }
  SUBCASE("weakening expansion") {
    LfVar x = fresh_lf_var("x");
    LfCtx range = LfCtx{}.snoc(x, LfType::tm());
    ErasedCtx xe;
    xe.vars = {x};
    LfSubst s1 = LfSubst::wk(xe);
    LfSubst s2 = LfSubst::snoc(LfSubst::wk(ErasedCtx{}), LfTerm::var(x));
    CHECK(conv_subst(g, range, s1, s2, range));
  }
  SUBCASE("pointwise disagreement is detected") {
    LfVar x = fresh_lf_var("x");
    LfCtx dom = LfCtx{}.snoc(x, LfType::tm());
    LfVar a = fresh_lf_var("a");
    LfVar b = fresh_lf_var("b");
    LfCtx range = LfCtx{}.snoc(a, LfType::tm()).snoc(b, LfType::tm());
    LfSubst s1 = LfSubst::snoc(LfSubst::empty(), LfTerm::var(a));
    LfSubst s2 = LfSubst::snoc(LfSubst::empty(), LfTerm::var(b));
    CHECK_FALSE(conv_subst(g, range, s1, s2, dom));
    CHECK(conv_subst(g, range, s1, s1, dom));
  }
}

TEST_CASE("unbox closures with convertible substitutions are convertible") {
  // n : [x0:tm |- tm]; sigma = (., y) and sigma' = (., (\w. w) y) agree.
  CompVar n = fresh_comp_var("n");
  LfVar x0 = fresh_lf_var("x0");
  LfCtx nctx = LfCtx{}.snoc(x0, LfType::tm());
  CompCtx g = CompCtx{}.extended(n, boxed_tm(nctx));
  LfVar y = fresh_lf_var("y");
  LfCtx psi = LfCtx{}.snoc(y, LfType::tm());
  LfSubst s1 = LfSubst::snoc(LfSubst::empty(), LfTerm::var(y));
  LfVar w = fresh_lf_var("w");
  LfSubst s2 = LfSubst::snoc(
      LfSubst::empty(), LfTerm::app(LfTerm::lam(w, LfTerm::var(w)), LfTerm::var(y)));
  CHECK(conv_lf(g, psi, LfTerm::unbox(CompTerm::var(n), s1), LfTerm::unbox(CompTerm::var(n), s2),
                LfType::tm()));
}

TEST_CASE("context conversion") {
  CompCtx g;
  CompVar psi = fresh_comp_var("psi");
  CompCtx gp = CompCtx{}.extended(psi, CompType::tm_ctx());
  SUBCASE("context variables") { CHECK(conv_ctx(gp, head_only(psi), head_only(psi))); }
  SUBCASE("alpha on declarations") {
    LfCtx c1 = LfCtx{}.snoc(fresh_lf_var("x"), LfType::tm());
    LfCtx c2 = LfCtx{}.snoc(fresh_lf_var("y"), LfType::tm());
    CHECK(conv_ctx(g, c1, c2));
  }
  SUBCASE("length mismatch") {
    LfCtx c1;
    LfCtx c2 = LfCtx{}.snoc(fresh_lf_var("x"), LfType::tm());
    CHECK_FALSE(conv_ctx(g, c1, c2));
  }
}

TEST_CASE("LF type and kind conversion") {
  CompCtx g;
  LfCtx psi;
  CHECK(conv_lf_type(g, psi, LfType::tm(), LfType::tm()));
  LfType p1 = LfType::pi(fresh_lf_var("x"), LfType::tm(), LfType::tm());
  LfType p2 = LfType::pi(fresh_lf_var("y"), LfType::tm(), LfType::tm());
  CHECK(conv_lf_type(g, psi, p1, p2));
  CHECK_FALSE(conv_lf_type(g, psi, LfType::tm(), p1));
}

TEST_CASE("box-eta also applies at parameter types") {
  CompVar psi = fresh_comp_var("psi");
  CompVar p = fresh_comp_var("p");
  CompCtx g = CompCtx{}
                  .extended(psi, CompType::tm_ctx())
                  .extended(p, boxed_tm(head_only(psi), /*param=*/true));
  ErasedCtx pe;
  pe.head = psi;
  CompTerm expanded =
      CompTerm::box(CtxObj{pe, LfTerm::unbox(CompTerm::var(p), LfSubst::wk(pe))});
  CHECK(conv_comp(g, CompTerm::var(p), expanded, boxed_tm(head_only(psi), /*param=*/true)));
}

TEST_CASE("symmetry and transitivity on derived chains") {
  GenEnv env = make_gen_env("");
  Gen gen(11, env);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    CompType tau = gen.gen_type(i % 3);
    CompTerm t1 = gen.gen_comp(env.gamma, tau, i % 3);
    CompVar y = fresh_comp_var("y");
    CompTerm t2 = CompTerm::app(CompTerm::fn(y, CompTerm::var(y)), t1);
    CompVar z = fresh_comp_var("z");
    CompTerm t3 = CompTerm::app(CompTerm::fn(z, CompTerm::var(z)), t2);
    CHECK(conv_comp(env.gamma, t1, t1, tau));
    CHECK(conv_comp(env.gamma, t1, t2, tau));
    CHECK(conv_comp(env.gamma, t2, t1, tau));
    CHECK(conv_comp(env.gamma, t2, t3, tau));
    CHECK(conv_comp(env.gamma, t1, t3, tau));
    ++checked;
  }
  CHECK(checked == 40);
}
