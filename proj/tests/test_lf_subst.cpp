#include <doctest.h>

#include "ctt/lf_subst.hpp"
#include "ctt/print.hpp"
#include "ctt/syntax.hpp"

using namespace ctt;

namespace {

LfTerm capp(LfTerm m, LfTerm n) {
  return LfTerm::app(LfTerm::app(LfTerm::con("app"), std::move(m)), std::move(n));
}
LfTerm clam(LfVar x, LfTerm body) {
  return LfTerm::app(LfTerm::con("lam"), LfTerm::lam(x, std::move(body)));
}

// Independent oracle: naive capture-avoiding single substitution, written
// directly by structural recursion (binders are globally unique atoms, so
// replacing free occurrences of x cannot capture).
LfTerm naive_single(const LfTerm& n, const LfVar& x, const LfTerm& m);
LfSubst naive_single_subst(const LfTerm& n, const LfVar& x, const LfSubst& s) {
  if (s.as<SEmpty>()) return s;
  if (const auto* wk = s.as<SWk>()) {
    // wk annotations name range variables; x is never among them after the
    // substitution relocates the term, so expand structurally.
    ErasedCtx kept;
    kept.head = wk->ctx.head;
    LfSubst out = LfSubst::wk(kept);
    bool hit = false;
    for (const auto& v : wk->ctx.vars) {
      if (v == x) hit = true;
      if (hit)
        out = LfSubst::snoc(std::move(out), v == x ? n : LfTerm::var(v));
      else {
        ErasedCtx grow = out.as<SWk>() ? out.as<SWk>()->ctx : ErasedCtx{};
        grow.vars.push_back(v);
        out = LfSubst::wk(std::move(grow));
      }
    }
    return out;
  }
  const auto& sn = *s.as<SSnoc>();
  return LfSubst::snoc(naive_single_subst(n, x, sn.tail), naive_single(n, x, sn.term));
}

LfTerm naive_single(const LfTerm& n, const LfVar& x, const LfTerm& m) {
  if (const auto* v = m.as<MVar>()) return v->x == x ? n : m;
  if (m.as<MConst>()) return m;
  if (const auto* l = m.as<MLam>()) return LfTerm::lam(l->x, naive_single(n, x, l->body));
  if (const auto* a = m.as<MApp>())
    return LfTerm::app(naive_single(n, x, a->fn), naive_single(n, x, a->arg));
  const auto& u = *m.as<MUnbox>();
  return LfTerm::unbox(u.comp, naive_single_subst(n, x, u.subst));
}

}  // namespace

TEST_CASE("lookup first clause: lookup x [sigma, M / Psi, x] = M") {
  LfVar x = fresh_lf_var("x");
  ErasedCtx dom;
  dom.vars = {x};
  LfTerm m = clam(fresh_lf_var("z"), LfTerm::var(x));  // arbitrary payload
  LfSubst s = LfSubst::snoc(LfSubst::empty(), m);
  CHECK(alpha_eq(lf_lookup(x, s, dom), m));
}

TEST_CASE("lookup second clause: skip unrelated entries") {
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  ErasedCtx dom;
  dom.vars = {x, y};
  LfTerm mx = LfTerm::con("lam");
  LfTerm my = LfTerm::con("app");
  LfSubst s = LfSubst::snoc(LfSubst::snoc(LfSubst::empty(), mx), my);
  CHECK(alpha_eq(lf_lookup(x, s, dom), mx));
  CHECK(alpha_eq(lf_lookup(y, s, dom), my));
}

TEST_CASE("lookup third clause: weakening maps a variable to itself") {
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  ErasedCtx dom;
  dom.vars = {x, y};
  LfSubst s = LfSubst::wk(dom);
  CHECK(alpha_eq(lf_lookup(x, s, dom), LfTerm::var(x)));
  CHECK(alpha_eq(lf_lookup(y, s, dom), LfTerm::var(y)));
}

TEST_CASE("lookup fails otherwise") {
  LfVar x = fresh_lf_var("x");
  LfVar z = fresh_lf_var("z");
  ErasedCtx dom;
  dom.vars = {x};
  LfSubst s = LfSubst::snoc(LfSubst::empty(), LfTerm::con("lam"));
  CHECK_THROWS_AS((void)lf_lookup(z, s, dom), KernelError);
  CHECK_THROWS_AS((void)lf_lookup(z, LfSubst::empty(), ErasedCtx{}), KernelError);
}

TEST_CASE("trunc first clause: full domain is the identity") {
  LfVar x = fresh_lf_var("x");
  ErasedCtx dom;
  dom.vars = {x};
  LfSubst s = LfSubst::snoc(LfSubst::empty(), LfTerm::con("lam"));
  CHECK(alpha_eq(trunc(dom, s, dom), s));
}

TEST_CASE("trunc second clause drops instantiations") {
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  ErasedCtx dom;
  dom.vars = {x, y};
  ErasedCtx target;
  target.vars = {x};
  LfSubst tail = LfSubst::snoc(LfSubst::empty(), LfTerm::con("lam"));
  LfSubst s = LfSubst::snoc(tail, LfTerm::con("app"));
  CHECK(alpha_eq(trunc(target, s, dom), tail));
}

TEST_CASE("trunc third clause shortens a weakening") {
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  ErasedCtx dom;
  dom.vars = {x, y};
  ErasedCtx target;
  target.vars = {x};
  LfSubst s = LfSubst::wk(dom);
  LfSubst expect = LfSubst::wk(target);
  CHECK(alpha_eq(trunc(target, s, dom), expect));
}

TEST_CASE("trunc fails on an empty substitution with a non-empty target") {
  LfVar x = fresh_lf_var("x");
  ErasedCtx target;
  target.vars = {x};
  CHECK_THROWS_AS((void)trunc(target, LfSubst::empty(), ErasedCtx{}), KernelError);
}

TEST_CASE("trunc result answers lookups like the original") {
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  LfVar z = fresh_lf_var("z");
  ErasedCtx dom;
  dom.vars = {x, y, z};
  LfSubst s = LfSubst::snoc(
      LfSubst::snoc(LfSubst::snoc(LfSubst::empty(), LfTerm::con("lam")), LfTerm::con("app")),
      clam(fresh_lf_var("w"), LfTerm::con("lam")));
  ErasedCtx target;
  target.vars = {x, y};
  LfSubst t = trunc(target, s, dom);
  CHECK(alpha_eq(lf_lookup(x, t, target), lf_lookup(x, s, dom)));
  CHECK(alpha_eq(lf_lookup(y, t, target), lf_lookup(y, s, dom)));
}

TEST_CASE("single-point substitution maps the variable") {
  // [., y / ., x](x) = y
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  ErasedCtx dom;
  dom.vars = {x};
  LfSubst s = LfSubst::snoc(LfSubst::empty(), LfTerm::var(y));
  CHECK(alpha_eq(lf_subst_term(s, dom, LfTerm::var(x)), LfTerm::var(y)));
}

TEST_CASE("applying a full weakening resurrects the domain and is the identity") {
  // [wk_{x,y} / x,y](app x y) = app x y
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  ErasedCtx dom;
  dom.vars = {x, y};
  LfTerm m = capp(LfTerm::var(x), LfTerm::var(y));
  CHECK(alpha_eq(lf_subst_term(LfSubst::wk(dom), dom, m), m));
}

TEST_CASE("substitution duplicates across an application") {
  // [., N / ., x](app x x) = app N N with N = lam \z. z
  LfVar x = fresh_lf_var("x");
  LfVar z = fresh_lf_var("z");
  LfTerm n = clam(z, LfTerm::var(z));
  ErasedCtx dom;
  dom.vars = {x};
  LfTerm m = capp(LfTerm::var(x), LfTerm::var(x));
  LfTerm expect = capp(n, n);
  CHECK(alpha_eq(lf_subst_term(LfSubst::snoc(LfSubst::empty(), n), dom, m), expect));
}

TEST_CASE("substitution leaves the unboxed computation untouched") {
  // [sigma/Psi](t[sigma']) rewrites only the inner substitution
  LfVar x = fresh_lf_var("x");
  ErasedCtx dom;
  dom.vars = {x};
  CompVar t = fresh_comp_var("t");
  LfSubst inner = LfSubst::snoc(LfSubst::empty(), LfTerm::var(x));
  LfTerm m = LfTerm::unbox(CompTerm::var(t), inner);
  LfTerm n = LfTerm::con("lam");
  LfTerm out = lf_subst_term(LfSubst::snoc(LfSubst::empty(), n), dom, m);
  const auto* u = out.as<MUnbox>();
  REQUIRE(u != nullptr);
  CHECK(alpha_eq(u->comp, CompTerm::var(t)));
  CHECK(alpha_eq(u->subst, LfSubst::snoc(LfSubst::empty(), n)));
}

TEST_CASE("homomorphic substitution into substitutions") {
  LfVar x = fresh_lf_var("x");
  ErasedCtx dom;
  dom.vars = {x};
  LfSubst s = LfSubst::snoc(LfSubst::empty(), LfTerm::con("lam"));
  SUBCASE("empty") { CHECK(alpha_eq(lf_subst_subst(s, dom, LfSubst::empty()), LfSubst::empty())); }
  SUBCASE("snoc maps both parts") {
    // [., M / ., x](., x) = (., M)
    LfTerm m = LfTerm::con("lam");
    LfSubst inner = LfSubst::snoc(LfSubst::empty(), LfTerm::var(x));
    LfSubst got = lf_subst_subst(LfSubst::snoc(LfSubst::empty(), m), dom, inner);
    CHECK(alpha_eq(got, LfSubst::snoc(LfSubst::empty(), m)));
  }
}

TEST_CASE("closed types are untouched") {
  LfVar x = fresh_lf_var("x");
  LfVar b = fresh_lf_var("b");
  ErasedCtx dom;
  dom.vars = {x};
  LfType pi = LfType::pi(b, LfType::tm(), LfType::tm());
  CHECK(alpha_eq(lf_subst_type(LfSubst::snoc(LfSubst::empty(), LfTerm::con("lam")), dom, pi), pi));
}

TEST_CASE("single substitution examples") {
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  ErasedCtx amb;
  amb.vars = {y};
  SUBCASE("[N/x]x = N") {
    LfTerm n = LfTerm::var(y);
    CHECK(alpha_eq(single_subst(n, x, LfTerm::var(x), amb), n));
  }
  SUBCASE("[N/x]y = y") {
    LfTerm n = LfTerm::con("lam");
    CHECK(alpha_eq(single_subst(n, x, LfTerm::var(y), amb), LfTerm::var(y)));
  }
  SUBCASE("[y/x](lam \\z. app x z) = lam \\z. app y z") {
    LfVar z = fresh_lf_var("z");
    LfTerm m = clam(z, capp(LfTerm::var(x), LfTerm::var(z)));
    LfVar z2 = fresh_lf_var("z");
    LfTerm expect = clam(z2, capp(LfTerm::var(y), LfTerm::var(z2)));
    CHECK(alpha_eq(single_subst(LfTerm::var(y), x, m, amb), expect));
  }
}

TEST_CASE("identity substitution construction") {
  CHECK(alpha_eq(id_subst(LfCtx{}), LfSubst::wk(ErasedCtx{})));
  CompVar psi = fresh_comp_var("psi");
  LfCtx c;
  c.head = psi;
  ErasedCtx e;
  e.head = psi;
  CHECK(alpha_eq(id_subst(c), LfSubst::wk(e)));
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  LfCtx c2 = LfCtx{}.snoc(x, LfType::tm()).snoc(y, LfType::tm());
  ErasedCtx e2;
  e2.vars = {x, y};
  CHECK(alpha_eq(id_subst(c2), LfSubst::wk(e2)));
}

TEST_CASE("single substitution agrees with the naive oracle on random terms") {
  // Deterministic enumeration of small terms over x, y.
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  ErasedCtx amb;
  amb.vars = {y};
  std::vector<LfTerm> terms;
  terms.push_back(LfTerm::var(x));
  terms.push_back(LfTerm::var(y));
  terms.push_back(capp(LfTerm::var(x), LfTerm::var(y)));
  {
    LfVar z = fresh_lf_var("z");
    terms.push_back(clam(z, capp(LfTerm::var(x), LfTerm::var(z))));
  }
  {
    LfVar z = fresh_lf_var("z");
    terms.push_back(LfTerm::app(LfTerm::lam(z, LfTerm::var(z)), LfTerm::var(x)));
  }
  {
    CompVar t = fresh_comp_var("t");
    terms.push_back(LfTerm::unbox(CompTerm::var(t),
                                  LfSubst::snoc(LfSubst::empty(), LfTerm::var(x))));
  }
  std::vector<LfTerm> payloads;
  payloads.push_back(LfTerm::var(y));
  payloads.push_back(clam(fresh_lf_var("w"), LfTerm::var(y)));
  for (const auto& m : terms)
    for (const auto& n : payloads) {
      CAPTURE(show(m));
      CAPTURE(show(n));
      CHECK(alpha_eq(single_subst(n, x, m, amb), naive_single(n, x, m)));
    }
}

TEST_CASE("compositionality on closed configurations") {
  // [sigma/Psi]([sigma'/Phi]M) = [[sigma/Psi]sigma' / Phi]M
  LfVar x = fresh_lf_var("x");
  LfVar w = fresh_lf_var("w");
  ErasedCtx phi;
  phi.vars = {w};
  ErasedCtx psi;
  psi.vars = {x};
  std::vector<LfTerm> inner_terms;
  inner_terms.push_back(LfTerm::var(w));
  inner_terms.push_back(capp(LfTerm::var(w), LfTerm::var(w)));
  {
    LfVar z = fresh_lf_var("z");
    inner_terms.push_back(clam(z, capp(LfTerm::var(w), LfTerm::var(z))));
  }
  LfSubst s_inner = LfSubst::snoc(LfSubst::empty(), capp(LfTerm::var(x), LfTerm::var(x)));
  LfSubst s_outer = LfSubst::snoc(LfSubst::empty(), clam(fresh_lf_var("z"), LfTerm::con("lam")));
  for (const auto& m : inner_terms) {
    CAPTURE(show(m));
    LfTerm lhs = lf_subst_term(s_outer, psi, lf_subst_term(s_inner, phi, m));
    LfTerm rhs = lf_subst_term(lf_subst_subst(s_outer, psi, s_inner), phi, m);
    CHECK(alpha_eq(lhs, rhs));
  }
}

TEST_CASE("weakening expansion law") {
  // Applying wk_{x,y} agrees with applying the expanded list (., x, y).
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  ErasedCtx dom;
  dom.vars = {x, y};
  LfSubst wk = LfSubst::wk(dom);
  LfSubst expanded =
      LfSubst::snoc(LfSubst::snoc(LfSubst::empty(), LfTerm::var(x)), LfTerm::var(y));
  std::vector<LfTerm> terms;
  terms.push_back(LfTerm::var(x));
  terms.push_back(capp(LfTerm::var(y), LfTerm::var(x)));
  {
    LfVar z = fresh_lf_var("z");
    terms.push_back(clam(z, capp(LfTerm::var(x), LfTerm::var(z))));
  }
  for (const auto& m : terms) {
    CAPTURE(show(m));
    CHECK(alpha_eq(lf_subst_term(wk, dom, m), lf_subst_term(expanded, dom, m)));
  }
}

TEST_CASE("applying the identity substitution is the identity") {
  LfVar x = fresh_lf_var("x");
  LfVar y = fresh_lf_var("y");
  LfCtx psi = LfCtx{}.snoc(x, LfType::tm()).snoc(y, LfType::tm());
  ErasedCtx e = erase(psi);
  std::vector<LfTerm> terms;
  terms.push_back(capp(LfTerm::var(x), LfTerm::var(y)));
  {
    LfVar z = fresh_lf_var("z");
    terms.push_back(clam(z, capp(LfTerm::var(z), LfTerm::var(y))));
  }
  for (const auto& m : terms) CHECK(alpha_eq(lf_subst_term(id_subst(psi), e, m), m));
}
