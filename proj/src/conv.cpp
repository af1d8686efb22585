#include "ctt/conv.hpp"

#include <vector>

#include "ctt/comp_subst.hpp"
#include "ctt/lf_subst.hpp"

namespace ctt {

namespace {

LfCtx head_only_ctx(const CompVar& y) {
  LfCtx c;
  c.head = y;
  return c;
}

// A term standing for an LF context (the overloaded application form).
std::optional<LfCtx> as_ctx_term(const CompTerm& t) {
  if (const auto* c = t.as<CCtxVal>()) return c->ctx;
  if (const auto* v = t.as<CVarT>()) return head_only_ctx(v->y);
  return std::nullopt;
}

CompPayload arg_payload(const CompTerm& arg) {
  if (const auto* c = arg.as<CCtxVal>()) return CompPayload{c->ctx};
  return CompPayload{arg};
}

}  // namespace

CompType typeof_neutral(const CompCtx& g, const CompTerm& t, Reducer& red) {
  if (const auto* v = t.as<CVarT>()) {
    if (const CompType* ty = g.lookup(v->y)) return *ty;
    fail(Err::UnboundCompVar, "typeof(G |- t) = tau",
         "unbound computation variable " + v->y.hint);
  }
  if (const auto* a = t.as<CApp>()) {
    CompType fty = red.whnf_type(typeof_neutral(g, a->fn, red));
    const auto* pi = fty.as<CTPi>();
    if (!pi)
      fail(Err::NotAFunction, "typeof(G |- t s) = {s/y}tau2",
           "neutral head does not have a function type");
    return csubst(pi->cod, arg_payload(a->arg), pi->y);
  }
  if (const auto* r = t.as<CRec>()) {
    auto mp = motive_parts(r->motive);
    if (!mp)
      fail(Err::BadInvariantShape, "typeof(G |- rec^I B Psi t)",
           "recursor invariant is not of shape (psi:tm_ctx) -> (y:[psi |- tm]) -> tau");
    return rec_result_type(*mp, r->ctx, r->scrut);
  }
  fail(Err::NotNeutral, "typeof(G |- t) = tau", "term is not weak-head neutral");
}

bool Conv::comp(const CompCtx& g, const CompTerm& t1, const CompTerm& t2, const CompType& tau) {
  if (alpha_eq(t1, t2)) return true;
  CompType tw = red_.whnf_type(tau);
  if (const auto* pi = tw.as<CTPi>()) {
    // Extensionality: compare under a fresh variable of the domain.
    CompVar y = fresh_comp_var(pi->y.hint.empty() ? "y" : pi->y.hint);
    CompCtx g2 = g.extended(y, pi->dom);
    CompTerm arg =
        pi->dom.is_tm_ctx() ? CompTerm::ctx_val(head_only_ctx(y)) : CompTerm::var(y);
    CompType cod = csubst(pi->cod, arg_payload(arg), pi->y);
    return comp(g2, CompTerm::app(t1, arg), CompTerm::app(t2, arg), cod);
  }
  if (const auto* bx = tw.as<CTBox>()) {
    // Box-eta: t is equivalent to [Psi-hat |- t[wk]] so compare the
    // identity unboxings at the underlying LF type.
    LfSubst id = LfSubst::wk(erase(bx->boxed.ctx));
    return lf(g, bx->boxed.ctx, LfTerm::unbox(t1, id), LfTerm::unbox(t2, id), bx->boxed.ty);
  }
  if (tw.as<CTUniv>()) return comp_type(g, CompType::neut(t1), CompType::neut(t2));
  if (tw.as<CTTmCtx>()) {
    auto c1 = as_ctx_term(red_.whnf_comp(t1));
    auto c2 = as_ctx_term(red_.whnf_comp(t2));
    return c1 && c2 && ctx(g, *c1, *c2);
  }
  CompTerm w1 = red_.whnf_comp(t1);
  CompTerm w2 = red_.whnf_comp(t2);
  if (!is_wne_comp(w1) || !is_wne_comp(w2)) return false;
  return neutral(g, w1, w2).has_value();
}

bool Conv::comp_type(const CompCtx& g, const CompType& t1, const CompType& t2) {
  if (alpha_eq(t1, t2)) return true;
  CompType w1 = red_.whnf_type(t1);
  CompType w2 = red_.whnf_type(t2);
  if (const auto* u1 = w1.as<CTUniv>()) {
    const auto* u2 = w2.as<CTUniv>();
    return u2 && u1->level == u2->level;
  }
  if (const auto* p1 = w1.as<CTPi>()) {
    const auto* p2 = w2.as<CTPi>();
    if (!p2) return false;
    if (p1->dom.is_tm_ctx() != p2->dom.is_tm_ctx()) return false;
    if (!p1->dom.is_tm_ctx() && !comp_type(g, p1->dom, p2->dom)) return false;
    CompVar y = fresh_comp_var(p1->y.hint.empty() ? "y" : p1->y.hint);
    CompCtx g2 = g.extended(y, p1->dom);
    CompTerm arg =
        p1->dom.is_tm_ctx() ? CompTerm::ctx_val(head_only_ctx(y)) : CompTerm::var(y);
    CompType cod1 = csubst(p1->cod, arg_payload(arg), p1->y);
    CompType cod2 = csubst(p2->cod, arg_payload(arg), p2->y);
    return comp_type(g2, cod1, cod2);
  }
  if (const auto* b1 = w1.as<CTBox>()) {
    const auto* b2 = w2.as<CTBox>();
    if (!b2 || b1->boxed.param != b2->boxed.param) return false;
    Rename into1;
    if (!ctx_impl(g, b1->boxed.ctx, b2->boxed.ctx, into1)) return false;
    return lf_type(g, b1->boxed.ctx, b1->boxed.ty, rename(b2->boxed.ty, into1));
  }
  if (w1.as<CTTmCtx>()) return w2.as<CTTmCtx>() != nullptr;
  if (const auto* n1 = w1.as<CTNeut>()) {
    const auto* n2 = w2.as<CTNeut>();
    if (!n2 || !is_wne_comp(n1->t) || !is_wne_comp(n2->t)) return false;
    return neutral(g, n1->t, n2->t).has_value();
  }
  return false;
}

bool Conv::lf(const CompCtx& g, const LfCtx& psi, const LfTerm& m1, const LfTerm& m2,
              const LfType& a) {
  if (const auto* p = a.as<TPi>()) {
    // Eta at Pi: compare M1 x and M2 x under a fresh x.
    LfVar x = fresh_lf_var(p->x.hint.empty() ? "x" : p->x.hint);
    Rename r;
    r.lf.emplace(p->x.id, x);
    LfCtx psi2 = psi.snoc(x, p->dom);
    return lf(g, psi2, LfTerm::app(m1, LfTerm::var(x)), LfTerm::app(m2, LfTerm::var(x)),
              rename(p->cod, r));
  }
  ErasedCtx amb = erase(psi);
  LfTerm w1 = red_.whnf_lf(m1, amb);
  LfTerm w2 = red_.whnf_lf(m2, amb);
  return atomic_lf(g, psi, w1, w2);
}

bool Conv::atomic_lf(const CompCtx& g, const LfCtx& psi, const LfTerm& w1, const LfTerm& w2) {
  std::vector<const LfTerm*> args1, args2;
  const LfTerm* h1 = &w1;
  const LfTerm* h2 = &w2;
  while (const auto* a = h1->as<MApp>()) {
    args1.push_back(&a->arg);
    h1 = &a->fn;
  }
  while (const auto* a = h2->as<MApp>()) {
    args2.push_back(&a->arg);
    h2 = &a->fn;
  }
  if (args1.size() != args2.size()) return false;
  auto hty = lf_spine_head_type(g, psi, *h1, *h2);
  if (!hty) return false;
  LfType ty = *hty;
  ErasedCtx amb = erase(psi);
  for (std::size_t i = args1.size(); i-- > 0;) {
    const auto* pi = ty.as<TPi>();
    if (!pi) return false;
    if (!lf(g, psi, *args1[i], *args2[i], pi->dom)) return false;
    ty = single_subst_type(*args1[i], pi->x, pi->cod, amb);
  }
  return true;
}

std::optional<LfType> Conv::lf_spine_head_type(const CompCtx& g, const LfCtx& psi,
                                               const LfTerm& h1, const LfTerm& h2) {
  if (const auto* v1 = h1.as<MVar>()) {
    const auto* v2 = h2.as<MVar>();
    if (!v2 || v1->x != v2->x) return std::nullopt;
    if (const LfType* ty = ctx_lookup(psi, v1->x)) return *ty;
    return std::nullopt;
  }
  if (const auto* c1 = h1.as<MConst>()) {
    const auto* c2 = h2.as<MConst>();
    if (!c2 || c1->name != c2->name) return std::nullopt;
    return sig::constant_type(c1->name);
  }
  if (const auto* u1 = h1.as<MUnbox>()) {
    const auto* u2 = h2.as<MUnbox>();
    if (!u2) return std::nullopt;
    if (!is_wne_comp(u1->comp) || !is_wne_comp(u2->comp)) return std::nullopt;
    auto nt = neutral(g, u1->comp, u2->comp);
    if (!nt) return std::nullopt;
    CompType bt = red_.whnf_type(*nt);
    const auto* bx = bt.as<CTBox>();
    if (!bx) return std::nullopt;
    if (!subst(g, psi, u1->subst, u2->subst, bx->boxed.ctx)) return std::nullopt;
    return lf_subst_type(u1->subst, erase(bx->boxed.ctx), bx->boxed.ty);
  }
  return std::nullopt;
}

bool Conv::subst(const CompCtx& g, const LfCtx& range, const LfSubst& s1, const LfSubst& s2,
                 const LfCtx& domain) {
  LfSubst w1 = red_.whnf_subst(s1);
  LfSubst w2 = red_.whnf_subst(s2);
  if (!domain.decls.empty()) {
    const auto* x1 = w1.as<SSnoc>();
    const auto* x2 = w2.as<SSnoc>();
    if (!x1 || !x2) return false;
    LfCtx prefix = domain;
    LfCtxDecl d = prefix.decls.back();
    prefix.decls.pop_back();
    LfType at = lf_subst_type(x1->tail, erase(prefix), d.ty);
    if (!lf(g, range, x1->term, x2->term, at)) return false;
    return subst(g, range, x1->tail, x2->tail, prefix);
  }
  if (domain.head) {
    const auto* k1 = w1.as<SWk>();
    const auto* k2 = w2.as<SWk>();
    return k1 && k2 && k1->ctx.vars.empty() && k2->ctx.vars.empty() && k1->ctx.head &&
           k2->ctx.head && k1->ctx.head->id == k2->ctx.head->id;
  }
  return w1.as<SEmpty>() && w2.as<SEmpty>();
}

bool Conv::ctx_impl(const CompCtx& g, const LfCtx& c1, const LfCtx& c2, Rename& into1) {
  if (c1.head.has_value() != c2.head.has_value()) return false;
  if (c1.head && c1.head->id != c2.head->id) return false;
  if (c1.decls.size() != c2.decls.size()) return false;
  LfCtx prefix;
  prefix.head = c1.head;
  for (std::size_t i = 0; i < c1.decls.size(); ++i) {
    LfType a2 = rename(c2.decls[i].ty, into1);
    if (!lf_type(g, prefix, c1.decls[i].ty, a2)) return false;
    into1.lf.emplace(c2.decls[i].x.id, c1.decls[i].x);
    prefix.decls.push_back(c1.decls[i]);
  }
  return true;
}

bool Conv::ctx(const CompCtx& g, const LfCtx& c1, const LfCtx& c2) {
  Rename into1;
  return ctx_impl(g, c1, c2, into1);
}

bool Conv::lf_type(const CompCtx& g, const LfCtx& psi, const LfType& a1, const LfType& a2) {
  if (const auto* t1 = a1.as<TAtom>()) {
    const auto* t2 = a2.as<TAtom>();
    if (!t2 || t1->head != t2->head || t1->args.size() != t2->args.size()) return false;
    LfKind k = sig::family_kind(t1->head);
    ErasedCtx amb = erase(psi);
    for (std::size_t i = 0; i < t1->args.size(); ++i) {
      const auto* kp = k.as<KPi>();
      if (!kp) return false;
      if (!lf(g, psi, t1->args[i], t2->args[i], kp->dom)) return false;
      k = single_subst_kind(t1->args[i], kp->x, kp->body, amb);
    }
    return true;
  }
  const auto* p1 = a1.as<TPi>();
  const auto* p2 = a2.as<TPi>();
  if (!p1 || !p2) return false;
  if (!lf_type(g, psi, p1->dom, p2->dom)) return false;
  LfVar x = fresh_lf_var(p1->x.hint.empty() ? "x" : p1->x.hint);
  Rename r1, r2;
  r1.lf.emplace(p1->x.id, x);
  r2.lf.emplace(p2->x.id, x);
  return lf_type(g, psi.snoc(x, p1->dom), rename(p1->cod, r1), rename(p2->cod, r2));
}

bool Conv::lf_kind(const CompCtx& g, const LfCtx& psi, const LfKind& k1, const LfKind& k2) {
  if (k1.as<KType>()) return k2.as<KType>() != nullptr;
  const auto* p1 = k1.as<KPi>();
  const auto* p2 = k2.as<KPi>();
  if (!p1 || !p2) return false;
  if (!lf_type(g, psi, p1->dom, p2->dom)) return false;
  LfVar x = fresh_lf_var(p1->x.hint.empty() ? "x" : p1->x.hint);
  Rename r1, r2;
  r1.lf.emplace(p1->x.id, x);
  r2.lf.emplace(p2->x.id, x);
  return lf_kind(g, psi.snoc(x, p1->dom), rename(p1->body, r1), rename(p2->body, r2));
}

std::optional<CompType> Conv::neutral(const CompCtx& g, const CompTerm& n1, const CompTerm& n2) {
  if (const auto* v1 = n1.as<CVarT>()) {
    const auto* v2 = n2.as<CVarT>();
    if (!v2 || v1->y != v2->y) return std::nullopt;
    if (const CompType* ty = g.lookup(v1->y)) return *ty;
    return std::nullopt;
  }
  if (const auto* a1 = n1.as<CApp>()) {
    const auto* a2 = n2.as<CApp>();
    if (!a2) return std::nullopt;
    auto hty = neutral(g, a1->fn, a2->fn);
    if (!hty) return std::nullopt;
    CompType w = red_.whnf_type(*hty);
    const auto* pi = w.as<CTPi>();
    if (!pi) return std::nullopt;
    if (pi->dom.is_tm_ctx()) {
      auto c1 = as_ctx_term(a1->arg);
      auto c2 = as_ctx_term(a2->arg);
      if (!c1 || !c2 || !ctx(g, *c1, *c2)) return std::nullopt;
      return csubst(pi->cod, CompPayload{*c1}, pi->y);
    }
    if (!comp(g, a1->arg, a2->arg, pi->dom)) return std::nullopt;
    return csubst(pi->cod, CompPayload{a1->arg}, pi->y);
  }
  if (const auto* r1 = n1.as<CRec>()) {
    const auto* r2 = n2.as<CRec>();
    if (!r2) return std::nullopt;
    auto mp1 = motive_parts(r1->motive);
    auto mp2 = motive_parts(r2->motive);
    if (!mp1 || !mp2) return std::nullopt;
    if (!comp_type(g, r1->motive, r2->motive)) return std::nullopt;
    if (!ctx(g, r1->ctx, r2->ctx)) return std::nullopt;
    if (!comp(g, r1->scrut, r2->scrut,
              CompType::box(CtxType{false, r1->ctx, LfType::tm()})))
      return std::nullopt;
    const Branches& b1 = *r1->branches;
    const Branches& b2 = *r2->branches;
    {
      BranchEnv env = var_branch_env(g, *mp1, b1.var_br);
      Rename r;
      r.comp.emplace(b2.var_br.psi.id, b1.var_br.psi);
      r.comp.emplace(b2.var_br.p.id, b1.var_br.p);
      if (!comp(env.ctx, b1.var_br.body, rename(b2.var_br.body, r), env.expected))
        return std::nullopt;
    }
    {
      BranchEnv env = app_branch_env(g, *mp1, b1.app_br);
      Rename r;
      r.comp.emplace(b2.app_br.psi.id, b1.app_br.psi);
      r.comp.emplace(b2.app_br.m.id, b1.app_br.m);
      r.comp.emplace(b2.app_br.n.id, b1.app_br.n);
      r.comp.emplace(b2.app_br.fm.id, b1.app_br.fm);
      r.comp.emplace(b2.app_br.fn.id, b1.app_br.fn);
      if (!comp(env.ctx, b1.app_br.body, rename(b2.app_br.body, r), env.expected))
        return std::nullopt;
    }
    {
      BranchEnv env = lam_branch_env(g, *mp1, b1.lam_br);
      Rename r;
      r.comp.emplace(b2.lam_br.psi.id, b1.lam_br.psi);
      r.comp.emplace(b2.lam_br.m.id, b1.lam_br.m);
      r.comp.emplace(b2.lam_br.fm.id, b1.lam_br.fm);
      if (!comp(env.ctx, b1.lam_br.body, rename(b2.lam_br.body, r), env.expected))
        return std::nullopt;
    }
    return rec_result_type(*mp1, r1->ctx, r1->scrut);
  }
  return std::nullopt;
}

#define CTT_CONV_WRAP(NAME, CALL)                                                       \
  bool NAME {                                                                             \
    Reducer red(fuel);                                                                    \
    Conv cv(red);                                                                         \
    return cv.CALL;                                                                       \
  }
CTT_CONV_WRAP(conv_comp(const CompCtx& g, const CompTerm& t1, const CompTerm& t2,
                          const CompType& tau, long long fuel),
                comp(g, t1, t2, tau))
CTT_CONV_WRAP(conv_comp_type(const CompCtx& g, const CompType& t1, const CompType& t2,
                               long long fuel),
                comp_type(g, t1, t2))
CTT_CONV_WRAP(conv_lf(const CompCtx& g, const LfCtx& psi, const LfTerm& m1, const LfTerm& m2,
                        const LfType& a, long long fuel),
                lf(g, psi, m1, m2, a))
CTT_CONV_WRAP(conv_lf_type(const CompCtx& g, const LfCtx& psi, const LfType& a1,
                             const LfType& a2, long long fuel),
                lf_type(g, psi, a1, a2))
CTT_CONV_WRAP(conv_subst(const CompCtx& g, const LfCtx& range, const LfSubst& s1,
                           const LfSubst& s2, const LfCtx& domain, long long fuel),
                subst(g, range, s1, s2, domain))
CTT_CONV_WRAP(conv_ctx(const CompCtx& g, const LfCtx& c1, const LfCtx& c2, long long fuel),
                ctx(g, c1, c2))
#undef CTT_CONV_WRAP

}  // namespace ctt
