#include "ctt/check.hpp"

#include <limits>
#include <vector>
#include <utility>

#include "ctt/comp_subst.hpp"
#include "ctt/lf_subst.hpp"
#include "ctt/print.hpp"

namespace ctt {

namespace {

LfCtx head_only_ctx(const CompVar& y) {
  LfCtx c;
  c.head = y;
  return c;
}

std::optional<LfCtx> as_ctx_term(const CompTerm& t) {
  if (const auto* c = t.as<CCtxVal>()) return c->ctx;
  if (const auto* v = t.as<CVarT>()) return head_only_ctx(v->y);
  return std::nullopt;
}

constexpr std::uint32_t kMaxLevel = std::numeric_limits<std::int32_t>::max();

}  // namespace

// ---- contexts ----

void Checker::check_comp_ctx(const CompCtx& g) {
  CompCtx prefix;
  for (const auto& d : g.decls) {
    if (prefix.lookup(d.y))
      fail(Err::DuplicateName, "|- G", "duplicate declaration of " + d.y.hint);
    kind_of(prefix, d.ty);
    prefix = prefix.extended(d.y, d.ty);
  }
}

void Checker::check_lf_ctx(const CompCtx& g, const LfCtx& psi) {
  if (psi.head) {
    const CompType* ty = g.lookup(*psi.head);
    if (!ty)
      fail(Err::UnknownCtxVar, "G |- Psi : ctx",
           "context variable " + psi.head->hint + " is not declared");
    if (!ty->is_tm_ctx())
      fail(Err::UnknownCtxVar, "G |- Psi : ctx",
           "variable " + psi.head->hint + " is not declared at tm_ctx");
  }
  LfCtx prefix;
  prefix.head = psi.head;
  for (const auto& d : psi.decls) {
    LfKind k = kind_lf_type(g, prefix, d.ty);
    if (!k.as<KType>())
      fail(Err::IllKindedDecl, "G |- Psi : ctx",
           "declaration " + d.x.hint + " is not of kind lftype");
    prefix.decls.push_back(d);
  }
}

void Checker::schema_check(const CompCtx& g, const LfCtx& psi) {
  if (psi.head) {
    const CompType* ty = g.lookup(*psi.head);
    if (!ty || !ty->is_tm_ctx())
      fail(Err::UnknownCtxVar, "G |- Psi : tm_ctx",
           "context variable " + psi.head->hint + " is not declared at tm_ctx");
  }
  LfCtx prefix;
  prefix.head = psi.head;
  for (const auto& d : psi.decls) {
    LfKind k = kind_lf_type(g, prefix, d.ty);
    if (!k.as<KType>())
      fail(Err::IllKindedDecl, "G |- Psi : tm_ctx",
           "declaration " + d.x.hint + " is not of kind lftype");
    if (!conv_.lf_type(g, prefix, d.ty, LfType::tm()))
      fail(Err::SchemaViolation, "G |- Psi : tm_ctx",
           "declaration " + d.x.hint + " is not convertible to tm", "tm", show(d.ty));
    prefix.decls.push_back(d);
  }
}

// ---- LF layer ----

LfType Checker::infer_lf(const CompCtx& g, const LfCtx& psi, const LfTerm& m) {
  if (const auto* v = m.as<MVar>()) {
    if (const LfType* ty = ctx_lookup(psi, v->x)) return *ty;
    fail(Err::UnboundLfVar, "G;Psi |- M : A", "unbound LF variable " + v->x.hint);
  }
  if (const auto* c = m.as<MConst>()) {
    if (!sig::is_constant(c->name))
      fail(Err::UnknownName, "G;Psi |- M : A", "unknown LF constant " + c->name);
    return sig::constant_type(c->name);
  }
  if (const auto* a = m.as<MApp>()) {
    {
      // Beta redex: infer the innermost argument, bind it, infer the body.
      std::vector<const LfTerm*> args;
      const LfTerm* head = &m;
      while (const auto* spine = head->as<MApp>()) {
        args.push_back(&spine->arg);
        head = &spine->fn;
      }
      if (const auto* l = head->as<MLam>()) {
        (void)infer_lf(g, psi, *args.back());  // the argument must be well-typed
        LfTerm rebuilt = single_subst(*args.back(), l->x, l->body, erase(psi));
        for (std::size_t i = args.size() - 1; i-- > 0;)
          rebuilt = LfTerm::app(std::move(rebuilt), *args[i]);
        return infer_lf(g, psi, rebuilt);
      }
    }
    LfType fty = infer_lf(g, psi, a->fn);
    const auto* pi = fty.as<TPi>();
    if (!pi)
      fail(Err::NotAFunction, "G;Psi |- M N : [N/x]B",
           "applied an LF term whose type is not a Pi", "{x:A} B", show(fty));
    check_lf(g, psi, a->arg, pi->dom);
    return single_subst_type(a->arg, pi->x, pi->cod, erase(psi));
  }
  if (const auto* u = m.as<MUnbox>()) {
    if (const auto* b = u->comp.as<CBox>()) {
      // A closure over a boxed object is typed through its contraction,
      // mirroring the equality [Phi-hat |- N][sigma] == [sigma/Phi-hat]N.
      LfTerm contractum = [&] {
        try {
          return lf_subst_term(u->subst, b->obj.ctx, b->obj.term);
        } catch (const KernelError& e) {
          if (err_is_internal(e.code))
            fail(Err::IllScoped, "G;Psi |- t[sigma] : [sigma/Phi]A",
                 "closure substitution does not cover the boxed spine");
          throw;
        }
      }();
      return infer_lf(g, psi, contractum);
    }
    CompType ct = red_.whnf_type(infer_comp(g, u->comp));
    const auto* bx = ct.as<CTBox>();
    if (!bx)
      fail(Err::UnboxNotBox, "G;Psi |- t[sigma] : [sigma/Phi]A",
           "unboxed a computation of non-contextual type", "[Phi |- A]", show(ct));
    check_lf_subst(g, psi, u->subst, bx->boxed.ctx);
    return lf_subst_type(u->subst, erase(bx->boxed.ctx), bx->boxed.ty);
  }
  fail(Err::NotInferable, "G;Psi |- M : A", "an LF abstraction only checks against a Pi type");
}

void Checker::check_lf(const CompCtx& g, const LfCtx& psi, const LfTerm& m, const LfType& a) {
  if (const auto* l = m.as<MLam>()) {
    const auto* pi = a.as<TPi>();
    if (!pi)
      fail(Err::NotAFunction, "G;Psi |- \\x.M : {x:A} B",
           "an LF abstraction checks only against a Pi type", "{x:A} B", show(a));
    Rename r;
    r.lf.emplace(pi->x.id, l->x);
    check_lf(g, psi.snoc(l->x, pi->dom), l->body, rename(pi->cod, r));
    return;
  }
  if (m.as<MApp>()) {
    // A beta redex checks by inferring the innermost argument and checking
    // the peeled body; the expected type cannot mention the bound variable.
    std::vector<const LfTerm*> args;
    const LfTerm* head = &m;
    while (const auto* spine = head->as<MApp>()) {
      args.push_back(&spine->arg);
      head = &spine->fn;
    }
    if (const auto* l = head->as<MLam>()) {
      (void)infer_lf(g, psi, *args.back());  // the argument must be well-typed
      LfTerm rebuilt = single_subst(*args.back(), l->x, l->body, erase(psi));
      for (std::size_t i = args.size() - 1; i-- > 0;)
        rebuilt = LfTerm::app(std::move(rebuilt), *args[i]);
      check_lf(g, psi, rebuilt, a);
      return;
    }
  }
  LfType inferred = infer_lf(g, psi, m);
  if (!conv_.lf_type(g, psi, inferred, a))
    fail(Err::TypeMismatch, "G;Psi |- M : A", "LF term does not have the expected type",
         show(a), show(inferred));
}

void Checker::check_lf_param(const CompCtx& g, const LfCtx& psi, const LfTerm& m,
                             const LfType& a) {
  LfTerm w = red_.whnf_lf(m, erase(psi));
  if (const auto* v = w.as<MVar>()) {
    const LfType* ty = ctx_lookup(psi, v->x);
    if (!ty)
      fail(Err::NotAParameter, "G;Psi |-# M : A",
           "variable " + v->x.hint + " is not declared in the LF context");
    if (!conv_.lf_type(g, psi, *ty, a))
      fail(Err::TypeMismatch, "G;Psi |-# M : A", "parameter does not have the expected type",
           show(a), show(*ty));
    return;
  }
  if (const auto* u = w.as<MUnbox>()) {
    CompType ct = red_.whnf_type(infer_comp(g, u->comp));
    const auto* bx = ct.as<CTBox>();
    if (bx && bx->boxed.param) {
      // The relocation must be a weakening for the result to stay a variable.
      if (!ctx_is_prefix(g, bx->boxed.ctx, psi))
        fail(Err::NotAParameter, "G;Psi |-# M : A",
             "parameter unboxing does not target an extension of its context");
      if (!conv_.subst(g, psi, u->subst, LfSubst::wk(erase(bx->boxed.ctx)), bx->boxed.ctx))
        fail(Err::NotAParameter, "G;Psi |-# M : A",
             "parameter unboxed along a non-weakening substitution");
      LfType at = lf_subst_type(u->subst, erase(bx->boxed.ctx), bx->boxed.ty);
      if (!conv_.lf_type(g, psi, at, a))
        fail(Err::TypeMismatch, "G;Psi |-# M : A", "parameter does not have the expected type",
             show(a), show(at));
      return;
    }
  }
  fail(Err::NotAParameter, "G;Psi |-# M : A",
       "term is not convertible to an LF variable of the context");
}

void Checker::check_lf_subst(const CompCtx& g, const LfCtx& to, const LfSubst& s,
                             const LfCtx& from) {
  if (s.as<SEmpty>()) {
    if (!from.empty_shape())
      fail(Err::EntryTypeMismatch, "G;Phi |- sigma : Psi",
           "empty substitution against a non-empty domain", ".", show(from));
    return;
  }
  if (const auto* wk = s.as<SWk>()) {
    // The annotation names a prefix of the range; the domain must be that
    // prefix up to conversion.
    if (!erased_prefix(wk->ctx, erase(to)))
      fail(Err::NotAPrefix, "G;Phi |- wk : Psi",
           "weakening annotation is not a prefix of the range context", show(erase(to)),
           show(wk->ctx));
    if (wk->ctx.head.has_value() != from.head.has_value() ||
        (wk->ctx.head && from.head && wk->ctx.head->id != from.head->id) ||
        wk->ctx.vars.size() != from.decls.size())
      fail(Err::NotAPrefix, "G;Phi |- wk : Psi",
           "weakening annotation does not erase from its domain", show(erase(from)),
           show(wk->ctx));
    Rename into_range;
    LfCtx prefix;
    prefix.head = from.head;
    for (std::size_t i = 0; i < from.decls.size(); ++i) {
      LfType want = rename(from.decls[i].ty, into_range);
      if (!conv_.lf_type(g, prefix, to.decls[i].ty, want))
        fail(Err::EntryTypeMismatch, "G;Phi |- wk : Psi",
             "weakening domain declaration does not match the range prefix",
             show(to.decls[i].ty), show(from.decls[i].ty));
      into_range.lf.emplace(from.decls[i].x.id, to.decls[i].x);
      prefix.decls.push_back(to.decls[i]);
    }
    return;
  }
  const auto& sn = *s.as<SSnoc>();
  if (from.decls.empty())
    fail(Err::EntryTypeMismatch, "G;Phi |- sigma, M : Psi, x:A",
         "substitution extension against a domain without declarations", show(from), "sigma, M");
  LfCtx from_prefix = from;
  LfCtxDecl d = from_prefix.decls.back();
  from_prefix.decls.pop_back();
  check_lf_subst(g, to, sn.tail, from_prefix);
  check_lf(g, to, sn.term, lf_subst_type(sn.tail, erase(from_prefix), d.ty));
}

LfKind Checker::kind_lf_type(const CompCtx& g, const LfCtx& psi, const LfType& a) {
  if (const auto* at = a.as<TAtom>()) {
    if (!sig::is_type_family(at->head))
      fail(Err::IllKinded, "G;Psi |- A : K", "unknown LF type family " + at->head);
    LfKind k = sig::family_kind(at->head);
    ErasedCtx amb = erase(psi);
    for (const auto& arg : at->args) {
      const auto* kp = k.as<KPi>();
      if (!kp)
        fail(Err::IllKinded, "G;Psi |- P M : [M/x]K",
             "type family " + at->head + " applied to too many arguments");
      check_lf(g, psi, arg, kp->dom);
      k = single_subst_kind(arg, kp->x, kp->body, amb);
    }
    return k;
  }
  const auto& p = *a.as<TPi>();
  LfKind dk = kind_lf_type(g, psi, p.dom);
  if (!dk.as<KType>())
    fail(Err::IllKinded, "G;Psi |- {x:A} B : lftype", "Pi domain is not of kind lftype");
  LfKind ck = kind_lf_type(g, psi.snoc(p.x, p.dom), p.cod);
  if (!ck.as<KType>())
    fail(Err::IllKinded, "G;Psi |- {x:A} B : lftype", "Pi codomain is not of kind lftype");
  return LfKind::type();
}

void Checker::check_lf_kind(const CompCtx& g, const LfCtx& psi, const LfKind& k) {
  if (k.as<KType>()) return;
  const auto& p = *k.as<KPi>();
  LfKind dk = kind_lf_type(g, psi, p.dom);
  if (!dk.as<KType>())
    fail(Err::IllKinded, "G;Psi |- {x:A} K : lfkind", "Pi domain is not of kind lftype");
  check_lf_kind(g, psi.snoc(p.x, p.dom), p.body);
}

// ---- contextual objects and types ----

void Checker::check_ctx_type(const CompCtx& g, const CtxType& t) {
  check_lf_ctx(g, t.ctx);
  LfKind k = kind_lf_type(g, t.ctx, t.ty);
  if (!k.as<KType>())
    fail(Err::IllKinded, "G |- T", "contextual type classifier is not of kind lftype");
}

void Checker::check_ctx_obj(const CompCtx& g, const CtxObj& c, const CtxType& t) {
  const ErasedCtx& spine = c.ctx;
  if (spine.head.has_value() != t.ctx.head.has_value() ||
      (spine.head && t.ctx.head && spine.head->id != t.ctx.head->id) ||
      spine.vars.size() != t.ctx.decls.size())
    fail(Err::CtxMismatch, "G |- (Psi-hat |- M) : (Psi |- A)",
         "contextual object spine does not erase from the classifying context",
         show(erase(t.ctx)), show(spine));
  // Retarget the classifier's declarations onto the spine's variables.
  Rename r;
  LfCtx psi;
  psi.head = t.ctx.head;
  for (std::size_t i = 0; i < t.ctx.decls.size(); ++i) {
    LfType ty = rename(t.ctx.decls[i].ty, r);
    psi.decls.push_back(LfCtxDecl{spine.vars[i], std::move(ty)});
    r.lf.emplace(t.ctx.decls[i].x.id, spine.vars[i]);
  }
  LfType a = rename(t.ty, r);
  if (t.param)
    check_lf_param(g, psi, c.term, a);
  else
    check_lf(g, psi, c.term, a);
}

// ---- computations ----

CompType Checker::infer_comp(const CompCtx& g, const CompTerm& t) {
  if (const auto* v = t.as<CVarT>()) {
    if (const CompType* ty = g.lookup(v->y)) return *ty;
    fail(Err::UnboundCompVar, "G |- t : tau", "unbound computation variable " + v->y.hint);
  }
  if (const auto* a = t.as<CApp>()) {
    {
      // Beta redex: infer the innermost argument, bind it, and infer the
      // peeled application.
      std::vector<const CompTerm*> args;
      const CompTerm* head = &t;
      while (const auto* spine = head->as<CApp>()) {
        args.push_back(&spine->arg);
        head = &spine->fn;
      }
      if (const auto* f = head->as<CFn>()) {
        (void)infer_comp(g, *args.back());  // the argument must be well-typed
        CompPayload pay = args.back()->as<CCtxVal>()
                              ? CompPayload{args.back()->as<CCtxVal>()->ctx}
                              : CompPayload{*args.back()};
        CompTerm rebuilt = csubst(f->body, pay, f->y);
        for (std::size_t i = args.size() - 1; i-- > 0;)
          rebuilt = CompTerm::app(std::move(rebuilt), *args[i]);
        return infer_comp(g, rebuilt);
      }
    }
    CompType fty = red_.whnf_type(infer_comp(g, a->fn));
    const auto* pi = fty.as<CTPi>();
    if (!pi)
      fail(Err::NotAFunction, "G |- t s : {s/y}tau2",
           "applied a computation whose type is not a function type", "(y:tau1) -> tau2",
           show(fty));
    if (pi->dom.is_tm_ctx()) {
      auto ctx = as_ctx_term(a->arg);
      if (!ctx)
        fail(Err::DomainMismatch, "G |- t s : {s/y}tau2",
             "expected an LF context argument for a tm_ctx domain", "tm_ctx", show(a->arg));
      schema_check(g, *ctx);
      return csubst(pi->cod, CompPayload{*ctx}, pi->y);
    }
    check_comp(g, a->arg, pi->dom);
    return csubst(pi->cod, CompPayload{a->arg}, pi->y);
  }
  if (const auto* c = t.as<CCtxVal>()) {
    schema_check(g, c->ctx);
    return CompType::tm_ctx();
  }
  if (t.as<CRec>()) return check_recursor(g, t);
  if (t.as<CBox>())
    fail(Err::NotInferable, "G |- [C] : [T]",
         "a boxed contextual object checks only against a boxed contextual type");
  fail(Err::NotInferable, "G |- fn y => t : (y:tau1) -> tau2",
       "a function checks only against a function type");
}

void Checker::check_comp(const CompCtx& g, const CompTerm& t, const CompType& tau) {
  CompType w = red_.whnf_type(tau);
  if (const auto* f = t.as<CFn>()) {
    const auto* pi = w.as<CTPi>();
    if (!pi)
      fail(Err::NotAFunction, "G |- fn y => t : (y:tau1) -> tau2",
           "a function checks only against a function type", "(y:tau1) -> tau2", show(w));
    CompType cod = csubst(pi->cod, CompPayload{CompTerm::var(f->y)}, pi->y);
    check_comp(g.extended(f->y, pi->dom), f->body, cod);
    return;
  }
  if (const auto* b = t.as<CBox>()) {
    const auto* bx = w.as<CTBox>();
    if (!bx)
      fail(Err::TypeMismatch, "G |- [C] : [T]",
           "a boxed contextual object checks only against a boxed contextual type", show(w),
           "[Psi-hat |- M]");
    check_ctx_obj(g, b->obj, bx->boxed);
    return;
  }
  if (const auto* c = t.as<CCtxVal>()) {
    if (!w.is_tm_ctx())
      fail(Err::TypeMismatch, "G |- Psi : tm_ctx", "an LF context checks only against tm_ctx",
           show(w), show(c->ctx));
    schema_check(g, c->ctx);
    return;
  }
  if (t.as<CApp>()) {
    // A beta redex checks by inferring the innermost argument, binding the
    // function's variable at that type, and checking the peeled body; the
    // expected type cannot mention the bound variable.
    std::vector<const CompTerm*> args;
    const CompTerm* head = &t;
    while (const auto* a = head->as<CApp>()) {
      args.push_back(&a->arg);
      head = &a->fn;
    }
    if (const auto* f = head->as<CFn>()) {
      (void)infer_comp(g, *args.back());  // the argument must be well-typed
      CompPayload pay = args.back()->as<CCtxVal>()
                            ? CompPayload{args.back()->as<CCtxVal>()->ctx}
                            : CompPayload{*args.back()};
      CompTerm rebuilt = csubst(f->body, pay, f->y);
      for (std::size_t i = args.size() - 1; i-- > 0;)
        rebuilt = CompTerm::app(std::move(rebuilt), *args[i]);
      check_comp(g, rebuilt, w);
      return;
    }
  }
  CompType inferred = infer_comp(g, t);
  if (!conv_.comp_type(g, inferred, w))
    fail(Err::TypeMismatch, "G |- t : tau", "term does not have the expected type", show(w),
         show(inferred));
}

CompType Checker::check_recursor(const CompCtx& g, const CompTerm& rec_term) {
  const auto* r = rec_term.as<CRec>();
  if (!r) fail(Err::BadInvariantShape, "G |- rec^I B Psi t", "not a recursor");
  auto mp = motive_parts(r->motive);
  if (!mp)
    fail(Err::BadInvariantShape, "G |- rec^I B Psi t",
         "recursor invariant is not of shape (psi:tm_ctx) -> (y:[psi |- tm]) -> tau",
         "(psi:tm_ctx) -> (y:[psi |- tm]) -> tau", show(r->motive));
  kind_of(g, r->motive);
  schema_check(g, r->ctx);
  check_comp(g, r->scrut, CompType::box(CtxType{false, r->ctx, LfType::tm()}));
  const Branches& br = *r->branches;
  auto in_branch = [&](const char* which, auto&& body) {
    try {
      body();
    } catch (KernelError& e) {
      throw KernelError(e.code, e.judgment,
                        std::string("in the ") + which + " branch: " + e.what(), e.expected,
                        e.actual);
    }
  };
  in_branch("variable", [&] {
    BranchEnv env = var_branch_env(g, *mp, br.var_br);
    check_comp(env.ctx, br.var_br.body, env.expected);
  });
  in_branch("app", [&] {
    BranchEnv env = app_branch_env(g, *mp, br.app_br);
    check_comp(env.ctx, br.app_br.body, env.expected);
  });
  in_branch("lam", [&] {
    BranchEnv env = lam_branch_env(g, *mp, br.lam_br);
    check_comp(env.ctx, br.lam_br.body, env.expected);
  });
  return rec_result_type(*mp, r->ctx, r->scrut);
}

// ---- type formation ----

Checker::Level Checker::kind_of(const CompCtx& g, const CompType& tau) {
  if (const auto* u = tau.as<CTUniv>()) {
    if (u->level >= kMaxLevel)
      fail(Err::UniverseError, "G |- u1 : u2", "universe level overflow");
    return Level{u->level + 1, true};
  }
  if (const auto* b = tau.as<CTBox>()) {
    check_ctx_type(g, b->boxed);
    return Level{0, false};
  }
  if (tau.as<CTTmCtx>()) return Level{0, false};
  if (const auto* p = tau.as<CTPi>()) {
    Level l1 = p->dom.is_tm_ctx() ? Level{0, false} : kind_of(g, p->dom);
    if (p->cod.is_tm_ctx())
      fail(Err::IllKinded, "G |- (y:tau1) -> tau2 : u3",
           "tm_ctx cannot appear as a codomain");
    Level l2 = kind_of(g.extended(p->y, p->dom), p->cod);
    std::uint32_t least = l1.least > l2.least ? l1.least : l2.least;
    return Level{least, l1.rigid && l2.rigid};
  }
  const auto& n = *tau.as<CTNeut>();
  CompType ty = red_.whnf_type(infer_comp(g, n.t));
  const auto* u = ty.as<CTUniv>();
  if (!u)
    fail(Err::IllKinded, "G |- t : u", "a term used as a type must inhabit a universe", "U_k",
         show(ty));
  return Level{u->level, true};
}

void Checker::check_type_at(const CompCtx& g, const CompType& tau, std::uint32_t u) {
  Level l = kind_of(g, tau);
  bool ok = l.rigid ? l.least == u : l.least <= u;
  if (!ok)
    fail(Err::UniverseError, "G |- tau : u", "type does not inhabit the requested universe",
         "U" + std::to_string(u),
         (l.rigid ? "U" : "at least U") + std::to_string(l.least));
}

// ---- computation-level substitutions ----

void Checker::check_comp_subst(const CompCtx& to, const CompSubst& theta, const CompCtx& from) {
  if (theta.entries.size() != from.decls.size())
    fail(Err::EntryTypeMismatch, "G' |- theta : G",
         "substitution and context have different lengths",
         std::to_string(from.decls.size()) + " entries",
         std::to_string(theta.entries.size()) + " entries");
  CompSubst prefix;
  for (std::size_t i = 0; i < from.decls.size(); ++i) {
    const CompDecl& d = from.decls[i];
    const CompSubstEntry& e = theta.entries[i];
    if (e.y != d.y)
      fail(Err::EntryTypeMismatch, "G' |- theta, t/x : G, x:tau",
           "substitution entry does not match the declaration it instantiates", d.y.hint,
           e.y.hint);
    CompType ty = csubst_sim(prefix, d.ty);
    if (ty.is_tm_ctx()) {
      const LfCtx* ctx = std::get_if<LfCtx>(&e.payload);
      LfCtx coerced;
      if (!ctx) {
        auto c = as_ctx_term(std::get<CompTerm>(e.payload));
        if (!c)
          fail(Err::EntryTypeMismatch, "G' |- theta, t/x : G, x:tm_ctx",
               "entry for " + d.y.hint + " must be an LF context");
        coerced = *c;
        ctx = &coerced;
      }
      schema_check(to, *ctx);
      prefix = prefix.extended(d.y, CompPayload{*ctx});
    } else {
      const CompTerm* t = std::get_if<CompTerm>(&e.payload);
      if (!t)
        fail(Err::EntryTypeMismatch, "G' |- theta, t/x : G, x:tau",
             "entry for " + d.y.hint + " must be a computation");
      check_comp(to, *t, ty);
      prefix = prefix.extended(d.y, CompPayload{*t});
    }
  }
}

// ---- helpers ----

bool Checker::ctx_is_prefix(const CompCtx& g, const LfCtx& from, const LfCtx& to) {
  if (from.head.has_value() != to.head.has_value()) return false;
  if (from.head && from.head->id != to.head->id) return false;
  if (from.decls.size() > to.decls.size()) return false;
  LfCtx prefix;
  prefix.head = from.head;
  for (std::size_t i = 0; i < from.decls.size(); ++i) {
    if (from.decls[i].x != to.decls[i].x) return false;
    if (!conv_.lf_type(g, prefix, from.decls[i].ty, to.decls[i].ty)) return false;
    prefix.decls.push_back(from.decls[i]);
  }
  return true;
}

void Checker::domain_check(const CompCtx& g, const CompType& dom) { kind_of(g, dom); }

}  // namespace ctt
