#include "ctt/whnf.hpp"

#include "ctt/comp_subst.hpp"
#include "ctt/lf_subst.hpp"

namespace ctt {

// ---- classification ----

bool is_wne_lf(const LfTerm& m) {
  if (m.as<MVar>() || m.as<MConst>()) return true;
  if (const auto* a = m.as<MApp>()) return is_wne_lf(a->fn);
  return false;
}

bool is_whnf_lf(const LfTerm& m) {
  if (m.as<MLam>()) return true;
  if (const auto* u = m.as<MUnbox>()) return is_wne_comp(u->comp);
  return is_wne_lf(m);
}

bool is_whnf_subst(const LfSubst& s) {
  if (s.as<SEmpty>() || s.as<SSnoc>()) return true;
  const auto& wk = *s.as<SWk>();
  return wk.ctx.head.has_value() && wk.ctx.vars.empty();
}

bool is_wne_comp(const CompTerm& t) {
  if (t.as<CVarT>()) return true;
  if (const auto* a = t.as<CApp>()) return is_wne_comp(a->fn);
  if (const auto* r = t.as<CRec>()) {
    if (is_wne_comp(r->scrut)) return true;
    if (const auto* b = r->scrut.as<CBox>())
      if (const auto* u = b->obj.term.as<MUnbox>()) return is_wne_comp(u->comp);
    return false;
  }
  return false;
}

bool is_whnf_comp(const CompTerm& t) {
  if (t.as<CFn>() || t.as<CBox>() || t.as<CCtxVal>()) return true;
  return is_wne_comp(t);
}

WhnfClass classify_lf(const LfTerm& m) {
  if (is_wne_lf(m)) return WhnfClass::Wne;
  return is_whnf_lf(m) ? WhnfClass::Whnf : WhnfClass::Reducible;
}
WhnfClass classify_subst(const LfSubst& s) {
  return is_whnf_subst(s) ? WhnfClass::Whnf : WhnfClass::Reducible;
}
WhnfClass classify_comp(const CompTerm& t) {
  if (is_wne_comp(t)) return WhnfClass::Wne;
  return is_whnf_comp(t) ? WhnfClass::Whnf : WhnfClass::Reducible;
}

// ---- reduction ----

void Reducer::step(const char* rule) {
  if (trace_) trace_(rule);
  if (--fuel_ < 0)
    fail(Err::FuelExhausted, "whnf", "reduction step budget exceeded");
}

LfTerm Reducer::whnf_lf(const LfTerm& m, const ErasedCtx& ambient) {
  if (const auto* a = m.as<MApp>()) {
    LfTerm w = whnf_lf(a->fn, ambient);
    if (const auto* l = w.as<MLam>()) {
      step("lf-beta");
      return whnf_lf(single_subst(a->arg, l->x, l->body, ambient), ambient);
    }
    // Blocked application: a neutral head, or an unbox closure whose
    // computation is stuck.
    if (&w.node() == &a->fn.node()) return m;
    return LfTerm::app(w, a->arg);
  }
  if (const auto* u = m.as<MUnbox>()) {
    CompTerm w = whnf_comp(u->comp);
    if (const auto* b = w.as<CBox>()) {
      step("lf-unbox");
      return whnf_lf(lf_subst_term(u->subst, b->obj.ctx, b->obj.term), ambient);
    }
    if (is_wne_comp(w)) {
      if (&w.node() == &u->comp.node()) return m;
      return LfTerm::unbox(w, u->subst);
    }
    fail(Err::StuckTerm, "M whnf-LF N", "unboxed computation produced a non-contextual value");
  }
  return m;  // lam, var, const
}

LfSubst Reducer::whnf_subst(const LfSubst& s) {
  if (const auto* wk = s.as<SWk>()) {
    if (wk->ctx.vars.empty()) {
      if (!wk->ctx.head) {
        step("wk-empty");
        return LfSubst::empty();
      }
      return s;  // wk_psi is whnf
    }
    step("wk-unfold");
    ErasedCtx prefix = wk->ctx;
    LfVar last = prefix.vars.back();
    prefix.vars.pop_back();
    return LfSubst::snoc(LfSubst::wk(std::move(prefix)), LfTerm::var(last));
  }
  return s;  // empty and snoc are whnf
}

CompTerm Reducer::whnf_comp(const CompTerm& t) {
  if (const auto* a = t.as<CApp>()) {
    CompTerm w = whnf_comp(a->fn);
    if (const auto* f = w.as<CFn>()) {
      step("comp-beta");
      CompPayload pay = a->arg.as<CCtxVal>() ? CompPayload{a->arg.as<CCtxVal>()->ctx}
                                             : CompPayload{a->arg};
      return whnf_comp(csubst(f->body, pay, f->y));
    }
    if (is_wne_comp(w)) {
      if (&w.node() == &a->fn.node()) return t;
      return CompTerm::app(w, a->arg);
    }
    fail(Err::StuckTerm, "t whnf r", "applied a value that is not a function");
  }
  if (const auto* r = t.as<CRec>()) {
    CompTerm w = whnf_comp(r->scrut);
    if (const auto* b = w.as<CBox>()) {
      LfTerm n = whnf_lf(b->obj.term, b->obj.ctx);
      if (const auto* u = n.as<MUnbox>()) {
        // Scrutinee blocked on a neutral unbox closure; materialize the
        // neutral recursor form rec^I B Psi [Psi-hat |- t'[sigma]].
        (void)u;
        if (&n.node() == &b->obj.term.node() && &w.node() == &r->scrut.node()) return t;
        return CompTerm::rec(r->motive, *r->branches, r->ctx, CompTerm::box(CtxObj{b->obj.ctx, n}));
      }
      return branch_dispatch(r->motive, *r->branches, r->ctx, b->obj.ctx, n);
    }
    if (is_wne_comp(w)) {
      if (&w.node() == &r->scrut.node()) return t;
      return CompTerm::rec(r->motive, *r->branches, r->ctx, w);
    }
    fail(Err::StuckTerm, "rec^I B Psi t whnf v", "recursor scrutinee is not a contextual object");
  }
  return t;  // var, fn, box, ctx value
}

CompType Reducer::whnf_type(const CompType& tau) {
  if (const auto* n = tau.as<CTNeut>()) {
    CompTerm w = whnf_comp(n->t);
    if (&w.node() == &n->t.node()) return tau;
    return CompType::neut(w);
  }
  return tau;
}

namespace {

// Splits an LF whnf into a dispatchable shape.
struct Shape {
  enum Kind { Var, App, Lam, Other } kind = Other;
  LfVar var;
  LfTerm m;  // app: first argument / lam: the function argument
  LfTerm n;  // app: second argument

  Shape() : m(LfTerm::con("tm")), n(LfTerm::con("tm")) {}
};

Shape split(const LfTerm& w) {
  Shape s;
  if (const auto* v = w.as<MVar>()) {
    s.kind = Shape::Var;
    s.var = v->x;
    return s;
  }
  if (const auto* a = w.as<MApp>()) {
    if (const auto* inner = a->fn.as<MApp>()) {
      if (const auto* c = inner->fn.as<MConst>(); c && c->name == "app") {
        s.kind = Shape::App;
        s.m = inner->arg;
        s.n = a->arg;
        return s;
      }
    }
    if (const auto* c = a->fn.as<MConst>(); c && c->name == "lam") {
      s.kind = Shape::Lam;
      s.m = a->arg;
      return s;
    }
  }
  return s;
}

}  // namespace

CompTerm Reducer::branch_dispatch(const CompType& motive, const Branches& branches,
                                  const LfCtx& psi, const ErasedCtx& spine,
                                  const LfTerm& scrut_whnf) {
  Shape s = split(scrut_whnf);
  CompSubst theta;
  const CompTerm* body = nullptr;
  switch (s.kind) {
    case Shape::Var: {
      step("rec-var");
      const VarBranch& br = branches.var_br;
      theta.entries.push_back({br.psi, CompPayload{psi}});
      theta.entries.push_back({br.p, CompPayload{CompTerm::box(CtxObj{spine, scrut_whnf})}});
      body = &br.body;
      break;
    }
    case Shape::App: {
      step("rec-app");
      const AppBranch& br = branches.app_br;
      CompTerm bm = CompTerm::box(CtxObj{spine, s.m});
      CompTerm bn = CompTerm::box(CtxObj{spine, s.n});
      theta.entries.push_back({br.psi, CompPayload{psi}});
      theta.entries.push_back({br.m, CompPayload{bm}});
      theta.entries.push_back({br.n, CompPayload{bn}});
      theta.entries.push_back({br.fm, CompPayload{CompTerm::rec(motive, branches, psi, bm)}});
      theta.entries.push_back({br.fn, CompPayload{CompTerm::rec(motive, branches, psi, bn)}});
      body = &br.body;
      break;
    }
    case Shape::Lam: {
      step("rec-lam");
      const LamBranch& br = branches.lam_br;
      // Expose the body of the lam argument under a fresh LF variable.
      LfVar x = fresh_lf_var("x");
      LfTerm lam_body = [&] {
        if (const auto* l = s.m.as<MLam>()) {
          Rename r;
          r.lf.emplace(l->x.id, x);
          return rename(l->body, r);
        }
        // Non-lambda argument of Pi type: eta-expand.
        return LfTerm::app(s.m, LfTerm::var(x));
      }();
      CompTerm bm = CompTerm::box(CtxObj{spine.snoc(x), lam_body});
      LfCtx psix = psi.snoc(x, LfType::tm());
      theta.entries.push_back({br.psi, CompPayload{psi}});
      theta.entries.push_back({br.m, CompPayload{bm}});
      theta.entries.push_back({br.fm, CompPayload{CompTerm::rec(motive, branches, psix, bm)}});
      body = &br.body;
      break;
    }
    case Shape::Other:
      fail(Err::DispatchFailure, "B << (Psi)(Psi-hat |- N) whnf v",
           "scrutinee weak head normal form is not a variable, app, or lam");
  }
  return whnf_comp(csubst_partial(theta, *body));
}

LfTerm whnf_lf(const LfTerm& m, const ErasedCtx& ambient, long long fuel) {
  Reducer r(fuel);
  return r.whnf_lf(m, ambient);
}
LfSubst whnf_subst(const LfSubst& s, long long fuel) {
  Reducer r(fuel);
  return r.whnf_subst(s);
}
CompTerm whnf_comp(const CompTerm& t, long long fuel) {
  Reducer r(fuel);
  return r.whnf_comp(t);
}

}  // namespace ctt
