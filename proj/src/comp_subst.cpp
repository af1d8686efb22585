#include "ctt/comp_subst.hpp"

#include <unordered_set>

namespace ctt {

namespace {

struct CS {
  const CompSubst& theta;
  bool total;
  std::unordered_set<std::uint64_t> bound;

  const CompPayload* find(const CompVar& y) {
    if (bound.count(y.id)) return nullptr;
    return theta.lookup(y);
  }
  bool is_bound(const CompVar& y) const { return bound.count(y.id) != 0; }
  void miss(const CompVar& y) const {
    if (total)
      fail(Err::UnboundCompVar, "G' |- theta : G",
           "no instantiation for computation variable " + y.hint);
  }
};

CompTerm cs_term(const CompTerm& t, CS& cs);
CompType cs_type(const CompType& tau, CS& cs);
LfTerm cs_lf(const LfTerm& m, CS& cs);
LfType cs_lftype(const LfType& a, CS& cs);
LfKind cs_lfkind(const LfKind& k, CS& cs);
LfSubst cs_subst(const LfSubst& s, CS& cs);
LfCtx cs_ctx(const LfCtx& c, CS& cs);
ErasedCtx cs_erased(const ErasedCtx& c, CS& cs);
CtxObj cs_obj(const CtxObj& c, CS& cs);
CtxType cs_ctxtype(const CtxType& t, CS& cs);

CompTerm cs_var(const CompVar& y, CS& cs) {
  if (const CompPayload* p = cs.find(y)) {
    if (const auto* t = std::get_if<CompTerm>(p)) return *t;
    return CompTerm::ctx_val(std::get<LfCtx>(*p));
  }
  if (!cs.is_bound(y)) cs.miss(y);
  return CompTerm::var(y);
}

LfCtx cs_ctx(const LfCtx& c, CS& cs) {
  LfCtx out;
  if (c.head) {
    const CompVar& h = *c.head;
    const CompPayload* p = cs.find(h);
    if (p) {
      if (const auto* pc = std::get_if<LfCtx>(p)) {
        out.head = pc->head;
        out.decls = pc->decls;
      } else {
        const CompTerm& pt = std::get<CompTerm>(*p);
        if (const auto* v = pt.as<CVarT>()) {
          out.head = v->y;
        } else if (const auto* cv = pt.as<CCtxVal>()) {
          out.head = cv->ctx.head;
          out.decls = cv->ctx.decls;
        } else {
          fail(Err::IllScoped, "{t/y}Psi",
               "context variable " + h.hint + " instantiated with a non-context");
        }
      }
    } else {
      if (!cs.is_bound(h)) cs.miss(h);
      out.head = h;
    }
  }
  for (const auto& d : c.decls) out.decls.push_back(LfCtxDecl{d.x, cs_lftype(d.ty, cs)});
  return out;
}

ErasedCtx cs_erased(const ErasedCtx& c, CS& cs) {
  ErasedCtx out;
  if (c.head) {
    const CompVar& h = *c.head;
    const CompPayload* p = cs.find(h);
    if (p) {
      if (const auto* pc = std::get_if<LfCtx>(p)) {
        ErasedCtx e = erase(*pc);
        out.head = e.head;
        out.vars = e.vars;
      } else {
        const CompTerm& pt = std::get<CompTerm>(*p);
        if (const auto* v = pt.as<CVarT>()) {
          out.head = v->y;
        } else if (const auto* cv = pt.as<CCtxVal>()) {
          ErasedCtx e = erase(cv->ctx);
          out.head = e.head;
          out.vars = e.vars;
        } else {
          fail(Err::IllScoped, "{t/y}Psi-hat",
               "context variable " + h.hint + " instantiated with a non-context");
        }
      }
    } else {
      if (!cs.is_bound(h)) cs.miss(h);
      out.head = h;
    }
  }
  for (const auto& v : c.vars) out.vars.push_back(v);
  return out;
}

LfTerm cs_lf(const LfTerm& m, CS& cs) {
  if (const auto* l = m.as<MLam>()) return LfTerm::lam(l->x, cs_lf(l->body, cs));
  if (m.as<MVar>() || m.as<MConst>()) return m;
  if (const auto* a = m.as<MApp>()) return LfTerm::app(cs_lf(a->fn, cs), cs_lf(a->arg, cs));
  const auto& u = *m.as<MUnbox>();
  return LfTerm::unbox(cs_term(u.comp, cs), cs_subst(u.subst, cs));
}

LfType cs_lftype(const LfType& a, CS& cs) {
  if (const auto* at = a.as<TAtom>()) {
    std::vector<LfTerm> args;
    args.reserve(at->args.size());
    for (const auto& arg : at->args) args.push_back(cs_lf(arg, cs));
    return LfType::atom(at->head, std::move(args));
  }
  const auto& p = *a.as<TPi>();
  return LfType::pi(p.x, cs_lftype(p.dom, cs), cs_lftype(p.cod, cs));
}

LfKind cs_lfkind(const LfKind& k, CS& cs) {
  if (k.as<KType>()) return k;
  const auto& p = *k.as<KPi>();
  return LfKind::pi(p.x, cs_lftype(p.dom, cs), cs_lfkind(p.body, cs));
}

LfSubst cs_subst(const LfSubst& s, CS& cs) {
  if (s.as<SEmpty>()) return s;
  if (const auto* w = s.as<SWk>()) return LfSubst::wk(cs_erased(w->ctx, cs));
  const auto& sn = *s.as<SSnoc>();
  LfSubst tail = cs_subst(sn.tail, cs);
  return LfSubst::snoc(std::move(tail), cs_lf(sn.term, cs));
}

CtxObj cs_obj(const CtxObj& c, CS& cs) { return CtxObj{cs_erased(c.ctx, cs), cs_lf(c.term, cs)}; }

CtxType cs_ctxtype(const CtxType& t, CS& cs) {
  return CtxType{t.param, cs_ctx(t.ctx, cs), cs_lftype(t.ty, cs)};
}

CompType cs_type(const CompType& tau, CS& cs) {
  if (tau.as<CTUniv>() || tau.as<CTTmCtx>()) return tau;
  if (const auto* b = tau.as<CTBox>()) return CompType::box(cs_ctxtype(b->boxed, cs));
  if (const auto* p = tau.as<CTPi>()) {
    CompType dom = cs_type(p->dom, cs);
    cs.bound.insert(p->y.id);
    return CompType::pi(p->y, std::move(dom), cs_type(p->cod, cs));
  }
  return CompType::neut(cs_term(tau.as<CTNeut>()->t, cs));
}

CompTerm cs_term(const CompTerm& t, CS& cs) {
  if (const auto* v = t.as<CVarT>()) return cs_var(v->y, cs);
  if (const auto* f = t.as<CFn>()) {
    cs.bound.insert(f->y.id);
    return CompTerm::fn(f->y, cs_term(f->body, cs));
  }
  if (const auto* a = t.as<CApp>()) return CompTerm::app(cs_term(a->fn, cs), cs_term(a->arg, cs));
  if (const auto* b = t.as<CBox>()) return CompTerm::box(cs_obj(b->obj, cs));
  if (const auto* c = t.as<CCtxVal>()) return CompTerm::ctx_val(cs_ctx(c->ctx, cs));
  const auto& r = *t.as<CRec>();
  CompType motive = cs_type(r.motive, cs);
  LfCtx ctx = cs_ctx(r.ctx, cs);
  CompTerm scrut = cs_term(r.scrut, cs);
  const Branches& br = *r.branches;
  Branches out = br;
  cs.bound.insert(br.var_br.psi.id);
  cs.bound.insert(br.var_br.p.id);
  out.var_br.body = cs_term(br.var_br.body, cs);
  cs.bound.insert(br.app_br.psi.id);
  cs.bound.insert(br.app_br.m.id);
  cs.bound.insert(br.app_br.n.id);
  cs.bound.insert(br.app_br.fm.id);
  cs.bound.insert(br.app_br.fn.id);
  out.app_br.body = cs_term(br.app_br.body, cs);
  cs.bound.insert(br.lam_br.psi.id);
  cs.bound.insert(br.lam_br.m.id);
  cs.bound.insert(br.lam_br.fm.id);
  out.lam_br.body = cs_term(br.lam_br.body, cs);
  return CompTerm::rec(std::move(motive), std::move(out), std::move(ctx), std::move(scrut));
}

CompSubst singleton(const CompPayload& p, const CompVar& y) {
  CompSubst th;
  th.entries.push_back(CompSubstEntry{y, p});
  return th;
}

}  // namespace

#define CTT_CSUBST(T, FN)                                         \
  T csubst(const T& node, const CompPayload& p, const CompVar& y) { \
    CompSubst th = singleton(p, y);                                 \
    CS cs{th, false, {}};                                           \
    return FN(node, cs);                                            \
  }
CTT_CSUBST(CompTerm, cs_term)
CTT_CSUBST(CompType, cs_type)
CTT_CSUBST(LfTerm, cs_lf)
CTT_CSUBST(LfType, cs_lftype)
CTT_CSUBST(LfSubst, cs_subst)
CTT_CSUBST(LfCtx, cs_ctx)
CTT_CSUBST(ErasedCtx, cs_erased)
CTT_CSUBST(CtxObj, cs_obj)
CTT_CSUBST(CtxType, cs_ctxtype)
#undef CTT_CSUBST

#define CTT_CSUBST_SIM(T, FN)                          \
  T csubst_sim(const CompSubst& theta, const T& node) {  \
    CS cs{theta, true, {}};                              \
    return FN(node, cs);                                 \
  }
CTT_CSUBST_SIM(CompTerm, cs_term)
CTT_CSUBST_SIM(CompType, cs_type)
CTT_CSUBST_SIM(LfTerm, cs_lf)
CTT_CSUBST_SIM(LfType, cs_lftype)
CTT_CSUBST_SIM(LfCtx, cs_ctx)
CTT_CSUBST_SIM(CtxObj, cs_obj)
CTT_CSUBST_SIM(CtxType, cs_ctxtype)
#undef CTT_CSUBST_SIM

CompTerm csubst_partial(const CompSubst& theta, const CompTerm& t) {
  CS cs{theta, false, {}};
  return cs_term(t, cs);
}
CompType csubst_partial(const CompSubst& theta, const CompType& tau) {
  CS cs{theta, false, {}};
  return cs_type(tau, cs);
}

CompSubst identity_subst(const CompCtx& g) {
  CompSubst th;
  th.entries.reserve(g.decls.size());
  for (const auto& d : g.decls)
    th.entries.push_back(CompSubstEntry{d.y, CompTerm::var(d.y)});
  return th;
}

}  // namespace ctt
