#include "ctt/syntax.hpp"

#include <utility>

namespace ctt {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotFound: return "NotFound";
    case Err::IllScoped: return "IllScoped";
    case Err::UnboundLfVar: return "UnboundLfVar";
    case Err::UnboundCompVar: return "UnboundCompVar";
    case Err::UnknownCtxVar: return "UnknownCtxVar";
    case Err::UnknownName: return "UnknownName";
    case Err::DuplicateName: return "DuplicateName";
    case Err::LookupFailure: return "LookupFailure";
    case Err::TruncFailure: return "TruncFailure";
    case Err::FuelExhausted: return "FuelExhausted";
    case Err::StuckTerm: return "StuckTerm";
    case Err::DispatchFailure: return "DispatchFailure";
    case Err::IllKinded: return "IllKinded";
    case Err::IllKindedDecl: return "IllKindedDecl";
    case Err::SchemaViolation: return "SchemaViolation";
    case Err::NotAFunction: return "NotAFunction";
    case Err::DomainMismatch: return "DomainMismatch";
    case Err::UnboxNotBox: return "UnboxNotBox";
    case Err::NotAParameter: return "NotAParameter";
    case Err::NotAPrefix: return "NotAPrefix";
    case Err::EntryTypeMismatch: return "EntryTypeMismatch";
    case Err::CtxMismatch: return "CtxMismatch";
    case Err::UniverseError: return "UniverseError";
    case Err::BadInvariantShape: return "BadInvariantShape";
    case Err::NotNeutral: return "NotNeutral";
    case Err::NotInferable: return "NotInferable";
    case Err::TypeMismatch: return "TypeMismatch";
    case Err::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

bool err_is_internal(Err e) {
  switch (e) {
    case Err::LookupFailure:
    case Err::TruncFailure:
    case Err::FuelExhausted:
    case Err::StuckTerm:
    case Err::DispatchFailure:
      return true;
    default:
      return false;
  }
}

// ---- signature ----

namespace sig {

bool is_type_family(const std::string& name) { return name == "tm"; }
bool is_constant(const std::string& name) { return name == "lam" || name == "app"; }

const LfKind& family_kind(const std::string& name) {
  static const LfKind tm_kind = LfKind::type();
  if (name == "tm") return tm_kind;
  fail(Err::UnknownName, "a:K in Sigma", "unknown LF type family: " + name);
}

const LfType& constant_type(const std::string& name) {
  // lam : Pi y:(Pi x:tm. tm). tm
  static const LfType lam_ty = [] {
    LfVar x = fresh_lf_var("x");
    LfVar y = fresh_lf_var("y");
    return LfType::pi(y, LfType::pi(x, LfType::tm(), LfType::tm()), LfType::tm());
  }();
  // app : Pi x:tm. Pi y:tm. tm
  static const LfType app_ty = [] {
    LfVar x = fresh_lf_var("x");
    LfVar y = fresh_lf_var("y");
    return LfType::pi(x, LfType::tm(), LfType::pi(y, LfType::tm(), LfType::tm()));
  }();
  if (name == "lam") return lam_ty;
  if (name == "app") return app_ty;
  fail(Err::UnknownName, "c:A in Sigma", "unknown LF constant: " + name);
}

}  // namespace sig

// ---- erasure and lookup ----

ErasedCtx erase(const LfCtx& ctx) {
  ErasedCtx out;
  out.head = ctx.head;
  out.vars.reserve(ctx.decls.size());
  for (const auto& d : ctx.decls) out.vars.push_back(d.x);
  return out;
}

const LfType* ctx_lookup(const LfCtx& ctx, const LfVar& x) {
  for (auto it = ctx.decls.rbegin(); it != ctx.decls.rend(); ++it)
    if (it->x == x) return &it->ty;
  return nullptr;
}

const LfType& ctx_lookup_or_fail(const LfCtx& ctx, const LfVar& x) {
  if (const LfType* t = ctx_lookup(ctx, x)) return *t;
  fail(Err::NotFound, "Psi(x) = A", "LF variable not in context: " + x.hint);
}

// ---- alpha equivalence ----

namespace {

struct AEnv {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> lf;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> comp;

  bool lf_eq(const LfVar& a, const LfVar& b) const {
    for (auto it = lf.rbegin(); it != lf.rend(); ++it)
      if (it->first == a.id || it->second == b.id) return it->first == a.id && it->second == b.id;
    return a.id == b.id;
  }
  bool comp_eq(const CompVar& a, const CompVar& b) const {
    for (auto it = comp.rbegin(); it != comp.rend(); ++it)
      if (it->first == a.id || it->second == b.id) return it->first == a.id && it->second == b.id;
    return a.id == b.id;
  }
};

bool aeq(const LfKind& a, const LfKind& b, AEnv& env);
bool aeq(const LfType& a, const LfType& b, AEnv& env);
bool aeq(const LfTerm& a, const LfTerm& b, AEnv& env);
bool aeq(const LfSubst& a, const LfSubst& b, AEnv& env);
bool aeq(const LfCtx& a, const LfCtx& b, AEnv& env);
bool aeq(const ErasedCtx& a, const ErasedCtx& b, AEnv& env);
bool aeq(const CtxType& a, const CtxType& b, AEnv& env);
bool aeq(const CtxObj& a, const CtxObj& b, AEnv& env);
bool aeq(const CompType& a, const CompType& b, AEnv& env);
bool aeq(const CompTerm& a, const CompTerm& b, AEnv& env);

bool aeq(const LfKind& a, const LfKind& b, AEnv& env) {
  if (a.as<KType>() && b.as<KType>()) return true;
  const auto* pa = a.as<KPi>();
  const auto* pb = b.as<KPi>();
  if (!pa || !pb) return false;
  if (!aeq(pa->dom, pb->dom, env)) return false;
  env.lf.emplace_back(pa->x.id, pb->x.id);
  bool ok = aeq(pa->body, pb->body, env);
  env.lf.pop_back();
  return ok;
}

bool aeq(const LfType& a, const LfType& b, AEnv& env) {
  if (const auto* aa = a.as<TAtom>()) {
    const auto* ab = b.as<TAtom>();
    if (!ab || aa->head != ab->head || aa->args.size() != ab->args.size()) return false;
    for (std::size_t i = 0; i < aa->args.size(); ++i)
      if (!aeq(aa->args[i], ab->args[i], env)) return false;
    return true;
  }
  const auto* pa = a.as<TPi>();
  const auto* pb = b.as<TPi>();
  if (!pa || !pb) return false;
  if (!aeq(pa->dom, pb->dom, env)) return false;
  env.lf.emplace_back(pa->x.id, pb->x.id);
  bool ok = aeq(pa->cod, pb->cod, env);
  env.lf.pop_back();
  return ok;
}

bool aeq(const LfTerm& a, const LfTerm& b, AEnv& env) {
  if (&a.node() == &b.node() && env.lf.empty() && env.comp.empty()) return true;
  if (const auto* la = a.as<MLam>()) {
    const auto* lb = b.as<MLam>();
    if (!lb) return false;
    env.lf.emplace_back(la->x.id, lb->x.id);
    bool ok = aeq(la->body, lb->body, env);
    env.lf.pop_back();
    return ok;
  }
  if (const auto* va = a.as<MVar>()) {
    const auto* vb = b.as<MVar>();
    return vb && env.lf_eq(va->x, vb->x);
  }
  if (const auto* ca = a.as<MConst>()) {
    const auto* cb = b.as<MConst>();
    return cb && ca->name == cb->name;
  }
  if (const auto* aa = a.as<MApp>()) {
    const auto* ab = b.as<MApp>();
    return ab && aeq(aa->fn, ab->fn, env) && aeq(aa->arg, ab->arg, env);
  }
  const auto* ua = a.as<MUnbox>();
  const auto* ub = b.as<MUnbox>();
  return ua && ub && aeq(ua->comp, ub->comp, env) && aeq(ua->subst, ub->subst, env);
}

bool aeq(const LfSubst& a, const LfSubst& b, AEnv& env) {
  if (a.as<SEmpty>() && b.as<SEmpty>()) return true;
  if (const auto* wa = a.as<SWk>()) {
    const auto* wb = b.as<SWk>();
    return wb && aeq(wa->ctx, wb->ctx, env);
  }
  const auto* sa = a.as<SSnoc>();
  const auto* sb = b.as<SSnoc>();
  return sa && sb && aeq(sa->tail, sb->tail, env) && aeq(sa->term, sb->term, env);
}

bool aeq(const LfCtx& a, const LfCtx& b, AEnv& env) {
  if (a.head.has_value() != b.head.has_value()) return false;
  if (a.head && !env.comp_eq(*a.head, *b.head)) return false;
  if (a.decls.size() != b.decls.size()) return false;
  std::size_t pushed = 0;
  bool ok = true;
  for (std::size_t i = 0; i < a.decls.size() && ok; ++i) {
    ok = aeq(a.decls[i].ty, b.decls[i].ty, env);
    env.lf.emplace_back(a.decls[i].x.id, b.decls[i].x.id);
    ++pushed;
  }
  while (pushed--) env.lf.pop_back();
  return ok;
}

bool aeq(const ErasedCtx& a, const ErasedCtx& b, AEnv& env) {
  // Erased contexts reference ambient variables; entries are compared as
  // references, not binders.
  if (a.head.has_value() != b.head.has_value()) return false;
  if (a.head && !env.comp_eq(*a.head, *b.head)) return false;
  if (a.vars.size() != b.vars.size()) return false;
  for (std::size_t i = 0; i < a.vars.size(); ++i)
    if (!env.lf_eq(a.vars[i], b.vars[i])) return false;
  return true;
}

bool aeq(const CtxType& a, const CtxType& b, AEnv& env) {
  if (a.param != b.param) return false;
  if (a.ctx.head.has_value() != b.ctx.head.has_value()) return false;
  if (a.ctx.head && !env.comp_eq(*a.ctx.head, *b.ctx.head)) return false;
  if (a.ctx.decls.size() != b.ctx.decls.size()) return false;
  std::size_t pushed = 0;
  bool ok = true;
  for (std::size_t i = 0; i < a.ctx.decls.size() && ok; ++i) {
    ok = aeq(a.ctx.decls[i].ty, b.ctx.decls[i].ty, env);
    env.lf.emplace_back(a.ctx.decls[i].x.id, b.ctx.decls[i].x.id);
    ++pushed;
  }
  ok = ok && aeq(a.ty, b.ty, env);
  while (pushed--) env.lf.pop_back();
  return ok;
}

bool aeq(const CtxObj& a, const CtxObj& b, AEnv& env) {
  // The spine binds the term's LF variables.
  if (a.ctx.head.has_value() != b.ctx.head.has_value()) return false;
  if (a.ctx.head && !env.comp_eq(*a.ctx.head, *b.ctx.head)) return false;
  if (a.ctx.vars.size() != b.ctx.vars.size()) return false;
  for (std::size_t i = 0; i < a.ctx.vars.size(); ++i)
    env.lf.emplace_back(a.ctx.vars[i].id, b.ctx.vars[i].id);
  bool ok = aeq(a.term, b.term, env);
  for (std::size_t i = 0; i < a.ctx.vars.size(); ++i) env.lf.pop_back();
  return ok;
}

bool aeq(const CompType& a, const CompType& b, AEnv& env) {
  if (const auto* ua = a.as<CTUniv>()) {
    const auto* ub = b.as<CTUniv>();
    return ub && ua->level == ub->level;
  }
  if (const auto* ba = a.as<CTBox>()) {
    const auto* bb = b.as<CTBox>();
    return bb && aeq(ba->boxed, bb->boxed, env);
  }
  if (const auto* pa = a.as<CTPi>()) {
    const auto* pb = b.as<CTPi>();
    if (!pb || !aeq(pa->dom, pb->dom, env)) return false;
    env.comp.emplace_back(pa->y.id, pb->y.id);
    bool ok = aeq(pa->cod, pb->cod, env);
    env.comp.pop_back();
    return ok;
  }
  if (a.as<CTTmCtx>()) return b.as<CTTmCtx>() != nullptr;
  const auto* na = a.as<CTNeut>();
  const auto* nb = b.as<CTNeut>();
  return na && nb && aeq(na->t, nb->t, env);
}

bool aeq(const CompTerm& a, const CompTerm& b, AEnv& env) {
  if (&a.node() == &b.node() && env.lf.empty() && env.comp.empty()) return true;
  // A head-only context value is the variable itself (the application
  // overloading identifies them).
  auto head_only_var = [](const CompTerm& t) -> const CompVar* {
    if (const auto* c = t.as<CCtxVal>(); c && c->ctx.head && c->ctx.decls.empty())
      return &*c->ctx.head;
    return nullptr;
  };
  if (const auto* va = a.as<CVarT>())
    if (const CompVar* hb = head_only_var(b)) return env.comp_eq(va->y, *hb);
  if (const auto* vb = b.as<CVarT>())
    if (const CompVar* ha = head_only_var(a)) return env.comp_eq(*ha, vb->y);
  if (const auto* va = a.as<CVarT>()) {
    const auto* vb = b.as<CVarT>();
    return vb && env.comp_eq(va->y, vb->y);
  }
  if (const auto* fa = a.as<CFn>()) {
    const auto* fb = b.as<CFn>();
    if (!fb) return false;
    env.comp.emplace_back(fa->y.id, fb->y.id);
    bool ok = aeq(fa->body, fb->body, env);
    env.comp.pop_back();
    return ok;
  }
  if (const auto* aa = a.as<CApp>()) {
    const auto* ab = b.as<CApp>();
    return ab && aeq(aa->fn, ab->fn, env) && aeq(aa->arg, ab->arg, env);
  }
  if (const auto* ba = a.as<CBox>()) {
    const auto* bb = b.as<CBox>();
    return bb && aeq(ba->obj, bb->obj, env);
  }
  if (const auto* ca = a.as<CCtxVal>()) {
    const auto* cb = b.as<CCtxVal>();
    return cb && aeq(ca->ctx, cb->ctx, env);
  }
  const auto* ra = a.as<CRec>();
  const auto* rb = b.as<CRec>();
  if (!ra || !rb) return false;
  if (!aeq(ra->motive, rb->motive, env)) return false;
  if (!aeq(ra->ctx, rb->ctx, env)) return false;
  if (!aeq(ra->scrut, rb->scrut, env)) return false;
  const Branches& x = *ra->branches;
  const Branches& y = *rb->branches;
  {
    env.comp.emplace_back(x.var_br.psi.id, y.var_br.psi.id);
    env.comp.emplace_back(x.var_br.p.id, y.var_br.p.id);
    bool ok = aeq(x.var_br.body, y.var_br.body, env);
    env.comp.pop_back();
    env.comp.pop_back();
    if (!ok) return false;
  }
  {
    env.comp.emplace_back(x.app_br.psi.id, y.app_br.psi.id);
    env.comp.emplace_back(x.app_br.m.id, y.app_br.m.id);
    env.comp.emplace_back(x.app_br.n.id, y.app_br.n.id);
    env.comp.emplace_back(x.app_br.fm.id, y.app_br.fm.id);
    env.comp.emplace_back(x.app_br.fn.id, y.app_br.fn.id);
    bool ok = aeq(x.app_br.body, y.app_br.body, env);
    for (int i = 0; i < 5; ++i) env.comp.pop_back();
    if (!ok) return false;
  }
  {
    env.comp.emplace_back(x.lam_br.psi.id, y.lam_br.psi.id);
    env.comp.emplace_back(x.lam_br.m.id, y.lam_br.m.id);
    env.comp.emplace_back(x.lam_br.fm.id, y.lam_br.fm.id);
    bool ok = aeq(x.lam_br.body, y.lam_br.body, env);
    for (int i = 0; i < 3; ++i) env.comp.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

#define CTT_AEQ(T)                        \
  bool alpha_eq(const T& a, const T& b) {   \
    AEnv env;                               \
    return aeq(a, b, env);                  \
  }
CTT_AEQ(LfKind)
CTT_AEQ(LfType)
CTT_AEQ(LfTerm)
CTT_AEQ(LfSubst)
CTT_AEQ(LfCtx)
CTT_AEQ(ErasedCtx)
CTT_AEQ(CtxType)
CTT_AEQ(CtxObj)
CTT_AEQ(CompType)
CTT_AEQ(CompTerm)
#undef CTT_AEQ

// ---- renaming ----
//
// rename rewrites free occurrences only: a binder that rebinds a mapped
// atom shadows it for the subtree, and binder slots are never rewritten.

namespace {

Rename without_lf(const Rename& r, const LfVar& x) {
  Rename out = r;
  out.lf.erase(x.id);
  return out;
}
Rename without_comp(const Rename& r, const CompVar& y) {
  Rename out = r;
  out.comp.erase(y.id);
  return out;
}
bool maps_lf(const Rename& r, const LfVar& x) { return r.lf.count(x.id) != 0; }
bool maps_comp(const Rename& r, const CompVar& y) { return r.comp.count(y.id) != 0; }

// Context declarations bind the remainder of the context and whatever the
// caller scopes them over; the residual map is returned through `r`.
LfCtx rename_ctx_open(const LfCtx& c, Rename& r) {
  LfCtx out;
  if (c.head) out.head = r.apply(*c.head);
  for (const auto& d : c.decls) {
    out.decls.push_back(LfCtxDecl{d.x, rename(d.ty, r)});
    if (maps_lf(r, d.x)) r.lf.erase(d.x.id);
  }
  return out;
}

}  // namespace

LfKind rename(const LfKind& k, const Rename& r) {
  if (k.as<KType>()) return k;
  const auto& p = *k.as<KPi>();
  LfType dom = rename(p.dom, r);
  if (maps_lf(r, p.x)) return LfKind::pi(p.x, std::move(dom), rename(p.body, without_lf(r, p.x)));
  return LfKind::pi(p.x, std::move(dom), rename(p.body, r));
}

LfType rename(const LfType& a, const Rename& r) {
  if (const auto* at = a.as<TAtom>()) {
    std::vector<LfTerm> args;
    args.reserve(at->args.size());
    for (const auto& m : at->args) args.push_back(rename(m, r));
    return LfType::atom(at->head, std::move(args));
  }
  const auto& p = *a.as<TPi>();
  LfType dom = rename(p.dom, r);
  if (maps_lf(r, p.x)) return LfType::pi(p.x, std::move(dom), rename(p.cod, without_lf(r, p.x)));
  return LfType::pi(p.x, std::move(dom), rename(p.cod, r));
}

LfTerm rename(const LfTerm& m, const Rename& r) {
  if (const auto* l = m.as<MLam>()) {
    if (maps_lf(r, l->x)) return LfTerm::lam(l->x, rename(l->body, without_lf(r, l->x)));
    return LfTerm::lam(l->x, rename(l->body, r));
  }
  if (const auto* v = m.as<MVar>()) return LfTerm::var(r.apply(v->x));
  if (m.as<MConst>()) return m;
  if (const auto* a = m.as<MApp>()) return LfTerm::app(rename(a->fn, r), rename(a->arg, r));
  const auto& u = *m.as<MUnbox>();
  return LfTerm::unbox(rename(u.comp, r), rename(u.subst, r));
}

LfSubst rename(const LfSubst& s, const Rename& r) {
  if (s.as<SEmpty>()) return s;
  if (const auto* w = s.as<SWk>()) return LfSubst::wk(rename(w->ctx, r));
  const auto& sn = *s.as<SSnoc>();
  return LfSubst::snoc(rename(sn.tail, r), rename(sn.term, r));
}

LfCtx rename(const LfCtx& c, const Rename& r) {
  Rename scoped = r;
  return rename_ctx_open(c, scoped);
}

ErasedCtx rename(const ErasedCtx& c, const Rename& r) {
  ErasedCtx out;
  if (c.head) out.head = r.apply(*c.head);
  out.vars.reserve(c.vars.size());
  for (const auto& v : c.vars) out.vars.push_back(r.apply(v));
  return out;
}

CtxType rename(const CtxType& t, const Rename& r) {
  Rename scoped = r;
  LfCtx ctx = rename_ctx_open(t.ctx, scoped);
  return CtxType{t.param, std::move(ctx), rename(t.ty, scoped)};
}

CtxObj rename(const CtxObj& c, const Rename& r) {
  // The spine binds the term's LF variables.
  Rename scoped = r;
  ErasedCtx spine;
  if (c.ctx.head) spine.head = scoped.apply(*c.ctx.head);
  for (const auto& x : c.ctx.vars) {
    spine.vars.push_back(x);
    if (maps_lf(scoped, x)) scoped.lf.erase(x.id);
  }
  return CtxObj{std::move(spine), rename(c.term, scoped)};
}

CompType rename(const CompType& t, const Rename& r) {
  if (t.as<CTUniv>() || t.as<CTTmCtx>()) return t;
  if (const auto* b = t.as<CTBox>()) return CompType::box(rename(b->boxed, r));
  if (const auto* p = t.as<CTPi>()) {
    CompType dom = rename(p->dom, r);
    if (maps_comp(r, p->y))
      return CompType::pi(p->y, std::move(dom), rename(p->cod, without_comp(r, p->y)));
    return CompType::pi(p->y, std::move(dom), rename(p->cod, r));
  }
  return CompType::neut(rename(t.as<CTNeut>()->t, r));
}

CompTerm rename(const CompTerm& t, const Rename& r) {
  if (const auto* v = t.as<CVarT>()) return CompTerm::var(r.apply(v->y));
  if (const auto* f = t.as<CFn>()) {
    if (maps_comp(r, f->y)) return CompTerm::fn(f->y, rename(f->body, without_comp(r, f->y)));
    return CompTerm::fn(f->y, rename(f->body, r));
  }
  if (const auto* a = t.as<CApp>()) return CompTerm::app(rename(a->fn, r), rename(a->arg, r));
  if (const auto* b = t.as<CBox>()) return CompTerm::box(rename(b->obj, r));
  if (const auto* c = t.as<CCtxVal>()) return CompTerm::ctx_val(rename(c->ctx, r));
  const auto& rc = *t.as<CRec>();
  const Branches& br = *rc.branches;
  auto scoped_body = [&](const CompTerm& body, std::initializer_list<const CompVar*> binders) {
    Rename scoped = r;
    for (const CompVar* y : binders) scoped.comp.erase(y->id);
    return rename(body, scoped);
  };
  Branches out{
      VarBranch{br.var_br.psi, br.var_br.p,
                scoped_body(br.var_br.body, {&br.var_br.psi, &br.var_br.p})},
      AppBranch{br.app_br.psi, br.app_br.m, br.app_br.n, br.app_br.fm, br.app_br.fn,
                scoped_body(br.app_br.body, {&br.app_br.psi, &br.app_br.m, &br.app_br.n,
                                             &br.app_br.fm, &br.app_br.fn})},
      LamBranch{br.lam_br.psi, br.lam_br.m, br.lam_br.fm,
                scoped_body(br.lam_br.body, {&br.lam_br.psi, &br.lam_br.m, &br.lam_br.fm})}};
  return CompTerm::rec(rename(rc.motive, r), std::move(out), rename(rc.ctx, r),
                       rename(rc.scrut, r));
}

// ---- refreshing ----

namespace {

LfVar fresh_like(const LfVar& x) { return fresh_lf_var(x.hint); }
CompVar fresh_like(const CompVar& y) { return fresh_comp_var(y.hint); }

// Binder scopes shadow and restore map entries, so an atom bound at two
// sites (possible in values built by substitution) refreshes correctly.
struct RefreshState {
  Rename r;
  std::vector<std::pair<std::uint64_t, std::optional<LfVar>>> lf_trail;
  std::vector<std::pair<std::uint64_t, std::optional<CompVar>>> comp_trail;

  std::size_t lf_mark() const { return lf_trail.size(); }
  std::size_t comp_mark() const { return comp_trail.size(); }

  LfVar bind(const LfVar& x) {
    LfVar nx = fresh_like(x);
    auto it = r.lf.find(x.id);
    lf_trail.emplace_back(x.id, it == r.lf.end() ? std::nullopt : std::optional<LfVar>(it->second));
    r.lf.insert_or_assign(x.id, nx);
    return nx;
  }
  CompVar bind(const CompVar& y) {
    CompVar ny = fresh_like(y);
    auto it = r.comp.find(y.id);
    comp_trail.emplace_back(y.id,
                            it == r.comp.end() ? std::nullopt : std::optional<CompVar>(it->second));
    r.comp.insert_or_assign(y.id, ny);
    return ny;
  }
  void rollback_lf(std::size_t mark) {
    while (lf_trail.size() > mark) {
      auto [id, old] = lf_trail.back();
      lf_trail.pop_back();
      if (old)
        r.lf.insert_or_assign(id, *old);
      else
        r.lf.erase(id);
    }
  }
  void rollback_comp(std::size_t mark) {
    while (comp_trail.size() > mark) {
      auto [id, old] = comp_trail.back();
      comp_trail.pop_back();
      if (old)
        r.comp.insert_or_assign(id, *old);
      else
        r.comp.erase(id);
    }
  }
};

LfTerm refresh_lf(const LfTerm& m, RefreshState& st);
LfType refresh_lf_type(const LfType& a, RefreshState& st);
LfSubst refresh_subst(const LfSubst& s, RefreshState& st);
CompTerm refresh_comp(const CompTerm& t, RefreshState& st);
CompType refresh_comp_type(const CompType& t, RefreshState& st);
// Declarations stay bound after the call; the caller rolls back to its mark.
LfCtx refresh_ctx_open(const LfCtx& c, RefreshState& st);

LfType refresh_lf_type(const LfType& a, RefreshState& st) {
  if (const auto* at = a.as<TAtom>()) {
    std::vector<LfTerm> args;
    args.reserve(at->args.size());
    for (const auto& m : at->args) args.push_back(refresh_lf(m, st));
    return LfType::atom(at->head, std::move(args));
  }
  const auto& p = *a.as<TPi>();
  LfType dom = refresh_lf_type(p.dom, st);
  std::size_t mark = st.lf_mark();
  LfVar nx = st.bind(p.x);
  LfType cod = refresh_lf_type(p.cod, st);
  st.rollback_lf(mark);
  return LfType::pi(nx, std::move(dom), std::move(cod));
}

LfTerm refresh_lf(const LfTerm& m, RefreshState& st) {
  if (const auto* l = m.as<MLam>()) {
    std::size_t mark = st.lf_mark();
    LfVar nx = st.bind(l->x);
    LfTerm body = refresh_lf(l->body, st);
    st.rollback_lf(mark);
    return LfTerm::lam(nx, std::move(body));
  }
  if (const auto* v = m.as<MVar>()) return LfTerm::var(st.r.apply(v->x));
  if (m.as<MConst>()) return m;
  if (const auto* a = m.as<MApp>()) {
    LfTerm fn = refresh_lf(a->fn, st);
    return LfTerm::app(std::move(fn), refresh_lf(a->arg, st));
  }
  const auto& u = *m.as<MUnbox>();
  CompTerm c = refresh_comp(u.comp, st);
  return LfTerm::unbox(std::move(c), refresh_subst(u.subst, st));
}

LfSubst refresh_subst(const LfSubst& s, RefreshState& st) {
  if (s.as<SEmpty>()) return s;
  if (const auto* w = s.as<SWk>()) return LfSubst::wk(rename(w->ctx, st.r));
  const auto& sn = *s.as<SSnoc>();
  LfSubst tail = refresh_subst(sn.tail, st);
  return LfSubst::snoc(std::move(tail), refresh_lf(sn.term, st));
}

LfCtx refresh_ctx_open(const LfCtx& c, RefreshState& st) {
  LfCtx out;
  if (c.head) out.head = st.r.apply(*c.head);
  for (const auto& d : c.decls) {
    LfType ty = refresh_lf_type(d.ty, st);
    out.decls.push_back(LfCtxDecl{st.bind(d.x), std::move(ty)});
  }
  return out;
}

CompType refresh_comp_type(const CompType& t, RefreshState& st) {
  if (t.as<CTUniv>() || t.as<CTTmCtx>()) return t;
  if (const auto* b = t.as<CTBox>()) {
    std::size_t mark = st.lf_mark();
    LfCtx ctx = refresh_ctx_open(b->boxed.ctx, st);
    LfType ty = refresh_lf_type(b->boxed.ty, st);
    st.rollback_lf(mark);
    return CompType::box(CtxType{b->boxed.param, std::move(ctx), std::move(ty)});
  }
  if (const auto* p = t.as<CTPi>()) {
    CompType dom = refresh_comp_type(p->dom, st);
    std::size_t mark = st.comp_mark();
    CompVar ny = st.bind(p->y);
    CompType cod = refresh_comp_type(p->cod, st);
    st.rollback_comp(mark);
    return CompType::pi(ny, std::move(dom), std::move(cod));
  }
  return CompType::neut(refresh_comp(t.as<CTNeut>()->t, st));
}

CompTerm refresh_comp(const CompTerm& t, RefreshState& st) {
  if (const auto* v = t.as<CVarT>()) return CompTerm::var(st.r.apply(v->y));
  if (const auto* f = t.as<CFn>()) {
    std::size_t mark = st.comp_mark();
    CompVar ny = st.bind(f->y);
    CompTerm body = refresh_comp(f->body, st);
    st.rollback_comp(mark);
    return CompTerm::fn(ny, std::move(body));
  }
  if (const auto* a = t.as<CApp>()) {
    CompTerm fn = refresh_comp(a->fn, st);
    return CompTerm::app(std::move(fn), refresh_comp(a->arg, st));
  }
  if (const auto* b = t.as<CBox>()) {
    // The spine binds the boxed term's LF variables.
    std::size_t mark = st.lf_mark();
    ErasedCtx spine;
    if (b->obj.ctx.head) spine.head = st.r.apply(*b->obj.ctx.head);
    for (const auto& x : b->obj.ctx.vars) spine.vars.push_back(st.bind(x));
    LfTerm body = refresh_lf(b->obj.term, st);
    st.rollback_lf(mark);
    return CompTerm::box(CtxObj{std::move(spine), std::move(body)});
  }
  if (const auto* c = t.as<CCtxVal>()) {
    std::size_t mark = st.lf_mark();
    LfCtx ctx = refresh_ctx_open(c->ctx, st);
    st.rollback_lf(mark);
    return CompTerm::ctx_val(std::move(ctx));
  }
  const auto& rc = *t.as<CRec>();
  CompType motive = refresh_comp_type(rc.motive, st);
  std::size_t cmark = st.lf_mark();
  LfCtx ctx = refresh_ctx_open(rc.ctx, st);
  st.rollback_lf(cmark);
  CompTerm scrut = refresh_comp(rc.scrut, st);
  const Branches& br = *rc.branches;
  Branches out = br;
  {
    std::size_t mark = st.comp_mark();
    CompVar psi = st.bind(br.var_br.psi);
    CompVar p = st.bind(br.var_br.p);
    out.var_br = VarBranch{psi, p, refresh_comp(br.var_br.body, st)};
    st.rollback_comp(mark);
  }
  {
    std::size_t mark = st.comp_mark();
    CompVar psi = st.bind(br.app_br.psi);
    CompVar m = st.bind(br.app_br.m);
    CompVar n = st.bind(br.app_br.n);
    CompVar fm = st.bind(br.app_br.fm);
    CompVar fn = st.bind(br.app_br.fn);
    out.app_br = AppBranch{psi, m, n, fm, fn, refresh_comp(br.app_br.body, st)};
    st.rollback_comp(mark);
  }
  {
    std::size_t mark = st.comp_mark();
    CompVar psi = st.bind(br.lam_br.psi);
    CompVar m = st.bind(br.lam_br.m);
    CompVar fm = st.bind(br.lam_br.fm);
    out.lam_br = LamBranch{psi, m, fm, refresh_comp(br.lam_br.body, st)};
    st.rollback_comp(mark);
  }
  return CompTerm::rec(std::move(motive), std::move(out), std::move(ctx), std::move(scrut));
}

}  // namespace

LfTerm refresh_binders(const LfTerm& m) {
  RefreshState st;
  return refresh_lf(m, st);
}
CompTerm refresh_binders(const CompTerm& t) {
  RefreshState st;
  return refresh_comp(t, st);
}
LfSubst refresh_binders(const LfSubst& s) {
  RefreshState st;
  return refresh_subst(s, st);
}

}  // namespace ctt
