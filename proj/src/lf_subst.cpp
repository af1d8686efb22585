#include "ctt/lf_subst.hpp"

namespace ctt {

namespace {

bool same_head(const ErasedCtx& a, const ErasedCtx& b) {
  if (a.head.has_value() != b.head.has_value()) return false;
  return !a.head || a.head->id == b.head->id;
}

// The domain is threaded as (ctx, n) where only the first n spine entries
// are still live; this walks snoc-by-snoc without copying vectors.
bool domain_equals(const ErasedCtx& dom, std::size_t n, const ErasedCtx& target) {
  if (!same_head(dom, target)) return false;
  if (target.vars.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (dom.vars[i] != target.vars[i]) return false;
  return true;
}

LfTerm lookup_impl(const LfVar& x, const LfSubst& sigma, const ErasedCtx& dom, std::size_t n) {
  if (const auto* sn = sigma.as<SSnoc>()) {
    if (n == 0)
      fail(Err::LookupFailure, "lookup x [sigma / Psi-hat]",
           "substitution longer than its domain while looking up " + x.hint);
    const LfVar& y = dom.vars[n - 1];
    if (y == x) return sn->term;
    return lookup_impl(x, sn->tail, dom, n - 1);
  }
  if (const auto* wk = sigma.as<SWk>()) {
    // The annotation names the range prefix the domain weakens into; the
    // resurrected domain corresponds to it positionally.
    if (wk->ctx.head.has_value() == dom.head.has_value() && wk->ctx.vars.size() == n) {
      for (std::size_t i = 0; i < n; ++i)
        if (dom.vars[i] == x) return LfTerm::var(wk->ctx.vars[i]);
    }
    fail(Err::LookupFailure, "lookup x [sigma / Psi-hat]",
         "variable " + x.hint + " not covered by weakening substitution");
  }
  fail(Err::LookupFailure, "lookup x [sigma / Psi-hat]",
       "no instantiation for LF variable " + x.hint);
}

LfSubst trunc_impl(const ErasedCtx& target, const LfSubst& sigma, const ErasedCtx& dom,
                   std::size_t n) {
  if (domain_equals(dom, n, target)) return sigma;
  if (const auto* sn = sigma.as<SSnoc>()) {
    if (n == 0)
      fail(Err::TruncFailure, "trunc_Psi (sigma / Phi-hat)",
           "substitution longer than its domain");
    return trunc_impl(target, sn->tail, dom, n - 1);
  }
  if (const auto* wk = sigma.as<SWk>()) {
    // The target is a prefix of the domain; keep the positionally
    // corresponding prefix of the annotation.
    if (same_head(target, dom) && wk->ctx.vars.size() == n &&
        target.vars.size() <= n) {
      bool prefix = true;
      for (std::size_t i = 0; i < target.vars.size(); ++i)
        if (target.vars[i] != dom.vars[i]) {
          prefix = false;
          break;
        }
      if (prefix) {
        ErasedCtx kept;
        kept.head = wk->ctx.head;
        kept.vars.assign(wk->ctx.vars.begin(),
                         wk->ctx.vars.begin() + static_cast<std::ptrdiff_t>(target.vars.size()));
        return LfSubst::wk(std::move(kept));
      }
    }
    fail(Err::TruncFailure, "trunc_Psi (sigma / Phi-hat)",
         "truncation target is not a prefix of the weakening domain");
  }
  fail(Err::TruncFailure, "trunc_Psi (sigma / Phi-hat)",
       "empty substitution truncated at a non-empty target");
}

}  // namespace

bool erased_prefix(const ErasedCtx& target, const ErasedCtx& ctx) {
  if (!same_head(target, ctx)) return false;
  if (target.vars.size() > ctx.vars.size()) return false;
  for (std::size_t i = 0; i < target.vars.size(); ++i)
    if (target.vars[i] != ctx.vars[i]) return false;
  return true;
}

LfTerm lf_lookup(const LfVar& x, const LfSubst& sigma, const ErasedCtx& domain) {
  return lookup_impl(x, sigma, domain, domain.vars.size());
}

LfSubst trunc(const ErasedCtx& target, const LfSubst& sigma, const ErasedCtx& domain) {
  return trunc_impl(target, sigma, domain, domain.vars.size());
}

LfTerm lf_subst_term(const LfSubst& sigma, const ErasedCtx& domain, const LfTerm& m) {
  if (const auto* l = m.as<MLam>()) {
    // [sigma, x / Psi-hat, x] under the binder; x cannot occur in sigma.
    LfSubst ext = LfSubst::snoc(sigma, LfTerm::var(l->x));
    return LfTerm::lam(l->x, lf_subst_term(ext, domain.snoc(l->x), l->body));
  }
  if (const auto* a = m.as<MApp>())
    return LfTerm::app(lf_subst_term(sigma, domain, a->fn), lf_subst_term(sigma, domain, a->arg));
  if (const auto* u = m.as<MUnbox>())
    return LfTerm::unbox(u->comp, lf_subst_subst(sigma, domain, u->subst));
  if (const auto* v = m.as<MVar>()) return lf_lookup(v->x, sigma, domain);
  return m;  // constant
}

LfType lf_subst_type(const LfSubst& sigma, const ErasedCtx& domain, const LfType& a) {
  if (const auto* at = a.as<TAtom>()) {
    std::vector<LfTerm> args;
    args.reserve(at->args.size());
    for (const auto& arg : at->args) args.push_back(lf_subst_term(sigma, domain, arg));
    return LfType::atom(at->head, std::move(args));
  }
  const auto& p = *a.as<TPi>();
  LfType dom = lf_subst_type(sigma, domain, p.dom);
  LfSubst ext = LfSubst::snoc(sigma, LfTerm::var(p.x));
  return LfType::pi(p.x, std::move(dom), lf_subst_type(ext, domain.snoc(p.x), p.cod));
}

LfKind lf_subst_kind(const LfSubst& sigma, const ErasedCtx& domain, const LfKind& k) {
  if (k.as<KType>()) return k;
  const auto& p = *k.as<KPi>();
  LfType dom = lf_subst_type(sigma, domain, p.dom);
  LfSubst ext = LfSubst::snoc(sigma, LfTerm::var(p.x));
  return LfKind::pi(p.x, std::move(dom), lf_subst_kind(ext, domain.snoc(p.x), p.body));
}

LfSubst lf_subst_subst(const LfSubst& sigma, const ErasedCtx& domain, const LfSubst& inner) {
  if (inner.as<SEmpty>()) return inner;
  if (const auto* wk = inner.as<SWk>()) return trunc(wk->ctx, sigma, domain);
  const auto& sn = *inner.as<SSnoc>();
  LfSubst tail = lf_subst_subst(sigma, domain, sn.tail);
  return LfSubst::snoc(std::move(tail), lf_subst_term(sigma, domain, sn.term));
}

LfTerm single_subst(const LfTerm& n, const LfVar& x, const LfTerm& m, const ErasedCtx& ambient) {
  return lf_subst_term(LfSubst::snoc(LfSubst::wk(ambient), n), ambient.snoc(x), m);
}

LfType single_subst_type(const LfTerm& n, const LfVar& x, const LfType& b,
                         const ErasedCtx& ambient) {
  return lf_subst_type(LfSubst::snoc(LfSubst::wk(ambient), n), ambient.snoc(x), b);
}

LfKind single_subst_kind(const LfTerm& n, const LfVar& x, const LfKind& k,
                         const ErasedCtx& ambient) {
  return lf_subst_kind(LfSubst::snoc(LfSubst::wk(ambient), n), ambient.snoc(x), k);
}

LfSubst id_subst(const LfCtx& ctx) { return LfSubst::wk(erase(ctx)); }
LfSubst id_subst(const ErasedCtx& ctx) { return LfSubst::wk(ctx); }

}  // namespace ctt
