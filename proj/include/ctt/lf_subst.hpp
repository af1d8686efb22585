#ifndef CTT_LF_SUBST_HPP
#define CTT_LF_SUBST_HPP

#include "ctt/syntax.hpp"

namespace ctt {

// Simultaneous LF substitution [sigma / Psi-hat]_.  Substitutions do not
// store their domain; every application resurrects it from the erased
// context passed alongside.

LfTerm lf_subst_term(const LfSubst& sigma, const ErasedCtx& domain, const LfTerm& m);
LfType lf_subst_type(const LfSubst& sigma, const ErasedCtx& domain, const LfType& a);
LfKind lf_subst_kind(const LfSubst& sigma, const ErasedCtx& domain, const LfKind& k);
LfSubst lf_subst_subst(const LfSubst& sigma, const ErasedCtx& domain, const LfSubst& inner);

// lookup x [sigma / Psi-hat]; fails with LookupFailure when the shapes are
// incompatible or x has no instantiation.
LfTerm lf_lookup(const LfVar& x, const LfSubst& sigma, const ErasedCtx& domain);

// trunc_target (sigma / domain): drop the instantiations for the suffix of
// domain that lies beyond target.
LfSubst trunc(const ErasedCtx& target, const LfSubst& sigma, const ErasedCtx& domain);

// [n/x]m in the ambient (erased) context; the special case
// [wk_ambient, n / ambient, x] of the simultaneous operation.
LfTerm single_subst(const LfTerm& n, const LfVar& x, const LfTerm& m, const ErasedCtx& ambient);
LfType single_subst_type(const LfTerm& n, const LfVar& x, const LfType& b, const ErasedCtx& ambient);
LfKind single_subst_kind(const LfTerm& n, const LfVar& x, const LfKind& k, const ErasedCtx& ambient);

// Identity substitution wk_{erase(ctx)}.
LfSubst id_subst(const LfCtx& ctx);
LfSubst id_subst(const ErasedCtx& ctx);

// target is a prefix of ctx (same head, leading declarations).
bool erased_prefix(const ErasedCtx& target, const ErasedCtx& ctx);

}  // namespace ctt

#endif  // CTT_LF_SUBST_HPP
