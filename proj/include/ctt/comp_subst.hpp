#ifndef CTT_COMP_SUBST_HPP
#define CTT_COMP_SUBST_HPP

#include "ctt/syntax.hpp"

namespace ctt {

// Computation-level substitution {t/y} and its simultaneous form {theta}.
// Payloads for tm_ctx-typed variables are LF contexts; instantiating a
// context-variable head splices the payload's declarations in front.

CompTerm csubst(const CompTerm& t, const CompPayload& p, const CompVar& y);
CompType csubst(const CompType& tau, const CompPayload& p, const CompVar& y);
LfTerm csubst(const LfTerm& m, const CompPayload& p, const CompVar& y);
LfType csubst(const LfType& a, const CompPayload& p, const CompVar& y);
LfSubst csubst(const LfSubst& s, const CompPayload& p, const CompVar& y);
LfCtx csubst(const LfCtx& c, const CompPayload& p, const CompVar& y);
ErasedCtx csubst(const ErasedCtx& c, const CompPayload& p, const CompVar& y);
CtxObj csubst(const CtxObj& c, const CompPayload& p, const CompVar& y);
CtxType csubst(const CtxType& t, const CompPayload& p, const CompVar& y);

// Simultaneous substitution; every free computation variable of the node
// must be covered by theta (UnboundCompVar otherwise).
CompTerm csubst_sim(const CompSubst& theta, const CompTerm& t);
CompType csubst_sim(const CompSubst& theta, const CompType& tau);
LfTerm csubst_sim(const CompSubst& theta, const LfTerm& m);
LfType csubst_sim(const CompSubst& theta, const LfType& a);
LfCtx csubst_sim(const CompSubst& theta, const LfCtx& c);
CtxObj csubst_sim(const CompSubst& theta, const CtxObj& c);
CtxType csubst_sim(const CompSubst& theta, const CtxType& t);

// Partial simultaneous substitution: variables missing from theta are left
// untouched.  Recursor dispatch and branch instantiation use this form.
CompTerm csubst_partial(const CompSubst& theta, const CompTerm& t);
CompType csubst_partial(const CompSubst& theta, const CompType& tau);

// Identity substitution of a computation context (y/y for every entry).
CompSubst identity_subst(const CompCtx& g);

}  // namespace ctt

#endif  // CTT_COMP_SUBST_HPP
