#ifndef CTT_CONV_HPP
#define CTT_CONV_HPP

#include <optional>

#include "ctt/recursor.hpp"
#include "ctt/syntax.hpp"
#include "ctt/whnf.hpp"

namespace ctt {

// Algorithmic, type-directed definitional equality based on weak head
// reduction, with eta at LF Pi types and at boxed contextual types.
class Conv {
 public:
  explicit Conv(Reducer& red) : red_(red) {}

  bool comp(const CompCtx& g, const CompTerm& t1, const CompTerm& t2, const CompType& tau);
  bool comp_type(const CompCtx& g, const CompType& t1, const CompType& t2);
  bool lf(const CompCtx& g, const LfCtx& psi, const LfTerm& m1, const LfTerm& m2,
          const LfType& a);
  bool lf_type(const CompCtx& g, const LfCtx& psi, const LfType& a1, const LfType& a2);
  bool lf_kind(const CompCtx& g, const LfCtx& psi, const LfKind& k1, const LfKind& k2);
  bool subst(const CompCtx& g, const LfCtx& range, const LfSubst& s1, const LfSubst& s2,
             const LfCtx& domain);
  bool ctx(const CompCtx& g, const LfCtx& c1, const LfCtx& c2);

  // Structural comparison of weak-head-neutral computations; on success
  // returns the inferred common type.
  std::optional<CompType> neutral(const CompCtx& g, const CompTerm& n1, const CompTerm& n2);

 private:
  bool atomic_lf(const CompCtx& g, const LfCtx& psi, const LfTerm& w1, const LfTerm& w2);
  std::optional<LfType> lf_spine_head_type(const CompCtx& g, const LfCtx& psi, const LfTerm& h1,
                                           const LfTerm& h2);
  bool ctx_impl(const CompCtx& g, const LfCtx& c1, const LfCtx& c2, Rename& into1);

  Reducer& red_;
};

// Type inference for neutral computations; NotNeutral on other inputs.
CompType typeof_neutral(const CompCtx& g, const CompTerm& t, Reducer& red);

// Convenience wrappers running with a fresh budget.
bool conv_comp(const CompCtx& g, const CompTerm& t1, const CompTerm& t2, const CompType& tau,
               long long fuel = kDefaultFuel);
bool conv_comp_type(const CompCtx& g, const CompType& t1, const CompType& t2,
                    long long fuel = kDefaultFuel);
bool conv_lf(const CompCtx& g, const LfCtx& psi, const LfTerm& m1, const LfTerm& m2,
             const LfType& a, long long fuel = kDefaultFuel);
bool conv_lf_type(const CompCtx& g, const LfCtx& psi, const LfType& a1, const LfType& a2,
                  long long fuel = kDefaultFuel);
bool conv_subst(const CompCtx& g, const LfCtx& range, const LfSubst& s1, const LfSubst& s2,
                const LfCtx& domain, long long fuel = kDefaultFuel);
bool conv_ctx(const CompCtx& g, const LfCtx& c1, const LfCtx& c2, long long fuel = kDefaultFuel);

}  // namespace ctt

#endif  // CTT_CONV_HPP
