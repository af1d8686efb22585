#ifndef CTT_WHNF_HPP
#define CTT_WHNF_HPP

#include <functional>
#include <string>

#include "ctt/syntax.hpp"

namespace ctt {

inline constexpr long long kDefaultFuel = 1'000'000;

// Weak head normal / weak head neutral classification, following the
// normal-form figures exactly.
enum class WhnfClass { Whnf, Wne, Reducible };

bool is_wne_lf(const LfTerm& m);
bool is_whnf_lf(const LfTerm& m);
bool is_whnf_subst(const LfSubst& s);
bool is_wne_comp(const CompTerm& t);
bool is_whnf_comp(const CompTerm& t);

WhnfClass classify_lf(const LfTerm& m);
WhnfClass classify_subst(const LfSubst& s);
WhnfClass classify_comp(const CompTerm& t);

using TraceFn = std::function<void(const std::string&)>;

// Deterministic weak head reduction.  Each Reducer owns its step budget;
// the budget can only be exceeded on ill-typed inputs.
class Reducer {
 public:
  explicit Reducer(long long fuel = kDefaultFuel, TraceFn trace = nullptr)
      : fuel_(fuel), trace_(std::move(trace)) {}

  // ambient is the erased LF context the term lives in; it resurrects the
  // domains of the single substitutions produced by beta steps.
  LfTerm whnf_lf(const LfTerm& m, const ErasedCtx& ambient);
  LfSubst whnf_subst(const LfSubst& s);
  CompTerm whnf_comp(const CompTerm& t);
  CompType whnf_type(const CompType& tau);

  // Branch selection on a weak-head-neutral LF scrutinee (a variable, an
  // app spine, or a lam spine), per the reduction figure.
  CompTerm branch_dispatch(const CompType& motive, const Branches& branches, const LfCtx& psi,
                           const ErasedCtx& spine, const LfTerm& scrut_whnf);

  long long fuel_left() const { return fuel_; }

 private:
  void step(const char* rule);

  long long fuel_;
  TraceFn trace_;
};

// Convenience wrappers that run with a fresh default budget.
LfTerm whnf_lf(const LfTerm& m, const ErasedCtx& ambient, long long fuel = kDefaultFuel);
LfSubst whnf_subst(const LfSubst& s, long long fuel = kDefaultFuel);
CompTerm whnf_comp(const CompTerm& t, long long fuel = kDefaultFuel);

}  // namespace ctt

#endif  // CTT_WHNF_HPP
