#ifndef CTT_RECURSOR_HPP
#define CTT_RECURSOR_HPP

#include <optional>

#include "ctt/syntax.hpp"

namespace ctt {

// The recursor invariant must have the literal shape
//   (psi : tm_ctx) -> (y : [psi |- tm]) -> tau
struct MotiveParts {
  CompVar psi;
  CompVar y;
  CompType tau;

  MotiveParts(CompVar p, CompVar yy, CompType t)
      : psi(std::move(p)), y(std::move(yy)), tau(std::move(t)) {}
};

std::optional<MotiveParts> motive_parts(const CompType& motive);

// Context extension and expected body type for each recursor branch, per
// the recursor typing rules.
struct BranchEnv {
  CompCtx ctx;
  CompType expected;
};

BranchEnv var_branch_env(const CompCtx& g, const MotiveParts& mp, const VarBranch& br);
BranchEnv app_branch_env(const CompCtx& g, const MotiveParts& mp, const AppBranch& br);
BranchEnv lam_branch_env(const CompCtx& g, const MotiveParts& mp, const LamBranch& br);

// {Psi/psi, t/y} tau — the type of the whole recursor application.
CompType rec_result_type(const MotiveParts& mp, const LfCtx& psi, const CompTerm& scrut);

}  // namespace ctt

#endif  // CTT_RECURSOR_HPP
