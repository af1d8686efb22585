#ifndef CTT_CHECK_HPP
#define CTT_CHECK_HPP

#include <cstdint>

#include "ctt/conv.hpp"
#include "ctt/recursor.hpp"
#include "ctt/syntax.hpp"
#include "ctt/whnf.hpp"

namespace ctt {

// Bidirectional typing for both layers.  A Checker owns one reduction
// budget; create one per task.
class Checker {
 public:
  struct Options {
    long long fuel = kDefaultFuel;
    TraceFn trace = nullptr;
  };

  Checker() : red_(kDefaultFuel, nullptr), conv_(red_) {}
  explicit Checker(const Options& o) : red_(o.fuel, o.trace), conv_(red_) {}

  // Universe level of a type: either exactly `least` (rigid) or any level
  // >= least (boxes and tm_ctx kind-check at every universe).
  struct Level {
    std::uint32_t least = 0;
    bool rigid = false;
  };

  // Contexts
  void check_comp_ctx(const CompCtx& g);
  void check_lf_ctx(const CompCtx& g, const LfCtx& psi);
  void schema_check(const CompCtx& g, const LfCtx& psi);  // G |- Psi : tm_ctx

  // LF layer
  LfType infer_lf(const CompCtx& g, const LfCtx& psi, const LfTerm& m);
  void check_lf(const CompCtx& g, const LfCtx& psi, const LfTerm& m, const LfType& a);
  void check_lf_param(const CompCtx& g, const LfCtx& psi, const LfTerm& m, const LfType& a);
  void check_lf_subst(const CompCtx& g, const LfCtx& to, const LfSubst& s, const LfCtx& from);
  LfKind kind_lf_type(const CompCtx& g, const LfCtx& psi, const LfType& a);
  void check_lf_kind(const CompCtx& g, const LfCtx& psi, const LfKind& k);

  // Contextual objects and types
  void check_ctx_type(const CompCtx& g, const CtxType& t);
  void check_ctx_obj(const CompCtx& g, const CtxObj& c, const CtxType& t);

  // Computations
  CompType infer_comp(const CompCtx& g, const CompTerm& t);
  void check_comp(const CompCtx& g, const CompTerm& t, const CompType& tau);
  CompType check_recursor(const CompCtx& g, const CompTerm& rec_term);

  // Type formation
  Level kind_of(const CompCtx& g, const CompType& tau);
  void check_type_at(const CompCtx& g, const CompType& tau, std::uint32_t u);

  // Computation-level substitution typing: to |- theta : from
  void check_comp_subst(const CompCtx& to, const CompSubst& theta, const CompCtx& from);

  Reducer& reducer() { return red_; }
  Conv& conv() { return conv_; }

 private:
  // from must be a prefix of to (same head and leading declarations, up to
  // type conversion).
  bool ctx_is_prefix(const CompCtx& g, const LfCtx& from, const LfCtx& to);
  void domain_check(const CompCtx& g, const CompType& dom);

  Reducer red_;
  Conv conv_;
};

}  // namespace ctt

#endif  // CTT_CHECK_HPP
