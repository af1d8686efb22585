#ifndef CTT_GEN_HPP
#define CTT_GEN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctt/syntax.hpp"

namespace ctt {

// Deterministic generator of small well-typed objects for the metatheory
// suites (determinacy, subject reduction, uniqueness, substitution lemmas,
// conversion laws).

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed + 0x9E3779B97F4A7C15ull) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool coin() { return (next() & 1) != 0; }
};

// A standing computation context with one inhabitant of each interesting
// shape: a context variable, a boxed term, a parameter, a function, and a
// closed boxed term.
struct GenEnv {
  CompCtx gamma;
  CompVar psi, v, p, h, c;

  GenEnv() : gamma(), psi(), v(), p(), h(), c() {}
};

GenEnv make_gen_env(const std::string& suffix);

struct Gen {
  Rng rng;
  GenEnv env;
  // When set, generated terms stay typable by the bidirectional checker
  // (unboxed computations are kept inferable).
  bool typed = true;
  // Allow applications of the environment's function variable.
  bool use_fn_var = true;

  Gen(std::uint64_t seed, const GenEnv& e) : rng(seed), env(e) {}

  LfCtx gen_ctx(int max_decls);
  LfCtx gen_domain_for(const LfCtx& range);
  LfTerm gen_lf(const LfCtx& psi, int depth);
  LfSubst gen_subst(const LfCtx& range, const LfCtx& domain, int depth);
  CompType gen_type(int depth);
  CompTerm gen_comp(const CompCtx& g, const CompType& tau, int depth);
  CompTerm gen_inferable(int depth);
};

// The copy program from the examples: fn psi => fn m => rec^I (...) psi m
// with I = (g:tm_ctx) -> (y:[g |- tm]) -> [g |- tm].
CompTerm make_copy_program();
CompType make_copy_type();

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> notes;
};

SuiteResult suite_determinacy_lf(std::uint64_t seed, int count);
SuiteResult suite_determinacy_subst(std::uint64_t seed, int count);
SuiteResult suite_determinacy_comp(std::uint64_t seed, int count);
SuiteResult suite_subject_reduction(std::uint64_t seed, int count);
SuiteResult suite_type_uniqueness(std::uint64_t seed, int count);
SuiteResult suite_lf_subst_lemma(std::uint64_t seed, int count);
SuiteResult suite_comp_subst_lemma(std::uint64_t seed, int count);
SuiteResult suite_conv_laws(std::uint64_t seed, int count);
SuiteResult suite_whnf_renaming(std::uint64_t seed, int count);
SuiteResult suite_lf_whnf_subst_stability(std::uint64_t seed, int count);

std::vector<SuiteResult> run_harness(std::uint64_t seed, int count);

}  // namespace ctt

#endif  // CTT_GEN_HPP
