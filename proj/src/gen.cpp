#include "ctt/gen.hpp"

#include <utility>

#include "ctt/check.hpp"
#include "ctt/comp_subst.hpp"
#include "ctt/conv.hpp"
#include "ctt/lf_subst.hpp"
#include "ctt/print.hpp"
#include "ctt/whnf.hpp"

namespace ctt {

namespace {

LfCtx head_only(const CompVar& y) {
  LfCtx c;
  c.head = y;
  return c;
}

CompType boxed_tm(const LfCtx& ctx, bool param = false) {
  return CompType::box(CtxType{param, ctx, LfType::tm()});
}

Branches copy_branches();
CompType copy_motive();

// Boxes a term over psi with a fresh spine, so binder atoms never alias the
// ambient context's declaration atoms.
CompTerm box_literal(const LfCtx& psi, const LfTerm& term) {
  Rename r;
  ErasedCtx spine;
  spine.head = psi.head;
  for (const auto& d : psi.decls) {
    LfVar nx = fresh_lf_var(d.x.hint);
    r.lf.emplace(d.x.id, nx);
    spine.vars.push_back(nx);
  }
  return CompTerm::box(CtxObj{std::move(spine), rename(term, r)});
}

}  // namespace

GenEnv make_gen_env(const std::string& suffix) {
  GenEnv e;
  e.psi = fresh_comp_var("psi" + suffix);
  e.v = fresh_comp_var("v" + suffix);
  e.p = fresh_comp_var("p" + suffix);
  e.h = fresh_comp_var("h" + suffix);
  e.c = fresh_comp_var("c" + suffix);
  LfCtx psic = head_only(e.psi);
  CompVar y = fresh_comp_var("y");
  e.gamma = CompCtx{}
                .extended(e.psi, CompType::tm_ctx())
                .extended(e.v, boxed_tm(psic))
                .extended(e.p, boxed_tm(psic, /*param=*/true))
                .extended(e.h, CompType::pi(y, boxed_tm(psic), boxed_tm(psic)))
                .extended(e.c, boxed_tm(LfCtx{}));
  return e;
}

LfCtx Gen::gen_ctx(int max_decls) {
  LfCtx c;
  if (rng.coin()) c.head = env.psi;
  int n = rng.below(max_decls + 1);
  for (int i = 0; i < n; ++i) c.decls.push_back(LfCtxDecl{fresh_lf_var("x"), LfType::tm()});
  return c;
}

LfCtx Gen::gen_domain_for(const LfCtx& range) {
  switch (rng.below(3)) {
    case 0:
      return LfCtx{};  // empty domain; base is the empty substitution
    case 1: {
      // A prefix of the range (weakening applies).
      LfCtx c;
      c.head = range.head;
      std::size_t k = range.decls.empty()
                          ? 0
                          : static_cast<std::size_t>(rng.below(static_cast<int>(range.decls.size()) + 1));
      c.decls.assign(range.decls.begin(), range.decls.begin() + static_cast<std::ptrdiff_t>(k));
      return c;
    }
    default: {
      // Fresh declarations (instantiated pointwise).
      LfCtx c;
      int n = 1 + rng.below(2);
      for (int i = 0; i < n; ++i) c.decls.push_back(LfCtxDecl{fresh_lf_var("z"), LfType::tm()});
      return c;
    }
  }
}

LfTerm Gen::gen_lf(const LfCtx& psi, int depth) {
  // Leaves: a context variable, a closed constant term, or an unboxing.
  auto leaf = [&]() -> LfTerm {
    for (int tries = 0; tries < 3; ++tries) {
      switch (rng.below(4)) {
        case 0:
          if (!psi.decls.empty())
            return LfTerm::var(psi.decls[static_cast<std::size_t>(
                                             rng.below(static_cast<int>(psi.decls.size())))]
                                   .x);
          break;
        case 1:
          if (psi.head && psi.head->id == env.psi.id)
            return LfTerm::unbox(CompTerm::var(env.v), LfSubst::wk(erase(head_only(env.psi))));
          break;
        case 2:
          return LfTerm::unbox(CompTerm::var(env.c), LfSubst::empty());
        default:
          break;
      }
    }
    // lam \z. z
    LfVar z = fresh_lf_var("z");
    return LfTerm::app(LfTerm::con("lam"), LfTerm::lam(z, LfTerm::var(z)));
  };
  if (depth <= 0) return leaf();
  switch (rng.below(6)) {
    case 0: {  // app M N
      LfTerm m = gen_lf(psi, depth - 1);
      LfTerm n = gen_lf(psi, depth - 1);
      return LfTerm::app(LfTerm::app(LfTerm::con("app"), std::move(m)), std::move(n));
    }
    case 1: {  // lam \x. M
      LfVar x = fresh_lf_var("x");
      LfTerm body = gen_lf(psi.snoc(x, LfType::tm()), depth - 1);
      return LfTerm::app(LfTerm::con("lam"), LfTerm::lam(x, std::move(body)));
    }
    case 2: {  // beta redex (\x. M) N
      LfVar x = fresh_lf_var("x");
      LfTerm body = gen_lf(psi.snoc(x, LfType::tm()), depth - 1);
      LfTerm arg = gen_lf(psi, depth - 1);
      return LfTerm::app(LfTerm::lam(x, std::move(body)), std::move(arg));
    }
    case 3: {  // unbox of a boxed literal along an explicit substitution
      LfCtx inner;
      int k = 1 + rng.below(2);
      for (int i = 0; i < k; ++i) inner.decls.push_back(LfCtxDecl{fresh_lf_var("w"), LfType::tm()});
      LfTerm body = gen_lf(inner, depth - 1);
      LfSubst s = LfSubst::empty();
      for (int i = 0; i < k; ++i) s = LfSubst::snoc(std::move(s), gen_lf(psi, depth - 1));
      CompTerm boxed = box_literal(inner, body);
      if (typed)
        // Keep the unboxed computation inferable by recursing over the box.
        boxed = CompTerm::rec(copy_motive(), copy_branches(), inner, std::move(boxed));
      return LfTerm::unbox(std::move(boxed), std::move(s));
    }
    default:
      return leaf();
  }
}

LfSubst Gen::gen_subst(const LfCtx& range, const LfCtx& domain, int depth) {
  // Weakening when the domain is literally a prefix of the range.
  auto is_prefix = [&]() {
    if (domain.head.has_value() != range.head.has_value()) return false;
    if (domain.head && domain.head->id != range.head->id) return false;
    if (domain.decls.size() > range.decls.size()) return false;
    for (std::size_t i = 0; i < domain.decls.size(); ++i)
      if (domain.decls[i].x != range.decls[i].x) return false;
    return true;
  };
  if (is_prefix() && rng.coin()) return LfSubst::wk(erase(domain));
  LfSubst base = LfSubst::empty();
  if (domain.head) {
    // Only a weakening can cover a context-variable head.
    ErasedCtx ann;
    ann.head = domain.head;
    base = LfSubst::wk(std::move(ann));
  }
  for (std::size_t i = 0; i < domain.decls.size(); ++i)
    base = LfSubst::snoc(std::move(base), gen_lf(range, depth > 0 ? depth - 1 : 0));
  return base;
}

CompType Gen::gen_type(int depth) {
  switch (rng.below(depth > 0 ? 5 : 3)) {
    case 0:
      return boxed_tm(LfCtx{});
    case 1:
      return boxed_tm(head_only(env.psi));
    case 2: {
      LfCtx c = head_only(env.psi).snoc(fresh_lf_var("x"), LfType::tm());
      return boxed_tm(c);
    }
    case 3: {
      CompVar y = fresh_comp_var("y");
      return CompType::pi(y, boxed_tm(head_only(env.psi)), boxed_tm(head_only(env.psi)));
    }
    default: {
      // (g : tm_ctx) -> (y : [g |- tm]) -> [g |- tm]
      CompVar g = fresh_comp_var("g");
      CompVar y = fresh_comp_var("y");
      return CompType::pi(g, CompType::tm_ctx(),
                          CompType::pi(y, boxed_tm(head_only(g)), boxed_tm(head_only(g))));
    }
  }
}

namespace {

// copy-shaped branches for a motive whose result is [g |- tm].
Branches copy_branches() {
  CompVar gv = fresh_comp_var("g"), pv = fresh_comp_var("p");
  CompVar ga = fresh_comp_var("g"), ma = fresh_comp_var("m"), na = fresh_comp_var("n"),
          fma = fresh_comp_var("fm"), fna = fresh_comp_var("fn");
  CompVar gl = fresh_comp_var("g"), ml = fresh_comp_var("m"), fml = fresh_comp_var("fm");
  ErasedCtx gve;
  gve.head = gv;
  ErasedCtx gae;
  gae.head = ga;
  ErasedCtx gle;
  gle.head = gl;
  CompTerm var_body =
      CompTerm::box(CtxObj{gve, LfTerm::unbox(CompTerm::var(pv), LfSubst::wk(gve))});
  LfSubst ida = LfSubst::wk(gae);
  CompTerm app_body = CompTerm::box(
      CtxObj{gae, LfTerm::app(LfTerm::app(LfTerm::con("app"),
                                          LfTerm::unbox(CompTerm::var(fma), ida)),
                              LfTerm::unbox(CompTerm::var(fna), ida))});
  LfVar xb = fresh_lf_var("x");
  CompTerm lam_body = CompTerm::box(
      CtxObj{gle, LfTerm::app(LfTerm::con("lam"),
                              LfTerm::lam(xb, LfTerm::unbox(CompTerm::var(fml),
                                                            LfSubst::wk(gle.snoc(xb)))))});
  return Branches{VarBranch{gv, pv, std::move(var_body)},
                  AppBranch{ga, ma, na, fma, fna, std::move(app_body)},
                  LamBranch{gl, ml, fml, std::move(lam_body)}};
}

CompType copy_motive() {
  CompVar g = fresh_comp_var("g");
  CompVar y = fresh_comp_var("y");
  return CompType::pi(g, CompType::tm_ctx(),
                      CompType::pi(y, boxed_tm(head_only(g)), boxed_tm(head_only(g))));
}

}  // namespace

CompTerm make_copy_program() {
  CompVar psi = fresh_comp_var("psi");
  CompVar m = fresh_comp_var("m");
  return CompTerm::fn(
      psi, CompTerm::fn(m, CompTerm::rec(copy_motive(), copy_branches(), head_only(psi),
                                         CompTerm::var(m))));
}

CompType make_copy_type() { return copy_motive(); }

CompTerm Gen::gen_comp(const CompCtx& g, const CompType& tau, int depth) {
  if (const auto* pi = tau.as<CTPi>()) {
    CompVar y = fresh_comp_var(pi->y.hint.empty() ? "y" : pi->y.hint);
    CompType cod = csubst(pi->cod, CompPayload{CompTerm::var(y)}, pi->y);
    CompTerm body = gen_comp(g.extended(y, pi->dom), cod, depth > 0 ? depth - 1 : 0);
    return CompTerm::fn(y, std::move(body));
  }
  if (tau.is_tm_ctx()) return CompTerm::ctx_val(gen_ctx(2));
  const auto* bx = tau.as<CTBox>();
  if (!bx) {
    // Only boxes, functions, and contexts are generated.
    return CompTerm::var(env.c);
  }
  const LfCtx& psi = bx->boxed.ctx;
  if (bx->boxed.param) {
    if (!psi.decls.empty()) return box_literal(psi, LfTerm::var(psi.decls.back().x));
    return CompTerm::var(env.p);  // only inhabitant we know of [psi |-# tm]
  }
  auto literal = [&]() { return box_literal(psi, gen_lf(psi, depth > 0 ? depth - 1 : 0)); };
  if (depth <= 0) return literal();
  switch (rng.below(6)) {
    case 0: {  // beta redex at this type; the argument stays inferable
      CompVar y = fresh_comp_var("y");
      CompTerm body = gen_comp(g, tau, depth - 1);
      return CompTerm::app(CompTerm::fn(y, std::move(body)), CompTerm::var(env.c));
    }
    case 1: {  // box-eta expansion of an inferable inner term
      CompTerm inner = [&]() -> CompTerm {
        if (psi.head && psi.head->id == env.psi.id && psi.decls.empty() && rng.coin())
          return CompTerm::var(env.v);
        if (psi.empty_shape() && rng.coin()) return CompTerm::var(env.c);
        return CompTerm::rec(copy_motive(), copy_branches(), psi,
                             gen_comp(g, boxed_tm(psi), depth - 1));
      }();
      return box_literal(psi, LfTerm::unbox(std::move(inner), LfSubst::wk(erase(psi))));
    }
    case 2: {  // copy-shaped recursor at this context
      CompTerm scrut = gen_comp(g, boxed_tm(psi), depth - 1);
      return CompTerm::rec(copy_motive(), copy_branches(), psi, std::move(scrut));
    }
    case 3:
      if (use_fn_var && psi.head && psi.head->id == env.psi.id && psi.decls.empty())
        return CompTerm::app(CompTerm::var(env.h), gen_comp(g, tau, depth - 1));
      return literal();
    default:
      return literal();
  }
}

CompTerm Gen::gen_inferable(int depth) {
  switch (rng.below(4)) {
    case 0:
      return CompTerm::var(env.v);
    case 1:
      return CompTerm::app(CompTerm::var(env.h),
                           gen_comp(env.gamma, boxed_tm(head_only(env.psi)), depth));
    case 2: {
      LfCtx psi = gen_ctx(2);
      CompTerm scrut = gen_comp(env.gamma, boxed_tm(psi), depth);
      return CompTerm::rec(copy_motive(), copy_branches(), psi, std::move(scrut));
    }
    default:
      return CompTerm::var(env.c);
  }
}

// ---- suites ----

namespace {

template <class F>
SuiteResult run_suite(const char* name, std::uint64_t seed, int count, int max_depth, F&& body) {
  SuiteResult r;
  r.name = name;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    int depth = max_depth <= 0 ? 0 : i % (max_depth + 1);
    ++r.cases;
    std::optional<std::string> note;
    try {
      note = body(depth, rng);
    } catch (const KernelError& e) {
      note = std::string("kernel error: ") + e.what();
    }
    if (note) {
      ++r.failures;
      // Look for a smaller witness at shallower depths.
      for (int d = 0; d < depth; ++d) {
        std::optional<std::string> smaller;
        try {
          smaller = body(d, rng);
        } catch (const KernelError& e) {
          smaller = std::string("kernel error: ") + e.what();
        }
        if (smaller) {
          note = "(shrunk to depth " + std::to_string(d) + ") " + *smaller;
          break;
        }
      }
      if (r.notes.size() < 5) r.notes.push_back(*note);
    }
  }
  return r;
}

}  // namespace

SuiteResult suite_determinacy_lf(std::uint64_t seed, int count) {
  GenEnv env = make_gen_env("");
  return run_suite("determinacy-lf", seed, count, 4, [&](int depth, Rng& rng) {
    Gen gen(rng.next(), env);
    gen.typed = false;
    LfCtx psi = gen.gen_ctx(2);
    LfTerm m = gen.gen_lf(psi, depth);
    ErasedCtx amb = erase(psi);
    LfTerm w1 = whnf_lf(m, amb);
    LfTerm w2 = whnf_lf(m, amb);
    LfTerm wr = whnf_lf(refresh_binders(m), amb);
    if (!alpha_eq(w1, w2) || !alpha_eq(w1, wr))
      return std::optional<std::string>("nondeterministic whnf of " + show(m));
    return std::optional<std::string>();
  });
}

SuiteResult suite_determinacy_subst(std::uint64_t seed, int count) {
  GenEnv env = make_gen_env("");
  return run_suite("determinacy-subst", seed, count, 4, [&](int depth, Rng& rng) {
    Gen gen(rng.next(), env);
    gen.typed = false;
    LfCtx range = gen.gen_ctx(3);
    LfCtx domain = gen.gen_domain_for(range);
    LfSubst s = gen.gen_subst(range, domain, depth);
    LfSubst w1 = whnf_subst(s);
    LfSubst w2 = whnf_subst(s);
    LfSubst wr = whnf_subst(refresh_binders(s));
    if (!alpha_eq(w1, w2) || !alpha_eq(w1, wr))
      return std::optional<std::string>("nondeterministic whnf of " + show(s));
    return std::optional<std::string>();
  });
}

SuiteResult suite_determinacy_comp(std::uint64_t seed, int count) {
  GenEnv env = make_gen_env("");
  return run_suite("determinacy-comp", seed, count, 4, [&](int depth, Rng& rng) {
    Gen gen(rng.next(), env);
    gen.typed = false;
    CompType tau = gen.gen_type(depth);
    CompTerm t = gen.gen_comp(env.gamma, tau, depth);
    CompTerm w1 = whnf_comp(t);
    CompTerm w2 = whnf_comp(t);
    CompTerm wr = whnf_comp(refresh_binders(t));
    if (!alpha_eq(w1, w2) || !alpha_eq(w1, wr))
      return std::optional<std::string>("nondeterministic whnf of " + show(t));
    return std::optional<std::string>();
  });
}

SuiteResult suite_subject_reduction(std::uint64_t seed, int count) {
  GenEnv env = make_gen_env("");
  return run_suite("subject-reduction", seed, count, 6, [&](int depth, Rng& rng) {
    Gen gen(rng.next(), env);
    CompType tau = gen.gen_type(depth);
    CompTerm t = gen.gen_comp(env.gamma, tau, depth);
    Checker ck;
    ck.check_comp(env.gamma, t, tau);
    CompTerm w = ck.reducer().whnf_comp(t);
    Checker ck2;
    ck2.check_comp(env.gamma, w, tau);
    if (!conv_comp(env.gamma, t, w, tau))
      return std::optional<std::string>("whnf not convertible to the source on " + show(t));
    return std::optional<std::string>();
  });
}

SuiteResult suite_type_uniqueness(std::uint64_t seed, int count) {
  GenEnv env = make_gen_env("");
  return run_suite("type-uniqueness", seed, count, 4, [&](int depth, Rng& rng) {
    Gen gen(rng.next(), env);
    CompTerm t = gen.gen_inferable(depth);
    Checker ck1;
    CompType t1 = ck1.infer_comp(env.gamma, t);
    Checker ck2;
    CompType t2 = ck2.infer_comp(env.gamma, refresh_binders(t));
    if (!conv_comp_type(env.gamma, t1, t2))
      return std::optional<std::string>("non-unique types for " + show(t) + ": " + show(t1) +
                                        " vs " + show(t2));
    return std::optional<std::string>();
  });
}

SuiteResult suite_lf_subst_lemma(std::uint64_t seed, int count) {
  GenEnv env = make_gen_env("");
  return run_suite("lf-substitution-lemma", seed, count, 3, [&](int depth, Rng& rng) {
    Gen gen(rng.next(), env);
    LfCtx range = gen.gen_ctx(2);
    LfCtx domain = gen.gen_domain_for(range);
    LfSubst s = gen.gen_subst(range, domain, depth);
    LfTerm m = gen.gen_lf(domain, depth);
    Checker ck;
    ck.check_lf_subst(env.gamma, range, s, domain);
    ck.check_lf(env.gamma, domain, m, LfType::tm());
    LfTerm sm = lf_subst_term(s, erase(domain), m);
    ck.check_lf(env.gamma, range, sm, LfType::tm());
    return std::optional<std::string>();
  });
}

SuiteResult suite_comp_subst_lemma(std::uint64_t seed, int count) {
  GenEnv from = make_gen_env("");
  return run_suite("comp-substitution-lemma", seed, count, 3, [&](int depth, Rng& rng) {
    GenEnv to = make_gen_env("'");
    Gen gen(rng.next(), to);
    // Instantiation of `from`'s context over `to`'s.
    LfCtx psi_ctx = head_only(to.psi);
    if (gen.rng.coin()) psi_ctx = psi_ctx.snoc(fresh_lf_var("x"), LfType::tm());
    // Payloads that can be unboxed or applied must stay inferable for the
    // image of the substitution to remain in the bidirectional fragment.
    CompTerm v_pay = CompTerm::rec(copy_motive(), copy_branches(), psi_ctx,
                                   gen.gen_comp(to.gamma, boxed_tm(psi_ctx), depth));
    CompTerm p_pay = psi_ctx.decls.empty()
                         ? CompTerm::var(to.p)
                         : box_literal(psi_ctx, LfTerm::var(psi_ctx.decls.back().x));
    CompVar y = fresh_comp_var("y");
    CompTerm h_pay = CompTerm::fn(y, gen.gen_comp(to.gamma, boxed_tm(psi_ctx), depth));
    CompTerm c_pay = gen.rng.coin()
                         ? CompTerm::var(to.c)
                         : CompTerm::rec(copy_motive(), copy_branches(), LfCtx{},
                                         gen.gen_comp(to.gamma, boxed_tm(LfCtx{}), depth));
    CompSubst theta;
    theta.entries.push_back({from.psi, CompPayload{psi_ctx}});
    theta.entries.push_back({from.v, CompPayload{v_pay}});
    theta.entries.push_back({from.p, CompPayload{p_pay}});
    theta.entries.push_back({from.h, CompPayload{h_pay}});
    theta.entries.push_back({from.c, CompPayload{c_pay}});
    Checker ck;
    ck.check_comp_subst(to.gamma, theta, from.gamma);
    Gen gen_from(rng.next(), from);
    gen_from.use_fn_var = false;
    CompType tau = gen_from.gen_type(depth);
    CompTerm t = gen_from.gen_comp(from.gamma, tau, depth);
    ck.check_comp(from.gamma, t, tau);
    CompTerm ts = csubst_sim(theta, t);
    CompType taus = csubst_sim(theta, tau);
    ck.check_comp(to.gamma, ts, taus);
    return std::optional<std::string>();
  });
}

SuiteResult suite_conv_laws(std::uint64_t seed, int count) {
  GenEnv env = make_gen_env("");
  return run_suite("conversion-laws", seed, count, 3, [&](int depth, Rng& rng) {
    Gen gen(rng.next(), env);
    CompType tau = gen.gen_type(depth);
    CompTerm t1 = gen.gen_comp(env.gamma, tau, depth);
    CompVar y = fresh_comp_var("y");
    CompTerm t2 = CompTerm::app(CompTerm::fn(y, CompTerm::var(y)), t1);
    CompTerm t3 = [&]() -> CompTerm {
      if (const auto* bx = tau.as<CTBox>(); bx && !bx->boxed.param) {
        ErasedCtx e = erase(bx->boxed.ctx);
        return CompTerm::box(CtxObj{e, LfTerm::unbox(t1, LfSubst::wk(e))});
      }
      CompVar z = fresh_comp_var("z");
      return CompTerm::app(CompTerm::fn(z, CompTerm::var(z)), t2);
    }();
    bool refl = conv_comp(env.gamma, t1, t1, tau);
    bool s12 = conv_comp(env.gamma, t1, t2, tau);
    bool s21 = conv_comp(env.gamma, t2, t1, tau);
    bool s23 = conv_comp(env.gamma, t2, t3, tau);
    bool s13 = conv_comp(env.gamma, t1, t3, tau);
    if (!(refl && s12 && s21 && s23 && s13))
      return std::optional<std::string>("conversion law failed on " + show(t1));
    return std::optional<std::string>();
  });
}

SuiteResult suite_whnf_renaming(std::uint64_t seed, int count) {
  GenEnv env = make_gen_env("");
  GenEnv env2 = make_gen_env("'");
  Rename rho;
  rho.comp.emplace(env.psi.id, env2.psi);
  rho.comp.emplace(env.v.id, env2.v);
  rho.comp.emplace(env.p.id, env2.p);
  rho.comp.emplace(env.h.id, env2.h);
  rho.comp.emplace(env.c.id, env2.c);
  return run_suite("whnf-renaming", seed, count, 4, [&](int depth, Rng& rng) {
    Gen gen(rng.next(), env);
    gen.typed = false;
    CompType tau = gen.gen_type(depth);
    CompTerm t = gen.gen_comp(env.gamma, tau, depth);
    CompTerm lhs = whnf_comp(rename(t, rho));
    CompTerm rhs = rename(whnf_comp(t), rho);
    if (!alpha_eq(lhs, rhs))
      return std::optional<std::string>("whnf not stable under renaming on " + show(t));
    return std::optional<std::string>();
  });
}

SuiteResult suite_lf_whnf_subst_stability(std::uint64_t seed, int count) {
  GenEnv env = make_gen_env("");
  return run_suite("lf-whnf-substitution-stability", seed, count, 3, [&](int depth, Rng& rng) {
    Gen gen(rng.next(), env);
    gen.typed = false;
    LfCtx range = gen.gen_ctx(2);
    LfCtx domain = gen.gen_domain_for(range);
    LfSubst s = gen.gen_subst(range, domain, depth);
    LfTerm m = gen.gen_lf(domain, depth);
    ErasedCtx de = erase(domain);
    ErasedCtx re = erase(range);
    LfTerm w = whnf_lf(m, de);
    LfTerm w2 = whnf_lf(lf_subst_term(s, de, m), re);
    if (const auto* v = w.as<MVar>()) {
      LfTerm expect = whnf_lf(lf_lookup(v->x, s, de), re);
      if (!alpha_eq(w2, expect))
        return std::optional<std::string>("variable case not stable on " + show(m));
      return std::optional<std::string>();
    }
    LfTerm expect = lf_subst_term(s, de, w);
    if (!alpha_eq(w2, expect))
      return std::optional<std::string>("head not stable under substitution on " + show(m));
    return std::optional<std::string>();
  });
}

std::vector<SuiteResult> run_harness(std::uint64_t seed, int count) {
  std::vector<SuiteResult> out;
  out.push_back(suite_determinacy_lf(seed, count));
  out.push_back(suite_determinacy_subst(seed + 1, count));
  out.push_back(suite_determinacy_comp(seed + 2, count));
  out.push_back(suite_subject_reduction(seed + 3, count));
  out.push_back(suite_type_uniqueness(seed + 4, count));
  out.push_back(suite_lf_subst_lemma(seed + 5, count));
  out.push_back(suite_comp_subst_lemma(seed + 6, count));
  out.push_back(suite_conv_laws(seed + 7, count));
  out.push_back(suite_whnf_renaming(seed + 8, count));
  out.push_back(suite_lf_whnf_subst_stability(seed + 9, count));
  return out;
}

}  // namespace ctt
