#include "ctt/recursor.hpp"

#include "ctt/comp_subst.hpp"
#include "ctt/lf_subst.hpp"

namespace ctt {

namespace {

LfCtx head_only_ctx(const CompVar& psi) {
  LfCtx c;
  c.head = psi;
  return c;
}

ErasedCtx head_only_erased(const CompVar& psi) {
  ErasedCtx c;
  c.head = psi;
  return c;
}

bool is_plain_tm(const LfType& a) {
  const auto* at = a.as<TAtom>();
  return at && at->head == "tm" && at->args.empty();
}

CompType boxed_tm(const LfCtx& ctx, bool param) {
  return CompType::box(CtxType{param, ctx, LfType::tm()});
}

CompSubst two_entries(const CompVar& psi, CompPayload pctx, const CompVar& y, CompTerm t) {
  CompSubst th;
  th.entries.push_back({psi, std::move(pctx)});
  th.entries.push_back({y, CompPayload{std::move(t)}});
  return th;
}

}  // namespace

std::optional<MotiveParts> motive_parts(const CompType& motive) {
  const auto* p1 = motive.as<CTPi>();
  if (!p1 || !p1->dom.is_tm_ctx()) return std::nullopt;
  const auto* p2 = p1->cod.as<CTPi>();
  if (!p2) return std::nullopt;
  const auto* box = p2->dom.as<CTBox>();
  if (!box || box->boxed.param) return std::nullopt;
  const LfCtx& c = box->boxed.ctx;
  if (!c.head || c.head->id != p1->y.id || !c.decls.empty()) return std::nullopt;
  if (!is_plain_tm(box->boxed.ty)) return std::nullopt;
  return MotiveParts(p1->y, p2->y, p1->cod.as<CTPi>()->cod);
}

BranchEnv var_branch_env(const CompCtx& g, const MotiveParts& mp, const VarBranch& br) {
  LfCtx psic = head_only_ctx(br.psi);
  CompCtx ctx = g.extended(br.psi, CompType::tm_ctx())
                    .extended(br.p, boxed_tm(psic, /*param=*/true));
  CompType expected =
      csubst_partial(two_entries(mp.psi, CompPayload{psic}, mp.y, CompTerm::var(br.p)), mp.tau);
  return BranchEnv{std::move(ctx), std::move(expected)};
}

BranchEnv app_branch_env(const CompCtx& g, const MotiveParts& mp, const AppBranch& br) {
  LfCtx psic = head_only_ctx(br.psi);
  ErasedCtx psie = head_only_erased(br.psi);
  CompType boxed = boxed_tm(psic, /*param=*/false);
  CompType fm_ty =
      csubst_partial(two_entries(mp.psi, CompPayload{psic}, mp.y, CompTerm::var(br.m)), mp.tau);
  CompType fn_ty =
      csubst_partial(two_entries(mp.psi, CompPayload{psic}, mp.y, CompTerm::var(br.n)), mp.tau);
  CompCtx ctx = g.extended(br.psi, CompType::tm_ctx())
                    .extended(br.m, boxed)
                    .extended(br.n, boxed)
                    .extended(br.fm, fm_ty)
                    .extended(br.fn, fn_ty);
  LfSubst id = LfSubst::wk(psie);
  LfTerm app_tm = LfTerm::app(LfTerm::app(LfTerm::con("app"), LfTerm::unbox(CompTerm::var(br.m), id)),
                              LfTerm::unbox(CompTerm::var(br.n), id));
  CompTerm scrutinee = CompTerm::box(CtxObj{psie, std::move(app_tm)});
  CompType expected =
      csubst_partial(two_entries(mp.psi, CompPayload{psic}, mp.y, std::move(scrutinee)), mp.tau);
  return BranchEnv{std::move(ctx), std::move(expected)};
}

BranchEnv lam_branch_env(const CompCtx& g, const MotiveParts& mp, const LamBranch& br) {
  LfCtx psic = head_only_ctx(br.psi);
  ErasedCtx psie = head_only_erased(br.psi);
  LfVar x = fresh_lf_var("x");
  LfCtx psix = psic.snoc(x, LfType::tm());
  CompType m_ty = boxed_tm(psix, /*param=*/false);
  CompType fm_ty =
      csubst_partial(two_entries(mp.psi, CompPayload{psix}, mp.y, CompTerm::var(br.m)), mp.tau);
  CompCtx ctx = g.extended(br.psi, CompType::tm_ctx())
                    .extended(br.m, m_ty)
                    .extended(br.fm, fm_ty);
  LfVar xb = fresh_lf_var("x");
  LfTerm lam_tm = LfTerm::app(
      LfTerm::con("lam"),
      LfTerm::lam(xb, LfTerm::unbox(CompTerm::var(br.m), LfSubst::wk(psie.snoc(xb)))));
  CompTerm scrutinee = CompTerm::box(CtxObj{psie, std::move(lam_tm)});
  CompType expected =
      csubst_partial(two_entries(mp.psi, CompPayload{psic}, mp.y, std::move(scrutinee)), mp.tau);
  return BranchEnv{std::move(ctx), std::move(expected)};
}

CompType rec_result_type(const MotiveParts& mp, const LfCtx& psi, const CompTerm& scrut) {
  return csubst_partial(two_entries(mp.psi, CompPayload{psi}, mp.y, scrut), mp.tau);
}

}  // namespace ctt
