#ifndef CTT_SYNTAX_HPP
#define CTT_SYNTAX_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ctt/errors.hpp"
#include "ctt/names.hpp"

namespace ctt {

// Immutable shared syntax trees for the two layers.  Binder variables carry
// globally unique ids, so substitution never captures and weakening is a
// no-op on terms; display hints are kept for printing only.

class LfKind;
class LfType;
class LfTerm;
class LfSubst;
class CompType;
class CompTerm;

struct LfKindNode;
struct LfTypeNode;
struct LfTermNode;
struct LfSubstNode;
struct CompTypeNode;
struct CompTermNode;

class LfKind {
 public:
  explicit LfKind(std::shared_ptr<const LfKindNode> p) : p_(std::move(p)) {}
  const LfKindNode& node() const;
  template <class T>
  const T* as() const;

  static LfKind type();
  static LfKind pi(LfVar x, LfType dom, LfKind body);

 private:
  std::shared_ptr<const LfKindNode> p_;
};

class LfType {
 public:
  explicit LfType(std::shared_ptr<const LfTypeNode> p) : p_(std::move(p)) {}
  const LfTypeNode& node() const;
  template <class T>
  const T* as() const;

  static LfType atom(std::string head, std::vector<LfTerm> args);
  static LfType tm();
  static LfType pi(LfVar x, LfType dom, LfType cod);

 private:
  std::shared_ptr<const LfTypeNode> p_;
};

class LfTerm {
 public:
  explicit LfTerm(std::shared_ptr<const LfTermNode> p) : p_(std::move(p)) {}
  const LfTermNode& node() const;
  template <class T>
  const T* as() const;

  static LfTerm lam(LfVar x, LfTerm body);
  static LfTerm var(LfVar x);
  static LfTerm con(std::string name);
  static LfTerm app(LfTerm fn, LfTerm arg);
  static LfTerm unbox(CompTerm t, LfSubst s);

 private:
  std::shared_ptr<const LfTermNode> p_;
};

// LF contexts are a flat spine of declarations, optionally headed by a
// context variable; the head stands for an opaque prefix.
struct LfCtxDecl;

struct LfCtx {
  std::optional<CompVar> head;
  std::vector<LfCtxDecl> decls;

  bool empty_shape() const { return !head && decls.empty(); }
  LfCtx snoc(LfVar x, LfType a) const;
};

struct ErasedCtx {
  std::optional<CompVar> head;
  std::vector<LfVar> vars;

  bool empty_shape() const { return !head && vars.empty(); }
  bool contains(const LfVar& x) const;
  ErasedCtx snoc(LfVar x) const;

  friend bool operator==(const ErasedCtx& a, const ErasedCtx& b);
  friend bool operator!=(const ErasedCtx& a, const ErasedCtx& b) { return !(a == b); }
};

class LfSubst {
 public:
  explicit LfSubst(std::shared_ptr<const LfSubstNode> p) : p_(std::move(p)) {}
  const LfSubstNode& node() const;
  template <class T>
  const T* as() const;

  static LfSubst empty();
  static LfSubst wk(ErasedCtx ctx);
  static LfSubst snoc(LfSubst tail, LfTerm term);

 private:
  std::shared_ptr<const LfSubstNode> p_;
};

// Contextual types Psi |- A and Psi |-# A.
struct CtxType {
  bool param = false;
  LfCtx ctx;
  LfType ty;
};

// Contextual objects Psi-hat |- M.
struct CtxObj {
  ErasedCtx ctx;
  LfTerm term;
};

struct Branches;

class CompType {
 public:
  explicit CompType(std::shared_ptr<const CompTypeNode> p) : p_(std::move(p)) {}
  const CompTypeNode& node() const;
  template <class T>
  const T* as() const;

  static CompType univ(std::uint32_t level);
  static CompType box(CtxType t);
  static CompType pi(CompVar y, CompType dom, CompType cod);
  static CompType tm_ctx();
  static CompType neut(CompTerm t);

  bool is_tm_ctx() const;

 private:
  std::shared_ptr<const CompTypeNode> p_;
};

class CompTerm {
 public:
  explicit CompTerm(std::shared_ptr<const CompTermNode> p) : p_(std::move(p)) {}
  const CompTermNode& node() const;
  template <class T>
  const T* as() const;

  static CompTerm var(CompVar y);
  static CompTerm fn(CompVar y, CompTerm body);
  static CompTerm app(CompTerm fn, CompTerm arg);
  static CompTerm box(CtxObj obj);
  static CompTerm ctx_val(LfCtx ctx);
  static CompTerm rec(CompType motive, Branches branches, LfCtx ctx, CompTerm scrut);

 private:
  std::shared_ptr<const CompTermNode> p_;
};

struct LfCtxDecl {
  LfVar x;
  LfType ty;
};

// Recursor branches; binders are positional: (psi, p), (psi, m, n, fm, fn)
// and (psi, m, fm) where fm/fn receive the recursive calls on m/n.
struct VarBranch {
  CompVar psi, p;
  CompTerm body;
};
struct AppBranch {
  CompVar psi, m, n, fm, fn;
  CompTerm body;
};
struct LamBranch {
  CompVar psi, m, fm;
  CompTerm body;
};
struct Branches {
  VarBranch var_br;
  AppBranch app_br;
  LamBranch lam_br;
};

struct CompDecl {
  CompVar y;
  CompType ty;
};

struct CompCtx {
  std::vector<CompDecl> decls;

  const CompType* lookup(const CompVar& y) const;
  CompCtx extended(CompVar y, CompType ty) const;
};

// Simultaneous computation-level substitutions; a payload is either a
// computation or an LF context (for tm_ctx-typed variables).
using CompPayload = std::variant<CompTerm, LfCtx>;

struct CompSubstEntry {
  CompVar y;
  CompPayload payload;
};

struct CompSubst {
  std::vector<CompSubstEntry> entries;

  const CompPayload* lookup(const CompVar& y) const;
  CompSubst extended(CompVar y, CompPayload p) const;
};

// ---- node alternatives ----

struct KType {};
struct KPi {
  LfVar x;
  LfType dom;
  LfKind body;
};

struct TAtom {
  std::string head;
  std::vector<LfTerm> args;
};
struct TPi {
  LfVar x;
  LfType dom;
  LfType cod;
};

struct MLam {
  LfVar x;
  LfTerm body;
};
struct MVar {
  LfVar x;
};
struct MConst {
  std::string name;
};
struct MApp {
  LfTerm fn;
  LfTerm arg;
};
struct MUnbox {
  CompTerm comp;
  LfSubst subst;
};

struct SEmpty {};
struct SWk {
  ErasedCtx ctx;
};
struct SSnoc {
  LfSubst tail;
  LfTerm term;
};

struct CTUniv {
  std::uint32_t level;
};
struct CTBox {
  CtxType boxed;
};
struct CTPi {
  CompVar y;
  CompType dom;
  CompType cod;
};
struct CTTmCtx {};
struct CTNeut {
  CompTerm t;
};

struct CVarT {
  CompVar y;
};
struct CFn {
  CompVar y;
  CompTerm body;
};
struct CApp {
  CompTerm fn;
  CompTerm arg;
};
struct CBox {
  CtxObj obj;
};
struct CCtxVal {
  LfCtx ctx;
};
struct CRec {
  CompType motive;
  std::shared_ptr<const Branches> branches;
  LfCtx ctx;
  CompTerm scrut;
};

struct LfKindNode {
  std::variant<KType, KPi> v;
};
struct LfTypeNode {
  std::variant<TAtom, TPi> v;
};
struct LfTermNode {
  std::variant<MLam, MVar, MConst, MApp, MUnbox> v;
};
struct LfSubstNode {
  std::variant<SEmpty, SWk, SSnoc> v;
};
struct CompTypeNode {
  std::variant<CTUniv, CTBox, CTPi, CTTmCtx, CTNeut> v;
};
struct CompTermNode {
  std::variant<CVarT, CFn, CApp, CBox, CCtxVal, CRec> v;
};

// ---- inline members ----

inline const LfKindNode& LfKind::node() const { return *p_; }
inline const LfTypeNode& LfType::node() const { return *p_; }
inline const LfTermNode& LfTerm::node() const { return *p_; }
inline const LfSubstNode& LfSubst::node() const { return *p_; }
inline const CompTypeNode& CompType::node() const { return *p_; }
inline const CompTermNode& CompTerm::node() const { return *p_; }

template <class T>
const T* LfKind::as() const {
  return std::get_if<T>(&p_->v);
}
template <class T>
const T* LfType::as() const {
  return std::get_if<T>(&p_->v);
}
template <class T>
const T* LfTerm::as() const {
  return std::get_if<T>(&p_->v);
}
template <class T>
const T* LfSubst::as() const {
  return std::get_if<T>(&p_->v);
}
template <class T>
const T* CompType::as() const {
  return std::get_if<T>(&p_->v);
}
template <class T>
const T* CompTerm::as() const {
  return std::get_if<T>(&p_->v);
}

inline LfKind LfKind::type() { return LfKind(std::make_shared<LfKindNode>(LfKindNode{KType{}})); }
inline LfKind LfKind::pi(LfVar x, LfType dom, LfKind body) {
  return LfKind(std::make_shared<LfKindNode>(LfKindNode{KPi{std::move(x), std::move(dom), std::move(body)}}));
}

inline LfType LfType::atom(std::string head, std::vector<LfTerm> args) {
  return LfType(std::make_shared<LfTypeNode>(LfTypeNode{TAtom{std::move(head), std::move(args)}}));
}
inline LfType LfType::tm() { return LfType::atom("tm", {}); }
inline LfType LfType::pi(LfVar x, LfType dom, LfType cod) {
  return LfType(std::make_shared<LfTypeNode>(LfTypeNode{TPi{std::move(x), std::move(dom), std::move(cod)}}));
}

inline LfTerm LfTerm::lam(LfVar x, LfTerm body) {
  return LfTerm(std::make_shared<LfTermNode>(LfTermNode{MLam{std::move(x), std::move(body)}}));
}
inline LfTerm LfTerm::var(LfVar x) {
  return LfTerm(std::make_shared<LfTermNode>(LfTermNode{MVar{std::move(x)}}));
}
inline LfTerm LfTerm::con(std::string name) {
  return LfTerm(std::make_shared<LfTermNode>(LfTermNode{MConst{std::move(name)}}));
}
inline LfTerm LfTerm::app(LfTerm fn, LfTerm arg) {
  return LfTerm(std::make_shared<LfTermNode>(LfTermNode{MApp{std::move(fn), std::move(arg)}}));
}
inline LfTerm LfTerm::unbox(CompTerm t, LfSubst s) {
  return LfTerm(std::make_shared<LfTermNode>(LfTermNode{MUnbox{std::move(t), std::move(s)}}));
}

inline LfSubst LfSubst::empty() {
  return LfSubst(std::make_shared<LfSubstNode>(LfSubstNode{SEmpty{}}));
}
inline LfSubst LfSubst::wk(ErasedCtx ctx) {
  return LfSubst(std::make_shared<LfSubstNode>(LfSubstNode{SWk{std::move(ctx)}}));
}
inline LfSubst LfSubst::snoc(LfSubst tail, LfTerm term) {
  return LfSubst(std::make_shared<LfSubstNode>(LfSubstNode{SSnoc{std::move(tail), std::move(term)}}));
}

inline CompType CompType::univ(std::uint32_t level) {
  return CompType(std::make_shared<CompTypeNode>(CompTypeNode{CTUniv{level}}));
}
inline CompType CompType::box(CtxType t) {
  return CompType(std::make_shared<CompTypeNode>(CompTypeNode{CTBox{std::move(t)}}));
}
inline CompType CompType::pi(CompVar y, CompType dom, CompType cod) {
  return CompType(std::make_shared<CompTypeNode>(CompTypeNode{CTPi{std::move(y), std::move(dom), std::move(cod)}}));
}
inline CompType CompType::tm_ctx() {
  return CompType(std::make_shared<CompTypeNode>(CompTypeNode{CTTmCtx{}}));
}
inline CompType CompType::neut(CompTerm t) {
  return CompType(std::make_shared<CompTypeNode>(CompTypeNode{CTNeut{std::move(t)}}));
}
inline bool CompType::is_tm_ctx() const { return as<CTTmCtx>() != nullptr; }

inline CompTerm CompTerm::var(CompVar y) {
  return CompTerm(std::make_shared<CompTermNode>(CompTermNode{CVarT{std::move(y)}}));
}
inline CompTerm CompTerm::fn(CompVar y, CompTerm body) {
  return CompTerm(std::make_shared<CompTermNode>(CompTermNode{CFn{std::move(y), std::move(body)}}));
}
inline CompTerm CompTerm::app(CompTerm f, CompTerm arg) {
  return CompTerm(std::make_shared<CompTermNode>(CompTermNode{CApp{std::move(f), std::move(arg)}}));
}
inline CompTerm CompTerm::box(CtxObj obj) {
  return CompTerm(std::make_shared<CompTermNode>(CompTermNode{CBox{std::move(obj)}}));
}
inline CompTerm CompTerm::ctx_val(LfCtx ctx) {
  return CompTerm(std::make_shared<CompTermNode>(CompTermNode{CCtxVal{std::move(ctx)}}));
}
inline CompTerm CompTerm::rec(CompType motive, Branches branches, LfCtx ctx, CompTerm scrut) {
  return CompTerm(std::make_shared<CompTermNode>(CompTermNode{
      CRec{std::move(motive), std::make_shared<const Branches>(std::move(branches)), std::move(ctx),
           std::move(scrut)}}));
}

inline LfCtx LfCtx::snoc(LfVar x, LfType a) const {
  LfCtx out = *this;
  out.decls.push_back(LfCtxDecl{std::move(x), std::move(a)});
  return out;
}

inline bool ErasedCtx::contains(const LfVar& x) const {
  for (const auto& v : vars)
    if (v == x) return true;
  return false;
}
inline ErasedCtx ErasedCtx::snoc(LfVar x) const {
  ErasedCtx out = *this;
  out.vars.push_back(std::move(x));
  return out;
}
inline bool operator==(const ErasedCtx& a, const ErasedCtx& b) {
  if (a.head.has_value() != b.head.has_value()) return false;
  if (a.head && a.head->id != b.head->id) return false;
  if (a.vars.size() != b.vars.size()) return false;
  for (std::size_t i = 0; i < a.vars.size(); ++i)
    if (a.vars[i] != b.vars[i]) return false;
  return true;
}

inline const CompType* CompCtx::lookup(const CompVar& y) const {
  for (auto it = decls.rbegin(); it != decls.rend(); ++it)
    if (it->y == y) return &it->ty;
  return nullptr;
}
inline CompCtx CompCtx::extended(CompVar y, CompType ty) const {
  CompCtx out = *this;
  out.decls.push_back(CompDecl{std::move(y), std::move(ty)});
  return out;
}

inline const CompPayload* CompSubst::lookup(const CompVar& y) const {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it)
    if (it->y == y) return &it->payload;
  return nullptr;
}
inline CompSubst CompSubst::extended(CompVar y, CompPayload p) const {
  CompSubst out = *this;
  out.entries.push_back(CompSubstEntry{std::move(y), std::move(p)});
  return out;
}

// ---- fixed LF signature: tm : lftype, lam : Pi(Pi tm.tm).tm, app : Pi tm.Pi tm.tm ----

namespace sig {
bool is_type_family(const std::string& name);
bool is_constant(const std::string& name);
const LfKind& family_kind(const std::string& name);  // throws UnknownName
const LfType& constant_type(const std::string& name);  // throws UnknownName
}  // namespace sig

// ---- context erasure and lookup ----

ErasedCtx erase(const LfCtx& ctx);

// Returns the declared type of x, or null when x is not among the explicit
// declarations (in particular when only an opaque context-variable head
// could contain it).
const LfType* ctx_lookup(const LfCtx& ctx, const LfVar& x);
const LfType& ctx_lookup_or_fail(const LfCtx& ctx, const LfVar& x);

// ---- alpha equivalence ----

bool alpha_eq(const LfKind& a, const LfKind& b);
bool alpha_eq(const LfType& a, const LfType& b);
bool alpha_eq(const LfTerm& a, const LfTerm& b);
bool alpha_eq(const LfSubst& a, const LfSubst& b);
bool alpha_eq(const LfCtx& a, const LfCtx& b);
bool alpha_eq(const ErasedCtx& a, const ErasedCtx& b);
bool alpha_eq(const CtxType& a, const CtxType& b);
bool alpha_eq(const CtxObj& a, const CtxObj& b);
bool alpha_eq(const CompType& a, const CompType& b);
bool alpha_eq(const CompTerm& a, const CompTerm& b);

// ---- renaming and refreshing ----

struct Rename {
  std::unordered_map<std::uint64_t, LfVar> lf;
  std::unordered_map<std::uint64_t, CompVar> comp;

  LfVar apply(const LfVar& x) const {
    auto it = lf.find(x.id);
    return it == lf.end() ? x : it->second;
  }
  CompVar apply(const CompVar& y) const {
    auto it = comp.find(y.id);
    return it == comp.end() ? y : it->second;
  }
};

LfKind rename(const LfKind& k, const Rename& r);
LfType rename(const LfType& a, const Rename& r);
LfTerm rename(const LfTerm& m, const Rename& r);
LfSubst rename(const LfSubst& s, const Rename& r);
LfCtx rename(const LfCtx& c, const Rename& r);
ErasedCtx rename(const ErasedCtx& c, const Rename& r);
CtxType rename(const CtxType& t, const Rename& r);
CtxObj rename(const CtxObj& c, const Rename& r);
CompType rename(const CompType& t, const Rename& r);
CompTerm rename(const CompTerm& t, const Rename& r);

// Alpha-copies with brand-new binder atoms everywhere; free variables keep
// their identity.  Used to exercise determinacy across independent runs.
LfTerm refresh_binders(const LfTerm& m);
CompTerm refresh_binders(const CompTerm& t);
LfSubst refresh_binders(const LfSubst& s);

}  // namespace ctt

#endif  // CTT_SYNTAX_HPP
