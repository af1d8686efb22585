#include "ctt/print.hpp"

#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ctt {

namespace {

struct Printer {
  std::unordered_map<std::uint64_t, std::string> names;
  std::unordered_set<std::string> used;

  std::string assign(std::uint64_t id, const std::string& hint) {
    auto it = names.find(id);
    if (it != names.end()) return it->second;
    std::string base = hint.empty() ? "v" : hint;
    std::string cand = base;
    int n = 0;
    while (used.count(cand)) {
      ++n;
      cand = base + (n <= 2 ? std::string(static_cast<std::size_t>(n), '\'')
                            : std::to_string(n));
    }
    used.insert(cand);
    names.emplace(id, cand);
    return cand;
  }
  std::string name(const LfVar& x) { return assign(x.id, x.hint); }
  std::string name(const CompVar& y) { return assign(y.id, y.hint); }

  // LF layer ---------------------------------------------------------
  void lf_term(std::ostringstream& o, const LfTerm& m, int prec) {
    if (const auto* l = m.as<MLam>()) {
      if (prec > 0) o << "(";
      o << "\\" << name(l->x) << ". ";
      lf_term(o, l->body, 0);
      if (prec > 0) o << ")";
      return;
    }
    if (const auto* a = m.as<MApp>()) {
      if (prec > 1) o << "(";
      lf_term(o, a->fn, 1);
      o << " ";
      lf_term(o, a->arg, 2);
      if (prec > 1) o << ")";
      return;
    }
    if (const auto* v = m.as<MVar>()) {
      o << name(v->x);
      return;
    }
    if (const auto* c = m.as<MConst>()) {
      o << c->name;
      return;
    }
    const auto& u = *m.as<MUnbox>();
    if (const auto* v = u.comp.as<CVarT>()) {
      o << name(v->y);
    } else {
      o << "(";
      comp_term(o, u.comp, 0);
      o << ")";
    }
    o << "[";
    subst(o, u.subst);
    o << "]";
  }

  void subst(std::ostringstream& o, const LfSubst& s) {
    if (s.as<SEmpty>()) {
      o << ".";
      return;
    }
    if (const auto* w = s.as<SWk>()) {
      o << "wk(";
      erased(o, w->ctx);
      o << ")";
      return;
    }
    const auto& sn = *s.as<SSnoc>();
    subst(o, sn.tail);
    o << ", ";
    lf_term(o, sn.term, 1);
  }

  void erased(std::ostringstream& o, const ErasedCtx& c) {
    bool first = true;
    if (c.head) {
      o << name(*c.head);
      first = false;
    }
    for (const auto& v : c.vars) {
      if (!first) o << ", ";
      o << name(v);
      first = false;
    }
    if (first) o << ".";
  }

  void lf_ctx(std::ostringstream& o, const LfCtx& c) {
    bool first = true;
    if (c.head) {
      o << name(*c.head);
      first = false;
    }
    for (const auto& d : c.decls) {
      if (!first) o << ", ";
      o << name(d.x) << ":";
      lf_type(o, d.ty, 1);
      first = false;
    }
    if (first) o << ".";
  }

  void lf_type(std::ostringstream& o, const LfType& a, int prec) {
    if (const auto* at = a.as<TAtom>()) {
      bool paren = prec > 1 && !at->args.empty();
      if (paren) o << "(";
      o << at->head;
      for (const auto& arg : at->args) {
        o << " ";
        lf_term(o, arg, 2);
      }
      if (paren) o << ")";
      return;
    }
    const auto& p = *a.as<TPi>();
    if (prec > 0) o << "(";
    o << "{" << name(p.x) << ":";
    lf_type(o, p.dom, 0);
    o << "} ";
    lf_type(o, p.cod, 0);
    if (prec > 0) o << ")";
  }

  void lf_kind(std::ostringstream& o, const LfKind& k) {
    if (k.as<KType>()) {
      o << "lftype";
      return;
    }
    const auto& p = *k.as<KPi>();
    o << "{" << name(p.x) << ":";
    lf_type(o, p.dom, 0);
    o << "} ";
    lf_kind(o, p.body);
  }

  // Computation layer ------------------------------------------------
  void ctx_type(std::ostringstream& o, const CtxType& t) {
    o << "[";
    lf_ctx(o, t.ctx);
    o << (t.param ? " |-# " : " |- ");
    lf_type(o, t.ty, 0);
    o << "]";
  }

  void ctx_obj(std::ostringstream& o, const CtxObj& c) {
    o << "[";
    erased(o, c.ctx);
    o << " |- ";
    lf_term(o, c.term, 0);
    o << "]";
  }

  void comp_type(std::ostringstream& o, const CompType& t, int prec) {
    if (const auto* u = t.as<CTUniv>()) {
      o << "U" << u->level;
      return;
    }
    if (const auto* b = t.as<CTBox>()) {
      ctx_type(o, b->boxed);
      return;
    }
    if (t.as<CTTmCtx>()) {
      o << "tm_ctx";
      return;
    }
    if (const auto* p = t.as<CTPi>()) {
      if (prec > 0) o << "(";
      o << "(" << name(p->y) << " : ";
      comp_type(o, p->dom, 0);
      o << ") -> ";
      comp_type(o, p->cod, 0);
      if (prec > 0) o << ")";
      return;
    }
    comp_term(o, t.as<CTNeut>()->t, prec > 0 ? 2 : 0);
  }

  void comp_term(std::ostringstream& o, const CompTerm& t, int prec) {
    if (const auto* f = t.as<CFn>()) {
      if (prec > 0) o << "(";
      o << "fn " << name(f->y) << " => ";
      comp_term(o, f->body, 0);
      if (prec > 0) o << ")";
      return;
    }
    if (const auto* a = t.as<CApp>()) {
      if (prec > 1) o << "(";
      comp_term(o, a->fn, 1);
      o << " ";
      comp_term(o, a->arg, 2);
      if (prec > 1) o << ")";
      return;
    }
    if (const auto* v = t.as<CVarT>()) {
      o << name(v->y);
      return;
    }
    if (const auto* b = t.as<CBox>()) {
      ctx_obj(o, b->obj);
      return;
    }
    if (const auto* c = t.as<CCtxVal>()) {
      if (c->ctx.empty_shape()) {
        o << ".";
      } else if (c->ctx.decls.empty() && c->ctx.head) {
        o << name(*c->ctx.head);
      } else {
        o << "(";
        lf_ctx(o, c->ctx);
        o << ")";
      }
      return;
    }
    const auto& r = *t.as<CRec>();
    if (prec > 1) o << "(";
    o << "rec^(";
    comp_type(o, r.motive, 0);
    o << ") (";
    const Branches& br = *r.branches;
    o << name(br.var_br.psi) << ", " << name(br.var_br.p) << " => ";
    comp_term(o, br.var_br.body, 0);
    o << " | " << name(br.app_br.psi) << ", " << name(br.app_br.m) << ", " << name(br.app_br.n)
      << ", " << name(br.app_br.fm) << ", " << name(br.app_br.fn) << " => ";
    comp_term(o, br.app_br.body, 0);
    o << " | " << name(br.lam_br.psi) << ", " << name(br.lam_br.m) << ", "
      << name(br.lam_br.fm) << " => ";
    comp_term(o, br.lam_br.body, 0);
    o << ") ";
    ctx_arg(o, r.ctx);
    o << " ";
    comp_term(o, r.scrut, 2);
    if (prec > 1) o << ")";
  }

  void ctx_arg(std::ostringstream& o, const LfCtx& c) {
    if (c.empty_shape()) {
      o << ".";
    } else if (c.decls.empty() && c.head) {
      o << name(*c.head);
    } else {
      o << "(";
      lf_ctx(o, c);
      o << ")";
    }
  }
};

}  // namespace

std::string show(const LfKind& k) {
  Printer p;
  std::ostringstream o;
  p.lf_kind(o, k);
  return o.str();
}
std::string show(const LfType& a) {
  Printer p;
  std::ostringstream o;
  p.lf_type(o, a, 0);
  return o.str();
}
std::string show(const LfTerm& m) {
  Printer p;
  std::ostringstream o;
  p.lf_term(o, m, 0);
  return o.str();
}
std::string show(const LfSubst& s) {
  Printer p;
  std::ostringstream o;
  p.subst(o, s);
  return o.str();
}
std::string show(const LfCtx& c) {
  Printer p;
  std::ostringstream o;
  p.lf_ctx(o, c);
  return o.str();
}
std::string show(const ErasedCtx& c) {
  Printer p;
  std::ostringstream o;
  p.erased(o, c);
  return o.str();
}
std::string show(const CtxType& t) {
  Printer p;
  std::ostringstream o;
  p.ctx_type(o, t);
  return o.str();
}
std::string show(const CtxObj& c) {
  Printer p;
  std::ostringstream o;
  p.ctx_obj(o, c);
  return o.str();
}
std::string show(const CompType& t) {
  Printer p;
  std::ostringstream o;
  p.comp_type(o, t, 0);
  return o.str();
}
std::string show(const CompTerm& t) {
  Printer p;
  std::ostringstream o;
  p.comp_term(o, t, 0);
  return o.str();
}
std::string show(const CompCtx& g) {
  Printer p;
  std::ostringstream o;
  bool first = true;
  for (const auto& d : g.decls) {
    if (!first) o << ", ";
    o << p.assign(d.y.id, d.y.hint) << " : ";
    p.comp_type(o, d.ty, 0);
    first = false;
  }
  if (first) o << ".";
  return o.str();
}

}  // namespace ctt
