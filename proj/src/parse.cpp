#include "ctt/parse.hpp"

#include <cstdint>
#include <map>
#include <utility>

namespace ctt {

namespace {

enum class Tok {
  Ident,
  Univ,      // U0, U1, ...
  Directive,  // #check, #eval, ...
  LParen,
  RParen,
  LBrack,
  RBrack,
  LBrace,
  RBrace,
  Dot,
  Comma,
  Colon,
  Eq,
  DArrow,   // =>
  Arrow,    // ->
  Pipe,
  Turnstile,      // |-
  TurnstileHash,  // |-#
  Backslash,
  Caret,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::uint32_t level = 0;  // for Univ
  std::size_t begin = 0;
  std::size_t end = 0;
};

bool ident_start(char c) {
  return c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool ident_cont(char c) { return ident_start(c) || (c >= '0' && c <= '9') || c == '\''; }

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = s.size();
  auto push = [&](Tok k, std::size_t b, std::size_t e, std::string text = "") {
    out.push_back(Token{k, std::move(text), 0, b, e});
  };
  while (i < n) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < n && s[i + 1] == '-') {
      while (i < n && s[i] != '\n') ++i;
      continue;
    }
    std::size_t b = i;
    // Unicode aliases.
    if (static_cast<unsigned char>(c) == 0xC2 && i + 1 < n &&
        static_cast<unsigned char>(s[i + 1]) == 0xB7) {  // middle dot
      i += 2;
      push(Tok::Dot, b, i);
      continue;
    }
    if (static_cast<unsigned char>(c) == 0xE2 && i + 2 < n) {
      unsigned char c1 = static_cast<unsigned char>(s[i + 1]);
      unsigned char c2 = static_cast<unsigned char>(s[i + 2]);
      if (c1 == 0x8A && c2 == 0xA2) {  // turnstile
        i += 3;
        if (i < n && s[i] == '#') {
          ++i;
          push(Tok::TurnstileHash, b, i);
        } else {
          push(Tok::Turnstile, b, i);
        }
        continue;
      }
      if (c1 == 0x8C && c2 == 0x9C) {  // top-left corner bracket
        i += 3;
        push(Tok::LBrack, b, i);
        continue;
      }
      if (c1 == 0x8C && c2 == 0x9D) {  // top-right corner bracket
        i += 3;
        push(Tok::RBrack, b, i);
        continue;
      }
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < n && ident_cont(s[j])) ++j;
      push(Tok::Directive, b, j, s.substr(i + 1, j - i - 1));
      i = j;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < n && ident_cont(s[j])) ++j;
      std::string word = s.substr(i, j - i);
      if (word.size() >= 2 && word[0] == 'U') {
        bool digits = true;
        for (std::size_t k = 1; k < word.size(); ++k)
          if (word[k] < '0' || word[k] > '9') {
            digits = false;
            break;
          }
        if (digits) {
          unsigned long long lvl = 0;
          bool overflow = word.size() > 10;
          if (!overflow) {
            lvl = std::stoull(word.substr(1));
            overflow = lvl > 0x7FFFFFFFull;
          }
          if (overflow) throw SyntaxError("universe level out of range", Span{b, j});
          Token t{Tok::Univ, word, static_cast<std::uint32_t>(lvl), b, j};
          out.push_back(t);
          i = j;
          continue;
        }
      }
      push(Tok::Ident, b, j, std::move(word));
      i = j;
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, b, ++i); continue;
      case ')': push(Tok::RParen, b, ++i); continue;
      case '[': push(Tok::LBrack, b, ++i); continue;
      case ']': push(Tok::RBrack, b, ++i); continue;
      case '{': push(Tok::LBrace, b, ++i); continue;
      case '}': push(Tok::RBrace, b, ++i); continue;
      case '.': push(Tok::Dot, b, ++i); continue;
      case ',': push(Tok::Comma, b, ++i); continue;
      case ':': push(Tok::Colon, b, ++i); continue;
      case '^': push(Tok::Caret, b, ++i); continue;
      case '\\': push(Tok::Backslash, b, ++i); continue;
      case '=':
        if (i + 1 < n && s[i + 1] == '>') {
          i += 2;
          push(Tok::DArrow, b, i);
        } else {
          push(Tok::Eq, b, ++i);
        }
        continue;
      case '-':
        if (i + 1 < n && s[i + 1] == '>') {
          i += 2;
          push(Tok::Arrow, b, i);
          continue;
        }
        throw SyntaxError("unexpected character '-'", Span{b, b + 1});
      case '|':
        if (i + 1 < n && s[i + 1] == '-') {
          i += 2;
          if (i < n && s[i] == '#') {
            ++i;
            push(Tok::TurnstileHash, b, i);
          } else {
            push(Tok::Turnstile, b, i);
          }
        } else {
          push(Tok::Pipe, b, ++i);
        }
        continue;
      default:
        throw SyntaxError(std::string("unexpected character '") + c + "'", Span{b, b + 1});
    }
  }
  out.push_back(Token{Tok::End, "", 0, n, n});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t pos = 0;

  std::vector<std::pair<std::string, CompVar>> comp_scope;
  std::vector<std::pair<std::string, LfVar>> lf_scope;
  ErasedCtx lf_ambient;  // erased LF context at the current LF position
  std::map<std::string, Def> defs;

  struct State {
    std::size_t pos;
    std::size_t comp_depth;
    std::size_t lf_depth;
    ErasedCtx ambient;
  };
  State save() const { return State{pos, comp_scope.size(), lf_scope.size(), lf_ambient}; }
  void restore(const State& st) {
    pos = st.pos;
    comp_scope.resize(st.comp_depth);
    lf_scope.resize(st.lf_depth);
    lf_ambient = st.ambient;
  }

  const Token& peek(std::size_t k = 0) const {
    std::size_t i = pos + k;
    return i < toks.size() ? toks[i] : toks.back();
  }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Tok::End) ++pos;
    return t;
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_ident(const char* word) const { return at(Tok::Ident) && peek().text == word; }
  bool eat(Tok k) {
    if (!at(k)) return false;
    ++pos;
    return true;
  }
  bool eat_ident(const char* word) {
    if (!at_ident(word)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void err(const std::string& msg) const {
    throw SyntaxError(msg, Span{peek().begin, peek().end});
  }
  [[noreturn]] void err_at(const Token& tok, const std::string& msg) const {
    throw SyntaxError(msg, Span{tok.begin, tok.end});
  }
  void expect(Tok k, const char* what) {
    if (!eat(k)) err(std::string("expected ") + what);
  }
  std::string expect_ident(const char* what) {
    if (!at(Tok::Ident)) err(std::string("expected ") + what);
    return next().text;
  }

  // ---- name resolution ----
  const LfVar* lookup_lf(const std::string& name) const {
    for (auto it = lf_scope.rbegin(); it != lf_scope.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }
  const CompVar* lookup_comp(const std::string& name) const {
    for (auto it = comp_scope.rbegin(); it != comp_scope.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }
  bool is_reserved(const std::string& w) const {
    return w == "fn" || w == "rec" || w == "wk" || w == "id" || w == "tm" || w == "tm_ctx" ||
           w == "lam" || w == "app" || w == "def";
  }
  CompVar bind_comp(const std::string& name) {
    CompVar v = fresh_comp_var(name);
    comp_scope.emplace_back(name, v);
    return v;
  }
  LfVar bind_lf(const std::string& name) {
    LfVar v = fresh_lf_var(name);
    lf_scope.emplace_back(name, v);
    return v;
  }

  // ---- computation types ----
  CompType comp_type() {
    // (y : dom) -> cod
    if (at(Tok::LParen) && peek(1).kind == Tok::Ident && peek(2).kind == Tok::Colon) {
      State st = save();
      next();
      std::string name = next().text;
      next();  // colon
      CompType dom = comp_type();
      if (!eat(Tok::RParen) || !at(Tok::Arrow)) {
        restore(st);
      } else {
        next();  // ->
        CompVar y = bind_comp(name);
        CompType cod = comp_type();
        comp_scope.pop_back();
        return CompType::pi(y, std::move(dom), std::move(cod));
      }
    }
    CompType head = comp_type_atom();
    if (eat(Tok::Arrow)) {
      CompVar dummy = fresh_comp_var("_");
      return CompType::pi(dummy, std::move(head), comp_type());
    }
    return head;
  }

  CompType comp_type_atom() {
    if (at(Tok::Univ)) {
      const Token& t = next();
      return CompType::univ(t.level);
    }
    if (eat_ident("tm_ctx")) return CompType::tm_ctx();
    if (at(Tok::LBrack)) return box_type();
    if (at(Tok::LParen)) {
      State st = save();
      next();
      // Try a parenthesized type; fall back to a term in type position.
      try {
        CompType inner = comp_type();
        expect(Tok::RParen, "')'");
        return inner;
      } catch (SyntaxError&) {
        restore(st);
      }
    }
    // Neutral term used as a type.
    return CompType::neut(comp_term());
  }

  CompType box_type() {
    expect(Tok::LBrack, "'['");
    LfCtx ctx = lf_ctx_full(/*stop_at_turnstile=*/true);
    bool param;
    if (eat(Tok::Turnstile))
      param = false;
    else if (eat(Tok::TurnstileHash))
      param = true;
    else
      err("expected '|-' or '|-#' in a contextual type");
    LfType a = lf_type();
    expect(Tok::RBrack, "']'");
    // Pop the declarations bound while parsing the context.
    for (std::size_t i = 0; i < ctx.decls.size(); ++i) lf_scope.pop_back();
    return CompType::box(CtxType{param, std::move(ctx), std::move(a)});
  }

  // Full LF contexts: '.', or [head,] x:A, y:B, ...  The declarations are
  // pushed onto lf_scope; the caller pops them after the classifier.
  LfCtx lf_ctx_full(bool stop_at_turnstile) {
    LfCtx ctx;
    if (stop_at_turnstile && (at(Tok::Turnstile) || at(Tok::TurnstileHash))) return ctx;
    if (eat(Tok::Dot)) {
      if (!eat(Tok::Comma)) return ctx;
    } else if (at(Tok::Ident) && peek(1).kind != Tok::Colon) {
      std::string name = next().text;
      const CompVar* head = lookup_comp(name);
      if (!head) err("context head " + name + " is not a bound computation variable");
      ctx.head = *head;
      if (!eat(Tok::Comma)) return ctx;
    }
    while (true) {
      std::string name = expect_ident("an LF declaration");
      expect(Tok::Colon, "':' in an LF declaration");
      LfType a = lf_type();
      LfVar x = bind_lf(name);
      ctx.decls.push_back(LfCtxDecl{x, std::move(a)});
      if (!eat(Tok::Comma)) break;
    }
    return ctx;
  }

  LfType lf_type() {
    if (at(Tok::LBrace)) {
      next();
      std::string name = expect_ident("an LF binder");
      expect(Tok::Colon, "':'");
      LfType dom = lf_type();
      expect(Tok::RBrace, "'}'");
      LfVar x = bind_lf(name);
      lf_ambient.vars.push_back(x);
      LfType cod = lf_type();
      lf_ambient.vars.pop_back();
      lf_scope.pop_back();
      return LfType::pi(x, std::move(dom), std::move(cod));
    }
    if (eat(Tok::LParen)) {
      LfType inner = lf_type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (eat_ident("tm")) return LfType::tm();
    err("expected an LF type");
  }

  // ---- LF terms ----
  LfTerm lf_term() {
    if (eat(Tok::Backslash)) {
      std::string name = expect_ident("an LF binder");
      expect(Tok::Dot, "'.' after the LF binder");
      LfVar x = bind_lf(name);
      lf_ambient.vars.push_back(x);
      LfTerm body = lf_term();
      lf_ambient.vars.pop_back();
      lf_scope.pop_back();
      return LfTerm::lam(x, std::move(body));
    }
    LfTerm head = lf_atom();
    while (at(Tok::Ident) || at(Tok::LParen) || at(Tok::Backslash)) {
      if (at(Tok::Backslash)) {
        head = LfTerm::app(std::move(head), lf_term());
        break;
      }
      head = LfTerm::app(std::move(head), lf_atom());
    }
    return head;
  }

  LfSubst lf_subst_syntax() {
    LfSubst base = LfSubst::empty();
    if (eat_ident("id")) {
      base = LfSubst::wk(lf_ambient);
    } else if (eat_ident("wk")) {
      expect(Tok::LParen, "'(' after wk");
      base = LfSubst::wk(erased_ref());
      expect(Tok::RParen, "')'");
    } else if (eat(Tok::Dot)) {
      base = LfSubst::empty();
    } else if (at(Tok::RBrack)) {
      // t[] abbreviates the identity substitution.
      return LfSubst::wk(lf_ambient);
    } else {
      err("expected a substitution: id, wk(...), or '.'");
    }
    while (eat(Tok::Comma)) base = LfSubst::snoc(std::move(base), lf_term());
    return base;
  }

  // Erased context whose entries refer to variables already in scope.
  ErasedCtx erased_ref() {
    ErasedCtx out;
    if (eat(Tok::Dot)) return out;
    if (at(Tok::RParen)) return out;
    bool first = true;
    do {
      std::string name = expect_ident("a context entry");
      if (const LfVar* x = lookup_lf(name)) {
        out.vars.push_back(*x);
      } else if (const CompVar* h = lookup_comp(name)) {
        if (!first) err("context variable " + name + " can only appear at the head");
        out.head = *h;
      } else {
        err("unknown variable " + name + " in a context");
      }
      first = false;
    } while (eat(Tok::Comma));
    return out;
  }

  LfTerm lf_atom() {
    if (at(Tok::LParen)) {
      // Either a parenthesized LF term or a parenthesized computation
      // followed by a substitution.
      State st = save();
      next();
      try {
        CompTerm t = comp_term();
        expect(Tok::RParen, "')'");
        expect(Tok::LBrack, "'[' after an unboxed computation");
        LfSubst s = lf_subst_syntax();
        expect(Tok::RBrack, "']'");
        return LfTerm::unbox(std::move(t), std::move(s));
      } catch (SyntaxError&) {
        restore(st);
      }
      next();  // '('
      LfTerm inner = lf_term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    const Token& tok = peek();
    std::string name = expect_ident("an LF term");
    if (const LfVar* x = lookup_lf(name)) return LfTerm::var(*x);
    if (name == "lam" || name == "app") return LfTerm::con(name);
    CompTerm t = [&]() -> CompTerm {
      if (const CompVar* y = lookup_comp(name)) return CompTerm::var(*y);
      err_at(tok, "unknown identifier " + name);
    }();
    if (eat(Tok::LBrack)) {
      LfSubst s = lf_subst_syntax();
      expect(Tok::RBrack, "']'");
      return LfTerm::unbox(std::move(t), std::move(s));
    }
    // Bare computation in LF position: the identity substitution is omitted.
    return LfTerm::unbox(std::move(t), LfSubst::wk(lf_ambient));
  }

  // ---- computation terms ----
  CompTerm comp_term() {
    if (eat_ident("fn")) {
      std::string name = expect_ident("a binder after fn");
      expect(Tok::DArrow, "'=>'");
      CompVar y = bind_comp(name);
      CompTerm body = comp_term();
      comp_scope.pop_back();
      return CompTerm::fn(y, std::move(body));
    }
    if (at_ident("rec")) return rec_term_then_apps();
    CompTerm head = comp_atom();
    while (starts_comp_atom()) head = CompTerm::app(std::move(head), comp_atom());
    return head;
  }

  bool starts_comp_atom() const {
    if (at(Tok::Ident))
      return !at_ident("fn") && !at_ident("rec") && !at_ident("tm") && !at_ident("wk") &&
             !at_ident("id") && !at_ident("def") && !at_ident("tm_ctx");
    return at(Tok::LBrack) || at(Tok::LParen) || at(Tok::Dot);
  }

  CompTerm rec_term_then_apps() {
    CompTerm head = rec_term();
    while (starts_comp_atom()) head = CompTerm::app(std::move(head), comp_atom());
    return head;
  }

  CompTerm rec_term() {
    eat_ident("rec");
    expect(Tok::Caret, "'^' after rec");
    expect(Tok::LParen, "'(' around the recursor invariant");
    CompType motive = comp_type();
    expect(Tok::RParen, "')'");
    expect(Tok::LParen, "'(' opening the branches");
    auto binder_list = [&](std::size_t arity, const char* which) {
      std::vector<CompVar> vars;
      for (std::size_t i = 0; i < arity; ++i) {
        std::string name = expect_ident("a branch binder");
        vars.push_back(bind_comp(name));
        if (i + 1 < arity) expect(Tok::Comma, "',' between branch binders");
      }
      if (at(Tok::Comma)) err(std::string("too many binders in the ") + which + " branch");
      expect(Tok::DArrow, "'=>'");
      return vars;
    };
    auto vb = binder_list(2, "variable");
    CompTerm var_body = comp_term();
    comp_scope.resize(comp_scope.size() - 2);
    expect(Tok::Pipe, "'|' before the app branch");
    auto ab = binder_list(5, "app");
    CompTerm app_body = comp_term();
    comp_scope.resize(comp_scope.size() - 5);
    expect(Tok::Pipe, "'|' before the lam branch");
    auto lb = binder_list(3, "lam");
    CompTerm lam_body = comp_term();
    comp_scope.resize(comp_scope.size() - 3);
    expect(Tok::RParen, "')'");
    Branches br{VarBranch{vb[0], vb[1], std::move(var_body)},
                AppBranch{ab[0], ab[1], ab[2], ab[3], ab[4], std::move(app_body)},
                LamBranch{lb[0], lb[1], lb[2], std::move(lam_body)}};
    LfCtx ctx = ctx_arg();
    CompTerm scrut = comp_atom();
    return CompTerm::rec(std::move(motive), std::move(br), std::move(ctx), std::move(scrut));
  }

  LfCtx ctx_arg() {
    if (eat(Tok::Dot)) return LfCtx{};
    if (at(Tok::LParen)) {
      next();
      LfCtx ctx = lf_ctx_full(/*stop_at_turnstile=*/false);
      expect(Tok::RParen, "')'");
      for (std::size_t i = 0; i < ctx.decls.size(); ++i) lf_scope.pop_back();
      return ctx;
    }
    std::string name = expect_ident("an LF context");
    const CompVar* head = lookup_comp(name);
    if (!head) err("context variable " + name + " is not bound");
    LfCtx ctx;
    ctx.head = *head;
    return ctx;
  }

  CompTerm comp_atom() {
    if (eat(Tok::Dot)) return CompTerm::ctx_val(LfCtx{});
    if (at(Tok::LBrack)) return box_obj();
    if (at(Tok::LParen)) {
      // A context literal when it starts with `x :` or `x ,`.
      if (peek(1).kind == Tok::Ident &&
          (peek(2).kind == Tok::Colon || peek(2).kind == Tok::Comma)) {
        next();
        LfCtx ctx = lf_ctx_full(/*stop_at_turnstile=*/false);
        expect(Tok::RParen, "')'");
        for (std::size_t i = 0; i < ctx.decls.size(); ++i) lf_scope.pop_back();
        return CompTerm::ctx_val(std::move(ctx));
      }
      next();
      CompTerm inner = comp_term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    const Token& tok = peek();
    std::string name = expect_ident("a computation");
    if (is_reserved(name)) err_at(tok, "unexpected keyword " + name);
    if (const CompVar* y = lookup_comp(name)) return CompTerm::var(*y);
    err_at(tok, "unknown identifier " + name);
  }

  CompTerm box_obj() {
    expect(Tok::LBrack, "'['");
    ErasedCtx spine;
    std::size_t bound = 0;
    if (!at(Tok::Turnstile)) {
      if (eat(Tok::Dot)) {
        while (eat(Tok::Comma)) {
          std::string name = expect_ident("a spine variable");
          spine.vars.push_back(bind_lf(name));
          ++bound;
        }
      } else {
        bool first = true;
        do {
          std::string name = expect_ident("a spine variable");
          const CompVar* head = first ? lookup_comp(name) : nullptr;
          if (head) {
            spine.head = *head;
          } else {
            spine.vars.push_back(bind_lf(name));
            ++bound;
          }
          first = false;
        } while (eat(Tok::Comma));
      }
    }
    expect(Tok::Turnstile, "'|-' in a contextual object");
    ErasedCtx saved_ambient = lf_ambient;
    lf_ambient = spine;
    LfTerm body = lf_term();
    lf_ambient = saved_ambient;
    for (std::size_t i = 0; i < bound; ++i) lf_scope.pop_back();
    expect(Tok::RBrack, "']'");
    return CompTerm::box(CtxObj{std::move(spine), std::move(body)});
  }

  // ---- items ----
  SourceFile file() {
    SourceFile out;
    while (!at(Tok::End)) {
      if (at_ident("def")) {
        out.items.push_back(def_item());
      } else if (at(Tok::Directive)) {
        out.items.push_back(directive_item());
      } else {
        err("expected a definition or a directive");
      }
    }
    return out;
  }

  Def def_item() {
    std::size_t begin = peek().begin;
    eat_ident("def");
    std::string name = expect_ident("a definition name");
    if (is_reserved(name)) err("definition name " + name + " is reserved");
    if (defs.count(name)) {
      throw SyntaxError("duplicate definition of " + name,
                        Span{begin, peek().end});
    }
    expect(Tok::Colon, "':' after the definition name");
    CompType ty = comp_type();
    expect(Tok::Eq, "'=' before the definition body");
    CompTerm body = comp_term();
    std::size_t end = pos > 0 ? toks[pos - 1].end : begin;
    CompVar var = bind_comp(name);
    Def d{name, var, std::move(ty), std::move(body), Span{begin, end}};
    defs.emplace(name, d);
    return d;
  }

  Directive directive_item() {
    std::size_t begin = peek().begin;
    std::string which = next().text;
    Directive d{Directive::Kind::Check, Span{begin, begin}, {}, {}, {}, {}};
    if (which == "check") {
      d.kind = Directive::Kind::Check;
      State st = save();
      bool done = false;
      try {
        CompType subject = comp_type();
        if (at(Tok::Colon)) {
          if (const auto* n = subject.as<CTNeut>())
            d.term = n->t;
          else
            d.subject_type = subject;
          done = true;
        }
      } catch (SyntaxError&) {
      }
      if (!done) {
        restore(st);
        d.term = comp_term();
      }
      expect(Tok::Colon, "':' in #check");
      d.type = comp_type();
    } else if (which == "eval") {
      d.kind = Directive::Kind::Eval;
      d.term = comp_term();
    } else if (which == "assert_conv") {
      d.kind = Directive::Kind::AssertConv;
      d.term = comp_atom_or_fn();
      d.term2 = comp_atom_or_fn();
      expect(Tok::Colon, "':' in #assert_conv");
      d.type = comp_type();
    } else if (which == "fail_check") {
      d.kind = Directive::Kind::FailCheck;
      State st = save();
      bool done = false;
      try {
        CompType subject = comp_type();
        if (at(Tok::Colon)) {
          if (const auto* n = subject.as<CTNeut>())
            d.term = n->t;
          else
            d.subject_type = subject;
          done = true;
        }
      } catch (SyntaxError&) {
      }
      if (!done) {
        restore(st);
        d.term = comp_term();
      }
      expect(Tok::Colon, "':' in #fail_check");
      d.type = comp_type();
    } else {
      err("unknown directive #" + which);
    }
    d.span = Span{begin, pos > 0 ? toks[pos - 1].end : begin};
    return d;
  }

  // #assert_conv takes two juxtaposed subjects; each must be an atom (use
  // parentheses for anything larger).
  CompTerm comp_atom_or_fn() { return comp_atom(); }
};

}  // namespace

SourceFile parse(const std::string& text) {
  Parser p;
  p.toks = lex(text);
  return p.file();
}

CompTerm parse_comp_term(const std::string& text) {
  Parser p;
  p.toks = lex(text);
  CompTerm t = p.comp_term();
  if (!p.at(Tok::End)) p.err("trailing input after the term");
  return t;
}

CompType parse_comp_type(const std::string& text) {
  Parser p;
  p.toks = lex(text);
  CompType t = p.comp_type();
  if (!p.at(Tok::End)) p.err("trailing input after the type");
  return t;
}

}  // namespace ctt
