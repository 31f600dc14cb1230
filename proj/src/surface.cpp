#include "iitt/surface.hpp"

#include <cctype>
#include <cstdlib>
#include <utility>

namespace iitt {

const char* to_string(ItemKind kind) {
  switch (kind) {
    case ItemKind::Def: return "def";
    case ItemKind::Check: return "check";
    case ItemKind::Infer: return "infer";
    case ItemKind::Eq: return "eq";
    case ItemKind::Whnf: return "whnf";
    case ItemKind::Erase: return "erase";
  }
  return "?";
}

namespace {

enum class Tok : std::uint8_t {
  Ident, SortLit,
  KwFun, KwLet, KwIn, KwDef, KwUnit, KwSig, KwSqTy, KwSqVal, KwIrr,
  HashCheck, HashInfer, HashEq, HashWhnf, HashErase, HashFail,
  LParen, RParen, LBrack, RBrack,
  Arrow, FatArrow, Colon, ColonEq, Semi, Comma, Dot, Equal,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::uint32_t level = 0;  // SortLit
  Span span;
};

struct LexError {
  Diagnostic diag;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::uint32_t line = 1, col = 1;
  std::size_t i = 0;
  auto here = [&] { return Span{line, col}; };
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') { ++line; col = 1; } else { ++col; }
    }
  };
  auto push = [&](Tok k, Span s, std::string text = "") {
    out.push_back(Token{k, std::move(text), 0, s});
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Span s = here();
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') { advance(2); push(Tok::Arrow, s); continue; }
    if (c == '=' && i + 1 < src.size() && src[i + 1] == '>') { advance(2); push(Tok::FatArrow, s); continue; }
    if (c == ':' && i + 1 < src.size() && src[i + 1] == '=') { advance(2); push(Tok::ColonEq, s); continue; }
    switch (c) {
      case '(': advance(1); push(Tok::LParen, s); continue;
      case ')': advance(1); push(Tok::RParen, s); continue;
      case '[': advance(1); push(Tok::LBrack, s); continue;
      case ']': advance(1); push(Tok::RBrack, s); continue;
      case ':': advance(1); push(Tok::Colon, s); continue;
      case ';': advance(1); push(Tok::Semi, s); continue;
      case ',': advance(1); push(Tok::Comma, s); continue;
      case '.': advance(1); push(Tok::Dot, s); continue;
      case '=': advance(1); push(Tok::Equal, s); continue;
      default: break;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i + 1, j - i - 1));
      Tok k;
      if (word == "check") k = Tok::HashCheck;
      else if (word == "infer") k = Tok::HashInfer;
      else if (word == "eq") k = Tok::HashEq;
      else if (word == "whnf") k = Tok::HashWhnf;
      else if (word == "erase") k = Tok::HashErase;
      else if (word == "fail") k = Tok::HashFail;
      else
        throw LexError{make_diag(DiagCode::Parse, "unknown command '#" + word + "'", s)};
      advance(j - i);
      push(k, s);
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      advance(j - i);
      if (word == "fun") { push(Tok::KwFun, s); continue; }
      if (word == "let") { push(Tok::KwLet, s); continue; }
      if (word == "in") { push(Tok::KwIn, s); continue; }
      if (word == "def") { push(Tok::KwDef, s); continue; }
      if (word == "Unit") { push(Tok::KwUnit, s); continue; }
      if (word == "Sig") { push(Tok::KwSig, s); continue; }
      if (word == "Sq") { push(Tok::KwSqTy, s); continue; }
      if (word == "sq") { push(Tok::KwSqVal, s); continue; }
      if (word == "irr") { push(Tok::KwIrr, s); continue; }
      if (word.size() > 3 && word.compare(0, 3, "Set") == 0) {
        bool digits = true;
        for (std::size_t k = 3; k < word.size(); ++k)
          if (!std::isdigit(static_cast<unsigned char>(word[k]))) { digits = false; break; }
        if (digits) {
          Token t{Tok::SortLit, word, 0, s};
          t.level = static_cast<std::uint32_t>(std::strtoul(word.c_str() + 3, nullptr, 10));
          out.push_back(std::move(t));
          continue;
        }
      }
      out.push_back(Token{Tok::Ident, std::move(word), 0, s});
      continue;
    }
    throw LexError{make_diag(DiagCode::Parse,
                             std::string("unexpected character '") + c + "'", s)};
  }
  push(Tok::End, here());
  return out;
}

STermPtr snode(STermKind k, Span span) {
  auto t = std::make_shared<STerm>();
  t->kind = k;
  t->span = span;
  return t;
}

struct ParseError {
  Diagnostic diag;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  std::vector<SurfaceItem> items() {
    std::vector<SurfaceItem> out;
    while (!at(Tok::End)) out.push_back(item(false));
    return out;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t p = pos_ + ahead;
    return p < toks_.size() ? toks_[p] : toks_.back();
  }
  bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
  Token eat() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  Token expect(Tok k, const char* what) {
    if (!at(k))
      throw ParseError{make_diag(DiagCode::Parse,
                                 std::string("expected ") + what, peek().span)};
    return eat();
  }

  SurfaceItem item(bool inside_fail) {
    Span s = peek().span;
    if (at(Tok::HashFail)) {
      if (inside_fail)
        throw ParseError{make_diag(DiagCode::Parse, "#fail cannot nest", s)};
      eat();
      SurfaceItem inner = item(true);
      inner.expect_fail = true;
      inner.span = s;
      return inner;
    }
    SurfaceItem it;
    it.span = s;
    if (at(Tok::KwDef)) {
      eat();
      it.kind = ItemKind::Def;
      it.name = expect(Tok::Ident, "a name after 'def'").text;
      expect(Tok::Colon, "':' after the definition name");
      it.type = term();
      expect(Tok::ColonEq, "':=' before the definition body");
      it.lhs = term();
    } else if (at(Tok::HashCheck)) {
      eat();
      it.kind = ItemKind::Check;
      it.lhs = term();
      expect(Tok::Colon, "':' in #check");
      it.type = term();
    } else if (at(Tok::HashInfer)) {
      eat();
      it.kind = ItemKind::Infer;
      it.lhs = term();
    } else if (at(Tok::HashEq)) {
      eat();
      it.kind = ItemKind::Eq;
      it.lhs = term();
      expect(Tok::Equal, "'=' in #eq");
      it.rhs = term();
      expect(Tok::Colon, "':' in #eq");
      it.type = term();
    } else if (at(Tok::HashWhnf)) {
      eat();
      it.kind = ItemKind::Whnf;
      it.lhs = term();
    } else if (at(Tok::HashErase)) {
      eat();
      it.kind = ItemKind::Erase;
      it.lhs = term();
    } else {
      throw ParseError{make_diag(DiagCode::Parse, "expected an item", s)};
    }
    expect(Tok::Semi, "';' after the item");
    return it;
  }

  struct BinderGroup {
    Ann ann;
    std::vector<std::pair<std::string, Span>> names;
    STermPtr type;
  };

  bool binder_group_ahead() const {
    if (!at(Tok::LParen) && !at(Tok::LBrack)) return false;
    std::size_t k = 1;
    if (!at(Tok::Ident, k)) return false;
    while (at(Tok::Ident, k)) ++k;
    return at(Tok::Colon, k);
  }

  BinderGroup binder_group() {
    BinderGroup g;
    Tok close;
    if (at(Tok::LParen)) { g.ann = Ann::Relevant; close = Tok::RParen; }
    else { g.ann = Ann::Irrelevant; close = Tok::RBrack; }
    eat();
    while (at(Tok::Ident)) {
      Token t = eat();
      g.names.emplace_back(t.text, t.span);
    }
    if (g.names.empty())
      throw ParseError{make_diag(DiagCode::Parse, "expected binder names", peek().span)};
    expect(Tok::Colon, "':' in binder");
    g.type = term();
    expect(close, g.ann == Ann::Relevant ? "')'" : "']'");
    return g;
  }

  STermPtr term() {
    Span s = peek().span;
    if (at(Tok::KwFun)) {
      eat();
      std::vector<BinderGroup> groups;
      while (at(Tok::LParen) || at(Tok::LBrack)) groups.push_back(binder_group());
      if (groups.empty())
        throw ParseError{make_diag(DiagCode::Parse, "expected binders after 'fun'", peek().span)};
      expect(Tok::FatArrow, "'=>' after binders");
      STermPtr body = term();
      for (auto gi = groups.rbegin(); gi != groups.rend(); ++gi) {
        for (auto ni = gi->names.rbegin(); ni != gi->names.rend(); ++ni) {
          auto lam = std::make_shared<STerm>();
          lam->kind = STermKind::Lam;
          lam->span = ni->second;
          lam->ann = gi->ann;
          lam->name = ni->first;
          lam->a = gi->type;
          lam->b = body;
          body = lam;
        }
      }
      return body;
    }
    if (at(Tok::KwLet)) return let_term();
    return pi_or_arrow(s);
  }

  STermPtr let_term() {
    Span s = eat().span;  // 'let'
    if (at(Tok::KwSqVal)) {
      eat();
      Token x = expect(Tok::Ident, "a name after 'let sq'");
      expect(Tok::Equal, "'=' in let");
      STermPtr scrut = term();
      expect(Tok::KwIn, "'in'");
      STermPtr body = term();
      auto t = std::make_shared<STerm>();
      t->kind = STermKind::SqElim;
      t->span = s;
      t->name = x.text;
      t->a = scrut;
      t->b = body;
      return t;
    }
    expect(Tok::LParen, "'(' or 'sq' after 'let'");
    Token x = expect(Tok::Ident, "a name");
    expect(Tok::Comma, "','");
    Token y = expect(Tok::Ident, "a second name");
    expect(Tok::RParen, "')'");
    expect(Tok::Equal, "'=' in let");
    STermPtr scrut = term();
    expect(Tok::KwIn, "'in'");
    STermPtr body = term();
    auto t = std::make_shared<STerm>();
    t->kind = STermKind::Split;
    t->span = s;
    t->name = x.text;
    t->name2 = y.text;
    t->a = scrut;
    t->b = body;
    return t;
  }

  STermPtr pi_or_arrow(Span s) {
    if (binder_group_ahead()) {
      BinderGroup g = binder_group();
      expect(Tok::Arrow, "'->' after the binder");
      STermPtr cod = term();
      for (auto ni = g.names.rbegin(); ni != g.names.rend(); ++ni) {
        auto pi = std::make_shared<STerm>();
        pi->kind = STermKind::Pi;
        pi->span = ni->second;
        pi->ann = g.ann;
        pi->name = ni->first;
        pi->a = g.type;
        pi->b = cod;
        cod = pi;
      }
      return cod;
    }
    STermPtr head = app_term();
    if (at(Tok::Arrow)) {
      eat();
      STermPtr cod = term();
      auto pi = std::make_shared<STerm>();
      pi->kind = STermKind::Pi;
      pi->span = s;
      pi->ann = Ann::Relevant;
      pi->name = "_";
      pi->a = head;
      pi->b = cod;
      return pi;
    }
    return head;
  }

  STermPtr app_term() {
    Span s = peek().span;
    STermPtr head;
    if (at(Tok::KwSqTy) || at(Tok::KwSqVal)) {
      bool ty = at(Tok::KwSqTy);
      eat();
      auto t = std::make_shared<STerm>();
      t->kind = ty ? STermKind::SqTy : STermKind::SqVal;
      t->span = s;
      t->a = atom();
      head = t;
    } else if (at(Tok::KwSig)) {
      eat();
      if (!at(Tok::LParen) && !at(Tok::LBrack))
        throw ParseError{make_diag(DiagCode::Parse, "expected a binder after 'Sig'", peek().span)};
      BinderGroup g = binder_group();
      expect(Tok::Dot, "'.' after the Sig binder");
      STermPtr body = term();
      for (auto ni = g.names.rbegin(); ni != g.names.rend(); ++ni) {
        auto sg = std::make_shared<STerm>();
        sg->kind = STermKind::Sigma;
        sg->span = ni->second;
        sg->ann = g.ann;
        sg->name = ni->first;
        sg->a = g.type;
        sg->b = body;
        body = sg;
      }
      return body;  // Sig body extends right; no further arguments
    } else {
      head = atom();
    }
    while (true) {
      if (at(Tok::LBrack)) {
        Span sp = eat().span;
        STermPtr arg = term();
        expect(Tok::RBrack, "']' closing an irrelevant argument");
        auto app = std::make_shared<STerm>();
        app->kind = STermKind::App;
        app->span = sp;
        app->ann = Ann::Irrelevant;
        app->a = head;
        app->b = arg;
        head = app;
        continue;
      }
      if (at(Tok::Ident) || at(Tok::SortLit) || at(Tok::KwUnit) ||
          at(Tok::KwIrr) || at(Tok::LParen)) {
        Span sp = peek().span;
        STermPtr arg = atom();
        auto app = std::make_shared<STerm>();
        app->kind = STermKind::App;
        app->span = sp;
        app->ann = Ann::Relevant;
        app->a = head;
        app->b = arg;
        head = app;
        continue;
      }
      break;
    }
    return head;
  }

  STermPtr atom() {
    Span s = peek().span;
    if (at(Tok::Ident)) {
      Token t = eat();
      auto v = std::make_shared<STerm>();
      v->kind = STermKind::Var;
      v->span = s;
      v->name = t.text;
      return v;
    }
    if (at(Tok::SortLit)) {
      Token t = eat();
      auto v = std::make_shared<STerm>();
      v->kind = STermKind::Sort;
      v->span = s;
      v->level = t.level;
      return v;
    }
    if (at(Tok::KwUnit)) { eat(); return snode(STermKind::UnitTy, s); }
    if (at(Tok::KwIrr)) { eat(); return snode(STermKind::Dummy, s); }
    if (at(Tok::LParen)) {
      eat();
      if (at(Tok::RParen)) { eat(); return snode(STermKind::UnitVal, s); }
      if (at(Tok::LBrack)) {
        // ([u] , t): pair with an irrelevant first component.
        eat();
        STermPtr fst = term();
        expect(Tok::RBrack, "']'");
        expect(Tok::Comma, "',' in pair");
        STermPtr snd = term();
        expect(Tok::RParen, "')'");
        auto p = std::make_shared<STerm>();
        p->kind = STermKind::Pair;
        p->span = s;
        p->ann = Ann::Irrelevant;
        p->a = fst;
        p->b = snd;
        return p;
      }
      STermPtr fst = term();
      if (at(Tok::Comma)) {
        eat();
        STermPtr snd = term();
        expect(Tok::RParen, "')'");
        auto p = std::make_shared<STerm>();
        p->kind = STermKind::Pair;
        p->span = s;
        p->ann = Ann::Relevant;
        p->a = fst;
        p->b = snd;
        return p;
      }
      expect(Tok::RParen, "')'");
      return fst;
    }
    throw ParseError{make_diag(DiagCode::Parse, "expected a term", s)};
  }
};

}  // namespace

ParseOutput parse(std::string_view source) {
  ParseOutput out;
  try {
    Parser p(lex(source));
    out.items = p.items();
  } catch (const LexError& e) {
    out.error = e.diag;
  } catch (const ParseError& e) {
    out.error = e.diag;
  }
  return out;
}

namespace {

struct ElabError {
  Diagnostic diag;
};

class ElabCtx {
 public:
  explicit ElabCtx(const std::map<std::string, Elaborator::Def>& defs)
      : defs_(defs) {}

  TermPtr elab(const STermPtr& t) {
    switch (t->kind) {
      case STermKind::Var: {
        if (t->name != "_") {
          for (std::size_t i = 0; i < scope_.size(); ++i) {
            if (scope_[scope_.size() - 1 - i] == t->name)
              return mk_var(static_cast<std::uint32_t>(i));
          }
          auto def = defs_.find(t->name);
          if (def != defs_.end()) return def->second.body;  // inline; closed
        }
        throw ElabError{make_diag(DiagCode::Scope,
                                  "unknown identifier '" + t->name + "'",
                                  t->span)};
      }
      case STermKind::Sort:
        return mk_sort(t->level);
      case STermKind::Pi: {
        TermPtr dom = elab(t->a);
        scope_.push_back(t->name);
        TermPtr cod = elab(t->b);
        scope_.pop_back();
        return mk_pi(t->ann, std::move(dom), std::move(cod), t->name);
      }
      case STermKind::Lam: {
        TermPtr dom = elab(t->a);
        scope_.push_back(t->name);
        TermPtr body = elab(t->b);
        scope_.pop_back();
        return mk_lam(t->ann, std::move(dom), std::move(body), t->name);
      }
      case STermKind::App: {
        TermPtr fn = elab(t->a);
        TermPtr arg = elab(t->b);
        return mk_app(t->ann, std::move(fn), std::move(arg));
      }
      case STermKind::UnitTy:
        return mk_unit_ty();
      case STermKind::UnitVal:
        return mk_unit_val();
      case STermKind::Sigma: {
        TermPtr dom = elab(t->a);
        scope_.push_back(t->name);
        TermPtr cod = elab(t->b);
        scope_.pop_back();
        return mk_sigma(t->ann, std::move(dom), std::move(cod), t->name);
      }
      case STermKind::Pair: {
        TermPtr fst = elab(t->a);
        TermPtr snd = elab(t->b);
        return mk_pair(t->ann, std::move(fst), std::move(snd));
      }
      case STermKind::Split: {
        TermPtr scrut = elab(t->a);
        scope_.push_back(t->name);
        scope_.push_back(t->name2);
        TermPtr body = elab(t->b);
        scope_.pop_back();
        scope_.pop_back();
        return mk_split(std::move(scrut), std::move(body), t->name, t->name2);
      }
      case STermKind::SqTy:
        return mk_sq_ty(elab(t->a));
      case STermKind::SqVal:
        return mk_sq_val(elab(t->a));
      case STermKind::SqElim: {
        TermPtr scrut = elab(t->a);
        scope_.push_back(t->name);
        TermPtr body = elab(t->b);
        scope_.pop_back();
        return mk_sq_elim(std::move(scrut), std::move(body), t->name);
      }
      case STermKind::Dummy:
        return mk_dummy();
    }
    throw ElabError{make_diag(DiagCode::Scope, "malformed surface term", t->span)};
  }

 private:
  const std::map<std::string, Elaborator::Def>& defs_;
  std::vector<std::string> scope_;
};

}  // namespace

std::vector<Item> Elaborator::run(const std::vector<SurfaceItem>& items) {
  std::vector<Item> out;
  out.reserve(items.size());
  for (const auto& si : items) {
    Item it;
    it.kind = si.kind;
    it.span = si.span;
    it.expect_fail = si.expect_fail;
    it.name = si.name;
    try {
      ElabCtx ctx(defs_);
      if (si.type) it.type = ctx.elab(si.type);
      if (si.lhs) it.lhs = ctx.elab(si.lhs);
      if (si.rhs) it.rhs = ctx.elab(si.rhs);
      if (si.kind == ItemKind::Def) defs_[si.name] = Def{it.type, it.lhs};
    } catch (const ElabError& e) {
      it.poisoned = e.diag;
    }
    out.push_back(std::move(it));
  }
  return out;
}

TermPtr Elaborator::elaborate_term(const STermPtr& t,
                                   std::optional<Diagnostic>& err) {
  try {
    ElabCtx ctx(defs_);
    return ctx.elab(t);
  } catch (const ElabError& e) {
    err = e.diag;
    return nullptr;
  }
}

namespace {

class Printer {
 public:
  explicit Printer(std::vector<std::string> scope) : scope_(std::move(scope)) {}

  // prec 0: term, 1: application, 2: atom
  std::string go(const TermPtr& t, int prec) {
    switch (t->kind) {
      case TermKind::Sort:
        return "Set" + std::to_string(t->level);
      case TermKind::Var:
        if (t->index < scope_.size())
          return scope_[scope_.size() - 1 - t->index];
        return "!" + std::to_string(t->index - static_cast<std::uint32_t>(scope_.size()));
      case TermKind::UnitTy:
        return "Unit";
      case TermKind::UnitVal:
        return "()";
      case TermKind::Dummy:
        return "irr";
      case TermKind::Pi: {
        std::string s;
        if (t->ann == Ann::Relevant && !occurs_free(t->b, 0)) {
          auto cod = strengthen(t->b, 1);
          s = go(t->a, 1) + " -> " + go(*cod, 0);
        } else {
          std::string name = fresh(t->hint);
          const char* open = t->ann == Ann::Relevant ? "(" : "[";
          const char* close = t->ann == Ann::Relevant ? ")" : "]";
          s = std::string(open) + name + " : " + go(t->a, 0) + close;
          scope_.push_back(name);
          s += " -> " + go(t->b, 0);
          scope_.pop_back();
        }
        return prec > 0 ? "(" + s + ")" : s;
      }
      case TermKind::Lam: {
        std::string s = "fun";
        TermPtr cur = t;
        std::size_t pushed = 0;
        while (cur && cur->kind == TermKind::Lam) {
          std::string name = fresh(cur->hint);
          const char* open = cur->ann == Ann::Relevant ? " (" : " [";
          const char* close = cur->ann == Ann::Relevant ? ")" : "]";
          s += std::string(open) + name + " : " + go(cur->a, 0) + close;
          scope_.push_back(name);
          ++pushed;
          cur = cur->b;
        }
        s += " => " + go(cur, 0);
        while (pushed--) scope_.pop_back();
        return prec > 0 ? "(" + s + ")" : s;
      }
      case TermKind::App: {
        std::string s;
        if (t->ann == Ann::Relevant)
          s = go(t->a, 1) + " " + go(t->b, 2);
        else
          s = go(t->a, 1) + " [" + go(t->b, 0) + "]";
        return prec > 1 ? "(" + s + ")" : s;
      }
      case TermKind::Sigma: {
        std::string name = fresh(t->hint);
        const char* open = t->ann == Ann::Relevant ? "(" : "[";
        const char* close = t->ann == Ann::Relevant ? ")" : "]";
        std::string s = std::string("Sig ") + open + name + " : " + go(t->a, 0) + close + ". ";
        scope_.push_back(name);
        s += go(t->b, 0);
        scope_.pop_back();
        return prec > 0 ? "(" + s + ")" : s;
      }
      case TermKind::Pair: {
        if (t->ann == Ann::Relevant)
          return "(" + go(t->a, 0) + " , " + go(t->b, 0) + ")";
        return "([" + go(t->a, 0) + "] , " + go(t->b, 0) + ")";
      }
      case TermKind::Split: {
        std::string x = fresh(t->hint);
        scope_.push_back(x);
        std::string y = fresh(t->hint2);
        scope_.pop_back();
        std::string s = "let (" + x + " , " + y + ") = " + go(t->a, 0) + " in ";
        scope_.push_back(x);
        scope_.push_back(y);
        s += go(t->b, 0);
        scope_.pop_back();
        scope_.pop_back();
        return prec > 0 ? "(" + s + ")" : s;
      }
      case TermKind::SqTy: {
        std::string s = "Sq " + go(t->a, 2);
        return prec > 1 ? "(" + s + ")" : s;
      }
      case TermKind::SqVal: {
        std::string s = "sq " + go(t->a, 2);
        return prec > 1 ? "(" + s + ")" : s;
      }
      case TermKind::SqElim: {
        std::string x = fresh(t->hint);
        std::string s = "let sq " + x + " = " + go(t->a, 0) + " in ";
        scope_.push_back(x);
        s += go(t->b, 0);
        scope_.pop_back();
        return prec > 0 ? "(" + s + ")" : s;
      }
    }
    return "?";
  }

  std::string fresh(const std::string& hint) {
    std::string base = (hint.empty() || hint == "_") ? "x" : hint;
    std::string name = base;
    int n = 0;
    while (taken(name)) name = base + std::to_string(++n);
    return name;
  }

 private:
  bool taken(const std::string& name) const {
    for (const auto& s : scope_)
      if (s == name) return true;
    return false;
  }

  std::vector<std::string> scope_;
};

}  // namespace

std::string print(const TermPtr& t, const std::vector<std::string>& scope) {
  return Printer(scope).go(t, 0);
}

std::vector<std::string> scope_names(const Context& ctx) {
  std::vector<std::string> names;
  names.reserve(ctx.size());
  for (const auto& b : ctx.bindings()) {
    std::string base = (b.name.empty() || b.name == "_") ? "x" : b.name;
    std::string name = base;
    int n = 0;
    auto taken = [&](const std::string& s) {
      for (const auto& existing : names)
        if (existing == s) return true;
      return false;
    };
    while (taken(name)) name = base + std::to_string(++n);
    names.push_back(name);
  }
  return names;
}

std::string print_in(const Context& ctx, const TermPtr& t) {
  return print(t, scope_names(ctx));
}

}  // namespace iitt
