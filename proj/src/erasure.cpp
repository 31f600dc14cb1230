#include "iitt/erasure.hpp"

#include <utility>
#include <vector>

#include "iitt/checker.hpp"
#include "iitt/eval.hpp"

namespace iitt {

unsigned ubinder_arity(UTermKind kind) {
  switch (kind) {
    case UTermKind::Lam:
    case UTermKind::Pi:
      return 1;
    case UTermKind::Split:
      return 2;
    default:
      return 0;
  }
}

namespace {

UTermPtr umake(UTermKind k) { return std::make_shared<UTerm>(k); }

const UTermPtr& uunit_singleton() {
  static const UTermPtr t = umake(UTermKind::Unit);
  return t;
}
const UTermPtr& udummy_singleton() {
  static const UTermPtr t = umake(UTermKind::Dummy);
  return t;
}

UTermPtr uwith_children(const UTermPtr& t, UTermPtr a, UTermPtr b) {
  if (a == t->a && b == t->b) return t;
  auto n = std::make_shared<UTerm>(*t);
  n->a = std::move(a);
  n->b = std::move(b);
  return n;
}

}  // namespace

UTermPtr umk_var(std::uint32_t index) {
  auto t = std::make_shared<UTerm>(UTermKind::Var);
  t->index = index;
  return t;
}

UTermPtr umk_lam(UTermPtr body, std::string hint) {
  auto t = std::make_shared<UTerm>(UTermKind::Lam);
  t->a = std::move(body);
  t->hint = std::move(hint);
  return t;
}

UTermPtr umk_app(UTermPtr fn, UTermPtr arg) {
  auto t = std::make_shared<UTerm>(UTermKind::App);
  t->a = std::move(fn);
  t->b = std::move(arg);
  return t;
}

UTermPtr umk_unit() { return uunit_singleton(); }

UTermPtr umk_pair(UTermPtr fst, UTermPtr snd) {
  auto t = std::make_shared<UTerm>(UTermKind::Pair);
  t->a = std::move(fst);
  t->b = std::move(snd);
  return t;
}

UTermPtr umk_split(UTermPtr scrut, UTermPtr body, std::string hint,
                   std::string hint2) {
  auto t = std::make_shared<UTerm>(UTermKind::Split);
  t->a = std::move(scrut);
  t->b = std::move(body);
  t->hint = std::move(hint);
  t->hint2 = std::move(hint2);
  return t;
}

UTermPtr umk_dummy() { return udummy_singleton(); }

UTermPtr umk_sort(std::uint32_t level) {
  auto t = std::make_shared<UTerm>(UTermKind::Sort);
  t->level = level;
  return t;
}

UTermPtr umk_pi(UTermPtr dom, UTermPtr cod, std::string hint) {
  auto t = std::make_shared<UTerm>(UTermKind::Pi);
  t->a = std::move(dom);
  t->b = std::move(cod);
  t->hint = std::move(hint);
  return t;
}

bool ualpha_eq(const UTermPtr& t, const UTermPtr& u) {
  if (t == u) return true;
  if (!t || !u) return false;
  if (t->kind != u->kind) return false;
  switch (t->kind) {
    case UTermKind::Var:
      return t->index == u->index;
    case UTermKind::Sort:
      return t->level == u->level;
    case UTermKind::Unit:
    case UTermKind::Dummy:
      return true;
    default:
      return ualpha_eq(t->a, u->a) && ualpha_eq(t->b, u->b);
  }
}

UTermPtr ushift(const UTermPtr& t, std::int64_t by, std::uint32_t cutoff) {
  if (!t || by == 0) return t;
  switch (t->kind) {
    case UTermKind::Var:
      if (t->index >= cutoff)
        return umk_var(static_cast<std::uint32_t>(t->index + by));
      return t;
    case UTermKind::Unit:
    case UTermKind::Dummy:
    case UTermKind::Sort:
      return t;
    default: {
      UTermPtr a = ushift(t->a, by, t->kind == UTermKind::Lam
                                        ? cutoff + 1
                                        : cutoff);
      // Lam binds in slot a; Pi and Split bind in slot b.
      std::uint32_t bcut = cutoff;
      if (t->kind == UTermKind::Pi) bcut += 1;
      if (t->kind == UTermKind::Split) bcut += 2;
      UTermPtr b = ushift(t->b, by, bcut);
      return uwith_children(t, std::move(a), std::move(b));
    }
  }
}

namespace {

// Parallel substitution mirroring the typed one: explicit prefix, then
// renumbering.
struct USubst {
  std::vector<UTermPtr> map;
  std::uint32_t shift = 0;

  UTermPtr var(std::uint32_t index) const {
    if (index < map.size()) return map[index];
    return umk_var(index - static_cast<std::uint32_t>(map.size()) + shift);
  }

  USubst lift() const {
    USubst s;
    s.map.reserve(map.size() + 1);
    s.map.push_back(umk_var(0));
    for (const auto& t : map) s.map.push_back(ushift(t, 1));
    s.shift = shift + 1;
    return s;
  }
};

UTermPtr usubst_at(const UTermPtr& t, const USubst& s) {
  if (!t) return t;
  switch (t->kind) {
    case UTermKind::Var:
      return s.var(t->index);
    case UTermKind::Unit:
    case UTermKind::Dummy:
    case UTermKind::Sort:
      return t;
    default: {
      USubst under_a = s;
      USubst under_b = s;
      if (t->kind == UTermKind::Lam) under_a = s.lift();
      if (t->kind == UTermKind::Pi) under_b = s.lift();
      if (t->kind == UTermKind::Split) under_b = s.lift().lift();
      UTermPtr a = usubst_at(t->a, under_a);
      UTermPtr b = usubst_at(t->b, under_b);
      return uwith_children(t, std::move(a), std::move(b));
    }
  }
}

}  // namespace

UTermPtr usubst1(const UTermPtr& body, const UTermPtr& u) {
  USubst s;
  s.map.push_back(u);
  return usubst_at(body, s);
}

UTermPtr usubst2(const UTermPtr& body, const UTermPtr& fst,
                 const UTermPtr& snd) {
  USubst s;
  s.map.push_back(snd);
  s.map.push_back(fst);
  return usubst_at(body, s);
}

bool uoccurs_free(const UTermPtr& t, std::uint32_t index) {
  if (!t) return false;
  if (t->kind == UTermKind::Var) return t->index == index;
  std::uint32_t acut = index, bcut = index;
  if (t->kind == UTermKind::Lam) acut += 1;
  if (t->kind == UTermKind::Pi) bcut += 1;
  if (t->kind == UTermKind::Split) bcut += 2;
  return uoccurs_free(t->a, acut) || uoccurs_free(t->b, bcut);
}

std::size_t uterm_size(const UTermPtr& t) {
  if (!t) return 0;
  return 1 + uterm_size(t->a) + uterm_size(t->b);
}

namespace {

struct UPrinter {
  bool named;
  std::vector<std::string> scope;

  std::string fresh(const std::string& hint) {
    std::string base = hint.empty() || hint == "_" ? "x" : hint;
    std::string name = base;
    int n = 0;
    while (true) {
      bool taken = false;
      for (const auto& s : scope)
        if (s == name) { taken = true; break; }
      if (!taken) return name;
      name = base + std::to_string(++n);
    }
  }

  // prec: 0 term, 1 application, 2 atom
  std::string go(const UTermPtr& t, int prec) {
    if (!t) return "?";
    switch (t->kind) {
      case UTermKind::Var: {
        if (!named) return std::to_string(t->index);
        if (t->index < scope.size()) return scope[scope.size() - 1 - t->index];
        return "!" + std::to_string(t->index);  // dangling
      }
      case UTermKind::Unit:
        return "()";
      case UTermKind::Dummy:
        return "irr";
      case UTermKind::Sort:
        return "Set" + std::to_string(t->level);
      case UTermKind::Lam: {
        std::string name = named ? fresh(t->hint) : "";
        scope.push_back(name);
        std::string body = go(t->a, 0);
        scope.pop_back();
        std::string s = "\\" + name + ". " + body;
        return prec > 0 ? "(" + s + ")" : s;
      }
      case UTermKind::App: {
        std::string s = go(t->a, 1) + " " + go(t->b, 2);
        return prec > 1 ? "(" + s + ")" : s;
      }
      case UTermKind::Pair:
        return "(" + go(t->a, 0) + " , " + go(t->b, 0) + ")";
      case UTermKind::Split: {
        std::string x = named ? fresh(t->hint) : "";
        scope.push_back(x);
        std::string y = named ? fresh(t->hint2.empty() ? "y" : t->hint2) : "";
        scope.pop_back();
        std::string s = "let (" + x + " , " + y + ") = " + go(t->a, 0);
        scope.push_back(x);
        scope.push_back(y);
        s += " in " + go(t->b, 0);
        scope.pop_back();
        scope.pop_back();
        return prec > 0 ? "(" + s + ")" : s;
      }
      case UTermKind::Pi: {
        std::string name = named ? fresh(t->hint) : "";
        std::string dom = go(t->a, 1);
        scope.push_back(name);
        std::string cod = go(t->b, 0);
        scope.pop_back();
        std::string s = "pi " + name + ":" + dom + ". " + cod;
        return prec > 0 ? "(" + s + ")" : s;
      }
    }
    return "?";
  }
};

}  // namespace

std::string print_untyped(const UTermPtr& t, bool named) {
  UPrinter p{named, {}};
  return p.go(t, 0);
}

namespace {

class InternalEraser {
 public:
  explicit InternalEraser(Fuel& fuel) : fuel_(fuel) {}

  // `expected` is the type the result will be re-checked against, when the
  // position supplies one; null in synthesis positions.
  TermPtr go(const Context& ctx, const TermPtr& t, const TermPtr& expected) {
    TermPtr want = expected ? safe_whnf(expected) : nullptr;
    switch (t->kind) {
      case TermKind::Sort:
      case TermKind::Var:
      case TermKind::UnitTy:
      case TermKind::UnitVal:
      case TermKind::Dummy:
        return t;
      case TermKind::App: {
        TermPtr fn = go(ctx, t->a, nullptr);
        if (t->ann == Ann::Irrelevant)
          return mk_app(Ann::Irrelevant, fn, mk_dummy());
        // The argument is checked against the function's domain.
        TermPtr dom;
        if (TermPtr fn_ty = safe_infer(ctx, t->a)) {
          TermPtr w = safe_whnf(fn_ty);
          if (w && w->kind == TermKind::Pi) dom = w->a;
        }
        return mk_app(Ann::Relevant, fn, go(ctx, t->b, dom));
      }
      case TermKind::Lam: {
        TermPtr cod =
            want && want->kind == TermKind::Pi ? want->b : nullptr;
        TermPtr dom = go(ctx, t->a, nullptr);
        Context inner = ctx.extended(t->ann, t->a, t->hint);
        return mk_lam(t->ann, dom, go(inner, t->b, cod), t->hint);
      }
      case TermKind::Pair: {
        bool known = want && want->kind == TermKind::Sigma;
        TermPtr fst = t->ann == Ann::Irrelevant
                          ? mk_dummy()
                          : go(ctx, t->a, known ? want->a : nullptr);
        TermPtr snd_ty = known ? subst1(want->b, fst) : nullptr;
        return mk_pair(t->ann, fst, go(ctx, t->b, snd_ty));
      }
      case TermKind::Pi:
      case TermKind::Sigma: {
        TermPtr dom = go(ctx, t->a, nullptr);
        Context inner = ctx.extended(t->ann, t->a, t->hint);
        TermPtr cod = go(inner, t->b, nullptr);
        if (dom == t->a && cod == t->b) return t;
        auto n = std::make_shared<Term>(*t);
        n->a = std::move(dom);
        n->b = std::move(cod);
        return n;
      }
      case TermKind::SqTy:
        return mk_sq_ty(go(ctx, t->a, nullptr));
      case TermKind::SqVal: {
        // Only erasable when the squashed type is supplied; in synthesis
        // position the payload is what determines it.
        if (want && want->kind == TermKind::SqTy) return mk_sq_val(mk_dummy());
        return mk_sq_val(go(resurrect(ctx), t->a, nullptr));
      }
      case TermKind::Split: {
        TermPtr scrut = go(ctx, t->a, nullptr);
        Context inner = ctx;
        if (TermPtr s_ty = safe_infer(ctx, t->a)) {
          TermPtr w = safe_whnf(s_ty);
          if (w && w->kind == TermKind::Sigma)
            inner = ctx.extended(w->ann, w->a, t->hint)
                        .extended(Ann::Relevant, w->b, t->hint2);
        }
        if (inner.size() == ctx.size()) return t;  // ill-typed input: keep
        return mk_split(scrut, go(inner, t->b, nullptr), t->hint, t->hint2);
      }
      case TermKind::SqElim: {
        TermPtr scrut = go(ctx, t->a, nullptr);
        if (TermPtr s_ty = safe_infer(ctx, t->a)) {
          TermPtr w = safe_whnf(s_ty);
          if (w && w->kind == TermKind::SqTy) {
            Context inner = ctx.extended(Ann::Irrelevant, w->a, t->hint);
            return mk_sq_elim(scrut, go(inner, t->b, nullptr), t->hint);
          }
        }
        return t;  // ill-typed input: keep
      }
    }
    return t;
  }

 private:
  TermPtr safe_infer(const Context& ctx, const TermPtr& t) {
    try {
      return infer(ctx, t, fuel_);
    } catch (const TypeError&) {
      return nullptr;
    } catch (const IllShaped&) {
      return nullptr;
    }
  }
  TermPtr safe_whnf(const TermPtr& t) {
    try {
      return whnf(t, fuel_);
    } catch (const IllShaped&) {
      return nullptr;
    }
  }

  Fuel& fuel_;
};

}  // namespace

TermPtr internal_erase(const Context& ctx, const TermPtr& t,
                       const TermPtr& type, std::uint64_t fuel) {
  Fuel f{fuel};
  return InternalEraser(f).go(ctx, t, type);
}

TermPtr internal_erase(const TermPtr& t) {
  Fuel f{kDefaultFuel};
  Context empty;
  return InternalEraser(f).go(empty, t, nullptr);
}

namespace {

// -1 marks a deleted binder: a variable pointing at it has no runtime
// counterpart (it was a proof), so it erases to the dummy.
struct EraseEnv {
  std::vector<std::int64_t> slots;  // core index (innermost first when read back)
  std::uint32_t out_depth = 0;

  void push_kept() {
    slots.push_back(out_depth);
    ++out_depth;
  }
  void push_deleted() { slots.push_back(-1); }
  void pop(bool kept) {
    slots.pop_back();
    if (kept) --out_depth;
  }

  UTermPtr var(std::uint32_t core_index) const {
    if (core_index >= slots.size()) {
      // Free beyond the translation environment: renumber by the number of
      // deleted binders below it.
      std::uint32_t deleted = 0;
      for (auto s : slots)
        if (s < 0) ++deleted;
      return umk_var(core_index - deleted);
    }
    std::int64_t slot = slots[slots.size() - 1 - core_index];
    if (slot < 0) return umk_dummy();
    return umk_var(out_depth - 1 - static_cast<std::uint32_t>(slot));
  }
};

UTermPtr erase_ext(const TermPtr& t, EraseEnv& env) {
  switch (t->kind) {
    case TermKind::Var:
      return env.var(t->index);
    case TermKind::UnitVal:
      return umk_unit();
    case TermKind::Dummy:
      return umk_dummy();
    // Type formers have no runtime content.
    case TermKind::Sort:
    case TermKind::Pi:
    case TermKind::UnitTy:
    case TermKind::Sigma:
    case TermKind::SqTy:
      return umk_dummy();
    case TermKind::Lam: {
      if (t->ann == Ann::Irrelevant) {
        env.push_deleted();
        UTermPtr body = erase_ext(t->b, env);
        env.pop(false);
        return body;
      }
      env.push_kept();
      UTermPtr body = erase_ext(t->b, env);
      env.pop(true);
      return umk_lam(std::move(body), t->hint);
    }
    case TermKind::App: {
      if (t->ann == Ann::Irrelevant) return erase_ext(t->a, env);
      UTermPtr fn = erase_ext(t->a, env);
      UTermPtr arg = erase_ext(t->b, env);
      return umk_app(std::move(fn), std::move(arg));
    }
    case TermKind::Pair: {
      UTermPtr fst = t->ann == Ann::Irrelevant ? umk_dummy()
                                               : erase_ext(t->a, env);
      UTermPtr snd = erase_ext(t->b, env);
      return umk_pair(std::move(fst), std::move(snd));
    }
    case TermKind::Split: {
      UTermPtr scrut = erase_ext(t->a, env);
      env.push_kept();
      env.push_kept();
      UTermPtr body = erase_ext(t->b, env);
      env.pop(true);
      env.pop(true);
      return umk_split(std::move(scrut), std::move(body), t->hint, t->hint2);
    }
    case TermKind::SqVal:
      return umk_dummy();
    case TermKind::SqElim: {
      // The squashed content never runs; the bound variable becomes the dummy.
      env.push_deleted();
      UTermPtr body = erase_ext(t->b, env);
      env.pop(false);
      return body;
    }
  }
  return umk_dummy();
}

UTermPtr erase_ann(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
      return umk_var(t->index);
    case TermKind::Sort:
      return umk_sort(t->level);
    case TermKind::Pi:
      return umk_pi(erase_ann(t->a), erase_ann(t->b), t->hint);
    case TermKind::Lam:
      return umk_lam(erase_ann(t->b), t->hint);
    case TermKind::App:
      return umk_app(erase_ann(t->a), erase_ann(t->b));
    case TermKind::UnitTy:
      return umk_dummy();
    case TermKind::UnitVal:
      return umk_unit();
    case TermKind::Sigma:
      return umk_dummy();
    case TermKind::Pair:
      return umk_pair(erase_ann(t->a), erase_ann(t->b));
    case TermKind::Split:
      return umk_split(erase_ann(t->a), erase_ann(t->b), t->hint, t->hint2);
    case TermKind::SqTy:
    case TermKind::SqVal:
      return umk_dummy();
    case TermKind::SqElim: {
      UTermPtr body = erase_ann(t->b);
      return usubst1(body, umk_dummy());
    }
    case TermKind::Dummy:
      return umk_dummy();
  }
  return umk_dummy();
}

}  // namespace

UTermPtr erase_external(const TermPtr& t) {
  EraseEnv env;
  return erase_ext(t, env);
}

UTermPtr erase_annotations(const TermPtr& t) { return erase_ann(t); }

}  // namespace iitt
