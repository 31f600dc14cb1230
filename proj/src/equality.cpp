#include "iitt/equality.hpp"

#include <utility>
#include <vector>

#include "iitt/checker.hpp"

namespace iitt {

namespace {

// Internal rejection unwind; converted to EqResult at the public boundary.
struct EqFail {
  std::vector<std::string> chain;
};

[[noreturn]] void fail(std::string why) { throw EqFail{{std::move(why)}}; }

const char* kind_name(TermKind k) {
  switch (k) {
    case TermKind::Sort: return "sort";
    case TermKind::Pi: return "function type";
    case TermKind::Var: return "variable";
    case TermKind::Lam: return "lambda";
    case TermKind::App: return "application";
    case TermKind::UnitTy: return "Unit";
    case TermKind::UnitVal: return "()";
    case TermKind::Sigma: return "pair type";
    case TermKind::Pair: return "pair";
    case TermKind::Split: return "pair elimination";
    case TermKind::SqTy: return "squash type";
    case TermKind::SqVal: return "squash intro";
    case TermKind::SqElim: return "squash elimination";
    case TermKind::Dummy: return "irr";
  }
  return "?";
}

class EqEngine {
 public:
  explicit EqEngine(Fuel& fuel) : fuel_(fuel) {}

  // Type equality on general types: normalize, then compare whnfs.
  void ty(const Context& ctx, const TermPtr& t1, const TermPtr& t2) {
    ty_w(ctx, whnf(t1, fuel_), whnf(t2, fuel_));
  }

  void ty_w(const Context& ctx, const TermPtr& a1, const TermPtr& a2) {
    if (a1->kind != a2->kind) {
      // Neutral types of any shape still compare structurally.
      if (is_neutral(a1) && is_neutral(a2)) {
        ne(ctx, a1, a2);  // inferred type discarded
        return;
      }
      fail(std::string("type heads differ: ") + kind_name(a1->kind) +
           " vs " + kind_name(a2->kind));
    }
    switch (a1->kind) {
      case TermKind::Sort:
        if (a1->level != a2->level)
          fail("sort levels differ: Set" + std::to_string(a1->level) +
               " vs Set" + std::to_string(a2->level));
        return;
      case TermKind::Pi:
      case TermKind::Sigma: {
        if (a1->ann != a2->ann) fail("relevance annotations differ");
        ty(ctx, a1->a, a2->a);
        Context inner = ctx.extended(a1->ann, a1->a, a1->hint);
        ty(inner, a1->b, a2->b);
        return;
      }
      case TermKind::UnitTy:
        return;
      case TermKind::SqTy:
        ty(ctx, a1->a, a2->a);
        return;
      default:
        if (is_neutral(a1) && is_neutral(a2)) {
          ne(ctx, a1, a2);
          return;
        }
        fail(std::string("not a type head: ") + kind_name(a1->kind));
    }
  }

  // Structural equality; returns the inferred type of the left neutral.
  TermPtr ne(const Context& ctx, const TermPtr& n1, const TermPtr& n2) {
    if (n1->kind != n2->kind)
      fail(std::string("neutral shapes differ: ") + kind_name(n1->kind) +
           " vs " + kind_name(n2->kind));
    switch (n1->kind) {
      case TermKind::Var: {
        if (n1->index != n2->index) fail("distinct variables");
        if (n1->index >= ctx.size()) fail("variable out of scope");
        const Binding& b = ctx.lookup(n1->index);
        if (b.ann != Ann::Relevant)
          fail("irrelevant variable in relevant position");
        return ctx.lookup_type(n1->index);
      }
      case TermKind::App: {
        if (n1->ann != n2->ann) fail("application relevance differs");
        TermPtr head_ty = ne_w(ctx, n1->a, n2->a);
        if (head_ty->kind != TermKind::Pi)
          fail("neutral head is not of function type");
        if (head_ty->ann != n1->ann)
          fail("application relevance disagrees with the function type");
        if (n1->ann == Ann::Relevant) {
          tm(ctx, n1->b, n2->b, head_ty->a);
        }
        // Irrelevant arguments are deliberately not compared.
        return subst1(head_ty->b, n1->b);
      }
      case TermKind::Split: {
        TermPtr scrut_ty = ne_w(ctx, n1->a, n2->a);
        if (scrut_ty->kind != TermKind::Sigma)
          fail("split scrutinee is not of pair type");
        Context inner = ctx.extended(scrut_ty->ann, scrut_ty->a, n1->hint)
                            .extended(Ann::Relevant, scrut_ty->b, n1->hint2);
        return branch(inner, n1->b, n2->b, 2);
      }
      case TermKind::SqElim: {
        TermPtr scrut_ty = ne_w(ctx, n1->a, n2->a);
        if (scrut_ty->kind != TermKind::SqTy)
          fail("squash-elim scrutinee is not of squash type");
        Context inner = ctx.extended(Ann::Irrelevant, scrut_ty->a, n1->hint);
        return branch(inner, n1->b, n2->b, 1);
      }
      default:
        fail(std::string("not a neutral: ") + kind_name(n1->kind));
    }
  }

  TermPtr ne_w(const Context& ctx, const TermPtr& n1, const TermPtr& n2) {
    return whnf(ne(ctx, n1, n2), fuel_);
  }

  // Type-directed equality at a general type.
  void tm(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
          const TermPtr& type) {
    tm_w(ctx, t1, t2, whnf(type, fuel_));
  }

  void tm_w(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
            const TermPtr& a) {
    switch (a->kind) {
      case TermKind::Pi: {
        // Eta: apply both sides to a fresh variable of the domain type.
        Context inner = ctx.extended(a->ann, a->a, a->hint);
        TermPtr x = mk_var(0);
        tm(inner, mk_app(a->ann, shift(t1, 1), x),
           mk_app(a->ann, shift(t2, 1), x), a->b);
        return;
      }
      case TermKind::Sort:
        ty(ctx, t1, t2);
        return;
      case TermKind::UnitTy:
        return;  // all unit inhabitants are equal
      case TermKind::SqTy:
        return;  // all squash inhabitants are equal
      case TermKind::Sigma: {
        TermPtr w1 = whnf(t1, fuel_);
        TermPtr w2 = whnf(t2, fuel_);
        if (w1->kind == TermKind::Pair && w2->kind == TermKind::Pair) {
          if (w1->ann != a->ann || w2->ann != a->ann)
            fail("pair relevance disagrees with its type");
          if (a->ann == Ann::Relevant) tm(ctx, w1->a, w2->a, a->a);
          // Irrelevant first components: each side is well-typed by
          // precondition; they are not compared.
          tm(ctx, w1->b, w2->b, subst1(a->b, w1->a));
          return;
        }
        if (is_neutral(w1) && is_neutral(w2)) {
          ne(ctx, w1, w2);
          return;
        }
        fail("pair and neutral do not mix at a weak pair type");
      }
      default: {
        if (is_neutral(a)) {
          TermPtr w1 = whnf(t1, fuel_);
          TermPtr w2 = whnf(t2, fuel_);
          if (!is_neutral(w1) || !is_neutral(w2))
            fail("non-neutral term at a neutral type");
          ne(ctx, w1, w2);  // inferred type deliberately not checked
          return;
        }
        fail(std::string("not a type head: ") + kind_name(a->kind));
      }
    }
  }

  // Resurrected self-relations; both sides must infer the same type.
  TermPtr ne_irr(const Context& ctx, const TermPtr& n1, const TermPtr& n2) {
    Context res = resurrect(ctx);
    TermPtr a1 = ne_w(res, n1, n1);
    TermPtr a2 = ne_w(res, n2, n2);
    if (!alpha_eq(a1, a2))
      fail("the two sides infer different types under resurrection");
    return a1;
  }

 private:
  // Eliminator branches are compared type-directedly; the branch type is
  // synthesized from the left branch and must not touch the bound variables.
  TermPtr branch(const Context& inner, const TermPtr& b1, const TermPtr& b2,
                 std::uint32_t binders) {
    TermPtr v_ty;
    try {
      v_ty = infer(inner, b1, fuel_);
    } catch (const TypeError& e) {
      fail("eliminator branch is ill-typed: " + e.diag.message);
    }
    tm(inner, b1, b2, v_ty);
    auto out = strengthen(v_ty, binders);
    if (!out) fail("eliminator branch type depends on the bound variables");
    return *out;
  }

  Fuel& fuel_;
};

template <typename F>
EqResult run_eq(F&& f) {
  try {
    f();
    return EqResult::ok();
  } catch (const EqFail& e) {
    std::string reason;
    for (const auto& part : e.chain) {
      if (!reason.empty()) reason += "; ";
      reason += part;
    }
    return EqResult::no(std::move(reason));
  } catch (const FuelExhausted&) {
    return EqResult::out_of_fuel();
  } catch (const IllShaped& e) {
    return EqResult::no(std::string("stuck reduction: ") + e.what());
  }
}

template <typename F>
NeEqResult run_ne(F&& f) {
  NeEqResult out;
  out.result = run_eq([&] { out.type = f(); });
  if (!out.result.accepted()) out.type = nullptr;
  return out;
}

}  // namespace

EqResult ty_eq(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
               Fuel& fuel) {
  return run_eq([&] { EqEngine(fuel).ty(ctx, t1, t2); });
}

EqResult ty_eq_whnf(const Context& ctx, const TermPtr& a1, const TermPtr& a2,
                    Fuel& fuel) {
  return run_eq([&] { EqEngine(fuel).ty_w(ctx, a1, a2); });
}

NeEqResult ne_eq(const Context& ctx, const TermPtr& n1, const TermPtr& n2,
                 Fuel& fuel) {
  return run_ne([&] { return EqEngine(fuel).ne(ctx, n1, n2); });
}

NeEqResult ne_eq_whnf(const Context& ctx, const TermPtr& n1, const TermPtr& n2,
                      Fuel& fuel) {
  return run_ne([&] { return EqEngine(fuel).ne_w(ctx, n1, n2); });
}

EqResult tm_eq(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
               const TermPtr& type, Fuel& fuel) {
  return run_eq([&] { EqEngine(fuel).tm(ctx, t1, t2, type); });
}

EqResult tm_eq_whnf(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
                    const TermPtr& type_whnf, Fuel& fuel) {
  return run_eq([&] { EqEngine(fuel).tm_w(ctx, t1, t2, type_whnf); });
}

NeEqResult ne_eq_irr(const Context& ctx, const TermPtr& n1, const TermPtr& n2,
                     Fuel& fuel) {
  return run_ne([&] { return EqEngine(fuel).ne_irr(ctx, n1, n2); });
}

EqResult ty_eq(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
               std::uint64_t fuel) {
  Fuel f{fuel};
  return ty_eq(ctx, t1, t2, f);
}

EqResult tm_eq(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
               const TermPtr& type, std::uint64_t fuel) {
  Fuel f{fuel};
  return tm_eq(ctx, t1, t2, type, f);
}

NeEqResult ne_eq(const Context& ctx, const TermPtr& n1, const TermPtr& n2,
                 std::uint64_t fuel) {
  Fuel f{fuel};
  return ne_eq(ctx, n1, n2, f);
}

NeEqResult ne_eq_irr(const Context& ctx, const TermPtr& n1, const TermPtr& n2,
                     std::uint64_t fuel) {
  Fuel f{fuel};
  return ne_eq_irr(ctx, n1, n2, f);
}

}  // namespace iitt
