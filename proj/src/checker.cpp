#include "iitt/checker.hpp"

#include <utility>

#include "iitt/equality.hpp"
#include "iitt/surface.hpp"

namespace iitt {

namespace {

[[noreturn]] void type_error(std::string msg) {
  throw TypeError{make_diag(DiagCode::Type, std::move(msg))};
}

[[noreturn]] void dummy_error(std::string msg) {
  throw TypeError{make_diag(DiagCode::Dummy, std::move(msg))};
}

void require_eq_types(const Context& ctx, const TermPtr& got,
                      const TermPtr& want, Fuel& fuel, const char* where) {
  EqResult r = ty_eq(ctx, got, want, fuel);
  if (r.fuel_exhausted()) throw FuelExhausted();
  if (r.rejected()) {
    throw TypeError{make_diag(
        DiagCode::Eq, std::string(where) + ": expected type " +
                          print_in(ctx, want) + " but found " +
                          print_in(ctx, got) + " (" + r.reason + ")")};
  }
}

TermPtr whnf_or_fail(const TermPtr& t, Fuel& fuel) {
  try {
    return whnf(t, fuel);
  } catch (const IllShaped& e) {
    type_error(std::string("stuck reduction: ") + e.what());
  }
}

}  // namespace

TermPtr infer(const Context& ctx, const TermPtr& t, Fuel& fuel) {
  switch (t->kind) {
    case TermKind::Var: {
      if (t->index >= ctx.size())
        type_error("variable index " + std::to_string(t->index) +
                   " out of scope");
      const Binding& b = ctx.lookup(t->index);
      if (b.ann != Ann::Relevant)
        type_error("variable '" + (b.name.empty() ? "_" : b.name) +
                   "' is irrelevant here and cannot be used relevantly");
      return ctx.lookup_type(t->index);
    }
    case TermKind::Sort:
      return mk_sort(sort_axiom(t->level));
    case TermKind::Pi:
    case TermKind::Sigma: {
      std::uint32_t s1 = check_is_type(ctx, t->a, fuel);
      Context inner = ctx.extended(t->ann, t->a, t->hint);
      std::uint32_t s2 = check_is_type(inner, t->b, fuel);
      return mk_sort(sort_rule(s1, s2));
    }
    case TermKind::Lam: {
      check_is_type(ctx, t->a, fuel);
      Context inner = ctx.extended(t->ann, t->a, t->hint);
      TermPtr body_ty = infer(inner, t->b, fuel);
      return mk_pi(t->ann, t->a, body_ty, t->hint);
    }
    case TermKind::App: {
      TermPtr fn_ty = whnf_or_fail(infer(ctx, t->a, fuel), fuel);
      if (fn_ty->kind != TermKind::Pi)
        type_error("application of a non-function (head type " +
                   print_in(ctx, fn_ty) + ")");
      if (fn_ty->ann != t->ann)
        type_error(t->ann == Ann::Irrelevant
                       ? "irrelevant application of a relevant function"
                       : "relevant application of an irrelevant function");
      CheckMode mode = t->ann == Ann::Irrelevant ? CheckMode::Irrelevant
                                                 : CheckMode::Relevant;
      check(ctx, t->b, fn_ty->a, mode, fuel);
      return subst1(fn_ty->b, t->b);
    }
    case TermKind::UnitTy:
      return mk_sort(0);
    case TermKind::UnitVal:
      return mk_unit_ty();
    case TermKind::Pair:
      type_error("a pair needs a pair type ascription to check against");
    case TermKind::Split: {
      TermPtr scrut_ty = whnf_or_fail(infer(ctx, t->a, fuel), fuel);
      if (scrut_ty->kind != TermKind::Sigma)
        type_error("let (x , y) scrutinee is not of pair type (found " +
                   print_in(ctx, scrut_ty) + ")");
      Context inner = ctx.extended(scrut_ty->ann, scrut_ty->a, t->hint)
                          .extended(Ann::Relevant, scrut_ty->b, t->hint2);
      TermPtr body_ty = infer(inner, t->b, fuel);
      auto out = strengthen(body_ty, 2);
      if (!out)
        type_error("the result type of let (x , y) mentions the bound "
                   "variables: " + print_in(inner, body_ty));
      return *out;
    }
    case TermKind::SqTy: {
      std::uint32_t s = check_is_type(ctx, t->a, fuel);
      return mk_sort(s);
    }
    case TermKind::SqVal: {
      // sq t : Sq T where t is a proof: infer in the resurrected context.
      TermPtr inner_ty = infer(resurrect(ctx), t->a, fuel);
      return mk_sq_ty(inner_ty);
    }
    case TermKind::SqElim: {
      TermPtr scrut_ty = whnf_or_fail(infer(ctx, t->a, fuel), fuel);
      if (scrut_ty->kind != TermKind::SqTy)
        type_error("let sq scrutinee is not of squash type (found " +
                   print_in(ctx, scrut_ty) + ")");
      Context inner = ctx.extended(Ann::Irrelevant, scrut_ty->a, t->hint);
      TermPtr body_ty = infer(inner, t->b, fuel);
      auto out = strengthen(body_ty, 1);
      if (!out)
        type_error("the result type of let sq mentions the bound variable: " +
                   print_in(inner, body_ty));
      return *out;
    }
    case TermKind::Dummy:
      dummy_error("irr has no type of its own; it only checks against a "
                  "type in irrelevant position");
  }
  type_error("malformed term");
}

void check(const Context& ctx, const TermPtr& t, const TermPtr& type,
           CheckMode mode, Fuel& fuel) {
  if (mode == CheckMode::Irrelevant) {
    // An irrelevant obligation is a relevant one in the resurrected
    // context, with the dummy additionally accepted.
    if (t->kind == TermKind::Dummy) return;
    check(resurrect(ctx), t, type, CheckMode::Relevant, fuel);
    return;
  }
  if (t->kind == TermKind::Dummy)
    dummy_error("irr is only accepted in irrelevant positions");
  switch (t->kind) {
    case TermKind::Lam: {
      TermPtr want = whnf_or_fail(type, fuel);
      if (want->kind != TermKind::Pi)
        type_error("a function cannot have type " + print_in(ctx, want));
      if (want->ann != t->ann)
        type_error("function relevance does not match its type (fun " +
                   std::string(t->ann == Ann::Irrelevant ? "[..]" : "(..)") +
                   " against " + print_in(ctx, want) + ")");
      check_is_type(ctx, t->a, fuel);
      require_eq_types(ctx, t->a, want->a, fuel, "function domain");
      Context inner = ctx.extended(t->ann, t->a, t->hint);
      check(inner, t->b, want->b, CheckMode::Relevant, fuel);
      return;
    }
    case TermKind::Pair: {
      TermPtr want = whnf_or_fail(type, fuel);
      if (want->kind != TermKind::Sigma)
        type_error("a pair cannot have type " + print_in(ctx, want));
      if (want->ann != t->ann)
        type_error("pair relevance does not match its type");
      CheckMode fst_mode = want->ann == Ann::Irrelevant ? CheckMode::Irrelevant
                                                        : CheckMode::Relevant;
      check(ctx, t->a, want->a, fst_mode, fuel);
      check(ctx, t->b, subst1(want->b, t->a), CheckMode::Relevant, fuel);
      return;
    }
    case TermKind::SqVal: {
      TermPtr want = whnf_or_fail(type, fuel);
      if (want->kind != TermKind::SqTy)
        type_error("sq only produces squash types, not " +
                   print_in(ctx, want));
      check(ctx, t->a, want->a, CheckMode::Irrelevant, fuel);
      return;
    }
    // The eliminators are non-dependent, so the expected type pushes into
    // the branch unchanged (shifted under the binders). This keeps
    // check-only branches (pairs, dummies) checkable.
    case TermKind::Split: {
      TermPtr scrut_ty = whnf_or_fail(infer(ctx, t->a, fuel), fuel);
      if (scrut_ty->kind != TermKind::Sigma)
        type_error("let (x , y) scrutinee is not of pair type (found " +
                   print_in(ctx, scrut_ty) + ")");
      Context inner = ctx.extended(scrut_ty->ann, scrut_ty->a, t->hint)
                          .extended(Ann::Relevant, scrut_ty->b, t->hint2);
      check(inner, t->b, shift(type, 2), CheckMode::Relevant, fuel);
      return;
    }
    case TermKind::SqElim: {
      TermPtr scrut_ty = whnf_or_fail(infer(ctx, t->a, fuel), fuel);
      if (scrut_ty->kind != TermKind::SqTy)
        type_error("let sq scrutinee is not of squash type (found " +
                   print_in(ctx, scrut_ty) + ")");
      Context inner = ctx.extended(Ann::Irrelevant, scrut_ty->a, t->hint);
      check(inner, t->b, shift(type, 1), CheckMode::Relevant, fuel);
      return;
    }
    default: {
      TermPtr got = infer(ctx, t, fuel);
      require_eq_types(ctx, got, type, fuel, "conversion");
      return;
    }
  }
}

std::uint32_t check_is_type(const Context& ctx, const TermPtr& t, Fuel& fuel) {
  TermPtr s = whnf_or_fail(infer(ctx, t, fuel), fuel);
  if (s->kind != TermKind::Sort)
    type_error("expected a type but " + print_in(ctx, t) + " has type " +
               print_in(ctx, s));
  return s->level;
}

void check_context(const Context& ctx, Fuel& fuel) {
  Context prefix;
  for (const auto& b : ctx.bindings()) {
    check_is_type(prefix, b.ty, fuel);
    prefix = prefix.extended(b);
  }
}

}  // namespace iitt
