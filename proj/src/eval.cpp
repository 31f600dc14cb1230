#include "iitt/eval.hpp"

namespace iitt {

void Fuel::tick() {
  if (remaining == 0) throw FuelExhausted();
  --remaining;
}

WhnfKind classify(const TermPtr& t) {
  if (!t) return WhnfKind::NotWhnf;
  switch (t->kind) {
    case TermKind::Sort: return WhnfKind::Sort;
    case TermKind::Pi: return WhnfKind::Pi;
    case TermKind::Lam: return WhnfKind::Lam;
    case TermKind::UnitTy: return WhnfKind::UnitTy;
    case TermKind::UnitVal: return WhnfKind::UnitVal;
    case TermKind::Sigma: return WhnfKind::Sigma;
    case TermKind::Pair: return WhnfKind::Pair;
    case TermKind::SqTy: return WhnfKind::SqTy;
    case TermKind::SqVal: return WhnfKind::SqVal;
    case TermKind::Dummy: return WhnfKind::Dummy;
    case TermKind::Var: return WhnfKind::Neutral;
    case TermKind::App:
    case TermKind::Split:
    case TermKind::SqElim:
      return is_neutral(t->a) ? WhnfKind::Neutral : WhnfKind::NotWhnf;
  }
  return WhnfKind::NotWhnf;
}

bool is_neutral(const TermPtr& t) {
  if (!t) return false;
  switch (t->kind) {
    case TermKind::Var:
      return true;
    case TermKind::App:
    case TermKind::Split:
    case TermKind::SqElim:
      return is_neutral(t->a);
    default:
      return false;
  }
}

bool is_whnf(const TermPtr& t) { return classify(t) != WhnfKind::NotWhnf; }

TermPtr app_active(const TermPtr& fn_whnf, Ann ann, const TermPtr& arg,
                   Fuel& fuel) {
  if (fn_whnf->kind == TermKind::Lam) {
    fuel.tick();
    return whnf(subst1(fn_whnf->b, arg), fuel);
  }
  if (is_neutral(fn_whnf)) return mk_app(ann, fn_whnf, arg);
  throw IllShaped("application of a non-function weak head normal form");
}

TermPtr whnf(const TermPtr& t, Fuel& fuel) {
  switch (t->kind) {
    case TermKind::App: {
      TermPtr fn = whnf(t->a, fuel);
      if (fn == t->a && is_neutral(fn)) return t;  // already a whnf
      return app_active(fn, t->ann, t->b, fuel);
    }
    case TermKind::Split: {
      TermPtr scrut = whnf(t->a, fuel);
      if (scrut->kind == TermKind::Pair) {
        fuel.tick();
        return whnf(subst2(t->b, scrut->a, scrut->b), fuel);
      }
      if (is_neutral(scrut)) {
        if (scrut == t->a) return t;
        return mk_split(scrut, t->b, t->hint, t->hint2);
      }
      throw IllShaped("pair elimination of a non-pair");
    }
    case TermKind::SqElim: {
      TermPtr scrut = whnf(t->a, fuel);
      if (scrut->kind == TermKind::SqVal) {
        fuel.tick();
        return whnf(subst1(t->b, scrut->a), fuel);
      }
      if (is_neutral(scrut)) {
        if (scrut == t->a) return t;
        return mk_sq_elim(scrut, t->b, t->hint);
      }
      throw IllShaped("squash elimination of a non-squash");
    }
    default:
      return t;  // sorts, binders, values, variables, dummy: a evaluates to a
  }
}

namespace {

// Untyped weak head reduction (for the oracle normalizer).
UTermPtr uwhnf(const UTermPtr& t, Fuel& fuel) {
  switch (t->kind) {
    case UTermKind::App: {
      UTermPtr fn = uwhnf(t->a, fuel);
      if (fn->kind == UTermKind::Lam) {
        fuel.tick();
        return uwhnf(usubst1(fn->a, t->b), fuel);
      }
      if (fn == t->a) return t;
      return umk_app(fn, t->b);
    }
    case UTermKind::Split: {
      UTermPtr scrut = uwhnf(t->a, fuel);
      if (scrut->kind == UTermKind::Pair) {
        fuel.tick();
        return uwhnf(usubst2(t->b, scrut->a, scrut->b), fuel);
      }
      if (scrut == t->a) return t;
      return umk_split(scrut, t->b, t->hint, t->hint2);
    }
    default:
      return t;
  }
}

UTermPtr unf(const UTermPtr& t, Fuel& fuel) {
  UTermPtr a = uwhnf(t, fuel);
  switch (a->kind) {
    case UTermKind::Lam:
      return umk_lam(unf(a->a, fuel), a->hint);
    case UTermKind::App:
      return umk_app(unf(a->a, fuel), unf(a->b, fuel));
    case UTermKind::Pair:
      return umk_pair(unf(a->a, fuel), unf(a->b, fuel));
    case UTermKind::Split:
      return umk_split(unf(a->a, fuel), unf(a->b, fuel), a->hint, a->hint2);
    case UTermKind::Pi:
      return umk_pi(unf(a->a, fuel), unf(a->b, fuel), a->hint);
    default:
      return a;
  }
}

// Maximal eta reduction, bottom-up. The input is beta-normal, so a
// contraction never uncovers a new beta redex; contracting children first
// means one pass suffices, with a local loop for stacked redexes.
UTermPtr ueta(const UTermPtr& t) {
  if (!t) return t;
  UTermPtr a = ueta(t->a);
  UTermPtr b = ueta(t->b);
  UTermPtr out = (a == t->a && b == t->b)
                     ? t
                     : [&] {
                         auto n = std::make_shared<UTerm>(*t);
                         n->a = a;
                         n->b = b;
                         return UTermPtr(n);
                       }();
  while (out->kind == UTermKind::Lam && out->a &&
         out->a->kind == UTermKind::App &&
         out->a->b->kind == UTermKind::Var && out->a->b->index == 0 &&
         !uoccurs_free(out->a->a, 0)) {
    out = ushift(out->a->a, -1, 1);
  }
  return out;
}

}  // namespace

UTermPtr nf_beta_eta(const UTermPtr& t, Fuel& fuel) {
  return ueta(unf(t, fuel));
}

UTermPtr nf_beta_eta(const UTermPtr& t, std::uint64_t fuel) {
  Fuel f{fuel};
  return nf_beta_eta(t, f);
}

}  // namespace iitt
