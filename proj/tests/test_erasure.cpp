#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "iitt/checker.hpp"
#include "iitt/equality.hpp"
#include "iitt/erasure.hpp"
#include "iitt/eval.hpp"
#include "iitt/surface.hpp"
#include "iitt/term.hpp"
#include "iitt/testkit.hpp"

using namespace iitt;

namespace {

TermPtr elab(const std::string& src) {
  ParseOutput p = parse("#infer " + src + ";");
  REQUIRE(p.ok());
  Elaborator el;
  auto items = el.run(p.items);
  REQUIRE_FALSE(items[0].poisoned.has_value());
  return items[0].lhs;
}

bool has_irrelevant_node(const TermPtr& t) {
  if (!t) return false;
  if (t->ann == Ann::Irrelevant &&
      (t->kind == TermKind::Pi || t->kind == TermKind::Lam ||
       t->kind == TermKind::App || t->kind == TermKind::Sigma ||
       t->kind == TermKind::Pair))
    return true;
  if (t->kind == TermKind::SqTy || t->kind == TermKind::SqVal ||
      t->kind == TermKind::SqElim || t->kind == TermKind::Dummy)
    return true;
  return has_irrelevant_node(t->a) || has_irrelevant_node(t->b);
}

bool udummy_in_head(const UTermPtr& t) {
  if (!t) return false;
  if (t->kind == UTermKind::App && t->a->kind == UTermKind::Dummy) return true;
  return udummy_in_head(t->a) || udummy_in_head(t->b);
}

}  // namespace

TEST_CASE("internal erasure replaces irrelevant arguments by irr") {
  TermPtr fu = mk_app(Ann::Irrelevant, mk_var(0), mk_var(2));
  TermPtr erased = internal_erase(fu);
  CHECK(alpha_eq(erased, mk_app(Ann::Irrelevant, mk_var(0), mk_dummy())));
  // a relevant-only term is untouched
  TermPtr rel = elab("fun (X : Set0) (x : X) => x");
  CHECK(alpha_eq(internal_erase(rel), rel));
  // squash payloads are erased where the squash type is supplied
  Context ctx = Context()
                    .extended(Ann::Relevant, mk_sort(0), "T")
                    .extended(Ann::Relevant, mk_var(0), "t");
  CHECK(alpha_eq(internal_erase(ctx, mk_sq_val(mk_var(0)),
                                mk_sq_ty(mk_var(1))),
                 mk_sq_val(mk_dummy())));
  // ... but kept in synthesis positions, where they carry the type
  CHECK(alpha_eq(internal_erase(ctx, mk_sq_val(mk_var(0)), nullptr),
                 mk_sq_val(mk_var(0))));
  CHECK(alpha_eq(
      internal_erase(mk_pair(Ann::Irrelevant, mk_var(1), mk_var(0))),
      mk_pair(Ann::Irrelevant, mk_dummy(), mk_var(0))));
}

TEST_CASE("internal erasure preserves typing and equality") {
  // sq t == sq irr at Sq T
  Context ctx = Context()
                    .extended(Ann::Relevant, mk_sort(0), "T")
                    .extended(Ann::Relevant, mk_var(0), "t");
  TermPtr sq = mk_sq_val(mk_var(0));
  TermPtr ty = mk_sq_ty(mk_var(1));
  TermPtr erased = internal_erase(ctx, sq, ty);
  CHECK(alpha_eq(erased, mk_sq_val(mk_dummy())));
  Fuel fuel;
  check(ctx, erased, ty, CheckMode::Relevant, fuel);
  CHECK(tm_eq(ctx, sq, erased, ty).accepted());
  CHECK(alpha_eq(internal_erase(ctx, erased, ty), erased));
  // an eliminator whose scrutinee is a literal squash still re-checks
  Context cg = ctx.extended(
      Ann::Relevant, mk_pi(Ann::Irrelevant, mk_var(1), mk_var(2)), "g");
  TermPtr elim = mk_sq_elim(mk_sq_val(mk_var(1)),
                            mk_app(Ann::Irrelevant, mk_var(1), mk_var(0)));
  TermPtr elim_ty = mk_var(2);
  TermPtr elim_erased = internal_erase(cg, elim, elim_ty);
  Fuel f2;
  check(cg, elim_erased, elim_ty, CheckMode::Relevant, f2);
  CHECK(tm_eq(cg, elim, elim_erased, elim_ty).accepted());
  // the irrelevant application argument inside was still erased
  CHECK(alpha_eq(elim_erased->b,
                 mk_app(Ann::Irrelevant, mk_var(1), mk_dummy())));
}

TEST_CASE("external erasure of the Church numerals") {
  UTermPtr zero = erase_external(elab("fun (f : Unit -> Unit) (x : Unit) => x"));
  UTermPtr one =
      erase_external(elab("fun (f : Unit -> Unit) (x : Unit) => f x"));
  CHECK(ualpha_eq(zero, umk_lam(umk_lam(umk_var(0)))));
  CHECK(ualpha_eq(one, umk_lam(umk_lam(umk_app(umk_var(1), umk_var(0))))));
  CHECK_FALSE(ualpha_eq(zero, one));
  CHECK(print_untyped(one, false) == "\\. \\. 1 0");
}

TEST_CASE("external erasure deletes irrelevant binders and applications") {
  // fun [x : U] => f [x]  erases to the erasure of f
  Context scope;
  TermPtr t = elab("fun (U : Set0) (f : [x : U] -> U) => fun [u : U] => f [u]");
  UTermPtr e = erase_external(t);
  // U and f remain; the irrelevant lambda and application vanish
  CHECK(ualpha_eq(e, umk_lam(umk_lam(umk_var(0)))));
  CHECK(ualpha_eq(erase_external(mk_unit_val()), umk_unit()));
}

TEST_CASE("squash erases to dummy substitution") {
  TermPtr t = elab(
      "fun (X : Set0) (x : X) (k : Unit -> Unit) => let sq y = sq x in k ()");
  UTermPtr e = erase_external(t);
  // \X. \x. \k. k ()
  CHECK(ualpha_eq(
      e, umk_lam(umk_lam(umk_lam(umk_app(umk_var(0), umk_unit()))))));
  CHECK(ualpha_eq(erase_external(mk_sq_val(mk_var(0))), umk_dummy()));
}

TEST_CASE("annotation erasure keeps structure the oracle needs") {
  CHECK(ualpha_eq(erase_annotations(elab("fun (x : Unit) => x")),
                  umk_lam(umk_var(0))));
  UTermPtr pi = erase_annotations(elab("(x : Set0) -> Set0"));
  CHECK(pi->kind == UTermKind::Pi);
  CHECK_FALSE(ualpha_eq(pi, erase_annotations(elab("Set0"))));
  CHECK_FALSE(ualpha_eq(erase_annotations(elab("Set0")),
                        erase_annotations(elab("Set1"))));
}

TEST_CASE("annotation erasure equals external erasure off irrelevance") {
  std::mt19937 rng(11);
  int relevant_only_seen = 0;
  for (int i = 0; i < 4000; ++i) {
    TermPtr t = testkit::random_term(rng, 4, 2);
    bool irr = has_irrelevant_node(t);
    UTermPtr ann = erase_annotations(t);
    UTermPtr ext = erase_external(t);
    bool has_type_former = false;
    std::function<void(const TermPtr&)> scan = [&](const TermPtr& u) {
      if (!u) return;
      if (u->kind == TermKind::Pi || u->kind == TermKind::Sort ||
          u->kind == TermKind::Sigma)
        has_type_former = true;
      scan(u->a);
      scan(u->b);
    };
    scan(t);
    if (!irr && !has_type_former) {
      ++relevant_only_seen;
      CHECK(ualpha_eq(ann, ext));
    }
  }
  CHECK(relevant_only_seen > 100);
}

TEST_CASE("external erasure never puts dummy in head position") {
  // This is a property of checked terms: the typing rules keep proofs out
  // of function position.
  testkit::EnumBudget budget;
  budget.max_size = 4;
  std::size_t seen = 0;
  for (const Context& ctx : testkit::standard_contexts()) {
    for (const auto& j : testkit::enum_well_typed(budget, ctx)) {
      ++seen;
      CHECK_FALSE(udummy_in_head(erase_external(j.term)));
    }
  }
  CHECK(seen > 100);
}
