#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iitt/checker.hpp"
#include "iitt/program.hpp"
#include "iitt/surface.hpp"
#include "iitt/term.hpp"

using namespace iitt;

namespace {

const Context empty_ctx;

TermPtr infer_ok(const Context& ctx, const TermPtr& t) {
  Fuel fuel;
  return infer(ctx, t, fuel);
}

bool infer_fails(const Context& ctx, const TermPtr& t,
                 DiagCode code = DiagCode::Type) {
  Fuel fuel;
  try {
    infer(ctx, t, fuel);
    return false;
  } catch (const TypeError& e) {
    return e.diag.code == code;
  }
}

bool check_ok(const Context& ctx, const TermPtr& t, const TermPtr& ty,
              CheckMode mode) {
  Fuel fuel;
  try {
    check(ctx, t, ty, mode, fuel);
    return true;
  } catch (const TypeError&) {
    return false;
  }
}

}  // namespace

TEST_CASE("sorts and function types infer via the PTS rules") {
  CHECK(alpha_eq(infer_ok(empty_ctx, mk_sort(0)), mk_sort(1)));
  CHECK(alpha_eq(
      infer_ok(empty_ctx, mk_pi(Ann::Relevant, mk_sort(0), mk_sort(0))),
      mk_sort(1)));
  // max rule: (X : Set1) -> Set0 : Set2
  CHECK(alpha_eq(
      infer_ok(empty_ctx, mk_pi(Ann::Relevant, mk_sort(1), mk_sort(0))),
      mk_sort(2)));
  CHECK(alpha_eq(infer_ok(empty_ctx, mk_unit_ty()), mk_sort(0)));
  CHECK(alpha_eq(infer_ok(empty_ctx, mk_unit_val()), mk_unit_ty()));
}

TEST_CASE("only relevant variables can be extracted") {
  Context ctx = Context()
                    .extended(Ann::Relevant, mk_sort(0), "U")
                    .extended(Ann::Irrelevant, mk_var(0), "u");
  CHECK(infer_fails(ctx, mk_var(0)));           // u is irrelevant
  CHECK(alpha_eq(infer_ok(ctx, mk_var(1)), mk_sort(0)));
  // but u is fine in irrelevant mode: the context is resurrected
  CHECK(check_ok(ctx, mk_var(0), mk_var(1), CheckMode::Irrelevant));
  CHECK_FALSE(check_ok(ctx, mk_var(0), mk_var(1), CheckMode::Relevant));
}

TEST_CASE("the irrelevant eta expansion from the paper infers") {
  // f : [y : U] -> U  |-  fun [x : U] => f [x]  :  [x : U] -> U
  Context ctx = Context()
                    .extended(Ann::Relevant, mk_sort(0), "U")
                    .extended(Ann::Relevant,
                              mk_pi(Ann::Irrelevant, mk_var(0), mk_var(1)),
                              "f");
  TermPtr t = mk_lam(Ann::Irrelevant, mk_var(1),
                     mk_app(Ann::Irrelevant, mk_var(1), mk_var(0)));
  TermPtr ty = infer_ok(ctx, t);
  CHECK(alpha_eq(ty, mk_pi(Ann::Irrelevant, mk_var(1), mk_var(2))));
}

TEST_CASE("fun [x] => x is never well-typed") {
  TermPtr t = mk_lam(Ann::Irrelevant, mk_sort(0), mk_var(0));
  CHECK(infer_fails(empty_ctx, t));
  CHECK_FALSE(check_ok(empty_ctx, t,
                       mk_pi(Ann::Irrelevant, mk_sort(0), mk_sort(0)),
                       CheckMode::Relevant));
}

TEST_CASE("irrelevant quantification cannot be used relevantly") {
  // [X : Set0] -> (x : X) -> X is ill-formed
  TermPtr t = mk_pi(Ann::Irrelevant, mk_sort(0),
                    mk_pi(Ann::Relevant, mk_var(0), mk_var(1)));
  CHECK(infer_fails(empty_ctx, t));
  // [X : Set0] -> (X -> X) -> X -> X likewise
  TermPtr church = mk_pi(
      Ann::Irrelevant, mk_sort(0),
      mk_pi(Ann::Relevant, mk_pi(Ann::Relevant, mk_var(0), mk_var(1)),
            mk_pi(Ann::Relevant, mk_var(1), mk_var(2))));
  CHECK(infer_fails(empty_ctx, church));
}

TEST_CASE("application checks its argument in the annotation's mode") {
  // f : [x : U] -> U applied to an irrelevant variable is fine
  Context ctx = Context()
                    .extended(Ann::Relevant, mk_sort(0), "U")
                    .extended(Ann::Irrelevant, mk_var(0), "u")
                    .extended(Ann::Relevant,
                              mk_pi(Ann::Irrelevant, mk_var(1), mk_var(2)),
                              "f");
  TermPtr app = mk_app(Ann::Irrelevant, mk_var(0), mk_var(1));
  CHECK(alpha_eq(infer_ok(ctx, app), mk_var(2)));
  // annotation mismatch
  TermPtr bad = mk_app(Ann::Relevant, mk_var(0), mk_var(1));
  CHECK(infer_fails(ctx, bad));
}

TEST_CASE("dummy checks only irrelevantly") {
  CHECK(infer_fails(empty_ctx, mk_dummy(), DiagCode::Dummy));
  CHECK(check_ok(empty_ctx, mk_dummy(), mk_unit_ty(), CheckMode::Irrelevant));
  CHECK_FALSE(check_ok(empty_ctx, mk_dummy(), mk_unit_ty(),
                       CheckMode::Relevant));
}

TEST_CASE("check_is_type") {
  Fuel fuel;
  CHECK(check_is_type(empty_ctx, mk_unit_ty(), fuel) == 0);
  CHECK(check_is_type(empty_ctx, mk_sort(2), fuel) == 3);
  CHECK_THROWS_AS(check_is_type(empty_ctx, mk_unit_val(), fuel), TypeError);
}

TEST_CASE("check_context validates binding by binding") {
  Fuel fuel;
  check_context(empty_ctx, fuel);
  Context good = Context()
                     .extended(Ann::Relevant, mk_sort(0), "X")
                     .extended(Ann::Relevant, mk_var(0), "x");
  check_context(good, fuel);
  Context bad = Context().extended(Ann::Relevant, mk_unit_val(), "x");
  CHECK_THROWS_AS(check_context(bad, fuel), TypeError);
}

TEST_CASE("pairs need an ascription; eliminators infer") {
  CHECK(infer_fails(empty_ctx,
                    mk_pair(Ann::Relevant, mk_unit_val(), mk_unit_val())));
  TermPtr sig = mk_sigma(Ann::Relevant, mk_unit_ty(), mk_unit_ty());
  CHECK(check_ok(empty_ctx,
                 mk_pair(Ann::Relevant, mk_unit_val(), mk_unit_val()), sig,
                 CheckMode::Relevant));
  // let (a, b) = p in b with p a pair variable
  Context ctx = Context().extended(Ann::Relevant, sig, "p");
  TermPtr split = mk_split(mk_var(0), mk_var(0));
  CHECK(alpha_eq(infer_ok(ctx, split), mk_unit_ty()));
  // result types mentioning the bound variables are rejected:
  // p : Sig (A : Set0). A, and the second component's type is the first
  Context cty = Context().extended(
      Ann::Relevant, mk_sigma(Ann::Relevant, mk_sort(0), mk_var(0)), "p");
  TermPtr bad = mk_split(mk_var(0), mk_var(0));
  CHECK(infer_fails(cty, bad));
}

TEST_CASE("squash formation, introduction, elimination") {
  Context ctx = Context()
                    .extended(Ann::Relevant, mk_sort(0), "X")
                    .extended(Ann::Relevant, mk_var(0), "x");
  CHECK(alpha_eq(infer_ok(ctx, mk_sq_ty(mk_var(1))), mk_sort(0)));
  CHECK(alpha_eq(infer_ok(ctx, mk_sq_val(mk_var(0))), mk_sq_ty(mk_var(1))));
  // elimination binds irrelevantly: using the variable relevantly fails
  TermPtr bad = mk_sq_elim(mk_sq_val(mk_var(0)), mk_var(0));
  CHECK(infer_fails(ctx, bad));
  // but an irrelevant use is fine
  Context cf = ctx.extended(
      Ann::Relevant, mk_pi(Ann::Irrelevant, mk_var(1), mk_var(2)), "g");
  TermPtr good = mk_sq_elim(mk_sq_val(mk_var(1)),
                            mk_app(Ann::Irrelevant, mk_var(1), mk_var(0)));
  CHECK(alpha_eq(infer_ok(cf, good), mk_var(2)));
}

TEST_CASE("check of lambdas is structural and respects annotations") {
  TermPtr lam = mk_lam(Ann::Relevant, mk_sort(0), mk_var(0));
  TermPtr good_ty = mk_pi(Ann::Relevant, mk_sort(0), mk_sort(0));
  TermPtr bad_ann = mk_pi(Ann::Irrelevant, mk_sort(0), mk_sort(0));
  CHECK(check_ok(empty_ctx, lam, good_ty, CheckMode::Relevant));
  CHECK_FALSE(check_ok(empty_ctx, lam, bad_ann, CheckMode::Relevant));
  // convertible domains are accepted
  TermPtr conv_dom = mk_app(Ann::Relevant,
                            mk_lam(Ann::Relevant, mk_sort(1), mk_var(0)),
                            mk_sort(0));
  CHECK(check_ok(empty_ctx, lam, mk_pi(Ann::Relevant, conv_dom, mk_sort(0)),
                 CheckMode::Relevant));
}

TEST_CASE("check_program runs items and honors #fail") {
  CheckOptions opts;
  ProgramReport r = check_source(
      "#eq fun (f : Unit -> Unit) (x : Unit) => x"
      " = fun (f : Unit -> Unit) (x : Unit) => f x"
      " : (Unit -> Unit) -> Unit -> Unit;",
      opts);
  REQUIRE(r.items.size() == 1);
  CHECK(r.items[0].ok);
  CHECK(r.items[0].output == "accepted");

  r = check_source("#fail #check fun [x : Set0] => x : [x : Set0] -> Set0;",
                   opts);
  REQUIRE(r.items.size() == 1);
  CHECK(r.items[0].ok);

  r = check_source("#fail #check Set0 : Set1;", opts);
  REQUIRE(r.items.size() == 1);
  CHECK_FALSE(r.items[0].ok);
  CHECK(r.exit_code() == 1);

  r = check_source("", opts);
  CHECK(r.items.empty());
  CHECK(r.all_ok());
  CHECK(r.exit_code() == 0);

  r = check_source("#infer nonexistent;", opts);
  REQUIRE(r.items.size() == 1);
  CHECK_FALSE(r.items[0].ok);
  CHECK(r.items[0].diagnostic->code == DiagCode::Scope);
  CHECK(r.exit_code() == 2);

  // #fail also claims scope errors: the wrapped item produced a diagnostic
  r = check_source("#fail #infer nonexistent;", opts);
  REQUIRE(r.items.size() == 1);
  CHECK(r.items[0].ok);

  r = check_source("def x : Set0 :=", opts);
  REQUIRE(r.items.size() == 1);
  CHECK(r.items[0].diagnostic->code == DiagCode::Parse);
  CHECK(r.exit_code() == 2);
}

TEST_CASE("irr is gated behind allow_irr") {
  const char* src =
      "#check fun (U : Set0) (f : [x : U] -> U) => f [irr]"
      " : (U : Set0) -> (f : [x : U] -> U) -> U;";
  CheckOptions strict;
  ProgramReport r = check_source(src, strict);
  REQUIRE(r.items.size() == 1);
  CHECK_FALSE(r.items[0].ok);
  CHECK(r.items[0].diagnostic->code == DiagCode::Dummy);
  CheckOptions relaxed;
  relaxed.allow_irr = true;
  r = check_source(src, relaxed);
  REQUIRE(r.items.size() == 1);
  CHECK(r.items[0].ok);
}

TEST_CASE("type unicity at desk scale") {
  // infer is deterministic; checking against two types succeeds only when
  // they are convertible
  Context ctx = Context().extended(Ann::Relevant, mk_sort(0), "X");
  TermPtr t = mk_lam(Ann::Relevant, mk_var(0), mk_var(0));
  TermPtr ty1 = infer_ok(ctx, t);
  TermPtr ty2 = infer_ok(ctx, t);
  CHECK(alpha_eq(ty1, ty2));
  CHECK(check_ok(ctx, t, mk_pi(Ann::Relevant, mk_var(0), mk_var(1)),
                 CheckMode::Relevant));
  CHECK_FALSE(check_ok(ctx, t, mk_pi(Ann::Relevant, mk_sort(0), mk_sort(0)),
                       CheckMode::Relevant));
}
