#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iitt/term.hpp"
#include "iitt/testkit.hpp"

using namespace iitt;

TEST_CASE("shift moves free indices only") {
  CHECK(alpha_eq(shift(mk_var(0), 1, 0), mk_var(1)));
  CHECK(alpha_eq(shift(mk_lam(Ann::Relevant, mk_unit_ty(), mk_var(0)), 1, 0),
                 mk_lam(Ann::Relevant, mk_unit_ty(), mk_var(0))));
  CHECK(alpha_eq(shift(mk_lam(Ann::Relevant, mk_unit_ty(), mk_var(1)), 1, 0),
                 mk_lam(Ann::Relevant, mk_unit_ty(), mk_var(2))));
  // shift composes additively
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    TermPtr t = testkit::random_term(rng, 4, 2);
    CHECK(alpha_eq(shift(shift(t, 2, 1), 3, 1), shift(t, 5, 1)));
  }
}

TEST_CASE("subst1 instantiates the outermost binder") {
  CHECK(alpha_eq(subst1(mk_var(0), mk_unit_val()), mk_unit_val()));
  CHECK(alpha_eq(subst1(mk_var(1), mk_unit_val()), mk_var(0)));
  TermPtr id_lam = mk_lam(Ann::Relevant, mk_unit_ty(), mk_var(0));
  TermPtr f = mk_var(4);
  CHECK(alpha_eq(subst1(mk_app(Ann::Relevant, mk_var(0), id_lam), f),
                 mk_app(Ann::Relevant, f, id_lam)));
}

TEST_CASE("alpha equality ignores hints but not structure") {
  TermPtr a = mk_lam(Ann::Relevant, mk_unit_ty(), mk_var(0), "x");
  TermPtr b = mk_lam(Ann::Relevant, mk_unit_ty(), mk_var(0), "y");
  CHECK(alpha_eq(a, b));
  CHECK_FALSE(alpha_eq(mk_var(0), mk_var(1)));
  CHECK_FALSE(alpha_eq(mk_pi(Ann::Relevant, mk_sort(0), mk_var(0)),
                       mk_pi(Ann::Irrelevant, mk_sort(0), mk_var(0))));
}

TEST_CASE("resurrection relaxes every binding and is idempotent") {
  Context ctx = Context()
                    .extended(Ann::Irrelevant, mk_sort(0), "x")
                    .extended(Ann::Relevant, mk_var(0), "y");
  Context res = resurrect(ctx);
  REQUIRE(res.size() == 2);
  CHECK(res.bindings()[0].ann == Ann::Relevant);
  CHECK(res.bindings()[1].ann == Ann::Relevant);
  CHECK(alpha_eq(res.bindings()[0].ty, ctx.bindings()[0].ty));
  Context twice = resurrect(res);
  for (std::size_t i = 0; i < res.size(); ++i) {
    CHECK(twice.bindings()[i].ann == res.bindings()[i].ann);
    CHECK(alpha_eq(twice.bindings()[i].ty, res.bindings()[i].ty));
  }
  // all-relevant contexts are fixed points
  Context rel = Context().extended(Ann::Relevant, mk_sort(0));
  CHECK(resurrect(rel).bindings()[0].ann == Ann::Relevant);
}

TEST_CASE("sort arithmetic") {
  CHECK(sort_axiom(0) == 1);
  CHECK(sort_axiom(3) == 4);
  for (std::uint32_t k = 0; k <= 64; ++k) CHECK(sort_axiom(k) > k);
  CHECK(sort_rule(0, 0) == 0);
  CHECK(sort_rule(1, 0) == 1);
  for (std::uint32_t i = 0; i <= 8; ++i)
    for (std::uint32_t j = 0; j <= 8; ++j)
      CHECK(sort_rule(i, j) == sort_rule(j, i));
}

TEST_CASE("identity and composition laws of substitution") {
  std::mt19937 rng(42);
  for (int i = 0; i < 1200; ++i) {
    TermPtr t = testkit::random_term(rng, 4, 3);
    CHECK(alpha_eq(subst(t, Subst::identity()), t));
  }
  for (int i = 0; i < 1200; ++i) {
    TermPtr t = testkit::random_term(rng, 3, 3);
    TermPtr u = testkit::random_term(rng, 2, 3);
    TermPtr v = testkit::random_term(rng, 2, 2);
    Subst s = Subst::singleton(u);
    Subst r = Subst::singleton(v);
    CHECK(alpha_eq(subst(subst(t, s), r), subst(t, Subst::compose(s, r))));
  }
  // composition with shifts in play
  for (int i = 0; i < 1200; ++i) {
    TermPtr t = testkit::random_term(rng, 3, 4);
    Subst s = Subst::of_map({testkit::random_term(rng, 2, 2)}, 1);
    Subst r = Subst::of_map(
        {testkit::random_term(rng, 2, 1), testkit::random_term(rng, 2, 1)}, 2);
    CHECK(alpha_eq(subst(subst(t, s), r), subst(t, Subst::compose(s, r))));
  }
}

TEST_CASE("strengthen fails exactly on occurring low indices") {
  CHECK_FALSE(strengthen(mk_var(0), 1).has_value());
  auto ok = strengthen(mk_var(3), 2);
  REQUIRE(ok.has_value());
  CHECK(alpha_eq(*ok, mk_var(1)));
  // the binder protects index 0 of the body
  auto lam = mk_lam(Ann::Relevant, mk_unit_ty(), mk_var(0));
  CHECK(strengthen(lam, 1).has_value());
}

TEST_CASE("context lookup shifts types into scope") {
  Context ctx = Context()
                    .extended(Ann::Relevant, mk_sort(0), "X")
                    .extended(Ann::Relevant, mk_var(0), "x");
  CHECK(alpha_eq(ctx.lookup_type(0), mk_var(1)));  // x : X
  CHECK(alpha_eq(ctx.lookup_type(1), mk_sort(0)));
  CHECK_THROWS(ctx.lookup(5));
}

TEST_CASE("de Bruijn substitution agrees with the named oracle") {
  testkit::SuiteOptions opts;
  opts.size = 5;  // the full size-6 run is in the acceptance suite
  auto rep = testkit::run_suite("named-oracle", opts);
  CHECK(rep.failures.empty());
  CHECK(rep.cases > 1000);
}

TEST_CASE("named substitution avoids capture") {
  using namespace iitt::testkit;
  // (\y. x)[x := y]  must rename the binder
  NTermPtr body = nmk_var("x");
  NTermPtr lam = nmk(TermKind::Lam);
  {
    auto l = std::make_shared<NTerm>();
    l->kind = TermKind::Lam;
    l->name = "y";
    l->a = nmk(TermKind::UnitTy);
    l->b = body;
    lam = l;
  }
  NTermPtr out = named_subst(lam, "x", nmk_var("y"));
  CHECK(out->name != "y");
  REQUIRE(out->b);
  CHECK(out->b->name == "y");  // the substituted variable stays free
  // x[x := u] = u
  NTermPtr u = nmk(TermKind::UnitVal);
  CHECK(named_subst(nmk_var("x"), "x", u) == u);
}
