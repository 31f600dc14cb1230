#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iitt/checker.hpp"
#include "iitt/surface.hpp"
#include "iitt/term.hpp"
#include "iitt/testkit.hpp"

using namespace iitt;
using namespace iitt::testkit;

TEST_CASE("size-1 enumeration matches the axioms") {
  Context x0 = Context().extended(Ann::Relevant, mk_sort(0), "X");
  EnumBudget b;
  b.max_size = 1;
  auto closed = enum_well_typed(b, Context());
  bool saw_set0 = false;
  for (const auto& j : closed)
    if (alpha_eq(j.term, mk_sort(0)) && alpha_eq(j.type, mk_sort(1)))
      saw_set0 = true;
  CHECK(saw_set0);
  auto in_x = enum_well_typed(b, x0);
  bool saw_x = false;
  for (const auto& j : in_x)
    if (alpha_eq(j.term, mk_var(0)) && alpha_eq(j.type, mk_sort(0)))
      saw_x = true;
  CHECK(saw_x);
}

TEST_CASE("every emitted triple passes infer with the matching type") {
  EnumBudget b;
  b.max_size = 4;
  for (const Context& ctx : standard_contexts()) {
    for (const auto& j : enum_well_typed(b, ctx)) {
      Fuel fuel;
      TermPtr ty = infer(ctx, j.term, fuel);
      CHECK(alpha_eq(ty, j.type));
    }
  }
}

TEST_CASE("checkable() accepts the dummy only irrelevantly") {
  Context uu = standard_contexts()[3];  // U : Set0, u / U
  EnumBudget b;
  b.max_size = 2;
  Enumerator en(b);
  auto irr = en.checkable(uu, mk_var(1), 1, Ann::Irrelevant);
  bool has_dummy = false, has_u = false;
  for (const auto& t : irr) {
    if (t->kind == TermKind::Dummy) has_dummy = true;
    if (t->kind == TermKind::Var && t->index == 0) has_u = true;
  }
  CHECK(has_dummy);
  CHECK(has_u);  // u itself is usable after resurrection
  auto rel = en.checkable(uu, mk_var(1), 1, Ann::Relevant);
  for (const auto& t : rel) {
    CHECK(t->kind != TermKind::Dummy);
    bool is_u = t->kind == TermKind::Var && t->index == 0;
    CHECK_FALSE(is_u);
  }
}

TEST_CASE("generator agrees with brute force on small sizes") {
  SuiteOptions opts;
  opts.size = 3;
  auto rep = run_suite("enum-validate", opts);
  for (const auto& f : rep.failures) CAPTURE(f);
  CHECK(rep.failures.empty());
  CHECK(rep.cases > 100);
}

TEST_CASE("suite registry") {
  auto names = suite_names();
  CHECK(names.size() == 9);
  CHECK_THROWS_AS(run_suite("no-such-suite"), std::invalid_argument);
}

TEST_CASE("small property suites pass") {
  SuiteOptions opts;
  opts.size = 3;
  for (const char* name : {"per", "subject-reduction", "irrelevance",
                           "erasure", "substitution"}) {
    auto rep = run_suite(name, opts);
    for (const auto& f : rep.failures) { CAPTURE(name); CAPTURE(f); }
    CHECK(rep.failures.empty());
    CHECK(rep.fuel_exhausted == 0);
  }
  opts.size = 4;
  auto oracle = run_suite("oracle", opts);
  CHECK(oracle.failures.empty());
  auto consistency = run_suite("consistency", opts);
  CHECK(consistency.failures.empty());
}

TEST_CASE("reports are deterministic") {
  SuiteOptions opts;
  opts.size = 3;
  auto a = run_suite("per", opts);
  auto b = run_suite("per", opts);
  CHECK(a.cases == b.cases);
  CHECK(a.failures == b.failures);
}
