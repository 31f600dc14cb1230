#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "iitt/surface.hpp"
#include "iitt/term.hpp"

using namespace iitt;

namespace {

// parse + elaborate a single term (as the lhs of a #infer item).
TermPtr elab_term(const std::string& src) {
  ParseOutput p = parse("#infer " + src + ";");
  REQUIRE(p.ok());
  REQUIRE(p.items.size() == 1);
  Elaborator el;
  auto items = el.run(p.items);
  REQUIRE_FALSE(items[0].poisoned.has_value());
  return items[0].lhs;
}

}  // namespace

TEST_CASE("parsing items") {
  ParseOutput p = parse(
      "def id : (x : Set0) -> (y : x) -> x := fun (x : Set0) (y : x) => y;");
  REQUIRE(p.ok());
  REQUIRE(p.items.size() == 1);
  CHECK(p.items[0].kind == ItemKind::Def);
  CHECK(p.items[0].name == "id");

  p = parse(
      "#eq fun (f : Unit -> Unit) (x : Unit) => x = fun (f : Unit -> Unit) "
      "(x : Unit) => f x : (Unit -> Unit) -> Unit -> Unit;");
  REQUIRE(p.ok());
  REQUIRE(p.items.size() == 1);
  CHECK(p.items[0].kind == ItemKind::Eq);

  p = parse("def bad := ;");
  CHECK_FALSE(p.ok());
  CHECK(p.error->code == DiagCode::Parse);
  CHECK(p.error->span.line == 1);
}

TEST_CASE("parsing is total on junk") {
  std::mt19937 rng(5);
  const std::string alphabet = "()[]{}=>-:;,.#xy0 SetUnitfunlet\n\"\\";
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    int len = static_cast<int>(rng() % 40);
    for (int k = 0; k < len; ++k) s += alphabet[rng() % alphabet.size()];
    ParseOutput p = parse(s);  // must not crash or throw
    if (!p.ok()) CHECK(p.error->code == DiagCode::Parse);
  }
}

TEST_CASE("comments and spans") {
  ParseOutput p = parse("-- a comment\n  #infer Set0;\n#infer Set1;");
  REQUIRE(p.ok());
  REQUIRE(p.items.size() == 2);
  CHECK(p.items[0].span.line == 2);
  CHECK(p.items[0].span.col == 3);
  CHECK(p.items[1].span.line == 3);
  CHECK(p.items[0].lhs->kind == STermKind::Sort);
}

TEST_CASE("elaboration resolves names to indices") {
  TermPtr t = elab_term("fun (x : Set0) => x");
  CHECK(alpha_eq(t, mk_lam(Ann::Relevant, mk_sort(0), mk_var(0))));
  TermPtr irr = elab_term("fun [x : Set0] => x");
  CHECK(alpha_eq(irr, mk_lam(Ann::Irrelevant, mk_sort(0), mk_var(0))));

  ParseOutput p = parse("#infer foo;");
  REQUIRE(p.ok());
  Elaborator el;
  auto items = el.run(p.items);
  REQUIRE(items[0].poisoned.has_value());
  CHECK(items[0].poisoned->code == DiagCode::Scope);
}

TEST_CASE("definitions are inlined") {
  ParseOutput p = parse(
      "def two : Set1 := Set0;"
      "#infer two;");
  REQUIRE(p.ok());
  Elaborator el;
  auto items = el.run(p.items);
  REQUIRE(items.size() == 2);
  CHECK(alpha_eq(items[1].lhs, mk_sort(0)));
}

TEST_CASE("grammar corners") {
  CHECK(alpha_eq(elab_term("Unit -> Unit"),
                 mk_pi(Ann::Relevant, mk_unit_ty(), mk_unit_ty())));
  CHECK(alpha_eq(elab_term("(x y : Set0) -> Unit"),
                 mk_pi(Ann::Relevant, mk_sort(0),
                       mk_pi(Ann::Relevant, mk_sort(0), mk_unit_ty()))));
  CHECK(alpha_eq(elab_term("Sig [x : Set0]. Unit"),
                 mk_sigma(Ann::Irrelevant, mk_sort(0), mk_unit_ty())));
  CHECK(alpha_eq(elab_term("([()] , ())"),
                 mk_pair(Ann::Irrelevant, mk_unit_val(), mk_unit_val())));
  CHECK(alpha_eq(
      elab_term("fun (f : [x : Unit] -> Unit) => f [()]"),
      mk_lam(Ann::Relevant,
             mk_pi(Ann::Irrelevant, mk_unit_ty(), mk_unit_ty()),
             mk_app(Ann::Irrelevant, mk_var(0), mk_unit_val()))));
  CHECK(alpha_eq(elab_term("Sq Unit"), mk_sq_ty(mk_unit_ty())));
  CHECK(alpha_eq(elab_term("sq ()"), mk_sq_val(mk_unit_val())));
  // application binds tighter than arrows; arrows associate right
  CHECK(alpha_eq(
      elab_term("Unit -> Unit -> Unit"),
      mk_pi(Ann::Relevant, mk_unit_ty(),
            mk_pi(Ann::Relevant, mk_unit_ty(), mk_unit_ty()))));
  CHECK(alpha_eq(
      elab_term("(Unit -> Unit) -> Unit"),
      mk_pi(Ann::Relevant, mk_pi(Ann::Relevant, mk_unit_ty(), mk_unit_ty()),
            mk_unit_ty())));
}

TEST_CASE("printing follows the grammar") {
  CHECK(print(mk_lam(Ann::Irrelevant, mk_unit_ty(), mk_unit_val())) ==
        "fun [x : Unit] => ()");
  CHECK(print(mk_sort(2)) == "Set2");
  // application is left-associative, Pi right-associative
  TermPtr app2 = mk_app(Ann::Relevant,
                        mk_app(Ann::Relevant, mk_var(2), mk_var(1)),
                        mk_var(0));
  CHECK(print(app2, {"f", "a", "b"}) == "f a b");
  TermPtr nested = mk_app(Ann::Relevant, mk_var(1),
                          mk_app(Ann::Relevant, mk_var(0), mk_var(0)));
  CHECK(print(nested, {"f", "a"}) == "f (a a)");
}

TEST_CASE("print then parse round-trips") {
  const char* sources[] = {
      "fun (X : Set0) (x : X) => x",
      "fun (U : Set0) (f : [y : U] -> U) => fun [x : U] => f [x]",
      "(X : Set0) -> (x : X) -> X",
      "[X : Set0] -> Unit",
      "fun (X : Set0) (x : X) => (fun (p : Sig (a : X). Unit) => "
      "let (a , b) = p in a) (x , ())",
      "fun (T : Set0) (t : T) => sq t",
      "fun (X : Set0) (x : X) (g : [z : X] -> X) => let sq y = sq x in g [y]",
      "Sig (x : Unit). Sq Unit",
      "fun (x : Unit) => (x , sq x)",
      "Set0 -> Set1 -> (Unit -> Unit) -> Unit",
  };
  for (const char* src : sources) {
    TermPtr t = elab_term(src);
    std::string printed = print(t);
    CAPTURE(printed);
    TermPtr back = elab_term(printed);
    CHECK(alpha_eq(t, back));
  }
  // shadowed binders must freshen rather than capture
  TermPtr shadow = mk_lam(
      Ann::Relevant, mk_sort(0),
      mk_lam(Ann::Relevant, mk_sort(0), mk_var(1), "x"), "x");
  std::string printed = print(shadow);
  CHECK(alpha_eq(elab_term(printed), shadow));
}
