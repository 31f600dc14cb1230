#ifndef IITT_TERM_HPP
#define IITT_TERM_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace iitt {

// Binder/application relevance annotation. Relevant is written `:` in the
// surface syntax, Irrelevant is written with square brackets.
enum class Ann : std::uint8_t { Relevant, Irrelevant };

const char* to_string(Ann ann);

enum class TermKind : std::uint8_t {
  Sort,     // Set_k
  Pi,       // (x : A) -> B  /  [x : A] -> B
  Var,      // de Bruijn index
  Lam,      // fun (x : A) => t  /  fun [x : A] => t
  App,      // f u  /  f [u]
  UnitTy,   // Unit
  UnitVal,  // ()
  Sigma,    // Sig (x : A). B  /  Sig [x : A]. B
  Pair,     // (u , t)  /  ([u] , t)
  Split,    // let (x , y) = p in v
  SqTy,     // Sq A
  SqVal,    // sq t
  SqElim,   // let sq x = t in v
  Dummy,    // irr
};

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable expression tree. Variables are de Bruijn indices, so
// alpha-equality is structural identity; binder names are kept as printing
// hints only and carry no meaning.
//
// Child slots: `a` never binds. `b` binds one variable under Pi, Lam, Sigma
// and SqElim, two under Split (index 1 = first component, index 0 = second),
// and none otherwise.
class Term {
public:
  TermKind kind;
  Ann ann = Ann::Relevant;  // Pi, Lam, App, Sigma, Pair
  std::uint32_t level = 0;  // Sort
  std::uint32_t index = 0;  // Var
  std::string hint;         // binder name hint (Pi, Lam, Sigma, Split, SqElim)
  std::string hint2;        // Split's second binder
  TermPtr a;
  TermPtr b;

  Term(TermKind k) : kind(k) {}
};

// Number of variables `t->b` binds.
unsigned binder_arity(TermKind kind);

TermPtr mk_sort(std::uint32_t level);
TermPtr mk_pi(Ann ann, TermPtr dom, TermPtr cod, std::string hint = "");
TermPtr mk_var(std::uint32_t index);
TermPtr mk_lam(Ann ann, TermPtr dom, TermPtr body, std::string hint = "");
TermPtr mk_app(Ann ann, TermPtr fn, TermPtr arg);
TermPtr mk_unit_ty();
TermPtr mk_unit_val();
TermPtr mk_sigma(Ann ann, TermPtr dom, TermPtr cod, std::string hint = "");
TermPtr mk_pair(Ann ann, TermPtr fst, TermPtr snd);
TermPtr mk_split(TermPtr scrut, TermPtr body, std::string hint = "",
                 std::string hint2 = "");
TermPtr mk_sq_ty(TermPtr inner);
TermPtr mk_sq_val(TermPtr inner);
TermPtr mk_sq_elim(TermPtr scrut, TermPtr body, std::string hint = "");
TermPtr mk_dummy();

// Node count; used as the size measure by enumeration and tests.
std::size_t term_size(const TermPtr& t);

// Structural equality up to binder name hints (alpha-equality).
bool alpha_eq(const TermPtr& t, const TermPtr& u);

// Free de Bruijn indices >= cutoff incremented by `by`.
TermPtr shift(const TermPtr& t, std::uint32_t by, std::uint32_t cutoff = 0);

// True iff the free variable `index` occurs in t.
bool occurs_free(const TermPtr& t, std::uint32_t index);

// Removes `by` dangling indices: fails (nullopt) if any of 0..by-1 occurs
// free, otherwise decrements all free indices by `by`.
std::optional<TermPtr> strengthen(const TermPtr& t, std::uint32_t by);

// Parallel substitution: indices below map.size() are replaced by the mapped
// term, the rest are renumbered to (index - map.size() + shift).
class Subst {
public:
  static Subst identity();
  // 0 -> u, i+1 -> i. Instantiates the outermost binder.
  static Subst singleton(TermPtr u);
  // 1 -> fst, 0 -> snd, i+2 -> i. Instantiates a two-variable binder (Split).
  static Subst pair(TermPtr fst, TermPtr snd);
  static Subst of_map(std::vector<TermPtr> map, std::uint32_t shift = 0);

  TermPtr apply_to_var(std::uint32_t index) const;
  // The substitution to use under one more binder: 0 -> 0, i+1 -> shift(s(i)).
  Subst lift() const;
  // compose(s, r) applies s first, then r: subst(t, compose(s, r)) ==
  // subst(subst(t, s), r).
  static Subst compose(const Subst& s, const Subst& r);

  const std::vector<TermPtr>& map() const { return map_; }
  std::uint32_t shift_amount() const { return shift_; }

private:
  std::vector<TermPtr> map_;
  std::uint32_t shift_ = 0;
};

TermPtr subst(const TermPtr& t, const Subst& s);
// Instantiate the outermost binder of `body` with `u`.
TermPtr subst1(const TermPtr& body, const TermPtr& u);
// Instantiate a two-variable binder (Split bodies).
TermPtr subst2(const TermPtr& body, const TermPtr& fst, const TermPtr& snd);

struct Binding {
  std::string name;
  Ann ann = Ann::Relevant;
  TermPtr ty;
};

// Ordered sequence of bindings, innermost last. Lookup is by de Bruijn
// index counted from the inside.
class Context {
public:
  Context() = default;
  explicit Context(std::vector<Binding> bindings)
      : bindings_(std::move(bindings)) {}

  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }

  // index 0 is the innermost binding; throws std::out_of_range beyond that.
  const Binding& lookup(std::uint32_t index) const;
  // The looked-up type, shifted so it is well-scoped in the whole context.
  TermPtr lookup_type(std::uint32_t index) const;

  Context extended(Binding b) const;
  Context extended(Ann ann, TermPtr ty, std::string name = "") const;

  const std::vector<Binding>& bindings() const { return bindings_; }

private:
  std::vector<Binding> bindings_;
};

// Turns every irrelevant binding relevant; types and order are unchanged.
Context resurrect(const Context& ctx);

// PTS sort assignments: Set_k : Set_{k+1} and Pi formation at max(i, j).
std::uint32_t sort_axiom(std::uint32_t k);
std::uint32_t sort_rule(std::uint32_t i, std::uint32_t j);

}  // namespace iitt

#endif
