#ifndef IITT_SURFACE_HPP
#define IITT_SURFACE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iitt/diagnostics.hpp"
#include "iitt/term.hpp"

namespace iitt {

// Named-variable AST produced by the parser; every node carries its span.
enum class STermKind : std::uint8_t {
  Var,
  Sort,
  Pi,
  Lam,
  App,
  UnitTy,
  UnitVal,
  Sigma,
  Pair,
  Split,
  SqTy,
  SqVal,
  SqElim,
  Dummy,
};

struct STerm;
using STermPtr = std::shared_ptr<const STerm>;

struct STerm {
  STermKind kind;
  Span span;
  Ann ann = Ann::Relevant;
  std::uint32_t level = 0;   // Sort
  std::string name;          // Var; binder name otherwise ("_" = unused)
  std::string name2;         // Split's second binder
  STermPtr a;
  STermPtr b;
};

enum class ItemKind : std::uint8_t { Def, Check, Infer, Eq, Whnf, Erase };

const char* to_string(ItemKind kind);

struct SurfaceItem {
  ItemKind kind;
  Span span;
  bool expect_fail = false;  // wrapped in #fail
  std::string name;          // Def
  STermPtr type;             // Def, Check, Eq
  STermPtr lhs;              // main term
  STermPtr rhs;              // Eq right-hand side
};

struct ParseOutput {
  std::vector<SurfaceItem> items;
  std::optional<Diagnostic> error;  // first offending span; items are partial

  bool ok() const { return !error.has_value(); }
};

// Deterministic recursive-descent parse of a whole source file. Comments run
// from `--` to end of line. Never throws.
ParseOutput parse(std::string_view source);

// Scope-resolved core item. A failed elaboration leaves the item poisoned
// with the diagnostic instead of dropping it, so `#fail` can still claim it.
struct Item {
  ItemKind kind = ItemKind::Check;
  Span span;
  bool expect_fail = false;
  std::string name;
  TermPtr type;
  TermPtr lhs;
  TermPtr rhs;
  std::optional<Diagnostic> poisoned;
};

// Resolves names to de Bruijn indices. Defined names are transparent: their
// elaborated bodies are substituted into later items, so the kernel only
// ever sees the pure calculus.
class Elaborator {
 public:
  struct Def {
    TermPtr type;
    TermPtr body;
  };

  std::vector<Item> run(const std::vector<SurfaceItem>& items);
  // Single-term elaboration against the current definitions.
  TermPtr elaborate_term(const STermPtr& t, std::optional<Diagnostic>& err);

  const std::map<std::string, Def>& defs() const { return defs_; }

 private:
  std::map<std::string, Def> defs_;
};

// Pretty-prints a core term in the concrete grammar. `scope` names the
// context bindings, innermost last; binders are freshened against it, so
// re-parsing and elaborating the output yields an alpha-equal term.
std::string print(const TermPtr& t, const std::vector<std::string>& scope = {});

// Context binding names (innermost last), freshened for printing.
std::vector<std::string> scope_names(const Context& ctx);

// Renders "ctx |- t" types for diagnostics.
std::string print_in(const Context& ctx, const TermPtr& t);

}  // namespace iitt

#endif
