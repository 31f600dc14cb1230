#ifndef IITT_TESTKIT_HPP
#define IITT_TESTKIT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "iitt/eval.hpp"
#include "iitt/term.hpp"

namespace iitt {
namespace testkit {

// ---------------------------------------------------------------------------
// Named-variable terms: the independent substitution oracle.

struct NTerm;
using NTermPtr = std::shared_ptr<const NTerm>;

struct NTerm {
  TermKind kind;
  Ann ann = Ann::Relevant;
  std::uint32_t level = 0;
  std::string name;   // Var name or binder name
  std::string name2;  // Split's second binder
  NTermPtr a;
  NTermPtr b;
};

NTermPtr nmk(TermKind kind);
NTermPtr nmk_var(std::string name);

// Textbook capture-avoiding substitution with fresh renaming.
NTermPtr named_subst(const NTermPtr& t, const std::string& x,
                     const NTermPtr& u);

// Conversion to core terms; scope is innermost-last. Unknown names throw
// std::runtime_error.
TermPtr from_named(const NTermPtr& t, std::vector<std::string> scope);
NTermPtr to_named(const TermPtr& t, std::vector<std::string> scope);

// ---------------------------------------------------------------------------
// Rule-directed enumeration of well-typed judgements.

struct EnumBudget {
  unsigned max_size = 4;
  std::uint32_t max_level = 1;  // largest sort literal used as a leaf
  bool relevant_only = false;   // drop irrelevant binders/apps and the dummy
  bool extension_free = false;  // drop Unit, Sigma and squash
  std::uint64_t fuel = kDefaultFuel;
};

struct Judgement {
  Context ctx;
  TermPtr term;
  TermPtr type;
};

// Compact structural serializations (hints ignored) for memo keys and
// duplicate detection.
std::string term_key(const TermPtr& t);
std::string ctx_key(const Context& ctx);

// Enumerates by the typing rules, memoizing per (context, size). Exhaustive
// and duplicate-free within the budget; every emitted pair passes infer.
class Enumerator {
 public:
  explicit Enumerator(EnumBudget budget) : budget_(std::move(budget)) {}

  // All inferable terms of exactly the given size.
  const std::vector<std::pair<TermPtr, TermPtr>>& infer_set(const Context& ctx,
                                                            unsigned size);
  // All terms of exactly `size` accepted by check() against `type`.
  std::vector<TermPtr> checkable(const Context& ctx, const TermPtr& type,
                                 unsigned size, Ann mode);
  // Inferable judgements of size 1..max_size.
  std::vector<Judgement> all(const Context& base);

  const EnumBudget& budget() const { return budget_; }

 private:
  std::vector<TermPtr> checkable_extra(const Context& ctx, const TermPtr& type,
                                       unsigned size, Ann mode);

  EnumBudget budget_;
  std::map<std::string, std::vector<std::pair<TermPtr, TermPtr>>> memo_;
};

std::vector<Judgement> enum_well_typed(const EnumBudget& budget,
                                       const Context& base);

// All raw trees of exactly `size`, over `depth` in-scope variables; the
// brute-force oracle the generator is validated against.
void enum_raw(unsigned size, std::uint32_t depth, const EnumBudget& budget,
              const std::function<void(const TermPtr&)>& yield);

// The contexts the acceptance suites quantify over:
// (), X:Set0, X:Set0 x:X, U:Set0 u/U.
std::vector<Context> standard_contexts();

// Arbitrary (mostly ill-typed) term for structural property tests.
TermPtr random_term(std::mt19937& rng, unsigned max_depth,
                    std::uint32_t free_vars);

// ---------------------------------------------------------------------------
// Property suites operationalizing the metatheorems.

struct SuiteOptions {
  unsigned size = 0;  // 0: per-suite default
  std::uint32_t max_level = 1;
  std::uint64_t fuel = kDefaultFuel;
};

struct SuiteReport {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t fuel_exhausted = 0;
  std::vector<std::string> failures;  // size-ordered, so the first is minimal

  bool passed() const { return failures.empty() && fuel_exhausted == 0; }
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace testkit
}  // namespace iitt

#endif
