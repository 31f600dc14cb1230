#ifndef IITT_EVAL_HPP
#define IITT_EVAL_HPP

#include <cstdint>
#include <stdexcept>

#include "iitt/erasure.hpp"
#include "iitt/term.hpp"

namespace iitt {

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

// Step budget. Well-typed terms normalize, so fuel only ever runs out on
// ill-typed inputs; it is decremented once per beta/let reduction.
struct Fuel {
  std::uint64_t remaining = kDefaultFuel;

  void tick();
};

// Thrown when the budget hits zero: the input diverges, hence was ill-typed.
struct FuelExhausted : std::runtime_error {
  FuelExhausted() : std::runtime_error("evaluation fuel exhausted") {}
};

// Thrown when reduction meets a stuck non-redex (applying a sort, splitting
// a lambda, ...). Only reachable from ill-typed inputs.
struct IllShaped : std::runtime_error {
  explicit IllShaped(const std::string& what) : std::runtime_error(what) {}
};

enum class WhnfKind : std::uint8_t {
  Sort,
  Pi,
  Lam,
  UnitTy,
  UnitVal,
  Sigma,
  Pair,
  SqTy,
  SqVal,
  Dummy,
  Neutral,
  NotWhnf,
};

// Grammar classification: a neutral is a variable under a spine of
// applications and eliminations; anything reducible is NotWhnf.
WhnfKind classify(const TermPtr& t);
bool is_neutral(const TermPtr& t);
bool is_whnf(const TermPtr& t);

// Weak head evaluation. Returns the input pointer unchanged when it is
// already a whnf.
TermPtr whnf(const TermPtr& t, Fuel& fuel);

// Active application of a whnf function to an argument: beta-reduces under
// fuel for a lambda, extends the spine for a neutral.
TermPtr app_active(const TermPtr& fn_whnf, Ann ann, const TermPtr& arg,
                   Fuel& fuel);

// Full beta normal form followed by maximal eta reduction of an untyped
// term. Test oracle only; the kernel never calls this.
UTermPtr nf_beta_eta(const UTermPtr& t, Fuel& fuel);
UTermPtr nf_beta_eta(const UTermPtr& t, std::uint64_t fuel = kDefaultFuel);

}  // namespace iitt

#endif
