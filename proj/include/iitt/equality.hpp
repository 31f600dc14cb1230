#ifndef IITT_EQUALITY_HPP
#define IITT_EQUALITY_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "iitt/eval.hpp"
#include "iitt/term.hpp"

namespace iitt {

// Outcome of an algorithmic equality query. Rejection carries the chain of
// failing sub-judgements, innermost first.
struct EqResult {
  enum class Kind : std::uint8_t { Accepted, Rejected, FuelExhausted };

  Kind kind = Kind::Accepted;
  std::string reason;

  bool accepted() const { return kind == Kind::Accepted; }
  bool rejected() const { return kind == Kind::Rejected; }
  bool fuel_exhausted() const { return kind == Kind::FuelExhausted; }

  static EqResult ok() { return {}; }
  static EqResult no(std::string reason) {
    return {Kind::Rejected, std::move(reason)};
  }
  static EqResult out_of_fuel() {
    return {Kind::FuelExhausted, "fuel exhausted"};
  }
};

// Structural equality also infers the (left-hand) neutral's type.
struct NeEqResult {
  EqResult result;
  TermPtr type;  // set iff accepted
};

// The algorithm assumes its inputs are well-typed at the given type; on
// ill-typed inputs it still terminates (fuel) but may answer either way.

// Type equality on arbitrary well-formed types: weak-head normalize both,
// then compare the normal forms.
EqResult ty_eq(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
               Fuel& fuel);

// Type equality on weak head normal forms.
EqResult ty_eq_whnf(const Context& ctx, const TermPtr& a1, const TermPtr& a2,
                    Fuel& fuel);

// Structural equality of neutrals, inferring their type (not normalized).
NeEqResult ne_eq(const Context& ctx, const TermPtr& n1, const TermPtr& n2,
                 Fuel& fuel);

// As ne_eq but the returned type is weak-head normalized.
NeEqResult ne_eq_whnf(const Context& ctx, const TermPtr& n1, const TermPtr& n2,
                      Fuel& fuel);

// Type-directed term equality at an arbitrary type.
EqResult tm_eq(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
               const TermPtr& type, Fuel& fuel);

// Type-directed term equality at a weak head normal type.
EqResult tm_eq_whnf(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
                    const TermPtr& type_whnf, Fuel& fuel);

// Structural equality under irrelevance: each side must be self-related in
// the resurrected context, at the same type; the sides are never compared
// with each other.
NeEqResult ne_eq_irr(const Context& ctx, const TermPtr& n1, const TermPtr& n2,
                     Fuel& fuel);

// Budget-owning conveniences.
EqResult ty_eq(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
               std::uint64_t fuel = kDefaultFuel);
EqResult tm_eq(const Context& ctx, const TermPtr& t1, const TermPtr& t2,
               const TermPtr& type, std::uint64_t fuel = kDefaultFuel);
NeEqResult ne_eq(const Context& ctx, const TermPtr& n1, const TermPtr& n2,
                 std::uint64_t fuel = kDefaultFuel);
NeEqResult ne_eq_irr(const Context& ctx, const TermPtr& n1, const TermPtr& n2,
                     std::uint64_t fuel = kDefaultFuel);

}  // namespace iitt

#endif
