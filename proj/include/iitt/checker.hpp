#ifndef IITT_CHECKER_HPP
#define IITT_CHECKER_HPP

#include <cstdint>

#include "iitt/diagnostics.hpp"
#include "iitt/eval.hpp"
#include "iitt/term.hpp"

namespace iitt {

// Whether the current obligation is relevant (t : T) or irrelevant (t / T).
// Irrelevant obligations are discharged in the resurrected context.
enum class CheckMode : std::uint8_t { Relevant, Irrelevant };

// Thrown on typing failures; the program driver turns it into a report.
struct TypeError {
  Diagnostic diag;
};

// Infers the type of t in ctx. Every term former except pairs and the dummy
// is inferable. Throws TypeError or FuelExhausted.
TermPtr infer(const Context& ctx, const TermPtr& t, Fuel& fuel);

// Checks t against the (well-formed) expected type. In Irrelevant mode the
// context is resurrected and the dummy is accepted.
void check(const Context& ctx, const TermPtr& t, const TermPtr& type,
           CheckMode mode, Fuel& fuel);

// Requires t to be a type and returns its sort level.
std::uint32_t check_is_type(const Context& ctx, const TermPtr& t, Fuel& fuel);

// Each binding's type must be a type over the bindings before it.
void check_context(const Context& ctx, Fuel& fuel);

}  // namespace iitt

#endif
