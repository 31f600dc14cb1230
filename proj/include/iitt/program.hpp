#ifndef IITT_PROGRAM_HPP
#define IITT_PROGRAM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iitt/checker.hpp"
#include "iitt/diagnostics.hpp"
#include "iitt/eval.hpp"
#include "iitt/surface.hpp"

namespace iitt {

struct CheckOptions {
  std::uint64_t fuel = kDefaultFuel;
  // User-written `irr` is rejected unless enabled: the checker cannot tell
  // whether a proof existed, so by default only erasure may introduce it.
  bool allow_irr = false;
  bool erase_named = true;
};

struct ItemOutcome {
  ItemKind kind = ItemKind::Check;
  Span span;
  bool ok = false;
  std::optional<Diagnostic> diagnostic;
  std::string output;  // inferred type, whnf, erasure, ...
};

struct ProgramReport {
  std::vector<ItemOutcome> items;

  bool all_ok() const;
  // 0 all ok; 2 any parse/scope failure; 3 any fuel/internal failure;
  // 1 any other (type/equality) failure.
  int exit_code() const;
};

// Runs elaborated items in order: definitions are checked then kept
// transparent, commands execute, and #fail flips an item's polarity.
ProgramReport check_program(const std::vector<Item>& items,
                            const CheckOptions& opts);

// Convenience: parse + elaborate + check a whole source. A parse error
// yields a single failed item.
ProgramReport check_source(std::string_view source, const CheckOptions& opts);

}  // namespace iitt

#endif
