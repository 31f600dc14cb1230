#ifndef IITT_DIAGNOSTICS_HPP
#define IITT_DIAGNOSTICS_HPP

#include <cstdint>
#include <string>

namespace iitt {

// 1-based source position; {0,0} when no source location applies.
struct Span {
  std::uint32_t line = 0;
  std::uint32_t col = 0;
};

enum class DiagCode : std::uint8_t { Parse, Scope, Type, Eq, Fuel, Dummy };

const char* to_string(DiagCode code);

struct Diagnostic {
  DiagCode code = DiagCode::Type;
  std::string message;
  Span span;

  std::string render() const;
};

Diagnostic make_diag(DiagCode code, std::string message, Span span = {});

}  // namespace iitt

#endif
