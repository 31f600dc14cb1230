#include "iitt/diagnostics.hpp"

namespace iitt {

const char* to_string(DiagCode code) {
  switch (code) {
    case DiagCode::Parse: return "PARSE";
    case DiagCode::Scope: return "SCOPE";
    case DiagCode::Type: return "TYPE";
    case DiagCode::Eq: return "EQ";
    case DiagCode::Fuel: return "FUEL";
    case DiagCode::Dummy: return "DUMMY";
  }
  return "?";
}

std::string Diagnostic::render() const {
  std::string out;
  if (span.line != 0) {
    out += std::to_string(span.line) + ":" + std::to_string(span.col) + ": ";
  }
  out += "error[";
  out += to_string(code);
  out += "]: ";
  out += message;
  return out;
}

Diagnostic make_diag(DiagCode code, std::string message, Span span) {
  return Diagnostic{code, std::move(message), span};
}

}  // namespace iitt
