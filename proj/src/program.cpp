#include "iitt/program.hpp"

#include <utility>

#include "iitt/equality.hpp"
#include "iitt/erasure.hpp"

namespace iitt {

namespace {

bool contains_dummy(const TermPtr& t) {
  if (!t) return false;
  if (t->kind == TermKind::Dummy) return true;
  return contains_dummy(t->a) || contains_dummy(t->b);
}

struct ItemFailure {
  Diagnostic diag;
};

// Runs one item, returning its printable output. Failures unwind.
std::string run_item(const Item& it, const CheckOptions& opts) {
  Fuel fuel{opts.fuel};
  Context empty;
  auto guard_irr = [&](const TermPtr& t) {
    if (!opts.allow_irr && contains_dummy(t))
      throw ItemFailure{make_diag(
          DiagCode::Dummy, "'irr' in source requires --allow-irr", it.span)};
  };
  try {
    switch (it.kind) {
      case ItemKind::Def: {
        guard_irr(it.type);
        guard_irr(it.lhs);
        check_is_type(empty, it.type, fuel);
        check(empty, it.lhs, it.type, CheckMode::Relevant, fuel);
        return "def " + it.name + " : " + print(it.type);
      }
      case ItemKind::Check: {
        guard_irr(it.type);
        guard_irr(it.lhs);
        check_is_type(empty, it.type, fuel);
        check(empty, it.lhs, it.type, CheckMode::Relevant, fuel);
        return print(it.lhs) + " : " + print(it.type);
      }
      case ItemKind::Infer: {
        guard_irr(it.lhs);
        TermPtr ty = infer(empty, it.lhs, fuel);
        return print(ty);
      }
      case ItemKind::Eq: {
        guard_irr(it.type);
        guard_irr(it.lhs);
        guard_irr(it.rhs);
        check_is_type(empty, it.type, fuel);
        check(empty, it.lhs, it.type, CheckMode::Relevant, fuel);
        check(empty, it.rhs, it.type, CheckMode::Relevant, fuel);
        EqResult r = tm_eq(empty, it.lhs, it.rhs, it.type, fuel);
        if (r.fuel_exhausted()) throw FuelExhausted();
        if (r.rejected())
          throw ItemFailure{make_diag(
              DiagCode::Eq, "not equal: " + r.reason, it.span)};
        return "accepted";
      }
      case ItemKind::Whnf: {
        guard_irr(it.lhs);
        infer(empty, it.lhs, fuel);  // only well-typed terms are reduced
        TermPtr v = whnf(it.lhs, fuel);
        return print(v);
      }
      case ItemKind::Erase: {
        guard_irr(it.lhs);
        infer(empty, it.lhs, fuel);
        UTermPtr u = erase_external(it.lhs);
        return print_untyped(u, opts.erase_named);
      }
    }
  } catch (const TypeError& e) {
    Diagnostic d = e.diag;
    if (d.span.line == 0) d.span = it.span;
    throw ItemFailure{std::move(d)};
  } catch (const FuelExhausted&) {
    throw ItemFailure{make_diag(DiagCode::Fuel, "fuel exhausted", it.span)};
  } catch (const IllShaped& e) {
    throw ItemFailure{make_diag(DiagCode::Type,
                                std::string("stuck reduction: ") + e.what(),
                                it.span)};
  }
  throw ItemFailure{make_diag(DiagCode::Type, "malformed item", it.span)};
}

}  // namespace

bool ProgramReport::all_ok() const {
  for (const auto& it : items)
    if (!it.ok) return false;
  return true;
}

int ProgramReport::exit_code() const {
  bool parse_scope = false, fuel = false, other = false;
  for (const auto& it : items) {
    if (it.ok) continue;
    if (!it.diagnostic) { other = true; continue; }
    switch (it.diagnostic->code) {
      case DiagCode::Parse:
      case DiagCode::Scope:
        parse_scope = true;
        break;
      case DiagCode::Fuel:
        fuel = true;
        break;
      default:
        other = true;
        break;
    }
  }
  if (parse_scope) return 2;
  if (fuel) return 3;
  if (other) return 1;
  return 0;
}

ProgramReport check_program(const std::vector<Item>& items,
                            const CheckOptions& opts) {
  ProgramReport report;
  report.items.reserve(items.size());
  for (const auto& it : items) {
    ItemOutcome out;
    out.kind = it.kind;
    out.span = it.span;
    std::optional<Diagnostic> failure;
    std::string output;
    if (it.poisoned) {
      failure = it.poisoned;
    } else {
      try {
        output = run_item(it, opts);
      } catch (const ItemFailure& f) {
        failure = f.diag;
      }
    }
    if (it.expect_fail) {
      if (failure) {
        out.ok = true;
        out.output = "failed as expected: " + failure->render();
      } else {
        out.ok = false;
        out.diagnostic = make_diag(
            DiagCode::Type, "#fail: item succeeded but was expected to fail",
            it.span);
      }
    } else {
      out.ok = !failure.has_value();
      out.diagnostic = std::move(failure);
      out.output = std::move(output);
    }
    report.items.push_back(std::move(out));
  }
  return report;
}

ProgramReport check_source(std::string_view source, const CheckOptions& opts) {
  ParseOutput parsed = parse(source);
  if (!parsed.ok()) {
    ProgramReport report;
    ItemOutcome out;
    out.kind = ItemKind::Check;
    out.span = parsed.error->span;
    out.ok = false;
    out.diagnostic = parsed.error;
    report.items.push_back(std::move(out));
    return report;
  }
  Elaborator elab;
  return check_program(elab.run(parsed.items), opts);
}

}  // namespace iitt
