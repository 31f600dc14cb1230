#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "iitt/program.hpp"
#include "iitt/surface.hpp"
#include "iitt/testkit.hpp"

namespace {

using nlohmann::json;

std::uint64_t fuel_from_env(std::uint64_t fallback) {
  if (const char* env = std::getenv("IITT_FUEL")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

json span_json(const iitt::Span& s) {
  return json{{"line", s.line}, {"col", s.col}};
}

json report_json(const iitt::ProgramReport& report) {
  json items = json::array();
  for (const auto& it : report.items) {
    json j{{"span", span_json(it.span)},
           {"kind", iitt::to_string(it.kind)},
           {"status", it.ok ? "ok" : "error"}};
    if (it.diagnostic) {
      j["diagnostic"] = json{{"code", iitt::to_string(it.diagnostic->code)},
                             {"message", it.diagnostic->message},
                             {"span", span_json(it.diagnostic->span)}};
    } else {
      j["diagnostic"] = nullptr;
    }
    if (!it.output.empty()) j["output"] = it.output;
    items.push_back(std::move(j));
  }
  return json{{"items", std::move(items)}};
}

void print_report(const iitt::ProgramReport& report, const std::string& file) {
  for (const auto& it : report.items) {
    std::string where = file + ":" + std::to_string(it.span.line) + ":" +
                        std::to_string(it.span.col);
    if (it.ok) {
      std::cout << where << ": " << iitt::to_string(it.kind) << " ok";
      if (!it.output.empty()) std::cout << ": " << it.output;
      std::cout << "\n";
    } else {
      std::cerr << where << ": " << iitt::to_string(it.kind) << " "
                << it.diagnostic->render() << "\n";
    }
  }
}

int cmd_check(const std::vector<std::string>& paths, bool json_out,
              const iitt::CheckOptions& opts) {
  int exit_code = 0;
  json all = json::array();
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "cannot open " << path << "\n";
      return 3;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    iitt::ProgramReport report = iitt::check_source(buf.str(), opts);
    if (json_out) {
      json j = report_json(report);
      j["file"] = path;
      all.push_back(std::move(j));
    } else {
      print_report(report, path);
    }
    int code = report.exit_code();
    // parse/scope beats fuel beats type failures when aggregating files
    auto rank = [](int c) { return c == 2 ? 3 : c == 3 ? 2 : c; };
    if (rank(code) > rank(exit_code)) exit_code = code;
  }
  if (json_out) std::cout << all.dump(2) << "\n";
  return exit_code;
}

int cmd_repl(const iitt::CheckOptions& opts) {
  std::cout << "iitt repl -- :quit to leave, :ctx to list definitions, "
               ":fuel N to set the budget\n";
  iitt::Elaborator elab;
  iitt::CheckOptions current = opts;
  std::string line;
  while (true) {
    std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line.empty()) continue;
    if (line == ":quit" || line == ":q") break;
    if (line == ":ctx") {
      for (const auto& [name, def] : elab.defs())
        std::cout << "def " << name << " : " << iitt::print(def.type) << "\n";
      continue;
    }
    if (line.rfind(":fuel", 0) == 0) {
      try {
        current.fuel = std::stoull(line.substr(5));
        std::cout << "fuel = " << current.fuel << "\n";
      } catch (...) {
        std::cout << "usage: :fuel N\n";
      }
      continue;
    }
    iitt::ParseOutput parsed = iitt::parse(line);
    if (!parsed.ok()) {
      std::cout << parsed.error->render() << "\n";
      continue;
    }
    std::vector<iitt::Item> items = elab.run(parsed.items);
    iitt::ProgramReport report = iitt::check_program(items, current);
    for (const auto& it : report.items) {
      if (it.ok) {
        std::cout << (it.output.empty() ? "ok" : it.output) << "\n";
      } else {
        std::cout << it.diagnostic->render() << "\n";
      }
    }
  }
  return 0;
}

int cmd_test(const std::string& suite, unsigned size, std::uint32_t level,
             std::uint64_t fuel) {
  iitt::testkit::SuiteOptions opts;
  opts.size = size;
  opts.max_level = level;
  opts.fuel = fuel;
  std::vector<std::string> names;
  if (suite.empty()) {
    names = iitt::testkit::suite_names();
  } else {
    auto known = iitt::testkit::suite_names();
    bool ok = false;
    for (const auto& n : known) ok = ok || n == suite;
    if (!ok) {
      std::cerr << "unknown suite '" << suite << "'; available:";
      for (const auto& n : known) std::cerr << " " << n;
      std::cerr << "\n";
      return 2;
    }
    names.push_back(suite);
  }
  bool all_ok = true;
  for (const auto& name : names) {
    auto start = std::chrono::steady_clock::now();
    iitt::testkit::SuiteReport rep = iitt::testkit::run_suite(name, opts);
    auto secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::cout << (rep.passed() ? "[pass] " : "[FAIL] ") << rep.name << ": "
              << rep.cases << " cases";
    if (rep.fuel_exhausted)
      std::cout << ", " << rep.fuel_exhausted << " fuel exhaustions";
    std::cout << " (" << secs << "s)\n";
    for (const auto& f : rep.failures) std::cout << "    " << f << "\n";
    all_ok = all_ok && rep.passed();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"iitt -- a kernel for irrelevant intensional type theory"};
  app.require_subcommand(1);

  std::vector<std::string> paths;
  bool json_out = false;
  bool allow_irr = false;
  std::string erase_style = "named";
  std::uint64_t fuel = fuel_from_env(iitt::kDefaultFuel);

  CLI::App* check = app.add_subcommand("check", "type-check .iitt files");
  check->add_option("files", paths, "input files")->required();
  check->add_flag("--json", json_out, "machine-readable report on stdout");
  check->add_flag("--allow-irr", allow_irr, "accept user-written 'irr'");
  check->add_option("--fuel", fuel, "evaluation step budget");
  check->add_option("--erase-style", erase_style,
                    "erasure output: named | debruijn")
      ->check(CLI::IsMember({"named", "debruijn"}));

  CLI::App* repl = app.add_subcommand("repl", "interactive session");
  repl->add_flag("--allow-irr", allow_irr, "accept user-written 'irr'");
  repl->add_option("--fuel", fuel, "evaluation step budget");
  repl->add_option("--erase-style", erase_style,
                   "erasure output: named | debruijn")
      ->check(CLI::IsMember({"named", "debruijn"}));

  std::string suite;
  unsigned size = 0;
  std::uint32_t level = 1;
  CLI::App* test = app.add_subcommand("test", "run property suites");
  test->add_option("--suite", suite, "suite name (default: all)");
  test->add_option("--size", size, "term size bound (0: per-suite default)");
  test->add_option("--level", level, "largest sort literal");
  test->add_option("--fuel", fuel, "evaluation step budget");

  CLI11_PARSE(app, argc, argv);

  iitt::CheckOptions opts;
  opts.fuel = fuel;
  opts.allow_irr = allow_irr;
  opts.erase_named = erase_style == "named";

  if (check->parsed()) return cmd_check(paths, json_out, opts);
  if (repl->parsed()) return cmd_repl(opts);
  if (test->parsed()) return cmd_test(suite, size, level, fuel);
  return 0;
}
