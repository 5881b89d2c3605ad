#ifndef UBC_DSL_HPP
#define UBC_DSL_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ubc/proof.hpp"

namespace ubc {

struct SourceSpan {
  int line = 0;
  int column = 0;
};

struct ParsedScript {
  Script script;
  std::vector<SourceSpan> spans;  // one per step
};

/// Parse a system literal (`interactive` / `component` / `enhancer` /
/// `allow i <- c` / `edge a -> b`, one statement per line, `#` comments).
/// Declarations may appear in any order; the result is well-formed.
Result<System> parse_system(const std::string& text);

/// Parse a tactic script (`create`, `create-interactive`, `delete`,
/// `connect a -> b`, `disconnect a -> b`, `allow i <- c`, `revoke i -/- c`,
/// `designate u`, `simplify`).
Result<ParsedScript> parse_script(const std::string& text);

/// Canonical printers; parse(print(x)) == x.
std::string print_system(const System& s);
std::string print_script(const Script& s);

/// DOT rendering: interactive components double-circled and annotated with
/// their allowed sets, enhancers boxed; stable ordering.
std::string export_dot(const System& s);

/// The command-line surface. Exit status: 0 success, 1 checked failure
/// (Diagnostic), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ubc

#endif
