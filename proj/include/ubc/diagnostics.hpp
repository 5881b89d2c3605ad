#ifndef UBC_DIAGNOSTICS_HPP
#define UBC_DIAGNOSTICS_HPP

#include <string>
#include <variant>
#include <vector>

namespace ubc {

struct ComponentId;

/// A structured side-condition violation with concrete witnesses.
struct Diagnostic {
  std::string code;                   // e.g. "access-violation"
  std::string rule;                   // rule whose premise failed, "" if n/a
  std::vector<std::string> witness;   // offending component names, in order
  std::string message;                // one human-readable sentence
  int step = -1;                      // script step index, -1 if n/a
  int line = 0;                       // source position, 0 if n/a
  int column = 0;

  std::string to_string() const;
};

/// Either a value or a Diagnostic explaining why there is none.
template <typename T>
class Result {
public:
  Result(T value) : v_(std::move(value)) {}
  Result(Diagnostic d) : v_(std::move(d)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(v_); }
  T&& value() && { return std::get<T>(std::move(v_)); }
  const Diagnostic& error() const { return std::get<Diagnostic>(v_); }

private:
  std::variant<T, Diagnostic> v_;
};

}  // namespace ubc

#endif
