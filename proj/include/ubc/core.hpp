#ifndef UBC_CORE_HPP
#define UBC_CORE_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ubc/diagnostics.hpp"

namespace ubc {

/// A component name. Identity and ordering are by name, so std::set/std::map
/// give the canonical (lexicographic) iteration order everywhere.
struct ComponentId {
  std::string name;

  ComponentId() = default;
  ComponentId(std::string n) : name(std::move(n)) {}
  ComponentId(const char* n) : name(n) {}

  auto operator<=>(const ComponentId&) const = default;
};

/// True iff `name` matches the DSL identifier grammar:
/// letter, then letters/digits/underscore.
bool valid_identifier(const std::string& name);

/// A directed connection: `from` uses `to`. ⟨a,b⟩ ≠ ⟨b,a⟩.
struct Connection {
  ComponentId from;
  ComponentId to;

  auto operator<=>(const Connection&) const = default;
};

using IdSet = std::set<ComponentId>;
using AllowedMap = std::map<ComponentId, IdSet>;

/// The quadruple ⟨C,N,I,A⟩ extended with the enhancer set U.
/// Treat as an immutable value: every tactic returns a fresh System.
struct System {
  IdSet components;                 // C
  std::set<Connection> connections; // N
  IdSet interactive;                // I ⊆ C
  AllowedMap allowed;               // A, domain exactly I, i ∈ A(i)
  IdSet enhancers;                  // U ⊆ C

  bool operator==(const System&) const = default;
};

class Judgment;

namespace detail {
/// Proof-module backdoor; not part of the public surface.
Judgment make_judgment(System s);
}

/// The contract handed to a client: assuming the grants in A are acceptable,
/// ⟨C,N,U,I⟩ is usable. Only the proof module constructs these.
class Judgment {
public:
  const System& system() const { return sys_; }
  const AllowedMap& assumptions() const { return sys_.allowed; }

  bool operator==(const Judgment&) const = default;

private:
  explicit Judgment(System s) : sys_(std::move(s)) {}
  System sys_;

  friend Judgment detail::make_judgment(System);
};

// ---- predicates and queries ------------------------------------------------

/// Checks every structural invariant of a system: valid names, I ⊆ C, U ⊆ C,
/// domain(A) = I, A(i) ⊆ C with i ∈ A(i), connection endpoints in C.
bool well_formed(const System& s);

/// Strict transitive closure of N: true iff an edge sequence leads from
/// `from` to `to`. Not reflexive; reaches(x,x) needs a cycle through x.
bool reaches(const System& s, const ComponentId& from, const ComponentId& to);

/// Reachability in the graph with every node of `banned` (and its incident
/// edges) removed. False whenever `from` or `to` is banned.
bool reaches_avoiding(const System& s, const ComponentId& from,
                      const ComponentId& to, const IdSet& banned);

/// {c} ∪ everything c reaches.
IdSet downstream(const System& s, const ComponentId& c);

/// {c} ∪ everything that reaches c.
IdSet upstream(const System& s, const ComponentId& c);

/// True iff the obligation on the pair (c,i) is discharged: c ∈ A(i), or
/// every path from c to i passes through some enhancer in U (equivalently,
/// no path survives deleting all of U).
bool pair_shielded(const System& s, const ComponentId& c, const ComponentId& i);

/// Violations of the enhancer-relaxed closure invariant: for every i ∈ I and
/// every c reaching i, c ∈ A(i) unless every c⇝i path passes through U.
/// Empty for every system a valid script can reach.
std::vector<Diagnostic> closure_invariant(const System& s);

// ---- canonical display -----------------------------------------------------

std::string to_string(const ComponentId& c);
std::string to_string(const IdSet& s);
std::string to_string(const System& s);   // ⟨C,N[,U],I⟩ tuple only
std::string to_string(const Judgment& j); // A ⊨ ⟨C,N[,U],I⟩

}  // namespace ubc

#endif
