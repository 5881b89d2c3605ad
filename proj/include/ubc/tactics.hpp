#ifndef UBC_TACTICS_HPP
#define UBC_TACTICS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ubc/core.hpp"
#include "ubc/diagnostics.hpp"

namespace ubc {

enum class StepKind {
  CreateGeneral,
  CreateInteractive,
  Delete,
  Connect,
  Disconnect,
  Allow,
  Revoke,
  Merge,
  Split,
  Designate,
  Simplify,
};

/// One tactic invocation with its arguments. Connect/Disconnect/Allow/Revoke
/// take two ids; CreateGeneral/CreateInteractive/Delete/Designate take one;
/// Merge carries a second System; Split carries the chosen subset C^a.
struct TacticStep {
  StepKind kind;
  std::vector<ComponentId> args;
  std::optional<System> other;  // Merge only
  IdSet part;                   // Split only

  bool operator==(const TacticStep&) const = default;
};

const char* step_name(StepKind k);

// ---- the tactics -----------------------------------------------------------

/// The empty system ⟨∅,∅,∅,∅,∅⟩; conclusion of the axiom rule.
System axiom();

/// create⁺₁: add a fresh general component.
Result<System> create_general(const System& s, const ComponentId& c);

/// create⁺₂: add a fresh interactive component with A(i) = {i}.
Result<System> create_interactive(const System& s, const ComponentId& i);

/// delete⁺₁/delete⁺₂: remove an isolated component that appears in no other
/// allowed set; an interactive component's own A entry goes with it.
Result<System> delete_component(const System& s, const ComponentId& c);

/// connect⁺: add ⟨c_a,c_b⟩ provided every component upstream of c_a is
/// already granted wherever anything downstream of c_b is granted (waived
/// per pair when every post-connection path to the interactive target is
/// shielded by U).
Result<System> connect(const System& s, const ComponentId& c_a,
                       const ComponentId& c_b);

/// disconnect⁺: remove an existing connection; A is left intact.
Result<System> disconnect(const System& s, const ComponentId& c_a,
                          const ComponentId& c_b);

/// allowed⁺: grant c access to interactive i.
Result<System> allow(const System& s, const ComponentId& i,
                     const ComponentId& c);

/// revoke⁺: remove a non-self grant when c has no path to i.
Result<System> revoke(const System& s, const ComponentId& i,
                      const ComponentId& c);

/// naming₁: disjoint union of two systems.
Result<System> merge(const System& s1, const System& s2);

/// naming₂: restrict to `part` and its complement when nothing crosses.
Result<std::pair<System, System>> split(const System& s, const IdSet& part);

/// Apply one step; Split continues with the `part` half.
Result<System> apply_step(const System& s, const TacticStep& step);

/// The canonical construction steps reaching `target` from the axiom:
/// interactive creates, general creates, path grants (grantee reaches the
/// interactive target), enhancer designations, connects, then pure grants.
/// Replays successfully exactly when target's closure invariant is empty.
std::vector<TacticStep> canonical_steps(const System& target);

/// Script-level macro: create an interactive component with initial grants,
/// expanded to create⁺₂ followed by allowed⁺ steps.
std::vector<TacticStep> create_interactive_with_grants(const ComponentId& i,
                                                       const IdSet& grants);

}  // namespace ubc

#endif
