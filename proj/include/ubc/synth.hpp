#ifndef UBC_SYNTH_HPP
#define UBC_SYNTH_HPP

#include <string>

#include "ubc/proof.hpp"

namespace ubc {

/// A desired final system (with its assumption map A).
struct Goal {
  System target;
};

/// Goal-directed construction: a script whose replay concludes exactly the
/// goal, or an "unsatisfiable" Diagnostic carrying a violating pair (c,i)
/// of the closure invariant as the witness that no script can reach it.
Result<Script> synthesize(const Goal& goal);

/// Step-by-step narrative of a successful replay: script length + 1 entries,
/// one per rule application plus the axiom, each stating the rule, the
/// discharged side conditions, and the accumulated assumption map.
Result<std::string> explain(const Script& script);

}  // namespace ubc

#endif
