#ifndef UBC_PROOF_HPP
#define UBC_PROOF_HPP

#include <string>
#include <vector>

#include "ubc/core.hpp"
#include "ubc/tactics.hpp"

namespace ubc {

/// An ordered list of tactic steps, replayed from the axiom.
struct Script {
  std::vector<TacticStep> steps;

  bool operator==(const Script&) const = default;
};

/// One node of a derivation tree. `facts` are the discharged side-condition
/// leaves ("ST" steps): finite membership and path statements stored in a
/// small token syntax (e.g. "fresh G", "access-ok G A") that verify re-checks
/// by direct computation against the premise system.
struct ProofNode {
  std::string rule;                 // "axiom", "create+1", ..., "naming2"
  std::vector<ProofNode> premises;  // ordered; left spine mirrors the script
  std::vector<std::string> facts;
  Judgment conclusion;

  bool operator==(const ProofNode&) const = default;
};

struct ReplayResult {
  Judgment judgment;
  ProofNode tree;
};

/// Apply each step in order starting from axiom(); on success the tree's
/// left spine mirrors the script. The first failing step's Diagnostic is
/// returned with its step index.
Result<ReplayResult> replay(const Script& script);

/// Re-check a tree from scratch, independent of how it was produced: rule
/// schemas, every ST fact, and every conclusion recomputed from the
/// premises. Errors carry the node path (e.g. "0.0.1") as part of the
/// message and the offending components as witnesses.
Result<bool> verify(const ProofNode& tree);

/// Indented natural-deduction rendering; premises above their conclusion,
/// ST facts as leaf lines, rule names right-aligned.
std::string render_text(const ProofNode& tree);

/// Stable JSON form (schema: rule / premises / facts / conclusion with
/// assumptions, components, connections, interactive, enhancers; all arrays
/// lexicographically sorted).
std::string render_json(const ProofNode& tree);

/// Parse a tree back from JSON. Shape errors yield a Diagnostic; the
/// semantic content is only checked by verify.
Result<ProofNode> parse_json(const std::string& text);

}  // namespace ubc

#endif
