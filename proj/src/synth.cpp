#include "ubc/synth.hpp"

#include <sstream>

namespace ubc {

Result<Script> synthesize(const Goal& goal) {
  if (!well_formed(goal.target)) {
    return Diagnostic{.code = "malformed-goal",
                      .message = "goal system violates a structural invariant"};
  }
  auto violations = closure_invariant(goal.target);
  if (!violations.empty()) {
    Diagnostic d = violations.front();
    d.code = "unsatisfiable";
    d.message = "no script can reach the goal: " + d.message;
    return d;
  }
  return Script{canonical_steps(goal.target)};
}

namespace {

std::string describe_step(const TacticStep& step) {
  std::string out = step_name(step.kind);
  const char* sep = step.kind == StepKind::Connect ||
                            step.kind == StepKind::Disconnect
                        ? " -> "
                    : step.kind == StepKind::Allow    ? " <- "
                    : step.kind == StepKind::Revoke ? " -/- "
                                                      : " ";
  for (std::size_t k = 0; k < step.args.size(); ++k)
    out += (k == 0 ? " " : sep) + step.args[k].name;
  return out;
}

std::string assumptions_string(const System& s) {
  std::string a = "{";
  bool first = true;
  for (const auto& [i, set] : s.allowed) {
    if (!first) a += ", ";
    a += i.name + " ↦ " + to_string(set);
    first = false;
  }
  return a + "}";
}

}  // namespace

Result<std::string> explain(const Script& script) {
  auto result = replay(script);
  if (!result) return result.error();

  // Walk the left spine bottom-up to recover per-step nodes in order.
  std::vector<const ProofNode*> spine;
  for (const ProofNode* n = &result.value().tree;; n = &n->premises.front()) {
    spine.push_back(n);
    if (n->premises.empty()) break;
  }

  std::ostringstream out;
  int entry = 0;
  for (auto it = spine.rbegin(); it != spine.rend(); ++it, ++entry) {
    const ProofNode& n = **it;
    out << entry << ". ";
    if (n.rule == "axiom") {
      out << "axiom: start from the empty system";
    } else {
      out << describe_step(script.steps.at(static_cast<std::size_t>(entry) - 1))
          << " [" << n.rule << "]";
      if (!n.facts.empty()) {
        out << "; discharged:";
        for (const auto& f : n.facts) out << ' ' << f << ';';
      }
    }
    out << " A = " << assumptions_string(n.conclusion.system()) << "\n";
  }
  out << "contract: " << to_string(result.value().judgment) << "\n";
  return out.str();
}

}  // namespace ubc
