#include "ubc/tactics.hpp"

#include <algorithm>

#include "ubc/enhance.hpp"

namespace ubc {

const char* step_name(StepKind k) {
  switch (k) {
    case StepKind::CreateGeneral: return "create";
    case StepKind::CreateInteractive: return "create-interactive";
    case StepKind::Delete: return "delete";
    case StepKind::Connect: return "connect";
    case StepKind::Disconnect: return "disconnect";
    case StepKind::Allow: return "allow";
    case StepKind::Revoke: return "revoke";
    case StepKind::Merge: return "merge";
    case StepKind::Split: return "split";
    case StepKind::Designate: return "designate";
    case StepKind::Simplify: return "simplify";
  }
  return "?";
}

System axiom() { return System{}; }

namespace {

Diagnostic unknown(const char* rule, const ComponentId& c) {
  return Diagnostic{.code = "unknown-component",
                    .rule = rule,
                    .witness = {c.name},
                    .message = "component " + c.name + " is not in the system"};
}

}  // namespace

Result<System> create_general(const System& s, const ComponentId& c) {
  if (s.components.contains(c)) {
    return Diagnostic{.code = "duplicate-component",
                      .rule = "create+1",
                      .witness = {c.name},
                      .message = "component " + c.name + " already exists"};
  }
  System out = s;
  out.components.insert(c);
  return out;
}

Result<System> create_interactive(const System& s, const ComponentId& i) {
  if (s.components.contains(i)) {
    return Diagnostic{.code = "duplicate-component",
                      .rule = "create+2",
                      .witness = {i.name},
                      .message = "component " + i.name + " already exists"};
  }
  System out = s;
  out.components.insert(i);
  out.interactive.insert(i);
  out.allowed[i] = IdSet{i};
  return out;
}

Result<System> delete_component(const System& s, const ComponentId& c) {
  const char* rule = s.interactive.contains(c) ? "delete+2" : "delete+1";
  if (!s.components.contains(c)) return unknown(rule, c);
  for (const auto& n : s.connections) {
    if (n.from == c || n.to == c) {
      return Diagnostic{.code = "not-isolated",
                        .rule = rule,
                        .witness = {n.from.name, n.to.name},
                        .message = "component " + c.name +
                                   " still has connection ⟨" + n.from.name +
                                   ", " + n.to.name + "⟩"};
    }
  }
  for (const auto& [i, set] : s.allowed) {
    if (i != c && set.contains(c)) {
      return Diagnostic{.code = "still-allowed",
                        .rule = rule,
                        .witness = {c.name, i.name},
                        .message = "component " + c.name +
                                   " is still in the allowed set of " + i.name};
    }
  }
  System out = s;
  out.components.erase(c);
  out.interactive.erase(c);
  out.allowed.erase(c);
  out.enhancers.erase(c);
  return out;
}

Result<System> connect(const System& s, const ComponentId& c_a,
                       const ComponentId& c_b) {
  if (!s.components.contains(c_a)) return unknown("connect+", c_a);
  if (!s.components.contains(c_b)) return unknown("connect+", c_b);
  Connection edge{c_a, c_b};
  if (s.connections.contains(edge)) {
    return Diagnostic{.code = "duplicate-connection",
                      .rule = "connect+",
                      .witness = {c_a.name, c_b.name},
                      .message = "connection ⟨" + c_a.name + ", " + c_b.name +
                                 "⟩ already exists"};
  }
  System post = s;
  post.connections.insert(edge);

  IdSet down = downstream(s, c_b);
  IdSet up = upstream(s, c_a);
  for (const auto& [i, set] : s.allowed) {
    for (const auto& d : down) {
      if (!set.contains(d)) continue;
      for (const auto& cp : up) {
        if (set.contains(cp)) continue;
        // Waived when every cp ⇝ i path in the post-connection graph is
        // shielded by U.
        if (!s.enhancers.empty() &&
            !reaches_avoiding(post, cp, i, s.enhancers)) {
          continue;
        }
        return Diagnostic{.code = "access-violation",
                          .rule = "connect+",
                          .witness = {cp.name, d.name, i.name},
                          .message = d.name + " ∈ A(" + i.name + ") but " +
                                     cp.name + " ∉ A(" + i.name + ")"};
      }
    }
  }
  return post;
}

Result<System> disconnect(const System& s, const ComponentId& c_a,
                          const ComponentId& c_b) {
  Connection edge{c_a, c_b};
  if (!s.connections.contains(edge)) {
    return Diagnostic{.code = "unknown-connection",
                      .rule = "disconnect+",
                      .witness = {c_a.name, c_b.name},
                      .message = "no connection ⟨" + c_a.name + ", " +
                                 c_b.name + "⟩ to remove"};
  }
  System out = s;
  out.connections.erase(edge);
  return out;
}

Result<System> allow(const System& s, const ComponentId& i,
                     const ComponentId& c) {
  if (!s.components.contains(i)) return unknown("allowed+", i);
  if (!s.components.contains(c)) return unknown("allowed+", c);
  if (!s.interactive.contains(i)) {
    return Diagnostic{.code = "not-interactive",
                      .rule = "allowed+",
                      .witness = {i.name},
                      .message = "allow target " + i.name +
                                 " is not interactive"};
  }
  System out = s;
  out.allowed[i].insert(c);
  return out;
}

namespace {

// One concrete edge sequence from `from` to `to`, for diagnostics.
std::vector<ComponentId> find_path(const System& s, const ComponentId& from,
                                   const ComponentId& to) {
  std::map<ComponentId, ComponentId> parent;
  std::vector<ComponentId> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ComponentId cur = queue[head];
    for (const auto& n : s.connections) {
      if (n.from != cur) continue;
      if (n.to == to) {
        std::vector<ComponentId> path{to};
        for (ComponentId at = cur; at != from; at = parent.at(at))
          path.push_back(at);
        path.push_back(from);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!parent.contains(n.to) && n.to != from) {
        parent.emplace(n.to, cur);
        queue.push_back(n.to);
      }
    }
  }
  return {};
}

}  // namespace

Result<System> revoke(const System& s, const ComponentId& i,
                      const ComponentId& c) {
  if (!s.components.contains(i)) return unknown("revoke+", i);
  if (!s.components.contains(c)) return unknown("revoke+", c);
  if (!s.interactive.contains(i)) {
    return Diagnostic{.code = "not-interactive",
                      .rule = "revoke+",
                      .witness = {i.name},
                      .message = "revoke target " + i.name +
                                 " is not interactive"};
  }
  if (c == i) {
    return Diagnostic{.code = "cannot-revoke-self",
                      .rule = "revoke+",
                      .witness = {i.name},
                      .message = "revoking " + i.name +
                                 " from its own allowed set would break "
                                 "self-access"};
  }
  if (!s.allowed.at(i).contains(c)) {
    return Diagnostic{.code = "not-in-allowed-set",
                      .rule = "revoke+",
                      .witness = {c.name, i.name},
                      .message = c.name + " is not in the allowed set of " +
                                 i.name};
  }
  if (reaches(s, c, i)) {
    auto path = find_path(s, c, i);
    std::vector<std::string> witness;
    for (const auto& p : path) witness.push_back(p.name);
    return Diagnostic{.code = "path-exists",
                      .rule = "revoke+",
                      .witness = std::move(witness),
                      .message = "a path from " + c.name + " to " + i.name +
                                 " still exists"};
  }
  System out = s;
  out.allowed[i].erase(c);
  return out;
}

Result<System> merge(const System& s1, const System& s2) {
  for (const auto& c : s1.components) {
    if (s2.components.contains(c)) {
      return Diagnostic{.code = "overlap",
                        .rule = "naming1",
                        .witness = {c.name},
                        .message = "component " + c.name +
                                   " appears in both systems"};
    }
  }
  System out = s1;
  out.components.insert(s2.components.begin(), s2.components.end());
  out.connections.insert(s2.connections.begin(), s2.connections.end());
  out.interactive.insert(s2.interactive.begin(), s2.interactive.end());
  out.allowed.insert(s2.allowed.begin(), s2.allowed.end());
  out.enhancers.insert(s2.enhancers.begin(), s2.enhancers.end());
  return out;
}

Result<std::pair<System, System>> split(const System& s, const IdSet& part) {
  for (const auto& c : part) {
    if (!s.components.contains(c)) return unknown("naming2", c);
  }
  for (const auto& n : s.connections) {
    if (part.contains(n.from) != part.contains(n.to)) {
      return Diagnostic{.code = "crossing-connection",
                        .rule = "naming2",
                        .witness = {n.from.name, n.to.name},
                        .message = "connection ⟨" + n.from.name + ", " +
                                   n.to.name + "⟩ crosses the partition"};
    }
  }
  for (const auto& [i, set] : s.allowed) {
    bool side = part.contains(i);
    for (const auto& c : set) {
      if (part.contains(c) != side) {
        return Diagnostic{.code = "crossing-grant",
                          .rule = "naming2",
                          .witness = {i.name, c.name},
                          .message = "grant " + c.name + " ∈ A(" + i.name +
                                     ") crosses the partition"};
      }
    }
  }
  auto restrict_to = [&](bool inside) {
    System out;
    for (const auto& c : s.components)
      if (part.contains(c) == inside) out.components.insert(c);
    for (const auto& n : s.connections)
      if (part.contains(n.from) == inside) out.connections.insert(n);
    for (const auto& i : s.interactive)
      if (part.contains(i) == inside) out.interactive.insert(i);
    for (const auto& [i, set] : s.allowed)
      if (part.contains(i) == inside) out.allowed.emplace(i, set);
    for (const auto& u : s.enhancers)
      if (part.contains(u) == inside) out.enhancers.insert(u);
    return out;
  };
  return std::pair<System, System>{restrict_to(true), restrict_to(false)};
}

Result<System> apply_step(const System& s, const TacticStep& step) {
  switch (step.kind) {
    case StepKind::CreateGeneral: return create_general(s, step.args.at(0));
    case StepKind::CreateInteractive:
      return create_interactive(s, step.args.at(0));
    case StepKind::Delete: return delete_component(s, step.args.at(0));
    case StepKind::Connect: return connect(s, step.args.at(0), step.args.at(1));
    case StepKind::Disconnect:
      return disconnect(s, step.args.at(0), step.args.at(1));
    case StepKind::Allow: return allow(s, step.args.at(0), step.args.at(1));
    case StepKind::Revoke: return revoke(s, step.args.at(0), step.args.at(1));
    case StepKind::Merge: return merge(s, step.other.value());
    case StepKind::Split: {
      auto r = split(s, step.part);
      if (!r) return r.error();
      return r.value().first;
    }
    case StepKind::Designate: return designate(s, step.args.at(0));
    case StepKind::Simplify: return simplify(s);
  }
  return Diagnostic{.code = "bad-step", .message = "unknown step kind"};
}

std::vector<TacticStep> canonical_steps(const System& target) {
  std::vector<TacticStep> steps;
  for (const auto& i : target.interactive)
    steps.push_back({StepKind::CreateInteractive, {i}});
  for (const auto& c : target.components)
    if (!target.interactive.contains(c))
      steps.push_back({StepKind::CreateGeneral, {c}});
  // Grants whose grantee reaches i must precede the connects so every
  // connect side condition is already discharged; pure grants must follow
  // the connects or they would block upstream edges.
  std::vector<TacticStep> pure_grants;
  for (const auto& [i, set] : target.allowed) {
    for (const auto& c : set) {
      if (c == i) continue;
      if (reaches(target, c, i))
        steps.push_back({StepKind::Allow, {i, c}});
      else
        pure_grants.push_back({StepKind::Allow, {i, c}});
    }
  }
  for (const auto& u : target.enhancers)
    steps.push_back({StepKind::Designate, {u}});
  for (const auto& n : target.connections)
    steps.push_back({StepKind::Connect, {n.from, n.to}});
  steps.insert(steps.end(), pure_grants.begin(), pure_grants.end());
  return steps;
}

std::vector<TacticStep> create_interactive_with_grants(const ComponentId& i,
                                                       const IdSet& grants) {
  std::vector<TacticStep> steps{{StepKind::CreateInteractive, {i}}};
  for (const auto& c : grants)
    if (c != i) steps.push_back({StepKind::Allow, {i, c}});
  return steps;
}

}  // namespace ubc
