#include "ubc/proof.hpp"

#include <sstream>

#include <json.hpp>

#include "ubc/enhance.hpp"

namespace ubc {

namespace {

using json = nlohmann::json;

std::vector<std::string> tokens(const std::string& fact) {
  std::vector<std::string> out;
  std::istringstream in(fact);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

bool is_isolated(const System& s, const ComponentId& c) {
  for (const auto& n : s.connections) {
    if (n.from == c || n.to == c) return false;
  }
  return true;
}

bool is_unallowed(const System& s, const ComponentId& c) {
  for (const auto& [i, set] : s.allowed) {
    if (i != c && set.contains(c)) return false;
  }
  return true;
}

// True iff `fact` holds in `s` by direct computation.
bool fact_holds(const System& s, const std::string& fact) {
  auto t = tokens(fact);
  if (t.empty()) return false;
  const std::string& kw = t[0];
  auto id = [&](std::size_t k) { return ComponentId{t.at(k)}; };
  if (kw == "fresh" && t.size() == 2)
    return valid_identifier(t[1]) && !s.components.contains(id(1));
  if (kw == "component" && t.size() == 2) return s.components.contains(id(1));
  if (kw == "general" && t.size() == 2)
    return s.components.contains(id(1)) && !s.interactive.contains(id(1));
  if (kw == "interactive" && t.size() == 2)
    return s.interactive.contains(id(1));
  if (kw == "isolated" && t.size() == 2) return is_isolated(s, id(1));
  if (kw == "unallowed" && t.size() == 2) return is_unallowed(s, id(1));
  if (kw == "edge" && t.size() == 3)
    return s.connections.contains({id(1), id(2)});
  if (kw == "no-edge" && t.size() == 3)
    return !s.connections.contains({id(1), id(2)});
  if (kw == "access-ok" && t.size() == 3)
    return connect(s, id(1), id(2)).ok();
  if (kw == "allowed" && t.size() == 3) {
    auto it = s.allowed.find(id(1));
    return it != s.allowed.end() && it->second.contains(id(2));
  }
  if (kw == "not-self" && t.size() == 3) return t[1] != t[2];
  if (kw == "no-path" && t.size() == 3)
    return !reaches(s, id(1), id(2)) && !s.connections.contains({id(1), id(2)});
  if (kw == "partition") {
    IdSet part;
    for (std::size_t k = 1; k < t.size(); ++k) part.insert(id(k));
    return split(s, part).ok();
  }
  return false;
}

struct StepFacts {
  std::string rule;
  std::vector<std::string> facts;
};

// The rule name and the ST facts a step discharges against pre-state `s`.
StepFacts facts_for(const System& s, const TacticStep& step) {
  auto a = [&](std::size_t k) { return step.args.at(k).name; };
  switch (step.kind) {
    case StepKind::CreateGeneral:
      return {"create+1", {join({"fresh", a(0)})}};
    case StepKind::CreateInteractive:
      return {"create+2", {join({"fresh", a(0)})}};
    case StepKind::Delete:
      if (s.interactive.contains(step.args.at(0)))
        return {"delete+2",
                {join({"interactive", a(0)}), join({"isolated", a(0)}),
                 join({"unallowed", a(0)})}};
      return {"delete+1",
              {join({"component", a(0)}), join({"general", a(0)}),
               join({"isolated", a(0)}), join({"unallowed", a(0)})}};
    case StepKind::Connect:
      return {"connect+",
              {join({"component", a(0)}), join({"component", a(1)}),
               join({"no-edge", a(0), a(1)}), join({"access-ok", a(0), a(1)})}};
    case StepKind::Disconnect:
      return {"disconnect+", {join({"edge", a(0), a(1)})}};
    case StepKind::Allow:
      return {"allowed+",
              {join({"interactive", a(0)}), join({"component", a(1)})}};
    case StepKind::Revoke:
      return {"revoke+",
              {join({"interactive", a(0)}), join({"allowed", a(0), a(1)}),
               join({"not-self", a(0), a(1)}), join({"no-edge", a(1), a(0)}),
               join({"no-path", a(1), a(0)})}};
    case StepKind::Merge:
      return {"naming1", {}};
    case StepKind::Split: {
      std::string fact = "partition";
      for (const auto& c : step.part) fact += ' ' + c.name;
      return {"naming2", {fact}};
    }
    case StepKind::Designate:
      return {"designate", {join({"component", a(0)})}};
    case StepKind::Simplify:
      return {"simplify", {}};
  }
  return {"?", {}};
}

ProofNode axiom_node() {
  return ProofNode{"axiom", {}, {}, detail::make_judgment(axiom())};
}

}  // namespace

Result<ReplayResult> replay(const Script& script) {
  System current = axiom();
  ProofNode node = axiom_node();
  for (std::size_t idx = 0; idx < script.steps.size(); ++idx) {
    const TacticStep& step = script.steps[idx];
    auto next = apply_step(current, step);
    if (!next) {
      Diagnostic d = next.error();
      d.step = static_cast<int>(idx);
      return d;
    }
    StepFacts sf = facts_for(current, step);
    std::vector<ProofNode> premises{std::move(node)};
    if (step.kind == StepKind::Merge) {
      // naming1 needs a proof of the second system: replay its canonical
      // construction as the right premise.
      Script sub{canonical_steps(step.other.value())};
      auto rhs = replay(sub);
      if (!rhs) {
        Diagnostic d = rhs.error();
        d.step = static_cast<int>(idx);
        d.message = "merge premise is not constructible: " + d.message;
        return d;
      }
      ReplayResult sub_result = std::move(rhs).value();
      if (sub_result.judgment.system() != step.other.value()) {
        return Diagnostic{.code = "unsatisfiable",
                          .rule = "naming1",
                          .message = "merge premise system is not reachable "
                                     "by its canonical construction",
                          .step = static_cast<int>(idx)};
      }
      premises.push_back(std::move(sub_result.tree));
    }
    current = std::move(next).value();
    node = ProofNode{sf.rule, std::move(premises), std::move(sf.facts),
                     detail::make_judgment(current)};
  }
  Judgment j = detail::make_judgment(current);
  return ReplayResult{j, std::move(node)};
}

namespace {

Diagnostic bad_rule(const std::string& path, const ProofNode& n,
                    const std::string& why) {
  return Diagnostic{.code = "bad-rule-application",
                    .rule = n.rule,
                    .message = "node " + (path.empty() ? "root" : path) + ": " +
                               why};
}

Diagnostic bad_fact(const std::string& path, const ProofNode& n,
                    const std::string& fact) {
  return Diagnostic{.code = "bad-fact",
                    .rule = n.rule,
                    .message = "node " + (path.empty() ? "root" : path) +
                               ": fact does not hold or does not fit the "
                               "rule schema: \"" +
                               fact + "\""};
}

// Expected token pattern per rule; '.' matches any identifier, identical
// letters must bind the same identifier across facts of one node.
struct Schema {
  std::size_t premises;
  std::vector<std::vector<std::string>> facts;  // keyword + variable letters
};

const std::map<std::string, Schema>& schemas() {
  static const std::map<std::string, Schema> s = {
      {"axiom", {0, {}}},
      {"create+1", {1, {{"fresh", "c"}}}},
      {"create+2", {1, {{"fresh", "c"}}}},
      {"delete+1",
       {1,
        {{"component", "c"}, {"general", "c"}, {"isolated", "c"},
         {"unallowed", "c"}}}},
      {"delete+2",
       {1, {{"interactive", "c"}, {"isolated", "c"}, {"unallowed", "c"}}}},
      {"connect+",
       {1,
        {{"component", "a"}, {"component", "b"}, {"no-edge", "a", "b"},
         {"access-ok", "a", "b"}}}},
      {"disconnect+", {1, {{"edge", "a", "b"}}}},
      {"disconnect-", {1, {{"component", "a"}, {"component", "b"}}}},
      {"allowed+", {1, {{"interactive", "a"}, {"component", "b"}}}},
      {"revoke+",
       {1,
        {{"interactive", "a"}, {"allowed", "a", "b"}, {"not-self", "a", "b"},
         {"no-edge", "b", "a"}, {"no-path", "b", "a"}}}},
      {"naming1", {2, {}}},
      {"naming2", {1, {{"partition"}}}},
      {"designate", {1, {{"component", "a"}}}},
      {"simplify", {1, {}}},
  };
  return s;
}

// Match the node's facts against the rule schema and bind its variables.
bool bind_args(const ProofNode& n, const Schema& schema,
               std::map<std::string, std::string>& binding, IdSet& part) {
  if (n.facts.size() != schema.facts.size()) return false;
  for (std::size_t k = 0; k < n.facts.size(); ++k) {
    auto t = tokens(n.facts[k]);
    const auto& pattern = schema.facts[k];
    if (t.empty() || t[0] != pattern[0]) return false;
    if (pattern[0] == "partition") {
      for (std::size_t j = 1; j < t.size(); ++j) part.insert(ComponentId{t[j]});
      continue;
    }
    if (t.size() != pattern.size()) return false;
    for (std::size_t j = 1; j < pattern.size(); ++j) {
      auto [it, inserted] = binding.emplace(pattern[j], t[j]);
      if (!inserted && it->second != t[j]) return false;
    }
  }
  return true;
}

Result<bool> verify_at(const ProofNode& n, const std::string& path) {
  auto schema_it = schemas().find(n.rule);
  if (schema_it == schemas().end())
    return bad_rule(path, n, "unknown rule \"" + n.rule + "\"");
  const Schema& schema = schema_it->second;
  if (n.premises.size() != schema.premises)
    return bad_rule(path, n, "wrong premise count for " + n.rule);

  for (std::size_t k = 0; k < n.premises.size(); ++k) {
    auto sub = verify_at(n.premises[k],
                         path.empty() ? std::to_string(k)
                                      : path + "." + std::to_string(k));
    if (!sub) return sub.error();
  }

  std::map<std::string, std::string> binding;
  IdSet part;
  if (!bind_args(n, schema, binding, part))
    return bad_rule(path, n, "facts do not fit the schema of " + n.rule);

  const System* prem =
      n.premises.empty() ? nullptr : &n.premises[0].conclusion.system();
  for (const auto& fact : n.facts) {
    if (!fact_holds(*prem, fact)) return bad_fact(path, n, fact);
  }

  auto arg = [&](const char* v) { return ComponentId{binding.at(v)}; };
  auto expect = [&](Result<System> r) -> Result<bool> {
    if (!r)
      return bad_rule(path, n, "premises do not justify " + n.rule + ": " +
                                   r.error().message);
    if (n.conclusion.system() != r.value())
      return bad_rule(path, n,
                      "conclusion is not the system the rule derives");
    return true;
  };

  if (n.rule == "axiom") {
    if (n.conclusion.system() != axiom())
      return bad_rule(path, n, "axiom concludes a non-empty system");
    return true;
  }
  if (n.rule == "create+1") return expect(create_general(*prem, arg("c")));
  if (n.rule == "create+2") return expect(create_interactive(*prem, arg("c")));
  if (n.rule == "delete+1" || n.rule == "delete+2") {
    bool inter = prem->interactive.contains(arg("c"));
    if (inter != (n.rule == "delete+2"))
      return bad_rule(path, n, "delete rule variant does not match the "
                               "component class");
    return expect(delete_component(*prem, arg("c")));
  }
  if (n.rule == "connect+") return expect(connect(*prem, arg("a"), arg("b")));
  if (n.rule == "disconnect+")
    return expect(disconnect(*prem, arg("a"), arg("b")));
  if (n.rule == "disconnect-") {
    // Only valid as the inverse reading of a disconnect+ on the same edge.
    const ProofNode& p = n.premises[0];
    std::string edge_fact = join({"edge", binding.at("a"), binding.at("b")});
    if (p.rule != "disconnect+" || p.facts != std::vector{edge_fact})
      return bad_rule(path, n,
                      "disconnect- premise is not a disconnect+ of the "
                      "same connection");
    System restored = *prem;
    restored.connections.insert({arg("a"), arg("b")});
    if (n.conclusion.system() != restored)
      return bad_rule(path, n,
                      "conclusion is not the system the rule derives");
    return true;
  }
  if (n.rule == "allowed+") return expect(allow(*prem, arg("a"), arg("b")));
  if (n.rule == "revoke+") return expect(revoke(*prem, arg("a"), arg("b")));
  if (n.rule == "naming1")
    return expect(merge(n.premises[0].conclusion.system(),
                        n.premises[1].conclusion.system()));
  if (n.rule == "naming2") {
    auto r = split(*prem, part);
    if (!r)
      return bad_rule(path, n, "partition does not split the system: " +
                                   r.error().message);
    if (n.conclusion.system() != r.value().first)
      return bad_rule(path, n,
                      "conclusion is not the restriction to the partition");
    return true;
  }
  if (n.rule == "designate") return expect(designate(*prem, arg("a")));
  if (n.rule == "simplify") {
    if (n.conclusion.system() != simplify(*prem))
      return bad_rule(path, n,
                      "conclusion is not the simplified premise system");
    return true;
  }
  return bad_rule(path, n, "unhandled rule");
}

}  // namespace

Result<bool> verify(const ProofNode& tree) { return verify_at(tree, ""); }

namespace {

// Display width ignoring UTF-8 continuation bytes.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++w;
  return w;
}

struct Line {
  std::string text;
  std::string rule;  // empty for ST leaves
};

void render_lines(const ProofNode& n, int depth, std::vector<Line>& out) {
  std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& p : n.premises) render_lines(p, depth + 1, out);
  for (const auto& f : n.facts)
    out.push_back({indent + "  " + f, "ST"});
  out.push_back({indent + to_string(n.conclusion), n.rule});
}

}  // namespace

std::string render_text(const ProofNode& tree) {
  std::vector<Line> lines;
  render_lines(tree, 0, lines);
  std::size_t width = 0;
  for (const auto& l : lines) width = std::max(width, display_width(l.text));
  std::string out;
  for (const auto& l : lines) {
    out += l.text;
    out.append(width - display_width(l.text) + 2, ' ');
    out += "[" + l.rule + "]\n";
  }
  return out;
}

namespace {

json system_to_json(const System& s) {
  json assumptions = json::object();
  for (const auto& [i, set] : s.allowed) {
    json arr = json::array();
    for (const auto& c : set) arr.push_back(c.name);
    assumptions[i.name] = arr;
  }
  json components = json::array(), interactive = json::array(),
       enhancers = json::array(), connections = json::array();
  for (const auto& c : s.components) components.push_back(c.name);
  for (const auto& i : s.interactive) interactive.push_back(i.name);
  for (const auto& u : s.enhancers) enhancers.push_back(u.name);
  for (const auto& n : s.connections)
    connections.push_back(json::array({n.from.name, n.to.name}));
  return json{{"assumptions", assumptions},
              {"components", components},
              {"connections", connections},
              {"interactive", interactive},
              {"enhancers", enhancers}};
}

json node_to_json(const ProofNode& n) {
  json premises = json::array();
  for (const auto& p : n.premises) premises.push_back(node_to_json(p));
  return json{{"rule", n.rule},
              {"premises", premises},
              {"facts", n.facts},
              {"conclusion", system_to_json(n.conclusion.system())}};
}

System system_from_json(const json& j) {
  System s;
  for (const auto& c : j.at("components")) s.components.insert(ComponentId{c});
  for (const auto& n : j.at("connections"))
    s.connections.insert({ComponentId{n.at(0)}, ComponentId{n.at(1)}});
  for (const auto& i : j.at("interactive")) s.interactive.insert(ComponentId{i});
  for (const auto& u : j.at("enhancers")) s.enhancers.insert(ComponentId{u});
  for (const auto& [i, arr] : j.at("assumptions").items()) {
    IdSet set;
    for (const auto& c : arr) set.insert(ComponentId{c});
    s.allowed.emplace(ComponentId{i}, std::move(set));
  }
  return s;
}

ProofNode node_from_json(const json& j) {
  ProofNode n{j.at("rule").get<std::string>(), {}, {},
              detail::make_judgment(system_from_json(j.at("conclusion")))};
  for (const auto& p : j.at("premises")) n.premises.push_back(node_from_json(p));
  for (const auto& f : j.at("facts")) n.facts.push_back(f.get<std::string>());
  return n;
}

}  // namespace

std::string render_json(const ProofNode& tree) {
  return node_to_json(tree).dump(2) + "\n";
}

Result<ProofNode> parse_json(const std::string& text) {
  try {
    return node_from_json(json::parse(text));
  } catch (const json::exception& e) {
    return Diagnostic{.code = "syntax-error",
                      .message = std::string("malformed proof JSON: ") +
                                 e.what()};
  }
}

}  // namespace ubc
