#include "ubc/core.hpp"

#include <deque>
#include <sstream>

namespace ubc {

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto letter = [](char ch) {
    return (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z');
  };
  if (!letter(name[0])) return false;
  for (char ch : name) {
    if (!letter(ch) && !(ch >= '0' && ch <= '9') && ch != '_') return false;
  }
  return true;
}

Judgment detail::make_judgment(System s) { return Judgment(std::move(s)); }

bool well_formed(const System& s) {
  for (const auto& c : s.components) {
    if (!valid_identifier(c.name)) return false;
  }
  for (const auto& i : s.interactive) {
    if (!s.components.contains(i)) return false;
  }
  for (const auto& u : s.enhancers) {
    if (!s.components.contains(u)) return false;
  }
  // domain(A) = I exactly
  if (s.allowed.size() != s.interactive.size()) return false;
  for (const auto& [i, set] : s.allowed) {
    if (!s.interactive.contains(i)) return false;
    if (!set.contains(i)) return false;  // self-access
    for (const auto& c : set) {
      if (!s.components.contains(c)) return false;
    }
  }
  for (const auto& n : s.connections) {
    if (!s.components.contains(n.from) || !s.components.contains(n.to))
      return false;
  }
  return true;
}

namespace {

// BFS over N from `from`, skipping banned nodes; true if `to` is hit by a
// nonempty edge sequence.
bool bfs_reaches(const System& s, const ComponentId& from,
                 const ComponentId& to, const IdSet* banned) {
  if (banned && (banned->contains(from) || banned->contains(to))) return false;
  IdSet seen;
  std::deque<ComponentId> queue{from};
  while (!queue.empty()) {
    ComponentId cur = queue.front();
    queue.pop_front();
    for (const auto& n : s.connections) {
      if (n.from != cur) continue;
      if (banned && banned->contains(n.to)) continue;
      if (n.to == to) return true;
      if (seen.insert(n.to).second) queue.push_back(n.to);
    }
  }
  return false;
}

}  // namespace

bool reaches(const System& s, const ComponentId& from, const ComponentId& to) {
  return bfs_reaches(s, from, to, nullptr);
}

bool reaches_avoiding(const System& s, const ComponentId& from,
                      const ComponentId& to, const IdSet& banned) {
  return bfs_reaches(s, from, to, &banned);
}

IdSet downstream(const System& s, const ComponentId& c) {
  IdSet out{c};
  for (const auto& d : s.components) {
    if (reaches(s, c, d)) out.insert(d);
  }
  return out;
}

IdSet upstream(const System& s, const ComponentId& c) {
  IdSet out{c};
  for (const auto& d : s.components) {
    if (reaches(s, d, c)) out.insert(d);
  }
  return out;
}

bool pair_shielded(const System& s, const ComponentId& c,
                   const ComponentId& i) {
  auto it = s.allowed.find(i);
  if (it != s.allowed.end() && it->second.contains(c)) return true;
  if (s.enhancers.empty()) return false;
  return !reaches_avoiding(s, c, i, s.enhancers);
}

std::vector<Diagnostic> closure_invariant(const System& s) {
  std::vector<Diagnostic> out;
  for (const auto& i : s.interactive) {
    for (const auto& c : s.components) {
      if (!reaches(s, c, i)) continue;
      if (pair_shielded(s, c, i)) continue;
      out.push_back(Diagnostic{
          .code = "closure-violation",
          .rule = "connect+",
          .witness = {c.name, i.name},
          .message = "component " + c.name + " reaches interactive " + i.name +
                     " but is not in its allowed set"});
    }
  }
  return out;
}

std::string to_string(const ComponentId& c) { return c.name; }

std::string to_string(const IdSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& c : s) {
    if (!first) out += ", ";
    out += c.name;
    first = false;
  }
  return out + "}";
}

namespace {

std::string connections_string(const std::set<Connection>& ns) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : ns) {
    if (!first) out += ", ";
    out += "⟨" + n.from.name + ", " + n.to.name + "⟩";
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string to_string(const System& s) {
  std::string out = "⟨" + to_string(s.components) + ", " +
                    connections_string(s.connections) + ", ";
  if (!s.enhancers.empty()) out += to_string(s.enhancers) + ", ";
  return out + to_string(s.interactive) + "⟩";
}

std::string to_string(const Judgment& j) {
  const System& s = j.system();
  std::string a = "{";
  bool first = true;
  for (const auto& [i, set] : s.allowed) {
    if (!first) a += ", ";
    a += i.name + " ↦ " + to_string(set);
    first = false;
  }
  a += "}";
  return a + " ⊨ " + to_string(s);
}

std::string Diagnostic::to_string() const {
  std::ostringstream out;
  out << code;
  if (step >= 0) out << " at step " << step;
  if (line > 0) out << " (line " << line << ", column " << column << ")";
  out << ": " << message;
  if (!witness.empty()) {
    out << " [witness:";
    for (const auto& w : witness) out << ' ' << w;
    out << ']';
  }
  return out.str();
}

}  // namespace ubc
