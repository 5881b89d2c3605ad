#ifndef UBC_TESTS_HELPERS_HPP
#define UBC_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "ubc/core.hpp"
#include "ubc/tactics.hpp"

namespace ubc::testing {

// ---- independent oracles (no kernel reachability code) ---------------------

// All edges as pairs, for the brute-force enumerations.
inline std::vector<std::pair<ComponentId, ComponentId>> edge_list(
    const System& s) {
  std::vector<std::pair<ComponentId, ComponentId>> out;
  for (const auto& n : s.connections) out.emplace_back(n.from, n.to);
  return out;
}

// Brute-force reachability: try every edge sequence of length 1..|C| by
// repeated single-edge extension of the frontier relation.
inline bool oracle_reaches(const System& s, const ComponentId& from,
                           const ComponentId& to) {
  auto edges = edge_list(s);
  std::set<ComponentId> frontier{from};
  for (std::size_t len = 0; len < s.components.size() + 1; ++len) {
    std::set<ComponentId> next;
    for (const auto& [a, b] : edges)
      if (frontier.contains(a)) next.insert(b);
    if (next.contains(to)) return true;
    std::size_t before = frontier.size();
    frontier.insert(next.begin(), next.end());
    if (frontier.size() == before) break;
  }
  return false;
}

// All simple paths from `from` to `to`, as node sequences including both
// endpoints. Exponential; fine for |C| <= 8.
inline void oracle_simple_paths_rec(
    const System& s, const ComponentId& cur, const ComponentId& to,
    std::vector<ComponentId>& path,
    std::vector<std::vector<ComponentId>>& out) {
  for (const auto& n : s.connections) {
    if (n.from != cur) continue;
    if (n.to == to) {
      auto full = path;
      full.push_back(to);
      out.push_back(std::move(full));
      continue;
    }
    bool seen = false;
    for (const auto& p : path)
      if (p == n.to) seen = true;
    if (seen) continue;
    path.push_back(n.to);
    oracle_simple_paths_rec(s, n.to, to, path, out);
    path.pop_back();
  }
}

inline std::vector<std::vector<ComponentId>> oracle_simple_paths(
    const System& s, const ComponentId& from, const ComponentId& to) {
  std::vector<std::vector<ComponentId>> out;
  std::vector<ComponentId> path{from};
  oracle_simple_paths_rec(s, from, to, path, out);
  return out;
}

// Single-dominator oracle: n reaches i and every simple path n -> i
// contains u (as an intermediate or endpoint node).
inline bool oracle_dominates(const System& s, const ComponentId& u,
                             const ComponentId& n, const ComponentId& i) {
  auto paths = oracle_simple_paths(s, n, i);
  if (paths.empty()) return false;
  for (const auto& path : paths) {
    bool contains = false;
    for (const auto& node : path)
      if (node == u) contains = true;
    if (!contains) return false;
  }
  return true;
}

// Joint-cut oracle: every simple path n -> i hits some member of U.
inline bool oracle_jointly_shielded(const System& s, const ComponentId& n,
                                    const ComponentId& i) {
  auto paths = oracle_simple_paths(s, n, i);
  for (const auto& path : paths) {
    bool hit = false;
    for (const auto& node : path)
      if (s.enhancers.contains(node)) hit = true;
    if (!hit) return false;
  }
  return true;
}

// ---- random generators ------------------------------------------------------

inline ComponentId nth_name(std::size_t k) {
  return ComponentId{"c" + std::to_string(k)};
}

// A random structurally well-formed system (the closure invariant is NOT
// required to hold).
inline System random_system(std::mt19937& rng, std::size_t max_components,
                            const std::string& prefix = "c") {
  System s;
  std::uniform_int_distribution<std::size_t> size_dist(0, max_components);
  std::size_t n = size_dist(rng);
  std::vector<ComponentId> ids;
  for (std::size_t k = 0; k < n; ++k)
    ids.push_back(ComponentId{prefix + std::to_string(k)});
  s.components.insert(ids.begin(), ids.end());
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution sparse(0.25);
  for (const auto& c : ids) {
    if (coin(rng)) {
      s.interactive.insert(c);
      s.allowed[c] = IdSet{c};
    }
  }
  for (const auto& a : ids)
    for (const auto& b : ids)
      if (a != b && sparse(rng)) s.connections.insert({a, b});
  for (auto& [i, set] : s.allowed)
    for (const auto& c : ids)
      if (sparse(rng)) set.insert(c);
  for (const auto& c : ids)
    if (sparse(rng)) s.enhancers.insert(c);
  return s;
}

// A random system whose (relaxed) closure invariant holds: start from a
// random structure and add the grants the invariant demands.
inline System random_closed_system(std::mt19937& rng,
                                   std::size_t max_components,
                                   const std::string& prefix = "c") {
  System s = random_system(rng, max_components, prefix);
  for (const auto& d : closure_invariant(s))
    s.allowed[ComponentId{d.witness[1]}].insert(ComponentId{d.witness[0]});
  return s;
}

}  // namespace ubc::testing

#endif
