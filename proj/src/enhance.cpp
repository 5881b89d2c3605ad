#include "ubc/enhance.hpp"

namespace ubc {

Result<System> designate(const System& s, const ComponentId& u) {
  if (!s.components.contains(u)) {
    return Diagnostic{.code = "unknown-component",
                      .rule = "designate",
                      .witness = {u.name},
                      .message = "cannot designate unknown component " + u.name};
  }
  System out = s;
  out.enhancers.insert(u);
  return out;
}

bool dominates(const System& s, const ComponentId& u, const ComponentId& n,
               const ComponentId& i) {
  if (!reaches(s, n, i)) return false;
  return !reaches_avoiding(s, n, i, IdSet{u});
}

System simplify(const System& s) {
  System out = s;
  for (auto& [i, set] : out.allowed) {
    IdSet kept;
    for (const auto& n : set) {
      bool removable = false;
      if (n != i && !s.enhancers.contains(n) && reaches(s, n, i)) {
        for (const auto& u : s.enhancers) {
          if (u == n) continue;
          if (dominates(s, u, n, i)) {
            removable = true;
            break;
          }
        }
      }
      if (!removable) kept.insert(n);
    }
    set = std::move(kept);
  }
  return out;
}

}  // namespace ubc
