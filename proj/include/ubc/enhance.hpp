#ifndef UBC_ENHANCE_HPP
#define UBC_ENHANCE_HPP

#include "ubc/core.hpp"
#include "ubc/diagnostics.hpp"

namespace ubc {

/// Mark u as usability-enhancing: U := U ∪ {u}. A is untouched; shrinking
/// the assumption sets is simplify's job.
Result<System> designate(const System& s, const ComponentId& u);

/// True iff n reaches i and every path from n to i passes through u
/// (as an intermediate or endpoint node). Computed by deleting u and its
/// incident edges and re-checking reachability. Requires n ≠ u, n ≠ i.
bool dominates(const System& s, const ComponentId& u, const ComponentId& n,
               const ComponentId& i);

/// The healthiness simplification: drop from each A(i) every non-enhancer
/// n ≠ i that reaches i and is dominated w.r.t. i by some single u ∈ U.
/// Components with a U-free path to i always stay, as do pure grants that
/// do not reach i at all, i itself, and every member of U.
System simplify(const System& s);

}  // namespace ubc

#endif
