#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "sleepcomb/instance.hpp"

namespace sleepcomb {

/// An instance with parameter n carrying a distinguished 3n+2-element
/// subset labeled by {(i,0),(i,1),(i,*)} for i=1..n plus {F,T}. Every
/// action must be heavy (at least n+1 elements) and the labeled subset must
/// be rich (every sign-pattern selection is an action).
struct HardInstance {
  InstancePtr instance;
  int n = 0;
  LabelSet special;  // the 3n+2 labeled elements
};

/// Builds the hard instance of the given family:
///  - shortest-path: a chain of n stages of 3 parallel edges plus a final
///    stage of 2 parallel edges, so every s-t path has exactly n+1 edges;
///  - spanning-tree: the same chain, undirected;
///  - k-subsets: k = n+1 over d = 3n+2 elements;
///  - truncated-perm: complete bipartite k = n+1, m = 3n+2 with the special
///    labeling on the (u_i, v_{i,tag}) edges;
///  - bipartite-matching: n node pairs with 3 parallel edges each plus one
///    pair with 2 parallel edges;
///  - min-cut: n+1 internally disjoint s-t paths in parallel, path i <= n
///    being 3 edges in series and the last path 2 edges in series.
HardInstance build_hard(Family family, int n);

/// The label set that a sign pattern selects: {(i, s_i)} plus the terminal.
/// signs has n entries in {0,1,2} (2 = star); terminal_true picks T over F.
Action pattern_action(const std::vector<int>& signs, bool terminal_true);

struct VerifyReport {
  bool ok = true;
  bool exhaustive = true;  // false when spot-checked under a cap
  std::size_t checked = 0;
  std::optional<Action> counterexample;
  std::string detail;
};

/// Heaviness: every action has at least n+1 elements. Falls back to seeded
/// random spot checks (reported as non-exhaustive) when the decision set
/// exceeds the cap.
VerifyReport verify_heaviness(const HardInstance& hi, std::size_t cap = kDefaultEnumCap,
                              std::size_t sample_budget = 2000, std::uint64_t seed = 0);

/// Richness: every pattern in {0,1,*}^n x {F,T} selects a decision-set
/// member under the special labeling. Exhaustive over all 2*3^n patterns.
VerifyReport verify_richness(const HardInstance& hi);

}  // namespace sleepcomb
