#pragma once

#include <functional>
#include <vector>

#include "sleepcomb/hard_instances.hpp"
#include "sleepcomb/instance.hpp"

namespace sleepcomb {

/// Gadget used to extend a min-cut instance. The series gadget adds, for
/// each bit position i, a fresh node w_i with edges s-w_i and w_i-t; the
/// parallel gadget adds 2p parallel s-t edges. The parallel form fails
/// extensibility property 2 (the unchosen parallel edges keep s and t
/// connected) and exists to demonstrate exactly that.
enum class MinCutGadget { SeriesPair, PaperParallel };

/// A base instance extended with 2p distinguished "bit" elements so that any
/// bit pattern can be appended to any base action, plus the projection map
/// back to the base decision set.
///
/// Bit elements are Tagged labels in a fresh index namespace: bit position
/// i with value b is Tagged(bit_index_offset + i, b), keeping ground-set
/// labels unique when the base instance already uses tagged indices.
struct ExtendedInstance {
  InstancePtr base;
  InstancePtr derived;
  int p = 0;
  int bit_index_offset = 0;
  LabelSet bit_labels;               // all 2p distinguished elements
  SleepingSet permanently_sleeping;  // derived ground \ (base ground + bits)
  std::function<Action(const Action&)> project;  // defined on derived actions
                                                 // within base+bit elements
                                                 // using at most p bits

  Label bit_label(int i, int b) const;  // i in 1..p, b in {0,1}
  /// The action fragment {(i, b_i) : i} for a bit vector.
  Action bit_action(const std::vector<int>& bits) const;
  /// The sleeping fragment {(i, 1-b_i) : i} for a bit vector.
  SleepingSet complement_bits(const std::vector<int>& bits) const;
};

/// Builds the derived instance and projection for any of the six families:
///  - shortest-path: a p-stage chain of parallel bit-edge pairs prepended
///    before the source; the chain head becomes the new source;
///  - spanning-tree: the same chain attached to vertex 0;
///  - k-subsets: k' = k+p over d+2p elements; the projection keeps the
///    label-lexicographically smallest k base elements;
///  - truncated-perm: p new left and 2p new right nodes, the (i,b) edges
///    between them distinguished, every other new edge permanently sleeping;
///  - bipartite-matching: p new node pairs with parallel bit-edge pairs;
///  - min-cut: per the gadget choice above.
ExtendedInstance extend(const InstancePtr& base, int p,
                        MinCutGadget gadget = MinCutGadget::SeriesPair);

/// Property 1: for every derived action within the projection's domain,
/// project(V') is a subset of V' ∩ U and a base decision-set member.
/// Falls back to seeded spot checks (flagged non-exhaustive) when the
/// restricted derived decision set exceeds the cap.
VerifyReport verify_property1(const ExtendedInstance& ext, std::size_t cap = kDefaultEnumCap,
                              std::size_t sample_budget = 2000, std::uint64_t seed = 0);

/// Property 2: for every bit pattern and every base action, the pattern's
/// bit elements joined with the action form a derived member. Exhaustive
/// over 2^p patterns for p <= 12, sampled beyond.
VerifyReport verify_property2(const ExtendedInstance& ext, std::size_t cap = kDefaultEnumCap,
                              std::size_t sample_budget = 2000, std::uint64_t seed = 0);

}  // namespace sleepcomb
