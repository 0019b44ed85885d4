#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sleepcomb/action.hpp"
#include "sleepcomb/loss.hpp"

namespace sleepcomb {

enum class Family {
  ShortestPath,
  SpanningTree,
  KSubsets,
  TruncatedPerm,
  BipartiteMatching,
  MinCut,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
std::vector<Family> all_families();

/// Default cap on decision-set enumerations.
inline constexpr std::size_t kDefaultEnumCap = 100000;

struct MinLossResult {
  Action action;
  double value = 0.0;
};

/// One instance of an online sleeping combinatorial optimization problem:
/// a ground set of labeled elements plus an implicit decision set with
/// membership, bounded enumeration and a min-loss awake-action solver.
class Instance {
 public:
  virtual ~Instance() = default;

  virtual Family family() const = 0;

  /// Ground-set elements in construction order (labels are unique).
  const std::vector<Label>& ground() const { return ground_; }
  const LabelSet& ground_set() const { return ground_set_; }
  std::size_t ground_size() const { return ground_.size(); }

  /// Decision-set membership. Precondition: v is a subset of the ground set.
  virtual bool contains(const Action& v) const = 0;

  /// All decision-set members, label-lexicographically ordered.
  /// Throws TooLarge beyond the cap.
  std::vector<Action> enumerate(std::size_t cap = kDefaultEnumCap) const;

  /// All awake actions (members disjoint from the sleeping set), ordered.
  /// Enumerates against the sleeping set directly, so instances whose full
  /// decision set is huge stay usable as long as awake sets are small.
  std::vector<Action> enumerate_awake(const SleepingSet& sleeping,
                                      std::size_t cap = kDefaultEnumCap) const;

  bool has_awake(const SleepingSet& sleeping) const;

  /// An awake action of minimum total loss, or nullopt when no action is
  /// awake. Family-specific solver; see the concrete instance classes.
  virtual std::optional<MinLossResult> min_loss_awake(const SleepingSet& sleeping,
                                                      const LossFunction& losses) const = 0;

 protected:
  void set_ground(std::vector<Label> ground);  // throws FormatError on duplicates

  /// Appends awake actions to `out` until `limit` is reached; returns true
  /// if the enumeration was truncated at the limit.
  virtual bool emit_awake(const SleepingSet& sleeping, std::size_t limit,
                          std::vector<Action>& out) const = 0;

 private:
  std::vector<Label> ground_;
  LabelSet ground_set_;
};

using InstancePtr = std::shared_ptr<const Instance>;

}  // namespace sleepcomb
