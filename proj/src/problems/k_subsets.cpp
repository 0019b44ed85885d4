#include <algorithm>

#include "algo_util.hpp"
#include "sleepcomb/errors.hpp"
#include "sleepcomb/problems.hpp"

namespace sleepcomb {

KSubsetsInstance::KSubsetsInstance(int k, std::vector<Label> ground) : k_(k) {
  if (k < 1) throw FormatError("k must be >= 1");
  if (k > static_cast<int>(ground.size())) throw FormatError("k exceeds ground-set size");
  set_ground(std::move(ground));
}

bool KSubsetsInstance::contains(const Action& v) const {
  return static_cast<int>(v.size()) == k_;
}

bool KSubsetsInstance::emit_awake(const SleepingSet& sleeping, std::size_t limit,
                                  std::vector<Action>& out) const {
  std::vector<Label> awake;
  for (const Label& l : ground())
    if (!sleeping.contains(l)) awake.push_back(l);
  if (static_cast<int>(awake.size()) < k_) return false;
  bool truncated = false;
  detail::for_each_combination(static_cast<int>(awake.size()), k_,
                               [&](const std::vector<int>& idx) {
                                 if (out.size() >= limit) {
                                   truncated = true;
                                   return false;
                                 }
                                 std::vector<Label> labels;
                                 labels.reserve(k_);
                                 for (int pos : idx) labels.push_back(awake[pos]);
                                 out.push_back(Action(std::move(labels)));
                                 return true;
                               });
  return truncated;
}

std::optional<MinLossResult> KSubsetsInstance::min_loss_awake(const SleepingSet& sleeping,
                                                              const LossFunction& losses) const {
  std::vector<Label> awake;
  for (const Label& l : ground())
    if (!sleeping.contains(l)) awake.push_back(l);
  if (static_cast<int>(awake.size()) < k_) return std::nullopt;
  std::sort(awake.begin(), awake.end(), [&](const Label& a, const Label& b) {
    const double la = losses.at(a);
    const double lb = losses.at(b);
    if (la != lb) return la < lb;
    return a < b;
  });
  awake.resize(k_);
  Action act{std::move(awake)};
  double value = 0.0;
  for (const Label& l : act) value += losses.at(l);
  return MinLossResult{act, value};
}

}  // namespace sleepcomb
