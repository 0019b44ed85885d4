#include "sleepcomb/instance.hpp"

#include <algorithm>

#include "sleepcomb/errors.hpp"

namespace sleepcomb {

std::string family_name(Family f) {
  switch (f) {
    case Family::ShortestPath:
      return "shortest-path";
    case Family::SpanningTree:
      return "spanning-tree";
    case Family::KSubsets:
      return "k-subsets";
    case Family::TruncatedPerm:
      return "truncated-perm";
    case Family::BipartiteMatching:
      return "bipartite-matching";
    case Family::MinCut:
      return "min-cut";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  return std::nullopt;
}

std::vector<Family> all_families() {
  return {Family::ShortestPath,  Family::SpanningTree,      Family::KSubsets,
          Family::TruncatedPerm, Family::BipartiteMatching, Family::MinCut};
}

void Instance::set_ground(std::vector<Label> ground) {
  LabelSet as_set(ground);
  if (as_set.size() != ground.size()) throw FormatError("duplicate labels in ground set");
  ground_ = std::move(ground);
  ground_set_ = std::move(as_set);
}

std::vector<Action> Instance::enumerate(std::size_t cap) const {
  return enumerate_awake(SleepingSet{}, cap);
}

std::vector<Action> Instance::enumerate_awake(const SleepingSet& sleeping, std::size_t cap) const {
  std::vector<Action> out;
  if (emit_awake(sleeping, cap + 1, out) || out.size() > cap)
    throw TooLarge(family_name(family()) + ": enumeration exceeds cap " + std::to_string(cap));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Instance::has_awake(const SleepingSet& sleeping) const {
  std::vector<Action> out;
  emit_awake(sleeping, 1, out);
  return !out.empty();
}

}  // namespace sleepcomb
