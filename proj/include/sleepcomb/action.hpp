#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "sleepcomb/label.hpp"

namespace sleepcomb {

/// A sorted, duplicate-free set of labels.
///
/// Used for actions, sleeping sets and ground-set slices. Comparison is
/// lexicographic on the sorted label sequence, which is the
/// label-lexicographic order used for all deterministic tie-breaking.
class LabelSet {
 public:
  LabelSet() = default;
  LabelSet(std::initializer_list<Label> labels);
  explicit LabelSet(std::vector<Label> labels);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  bool contains(const Label& l) const;
  bool intersects(const LabelSet& other) const;
  bool subset_of(const LabelSet& other) const;
  std::size_t intersection_size(const LabelSet& other) const;

  LabelSet unioned(const LabelSet& other) const;
  LabelSet intersect(const LabelSet& other) const;
  LabelSet minus(const LabelSet& other) const;

  void insert(const Label& l);

  /// Semicolon-joined text form in sorted label order.
  std::string str() const;
  static LabelSet parse(const std::string& text);  // throws FormatError

  friend auto operator<=>(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<Label> labels_;
};

using Action = LabelSet;
using SleepingSet = LabelSet;

std::ostream& operator<<(std::ostream&, const LabelSet&);

}  // namespace sleepcomb
