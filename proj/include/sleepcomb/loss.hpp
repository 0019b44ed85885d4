#pragma once

#include <map>

#include "sleepcomb/action.hpp"
#include "sleepcomb/label.hpp"

namespace sleepcomb {

/// Declared element-loss range of a loss function.
enum class LossRange { SignedUnit, UnitInterval };  // [-1,1] / [0,1]

/// Per-element losses for one round. The map need only cover the elements
/// that are awake in the round; reading an absent element throws
/// MissingLoss, which signals that a sleeping element was charged.
class LossFunction {
 public:
  LossFunction() = default;
  explicit LossFunction(LossRange range) : range_(range) {}

  void set(const Label& l, double value) { values_[l] = value; }
  bool defined(const Label& l) const { return values_.count(l) != 0; }
  double at(const Label& l) const;  // throws MissingLoss

  LossRange range() const { return range_; }
  double lo() const { return range_ == LossRange::SignedUnit ? -1.0 : 0.0; }
  double hi() const { return 1.0; }

  const std::map<Label, double>& values() const { return values_; }

 private:
  LossRange range_ = LossRange::SignedUnit;
  std::map<Label, double> values_;
};

/// Sum of element losses over the members of an action.
double action_loss(const Action& v, const LossFunction& l);

}  // namespace sleepcomb
