#include "sleepcomb/loss.hpp"

#include "sleepcomb/errors.hpp"

namespace sleepcomb {

double LossFunction::at(const Label& l) const {
  auto it = values_.find(l);
  if (it == values_.end()) throw MissingLoss("no loss value for element " + l.str());
  return it->second;
}

double action_loss(const Action& v, const LossFunction& l) {
  double total = 0.0;
  for (const Label& e : v) total += l.at(e);
  return total;
}

}  // namespace sleepcomb
