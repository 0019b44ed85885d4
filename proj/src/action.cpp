#include "sleepcomb/action.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "sleepcomb/errors.hpp"

namespace sleepcomb {

namespace {
void normalize(std::vector<Label>& labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
}
}  // namespace

LabelSet::LabelSet(std::initializer_list<Label> labels) : labels_(labels) { normalize(labels_); }

LabelSet::LabelSet(std::vector<Label> labels) : labels_(std::move(labels)) { normalize(labels_); }

bool LabelSet::contains(const Label& l) const {
  return std::binary_search(labels_.begin(), labels_.end(), l);
}

bool LabelSet::intersects(const LabelSet& other) const {
  auto a = labels_.begin();
  auto b = other.labels_.begin();
  while (a != labels_.end() && b != other.labels_.end()) {
    if (*a < *b)
      ++a;
    else if (*b < *a)
      ++b;
    else
      return true;
  }
  return false;
}

bool LabelSet::subset_of(const LabelSet& other) const {
  return std::includes(other.labels_.begin(), other.labels_.end(), labels_.begin(), labels_.end());
}

std::size_t LabelSet::intersection_size(const LabelSet& other) const {
  auto a = labels_.begin();
  auto b = other.labels_.begin();
  std::size_t count = 0;
  while (a != labels_.end() && b != other.labels_.end()) {
    if (*a < *b)
      ++a;
    else if (*b < *a)
      ++b;
    else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

LabelSet LabelSet::unioned(const LabelSet& other) const {
  std::vector<Label> out;
  out.reserve(labels_.size() + other.labels_.size());
  std::set_union(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                 std::back_inserter(out));
  LabelSet result;
  result.labels_ = std::move(out);
  return result;
}

LabelSet LabelSet::intersect(const LabelSet& other) const {
  std::vector<Label> out;
  std::set_intersection(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                        std::back_inserter(out));
  LabelSet result;
  result.labels_ = std::move(out);
  return result;
}

LabelSet LabelSet::minus(const LabelSet& other) const {
  std::vector<Label> out;
  std::set_difference(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end(),
                      std::back_inserter(out));
  LabelSet result;
  result.labels_ = std::move(out);
  return result;
}

void LabelSet::insert(const Label& l) {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) labels_.insert(it, l);
}

std::string LabelSet::str() const {
  std::ostringstream os;
  bool first = true;
  for (const Label& l : labels_) {
    if (!first) os << ';';
    os << l.str();
    first = false;
  }
  return os.str();
}

LabelSet LabelSet::parse(const std::string& text) {
  LabelSet out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto sep = text.find(';', start);
    const std::string piece =
        sep == std::string::npos ? text.substr(start) : text.substr(start, sep - start);
    out.insert(Label::parse(piece));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LabelSet& s) { return os << s.str(); }

}  // namespace sleepcomb
