#include "sleepcomb/label.hpp"

#include <cctype>
#include <ostream>

#include "sleepcomb/errors.hpp"

namespace sleepcomb {

Label Label::tagged(int index, Tag tag) {
  if (index < 1) throw FormatError("tagged label index must be >= 1");
  return Label(Kind::Tagged, index, tag);
}

Label Label::anonymous(int id) {
  if (id < 0) throw FormatError("anonymous label id must be >= 0");
  return Label(Kind::Anonymous, id, Tag::Zero);
}

std::string Label::str() const {
  switch (kind_) {
    case Kind::FalseElem:
      return "F";
    case Kind::TrueElem:
      return "T";
    case Kind::Anonymous:
      return "a" + std::to_string(payload_);
    case Kind::Tagged: {
      const char* suffix = tag_ == Tag::Zero ? "0" : tag_ == Tag::One ? "1" : "*";
      return std::to_string(payload_) + ":" + suffix;
    }
  }
  return "?";
}

Label Label::parse(const std::string& text) {
  if (text == "F") return false_elem();
  if (text == "T") return true_elem();
  if (text.empty()) throw FormatError("empty label");
  if (text[0] == 'a') {
    const std::string digits = text.substr(1);
    if (digits.empty()) throw FormatError("bad anonymous label: " + text);
    for (char c : digits)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw FormatError("bad anonymous label: " + text);
    return anonymous(std::stoi(digits));
  }
  const auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 2 != text.size())
    throw FormatError("bad label: " + text);
  const std::string digits = text.substr(0, colon);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw FormatError("bad label: " + text);
  const int index = std::stoi(digits);
  const char t = text[colon + 1];
  Tag tag;
  if (t == '0')
    tag = Tag::Zero;
  else if (t == '1')
    tag = Tag::One;
  else if (t == '*')
    tag = Tag::Star;
  else
    throw FormatError("bad label tag: " + text);
  return tagged(index, tag);
}

std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.str(); }

}  // namespace sleepcomb
