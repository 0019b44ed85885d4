#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace sleepcomb {

/// Tag carried by indexed ground-set elements.
enum class Tag : std::uint8_t { Zero = 0, One = 1, Star = 2 };

/// A ground-set element label.
///
/// Tagged(i, tag) elements carry the (index, tag) structure used by the
/// hard-instance and extensible constructions; FalseElem / TrueElem are the
/// two distinguished terminal elements; Anonymous labels everything else
/// (e.g. the unlabeled edges of a complete bipartite instance).
///
/// Labels are totally ordered (Tagged by (index, tag), then FalseElem,
/// TrueElem, Anonymous by id); this order is the deterministic tie-break
/// used throughout the library.
class Label {
 public:
  enum class Kind : std::uint8_t { Tagged = 0, FalseElem = 1, TrueElem = 2, Anonymous = 3 };

  Label() : Label(Kind::Anonymous, 0, Tag::Zero) {}

  static Label tagged(int index, Tag tag);  // index >= 1
  static Label false_elem() { return Label(Kind::FalseElem, 0, Tag::Zero); }
  static Label true_elem() { return Label(Kind::TrueElem, 0, Tag::Zero); }
  static Label anonymous(int id);  // id >= 0

  Kind kind() const { return kind_; }
  bool is_tagged() const { return kind_ == Kind::Tagged; }
  bool is_false() const { return kind_ == Kind::FalseElem; }
  bool is_true() const { return kind_ == Kind::TrueElem; }
  bool is_anonymous() const { return kind_ == Kind::Anonymous; }

  /// Tagged labels only.
  int index() const { return payload_; }
  Tag tag() const { return tag_; }
  /// Anonymous labels only.
  int anon_id() const { return payload_; }

  /// Text form: "i:0", "i:1", "i:*", "F", "T", "a<k>".
  std::string str() const;
  static Label parse(const std::string& text);  // throws FormatError

  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  Label(Kind kind, int payload, Tag tag) : kind_(kind), payload_(payload), tag_(tag) {}

  Kind kind_;
  int payload_;
  Tag tag_;
};

std::ostream& operator<<(std::ostream&, const Label&);

}  // namespace sleepcomb
