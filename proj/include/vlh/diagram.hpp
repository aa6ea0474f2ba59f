#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vlh {

/// One passage of a component through a crossing.
struct Passage {
  int crossing = 0;  // label, 1..n
  bool over = false;
  int sign = 1;      // +1 or -1

  friend bool operator==(const Passage&, const Passage&) = default;
};

/// A virtual link diagram as a signed Gauss code: one cyclic passage sequence
/// per component. An empty component is a crossingless circle. Every label
/// 1..n occurs exactly twice, once over and once under, with one sign.
class VirtualLinkDiagram {
 public:
  VirtualLinkDiagram() : components_(1) {}  // the unknot
  /// Validates; throws DuplicateRole, MissingPassage or SignMismatch.
  explicit VirtualLinkDiagram(std::vector<std::vector<Passage>> components, std::string name = {});

  const std::vector<std::vector<Passage>>& components() const { return components_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  int crossing_count() const { return static_cast<int>(signs_.size()); }
  int n_plus() const { return n_plus_; }
  int n_minus() const { return crossing_count() - n_plus_; }
  /// Sign of crossing `label` (1-based).
  int sign(int label) const { return signs_.at(static_cast<std::size_t>(label - 1)); }

  friend bool operator==(const VirtualLinkDiagram& a, const VirtualLinkDiagram& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<std::vector<Passage>> components_;
  std::string name_;
  std::vector<int> signs_;
  int n_plus_ = 0;
};

/// Text grammar: components separated by ';', passages by ','; a passage is
/// ('O'|'U') label ('+'|'-'|U+2212). Throws BadSyntax(offset) and the
/// validation errors of VirtualLinkDiagram.
VirtualLinkDiagram parse_gauss(std::string_view text, std::string name = {});
std::string to_gauss(const VirtualLinkDiagram& d);

/// Braid letter: generator i joins strand positions i-1 and i (0-based).
/// power +1: left strand passes over (positive crossing); -1: left strand
/// passes under (negative crossing); 0: virtual crossing.
struct BraidLetter {
  int generator = 1;
  int power = 1;
};

/// Gauss code of the closure of a (virtual) braid. Classical letters are
/// labelled 1..n in word order.
VirtualLinkDiagram from_braid(int strands, std::span<const BraidLetter> word, std::string name = {});
/// Word syntax: whitespace separated tokens "3", "-2", "v1".
VirtualLinkDiagram from_braid(int strands, std::string_view word, std::string name = {});

}  // namespace vlh
