#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace digrack {

// A permutation of {0, ..., m-1} in one-line form.
class Permutation {
public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int point) const;
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
  }

private:
  std::vector<int> image_;
};

// (p * q)(i) = p(q(i)); q is applied first.
Permutation compose(const Permutation& p, const Permutation& q);

// Multiset of cycle lengths; fixed points count as 1-cycles.
struct CycleType {
  std::map<int, int> counts;  // cycle length -> multiplicity (>= 1)

  int degree() const;  // sum of length * multiplicity
  bool operator==(const CycleType&) const = default;
};

CycleType cycle_type(const Permutation& p);

// Cycle notation over 0-based points: "(0 1)(2 4 3)". Whitespace-insensitive,
// fixed points omitted, "" or "()" is the identity. Points must be < degree
// and must not repeat.
Permutation permutation_from_cycles(const std::string& text, int degree);
std::string cycles_string(const Permutation& p);

}  // namespace digrack
