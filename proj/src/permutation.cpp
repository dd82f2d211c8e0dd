#include "digrack/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "digrack/errors.hpp"

namespace digrack {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int m = degree();
  if (m == 0)
    throw ValidationError("InvalidPermutation", "degree must be positive");
  std::vector<bool> seen(m, false);
  for (int i = 0; i < m; ++i) {
    const int v = image_[i];
    if (v < 0 || v >= m)
      throw ValidationError("InvalidPermutation",
                            "image[" + std::to_string(i) + "] = " +
                                std::to_string(v) + " is out of range");
    if (seen[v])
      throw ValidationError("InvalidPermutation",
                            "value " + std::to_string(v) + " repeats");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> image(degree);
  std::iota(image.begin(), image.end(), 0);
  return Permutation(std::move(image));
}

int Permutation::operator()(int point) const {
  if (point < 0 || point >= degree())
    throw IndexOutOfRange("point " + std::to_string(point) +
                          " not in degree-" + std::to_string(degree()) +
                          " permutation");
  return image_[point];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < degree(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw ValidationError("DegreeMismatch",
                          "cannot compose permutations of degrees " +
                              std::to_string(p.degree()) + " and " +
                              std::to_string(q.degree()));
  std::vector<int> image(p.degree());
  for (int i = 0; i < p.degree(); ++i) image[i] = p(q(i));
  return Permutation(std::move(image));
}

int CycleType::degree() const {
  int total = 0;
  for (const auto& [len, mult] : counts) total += len * mult;
  return total;
}

CycleType cycle_type(const Permutation& p) {
  CycleType ct;
  std::vector<bool> visited(p.degree(), false);
  for (int start = 0; start < p.degree(); ++start) {
    if (visited[start]) continue;
    int len = 0;
    for (int cur = start; !visited[cur]; cur = p(cur)) {
      visited[cur] = true;
      ++len;
    }
    ++ct.counts[len];
  }
  return ct;
}

Permutation permutation_from_cycles(const std::string& text, int degree) {
  auto bad = [&](const std::string& why) {
    return ValidationError("InvalidCycleNotation",
                           why + " in '" + text + "'");
  };
  if (degree <= 0) throw bad("degree must be positive");
  std::vector<int> image(degree);
  std::iota(image.begin(), image.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw bad("expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw bad("expected a point");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = 10 * value + (text[i++] - '0');
      if (value >= degree)
        throw bad("point " + std::to_string(value) + " exceeds degree " +
                  std::to_string(degree));
      if (used[value])
        throw bad("point " + std::to_string(value) + " repeats");
      used[value] = true;
      cycle.push_back(value);
      skip_ws();
    }
    if (i == text.size()) throw bad("unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      image[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(image));
}

std::string cycles_string(const Permutation& p) {
  std::string out;
  std::vector<bool> visited(p.degree(), false);
  for (int start = 0; start < p.degree(); ++start) {
    if (visited[start] || p(start) == start) {
      visited[start] = true;
      continue;
    }
    out += '(';
    bool first = true;
    for (int cur = start; !visited[cur]; cur = p(cur)) {
      visited[cur] = true;
      if (!first) out += ' ';
      out += std::to_string(cur);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace digrack
