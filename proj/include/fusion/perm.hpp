#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace fusion {

// A permutation of {0, ..., degree-1}, stored as its image table.
class Perm {
public:
  explicit Perm(int degree);                 // identity
  explicit Perm(std::vector<int> images);    // must be a bijection

  // Parses disjoint-cycle notation with 0-based decimal points, e.g.
  // "(0 1 2)(3 4)".  Fixed points may be omitted; the identity is "()".
  static Perm from_cycles(const std::string &text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  // (a * b)(x) = a(b(x))
  friend Perm operator*(const Perm &a, const Perm &b);

  std::string to_cycle_string() const;

  friend bool operator==(const Perm &a, const Perm &b) = default;
  friend auto operator<=>(const Perm &a, const Perm &b) = default;

private:
  std::vector<int> images_;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace fusion
