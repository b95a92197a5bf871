#include "fusion/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fusion {

Perm::Perm(int degree) : images_(degree) {
  if (degree < 0)
    throw std::invalid_argument("permutation degree must be non-negative");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("permutation image table is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::from_cycles(const std::string &text, int degree) {
  if (degree < 0)
    throw std::invalid_argument("permutation degree must be non-negative");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto fail = [&](const std::string &msg) {
    std::ostringstream os;
    os << "cycle notation error at position " << i << ": " << msg;
    throw std::invalid_argument(os.str());
  };

  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  bool any_cycle = false;
  while (i < text.size()) {
    if (text[i] != '(')
      fail("expected '('");
    ++i;
    any_cycle = true;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail("expected a decimal point label");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000)
          fail("point label too large");
        ++i;
      }
      if (value >= degree)
        fail("point " + std::to_string(value) + " out of range for degree " +
             std::to_string(degree));
      if (used[value])
        fail("point " + std::to_string(value) + " appears twice");
      used[value] = true;
      cycle.push_back(value);
      skip_ws();
    }
    if (i >= text.size())
      fail("unterminated cycle");
    ++i; // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  if (!any_cycle)
    fail("empty permutation text; the identity is written \"()\"");
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i)
    inv[images_[i]] = i;
  return Perm(std::move(inv));
}

Perm operator*(const Perm &a, const Perm &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("composed permutations must share a degree");
  std::vector<int> images(a.degree());
  for (int i = 0; i < a.degree(); ++i)
    images[i] = a.images_[b.images_[i]];
  return Perm(std::move(images));
}

std::string Perm::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    any = true;
    os << '(';
    int x = start;
    bool first = true;
    do {
      if (!first)
        os << ' ';
      os << x;
      first = false;
      seen[x] = true;
      x = images_[x];
    } while (x != start);
    os << ')';
  }
  if (!any)
    return "()";
  return os.str();
}

} // namespace fusion
