#ifndef BIGRADED_BIDEGREE_HPP
#define BIGRADED_BIDEGREE_HPP

#include <compare>
#include <iosfwd>
#include <string>

namespace bigraded {

/// Position (p,q) in the bigraded plane; ordering is lexicographic (p, then
/// q), which is the tie-break order used everywhere in this library.
struct BiDegree {
  int p = 0;
  int q = 0;

  int total() const { return p + q; }

  friend BiDegree operator+(BiDegree a, BiDegree b) { return {a.p + b.p, a.q + b.q}; }
  friend BiDegree operator-(BiDegree a, BiDegree b) { return {a.p - b.p, a.q - b.q}; }
  BiDegree swapped() const { return {q, p}; }

  auto operator<=>(const BiDegree&) const = default;
};

inline std::string to_string(BiDegree d) {
  return "(" + std::to_string(d.p) + "," + std::to_string(d.q) + ")";
}

std::ostream& operator<<(std::ostream& os, BiDegree d);

}  // namespace bigraded

#endif  // BIGRADED_BIDEGREE_HPP
