#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgk {

using Point = std::uint32_t;

// A bijection on {0, ..., n-1}, acting on the right: the image of point p
// under g is g(p), and (g * h)(p) = h(g(p)), i.e. p^(gh) = (p^g)^h.
class Permutation {
 public:
  Permutation() = default;

  // Throws InvalidPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const noexcept { return images_; }

  // Apply *this first, then `next`.
  Permutation operator*(const Permutation& next) const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  bool is_identity() const noexcept;
  std::size_t order() const;

  // Disjoint-cycle notation with 1-based points; "()" for the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Parses "(1 2)(3 4)" (1-based, spaces or commas inside cycles).
// Empty text is the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);

// Parses a comma/semicolon separated list of permutations in cycle notation,
// e.g. "(2 3),(3 4)". Commas inside parentheses belong to the cycle.
std::vector<Permutation> parse_permutation_list(std::string_view text, std::size_t degree);

}  // namespace sgk
