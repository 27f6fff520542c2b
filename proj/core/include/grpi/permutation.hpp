#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grpi {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}.
///
/// Products are read left to right: `a * b` first applies `a`, then `b`, so
/// `(a * b)(i) == b(a(i))`. Conjugation follows the same convention:
/// `x.conjugate_by(g) == g^-1 * x * g`.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws GroupError otherwise.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Parses cycle notation such as "(0 1 2)(3 4)". "()" and "" give the
  /// identity. Points must be < degree and may appear at most once.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation conjugate_by(const Permutation& g) const;
  Permutation pow(long long e) const;

  /// Order of the cyclic group generated by this permutation.
  std::uint64_t order() const;

  /// Smallest moved point, or degree() when this is the identity.
  std::size_t first_moved_point() const noexcept;

  /// Cycle notation with 0-based points; the identity prints as "()".
  std::string to_cycles() const;

  /// Deterministic across runs and platforms.
  std::uint64_t hash() const noexcept;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend class PermutationBuilder;
};

/// Left-to-right product, `compose(a, b) == a * b`.
Permutation compose(const Permutation& a, const Permutation& b);

/// Commutator a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Builds permutations without re-validating; for internal hot loops whose
/// output is a bijection by construction.
class PermutationBuilder {
 public:
  static Permutation adopt(std::vector<Point> images) {
    return Permutation(std::move(images), Permutation::Unchecked{});
  }
};

}  // namespace grpi

template <>
struct std::hash<grpi::Permutation> {
  std::size_t operator()(const grpi::Permutation& p) const noexcept {
    return static_cast<std::size_t>(p.hash());
  }
};
