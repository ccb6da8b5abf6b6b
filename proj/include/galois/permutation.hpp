#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace galois {

/// Largest supported degree. Permutations pack into one 64-bit key (4 bits
/// per point), which is what the element sets of PermGroup store.
inline constexpr int kMaxDegree = 16;

using PermKey = std::uint64_t;

/// A bijection of {0..n-1}. Points are 0-indexed in the API; every textual
/// form (cycle notation, images_one_based) is 1-indexed.
///
/// Composition is right-to-left: (p * q)(i) = p(q(i)). Under this convention
/// the coordinate action on tuples, (a^s)_i = a_{s(i)}, is a right action:
/// a^(p*q) = (a^p)^q.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(int degree);

  /// Build from 0-indexed images; throws InvalidArgument unless bijective.
  static Permutation from_images(std::span<const int> images);
  /// Build from 1-indexed images.
  static Permutation from_images_one_based(std::span<const int> images);
  static Permutation from_key(PermKey key, int degree);
  /// Disjoint cycles given by 1-indexed points.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return degree_; }
  int operator()(int point) const noexcept { return images_[point]; }
  int image(int point) const noexcept { return images_[point]; }

  std::vector<int> images_one_based() const;
  PermKey key() const noexcept;

  bool is_identity() const noexcept;
  Permutation inverse() const;
  /// +1 for even, -1 for odd.
  int sign() const noexcept;
  /// Points moved (0-indexed, ascending).
  std::vector<int> support() const;
  /// Same permutation with fixed points appended up to new_degree.
  Permutation extended(int new_degree) const;

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
    return a.degree_ == b.degree_ && a.images_ == b.images_;
  }
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  int degree_ = 0;
  std::array<std::uint8_t, kMaxDegree> images_{};
};

/// (p * q)(i) = p(q(i)); throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Composition directly on packed keys of equal degree.
PermKey compose_keys(PermKey p, PermKey q, int degree) noexcept;
PermKey identity_key(int degree) noexcept;
PermKey inverse_key(PermKey p, int degree) noexcept;

inline int sign(const Permutation& p) noexcept { return p.sign(); }

/// Parse disjoint-cycle notation such as "(1 2 3)(4 5)"; "()" and "id" are
/// the identity. Separators may be spaces or commas.
Permutation parse_perm(std::string_view text, int degree);

/// Disjoint cycles, least point first, cycles ordered by least point, fixed
/// points omitted; the identity prints as "id".
std::string format_perm(const Permutation& p);

}  // namespace galois
