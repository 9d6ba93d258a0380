#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace coxeter {

/// Index of a simple generator, in input order.
using Generator = int;

/// Rank supported by the bitmask subset representation.
inline constexpr std::size_t kMaxRank = 32;

/// A subset of the generating set S, as a bitmask over generator indices.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t mask) : mask_(mask) {}

  static constexpr GeneratorSet all(std::size_t rank) {
    return GeneratorSet(rank >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << rank) - 1);
  }
  static constexpr GeneratorSet single(Generator s) { return GeneratorSet(std::uint32_t{1} << s); }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool contains(Generator s) const { return (mask_ >> s) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool is_subset_of(GeneratorSet other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr GeneratorSet& insert(Generator s) {
    mask_ |= std::uint32_t{1} << s;
    return *this;
  }

  std::vector<Generator> members() const {
    std::vector<Generator> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  friend constexpr bool operator==(GeneratorSet a, GeneratorSet b) = default;
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.mask_ & b.mask_);
  }
  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) {
    return GeneratorSet(a.mask_ | b.mask_);
  }

 private:
  std::uint32_t mask_ = 0;
};

/// Every subset of a rank-n generating set, ordered by size then by mask.
std::vector<GeneratorSet> subsets_by_size(std::size_t rank);

}  // namespace coxeter
