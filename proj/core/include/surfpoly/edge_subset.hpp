#ifndef SURFPOLY_EDGE_SUBSET_HPP
#define SURFPOLY_EDGE_SUBSET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace surfpoly {

/// Subset of edge indices {0,..,m-1}, stored as a bitmask.
class EdgeSubset {
  public:
    constexpr EdgeSubset() = default;
    constexpr explicit EdgeSubset(std::uint64_t bits) : bits_(bits) {}

    static constexpr EdgeSubset all(int edge_count) {
        return EdgeSubset(edge_count >= 64 ? ~std::uint64_t{0}
                                           : (std::uint64_t{1} << edge_count) - 1);
    }
    static EdgeSubset of(std::initializer_list<int> edges) {
        std::uint64_t b = 0;
        for (int e : edges) b |= std::uint64_t{1} << e;
        return EdgeSubset(b);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    constexpr bool contains(int e) const { return (bits_ >> e) & 1; }

    constexpr EdgeSubset with(int e) const { return EdgeSubset(bits_ | (std::uint64_t{1} << e)); }
    constexpr EdgeSubset without(int e) const {
        return EdgeSubset(bits_ & ~(std::uint64_t{1} << e));
    }
    constexpr bool subset_of(EdgeSubset other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr EdgeSubset complement_in(int edge_count) const {
        return EdgeSubset(all(edge_count).bits() & ~bits_);
    }
    constexpr bool fits(int edge_count) const { return subset_of(all(edge_count)); }

    std::vector<int> elements() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend constexpr bool operator==(EdgeSubset, EdgeSubset) = default;
    friend constexpr auto operator<=>(EdgeSubset, EdgeSubset) = default;

  private:
    std::uint64_t bits_ = 0;
};

}  // namespace surfpoly

#endif
