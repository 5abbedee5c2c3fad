#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace afrob {

/// A set of arguments encoded as a bitmask over a framework's canonical
/// argument order. Bit i stands for the i-th argument by name.
class ArgSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr ArgSet() = default;
  constexpr explicit ArgSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ArgSet(std::initializer_list<std::size_t> indices) {
    for (std::size_t i : indices) bits_ |= bit(i);
  }

  /// {0, ..., n-1}
  static constexpr ArgSet first(std::size_t n) {
    return ArgSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ArgSet singleton(std::size_t i) { return ArgSet(bit(i)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return (bits_ & bit(i)) != 0; }

  constexpr void insert(std::size_t i) { bits_ |= bit(i); }
  constexpr void erase(std::size_t i) { bits_ &= ~bit(i); }

  constexpr bool subset_of(ArgSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(ArgSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool intersects(ArgSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr ArgSet operator|(ArgSet a, ArgSet b) { return ArgSet(a.bits_ | b.bits_); }
  friend constexpr ArgSet operator&(ArgSet a, ArgSet b) { return ArgSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr ArgSet operator-(ArgSet a, ArgSet b) { return ArgSet(a.bits_ & ~b.bits_); }
  constexpr ArgSet& operator|=(ArgSet o) { bits_ |= o.bits_; return *this; }
  constexpr ArgSet& operator&=(ArgSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(ArgSet, ArgSet) = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  static constexpr std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending index lists of the two sets.
constexpr bool lexicographic_less(ArgSet a, ArgSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

/// Output order for extension sets: by size, then lexicographic.
constexpr bool canonical_less(ArgSet a, ArgSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lexicographic_less(a, b);
}

}  // namespace afrob
