#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rlab {

/// Subset of [0, n) for a host graph on n vertices, stored as a bitset.
/// Bits at index >= n are never set.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}

  static VertexSet full(std::size_t n);
  static VertexSet from_members(std::size_t n, const std::vector<std::size_t>& members);
  // Bit i of `mask` is vertex i; requires n <= 64 and no bits past n.
  static VertexSet from_mask(std::size_t n, std::uint64_t mask);
  // "0x25" (bit i = vertex i) or "0,2,5"; "" / "0x0" are the empty set.
  static VertexSet parse(std::size_t n, std::string_view text);

  std::size_t universe() const noexcept { return n_; }
  bool contains(std::size_t v) const noexcept {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(std::size_t v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(std::size_t v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  std::vector<std::size_t> members() const;

  VertexSet complement() const;
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool is_subset_of(const VertexSet& o) const noexcept;
  bool intersects(const VertexSet& o) const noexcept;

  // Low 64 bits; exact when universe() <= 64.
  std::uint64_t mask() const noexcept { return words_.empty() ? 0 : words_[0]; }
  const std::vector<Word>& words() const noexcept { return words_; }

  // Minimal hex with "0x" prefix; the empty set is "0x0".
  std::string to_hex() const;
  std::string to_list() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Word> words_;
};

/// The canonical subset order used for every witness tie-break: smaller
/// cardinality first, then lexicographic on the sorted member lists (for
/// equal sizes, the set holding the least element of the symmetric
/// difference comes first).
bool subset_less(const VertexSet& a, const VertexSet& b) noexcept;

constexpr bool subset_less(std::uint64_t a, std::uint64_t b) noexcept {
  const int pa = std::popcount(a);
  const int pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const std::uint64_t diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

constexpr std::uint64_t full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace rlab
