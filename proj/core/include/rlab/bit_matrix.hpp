#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rlab {

class CounterRng;

/// Dense matrix over F2 with bit-packed rows.
///
/// Row i occupies words [i * words_per_row, (i + 1) * words_per_row); column j
/// is bit (j % 64) of word j / 64. Bits past n_cols in the last word of each
/// row are always zero.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t n_rows, std::size_t n_cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix ones(std::size_t n_rows, std::size_t n_cols);
  // Rows given as '0'/'1' strings of equal length (the debug dump format).
  static BitMatrix from_rows(const std::vector<std::string_view>& rows);
  // Inverse of dump(); an empty string is the 0x0 matrix.
  static BitMatrix parse(std::string_view text);
  static BitMatrix random(std::size_t n_rows, std::size_t n_cols, CounterRng& rng,
                          double density = 0.5);

  std::size_t n_rows() const noexcept { return n_rows_; }
  std::size_t n_cols() const noexcept { return n_cols_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool get(std::size_t row, std::size_t col) const;
  void set(std::size_t row, std::size_t col, bool value = true);
  void flip(std::size_t row, std::size_t col);

  std::span<Word> row(std::size_t i) noexcept {
    return {data_.data() + i * words_per_row_, words_per_row_};
  }
  std::span<const Word> row(std::size_t i) const noexcept {
    return {data_.data() + i * words_per_row_, words_per_row_};
  }

  // One row per line, '0'/'1' characters, each line newline-terminated.
  std::string dump() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> data_;
};

std::size_t rank(const BitMatrix& m);

// Greedy left-to-right basis: row i is kept iff it is independent of the
// rows kept before it. Lowest row index wins ties.
std::vector<std::size_t> row_basis(const BitMatrix& m);

BitMatrix submatrix(const BitMatrix& m, std::span<const std::size_t> row_idx,
                    std::span<const std::size_t> col_idx);

// [[a b], [c d]]
BitMatrix block_compose(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c,
                        const BitMatrix& d);

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);
BitMatrix transpose(const BitMatrix& m);

struct FrobeniusVerdict {
  std::size_t rank_uv = 0;
  std::size_t rank_vw = 0;
  std::size_t rank_v = 0;
  std::size_t rank_uvw = 0;
  bool holds = false;  // rank_uv + rank_vw <= rank_v + rank_uvw
};

// rank(UV) + rank(VW) <= rank(V) + rank(UVW).
FrobeniusVerdict check_frobenius(const BitMatrix& u, const BitMatrix& v,
                                 const BitMatrix& w);

struct BlockRankVerdict {
  std::size_t rank_m = 0;
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::size_t rank_d = 0;
  bool holds = false;  // rank_m + rank_b >= rank_a + rank_d
};

// For M = [[A B], [C D]]: rank(M) + rank(B) >= rank(A) + rank(D).
BlockRankVerdict check_block_rank(const BitMatrix& a, const BitMatrix& b,
                                  const BitMatrix& c, const BitMatrix& d);

/// Incremental row space over F2 for vectors of a fixed word length.
///
/// Keeps each stored vector reduced against the earlier ones and indexed by
/// its lowest set bit, so insert() is one pass over the existing pivots.
class XorBasis {
 public:
  explicit XorBasis(std::size_t words)
      : words_(words), slot_of_bit_(words * BitMatrix::kWordBits, -1), scratch_(words) {}

  // Returns true iff `v` was independent of the vectors inserted so far.
  // `v` must have exactly words() words.
  bool insert(std::span<const BitMatrix::Word> v);
  std::size_t size() const noexcept { return pivots_.size(); }
  std::size_t words() const noexcept { return words_; }

 private:
  std::size_t words_;
  std::vector<BitMatrix::Word> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> slot_of_bit_;
  std::vector<BitMatrix::Word> scratch_;
};

// Rank of rows that fit in single words; the fast path behind every
// mask-based cutrank. basis[b] holds the vector whose lowest set bit is b.
inline std::size_t rank_of_words(const std::uint64_t* rows, std::size_t count) noexcept {
  std::uint64_t basis[64] = {};
  std::size_t r = 0;
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t v = rows[i];
    while (v) {
      const int b = __builtin_ctzll(v);
      if (!basis[b]) {
        basis[b] = v;
        ++r;
        break;
      }
      v ^= basis[b];
    }
  }
  return r;
}

}  // namespace rlab
