#include "rlab/bit_matrix.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "rlab/errors.hpp"
#include "rlab/rng.hpp"

namespace rlab {
namespace {

constexpr std::size_t words_for(std::size_t bits) {
  return (bits + BitMatrix::kWordBits - 1) / BitMatrix::kWordBits;
}

BitMatrix::Word tail_mask(std::size_t n_cols) {
  const std::size_t rem = n_cols % BitMatrix::kWordBits;
  return rem == 0 ? ~BitMatrix::Word{0} : (BitMatrix::Word{1} << rem) - 1;
}

void check_indices(std::span<const std::size_t> idx, std::size_t bound,
                   const char* what) {
  std::vector<bool> seen(bound, false);
  for (std::size_t i : idx) {
    if (i >= bound) {
      throw InputError(std::string("submatrix: ") + what + " index " +
                       std::to_string(i) + " out of range " + std::to_string(bound));
    }
    if (seen[i]) {
      throw InputError(std::string("submatrix: duplicate ") + what + " index " +
                       std::to_string(i));
    }
    seen[i] = true;
  }
}

}  // namespace

BitMatrix::BitMatrix(std::size_t n_rows, std::size_t n_cols)
    : n_rows_(n_rows),
      n_cols_(n_cols),
      words_per_row_(words_for(n_cols)),
      data_(n_rows * words_for(n_cols), 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::ones(std::size_t n_rows, std::size_t n_cols) {
  BitMatrix m(n_rows, n_cols);
  if (m.words_per_row_ == 0) return m;
  const Word tail = tail_mask(n_cols);
  for (std::size_t i = 0; i < n_rows; ++i) {
    auto r = m.row(i);
    std::fill(r.begin(), r.end(), ~Word{0});
    r.back() &= tail;
  }
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string_view>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw InputError("BitMatrix::from_rows: ragged row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const char c = rows[i][j];
      if (c == '1') {
        m.set(i, j);
      } else if (c != '0') {
        throw InputError("BitMatrix::from_rows: bad character in row " +
                         std::to_string(i));
      }
    }
  }
  return m;
}

BitMatrix BitMatrix::parse(std::string_view text) {
  std::vector<std::string_view> rows;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) rows.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return from_rows(rows);
}

BitMatrix BitMatrix::random(std::size_t n_rows, std::size_t n_cols, CounterRng& rng,
                            double density) {
  BitMatrix m(n_rows, n_cols);
  if (density == 0.5) {
    const Word tail = tail_mask(n_cols);
    for (std::size_t i = 0; i < n_rows; ++i) {
      auto r = m.row(i);
      for (auto& w : r) w = rng.next();
      if (!r.empty()) r.back() &= tail;
    }
    return m;
  }
  for (std::size_t i = 0; i < n_rows; ++i) {
    for (std::size_t j = 0; j < n_cols; ++j) {
      if (rng.bernoulli(density)) m.set(i, j);
    }
  }
  return m;
}

bool BitMatrix::get(std::size_t row, std::size_t col) const {
  return (data_[row * words_per_row_ + col / kWordBits] >> (col % kWordBits)) & 1U;
}

void BitMatrix::set(std::size_t row, std::size_t col, bool value) {
  Word& w = data_[row * words_per_row_ + col / kWordBits];
  const Word bit = Word{1} << (col % kWordBits);
  w = value ? (w | bit) : (w & ~bit);
}

void BitMatrix::flip(std::size_t row, std::size_t col) {
  data_[row * words_per_row_ + col / kWordBits] ^= Word{1} << (col % kWordBits);
}

std::string BitMatrix::dump() const {
  std::string out;
  out.reserve(n_rows_ * (n_cols_ + 1));
  for (std::size_t i = 0; i < n_rows_; ++i) {
    for (std::size_t j = 0; j < n_cols_; ++j) out.push_back(get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::size_t rank(const BitMatrix& m) {
  if (m.n_rows() == 0 || m.n_cols() == 0) return 0;
  // Row-reduce a working copy, pivoting on the lowest-index nonzero column.
  BitMatrix work = m;
  const std::size_t wpr = work.words_per_row();
  std::size_t r = 0;
  for (std::size_t col = 0; col < work.n_cols() && r < work.n_rows(); ++col) {
    const std::size_t wi = col / BitMatrix::kWordBits;
    const BitMatrix::Word bit = BitMatrix::Word{1} << (col % BitMatrix::kWordBits);
    std::size_t pivot = r;
    while (pivot < work.n_rows() && !(work.row(pivot)[wi] & bit)) ++pivot;
    if (pivot == work.n_rows()) continue;
    if (pivot != r) {
      auto a = work.row(pivot);
      auto b = work.row(r);
      std::swap_ranges(a.begin() + wi, a.end(), b.begin() + wi);
    }
    const BitMatrix::Word* src = work.row(r).data();
    for (std::size_t i = r + 1; i < work.n_rows(); ++i) {
      BitMatrix::Word* dst = work.row(i).data();
      if (dst[wi] & bit) {
        for (std::size_t k = wi; k < wpr; ++k) dst[k] ^= src[k];
      }
    }
    ++r;
  }
  return r;
}

bool XorBasis::insert(std::span<const BitMatrix::Word> v) {
  std::copy(v.begin(), v.end(), scratch_.begin());
  std::size_t wi = 0;
  while (true) {
    while (wi < words_ && scratch_[wi] == 0) ++wi;
    if (wi == words_) return false;
    const std::size_t bit = wi * BitMatrix::kWordBits +
                            static_cast<std::size_t>(std::countr_zero(scratch_[wi]));
    const std::ptrdiff_t slot = slot_of_bit_[bit];
    if (slot < 0) {
      slot_of_bit_[bit] = static_cast<std::ptrdiff_t>(pivots_.size());
      pivots_.push_back(bit);
      rows_.insert(rows_.end(), scratch_.begin(), scratch_.end());
      return true;
    }
    const BitMatrix::Word* p = rows_.data() + static_cast<std::size_t>(slot) * words_;
    for (std::size_t k = wi; k < words_; ++k) scratch_[k] ^= p[k];
  }
}

std::vector<std::size_t> row_basis(const BitMatrix& m) {
  std::vector<std::size_t> kept;
  if (m.n_cols() == 0) return kept;
  XorBasis basis(m.words_per_row());
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    if (basis.insert(m.row(i))) kept.push_back(i);
  }
  return kept;
}

BitMatrix submatrix(const BitMatrix& m, std::span<const std::size_t> row_idx,
                    std::span<const std::size_t> col_idx) {
  check_indices(row_idx, m.n_rows(), "row");
  check_indices(col_idx, m.n_cols(), "column");
  BitMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      if (m.get(row_idx[i], col_idx[j])) out.set(i, j);
    }
  }
  return out;
}

BitMatrix block_compose(const BitMatrix& a, const BitMatrix& b, const BitMatrix& c,
                        const BitMatrix& d) {
  if (a.n_rows() != b.n_rows() || c.n_rows() != d.n_rows() ||
      a.n_cols() != c.n_cols() || b.n_cols() != d.n_cols()) {
    throw InputError("block_compose: blocks do not conform");
  }
  BitMatrix out(a.n_rows() + c.n_rows(), a.n_cols() + b.n_cols());
  const auto place = [&out](const BitMatrix& blk, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < blk.n_rows(); ++i) {
      for (std::size_t j = 0; j < blk.n_cols(); ++j) {
        if (blk.get(i, j)) out.set(r0 + i, c0 + j);
      }
    }
  };
  place(a, 0, 0);
  place(b, 0, a.n_cols());
  place(c, a.n_rows(), 0);
  place(d, a.n_rows(), a.n_cols());
  return out;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.n_cols() != b.n_rows()) {
    throw InputError("multiply: " + std::to_string(a.n_rows()) + "x" +
                     std::to_string(a.n_cols()) + " times " +
                     std::to_string(b.n_rows()) + "x" + std::to_string(b.n_cols()));
  }
  // Row i of AB is the XOR of the rows of B selected by row i of A.
  BitMatrix out(a.n_rows(), b.n_cols());
  for (std::size_t i = 0; i < a.n_rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.n_cols(); ++k) {
      if (!a.get(i, k)) continue;
      auto src = b.row(k);
      for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
    }
  }
  return out;
}

BitMatrix transpose(const BitMatrix& m) {
  BitMatrix out(m.n_cols(), m.n_rows());
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
      if (m.get(i, j)) out.set(j, i);
    }
  }
  return out;
}

FrobeniusVerdict check_frobenius(const BitMatrix& u, const BitMatrix& v,
                                 const BitMatrix& w) {
  if (u.n_cols() != v.n_rows() || v.n_cols() != w.n_rows()) {
    throw InputError("check_frobenius: U, V, W do not conform");
  }
  const BitMatrix uv = multiply(u, v);
  FrobeniusVerdict out;
  out.rank_uv = rank(uv);
  out.rank_vw = rank(multiply(v, w));
  out.rank_v = rank(v);
  out.rank_uvw = rank(multiply(uv, w));
  out.holds = out.rank_uv + out.rank_vw <= out.rank_v + out.rank_uvw;
  return out;
}

BlockRankVerdict check_block_rank(const BitMatrix& a, const BitMatrix& b,
                                  const BitMatrix& c, const BitMatrix& d) {
  const BitMatrix m = block_compose(a, b, c, d);
  BlockRankVerdict out;
  out.rank_m = rank(m);
  out.rank_a = rank(a);
  out.rank_b = rank(b);
  out.rank_d = rank(d);
  out.holds = out.rank_m + out.rank_b >= out.rank_a + out.rank_d;
  return out;
}

}  // namespace rlab
