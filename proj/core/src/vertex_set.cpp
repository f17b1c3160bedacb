#include "rlab/vertex_set.hpp"

#include <algorithm>
#include <charconv>

#include "rlab/errors.hpp"

namespace rlab {
namespace {

VertexSet::Word tail(std::size_t n) {
  const std::size_t rem = n % VertexSet::kWordBits;
  return rem == 0 ? ~VertexSet::Word{0} : (VertexSet::Word{1} << rem) - 1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  if (!s.words_.empty()) s.words_.back() &= tail(n);
  return s;
}

VertexSet VertexSet::from_members(std::size_t n, const std::vector<std::size_t>& members) {
  VertexSet s(n);
  for (std::size_t v : members) {
    if (v >= n) {
      throw InputError("vertex " + std::to_string(v) + " out of range for n = " +
                       std::to_string(n));
    }
    s.insert(v);
  }
  return s;
}

VertexSet VertexSet::from_mask(std::size_t n, std::uint64_t mask) {
  if ((mask & ~full_mask(n)) != 0) {
    throw InputError("mask has bits beyond n = " + std::to_string(n));
  }
  VertexSet s(n);
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

VertexSet VertexSet::parse(std::size_t n, std::string_view text) {
  text = trim(text);
  VertexSet s(n);
  if (text.empty()) return s;
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::string_view hex = text.substr(2);
    if (hex.empty()) throw InputError("empty hex vertex set");
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
      const char c = *it;
      int val = 0;
      if (c >= '0' && c <= '9') {
        val = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        val = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        val = c - 'A' + 10;
      } else {
        throw InputError("bad hex digit '" + std::string(1, c) + "' in vertex set");
      }
      for (int k = 0; k < 4; ++k) {
        if (!((val >> k) & 1)) continue;
        const std::size_t v = bit + static_cast<std::size_t>(k);
        if (v >= n) {
          throw InputError("vertex set " + std::string(text) + " has bits beyond n = " +
                           std::to_string(n));
        }
        s.insert(v);
      }
    }
    return s;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view tok = trim(text.substr(0, comma));
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw InputError("bad vertex '" + std::string(tok) + "' in vertex list");
    }
    if (v >= n) {
      throw InputError("vertex " + std::to_string(v) + " out of range for n = " +
                       std::to_string(n));
    }
    s.insert(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet s(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
  if (!s.words_.empty()) s.words_.back() &= tail(n_);
  return s;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~o.words_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & o.words_[i]) return true;
  }
  return false;
}

std::string VertexSet::to_hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (std::size_t i = words_.size(); i-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const unsigned d = static_cast<unsigned>((words_[i] >> (nib * 4)) & 0xF);
      if (out.empty() && d == 0) continue;
      out.push_back(kDigits[d]);
    }
  }
  return "0x" + (out.empty() ? std::string("0") : out);
}

std::string VertexSet::to_list() const {
  std::string out;
  for (std::size_t v : members()) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(v);
  }
  return out;
}

bool subset_less(const VertexSet& a, const VertexSet& b) noexcept {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa < sb;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    const VertexSet::Word diff = wa[i] ^ wb[i];
    if (diff) return (wa[i] & diff & (~diff + 1)) != 0;
  }
  return false;
}

}  // namespace rlab
