#include "rlab/graph.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "rlab/errors.hpp"
#include "rlab/rng.hpp"

namespace rlab {
namespace {

constexpr std::size_t kGraph6Shift = 63;

std::uint64_t pair_index(std::size_t i, std::size_t j) {
  // Position of (i, j), i < j, in graph6 upper-triangle column order.
  return static_cast<std::uint64_t>(j) * (j - 1) / 2 + i;
}

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' ||
                        s.front() == '\n')) {
    s.remove_prefix(1);
  }
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.size();
  return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (std::size_t v : adj_[u].members()) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : adj_(n, VertexSet(n)) {}

GraphBuilder& GraphBuilder::add_edge(std::size_t u, std::size_t v) {
  if (u >= adj_.size() || v >= adj_.size()) {
    throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                     ") out of range for n = " + std::to_string(adj_.size()));
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
  return *this;
}

Graph GraphBuilder::build() && {
  Graph g;
  g.adj_ = std::move(adj_);
  if (g.adj_.size() <= 64) {
    g.adj64_.reserve(g.adj_.size());
    for (const auto& row : g.adj_) g.adj64_.push_back(row.mask());
  }
  return g;
}

VertexSet InducedSubgraph::lift(const VertexSet& s, std::size_t host_n) const {
  VertexSet out(host_n);
  for (std::size_t v : s.members()) out.insert(to_original[v]);
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t offset = 0;
  {
    std::size_t lead = 0;
    while (lead < text.size() && (text[lead] == ' ' || text[lead] == '\t')) ++lead;
    offset = lead;
  }
  std::string_view body = strip(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (body.substr(0, kHeader.size()) == kHeader) {
    body.remove_prefix(kHeader.size());
    offset += kHeader.size();
  }
  if (body.empty()) throw ParseError("graph6: empty input", offset);
  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", offset + i);
    }
  }
  const auto chunk = [&](std::size_t i) {
    return static_cast<std::uint64_t>(static_cast<unsigned char>(body[i]) - kGraph6Shift);
  };

  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (body[0] != 126) {
    n = chunk(0);
    pos = 1;
  } else if (body.size() >= 2 && body[1] == 126) {
    if (body.size() < 8) throw ParseError("graph6: truncated 36-bit size", offset + body.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | chunk(i);
    pos = 8;
  } else {
    if (body.size() < 4) throw ParseError("graph6: truncated 18-bit size", offset + body.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | chunk(i);
    pos = 4;
  }
  if (n > (std::uint64_t{1} << 20)) {
    throw ParseError("graph6: n = " + std::to_string(n) + " too large", offset);
  }
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  if (body.size() - pos != need) {
    throw ParseError("graph6: expected " + std::to_string(need) + " edge bytes, found " +
                         std::to_string(body.size() - pos),
                     offset + std::min<std::size_t>(body.size(), pos + need));
  }

  GraphBuilder b(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      if ((chunk(byte) >> (5 - k % 6)) & 1U) b.add_edge(i, j);
    }
  }
  for (; k < need * 6; ++k) {
    const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
    if ((chunk(byte) >> (5 - k % 6)) & 1U) {
      throw ParseError("graph6: nonzero padding bit", offset + byte);
    }
  }
  return std::move(b).build();
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.n();
  std::string out;
  const auto put = [&out](std::uint64_t six) {
    out.push_back(static_cast<char>(six + kGraph6Shift));
  };
  if (n <= 62) {
    put(n);
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) put((n >> s) & 0x3F);
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) put((n >> s) & 0x3F);
  }
  std::uint64_t acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1U : 0U);
      if (++filled == 6) {
        put(acc);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) put(acc << (6 - filled));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  while (!text.empty() || line_no == 0) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (tokens.empty()) {
      if (text.empty()) break;
      continue;
    }
    const auto number = [&](std::string_view tok) {
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": bad token '" +
                             std::string(tok) + "'",
                         line_no);
      }
      return v;
    };
    if (!have_n) {
      if (tokens.size() != 2 || tokens[0] != "n") {
        throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected header 'n <count>'",
                         line_no);
      }
      n = number(tokens[1]);
      have_n = true;
    } else {
      if (tokens.size() != 2) {
        throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected 'u v'",
                         line_no);
      }
      const std::size_t u = number(tokens[0]);
      const std::size_t v = number(tokens[1]);
      if (u == v) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop at " +
                             std::to_string(u),
                         line_no);
      }
      if (u >= n || v >= n) {
        throw ParseError("edge list line " + std::to_string(line_no) +
                             ": vertex out of range for n = " + std::to_string(n),
                         line_no);
      }
      edges.emplace_back(u, v);
    }
    if (text.empty()) break;
  }
  if (!have_n) throw ParseError("edge list: missing 'n <count>' header", line_no);
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph_auto(std::string_view text) {
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    const std::string_view line = strip(rest.substr(0, nl));
    if (!line.empty()) {
      if (line.front() == '#' || (line.front() == 'n' && line.size() > 1 &&
                                  (line[1] == ' ' || line[1] == '\t'))) {
        return parse_edge_list(text);
      }
      return parse_graph6(line);
    }
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  throw ParseError("empty graph input", 0);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_original = s.members();
  const std::size_t k = out.to_original.size();
  GraphBuilder b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.has_edge(out.to_original[i], out.to_original[j])) b.add_edge(i, j);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.n());
  for (std::size_t u = 0; u < g.n(); ++u) {
    for (std::size_t v = u + 1; v < g.n(); ++v) {
      if (!g.has_edge(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

BitMatrix biadjacency(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) throw InputError("biadjacency: row and column sets overlap");
  const auto rows = x.members();
  const auto cols = y.members();
  BitMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const VertexSet& nb = g.neighbors(rows[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (nb.contains(cols[j])) m.set(i, j);
    }
  }
  return m;
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  const std::uint64_t key = seed_key(seed);
  GraphBuilder b(n);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (to_unit(counter_word(key, pair_index(i, j))) < p) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

Graph gen_clique(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(i, j);
  }
  return std::move(b).build();
}

Graph gen_path(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) return gen_path(n);
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph gen_edgeless(std::size_t n) { return std::move(GraphBuilder(n)).build(); }

Graph gen_bipartite_random(std::size_t a, std::size_t b, double p, std::uint64_t seed) {
  const std::uint64_t key = seed_key(seed);
  GraphBuilder gb(a + b);
  for (std::size_t j = a; j < a + b; ++j) {
    for (std::size_t i = 0; i < a; ++i) {
      if (to_unit(counter_word(key, pair_index(i, j))) < p) gb.add_edge(i, j);
    }
  }
  return std::move(gb).build();
}

void check_invariants(const Graph& g) {
  for (std::size_t u = 0; u < g.n(); ++u) {
    const VertexSet& row = g.neighbors(u);
    if (row.universe() != g.n()) throw ContractViolation("adjacency row has wrong universe");
    if (row.contains(u)) throw ContractViolation("loop at vertex " + std::to_string(u));
    for (std::size_t v : row.members()) {
      if (!g.has_edge(v, u)) {
        throw ContractViolation("asymmetric adjacency at (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
      }
    }
  }
}

}  // namespace rlab
