#pragma once

#include <cstdint>
#include <string>

#include "oracles.hpp"
#include "rlab/bit_matrix.hpp"
#include "rlab/graph.hpp"
#include "rlab/rng.hpp"

namespace support {

inline oracle::Dense to_dense(const rlab::BitMatrix& m) {
  oracle::Dense d(m.n_rows(), std::vector<int>(m.n_cols(), 0));
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t j = 0; j < m.n_cols(); ++j) d[i][j] = m.get(i, j) ? 1 : 0;
  return d;
}

// Every labeled graph on n vertices, indexed by its upper-triangle bits.
inline rlab::Graph graph_from_code(std::size_t n, std::uint64_t code) {
  rlab::GraphBuilder b(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if ((code >> k) & 1U) b.add_edge(i, j);
  return std::move(b).build();
}

inline rlab::Graph random_graph(rlab::CounterRng& rng, std::size_t n_min, std::size_t n_max) {
  const std::size_t n = rng.between(n_min, n_max);
  const double p = rng.uniform();
  return rlab::gen_gnp(n, p, rng.next());
}

inline std::uint64_t random_mask(rlab::CounterRng& rng, std::size_t n) {
  return rng.next() & oracle::all(n);
}

}  // namespace support
