#pragma once

#include <cstddef>
#include <cstdint>

#include "hyperinc/hypergraph.hpp"

namespace hyperinc {

/// n vertices "0".."n-1" and m distinct edges, each uniform among the
/// non-empty subsets of size <= max_size. Same seed, same output on every
/// platform. InvalidParameters when fewer than m such subsets exist.
Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_size, std::uint64_t seed);

}  // namespace hyperinc
