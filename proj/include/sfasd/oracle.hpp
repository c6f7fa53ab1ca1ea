#ifndef SFASD_ORACLE_HPP
#define SFASD_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sfasd/graph_core.hpp"

namespace sfasd {

enum class PartShape { StarForest, SingleStar };

struct OracleQuery {
    BipartiteGraph graph;
    std::vector<int> sizes;  // empty: 1..n for n = triangular_order(|E|)
    PartShape shape = PartShape::StarForest;
    bool require_ascending = true;
    std::size_t cap = 16;
};

/// Exhaustive search for an edge partition into parts of the given sizes and
/// shape (and, optionally, F_i embedding in F_{i+1}).  nullopt is a certified
/// "none exists".  Throws CapExceeded above the edge cap and SumMismatch when
/// the sizes do not add up to |E|.
std::optional<Decomposition> brute_force(const OracleQuery& query);

/// Nondecreasing d with entries >= 1, sum n(n+1)/2 and length <= k_max,
/// ordered by length and then lexicographically.
std::vector<DegreeVector> enumerate_sequences(int n, int k_max);

/// Simple bipartite graph on k = |d| centers and m leaves with X-degree
/// sequence exactly d (in the given order).  Deterministic per seed.
/// Throws Infeasible if some d_i > m or d_i < 0.
BipartiteGraph random_graph(const DegreeVector& d, int m, std::uint64_t seed);

}  // namespace sfasd

#endif  // SFASD_ORACLE_HPP
