#ifndef SFASD_REDUCTION_HPP
#define SFASD_REDUCTION_HPP

#include <vector>

#include "sfasd/graph_core.hpp"

namespace sfasd {

/// Left-justified canonical graph G_R: x_i is adjacent to y'_1..y'_{d_i} with
/// d_1 <= ... <= d_k.  `original_x[i-1]` is the label of x_i in the source graph.
struct ReducedGraph {
    BipartiteGraph graph;
    DegreeVector degrees;        // sorted nondecreasing, all >= 1
    std::vector<int> original_x;
};

/// Reduced graph of a degree sequence (d need not be sorted; it is sorted here).
/// Zero entries are dropped.
ReducedGraph reduced_from_degrees(DegreeVector d);

/// X is reindexed by nondecreasing degree, ties by original index;
/// zero-degree X-vertices are dropped.
ReducedGraph reduce(const BipartiteGraph& g);

/// True iff g equals its own reduced graph (including labels).
bool is_reduced(const BipartiteGraph& g);

/// d_{k-i} >= n-i for 0 <= i <= k-1.  Throws SumMismatch if sum(d) != n(n+1)/2.
bool check_sufficient(const DegreeVector& d, int n);

/// Prefix inequalities sum_{i<t} d_{k-i} >= sum_{i<t} (n-i) for t = 1..k.
/// Throws SumMismatch if sum(d) != n(n+1)/2.
bool check_necessary(const DegreeVector& d, int n);

struct Classification {
    int n = 0;
    bool sufficient = false;
    bool necessary = false;
};

/// Sorts d, derives n from its sum (NotTriangular propagates) and runs both checks.
Classification classify(DegreeVector d);

}  // namespace sfasd

#endif  // SFASD_REDUCTION_HPP
