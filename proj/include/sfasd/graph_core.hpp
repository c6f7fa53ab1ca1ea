#ifndef SFASD_GRAPH_CORE_HPP
#define SFASD_GRAPH_CORE_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace sfasd {

/// Edge x_i y_j of a bipartite graph.  Both indices are 1-based.
struct Edge {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Degrees of the X-vertices (or Y-vertices), one entry per vertex.
using DegreeVector = std::vector<int>;

enum class Side { X, Y };

/// Simple bipartite graph G(X, Y) with |X| = k star centers and |Y| = m leaves.
/// Edges are kept sorted, so two graphs with the same edge set compare equal.
class BipartiteGraph {
public:
    BipartiteGraph() = default;

    /// Throws MalformedGraph on out-of-range indices or duplicate edges.
    BipartiteGraph(int k, int m, std::vector<Edge> edges);

    int k() const noexcept { return k_; }
    int m() const noexcept { return m_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }

    bool has_edge(const Edge& e) const;

    /// Degree of x_i at position i-1 (natural order, unsorted).
    DegreeVector x_degrees() const;
    DegreeVector y_degrees() const;

    /// Sorted neighbour lists; entry i-1 belongs to x_i.
    std::vector<std::vector<int>> x_neighbors() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    int k_ = 0;
    int m_ = 0;
    std::vector<Edge> edges_;
};

/// Edge set whose components are stars centred in X.  The shape is not
/// enforced on construction (verification reports it); see is_star_forest().
class StarForest {
public:
    StarForest() = default;
    explicit StarForest(std::vector<Edge> edges) : edges_(std::move(edges)) {}

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }

    /// True iff every leaf appears at most once.
    bool is_star_forest() const;

    /// d_F(x_1), ..., d_F(x_k).
    DegreeVector center_degrees(int k) const;

    friend bool operator==(const StarForest&, const StarForest&) = default;

private:
    std::vector<Edge> edges_;
};

/// Ordered edge partition F_1 (+) ... (+) F_t.
struct Decomposition {
    std::vector<StarForest> forests;

    std::size_t size() const noexcept { return forests.size(); }
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

enum class Check { Partition, Sizes, StarShape, Ascending };

std::string to_string(Check check);

struct Finding {
    Check check;
    bool passed = true;
    std::vector<int> offending;  // 1-based forest indices
    std::string detail;
};

struct VerificationReport {
    bool overall = false;
    std::vector<Finding> findings;

    const Finding& finding(Check check) const;
    std::string summary() const;
};

/// Degrees of one side, sorted nondecreasing.
DegreeVector degree_sequence(const BipartiteGraph& g, Side side);

/// c <= c' in the dominance order: componentwise after sorting both.
/// Throws LengthMismatch when the lengths differ.
bool dominance_leq(const DegreeVector& c, const DegreeVector& c2);

/// F is isomorphic to a subgraph of F2 (both star forests over k centers).
bool star_forest_embeds(const StarForest& f, const StarForest& f2, int k);

/// n with n(n+1)/2 == edge_count.  Throws NotTriangular otherwise.
int triangular_order(long long edge_count);

inline constexpr long long triangular(long long n) { return n * (n + 1) / 2; }

/// Checks that D is a star-forest ASD of G.  Never throws on bad input;
/// every failure becomes a finding.
VerificationReport verify_asd(const BipartiteGraph& g, const Decomposition& d);

}  // namespace sfasd

#endif  // SFASD_GRAPH_CORE_HPP
