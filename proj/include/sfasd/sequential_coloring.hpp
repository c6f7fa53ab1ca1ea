#ifndef SFASD_SEQUENTIAL_COLORING_HPP
#define SFASD_SEQUENTIAL_COLORING_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sfasd/ascending_matrix.hpp"
#include "sfasd/graph_core.hpp"
#include "sfasd/reduction.hpp"

namespace sfasd {

using EdgeId = std::size_t;

/// One of the a_ij parallel edges joining x_i and z_j (all 1-based).
struct EdgeInstance {
    int x = 0;
    int z = 0;
    int copy = 0;

    friend auto operator<=>(const EdgeInstance&, const EdgeInstance&) = default;
};

/// Bipartite multigraph H(X, Z) given by its bipartite adjacency matrix.
/// Edge instances are numbered row-major: (x, z, copy) lexicographically.
class AuxMultigraph {
public:
    AuxMultigraph() = default;
    explicit AuxMultigraph(IntMatrix multiplicity);

    int x_count() const noexcept { return mult_.rows(); }
    int z_count() const noexcept { return mult_.cols(); }
    int multiplicity(int x, int z) const { return mult_(x - 1, z - 1); }
    const IntMatrix& matrix() const noexcept { return mult_; }

    const std::vector<EdgeInstance>& edges() const noexcept { return edges_; }
    std::size_t size() const noexcept { return edges_.size(); }

    /// Id of instance (x, z, copy).
    EdgeId id_of(int x, int z, int copy) const;

    const std::vector<EdgeId>& at_x(int x) const { return at_x_[static_cast<std::size_t>(x - 1)]; }
    const std::vector<EdgeId>& at_z(int z) const { return at_z_[static_cast<std::size_t>(z - 1)]; }

    DegreeVector x_degrees() const { return mult_.row_sums(); }
    std::vector<int> z_degrees() const { return mult_.col_sums(); }

private:
    IntMatrix mult_;
    std::vector<EdgeInstance> edges_;
    std::vector<EdgeId> first_of_cell_;
    std::vector<std::vector<EdgeId>> at_x_;
    std::vector<std::vector<EdgeId>> at_z_;
};

/// Subset of the edge instances of a multigraph.
using EdgeMask = std::vector<bool>;

/// color[e] >= 1 for colored instances; 0 means uncolored.
struct EdgeColoring {
    std::vector<int> color;

    int max_color() const;
    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

/// No two colored instances sharing an endpoint have the same color, and all
/// instances are colored.
bool is_proper(const AuxMultigraph& h, const EdgeColoring& c);

/// Proper, and the colors at x_i are exactly {1, ..., d_i}.
bool is_sequential(const AuxMultigraph& h, const EdgeColoring& c, const DegreeVector& d);

AuxMultigraph multigraph_from_matrix(const AscendingMatrix& a);

/// Matchings of the reduced-graph construction.
///
/// full[i-1] is M'_i: for each row r, the instance x_r z_s with
/// r + s = n + i when r >= i, else r + s = n - k + i.  pruned[i-1] is M_i, the
/// edges of M'_i at rows with alpha_r >= i.  Rows whose cell is empty are left
/// out of M'_i (and reported via missing_rows); an empty cell needed by M_i
/// raises MatchingUnavailable.
struct MatchingPlan {
    std::vector<std::vector<EdgeId>> full;
    std::vector<std::vector<EdgeId>> pruned;
    std::vector<std::vector<int>> missing_rows;
    DegreeVector alpha;
    DegreeVector t;
    EdgeMask residual;        // H' = H minus the pruned matchings
    IntMatrix residual_matrix;
};

MatchingPlan paper_matchings(const AuxMultigraph& h, const DegreeVector& d, int n, int k);

/// Degree of every X- and Z-vertex within the masked edges.
DegreeVector masked_x_degrees(const AuxMultigraph& h, const EdgeMask& mask);
std::vector<int> masked_z_degrees(const AuxMultigraph& h, const EdgeMask& mask);

/// Matching inside `mask` that saturates every X-vertex of maximum masked
/// degree and no other X-vertex.  Throws HallViolation if none exists.
std::vector<EdgeId> peel_matching(const AuxMultigraph& h, const EdgeMask& mask);

/// Proper coloring of the masked edges with colors 1..max_degree (alternating
/// path recoloring).  Unmasked edges keep color 0.  Throws Error if some
/// vertex has masked degree above max_degree.
EdgeColoring konig_color(const AuxMultigraph& h, const EdgeMask& mask, int max_degree);
EdgeColoring konig_color(const AuxMultigraph& h, int max_degree);

enum class SolverMode { Heuristic, Exact, Hybrid };
enum class SolverPath { Heuristic, Fallback, Exact, Oracle };

std::string to_string(SolverMode mode);
std::string to_string(SolverPath path);
SolverMode parse_solver_mode(const std::string& s);

enum class ColoringStatus { Colored, Unsatisfiable, HeuristicFailed };

struct ColoringOutcome {
    ColoringStatus status = ColoringStatus::Unsatisfiable;
    std::optional<EdgeColoring> coloring;
    SolverPath path = SolverPath::Exact;
    std::size_t kempe_swaps = 0;
    std::string heuristic_note;  // why the heuristic phase gave up, if it did
};

/// Matching/peeling/Konig construction with per-edge colors for the removed
/// matchings and Kempe-chain repair.  Returns nullopt when it does not reach a
/// sequential coloring.  `swaps` receives the number of chain swaps performed.
std::optional<EdgeColoring> heuristic_sequential_color(const AuxMultigraph& h, const DegreeVector& d,
                                                       std::size_t* swaps = nullptr,
                                                       std::string* note = nullptr);

/// Exhaustive backtracking; nullopt iff no sequential coloring exists.
std::optional<EdgeColoring> exact_sequential_color(const AuxMultigraph& h, const DegreeVector& d);

/// Every returned coloring is checked with is_sequential before it leaves.
ColoringOutcome sequential_color(const AuxMultigraph& h, const DegreeVector& d,
                                 SolverMode mode = SolverMode::Hybrid);

/// Edge x_i z_j of color h becomes x_i y_h in F_j.
Decomposition forests_from_coloring(const AuxMultigraph& h, const EdgeColoring& c);

struct ColoredMultigraph {
    IntMatrix matrix;
    AuxMultigraph multigraph;
    EdgeColoring coloring;
};

/// a_ij = degree of x_i in F_j; the parallel edges of cell (i, j) receive the
/// leaf indices of x_i in F_j in increasing order.  Throws NotReduced if g is
/// not a reduced graph.
ColoredMultigraph coloring_from_forests(const BipartiteGraph& g, const Decomposition& d);

}  // namespace sfasd

#endif  // SFASD_SEQUENTIAL_COLORING_HPP
