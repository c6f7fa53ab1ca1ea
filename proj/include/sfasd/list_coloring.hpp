#ifndef SFASD_LIST_COLORING_HPP
#define SFASD_LIST_COLORING_HPP

#include <vector>

#include "sfasd/ascending_matrix.hpp"
#include "sfasd/graph_core.hpp"
#include "sfasd/sequential_coloring.hpp"

namespace sfasd {

/// Orientation of the line graph of H induced by a sequential coloring: at a
/// shared X-vertex an edge points to edges of larger color, at a shared
/// Z-vertex to edges of smaller color.
class PreferenceSystem {
public:
    /// Throws NotSequential if `seq` is not sequential for the X-degrees of h.
    PreferenceSystem(const AuxMultigraph& h, EdgeColoring seq);

    const AuxMultigraph& graph() const noexcept { return h_; }
    int color(EdgeId e) const { return seq_.color[e]; }
    const EdgeColoring& coloring() const noexcept { return seq_; }

    /// True iff e -> f.
    bool points_to(EdgeId e, EdgeId f) const;
    std::vector<EdgeId> out_neighbors(EdgeId e) const;

private:
    AuxMultigraph h_;
    EdgeColoring seq_;
};

/// Kernel of the orientation restricted to `subset`, computed as the
/// X-proposing stable matching (X prefers larger colors, Z smaller).
/// Returned ids are sorted.
std::vector<EdgeId> stable_kernel(const std::vector<EdgeId>& subset, const PreferenceSystem& prefs);

/// K is a matching inside `subset` and every other edge of `subset` has an
/// out-neighbour in K.
bool is_kernel(const std::vector<EdgeId>& subset, const std::vector<EdgeId>& k,
               const PreferenceSystem& prefs);

/// lists[x-1] = L(x_x); every edge at x draws from it.
struct ColorLists {
    std::vector<std::vector<int>> lists;
};

/// Symbol per edge instance of h.
using ListAssignment = std::vector<int>;

/// Proper edge coloring with symbols from the lists, built one symbol at a
/// time (ascending) by assigning it to a kernel of the uncolored edges that
/// can take it.  Throws Error on malformed lists and Incomplete if an edge
/// is left uncolored.
ListAssignment list_edge_color(const AuxMultigraph& h, const EdgeColoring& seq, const ColorLists& lists);

/// Symbol in the edge's list, and no two edges at a vertex share a symbol.
bool is_proper_list_coloring(const AuxMultigraph& h, const ColorLists& lists, const ListAssignment& a);

struct Extension {
    Decomposition decomposition;  // over G, original labels
    IntMatrix c;                  // c_ij = deg of reduced x_i in F'_j
    AuxMultigraph multigraph;     // H(A, U)
    EdgeColoring precoloring;     // sequential, from the F'_j leaf labels
    ListAssignment symbols;       // Y-labels of G per instance
};

/// Moves a star-forest decomposition of reduce(g) onto g with identical
/// per-forest center-degree vectors.  `reduced` must be reduce(g).
Extension extend_decomposition(const BipartiteGraph& g, const ReducedGraph& reduced,
                               const Decomposition& reduced_decomposition);
Extension extend_decomposition(const BipartiteGraph& g, const Decomposition& reduced_decomposition);

}  // namespace sfasd

#endif  // SFASD_LIST_COLORING_HPP
