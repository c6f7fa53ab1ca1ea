#ifndef SFASD_PIPELINE_HPP
#define SFASD_PIPELINE_HPP

#include <filesystem>
#include <optional>

#include "sfasd/ascending_matrix.hpp"
#include "sfasd/graph_core.hpp"
#include "sfasd/list_coloring.hpp"
#include "sfasd/reduction.hpp"
#include "sfasd/sequential_coloring.hpp"

namespace sfasd {

struct PipelineOptions {
    SolverMode solver = SolverMode::Hybrid;
    /// Graphs failing the degree condition go to the exhaustive oracle
    /// (when small enough) instead of raising ConditionFailed.
    bool best_effort = false;
    std::size_t oracle_cap = 16;
    /// Where theorem-stress instances are dumped; nothing is written if unset.
    std::optional<std::filesystem::path> stress_dir;
};

/// Artifacts of every stage, kept so the certificate can be audited.
struct PipelineTrace {
    ReducedGraph reduced;
    std::optional<AscendingMatrix> matrix;
    std::optional<AuxMultigraph> multigraph;
    std::optional<EdgeColoring> coloring;
    Decomposition reduced_decomposition;
    std::optional<Extension> extension;
    std::string heuristic_note;
};

struct PipelineResult {
    int n = 0;
    Decomposition decomposition;
    VerificationReport report;
    PipelineTrace trace;
    SolverPath solver_path = SolverPath::Heuristic;
};

/// Star-forest ASD of the reduced graph with X-degrees d (sorted here).
/// Throws SumMismatch, ConditionFailed, or TheoremStress.
PipelineResult decompose_reduced(const DegreeVector& d, int n, const PipelineOptions& options = {});

/// Star-forest ASD of g, reported under g's own labels.  Throws NotTriangular,
/// ConditionFailed, TheoremStress; with best_effort, an oracle that finds
/// nothing raises NoneExists.
PipelineResult decompose(const BipartiteGraph& g, const PipelineOptions& options = {});

}  // namespace sfasd

#endif  // SFASD_PIPELINE_HPP
