#include "sfasd/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include <json.hpp>

#include "sfasd/errors.hpp"
#include "sfasd/oracle.hpp"

namespace sfasd {

namespace {

std::string persist_stress(const PipelineOptions& options, const std::string& stage,
                           const std::string& what, const DegreeVector& d, int n,
                           const BipartiteGraph* g, const AscendingMatrix* a)
{
    if (!options.stress_dir) return {};
    nlohmann::ordered_json doc;
    doc["stage"] = stage;
    doc["message"] = what;
    doc["n"] = n;
    doc["degrees"] = d;
    if (a) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int i = 0; i < a->rows(); ++i) rows.push_back(a->entries().row(i));
        doc["matrix"] = rows;
    }
    if (g) {
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const Edge& e : g->edges()) edges.push_back({e.x, e.y});
        doc["graph"] = {{"k", g->k()}, {"m", g->m()}, {"edges", edges}};
    }
    std::filesystem::create_directories(*options.stress_dir);
    const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    const auto path = *options.stress_dir / ("theorem-stress-" + stage + "-" + std::to_string(stamp) + ".json");
    std::ofstream(path) << doc.dump(2) << '\n';
    return path.string();
}

void require_verified(const VerificationReport& report)
{
    if (!report.overall) throw VerificationFailed("certificate failed verification: " + report.summary());
}

}  // namespace

PipelineResult decompose_reduced(const DegreeVector& d_in, int n, const PipelineOptions& options)
{
    DegreeVector d = d_in;
    std::sort(d.begin(), d.end());
    if (d.empty() || d.front() < 1) throw ConditionFailed("degree sequence must be nonempty and positive");
    if (!check_sufficient(d, n)) throw ConditionFailed("degree sequence fails d_{k-i} >= n-i");

    PipelineResult result;
    result.n = n;
    result.trace.reduced = reduced_from_degrees(d);

    const AscendingMatrix a = construct_with_support(d, n);
    const AuxMultigraph h = multigraph_from_matrix(a);
    const ColoringOutcome outcome = sequential_color(h, d, options.solver);
    result.trace.matrix = a;
    result.trace.multigraph = h;
    result.trace.heuristic_note = outcome.heuristic_note;

    if (outcome.status != ColoringStatus::Colored) {
        const std::string what = outcome.status == ColoringStatus::HeuristicFailed
                                     ? "heuristic solver did not find a sequential coloring: " + outcome.heuristic_note
                                     : "no sequential coloring exists for the constructed multigraph";
        if (outcome.status == ColoringStatus::HeuristicFailed) {
            // only the heuristic was allowed; not a counterexample by itself
            throw HeuristicFailed(what);
        }
        throw TheoremStress(what, persist_stress(options, "sequential-coloring", what, d, n, nullptr, &a));
    }
    result.solver_path = outcome.path;
    result.trace.coloring = outcome.coloring;
    result.decomposition = forests_from_coloring(h, *outcome.coloring);
    result.trace.reduced_decomposition = result.decomposition;

    result.report = verify_asd(result.trace.reduced.graph, result.decomposition);
    require_verified(result.report);
    for (int j = 0; j < n; ++j) {
        if (result.decomposition.forests[static_cast<std::size_t>(j)].center_degrees(a.rows()) !=
            a.entries().column(j)) {
            throw VerificationFailed("forest " + std::to_string(j + 1) + " does not match column " +
                                     std::to_string(j + 1) + " of the matrix");
        }
    }
    return result;
}

PipelineResult decompose(const BipartiteGraph& g, const PipelineOptions& options)
{
    const int n = triangular_order(static_cast<long long>(g.size()));
    ReducedGraph reduced = reduce(g);

    if (!check_sufficient(reduced.degrees, n)) {
        if (!options.best_effort) throw ConditionFailed("X-degree sequence fails d_{k-i} >= n-i");
        if (g.size() > options.oracle_cap) {
            throw ConditionFailed("X-degree sequence fails d_{k-i} >= n-i and the graph is too large for the oracle");
        }
        OracleQuery q{g, {}, PartShape::StarForest, true, options.oracle_cap};
        auto witness = brute_force(q);
        if (!witness) throw NoneExists("no star-forest ASD exists (exhaustive search)");
        PipelineResult result;
        result.n = n;
        result.trace.reduced = std::move(reduced);
        result.decomposition = std::move(*witness);
        result.solver_path = SolverPath::Oracle;
        result.report = verify_asd(g, result.decomposition);
        require_verified(result.report);
        return result;
    }

    PipelineResult result = decompose_reduced(reduced.degrees, n, options);
    result.trace.reduced = reduced;
    try {
        result.trace.extension = extend_decomposition(g, reduced, result.trace.reduced_decomposition);
    } catch (const Incomplete& e) {
        throw TheoremStress(e.what(), persist_stress(options, "list-coloring", e.what(), reduced.degrees, n, &g,
                                                     result.trace.matrix ? &*result.trace.matrix : nullptr));
    }
    result.decomposition = result.trace.extension->decomposition;
    result.report = verify_asd(g, result.decomposition);
    require_verified(result.report);

    for (int j = 0; j < n; ++j) {
        DegreeVector got = result.decomposition.forests[static_cast<std::size_t>(j)].center_degrees(g.k());
        DegreeVector want = result.trace.matrix->entries().column(j);
        got.erase(std::remove(got.begin(), got.end(), 0), got.end());
        want.erase(std::remove(want.begin(), want.end(), 0), want.end());
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want) {
            throw VerificationFailed("forest " + std::to_string(j + 1) + " lost its shape during extension");
        }
    }
    return result;
}

}  // namespace sfasd
