#include "sfasd/list_coloring.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "sfasd/errors.hpp"

namespace sfasd {

namespace {

constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();

}  // namespace

PreferenceSystem::PreferenceSystem(const AuxMultigraph& h, EdgeColoring seq)
    : h_(h), seq_(std::move(seq))
{
    if (!is_sequential(h_, seq_, h_.x_degrees())) {
        throw NotSequential("preference system needs a sequential coloring");
    }
}

bool PreferenceSystem::points_to(EdgeId e, EdgeId f) const
{
    if (e == f) return false;
    const EdgeInstance& a = h_.edges()[e];
    const EdgeInstance& b = h_.edges()[f];
    if (a.x == b.x && color(f) > color(e)) return true;
    if (a.z == b.z && color(f) < color(e)) return true;
    return false;
}

std::vector<EdgeId> PreferenceSystem::out_neighbors(EdgeId e) const
{
    std::vector<EdgeId> out;
    const EdgeInstance& a = h_.edges()[e];
    std::set<EdgeId> candidates(h_.at_x(a.x).begin(), h_.at_x(a.x).end());
    candidates.insert(h_.at_z(a.z).begin(), h_.at_z(a.z).end());
    for (EdgeId f : candidates)
        if (points_to(e, f)) out.push_back(f);
    return out;
}

std::vector<EdgeId> stable_kernel(const std::vector<EdgeId>& subset, const PreferenceSystem& prefs)
{
    const AuxMultigraph& h = prefs.graph();
    std::vector<std::vector<EdgeId>> proposals(static_cast<std::size_t>(h.x_count()));
    for (EdgeId e : subset) proposals[static_cast<std::size_t>(h.edges()[e].x - 1)].push_back(e);
    for (auto& p : proposals) {
        std::sort(p.begin(), p.end(), [&](EdgeId a, EdgeId b) { return prefs.color(a) > prefs.color(b); });
    }

    std::vector<std::size_t> next(static_cast<std::size_t>(h.x_count()), 0);
    std::vector<EdgeId> held(static_cast<std::size_t>(h.z_count()), kNone);
    std::deque<int> free_x;
    for (int x = 1; x <= h.x_count(); ++x)
        if (!proposals[static_cast<std::size_t>(x - 1)].empty()) free_x.push_back(x);

    while (!free_x.empty()) {
        const auto xi = static_cast<std::size_t>(free_x.front() - 1);
        free_x.pop_front();
        while (next[xi] < proposals[xi].size()) {
            const EdgeId e = proposals[xi][next[xi]++];
            const auto zi = static_cast<std::size_t>(h.edges()[e].z - 1);
            if (held[zi] == kNone) {
                held[zi] = e;
                break;
            }
            if (prefs.color(e) < prefs.color(held[zi])) {
                free_x.push_back(h.edges()[held[zi]].x);
                held[zi] = e;
                break;
            }
        }
    }

    std::vector<EdgeId> kernel;
    for (EdgeId e : held)
        if (e != kNone) kernel.push_back(e);
    std::sort(kernel.begin(), kernel.end());
    return kernel;
}

bool is_kernel(const std::vector<EdgeId>& subset, const std::vector<EdgeId>& k, const PreferenceSystem& prefs)
{
    const AuxMultigraph& h = prefs.graph();
    const std::set<EdgeId> in_subset(subset.begin(), subset.end());
    const std::set<EdgeId> in_k(k.begin(), k.end());
    std::set<int> xs;
    std::set<int> zs;
    for (EdgeId e : in_k) {
        if (!in_subset.contains(e)) return false;
        if (!xs.insert(h.edges()[e].x).second || !zs.insert(h.edges()[e].z).second) return false;
    }
    for (EdgeId e : in_subset) {
        if (in_k.contains(e)) continue;
        const bool dominated =
            std::any_of(in_k.begin(), in_k.end(), [&](EdgeId f) { return prefs.points_to(e, f); });
        if (!dominated) return false;
    }
    return true;
}

ListAssignment list_edge_color(const AuxMultigraph& h, const EdgeColoring& seq, const ColorLists& lists)
{
    if (static_cast<int>(lists.lists.size()) != h.x_count()) {
        throw Error("list_edge_color: one list per X-vertex expected");
    }
    const DegreeVector deg = h.x_degrees();
    std::set<int> symbols;
    for (std::size_t x = 0; x < lists.lists.size(); ++x) {
        const std::set<int> unique(lists.lists[x].begin(), lists.lists[x].end());
        if (unique.size() != lists.lists[x].size() || static_cast<int>(unique.size()) != deg[x]) {
            throw Error("list_edge_color: L(x_" + std::to_string(x + 1) + ") must hold exactly d(x) distinct symbols");
        }
        symbols.insert(unique.begin(), unique.end());
    }
    const PreferenceSystem prefs(h, seq);

    std::vector<std::set<int>> list_sets;
    for (const auto& l : lists.lists) list_sets.emplace_back(l.begin(), l.end());

    constexpr int kUncolored = std::numeric_limits<int>::min();
    ListAssignment out(h.size(), kUncolored);
    std::size_t remaining = h.size();
    for (int sigma : symbols) {
        if (remaining == 0) break;
        std::vector<EdgeId> candidates;
        for (EdgeId e = 0; e < h.size(); ++e) {
            if (out[e] == kUncolored && list_sets[static_cast<std::size_t>(h.edges()[e].x - 1)].contains(sigma)) {
                candidates.push_back(e);
            }
        }
        if (candidates.empty()) continue;
        for (EdgeId e : stable_kernel(candidates, prefs)) {
            out[e] = sigma;
            --remaining;
        }
    }
    if (remaining != 0) {
        throw Incomplete("list edge coloring left " + std::to_string(remaining) + " edge(s) uncolored");
    }
    return out;
}

bool is_proper_list_coloring(const AuxMultigraph& h, const ColorLists& lists, const ListAssignment& a)
{
    if (a.size() != h.size() || static_cast<int>(lists.lists.size()) != h.x_count()) return false;
    for (EdgeId e = 0; e < h.size(); ++e) {
        const auto& l = lists.lists[static_cast<std::size_t>(h.edges()[e].x - 1)];
        if (std::find(l.begin(), l.end(), a[e]) == l.end()) return false;
    }
    auto distinct = [&](const std::vector<EdgeId>& ids) {
        std::set<int> seen;
        for (EdgeId e : ids)
            if (!seen.insert(a[e]).second) return false;
        return true;
    };
    for (int x = 1; x <= h.x_count(); ++x)
        if (!distinct(h.at_x(x))) return false;
    for (int z = 1; z <= h.z_count(); ++z)
        if (!distinct(h.at_z(z))) return false;
    return true;
}

Extension extend_decomposition(const BipartiteGraph& g, const ReducedGraph& reduced,
                               const Decomposition& reduced_decomposition)
{
    const BipartiteGraph& gr = reduced.graph;
    const int k = gr.k();
    const int t = static_cast<int>(reduced_decomposition.size());

    std::set<Edge> covered;
    for (const StarForest& f : reduced_decomposition.forests) {
        if (!f.is_star_forest()) throw Error("extend_decomposition: part is not a star forest");
        for (const Edge& e : f.edges()) {
            if (!gr.has_edge(e) || !covered.insert(e).second) {
                throw Error("extend_decomposition: parts do not partition the reduced graph");
            }
        }
    }
    if (covered.size() != gr.size()) throw Error("extend_decomposition: parts do not cover the reduced graph");

    Extension out;
    out.c = IntMatrix(k, t);
    std::vector<std::vector<int>> leaves(static_cast<std::size_t>(k) * static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) {
        for (const Edge& e : reduced_decomposition.forests[static_cast<std::size_t>(j)].edges()) {
            ++out.c(e.x - 1, j);
            leaves[static_cast<std::size_t>((e.x - 1) * t + j)].push_back(e.y);
        }
    }
    out.multigraph = AuxMultigraph(out.c);
    out.precoloring.color.assign(out.multigraph.size(), 0);
    for (int x = 1; x <= k; ++x) {
        for (int u = 1; u <= t; ++u) {
            auto& ys = leaves[static_cast<std::size_t>((x - 1) * t + (u - 1))];
            std::sort(ys.begin(), ys.end());
            for (std::size_t c = 0; c < ys.size(); ++c) {
                out.precoloring.color[out.multigraph.id_of(x, u, static_cast<int>(c + 1))] = ys[c];
            }
        }
    }
    if (!is_sequential(out.multigraph, out.precoloring, reduced.degrees)) {
        throw NotSequential("leaf labels of the reduced decomposition are not sequential");
    }

    const auto nbrs = g.x_neighbors();
    ColorLists lists;
    for (int x = 1; x <= k; ++x) {
        lists.lists.push_back(nbrs[static_cast<std::size_t>(reduced.original_x[static_cast<std::size_t>(x - 1)] - 1)]);
    }
    out.symbols = list_edge_color(out.multigraph, out.precoloring, lists);

    std::vector<std::vector<Edge>> parts(static_cast<std::size_t>(t));
    for (EdgeId e = 0; e < out.multigraph.size(); ++e) {
        const EdgeInstance& ei = out.multigraph.edges()[e];
        parts[static_cast<std::size_t>(ei.z - 1)].push_back(
            {reduced.original_x[static_cast<std::size_t>(ei.x - 1)], out.symbols[e]});
    }
    for (auto& p : parts) {
        std::sort(p.begin(), p.end());
        out.decomposition.forests.emplace_back(std::move(p));
    }

    for (int j = 0; j < t; ++j) {
        DegreeVector before = reduced_decomposition.forests[static_cast<std::size_t>(j)].center_degrees(k);
        const DegreeVector by_label = out.decomposition.forests[static_cast<std::size_t>(j)].center_degrees(g.k());
        DegreeVector after(static_cast<std::size_t>(k), 0);
        for (int x = 0; x < k; ++x) {
            after[static_cast<std::size_t>(x)] =
                by_label[static_cast<std::size_t>(reduced.original_x[static_cast<std::size_t>(x)] - 1)];
        }
        if (before != after || out.decomposition.forests[static_cast<std::size_t>(j)].size() !=
                                   reduced_decomposition.forests[static_cast<std::size_t>(j)].size()) {
            throw VerificationFailed("extension changed the shape of forest " + std::to_string(j + 1));
        }
        if (!out.decomposition.forests[static_cast<std::size_t>(j)].is_star_forest()) {
            throw VerificationFailed("extended forest " + std::to_string(j + 1) + " is not a star forest");
        }
    }
    return out;
}

Extension extend_decomposition(const BipartiteGraph& g, const Decomposition& reduced_decomposition)
{
    return extend_decomposition(g, reduce(g), reduced_decomposition);
}

}  // namespace sfasd
