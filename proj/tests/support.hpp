#ifndef SFASD_TESTS_SUPPORT_HPP
#define SFASD_TESTS_SUPPORT_HPP

// Test-side reference implementations.  Nothing here calls into the library's
// algorithms; they exist to cross-check them.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "sfasd/graph_core.hpp"
#include "sfasd/sequential_coloring.hpp"

namespace testsupport {

using sfasd::Edge;

/// All partitions of `total` as nondecreasing sequences, by length then lex.
inline std::vector<std::vector<int>> partitions(int total)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int lo) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = lo; v <= left; ++v) {
            cur.push_back(v);
            rec(left - v, v);
            cur.pop_back();
        }
    };
    rec(total, 1);
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    return out;
}

/// x_i adjacent to y_1..y_{d_i}, d sorted nondecreasing.
inline sfasd::BipartiteGraph left_justified(std::vector<int> d)
{
    std::sort(d.begin(), d.end());
    std::vector<Edge> edges;
    int m = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        m = std::max(m, d[i]);
        for (int y = 1; y <= d[i]; ++y) edges.push_back({static_cast<int>(i) + 1, y});
    }
    return sfasd::BipartiteGraph(static_cast<int>(d.size()), m, edges);
}

/// Star sizes of a star forest (sorted descending); empty if not a star forest
/// centred in X.
inline std::vector<int> star_sizes(const std::vector<Edge>& edges, bool* ok = nullptr)
{
    std::map<int, int> by_center;
    std::set<int> leaves;
    bool fine = true;
    for (const Edge& e : edges) {
        ++by_center[e.x];
        if (!leaves.insert(e.y).second) fine = false;
    }
    if (ok) *ok = fine;
    std::vector<int> sizes;
    for (const auto& [c, s] : by_center) sizes.push_back(s);
    std::sort(sizes.rbegin(), sizes.rend());
    return sizes;
}

/// Subgraph monomorphism between star forests by exhaustive assignment of
/// the stars of `a` to distinct stars of `b`.
inline bool embeds_brute(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<bool> used(b.size(), false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == a.size()) return true;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j] && b[j] >= a[i]) {
                used[j] = true;
                if (rec(i + 1)) return true;
                used[j] = false;
            }
        }
        return false;
    };
    return rec(0);
}

/// Independent star-forest ASD check; `why` receives the first failure.
inline bool check_asd(const sfasd::BipartiteGraph& g, const sfasd::Decomposition& d, std::string* why = nullptr)
{
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    std::multiset<Edge> all;
    for (const auto& f : d.forests)
        for (const Edge& e : f.edges()) all.insert(e);
    std::multiset<Edge> want(g.edges().begin(), g.edges().end());
    if (all != want) return fail("not an edge partition");
    std::size_t n = 0;
    while ((n + 1) * (n + 2) / 2 <= g.size()) ++n;
    if (n * (n + 1) / 2 != g.size() || d.forests.size() != n) return fail("wrong number of parts");
    for (std::size_t i = 0; i < n; ++i) {
        if (d.forests[i].size() != i + 1) return fail("part " + std::to_string(i + 1) + " has wrong size");
        bool ok = true;
        star_sizes(d.forests[i].edges(), &ok);
        if (!ok) return fail("part " + std::to_string(i + 1) + " is not a star forest");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!embeds_brute(star_sizes(d.forests[i].edges()), star_sizes(d.forests[i + 1].edges())))
            return fail("part " + std::to_string(i + 1) + " does not embed in the next");
    }
    return true;
}

/// Kernels of the line-graph orientation on `subset`, by exhaustive search.
/// `arc(e, f)` is true when e points to f; e and f are adjacent iff
/// arc(e, f) || arc(f, e).
inline std::vector<std::vector<sfasd::EdgeId>> all_kernels(
    const std::vector<sfasd::EdgeId>& subset, const std::function<bool(sfasd::EdgeId, sfasd::EdgeId)>& arc)
{
    std::vector<std::vector<sfasd::EdgeId>> out;
    const std::size_t s = subset.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
        std::vector<sfasd::EdgeId> k;
        for (std::size_t i = 0; i < s; ++i)
            if (mask >> i & 1) k.push_back(subset[i]);
        bool independent = true;
        for (std::size_t a = 0; a < k.size() && independent; ++a)
            for (std::size_t b = a + 1; b < k.size(); ++b)
                if (arc(k[a], k[b]) || arc(k[b], k[a])) independent = false;
        if (!independent) continue;
        bool absorbing = true;
        for (std::size_t i = 0; i < s && absorbing; ++i) {
            if (mask >> i & 1) continue;
            absorbing = std::any_of(k.begin(), k.end(), [&](sfasd::EdgeId f) { return arc(subset[i], f); });
        }
        if (absorbing) {
            std::sort(k.begin(), k.end());
            out.push_back(k);
        }
    }
    return out;
}

/// Every instance gets a symbol from its x-list; no symbol repeats at a vertex.
inline bool list_coloring_ok(const sfasd::AuxMultigraph& h, const std::vector<std::vector<int>>& lists,
                             const std::vector<int>& symbol)
{
    if (symbol.size() != h.size()) return false;
    std::set<std::pair<int, int>> at_x;
    std::set<std::pair<int, int>> at_z;
    for (std::size_t e = 0; e < h.size(); ++e) {
        const auto& inst = h.edges()[e];
        const auto& l = lists[static_cast<std::size_t>(inst.x - 1)];
        if (std::find(l.begin(), l.end(), symbol[e]) == l.end()) return false;
        if (!at_x.insert({inst.x, symbol[e]}).second) return false;
        if (!at_z.insert({inst.z, symbol[e]}).second) return false;
    }
    return true;
}

/// Colors at each x are exactly 1..d_x and no color repeats at a z.
inline bool sequential_ok(const sfasd::AuxMultigraph& h, const std::vector<int>& color, const std::vector<int>& d)
{
    std::vector<std::set<int>> at_x(static_cast<std::size_t>(h.x_count()));
    std::set<std::pair<int, int>> at_z;
    for (std::size_t e = 0; e < h.size(); ++e) {
        const auto& inst = h.edges()[e];
        if (!at_x[static_cast<std::size_t>(inst.x - 1)].insert(color[e]).second) return false;
        if (!at_z.insert({inst.z, color[e]}).second) return false;
    }
    for (std::size_t i = 0; i < at_x.size(); ++i) {
        std::set<int> want;
        for (int c = 1; c <= d[i]; ++c) want.insert(c);
        if (at_x[i] != want) return false;
    }
    return true;
}

}  // namespace testsupport

#endif  // SFASD_TESTS_SUPPORT_HPP
