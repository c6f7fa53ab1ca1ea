#include "sfasd/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "sfasd/errors.hpp"

namespace sfasd {

namespace {

class PartitionSearch {
public:
    PartitionSearch(const OracleQuery& q, std::vector<int> sizes)
        : q_(q), edges_(q.graph.edges()), sizes_(std::move(sizes)),
          part_of_(edges_.size(), -1), y_left_(static_cast<std::size_t>(q.graph.m()) + 1, 0),
          filled_(sizes_.size(), false)
    {
        for (const Edge& e : edges_) ++y_left_[static_cast<std::size_t>(e.y)];
        order_.resize(sizes_.size());
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (sizes_[a] != sizes_[b]) return sizes_[a] > sizes_[b];
            return a > b;
        });
        members_.resize(sizes_.size());
    }

    std::optional<Decomposition> run()
    {
        if (!fill(0)) return std::nullopt;
        Decomposition d;
        for (auto& m : members_) {
            std::vector<Edge> part;
            for (std::size_t e : m) part.push_back(edges_[e]);
            std::sort(part.begin(), part.end());
            d.forests.emplace_back(std::move(part));
        }
        return d;
    }

private:
    bool fill(std::size_t step)
    {
        if (step == order_.size()) return true;
        const int part = order_[step];
        return choose(step, part, 0);
    }

    bool choose(std::size_t step, int part, std::size_t from)
    {
        auto& chosen = members_[static_cast<std::size_t>(part)];
        if (static_cast<int>(chosen.size()) == sizes_[static_cast<std::size_t>(part)]) {
            return close_part(step, part);
        }
        const std::size_t need = static_cast<std::size_t>(sizes_[static_cast<std::size_t>(part)]) - chosen.size();
        std::size_t available = 0;
        for (std::size_t e = from; e < edges_.size(); ++e)
            if (part_of_[e] < 0) ++available;
        if (available < need) return false;

        for (std::size_t e = from; e < edges_.size(); ++e) {
            if (part_of_[e] >= 0 || !fits(chosen, edges_[e])) continue;
            part_of_[e] = part;
            chosen.push_back(e);
            --y_left_[static_cast<std::size_t>(edges_[e].y)];
            if (choose(step, part, e + 1)) return true;
            ++y_left_[static_cast<std::size_t>(edges_[e].y)];
            chosen.pop_back();
            part_of_[e] = -1;
        }
        return false;
    }

    bool fits(const std::vector<std::size_t>& chosen, const Edge& e) const
    {
        for (std::size_t c : chosen) {
            if (edges_[c].y == e.y) return false;
            if (q_.shape == PartShape::SingleStar && edges_[c].x != e.x) return false;
        }
        return true;
    }

    bool close_part(std::size_t step, int part)
    {
        filled_[static_cast<std::size_t>(part)] = true;
        bool ok = ascending_ok(part) && pigeonhole_ok(step + 1) && fill(step + 1);
        if (!ok) filled_[static_cast<std::size_t>(part)] = false;
        return ok;
    }

    // Each part holds at most one edge at a given leaf.
    bool pigeonhole_ok(std::size_t next_step) const
    {
        const int parts_left = static_cast<int>(order_.size() - next_step);
        for (int left : y_left_)
            if (left > parts_left) return false;
        return true;
    }

    bool ascending_ok(int part) const
    {
        if (!q_.require_ascending) return true;
        const auto p = static_cast<std::size_t>(part);
        if (p > 0 && filled_[p - 1] && !embeds(p - 1, p)) return false;
        if (p + 1 < sizes_.size() && filled_[p + 1] && !embeds(p, p + 1)) return false;
        return true;
    }

    bool embeds(std::size_t a, std::size_t b) const
    {
        DegreeVector da(static_cast<std::size_t>(q_.graph.k()), 0);
        DegreeVector db(static_cast<std::size_t>(q_.graph.k()), 0);
        for (std::size_t e : members_[a]) ++da[static_cast<std::size_t>(edges_[e].x - 1)];
        for (std::size_t e : members_[b]) ++db[static_cast<std::size_t>(edges_[e].x - 1)];
        return dominance_leq(da, db);
    }

    const OracleQuery& q_;
    const std::vector<Edge>& edges_;
    std::vector<int> sizes_;
    std::vector<int> part_of_;
    std::vector<int> y_left_;
    std::vector<bool> filled_;
    std::vector<int> order_;
    std::vector<std::vector<std::size_t>> members_;
};

}  // namespace

std::optional<Decomposition> brute_force(const OracleQuery& query)
{
    if (query.graph.size() > query.cap) {
        throw CapExceeded("oracle: " + std::to_string(query.graph.size()) + " edges exceed the cap of " +
                          std::to_string(query.cap));
    }
    std::vector<int> sizes = query.sizes;
    if (sizes.empty()) sizes = [&] {
        const int n = triangular_order(static_cast<long long>(query.graph.size()));
        std::vector<int> s(static_cast<std::size_t>(n));
        std::iota(s.begin(), s.end(), 1);
        return s;
    }();
    if (std::any_of(sizes.begin(), sizes.end(), [](int s) { return s < 0; })) {
        throw Error("oracle: negative part size");
    }
    const long long total = std::accumulate(sizes.begin(), sizes.end(), 0LL);
    if (total != static_cast<long long>(query.graph.size())) {
        throw SumMismatch("oracle: part sizes sum to " + std::to_string(total) + " but |E| = " +
                          std::to_string(query.graph.size()));
    }
    PartitionSearch search(query, std::move(sizes));
    return search.run();
}

namespace {

void extend_sequences(int length, int remaining, int min_entry, DegreeVector& prefix,
                      std::vector<DegreeVector>& out)
{
    if (static_cast<int>(prefix.size()) == length - 1) {
        if (remaining >= min_entry) {
            prefix.push_back(remaining);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    const int slots = length - static_cast<int>(prefix.size());
    for (int v = min_entry; v * slots <= remaining; ++v) {
        prefix.push_back(v);
        extend_sequences(length, remaining - v, v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<DegreeVector> enumerate_sequences(int n, int k_max)
{
    std::vector<DegreeVector> out;
    const int total = static_cast<int>(triangular(n));
    for (int length = 1; length <= std::min(k_max, total); ++length) {
        DegreeVector prefix;
        extend_sequences(length, total, 1, prefix, out);
    }
    return out;
}

BipartiteGraph random_graph(const DegreeVector& d, int m, std::uint64_t seed)
{
    for (int v : d) {
        if (v < 0 || v > m) {
            throw Infeasible("random_graph: degree " + std::to_string(v) + " does not fit m = " + std::to_string(m));
        }
    }
    std::mt19937_64 rng(seed);
    std::vector<int> leaves(static_cast<std::size_t>(m));
    std::iota(leaves.begin(), leaves.end(), 1);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d.size(); ++i) {
        // partial Fisher-Yates: the first d_i slots become a uniform d_i-subset
        for (int j = 0; j < d[i]; ++j) {
            std::uniform_int_distribution<int> pick(j, m - 1);
            std::swap(leaves[static_cast<std::size_t>(j)], leaves[static_cast<std::size_t>(pick(rng))]);
            edges.push_back({static_cast<int>(i + 1), leaves[static_cast<std::size_t>(j)]});
        }
    }
    BipartiteGraph g(static_cast<int>(d.size()), m, std::move(edges));
    if (g.x_degrees() != d) throw Error("random_graph: degree sequence not realized");
    return g;
}

}  // namespace sfasd
