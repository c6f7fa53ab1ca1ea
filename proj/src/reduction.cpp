#include "sfasd/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "sfasd/errors.hpp"

namespace sfasd {

namespace {

ReducedGraph left_justified(const std::vector<std::pair<int, int>>& degree_and_label)
{
    ReducedGraph out;
    int max_degree = 0;
    std::vector<Edge> edges;
    int x = 0;
    for (const auto& [deg, label] : degree_and_label) {
        if (deg == 0) continue;
        ++x;
        out.degrees.push_back(deg);
        out.original_x.push_back(label);
        max_degree = std::max(max_degree, deg);
        for (int y = 1; y <= deg; ++y) edges.push_back({x, y});
    }
    out.graph = BipartiteGraph(x, max_degree, std::move(edges));
    return out;
}

void require_sum(const DegreeVector& d, int n)
{
    const long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (sum != triangular(n)) {
        throw SumMismatch("degree sum " + std::to_string(sum) + " != " +
                          std::to_string(triangular(n)) + " for n=" + std::to_string(n));
    }
}

}  // namespace

ReducedGraph reduced_from_degrees(DegreeVector d)
{
    std::sort(d.begin(), d.end());
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < d.size(); ++i) pairs.emplace_back(d[i], static_cast<int>(i + 1));
    return left_justified(pairs);
}

ReducedGraph reduce(const BipartiteGraph& g)
{
    const DegreeVector deg = g.x_degrees();
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < deg.size(); ++i) pairs.emplace_back(deg[i], static_cast<int>(i + 1));
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return left_justified(pairs);
}

bool is_reduced(const BipartiteGraph& g)
{
    return reduce(g).graph == g;
}

bool check_sufficient(const DegreeVector& d, int n)
{
    require_sum(d, n);
    const int k = static_cast<int>(d.size());
    for (int i = 0; i < k; ++i) {
        if (d[static_cast<std::size_t>(k - 1 - i)] < n - i) return false;
    }
    return true;
}

bool check_necessary(const DegreeVector& d, int n)
{
    require_sum(d, n);
    const int k = static_cast<int>(d.size());
    long long lhs = 0;
    long long rhs = 0;
    for (int t = 0; t < k; ++t) {
        lhs += d[static_cast<std::size_t>(k - 1 - t)];
        rhs += n - t;
        if (lhs < rhs) return false;
    }
    return true;
}

Classification classify(DegreeVector d)
{
    std::sort(d.begin(), d.end());
    const long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    Classification c;
    c.n = triangular_order(sum);
    c.sufficient = check_sufficient(d, c.n);
    c.necessary = check_necessary(d, c.n);
    return c;
}

}  // namespace sfasd
