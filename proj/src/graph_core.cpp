#include "sfasd/graph_core.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "sfasd/errors.hpp"

namespace sfasd {

BipartiteGraph::BipartiteGraph(int k, int m, std::vector<Edge> edges)
    : k_(k), m_(m), edges_(std::move(edges))
{
    if (k_ < 0 || m_ < 0) {
        throw MalformedGraph("negative vertex count");
    }
    for (const Edge& e : edges_) {
        if (e.x < 1 || e.x > k_ || e.y < 1 || e.y > m_) {
            std::ostringstream msg;
            msg << "edge (" << e.x << "," << e.y << ") out of range for k=" << k_
                << " m=" << m_;
            throw MalformedGraph(msg.str());
        }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
        std::ostringstream msg;
        msg << "duplicate edge (" << dup->x << "," << dup->y << ")";
        throw MalformedGraph(msg.str());
    }
}

bool BipartiteGraph::has_edge(const Edge& e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

DegreeVector BipartiteGraph::x_degrees() const
{
    DegreeVector deg(static_cast<std::size_t>(k_), 0);
    for (const Edge& e : edges_) ++deg[e.x - 1];
    return deg;
}

DegreeVector BipartiteGraph::y_degrees() const
{
    DegreeVector deg(static_cast<std::size_t>(m_), 0);
    for (const Edge& e : edges_) ++deg[e.y - 1];
    return deg;
}

std::vector<std::vector<int>> BipartiteGraph::x_neighbors() const
{
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(k_));
    for (const Edge& e : edges_) nbrs[e.x - 1].push_back(e.y);
    return nbrs;
}

bool StarForest::is_star_forest() const
{
    std::set<int> leaves;
    for (const Edge& e : edges_) {
        if (!leaves.insert(e.y).second) return false;
    }
    return true;
}

DegreeVector StarForest::center_degrees(int k) const
{
    int width = k;
    for (const Edge& e : edges_) width = std::max(width, e.x);
    DegreeVector deg(static_cast<std::size_t>(width), 0);
    for (const Edge& e : edges_) ++deg[e.x - 1];
    return deg;
}

std::string to_string(Check check)
{
    switch (check) {
    case Check::Partition: return "partition";
    case Check::Sizes: return "sizes";
    case Check::StarShape: return "star-shape";
    case Check::Ascending: return "ascending";
    }
    return "unknown";
}

const Finding& VerificationReport::finding(Check check) const
{
    for (const Finding& f : findings) {
        if (f.check == check) return f;
    }
    throw std::out_of_range("no finding for check " + to_string(check));
}

std::string VerificationReport::summary() const
{
    std::ostringstream out;
    out << (overall ? "pass" : "fail");
    for (const Finding& f : findings) {
        out << "; " << to_string(f.check) << '=' << (f.passed ? "ok" : "FAIL");
        if (!f.passed) {
            out << " [";
            for (std::size_t i = 0; i < f.offending.size(); ++i) {
                out << (i ? "," : "") << f.offending[i];
            }
            out << "]";
            if (!f.detail.empty()) out << ' ' << f.detail;
        }
    }
    return out.str();
}

DegreeVector degree_sequence(const BipartiteGraph& g, Side side)
{
    DegreeVector deg = side == Side::X ? g.x_degrees() : g.y_degrees();
    std::sort(deg.begin(), deg.end());
    return deg;
}

bool dominance_leq(const DegreeVector& c, const DegreeVector& c2)
{
    if (c.size() != c2.size()) {
        throw LengthMismatch("dominance_leq: vectors of length " + std::to_string(c.size()) +
                             " and " + std::to_string(c2.size()));
    }
    DegreeVector a = c;
    DegreeVector b = c2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

bool star_forest_embeds(const StarForest& f, const StarForest& f2, int k)
{
    DegreeVector a = f.center_degrees(k);
    DegreeVector b = f2.center_degrees(k);
    const std::size_t width = std::max(a.size(), b.size());
    a.resize(width, 0);
    b.resize(width, 0);
    return dominance_leq(a, b);
}

int triangular_order(long long edge_count)
{
    if (edge_count >= 1) {
        auto n = static_cast<long long>(
            std::floor((std::sqrt(8.0 * static_cast<double>(edge_count) + 1.0) - 1.0) / 2.0));
        while (triangular(n) < edge_count) ++n;
        while (n > 0 && triangular(n) > edge_count) --n;
        if (triangular(n) == edge_count) return static_cast<int>(n);
    }
    throw NotTriangular(std::to_string(edge_count) + " is not of the form n(n+1)/2");
}

VerificationReport verify_asd(const BipartiteGraph& g, const Decomposition& d)
{
    VerificationReport report;

    // (a) partition of E(G)
    {
        Finding f;
        f.check = Check::Partition;
        std::set<Edge> seen;
        for (std::size_t i = 0; i < d.forests.size(); ++i) {
            bool bad = false;
            for (const Edge& e : d.forests[i].edges()) {
                if (!g.has_edge(e) || !seen.insert(e).second) bad = true;
            }
            if (bad) f.offending.push_back(static_cast<int>(i + 1));
        }
        const std::size_t missing = std::count_if(
            g.edges().begin(), g.edges().end(), [&](const Edge& e) { return !seen.contains(e); });
        if (missing > 0) f.detail = std::to_string(missing) + " edge(s) of G uncovered";
        f.passed = f.offending.empty() && missing == 0;
        report.findings.push_back(std::move(f));
    }

    // (b) |F_i| = i
    {
        Finding f;
        f.check = Check::Sizes;
        int n = 0;
        try {
            n = triangular_order(static_cast<long long>(g.size()));
        } catch (const NotTriangular&) {
            f.detail = "|E(G)| = " + std::to_string(g.size()) + " is not triangular";
        }
        if (n > 0 && d.forests.size() != static_cast<std::size_t>(n)) {
            f.detail = "expected " + std::to_string(n) + " forests, got " +
                       std::to_string(d.forests.size());
        }
        for (std::size_t i = 0; i < d.forests.size(); ++i) {
            if (d.forests[i].size() != i + 1) f.offending.push_back(static_cast<int>(i + 1));
        }
        f.passed = n > 0 && f.detail.empty() && f.offending.empty();
        report.findings.push_back(std::move(f));
    }

    // (c) star forests centred in X
    {
        Finding f;
        f.check = Check::StarShape;
        for (std::size_t i = 0; i < d.forests.size(); ++i) {
            if (!d.forests[i].is_star_forest()) f.offending.push_back(static_cast<int>(i + 1));
        }
        f.passed = f.offending.empty();
        report.findings.push_back(std::move(f));
    }

    // (d) F_i embeds in F_{i+1}
    {
        Finding f;
        f.check = Check::Ascending;
        for (std::size_t i = 0; i + 1 < d.forests.size(); ++i) {
            if (!star_forest_embeds(d.forests[i], d.forests[i + 1], g.k())) {
                f.offending.push_back(static_cast<int>(i + 1));
            }
        }
        f.passed = f.offending.empty();
        report.findings.push_back(std::move(f));
    }

    report.overall = std::all_of(report.findings.begin(), report.findings.end(),
                                 [](const Finding& f) { return f.passed; });
    return report;
}

}  // namespace sfasd
