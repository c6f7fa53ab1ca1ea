#include <doctest.h>

#include <random>

#include "sfasd/errors.hpp"
#include "sfasd/graph_core.hpp"
#include "support.hpp"

using namespace sfasd;

namespace {

BipartiteGraph unreduced_graph()
{
    return BipartiteGraph(4, 6, {{1, 1}, {2, 1}, {2, 3}, {3, 3}, {3, 5}, {4, 2}, {4, 3}, {4, 4}, {4, 5}, {4, 6}});
}

BipartiteGraph no_star_graph()
{
    return BipartiteGraph(4, 3, {{1, 1}, {2, 2}, {3, 3}, {4, 3}, {3, 2}, {3, 1}});
}

Decomposition forests_12336()
{
    return Decomposition{{
        StarForest({{4, 1}}),
        StarForest({{3, 2}, {5, 1}}),
        StarForest({{2, 1}, {4, 3}, {5, 2}}),
        StarForest({{2, 2}, {3, 1}, {5, 3}, {5, 4}}),
        StarForest({{1, 1}, {3, 3}, {4, 2}, {5, 5}, {5, 6}}),
    }};
}

/// All star forests with at most `max_edges` edges, as star-size multisets.
std::vector<std::vector<int>> star_multisets(int max_edges)
{
    std::vector<std::vector<int>> out{{}};
    for (int e = 1; e <= max_edges; ++e)
        for (auto p : testsupport::partitions(e)) out.push_back(p);
    return out;
}

StarForest forest_from_sizes(const std::vector<int>& sizes)
{
    std::vector<Edge> edges;
    int y = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c)
        for (int i = 0; i < sizes[c]; ++i) edges.push_back({static_cast<int>(c) + 1, ++y});
    return StarForest(edges);
}

}  // namespace

TEST_CASE("BipartiteGraph rejects malformed edge sets")
{
    CHECK_THROWS_AS(BipartiteGraph(2, 2, {{1, 1}, {1, 1}}), MalformedGraph);
    CHECK_THROWS_AS(BipartiteGraph(2, 2, {{3, 1}}), MalformedGraph);
    CHECK_THROWS_AS(BipartiteGraph(2, 2, {{1, 0}}), MalformedGraph);
    CHECK_THROWS_AS(BipartiteGraph(-1, 2, {}), MalformedGraph);
    const BipartiteGraph g(2, 2, {{2, 1}, {1, 2}});
    CHECK(g.edges().front() == Edge{1, 2});
    CHECK(g == BipartiteGraph(2, 2, {{1, 2}, {2, 1}}));
}

TEST_CASE("degree_sequence")
{
    CHECK(degree_sequence(unreduced_graph(), Side::X) == DegreeVector{1, 2, 2, 5});
    CHECK(degree_sequence(BipartiteGraph(3, 2, {}), Side::X) == DegreeVector{0, 0, 0});
    CHECK(degree_sequence(no_star_graph(), Side::X) == DegreeVector{1, 1, 1, 3});
    CHECK(degree_sequence(no_star_graph(), Side::Y) == DegreeVector{2, 2, 2});
}

TEST_CASE("dominance_leq examples")
{
    CHECK(dominance_leq({0, 0, 0, 0, 1}, {0, 0, 0, 1, 1}));
    CHECK(dominance_leq({3, 1, 2}, {3, 1, 2}));
    CHECK_FALSE(dominance_leq({1, 1}, {0, 2}));
    CHECK_THROWS_AS(dominance_leq({1}, {1, 2}), LengthMismatch);
}

TEST_CASE("dominance_leq is a preorder and antisymmetric on sorted vectors")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 3000; ++trial) {
        const int len = 1 + static_cast<int>(rng() % 8);
        auto vec = [&] {
            DegreeVector v(static_cast<std::size_t>(len));
            for (int& x : v) x = static_cast<int>(rng() % 10);
            return v;
        };
        const DegreeVector a = vec();
        const DegreeVector b = vec();
        const DegreeVector c = vec();
        CHECK(dominance_leq(a, a));
        if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
        DegreeVector sa = a;
        DegreeVector sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (dominance_leq(sa, sb) && dominance_leq(sb, sa)) CHECK(sa == sb);
    }
}

TEST_CASE("star_forest_embeds examples")
{
    const Decomposition f = forests_12336();
    CHECK(star_forest_embeds(f.forests[0], f.forests[1], 5));
    CHECK(star_forest_embeds(StarForest(), f.forests[4], 5));
    CHECK_FALSE(star_forest_embeds(StarForest({{1, 1}, {1, 2}}), StarForest({{1, 1}, {2, 2}}), 2));
}

TEST_CASE("star_forest_embeds matches brute-force monomorphism on all forests up to 6 edges")
{
    const auto shapes = star_multisets(6);
    int pairs = 0;
    for (const auto& a : shapes) {
        for (const auto& b : shapes) {
            const StarForest fa = forest_from_sizes(a);
            const StarForest fb = forest_from_sizes(b);
            const int k = static_cast<int>(std::max({a.size(), b.size(), std::size_t{1}}));
            std::vector<int> sa(a.rbegin(), a.rend());
            std::vector<int> sb(b.rbegin(), b.rend());
            CHECK_MESSAGE(star_forest_embeds(fa, fb, k) == testsupport::embeds_brute(sa, sb), "pair ", pairs);
            ++pairs;
        }
    }
    CHECK(pairs == 30 * 30);
}

TEST_CASE("triangular_order")
{
    CHECK(triangular_order(15) == 5);
    CHECK(triangular_order(1) == 1);
    CHECK_THROWS_AS(triangular_order(14), NotTriangular);
    CHECK_THROWS_AS(triangular_order(0), NotTriangular);
    for (long long n = 1; n <= 2000; ++n) CHECK(triangular_order(triangular(n)) == n);
}

TEST_CASE("verify_asd on known decompositions")
{
    const BipartiteGraph gr = testsupport::left_justified({1, 2, 3, 3, 6});
    Decomposition d = forests_12336();
    const VerificationReport ok = verify_asd(gr, d);
    CHECK(ok.overall);
    for (const Finding& f : ok.findings) CHECK(f.passed);

    std::swap(d.forests[1], d.forests[2]);
    const VerificationReport bad = verify_asd(gr, d);
    CHECK_FALSE(bad.overall);
    CHECK_FALSE(bad.finding(Check::Sizes).passed);
    CHECK(bad.finding(Check::Sizes).offending == std::vector<int>{2, 3});
    CHECK(bad.finding(Check::Partition).passed);

    const Decomposition six{{StarForest({{1, 1}}), StarForest({{2, 2}, {3, 3}}),
                              StarForest({{3, 1}, {3, 2}, {4, 3}})}};
    CHECK(verify_asd(no_star_graph(), six).overall);
}

TEST_CASE("verify_asd reports each kind of failure")
{
    const BipartiteGraph g = no_star_graph();
    SUBCASE("missing edge")
    {
        const Decomposition d{{StarForest({{1, 1}}), StarForest({{2, 2}, {3, 3}}), StarForest({{3, 1}, {3, 2}})}};
        const auto r = verify_asd(g, d);
        CHECK_FALSE(r.finding(Check::Partition).passed);
        CHECK_FALSE(r.overall);
    }
    SUBCASE("foreign edge")
    {
        const Decomposition d{{StarForest({{1, 2}}), StarForest({{2, 2}, {3, 3}}),
                               StarForest({{3, 1}, {3, 2}, {4, 3}})}};
        CHECK(verify_asd(g, d).finding(Check::Partition).offending == std::vector<int>{1});
    }
    SUBCASE("not a star forest")
    {
        const Decomposition d{{StarForest({{1, 1}}), StarForest({{2, 2}, {3, 2}}),
                               StarForest({{3, 1}, {3, 3}, {4, 3}})}};
        const auto r = verify_asd(g, d);
        CHECK(r.finding(Check::StarShape).offending == std::vector<int>{2, 3});
    }
    SUBCASE("not ascending")
    {
        const BipartiteGraph h(4, 3, {{1, 1}, {1, 3}, {2, 1}, {2, 2}, {3, 1}, {4, 2}});
        const Decomposition d{{StarForest({{1, 1}}), StarForest({{2, 1}, {2, 2}}),
                               StarForest({{1, 3}, {3, 1}, {4, 2}})}};
        const auto r = verify_asd(h, d);
        CHECK_FALSE(r.overall);
        CHECK(r.finding(Check::Ascending).offending == std::vector<int>{2});
        CHECK(r.finding(Check::StarShape).passed);
    }
    SUBCASE("non-triangular edge count")
    {
        const BipartiteGraph h(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
        CHECK_FALSE(verify_asd(h, Decomposition{}).finding(Check::Sizes).passed);
    }
}

TEST_CASE("passing verify_asd implies triangular edge count and full cover")
{
    std::mt19937 rng(5);
    const BipartiteGraph g = no_star_graph();
    std::vector<Edge> edges = g.edges();
    int passes = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::shuffle(edges.begin(), edges.end(), rng);
        Decomposition d;
        std::size_t at = 0;
        for (std::size_t s = 1; at < edges.size(); ++s) {
            const std::size_t take = std::min(s, edges.size() - at);
            d.forests.emplace_back(std::vector<Edge>(edges.begin() + static_cast<long>(at),
                                                     edges.begin() + static_cast<long>(at + take)));
            at += take;
        }
        const bool pass = verify_asd(g, d).overall;
        CHECK(pass == testsupport::check_asd(g, d));
        if (pass) {
            std::size_t total = 0;
            for (const auto& f : d.forests) total += f.size();
            CHECK(total == g.size());
            ++passes;
        }
    }
    CHECK(passes > 0);
}

TEST_CASE("StarForest helpers")
{
    const StarForest f({{2, 1}, {2, 4}, {3, 2}});
    CHECK(f.is_star_forest());
    CHECK(f.center_degrees(4) == DegreeVector{0, 2, 1, 0});
    CHECK_FALSE(StarForest({{1, 1}, {2, 1}}).is_star_forest());
    CHECK(StarForest().empty());
}
