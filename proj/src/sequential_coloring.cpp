#include "sfasd/sequential_coloring.hpp"

#include <algorithm>
#include <bitset>
#include <limits>
#include <map>
#include <random>

#include "sfasd/errors.hpp"

namespace sfasd {

namespace {

constexpr EdgeId kNone = std::numeric_limits<EdgeId>::max();

}  // namespace

AuxMultigraph::AuxMultigraph(IntMatrix multiplicity)
    : mult_(std::move(multiplicity))
{
    const int k = mult_.rows();
    const int n = mult_.cols();
    at_x_.resize(static_cast<std::size_t>(k));
    at_z_.resize(static_cast<std::size_t>(n));
    first_of_cell_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(n), kNone);
    for (int x = 1; x <= k; ++x) {
        for (int z = 1; z <= n; ++z) {
            const int a = mult_(x - 1, z - 1);
            if (a < 0) throw Error("negative multiplicity");
            first_of_cell_[static_cast<std::size_t>((x - 1) * n + (z - 1))] = edges_.size();
            for (int c = 1; c <= a; ++c) {
                at_x_[static_cast<std::size_t>(x - 1)].push_back(edges_.size());
                at_z_[static_cast<std::size_t>(z - 1)].push_back(edges_.size());
                edges_.push_back({x, z, c});
            }
        }
    }
}

EdgeId AuxMultigraph::id_of(int x, int z, int copy) const
{
    if (x < 1 || x > x_count() || z < 1 || z > z_count() || copy < 1 || copy > multiplicity(x, z)) {
        throw Error("no edge instance (" + std::to_string(x) + "," + std::to_string(z) + "," +
                    std::to_string(copy) + ")");
    }
    return first_of_cell_[static_cast<std::size_t>((x - 1) * z_count() + (z - 1))] +
           static_cast<EdgeId>(copy - 1);
}

int EdgeColoring::max_color() const
{
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end());
}

bool is_proper(const AuxMultigraph& h, const EdgeColoring& c)
{
    if (c.color.size() != h.size()) return false;
    for (int c_ : c.color) {
        if (c_ < 1) return false;
    }
    auto distinct = [&](const std::vector<EdgeId>& ids) {
        std::vector<int> seen;
        seen.reserve(ids.size());
        for (EdgeId e : ids) seen.push_back(c.color[e]);
        std::sort(seen.begin(), seen.end());
        return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
    };
    for (int x = 1; x <= h.x_count(); ++x)
        if (!distinct(h.at_x(x))) return false;
    for (int z = 1; z <= h.z_count(); ++z)
        if (!distinct(h.at_z(z))) return false;
    return true;
}

bool is_sequential(const AuxMultigraph& h, const EdgeColoring& c, const DegreeVector& d)
{
    if (static_cast<int>(d.size()) != h.x_count()) return false;
    if (!is_proper(h, c)) return false;
    for (int x = 1; x <= h.x_count(); ++x) {
        const auto& ids = h.at_x(x);
        if (static_cast<int>(ids.size()) != d[static_cast<std::size_t>(x - 1)]) return false;
        for (EdgeId e : ids) {
            if (c.color[e] > d[static_cast<std::size_t>(x - 1)]) return false;
        }
    }
    return true;
}

AuxMultigraph multigraph_from_matrix(const AscendingMatrix& a)
{
    return AuxMultigraph(a.entries());
}

MatchingPlan paper_matchings(const AuxMultigraph& h, const DegreeVector& d, int n, int k)
{
    if (h.x_count() != k || h.z_count() != n || static_cast<int>(d.size()) != k) {
        throw LengthMismatch("paper_matchings: dimensions of H, d, n, k disagree");
    }
    MatchingPlan plan;
    plan.alpha.resize(static_cast<std::size_t>(k));
    plan.t.resize(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) {
        plan.alpha[static_cast<std::size_t>(r)] = d[static_cast<std::size_t>(r)] - (n - k);
        plan.t[static_cast<std::size_t>(r)] = std::clamp(plan.alpha[static_cast<std::size_t>(r)], 0, k);
    }
    plan.full.resize(static_cast<std::size_t>(k));
    plan.pruned.resize(static_cast<std::size_t>(k));
    plan.missing_rows.resize(static_cast<std::size_t>(k));
    plan.residual.assign(h.size(), true);
    plan.residual_matrix = h.matrix();

    IntMatrix used(k, n);
    for (int i = 1; i <= k; ++i) {
        for (int r = 1; r <= k; ++r) {
            const int s = r >= i ? n + i - r : n - k + i - r;
            const bool required = plan.alpha[static_cast<std::size_t>(r - 1)] >= i;
            if (s < 1 || s > n || used(r - 1, s - 1) >= h.multiplicity(r, s)) {
                plan.missing_rows[static_cast<std::size_t>(i - 1)].push_back(r);
                if (required) {
                    throw MatchingUnavailable("M'_" + std::to_string(i) + " needs x_" +
                                              std::to_string(r) + " z_" + std::to_string(s) +
                                              " but the cell is empty");
                }
                continue;
            }
            ++used(r - 1, s - 1);
            const EdgeId e = h.id_of(r, s, used(r - 1, s - 1));
            plan.full[static_cast<std::size_t>(i - 1)].push_back(e);
            if (required) {
                plan.pruned[static_cast<std::size_t>(i - 1)].push_back(e);
                plan.residual[e] = false;
                --plan.residual_matrix(r - 1, s - 1);
            }
        }
    }
    return plan;
}

DegreeVector masked_x_degrees(const AuxMultigraph& h, const EdgeMask& mask)
{
    DegreeVector deg(static_cast<std::size_t>(h.x_count()), 0);
    for (EdgeId e = 0; e < h.size(); ++e)
        if (mask[e]) ++deg[static_cast<std::size_t>(h.edges()[e].x - 1)];
    return deg;
}

std::vector<int> masked_z_degrees(const AuxMultigraph& h, const EdgeMask& mask)
{
    std::vector<int> deg(static_cast<std::size_t>(h.z_count()), 0);
    for (EdgeId e = 0; e < h.size(); ++e)
        if (mask[e]) ++deg[static_cast<std::size_t>(h.edges()[e].z - 1)];
    return deg;
}

std::vector<EdgeId> peel_matching(const AuxMultigraph& h, const EdgeMask& mask)
{
    const DegreeVector deg = masked_x_degrees(h, mask);
    const int top = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
    if (top == 0) return {};

    // One representative instance per usable cell of a max-degree vertex.
    std::vector<std::vector<EdgeId>> options(static_cast<std::size_t>(h.x_count()));
    for (int x = 1; x <= h.x_count(); ++x) {
        if (deg[static_cast<std::size_t>(x - 1)] != top) continue;
        int last_z = 0;
        for (EdgeId e : h.at_x(x)) {
            if (mask[e] && h.edges()[e].z != last_z) {
                options[static_cast<std::size_t>(x - 1)].push_back(e);
                last_z = h.edges()[e].z;
            }
        }
    }

    std::vector<EdgeId> owner(static_cast<std::size_t>(h.z_count()), kNone);  // z -> matched instance
    std::vector<int> visited(static_cast<std::size_t>(h.z_count()), 0);
    int stamp = 0;

    auto augment = [&](auto&& self, int x) -> bool {
        for (EdgeId e : options[static_cast<std::size_t>(x - 1)]) {
            const auto z = static_cast<std::size_t>(h.edges()[e].z - 1);
            if (visited[z] == stamp) continue;
            visited[z] = stamp;
            if (owner[z] == kNone || self(self, h.edges()[owner[z]].x)) {
                owner[z] = e;
                return true;
            }
        }
        return false;
    };

    for (int x = 1; x <= h.x_count(); ++x) {
        if (deg[static_cast<std::size_t>(x - 1)] != top) continue;
        ++stamp;
        if (!augment(augment, x)) {
            throw HallViolation("no matching saturates the maximum-degree vertex x_" + std::to_string(x));
        }
    }
    std::vector<EdgeId> matching;
    for (EdgeId e : owner)
        if (e != kNone) matching.push_back(e);
    std::sort(matching.begin(), matching.end());
    return matching;
}

EdgeColoring konig_color(const AuxMultigraph& h, const EdgeMask& mask, int max_degree)
{
    const DegreeVector dx = masked_x_degrees(h, mask);
    const std::vector<int> dz = masked_z_degrees(h, mask);
    for (int v : dx)
        if (v > max_degree) throw Error("konig_color: X-degree exceeds the palette");
    for (int v : dz)
        if (v > max_degree) throw Error("konig_color: Z-degree exceeds the palette");

    const auto palette = static_cast<std::size_t>(max_degree) + 1;
    // slot[side][vertex][color] -> instance
    std::vector<std::vector<EdgeId>> at_x(static_cast<std::size_t>(h.x_count()), std::vector<EdgeId>(palette, kNone));
    std::vector<std::vector<EdgeId>> at_z(static_cast<std::size_t>(h.z_count()), std::vector<EdgeId>(palette, kNone));
    EdgeColoring out{std::vector<int>(h.size(), 0)};

    auto first_free = [](const std::vector<EdgeId>& slots) {
        for (std::size_t c = 1; c < slots.size(); ++c)
            if (slots[c] == kNone) return static_cast<int>(c);
        return 0;
    };

    for (EdgeId e = 0; e < h.size(); ++e) {
        if (!mask[e]) continue;
        const auto x = static_cast<std::size_t>(h.edges()[e].x - 1);
        const auto z = static_cast<std::size_t>(h.edges()[e].z - 1);
        const int a = first_free(at_x[x]);
        const int b = first_free(at_z[z]);
        if (at_z[z][static_cast<std::size_t>(a)] != kNone) {
            // a-b alternating path from z; x is missing a, so the path never reaches it
            std::vector<EdgeId> path;
            bool on_z = true;
            std::size_t v = z;
            int want = a;
            while (true) {
                const EdgeId f = on_z ? at_z[v][static_cast<std::size_t>(want)] : at_x[v][static_cast<std::size_t>(want)];
                if (f == kNone) break;
                path.push_back(f);
                v = on_z ? static_cast<std::size_t>(h.edges()[f].x - 1) : static_cast<std::size_t>(h.edges()[f].z - 1);
                on_z = !on_z;
                want = want == a ? b : a;
            }
            for (EdgeId f : path) {
                const auto fc = static_cast<std::size_t>(out.color[f]);
                at_x[static_cast<std::size_t>(h.edges()[f].x - 1)][fc] = kNone;
                at_z[static_cast<std::size_t>(h.edges()[f].z - 1)][fc] = kNone;
            }
            for (EdgeId f : path) {
                out.color[f] = out.color[f] == a ? b : a;
                const auto fc = static_cast<std::size_t>(out.color[f]);
                at_x[static_cast<std::size_t>(h.edges()[f].x - 1)][fc] = f;
                at_z[static_cast<std::size_t>(h.edges()[f].z - 1)][fc] = f;
            }
        }
        out.color[e] = a;
        at_x[x][static_cast<std::size_t>(a)] = e;
        at_z[z][static_cast<std::size_t>(a)] = e;
    }
    return out;
}

EdgeColoring konig_color(const AuxMultigraph& h, int max_degree)
{
    return konig_color(h, EdgeMask(h.size(), true), max_degree);
}

std::string to_string(SolverMode mode)
{
    switch (mode) {
    case SolverMode::Heuristic: return "heuristic";
    case SolverMode::Exact: return "exact";
    case SolverMode::Hybrid: return "hybrid";
    }
    return "unknown";
}

std::string to_string(SolverPath path)
{
    switch (path) {
    case SolverPath::Heuristic: return "heuristic";
    case SolverPath::Fallback: return "fallback";
    case SolverPath::Exact: return "exact";
    case SolverPath::Oracle: return "oracle";
    }
    return "unknown";
}

SolverMode parse_solver_mode(const std::string& s)
{
    if (s == "heuristic") return SolverMode::Heuristic;
    if (s == "exact") return SolverMode::Exact;
    if (s == "hybrid") return SolverMode::Hybrid;
    throw Error("unknown solver mode '" + s + "'");
}

namespace {

// Repairs Z-side clashes of a coloring whose X-side is already sequential.
// A move recolors an alternating (c, c') chain that starts at a clashing edge
// and only turns at X-vertices owning both colors, so every X-vertex keeps
// its color set.
class KempeRepair {
public:
    KempeRepair(const AuxMultigraph& h, const DegreeVector& d, EdgeColoring& c)
        : h_(h), d_(d), c_(c), rng_(0x5eedu) {}

    bool run(std::size_t budget, std::size_t& swaps)
    {
        while (true) {
            const auto clash = find_clash();
            if (!clash) return true;
            if (swaps >= budget) return false;
            if (!fix(*clash)) return false;
            ++swaps;
        }
    }

private:
    struct Clash {
        int z;
        int color;
        std::vector<EdgeId> edges;
    };

    std::optional<Clash> find_clash() const
    {
        for (int z = 1; z <= h_.z_count(); ++z) {
            std::map<int, std::vector<EdgeId>> by_color;
            for (EdgeId e : h_.at_z(z)) by_color[c_.color[e]].push_back(e);
            for (auto& [col, ids] : by_color)
                if (ids.size() > 1) return Clash{z, col, ids};
        }
        return std::nullopt;
    }

    EdgeId x_edge_with(int x, int color) const
    {
        for (EdgeId e : h_.at_x(x))
            if (c_.color[e] == color) return e;
        return kNone;
    }

    EdgeId z_edge_with(int z, int color, EdgeId except) const
    {
        for (EdgeId e : h_.at_z(z))
            if (e != except && c_.color[e] == color) return e;
        return kNone;
    }

    // Chain starting with `start` (color c) that moves it to c'.  Empty when
    // the chain would hit an X-vertex lacking one of the two colors or loop.
    std::vector<EdgeId> chain(EdgeId start, int c, int c2) const
    {
        std::vector<EdgeId> path{start};
        std::vector<bool> seen(h_.size(), false);
        seen[start] = true;
        EdgeId cur = start;  // currently colored c, becomes c2
        while (true) {
            const int x = h_.edges()[cur].x;
            if (c2 > d_[static_cast<std::size_t>(x - 1)]) return {};
            const EdgeId g = x_edge_with(x, c2);  // becomes c
            if (g == kNone || seen[g]) return {};
            seen[g] = true;
            path.push_back(g);
            const EdgeId next = z_edge_with(h_.edges()[g].z, c, g);
            if (next == kNone) return path;
            if (seen[next]) return {};
            seen[next] = true;
            path.push_back(next);
            cur = next;
        }
    }

    bool fix(const Clash& clash)
    {
        std::vector<bool> present(static_cast<std::size_t>(max_color()) + 2, false);
        for (EdgeId e : h_.at_z(clash.z)) present[static_cast<std::size_t>(c_.color[e])] = true;

        std::vector<std::pair<EdgeId, int>> moves;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::vector<std::vector<EdgeId>> chains;
        for (EdgeId e : clash.edges) {
            const int dx = d_[static_cast<std::size_t>(h_.edges()[e].x - 1)];
            for (int c2 = 1; c2 <= dx; ++c2) {
                if (c2 == clash.color || (static_cast<std::size_t>(c2) < present.size() && present[static_cast<std::size_t>(c2)])) continue;
                auto p = chain(e, clash.color, c2);
                if (p.empty()) continue;
                if (p.size() < best) {
                    best = p.size();
                    moves.clear();
                    chains.clear();
                }
                if (p.size() == best) {
                    moves.emplace_back(e, c2);
                    chains.push_back(std::move(p));
                }
            }
        }
        if (chains.empty()) return false;
        std::uniform_int_distribution<std::size_t> pick(0, chains.size() - 1);
        const std::size_t which = pick(rng_);
        const int c2 = moves[which].second;
        for (EdgeId f : chains[which]) c_.color[f] = c_.color[f] == clash.color ? c2 : clash.color;
        return true;
    }

    int max_color() const { return c_.max_color(); }

    const AuxMultigraph& h_;
    const DegreeVector& d_;
    EdgeColoring& c_;
    std::mt19937 rng_;
};

}  // namespace

std::optional<EdgeColoring> heuristic_sequential_color(const AuxMultigraph& h, const DegreeVector& d,
                                                       std::size_t* swaps, std::string* note)
{
    auto give_up = [&](const std::string& why) -> std::optional<EdgeColoring> {
        if (note) *note = why;
        return std::nullopt;
    };
    const int k = h.x_count();
    const int n = h.z_count();
    if (static_cast<int>(d.size()) != k || h.x_degrees() != d) return give_up("degree vector mismatch");
    if (k == 0) return EdgeColoring{};
    if (k > n) return give_up("more X-vertices than Z-vertices");

    MatchingPlan plan;
    try {
        plan = paper_matchings(h, d, n, k);
    } catch (const MatchingUnavailable& e) {
        return give_up(e.what());
    }

    const int target = n - k;
    EdgeMask mask = plan.residual;
    const std::vector<int> zdeg = masked_z_degrees(h, mask);
    if (!zdeg.empty() && *std::max_element(zdeg.begin(), zdeg.end()) > target) {
        return give_up("residual Z-degree exceeds n-k");
    }

    EdgeColoring coloring{std::vector<int>(h.size(), 0)};
    while (true) {
        const DegreeVector dx = masked_x_degrees(h, mask);
        const int top = *std::max_element(dx.begin(), dx.end());
        if (top <= target) break;
        std::vector<EdgeId> m;
        try {
            m = peel_matching(h, mask);
        } catch (const HallViolation& e) {
            return give_up(e.what());
        }
        for (EdgeId e : m) {
            coloring.color[e] = top;
            mask[e] = false;
        }
    }
    const DegreeVector dx = masked_x_degrees(h, mask);
    if (std::any_of(dx.begin(), dx.end(), [&](int v) { return v != target; })) {
        return give_up("residual X-degrees below n-k");
    }
    if (target > 0) {
        const EdgeColoring base = konig_color(h, mask, target);
        for (EdgeId e = 0; e < h.size(); ++e)
            if (mask[e]) coloring.color[e] = base.color[e];
    }
    for (std::size_t j = 0; j < plan.pruned.size(); ++j) {
        for (EdgeId e : plan.pruned[j]) {
            const int x = h.edges()[e].x;
            coloring.color[e] = d[static_cast<std::size_t>(x - 1)] - static_cast<int>(j);
        }
    }

    std::size_t used = 0;
    KempeRepair repair(h, d, coloring);
    const bool repaired = repair.run(h.size() * h.size(), used);
    if (swaps) *swaps = used;
    if (!repaired) return give_up("Kempe repair stalled after " + std::to_string(used) + " swaps");
    if (!is_sequential(h, coloring, d)) return give_up("repaired coloring is not sequential");
    return coloring;
}

namespace {

constexpr int kMaxPalette = 256;
using Palette = std::bitset<kMaxPalette + 1>;

class ExactColoring {
public:
    ExactColoring(const AuxMultigraph& h, const DegreeVector& d)
        : h_(h), d_(d), color_(h.size(), 0),
          used_x_(static_cast<std::size_t>(h.x_count())), used_z_(static_cast<std::size_t>(h.z_count()))
    {
        for (int x = 1; x <= h.x_count(); ++x) {
            Palette p;
            for (int c = 1; c <= d[static_cast<std::size_t>(x - 1)]; ++c) p.set(static_cast<std::size_t>(c));
            allowed_x_.push_back(p);
        }
    }

    bool run() { return step(0); }
    EdgeColoring result() const { return EdgeColoring{color_}; }

private:
    Palette domain(EdgeId e) const
    {
        const EdgeInstance& ei = h_.edges()[e];
        Palette p = allowed_x_[static_cast<std::size_t>(ei.x - 1)] & ~used_x_[static_cast<std::size_t>(ei.x - 1)] &
                    ~used_z_[static_cast<std::size_t>(ei.z - 1)];
        // parallel copies take increasing colors
        int lo = 0;
        int hi = kMaxPalette + 1;
        const int a = h_.multiplicity(ei.x, ei.z);
        for (int c = 1; c <= a; ++c) {
            if (c == ei.copy) continue;
            const int col = color_[h_.id_of(ei.x, ei.z, c)];
            if (col == 0) continue;
            if (c < ei.copy) lo = std::max(lo, col);
            else hi = std::min(hi, col);
        }
        for (int c = 0; c <= lo && c <= kMaxPalette; ++c) p.reset(static_cast<std::size_t>(c));
        for (int c = hi; c <= kMaxPalette; ++c) p.reset(static_cast<std::size_t>(c));
        return p;
    }

    // Every color still owed to x must fit on one of x's uncolored edges.
    bool coverage_ok(int x) const
    {
        const auto xi = static_cast<std::size_t>(x - 1);
        Palette need = allowed_x_[xi] & ~used_x_[xi];
        Palette reach;
        for (EdgeId e : h_.at_x(x))
            if (color_[e] == 0) reach |= domain(e);
        return (need & ~reach).none();
    }

    bool step(std::size_t done)
    {
        if (done == h_.size()) return true;
        EdgeId pick = kNone;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        Palette pick_domain;
        for (EdgeId e = 0; e < h_.size(); ++e) {
            if (color_[e] != 0) continue;
            const Palette p = domain(e);
            const std::size_t sz = p.count();
            if (sz == 0) return false;
            if (sz < best) {  // ids are (x, z, copy)-ordered, so ties keep the lowest
                best = sz;
                pick = e;
                pick_domain = p;
            }
        }
        const EdgeInstance& ei = h_.edges()[pick];
        const auto xi = static_cast<std::size_t>(ei.x - 1);
        const auto zi = static_cast<std::size_t>(ei.z - 1);
        for (int c = 1; c <= kMaxPalette; ++c) {
            if (!pick_domain.test(static_cast<std::size_t>(c))) continue;
            color_[pick] = c;
            used_x_[xi].set(static_cast<std::size_t>(c));
            used_z_[zi].set(static_cast<std::size_t>(c));
            bool ok = true;
            for (EdgeId f : h_.at_z(ei.z)) {
                if (color_[f] == 0 && !coverage_ok(h_.edges()[f].x)) {
                    ok = false;
                    break;
                }
            }
            if (ok) ok = coverage_ok(ei.x);
            if (ok && step(done + 1)) return true;
            used_x_[xi].reset(static_cast<std::size_t>(c));
            used_z_[zi].reset(static_cast<std::size_t>(c));
            color_[pick] = 0;
        }
        return false;
    }

    const AuxMultigraph& h_;
    const DegreeVector& d_;
    std::vector<int> color_;
    std::vector<Palette> allowed_x_;
    std::vector<Palette> used_x_;
    std::vector<Palette> used_z_;
};

}  // namespace

std::optional<EdgeColoring> exact_sequential_color(const AuxMultigraph& h, const DegreeVector& d)
{
    if (static_cast<int>(d.size()) != h.x_count() || h.x_degrees() != d) return std::nullopt;
    if (!d.empty() && *std::max_element(d.begin(), d.end()) > kMaxPalette) {
        throw Error("exact_sequential_color: palette larger than " + std::to_string(kMaxPalette));
    }
    ExactColoring search(h, d);
    if (!search.run()) return std::nullopt;
    return search.result();
}

ColoringOutcome sequential_color(const AuxMultigraph& h, const DegreeVector& d, SolverMode mode)
{
    ColoringOutcome out;
    auto accept = [&](EdgeColoring c, SolverPath path) {
        if (!is_sequential(h, c, d)) throw VerificationFailed("solver returned a non-sequential coloring");
        out.status = ColoringStatus::Colored;
        out.coloring = std::move(c);
        out.path = path;
    };

    if (mode != SolverMode::Exact) {
        auto c = heuristic_sequential_color(h, d, &out.kempe_swaps, &out.heuristic_note);
        if (c) {
            accept(std::move(*c), SolverPath::Heuristic);
            return out;
        }
        if (mode == SolverMode::Heuristic) {
            out.status = ColoringStatus::HeuristicFailed;
            out.path = SolverPath::Heuristic;
            return out;
        }
    }
    auto c = exact_sequential_color(h, d);
    const SolverPath path = mode == SolverMode::Exact ? SolverPath::Exact : SolverPath::Fallback;
    if (c) {
        accept(std::move(*c), path);
    } else {
        out.status = ColoringStatus::Unsatisfiable;
        out.path = path;
    }
    return out;
}

Decomposition forests_from_coloring(const AuxMultigraph& h, const EdgeColoring& c)
{
    if (c.color.size() != h.size()) throw LengthMismatch("coloring does not match the multigraph");
    std::vector<std::vector<Edge>> parts(static_cast<std::size_t>(h.z_count()));
    for (EdgeId e = 0; e < h.size(); ++e) {
        const EdgeInstance& ei = h.edges()[e];
        parts[static_cast<std::size_t>(ei.z - 1)].push_back({ei.x, c.color[e]});
    }
    Decomposition d;
    for (auto& p : parts) {
        std::sort(p.begin(), p.end());
        d.forests.emplace_back(std::move(p));
    }
    return d;
}

ColoredMultigraph coloring_from_forests(const BipartiteGraph& g, const Decomposition& d)
{
    if (!is_reduced(g)) throw NotReduced("coloring_from_forests needs a reduced host graph");
    const int k = g.k();
    const int n = static_cast<int>(d.size());
    IntMatrix a(k, n);
    std::vector<std::vector<int>> leaves(static_cast<std::size_t>(k) * static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (const Edge& e : d.forests[static_cast<std::size_t>(j)].edges()) {
            if (e.x < 1 || e.x > k) throw Error("forest edge outside the host graph");
            ++a(e.x - 1, j);
            leaves[static_cast<std::size_t>((e.x - 1) * n + j)].push_back(e.y);
        }
    }
    ColoredMultigraph out{a, AuxMultigraph(a), EdgeColoring{}};
    out.coloring.color.assign(out.multigraph.size(), 0);
    for (int x = 1; x <= k; ++x) {
        for (int z = 1; z <= n; ++z) {
            auto& ys = leaves[static_cast<std::size_t>((x - 1) * n + (z - 1))];
            std::sort(ys.begin(), ys.end());
            for (std::size_t c = 0; c < ys.size(); ++c) {
                out.coloring.color[out.multigraph.id_of(x, z, static_cast<int>(c + 1))] = ys[c];
            }
        }
    }
    return out;
}

}  // namespace sfasd
