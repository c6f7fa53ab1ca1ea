#include "sfasd/io.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sfasd/errors.hpp"

namespace sfasd {

using ojson = nlohmann::ordered_json;

namespace {

void require_keys(const nlohmann::json& obj, const std::set<std::string>& keys, const std::string& what)
{
    if (!obj.is_object()) throw MalformedInput(what + " must be a JSON object");
    for (const auto& [key, value] : obj.items()) {
        if (!keys.contains(key)) throw MalformedInput(what + ": unknown field '" + key + "'");
    }
    for (const auto& key : keys) {
        if (!obj.contains(key)) throw MalformedInput(what + ": missing field '" + key + "'");
    }
}

int get_int(const nlohmann::json& v, const std::string& what)
{
    if (!v.is_number_integer()) throw MalformedInput(what + " must be an integer");
    return v.get<int>();
}

std::vector<Edge> get_edges(const nlohmann::json& v, const std::string& what)
{
    if (!v.is_array()) throw MalformedInput(what + " must be an array");
    std::vector<Edge> edges;
    for (const auto& pair : v) {
        if (!pair.is_array() || pair.size() != 2) throw MalformedInput(what + ": each edge must be [x, y]");
        edges.push_back({get_int(pair[0], "edge endpoint"), get_int(pair[1], "edge endpoint")});
    }
    return edges;
}

nlohmann::json parse_json(const std::string& text)
{
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedInput(std::string("invalid JSON: ") + e.what());
    }
}

ojson edges_json(const std::vector<Edge>& edges)
{
    ojson arr = ojson::array();
    for (const Edge& e : edges) arr.push_back({e.x, e.y});
    return arr;
}

}  // namespace

Format parse_format(const std::string& s)
{
    if (s == "json") return Format::Json;
    if (s == "edgelist") return Format::EdgeList;
    if (s == "auto") return Format::Auto;
    throw MalformedInput("unknown format '" + s + "'");
}

BipartiteGraph parse_instance(const std::string& text, Format format)
{
    if (format == Format::Auto) {
        const auto pos = text.find_first_not_of(" \t\r\n");
        format = pos != std::string::npos && text[pos] == '{' ? Format::Json : Format::EdgeList;
    }
    if (format == Format::Json) {
        const nlohmann::json doc = parse_json(text);
        require_keys(doc, {"k", "m", "edges"}, "instance");
        return BipartiteGraph(get_int(doc["k"], "k"), get_int(doc["m"], "m"), get_edges(doc["edges"], "edges"));
    }

    std::istringstream in(text);
    std::string line;
    std::optional<std::pair<int, int>> header;
    std::vector<Edge> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        long long a = 0;
        long long b = 0;
        if (!(fields >> a)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw MalformedInput("line " + std::to_string(lineno) + ": expected two integers");
        }
        std::string rest;
        if (!(fields >> b) || (fields >> rest)) {
            throw MalformedInput("line " + std::to_string(lineno) + ": expected exactly two integers");
        }
        if (!header) {
            header = std::pair<int, int>(static_cast<int>(a), static_cast<int>(b));
        } else {
            edges.push_back({static_cast<int>(a), static_cast<int>(b)});
        }
    }
    if (!header) throw MalformedInput("edge list has no 'k m' header");
    return BipartiteGraph(header->first, header->second, std::move(edges));
}

std::string emit_instance(const BipartiteGraph& g, Format format)
{
    if (format == Format::EdgeList) {
        std::ostringstream out;
        out << g.k() << ' ' << g.m() << '\n';
        for (const Edge& e : g.edges()) out << e.x << ' ' << e.y << '\n';
        return out.str();
    }
    ojson doc;
    doc["k"] = g.k();
    doc["m"] = g.m();
    doc["edges"] = edges_json(g.edges());
    return doc.dump() + '\n';
}

std::string emit_certificate(const Certificate& c)
{
    ojson doc;
    doc["n"] = c.n;
    ojson forests = ojson::array();
    for (const StarForest& f : c.decomposition.forests) {
        ojson entry;
        entry["size"] = f.size();
        entry["edges"] = edges_json(f.edges());
        forests.push_back(std::move(entry));
    }
    doc["forests"] = std::move(forests);
    doc["verified"] = c.verified;
    doc["solverPath"] = c.solver_path;
    return doc.dump(2) + '\n';
}

Certificate parse_certificate(const std::string& text)
{
    const nlohmann::json doc = parse_json(text);
    require_keys(doc, {"n", "forests", "verified", "solverPath"}, "certificate");
    Certificate c;
    c.n = get_int(doc["n"], "n");
    if (!doc["verified"].is_boolean()) throw MalformedInput("verified must be a boolean");
    c.verified = doc["verified"].get<bool>();
    if (!doc["solverPath"].is_string()) throw MalformedInput("solverPath must be a string");
    c.solver_path = doc["solverPath"].get<std::string>();
    if (!doc["forests"].is_array()) throw MalformedInput("forests must be an array");
    for (const auto& f : doc["forests"]) {
        require_keys(f, {"size", "edges"}, "forest");
        std::vector<Edge> edges = get_edges(f["edges"], "forest edges");
        if (get_int(f["size"], "size") != static_cast<int>(edges.size())) {
            throw MalformedInput("forest size does not match its edge count");
        }
        c.decomposition.forests.emplace_back(std::move(edges));
    }
    return c;
}

std::string to_dot(const BipartiteGraph& g, const std::optional<Decomposition>& d)
{
    static constexpr std::array<const char*, 10> kPalette = {
        "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
        "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    std::ostringstream out;
    out << "graph G {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
    out << "  subgraph cluster_X {\n    label=\"X\";\n";
    for (int x = 1; x <= g.k(); ++x) out << "    x" << x << ";\n";
    out << "  }\n  subgraph cluster_Y {\n    label=\"Y\";\n";
    for (int y = 1; y <= g.m(); ++y) out << "    y" << y << ";\n";
    out << "  }\n";
    if (!d) {
        for (const Edge& e : g.edges()) out << "  x" << e.x << " -- y" << e.y << ";\n";
    } else {
        for (std::size_t i = 0; i < d->forests.size(); ++i) {
            for (const Edge& e : d->forests[i].edges()) {
                out << "  x" << e.x << " -- y" << e.y << " [color=\"" << kPalette[i % kPalette.size()]
                    << "\", label=\"F" << i + 1 << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

}  // namespace sfasd
