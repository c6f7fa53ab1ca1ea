#ifndef SFASD_IO_HPP
#define SFASD_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "sfasd/graph_core.hpp"

namespace sfasd {

enum class Format { Json, EdgeList, Auto };

Format parse_format(const std::string& s);

/// JSON: {"k": int, "m": int, "edges": [[x, y], ...]}, unknown keys rejected.
/// Edge list: header "k m" then one "x y" pair per line; '#' starts a comment.
/// Auto picks JSON when the first non-blank character is '{'.
/// Throws MalformedInput (or MalformedGraph for an ill-formed edge set).
BipartiteGraph parse_instance(const std::string& text, Format format = Format::Auto);
std::string emit_instance(const BipartiteGraph& g, Format format = Format::Json);

/// Certificate file: {"n", "forests": [{"size", "edges"}], "verified", "solverPath"},
/// keys in that order.
struct Certificate {
    int n = 0;
    Decomposition decomposition;
    bool verified = false;
    std::string solver_path;
};

std::string emit_certificate(const Certificate& c);
/// Strict: unknown keys, wrong types, or size != |edges| raise MalformedInput.
Certificate parse_certificate(const std::string& text);

/// Graphviz rendering; with a decomposition, each forest gets its own color
/// and an "F<i>" label on its edges.
std::string to_dot(const BipartiteGraph& g, const std::optional<Decomposition>& d = std::nullopt);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace sfasd

#endif  // SFASD_IO_HPP
