#include "gemkit/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gemkit {

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

json gem_to_json(const Gem& gem) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["dimension"] = gem.dimension();
    json labels = json::array();
    for (const VertexLabel& l : gem.labels()) labels.push_back(l.name);
    doc["labels"] = std::move(labels);
    json edges = json::array();
    for (const ColoredEdge& e : gem.edges()) edges.push_back({e.u, e.v, e.color});
    doc["edges"] = std::move(edges);
    return doc;
}

[[noreturn]] void syntax_error(const std::string& what) {
    fail(Err::SyntaxError, what);
}

int require_int(const json& doc, const char* field) {
    if (!doc.contains(field) || !doc[field].is_number_integer())
        syntax_error(std::string("missing or non-integer field '") + field + "'");
    return doc[field].get<int>();
}

Gem gem_from_json(const json& doc) {
    if (!doc.is_object()) syntax_error("document is not a JSON object");
    if (require_int(doc, "format_version") != kFormatVersion)
        syntax_error("unsupported format_version");
    int dimension = require_int(doc, "dimension");

    if (!doc.contains("labels") || !doc["labels"].is_array())
        syntax_error("missing or non-array field 'labels'");
    std::vector<VertexLabel> labels;
    for (const auto& item : doc["labels"]) {
        if (!item.is_string()) syntax_error("labels must be strings");
        labels.push_back(VertexLabel::named(item.get<std::string>()));
    }

    if (!doc.contains("edges") || !doc["edges"].is_array())
        syntax_error("missing or non-array field 'edges'");
    std::vector<ColoredEdge> edges;
    size_t index = 0;
    for (const auto& item : doc["edges"]) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number_integer())
            syntax_error("edges[" + std::to_string(index) + "] must be [u, v, color]");
        edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<int>()});
        ++index;
    }
    return Gem(dimension, std::move(labels), std::move(edges));
}

} // namespace

std::string serialize(const Gem& gem) { return gem_to_json(gem).dump(2) + "\n"; }

std::string serialize(const ColoredVertexMap& map) {
    json doc = gem_to_json(map.source);
    json section;
    section["target"] = gem_to_json(map.target);
    section["assignment"] = map.assignment;
    doc["map"] = std::move(section);
    return doc.dump(2) + "\n";
}

ParsedDocument parse_document(const std::string& text,
                              const std::optional<std::filesystem::path>& base_dir) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        syntax_error(std::string("not a valid JSON document: ") + e.what());
    }
    Gem gem = gem_from_json(doc);
    if (!doc.contains("map")) return {std::move(gem), std::nullopt};

    const json& section = doc["map"];
    if (!section.is_object() || !section.contains("target") ||
        !section.contains("assignment") || !section["assignment"].is_array())
        syntax_error("map section needs 'target' and an 'assignment' array");

    Gem target = [&]() -> Gem {
        const json& t = section["target"];
        if (t.is_object()) return gem_from_json(t);
        if (t.is_string()) {
            if (!base_dir)
                syntax_error("map target is a path but the document has no base directory");
            return parse_document_file(*base_dir / t.get<std::string>()).gem;
        }
        syntax_error("map target must be an inline document or a path");
    }();

    std::vector<VertexId> assignment;
    for (const auto& item : section["assignment"]) {
        if (!item.is_number_integer()) syntax_error("assignment entries must be integers");
        assignment.push_back(item.get<int>());
    }
    ColoredVertexMap m = make_map(std::move(gem), std::move(target), std::move(assignment));
    Gem source_copy = m.source;
    return {std::move(source_copy), std::move(m)};
}

ParsedDocument parse_document_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(Err::SyntaxError, "cannot read " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path.parent_path());
}

std::string export_dot(const Gem& gem) {
    static const char* palette[] = {"red",    "blue",   "forestgreen", "orange",
                                    "purple", "brown",  "deeppink",    "cadetblue",
                                    "gold",   "gray40", "black"};
    constexpr int palette_size = 11;

    std::ostringstream out;
    out << "graph gem {\n";
    out << "  node [shape=circle fontsize=10];\n";
    for (VertexId v = 0; v < gem.vertex_count(); ++v)
        out << "  n" << v << " [label=\"" << gem.label(v).name << "\"];\n";

    // One line per colored edge; the canonical order keeps parallel edges of
    // a vertex pair adjacent.
    for (const ColoredEdge& e : gem.edges())
        out << "  n" << e.u << " -- n" << e.v << " [label=\"" << e.color << "\" color=\""
            << palette[e.color % palette_size] << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace gemkit
