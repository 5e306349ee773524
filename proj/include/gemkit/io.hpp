#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "gemkit/degree.hpp"
#include "gemkit/gem.hpp"

namespace gemkit {

// GemDocument: a JSON object with format_version, dimension, labels, edges,
// and an optional map section {target, assignment}.  Serialization is
// canonical (edges sorted, fixed field order), so equal gems produce equal
// bytes.

std::string serialize(const Gem& gem);
std::string serialize(const ColoredVertexMap& map);

struct ParsedDocument {
    Gem gem;                             // the document's (source) gem
    std::optional<ColoredVertexMap> map; // present when the map section is
};

// Parses and validates a document.  JSON or schema problems raise
// SyntaxError; gem validation errors pass through with their own codes.  A
// string-valued map target is read as a file path relative to `base_dir`
// (SyntaxError when no base directory is available).
ParsedDocument parse_document(const std::string& text,
                              const std::optional<std::filesystem::path>& base_dir = {});

// Reads a document from disk; resolves string map targets relative to the
// file's directory.
ParsedDocument parse_document_file(const std::filesystem::path& path);

// GraphViz rendering with edges labeled by color and parallel edges grouped.
// Export only; parse_document rejects it with SyntaxError.
std::string export_dot(const Gem& gem);

} // namespace gemkit
