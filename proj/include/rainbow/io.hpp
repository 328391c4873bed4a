#pragma once

#include <filesystem>
#include <string>

#include "rainbow/core.hpp"

namespace rainbow {

inline constexpr const char* kColoringFormat = "rainbow-coloring/1";

/// Canonical text form: a JSON document with a format tag, the vertex
/// count, and one [u, v, c] record per edge with u < v, sorted
/// lexicographically. Reading a written coloring reproduces it edge for
/// edge.
std::string coloring_to_string(const ColoredGraph& g);

/// Parses and validates a coloring document. Malformed documents raise
/// ParseError with field diagnostics; improper colorings surface the
/// underlying NotProper.
ColoredGraph coloring_from_string(const std::string& text, const std::string& source);

void write_coloring(const ColoredGraph& g, const std::filesystem::path& path);
ColoredGraph read_coloring(const std::filesystem::path& path);

/// fnv1a-64 over the file bytes, as "fnv1a64:<16 hex digits>". Used in run
/// manifests to tie reports to their inputs and outputs.
std::string file_digest(const std::filesystem::path& path);

}  // namespace rainbow
