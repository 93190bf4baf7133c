#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "jsplit/bimodule.hpp"
#include "jsplit/splitting.hpp"
#include "jsplit/superalgebra.hpp"

namespace jsplit {

// Algebra:   {"name","dim","parity":[0|1..],"basis":[..],"unit":[rationals]|null,"constants":[[i,j,k,"p/q"],..]}
// Bimodule:  {"name","dim","parity","basis","algebra":{algebra},"action":[[a,j,k,"p/q"],..]}
// Extension: the algebra fields of E plus "ideal":[..], and optionally "model":{algebra} and
//            "section":[[model_index, E_index, "p/q"],..].
// Entries are 0-based, nonzero only, sorted lexicographically. Rationals are "p/q" or "p".
// Readers throw UsageError on malformed documents.

std::string to_json(const Superalgebra& a);
Superalgebra algebra_from_json(std::string_view text);

std::string to_json(const Superbimodule& m);
Superbimodule bimodule_from_json(std::string_view text);

std::string to_json(const MarkedExtension& ext);
/// Requires "ideal"; "model" and "section" must be both present or both absent.
/// Without them the returned extension has an empty model and section.
MarkedExtension extension_from_json(std::string_view text);

/// Re-lays out a JSON document: objects one key per line, arrays of scalars on one line,
/// arrays of containers one element per line.
std::string format_json(std::string_view text);

/// Throws UsageError when the file cannot be read or written.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace jsplit
