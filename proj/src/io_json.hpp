#pragma once

#include <filesystem>

#include <json.hpp>

#include "lvdual/io.hpp"

namespace lvd::io {

using Json = nlohmann::ordered_json;

Json to_json(const Lattice& lattice);
Json to_json(const Algebra& algebra);
Json to_json(const System& system);
Json to_json(const Space& space);
Json to_json(const FormulaJob& job);

/// A lattice reference: the built-in name when there is one, else the inline document.
Json lattice_ref(const Lattice& lattice);

Document from_json(const Json& json, const std::filesystem::path& base_dir);

/// Reads and parses a JSON file. Throws UsageError when unreadable, ParseError when malformed.
Json read_json(const std::filesystem::path& path);

}  // namespace lvd::io
