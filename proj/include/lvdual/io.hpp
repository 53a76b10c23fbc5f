#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "lvdual/algebra.hpp"
#include "lvdual/logic.hpp"
#include "lvdual/spaces.hpp"
#include "lvdual/systems.hpp"

namespace lvd {

enum class DocumentKind { Lattice, Algebra, System, Space, Morphism, FormulaJob };
std::string_view to_string(DocumentKind kind);

enum class MorphismType { SystemMap, SpaceMap, Homomorphism };
std::string_view to_string(MorphismType type);

struct MorphismDocument {
  MorphismType type;
  std::optional<SystemMap> system_map;
  std::optional<SpaceMap> space_map;
  std::optional<Homomorphism> homomorphism;
};

struct FormulaJob {
  LatticePtr lattice;
  std::string text;
  Formula formula;
  std::optional<KripkeModel> model;
  AlgebraPtr algebra;  ///< null when the job has no algebra
  std::optional<std::size_t> world;
  std::optional<Assignment> assignment;
};

/// A parsed, cross-validated input document. `lattice` is always set; the
/// other members are filled according to `kind`.
struct Document {
  DocumentKind kind;
  LatticePtr lattice;
  AlgebraPtr algebra;
  SystemPtr system;
  SpacePtr space;
  std::optional<MorphismDocument> morphism;
  std::optional<FormulaJob> job;
};

/// References to other documents are either inline objects or strings. A
/// lattice string naming L2, L3, L4 or diamond resolves to the built-in
/// lattice; any other string is a path relative to the referring file.
/// Throws ParseError, SchemaError and DanglingReference.
Document load(const std::filesystem::path& path);
Document load_text(std::string_view text, const std::filesystem::path& base_dir = ".");

LatticePtr builtin_lattice(std::string_view name);  ///< null when unknown

/// Canonical JSON text (two-space indent, trailing newline). Loading the
/// text and serializing again yields the same bytes.
std::string serialize(const Lattice& lattice);
std::string serialize(const Algebra& algebra);
std::string serialize(const System& system);
std::string serialize(const Space& space);
std::string serialize(const FormulaJob& job);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace lvd
