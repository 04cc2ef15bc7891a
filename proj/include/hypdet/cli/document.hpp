#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "hypdet/orbifold/orbifold.hpp"
#include "hypdet/regdet/regdet.hpp"
#include "hypdet/zetas/scattering.hpp"

namespace hypdet::cli {

/// Version written to and accepted in the "schema" field.
inline constexpr int kSchemaVersion = 1;

/// A validated orbifold document.
///
/// Layout (JSON):
///   { "schema": 1, "genus": g, "cusps": c,
///     "elliptic": [{"order": d, "exponents": [q_1, ..., q_h]}, ...],
///     "rep_dim": h,
///     "cusp_data": [{"fixed_dim": k_j, "angles": [beta, ...]}, ...],
///     "scattering": {"model": "modular"} | {"model": "generic", "file": path},
///     "geodesics": {"file": path, "complete_to": N} }
///
/// "schema", "scattering" and "geodesics" are optional.  Angles are JSON
/// numbers (read as exact decimals) or strings "p/q".  Relative file paths
/// resolve against the directory of the document.
struct OrbifoldDocument {
  OrbifoldData orbifold = OrbifoldData::modular();
  /// Absent means the regular case: phi = 1, only permitted when k = 0.
  std::optional<ScatteringModel> scattering;
  std::optional<std::filesystem::path> geodesic_file;
  std::string geodesic_limit;
  /// Where the document came from, echoed in output headers.
  std::string origin;
};

/// Parses and validates a document.  ValidationError messages name the
/// offending field (e.g. "elliptic[1].exponents") or the line and column of
/// a JSON syntax error.
OrbifoldDocument parse_orbifold_document(std::string_view text, const std::filesystem::path& base_dir = {},
                                         std::string origin = "<memory>");

OrbifoldDocument load_orbifold_document(const std::filesystem::path& path);

/// The modular group with trivial chi and its closed-form scattering.
OrbifoldDocument builtin_modular_document();

/// Builds the evaluation context: the PSL(2, Z) word enumeration for the
/// modular signature with trivial chi, otherwise the document's geodesic
/// table.
SurfaceContext make_context(const OrbifoldDocument& doc, const ExtReal& norm_cutoff, unsigned threads = 0);

}  // namespace hypdet::cli
