#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toroidal/towers.hpp"

namespace toroidal {

/// Environment variable naming a directory of extra tower files (*.json).
inline constexpr const char* kCatalogDirEnv = "TOROIDAL_CATALOG_DIR";

/// The built-in towers, in a fixed order.
std::vector<Tower> builtin_catalog();

/// K_i = T(i+1, i+2) for i >= 1.
KnotExpr mask_knot(std::size_t i);

/**
 * Connected-sum tower for a binary mask: over the unknot, stage i of the
 * prefix swallows K_i when bit i is '1' and is a core parallel otherwise;
 * the cycle swallows K_{n+1} forever, n being the mask length.
 * Throws ValidationError on an empty mask or characters other than 0/1.
 */
Tower mask_tower(std::string_view bits);

/// Names available to find_catalog_tower(): built-ins, then files from the
/// override directory (file stem), sorted within each group.
std::vector<std::string> catalog_names(
    const std::optional<std::filesystem::path>& dir = std::nullopt);

/// Looks up a built-in name, "mask:<bits>", or a file in `dir`. Files in
/// `dir` shadow built-ins of the same name. Throws Error if not found.
Tower find_catalog_tower(std::string_view name,
                         const std::optional<std::filesystem::path>& dir = std::nullopt);

/// Directory from kCatalogDirEnv, if set and nonempty.
std::optional<std::filesystem::path> catalog_dir_from_env();

}  // namespace toroidal
