// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace lttp {

enum class Role { Gallery, Probe };

const char* role_name(Role role);

struct ManifestEntry {
    std::string path;     ///< as written in the file (may be relative)
    std::string subject;
    Role role = Role::Gallery;
};

/// Probe/gallery split of a dataset, parsed from a CSV with header
/// `path,subject,role`. Entries keep file order. Immutable after load.
struct DatasetManifest {
    std::vector<ManifestEntry> entries;
    std::filesystem::path base_dir;  ///< relative entry paths resolve against this

    std::vector<std::size_t> gallery_indices() const;
    std::vector<std::size_t> probe_indices() const;

    /// Entry path resolved against base_dir.
    std::filesystem::path resolve(const ManifestEntry& e) const;
};

/// Parse manifest text. `base_dir` seeds DatasetManifest::base_dir.
/// Errors: missing/contradicting header, unknown role token, malformed row,
/// duplicate (path, role) pair, no entries at all.
/// A probe whose subject never appears in the gallery produces a warning,
/// not an error.
DatasetManifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir);

/// Load from disk; base_dir is the manifest's parent directory.
DatasetManifest load_manifest(const std::filesystem::path& path);

/// Write back in the canonical `path,subject,role` form.
void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

} // namespace lttp
