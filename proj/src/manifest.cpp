// Copyright 2026 The lttpkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "lttp/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "lttp/diag.hpp"
#include "lttp/error.hpp"

namespace lttp {

const char* role_name(Role role) {
    return role == Role::Gallery ? "gallery" : "probe";
}

std::vector<std::size_t> DatasetManifest::gallery_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].role == Role::Gallery) out.push_back(i);
    return out;
}

std::vector<std::size_t> DatasetManifest::probe_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i].role == Role::Probe) out.push_back(i);
    return out;
}

std::filesystem::path DatasetManifest::resolve(const ManifestEntry& e) const {
    std::filesystem::path p(e.path);
    if (p.is_absolute() || base_dir.empty()) return p;
    return base_dir / p;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, ',')) fields.push_back(trim(cur));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

Role parse_role(const std::string& token, int lineno) {
    if (token == "gallery") return Role::Gallery;
    if (token == "probe") return Role::Probe;
    throw ValidationError("manifest line " + std::to_string(lineno) + ": unknown role \"" +
                          token + "\" (expected gallery|probe)");
}

} // namespace

DatasetManifest parse_manifest(std::istream& in, const std::filesystem::path& base_dir) {
    DatasetManifest manifest;
    manifest.base_dir = base_dir;

    std::string line;
    int lineno = 0;
    bool saw_header = false;
    std::set<std::pair<std::string, Role>> seen;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (!saw_header) {
            const auto fields = split_csv(t);
            if (fields.size() != 3 || fields[0] != "path" || fields[1] != "subject" ||
                fields[2] != "role")
                throw ValidationError("manifest: missing header \"path,subject,role\"");
            saw_header = true;
            continue;
        }
        const auto fields = split_csv(t);
        if (fields.size() != 3)
            throw ValidationError("manifest line " + std::to_string(lineno) +
                                  ": expected 3 fields, got " + std::to_string(fields.size()));
        ManifestEntry e;
        e.path = fields[0];
        e.subject = fields[1];
        e.role = parse_role(fields[2], lineno);
        if (e.path.empty() || e.subject.empty())
            throw ValidationError("manifest line " + std::to_string(lineno) +
                                  ": empty path or subject");
        if (!seen.insert({e.path, e.role}).second)
            throw ValidationError("manifest line " + std::to_string(lineno) +
                                  ": duplicate (path, role) pair: " + e.path + "," +
                                  role_name(e.role));
        manifest.entries.push_back(std::move(e));
    }

    if (!saw_header) throw ValidationError("manifest: missing header \"path,subject,role\"");
    if (manifest.entries.empty()) throw ValidationError("manifest: no entries");

    // warn-level check: each probe subject should be enrolled in the gallery
    std::set<std::string> gallery_subjects;
    for (const auto& e : manifest.entries)
        if (e.role == Role::Gallery) gallery_subjects.insert(e.subject);
    std::set<std::string> warned;
    for (const auto& e : manifest.entries) {
        if (e.role == Role::Probe && !gallery_subjects.count(e.subject) &&
            warned.insert(e.subject).second)
            warn("probe subject \"" + e.subject + "\" has no gallery entry");
    }

    return manifest;
}

DatasetManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest: " + path.string());
    return parse_manifest(in, path.parent_path());
}

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << "path,subject,role\n";
    for (const auto& e : manifest.entries)
        out << e.path << ',' << e.subject << ',' << role_name(e.role) << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace lttp
