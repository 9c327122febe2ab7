#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "forestlcs/certificate.hpp"
#include "forestlcs/forest.hpp"

namespace forestlcs {

// Edge-list documents: '#' comment lines and blank lines are skipped, the first
// remaining line is the vertex count, every further line is "u v".
Forest parse_forest(std::string_view text);
std::string serialize_forest(const Forest& f);

// Certificate documents: {"edges1": [[u,v],...], "edges2": [...], "map": [[x,y],...], "size": k}.
Certificate parse_certificate(std::string_view json_text);
std::string serialize_certificate(const Certificate& c);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

inline Forest read_forest(const std::filesystem::path& path) { return parse_forest(read_text_file(path)); }

}  // namespace forestlcs
