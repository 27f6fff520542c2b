#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "grpi/group.hpp"

namespace grpi::harness {

/// Line-oriented group description:
///
///   # comment
///   name <text>
///   degree <n>
///   gen <cycles>        one or more, 0-based points, e.g. (0 1 2)(3 4)
///   tag <text>          optional, repeatable
struct GroupFile {
  std::string name;
  std::size_t degree = 0;
  std::vector<std::string> generator_lines;
  std::vector<std::string> tags;
};

/// Throws ParseError (with the offending line) on malformed input and
/// GroupError for out-of-range points or non-bijective cycles.
GroupFile parse_group_file_text(std::string_view text);
GroupHandle to_group(const GroupFile& file);
GroupHandle parse_group_file(std::string_view text);
GroupHandle load_group_file(const std::filesystem::path& path);

std::string format_group_file(const GroupFile& file);

}  // namespace grpi::harness
