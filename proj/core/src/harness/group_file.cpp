#include "grpi/harness/group_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "grpi/errors.hpp"
#include "grpi/limits.hpp"

namespace grpi::harness {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

GroupFile parse_group_file_text(std::string_view text) {
  GroupFile out;
  std::vector<std::size_t> gen_line_numbers;
  bool have_degree = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    const auto space = line.find_first_of(" \t");
    const std::string_view key = line.substr(0, space);
    const std::string_view value =
        space == std::string_view::npos ? std::string_view{} : trim(line.substr(space));

    if (key == "name") {
      if (value.empty()) throw ParseError(ErrorCode::parse_error, line_no, "empty name");
      out.name = std::string(value);
    } else if (key == "degree") {
      if (have_degree) throw ParseError(ErrorCode::parse_error, line_no, "duplicate degree");
      std::size_t n = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
      if (ec != std::errc{} || ptr != value.data() + value.size() || n == 0) {
        throw ParseError(ErrorCode::parse_error, line_no,
                         "degree must be a positive integer, got '" + std::string(value) + "'");
      }
      if (n > limits().degree_cap) {
        throw ParseError(ErrorCode::invalid_degree, line_no,
                         "degree " + std::to_string(n) + " exceeds the cap of " +
                             std::to_string(limits().degree_cap));
      }
      out.degree = n;
      have_degree = true;
    } else if (key == "gen") {
      if (value.empty()) throw ParseError(ErrorCode::parse_error, line_no, "empty generator");
      out.generator_lines.emplace_back(value);
      gen_line_numbers.push_back(line_no);
    } else if (key == "tag") {
      if (!value.empty()) out.tags.emplace_back(value);
    } else {
      throw ParseError(ErrorCode::parse_error, line_no,
                       "unknown directive '" + std::string(key) + "'");
    }
  }
  if (!have_degree) throw ParseError(ErrorCode::parse_error, line_no, "missing degree");
  if (out.generator_lines.empty()) {
    throw ParseError(ErrorCode::parse_error, line_no, "no generators");
  }
  // Validate generators now so errors carry their line.
  for (std::size_t i = 0; i < out.generator_lines.size(); ++i) {
    try {
      (void)Permutation::from_cycles(out.generator_lines[i], out.degree);
    } catch (const ParseError&) {
      throw;
    } catch (const GroupError& e) {
      throw ParseError(e.code(), gen_line_numbers[i], e.what());
    }
  }
  return out;
}

GroupHandle to_group(const GroupFile& file) {
  std::vector<Permutation> gens;
  gens.reserve(file.generator_lines.size());
  for (const auto& g : file.generator_lines) gens.push_back(Permutation::from_cycles(g, file.degree));
  return GroupHandle(file.degree, std::move(gens), file.name);
}

GroupHandle parse_group_file(std::string_view text) {
  return to_group(parse_group_file_text(text));
}

GroupHandle load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GroupError(ErrorCode::io_error, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str());
}

std::string format_group_file(const GroupFile& file) {
  std::ostringstream out;
  out << "name " << file.name << '\n' << "degree " << file.degree << '\n';
  for (const auto& t : file.tags) out << "tag " << t << '\n';
  for (const auto& g : file.generator_lines) out << "gen " << g << '\n';
  return out.str();
}

}  // namespace grpi::harness
