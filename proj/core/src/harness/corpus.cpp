#include "grpi/harness/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "grpi/errors.hpp"
#include "grpi/limits.hpp"
#include "grpi/structure.hpp"

namespace grpi::harness {

namespace {

std::string cycle(std::size_t offset, std::size_t length) {
  std::string out = "(";
  for (std::size_t i = 0; i < length; ++i) {
    if (i) out += ' ';
    out += std::to_string(offset + i);
  }
  return out + ")";
}

std::string file_name_for(const std::string& name) {
  std::string out;
  for (char c : name) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
    out += keep ? c : '_';
  }
  return out + ".grp";
}

std::string shifted(const std::string& cycles, std::size_t degree, std::size_t offset,
                    std::size_t total) {
  const Permutation p = Permutation::from_cycles(cycles, degree);
  std::vector<Point> images(total);
  for (std::size_t i = 0; i < total; ++i) images[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < degree; ++i) images[offset + i] = static_cast<Point>(offset + p(static_cast<Point>(i)));
  return Permutation(std::move(images)).to_cycles();
}

std::uint64_t order_of(const GroupFile& f) { return to_group(f).order(); }

}  // namespace

GroupFile cyclic_group(std::uint64_t n) {
  GroupFile f{"C" + std::to_string(n), 0, {}, {"cyclic"}};
  std::string gen;
  std::uint64_t rest = n;
  for (std::uint64_t q = 2; rest > 1; ++q) {
    std::uint64_t part = 1;
    while (rest % q == 0) {
      rest /= q;
      part *= q;
    }
    if (part == 1) continue;
    gen += cycle(f.degree, part);
    f.degree += part;
  }
  if (f.degree == 0) {  // trivial group
    f.degree = 1;
    gen = "()";
  }
  f.generator_lines.push_back(gen);
  return f;
}

GroupFile dihedral_group(std::uint64_t n) {
  GroupFile f{"D" + std::to_string(2 * n), n, {cycle(0, n)}, {"dihedral"}};
  std::string reflection;
  for (std::uint64_t i = 1; i < n - i; ++i) {
    reflection += "(" + std::to_string(i) + " " + std::to_string(n - i) + ")";
  }
  f.generator_lines.push_back(reflection);
  return f;
}

GroupFile symmetric_group(std::size_t n) {
  return {"S" + std::to_string(n), n, {cycle(0, n), "(0 1)"}, {"symmetric"}};
}

GroupFile alternating_group(std::size_t n) {
  GroupFile f{"A" + std::to_string(n), n, {"(0 1 2)"}, {"alternating"}};
  if (n > 3) f.generator_lines.push_back(n % 2 ? cycle(0, n) : cycle(1, n - 1));
  return f;
}

GroupFile elementary_abelian_group(std::uint64_t p, unsigned rank) {
  GroupFile f{"C" + std::to_string(p) + "^" + std::to_string(rank), p * rank, {},
              {"elementary-abelian"}};
  for (unsigned i = 0; i < rank; ++i) f.generator_lines.push_back(cycle(i * p, p));
  return f;
}

GroupFile quaternion_group() {
  // Right-regular action on 1, i, -1, -i, j, -j, k, -k  (points 0..7).
  return {"Q8", 8, {"(0 1 2 3)(4 7 5 6)", "(0 4 2 5)(1 6 3 7)"}, {"quaternion"}};
}

GroupFile direct_product(const GroupFile& a, const GroupFile& b, std::string name) {
  const std::size_t total = a.degree + b.degree;
  GroupFile f{std::move(name), total, {}, {"product"}};
  for (const auto& g : a.generator_lines) f.generator_lines.push_back(shifted(g, a.degree, 0, total));
  for (const auto& g : b.generator_lines) {
    f.generator_lines.push_back(shifted(g, b.degree, a.degree, total));
  }
  return f;
}

std::vector<GroupFile> corpus_groups(std::uint64_t max_order) {
  std::vector<GroupFile> out;
  std::set<std::string> names;
  auto add = [&](GroupFile f, bool fixture) {
    if (names.count(f.name)) {
      auto it = std::find_if(out.begin(), out.end(), [&](const GroupFile& g) { return g.name == f.name; });
      if (fixture && !std::count(it->tags.begin(), it->tags.end(), "fixture")) it->tags.push_back("fixture");
      return;
    }
    if (!fixture && (f.degree > limits().degree_cap || order_of(f) > max_order)) return;
    if (fixture) f.tags.push_back("fixture");
    names.insert(f.name);
    out.push_back(std::move(f));
  };

  for (std::uint64_t n = 2; n <= max_order; ++n) add(cyclic_group(n), false);
  for (std::uint64_t n = 3; 2 * n <= max_order; ++n) add(dihedral_group(n), false);
  for (std::size_t n = 3; n <= 5; ++n) add(symmetric_group(n), false);
  for (std::size_t n = 4; n <= 5; ++n) add(alternating_group(n), false);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (unsigned r = 2; r <= 3; ++r) add(elementary_abelian_group(p, r), false);
  }
  add(quaternion_group(), false);

  const std::vector<GroupFile> bases = {
      cyclic_group(2),   cyclic_group(3),     cyclic_group(4),
      cyclic_group(5),   cyclic_group(7),     elementary_abelian_group(2, 2),
      symmetric_group(3), dihedral_group(4),  quaternion_group(),
      dihedral_group(5), alternating_group(4), symmetric_group(4)};
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i; j < bases.size(); ++j) {
      const std::string reversed = bases[j].name + "x" + bases[i].name;
      if (names.count(reversed)) continue;
      add(direct_product(bases[i], bases[j], bases[i].name + "x" + bases[j].name), false);
    }
  }

  // Acceptance fixtures.
  add(symmetric_group(4), true);
  add(alternating_group(4), true);
  add(dihedral_group(4), true);
  add(symmetric_group(3), true);
  add(direct_product(symmetric_group(3), cyclic_group(2), "S3xC2"), true);
  add(direct_product(cyclic_group(6), symmetric_group(3), "C6xS3"), true);
  add(direct_product(cyclic_group(5), alternating_group(5), "C5xA5"), true);
  return out;
}

std::vector<ManifestEntry> build_corpus(std::uint64_t max_order,
                                        const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw GroupError(ErrorCode::io_error, "cannot create " + out_dir.string() + ": " + ec.message());

  std::vector<ManifestEntry> entries;
  nlohmann::json manifest = nlohmann::json::object();
  for (const auto& f : corpus_groups(max_order)) {
    ManifestEntry e{file_name_for(f.name), f.name, f.degree, order_of(f), f.tags};
    std::ofstream out(out_dir / e.file, std::ios::binary | std::ios::trunc);
    out << format_group_file(f);
    if (!out) throw GroupError(ErrorCode::io_error, "cannot write " + (out_dir / e.file).string());
    manifest[e.file] = {{"name", e.name}, {"degree", e.degree}, {"order", e.order}, {"tags", e.tags}};
    entries.push_back(std::move(e));
  }
  std::ofstream out(out_dir / "manifest.json", std::ios::binary | std::ios::trunc);
  out << manifest.dump(2) << '\n';
  if (!out) throw GroupError(ErrorCode::io_error, "cannot write manifest in " + out_dir.string());
  return entries;
}

bool CorpusGroup::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::vector<CorpusGroup> load_corpus(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json", std::ios::binary);
  if (!in) throw GroupError(ErrorCode::io_error, "no manifest.json in " + dir.string());
  nlohmann::json manifest;
  try {
    in >> manifest;
  } catch (const nlohmann::json::exception& e) {
    throw GroupError(ErrorCode::io_error, "malformed manifest: " + std::string(e.what()));
  }
  std::vector<CorpusGroup> out;
  for (const auto& [file, meta] : manifest.items()) {
    GroupHandle g = load_group_file(dir / file);
    if (g.order() != meta.at("order").get<std::uint64_t>()) {
      throw GroupError(ErrorCode::io_error, file + ": order " + std::to_string(g.order()) +
                                                " disagrees with the manifest");
    }
    out.push_back({file, meta.at("tags").get<std::vector<std::string>>(),
                   g.with_label(meta.at("name").get<std::string>())});
  }
  return out;
}

}  // namespace grpi::harness
