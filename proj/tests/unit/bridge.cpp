#include "bridge.hpp"

#include "grpi/harness/group_file.hpp"

namespace bridge {

grpi::GroupHandle make(const grpi::harness::GroupFile& f) {
  return grpi::harness::to_group(f).with_label(f.name);
}

grpi::GroupHandle group(std::size_t degree, const std::vector<std::string>& cycles) {
  std::vector<grpi::Permutation> gens;
  for (const auto& c : cycles) gens.push_back(grpi::Permutation::from_cycles(c, degree));
  return grpi::group_from_generators(degree, std::move(gens));
}

grpi::Subgroup sub(const grpi::GroupHandle& g, const std::vector<std::string>& cycles) {
  std::vector<grpi::Permutation> gens;
  for (const auto& c : cycles) gens.push_back(grpi::Permutation::from_cycles(c, g.degree()));
  return grpi::Subgroup::generated(g, std::move(gens));
}

oracle::Table table_of(const grpi::GroupHandle& g) {
  std::vector<std::string> gens;
  for (const auto& x : g.generators()) gens.push_back(x.to_cycles());
  return oracle::from_cycles(gens, static_cast<int>(g.degree()));
}

oracle::Set set_of(const oracle::Table& t, const grpi::GroupHandle& h) {
  oracle::Set s(t.order(), false);
  for (const auto& x : grpi::elements(h)) {
    oracle::Perm p(x.images().begin(), x.images().end());
    s.at(static_cast<std::size_t>(t.index_of(p))) = true;
  }
  return s;
}

grpi::Subgroup subgroup_of(const grpi::GroupHandle& g, const oracle::Table& t, const oracle::Set& s) {
  std::vector<grpi::Permutation> gens;
  for (std::size_t i = 0; i < t.order(); ++i) {
    if (!s[i]) continue;
    std::vector<grpi::Point> images(t.elements[i].begin(), t.elements[i].end());
    gens.emplace_back(std::move(images));
  }
  return grpi::Subgroup::generated(g, std::move(gens));
}

std::vector<grpi::GroupHandle> corpus(std::uint64_t max_order) {
  std::vector<grpi::GroupHandle> out;
  for (const auto& f : grpi::harness::corpus_groups(max_order)) {
    auto g = make(f);
    if (g.order() <= max_order) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace bridge
