#include "grpi/group.hpp"

#include <limits>

#include "grpi/errors.hpp"
#include "grpi/limits.hpp"

namespace grpi {

namespace {

bool fixes_all(const Permutation& g, std::span<const ChainLevel> levels) {
  for (const auto& level : levels) {
    if (g(level.base) != level.base) return false;
  }
  return true;
}

}  // namespace

StabilizerChain::StabilizerChain(std::size_t degree,
                                 std::span<const Permutation> generators)
    : degree_(degree) {
  if (degree == 0) {
    throw GroupError(ErrorCode::invalid_degree, "group of degree 0");
  }
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw GroupError(ErrorCode::degree_mismatch,
                       "generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree));
    }
    if (!g.is_identity()) gens.push_back(g);
  }

  for (const auto& g : gens) {
    if (fixes_all(g, levels_)) add_level(static_cast<Point>(g.first_moved_point()));
  }
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const auto& g : gens) {
      if (fixes_all(g, std::span(levels_).first(i))) levels_[i].generators.push_back(g);
    }
    rebuild_orbit(i);
  }

  if (levels_.empty()) return;
  std::size_t i = levels_.size() - 1;
  while (true) {
    std::size_t restart = 0;
    if (process_level(i, restart)) {
      i = restart;
      continue;
    }
    if (i == 0) break;
    --i;
  }
}

void StabilizerChain::add_level(Point base) {
  ChainLevel level;
  level.base = base;
  level.position.assign(degree_, -1);
  levels_.push_back(std::move(level));
}

void StabilizerChain::rebuild_orbit(std::size_t index) {
  ChainLevel& level = levels_[index];
  level.orbit.clear();
  level.transversal.clear();
  level.inverse_transversal.clear();
  std::fill(level.position.begin(), level.position.end(), -1);

  level.orbit.push_back(level.base);
  level.position[level.base] = 0;
  level.transversal.push_back(Permutation::identity(degree_));
  level.inverse_transversal.push_back(Permutation::identity(degree_));
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    for (const auto& s : level.generators) {
      Point y = s(level.orbit[k]);
      if (level.position[y] >= 0) continue;
      level.position[y] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(y);
      Permutation t = level.transversal[k] * s;
      level.inverse_transversal.push_back(t.inverse());
      level.transversal.push_back(std::move(t));
    }
  }
}

// Checks every Schreier generator of `index` against the chain below it. On
// the first one that fails to sift, extends the chain and reports the level
// from which processing has to resume.
bool StabilizerChain::process_level(std::size_t index, std::size_t& restart) {
  std::vector<Point> h(degree_);
  for (std::size_t k = 0; k < levels_[index].orbit.size(); ++k) {
    for (std::size_t si = 0; si < levels_[index].generators.size(); ++si) {
      const ChainLevel& level = levels_[index];
      const Permutation& t = level.transversal[k];
      const Permutation& s = level.generators[si];
      Point y = s(level.orbit[k]);
      const Permutation& t_inv = level.inverse_transversal[level.position[y]];
      bool trivial = true;
      for (std::size_t p = 0; p < degree_; ++p) {
        h[p] = t_inv(s(t(static_cast<Point>(p))));
        if (h[p] != p) trivial = false;
      }
      if (trivial) continue;

      Permutation schreier = PermutationBuilder::adopt(h);
      // Sift through the levels below `index`.
      std::size_t depth = index + 1;
      for (; depth < levels_.size(); ++depth) {
        const ChainLevel& below = levels_[depth];
        Point x = schreier(below.base);
        if (below.position[x] < 0) break;
        if (x != below.base) schreier = schreier * below.inverse_transversal[below.position[x]];
      }
      if (depth == levels_.size() && schreier.is_identity()) continue;

      if (depth == levels_.size()) {
        add_level(static_cast<Point>(schreier.first_moved_point()));
      }
      for (std::size_t l = index + 1; l <= depth; ++l) {
        levels_[l].generators.push_back(schreier);
        rebuild_orbit(l);
      }
      restart = depth;
      return true;
    }
  }
  return false;
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& level : levels_) out.push_back(level.base);
  return out;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    std::uint64_t len = level.orbit.size();
    if (result > std::numeric_limits<std::uint64_t>::max() / len) {
      throw GroupError(ErrorCode::order_overflow, "group order exceeds 2^64");
    }
    result *= len;
  }
  return result;
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& g) const {
  std::vector<Point> r(g.images().begin(), g.images().end());
  std::size_t depth = 0;
  for (; depth < levels_.size(); ++depth) {
    const ChainLevel& level = levels_[depth];
    Point x = r[level.base];
    std::int32_t pos = level.position[x];
    if (pos < 0) break;
    if (pos == 0) continue;
    const Permutation& inv = level.inverse_transversal[pos];
    for (auto& v : r) v = inv(v);
  }
  return {PermutationBuilder::adopt(std::move(r)), depth};
}

bool StabilizerChain::contains(const Permutation& g) const {
  auto [residue, depth] = sift(g);
  return depth == levels_.size() && residue.is_identity();
}

GroupHandle::GroupHandle(std::size_t degree, std::vector<Permutation> generators,
                         std::string label) {
  std::vector<Permutation> kept;
  for (auto& g : generators) {
    if (g.degree() != degree) {
      throw GroupError(ErrorCode::degree_mismatch,
                       "generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree));
    }
    if (!g.is_identity()) kept.push_back(std::move(g));
  }
  StabilizerChain chain(degree, kept);
  std::uint64_t order = chain.order();
  data_ = std::make_shared<const Data>(
      Data{std::move(kept), std::move(chain), order, std::move(label)});
}

GroupHandle GroupHandle::with_label(std::string label) const {
  return GroupHandle(std::make_shared<const Data>(
      Data{data_->generators, data_->chain, data_->order, std::move(label)}));
}

bool GroupHandle::contains(const Permutation& p) const {
  if (p.degree() != degree()) {
    throw GroupError(ErrorCode::degree_mismatch,
                     "membership test of a degree-" + std::to_string(p.degree()) +
                         " permutation in a degree-" + std::to_string(degree()) +
                         " group");
  }
  return data_->chain.contains(p);
}

GroupHandle group_from_generators(std::size_t degree,
                                  std::vector<Permutation> generators) {
  return GroupHandle(degree, std::move(generators));
}

bool contains(const GroupHandle& g, const Permutation& p) { return g.contains(p); }

void backtrack_elements(
    const GroupHandle& g,
    const std::function<bool(std::size_t, const Permutation&)>& prune,
    const std::function<bool(const Permutation&)>& visit) {
  const auto& levels = g.chain().levels();
  if (levels.empty()) {
    visit(Permutation::identity(g.degree()));
    return;
  }
  // partial[l] = u_l * u_{l-1} * ... * u_0, which fixes the images of the
  // base points 0..l.
  std::vector<Permutation> partial(levels.size());
  std::vector<std::size_t> cursor(levels.size(), 0);
  std::size_t depth = 0;
  while (true) {
    if (cursor[depth] == levels[depth].orbit.size()) {
      if (depth == 0) return;
      cursor[depth] = 0;
      --depth;
      ++cursor[depth];
      continue;
    }
    const Permutation& u = levels[depth].transversal[cursor[depth]];
    partial[depth] = depth == 0 ? u : u * partial[depth - 1];
    if (prune && !prune(depth, partial[depth])) {
      ++cursor[depth];
      continue;
    }
    if (depth + 1 == levels.size()) {
      if (!visit(partial[depth])) return;
      ++cursor[depth];
    } else {
      ++depth;
    }
  }
}

void for_each_element(const GroupHandle& g,
                      const std::function<bool(const Permutation&)>& visit) {
  backtrack_elements(g, nullptr, visit);
}

std::vector<Permutation> elements(const GroupHandle& g) {
  if (g.order() > limits().enumeration_cap) {
    throw GroupError(ErrorCode::cap_exceeded,
                     "order " + std::to_string(g.order()) +
                         " exceeds the enumeration cap " +
                         std::to_string(limits().enumeration_cap));
  }
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for_each_element(g, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

}  // namespace grpi
