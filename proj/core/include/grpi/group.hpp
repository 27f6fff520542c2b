#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "grpi/permutation.hpp"

namespace grpi {

/// One level of a stabilizer chain: the orbit of `base` under the pointwise
/// stabilizer of the earlier base points, with a transversal.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> position;      // point -> index in orbit, or -1
  std::vector<Permutation> transversal;    // maps base to orbit[k]
  std::vector<Permutation> inverse_transversal;

  bool in_orbit(Point x) const noexcept { return position[x] >= 0; }
};

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Base points are chosen as first moved points of the (residual)
/// generators, so two builds from the same generator list are identical.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<ChainLevel>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;

  /// Product of the fundamental orbit lengths; throws order_overflow past
  /// 2^64 - 1.
  std::uint64_t order() const;

  struct SiftResult {
    Permutation residue;
    std::size_t depth;  // number of levels passed
  };
  SiftResult sift(const Permutation& g) const;
  bool contains(const Permutation& g) const;

 private:
  void add_level(Point base);
  void rebuild_orbit(std::size_t level);
  bool process_level(std::size_t level, std::size_t& restart);

  std::size_t degree_;
  std::vector<ChainLevel> levels_;
};

/// An immutable finitely generated permutation group. Copies share the
/// underlying chain, so handles are cheap to pass around and safe to read
/// from many threads.
class GroupHandle {
 public:
  GroupHandle(std::size_t degree, std::vector<Permutation> generators,
              std::string label = {});

  std::size_t degree() const noexcept { return data_->chain.degree(); }
  const std::vector<Permutation>& generators() const noexcept {
    return data_->generators;
  }
  const StabilizerChain& chain() const noexcept { return data_->chain; }
  std::uint64_t order() const noexcept { return data_->order; }
  const std::string& label() const noexcept { return data_->label; }
  bool is_trivial() const noexcept { return data_->order == 1; }

  GroupHandle with_label(std::string label) const;

  /// Membership by sifting; throws degree_mismatch.
  bool contains(const Permutation& p) const;

  /// True when both handles share the same chain object.
  bool same_object(const GroupHandle& other) const noexcept {
    return data_ == other.data_;
  }

 private:
  struct Data {
    std::vector<Permutation> generators;
    StabilizerChain chain;
    std::uint64_t order;
    std::string label;
  };
  explicit GroupHandle(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

GroupHandle group_from_generators(std::size_t degree,
                                  std::vector<Permutation> generators);

bool contains(const GroupHandle& g, const Permutation& p);

/// Calls `visit` on every element exactly once, in a deterministic order
/// derived from the chain. `visit` returns false to stop early.
void for_each_element(const GroupHandle& g,
                      const std::function<bool(const Permutation&)>& visit);

/// All elements; throws cap_exceeded when the order exceeds the enumeration
/// cap.
std::vector<Permutation> elements(const GroupHandle& g);

/// Depth-first walk of the chain's element tree. At depth `l` the partial
/// product already fixes the images of base points 0..l; `prune(l, partial)`
/// returning false cuts the subtree. Leaves go to `visit`, which returns
/// false to stop the whole walk.
void backtrack_elements(
    const GroupHandle& g,
    const std::function<bool(std::size_t, const Permutation&)>& prune,
    const std::function<bool(const Permutation&)>& visit);

}  // namespace grpi
