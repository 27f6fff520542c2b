#include "grpi/quotient.hpp"

#include "grpi/errors.hpp"
#include "grpi/limits.hpp"

namespace grpi {

namespace {

GroupHandle placeholder(std::size_t degree) { return GroupHandle(degree, {}); }

}  // namespace

QuotientContext::QuotientContext(GroupHandle parent, Subgroup kernel)
    : parent_(std::move(parent)), kernel_(std::move(kernel)), quotient_(placeholder(1)) {
  if (!is_subset(kernel_.group(), parent_) || !is_normal(parent_, kernel_.group())) {
    throw GroupError(ErrorCode::not_normal, "quotient by a subgroup that is not normal");
  }
  if (parent_.order() > limits().enumeration_cap) {
    throw GroupError(ErrorCode::cap_exceeded, "quotient of a group beyond the enumeration cap");
  }
  const std::vector<Permutation> kernel_elements = elements(kernel_.group());
  coset_index_.reserve(static_cast<std::size_t>(parent_.order()));

  auto add_coset = [&](const Permutation& rep) {
    auto id = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(rep);
    for (const auto& k : kernel_elements) coset_index_.emplace(rep * k, id);
  };
  add_coset(Permutation::identity(parent_.degree()));
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (const auto& s : parent_.generators()) {
      Permutation y = reps_[i] * s;
      if (!coset_index_.count(y)) add_coset(y);
    }
  }

  std::vector<Permutation> gens;
  gens.reserve(parent_.generators().size());
  for (const auto& s : parent_.generators()) gens.push_back(project(s));
  quotient_ = GroupHandle(reps_.size(), std::move(gens));
}

std::size_t QuotientContext::coset_of(const Permutation& x) const {
  auto it = coset_index_.find(x);
  if (it == coset_index_.end()) {
    throw GroupError(ErrorCode::not_a_subgroup, "element " + x.to_cycles() +
                                                    " is not in the parent group");
  }
  return it->second;
}

Permutation QuotientContext::project(const Permutation& x) const {
  std::vector<Point> images(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    images[i] = static_cast<Point>(coset_of(reps_[i] * x));
  }
  return PermutationBuilder::adopt(std::move(images));
}

const Permutation& QuotientContext::lift(const Permutation& image) const {
  // In the regular action the trivial coset goes to the coset of the element.
  return reps_.at(image(0));
}

QuotientContext build_quotient(const GroupHandle& g, const Subgroup& k) {
  return QuotientContext(g, k.in(g));
}

Subgroup project_subgroup(const QuotientContext& ctx, const Subgroup& h) {
  std::vector<Permutation> gens;
  for (const auto& x : h.generators()) {
    Permutation img = ctx.project(x);
    if (!img.is_identity()) gens.push_back(std::move(img));
  }
  return make_subgroup_unchecked(ctx.quotient(),
                                 GroupHandle(ctx.quotient().degree(), std::move(gens)));
}

Subgroup preimage_subgroup(const QuotientContext& ctx, const Subgroup& x) {
  std::vector<Permutation> gens = ctx.kernel().generators();
  for (const auto& y : x.generators()) gens.push_back(ctx.lift(y));
  return make_subgroup_unchecked(ctx.parent(),
                                 GroupHandle(ctx.parent().degree(), std::move(gens)));
}

}  // namespace grpi
