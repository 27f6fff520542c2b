#pragma once

// Exhaustive reference implementations for small groups. Nothing here uses
// the engine: permutations are plain int vectors, groups are Cayley tables,
// subgroups are membership masks over the element list.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Set = std::vector<bool>;  // indexed like Table::elements

Perm parse_cycles(const std::string& text, int degree);
Perm multiply(const Perm& a, const Perm& b);  // apply a, then b

struct Table {
  int degree = 0;
  std::vector<Perm> elements;           // sorted; elements[0] is the identity
  std::vector<std::vector<int>> mul;    // mul[i][j] = index of e_i * e_j
  std::vector<int> inverse;

  int index_of(const Perm& p) const;    // -1 if absent
  std::size_t order() const { return elements.size(); }
};

Table close(const std::vector<Perm>& gens, int degree);
Table from_cycles(const std::vector<std::string>& cycles, int degree);

std::size_t count(const Set& s);
Set intersect(const Set& a, const Set& b);
bool subset(const Set& a, const Set& b);
Set generate(const Table& t, const Set& gens);
Set whole(const Table& t);
Set trivial(const Table& t);
Set product_set(const Table& t, const Set& a, const Set& b);
bool is_subgroup(const Table& t, const Set& s);
Set conjugate(const Table& t, const Set& h, int g);  // g^-1 h g

Set normalizer(const Table& t, const Set& h);
Set centralizer(const Table& t, const Set& h);
Set core(const Table& t, const Set& h);
bool is_normal(const Table& t, const Set& h);
bool is_subnormal(const Table& t, const Set& h, const std::vector<Set>& subgroups);

/// Every subgroup, found as the join-closure of the cyclic subgroups.
std::vector<Set> all_subgroups(const Table& t);
std::vector<Set> normal_subgroups(const Table& t, const std::vector<Set>& subgroups);

struct Cover {
  Set lower, upper;
};
std::vector<Cover> chief_factors(const Table& t, const std::vector<Set>& normals);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_p_power(std::uint64_t n, std::uint64_t p);

struct PiFactor {
  std::uint64_t intersection_order;  // |(HK n L)/K|
  std::uint64_t normalizer_index;
  bool pass;
};
/// One entry per chief factor, in the order of `factors`.
std::vector<PiFactor> pi_property(const Table& t, const Set& h, const std::vector<Cover>& factors);
bool pi_verdict(const Table& t, const Set& h, const std::vector<Cover>& factors);

bool p_soluble(const std::vector<Cover>& factors, std::uint64_t p);
bool p_supersoluble(const std::vector<Cover>& factors, std::uint64_t p);
bool p_nilpotent(const Table& t, const std::vector<Set>& normals, std::uint64_t p);

/// Subgroups of order |G|_p.
std::vector<Set> sylow_subgroups(const Table& t, const std::vector<Set>& subgroups, std::uint64_t p);

bool permutable(const Table& t, const Set& h, const std::vector<Set>& subgroups);
bool s_permutable(const Table& t, const Set& h, const std::vector<Set>& subgroups);
bool s_semipermutable(const Table& t, const Set& h, const std::vector<Set>& subgroups);
bool cap_subgroup(const Table& t, const Set& h, const std::vector<Cover>& factors);
bool c_normal(const Table& t, const Set& h, const std::vector<Set>& normals);

}  // namespace oracle
