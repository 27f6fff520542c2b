#include "grpi/permutation.hpp"

#include <numeric>

#include "grpi/errors.hpp"

namespace grpi {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_degree: return "invalid-degree";
    case ErrorCode::degree_mismatch: return "degree-mismatch";
    case ErrorCode::not_bijective: return "not-bijective";
    case ErrorCode::point_out_of_range: return "point-out-of-range";
    case ErrorCode::cap_exceeded: return "cap-exceeded";
    case ErrorCode::order_overflow: return "order-overflow";
    case ErrorCode::not_a_subgroup: return "not-a-subgroup";
    case ErrorCode::not_normal: return "not-normal";
    case ErrorCode::not_p_group: return "not-p-group";
    case ErrorCode::trivial_group: return "trivial-group";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw GroupError(ErrorCode::invalid_degree, "permutation of degree 0");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size()) {
      throw GroupError(ErrorCode::point_out_of_range,
                       "image " + std::to_string(x) + " >= degree " +
                           std::to_string(images_.size()));
    }
    if (seen[x]) {
      throw GroupError(ErrorCode::not_bijective,
                       "point " + std::to_string(x) + " hit twice");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) {
    throw GroupError(ErrorCode::invalid_degree, "identity of degree 0");
  }
  if (degree > 65536) {
    throw GroupError(ErrorCode::invalid_degree, "degree exceeds 65536");
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation result = identity(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') {
      throw GroupError(ErrorCode::parse_error,
                       "expected '(' in cycle notation \"" + std::string(text) + "\"");
    }
    ++i;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (i >= text.size()) {
        throw GroupError(ErrorCode::parse_error, "unterminated cycle");
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9') {
        throw GroupError(ErrorCode::parse_error,
                         std::string("unexpected character '") + text[i] + "'");
      }
      std::size_t value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 1'000'000) break;
        ++i;
      }
      if (value >= degree) {
        throw GroupError(ErrorCode::point_out_of_range,
                         "point " + std::to_string(value) + " >= degree " +
                             std::to_string(degree));
      }
      if (used[value]) {
        throw GroupError(ErrorCode::not_bijective,
                         "point " + std::to_string(value) + " repeated");
      }
      used[value] = true;
      cycle.push_back(value);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      result.images_[cycle[k]] = static_cast<Point>(cycle[(k + 1) % cycle.size()]);
    }
    skip_space();
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(inv), Unchecked{});
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  // g^-1 x g maps g(i) to g(x(i)).
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out[g.images_[i]] = g.images_[images_[i]];
  }
  return Permutation(std::move(out), Unchecked{});
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                               : static_cast<unsigned long long>(e);
  Permutation result = identity(degree());
  while (n > 0) {
    if (n & 1ULL) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return i;
  }
  return images_.size();
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::uint64_t Permutation::hash() const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Point x : images_) {
    h ^= x;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  std::vector<Point> out(a.images_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = b.images_[a.images_[i]];
  }
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw GroupError(ErrorCode::degree_mismatch,
                     "compose: degrees " + std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()));
  }
  return a * b;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace grpi
