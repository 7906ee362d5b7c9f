#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdv::group {

/// Permutation of {0, ..., n-1} acting on the left: (a * b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (auto y : img_) {
      if (y >= img_.size() || seen[y]) throw std::invalid_argument("Perm: images do not form a bijection");
      seen[y] = true;
    }
  }

  static Perm identity(std::size_t degree) {
    Perm p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), 0u);
    return p;
  }

  /// Cycles are given with 0-based points.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
    Perm p = identity(degree);
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) p.img_.at(c[i]) = c[(i + 1) % c.size()];
    return Perm(p.img_);
  }

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return img_[x]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  Perm operator*(const Perm& o) const {
    if (o.img_.size() != img_.size()) throw std::invalid_argument("Perm: degree mismatch");
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = img_[o.img_[x]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) r.img_[img_[x]] = static_cast<std::uint32_t>(x);
    return r;
  }

  Perm identity() const { return identity(img_.size()); }

  bool is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  /// Nontrivial cycles, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<std::uint32_t>> cycles() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::uint32_t x = 0; x < img_.size(); ++x) {
      if (seen[x] || img_[x] == x) continue;
      std::vector<std::uint32_t> c;
      for (std::uint32_t y = x; !seen[y]; y = img_[y]) {
        seen[y] = true;
        c.push_back(y);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, static_cast<std::uint64_t>(c.size()));
    return o;
  }

  std::string to_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += "(";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i] + 1);
      s += ")";
    }
    return s;
  }

  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<std::uint32_t> img_;
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace qdv::group

template <>
struct std::hash<qdv::group::Perm> {
  std::size_t operator()(const qdv::group::Perm& p) const noexcept {
    std::size_t h = p.degree();
    for (auto x : p.images()) h = qdv::group::hash_combine(h, x);
    return h;
  }
};
