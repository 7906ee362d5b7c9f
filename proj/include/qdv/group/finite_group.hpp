#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qdv::group {

/// A value-typed group element whose carrier knows its own identity.
template <class E>
concept GroupElement = std::regular<E> && std::totally_ordered<E> && requires(const E& a, const E& b) {
  { a * b } -> std::convertible_to<E>;
  { a.inverse() } -> std::convertible_to<E>;
  { a.identity() } -> std::convertible_to<E>;
  { std::hash<E>{}(a) } -> std::convertible_to<std::size_t>;
};

using Index = std::uint32_t;

struct GroupLimits {
  std::size_t max_order = 10'000'000;
  std::size_t max_subgroup_lattice_order = 512;
};

/// A configured size limit was hit; names the computation that hit it.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::string computation, std::size_t cap, const std::string& detail = {})
      : std::runtime_error(computation + ": exceeds cap " + std::to_string(cap) + (detail.empty() ? "" : " (" + detail + ")")),
        computation_(std::move(computation)),
        cap_(cap) {}
  const std::string& computation() const { return computation_; }
  std::size_t cap() const { return cap_; }

 private:
  std::string computation_;
  std::size_t cap_;
};

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) { return n >= 1 && p_part(n, p) == n; }

/// Fully enumerated finite group. Elements are kept in canonical (sorted) order.
template <GroupElement E>
class FiniteGroup {
 public:
  static FiniteGroup closure(const std::vector<E>& generators, const E& identity, GroupLimits limits = {},
                             const std::string& what = "closure") {
    FiniteGroup g;
    g.generators_ = generators;
    std::unordered_map<E, Index> seen;
    std::vector<E> found{identity};
    seen.emplace(identity, 0);
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (const E& s : generators) {
        E y = found[head] * s;
        if (seen.contains(y)) continue;
        if (found.size() >= limits.max_order) throw CapExceeded(what, limits.max_order, "group order");
        seen.emplace(y, static_cast<Index>(found.size()));
        found.push_back(std::move(y));
      }
    }
    std::sort(found.begin(), found.end());
    g.elements_ = std::move(found);
    g.index_.reserve(g.elements_.size());
    for (Index i = 0; i < g.elements_.size(); ++i) g.index_.emplace(g.elements_[i], i);
    g.identity_ = g.index_.at(identity);
    g.inverse_.resize(g.elements_.size());
    for (Index i = 0; i < g.elements_.size(); ++i) g.inverse_[i] = g.index_.at(g.elements_[i].inverse());
    return g;
  }

  /// Closure of a non-empty generator list; the identity is taken from the carrier.
  static FiniteGroup closure(const std::vector<E>& generators, GroupLimits limits = {}) {
    if (generators.empty()) throw std::invalid_argument("FiniteGroup::closure: need a generator or an identity");
    return closure(generators, generators.front().identity(), limits);
  }

  std::size_t order() const { return elements_.size(); }
  const std::vector<E>& elements() const { return elements_; }
  const E& element(Index i) const { return elements_[i]; }
  const std::vector<E>& generators() const { return generators_; }
  Index identity_index() const { return identity_; }
  const E& identity() const { return elements_[identity_]; }

  std::optional<Index> find(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const E& e) const { return index_.contains(e); }
  Index index_of(const E& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw std::invalid_argument("FiniteGroup::index_of: element not in group");
    return it->second;
  }

  Index mul(Index a, Index b) const { return index_.at(elements_[a] * elements_[b]); }
  Index inv(Index a) const { return inverse_[a]; }
  /// g x g^-1
  Index conj(Index g, Index x) const { return index_.at(elements_[g] * elements_[x] * elements_[inverse_[g]]); }

 private:
  std::vector<E> elements_;
  std::vector<E> generators_;
  std::unordered_map<E, Index> index_;
  std::vector<Index> inverse_;
  Index identity_ = 0;
};

/// Subgroup of an enumerated parent, held as a sorted index set. Must not outlive the parent.
template <GroupElement E>
class Subgroup {
 public:
  /// `members` must be closed under multiplication; `validate` re-checks this (quadratic).
  Subgroup(const FiniteGroup<E>& parent, std::vector<Index> members, bool validate = false)
      : parent_(&parent), members_(std::move(members)), mask_(parent.order(), 0) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (Index m : members_) mask_[m] = 1;
    if (!mask_[parent.identity_index()]) throw std::invalid_argument("Subgroup: identity missing");
    if (parent.order() % members_.size() != 0) throw std::invalid_argument("Subgroup: order does not divide parent order");
    if (validate)
      for (Index a : members_)
        for (Index b : members_)
          if (!mask_[parent.mul(a, b)]) throw std::invalid_argument("Subgroup: member set not closed");
  }

  static Subgroup generated(const FiniteGroup<E>& parent, const std::vector<Index>& gens) {
    std::vector<char> seen(parent.order(), 0);
    std::vector<Index> found{parent.identity_index()};
    seen[parent.identity_index()] = 1;
    for (std::size_t head = 0; head < found.size(); ++head)
      for (Index s : gens) {
        Index y = parent.mul(found[head], s);
        if (!seen[y]) {
          seen[y] = 1;
          found.push_back(y);
        }
      }
    Subgroup h(parent, std::move(found));
    h.gens_ = gens;
    h.gens_known_ = true;
    return h;
  }

  static Subgroup whole(const FiniteGroup<E>& parent) {
    std::vector<Index> all(parent.order());
    for (Index i = 0; i < all.size(); ++i) all[i] = i;
    Subgroup g(parent, std::move(all));
    if (!parent.generators().empty()) {
      for (const E& e : parent.generators()) g.gens_.push_back(parent.index_of(e));
      g.gens_known_ = true;
    }
    return g;
  }
  static Subgroup trivial(const FiniteGroup<E>& parent) { return Subgroup(parent, {parent.identity_index()}); }

  const FiniteGroup<E>& parent() const { return *parent_; }
  std::size_t order() const { return members_.size(); }
  bool contains(Index i) const { return mask_[i] != 0; }
  bool contains_element(const E& e) const {
    auto i = parent_->find(e);
    return i && mask_[*i];
  }
  const std::vector<Index>& members() const { return members_; }
  std::vector<E> elements() const {
    std::vector<E> out;
    out.reserve(members_.size());
    for (Index m : members_) out.push_back(parent_->element(m));
    return out;
  }

  /// A small generating set: greedy over members in index order unless given at construction.
  const std::vector<Index>& generators() const {
    if (!gens_known_) {
      std::vector<Index> gens;
      std::vector<char> have(parent_->order(), 0);
      have[parent_->identity_index()] = 1;
      for (Index m : members_) {
        if (have[m]) continue;
        gens.push_back(m);
        auto closed = generated(*parent_, gens);
        for (Index x : closed.members()) have[x] = 1;
      }
      gens_ = std::move(gens);
      gens_known_ = true;
    }
    return gens_;
  }

  bool is_subgroup_of(const Subgroup& o) const {
    for (Index m : members_)
      if (!o.contains(m)) return false;
    return true;
  }

  bool operator==(const Subgroup& o) const { return parent_ == o.parent_ && members_ == o.members_; }

 private:
  const FiniteGroup<E>* parent_;
  std::vector<Index> members_;
  std::vector<char> mask_;
  mutable std::vector<Index> gens_;
  mutable bool gens_known_ = false;
};

template <GroupElement E>
std::uint64_t element_order(const FiniteGroup<E>& g, Index x) {
  std::uint64_t k = 1;
  for (Index y = x; y != g.identity_index(); y = g.mul(y, x)) ++k;
  return k;
}

template <GroupElement E>
Subgroup<E> intersection(const Subgroup<E>& a, const Subgroup<E>& b) {
  std::vector<Index> m;
  for (Index x : a.members())
    if (b.contains(x)) m.push_back(x);
  return Subgroup<E>(a.parent(), std::move(m));
}

template <GroupElement E>
Subgroup<E> join(const Subgroup<E>& a, const Subgroup<E>& b) {
  std::vector<Index> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Subgroup<E>::generated(a.parent(), gens);
}

/// x H x^-1
template <GroupElement E>
Subgroup<E> conjugate(const Subgroup<E>& h, Index x) {
  std::vector<Index> m;
  m.reserve(h.order());
  for (Index y : h.members()) m.push_back(h.parent().conj(x, y));
  return Subgroup<E>(h.parent(), std::move(m));
}

/// Left coset representatives of h in g, identity first; throws unless h <= g.
template <GroupElement E>
std::vector<Index> left_coset_reps(const Subgroup<E>& g, const Subgroup<E>& h) {
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("left_coset_reps: h is not a subgroup of g");
  const auto& G = g.parent();
  std::vector<char> covered(G.order(), 0);
  std::vector<Index> reps;
  auto cover = [&](Index r) {
    reps.push_back(r);
    for (Index y : h.members()) covered[G.mul(r, y)] = 1;
  };
  cover(G.identity_index());
  for (Index x : g.members())
    if (!covered[x]) cover(x);
  return reps;
}

/// {x in g : x s = s x for all s in set}
template <GroupElement E>
Subgroup<E> centralizer(const Subgroup<E>& g, const std::vector<Index>& set) {
  const auto& G = g.parent();
  std::vector<Index> m;
  for (Index x : g.members()) {
    bool ok = true;
    for (Index s : set)
      if (G.mul(x, s) != G.mul(s, x)) {
        ok = false;
        break;
      }
    if (ok) m.push_back(x);
  }
  return Subgroup<E>(G, std::move(m));
}

template <GroupElement E>
Subgroup<E> centralizer(const Subgroup<E>& g, const Subgroup<E>& s) {
  return centralizer(g, s.generators());
}

/// {x in g : x S x^-1 = S} for an arbitrary finite subset S.
template <GroupElement E>
Subgroup<E> normalizer(const Subgroup<E>& g, const std::vector<Index>& set) {
  const auto& G = g.parent();
  std::vector<char> in_set(G.order(), 0);
  for (Index s : set) in_set[s] = 1;
  std::vector<Index> m;
  for (Index x : g.members()) {
    bool ok = true;
    for (Index s : set)
      if (!in_set[G.conj(x, s)]) {
        ok = false;
        break;
      }
    if (ok) m.push_back(x);
  }
  return Subgroup<E>(G, std::move(m));
}

/// For a subgroup, conjugating its generators into it suffices.
template <GroupElement E>
Subgroup<E> normalizer(const Subgroup<E>& g, const Subgroup<E>& s) {
  const auto& G = g.parent();
  std::vector<Index> m;
  for (Index x : g.members()) {
    bool ok = true;
    for (Index y : s.generators())
      if (!s.contains(G.conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) m.push_back(x);
  }
  return Subgroup<E>(G, std::move(m));
}

template <GroupElement E>
bool is_normal(const Subgroup<E>& g, const Subgroup<E>& h) {
  for (Index x : g.generators())
    for (Index y : h.generators())
      if (!h.contains(g.parent().conj(x, y))) return false;
  return true;
}

/// Some x in g with x A x^-1 = B, tested on generators of A.
template <GroupElement E>
std::optional<Index> conjugating_element(const Subgroup<E>& g, const Subgroup<E>& a, const Subgroup<E>& b) {
  if (a.order() != b.order()) return std::nullopt;
  for (Index x : g.members()) {
    bool ok = true;
    for (Index y : a.generators())
      if (!b.contains(g.parent().conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

/// Smallest normal subgroup of g containing `set`.
template <GroupElement E>
Subgroup<E> normal_closure(const Subgroup<E>& g, const std::vector<Index>& set) {
  const auto& G = g.parent();
  std::vector<Index> gens = set;
  Subgroup<E> n = Subgroup<E>::generated(G, gens);
  for (bool grew = true; grew;) {
    grew = false;
    for (Index x : g.generators()) {
      for (Index y : std::vector<Index>(n.generators())) {
        Index c = G.conj(x, y);
        if (!n.contains(c)) {
          gens.push_back(c);
          n = Subgroup<E>::generated(G, gens);
          grew = true;
        }
      }
    }
  }
  return n;
}

template <GroupElement E>
std::vector<std::vector<Index>> conjugacy_classes(const Subgroup<E>& g) {
  const auto& G = g.parent();
  std::vector<char> seen(G.order(), 0);
  std::vector<std::vector<Index>> classes;
  for (Index x : g.members()) {
    if (seen[x]) continue;
    std::vector<Index> cls{x};
    seen[x] = 1;
    for (std::size_t head = 0; head < cls.size(); ++head)
      for (Index s : g.generators()) {
        Index c = G.conj(s, cls[head]);
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// Sylow p-subgroup grown inside successive normalizers. Trivial when p does not divide |g|.
template <GroupElement E>
Subgroup<E> sylow_p(const Subgroup<E>& g, std::uint64_t p) {
  const auto& G = g.parent();
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup<E> s = Subgroup<E>::trivial(G);
  while (s.order() < target) {
    Subgroup<E> n = normalizer(g, s);
    bool grown = false;
    for (Index y : n.members()) {
      if (s.contains(y)) continue;
      // Order of yS in N(S)/S.
      std::uint64_t m = 1;
      Index z = y;
      while (!s.contains(z)) {
        z = G.mul(z, y);
        ++m;
      }
      const std::uint64_t pp = p_part(m, p);
      if (pp == 1) continue;
      Index x = y;
      for (std::uint64_t k = 1; k < m / pp; ++k) x = G.mul(x, y);
      std::vector<Index> gens = s.generators();
      gens.push_back(x);
      s = Subgroup<E>::generated(G, gens);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow_p: no p-element in N(S)/S; group order inconsistent");
  }
  return s;
}

/// Every subgroup of g by repeated extension with cyclic subgroups of normalizers.
/// Complete for solvable g, which covers every group it is applied to here.
template <GroupElement E>
std::vector<Subgroup<E>> all_subgroups(const Subgroup<E>& g, const GroupLimits& limits = {}) {
  if (g.order() > limits.max_subgroup_lattice_order)
    throw CapExceeded("all_subgroups", limits.max_subgroup_lattice_order, "group order " + std::to_string(g.order()));
  const auto& G = g.parent();
  std::set<std::vector<Index>> known;
  std::vector<Subgroup<E>> all;
  std::vector<std::size_t> frontier;
  auto add = [&](Subgroup<E> h) {
    if (known.insert(h.members()).second) {
      all.push_back(std::move(h));
      return true;
    }
    return false;
  };
  for (Index x : g.members()) {
    if (add(Subgroup<E>::generated(G, {x}))) frontier.push_back(all.size() - 1);
  }
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const Subgroup<E> u = all[idx];
      const Subgroup<E> n = normalizer(g, u);
      std::vector<char> tried(G.order(), 0);
      for (Index x : n.members()) {
        if (u.contains(x) || tried[x]) continue;
        std::vector<Index> gens = u.generators();
        gens.push_back(x);
        Subgroup<E> w = Subgroup<E>::generated(G, gens);
        for (Index y : w.members()) tried[y] = 1;
        if (add(std::move(w))) next.push_back(all.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Subgroup<E>& a, const Subgroup<E>& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.members() < b.members();
  });
  return all;
}

/// Largest normal p-subgroup: the intersection of the conjugates of a Sylow p-subgroup.
template <GroupElement E>
Subgroup<E> p_core(const Subgroup<E>& g, std::uint64_t p) {
  const auto& G = g.parent();
  const Subgroup<E> s = sylow_p(g, p);
  std::vector<Index> current = s.members();
  for (Index x : g.members()) {
    std::vector<Index> kept;
    const Index xi = G.inv(x);
    for (Index y : current)
      if (s.contains(G.conj(xi, y))) kept.push_back(y);
    current = std::move(kept);
  }
  return Subgroup<E>(G, std::move(current));
}

namespace detail {

/// Preimage in g of O_p(g/k) (want_p) or O_p'(g/k) (!want_p), for k normal in g.
template <GroupElement E>
Subgroup<E> upper_core(const Subgroup<E>& g, const Subgroup<E>& k, std::uint64_t p, bool want_p) {
  const auto& G = g.parent();
  std::vector<Index> gens = k.generators();
  for (const auto& cls : conjugacy_classes(g)) {
    const Index x = cls.front();
    if (k.contains(x)) continue;
    std::vector<Index> seed = k.generators();
    seed.push_back(x);
    const std::uint64_t index = normal_closure(g, seed).order() / k.order();
    const bool keep = want_p ? is_power_of(index, p) : index % p != 0;
    if (keep) gens.push_back(x);
  }
  if (gens.empty()) return Subgroup<E>::trivial(G);
  return normal_closure(g, gens);
}

}  // namespace detail

/// Largest normal p'-subgroup.
template <GroupElement E>
Subgroup<E> p_prime_core(const Subgroup<E>& g, std::uint64_t p) {
  return detail::upper_core(g, Subgroup<E>::trivial(g.parent()), p, false);
}

/// Number of p-factors in the upper p'/p-series; throws std::domain_error if g is not p-solvable.
template <GroupElement E>
std::size_t p_length(const Subgroup<E>& g, std::uint64_t p) {
  Subgroup<E> k = Subgroup<E>::trivial(g.parent());
  std::size_t length = 0;
  while (k.order() < g.order()) {
    const std::size_t before = k.order();
    k = detail::upper_core(g, k, p, false);
    if (k.order() == g.order()) break;
    Subgroup<E> next = detail::upper_core(g, k, p, true);
    if (next.order() > k.order()) ++length;
    k = std::move(next);
    if (k.order() == before) throw std::domain_error("p_length: group is not p-solvable");
  }
  return length;
}

}  // namespace qdv::group
