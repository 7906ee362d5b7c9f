#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdv/group/finite_group.hpp"
#include "qdv/group/perm.hpp"

namespace qdv::park {

using group::Index;
using group::Perm;
using BigInt = boost::multiprecision::cpp_int;

/// (x_1..x_n; tau) in P wr S_n with (x; tau)(y; sigma) = ((x_i y_{tau^-1(i)})_i; tau sigma).
template <group::GroupElement E>
struct WreathElement {
  std::vector<E> base;
  Perm top;

  static WreathElement identity(const E& one, std::size_t n) { return {std::vector<E>(n, one), Perm::identity(n)}; }

  WreathElement operator*(const WreathElement& o) const {
    if (o.base.size() != base.size()) throw std::invalid_argument("WreathElement: size mismatch");
    const Perm ti = top.inverse();
    WreathElement r;
    r.base.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) r.base.push_back(base[i] * o.base[ti(static_cast<std::uint32_t>(i))]);
    r.top = top * o.top;
    return r;
  }

  // (x; tau)^-1 = (z; tau^-1) with z_j = x_{tau(j)}^-1
  WreathElement inverse() const {
    WreathElement r;
    r.base.reserve(base.size());
    for (std::size_t j = 0; j < base.size(); ++j) r.base.push_back(base[top(static_cast<std::uint32_t>(j))].inverse());
    r.top = top.inverse();
    return r;
  }

  WreathElement identity() const { return identity(base.front().identity(), base.size()); }
  bool in_base() const { return top.is_identity(); }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < base.size(); ++i) s += (i ? ", " : "") + base[i].to_string();
    return s + "; " + top.to_string() + ")";
  }

  auto operator<=>(const WreathElement&) const = default;
  bool operator==(const WreathElement&) const = default;
};

}  // namespace qdv::park

template <qdv::group::GroupElement E>
struct std::hash<qdv::park::WreathElement<E>> {
  std::size_t operator()(const qdv::park::WreathElement<E>& w) const noexcept {
    std::size_t h = std::hash<qdv::group::Perm>{}(w.top);
    for (const auto& x : w.base) h = qdv::group::hash_combine(h, std::hash<E>{}(x));
    return h;
  }
};

namespace qdv::park {

/// Left coset representatives m_1..m_n of P in M (0-based here), with a membership test for P.
template <group::GroupElement E>
class CosetTable {
 public:
  CosetTable(std::vector<E> reps, std::function<bool(const E&)> in_P) : reps_(std::move(reps)), in_P_(std::move(in_P)) {
    if (reps_.empty()) throw std::invalid_argument("CosetTable: no representatives");
    if (!in_P_(reps_.front())) throw std::invalid_argument("CosetTable: m_1 must represent P itself");
  }

  /// From an enumerated M and P <= M, using left_coset_reps (identity first).
  static CosetTable from_subgroup(const group::Subgroup<E>& P) {
    const auto& M = P.parent();
    std::vector<E> reps;
    for (Index r : group::left_coset_reps(group::Subgroup<E>::whole(M), P)) reps.push_back(M.element(r));
    // P must outlive the table; it is captured by pointer to keep the table copyable.
    const auto* sub = &P;
    return CosetTable(std::move(reps), [sub](const E& x) { return sub->contains_element(x); });
  }

  std::size_t n() const { return reps_.size(); }
  const E& rep(std::size_t i) const { return reps_[i]; }
  const std::vector<E>& reps() const { return reps_; }
  bool in_P(const E& x) const { return in_P_(x); }

  /// The i with x in m_i P. A miss means the table is not a transversal.
  std::size_t coset_of(const E& x) const {
    for (std::size_t i = 0; i < reps_.size(); ++i)
      if (in_P_(reps_[i].inverse() * x)) return i;
    throw std::logic_error("CosetTable: element lies in no listed coset");
  }

 private:
  std::vector<E> reps_;
  std::function<bool(const E&)> in_P_;
};

/// P wr S_n together with the embedding of M determined by a coset table.
template <group::GroupElement E>
class ParkEmbedding {
 public:
  using W = WreathElement<E>;

  /// `P_generators` generate P; they seed the generators of G.
  ParkEmbedding(CosetTable<E> table, std::vector<E> P_generators, std::size_t P_order)
      : table_(std::move(table)), P_gens_(std::move(P_generators)), P_order_(P_order) {
    one_ = table_.rep(0).identity();
  }

  std::size_t n() const { return table_.n(); }
  const CosetTable<E>& table() const { return table_; }
  const E& one() const { return one_; }
  std::size_t P_order() const { return P_order_; }
  const std::vector<E>& P_generators() const { return P_gens_; }

  /// |P|^n n!
  BigInt order() const {
    BigInt r = 1;
    for (std::size_t i = 0; i < n(); ++i) r *= P_order_;
    for (std::size_t i = 2; i <= n(); ++i) r *= i;
    return r;
  }

  W identity() const { return W::identity(one_, n()); }

  /// sigma with m m_i in m_{sigma(i)} P
  Perm sigma(const E& m) const {
    std::vector<std::uint32_t> img(n());
    for (std::size_t i = 0; i < n(); ++i) img[i] = static_cast<std::uint32_t>(table_.coset_of(m * table_.rep(i)));
    return Perm(std::move(img));
  }

  /// iota(m) = (x_1..x_n; sigma) with m m_i = m_{sigma(i)} x_{sigma(i)}
  W iota(const E& m) const {
    W w;
    w.top = sigma(m);
    const Perm si = w.top.inverse();
    w.base.reserve(n());
    for (std::size_t j = 0; j < n(); ++j) {
      E x = table_.rep(j).inverse() * m * table_.rep(si(static_cast<std::uint32_t>(j)));
      if (!table_.in_P(x)) throw std::logic_error("iota: base coordinate outside P");
      w.base.push_back(std::move(x));
    }
    return w;
  }

  /// Wreath coordinates of a bijection f of M given by its values on the representatives,
  /// read off from f(m_i) = m_{sigma(i)} x_{sigma(i)}.
  W from_values_on_reps(const std::vector<E>& f_of_reps) const {
    W w;
    std::vector<std::uint32_t> img(n());
    for (std::size_t i = 0; i < n(); ++i) img[i] = static_cast<std::uint32_t>(table_.coset_of(f_of_reps[i]));
    w.top = Perm(std::move(img));
    w.base.assign(n(), one_);
    for (std::size_t i = 0; i < n(); ++i) {
      const std::size_t j = w.top(static_cast<std::uint32_t>(i));
      w.base[j] = table_.rep(j).inverse() * f_of_reps[i];
    }
    return w;
  }

  /// The bijection of M encoded by a wreath element: m_i u maps to m_{tau(i)} x_{tau(i)} u.
  E apply(const W& g, const E& m) const {
    const std::size_t i = table_.coset_of(m);
    const std::size_t j = g.top(static_cast<std::uint32_t>(i));
    return table_.rep(j) * g.base[j] * (table_.rep(i).inverse() * m);
  }

  /// Generators of G: P in the first coordinate plus the transposition (1 2) and the n-cycle.
  std::vector<W> generators() const {
    std::vector<W> gens;
    for (const E& u : P_gens_) {
      W w = identity();
      w.base[0] = u;
      gens.push_back(std::move(w));
    }
    if (n() > 1) {
      W s = identity();
      s.top = Perm::from_cycles(n(), {{0, 1}});
      gens.push_back(s);
      std::vector<std::uint32_t> cyc(n());
      for (std::size_t i = 0; i < n(); ++i) cyc[i] = static_cast<std::uint32_t>(i);
      W c = identity();
      c.top = Perm::from_cycles(n(), {cyc});
      gens.push_back(c);
    }
    return gens;
  }

  /// Full enumeration of G; only sensible at p = 2. Refuses when |G| exceeds the cap.
  group::FiniteGroup<W> enumerate(group::GroupLimits limits = {}) const {
    const BigInt ord = order();
    if (ord > limits.max_order)
      throw group::CapExceeded("park_group", limits.max_order, "|G| = " + ord.str());
    auto g = group::FiniteGroup<W>::closure(generators(), identity(), limits, "park_group");
    if (BigInt(g.order()) != ord) throw std::logic_error("park_group: enumerated order disagrees with |P|^n n!");
    return g;
  }

 private:
  CosetTable<E> table_;
  std::vector<E> P_gens_;
  std::size_t P_order_;
  E one_;
};

/// iota applied to a list.
template <group::GroupElement E>
std::vector<WreathElement<E>> iota_all(const ParkEmbedding<E>& emb, const std::vector<E>& xs) {
  std::vector<WreathElement<E>> out;
  out.reserve(xs.size());
  for (const E& x : xs) out.push_back(emb.iota(x));
  return out;
}

/// Subgroup of an enumerated G given by the iota images of a list of M-elements.
template <group::GroupElement E>
group::Subgroup<WreathElement<E>> iota_subgroup(const group::FiniteGroup<WreathElement<E>>& G, const ParkEmbedding<E>& emb,
                                                 const std::vector<E>& xs) {
  std::vector<Index> members;
  for (const E& x : xs) members.push_back(G.index_of(emb.iota(x)));
  return group::Subgroup<WreathElement<E>>(G, std::move(members));
}

/// B: elements of G with trivial top.
template <group::GroupElement E>
group::Subgroup<WreathElement<E>> base_group(const group::FiniteGroup<WreathElement<E>>& G) {
  std::vector<Index> members;
  for (Index i = 0; i < G.order(); ++i)
    if (G.element(i).in_base()) members.push_back(i);
  return group::Subgroup<WreathElement<E>>(G, std::move(members));
}

/// The permutation x -> m x of the element set of an enumerated M.
template <group::GroupElement E>
Perm left_multiplication(const group::FiniteGroup<E>& M, const E& m) {
  std::vector<std::uint32_t> img(M.order());
  for (Index x = 0; x < M.order(); ++x) img[x] = M.index_of(m * M.element(x));
  return Perm(std::move(img));
}

/// Right P-equivariance of a bijection f of M: f(x u) = f(x) u for all x in M, u in P.
template <group::GroupElement E>
bool preserves_right_action(const group::FiniteGroup<E>& M, const Perm& f, const std::vector<E>& P) {
  for (Index x = 0; x < M.order(); ++x)
    for (const E& u : P)
      if (M.element(f(M.index_of(M.element(x) * u))) != M.element(f(x)) * u) return false;
  return true;
}

}  // namespace qdv::park
