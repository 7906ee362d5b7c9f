#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qdv/group/finite_group.hpp"

namespace qdv::fusion {

using group::Index;

/// A conjugation map Q -> R stored by its graph: images[k] is the image of Q.members()[k].
struct Morphism {
  std::vector<Index> domain;
  std::vector<Index> images;
  Index witness = 0;  // some g with c_g restricted to Q equal to this map

  bool operator<(const Morphism& o) const { return std::tie(domain, images) < std::tie(o.domain, o.images); }
  bool operator==(const Morphism& o) const { return domain == o.domain && images == o.images; }
};

/// Hom_H(Q, R): maps q -> g q g^-1 for g in H with g Q g^-1 <= R, deduplicated by graph.
template <group::GroupElement E>
std::vector<Morphism> hom_set(const group::Subgroup<E>& H, const group::Subgroup<E>& Q, const group::Subgroup<E>& R) {
  const auto& G = H.parent();
  std::map<std::vector<Index>, Index> by_gen_images;
  const auto& gens = Q.generators();
  for (Index g : H.members()) {
    std::vector<Index> im;
    im.reserve(gens.size());
    bool ok = true;
    for (Index q : gens) {
      Index c = G.conj(g, q);
      if (!R.contains(c)) {
        ok = false;
        break;
      }
      im.push_back(c);
    }
    if (ok) by_gen_images.emplace(std::move(im), g);
  }
  std::vector<Morphism> out;
  for (const auto& [key, g] : by_gen_images) {
    Morphism m;
    m.domain = Q.members();
    m.witness = g;
    for (Index q : Q.members()) m.images.push_back(G.conj(g, q));
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Re-checks a morphism against its witness elementwise.
template <group::GroupElement E>
bool witness_realizes(const group::FiniteGroup<E>& G, const Morphism& m) {
  for (std::size_t k = 0; k < m.domain.size(); ++k)
    if (G.conj(m.witness, m.domain[k]) != m.images[k]) return false;
  return true;
}

/// psi o phi, when the image of phi lies in the domain of psi; the witness is the product of witnesses.
template <group::GroupElement E>
std::optional<Morphism> compose(const group::FiniteGroup<E>& G, const Morphism& psi, const Morphism& phi) {
  Morphism m;
  m.domain = phi.domain;
  m.witness = G.mul(psi.witness, phi.witness);
  for (Index y : phi.images) {
    auto it = std::lower_bound(psi.domain.begin(), psi.domain.end(), y);
    if (it == psi.domain.end() || *it != y) return std::nullopt;
    m.images.push_back(psi.images[it - psi.domain.begin()]);
  }
  return m;
}

/// F_P(H) for a p-subgroup P of H, with memoized hom sets. H and P must outlive it.
template <group::GroupElement E>
class FusionSystem {
 public:
  FusionSystem(const group::Subgroup<E>& H, const group::Subgroup<E>& P, std::uint64_t p) : H_(&H), P_(&P), p_(p) {
    if (!P.is_subgroup_of(H)) throw std::invalid_argument("FusionSystem: P is not a subgroup of H");
    if (!group::is_power_of(P.order(), p)) throw std::invalid_argument("FusionSystem: P is not a p-group");
  }

  /// Park's group contains iota P as a non-Sylow p-subgroup, so Sylow-ness is reported, not required.
  bool sylow_in_ambient() const { return group::p_part(H_->order(), p_) == P_->order(); }

  const group::Subgroup<E>& ambient() const { return *H_; }
  const group::Subgroup<E>& sylow() const { return *P_; }
  std::uint64_t p() const { return p_; }

  const std::vector<Morphism>& hom(const group::Subgroup<E>& Q, const group::Subgroup<E>& R) const {
    auto key = std::make_pair(Q.members(), R.members());
    std::lock_guard lock(mu_);
    auto it = memo_.find(key);
    if (it == memo_.end()) it = memo_.emplace(std::move(key), hom_set(*H_, Q, R)).first;
    return it->second;
  }

  /// Q and R are F-conjugate when some g in H maps Q onto R.
  std::optional<Index> conjugate(const group::Subgroup<E>& Q, const group::Subgroup<E>& R) const {
    return group::conjugating_element(*H_, Q, R);
  }

  const std::vector<group::Subgroup<E>>& subgroups(const group::GroupLimits& limits = {}) const {
    std::lock_guard lock(mu_);
    if (!subgroups_) subgroups_ = group::all_subgroups(*P_, limits);
    return *subgroups_;
  }

 private:
  const group::Subgroup<E>* H_;
  const group::Subgroup<E>* P_;
  std::uint64_t p_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::vector<Index>, std::vector<Index>>, std::vector<Morphism>> memo_;
  mutable std::optional<std::vector<group::Subgroup<E>>> subgroups_;
};

struct FusionDiscrepancy {
  std::vector<Index> Q, R;
  Morphism morphism;  // present on one side only
  bool in_first = true;
};

/// Compares Hom_{H1}(Q,R) and Hom_{H2}(Q,R) over all pairs of subgroups of P; stops at the first difference.
template <group::GroupElement E>
std::optional<FusionDiscrepancy> fusion_difference(const group::Subgroup<E>& H1, const group::Subgroup<E>& H2,
                                                    const group::Subgroup<E>& P, const group::GroupLimits& limits = {}) {
  const auto subs = group::all_subgroups(P, limits);
  for (const auto& Q : subs)
    for (const auto& R : subs) {
      if (R.order() < Q.order()) continue;
      auto a = hom_set(H1, Q, R), b = hom_set(H2, Q, R);
      for (const auto& m : a)
        if (!std::binary_search(b.begin(), b.end(), m)) return FusionDiscrepancy{Q.members(), R.members(), m, true};
      for (const auto& m : b)
        if (!std::binary_search(a.begin(), a.end(), m)) return FusionDiscrepancy{Q.members(), R.members(), m, false};
    }
  return std::nullopt;
}

template <group::GroupElement E>
bool fusion_equal(const group::Subgroup<E>& H1, const group::Subgroup<E>& H2, const group::Subgroup<E>& P,
                  const group::GroupLimits& limits = {}) {
  return !fusion_difference(H1, H2, P, limits).has_value();
}

/// One subgroup of P with its F-class and local data.
struct SubgroupInfo {
  std::size_t index = 0;  // into the lattice list
  std::size_t order = 0;
  std::size_t cls = 0;
  std::size_t normalizer_in_P = 0;
  std::size_t centralizer_in_P = 0;
  bool fully_normalized = false;
  bool fully_centralized = false;
};

template <group::GroupElement E>
struct SubgroupClassification {
  std::vector<group::Subgroup<E>> lattice;
  std::vector<SubgroupInfo> info;               // parallel to lattice
  std::vector<std::vector<std::size_t>> classes;  // lattice indices per F-class
  std::vector<std::size_t> representative;      // fully normalized rep per class
  std::optional<group::Subgroup<E>> Op;         // O_p(F), taken as O_p(H)
};

/// F-classes of subgroups of P, with fully normalized/centralized flags. Classes are ordered by the
/// first member in lattice order; the representative is the first member with |N_P(Q)| maximal.
template <group::GroupElement E>
SubgroupClassification<E> classify_subgroups(const FusionSystem<E>& F, const group::GroupLimits& limits = {}) {
  SubgroupClassification<E> out;
  out.lattice = group::all_subgroups(F.sylow(), limits);
  const std::size_t k = out.lattice.size();
  out.info.resize(k);
  std::vector<std::size_t> cls(k, SIZE_MAX);
  for (std::size_t i = 0; i < k; ++i) {
    auto& in = out.info[i];
    in.index = i;
    in.order = out.lattice[i].order();
    in.normalizer_in_P = group::normalizer(F.sylow(), out.lattice[i]).order();
    in.centralizer_in_P = group::centralizer(F.sylow(), out.lattice[i]).order();
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (cls[i] != SIZE_MAX) continue;
    cls[i] = out.classes.size();
    out.classes.push_back({i});
    for (std::size_t j = i + 1; j < k; ++j)
      if (cls[j] == SIZE_MAX && out.info[j].order == out.info[i].order && F.conjugate(out.lattice[i], out.lattice[j])) {
        cls[j] = cls[i];
        out.classes.back().push_back(j);
      }
  }
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    std::size_t maxn = 0, maxc = 0;
    for (auto i : out.classes[c]) {
      maxn = std::max(maxn, out.info[i].normalizer_in_P);
      maxc = std::max(maxc, out.info[i].centralizer_in_P);
    }
    std::optional<std::size_t> rep;
    for (auto i : out.classes[c]) {
      out.info[i].cls = c;
      out.info[i].fully_normalized = out.info[i].normalizer_in_P == maxn;
      out.info[i].fully_centralized = out.info[i].centralizer_in_P == maxc;
      if (!rep && out.info[i].fully_normalized) rep = i;
    }
    out.representative.push_back(*rep);
  }
  out.Op = group::p_core(F.ambient(), F.p());
  return out;
}

/// O_p'(H) = 1 and C_H(O_p(H)) <= O_p(H).
template <group::GroupElement E>
bool is_strictly_p_constrained(const group::Subgroup<E>& H, std::uint64_t p) {
  if (group::p_prime_core(H, p).order() != 1) return false;
  const auto Op = group::p_core(H, p);
  return group::centralizer(H, Op).is_subgroup_of(Op);
}

/// C_P(O_p(F)) <= O_p(F), with O_p(F) = O_p(H) as for a model.
template <group::GroupElement E>
bool is_constrained(const FusionSystem<E>& F) {
  const auto Op = group::p_core(F.ambient(), F.p());
  if (!Op.is_subgroup_of(F.sylow())) return false;
  return group::centralizer(F.sylow(), Op).is_subgroup_of(Op);
}

}  // namespace qdv::fusion
