#pragma once

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qdv/fusion/fusion.hpp"
#include "qdv/group/finite_group.hpp"
#include "qdv/rep/endo.hpp"

namespace qdv::rep {

using group::Index;
using group::Perm;

/// The transitive G-set G/H of left cosets; point 0 is the coset H itself.
template <group::GroupElement E>
class CosetSpace {
 public:
  CosetSpace(const group::Subgroup<E>& G, const group::Subgroup<E>& H, std::size_t max_points = 1u << 16)
      : G_(&G), H_(&H) {
    if (!H.is_subgroup_of(G)) throw std::invalid_argument("CosetSpace: H is not a subgroup of G");
    const std::size_t index = G.order() / H.order();
    if (index > max_points) throw group::CapExceeded("coset_gset", max_points, "index " + std::to_string(index));
    reps_ = group::left_coset_reps(G, H);
    const auto& A = G.parent();
    point_of_.assign(A.order(), UINT32_MAX);
    for (std::uint32_t i = 0; i < reps_.size(); ++i)
      for (Index h : H.members()) point_of_[A.mul(reps_[i], h)] = i;
  }

  const group::Subgroup<E>& group() const { return *G_; }
  const group::Subgroup<E>& stabilizer() const { return *H_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<Index>& reps() const { return reps_; }
  std::uint32_t point_of(Index g) const { return point_of_[g]; }
  std::uint32_t act(Index g, std::uint32_t x) const { return point_of_[G_->parent().mul(g, reps_[x])]; }

  Perm perm(Index g) const {
    std::vector<std::uint32_t> img(size());
    for (std::uint32_t x = 0; x < size(); ++x) img[x] = act(g, x);
    return Perm(std::move(img));
  }

  /// Omega^Q, sorted.
  std::vector<std::uint32_t> fixed_points(const group::Subgroup<E>& Q) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < size(); ++x)
      if (std::all_of(Q.generators().begin(), Q.generators().end(), [&](Index q) { return act(q, x) == x; }))
        out.push_back(x);
    return out;
  }

  /// k[Omega] as a module for K (a subgroup of G) through the generators of K.
  PermModule module(const group::Subgroup<E>& K, unsigned p) const {
    PermModule m{p, size(), {}};
    for (Index g : K.generators()) m.generators.push_back(perm(g));
    return m;
  }

  /// k[S] for a K-stable subset S of Omega; throws if K moves S.
  PermModule restricted_module(const group::Subgroup<E>& K, const std::vector<std::uint32_t>& S, unsigned p) const {
    std::vector<std::uint32_t> pos(size(), UINT32_MAX);
    for (std::uint32_t i = 0; i < S.size(); ++i) pos[S[i]] = i;
    PermModule m{p, S.size(), {}};
    for (Index g : K.generators()) {
      std::vector<std::uint32_t> img(S.size());
      for (std::uint32_t i = 0; i < S.size(); ++i) {
        img[i] = pos[act(g, S[i])];
        if (img[i] == UINT32_MAX) throw std::logic_error("restricted_module: subset is not stable");
      }
      m.generators.emplace_back(std::move(img));
    }
    return m;
  }

 private:
  const group::Subgroup<E>* G_;
  const group::Subgroup<E>* H_;
  std::vector<Index> reps_;
  std::vector<std::uint32_t> point_of_;
};

/// Orbits of a set of permutations, each sorted, ordered by least point.
inline std::vector<std::vector<std::uint32_t>> orbits(std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<std::uint32_t> seen(degree, 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> orb{x};
    seen[x] = 1;
    for (std::size_t h = 0; h < orb.size(); ++h)
      for (const auto& g : gens)
        if (!seen[g(orb[h])]) {
          seen[g(orb[h])] = 1;
          orb.push_back(g(orb[h]));
        }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

struct BrauerOracle {
  std::size_t fixed_points = 0;
  std::size_t dim_invariants = 0;  // dim M^Q
  std::size_t dim_traces = 0;      // dim of the sum of relative traces from proper subgroups
  std::size_t dim_quotient = 0;
  bool traces_vanish_on_fixed_points = false;
  bool action_agrees = false;  // N_G(Q) preserves both the fixed points and the trace sum
  bool ok() const { return dim_quotient == fixed_points && traces_vanish_on_fixed_points && action_agrees; }
};

/// M(Q) = M^Q / sum_{R<Q} Tr_R^Q(M^R) from the definition, for M = k[Omega]. Oracle only.
template <group::GroupElement E>
BrauerOracle brauer_quotient_definitional(const CosetSpace<E>& omega, const group::Subgroup<E>& Q, unsigned p,
                                          std::size_t max_dim = 512) {
  const std::size_t d = omega.size();
  if (d > max_dim) throw group::CapExceeded("brauer_quotient_definitional", max_dim, "module dimension " + std::to_string(d));
  auto orbit_sums = [&](const group::Subgroup<E>& R) {
    std::vector<Perm> gens;
    for (Index r : R.generators()) gens.push_back(omega.perm(r));
    std::vector<FpVector> sums;
    for (const auto& o : orbits(d, gens)) {
      FpVector v(d, 0);
      for (auto x : o) v[x] = 1;
      sums.push_back(std::move(v));
    }
    return sums;
  };
  BrauerOracle res;
  const auto fixed = omega.fixed_points(Q);
  res.fixed_points = fixed.size();
  res.dim_invariants = orbit_sums(Q).size();

  std::vector<FpVector> traces;
  for (const auto& R : group::all_subgroups(Q)) {
    if (R.order() == Q.order()) continue;
    const auto cosets = group::left_coset_reps(Q, R);
    for (const auto& v : orbit_sums(R)) {
      std::vector<unsigned> t(d, 0);
      for (Index q : cosets)
        for (std::uint32_t x = 0; x < d; ++x)
          if (v[x]) ++t[omega.act(q, x)];
      FpVector tv(d);
      for (std::size_t x = 0; x < d; ++x) tv[x] = static_cast<Residue>(t[x] % p);
      traces.push_back(std::move(tv));
    }
  }
  const FpSubspace T = FpSubspace::span(p, d, traces);
  res.dim_traces = T.dim();
  res.dim_quotient = res.dim_invariants - res.dim_traces;
  res.traces_vanish_on_fixed_points = true;
  for (std::size_t i = 0; i < T.dim(); ++i)
    for (auto x : fixed)
      if (T.basis()(i, x)) res.traces_vanish_on_fixed_points = false;

  const auto N = group::normalizer(omega.group(), Q);
  res.action_agrees = true;
  for (Index n : N.generators()) {
    for (auto w : fixed)
      if (!std::binary_search(fixed.begin(), fixed.end(), omega.act(n, w))) res.action_agrees = false;
    for (std::size_t i = 0; i < T.dim(); ++i) {
      FpVector moved(d, 0);
      for (std::uint32_t x = 0; x < d; ++x) moved[omega.act(n, x)] = T.basis()(i, x);
      if (!T.contains(moved)) res.action_agrees = false;
    }
  }
  return res;
}

struct FixedPointReport {
  std::size_t fixed_points = 0;
  bool base_point_fixed = false;
  bool normalizer_transitive = false;
  bool normalizer_stabilizer = false;  // stabilizer of the base point in N_G(Q) is N_H(Q)
  bool qc_transitive = false;
  bool qc_stabilizer = false;  // stabilizer of the base point in Q C_G(Q) is Q C_H(Q)
  bool transporter_equal = false;  // T_G(Q, H) = N_G(Q) H
  std::size_t transporter_size = 0;
  std::optional<Index> witness;  // an element on which a set comparison failed
  bool ok() const {
    return base_point_fixed && normalizer_transitive && normalizer_stabilizer && qc_transitive && qc_stabilizer &&
           transporter_equal;
  }
};

/// The three G-set checks behind M(Q) = Ind_{N_H(Q)}^{N_G(Q)} k and its restriction to Q C_G(Q).
template <group::GroupElement E>
FixedPointReport check_lemma_2_2(const CosetSpace<E>& omega, const group::Subgroup<E>& Q) {
  const auto& G = omega.group();
  const auto& H = omega.stabilizer();
  const auto& A = G.parent();
  FixedPointReport r;
  const auto fixed = omega.fixed_points(Q);
  r.fixed_points = fixed.size();
  r.base_point_fixed = std::binary_search(fixed.begin(), fixed.end(), 0u);
  if (!r.base_point_fixed) return r;

  auto orbit_and_stabilizer = [&](const group::Subgroup<E>& K, const group::Subgroup<E>& expected, bool& transitive,
                                  bool& stab_ok) {
    std::vector<std::uint32_t> orb;
    std::vector<char> seen(omega.size(), 0);
    std::vector<Index> stab;
    for (Index k : K.members()) {
      const auto y = omega.act(k, 0);
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
      if (y == 0) stab.push_back(k);
    }
    std::sort(orb.begin(), orb.end());
    transitive = orb == fixed;
    stab_ok = stab == expected.members();
    if (!stab_ok && !r.witness) {
      for (Index k : stab)
        if (!expected.contains(k)) r.witness = k;
      for (Index k : expected.members())
        if (!r.witness && omega.act(k, 0) != 0) r.witness = k;
    }
  };
  const auto N = group::normalizer(G, Q);
  orbit_and_stabilizer(N, group::normalizer(H, Q), r.normalizer_transitive, r.normalizer_stabilizer);
  const auto QC = group::join(Q, group::centralizer(G, Q));
  const auto QCH = group::join(Q, group::centralizer(H, Q));
  orbit_and_stabilizer(QC, QCH, r.qc_transitive, r.qc_stabilizer);

  std::vector<char> in_nh(A.order(), 0);
  for (Index n : N.members())
    for (Index h : H.members()) in_nh[A.mul(n, h)] = 1;
  r.transporter_equal = true;
  for (Index g : G.members()) {
    const Index gi = A.inv(g);
    const bool in_t = std::all_of(Q.generators().begin(), Q.generators().end(),
                                  [&](Index q) { return H.contains(A.conj(gi, q)); });
    r.transporter_size += in_t;
    if (in_t != static_cast<bool>(in_nh[g])) {
      r.transporter_equal = false;
      if (!r.witness) r.witness = g;
    }
  }
  return r;
}

struct MackeyReport {
  std::vector<std::size_t> orbit_sizes;         // N-orbits on G/H, sorted
  std::vector<std::size_t> double_coset_sizes;  // |N g H| / |H| over N\G/H, sorted
  bool stabilizer_formula = true;               // |N x| = |N : N cap xHx^-1| for each orbit rep
  bool ok() const { return stabilizer_formula && orbit_sizes == double_coset_sizes; }
};

/// Restriction of k[G/H] to N against an independent double coset enumeration.
template <group::GroupElement E>
MackeyReport mackey_check(const CosetSpace<E>& omega, const group::Subgroup<E>& N) {
  const auto& G = omega.group();
  const auto& H = omega.stabilizer();
  const auto& A = G.parent();
  MackeyReport r;
  std::vector<Perm> gens;
  for (Index n : N.generators()) gens.push_back(omega.perm(n));
  for (const auto& o : orbits(omega.size(), gens)) {
    r.orbit_sizes.push_back(o.size());
    const auto conjH = group::conjugate(H, omega.reps()[o.front()]);
    if (o.size() * group::intersection(N, conjH).order() != N.order()) r.stabilizer_formula = false;
  }
  std::vector<char> seen(A.order(), 0);
  for (Index g : G.members()) {
    if (seen[g]) continue;
    std::size_t count = 0;
    for (Index n : N.members())
      for (Index h : H.members()) {
        const Index x = A.mul(A.mul(n, g), h);
        if (!seen[x]) {
          seen[x] = 1;
          ++count;
        }
      }
    r.double_coset_sizes.push_back(count / H.order());
  }
  std::sort(r.orbit_sizes.begin(), r.orbit_sizes.end());
  std::sort(r.double_coset_sizes.begin(), r.double_coset_sizes.end());
  return r;
}

struct ScottReport {
  std::size_t degree = 0;
  IndecomposabilityVerdict verdict;
  bool ok() const { return verdict.status == Verdict::IndecomposableAbs; }
};

/// Ind_H^G k is the Scott module for a Sylow subgroup of H exactly when it is indecomposable.
template <group::GroupElement E>
ScottReport verify_scott(const CosetSpace<E>& omega, unsigned p, std::uint64_t seed = 1, const AlgebraLimits& limits = {}) {
  ScottReport r;
  r.degree = omega.size();
  r.verdict = indecomposable(omega.module(omega.group(), p), seed, limits);
  return r;
}

struct BrauerClassReport {
  std::size_t lattice_index = 0;
  std::size_t order = 0;
  std::size_t class_size = 0;
  std::size_t fixed_points = 0;
  std::size_t qc_order = 0;  // |Q C_G(Q)|
  std::optional<IndecomposabilityVerdict> verdict;  // absent when M(Q) = 0
  bool ok() const { return !verdict || verdict->status != Verdict::Decomposable; }
};

/// M(Q) as a Q C_G(Q)-module for one representative of each G-class of subgroups of P.
/// Subgroups not conjugate into P have M(Q) = 0 and are not visited.
template <group::GroupElement E>
std::vector<BrauerClassReport> brauer_indecomposability_sweep(const CosetSpace<E>& omega, const group::Subgroup<E>& P,
                                                              unsigned p, unsigned jobs = 1, std::uint64_t seed = 1,
                                                              const AlgebraLimits& limits = {}) {
  const auto& G = omega.group();
  fusion::FusionSystem<E> F(G, P, p);
  const auto cls = fusion::classify_subgroups(F);
  (void)G.generators();
  std::vector<BrauerClassReport> out(cls.classes.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (std::size_t c; (c = next++) < out.size();) {
      try {
        const group::Subgroup<E> Q = cls.lattice[cls.representative[c]];
        auto& r = out[c];
        r.lattice_index = cls.representative[c];
        r.order = Q.order();
        r.class_size = cls.classes[c].size();
        const auto fixed = omega.fixed_points(Q);
        r.fixed_points = fixed.size();
        const auto QC = group::join(Q, group::centralizer(G, Q));
        r.qc_order = QC.order();
        if (!fixed.empty()) r.verdict = indecomposable(omega.restricted_module(QC, fixed, p), seed, limits);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace qdv::rep
