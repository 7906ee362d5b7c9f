#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdv/park/park.hpp"

namespace qdv::wreath {

using park::BigInt;
using park::WreathElement;
using group::Perm;

template <group::GroupElement E>
struct CentralizerResult {
  BigInt order = 0;
  std::vector<WreathElement<E>> generators;
  bool is_p_group = false;
  std::uint64_t candidates = 0;  // (orbit, orbit, root image) triples examined
  /// Orbits of the tops of S grouped into isomorphism classes, with the local automorphism count per class.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::uint64_t> local_count;
};

namespace detail {

/// x on one orbit O of T = <tops of S> for an element whose tau^-1 maps O onto another orbit.
template <group::GroupElement E>
struct LocalSolution {
  std::vector<std::uint32_t> rho;  // rho[k] = tau^-1(k) for k in O, else unset
  std::vector<E> x;                // x[k] for k in O
};

inline bool is_power(BigInt n, std::uint64_t p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace detail

/// C_{P wr S_n}(S) without enumerating the wreath product.
///
/// g = (x; tau) commutes with s = (y; sigma) iff tau sigma = sigma tau and
/// x_{sigma(k)} = y_{sigma(k)} x_k y_{sigma(tau^-1 k)}^-1 for all k. So tau^-1 maps each orbit O of the tops
/// onto an orbit O' equivariantly, and x on O is fixed by x at one root once tau^-1 on O is chosen.
/// Writing c(O, O') for the number of such local solutions, |C| is the permanent of c; c is checked to be
/// constant and nonzero exactly on an equivalence relation, which gives prod over classes of a^m m!.
template <group::GroupElement E>
CentralizerResult<E> centralizer_wreath(const std::vector<E>& P, std::size_t n, const std::vector<WreathElement<E>>& S,
                                        std::uint64_t p, std::uint64_t budget = 50'000'000) {
  using W = WreathElement<E>;
  if (P.empty()) throw std::invalid_argument("centralizer_wreath: empty P");
  for (const auto& s : S)
    if (s.base.size() != n || s.top.degree() != n) throw std::invalid_argument("centralizer_wreath: generator size");
  const E one = P.front().identity();

  std::vector<std::vector<std::uint32_t>> orbit_list;
  std::vector<std::size_t> orbit_of(n, SIZE_MAX);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (orbit_of[x] != SIZE_MAX) continue;
    std::vector<std::uint32_t> o{x};
    orbit_of[x] = orbit_list.size();
    for (std::size_t h = 0; h < o.size(); ++h)
      for (const auto& s : S) {
        const auto y = s.top(o[h]);
        if (orbit_of[y] == SIZE_MAX) {
          orbit_of[y] = orbit_list.size();
          o.push_back(y);
        }
      }
    orbit_list.push_back(std::move(o));  // BFS order; o[0] is the root
  }
  const std::size_t m = orbit_list.size();
  CentralizerResult<E> res;

  // Local solutions on orbit O with tau^-1 (O) = O' and tau^-1 (root) = b.
  auto solve = [&](std::size_t O, std::size_t Op, std::uint32_t b, bool all) {
    std::vector<detail::LocalSolution<E>> out;
    const auto& orb = orbit_list[O];
    if (orb.size() != orbit_list[Op].size()) return out;
    if (++res.candidates > budget)
      throw group::CapExceeded("centralizer_wreath", budget, "orbit pair candidates");
    std::vector<std::uint32_t> rho(n, UINT32_MAX);
    rho[orb[0]] = b;
    for (std::size_t h = 0; h < orb.size(); ++h)
      for (const auto& s : S) {
        const auto k = orb[h], sk = s.top(k), img = s.top(rho[k]);
        if (rho[sk] == UINT32_MAX)
          rho[sk] = img;
        else if (rho[sk] != img)
          return out;
      }
    for (const E& root : P) {
      std::vector<E> x(n, one);
      std::vector<char> set(n, 0);
      x[orb[0]] = root;
      set[orb[0]] = 1;
      bool ok = true;
      for (std::size_t h = 0; h < orb.size() && ok; ++h)
        for (const auto& s : S) {
          const auto k = orb[h], sk = s.top(k);
          E v = s.base[sk] * x[k] * s.base[s.top(rho[k])].inverse();
          if (!set[sk]) {
            x[sk] = std::move(v);
            set[sk] = 1;
          } else if (x[sk] != v) {
            ok = false;
            break;
          }
        }
      if (!ok) continue;
      out.push_back({rho, std::move(x)});
      if (!all) break;
    }
    return out;
  };
  auto count = [&](std::size_t O, std::size_t Op) {
    std::uint64_t c = 0;
    if (orbit_list[O].size() != orbit_list[Op].size()) return c;
    for (auto b : orbit_list[Op]) c += solve(O, Op, b, true).size();
    return c;
  };

  std::vector<std::uint64_t> c(m * m, 0);
  for (std::size_t O = 0; O < m; ++O)
    for (std::size_t Op = 0; Op < m; ++Op) c[O * m + Op] = count(O, Op);
  std::vector<std::size_t> cls(m, SIZE_MAX);
  res.order = 1;
  for (std::size_t O = 0; O < m; ++O) {
    if (cls[O] != SIZE_MAX) continue;
    cls[O] = res.classes.size();
    res.classes.push_back({O});
    res.local_count.push_back(c[O * m + O]);
    for (std::size_t Op = O + 1; Op < m; ++Op)
      if (c[O * m + Op] != 0) {
        cls[Op] = cls[O];
        res.classes.back().push_back(Op);
      }
  }
  for (std::size_t O = 0; O < m; ++O)
    for (std::size_t Op = 0; Op < m; ++Op) {
      const std::uint64_t want = cls[O] == cls[Op] ? res.local_count[cls[O]] : 0;
      if (c[O * m + Op] != want) throw std::logic_error("centralizer_wreath: orbit counts do not form constant classes");
    }
  for (std::size_t k = 0; k < res.classes.size(); ++k)
    for (std::size_t i = 0; i < res.classes[k].size(); ++i) {
      res.order *= res.local_count[k];
      res.order *= static_cast<unsigned>(i + 1);
    }

  auto element = [&](const std::vector<const detail::LocalSolution<E>*>& parts) {
    W g = W::identity(one, n);
    std::vector<std::uint32_t> tau_inv(n);
    for (std::uint32_t k = 0; k < n; ++k) tau_inv[k] = k;
    for (const auto* part : parts)
      for (std::uint32_t k = 0; k < n; ++k)
        if (part->rho[k] != UINT32_MAX) {
          tau_inv[k] = part->rho[k];
          g.base[k] = part->x[k];
        }
    g.top = Perm(tau_inv).inverse();
    return g;
  };
  for (const auto& members : res.classes) {
    const std::size_t O = members.front();
    std::vector<detail::LocalSolution<E>> local;
    for (auto b : orbit_list[O])
      for (auto& s : solve(O, O, b, true)) local.push_back(std::move(s));
    for (const auto& s : local) {
      W g = element({&s});
      if (g != W::identity(one, n)) res.generators.push_back(std::move(g));
    }
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      const auto A = members[i], B = members[i + 1];
      std::optional<detail::LocalSolution<E>> ab, ba;
      for (auto b : orbit_list[B]) {
        auto s = solve(A, B, b, false);
        if (!s.empty()) {
          ab = std::move(s.front());
          break;
        }
      }
      for (auto b : orbit_list[A]) {
        auto s = solve(B, A, b, false);
        if (!s.empty()) {
          ba = std::move(s.front());
          break;
        }
      }
      if (!ab || !ba) throw std::logic_error("centralizer_wreath: missing swap between isomorphic orbits");
      res.generators.push_back(element({&*ab, &*ba}));
    }
  }
  for (const auto& g : res.generators)
    for (const auto& s : S)
      if (g * s != s * g) throw std::logic_error("centralizer_wreath: generator fails to commute: " + g.to_string());
  res.is_p_group = detail::is_power(res.order, p);
  return res;
}

/// Convenience form taking P from the embedding's generators.
template <group::GroupElement E>
CentralizerResult<E> centralizer_wreath(const park::ParkEmbedding<E>& emb, const std::vector<WreathElement<E>>& S,
                                        std::uint64_t p, std::uint64_t budget = 50'000'000) {
  const auto P = group::FiniteGroup<E>::closure(emb.P_generators());
  if (P.order() != emb.P_order()) throw std::logic_error("centralizer_wreath: P generators give the wrong order");
  return centralizer_wreath(P.elements(), emb.n(), S, p, budget);
}

/// Whether C_G(iota Q) is a p-group, for Q given by generators in M.
template <group::GroupElement E>
std::pair<bool, BigInt> is_p_group_centralizer(const park::ParkEmbedding<E>& emb, const std::vector<E>& Q_generators,
                                               std::uint64_t p) {
  std::vector<WreathElement<E>> S;
  for (const auto& q : Q_generators) S.push_back(emb.iota(q));
  const auto r = centralizer_wreath(emb, S, p);
  return {r.is_p_group, r.order};
}

}  // namespace qdv::wreath
