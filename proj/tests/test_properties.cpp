#include <random>

#include "doctest.h"
#include "qdv/park/qd_embedding.hpp"
#include "qdv/rep/gset.hpp"
#include "qdv/verify/checks.hpp"

using namespace qdv;
using group::FiniteGroup;
using group::Index;
using group::Perm;
using group::Subgroup;

namespace {

FiniteGroup<Perm> s4() {
  return FiniteGroup<Perm>::closure({Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
}

template <group::GroupElement E>
Subgroup<E> random_subgroup(const FiniteGroup<E>& G, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
  const int gens = std::uniform_int_distribution<int>(0, 2)(rng);
  std::vector<Index> xs;
  for (int i = 0; i < gens; ++i) xs.push_back(static_cast<Index>(pick(rng)));
  return Subgroup<E>::generated(G, xs);
}

template <group::GroupElement E>
void lagrange_and_partition(const FiniteGroup<E>& G, const Subgroup<E>& H) {
  const auto whole = Subgroup<E>::whole(G);
  REQUIRE(G.order() % H.order() == 0);
  const auto reps = group::left_coset_reps(whole, H);
  CHECK(reps.size() * H.order() == G.order());
  std::vector<int> hits(G.order(), 0);
  for (Index r : reps)
    for (Index h : H.members()) ++hits[G.mul(r, h)];
  for (int c : hits) CHECK(c == 1);
}

/// Burnside: the number of K-orbits on G/H is the mean number of fixed points.
template <group::GroupElement E>
void orbit_count(const FiniteGroup<E>& G, const Subgroup<E>& H, const Subgroup<E>& K) {
  const auto whole = Subgroup<E>::whole(G);
  rep::CosetSpace<E> omega(whole, H);
  std::vector<Perm> gens;
  for (Index k : K.generators()) gens.push_back(omega.perm(k));
  std::size_t fixed = 0;
  for (Index k : K.members()) {
    const auto pk = omega.perm(k);
    for (std::uint32_t x = 0; x < omega.size(); ++x) fixed += pk(x) == x;
  }
  CHECK(fixed == K.order() * rep::orbits(omega.size(), gens).size());
  std::size_t total = 0;
  for (const auto& o : rep::orbits(omega.size(), gens)) {
    CHECK(K.order() % o.size() == 0);
    total += o.size();
  }
  CHECK(total == omega.size());
}

}  // namespace

TEST_CASE("Lagrange and coset partition on random subgroups") {
  std::mt19937_64 rng(11);
  const auto S4 = s4();
  const auto Q3 = qd::build_qd(3);
  for (int i = 0; i < 40; ++i) {
    lagrange_and_partition(S4, random_subgroup(S4, rng));
    lagrange_and_partition(Q3, random_subgroup(Q3, rng));
  }
  const auto emb = park::qd_embedding(2);
  const auto G = emb.enumerate();
  for (int i = 0; i < 10; ++i) lagrange_and_partition(G, random_subgroup(G, rng));
}

TEST_CASE("conjugacy classes partition the group") {
  const auto Q3 = qd::build_qd(3);
  const auto whole = Subgroup<qd::QdElement>::whole(Q3);
  std::size_t total = 0;
  for (const auto& c : group::conjugacy_classes(whole)) {
    CHECK(Q3.order() % c.size() == 0);
    total += c.size();
  }
  CHECK(total == Q3.order());
}

TEST_CASE("orbit counts agree with fixed-point averages") {
  std::mt19937_64 rng(12);
  const auto S4 = s4();
  const auto Q3 = qd::build_qd(3);
  for (int i = 0; i < 30; ++i) {
    orbit_count(S4, random_subgroup(S4, rng), random_subgroup(S4, rng));
    const auto H = random_subgroup(Q3, rng);
    if (Q3.order() / H.order() <= 216) orbit_count(Q3, H, random_subgroup(Q3, rng));
  }
}

TEST_CASE("Green instances: 50 random pairs of p-power index") {
  for (unsigned p : {2u, 3u, 5u}) {
    for (std::uint64_t seed : {1u, 2u}) {
      const auto g = verify::green_instances(p, 50, seed);
      CAPTURE(p);
      CAPTURE(seed);
      CHECK(g.kept == 50);
      CHECK(g.indecomposable == g.kept);
      CHECK(g.first_failure.is_null());
      for (auto n : g.indices) CHECK((n > 1 && group::is_power_of(n, p)));
    }
  }
}

TEST_CASE("Mackey decomposition sizes") {
  std::mt19937_64 rng(13);
  const auto Q3 = qd::build_qd(3);
  const auto whole = Subgroup<qd::QdElement>::whole(Q3);
  for (int i = 0; i < 25; ++i) {
    const auto H = random_subgroup(Q3, rng);
    if (Q3.order() / H.order() > 216) continue;
    const auto N = random_subgroup(Q3, rng);
    rep::CosetSpace<qd::QdElement> omega(whole, H);
    const auto m = rep::mackey_check(omega, N);
    CHECK(m.ok());
  }
  const auto emb = park::qd_embedding(2);
  const auto G = emb.enumerate();
  const auto Gw = Subgroup<park::QdWreath>::whole(G);
  const auto iM = park::iota_subgroup(G, emb, qd::build_qd(2).elements());
  const auto iP = park::iota_subgroup(G, emb, qd::P_elements(2));
  rep::CosetSpace<park::QdWreath> omega(Gw, iM);
  for (const auto& Q : group::all_subgroups(iP)) CHECK(rep::mackey_check(omega, Q).ok());
}
