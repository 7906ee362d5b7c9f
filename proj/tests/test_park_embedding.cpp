#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "qdv/park/qd_embedding.hpp"

using namespace qdv;
using namespace qdv::park;
using qd::QdElement;

namespace {

QdWreath random_wreath(std::mt19937& rng, const std::vector<QdElement>& P, std::size_t n) {
  std::uniform_int_distribution<std::size_t> pick(0, P.size() - 1);
  QdWreath w;
  for (std::size_t i = 0; i < n; ++i) w.base.push_back(P[pick(rng)]);
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  w.top = Perm(img);
  return w;
}

}  // namespace

TEST_CASE("wreath arithmetic") {
  std::mt19937 rng(11);
  const auto P = qd::P_elements(3);
  CHECK(P.size() == 27);
  for (int k = 0; k < 1000; ++k) {
    auto a = random_wreath(rng, P, 8), b = random_wreath(rng, P, 8), c = random_wreath(rng, P, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * a.inverse() == a.identity());
    CHECK(a.inverse() * a == a.identity());
  }
  auto x = random_wreath(rng, P, 8), y = random_wreath(rng, P, 8);
  x.top = y.top = Perm::identity(8);
  auto xy = x * y;
  for (std::size_t i = 0; i < 8; ++i) CHECK(xy.base[i] == x.base[i] * y.base[i]);
  CHECK(xy.in_base());
  QdWreath short_one{{P[0]}, Perm::identity(1)};
  CHECK_THROWS_AS(x * short_one, std::invalid_argument);
}

TEST_CASE("iota on the identity and on V") {
  for (unsigned p : {2u, 3u, 5u}) {
    auto emb = qd_embedding(p);
    CHECK(emb.n() == p * p - 1);
    CHECK(emb.iota(QdElement::identity(p)) == emb.identity());
    for (const auto& u : qd::V_elements(p)) {
      auto w = emb.iota(u);
      CHECK(w.in_base());
      for (std::size_t j = 0; j < emb.n(); ++j) {
        const auto& m = emb.table().rep(j);
        CHECK(w.base[j] == m.inverse() * u * m);
      }
    }
  }
}

TEST_CASE("sigma of alpha at p = 3") {
  auto emb = qd_embedding(3);
  auto s = emb.sigma(QdElement::linear(qd::alpha(3)));
  CHECK(s(0) == 0);
  CHECK(s(1) == 1);
  auto cyc = s.cycles();
  REQUIRE(cyc.size() == 2);
  for (const auto& c : cyc) {
    CHECK(c.size() == 3);
    for (auto x : c) CHECK(x >= 2);
  }
}

TEST_CASE("iota is an injective homomorphism") {
  for (unsigned p : {2u, 3u}) {
    auto M = qd::build_qd(p);
    auto emb = qd_embedding(p);
    std::vector<QdWreath> img = iota_all(emb, M.elements());
    CHECK(std::set<QdWreath>(img.begin(), img.end()).size() == M.order());
    std::size_t bad = 0;
    for (group::Index a = 0; a < M.order(); ++a)
      for (group::Index b = 0; b < M.order(); ++b)
        if (img[M.mul(a, b)] != img[a] * img[b]) ++bad;
    CHECK(bad == 0);
  }
  // p = 5 on random pairs, images cached for all of M.
  auto M = qd::build_qd(5);
  auto emb = qd_embedding(5);
  std::vector<QdWreath> img = iota_all(emb, M.elements());
  std::mt19937 rng(5);
  std::uniform_int_distribution<group::Index> pick(0, static_cast<group::Index>(M.order() - 1));
  std::size_t bad = 0;
  for (int k = 0; k < 100000; ++k) {
    auto a = pick(rng), b = pick(rng);
    if (img[M.mul(a, b)] != img[a] * img[b]) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("iota against the left multiplication bijection") {
  for (unsigned p : {2u, 3u}) {
    auto M = qd::build_qd(p);
    auto P = qd::P_elements(p);
    auto emb = qd_embedding(p);
    for (const auto& m : M.elements()) {
      auto f = left_multiplication(M, m);
      std::vector<QdElement> on_reps;
      for (const auto& r : emb.table().reps()) on_reps.push_back(M.element(f(M.index_of(r))));
      CHECK(emb.from_values_on_reps(on_reps) == emb.iota(m));
      if (p == 2) CHECK(preserves_right_action(M, f, P));
    }
    // apply() realizes the wreath element as the bijection it came from.
    for (std::size_t k = 0; k < M.order(); k += 7) {
      const auto& m = M.element(static_cast<group::Index>(k));
      auto w = emb.iota(m);
      for (const auto& x : M.elements()) CHECK(emb.apply(w, x) == m * x);
    }
  }
  auto M2 = qd::build_qd(2);
  CHECK(left_multiplication(M2, QdElement::identity(2)).is_identity());
}

TEST_CASE("tops of P fix the first p-1 positions and depend only on the alpha part") {
  for (unsigned p : {3u, 5u, 7u}) {
    auto emb = qd_embedding(p);
    for (const auto& u : qd::P_elements(p)) {
      auto s = emb.sigma(u);
      for (std::uint32_t i = 0; i + 1 < p; ++i) CHECK(s(i) == i);
      CHECK(s == emb.sigma(QdElement::linear(u.A)));
    }
  }
}

TEST_CASE("Park group at p = 2") {
  auto emb = qd_embedding(2);
  CHECK(emb.order() == 3072);
  auto G = emb.enumerate();
  CHECK(G.order() == 3072);
  auto M = qd::build_qd(2);
  auto iM = iota_subgroup(G, emb, M.elements());
  CHECK(iM.order() == 24);
  CHECK(G.order() / iM.order() == 128);
  auto B = base_group(G);
  CHECK(B.order() == 512);
  CHECK(group::is_normal(group::Subgroup<QdWreath>::whole(G), B));
  auto iP = iota_subgroup(G, emb, qd::P_elements(2));
  auto iV = iota_subgroup(G, emb, qd::V_elements(2));
  CHECK(group::intersection(B, iP) == iV);
  CHECK(iV.order() == 4);
  auto iZ = iota_subgroup(G, emb, {QdElement::identity(2), qd::t_element(2)});
  CHECK(iZ.is_subgroup_of(group::intersection(B, iP)));
  CHECK_THROWS_AS(emb.enumerate({.max_order = 1000}), group::CapExceeded);
  CHECK_THROWS_AS(qd_embedding(3).enumerate(), group::CapExceeded);
}

TEST_CASE("B meets iota P in iota V at p = 3") {
  auto emb = qd_embedding(3);
  std::set<QdWreath> in_base, from_v;
  for (const auto& u : qd::P_elements(3)) {
    auto w = emb.iota(u);
    if (w.in_base()) in_base.insert(w);
  }
  for (const auto& v : qd::V_elements(3)) from_v.insert(emb.iota(v));
  CHECK(in_base == from_v);
  CHECK(from_v.size() == 9);
}

TEST_CASE("generic coset table on S4") {
  auto S4 = group::FiniteGroup<Perm>::closure({Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
  auto whole = group::Subgroup<Perm>::whole(S4);
  auto D8 = group::sylow_p(whole, 2);
  auto table = CosetTable<Perm>::from_subgroup(D8);
  std::vector<Perm> gens;
  for (auto g : D8.generators()) gens.push_back(S4.element(g));
  ParkEmbedding<Perm> emb(table, gens, D8.order());
  CHECK(emb.n() == 3);
  CHECK(emb.order() == 3072);
  auto img = iota_all(emb, S4.elements());
  for (group::Index a = 0; a < 24; ++a)
    for (group::Index b = 0; b < 24; ++b) CHECK(img[S4.mul(a, b)] == img[a] * img[b]);
  CHECK(std::set<WreathElement<Perm>>(img.begin(), img.end()).size() == 24);
}
