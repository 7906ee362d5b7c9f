#include "doctest.h"
#include "qdv/wreath/structural.hpp"

using namespace qdv;
using namespace qdv::wreath;
using group::Subgroup;
using park::QdWreath;
using qd::QdElement;

namespace {

BigInt power(std::uint64_t a, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= a;
  return r;
}

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= static_cast<unsigned>(i);
  return r;
}

/// Compares the structural centralizer with the brute-force one in the enumerated group.
void compare_with_brute_force(const group::FiniteGroup<QdWreath>& G, const park::QdEmbedding& emb,
                              const Subgroup<QdWreath>& S) {
  std::vector<QdWreath> gens;
  for (auto g : S.generators()) gens.push_back(G.element(g));
  const auto r = centralizer_wreath(emb, gens, 2);
  const auto brute = group::centralizer(Subgroup<QdWreath>::whole(G), S);
  CHECK(r.order == BigInt(brute.order()));
  std::vector<group::Index> idx;
  for (const auto& g : r.generators) idx.push_back(G.index_of(g));
  CHECK(Subgroup<QdWreath>::generated(G, idx) == brute);
}

}  // namespace

TEST_CASE("trivial S gives the whole wreath product") {
  for (unsigned p : {2u, 3u, 5u}) {
    auto emb = park::qd_embedding(p);
    auto r = centralizer_wreath(emb, {}, p);
    CHECK(r.order == emb.order());
    CHECK(r.order == power(p * p * p, p * p - 1) * factorial(p * p - 1));
    CHECK_FALSE(r.is_p_group);
    auto r1 = centralizer_wreath(emb, {emb.identity()}, p);
    CHECK(r1.order == emb.order());
  }
}

TEST_CASE("structural centralizers match brute force at p = 2") {
  auto emb = park::qd_embedding(2);
  auto G = emb.enumerate();
  auto M = qd::build_qd(2);
  auto iP = park::iota_subgroup(G, emb, qd::P_elements(2));
  auto subs = group::all_subgroups(iP);
  REQUIRE(subs.size() == 10);
  for (const auto& S : subs) compare_with_brute_force(G, emb, S);
  compare_with_brute_force(G, emb, park::iota_subgroup(G, emb, qd::V_elements(2)));
  auto iM = park::iota_subgroup(G, emb, M.elements());
  compare_with_brute_force(G, emb, iM);
  // A conjugate of iota V by an element outside iota M.
  auto iV = park::iota_subgroup(G, emb, qd::V_elements(2));
  for (group::Index g = 0; g < G.order(); g += 397) compare_with_brute_force(G, emb, group::conjugate(iV, g));
}

TEST_CASE("centralizers at p = 3") {
  auto emb = park::qd_embedding(3);
  std::vector<QdWreath> iV;
  for (const auto& v : qd::V_elements(3)) iV.push_back(emb.iota(v));
  auto r = centralizer_wreath(emb, iV, 3);
  CHECK(r.is_p_group);
  for (const auto& g : r.generators) CHECK(g.in_base());

  // <t, alpha> has order 9.
  auto [ok, order] = is_p_group_centralizer(emb, {qd::t_element(3), QdElement::linear(qd::alpha(3))}, 3);
  CHECK(ok);
  CHECK(order > 1);

  auto [zok, zorder] = is_p_group_centralizer(emb, {qd::t_element(3)}, 3);
  CHECK_FALSE(zok);
  CHECK(zorder % 2 == 0);

  auto [pok, porder] = is_p_group_centralizer(emb, qd::P_elements(3), 3);
  CHECK(pok);

  CHECK_THROWS_AS(centralizer_wreath(emb, {emb.iota(qd::t_element(3))}, 3, 5), group::CapExceeded);
}

TEST_CASE("prerequisites on the tops") {
  for (unsigned p : {3u, 5u, 7u}) {
    auto emb = park::qd_embedding(p);
    CHECK(tops_of_P_fix_prefix(emb));
    auto a = alpha_cycles(emb);
    CHECK(a.ok(p));
    CHECK(a.cycles.size() == p - 1);
  }
  CHECK_THROWS_AS(alpha_cycles(park::qd_embedding(2)), std::invalid_argument);
}

TEST_CASE("structural check at p = 3") {
  auto r = structural_theorem_check(3);
  CHECK(r.ok());
  CHECK(r.rows.size() == r.classes);
  bool saw_trivial = false, saw_p = false, saw_big = false;
  for (const auto& row : r.rows) {
    CHECK(row.pass());
    if (row.order == 1) {
      saw_trivial = true;
      CHECK(row.overgroup_order == 9);
    } else if (row.order == 3) {
      saw_p = true;
      CHECK(row.overgroup_order == 9);
    } else {
      saw_big = true;
    }
  }
  CHECK((saw_trivial && saw_p && saw_big));
  CHECK_THROWS_AS(structural_theorem_check(2), std::invalid_argument);
}
