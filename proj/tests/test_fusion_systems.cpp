#include <random>

#include "doctest.h"
#include "qdv/fusion/fusion.hpp"
#include "qdv/park/qd_embedding.hpp"

using namespace qdv;
using namespace qdv::fusion;
using group::Index;
using qd::QdElement;

namespace {

template <class E>
std::size_t find_lattice(const SubgroupClassification<E>& c, const group::Subgroup<E>& q) {
  for (std::size_t i = 0; i < c.lattice.size(); ++i)
    if (c.lattice[i] == q) return i;
  FAIL("subgroup not in lattice");
  return 0;
}

}  // namespace

TEST_CASE("hom sets in Qd(3)") {
  auto M = qd::build_qd(3);
  auto whole = group::Subgroup<QdElement>::whole(M);
  auto P = qd::sylow_P(M);
  auto triv = group::Subgroup<QdElement>::trivial(M);
  CHECK(hom_set(whole, triv, triv).size() == 1);
  CHECK(hom_set(whole, triv, P).size() == 1);

  // Inner maps from N_P(Q) all appear in Hom_P(Q,Q).
  auto V = qd::subgroup_V(M);
  auto homs = hom_set(P, V, V);
  const auto NV = group::normalizer(P, V);
  for (Index g : NV.members()) {
    Morphism m;
    m.domain = V.members();
    for (Index v : V.members()) m.images.push_back(M.conj(g, v));
    CHECK(std::binary_search(homs.begin(), homs.end(), m));
  }
  for (const auto& m : homs) CHECK(witness_realizes(M, m));

  // Composition closes on samples.
  auto homPP = hom_set(whole, V, V);
  for (std::size_t i = 0; i < homPP.size(); i += 5)
    for (std::size_t j = 0; j < homPP.size(); j += 7) {
      auto c = compose(M, homPP[i], homPP[j]);
      REQUIRE(c.has_value());
      CHECK(witness_realizes(M, *c));
      CHECK(std::binary_search(homPP.begin(), homPP.end(), *c));
    }
}

TEST_CASE("order p subgroups of V are conjugate to Z(P)") {
  for (unsigned p : {2u, 3u}) {
    auto M = qd::build_qd(p);
    auto whole = group::Subgroup<QdElement>::whole(M);
    auto P = qd::sylow_P(M);
    FusionSystem<QdElement> F(whole, P, p);
    auto V = qd::subgroup_V(M);
    auto Z = group::Subgroup<QdElement>::generated(M, {M.index_of(qd::t_element(p))});
    for (const auto& Q : group::all_subgroups(V)) {
      if (Q.order() != p) continue;
      auto g = F.conjugate(Q, Z);
      REQUIRE(g.has_value());
      CHECK(group::conjugate(Q, *g) == Z);
      CHECK(!F.hom(Q, Z).empty());
    }
  }
}

TEST_CASE("fusion equality") {
  auto M = qd::build_qd(2);
  auto whole = group::Subgroup<QdElement>::whole(M);
  auto P = qd::sylow_P(M);
  CHECK(fusion_equal(whole, whole, P));
  auto diff = fusion_difference(P, whole, P);
  REQUIRE(diff.has_value());
  CHECK_FALSE(diff->in_first);
  // The discrepancy fuses an element of V into the centre or out of it.
  CHECK(diff->Q.size() == 2);

  auto emb = park::qd_embedding(2);
  auto G = emb.enumerate();
  auto Gw = group::Subgroup<park::QdWreath>::whole(G);
  auto iM = park::iota_subgroup(G, emb, M.elements());
  auto iP = park::iota_subgroup(G, emb, qd::P_elements(2));
  CHECK(fusion_equal(iM, Gw, iP));
}

TEST_CASE("classification of subgroups") {
  for (unsigned p : {2u, 3u}) {
    auto M = qd::build_qd(p);
    auto whole = group::Subgroup<QdElement>::whole(M);
    auto P = qd::sylow_P(M);
    FusionSystem<QdElement> F(whole, P, p);
    auto c = classify_subgroups(F);
    // Classes partition the lattice.
    std::vector<int> seen(c.lattice.size(), 0);
    for (const auto& cl : c.classes)
      for (auto i : cl) ++seen[i];
    for (int s : seen) CHECK(s == 1);
    CHECK(c.classes[0] == std::vector<std::size_t>{0});
    CHECK(c.info[0].fully_normalized);
    // Z(P) is the only fully normalized order-p subgroup of V.
    auto V = qd::subgroup_V(M);
    auto Z = group::Subgroup<QdElement>::generated(M, {M.index_of(qd::t_element(p))});
    const auto zi = find_lattice(c, Z);
    CHECK(c.info[zi].fully_normalized);
    for (auto i : c.classes[c.info[zi].cls])
      if (i != zi) CHECK_FALSE(c.info[i].fully_normalized);
    CHECK(c.representative[c.info[zi].cls] == zi);
    // A fully normalized representative is also fully centralized.
    for (std::size_t k = 0; k < c.classes.size(); ++k) CHECK(c.info[c.representative[k]].fully_centralized);
    REQUIRE(c.Op.has_value());
    CHECK(*c.Op == V);
    CHECK(is_constrained(F));
    CHECK(is_strictly_p_constrained(whole, p));

    if (p == 3) {
      // <t> x <y> with y = alpha is an order 9 subgroup not equal to V.
      auto Q = group::Subgroup<QdElement>::generated(
          M, {M.index_of(qd::t_element(3)), M.index_of(QdElement::linear(qd::alpha(3)))});
      CHECK(Q.order() == 9);
      CHECK_FALSE(Q == V);
      CHECK(c.info[find_lattice(c, Q)].order == 9);
    }
  }
}

TEST_CASE("G-classes of subgroups of iota P match F-classes at p = 2") {
  auto M = qd::build_qd(2);
  auto whole = group::Subgroup<QdElement>::whole(M);
  auto P = qd::sylow_P(M);
  auto cM = classify_subgroups(FusionSystem<QdElement>(whole, P, 2));

  auto emb = park::qd_embedding(2);
  auto G = emb.enumerate();
  auto Gw = group::Subgroup<park::QdWreath>::whole(G);
  auto iP = park::iota_subgroup(G, emb, qd::P_elements(2));
  FusionSystem<park::QdWreath> FG(Gw, iP, 2);
  CHECK_FALSE(FG.sylow_in_ambient());
  auto cG = classify_subgroups(FG);
  CHECK(cG.lattice.size() == cM.lattice.size());
  CHECK(cG.classes.size() == cM.classes.size());
  CHECK(cG.lattice.size() == 10);
}

TEST_CASE("constraint predicates") {
  auto S4 = group::FiniteGroup<group::Perm>::closure({group::Perm::from_cycles(4, {{0, 1}}), group::Perm::from_cycles(4, {{0, 1, 2, 3}})});
  auto w = group::Subgroup<group::Perm>::whole(S4);
  CHECK(is_strictly_p_constrained(w, 2));
  CHECK_FALSE(is_strictly_p_constrained(w, 3));
  auto D8 = group::sylow_p(w, 2);
  CHECK(is_strictly_p_constrained(D8, 2));
  auto S3 = group::FiniteGroup<group::Perm>::closure({group::Perm::from_cycles(3, {{0, 1}}), group::Perm::from_cycles(3, {{0, 1, 2}})});
  // O_2'(S3) = C3 is nontrivial.
  CHECK_FALSE(is_strictly_p_constrained(group::Subgroup<group::Perm>::whole(S3), 2));
  CHECK_THROWS_AS(FusionSystem<group::Perm>(w, w, 2), std::invalid_argument);
}
