#include <map>
#include <set>

#include "doctest.h"
#include "qdv/group/perm.hpp"
#include "qdv/qd/qd.hpp"

using namespace qdv;
using namespace qdv::qd;
using group::Index;

namespace {

std::multiset<std::size_t> class_sizes(const QdGroup& g) {
  // Direct orbit computation under conjugation by every element.
  std::multiset<std::size_t> out;
  std::vector<char> seen(g.order(), 0);
  for (Index x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<QdElement> cls;
    for (const auto& y : g.elements()) cls.insert(y * g.element(x) * y.inverse());
    for (const auto& c : cls) seen[g.index_of(c)] = 1;
    out.insert(cls.size());
  }
  return out;
}

long inverse_mod(long x, long p) {
  for (long y = 1; y < p; ++y)
    if ((x * y) % p == 1) return y;
  return -1;
}

}  // namespace

TEST_CASE("SL2 and Qd arithmetic") {
  CHECK_THROWS_AS(SL2::make(3, 1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_qd(4), std::invalid_argument);
  const auto a = alpha(5);
  CHECK(a.power(5) == SL2::identity(5));
  CHECK(a * a.inverse() == SL2::identity(5));
  CHECK(gamma(7).power(4) == SL2::identity(7));
  auto x = QdElement{5, {1, 3}, beta(5)}, y = QdElement{5, {2, 4}, gamma(5)}, z = QdElement{5, {0, 1}, nu(5, 2)};
  CHECK((x * y) * z == x * (y * z));
  CHECK(x * x.inverse() == QdElement::identity(5));
  CHECK((x * y).v == std::array<Residue, 2>{static_cast<Residue>((1 + 2) % 5), static_cast<Residue>((3 + 2 + 4) % 5)});
}

TEST_CASE("build_qd") {
  auto m2 = build_qd(2);
  CHECK(m2.order() == 24);
  CHECK(class_sizes(m2) == std::multiset<std::size_t>{1, 3, 6, 6, 8});
  auto m3 = build_qd(3);
  // 27 translations times |SL(2,3)|, the latter counted directly.
  std::size_t sl = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) sl += ((a * d - b * c) % 3 + 3) % 3 == 1;
  CHECK(m3.order() == 9 * sl);
  CHECK(m3.order() == 216);
  CHECK(build_qd(5).order() == qd_order(5));
  const auto& e = m3.identity();
  for (const auto& g : m3.elements()) CHECK(g * e * g.inverse() == e);
  CHECK_THROWS_AS(build_qd(5, {.max_order = 1000}), group::CapExceeded);
}

TEST_CASE("Sylow subgroup P") {
  for (unsigned p : {3u, 5u}) {
    auto m = build_qd(p);
    auto P = sylow_P(m);
    CHECK(P.order() == p * p * p);
    CHECK(group::sylow_p(group::Subgroup<QdElement>::whole(m), p).order() == P.order());
    for (Index x : P.members())
      if (x != m.identity_index()) CHECK(group::element_order(m, x) == p);
    auto Z = group::centralizer(P, P);
    CHECK(Z.order() == p);
    CHECK(Z.contains_element(t_element(p)));
    // Commutator subgroup equals the center.
    std::vector<Index> comms;
    for (Index a : P.members())
      for (Index b : P.generators()) comms.push_back(m.mul(m.mul(a, b), m.mul(m.inv(a), m.inv(b))));
    CHECK(group::Subgroup<QdElement>::generated(m, comms) == Z);
    auto V = subgroup_V(m);
    CHECK(V.order() == p * p);
    CHECK(V.is_subgroup_of(P));
    CHECK(group::is_normal(group::Subgroup<QdElement>::whole(m), V));
    for (long r = 1; r < static_cast<long>(p); ++r) {
      Index g = m.index_of(QdElement::linear(nu(p, r)));
      CHECK(group::conjugate(P, g) == P);
    }
  }
  auto m2 = build_qd(2);
  auto P2 = sylow_P(m2);
  CHECK(P2.order() == 8);
  CHECK(group::conjugacy_classes(P2).size() == 5);
  int order4 = 0;
  for (Index x : P2.members()) order4 += group::element_order(m2, x) == 4;
  CHECK(order4 == 2);
}

TEST_CASE("normalizer of P is the upper triangular part") {
  for (unsigned p : {2u, 3u, 5u}) {
    auto m = build_qd(p);
    auto P = sylow_P(m);
    auto N = group::normalizer(group::Subgroup<QdElement>::whole(m), P);
    if (p == 2) {
      CHECK(N == P);
      continue;
    }
    CHECK(N.order() == p * p * p * (p - 1));
    for (Index x : N.members()) CHECK(in_upper_borel(m.element(x)));
  }
}

TEST_CASE("coset representative table") {
  auto t2 = coset_reps(2);
  REQUIRE(t2.reps.size() == 3);
  CHECK(t2.reps[0] == QdElement::identity(2));
  CHECK(t2.reps[1] == QdElement::linear(beta(2)));
  CHECK(t2.reps[2] == QdElement::linear(gamma(2)));

  auto t3 = coset_reps(3);
  const std::vector<SL2> expect{nu(3, 1),        nu(3, 2),        beta(3) * nu(3, 1), beta(3) * nu(3, 2),
                                beta(3).power(2) * nu(3, 1), beta(3).power(2) * nu(3, 2), gamma(3) * nu(3, 1), gamma(3) * nu(3, 2)};
  REQUIRE(t3.reps.size() == 8);
  for (std::size_t j = 0; j < 8; ++j) CHECK(t3.reps[j].A == expect[j]);

  for (unsigned p : {2u, 3u, 5u}) {
    auto t = coset_reps(p);
    CHECK(t.n == p * p - 1);
    CHECK(t.reps[0] == QdElement::identity(p));
    auto m = build_qd(p);
    CHECK_NOTHROW(validate_partition(t, m));
    auto P = sylow_P(m);
    auto N = group::normalizer(group::Subgroup<QdElement>::whole(m), P);
    for (std::size_t j = 0; j + 1 < p; ++j) CHECK(N.contains_element(t.reps[j]));
    // m_{p+r-1} = beta nu_r
    for (long r = 1; r < static_cast<long>(p); ++r) CHECK(t.reps[p + r - 2].A == beta(p) * nu(p, r));
    for (const auto& x : m.elements()) CHECK(in_P(t.reps[t.coset_of(x)].inverse() * x));
  }
  CHECK(coset_reps(7).reps.size() == 48);
}

TEST_CASE("alpha beta relations") {
  // p = 3, s = 1: alpha beta = beta^2 nu_2 alpha^2
  CHECK(alpha(3) * beta(3) == beta(3).power(2) * nu(3, 2) * alpha(3).power(2));
  CHECK(check_alpha_beta_relation(3, 1));
  CHECK(check_alpha_beta_relation(5, 0));
  for (unsigned p : {3u, 5u, 7u, 11u}) {
    for (unsigned s = 0; s < p; ++s) {
      CHECK(check_alpha_beta_relation(p, s));
      // Oracle: the same identities from integer matrix products written out by hand.
      long a11 = 1 + s, a12 = 1, a21 = s, a22 = 1;  // alpha * beta^s
      if (s + 1 < p) {
        long inv = inverse_mod(s + 1, p), e = (s * inv) % p;
        // beta^e nu_{s+1} alpha^inv = [[s+1, inv (s+1)], [e (s+1), e inv (s+1) + inv]]
        long b11 = s + 1, b12 = inv * (s + 1), b21 = e * (s + 1), b22 = e * inv * (s + 1) + inv;
        CHECK((a11 - b11) % long(p) == 0);
        CHECK((a12 - b12) % long(p) == 0);
        CHECK((a21 - b21) % long(p) == 0);
        CHECK((a22 - b22) % long(p) == 0);
      }
    }
    CHECK(check_alpha_gamma_relation(p));
  }
  CHECK_THROWS_AS(check_alpha_beta_relation(2, 0), std::invalid_argument);
}

TEST_CASE("f iteration") {
  auto f3 = f_iteration(3);
  CHECK(f3.values == std::vector<Residue>{1, 2});
  CHECK(f3.first_hit == 1u);
  auto f5 = f_iteration(5);
  CHECK(f5.values == std::vector<Residue>{1, 3, 2, 4});
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    auto f = f_iteration(p);
    REQUIRE(f.first_hit.has_value());
    CHECK(*f.first_hit == p - 2);
    for (std::size_t s = 0; s < f.values.size(); ++s) CHECK(f.values[s] == inverse_mod(static_cast<long>(s) + 1, p));
    CHECK(f_is_bijection(p));
  }
}

TEST_CASE("beta nu alpha conjugate is unitriangular only for r = r' and i = 0") {
  for (unsigned p : {3u, 5u}) {
    for (long r = 1; r < static_cast<long>(p); ++r)
      for (long r2 = 1; r2 < static_cast<long>(p); ++r2)
        for (long i = 0; i < static_cast<long>(p); ++i) {
          const auto m = beta_nu_alpha_product(p, r, r2, i);
          CHECK(m == beta_nu_alpha_matrix(p, r, r2, i));
          CHECK(m.is_upper_unitriangular() == (r == r2 && i == 0));
        }
  }
}
