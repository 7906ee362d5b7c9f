#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdv/gf/field.hpp"
#include "qdv/group/finite_group.hpp"
#include "qdv/group/perm.hpp"

namespace qdv::qd {

using gf::Residue;

/// 2x2 matrix of determinant one over GF(p), entries [[a, b], [c, d]].
struct SL2 {
  std::uint8_t p = 2;
  Residue a = 1, b = 0, c = 0, d = 1;

  /// Throws std::invalid_argument unless ad - bc = 1 mod p.
  static SL2 make(unsigned p, long a, long b, long c, long d);
  static SL2 identity(unsigned p) { return make(p, 1, 0, 0, 1); }

  SL2 operator*(const SL2& o) const;
  SL2 inverse() const;
  SL2 identity() const { return identity(p); }
  SL2 power(long k) const;
  std::array<Residue, 2> apply(Residue x, Residue y) const;
  bool is_upper_unitriangular() const { return a == 1 && c == 0 && d == 1; }
  bool is_upper_triangular() const { return c == 0; }
  std::string to_string() const;

  auto operator<=>(const SL2&) const = default;
  bool operator==(const SL2&) const = default;
};

/// Element (v, A) of (Z/p)^2 x| SL(2,p); (v,A)(w,B) = (v + Aw, AB), vectors are columns.
struct QdElement {
  std::uint8_t p = 2;
  std::array<Residue, 2> v{0, 0};
  SL2 A;

  static QdElement translation(unsigned p, long x, long y);
  static QdElement linear(const SL2& m) { return QdElement{m.p, {0, 0}, m}; }
  static QdElement identity(unsigned p) { return linear(SL2::identity(p)); }

  QdElement operator*(const QdElement& o) const;
  QdElement inverse() const;
  QdElement identity() const { return identity(p); }
  QdElement power(long k) const;
  std::string to_string() const;

  auto operator<=>(const QdElement&) const = default;
  bool operator==(const QdElement&) const = default;
};

}  // namespace qdv::qd

template <>
struct std::hash<qdv::qd::SL2> {
  std::size_t operator()(const qdv::qd::SL2& m) const noexcept {
    return (((std::size_t{m.p} * 257 + m.a) * 257 + m.b) * 257 + m.c) * 257 + m.d;
  }
};

template <>
struct std::hash<qdv::qd::QdElement> {
  std::size_t operator()(const qdv::qd::QdElement& x) const noexcept {
    return qdv::group::hash_combine(std::hash<qdv::qd::SL2>{}(x.A), std::size_t{x.v[0]} * 257 + x.v[1]);
  }
};

namespace qdv::qd {

SL2 alpha(unsigned p);
SL2 beta(unsigned p);
SL2 gamma(unsigned p);
/// diag(r, r^-1); r is taken mod p and must be nonzero.
SL2 nu(unsigned p, long r);
/// The central element t = (1, 0) of P.
QdElement t_element(unsigned p);

/// Membership in P = V x| <alpha>: the linear part is upper unitriangular.
inline bool in_P(const QdElement& x) { return x.A.is_upper_unitriangular(); }
/// Membership in V.
inline bool in_V(const QdElement& x) { return x.A == SL2::identity(x.p); }
/// Membership in V x| {upper triangular}, the normalizer of P for odd p.
inline bool in_upper_borel(const QdElement& x) { return x.A.is_upper_triangular(); }

using QdGroup = group::FiniteGroup<QdElement>;
using QdSubgroup = group::Subgroup<QdElement>;

inline std::uint64_t qd_order(unsigned p) { return std::uint64_t{p} * p * p * (std::uint64_t{p} * p - 1); }

/// Qd(p) enumerated from t, (0,1), alpha, beta. Generators are listed in that order.
QdGroup build_qd(unsigned p, group::GroupLimits limits = {});
/// P = <t, (0,1), alpha> inside an enumerated Qd(p).
QdSubgroup sylow_P(const QdGroup& m);
QdSubgroup subgroup_V(const QdGroup& m);
/// Element lists without enumerating Qd(p): P as v alpha^i, V as translations.
std::vector<QdElement> P_elements(unsigned p);
std::vector<QdElement> V_elements(unsigned p);

/// The left coset representatives m_1..m_n of P in Qd(p), n = p^2 - 1; reps[j-1] = m_j.
struct CosetRepTable {
  unsigned p = 0;
  std::size_t n = 0;
  std::vector<QdElement> reps;

  /// 0-based index i with x in m_{i+1} P. Throws std::logic_error if no rep matches.
  std::size_t coset_of(const QdElement& x) const;
};

/// Throws std::logic_error on a transcription error (reps not pairwise in distinct cosets).
CosetRepTable coset_reps(unsigned p);
/// Checks that {m_j P} partitions the enumerated group; throws std::logic_error otherwise.
void validate_partition(const CosetRepTable& table, const QdGroup& m);

/// The three matrix identities used for the action of alpha on cosets; p odd, 0 <= s <= p-1.
bool check_alpha_beta_relation(unsigned p, unsigned s);
bool check_alpha_gamma_relation(unsigned p);

struct FIteration {
  std::vector<Residue> values;  // f^(0)(1), f^(1)(1), ... up to the first value p-1
  std::optional<std::size_t> first_hit;
};
/// Iterates f(s) = s (s+1)^-1 from 1; p odd.
FIteration f_iteration(unsigned p);
/// f is a bijection from (Z/p)* \ {p-1} onto (Z/p)* \ {1}.
bool f_is_bijection(unsigned p);

/// beta nu_r alpha^-i nu_r'^-1 beta^-1, evaluated by matrix products.
SL2 beta_nu_alpha_product(unsigned p, long r, long r2, long i);
/// The same matrix written out entrywise.
SL2 beta_nu_alpha_matrix(unsigned p, long r, long r2, long i);

}  // namespace qdv::qd
