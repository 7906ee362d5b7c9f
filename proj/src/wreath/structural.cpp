#include "qdv/wreath/structural.hpp"

#include "qdv/fusion/fusion.hpp"

namespace qdv::wreath {

using qd::QdElement;

bool tops_of_P_fix_prefix(const park::QdEmbedding& emb) {
  const unsigned p = emb.one().p;
  for (const auto& u : qd::P_elements(p)) {
    const auto s = emb.sigma(u);
    for (std::uint32_t i = 0; i + 1 < p; ++i)
      if (s(i) != i) return false;
  }
  return true;
}

bool AlphaCycles::ok(unsigned p) const {
  if (!fixes_prefix || cycles.size() != p - 1) return false;
  std::vector<char> hit(p * p - 1, 0);
  for (const auto& c : cycles) {
    if (c.size() != p) return false;
    for (auto x : c) {
      if (x + 1 < p || hit[x]) return false;
      hit[x] = 1;
    }
  }
  return true;
}

AlphaCycles alpha_cycles(const park::QdEmbedding& emb) {
  const unsigned p = emb.one().p;
  if (p == 2) throw std::invalid_argument("alpha_cycles: needs odd p");
  const auto s = emb.sigma(QdElement::linear(qd::alpha(p)));
  AlphaCycles r;
  r.fixes_prefix = true;
  for (std::uint32_t i = 0; i + 1 < p; ++i)
    if (s(i) != i) r.fixes_prefix = false;
  for (auto& c : s.cycles())
    if (c.size() > 1) r.cycles.push_back(std::move(c));
  return r;
}

bool StructuralReport::ok() const {
  if (!prefix_fixed || !alpha_cycles_ok || rows.size() != classes) return false;
  for (const auto& r : rows)
    if (!r.pass()) return false;
  return true;
}

StructuralReport structural_theorem_check(unsigned p, std::uint64_t budget) {
  if (p == 2 || p > 7) throw std::invalid_argument("structural_theorem_check: p must be 3, 5 or 7");
  const auto emb = park::qd_embedding(p);
  StructuralReport rep;
  rep.p = p;
  // The orbit bookkeeping below relies on these two facts about the tops.
  rep.prefix_fixed = tops_of_P_fix_prefix(emb);
  rep.alpha_cycles_ok = alpha_cycles(emb).ok(p);

  const auto M = qd::build_qd(p);
  const auto whole = qd::QdSubgroup::whole(M);
  const auto P = qd::sylow_P(M);
  const auto V = qd::subgroup_V(M);
  fusion::FusionSystem<QdElement> F(whole, P, p);
  const auto cls = fusion::classify_subgroups(F);
  rep.lattice_size = cls.lattice.size();
  rep.classes = cls.classes.size();
  const auto Pelts = P.elements();

  for (std::size_t c = 0; c < cls.classes.size(); ++c) {
    const auto& Q = cls.lattice[cls.representative[c]];
    StructuralRow row;
    row.order = Q.order();
    for (auto g : Q.generators()) row.subgroup += (row.subgroup.empty() ? "" : " ") + M.element(g).to_string();
    if (row.subgroup.empty()) row.subgroup = "1";
    std::optional<qd::QdSubgroup> R;
    if (Q.order() == 1) {
      row.rule = "trivial";
      R = V;
    } else if (Q.order() == p) {
      row.rule = "order p";
      R = group::join(Q, group::centralizer(V, Q));
    } else {
      row.rule = "order >= p^2";
      R = Q;
    }
    row.overgroup_order = R->order();
    std::vector<park::QdWreath> S;
    for (auto g : R->generators()) S.push_back(emb.iota(M.element(g)));
    const auto cen = centralizer_wreath(Pelts, emb.n(), S, p, budget);
    row.centralizer_order = cen.order;
    row.centralizer_p_group = cen.is_p_group && (Q.order() != p || R->order() == p * p);
    row.qc_in_P = group::join(Q, group::centralizer(P, Q)).order();
    row.qc_in_M_p_part = group::p_part(group::join(Q, group::centralizer(whole, Q)).order(), p);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace qdv::wreath
