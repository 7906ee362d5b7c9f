#pragma once

#include <string>
#include <vector>

#include "qdv/park/qd_embedding.hpp"
#include "qdv/wreath/centralizer.hpp"

namespace qdv::wreath {

/// Every sigma_u with u in P fixes the first p - 1 positions.
bool tops_of_P_fix_prefix(const park::QdEmbedding& emb);

struct AlphaCycles {
  bool fixes_prefix = false;
  std::vector<std::vector<std::uint32_t>> cycles;  // nontrivial cycles of sigma_alpha, 0-based positions
  bool ok(unsigned p) const;
};
/// sigma_alpha on the coset positions; odd p only.
AlphaCycles alpha_cycles(const park::QdEmbedding& emb);

struct StructuralRow {
  std::string subgroup;  // generators as Qd elements
  std::size_t order = 0;
  std::string rule;      // "trivial", "order p", "order >= p^2"
  std::size_t overgroup_order = 0;  // order of the subgroup whose centralizer is computed
  BigInt centralizer_order = 0;
  bool centralizer_p_group = false;
  std::size_t qc_in_P = 0;         // |Q C_P(Q)|
  std::size_t qc_in_M_p_part = 0;  // p-part of |Q C_M(Q)|
  bool pass() const { return centralizer_p_group && qc_in_P == qc_in_M_p_part; }
};

struct StructuralReport {
  unsigned p = 0;
  bool prefix_fixed = false;
  bool alpha_cycles_ok = false;
  std::size_t lattice_size = 0;
  std::size_t classes = 0;
  std::vector<StructuralRow> rows;  // one per class, at its fully normalized representative
  bool ok() const;
};

/// For each fully normalized class representative Q <= P: C_G(iota R) is a p-group for R = O_p(F) when Q = 1,
/// R = Q C_V(Q) when |Q| = p and R = Q otherwise; and Q C_P(Q) is Sylow in Q C_M(Q).
/// Fusion equality of iota M and G on iota P is not recomputed here.
StructuralReport structural_theorem_check(unsigned p, std::uint64_t budget = 50'000'000);

}  // namespace qdv::wreath
