#pragma once

#include "qdv/park/park.hpp"
#include "qdv/qd/qd.hpp"

namespace qdv::park {

using QdWreath = WreathElement<qd::QdElement>;
using QdEmbedding = ParkEmbedding<qd::QdElement>;

/// Park's group for Qd(p) with the explicit representatives m_j.
inline QdEmbedding qd_embedding(unsigned p) {
  auto t = qd::coset_reps(p);
  CosetTable<qd::QdElement> table(t.reps, [](const qd::QdElement& x) { return qd::in_P(x); });
  return QdEmbedding(std::move(table),
                     {qd::t_element(p), qd::QdElement::translation(p, 0, 1), qd::QdElement::linear(qd::alpha(p))},
                     std::size_t{p} * p * p);
}

}  // namespace qdv::park
