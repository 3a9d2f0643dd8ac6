#pragma once
#include <set>
#include <vector>

#include "exactalg.hpp"

namespace latbar::circuits {

using exactalg::IntMat;
using exactalg::IntVec;

// Primitive kernel vector with support-minimal column set. Sign-normalized:
// the lowest-index nonzero coordinate is positive, unless constructed with an
// explicit orientation (conformal search).
struct Circuit {
  IntVec u;

  std::set<int> support() const;
  std::set<int> support_plus() const;
  std::set<int> support_minus() const;
  bool operator==(const Circuit& o) const { return u == o.u; }
  bool operator<(const Circuit& o) const;
};

// All circuits of the column configuration, canonically sorted.
std::vector<Circuit> enumerate_circuits(const IntMat& a);

// A circuit conformal to v: supp(u+) within supp(v+), supp(u-) within
// supp(v-); the returned orientation realizes that. v must be a nonzero
// kernel member.
Circuit conformal_circuit(const IntVec& v, const IntMat& a);
Circuit conformal_circuit(const IntVec& v, const IntMat& a, const std::vector<Circuit>& circuits);

// Half supports of the circuits and the inclusion-minimal ones among them.
struct SupportFamily {
  std::vector<std::set<int>> all;
  std::vector<std::set<int>> minimal;
};
SupportFamily support_family(const std::vector<Circuit>& cs);

// Circuits supported inside the given column set.
std::vector<Circuit> restrict_circuits(const std::vector<Circuit>& cs, const std::set<int>& cols);

// True iff dropping any single column shrinks the rational cone of the
// columns; membership decided by exact Fourier-Motzkin feasibility.
bool is_extremal(const IntMat& a);

}  // namespace latbar::circuits
