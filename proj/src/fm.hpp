#pragma once
#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace latbar::fm {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Linear feasibility problem over Q:
//   ge_lhs[i] . x >= ge_rhs[i]   for all i
//   eq_lhs[i] . x == eq_rhs[i]   for all i
struct System {
  int nvars = 0;
  std::vector<RatVec> ge_lhs;
  RatVec ge_rhs;
  std::vector<RatVec> eq_lhs;
  RatVec eq_rhs;
  // Ceiling on the live inequality count during elimination.
  size_t max_constraints = 200000;
};

// Decides feasibility by Gaussian substitution on the equalities followed by
// Fourier-Motzkin elimination on the inequalities; returns a witness point.
std::optional<RatVec> solve(const System& sys);

}  // namespace latbar::fm
