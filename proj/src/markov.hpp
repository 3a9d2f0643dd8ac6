#pragma once
#include <optional>
#include <set>
#include <vector>

#include "exactalg.hpp"
#include "groebner.hpp"

namespace latbar::markov {

using exactalg::IntMat;
using exactalg::IntVec;
using exactalg::LatticeBasis;
using groebner::Binomial;
using groebner::Monomial;

// All monomials of one A-degree, lex-sorted.
struct Fiber {
  IntVec degree;
  std::vector<Monomial> monomials;
};

// Complete fiber {u >= 0 : A u = b}. Finiteness comes from a strictly
// positive rational weight on the columns; its absence is reported as a
// non-positive lattice.
Fiber fiber(const IntVec& b, const IntMat& a);

struct MarkovReport {
  std::vector<Binomial> generators;  // minimal generating set, degree order
  int mu = 0;
  std::vector<Monomial> indispensable_monomials;
  std::vector<Binomial> indispensable_binomials;
  std::vector<std::set<int>> tmin;
};

struct MarkovOptions {
  bool reverse_ties = false;   // flip lex tie-breaking (output invariance checks)
  size_t max_fiber = 2000000;  // per-fiber monomial cap
};

// Minimal binomial generating set of I_L by degree-ordered fiber completion.
// Fibers are split into cosets of L; a degree contributes one generator per
// connected component beyond the first in each coset, where edges are moves
// by previously accepted generators.
MarkovReport markov_basis(const LatticeBasis& l, const MarkovOptions& opt = {});

std::vector<Monomial> indispensable_monomials(const LatticeBasis& l);
std::vector<Binomial> indispensable_binomials(const LatticeBasis& l);

// Inclusion-minimal supports of the indispensable monomials.
std::vector<std::set<int>> tmin(const LatticeBasis& l);

// Certified bar(I_L) = mu(I_L) when the minimal generating set is unique
// (all generators indispensable) and its monomials are squarefree; nothing
// otherwise.
std::optional<int> bar_mu_certificate(const LatticeBasis& l);
std::optional<int> bar_mu_certificate(const MarkovReport& report);

}  // namespace latbar::markov
