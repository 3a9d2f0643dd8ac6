#pragma once
#include <optional>
#include <string>
#include <vector>

#include "complexes.hpp"
#include "exactalg.hpp"
#include "groebner.hpp"
#include "markov.hpp"

namespace latbar::determinantal {

using exactalg::Int;
using exactalg::IntMat;
using exactalg::LatticeBasis;
using groebner::Binomial;
using groebner::Monomial;
using groebner::Polynomial;
using groebner::TermOrder;

// A 2 x m matrix whose columns are (x_i^{d_i}, y_i^{d_i}); the ideal of its
// 2-minors lives in 2m variables, x_i at index i and y_i at index m+i.
struct Spec {
  int m = 0;
  std::vector<int> d;
};

// Validates size >= 2 and positive entries.
Spec make_spec(const std::vector<int>& d);

// The minor x_i^{d_i} y_j^{d_j} - x_j^{d_j} y_i^{d_i} for 0-based i < j.
Binomial minor_generator(const Spec& s, int i, int j);

// All m(m-1)/2 minors, ordered by (i, j).
std::vector<Binomial> minor_generators(const Spec& s);

// The minors are the reduced Groebner basis under every term order. Checked
// for lex and grevlex with the standard and the reversed variable priority
// plus `samples` seeded random priorities of each kind.
bool verify_universal_gb(const Spec& s, int samples = 20, unsigned seed = 0);
bool verify_universal_gb(const Spec& s, const std::vector<TermOrder>& orders);

// Lattice of the minor ideal: exponent vectors of the minors through column
// 0 form a basis, so the rank (and the height of the ideal) is m-1. The
// remaining minor vectors are checked to be the pairwise differences.
LatticeBasis lattice_of(const Spec& s);

// Leading monomials of the reduced basis under lex with
// x_1 > ... > x_m > y_1 > ... > y_m: the products x_i^{d_i} y_j^{d_j} over
// i < j except those with i = 1 replaced by x_1^{d_1} y_j^{d_j}; verified
// against the engine, sorted.
std::vector<Monomial> initial_ideal_lex(const Spec& s);

// True iff the d_i are pairwise coprime; cross-checked against saturation:
// the minor ideal is prime exactly when its lattice is saturated.
bool is_prime(const Spec& s);

// Certified binomial arithmetical rank of the minor ideal: m(m-1)/2. The
// certificate has three legs: the circuit complex has q = m(m-1) vertices,
// mu = m(m-1)/2, and ceil(q/2) = mu; any failing leg raises an inconsistency.
int bar_certificate(const Spec& s);

struct LawrenceReport {
  std::vector<Int> b;           // b_i = prod of the other d_j
  IntMat lifting;               // (m+1) x 2m block matrix (b 0 / I I)
  markov::MarkovReport markov;  // of the toric ideal of the lifting
  int gamma_vertices = 0;       // verified >= m(m-1)
  int bar_lower = 0;            // m(m-1)/2
  // Exact value when the doubly-minimal-support generators number exactly
  // bar_lower and every remaining generator lies in their radical.
  std::optional<int> bar;
};

// Toric ideal of the Lawrence lifting of (b_1, ..., b_m). Every generator is
// checked to have both monomials supported on >= 2 variables. Fiber
// enumeration is capped at max_states monomials.
LawrenceReport lawrence_ideal(const Spec& s, size_t max_states = 1000000);

struct BasisIdealReport {
  std::vector<Binomial> generators;  // the minors through column 0
  bool prime = false;
  // The minors through column 0 plus y_1^{d_1} times the remaining minors
  // form the reduced lex Groebner basis of the basis ideal.
  bool groebner_ok = false;
  // The basis ideal equals the minor ideal intersected with
  // (x_1^{d_1}, y_1^{d_1}); elimination-based intersection, both inclusions.
  bool intersection_ok = false;
  // Prime case only: the radical of the basis ideal equals the minor ideal
  // intersected with (x_1, y_1); two-sided radical membership of generators.
  std::optional<bool> radical_ok;
  std::string failure;  // first failing identity, empty when all pass

  bool ok() const { return groebner_ok && intersection_ok && (!radical_ok || *radical_ok); }
};

// Analysis of the ideal generated by the minors through column 0 (a lattice
// basis ideal for lattice_of): Groebner structure, the intersection identity
// and, for prime specs, the radical decomposition. The three checks run
// concurrently.
BasisIdealReport lattice_basis_ideal(const Spec& s);

}  // namespace latbar::determinantal
