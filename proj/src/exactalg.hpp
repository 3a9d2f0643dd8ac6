#pragma once
#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace latbar::exactalg {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense integer matrix, row major.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IntVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntVec col(int j) const;
  IntMat transpose() const;
  IntMat select_cols(const std::vector<int>& idx) const;

  // A * u, u indexed by columns.
  IntVec mul(const IntVec& u) const;
  IntVec mul(const std::vector<int>& u) const;

  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Row-style Hermite normal form: positive pivots, entries above a pivot
// reduced into [0, pivot). Zero rows are dropped.
IntMat hnf(const IntMat& m);

int rank(const IntMat& m);

// A sublattice of Z^ambient given by basis rows. Kept in HNF so that equal
// lattices compare equal.
struct LatticeBasis {
  int ambient = 0;
  std::vector<IntVec> rows;  // linearly independent, HNF-canonical

  int rank() const { return int(rows.size()); }
  IntMat as_matrix() const;
  bool operator==(const LatticeBasis& o) const { return ambient == o.ambient && rows == o.rows; }
};

// Canonicalizes arbitrary spanning vectors into a LatticeBasis (HNF rows).
LatticeBasis make_lattice(int ambient, const std::vector<IntVec>& gens);

// Basis of ker_Z(m) = { u : m u = 0 }. The integer kernel is saturated by
// construction; the returned basis is HNF-canonical.
LatticeBasis kernel_basis(const IntMat& m);

// v in L? Requires L in HNF form (as produced by make_lattice/kernel_basis).
bool lattice_contains(const LatticeBasis& l, const IntVec& v);

// Smallest saturated sublattice containing l: (l ox Q) cap Z^ambient.
// Throws input_error if the stored rows are dependent (corrupt basis).
LatticeBasis saturate(const LatticeBasis& l);

// Basis of the orthogonal-complement lattice { v : v . u = 0 for all u in l }.
IntMat orthogonal_complement(const LatticeBasis& l);

// True iff l contains no nonzero nonnegative vector. Decided exactly via a
// strictly positive functional in the orthogonal complement's row space.
bool is_positive(const LatticeBasis& l);

// Rational mu with mu^T a >= 1 componentwise over a's columns, if one exists.
// Such a witness exists iff ker_Z(a) is a positive lattice; it certifies that
// every fiber { u >= 0 : a u = b } is finite.
std::optional<RatVec> pointed_weight(const IntMat& a);

// Matrix a with n - rank(l) rows whose integer kernel equals saturate(l).
// Throws input_error when l is not positive (the grading must be pointed).
IntMat grading_matrix(const LatticeBasis& l);

std::string to_string(const Int& v);
std::string to_string(const IntVec& v);

}  // namespace latbar::exactalg
