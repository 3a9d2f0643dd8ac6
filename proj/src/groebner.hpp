#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

#include "exactalg.hpp"

namespace latbar::groebner {

using exactalg::Int;
using exactalg::IntMat;
using exactalg::IntVec;
using exactalg::LatticeBasis;
using Rat = mpq_class;

// Exponent vector; the ambient variable count is its length.
using Monomial = std::vector<int>;

Monomial mono_one(int nvars);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
int mono_degree(const Monomial& a);
bool mono_squarefree(const Monomial& a);
std::vector<int> mono_support(const Monomial& a);

// x^{u+} - x^{u-} encoded by the exponent difference u (halves are disjoint).
struct Binomial {
  std::vector<int> u;

  int ambient() const { return int(u.size()); }
  bool is_zero() const;
  Monomial plus() const;
  Monomial minus() const;
  // Sign normalization: lowest-index nonzero coordinate positive.
  Binomial canonical() const;
  Binomial negated() const;
  bool operator==(const Binomial& o) const { return u == o.u; }
  bool operator<(const Binomial& o) const { return u < o.u; }
};

Binomial binomial_from_vec(const IntVec& v);
IntVec binomial_to_vec(const Binomial& b);

struct Term {
  Monomial m;
  Rat c;
};

// Terms with nonzero coefficients, sorted descending under a fixed structural
// order so equal polynomials compare equal; term orders are applied inside the
// algorithms, not in the representation.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms);
  static Polynomial zero(int) { return Polynomial(); }
  static Polynomial constant(int nvars, const Rat& c);
  static Polynomial from_term(const Monomial& m, const Rat& c);
  static Polynomial from_binomial(const Binomial& b);

  bool is_zero() const { return t_.empty(); }
  int nterms() const { return int(t_.size()); }
  const std::vector<Term>& terms() const { return t_; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial mul_term(const Monomial& m, const Rat& c) const;
  Polynomial pow(int k) const;

  bool operator==(const Polynomial& o) const;
  bool operator<(const Polynomial& o) const;  // structural, for canonical sorting

 private:
  std::vector<Term> t_;
};

// Monomial comparison scheme. priority[0] is the most significant variable.
// The first elim_count entries form a block compared (by graded reverse
// lexicographic order) before the rest, which yields an elimination order.
struct TermOrder {
  enum class Kind { Lex, GrevLex };
  Kind kind = Kind::GrevLex;
  std::vector<int> priority;
  int elim_count = 0;

  static TermOrder lex(int nvars);
  static TermOrder grevlex(int nvars);
  static TermOrder elimination(const std::vector<int>& eliminated, int nvars, Kind rest = Kind::GrevLex);
  static TermOrder with_priority(Kind kind, const std::vector<int>& priority);

  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }
};

// A-degree of a monomial: A * exponent vector.
IntVec adeg(const Monomial& m, const IntMat& a);
bool is_homogeneous(const Polynomial& f, const IntMat& a);

// Leading term of f under ord; f must be nonzero.
Term leading_term(const Polynomial& f, const TermOrder& ord);

// Remainder of f on division by g (not required to be a basis); the result
// has no term divisible by any leading term of g. Deterministic.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const TermOrder& ord);

// Reduced Groebner basis, monic, canonically sorted. Deterministic.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord);

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens, const TermOrder& ord);

// f in rad(gens)? One auxiliary inverse variable, any order.
bool radical_member(const Polynomial& f, const std::vector<Polynomial>& gens);

// Generators of ideal(gens) cap K[keep]. Outputs stay in the full ambient.
std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<int>& keep,
                                  int nvars);

// Binomial generating set of the lattice ideal I_L, computed by saturating the
// basis binomials with one auxiliary inverse variable. Requires L positive.
std::vector<Binomial> lattice_ideal_generators(const LatticeBasis& l);

// Widens every exponent vector to nvars + extra variables (new vars at the end).
Polynomial widen(const Polynomial& f, int extra);

}  // namespace latbar::groebner
