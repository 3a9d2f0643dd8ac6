#pragma once
#include <string>
#include <vector>

#include "determinantal.hpp"
#include "exactalg.hpp"
#include "graphs.hpp"
#include "groebner.hpp"

namespace latbar::io {

using exactalg::IntMat;
using groebner::Binomial;
using groebner::Monomial;
using groebner::Polynomial;

// Variable naming: the first nvars - ny indices print as x1, x2, ... and the
// remaining ny as y1, y2, ...; the name t is reserved for the saturation
// variable and never accepted in input.
struct VarNames {
  int nvars = 0;
  int ny = 0;

  std::string name(int idx) const;
  int index(const std::string& tok) const;  // -1 when not a variable of this ring
};

// First line `rows cols`, then row-major integers; '#' starts a comment.
IntMat parse_matrix(const std::string& text);
std::string format_matrix(const IntMat& m);

// First line `n m`, then m lines `u v` with 1-based vertex ids.
graphs::Graph parse_graph(const std::string& text);
std::string format_graph(const graphs::Graph& g);

// Generator names wheel:K, cycle:K, complete:K (K counts rim vertices for
// wheels). Inputs containing ':' are names, anything else is file text.
graphs::Graph graph_by_name(const std::string& name);
graphs::Graph parse_graph_input(const std::string& text);

// One line: the column count m, then the m exponents.
determinantal::Spec parse_det_spec(const std::string& text);

// Term syntax: optional sign, optional integer or fraction coefficient, then
// variable powers like x1^2 x4 y2; terms joined by + or -.
Polynomial parse_polynomial(const std::string& text, const VarNames& vars);
std::string format_polynomial(const Polynomial& f, const VarNames& vars);

// One polynomial per nonempty non-comment line.
std::vector<Polynomial> parse_polynomials(const std::string& text, const VarNames& vars);

std::string format_monomial(const Monomial& m, const VarNames& vars);
std::string format_binomial(const Binomial& b, const VarNames& vars);

}  // namespace latbar::io
