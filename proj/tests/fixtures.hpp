#pragma once
// Shared benchmark inputs and frozen expected values used across suites.
#include <string>
#include <vector>

#include "exactalg.hpp"
#include "graphs.hpp"

namespace bench {

using latbar::exactalg::IntMat;

// 7x12 benchmark configuration with a six-dimensional kernel lattice.
inline IntMat config12() {
  static const int rows[7][12] = {
      {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 1, 1, 1, 3, 0, 1, 2, 1, 2},
      {1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 2},
      {1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 1, 2},
      {0, 1, 1, 1, 1, 2, 1, 2, 0, 1, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 1, 0},
      {0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 1, 0},
  };
  IntMat m(7, 12);
  for (int i = 0; i < 7; i++)
    for (int j = 0; j < 12; j++) m.at(i, j) = rows[i][j];
  return m;
}

// Exponent vector of x^p - x^q from 1-based (variable, exponent) lists.
inline std::vector<int> binvec(int nvars, std::vector<std::pair<int, int>> p,
                               std::vector<std::pair<int, int>> q) {
  std::vector<int> v(nvars, 0);
  for (auto [var, e] : p) v[var - 1] += e;
  for (auto [var, e] : q) v[var - 1] -= e;
  return v;
}

// The 36 circuits of config12 as difference vectors.
inline std::vector<std::vector<int>> config12_circuits() {
  using P = std::vector<std::pair<int, int>>;
  auto c = [](P p, P q) { return binvec(12, std::move(p), std::move(q)); };
  return {
      c({{2, 1}, {5, 1}}, {{3, 1}, {4, 1}}),
      c({{1, 1}, {6, 1}}, {{3, 1}, {4, 1}}),
      c({{1, 1}, {6, 1}}, {{2, 1}, {5, 1}}),
      c({{1, 1}, {4, 1}}, {{2, 1}, {9, 1}}),
      c({{1, 2}, {4, 2}}, {{2, 2}, {12, 1}}),
      c({{1, 1}, {5, 1}}, {{3, 1}, {9, 1}}),
      c({{1, 2}, {5, 2}}, {{3, 2}, {12, 1}}),
      c({{4, 1}, {5, 1}}, {{6, 1}, {9, 1}}),
      c({{4, 2}, {5, 2}}, {{6, 2}, {12, 1}}),
      c({{10, 2}}, {{5, 1}, {7, 1}}),
      c({{11, 2}}, {{8, 1}, {9, 2}}),
      c({{11, 2}}, {{8, 1}, {12, 1}}),
      c({{9, 2}}, {{12, 1}}),
      c({{2, 1}, {10, 2}}, {{3, 1}, {4, 1}, {7, 1}}),
      c({{2, 1}, {10, 2}}, {{1, 1}, {6, 1}, {7, 1}}),
      c({{1, 2}, {6, 1}}, {{2, 1}, {3, 1}, {9, 1}}),
      c({{1, 4}, {6, 2}}, {{2, 2}, {3, 2}, {12, 1}}),
      c({{3, 1}, {4, 2}}, {{2, 1}, {6, 1}, {9, 1}}),
      c({{3, 2}, {4, 4}}, {{2, 2}, {6, 2}, {12, 1}}),
      c({{2, 1}, {5, 2}}, {{3, 1}, {6, 1}, {9, 1}}),
      c({{2, 2}, {5, 4}}, {{3, 2}, {6, 2}, {12, 1}}),
      c({{1, 1}, {10, 2}}, {{3, 1}, {7, 1}, {9, 1}}),
      c({{1, 2}, {10, 4}}, {{3, 2}, {7, 2}, {12, 1}}),
      c({{4, 1}, {10, 2}}, {{6, 1}, {7, 1}, {9, 1}}),
      c({{4, 2}, {10, 4}}, {{6, 2}, {7, 2}, {12, 1}}),
      c({{2, 2}, {11, 2}}, {{1, 2}, {4, 2}, {8, 1}}),
      c({{3, 2}, {11, 2}}, {{1, 2}, {5, 2}, {8, 1}}),
      c({{6, 2}, {11, 2}}, {{4, 2}, {5, 2}, {8, 1}}),
      c({{2, 1}, {10, 4}}, {{3, 1}, {6, 1}, {7, 2}, {9, 1}}),
      c({{2, 2}, {10, 8}}, {{3, 2}, {6, 2}, {7, 4}, {12, 1}}),
      c({{1, 4}, {6, 2}, {8, 1}}, {{2, 2}, {3, 2}, {11, 2}}),
      c({{2, 2}, {6, 2}, {11, 2}}, {{3, 2}, {4, 4}, {8, 1}}),
      c({{3, 2}, {6, 2}, {11, 2}}, {{2, 2}, {5, 4}, {8, 1}}),
      c({{3, 2}, {7, 2}, {11, 2}}, {{1, 2}, {8, 1}, {10, 4}}),
      c({{6, 2}, {7, 2}, {11, 2}}, {{4, 2}, {8, 1}, {10, 4}}),
      c({{2, 2}, {8, 1}, {10, 8}}, {{3, 2}, {6, 2}, {7, 4}, {11, 2}}),
  };
}

// One minimal binomial generating set of config12's toric ideal.
inline std::vector<std::vector<int>> config12_min_generators() {
  using P = std::vector<std::pair<int, int>>;
  auto c = [](P p, P q) { return binvec(12, std::move(p), std::move(q)); };
  return {
      c({{2, 1}, {5, 1}}, {{3, 1}, {4, 1}}), c({{1, 1}, {6, 1}}, {{3, 1}, {4, 1}}),
      c({{1, 1}, {4, 1}}, {{2, 1}, {9, 1}}), c({{1, 1}, {5, 1}}, {{3, 1}, {9, 1}}),
      c({{4, 1}, {5, 1}}, {{6, 1}, {9, 1}}), c({{10, 2}}, {{5, 1}, {7, 1}}),
      c({{11, 2}}, {{8, 1}, {9, 2}}),        c({{9, 2}}, {{12, 1}}),
  };
}

// Minimal circuit half supports of config12, 1-based.
inline std::vector<std::vector<int>> config12_min_supports() {
  return {{1, 4}, {1, 5}, {1, 6}, {2, 5}, {3, 4}, {4, 5}, {5, 7}, {9}, {10}, {11}, {12}};
}

// The four-term homogeneous witness combining the three quadratic relations.
// Terms as (coefficient, 1-based (variable, exponent) list).
struct FixtureTerm {
  int coef;
  std::vector<std::pair<int, int>> mono;
};
inline std::vector<FixtureTerm> config12_F_terms() {
  return {
      {1, {{1, 2}, {6, 2}}},
      {-1, {{2, 2}, {5, 2}}},
      {1, {{3, 2}, {4, 2}}},
      {-1, {{2, 1}, {3, 1}, {6, 1}, {9, 1}}},
  };
}

// --- named graphs shared by the graph suites ---

// Hexagon with the two short chords 0-2 and 1-3 (chord ids 6, 7).
inline latbar::graphs::Graph six_cycle_two_chords() {
  return latbar::graphs::make_graph(
      6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}, {1, 3}});
}

// 8-cycle with chords 0-4, 1-3, 3-5, 4-6 (ids 8..11).
inline latbar::graphs::Graph eight_cycle_four_chords() {
  return latbar::graphs::make_graph(8, {{0, 1},
                                        {1, 2},
                                        {2, 3},
                                        {3, 4},
                                        {4, 5},
                                        {5, 6},
                                        {6, 7},
                                        {0, 7},
                                        {0, 4},
                                        {1, 3},
                                        {3, 5},
                                        {4, 6}});
}

// 10-cycle with chords 0-4, 1-5, 0-6, 5-9 (ids 10..13).
inline latbar::graphs::Graph ten_cycle_four_chords() {
  return latbar::graphs::make_graph(10, {{0, 1},
                                         {1, 2},
                                         {2, 3},
                                         {3, 4},
                                         {4, 5},
                                         {5, 6},
                                         {6, 7},
                                         {7, 8},
                                         {8, 9},
                                         {0, 9},
                                         {0, 4},
                                         {1, 5},
                                         {0, 6},
                                         {5, 9}});
}

// Two triangles sharing vertex 0.
inline latbar::graphs::Graph bowtie() {
  return latbar::graphs::make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
}

// Two disjoint triangles joined by the edge 2-3 (id 6).
inline latbar::graphs::Graph two_triangles_bridge() {
  return latbar::graphs::make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

// Two 4-cycles sharing vertex 0.
inline latbar::graphs::Graph figure_eight() {
  return latbar::graphs::make_graph(
      7, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}});
}

// Hexagon with the long chord 0-3 (id 6).
inline latbar::graphs::Graph six_cycle_one_chord() {
  return latbar::graphs::make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
}

}  // namespace bench
