#pragma once
#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "circuits.hpp"
#include "complexes.hpp"
#include "exactalg.hpp"
#include "groebner.hpp"
#include "markov.hpp"

namespace latbar::graphs {

using exactalg::IntMat;
using groebner::Binomial;
using groebner::Monomial;

// Finite simple connected graph; vertices are 0-based. Edge ids index into
// `edges`, whose order is significant (variables x_{e+1} in the text format).
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;             // each stored with u < v
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge id)

  int m() const { return int(edges.size()); }
  int edge_id(int u, int v) const;  // -1 when absent
  bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }
};

// Validates simplicity (no loops, no repeats) and connectivity.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

Graph cycle_graph(int n);     // edges i-(i+1), closing n-1 - 0
Graph complete_graph(int n);  // edges in lexicographic pair order
// Rim cycle of length n plus a hub (vertex n); rim edges first, then the
// spoke of rim vertex i at id n+i.
Graph wheel_graph(int n);

// Closed walk: step k joins verts[k] to verts[(k+1) mod length] through
// edge edges[k].
struct Walk {
  std::vector<int> edges;
  std::vector<int> verts;

  int length() const { return int(edges.size()); }
  bool even() const { return length() % 2 == 0; }
  bool is_cycle() const;  // pairwise distinct vertices
};

// Closed walk from a chaining edge id sequence / cyclic vertex sequence.
Walk make_walk(const Graph& g, const std::vector<int>& edge_ids);
Walk walk_from_vertices(const Graph& g, const std::vector<int>& verts);

// 0/1 matrix with one column per edge carrying two ones (its endpoints).
IntMat incidence_config(const Graph& g);

// Product of the odd-position edge variables minus the even-position ones,
// as an exponent-difference binomial (an edge walked at both parities
// cancels). The walk must be even; the result is checked to lie in the
// kernel of the incidence configuration.
Binomial binomial_of_walk(const Walk& w, const Graph& g);

enum class WalkShape { EvenCycle, TwoOddCyclesSharedVertex, TwoOddCyclesJoinedByPath };

struct CircuitWalk {
  Walk walk;
  WalkShape shape;
  Binomial binomial;  // canonical sign

  bool operator<(const CircuitWalk& o) const { return binomial < o.binomial; }
};

// All circuits of the toric ideal of g: even cycles, pairs of odd cycles
// sharing exactly one vertex, and pairs of vertex-disjoint odd cycles joined
// by a path internally disjoint from both (its edges appear squared).
// Deduplicated by binomial, sorted.
std::vector<CircuitWalk> enumerate_circuit_walks(const Graph& g);

// True iff no other kernel vector of the incidence configuration fits in the
// exponent box of B_w. Exact integer search over the walk's edge support.
bool is_primitive(const Walk& w, const Graph& g);

// True iff no induced subgraph of g consists of two vertex-disjoint odd
// cycles joined by a path of length >= 1.
bool condition_sharp(const Graph& g);

// A chord (edge between two walk vertices, not a walk edge) is a bridge when
// its endpoints lie in two different blocks of the walk; otherwise it splits
// the closed walk at positions pos_u < pos_v into two subwalks, both odd
// (an odd chord) or both even.
struct Chord {
  int edge = -1;
  enum class Kind { Bridge, Even, Odd } kind = Kind::Bridge;
  int pos_u = 0, pos_v = 0;  // 1-based walk positions, set for non-bridges
};

// Length-4 cycle made of two same-parity walk edges and two odd chords that
// cross effectively; the walk edges split the walk vertices into side1/side2.
struct F4 {
  std::array<int, 4> cycle{};  // walk edge, chord, walk edge, chord
  std::set<int> walk_edges;
  std::set<int> chords;
  std::set<int> side1, side2;
};

struct OddChordPair {
  int c1 = -1, c2 = -1;  // edge ids, c1 < c2
  bool effective = false;
  bool strong = false;  // effective without forming any F4
};

struct ChordReport {
  std::vector<Chord> chords;
  std::vector<OddChordPair> pairs;  // every unordered odd-chord pair
  std::vector<F4> f4s;
  // Per F4: the odd chords (other than its own pair) with one endpoint on
  // each side of the vertex split.
  std::vector<std::vector<int>> crossing;
};

// Full chord classification of a primitive walk.
ChordReport chord_report(const Walk& w, const Graph& g);

enum class ComponentShape { Vertex, Edge, TwoSimplex, Other };

struct GammaGReport {
  bool sharp = false;
  complexes::GammaComplex gamma;
  struct Component {
    std::vector<int> vertex_ids;
    ComponentShape shape = ComponentShape::Other;
  };
  std::vector<Component> comps;
};

// Gamma complex of the toric ideal, built from the circuit walks. When the
// two-odd-cycle condition holds every component must classify as a vertex,
// an edge or a 2-simplex; any other shape raises an inconsistency. Without
// the condition shapes are reported as found.
GammaGReport gamma_complex(const Graph& g);

// Certified bar = mu. The hypothesis: no minimal binomial is a circuit whose
// two monomials are squarefree and both dispensable. Minimality is decided
// degree-wise (a binomial is minimal iff its monomials lie in different
// components of the fiber under moves by smaller-degree generators), so the
// verdict does not depend on which representatives the generator computation
// picked. On failure bar is empty and the violating circuits are listed.
struct BarCertificate {
  int mu = 0;
  std::optional<int> bar;
  std::vector<Binomial> violators;
};
BarCertificate bar_mu_certificate(const Graph& g);

// Every pair of vertex-disjoint edges is met by a third edge touching both.
bool complement_weakly_chordal(const Graph& g);

}  // namespace latbar::graphs
