#pragma once
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "circuits.hpp"
#include "exactalg.hpp"
#include "groebner.hpp"
#include "markov.hpp"

namespace latbar::complexes {

using circuits::Circuit;
using exactalg::IntMat;
using exactalg::IntVec;
using exactalg::LatticeBasis;
using groebner::Monomial;
using groebner::Polynomial;

// Simplicial complex on the minimal circuit supports. Faces are stored as
// sorted vertex-id tuples, downward closed; every face carries a witness
// tuple of equal-A-degree monomials whose supports are exactly the vertices.
struct GammaComplex {
  IntMat a;
  std::vector<std::set<int>> vertices;
  std::set<std::vector<int>> faces;
  std::map<std::vector<int>, std::vector<Monomial>> witnesses;
  std::vector<std::vector<int>> unknown;  // face candidates left undecided (none)
  int degree_bound = 0;
  int face_cap = 4;

  int max_dim() const;
  bool is_face(const std::vector<int>& ids) const;
};

// Vertex sets of the connected components, each with the dimension of its
// largest face and whether the whole component is a single face.
struct ComponentInfo {
  std::vector<int> vertex_ids;
  int max_dim = 0;
  bool is_simplex = false;
};
std::vector<ComponentInfo> components(const GammaComplex& g);

// degree_bound 0 selects twice the largest circuit-half degree. face_cap
// bounds the size of vertex sets examined for faces of dimension >= 2.
GammaComplex build_gamma(const IntMat& a, const std::vector<Circuit>& cs, int degree_bound = 0,
                         int face_cap = 4);

// Induced subcomplex on the vertices realized as supports of F's monomials.
struct InducedSubcomplex {
  std::vector<int> vertex_ids;
  bool simplex = false;  // the whole vertex set is one face
};
InducedSubcomplex gamma_of_polynomial(const Polynomial& f, const GammaComplex& g);

// True iff the union of the subcomplexes' vertices covers every vertex.
bool spanning_check(const std::vector<InducedSubcomplex>& subs, const GammaComplex& g);

// Minimum cardinality of a J-matching of maximum coverage: pairwise disjoint
// faces with dimensions in J covering as many vertices as possible, then as
// few faces as possible. Exact search, additive over components.
struct DeltaResult {
  int delta = 0;
  int coverage = 0;
  std::vector<std::vector<int>> matching;  // one witness matching
};
DeltaResult delta(const GammaComplex& g, const std::set<int>& j);

// All dimensions occurring in g.
std::set<int> all_dims(const GammaComplex& g);

// b: fewest faces of dimension <= 1 whose union covers the vertices;
// c: fewest faces of any dimension. Overlaps allowed.
struct CoveringNumbers {
  int b = 0;
  int c = 0;
};
CoveringNumbers covering_numbers(const GammaComplex& g);

struct BoundsReport {
  int ht = 0;
  int q = 0;        // number of vertices of Gamma
  int ceil_q2 = 0;  // ceil(q/2)
  int delta01 = 0;
  int delta_omega = 0;
  int b_cover = 0;
  int c_cover = 0;
  int mu = 0;
  int bar_lower = 0;       // max(ceil_q2, delta01)
  int ara_a_lower = 0;     // delta_omega
  std::optional<int> bar;  // certified exact value when available
  bool complete_intersection = false;
};

// Assembles the invariant chain for one lattice; bar is certified exactly
// when delta01 reaches mu or the unique-squarefree criterion applies.
BoundsReport bounds_report(const LatticeBasis& l, int degree_bound = 0, int face_cap = 4);

}  // namespace latbar::complexes
