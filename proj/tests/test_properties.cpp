#include <random>
#include <set>
#include <vector>

#include "circuits.hpp"
#include "complexes.hpp"
#include "doctest.h"
#include "exactalg.hpp"
#include "fixtures.hpp"
#include "graphs.hpp"
#include "groebner.hpp"
#include "markov.hpp"

using namespace latbar;
using exactalg::IntMat;
using exactalg::IntVec;
using exactalg::LatticeBasis;
using groebner::Binomial;
using groebner::Polynomial;

namespace {

// Random grading with an all-ones row: its kernel meets the positive orthant
// only at zero, so every sublattice is positive.
LatticeBasis random_positive_lattice(std::mt19937& rng, int& ambient_out, IntMat& config_out) {
  for (;;) {
    int n = 3 + int(rng() % 4);
    int extra = 1 + int(rng() % 2);
    IntMat a(1 + extra, n);
    for (int j = 0; j < n; j++) a.at(0, j) = 1;
    for (int i = 1; i <= extra; i++)
      for (int j = 0; j < n; j++) a.at(i, j) = int(rng() % 4);
    auto kern = exactalg::kernel_basis(a);
    if (kern.rank() == 0) continue;

    std::vector<IntVec> rows = kern.rows;
    if (rng() % 2 == 0)
      for (auto& v : rows[0]) v *= 2;  // index-two sublattice: non-saturated case
    if (rows.size() > 1 && rng() % 3 == 0) rows.pop_back();

    ambient_out = n;
    config_out = a;
    return exactalg::make_lattice(n, rows);
  }
}

std::set<std::set<int>> as_set(const std::vector<std::set<int>>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("random lattices: minimal indispensable supports equal minimal circuit supports") {
  for (int inst = 0; inst < 50; inst++) {
    std::mt19937 rng(1000 + inst);
    int n = 0;
    IntMat a;
    auto l = random_positive_lattice(rng, n, a);
    REQUIRE(exactalg::is_positive(l));

    auto ag = exactalg::grading_matrix(l);
    auto cs = circuits::enumerate_circuits(ag);
    auto fam = circuits::support_family(cs);
    CAPTURE(inst);
    CHECK(as_set(markov::tmin(l)) == as_set(fam.minimal));
  }
}

TEST_CASE("random lattices: matchings are perfect and covers match matchings") {
  for (int inst = 0; inst < 50; inst++) {
    std::mt19937 rng(2000 + inst);
    int n = 0;
    IntMat a;
    auto l = random_positive_lattice(rng, n, a);

    auto ag = exactalg::grading_matrix(l);
    auto cs = circuits::enumerate_circuits(ag);
    auto g = complexes::build_gamma(ag, cs);
    CAPTURE(inst);
    REQUIRE(g.unknown.empty());

    auto d01 = complexes::delta(g, {0, 1});
    CHECK(d01.coverage == int(g.vertices.size()));
    auto dall = complexes::delta(g, complexes::all_dims(g));
    CHECK(dall.coverage == int(g.vertices.size()));

    auto cn = complexes::covering_numbers(g);
    CHECK(cn.b == d01.delta);
    CHECK(cn.c == dall.delta);

    auto br = complexes::bounds_report(l);
    CHECK(br.q == int(g.vertices.size()));
    CHECK(br.delta01 == d01.delta);
    CHECK(br.delta_omega == dall.delta);
    CHECK(br.b_cover == cn.b);
    CHECK(br.c_cover == cn.c);
    CHECK(br.bar_lower == std::max(br.ceil_q2, br.delta01));
  }
}

TEST_CASE("random gradings: rank plus kernel rank is the column count") {
  for (int inst = 0; inst < 50; inst++) {
    std::mt19937 rng(3000 + inst);
    int n = 3 + int(rng() % 4);
    int rows = 1 + int(rng() % 3);
    IntMat a(rows, n);
    for (int i = 0; i < rows; i++)
      for (int j = 0; j < n; j++) a.at(i, j) = int(rng() % 5) - 1;
    CAPTURE(inst);
    CHECK(exactalg::rank(a) + exactalg::kernel_basis(a).rank() == n);
  }
}

TEST_CASE("random lattices: the computed generators present the lattice ideal") {
  for (int inst = 0; inst < 50; inst++) {
    std::mt19937 rng(4000 + inst);
    int n = 0;
    IntMat a;
    auto l = random_positive_lattice(rng, n, a);

    auto rep = markov::markov_basis(l);
    CAPTURE(inst);
    CHECK(rep.mu == int(rep.generators.size()));
    std::set<Binomial> gens(rep.generators.begin(), rep.generators.end());
    for (const auto& b : rep.indispensable_binomials) CHECK(gens.count(b) == 1);

    auto ord = groebner::TermOrder::grevlex(n);
    std::vector<Polynomial> mk, li;
    for (const auto& b : rep.generators) mk.push_back(Polynomial::from_binomial(b));
    for (const auto& b : groebner::lattice_ideal_generators(l))
      li.push_back(Polynomial::from_binomial(b));
    auto gb_mk = groebner::buchberger(mk, ord);
    auto gb_li = groebner::buchberger(li, ord);
    for (const auto& f : mk) CHECK(groebner::normal_form(f, gb_li, ord).is_zero());
    for (const auto& f : li) CHECK(groebner::normal_form(f, gb_mk, ord).is_zero());
  }
}

TEST_CASE("larger generated graphs: circuit walks equal the kernel matroid circuits") {
  std::vector<graphs::Graph> corpus = {
      graphs::cycle_graph(7),    graphs::cycle_graph(8),  graphs::complete_graph(6),
      graphs::wheel_graph(7),    graphs::wheel_graph(8),  bench::six_cycle_two_chords(),
      bench::eight_cycle_four_chords(),
  };
  for (size_t gi = 0; gi < corpus.size(); gi++) {
    const auto& g = corpus[gi];
    REQUIRE(g.n <= 9);
    std::set<Binomial> walks, matroid;
    for (const auto& cw : graphs::enumerate_circuit_walks(g)) walks.insert(cw.binomial);
    for (const auto& c : circuits::enumerate_circuits(graphs::incidence_config(g)))
      matroid.insert(groebner::binomial_from_vec(c.u).canonical());
    CAPTURE(gi);
    CHECK(walks == matroid);
  }
}
