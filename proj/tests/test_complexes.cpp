#include <algorithm>

#include "complexes.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "fixtures.hpp"

using namespace latbar;
using complexes::GammaComplex;
using exactalg::IntMat;
using exactalg::IntVec;
using exactalg::Rat;
using groebner::Binomial;
using groebner::Monomial;
using groebner::Polynomial;

namespace {

GammaComplex benchmark_gamma() {
  auto a = bench::config12();
  return complexes::build_gamma(a, circuits::enumerate_circuits(a));
}

Polynomial poly(int nvars, const std::vector<bench::FixtureTerm>& ts) {
  std::vector<groebner::Term> terms;
  for (const auto& t : ts) {
    Monomial m(nvars, 0);
    for (auto [var, e] : t.mono) m[var - 1] += e;
    terms.push_back({m, Rat(t.coef)});
  }
  return Polynomial(terms);
}

Polynomial binom(int nvars, const std::vector<int>& u) {
  std::vector<int> v(u);
  v.resize(nvars);
  return Polynomial::from_binomial(Binomial{v});
}

// Census of component shapes as (vertex count, max face dimension) pairs.
std::map<std::pair<int, int>, int> census(const GammaComplex& g) {
  std::map<std::pair<int, int>, int> c;
  for (const auto& comp : complexes::components(g))
    c[{(int)comp.vertex_ids.size(), comp.max_dim}]++;
  return c;
}

}  // namespace

TEST_CASE("benchmark gamma complex: vertices, faces, component census") {
  auto g = benchmark_gamma();
  REQUIRE(g.vertices.size() == 11);
  CHECK(g.unknown.empty());

  std::vector<std::set<int>> want;
  for (const auto& s : bench::config12_min_supports()) {
    std::set<int> z;
    for (int v : s) z.insert(v - 1);
    want.push_back(z);
  }
  std::sort(want.begin(), want.end(), [](const std::set<int>& x, const std::set<int>& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  CHECK(g.vertices == want);

  auto c = census(g);
  CHECK(c[{1, 0}] == 4);
  CHECK(c[{2, 1}] == 2);
  CHECK(c[{3, 2}] == 1);
  CHECK(c.size() == 3);

  // The triangle is a single simplex component.
  for (const auto& comp : complexes::components(g))
    if (comp.vertex_ids.size() == 3) CHECK(comp.is_simplex);
}

TEST_CASE("benchmark matching numbers and covering numbers") {
  auto g = benchmark_gamma();
  auto d01 = complexes::delta(g, {0, 1});
  CHECK(d01.delta == 8);
  CHECK(d01.coverage == 11);  // perfect when singletons are allowed

  // Matching validity: disjoint faces with dimensions in J.
  std::set<int> used;
  for (const auto& f : d01.matching) {
    CHECK((f.size() == 1 || f.size() == 2));
    for (int v : f) {
      CHECK(!used.count(v));
      used.insert(v);
    }
  }
  CHECK(used.size() == 11);

  CHECK(complexes::delta(g, {0, 1, 2}).delta == 7);
  CHECK(complexes::all_dims(g) == std::set<int>{0, 1, 2});
  CHECK(complexes::delta(g, complexes::all_dims(g)).delta == 7);

  auto cov = complexes::covering_numbers(g);
  CHECK(cov.b == 8);
  CHECK(cov.c == 7);
}

TEST_CASE("nine-column subconfiguration: census, delta, extremality") {
  auto a = bench::config12();
  std::vector<int> first9{0, 1, 2, 3, 4, 5, 6, 7, 8};
  auto b = a.select_cols(first9);

  auto cs = circuits::enumerate_circuits(b);
  // Circuits of the restriction are the restricted circuits.
  auto full = circuits::enumerate_circuits(a);
  auto restricted = circuits::restrict_circuits(full, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  REQUIRE(cs.size() == restricted.size());
  for (size_t i = 0; i < cs.size(); ++i) {
    IntVec emb(12, exactalg::Int(0));
    for (int j = 0; j < 9; ++j) emb[j] = cs[i].u[j];
    CHECK(emb == restricted[i].u);
  }

  auto g = complexes::build_gamma(b, cs);
  REQUIRE(g.vertices.size() == 9);
  std::vector<std::set<int>> want = {{0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 8},
                                     {2, 3}, {2, 8}, {3, 4}, {5, 8}};
  CHECK(g.vertices == want);

  auto c = census(g);
  CHECK(c[{2, 1}] == 3);
  CHECK(c[{3, 2}] == 1);
  CHECK(c.size() == 2);

  CHECK(complexes::delta(g, {0, 1}).delta == 5);
  CHECK(complexes::delta(g, {0, 1, 2}).delta == 4);

  CHECK(circuits::is_extremal(b));
  CHECK_FALSE(circuits::is_extremal(a));
}

TEST_CASE("benchmark bounds report") {
  auto l = exactalg::kernel_basis(bench::config12());
  auto r = complexes::bounds_report(l);
  CHECK(r.ht == 6);
  CHECK(r.q == 11);
  CHECK(r.ceil_q2 == 6);
  CHECK(r.delta01 == 8);
  CHECK(r.delta_omega == 7);
  CHECK(r.b_cover == 8);
  CHECK(r.c_cover == 7);
  CHECK(r.mu == 8);
  CHECK(r.bar == 8);
  CHECK(r.bar_lower == 8);
  CHECK(r.ara_a_lower == 7);
  CHECK_FALSE(r.complete_intersection);
}

TEST_CASE("induced subcomplexes and the spanning filter") {
  auto g = benchmark_gamma();
  const int n = 12;

  auto f = poly(n, bench::config12_F_terms());
  CHECK(groebner::is_homogeneous(f, bench::config12()));
  auto sf = complexes::gamma_of_polynomial(f, g);
  CHECK(sf.vertex_ids.size() == 3);
  CHECK(sf.simplex);
  for (int v : sf.vertex_ids) CHECK(g.vertices[v].size() == 2);

  auto b6 = binom(n, bench::binvec(12, {{10, 2}}, {{5, 1}, {7, 1}}));
  auto s6 = complexes::gamma_of_polynomial(b6, g);
  CHECK(s6.vertex_ids.size() == 2);
  CHECK(s6.simplex);

  CHECK(complexes::gamma_of_polynomial(Polynomial(), g).vertex_ids.empty());

  std::vector<complexes::InducedSubcomplex> subs{sf};
  for (const auto& u : bench::config12_min_generators()) {
    auto bu = binom(n, u);
    subs.push_back(complexes::gamma_of_polynomial(bu, g));
  }
  // F with B1..B8 spans; F with only B3..B8 also spans (the seven witnesses).
  CHECK(complexes::spanning_check(subs, g));
  std::vector<complexes::InducedSubcomplex> seven{sf};
  auto gens = bench::config12_min_generators();
  for (size_t i = 2; i < gens.size(); ++i)
    seven.push_back(complexes::gamma_of_polynomial(binom(n, gens[i]), g));
  CHECK(seven.size() == 7);
  CHECK(complexes::spanning_check(seven, g));
  CHECK_FALSE(complexes::spanning_check({}, g));
  CHECK_FALSE(complexes::spanning_check({sf}, g));
}

TEST_CASE("radical witness set of the nine-column ideal") {
  const int n = 9;
  auto gens = bench::config12_min_generators();
  std::vector<Polynomial> s{poly(n, bench::config12_F_terms())};
  for (int i = 2; i < 5; ++i) s.push_back(binom(n, gens[i]));  // B3, B4, B5

  auto ord = groebner::TermOrder::grevlex(n);
  auto gb = groebner::buchberger(s, ord);
  auto b1 = binom(n, gens[0]), b2 = binom(n, gens[1]);

  // Cubes lie in the ideal; the binomials themselves only in its radical.
  CHECK(groebner::normal_form(b1.pow(3), gb, ord).is_zero());
  CHECK(groebner::normal_form(b2.pow(3), gb, ord).is_zero());
  CHECK_FALSE(groebner::normal_form(b1, gb, ord).is_zero());
  CHECK_FALSE(groebner::normal_form(b2, gb, ord).is_zero());
  CHECK(groebner::radical_member(b1, s));
  CHECK(groebner::radical_member(b2, s));
}

TEST_CASE("one-edge complex and degenerate inputs") {
  IntMat a(1, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  auto g = complexes::build_gamma(a, circuits::enumerate_circuits(a));
  REQUIRE(g.vertices.size() == 2);
  CHECK(g.faces.count({0, 1}));
  CHECK(complexes::delta(g, {0, 1}).delta == 1);
  auto cov = complexes::covering_numbers(g);
  CHECK(cov.b == 1);
  CHECK(cov.c == 1);

  auto l = exactalg::make_lattice(2, {IntVec{1, -1}});
  auto r = complexes::bounds_report(l);
  CHECK(r.ht == 1);
  CHECK(r.mu == 1);
  CHECK(r.bar == 1);
  CHECK(r.complete_intersection);

  GammaComplex bad = g;
  bad.unknown.push_back({0, 1});
  CHECK_THROWS_AS(complexes::delta(bad, {0, 1}), input_error);
  CHECK_THROWS_AS(complexes::covering_numbers(bad), input_error);
}
