#include <algorithm>

#include "circuits.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "fixtures.hpp"
#include "markov.hpp"

using namespace latbar;
using exactalg::Int;
using exactalg::IntVec;
using exactalg::LatticeBasis;
using groebner::Binomial;
using groebner::Monomial;

namespace {

IntVec vec(const std::vector<int>& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

LatticeBasis lat(int ambient, std::vector<std::vector<int>> gens) {
  std::vector<IntVec> rows;
  for (auto& g : gens) rows.push_back(vec(g));
  return exactalg::make_lattice(ambient, rows);
}

LatticeBasis config12_kernel() { return exactalg::kernel_basis(bench::config12()); }

}  // namespace

TEST_CASE("fiber enumeration on pinned examples") {
  auto a = exactalg::grading_matrix(lat(4, {{1, -1, -1, 1}}));
  auto f0 = markov::fiber(IntVec(a.rows(), Int(0)), a);
  REQUIRE(f0.monomials.size() == 1);
  CHECK(f0.monomials[0] == Monomial(4, 0));

  // deg(x1 y2) for the 2x2 minor lattice: exactly the two matched monomials.
  auto f = markov::fiber(a.mul(Monomial{1, 0, 0, 1}), a);
  REQUIRE(f.monomials.size() == 2);
  CHECK(f.monomials[0] == Monomial{0, 1, 1, 0});
  CHECK(f.monomials[1] == Monomial{1, 0, 0, 1});

  auto p = bench::config12();
  auto ap = exactalg::grading_matrix(config12_kernel());
  auto fb = markov::fiber(ap.mul(Monomial{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0}), ap);
  std::vector<Monomial> want = {
      Monomial{0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1},  // x8 x12
      Monomial{0, 0, 0, 0, 0, 0, 0, 1, 2, 0, 0, 0},  // x8 x9^2
      Monomial{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0},  // x11^2
  };
  std::sort(want.begin(), want.end());
  CHECK(fb.monomials == want);
}

TEST_CASE("fiber rejects non-positive input") {
  // Column configuration of a lattice containing (1,1).
  exactalg::IntMat a(1, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = -1;
  CHECK_THROWS_AS(markov::fiber(vec({0}), a), input_error);
}

TEST_CASE("markov basis of rank-one lattices") {
  auto rep = markov::markov_basis(lat(2, {{1, -1}}));
  CHECK(rep.mu == 1);
  REQUIRE(rep.generators.size() == 1);
  CHECK(rep.generators[0].u == std::vector<int>{1, -1});
  CHECK(rep.indispensable_binomials == rep.generators);
  CHECK(rep.indispensable_monomials == std::vector<Monomial>{{0, 1}, {1, 0}});
  CHECK(rep.tmin == std::vector<std::set<int>>{{0}, {1}});
  CHECK(markov::bar_mu_certificate(rep) == 1);

  // Non-saturated: I_L = (x^2 - y^2); unique generator is not squarefree.
  auto rep2 = markov::markov_basis(lat(2, {{2, -2}}));
  CHECK(rep2.mu == 1);
  REQUIRE(rep2.generators.size() == 1);
  CHECK(rep2.generators[0].u == std::vector<int>{2, -2});
  CHECK(rep2.indispensable_monomials == std::vector<Monomial>{{0, 2}, {2, 0}});
  CHECK(markov::bar_mu_certificate(rep2) == std::nullopt);
}

TEST_CASE("benchmark lattice: mu, degree multiset, T_min") {
  auto l = config12_kernel();
  auto rep = markov::markov_basis(l);
  CHECK(rep.mu == 8);

  auto a = exactalg::grading_matrix(l);
  auto degrees_of = [&](const std::vector<Binomial>& gs) {
    std::vector<IntVec> ds;
    for (const auto& g : gs) ds.push_back(a.mul(g.plus()));
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  std::vector<Binomial> listed;
  for (const auto& u : bench::config12_min_generators()) listed.push_back(Binomial{u}.canonical());
  CHECK(degrees_of(rep.generators) == degrees_of(listed));

  // Same ideal: reduced GBs agree.
  std::vector<groebner::Polynomial> p1, p2;
  for (const auto& g : rep.generators) p1.push_back(groebner::Polynomial::from_binomial(g));
  for (const auto& g : listed) p2.push_back(groebner::Polynomial::from_binomial(g));
  auto ord = groebner::TermOrder::grevlex(12);
  CHECK(groebner::buchberger(p1, ord) == groebner::buchberger(p2, ord));

  // T_min equals the minimal circuit supports (benchmark cross-check).
  std::vector<std::set<int>> cmin;
  for (const auto& s : bench::config12_min_supports()) {
    std::set<int> z;
    for (int v : s) z.insert(v - 1);
    cmin.push_back(z);
  }
  std::sort(cmin.begin(), cmin.end(), [](const std::set<int>& x, const std::set<int>& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  CHECK(rep.tmin == cmin);
  auto fam = circuits::support_family(circuits::enumerate_circuits(bench::config12()));
  CHECK(rep.tmin == fam.minimal);
}

TEST_CASE("mu and degree multiset are invariant under reversed tie-breaking") {
  auto l = config12_kernel();
  auto a = exactalg::grading_matrix(l);
  auto rep1 = markov::markov_basis(l);
  markov::MarkovOptions opt;
  opt.reverse_ties = true;
  auto rep2 = markov::markov_basis(l, opt);
  CHECK(rep1.mu == rep2.mu);
  auto degs = [&](const markov::MarkovReport& r) {
    std::vector<IntVec> ds;
    for (const auto& g : r.generators) ds.push_back(a.mul(g.plus()));
    std::sort(ds.begin(), ds.end());
    return ds;
  };
  CHECK(degs(rep1) == degs(rep2));
  CHECK(rep1.indispensable_binomials == rep2.indispensable_binomials);
}

TEST_CASE("indispensable binomials sit inside every structure") {
  auto rep = markov::markov_basis(config12_kernel());
  // x10^2 - x5 x7 and x9^2 - x12 live in two-element fibers: indispensable.
  Binomial b6{bench::binvec(12, {{10, 2}}, {{5, 1}, {7, 1}})};
  Binomial b8{bench::binvec(12, {{9, 2}}, {{12, 1}})};
  auto has = [&](const Binomial& b) {
    auto c = b.canonical();
    return std::find(rep.indispensable_binomials.begin(), rep.indispensable_binomials.end(), c) !=
           rep.indispensable_binomials.end();
  };
  CHECK(has(b6));
  CHECK(has(b8));
  // Every indispensable binomial appears in the computed generating set.
  for (const auto& b : rep.indispensable_binomials)
    CHECK(std::find(rep.generators.begin(), rep.generators.end(), b) != rep.generators.end());
  // Indispensable binomials are made of indispensable monomials.
  for (const auto& b : rep.indispensable_binomials) {
    auto&& ms = rep.indispensable_monomials;
    CHECK(std::find(ms.begin(), ms.end(), b.plus()) != ms.end());
    CHECK(std::find(ms.begin(), ms.end(), b.minus()) != ms.end());
  }
}

TEST_CASE("markov basis rejects non-positive lattices") {
  CHECK_THROWS_AS(markov::markov_basis(lat(2, {{1, 1}})), input_error);
}
